//! Report serialization. Output depends only on the report content, so
//! identical searches give byte-identical files regardless of thread count.

use std::io::{self, Write};

use serde_json::json;

use super::{ReportFormat, SearchReport};

pub const TSV_HEADER: &str =
    "q\tfamily\tnormalization\tprefilter\tscanned\tsurvivors\tprs\tcondition\textras\tmissing\tverdict";

/// One summary row matching [`TSV_HEADER`].
pub fn write_tsv_summary(r: &SearchReport, mut w: impl Write) -> io::Result<()> {
    writeln!(
        w,
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.q,
        r.family,
        r.normalization,
        r.use_prefilter,
        r.tuples_scanned,
        r.prefilter_survivors,
        r.prs_found.len(),
        r.condition_set.len(),
        r.extras().len(),
        r.missing().len(),
        r.verdict
    )
}

/// TSV: the header, the summary row, then one `tuple<TAB>kind` line per PR
/// or missing condition tuple. JSONL: one object per PR, per missing
/// condition tuple, and a closing summary object.
pub fn write_report(r: &SearchReport, format: ReportFormat, mut w: impl Write) -> io::Result<()> {
    let k = r.field();
    let extras = r.extras();
    let kind = |t| if extras.contains(t) { "extra" } else { "condition" };
    match format {
        ReportFormat::Tsv => {
            writeln!(w, "{TSV_HEADER}")?;
            write_tsv_summary(r, &mut w)?;
            writeln!(w)?;
            writeln!(w, "tuple\tkind")?;
            for t in &r.prs_found {
                writeln!(w, "{}\t{}", t.format(k), kind(t))?;
            }
            for t in r.missing() {
                writeln!(w, "{}\tmissing", t.format(k))?;
            }
        }
        ReportFormat::Jsonl => {
            for t in &r.prs_found {
                let line = json!({"kind": kind(t), "tuple": t.format(k)});
                writeln!(w, "{line}")?;
            }
            for t in r.missing() {
                let line = json!({"kind": "missing", "tuple": t.format(k)});
                writeln!(w, "{line}")?;
            }
            let summary = json!({
                "kind": "summary",
                "q": r.q,
                "family": r.family.name(),
                "normalization": r.normalization,
                "prefilter": r.use_prefilter,
                "tuples_scanned": r.tuples_scanned,
                "prefilter_survivors": r.prefilter_survivors,
                "prs_found": r.prs_found.len(),
                "condition_set": r.condition_set.len(),
                "extras": extras.len(),
                "missing": r.missing().len(),
                "verdict": r.verdict.name(),
            });
            writeln!(w, "{summary}")?;
        }
    }
    Ok(())
}
