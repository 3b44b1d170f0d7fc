//! `permrat`: search and verify degree-four permutation rational functions.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use permrat::classify::{
    audit_sample, compare_sporadics, degq2_existence_scan, expected_extras, reproduce_tables, search_q,
    verify_sufficiency_at, verify_theorem, write_report, write_tsv_summary, ClassifyError, ReportFormat, RunConfig,
    SearchReport, Theorem, TSV_HEADER,
};
use permrat::criteria::{
    carlitz_rps_check, case1_relations, eval_eq51, eval_eq52, eval_lemma52, hermite_test, Family, ParamTuple,
};
use permrat::field::{parse_order, prime_power, Extension, FieldCtx};
use permrat::poly::{find_linear_root, symmetric_reduce};

const GRAMMAR: &str = "\
Elements of F_p are written as integers 0..p-1. Elements of F_{p^n}, n > 1,
are polynomials in the generator u, e.g. `1+u`, `2u^2+u`. Field orders are
written `q` or `p^n` (`243` or `3^5`). A tuple is `a,b,c,d,e@q` for
X + (aX^2+bX+c)/(X^3+dX+e), or `a,b,c,e@3^n` for X + (aX^2+bX+c)/(X^3+X^2+e).

Exit status: 0 on success or an expected verdict, 1 on a usage or input
error, 2 when a verification finds a mismatch. Errors print one line
`error<TAB>kind<TAB>message` on stderr.";

#[derive(Parser)]
#[command(name = "permrat", version, about = "Degree-four permutation rational functions of the projective line", after_long_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether one tuple gives a permutation of P^1(F_q).
    TestPr {
        /// `a,b,c,d,e@q` or `a,b,c,e@3^n`
        tuple: String,
    },
    /// Exhaustively search a family over F_q and compare with the infinite family.
    Search(SearchArgs),
    /// Check a classification theorem at one q.
    VerifyTheorem {
        /// T2.1 (X^3+dX+e) or T3.1 (X^3+X^2+e, q = 3^n)
        #[arg(long)]
        which: String,
        #[arg(long)]
        q: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check that the infinite families are PRs and their curves split into lines.
    VerifySufficiency {
        /// Comma-separated orders or ranges, e.g. `2-64,81`; ranges keep prime powers.
        #[arg(long)]
        q: String,
        /// Write every entry as JSON lines here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the small-q tables of sporadic PRs and print the diff.
    Tables {
        #[arg(long, default_value_t = 1)]
        width: usize,
        /// Also check that every other q up to 109 (and 64, 81) has no sporadic PRs.
        #[arg(long)]
        extended: bool,
    },
    /// Run the identity suites (power sums, necessary conditions, linear-root relations, factorizations).
    Identities {
        /// Comma-separated orders or ranges, each at most 13.
        #[arg(long)]
        q: String,
    },
    /// Compare point counts of random non-PR curves with the irreducible-curve lower bound.
    AuditBound {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List PRs P/Q with deg P = 4 and deg Q = 2 (q <= 13).
    Degq2Scan {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 1)]
        width: usize,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    q: Option<String>,
    /// general or char3x2
    #[arg(long)]
    family: Option<String>,
    /// Restrict to normal forms under X -> tX (and X -> X + w in characteristic 3).
    #[arg(long)]
    normalize: bool,
    /// Test every tuple directly, skipping the necessary-condition filters.
    #[arg(long)]
    no_prefilter: bool,
    /// Run settings as key=value lines; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    width: Option<usize>,
    /// tsv or jsonl
    #[arg(long)]
    format: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Failure {
        match e {
            ClassifyError::Io(e) => Failure::Usage(format!("io: {e}")),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(format!("io: {e}"))
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn into_usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_q(s: &str) -> Result<u64, Failure> {
    parse_order(s.trim()).ok_or_else(|| usage(format!("`{s}` is not a prime power")))
}

/// `2-64,81` → every prime power in 2..=64, then 81.
fn parse_q_list(s: &str) -> Result<Vec<u64>, Failure> {
    let mut out = Vec::new();
    for part in s.split(',') {
        match part.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi): (u64, u64) = (
                    lo.trim().parse().map_err(|_| usage(format!("bad range `{part}`")))?,
                    hi.trim().parse().map_err(|_| usage(format!("bad range `{part}`")))?,
                );
                out.extend((lo..=hi).filter(|&q| prime_power(q).is_some()));
            }
            None => out.push(parse_q(part)?),
        }
    }
    if out.is_empty() {
        return Err(usage("empty q list"));
    }
    Ok(out)
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit_report(r: &SearchReport, format: ReportFormat, out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut w = open_output(out)?;
    write_report(r, format, &mut w)?;
    w.flush()?;
    if out.is_some() {
        let mut stdout = io::stdout().lock();
        writeln!(stdout, "{TSV_HEADER}")?;
        write_tsv_summary(r, &mut stdout)?;
    }
    Ok(())
}

/// Passes when every condition tuple is found and the remaining PRs are the
/// tabulated sporadics up to equivalence.
fn check_against_tables(r: &SearchReport) -> Result<(), Failure> {
    if !r.missing().is_empty() {
        return Err(Failure::Mismatch(format!("{} condition tuples are not PRs", r.missing().len())));
    }
    let k = r.field();
    let rows = expected_extras(k, r.family);
    let (missing, _, unexpected) = compare_sporadics(&r.extras(), &rows, k)?;
    if !missing.is_empty() || !unexpected.is_empty() {
        return Err(Failure::Mismatch(format!(
            "sporadic PRs differ from the table: {} missing, {} unexpected",
            missing.len(),
            unexpected.len()
        )));
    }
    Ok(())
}

fn cmd_test_pr(tuple: &str) -> Result<(), Failure> {
    let (k, t) = ParamTuple::parse(tuple).map_err(into_usage)?;
    let f = t.to_ratmap(&k).map_err(into_usage)?;
    if !t.cubic().is_irreducible(&k).map_err(into_usage)? {
        return Err(usage("the cubic must be irreducible"));
    }
    let is_pr = f.is_permutation(&k).map_err(into_usage)?;
    println!("f: {}", f.format(&k));
    println!("PR: {is_pr}");
    Ok(())
}

fn cmd_search(args: &SearchArgs) -> Result<(), Failure> {
    let mut cfg = match &args.config {
        Some(path) => RunConfig::parse(&std::fs::read_to_string(path)?)?,
        None => RunConfig::default(),
    };
    if let Some(q) = &args.q {
        cfg.q = Some(parse_q(q)?);
    }
    if let Some(f) = &args.family {
        cfg.family = f.parse::<Family>().map_err(into_usage)?;
    }
    cfg.normalize |= args.normalize;
    if args.no_prefilter {
        cfg.use_prefilter = false;
    }
    if let Some(w) = args.out.width {
        cfg.parallel_width = w.max(1);
    }
    if let Some(f) = &args.out.format {
        cfg.format = f.parse()?;
    }
    if args.out.out.is_some() {
        cfg.output = args.out.out.clone();
    }
    let q = cfg.q.ok_or_else(|| usage("no field order: pass --q or set q in --config"))?;
    let report = search_q(q, cfg.family, cfg.search_options())?;
    emit_report(&report, cfg.format, &cfg.output)?;
    check_against_tables(&report)
}

fn cmd_verify_theorem(which: &str, q: &str, out: &OutputArgs) -> Result<(), Failure> {
    let theorem: Theorem = which.parse()?;
    let q = parse_q(q)?;
    let format = match &out.format {
        Some(f) => f.parse()?,
        None => ReportFormat::Tsv,
    };
    let check = verify_theorem(q, theorem, out.width.unwrap_or(1).max(1))?;
    emit_report(&check.report, format, &out.out)?;
    let scope = if theorem.in_range(q) { "necessity and sufficiency" } else { "below range: sporadics must match the table" };
    println!("theorem: {} q={q} ({scope})", theorem.name());
    println!("verdict: {}", check.report.verdict);
    if check.passed {
        println!("result: pass");
        Ok(())
    } else {
        println!("result: fail");
        Err(Failure::Mismatch(format!("{} does not hold at q={q}", theorem.name())))
    }
}

fn cmd_verify_sufficiency(qs: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    let qs = parse_q_list(qs)?;
    let mut sink = match out {
        Some(p) => Some(BufWriter::new(File::create(p)?)),
        None => None,
    };
    println!("q\tfamily\tcubics\tnot_pr\tg_mismatch\tf_mismatch");
    let mut failures = 0;
    for q in qs {
        let entries = verify_sufficiency_at(q)?;
        for family in [Family::General, Family::Char3X2] {
            let es: Vec<_> = entries.iter().filter(|e| e.family == family.name()).collect();
            if es.is_empty() {
                continue;
            }
            let count = |f: fn(&&permrat::classify::SufficiencyEntry) -> bool| es.iter().filter(|e| !f(e)).count();
            let (np, gm, fm) = (count(|e| e.is_pr), count(|e| e.g_factors), count(|e| e.f_factors));
            failures += np + gm + fm;
            println!("{q}\t{family}\t{}\t{np}\t{gm}\t{fm}", es.len());
        }
        if let Some(w) = sink.as_mut() {
            for e in &entries {
                writeln!(w, "{}", serde_json::to_string(e).expect("serializable"))?;
            }
        }
    }
    if let Some(mut w) = sink {
        w.flush()?;
    }
    if failures > 0 {
        return Err(Failure::Mismatch(format!("{failures} sufficiency failures")));
    }
    Ok(())
}

fn cmd_tables(width: usize, extended: bool) -> Result<(), Failure> {
    let all = reproduce_tables(width.max(1))?;
    println!("table\tq\texpected\tfound\tDIFF");
    let mut diff = 0;
    for c in &all {
        let mut d = Vec::new();
        d.extend(c.missing.iter().map(|t| format!("-{t}")));
        d.extend(c.unexpected.iter().map(|t| format!("+{t}")));
        d.extend(c.equivalent.iter().map(|t| format!("~{t}")));
        diff += c.missing.len() + c.unexpected.len();
        let d = if d.is_empty() { "none".to_string() } else { d.join(" ") };
        println!("{}\t{}\t{}\t{}\t{d}", c.table, c.q, c.expected.join(" "), c.found.join(" "));
    }
    println!("# -: listed, not found; +: found, not listed; ~: found, equivalent to a listed row");
    if extended {
        let listed: Vec<u64> = all.iter().filter(|c| c.table == 1).map(|c| c.q).collect();
        let qs = (2..=109u64)
            .filter(|&q| prime_power(q).is_some() && !listed.contains(&q))
            .chain([64, 81]);
        println!("q\tfamily\tsporadics");
        let options = permrat::classify::SearchOptions { use_prefilter: true, normalize: true, width: width.max(1) };
        for q in qs {
            let mut families = vec![Family::General];
            if q % 3 == 0 && q > 3 {
                families.push(Family::Char3X2);
            }
            for family in families {
                let r = search_q(q, family, options)?;
                let extras = r.extras();
                diff += extras.len() + r.missing().len();
                let k = r.field();
                let shown: Vec<String> = extras.iter().map(|t| t.format(k)).collect();
                println!("{q}\t{family}\t{}", if shown.is_empty() { "none".into() } else { shown.join(" ") });
            }
        }
    }
    if diff > 0 {
        return Err(Failure::Mismatch(format!("{diff} differences from the tables")));
    }
    Ok(())
}

fn cmd_identities(qs: &str) -> Result<(), Failure> {
    let qs = parse_q_list(qs)?;
    let options = permrat::classify::SearchOptions { use_prefilter: false, normalize: false, width: 1 };
    println!("q\tsuite\tchecked\tviolations");
    let mut violations = 0;
    let mut line = |q: u64, suite: &str, checked: usize, bad: usize| {
        violations += bad;
        println!("{q}\t{suite}\t{checked}\t{bad}");
    };
    for q in qs {
        if q > 13 {
            return Err(usage(format!("identities are exhaustive; q = {q} exceeds 13")));
        }
        let k = Arc::new(FieldCtx::of_order(q).map_err(into_usage)?);
        let ext = Extension::new(Arc::clone(&k), 3).map_err(into_usage)?;
        // reciprocal power sums over r outside F_q, 1 <= k <= q
        let (mut n, mut bad) = (0, 0);
        for r in ext.ext().elements().filter(|&r| !ext.is_base(r)) {
            for e in 1..=q {
                n += 1;
                bad += usize::from(!carlitz_rps_check(r, e, &ext).map_err(into_usage)?);
            }
        }
        line(q, "power-sums", n, bad);

        let general = search_q(q, Family::General, options)?;
        let (mut n, mut bad) = (0, 0);
        for t in &general.prs_found {
            n += 1;
            let hermite = hermite_test(&t.to_ratmap(&k).map_err(into_usage)?, &k).map_err(into_usage)?;
            let ok = hermite
                && (q <= 2 || eval_eq51(t, &k).is_zero())
                && (q <= 3 || eval_eq52(t, &k).is_zero());
            bad += usize::from(!ok);
        }
        line(q, "necessary-conditions", n, bad);

        if k.characteristic() == 3 {
            let c3 = search_q(q, Family::Char3X2, options)?;
            let (mut n, mut bad) = (0, 0);
            for t in &c3.prs_found {
                n += 1;
                let (first, second) = eval_lemma52(t.a, t.b, t.c, t.e, &k).map_err(into_usage)?;
                bad += usize::from(!first.is_zero() || (k.degree() > 1 && !second.is_zero()));
            }
            line(q, "char3-conditions", n, bad);
        }

        // a linear root of G forces the relations; checked on all PRs and
        // condition tuples, where the curve splits
        let (mut n, mut bad) = (0, 0);
        for t in general.prs_found.iter().chain(&general.condition_set) {
            let g = symmetric_reduce(&t.numerator(&k).map_err(into_usage)?, &k).map_err(into_usage)?;
            if find_linear_root(&g, &ext).is_some() {
                n += 1;
                bad += usize::from(!case1_relations(t, &k).iter().all(|r| r.is_zero()));
            }
        }
        line(q, "linear-root-relations", n, bad);

        let entries = verify_sufficiency_at(q)?;
        let bad = entries.iter().filter(|e| !e.ok()).count();
        line(q, "factorizations", entries.len(), bad);
    }
    if violations > 0 {
        return Err(Failure::Mismatch(format!("{violations} identity violations")));
    }
    Ok(())
}

fn cmd_audit(q: &str, count: usize, seed: u64, out: &Option<PathBuf>) -> Result<(), Failure> {
    let q = parse_q(q)?;
    let recs = audit_sample(q, count, seed)?;
    let mut w = open_output(out)?;
    writeln!(w, "q\tcurve\td1\td2\td3\td\tpoints\tat_infinity\tdiagonal\tbound\tpass")?;
    for r in &recs {
        writeln!(
            w,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.3}\t{}",
            r.q, r.curve, r.d1, r.d2, r.d3, r.d, r.points, r.at_infinity, r.diagonal, r.bound, r.pass
        )?;
    }
    writeln!(w, "# advisory: curves without a line Y = uX + v are treated as absolutely irreducible")?;
    w.flush()?;
    let failed = recs.iter().filter(|r| !r.pass).count();
    if recs.len() < count {
        return Err(Failure::Mismatch(format!("only {} of {count} samples found", recs.len())));
    }
    if failed > 0 {
        return Err(Failure::Mismatch(format!("{failed} curves below the bound")));
    }
    Ok(())
}

fn cmd_degq2(q: &str, width: usize) -> Result<(), Failure> {
    let q = parse_q(q)?;
    let k = FieldCtx::of_order(q).map_err(into_usage)?;
    let found = degq2_existence_scan(q, width.max(1))?;
    for f in &found {
        println!("{}", f.format(&k));
    }
    println!("count: {}", found.len());
    if q > 8 && !found.is_empty() {
        return Err(Failure::Mismatch(format!("PRs with deg Q = 2 exist at q = {q}")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::TestPr { tuple } => cmd_test_pr(tuple),
        Command::Search(args) => cmd_search(args),
        Command::VerifyTheorem { which, q, out } => cmd_verify_theorem(which, q, out),
        Command::VerifySufficiency { q, out } => cmd_verify_sufficiency(q, out),
        Command::Tables { width, extended } => cmd_tables(*width, *extended),
        Command::Identities { q } => cmd_identities(q),
        Command::AuditBound { q, count, seed, out } => cmd_audit(q, *count, *seed, out),
        Command::Degq2Scan { q, width } => cmd_degq2(q, *width),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let reason = e.kind().to_string().replace(['\t', '\n'], " ");
            eprint!("{}", e.render());
            eprintln!("error\tusage\t{reason}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error\tusage\t{}", msg.replace(['\t', '\n'], " "));
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error\tmismatch\t{}", msg.replace(['\t', '\n'], " "));
            ExitCode::from(2)
        }
    }
}
