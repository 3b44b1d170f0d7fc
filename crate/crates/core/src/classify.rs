//! Exhaustive search over the two degree-four families, comparison with the
//! infinite families and the small-`q` tables, and supporting audits.

mod audit;
mod config;
mod degq2;
mod report;
mod search;
mod sufficiency;
mod tables;

pub use audit::{audit_sample, hasse_weil_audit, lemma_bound, BoundAuditRecord};
pub use config::{ReportFormat, RunConfig};
pub use degq2::{degq2_existence_scan, DEGQ2_LIMIT};
pub use report::{write_report, write_tsv_summary, TSV_HEADER};
pub use sufficiency::{verify_sufficiency, verify_sufficiency_at, SufficiencyEntry};
pub use tables::{compare_sporadics, expected_extras, reproduce_tables, table1, table2, TableComparison};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::criteria::{CriteriaError, Family, ParamTuple};
use crate::field::{prime_power, Fe, FieldCtx, FieldError};
use crate::poly::PolyError;
use crate::ratmap::RatMapError;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("family `{0}` is not defined over this field")]
    InvalidFamily(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("field of order {0} is too large for this operation")]
    FieldTooLarge(u64),
    #[error("invalid run configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    RatMap(#[from] RatMapError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Skip tuples failing the necessary conditions before the direct test.
    pub use_prefilter: bool,
    /// Restrict `a` to scaling-orbit representatives (general family).
    pub normalize: bool,
    /// Worker threads; 1 runs on the calling thread.
    pub width: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            use_prefilter: true,
            normalize: true,
            width: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The PRs are exactly the condition tuples.
    ExactMatch,
    /// Every condition tuple is a PR, plus others.
    Extras,
    /// Some condition tuple was not found.
    Missing,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::ExactMatch => "exact-match",
            Verdict::Extras => "extras",
            Verdict::Missing => "missing",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub q: u64,
    pub family: Family,
    /// Human-readable description of the normalization, e.g. `a in {0,1,2}`.
    pub normalization: String,
    pub use_prefilter: bool,
    pub tuples_scanned: u64,
    pub prefilter_survivors: u64,
    /// Sorted in canonical tuple order.
    pub prs_found: Vec<ParamTuple>,
    pub condition_set: Vec<ParamTuple>,
    pub verdict: Verdict,
    /// Wall time; not part of the written reports.
    pub elapsed: Duration,
    field: Arc<FieldCtx>,
}

impl SearchReport {
    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// PRs outside the condition set.
    pub fn extras(&self) -> Vec<ParamTuple> {
        self.prs_found
            .iter()
            .filter(|t| self.condition_set.binary_search(t).is_err())
            .copied()
            .collect()
    }

    /// Condition tuples that are not PRs.
    pub fn missing(&self) -> Vec<ParamTuple> {
        self.condition_set
            .iter()
            .filter(|t| self.prs_found.binary_search(t).is_err())
            .copied()
            .collect()
    }
}

/// `a = -3d`, `b = -9e`, `c = d^2`.
pub fn theorem21_condition(t: &ParamTuple, k: &FieldCtx) -> bool {
    t.a == k.mul_int(t.d, -3) && t.b == k.mul_int(t.e, -9) && t.c == k.square(t.d)
}

/// `a = 1`, `b = c = 0`, for the characteristic-3 family.
pub fn theorem31_condition(t: &ParamTuple, k: &FieldCtx) -> Result<bool, ClassifyError> {
    if k.characteristic() != 3 || t.family != Family::Char3X2 {
        return Err(CriteriaError::WrongCharacteristic.into());
    }
    Ok(t.a == Fe::ONE && t.b.is_zero() && t.c.is_zero())
}

/// Representatives of `a` under `X ↦ tX`, which sends `a` to `a/t^2`.
pub fn normalized_a_values(k: &FieldCtx) -> Vec<Fe> {
    match k.first_nonsquare() {
        Some(u) => vec![Fe::ZERO, Fe::ONE, u],
        None => vec![Fe::ZERO, Fe::ONE],
    }
}

fn normalization_label(family: Family, normalize: bool, k: &FieldCtx) -> String {
    if !normalize || family == Family::Char3X2 {
        return "none".to_string();
    }
    let vals: Vec<String> = normalized_a_values(k).iter().map(|&a| k.format_short(a)).collect();
    let mut label = format!("a in {{{}}}", vals.join(","));
    if k.characteristic() == 3 {
        label.push_str("; (a,b)=(0,0), (a,b,c)=(0,1,0) or b=0");
    }
    label
}

fn check_family(family: Family, k: &FieldCtx) -> Result<(), ClassifyError> {
    if family == Family::Char3X2 && k.characteristic() != 3 {
        return Err(ClassifyError::InvalidFamily(family.name().to_string()));
    }
    Ok(())
}

/// The tuples the infinite family predicts, restricted to the same
/// normalization as the search.
pub fn condition_set(k: &FieldCtx, family: Family, normalize: bool) -> Result<Vec<ParamTuple>, ClassifyError> {
    check_family(family, k)?;
    let mut out: Vec<ParamTuple> = match family {
        Family::General => {
            let allowed = normalize.then(|| normalized_a_values(k));
            let char3 = normalize && k.characteristic() == 3;
            search::irreducible_general(k)
                .into_iter()
                .map(|(d, e)| ParamTuple::general(k.mul_int(d, -3), k.mul_int(e, -9), k.square(d), d, e))
                .filter(|t| allowed.as_ref().map_or(true, |v| v.contains(&t.a)))
                .filter(|t| !char3 || search::char3_normal(t.a, t.b, t.c))
                .collect()
        }
        Family::Char3X2 => search::irreducible_char3x2(k)
            .into_iter()
            .map(|e| ParamTuple::char3x2(Fe::ONE, Fe::ZERO, Fe::ZERO, e))
            .collect(),
    };
    out.sort();
    Ok(out)
}

/// Runs `job` on a dedicated pool of `width` threads, so nested parallel
/// iterators honour the requested width.
pub(crate) fn run_in_pool<T: Send>(width: usize, job: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(width.max(1))
        .build()
        .expect("thread pool")
        .install(job)
}

/// All PRs of the family over `F_q`, optionally restricted to normalized
/// representatives and prefiltered by the necessary conditions.
pub fn search_q(q: u64, family: Family, options: SearchOptions) -> Result<SearchReport, ClassifyError> {
    let k = Arc::new(FieldCtx::of_order(q)?);
    search_field(k, family, options)
}

pub fn search_field(k: Arc<FieldCtx>, family: Family, options: SearchOptions) -> Result<SearchReport, ClassifyError> {
    check_family(family, &k)?;
    let start = Instant::now();
    let a_values = if options.normalize {
        normalized_a_values(&k)
    } else {
        k.elements().collect()
    };
    let char3 = options.normalize && k.characteristic() == 3;
    let kk = Arc::clone(&k);
    let hits = run_in_pool(options.width, move || -> Vec<search::Hits> {
        let k = &*kk;
        match family {
            Family::General => search::irreducible_general(k)
                .into_par_iter()
                .map(|(d, e)| search::scan_general(k, d, e, &a_values, char3, options.use_prefilter))
                .collect(),
            Family::Char3X2 => search::irreducible_char3x2(k)
                .into_par_iter()
                .map(|e| search::scan_char3x2(k, e, options.use_prefilter))
                .collect(),
        }
    });
    let mut prs_found = Vec::new();
    let (mut scanned, mut survivors) = (0, 0);
    for h in hits {
        scanned += h.scanned;
        survivors += h.survivors;
        prs_found.extend(h.prs);
    }
    prs_found.sort();
    let condition_set = condition_set(&k, family, options.normalize)?;
    let mut report = SearchReport {
        q: k.order(),
        family,
        normalization: normalization_label(family, options.normalize, &k),
        use_prefilter: options.use_prefilter,
        tuples_scanned: scanned,
        prefilter_survivors: survivors,
        prs_found,
        condition_set,
        verdict: Verdict::ExactMatch,
        elapsed: Duration::ZERO,
        field: k,
    };
    report.verdict = if !report.missing().is_empty() {
        Verdict::Missing
    } else if !report.extras().is_empty() {
        Verdict::Extras
    } else {
        Verdict::ExactMatch
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// The `X^3 + dX + e` family, necessity for `q >= 113`.
    T21,
    /// The `X^3 + X^2 + e` family, necessity for `q = 3^n`, `n > 4`.
    T31,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::T21 => "T2.1",
            Theorem::T31 => "T3.1",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Theorem::T21 => Family::General,
            Theorem::T31 => Family::Char3X2,
        }
    }

    /// Whether the necessity claim covers `q`.
    pub fn in_range(self, q: u64) -> bool {
        match self {
            Theorem::T21 => q >= 113,
            Theorem::T31 => matches!(prime_power(q), Some((3, n)) if n > 4),
        }
    }
}

impl FromStr for Theorem {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Theorem, ClassifyError> {
        match s {
            "T2.1" | "t2.1" | "2.1" => Ok(Theorem::T21),
            "T3.1" | "t3.1" | "3.1" => Ok(Theorem::T31),
            _ => Err(ClassifyError::UnknownTheorem(s.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub theorem: Theorem,
    pub report: SearchReport,
    /// Sporadic PRs allowed at this `q` (empty inside the theorem's range).
    pub expected_extras: Vec<ParamTuple>,
    pub passed: bool,
}

/// Normalized, prefiltered search compared against the theorem: no missing
/// condition tuples, and extras exactly the tabulated sporadic PRs up to
/// equivalence.
pub fn verify_theorem(q: u64, theorem: Theorem, width: usize) -> Result<TheoremCheck, ClassifyError> {
    let options = SearchOptions {
        use_prefilter: true,
        normalize: true,
        width,
    };
    let report = search_q(q, theorem.family(), options)?;
    let expected_extras = if theorem.in_range(q) {
        Vec::new()
    } else {
        expected_extras(report.field(), theorem.family())
    };
    let (missing_rows, _, unexpected) = compare_sporadics(&report.extras(), &expected_extras, report.field())?;
    let passed = report.missing().is_empty() && missing_rows.is_empty() && unexpected.is_empty();
    Ok(TheoremCheck {
        theorem,
        report,
        expected_extras,
        passed,
    })
}

/// The general-family tuples reachable from `tuples` by the normalizing
/// substitutions: `X ↦ tX`, and in characteristic 3 also `X ↦ X + w`.
/// This inverts the normalization of a search.
pub fn normalization_orbits(tuples: &[ParamTuple], k: &FieldCtx) -> Vec<ParamTuple> {
    let shifts: Vec<Fe> = if k.characteristic() == 3 {
        k.elements().collect()
    } else {
        vec![Fe::ZERO]
    };
    let mut out: Vec<ParamTuple> = tuples
        .iter()
        .flat_map(|t| {
            k.elements().skip(1).map(move |s| {
                let p = |i: u64| k.pow(s, i);
                ParamTuple::general(
                    k.mul(t.a, p(2)),
                    k.mul(t.b, p(3)),
                    k.mul(t.c, p(4)),
                    k.mul(t.d, p(2)),
                    k.mul(t.e, p(3)),
                )
            })
        })
        .flat_map(|t| {
            // f(X + w) - w
            shifts.iter().map(move |&w| {
                let w2 = k.square(w);
                ParamTuple::general(
                    t.a,
                    k.add(t.b, k.mul_int(k.mul(t.a, w), 2)),
                    k.add(t.c, k.add(k.mul(t.b, w), k.mul(t.a, w2))),
                    t.d,
                    k.add(t.e, k.add(k.mul(t.d, w), k.mul(w2, w))),
                )
            })
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
