//! The tabulated sporadic PRs at small `q`, and their reproduction.

use super::{search_q, ClassifyError, SearchOptions};
use crate::criteria::{Family, ParamTuple};
use crate::field::FieldCtx;
use crate::ratmap::equivalent_small_q;

/// Sporadic PRs of the general family, with `a` normalized. Entries over
/// `F_4` use the generator `u` with `u^2 + u + 1 = 0`.
const TABLE1: &[(u64, &[&str])] = &[
    (2, &["0,0,1,1,1", "1,1,0,1,1"]),
    (4, &["0,1,0,0,u", "0,1,0,0,1+u", "1,0,0,1+u,1", "1,u,0,0,1+u", "1,1+u,0,0,u"]),
    (3, &["0,0,2,2,1", "0,0,2,2,2", "0,1,0,2,1"]),
    (
        5,
        &[
            "0,1,4,4,2", "0,2,4,1,4", "0,3,4,1,1", "0,4,4,4,3", "1,2,2,2,4", "1,3,2,2,1",
            "2,1,3,4,3", "2,2,0,4,2", "2,2,3,2,1", "2,2,4,1,1", "2,3,0,4,3", "2,3,3,2,4",
            "2,3,4,1,4", "2,4,3,4,2",
        ],
    ),
    (7, &["0,2,0,0,5", "0,5,0,0,2", "1,0,2,5,2", "1,0,2,5,5"]),
];

/// Sporadic PRs of the `X^3 + X^2 + e` family, as `a,b,c,e`.
const TABLE2: &[(u64, &[&str])] = &[(3, &["0,2,1,2", "1,1,2,2", "2,1,2,2", "2,2,1,2"])];

fn rows(table: &[(u64, &[&str])], q: u64) -> Option<Vec<ParamTuple>> {
    let (_, entries) = table.iter().find(|(tq, _)| *tq == q)?;
    let mut out: Vec<ParamTuple> = entries
        .iter()
        .map(|s| {
            ParamTuple::parse(&format!("{s}@{q}"))
                .expect("embedded rows parse")
                .1
        })
        .collect();
    out.sort();
    Some(out)
}

/// `(q, rows)` for every `q` in the general-family table.
pub fn table1() -> Vec<(u64, Vec<ParamTuple>)> {
    TABLE1.iter().map(|&(q, _)| (q, rows(TABLE1, q).unwrap())).collect()
}

pub fn table2() -> Vec<(u64, Vec<ParamTuple>)> {
    TABLE2.iter().map(|&(q, _)| (q, rows(TABLE2, q).unwrap())).collect()
}

/// Tabulated sporadic PRs at this `q`; empty when none are listed.
pub fn expected_extras(k: &FieldCtx, family: Family) -> Vec<ParamTuple> {
    let table = match family {
        Family::General => TABLE1,
        Family::Char3X2 => TABLE2,
    };
    rows(table, k.order()).unwrap_or_default()
}

/// Splits found sporadic PRs against tabulated rows. Rows are
/// representatives up to equivalence, so a found tuple counts as expected
/// when it equals a row or is equivalent to one. Returns
/// `(missing rows, found tuples equivalent to but not equal to a row,
/// found tuples matching no row)`.
pub fn compare_sporadics(
    found: &[ParamTuple],
    rows: &[ParamTuple],
    k: &FieldCtx,
) -> Result<(Vec<ParamTuple>, Vec<ParamTuple>, Vec<ParamTuple>), ClassifyError> {
    let missing = rows.iter().filter(|t| !found.contains(t)).copied().collect();
    let row_maps = rows.iter().map(|t| t.to_ratmap(k)).collect::<Result<Vec<_>, _>>()?;
    let (mut equivalent, mut unexpected) = (Vec::new(), Vec::new());
    for t in found.iter().filter(|t| !rows.contains(t)) {
        let f = t.to_ratmap(k)?;
        let mut matched = false;
        for g in &row_maps {
            if equivalent_small_q(&f, g, k)? {
                matched = true;
                break;
            }
        }
        if matched {
            equivalent.push(*t);
        } else {
            unexpected.push(*t);
        }
    }
    Ok((missing, equivalent, unexpected))
}

#[derive(Clone, Debug)]
pub struct TableComparison {
    /// 1 for the general family, 2 for the characteristic-3 family.
    pub table: u8,
    pub q: u64,
    pub expected: Vec<String>,
    pub found: Vec<String>,
    /// Expected but not found.
    pub missing: Vec<String>,
    /// Found, not listed, but equivalent to a listed row.
    pub equivalent: Vec<String>,
    /// Found and equivalent to no listed row.
    pub unexpected: Vec<String>,
}

impl TableComparison {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Recomputes both tables by normalized search and diffs the sporadic PRs
/// against the embedded rows up to equivalence.
pub fn reproduce_tables(width: usize) -> Result<Vec<TableComparison>, ClassifyError> {
    let options = SearchOptions {
        use_prefilter: true,
        normalize: true,
        width,
    };
    let jobs = TABLE1
        .iter()
        .map(|&(q, _)| (1u8, q, Family::General))
        .chain(TABLE2.iter().map(|&(q, _)| (2u8, q, Family::Char3X2)));
    let mut out = Vec::new();
    for (table, q, family) in jobs {
        let report = search_q(q, family, options)?;
        let k = report.field();
        let fmt = |ts: &[ParamTuple]| ts.iter().map(|t| t.format(k)).collect::<Vec<_>>();
        let expected = expected_extras(k, family);
        let found = report.extras();
        let (missing, equivalent, unexpected) = compare_sporadics(&found, &expected, k)?;
        out.push(TableComparison {
            table,
            q,
            expected: fmt(&expected),
            found: fmt(&found),
            missing: fmt(&missing),
            equivalent: fmt(&equivalent),
            unexpected: fmt(&unexpected),
        });
    }
    Ok(out)
}
