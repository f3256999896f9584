//! The summary table of principal indices, differences and McKay degrees.
//!
//! Every numeric cell is computed from a generated root system. The listed
//! closed forms and exceptional values are kept alongside so that callers
//! can compare the two.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational::{self, binom2, binom3, from_big, rat, Rational};
use crate::rootsys::{Family, LieType, RootSystem};
use crate::sl2index::{difference_d, mckay_data, principal_index};

/// One column of the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableColumn {
    /// `A_n`, `B_n`, ..., `E6`, ..., `G2`.
    pub label: String,
    pub lie_type: LieType,
    #[serde(with = "rational::serde_str")]
    pub principal_index: Rational,
    #[serde(with = "rational::serde_str")]
    pub d: Rational,
    pub a: i64,
    pub b: i64,
    #[serde(with = "rational::serde_str")]
    pub d_over_b_rank: Rational,
    /// Closed forms in `n` for the classical series.
    pub closed_forms: Option<ClosedForms>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub principal_index: String,
    pub d: String,
    pub a: String,
    pub b: String,
}

pub fn closed_forms(f: Family) -> Option<ClosedForms> {
    let s = |x: &str| x.to_string();
    let (p, d, a, b) = match f {
        Family::A => ("C(n+2,3)", "C(n+1,2)", "2", "n+1"),
        Family::B => ("C(2n+2,3)/2", "2n^2", "2", "2n"),
        Family::C => ("C(2n+1,3)", "4n(n-1)", "4", "2n-2"),
        Family::D => ("C(2n,3)/2", "2n(n-2)", "4", "2n-4"),
        _ => return None,
    };
    Some(ClosedForms {
        principal_index: s(p),
        d: s(d),
        a: s(a),
        b: s(b),
    })
}

/// The listed principal index and difference for a type: closed forms for
/// the classical series, tabulated values for the exceptional types.
pub fn listed_values(t: LieType) -> (Rational, Rational) {
    let n = t.rank() as i64;
    match (t.family(), t.rank()) {
        (Family::A, _) => (from_big(binom3(n + 2)), from_big(binom2(n + 1))),
        (Family::B, _) => (from_big(binom3(2 * n + 2)) / rat(2), rat(2 * n * n)),
        (Family::C, _) => (from_big(binom3(2 * n + 1)), rat(4 * n * (n - 1))),
        (Family::D, _) => (from_big(binom3(2 * n)) / rat(2), rat(2 * n * (n - 2))),
        (Family::E, 6) => (rat(156), rat(72)),
        (Family::E, 7) => (rat(399), rat(168)),
        (Family::E, 8) => (rat(1240), rat(480)),
        (Family::F, _) => (rat(156), rat(96)),
        (Family::G, _) => (rat(28), rat(24)),
        (Family::E, _) => unreachable!("E_n has n in 6..=8"),
    }
}

/// Computes one column; every route must agree.
pub fn column(t: LieType) -> Result<TableColumn> {
    let rs = RootSystem::build(t);
    let principal = principal_index(&rs).into_checked()?;
    let d = difference_d(&rs)?.into_checked()?;
    let mk = mckay_data(&rs)?;
    let label = if t.family().is_classical() {
        format!("{}_n", t.family().letter())
    } else {
        t.to_string()
    };
    Ok(TableColumn {
        label,
        lie_type: t,
        d_over_b_rank: &d.value / rat(mk.b * t.rank() as i64),
        principal_index: principal.value,
        d: d.value,
        a: mk.a,
        b: mk.b,
        closed_forms: closed_forms(t.family()),
    })
}

/// The nine columns, with the classical series evaluated at `sample_rank`
/// (raised to the series' minimum where needed).
pub fn table(sample_rank: usize) -> Result<Vec<TableColumn>> {
    let mut types = Vec::new();
    for (family, lo) in [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::D, 4)] {
        types.push(LieType::new(family, sample_rank.max(lo))?);
    }
    types.extend(LieType::exceptional());
    types.into_iter().map(column).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn exceptional_columns() {
        let e6 = column("E6".parse().unwrap()).unwrap();
        assert_eq!(
            (e6.principal_index, e6.d, e6.a, e6.b, e6.d_over_b_rank),
            (rat(156), rat(72), 6, 8, frac(3, 2))
        );
        let g2 = column("G2".parse().unwrap()).unwrap();
        assert_eq!(
            (g2.principal_index, g2.d, g2.a, g2.b, g2.d_over_b_rank),
            (rat(28), rat(24), 4, 4, rat(3))
        );
    }

    #[test]
    fn d5_column() {
        let d5 = column("D5".parse().unwrap()).unwrap();
        assert_eq!(
            (d5.principal_index, d5.d, d5.a, d5.b, d5.d_over_b_rank),
            (rat(60), rat(30), 4, 6, rat(1))
        );
        assert_eq!(d5.label, "D_n");
    }

    #[test]
    fn sample_rank_is_clamped() {
        let t = table(2).unwrap();
        let ranks: Vec<usize> = t.iter().map(|c| c.lie_type.rank()).collect();
        assert_eq!(ranks, vec![2, 2, 3, 4, 6, 7, 8, 4, 2]);
    }
}
