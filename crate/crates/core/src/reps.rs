//! Dynkin indices of representations.
//!
//! For an irreducible module with highest weight `lambda`,
//! `ind_D(g, V) = dim V / dim g * (lambda, lambda + 2 rho)` in the normalised
//! form. Indices of subalgebras are quotients of representation indices.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, frac, rat, Rational};
use crate::rootsys::{Family, LieType, RootSystem};
use crate::sl2index::ClassicalKind;

/// A dominant integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HighestWeight(Vec<i64>);

impl HighestWeight {
    pub fn new(coords: Vec<i64>, rank: usize) -> Result<Self> {
        if coords.len() != rank {
            return Err(Error::WeightArity {
                expected: rank,
                got: coords.len(),
            });
        }
        if let Some(&c) = coords.iter().find(|&&c| c < 0) {
            return Err(Error::NegativeWeight(c));
        }
        Ok(HighestWeight(coords))
    }

    /// The fundamental weight `omega_i` (1-based, Bourbaki numbering).
    pub fn fundamental(i: usize, rank: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        HighestWeight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Parses a comma-separated list such as `1,0,0,0,0,0`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        HighestWeight::new(coords, rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepIndexReport {
    #[serde(with = "rational::serde_bigint")]
    pub dimension: BigInt,
    #[serde(with = "rational::serde_str")]
    pub index: Rational,
    pub is_integer: bool,
    /// Set for the zero weight, whose module is trivial with index 0.
    pub trivial: bool,
}

/// Weyl's dimension formula, `prod <lambda + rho, gamma^vee> / <rho, gamma^vee>`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &HighestWeight) -> BigInt {
    let shifted: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let mut num = Product::default();
    let mut den = Product::default();
    for (k, coroot) in rs.coroots().iter().enumerate() {
        num.mul(rs.pair_weight_coroot(&shifted, k));
        den.mul(coroot.iter().sum::<i64>());
    }
    let (num, den) = (num.finish(), den.finish());
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Product of many small positive integers, batched through `u128`.
struct Product {
    big: BigInt,
    small: u128,
}

impl Default for Product {
    fn default() -> Self {
        Product {
            big: BigInt::one(),
            small: 1,
        }
    }
}

impl Product {
    fn mul(&mut self, x: i64) {
        let x = u128::try_from(x).expect("positive factor");
        match self.small.checked_mul(x) {
            Some(v) => self.small = v,
            None => {
                self.big *= self.small;
                self.small = x;
            }
        }
    }

    fn finish(self) -> BigInt {
        self.big * self.small
    }
}

pub fn dynkin_index_irrep(rs: &RootSystem, lambda: &HighestWeight) -> RepIndexReport {
    let dimension = weyl_dimension(rs, lambda);
    if lambda.is_zero() {
        return RepIndexReport {
            dimension,
            index: Rational::zero(),
            is_integer: true,
            trivial: true,
        };
    }
    let plus_two_rho: Vec<i64> = lambda.coords().iter().map(|c| c + 2).collect();
    let casimir = rs.weight_form(lambda.coords(), &plus_two_rho);
    let index = Rational::from_integer(dimension.clone()) * casimir / rat(rs.dimension() as i64);
    RepIndexReport {
        dimension,
        is_integer: index.is_integer(),
        index,
        trivial: false,
    }
}

/// `ind_D(g, ad) = 2 h^*`.
pub fn adjoint_index(rs: &RootSystem) -> i64 {
    2 * rs.dual_coxeter_number()
}

/// `ind(s -> g) = ind_D(s, M) / ind_D(g, M)` for a test module `M` of `g`.
pub fn embedding_index_via_module(ind_s: &Rational, ind_g: &Rational) -> Result<Rational> {
    if ind_g.is_zero() {
        return Err(Error::TrivialModule);
    }
    Ok(ind_s / ind_g)
}

/// Checks `ind_D(s, M) = ind_D(s, g) * ind_D(g, M) / (2 h^*(g))`.
pub fn module_index_check(
    rs_g: &RootSystem,
    ind_s_in_g: &Rational,
    ind_g_in_m: &Rational,
    ind_s_in_m: &Rational,
) -> bool {
    let rhs = ind_s_in_g * ind_g_in_m / rat(adjoint_index(rs_g));
    *ind_s_in_m == rhs
}

/// The Cartan type of `g(V)` for an `n`-dimensional `V`, whenever `g(V)` is
/// simple and `V` is its first fundamental module. `None` for `so_3`, `so_4`,
/// `so_6` and odd-dimensional `sp`.
pub fn classical_type(kind: ClassicalKind, n: usize) -> Option<LieType> {
    match kind {
        ClassicalKind::Sl if n >= 2 => LieType::new(Family::A, n - 1).ok(),
        ClassicalKind::Sp if n == 2 => LieType::new(Family::A, 1).ok(),
        ClassicalKind::Sp if n.is_multiple_of(2) && n >= 4 => LieType::new(Family::C, n / 2).ok(),
        ClassicalKind::So if n % 2 == 1 && n >= 5 => LieType::new(Family::B, n / 2).ok(),
        ClassicalKind::So if n.is_multiple_of(2) && n >= 8 => LieType::new(Family::D, n / 2).ok(),
        _ => None,
    }
}

/// `ind_D(g(V), V)` for the defining module, evaluated with the highest-weight
/// formula in the orthonormal `epsilon` model rather than through a generated
/// root system, so it stays cheap for large `V`.
pub fn vector_rep_index(kind: ClassicalKind, n: usize) -> Result<Rational> {
    let degenerate = Err(Error::DegenerateClassical { kind, dim: n });
    let nn = n as i64;
    // (omega_1, omega_1 + 2 rho) in the standard form, then scaled
    let (casimir, dim_g) = match kind {
        ClassicalKind::Sl => {
            if n < 2 {
                return degenerate;
            }
            // omega_1 = e_1 - (1/N) sum e_i, rho_1 = (N-1)/2, sum rho = 0
            let norm = rat(1) - frac(1, nn);
            (norm + rat(nn - 1), nn * nn - 1)
        }
        ClassicalKind::Sp => {
            if n < 2 || n % 2 == 1 {
                return degenerate;
            }
            // long roots 2e_i must have norm 2: halve the standard form
            let half = nn / 2;
            ((rat(1) + rat(2 * half)) / rat(2), half * (2 * half + 1))
        }
        ClassicalKind::So => {
            if n < 5 {
                return degenerate;
            }
            // rho_1 = N/2 - 1
            (rat(1) + rat(nn - 2), nn * (nn - 1) / 2)
        }
    };
    Ok(rat(nn) * casimir / rat(dim_g))
}

/// The classical target of the simplest representation of an exceptional
/// algebra, together with the embedding index listed for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplestEmbedding {
    pub lie_type: LieType,
    pub weight: HighestWeight,
    pub target_kind: ClassicalKind,
    pub target_dim: usize,
    pub table_index: i64,
    #[serde(with = "rational::serde_str")]
    pub recomputed: Rational,
}

/// Listed embedding data for the exceptional simplest representations.
fn simplest_data(t: LieType) -> Option<(usize, ClassicalKind, usize, i64)> {
    // (Bourbaki label of the highest weight, target kind, dim V, index)
    Some(match (t.family(), t.rank()) {
        (Family::E, 6) => (1, ClassicalKind::Sl, 27, 6),
        (Family::E, 7) => (7, ClassicalKind::Sp, 56, 12),
        (Family::E, 8) => (8, ClassicalKind::So, 248, 30),
        (Family::F, 4) => (4, ClassicalKind::So, 26, 3),
        (Family::G, 2) => (1, ClassicalKind::So, 7, 1),
        _ => return None,
    })
}

/// Recomputes `ind(g -> g(V))` for the simplest representation `V` of an
/// exceptional `g` and checks it against the listed value.
pub fn exceptional_simplest_embedding(rs: &RootSystem) -> Result<SimplestEmbedding> {
    let t = rs.lie_type();
    let (label, target_kind, target_dim, table_index) =
        simplest_data(t).ok_or(Error::NotExceptional(t))?;
    let weight = HighestWeight::fundamental(label, t.rank());
    let report = dynkin_index_irrep(rs, &weight);
    if report.dimension != BigInt::from(target_dim) {
        return Err(Error::Inconsistent(format!(
            "omega_{label} of {t} has dimension {}, expected {target_dim}",
            report.dimension
        )));
    }
    let target = vector_rep_index(target_kind, target_dim)?;
    let recomputed = embedding_index_via_module(&report.index, &target)?;
    if recomputed != rat(table_index) {
        return Err(Error::Inconsistent(format!(
            "embedding index of {t} recomputed as {}, listed as {table_index}",
            rational::render(&recomputed)
        )));
    }
    Ok(SimplestEmbedding {
        lie_type: t,
        weight,
        target_kind,
        target_dim,
        table_index,
        recomputed,
    })
}

/// Target kind, dimension and listed embedding index of the simplest
/// representation of an exceptional type.
pub fn simplest_target(t: LieType) -> Option<(ClassicalKind, usize, i64)> {
    simplest_data(t).map(|(_, kind, dim, index)| (kind, dim, index))
}

pub fn exceptional_simplest_embedding_index(t: LieType) -> Result<i64> {
    if !t.is_exceptional() {
        return Err(Error::NotExceptional(t));
    }
    exceptional_simplest_embedding(&RootSystem::build(t)).map(|e| e.table_index)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn hw(rs: &RootSystem, c: &[i64]) -> HighestWeight {
        HighestWeight::new(c.to_vec(), rs.rank()).unwrap()
    }

    #[test]
    fn weyl_dimension_examples() {
        let a1 = rs("A1");
        for d in 0..10 {
            assert_eq!(weyl_dimension(&a1, &hw(&a1, &[d])), BigInt::from(d + 1));
        }
        let e6 = rs("E6");
        assert_eq!(
            weyl_dimension(&e6, &HighestWeight::fundamental(1, 6)),
            BigInt::from(27)
        );
        assert_eq!(
            weyl_dimension(&e6, &HighestWeight::fundamental(6, 6)),
            BigInt::from(27)
        );
        let a2 = rs("A2");
        assert_eq!(weyl_dimension(&a2, &hw(&a2, &[1, 1])), BigInt::from(8));
        let e8 = rs("E8");
        assert_eq!(
            weyl_dimension(&e8, &HighestWeight::fundamental(1, 8)),
            BigInt::from(3875)
        );
    }

    #[test]
    fn weight_validation() {
        assert_eq!(
            HighestWeight::new(vec![1, -1], 2),
            Err(Error::NegativeWeight(-1))
        );
        assert!(matches!(
            HighestWeight::parse("1,0", 3),
            Err(Error::WeightArity { expected: 3, got: 2 })
        ));
        assert!(HighestWeight::parse("1,x", 2).is_err());
    }

    #[test]
    fn irrep_index_examples() {
        let a1 = rs("A1");
        assert_eq!(dynkin_index_irrep(&a1, &hw(&a1, &[2])).index, rat(4));
        let e6 = rs("E6");
        let r = dynkin_index_irrep(&e6, &HighestWeight::fundamental(1, 6));
        assert_eq!(r.index, rat(6));
        assert!(r.is_integer && !r.trivial);
        let g2 = rs("G2");
        let r = dynkin_index_irrep(&g2, &HighestWeight::fundamental(1, 2));
        assert_eq!(r.dimension, BigInt::from(7));
        assert_eq!(r.index, rat(2));
    }

    #[test]
    fn zero_weight_is_trivial() {
        let b3 = rs("B3");
        let r = dynkin_index_irrep(&b3, &hw(&b3, &[0, 0, 0]));
        assert!(r.trivial);
        assert_eq!(r.dimension, BigInt::from(1));
        assert!(r.index.is_zero());
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(adjoint_index(&rs("A2")), 6);
        assert_eq!(adjoint_index(&rs("C3")), 8);
        assert_eq!(adjoint_index(&rs("E8")), 60);
        for s in ["A1", "A4", "B3", "C4", "D5", "E6", "E7", "F4", "G2"] {
            let sys = rs(s);
            let theta = HighestWeight::new(sys.theta_weight(), sys.rank()).unwrap();
            let r = dynkin_index_irrep(&sys, &theta);
            assert_eq!(r.dimension, BigInt::from(sys.dimension()), "{s}");
            assert_eq!(r.index, rat(adjoint_index(&sys)), "{s}");
        }
    }

    #[test]
    fn embedding_quotients() {
        assert_eq!(embedding_index_via_module(&rat(1), &rat(1)), Ok(rat(1)));
        assert_eq!(embedding_index_via_module(&rat(2), &rat(1)), Ok(rat(2)));
        assert_eq!(embedding_index_via_module(&rat(60), &rat(2)), Ok(rat(30)));
        assert_eq!(
            embedding_index_via_module(&rat(3), &Rational::zero()),
            Err(Error::TrivialModule)
        );
    }

    #[test]
    fn module_index_examples() {
        // principal sl2 in sl4: ind_D(s, g) = 4 + 20 + 56
        let a3 = rs("A3");
        assert!(module_index_check(&a3, &rat(80), &rat(1), &rat(10)));
        assert!(!module_index_check(&a3, &rat(80), &rat(1), &rat(11)));
        // s = g
        let e7 = rs("E7");
        let ad = rat(adjoint_index(&e7));
        assert!(module_index_check(&e7, &ad, &rat(12), &rat(12)));
        // principal sl2 in sp6: S^2 of R_5 = R_10 + R_6 + R_2
        let c3 = rs("C3");
        let ind_s_g = rat(220 + 56 + 4);
        assert!(module_index_check(&c3, &ind_s_g, &rat(1), &rat(35)));
    }

    #[test]
    fn vector_index_two_routes() {
        for n in 2..=10 {
            for kind in [ClassicalKind::Sl, ClassicalKind::Sp, ClassicalKind::So] {
                let Some(t) = classical_type(kind, n) else { continue };
                let sys = RootSystem::build(t);
                let w = HighestWeight::fundamental(1, sys.rank());
                let r = dynkin_index_irrep(&sys, &w);
                assert_eq!(r.dimension, BigInt::from(n), "{kind}{n}");
                assert_eq!(Ok(r.index), vector_rep_index(kind, n), "{kind}{n}");
            }
        }
        assert_eq!(vector_rep_index(ClassicalKind::So, 248), Ok(rat(2)));
        assert!(vector_rep_index(ClassicalKind::Sp, 7).is_err());
        assert!(vector_rep_index(ClassicalKind::So, 2).is_err());
    }

    #[test]
    fn simplest_embeddings() {
        let t = |s: &str| s.parse::<LieType>().unwrap();
        assert_eq!(exceptional_simplest_embedding_index(t("E7")), Ok(12));
        assert_eq!(exceptional_simplest_embedding_index(t("F4")), Ok(3));
        assert_eq!(exceptional_simplest_embedding_index(t("G2")), Ok(1));
        assert_eq!(
            exceptional_simplest_embedding_index(t("B3")),
            Err(Error::NotExceptional(t("B3")))
        );
    }
}
