//! Root systems of the simple Lie algebras.
//!
//! A [`RootSystem`] is generated from a Cartan matrix: the positive roots are
//! found layer by layer using root strings, and the invariant form is the
//! symmetrisation of the Cartan matrix scaled so that long roots have squared
//! length 2. Every other invariant (`rho`, `rho_check`, Coxeter numbers,
//! exponents) is derived from these two pieces of data.
//!
//! Roots are integer vectors in the simple-root basis; weights are integer
//! vectors in the fundamental-weight basis.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{frac, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A Cartan type such as `A3` or `E8`.
///
/// `B2` and `C2` are both accepted and describe the same algebra with the
/// simple roots listed in opposite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |reason| {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                reason,
            })
        };
        match family {
            Family::A if rank < 1 => bad("A_n needs n >= 1"),
            Family::B if rank < 2 => bad("B_n needs n >= 2"),
            Family::C if rank < 2 => bad("C_n needs n >= 2"),
            Family::D if rank < 4 => bad("D_n needs n >= 4"),
            Family::E if !(6..=8).contains(&rank) => bad("E_n needs n in {6, 7, 8}"),
            Family::F if rank != 4 => bad("F_n exists only for n = 4"),
            Family::G if rank != 2 => bad("G_n exists only for n = 2"),
            _ => Ok(LieType { family, rank }),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_exceptional(self) -> bool {
        !self.family.is_classical()
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// The five exceptional types.
    pub fn exceptional() -> [LieType; 5] {
        [
            LieType { family: Family::E, rank: 6 },
            LieType { family: Family::E, rank: 7 },
            LieType { family: Family::E, rank: 8 },
            LieType { family: Family::F, rank: 4 },
            LieType { family: Family::G, rank: 2 },
        ]
    }

    /// Every valid type of rank at most `max_rank`, in family order.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D] {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out.extend(LieType::exceptional().into_iter().filter(|t| t.rank <= max_rank));
        out
    }

    /// Cartan matrix in Bourbaki numbering, `a[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            // alpha_n short
            Family::B => a[n - 1][n - 2] = -2,
            // alpha_n long
            Family::C => a[n - 2][n - 1] = -2,
            // alpha_1, alpha_2 long
            Family::F => a[2][1] = -2,
            // alpha_1 short
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("unknown Lie type {s:?}")))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("unknown Lie type {s:?}")))?;
        LieType::new(family, rank)
    }
}

impl TryFrom<String> for LieType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> String {
        t.to_string()
    }
}

/// A positive root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
    pub height: i64,
    pub is_long: bool,
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightSums {
    pub long_sum: i64,
    pub short_sum: i64,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_j)`, normalised so long roots have squared length 2.
    gram: Vec<Vec<Rational>>,
    /// `(omega_i, omega_j)` for the fundamental weights, times `weight_scale`.
    weight_gram: Vec<Vec<i64>>,
    weight_scale: i64,
    /// Row `i` holds `omega_i` in the simple-root basis.
    weights_in_roots: Vec<Vec<Rational>>,
    positive_roots: Vec<Root>,
    theta: usize,
    theta_short: usize,
    r: i64,
    rho: Vec<Rational>,
    rho_check: Vec<Rational>,
    /// `gamma^vee` in the simple-coroot basis, parallel to `positive_roots`.
    coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn build(lie_type: LieType) -> RootSystem {
        RootSystem::from_cartan(lie_type, lie_type.cartan_matrix())
            .expect("built-in Cartan matrices are valid")
    }

    /// Builds the root system of an arbitrary (indecomposable, finite type)
    /// Cartan matrix, tagged with `lie_type`.
    pub fn from_cartan(lie_type: LieType, cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
        let n = cartan.len();
        if n != lie_type.rank() || cartan.iter().any(|row| row.len() != n) {
            return Err(Error::BadCartan(format!(
                "expected a {0}x{0} matrix for {lie_type}",
                lie_type.rank()
            )));
        }
        let norms = simple_root_norms(&cartan)?;
        let gram: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| rat(cartan[i][j]) * &norms[i] / rat(2))
                    .collect()
            })
            .collect();
        if !is_positive_definite(&gram) {
            return Err(Error::BadCartan("form is not positive definite".into()));
        }

        // integral copy of the form, scaled by the lcm of its denominators
        let scale = gram
            .iter()
            .flatten()
            .fold(1i64, |acc, q| num_integer::lcm(acc, q.denom().to_i64().expect("small")));
        let igram: Vec<Vec<i64>> = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| (q * rat(scale)).to_integer().to_i64().expect("small"))
                    .collect()
            })
            .collect();

        let coords = positive_root_coords(&cartan);
        let scaled_norms: Vec<i64> = coords.iter().map(|c| int_quad_form(&igram, c)).collect();
        let positive_roots: Vec<Root> = coords
            .into_iter()
            .zip(&scaled_norms)
            .map(|(c, &len)| Root {
                height: c.iter().sum(),
                is_long: len == 2 * scale,
                coords: c,
            })
            .collect();

        let theta = argmax_height(&positive_roots, |_| true).expect("nonempty");
        let theta_short = if positive_roots.iter().all(|r| r.is_long) {
            theta
        } else {
            argmax_height(&positive_roots, |r| !r.is_long).expect("has short roots")
        };
        let r = 2 * scale / scaled_norms[theta_short];

        // 2 rho = sum gamma, 2 rho_check = sum 2 gamma / (gamma, gamma)
        let mut two_rho = vec![0i64; n];
        let mut two_rho_check = vec![0i64; n];
        for (root, &len) in positive_roots.iter().zip(&scaled_norms) {
            let weight = 2 * scale / len;
            for (k, &c) in root.coords.iter().enumerate() {
                two_rho[k] += c;
                two_rho_check[k] += c * weight;
            }
        }
        let coroots: Vec<Vec<i64>> = positive_roots
            .iter()
            .zip(&scaled_norms)
            .map(|(root, &len)| {
                root.coords
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| c * igram[j][j] / len)
                    .collect()
            })
            .collect();
        let rho: Vec<Rational> = two_rho.iter().map(|&x| frac(x, 2)).collect();
        let rho_check: Vec<Rational> = two_rho_check.iter().map(|&x| frac(x, 2)).collect();

        // omega_i = sum_k M_ik alpha_k with M = (A^T)^{-1}
        let transpose: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| cartan[j][i]).collect())
            .collect();
        let weights_in_roots = invert(&transpose).ok_or_else(|| {
            Error::BadCartan("Cartan matrix is singular".into())
        })?;
        let weight_gram: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &weights_in_roots[i][j] * &norms[j] / rat(2))
                    .collect()
            })
            .collect();
        let weight_scale = weight_gram.iter().flatten().fold(1i64, |acc, q| {
            num_integer::lcm(acc, q.denom().to_i64().expect("small"))
        });
        let weight_gram: Vec<Vec<i64>> = weight_gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| (q * rat(weight_scale)).to_integer().to_i64().expect("small"))
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            lie_type,
            cartan,
            gram,
            weight_gram,
            weight_scale,
            weights_in_roots,
            positive_roots,
            theta,
            theta_short,
            r,
            rho,
            rho_check,
            coroots,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The highest root.
    pub fn theta(&self) -> &Root {
        &self.positive_roots[self.theta]
    }

    /// The highest short root; equal to `theta` in the simply-laced case.
    pub fn theta_short(&self) -> &Root {
        &self.positive_roots[self.theta_short]
    }

    /// Squared-length ratio of long to short roots.
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn rho(&self) -> &[Rational] {
        &self.rho
    }

    pub fn rho_check(&self) -> &[Rational] {
        &self.rho_check
    }

    /// Coroots of the positive roots in the simple-coroot basis, in the
    /// order of [`RootSystem::positive_roots`].
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// `<weight, gamma^vee>` for the `k`-th positive root.
    pub fn pair_weight_coroot(&self, weight: &[i64], k: usize) -> i64 {
        weight.iter().zip(&self.coroots[k]).map(|(w, c)| w * c).sum()
    }

    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// `(alpha_i, alpha_i)` for each simple root.
    pub fn simple_root_norm(&self, i: usize) -> &Rational {
        &self.gram[i][i]
    }

    /// The invariant form on vectors in the simple-root basis.
    pub fn form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc += xi * yj * &self.gram[i][j];
                }
            }
        }
        acc
    }

    pub fn root_norm(&self, root: &Root) -> Rational {
        quad_form(&self.gram, &root.coords)
    }

    /// `(lambda, gamma)` for a weight in the fundamental-weight basis and a
    /// root in the simple-root basis.
    pub fn pair_weight_root(&self, weight: &[i64], root: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (j, (&w, &c)) in weight.iter().zip(root).enumerate() {
            if w != 0 && c != 0 {
                acc += rat(w * c) * &self.gram[j][j];
            }
        }
        acc / rat(2)
    }

    /// `(lambda, mu)` for weights in the fundamental-weight basis.
    pub fn weight_form(&self, x: &[i64], y: &[i64]) -> Rational {
        let mut acc: i128 = 0;
        for (&xi, row) in x.iter().zip(&self.weight_gram) {
            if xi != 0 {
                let inner: i128 = y.iter().zip(row).map(|(&yj, &g)| (yj * g) as i128).sum();
                acc += xi as i128 * inner;
            }
        }
        Rational::new(acc.into(), self.weight_scale.into())
    }

    pub fn weight_to_root_coords(&self, weight: &[i64]) -> Vec<Rational> {
        let n = self.rank();
        let mut out = vec![Rational::zero(); n];
        for (i, &w) in weight.iter().enumerate() {
            for k in 0..n {
                out[k] += rat(w) * &self.weights_in_roots[i][k];
            }
        }
        out
    }

    /// Coordinates of a root in the fundamental-weight basis,
    /// `<gamma, alpha_i^vee>`.
    pub fn root_to_weight(&self, root: &[i64]) -> Vec<i64> {
        self.cartan
            .iter()
            .map(|row| row.iter().zip(root).map(|(a, c)| a * c).sum())
            .collect()
    }

    /// The highest root as a highest weight (of the adjoint module).
    pub fn theta_weight(&self) -> Vec<i64> {
        self.root_to_weight(&self.theta().coords)
    }

    pub fn coxeter_number(&self) -> i64 {
        self.theta().height + 1
    }

    /// `1 + (rho, theta^vee)`; with `(theta, theta) = 2`, `theta^vee = theta`.
    pub fn dual_coxeter_number(&self) -> i64 {
        let theta: Vec<Rational> = self.theta().coords.iter().map(|&c| rat(c)).collect();
        let pairing = self.form(&self.rho, &theta);
        (pairing + Rational::one())
            .to_integer()
            .to_i64()
            .expect("dual Coxeter number fits in i64")
    }

    /// Dual Coxeter number of the Langlands dual, `1 + ht(theta_s)`.
    pub fn dual_coxeter_of_dual(&self) -> i64 {
        1 + self.theta_short().height
    }

    /// Exponents, read off as the conjugate of the height distribution.
    pub fn exponents(&self) -> Vec<i64> {
        let h = self.coxeter_number() as usize;
        let mut count = vec![0i64; h + 1];
        for root in &self.positive_roots {
            count[root.height as usize] += 1;
        }
        let mut out = Vec::with_capacity(self.rank());
        for k in 1..h {
            let mult = count[k] - count[k + 1];
            out.extend(std::iter::repeat_n(k as i64, mult as usize));
        }
        out
    }

    /// Height sums over long and short positive roots. In the simply-laced
    /// case every root is reported as short.
    pub fn height_sums(&self) -> HeightSums {
        let mut sums = HeightSums {
            long_sum: 0,
            short_sum: 0,
        };
        let simply_laced = self.r == 1;
        for root in &self.positive_roots {
            if root.is_long && !simply_laced {
                sums.long_sum += root.height;
            } else {
                sums.short_sum += root.height;
            }
        }
        sums
    }

    pub fn total_height(&self) -> i64 {
        self.positive_roots.iter().map(|r| r.height).sum()
    }

    /// `2 (rho_check, rho_check)` evaluated through the invariant form.
    pub fn rho_check_norm_squared_twice(&self) -> Rational {
        rat(2) * self.form(&self.rho_check, &self.rho_check)
    }

    pub fn rho_norm_squared(&self) -> Rational {
        self.form(&self.rho, &self.rho)
    }

    /// Checks `(rho, rho) = dim g * h^* / 12` exactly.
    pub fn strange_formula_check(&self) -> bool {
        let rhs = rat(self.dimension() as i64 * self.dual_coxeter_number()) / rat(12);
        self.rho_norm_squared() == rhs
    }

    /// Checks `(rho_check, gamma) = ht(gamma)` for every positive root.
    pub fn height_pairing_check(&self) -> bool {
        self.positive_roots.iter().all(|root| {
            let gamma: Vec<Rational> = root.coords.iter().map(|&c| rat(c)).collect();
            self.form(&self.rho_check, &gamma) == rat(root.height)
        })
    }
}

/// The simply-laced algebra whose diagram folds onto `t`.
///
/// `B2` unfolds to `D3`, which is built here as `A3`.
pub fn unfolding_partner(t: LieType) -> Option<LieType> {
    let n = t.rank();
    let (family, rank) = match t.family() {
        Family::C => (Family::A, 2 * n - 1),
        Family::B if n == 2 => (Family::A, 3),
        Family::B => (Family::D, n + 1),
        Family::F => (Family::E, 6),
        Family::G => (Family::D, 4),
        _ => return None,
    };
    LieType::new(family, rank).ok()
}

fn argmax_height(roots: &[Root], keep: impl Fn(&Root) -> bool) -> Option<usize> {
    roots
        .iter()
        .enumerate()
        .filter(|(_, r)| keep(r))
        .max_by_key(|(_, r)| r.height)
        .map(|(i, _)| i)
}

fn int_quad_form(gram: &[Vec<i64>], c: &[i64]) -> i64 {
    let support: Vec<usize> = (0..c.len()).filter(|&i| c[i] != 0).collect();
    let mut acc = 0;
    for &i in &support {
        for &j in &support {
            acc += c[i] * c[j] * gram[i][j];
        }
    }
    acc
}

fn quad_form(gram: &[Vec<Rational>], c: &[i64]) -> Rational {
    let mut acc = Rational::zero();
    for (i, &ci) in c.iter().enumerate() {
        if ci == 0 {
            continue;
        }
        for (j, &cj) in c.iter().enumerate() {
            if cj != 0 {
                acc += rat(ci * cj) * &gram[i][j];
            }
        }
    }
    acc
}

/// Squared lengths of the simple roots, scaled so the longest is 2.
fn simple_root_norms(cartan: &[Vec<i64>]) -> Result<Vec<Rational>> {
    let n = cartan.len();
    for i in 0..n {
        if cartan[i][i] != 2 {
            return Err(Error::BadCartan(format!("diagonal entry {i} is not 2")));
        }
        for j in 0..n {
            if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                return Err(Error::BadCartan(format!("bad off-diagonal pair ({i},{j})")));
            }
        }
    }
    // a_ij (a_i, a_i) = a_ji (a_j, a_j)
    let mut norms: Vec<Option<Rational>> = vec![None; n];
    norms[0] = Some(Rational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let ni = norms[i].clone().expect("visited");
        for j in 0..n {
            if i == j || cartan[i][j] == 0 {
                continue;
            }
            let nj = &ni * rat(cartan[i][j]) / rat(cartan[j][i]);
            match &norms[j] {
                Some(existing) if *existing != nj => {
                    return Err(Error::BadCartan("matrix is not symmetrisable".into()))
                }
                Some(_) => {}
                None => {
                    norms[j] = Some(nj);
                    queue.push_back(j);
                }
            }
        }
    }
    let norms: Vec<Rational> = norms
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::BadCartan("Dynkin diagram is not connected".into()))?;
    let max = norms.iter().max().expect("nonempty").clone();
    Ok(norms.into_iter().map(|x| x * rat(2) / &max).collect())
}

fn is_positive_definite(gram: &[Vec<Rational>]) -> bool {
    // Gaussian elimination without pivoting; all pivots positive iff PD.
    let n = gram.len();
    let mut m: Vec<Vec<Rational>> = gram.to_vec();
    for k in 0..n {
        if !m[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &m[k][k];
            for j in k..n {
                let sub = &factor * &m[k][j];
                m[i][j] -= sub;
            }
        }
    }
    true
}

/// Fraction-free Gauss-Jordan elimination: every division by the previous
/// pivot is exact, and the left block ends up diagonal.
fn invert(a: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
            r.extend((0..n).map(|j| BigInt::from(i64::from(i == j))));
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot);
        let (before, rest) = m.split_at_mut(k);
        let (row_k, after) = rest.split_first_mut().expect("k < n");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let factor = row[k].clone();
            for (x, y) in row.iter_mut().zip(row_k.iter()) {
                *x = (&row_k[k] * &*x - &factor * y) / &prev;
            }
        }
        prev = row_k[k].clone();
    }
    Some(
        m.into_iter()
            .enumerate()
            .map(|(i, row)| {
                let d = row[i].clone();
                row[n..]
                    .iter()
                    .map(|x| Rational::new(x.clone(), d.clone()))
                    .collect()
            })
            .collect(),
    )
}

/// Positive roots by increasing height, generated from root strings: for a
/// root `beta` and simple root `alpha_i` with `beta - p alpha_i` the bottom
/// of the string, `beta + alpha_i` is a root iff `p - <beta, alpha_i^vee> > 0`.
fn positive_root_coords(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while !layer.is_empty() {
        for root in &layer {
            seen.insert(root.clone());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        let mut next_seen: HashSet<Vec<i64>> = HashSet::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if next_seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all
}
