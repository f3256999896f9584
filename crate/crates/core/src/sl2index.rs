//! Indices of sl2-subalgebras.
//!
//! An sl2-module is a multiset of highest weights `d`, each standing for the
//! irreducible `R_d` of dimension `d + 1`; its Dynkin index is
//! `sum C(d + 2, 3)`. The index of the sl2-subalgebra attached to a nilpotent
//! element is computed along several independent routes:
//!
//! * from the Jordan partition of the nilpotent in the vector representation;
//! * by branching the adjoint representation of `g(V)` (Clebsch-Gordan,
//!   `S^2`, `Λ^2`) and dividing by `2 h^*`;
//! * for principal nilpotents, by the two uniform expressions in terms of
//!   `h^*(g^vee)` and `rho_check`, and by Kostant's decomposition of `g`.
//!
//! [`IndexReport`] keeps every route so that a disagreement is visible as data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, binom2, binom3, frac, from_big, rat, Rational};
use crate::reps::simplest_target;
use crate::rootsys::{Family, LieType, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalKind {
    Sl,
    Sp,
    So,
}

impl ClassicalKind {
    pub const ALL: [ClassicalKind; 3] = [ClassicalKind::Sl, ClassicalKind::Sp, ClassicalKind::So];
}

impl fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalKind::Sl => "sl",
            ClassicalKind::Sp => "sp",
            ClassicalKind::So => "so",
        })
    }
}

impl FromStr for ClassicalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sl" => Ok(ClassicalKind::Sl),
            "sp" => Ok(ClassicalKind::Sp),
            "so" => Ok(ClassicalKind::So),
            _ => Err(Error::Parse(format!("unknown classical kind {s:?}"))),
        }
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::BadPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::BadPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts before validating them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// `(1, 1, ..., 1)` of the given size.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `(2, 1, ..., 1)` of size `n >= 2`.
    pub fn minimal_sl(n: usize) -> Self {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partition of the zero nilpotent.
    pub fn is_zero_orbit(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Multiplicity of each part value.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.0 {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// Comma-separated parts, e.g. `4,2,1`.
    pub fn compact(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        parts.join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.compact())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_unsorted(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// A finite-dimensional sl2-module, as the multiset of highest weights of its
/// irreducible summands. Stored in decreasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl2Module(Vec<usize>);

impl Sl2Module {
    pub fn new(mut components: Vec<usize>) -> Self {
        components.sort_unstable_by(|a, b| b.cmp(a));
        Sl2Module(components)
    }

    pub fn components(&self) -> &[usize] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.iter().map(|d| d + 1).sum()
    }

    pub fn direct_sum(mut self, other: Sl2Module) -> Self {
        self.0.extend(other.0);
        Sl2Module::new(self.0)
    }

    /// Removes one copy of `R_d`; returns false if there is none.
    pub fn remove_one(&mut self, d: usize) -> bool {
        match self.0.iter().position(|&x| x == d) {
            Some(i) => {
                self.0.remove(i);
                true
            }
            None => false,
        }
    }
}

impl FromIterator<usize> for Sl2Module {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Sl2Module::new(iter.into_iter().collect())
    }
}

/// `ind_D(sl2, M) = sum C(d + 2, 3)`.
pub fn sl2_module_index(m: &Sl2Module) -> BigInt {
    m.components().iter().map(|&d| binom3(d as i64 + 2)).sum()
}

/// Parity conditions: for `sp`, odd parts occur with even multiplicity and
/// the size is even; for `so`, even parts occur with even multiplicity.
pub fn validate_partition(kind: ClassicalKind, p: &Partition) -> bool {
    let mults = p.multiplicities();
    match kind {
        ClassicalKind::Sl => true,
        ClassicalKind::Sp => {
            p.size().is_multiple_of(2) && mults.iter().all(|(part, m)| part % 2 == 0 || m % 2 == 0)
        }
        ClassicalKind::So => mults.iter().all(|(part, m)| part % 2 == 1 || m % 2 == 0),
    }
}

/// Restriction of `V` to the sl2-subalgebra: one `R_{λ_i - 1}` per part.
pub fn branch_v(p: &Partition) -> Sl2Module {
    p.parts().iter().map(|&l| l - 1).collect()
}

fn check_nilpotent(kind: ClassicalKind, p: &Partition) -> Result<()> {
    if !validate_partition(kind, p) {
        return Err(Error::Parity {
            kind,
            partition: p.clone(),
        });
    }
    if p.is_zero_orbit() {
        return Err(Error::ZeroNilpotent(p.clone()));
    }
    if kind == ClassicalKind::So && p.size() < 3 {
        return Err(Error::DegenerateClassical {
            kind,
            dim: p.size(),
        });
    }
    Ok(())
}

/// Index of `A_1(e)` in `g(V)` from the Jordan partition of `e`:
/// `sum C(λ_i + 1, 3)` for `sl` and `sp`, half of that for `so`.
pub fn sl2_index_classical(kind: ClassicalKind, p: &Partition) -> Result<Rational> {
    check_nilpotent(kind, p)?;
    let total: BigInt = p.parts().iter().map(|&l| binom3(l as i64 + 1)).sum();
    Ok(match kind {
        ClassicalKind::So => Rational::new(total, BigInt::from(2)),
        _ => from_big(total),
    })
}

/// `R_a ⊗ R_b = R_{a+b} ⊕ R_{a+b-2} ⊕ ... ⊕ R_{|a-b|}`.
pub fn clebsch_gordan(a: usize, b: usize) -> Sl2Module {
    (0..=a.min(b)).map(|k| a + b - 2 * k).collect()
}

/// `S^2(R_m) = R_{2m} ⊕ R_{2m-4} ⊕ ...`.
pub fn sym2(m: usize) -> Sl2Module {
    (0..=m / 2).map(|k| 2 * m - 4 * k).collect()
}

/// `Λ^2(R_m) = R_{2m-2} ⊕ R_{2m-6} ⊕ ...`, empty for `m = 0`.
pub fn wedge2(m: usize) -> Sl2Module {
    if m == 0 {
        return Sl2Module::default();
    }
    (0..=(m - 1) / 2).map(|k| 2 * m - 2 - 4 * k).collect()
}

/// Restriction of the adjoint representation of `g(V)` to `A_1(e)`.
///
/// * `sl`: `V ⊗ V^*` minus one trivial summand;
/// * `sp`: `S^2 V`;
/// * `so`: `Λ^2 V`.
pub fn branch_adjoint(kind: ClassicalKind, p: &Partition) -> Result<Sl2Module> {
    if !validate_partition(kind, p) {
        return Err(Error::Parity {
            kind,
            partition: p.clone(),
        });
    }
    let v = branch_v(p);
    let d = v.components();
    let mut out: Vec<usize> = Vec::new();
    match kind {
        ClassicalKind::Sl => {
            for &a in d {
                for &b in d {
                    out.extend_from_slice(clebsch_gordan(a, b).components());
                }
            }
            let mut m = Sl2Module::new(out);
            m.remove_one(0);
            return Ok(m);
        }
        ClassicalKind::Sp | ClassicalKind::So => {
            for (i, &a) in d.iter().enumerate() {
                for &b in &d[i + 1..] {
                    out.extend_from_slice(clebsch_gordan(a, b).components());
                }
                let diag = if kind == ClassicalKind::Sp {
                    sym2(a)
                } else {
                    wedge2(a)
                };
                out.extend_from_slice(diag.components());
            }
        }
    }
    Ok(Sl2Module::new(out))
}

/// Dual Coxeter number of `g(V)` in terms of `N = dim V`.
pub fn classical_dual_coxeter(kind: ClassicalKind, n: usize) -> Result<i64> {
    let nn = n as i64;
    match kind {
        ClassicalKind::Sl if n >= 2 => Ok(nn),
        ClassicalKind::Sp if n >= 2 && n.is_multiple_of(2) => Ok(nn / 2 + 1),
        ClassicalKind::So if n >= 3 => Ok(nn - 2),
        _ => Err(Error::DegenerateClassical { kind, dim: n }),
    }
}

/// `ind(A_1(e) -> g) = ind_D(A_1(e), g) / (2 h^*)` via adjoint branching.
pub fn index_via_adjoint(kind: ClassicalKind, p: &Partition) -> Result<Rational> {
    check_nilpotent(kind, p)?;
    let h_star = classical_dual_coxeter(kind, p.size())?;
    let adjoint = branch_adjoint(kind, p)?;
    Ok(from_big(sl2_module_index(&adjoint)) / rat(2 * h_star))
}

/// Index of `A_1(e)` in an exceptional algebra from the Jordan type of `e` in
/// its simplest representation, divided by the embedding index of that
/// representation.
pub fn index_via_simplest_rep(t: LieType, p: &Partition) -> Result<Rational> {
    let (kind, dim, embedding) = simplest_target(t).ok_or(Error::NotExceptional(t))?;
    if p.size() != dim {
        return Err(Error::SizeMismatch {
            expected: dim,
            got: p.size(),
        });
    }
    let in_target = sl2_index_classical(kind, p)?;
    let value = in_target / rat(embedding);
    if !value.is_integer() {
        return Err(Error::BadPartition(format!(
            "{p} gives non-integral index {} in {t}; it is not the Jordan type of a nilpotent",
            rational::render(&value)
        )));
    }
    Ok(value)
}

/// An index computed along several routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
    #[serde(with = "rational::serde_str_map")]
    pub routes: BTreeMap<String, Rational>,
}

impl IndexReport {
    /// Builds a report whose value is taken from the first route.
    pub fn from_routes(routes: Vec<(&str, Rational)>) -> Self {
        let value = routes.first().map(|(_, v)| v.clone()).unwrap_or_default();
        IndexReport {
            value,
            routes: routes
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
    }

    pub fn agree(&self) -> bool {
        self.routes.values().all(|v| *v == self.value)
    }

    pub fn route(&self, name: &str) -> Option<&Rational> {
        self.routes.get(name)
    }

    /// Errors out with every route listed when the routes disagree.
    pub fn into_checked(self) -> Result<Self> {
        if self.agree() {
            Ok(self)
        } else {
            let listing: Vec<String> = self
                .routes
                .iter()
                .map(|(k, v)| format!("{k}={}", rational::render(v)))
                .collect();
            Err(Error::Inconsistent(format!(
                "routes disagree: {}",
                listing.join(", ")
            )))
        }
    }
}

/// The vector-representation picture of a classical type and the Jordan type
/// of its principal nilpotent.
pub fn principal_partition(t: LieType) -> Option<(ClassicalKind, Partition)> {
    let n = t.rank();
    Some(match t.family() {
        Family::A => (ClassicalKind::Sl, Partition(vec![n + 1])),
        Family::B => (ClassicalKind::So, Partition(vec![2 * n + 1])),
        Family::C => (ClassicalKind::Sp, Partition(vec![2 * n])),
        Family::D => (ClassicalKind::So, Partition(vec![2 * n - 1, 1])),
        _ => return None,
    })
}

pub mod route {
    pub const PARTITION: &str = "partition-formula";
    pub const ADJOINT: &str = "adjoint-branching";
    pub const SIMPLEST: &str = "simplest-representation";
    pub const DIM_DUAL_COXETER: &str = "dim-dual-coxeter";
    pub const RHO_CHECK: &str = "rho-check-norm";
    pub const HEIGHT_SUMS: &str = "height-sums";
    pub const KOSTANT: &str = "kostant";
    pub const CLOSED_FORM: &str = "closed-form";
    pub const GROUP_ORDER: &str = "group-order";
    pub const BINOMIAL: &str = "binomial-difference";
    pub const SUBREGULAR: &str = "subregular-branching";
}

/// `g` restricted to a principal sl2: `⊕ R_{2 m_i}` over the exponents.
pub fn principal_module(rs: &RootSystem) -> Sl2Module {
    rs.exponents().iter().map(|&m| 2 * m as usize).collect()
}

/// Index of the principal sl2-subalgebra along every available route.
pub fn principal_index(rs: &RootSystem) -> IndexReport {
    let h_star = rs.dual_coxeter_number();
    let r = rs.r();
    let dim = rs.dimension() as i64;
    let sums = rs.height_sums();
    let mut routes = vec![
        (
            route::DIM_DUAL_COXETER,
            frac(dim * rs.dual_coxeter_of_dual() * r, 6),
        ),
        (route::RHO_CHECK, rs.rho_check_norm_squared_twice()),
        (route::HEIGHT_SUMS, rat(sums.long_sum + r * sums.short_sum)),
        (
            route::KOSTANT,
            from_big(sl2_module_index(&principal_module(rs))) / rat(2 * h_star),
        ),
    ];
    if let Some((kind, p)) = principal_partition(rs.lie_type()) {
        if let Ok(v) = sl2_index_classical(kind, &p) {
            routes.push((route::PARTITION, v));
        }
        if let Ok(v) = index_via_adjoint(kind, &p) {
            routes.push((route::ADJOINT, v));
        }
    }
    IndexReport::from_routes(routes)
}

/// Degrees `(a, b, h)` attached to `g`, with `a + b = h + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct McKayData {
    pub a: i64,
    pub b: i64,
    pub h: i64,
    /// Order of the associated finite subgroup of `SL_2`, `ab/2`.
    pub group_order: i64,
}

impl McKayData {
    /// Coefficients of `(1 + T^h) / ((1 - T^a)(1 - T^b))` up to `degree`.
    pub fn poincare_series(&self, degree: usize) -> Vec<i64> {
        let mut out = vec![0i64; degree + 1];
        let (a, b, h) = (self.a as usize, self.b as usize, self.h as usize);
        for shift in [0, h] {
            for i in (0..=degree).step_by(a) {
                for j in (0..=degree).step_by(b) {
                    let k = shift + i + j;
                    if k <= degree {
                        out[k] += 1;
                    }
                }
            }
        }
        out
    }
}

/// The `(a, b)` pair listed for a type, before validation.
pub fn mckay_ab(t: LieType) -> (i64, i64) {
    let n = t.rank() as i64;
    let (a, b) = match (t.family(), t.rank()) {
        (Family::A, _) => (2, n + 1),
        (Family::B, _) => (2, 2 * n),
        (Family::C, _) => (4, 2 * n - 2),
        (Family::D, _) => (4, 2 * n - 4),
        (Family::E, 6) => (6, 8),
        (Family::E, 7) => (8, 12),
        (Family::E, 8) => (12, 20),
        (Family::F, _) => (6, 8),
        (Family::G, _) => (4, 4),
        (Family::E, _) => unreachable!("E_n has n in 6..=8"),
    };
    // C_2 lists (4, 2); order so that a <= b
    (a.min(b), a.max(b))
}

pub fn mckay_data(rs: &RootSystem) -> Result<McKayData> {
    let t = rs.lie_type();
    if t.rank() < 2 {
        return Err(Error::NoSubregular(t));
    }
    let (a, b) = mckay_ab(t);
    let h = rs.coxeter_number();
    if a + b != h + 2 {
        return Err(Error::Inconsistent(format!(
            "{t}: a + b = {} but h + 2 = {}",
            a + b,
            h + 2
        )));
    }
    Ok(McKayData {
        a,
        b,
        h,
        group_order: a * b / 2,
    })
}

/// `g` restricted to a subregular sl2:
/// `(⊕_{i<n} R_{2 m_i}) ⊕ R_{a-2} ⊕ R_{b-2} ⊕ R_{h-2}`.
pub fn subregular_module(rs: &RootSystem) -> Result<Sl2Module> {
    let mk = mckay_data(rs)?;
    let exps = rs.exponents();
    let n = exps.len();
    let shape_ok = exps[0] == 1
        && exps[n - 1] == mk.h - 1
        && exps[n - 2] < exps[n - 1]
        && (n == 2 || exps[0] < exps[1]);
    if !shape_ok {
        return Err(Error::Inconsistent(format!(
            "{}: exponents {exps:?} do not have the subregular shape",
            rs.lie_type()
        )));
    }
    let mut comps: Vec<usize> = exps[..n - 1].iter().map(|&m| 2 * m as usize).collect();
    comps.extend([mk.a - 2, mk.b - 2, mk.h - 2].map(|x| x as usize));
    let m = Sl2Module::new(comps);
    if m.dimension() != rs.dimension() {
        return Err(Error::Inconsistent(format!(
            "{}: subregular module has dimension {}, expected {}",
            rs.lie_type(),
            m.dimension(),
            rs.dimension()
        )));
    }
    Ok(m)
}

/// Difference of the principal and subregular indices, along four routes.
pub fn difference_d(rs: &RootSystem) -> Result<IndexReport> {
    let mk = mckay_data(rs)?;
    let (a, b, h) = (mk.a, mk.b, mk.h);
    let h_star = rs.dual_coxeter_number();
    let ratio = frac(h, h_star);
    let closed = &ratio * (from_big(binom2(h)) + frac((a - 2) * (b - 2), 4));
    let via_order = &ratio * frac(h * (h - 2) + mk.group_order, 2);
    let binomial =
        from_big(binom3(2 * h) - binom3(h) - binom3(a) - binom3(b)) / rat(2 * h_star);
    let sub = subregular_module(rs)?;
    let sub_index = from_big(sl2_module_index(&sub)) / rat(2 * h_star);
    let via_sub = rs.rho_check_norm_squared_twice() - sub_index;
    Ok(IndexReport::from_routes(vec![
        (route::CLOSED_FORM, closed),
        (route::GROUP_ORDER, via_order),
        (route::BINOMIAL, binomial),
        (route::SUBREGULAR, via_sub),
    ]))
}

/// One type's row in the inequality sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRow {
    pub lie_type: LieType,
    #[serde(with = "rational::serde_str")]
    pub d: Rational,
    pub h: i64,
    pub b: i64,
    pub rank: usize,
    pub le_2h_rank: bool,
    pub eq_2h_rank: bool,
    pub le_3b_rank: bool,
    pub eq_3b_rank: bool,
    #[serde(with = "rational::serde_str")]
    pub d_over_b_rank: Rational,
    /// `None` when `h` is odd and the claim says nothing.
    pub d_over_rank_integral: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub rows: Vec<BoundsRow>,
    pub violations: Vec<String>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Expected constant value of `D / (b rk)` on a classical series.
pub fn series_ratio(f: Family) -> Option<Rational> {
    match f {
        Family::A => Some(frac(1, 2)),
        Family::B => Some(rat(1)),
        Family::C => Some(rat(2)),
        Family::D => Some(rat(1)),
        _ => None,
    }
}

/// Types of rank at least 2 for which the subregular data is tabulated:
/// `A_n, B_n (n >= 2)`, `C_n (n >= 3)`, `D_n (n >= 4)` up to `max_rank`,
/// plus the exceptional types.
pub fn table_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for (family, lo) in [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::D, 4)] {
        for rank in lo..=max_rank {
            out.push(LieType::new(family, rank).expect("in range"));
        }
    }
    out.extend(LieType::exceptional());
    out
}

/// Sweeps the inequalities `D <= 2h rk`, `D <= 3b rk` with their equality
/// cases, the per-series constancy of `D / (b rk)`, and integrality of
/// `D / rk` for even `h`.
pub fn difference_bounds(max_rank: usize) -> Result<BoundsReport> {
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for t in table_types(max_rank) {
        let rs = RootSystem::build(t);
        let report = difference_d(&rs)?.into_checked()?;
        let mk = mckay_data(&rs)?;
        let rank = t.rank();
        let rk = rat(rank as i64);
        let d = report.value;
        let two_h_rank = rat(2 * mk.h) * &rk;
        let three_b_rank = rat(3 * mk.b) * &rk;
        let d_over_b_rank = &d / (rat(mk.b) * &rk);
        let extremal = matches!(
            (t.family(), rank),
            (Family::G, 2) | (Family::F, 4) | (Family::E, 8)
        );
        let row = BoundsRow {
            lie_type: t,
            h: mk.h,
            b: mk.b,
            rank,
            le_2h_rank: d <= two_h_rank,
            eq_2h_rank: d == two_h_rank,
            le_3b_rank: d <= three_b_rank,
            eq_3b_rank: d == three_b_rank,
            d_over_rank_integral: (mk.h % 2 == 0).then(|| (&d / &rk).is_integer()),
            d_over_b_rank,
            d,
        };
        if !row.le_2h_rank || row.eq_2h_rank != extremal {
            violations.push(format!("{t}: D <= 2h rk fails or equality case is wrong"));
        }
        if !row.le_3b_rank || row.eq_3b_rank != extremal {
            violations.push(format!("{t}: D <= 3b rk fails or equality case is wrong"));
        }
        if let Some(expected) = series_ratio(t.family()) {
            if row.d_over_b_rank != expected {
                violations.push(format!(
                    "{t}: D/(b rk) = {}, expected {}",
                    rational::render(&row.d_over_b_rank),
                    rational::render(&expected)
                ));
            }
        }
        if row.d_over_rank_integral == Some(false) {
            violations.push(format!("{t}: h even but D/rk is not an integer"));
        }
        rows.push(row);
    }
    Ok(BoundsReport { rows, violations })
}
