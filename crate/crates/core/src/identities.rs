//! Binomial identities from computing one index with two test modules.
//!
//! For a partition `λ` of `N`, the left side `sum C(λ_i + 1, 3)` is the index
//! of the sl2 in `V`; each right side is the index of the same sl2 in the
//! adjoint module of `sl(V)`, `sp(V)` or `so(V)`, divided by the appropriate
//! normalising factor. The identities hold for every partition, regardless of
//! parity conditions.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::all_partitions;
use crate::rational::{self, binom3, from_big, rat, Rational};
use crate::sl2index::{ClassicalKind, Partition};

/// `sum C(λ_i + 1, 3)`.
pub fn lhs(p: &Partition) -> BigInt {
    p.parts().iter().map(|&l| binom3(l as i64 + 1)).sum()
}

/// `sum_{i<j} sum_{k=0}^{λ_j - 1} C(λ_i + λ_j - 2k, 3)`.
fn cross_terms(parts: &[i64]) -> BigInt {
    let mut acc = BigInt::default();
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            for k in 0..b.min(a) {
                acc += binom3(a + b - 2 * k);
            }
        }
    }
    acc
}

fn as_i64(p: &Partition) -> Vec<i64> {
    p.parts().iter().map(|&x| x as i64).collect()
}

/// `(1 / 2N) sum_{i,j} sum_{k=0}^{min(λ_i,λ_j) - 1} C(λ_i + λ_j - 2k, 3)`.
pub fn rhs_sl(p: &Partition) -> Rational {
    let parts = as_i64(p);
    let mut acc = BigInt::default();
    for &a in &parts {
        for &b in &parts {
            for k in 0..a.min(b) {
                acc += binom3(a + b - 2 * k);
            }
        }
    }
    from_big(acc) / rat(2 * p.size() as i64)
}

/// Symplectic right side, with denominator `N + 2`.
pub fn rhs_sp(p: &Partition) -> Rational {
    let parts = as_i64(p);
    let mut acc = cross_terms(&parts);
    for &l in &parts {
        for k in 0..=(l - 1) / 2 {
            acc += binom3(2 * l - 4 * k);
        }
    }
    from_big(acc) / rat(p.size() as i64 + 2)
}

/// Orthogonal right side, with denominator `N - 2`. Undefined for `N = 2`.
pub fn rhs_so(p: &Partition) -> Result<Rational> {
    let n = p.size();
    if n == 2 {
        return Err(Error::DegenerateClassical {
            kind: ClassicalKind::So,
            dim: n,
        });
    }
    let parts = as_i64(p);
    let mut acc = cross_terms(&parts);
    for &l in &parts {
        for k in 1..=l / 2 {
            acc += binom3(2 * l + 2 - 4 * k);
        }
    }
    Ok(from_big(acc) / rat(n as i64 - 2))
}

pub fn rhs(family: ClassicalKind, p: &Partition) -> Result<Rational> {
    match family {
        ClassicalKind::Sl => Ok(rhs_sl(p)),
        ClassicalKind::Sp => Ok(rhs_sp(p)),
        ClassicalKind::So => rhs_so(p),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityInstance {
    pub family: ClassicalKind,
    pub partition: Partition,
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
    pub holds: bool,
}

impl IdentityInstance {
    pub fn evaluate(family: ClassicalKind, p: &Partition) -> Result<Self> {
        let lhs = from_big(lhs(p));
        let rhs = rhs(family, p)?;
        Ok(IdentityInstance {
            family,
            partition: p.clone(),
            holds: lhs == rhs,
            lhs,
            rhs,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepResult {
    pub family: ClassicalKind,
    pub max_n: usize,
    pub instances: Vec<IdentityInstance>,
    /// Sizes skipped because the identity's denominator vanishes.
    pub skipped_sizes: Vec<usize>,
}

impl SweepResult {
    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.instances
            .iter()
            .map(|i| serde_json::to_string(i).expect("serialisable") + "\n")
            .collect()
    }
}

/// Evaluates the identity on every partition of every `n <= max_n`, stopping
/// at the first counterexample.
pub fn sweep(family: ClassicalKind, max_n: usize) -> Result<SweepResult> {
    let mut instances = Vec::new();
    let mut skipped_sizes = Vec::new();
    for n in 1..=max_n {
        if family == ClassicalKind::So && n == 2 {
            skipped_sizes.push(n);
            continue;
        }
        for p in all_partitions(n) {
            let inst = IdentityInstance::evaluate(family, &p)?;
            if !inst.holds {
                return Err(Error::Inconsistent(format!(
                    "{family} identity fails at {p}: lhs {}, rhs {}",
                    rational::render(&inst.lhs),
                    rational::render(&inst.rhs)
                )));
            }
            instances.push(inst);
        }
    }
    Ok(SweepResult {
        family,
        max_n,
        instances,
        skipped_sizes,
    })
}
