//! Test-only oracles. Nothing here calls into the crate's index code; the
//! crate is only used for its value types and the Cartan matrices.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use dynkin_core::rational::frac;
use dynkin_core::{ClassicalKind, Family, LieType, Rational};

pub fn c3(m: i64) -> i64 {
    if m < 3 {
        0
    } else {
        m * (m - 1) * (m - 2) / 6
    }
}

pub fn c2(m: i64) -> i64 {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

/// Partitions of `n`, largest part first, by plain recursion.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn admissible(kind: ClassicalKind, p: &[usize]) -> bool {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in p {
        *mult.entry(x).or_default() += 1;
    }
    let bad_parity = match kind {
        ClassicalKind::Sl => return true,
        ClassicalKind::Sp => 1,
        ClassicalKind::So => 0,
    };
    mult.iter()
        .all(|(&part, &m)| part % 2 != bad_parity || m % 2 == 0)
}

pub fn is_zero(p: &[usize]) -> bool {
    p.iter().all(|&x| x == 1)
}

/// Strict dominance via partial sums.
pub fn strictly_dominates(p: &[usize], q: &[usize]) -> bool {
    if p == q {
        return false;
    }
    let (mut sp, mut sq) = (0, 0);
    for i in 0..p.len().max(q.len()) {
        sp += p.get(i).copied().unwrap_or(0);
        sq += q.get(i).copied().unwrap_or(0);
        if sp < sq {
            return false;
        }
    }
    true
}

/// Eigenvalues of `h` on `V = ⊕ R_{λ_i - 1}`.
pub fn vector_weights(p: &[usize]) -> Vec<i64> {
    p.iter()
        .flat_map(|&l| {
            let d = l as i64 - 1;
            (0..=d).map(move |k| d - 2 * k)
        })
        .collect()
}

/// Eigenvalues of `h` on `sl(V)`, `sp(V) = S^2 V`, `so(V) = Λ^2 V`.
pub fn adjoint_weights(kind: ClassicalKind, p: &[usize]) -> Vec<i64> {
    let v = vector_weights(p);
    let mut out = Vec::new();
    match kind {
        ClassicalKind::Sl => {
            for &a in &v {
                for &b in &v {
                    out.push(a - b);
                }
            }
            let zero = out.iter().position(|&w| w == 0).unwrap();
            out.swap_remove(zero);
        }
        ClassicalKind::Sp | ClassicalKind::So => {
            for i in 0..v.len() {
                let start = if kind == ClassicalKind::Sp { i } else { i + 1 };
                for j in start..v.len() {
                    out.push(v[i] + v[j]);
                }
            }
        }
    }
    out
}

/// `½ Σ w²`, the Dynkin index of an sl2-module given by its weights.
pub fn index_from_weights(ws: &[i64]) -> i64 {
    let s: i64 = ws.iter().map(|w| w * w).sum();
    assert_eq!(s % 2, 0);
    s / 2
}

pub fn classical_h_star(kind: ClassicalKind, n: usize) -> i64 {
    let n = n as i64;
    match kind {
        ClassicalKind::Sl => n,
        ClassicalKind::Sp => n / 2 + 1,
        ClassicalKind::So => n - 2,
    }
}

/// Index of `A_1(e)` in `g(V)` from the weights of the adjoint module.
pub fn oracle_sl2_index(kind: ClassicalKind, p: &[usize]) -> Rational {
    let n: usize = p.iter().sum();
    frac(
        index_from_weights(&adjoint_weights(kind, p)),
        2 * classical_h_star(kind, n),
    )
}

/// Dual Coxeter numbers from the standard tables.
pub fn h_star(t: LieType) -> i64 {
    let n = t.rank() as i64;
    match (t.family(), t.rank()) {
        (Family::A, _) => n + 1,
        (Family::B, _) => 2 * n - 1,
        (Family::C, _) => n + 1,
        (Family::D, _) => 2 * n - 2,
        (Family::E, 6) => 12,
        (Family::E, 7) => 18,
        (Family::E, _) => 30,
        (Family::F, _) => 9,
        (Family::G, _) => 4,
    }
}

pub fn coxeter(t: LieType) -> i64 {
    let n = t.rank() as i64;
    match (t.family(), t.rank()) {
        (Family::A, _) => n + 1,
        (Family::B, _) | (Family::C, _) => 2 * n,
        (Family::D, _) => 2 * n - 2,
        (Family::E, 6) => 12,
        (Family::E, 7) => 18,
        (Family::E, _) => 30,
        (Family::F, _) => 12,
        (Family::G, _) => 6,
    }
}

/// Exponents from the standard tables.
pub fn exponents(t: LieType) -> Vec<i64> {
    let n = t.rank() as i64;
    let mut e: Vec<i64> = match (t.family(), t.rank()) {
        (Family::A, _) => (1..=n).collect(),
        (Family::B, _) | (Family::C, _) => (1..=n).map(|i| 2 * i - 1).collect(),
        (Family::D, _) => (1..n).map(|i| 2 * i - 1).chain([n - 1]).collect(),
        (Family::E, 6) => vec![1, 4, 5, 7, 8, 11],
        (Family::E, 7) => vec![1, 5, 7, 9, 11, 13, 17],
        (Family::E, _) => vec![1, 7, 11, 13, 17, 19, 23, 29],
        (Family::F, _) => vec![1, 5, 7, 11],
        (Family::G, _) => vec![1, 5],
    };
    e.sort();
    e
}

pub fn dimension(t: LieType) -> i64 {
    t.rank() as i64 * (coxeter(t) + 1)
}

/// Coefficients of the highest coroot in the simple coroots (Bourbaki
/// labelling), for the exceptional types.
pub fn comarks(t: LieType) -> Vec<i64> {
    match (t.family(), t.rank()) {
        (Family::E, 6) => vec![1, 2, 2, 3, 2, 1],
        (Family::E, 7) => vec![2, 2, 3, 4, 3, 2, 1],
        (Family::E, 8) => vec![2, 3, 4, 6, 5, 4, 3, 2],
        (Family::F, _) => vec![2, 3, 2, 1],
        (Family::G, _) => vec![1, 2],
        _ => panic!("no comarks tabulated for {t}"),
    }
}

/// Weyl group orbit of a weight (fundamental-weight coordinates) under the
/// simple reflections `s_i(μ) = μ - μ_i α_i`.
pub fn weyl_orbit(cartan: &[Vec<i64>], lambda: &[i64]) -> BTreeSet<Vec<i64>> {
    let n = cartan.len();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([lambda.to_vec()]);
    seen.insert(lambda.to_vec());
    while let Some(mu) = queue.pop_front() {
        for i in 0..n {
            if mu[i] == 0 {
                continue;
            }
            // α_i has j-th coordinate <α_i, α_j^vee> = a[j][i]
            let nu: Vec<i64> = (0..n).map(|j| mu[j] - mu[i] * cartan[j][i]).collect();
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen
}

/// Representation given as a Weyl orbit plus some zero weights: returns
/// `(dim, ½ Σ <μ, θ^vee>²)`.
pub fn orbit_rep_index(t: LieType, lambda: &[i64], zeros: usize) -> (usize, Rational) {
    let marks = comarks(t);
    let orbit = weyl_orbit(&t.cartan_matrix(), lambda);
    let sum: i64 = orbit
        .iter()
        .map(|mu| {
            let pairing: i64 = mu.iter().zip(&marks).map(|(a, b)| a * b).sum();
            pairing * pairing
        })
        .sum();
    (orbit.len() + zeros, frac(sum, 2))
}
