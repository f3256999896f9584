//! Closure order on nilpotent orbits of classical algebras.
//!
//! Orbits are labelled by partitions of `dim V` satisfying the parity
//! conditions of their kind, and the closure order is dominance of partitions
//! restricted to those labels. For `sl` the covering relations are exactly the
//! two elementary degenerations implemented in [`degeneration_moves`].

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::sl2index::{sl2_index_classical, validate_partition, ClassicalKind, Partition};

/// All partitions of `n`, in reverse-lexicographic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("generated partitions are valid"));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions labelling nilpotent orbits of `g(V)` with `dim V = n`.
pub fn enumerate_orbits(kind: ClassicalKind, n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::BadPartition("dim V must be at least 1".into()));
    }
    if kind == ClassicalKind::Sp && n % 2 == 1 {
        return Err(Error::DegenerateClassical { kind, dim: n });
    }
    Ok(all_partitions(n)
        .into_iter()
        .filter(|p| validate_partition(kind, p))
        .collect())
}

/// `p >= q` in dominance order; both must have the same size.
pub fn dominates(p: &Partition, q: &Partition) -> bool {
    let len = p.len().max(q.len());
    let (mut sp, mut sq) = (0, 0);
    for i in 0..len {
        sp += p.parts().get(i).copied().unwrap_or(0);
        sq += q.parts().get(i).copied().unwrap_or(0);
        if sp < sq {
            return false;
        }
    }
    true
}

/// Partitions reached by one elementary degeneration, with the partition
/// padded by a trailing zero:
///
/// 1. if `λ_i >= λ_{i+1} + 2`, replace `(λ_i, λ_{i+1})` by
///    `(λ_i - 1, λ_{i+1} + 1)`;
/// 2. replace a fragment `(a+1, a, ..., a, a-1)` by `(a, a, ..., a, a)`.
pub fn degeneration_moves(p: &Partition) -> Vec<Partition> {
    let mut padded: Vec<usize> = p.parts().to_vec();
    padded.push(0);
    let mut out: BTreeSet<Partition> = BTreeSet::new();
    let finish = |mut v: Vec<usize>| {
        v.retain(|&x| x > 0);
        Partition::new(v).expect("moves keep the parts decreasing")
    };
    for i in 0..padded.len() - 1 {
        if padded[i] >= padded[i + 1] + 2 {
            let mut v = padded.clone();
            v[i] -= 1;
            v[i + 1] += 1;
            out.insert(finish(v));
        }
        // fragment starting at i: a+1, a^k, a-1
        if padded[i] >= 1 {
            let a = padded[i] - 1;
            if a == 0 {
                continue;
            }
            let mut j = i + 1;
            while j < padded.len() && padded[j] == a {
                j += 1;
            }
            if j < padded.len() && padded[j] + 1 == a {
                let mut v = padded.clone();
                v[i] -= 1;
                v[j] += 1;
                out.insert(finish(v));
            }
        }
    }
    out.into_iter().rev().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPoset {
    pub kind: ClassicalKind,
    pub n: usize,
    /// Admissible partitions in reverse-lexicographic order.
    pub nodes: Vec<Partition>,
    /// `(upper, lower)` node indices of covering pairs.
    pub covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    /// Index of `A_1(e)` for each node; zero for the zero orbit.
    pub fn indices(&self) -> Result<Vec<Rational>> {
        self.nodes
            .iter()
            .map(|p| {
                if p.is_zero_orbit() {
                    Ok(Rational::default())
                } else {
                    sl2_index_classical(self.kind, p)
                }
            })
            .collect()
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.nodes.iter().position(|q| q == p)
    }

    pub fn covers_as_partitions(&self) -> BTreeSet<(Partition, Partition)> {
        self.covers
            .iter()
            .map(|&(u, l)| (self.nodes[u].clone(), self.nodes[l].clone()))
            .collect()
    }
}

/// Covering pairs of dominance order restricted to `nodes`.
fn restricted_covers(nodes: &[Partition]) -> Vec<(usize, usize)> {
    let m = nodes.len();
    let above: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| i != j && dominates(&nodes[i], &nodes[j])).collect())
        .collect();
    let mut covers = Vec::new();
    for u in 0..m {
        for l in 0..m {
            if above[u][l] && !(0..m).any(|k| above[u][k] && above[k][l]) {
                covers.push((u, l));
            }
        }
    }
    covers
}

/// The orbit poset of `g(V)`, `dim V = n`.
///
/// For `sl` the covers are also generated by [`degeneration_moves`] and the
/// two sets are checked to coincide.
pub fn build_poset(kind: ClassicalKind, n: usize) -> Result<OrbitPoset> {
    let nodes = enumerate_orbits(kind, n)?;
    let covers = restricted_covers(&nodes);
    let poset = OrbitPoset {
        kind,
        n,
        nodes,
        covers,
    };
    if kind == ClassicalKind::Sl {
        let from_moves = move_covers(&poset);
        if from_moves != poset.covers_as_partitions() {
            return Err(Error::Inconsistent(format!(
                "sl_{n}: degeneration moves do not reproduce the dominance covers"
            )));
        }
    }
    Ok(poset)
}

fn move_covers(poset: &OrbitPoset) -> BTreeSet<(Partition, Partition)> {
    poset
        .nodes
        .iter()
        .flat_map(|p| {
            degeneration_moves(p)
                .into_iter()
                .map(move |q| (p.clone(), q))
        })
        .collect()
}

/// Covers of the restricted dominance order that are not a single move, and
/// moves between admissible partitions that are not covers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveDiscrepancies {
    pub covers_not_moves: Vec<(Partition, Partition)>,
    pub moves_not_covers: Vec<(Partition, Partition)>,
}

pub fn move_discrepancies(poset: &OrbitPoset) -> MoveDiscrepancies {
    let covers = poset.covers_as_partitions();
    let moves: BTreeSet<(Partition, Partition)> = move_covers(poset)
        .into_iter()
        .filter(|(_, q)| validate_partition(poset.kind, q))
        .collect();
    MoveDiscrepancies {
        covers_not_moves: covers.difference(&moves).cloned().collect(),
        moves_not_covers: moves.difference(&covers).cloned().collect(),
    }
}

/// Checks that the reflexive-transitive closure of the degeneration moves on
/// partitions of `n` equals dominance order.
pub fn move_closure_equals_dominance(n: usize) -> bool {
    let nodes = all_partitions(n);
    let pos: HashMap<&Partition, usize> = nodes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let m = nodes.len();
    let mut reach = vec![vec![false; m]; m];
    // reverse-lex order is a linear extension, so one backward pass suffices
    for i in (0..m).rev() {
        reach[i][i] = true;
        for q in degeneration_moves(&nodes[i]) {
            let j = pos[&q];
            debug_assert!(j > i);
            let (head, tail) = reach.split_at_mut(j);
            for (k, &r) in tail[0].iter().enumerate() {
                if r {
                    head[i][k] = true;
                }
            }
        }
    }
    (0..m).all(|i| (0..m).all(|j| reach[i][j] == dominates(&nodes[i], &nodes[j])))
}

/// Pairs `(upper, lower)` violating strict decrease of the index.
pub type Violations = Vec<(Partition, Partition)>;

/// Covering pairs along which the index fails to decrease strictly. The zero
/// orbit is excluded.
pub fn monotonicity_violations(kind: ClassicalKind, n: usize) -> Result<Violations> {
    let poset = build_poset(kind, n)?;
    let idx = poset.indices()?;
    Ok(poset
        .covers
        .iter()
        .filter(|&&(_, l)| !poset.nodes[l].is_zero_orbit())
        .filter(|&&(u, l)| idx[l] >= idx[u])
        .map(|&(u, l)| (poset.nodes[u].clone(), poset.nodes[l].clone()))
        .collect())
}

pub fn monotonicity_check(kind: ClassicalKind, n: usize) -> Result<bool> {
    Ok(monotonicity_violations(kind, n)?.is_empty())
}

/// Comparable pairs of nonzero admissible partitions along which the index
/// fails to decrease strictly.
pub fn comparable_pair_violations(kind: ClassicalKind, n: usize) -> Result<Violations> {
    let nodes: Vec<Partition> = enumerate_orbits(kind, n)?
        .into_iter()
        .filter(|p| !p.is_zero_orbit())
        .collect();
    let idx = nodes
        .iter()
        .map(|p| sl2_index_classical(kind, p))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (i, p) in nodes.iter().enumerate() {
        for (j, q) in nodes.iter().enumerate() {
            if i != j && dominates(p, q) && idx[j] >= idx[i] {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetNode {
    pub partition: Partition,
    #[serde(with = "rational::serde_str")]
    pub index: Rational,
    pub zero_orbit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetExport {
    pub kind: ClassicalKind,
    pub n: usize,
    pub nodes: Vec<PosetNode>,
    pub covers: Vec<(usize, usize)>,
}

pub fn export(poset: &OrbitPoset) -> Result<PosetExport> {
    let idx = poset.indices()?;
    Ok(PosetExport {
        kind: poset.kind,
        n: poset.n,
        nodes: poset
            .nodes
            .iter()
            .zip(idx)
            .map(|(p, index)| PosetNode {
                zero_orbit: p.is_zero_orbit(),
                partition: p.clone(),
                index,
            })
            .collect(),
        covers: poset.covers.clone(),
    })
}

/// Hasse diagram in Graphviz DOT, edges pointing from an orbit to the orbits
/// it covers.
pub fn to_dot(poset: &OrbitPoset) -> Result<String> {
    let data = export(poset)?;
    let mut out = String::new();
    writeln!(out, "digraph \"{}_{}\" {{", data.kind, data.n).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, node) in data.nodes.iter().enumerate() {
        let index = if node.zero_orbit {
            "0 (zero orbit)".to_string()
        } else {
            rational::render(&node.index)
        };
        writeln!(
            out,
            "  n{i} [label=\"{}\\nind {index}\"];",
            node.partition
        )
        .unwrap();
    }
    for (u, l) in &data.covers {
        writeln!(out, "  n{u} -> n{l};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use ClassicalKind::{Sl, So, Sp};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ps(list: &[&[usize]]) -> Vec<Partition> {
        list.iter().map(|x| p(x)).collect()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| all_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert!(all_partitions(0).is_empty());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_orbits(Sl, 4).unwrap(),
            ps(&[&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]])
        );
        assert_eq!(
            enumerate_orbits(Sp, 4).unwrap(),
            ps(&[&[4], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]])
        );
        assert_eq!(
            enumerate_orbits(So, 5).unwrap(),
            ps(&[&[5], &[3, 1, 1], &[2, 2, 1], &[1, 1, 1, 1, 1]])
        );
        assert!(enumerate_orbits(Sp, 5).is_err());
        assert!(enumerate_orbits(Sl, 0).is_err());
    }

    #[test]
    fn move_examples() {
        assert_eq!(degeneration_moves(&p(&[4])), ps(&[&[3, 1]]));
        assert_eq!(degeneration_moves(&p(&[3, 1])), ps(&[&[2, 2]]));
        assert_eq!(degeneration_moves(&p(&[2, 2])), ps(&[&[2, 1, 1]]));
        assert_eq!(degeneration_moves(&p(&[2, 1])), ps(&[&[1, 1, 1]]));
        assert_eq!(degeneration_moves(&p(&[1, 1])), vec![]);
        // (3, 2, 2, 1) -> (2, 2, 2, 2) collapses a fragment with k = 2
        assert!(degeneration_moves(&p(&[3, 2, 2, 1])).contains(&p(&[2, 2, 2, 2])));
    }

    #[test]
    fn sl4_is_a_chain() {
        let poset = build_poset(Sl, 4).unwrap();
        assert_eq!(poset.covers, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(
            poset.indices().unwrap(),
            vec![rat(10), rat(4), rat(2), rat(1), rat(0)]
        );
    }

    #[test]
    fn sl6_has_incomparable_pair() {
        let poset = build_poset(Sl, 6).unwrap();
        let a = p(&[3, 3]);
        let b = p(&[4, 1, 1]);
        assert!(!dominates(&a, &b) && !dominates(&b, &a));
        assert!(poset.position(&a).is_some() && poset.position(&b).is_some());
    }

    #[test]
    fn sp2_single_nonzero_node() {
        let poset = build_poset(Sp, 2).unwrap();
        assert_eq!(poset.nodes, ps(&[&[2], &[1, 1]]));
        assert_eq!(poset.covers, vec![(0, 1)]);
    }

    #[test]
    fn monotonicity_examples() {
        assert!(monotonicity_check(Sl, 4).unwrap());
        assert!(monotonicity_check(Sp, 6).unwrap());
        assert!(monotonicity_check(So, 8).unwrap());
        let so8 = build_poset(So, 8).unwrap();
        let very_even = so8.position(&p(&[4, 4])).unwrap();
        assert!(so8.covers.iter().any(|&(u, l)| u == very_even || l == very_even));
    }

    #[test]
    fn moves_generate_dominance() {
        for n in 1..=9 {
            assert!(move_closure_equals_dominance(n), "n = {n}");
        }
    }

    #[test]
    fn dot_output_shape() {
        let dot = to_dot(&build_poset(Sl, 3).unwrap()).unwrap();
        assert!(dot.starts_with("digraph \"sl_3\" {"));
        assert!(dot.contains("n0 [label=\"(3)\\nind 4\"];"));
        assert!(dot.contains("n2 [label=\"(1,1,1)\\nind 0 (zero orbit)\"];"));
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
