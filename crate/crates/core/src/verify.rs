//! Bounded verification sweeps over every invariant the library claims.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities;
use crate::orbits::{self, enumerate_orbits};
use crate::rational::{self, rat};
use crate::reps::{self, dynkin_index_irrep, HighestWeight};
use crate::rootsys::{unfolding_partner, LieType, RootSystem};
use crate::sl2index::{
    self, index_via_adjoint, principal_index, sl2_index_classical, ClassicalKind, Partition,
};
use crate::table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Table,
    Exceptional,
    Routes,
    Principal,
    Identities,
    Monotonicity,
    Structure,
    Bounds,
    Integrality,
    Minimal,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Table,
        Check::Exceptional,
        Check::Routes,
        Check::Principal,
        Check::Identities,
        Check::Monotonicity,
        Check::Structure,
        Check::Bounds,
        Check::Integrality,
        Check::Minimal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Table => "table",
            Check::Exceptional => "exceptional",
            Check::Routes => "routes",
            Check::Principal => "principal",
            Check::Identities => "identities",
            Check::Monotonicity => "monotonicity",
            Check::Structure => "structure",
            Check::Bounds => "bounds",
            Check::Integrality => "integrality",
            Check::Minimal => "minimal",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub max_classical_rank: usize,
    pub max_partition_size: usize,
    pub max_identity_n: usize,
    /// Rank bound for the integrality audit of irreducible representations.
    pub max_integrality_rank: usize,
    /// Largest fundamental-weight coordinate in the integrality audit.
    pub max_weight_coord: i64,
    pub checks: Vec<Check>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_classical_rank: 10,
            max_partition_size: 12,
            max_identity_n: 12,
            max_integrality_rank: 6,
            max_weight_coord: 2,
            checks: Check::ALL.to_vec(),
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        let bounds = [
            ("max_classical_rank", self.max_classical_rank),
            ("max_partition_size", self.max_partition_size),
            ("max_identity_n", self.max_identity_n),
            ("max_integrality_rank", self.max_integrality_rank),
        ];
        for (name, v) in bounds {
            if v < 2 {
                return Err(Error::Parse(format!("{name} must be at least 2")));
            }
        }
        if self.max_weight_coord < 0 {
            return Err(Error::Parse("max_weight_coord must be nonnegative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }
}

/// Collects cases and failures for one check.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.failures.push(e.to_string());
                None
            }
        }
    }
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    config.validate()?;
    let outcomes = config
        .checks
        .iter()
        .map(|&check| {
            let mut t = Tally::default();
            match check {
                Check::Table => check_table(config, &mut t),
                Check::Exceptional => check_exceptional(&mut t),
                Check::Routes => check_routes(config, &mut t),
                Check::Principal => check_principal(config, &mut t),
                Check::Identities => check_identities(config, &mut t),
                Check::Monotonicity => check_monotonicity(config, &mut t),
                Check::Structure => check_structure(config, &mut t),
                Check::Bounds => check_bounds(config, &mut t),
                Check::Integrality => check_integrality(config, &mut t),
                Check::Minimal => check_minimal(config, &mut t),
            }
            CheckOutcome {
                check,
                cases: t.cases,
                failures: t.failures,
            }
        })
        .collect();
    Ok(VerifyReport {
        config: config.clone(),
        outcomes,
    })
}

fn check_table(config: &VerifyConfig, t: &mut Tally) {
    for ty in sl2index::table_types(config.max_classical_rank) {
        let Some(col) = t.absorb(table::column(ty)) else { continue };
        let (principal, d) = table::listed_values(ty);
        t.expect(col.principal_index == principal, || {
            format!(
                "{ty}: principal index {} != listed {}",
                rational::render(&col.principal_index),
                rational::render(&principal)
            )
        });
        t.expect(col.d == d, || {
            format!(
                "{ty}: D {} != listed {}",
                rational::render(&col.d),
                rational::render(&d)
            )
        });
    }
}

fn check_exceptional(t: &mut Tally) {
    for ty in LieType::exceptional() {
        let rs = RootSystem::build(ty);
        if let Some(e) = t.absorb(reps::exceptional_simplest_embedding(&rs)) {
            t.expect(e.recomputed == rat(e.table_index), || {
                format!("{ty}: simplest embedding index mismatch")
            });
        }
    }
}

fn check_routes(config: &VerifyConfig, t: &mut Tally) {
    for kind in ClassicalKind::ALL {
        for n in 2..=config.max_partition_size {
            let Ok(parts) = enumerate_orbits(kind, n) else { continue };
            for p in parts.iter().filter(|p| !p.is_zero_orbit()) {
                if kind == ClassicalKind::So && n < 3 {
                    continue;
                }
                let direct = sl2_index_classical(kind, p);
                let adjoint = index_via_adjoint(kind, p);
                t.expect(direct.is_ok() && direct == adjoint, || {
                    format!("{kind}{n} {p}: {direct:?} vs {adjoint:?}")
                });
                if let Ok(v) = &direct {
                    t.expect(v.is_integer(), || {
                        format!("{kind}{n} {p}: half-integral index {}", rational::render(v))
                    });
                }
            }
        }
    }
}

fn check_principal(config: &VerifyConfig, t: &mut Tally) {
    for ty in LieType::all_up_to(config.max_classical_rank) {
        let report = principal_index(&RootSystem::build(ty));
        t.expect(report.agree(), || format!("{ty}: routes {:?}", report.routes));
    }
}

fn check_identities(config: &VerifyConfig, t: &mut Tally) {
    for kind in ClassicalKind::ALL {
        match identities::sweep(kind, config.max_identity_n) {
            Ok(res) => t.cases += res.instances.len(),
            Err(e) => t.failures.push(e.to_string()),
        }
    }
    // each right side also equals the adjoint-branching index
    for kind in ClassicalKind::ALL {
        for n in 3..=config.max_identity_n {
            let Ok(parts) = enumerate_orbits(kind, n) else { continue };
            for p in parts.iter().filter(|p| !p.is_zero_orbit()) {
                let rhs = identities::rhs(kind, p);
                let Ok(adj) = index_via_adjoint(kind, p) else { continue };
                let scaled = match kind {
                    ClassicalKind::So => adj * rat(2),
                    _ => adj,
                };
                t.expect(rhs.as_ref() == Ok(&scaled), || {
                    format!("{kind} {p}: identity rhs {rhs:?} vs adjoint route")
                });
            }
        }
    }
}

fn check_monotonicity(config: &VerifyConfig, t: &mut Tally) {
    for kind in ClassicalKind::ALL {
        for n in 2..=config.max_partition_size {
            if kind == ClassicalKind::Sp && n % 2 == 1 {
                continue;
            }
            if kind == ClassicalKind::So && n < 3 {
                continue;
            }
            if let Some(v) = t.absorb(orbits::monotonicity_violations(kind, n)) {
                t.expect(v.is_empty(), || format!("{kind}{n}: cover violations {v:?}"));
            }
            if n <= config.max_partition_size.min(10) {
                if let Some(v) = t.absorb(orbits::comparable_pair_violations(kind, n)) {
                    t.expect(v.is_empty(), || format!("{kind}{n}: pair violations {v:?}"));
                }
            }
        }
    }
    for n in 1..=config.max_partition_size {
        t.expect(orbits::move_closure_equals_dominance(n), || {
            format!("partitions of {n}: move closure differs from dominance")
        });
    }
}

fn check_structure(config: &VerifyConfig, t: &mut Tally) {
    for ty in LieType::all_up_to(config.max_classical_rank) {
        let rs = RootSystem::build(ty);
        t.expect(rs.strange_formula_check(), || format!("{ty}: strange formula"));
        t.expect(rs.height_pairing_check(), || format!("{ty}: (rho_check, gamma) != ht"));
        let exps = rs.exponents();
        let total: i64 = exps.iter().map(|m| 2 * m + 1).sum();
        t.expect(
            exps.len() == ty.rank()
                && total == rs.dimension() as i64
                && exps.last() == Some(&(rs.coxeter_number() - 1)),
            || format!("{ty}: exponents {exps:?}"),
        );
        let rank = ty.rank();
        if let Some(partner) = unfolding_partner(ty).filter(|_| rank <= 8) {
            let sums = rs.height_sums();
            let folded = sums.long_sum + rs.r() * sums.short_sum;
            let unfolded = RootSystem::build(partner).total_height();
            t.expect(folded == unfolded, || {
                format!("{ty} vs {partner}: height sums {folded} != {unfolded}")
            });
        }
    }
}

fn check_bounds(config: &VerifyConfig, t: &mut Tally) {
    if let Some(report) = t.absorb(sl2index::difference_bounds(config.max_classical_rank)) {
        t.cases += report.rows.len();
        t.failures.extend(report.violations);
    }
}

fn check_integrality(config: &VerifyConfig, t: &mut Tally) {
    let bound = config.max_weight_coord;
    for ty in LieType::all_up_to(config.max_integrality_rank) {
        let rs = RootSystem::build(ty);
        let rank = ty.rank();
        let mut coords = vec![0i64; rank];
        loop {
            let w = HighestWeight::new(coords.clone(), rank).expect("nonnegative");
            let r = dynkin_index_irrep(&rs, &w);
            t.expect(r.is_integer, || {
                format!("{ty} {coords:?}: index {}", rational::render(&r.index))
            });
            // odometer increment
            let mut i = 0;
            while i < rank && coords[i] == bound {
                coords[i] = 0;
                i += 1;
            }
            if i == rank {
                break;
            }
            coords[i] += 1;
        }
    }
}

fn check_minimal(config: &VerifyConfig, t: &mut Tally) {
    let top = config.max_partition_size.max(20);
    for n in 2..=top {
        for kind in [ClassicalKind::Sl, ClassicalKind::Sp] {
            if kind == ClassicalKind::Sp && n % 2 == 1 {
                continue;
            }
            let p = Partition::minimal_sl(n);
            let v = sl2_index_classical(kind, &p);
            t.expect(v == Ok(rat(1)), || format!("{kind}{n} {p}: {v:?}"));
        }
        if n >= 5 {
            let mut parts = vec![2, 2];
            parts.extend(std::iter::repeat_n(1, n - 4));
            let p = Partition::new(parts).expect("valid");
            let v = sl2_index_classical(ClassicalKind::So, &p);
            t.expect(v == Ok(rat(1)), || format!("so{n} {p}: {v:?}"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_roundtrip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>(), Ok(c));
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn config_bounds() {
        let mut c = VerifyConfig::default();
        assert!(c.validate().is_ok());
        c.max_identity_n = 1;
        assert!(c.validate().is_err());
    }

    #[test]
    fn small_run_passes() {
        let config = VerifyConfig {
            max_classical_rank: 5,
            max_partition_size: 7,
            max_identity_n: 7,
            max_integrality_rank: 3,
            max_weight_coord: 1,
            checks: Check::ALL.to_vec(),
        };
        let report = run(&config).unwrap();
        for o in &report.outcomes {
            assert!(o.passed(), "{}: {:?}", o.check, o.failures);
            assert!(o.cases > 0, "{}", o.check);
        }
    }
}
