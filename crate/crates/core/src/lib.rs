//! Exact computation of Dynkin indices for simple Lie algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] builds positive root systems from Cartan data and exposes the
//!   invariants everything else is phrased in (heights, the normalised form,
//!   `rho`, `rho_check`, Coxeter numbers, exponents).
//! * [`reps`] evaluates Dynkin indices of irreducible representations through
//!   the Weyl dimension formula.
//! * [`sl2index`] computes indices of sl2-subalgebras through several
//!   independent routes (partitions, adjoint branching, uniform formulas,
//!   Kostant's decomposition) and the principal/subregular difference.
//! * [`orbits`] orders nilpotent orbits of classical algebras and checks that
//!   the index strictly decreases towards orbit boundaries.
//! * [`identities`] evaluates the binomial identities obtained by computing
//!   the same index through two different test modules.
//! * [`table`] assembles the per-family summary of principal indices,
//!   differences and McKay degrees.
//! * [`verify`] bundles all of the above into named, bounded checks.
//!
//! All arithmetic is exact: integers are [`num_bigint::BigInt`] and
//! fractions are [`Rational`].

// matrix code reads best with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod identities;
pub mod orbits;
pub mod rational;
pub mod reps;
pub mod rootsys;
pub mod sl2index;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
pub use rootsys::{Family, LieType, Root, RootSystem};
pub use sl2index::{ClassicalKind, IndexReport, Partition, Sl2Module};
