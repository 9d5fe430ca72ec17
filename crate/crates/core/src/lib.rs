//! Exact enumeration and verification of quasipolarities and strong
//! dichotomies of `Z_n` under the affine group `x ↦ vx + u`, together with
//! the antichain cardinality bounds they satisfy.
//!
//! Everything here runs at desk scale with exact integer arithmetic. Closed
//! forms are never trusted on their own: each one is paired with a
//! brute-force oracle (full group scans, exhaustive orbit closure) and the
//! two paths are required to agree.
//!
//! The crate is organized around the objects themselves:
//!
//! * [`residue`] — modular arithmetic over even `n` and the gcd invariants
//!   `σ`, `τ`, `u₀` of a unit.
//! * [`affine`] — the group of maps `x ↦ vx + u`, conjugation, and the
//!   quasipolarity characterization.
//! * [`perm`] — explicit permutation groups (symmetric, dihedral, and the
//!   affine group realized on points) used as oracles.
//! * [`dichotomy`] — half-size subsets of `Z_n` as bit masks, the action on
//!   them, rigidity/autocomplementarity tests, and the `M_q` families.
//! * [`antichain`] — orbit canonicalization, strong-class extraction, and
//!   exact evaluation of the Sperner/Purdy/EKR/conjugacy-class bounds.
//! * [`golden`] — the stable on-disk format for strong-class inventories.
//! * [`verify`] — the named invariant suite behind the `verify` CLI command.
//!
//! With the default `parallel` feature the heavy scans have `par_*` variants
//! that split mask ranges across rayon workers; results are merged by
//! canonical mask, so output is identical to the sequential path regardless
//! of worker count.

pub mod affine;
pub mod antichain;
pub mod dichotomy;
mod error;
pub mod golden;
pub mod perm;
pub mod rational;
pub mod residue;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
