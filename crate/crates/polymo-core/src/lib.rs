//! Exact matrix product operator (MPO) construction for one-dimensional
//! lattice Hamiltonians whose couplings grow as a polynomial multiplied by an
//! exponential of the site separation,
//!
//! ```text
//! H = Σ_{i<j} β^{j−i} P_k(j−i) X_i Y_j ,   P_k(x) = α_1 x + … + α_k x^k ,
//! ```
//!
//! with bond dimension exactly `k + 3` for a degree-`k` polynomial.
//!
//! The construction reduces to a triangular system of polynomial constraint
//! equations on the subdiagonals of a lower-triangular Toeplitz matrix.  The
//! crate builds that system from exact integer/rational combinatorics, solves
//! it in configurable-precision floating point, assembles the symbolic MPO,
//! and ships independent brute-force oracles that adjudicate every step.
//!
//! # Modules
//!
//! - [`combinatorics`]: exact binomials, Stirling and Eulerian numbers,
//!   integer partitions and arrangement counts.
//! - [`polybasis`]: polynomial specifications and the binomial-coefficient
//!   basis via the closed-form Hankel inverse.
//! - [`constraints`]: symbolic left-hand sides and exact right-hand sides of
//!   the constraint system.
//! - [`solver`]: the triangular solve producing the coefficient vector.
//! - [`mpo`]: Toeplitz/shift machinery and symbolic MPO assembly.
//! - [`verify`]: power-sum, coefficient-level, and dense-Hamiltonian oracles.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI, and serialization live in
//! the companion `polymo-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combinatorics;
pub mod constraints;
pub mod error;
pub mod matrix;
pub mod mpo;
pub mod polybasis;
pub mod real;
pub mod solver;
pub mod verify;

pub use combinatorics::Partition;
pub use constraints::{EtaEquation, PartitionMonomial};
pub use error::{Error, Result};
pub use mpo::{OpLabel, SymbolicMpo, ToeplitzL};
pub use polybasis::{BasisWeights, PolynomialSpec};
pub use real::Real;
pub use solver::{solve_coefficients, CoefficientVector, RhsSource};
pub use verify::LocalOperatorPair;
