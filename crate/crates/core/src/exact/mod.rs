//! Exact rational linear algebra, lattices and linear programming.

pub mod fourier_motzkin;
pub mod lattice;
pub mod lp;
pub mod matrix;
pub mod polyhedra;
pub mod rational;
pub mod system;

pub use lattice::{lattice_member, IntegerLattice};
pub use lp::{lp_solve, Direction, LpOutcome, LpStatus};
pub use matrix::RatMatrix;
pub use polyhedra::{cone_positive_support, poly_contains};
pub use rational::Rational;
pub use system::{AffineFunctional, InequalitySystem, Sense};
