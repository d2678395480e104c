//! Counting and structure of 132-avoiding permutations whose adjacent
//! entries differ by at most `m`.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: the permutation type, the 132 and adjacency predicates and
//!   the split around the maximum entry.
//! * [`enumerator`]: brute-force backtracking, the ground truth every other
//!   module is checked against.
//! * [`m2`]: exact structure of the `m = 2` class (the `B`/`C`/`D`
//!   subclasses, their constructors, bijections and counting recurrences).
//! * [`genfunc`]: integer polynomials, rational generating functions and a
//!   constant-coefficient recurrence fitter.
//! * [`asymptotics`]: dominant singularity, growth constant and amplitude for
//!   `m = 2`, plus convergence diagnostics.
//! * [`engine`]: interchangeable counting engines (brute force, closed
//!   form, recurrence, generating function).
//! * [`probe`]: growth profiles for arbitrary `m`.
//! * [`verify`]: check suites that run the structural statements against the
//!   brute-force oracle.
//! * [`cli`]: the `permlip` command line.

pub mod asymptotics;
pub mod cli;
pub mod engine;
pub mod enumerator;
pub mod genfunc;
pub mod m2;
pub mod perm;
pub mod probe;
pub mod verify;

mod error;

pub use enumerator::{BigCount, BruteForce};
pub use error::{Error, Result};
pub use perm::{ConstraintSpec, MaxSplit, Permutation};
