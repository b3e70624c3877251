//! Nonhomogeneous linear patterns on numerical semigroups.
//!
//! A *pattern* is a linear polynomial `a1*x1 + ... + an*xn + a0` with nonzero
//! coefficients. A numerical semigroup admits it when every nonincreasing
//! sequence of nonzero members evaluates to a member. This crate provides
//!
//! * [`NumericalSemigroup`]: exact bitmap arithmetic (Apéry sets, minimal
//!   generators, intersections, quotients, Frobenius adjunction);
//! * [`pattern`]: admissibility classification, admissible multiplicities and
//!   strong admissibility;
//! * [`admission`]: an exact, finite decision procedure for admission with
//!   witnesses;
//! * [`variety`]: the tree of all multiplicity-`m` semigroups admitting a
//!   strongly admissible pattern, closures and minimal generating systems
//!   relative to it, and the finiteness criterion;
//! * [`bounds`]: Geil–Matsumoto, Lewittes and Beelen–Ruano bounds;
//! * [`oracle`]: brute-force reference implementations for testing.
//!
//! ```
//! use patsemi::{admission, variety, NumericalSemigroup, Pattern};
//!
//! let p: Pattern = "x1+x2-1".parse().unwrap();
//! assert!(admission::admits(&NumericalSemigroup::ordinary(5), &p).unwrap());
//!
//! let tree = variety::tree_enumerate(&p, 5, variety::GenusLimit::exhaustive()).unwrap();
//! assert_eq!(tree.len(), 13);
//! ```

pub mod admission;
pub mod bounds;
mod error;
pub mod oracle;
pub mod pattern;
pub mod semigroup;
pub mod variety;

pub use error::{Error, Result};
pub use pattern::{AdmissibilityClass, Pattern};
pub use semigroup::NumericalSemigroup;
