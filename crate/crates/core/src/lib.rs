//! Exact real double Hurwitz numbers with 3-cycles.
//!
//! Two independent computations are provided and cross-checked:
//!
//! * [`oracle`] counts monodromy tuples in the symmetric group directly;
//! * [`tropical`] enumerates enhanced real tropical covers and sums their
//!   multiplicities.
//!
//! [`enhanced`] adds the splitting-independent lower bound `E_g(lambda, mu)`
//! together with explicit constructions of universally enhanced covers.

pub mod battery;
pub mod cli;
pub mod enhanced;
pub mod error;
pub mod oracle;
pub mod par;
pub mod perms;
pub mod tropical;

pub use error::{HurwitzError, Result};
pub use perms::{Partition, Permutation, Sign, SignSplitting};
