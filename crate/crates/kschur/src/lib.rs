//! Exact computation of `k`-Schur, Catalan, Hall-Littlewood and modified
//! Macdonald symmetric polynomials.
//!
//! Everything is integer-exact: coefficients are arbitrary-precision, there
//! is no floating point anywhere, and every engine has an independent
//! brute-force oracle cross-checking it in the test and verification suites.
//!
//! The centerpiece is the affine Demazure engine in [`demazure`]: a Catalan
//! character is built by alternating one-dimensional twists with Demazure
//! operator strings along cyclic intervals read off a root ideal. Choosing
//! the full ideal yields Hall-Littlewood characters (columns of Kostka
//! polynomials), and choosing the ideal attached to a `k`-bounded partition
//! yields the `k`-Schur functions, whose triangularity, socle degree,
//! branching and Pieri behavior the [`verify`] module checks wholesale.
//!
//! See the `book/` directory for a guided tour; its code samples run as
//! doc-tests of this crate.

pub mod affine;
pub mod bases;
pub mod demazure;
pub mod error;
pub mod partition;
pub mod poly;
pub mod sym;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::QTPolynomial;
