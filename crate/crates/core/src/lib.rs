//! Exact two-parameter generalized Stirling numbers.
//!
//! The numbers `L(n, k)` are integer polynomials in two symbols `a` and `b`
//! (the weights of "insert after an element" and "insert at the head of a
//! list"). They count weighted distributions of `1..=n` into `k` non-empty
//! ordered lists, and satisfy
//!
//! ```text
//! L(n, k) = L(n-1, k-1) + (a (n-1) + b k) L(n-1, k),   L(0, 0) = 1.
//! ```
//!
//! The crate computes them through several independent routes (triangular
//! recurrence, inclusion-exclusion closed form, symmetric-function sum,
//! vertical and horizontal recurrences, brute-force enumeration) and ships a
//! harness that cross-checks all of them.
//!
//! With the default `parallel` feature, row construction, oracle enumeration
//! and identity suites run on the ambient rayon pool. Results are identical
//! with or without it.

pub mod error;
pub mod factorials;
pub mod identities;
pub mod oracle;
mod par;
pub mod poly;
pub mod stirling;

pub use error::{Error, Result};
pub use factorials::{binomial, falling, gen_factorial, multinomial, raising, FactorialKind};
pub use identities::{IdentityId, IdentityReport, Params, SuiteRanges};
pub use poly::{parse_rational, Assignment, Monomial, MultiPoly, Var};
pub use stirling::{build_table, GenStirlingTable, NumericTable, Profile};
