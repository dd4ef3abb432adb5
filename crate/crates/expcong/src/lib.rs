//! Evaluation and study of the exponential congruence symbol `(a/n)_k`: the
//! ternary invariant that is `+1` when `a^k ≡ 1 (mod n)`, `-1` when
//! `a^k ≡ -1 (mod n)`, and `0` otherwise.
//!
//! The crate is organized in layers:
//!
//! - [`arith`] — exact modular arithmetic: gcd, modular power, factorization,
//!   totients, multiplicative orders, primitive roots, discrete logarithms,
//!   and Chinese-remainder reconstruction.
//! - [`symbol`] — the symbol itself, three equivalent evaluation routes, and
//!   its algebraic laws (inverse/negation symmetry, power compatibility,
//!   the sign subgroup).
//! - [`partition`] — the partition of the reduced residues into the `+1`
//!   subgroup, its `-1` coset, and the rest, with closed-form counts for
//!   prime moduli and primitive-root classification.
//! - [`classical`] — Legendre and Jacobi symbols, their coincidence with the
//!   exponential symbol at quadratic exponents, and m-th power residue
//!   detection.
//! - [`analytic`] — the symbol as a character-like weight: orthogonality
//!   sums, twisted exponential sums with their bound, and truncated Dirichlet
//!   series with an Euler-product cross-check.
//!
//! Everything is deterministic and exact (integer paths) or carries explicit
//! tolerance/tail bounds (floating-point paths). Moduli are capped at 2^62 so
//! double-width intermediates never overflow.
//!
//! ```
//! use expcong::partition::enumerate_partition;
//! use expcong::symbol::{symbol, SymbolQuery};
//!
//! // 2^2 = 4 ≡ -1 (mod 5), so the symbol is -1.
//! let q = SymbolQuery::new(2, 5, 2)?;
//! assert_eq!(symbol(&q).as_int(), -1);
//!
//! // The squares mod 15: the +1 class of (·/15)_2.
//! let part = enumerate_partition(15, 2)?;
//! assert_eq!(part.r_plus(), &[1, 4, 11, 14]);
//! assert_eq!(part.r_minus(), &[] as &[u64]); // -1 is not a square mod 15
//! # Ok::<(), expcong::Error>(())
//! ```

pub mod analytic;
pub mod arith;
pub mod classical;
pub mod error;
pub mod partition;
pub mod symbol;

pub use analytic::{ComplexSample, EulerProductReport, ExpSumBoundReport, SeriesSample};
pub use arith::{FactoredInteger, OrderInfo, MODULUS_CAP};
pub use classical::{CoincidenceReport, JacobiCompatReport};
pub use error::{Error, Result};
pub use partition::{PrimeCountReport, ResiduePartition, DEFAULT_ENUMERATION_CAP};
pub use symbol::{SymbolQuery, SymbolValue};
