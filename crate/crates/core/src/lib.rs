//! Exact arithmetic for Dedekind cotangent sums.
//!
//! This crate evaluates the Dedekind cotangent sum and its classical special
//! cases (Dedekind, Dedekind-Rademacher, Apostol, Dieter, Berndt, Zagier,
//! plane-partition sums) in exact arithmetic, and mechanically verifies the
//! reciprocity laws, Petersson-Knopp identities, and discrete Fourier lemmas
//! they satisfy. Cotangent values at rational multiples of pi live in
//! cyclotomic fields; everything rational is an arbitrary-precision fraction;
//! a high-precision complex engine covers irrational and complex shifts.
//!
//! Module map:
//! - [`rational`]: exact rational scalars, `p/q` parsing and formatting
//! - [`poly`]: integer and rational dense polynomials
//! - [`numtheory`]: divisors, Moebius, sigma, modular inverses, Bezout
//! - [`bernoulli`]: Bernoulli numbers/polynomials/functions, sawtooth
//! - [`cyclotomic`]: arithmetic in Q(zeta_n), exact cotangent values
//! - [`cotangent`]: cotangent derivative polynomials and Laurent data
//! - [`numeric`]: arbitrary-precision complex evaluation
//! - [`sums`]: the Dedekind cotangent sum and every named special sum
//! - [`identities`]: executable verification of the identities
//! - [`report`]: structured pass/fail verification reports
//! - [`sweep`]: deterministic randomized parameter sampling

pub mod bernoulli;
pub mod cotangent;
pub mod cyclotomic;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod numtheory;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sums;
pub mod sweep;
pub mod value;

pub use cyclotomic::CycloElement;
pub use error::{Error, Result};
pub use numeric::{BigComplex, PrecisionContext};
pub use poly::{IntPolynomial, RationalPolynomial};
pub use rational::BigRational;
pub use report::{Mode, ValueRepr, VerificationReport};
pub use sums::{CotSumSpec, Shift};
pub use value::ExactValue;
