//! Exact-arithmetic kernels for ultrametric geometry.
//!
//! Everything in this crate computes with exact rationals
//! ([`num_rational::BigRational`]); there is no floating point anywhere, so
//! every inequality this library verifies is verified exactly.
//!
//! The crate is organized around a handful of classical constructions that
//! all produce ultrametrics, i.e. metrics satisfying the strengthened
//! triangle inequality `d(x,z) <= max(d(x,y), d(y,z))`:
//!
//! * [`padic`] — p-adic valuations and absolute values on the rationals,
//!   truncated p-adic expansions with exact precision bookkeeping, and
//!   p-adic series summation.
//! * [`seqspace`] — spaces of eventually-constant/periodic symbol sequences
//!   with the agreement-depth ultrametrics `d_rho`, shift maps, doubly
//!   infinite sequences, and generalized scale tables.
//! * [`cantor`] — the binary-expansion map and the Cantor-set encoding, with
//!   their exact Lipschitz and bi-Lipschitz certificates.
//! * [`balls`] — finite metric spaces given by exact distance matrices, and
//!   the ball algebra (nesting trichotomy, unions, center invariance) that
//!   holds in the ultrametric case.
//! * [`metricprops`] — metric/ultrametric axiom checking, snowflake
//!   transforms `d^tau`, and the Cauchy chain inequality.
//! * [`dyadic`] — dyadic-interval algebra and its correspondence with the
//!   images of balls under the binary-expansion map.
//! * [`generators`] — deterministic generators of finite ultrametric spaces
//!   (sequence samples and random dendrograms) used by tests and by
//!   downstream consumers that need reproducible fixtures.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats, and the
//! command-line front end live in the companion `ultrametric-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod balls;
pub mod cantor;
pub mod dyadic;
pub mod generators;
pub mod metricprops;
pub mod padic;
pub mod rational;
pub mod rng;
pub mod seqspace;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
