//! Exact symbolic calculus for the loop extension of gl_N.
//!
//! The crate builds, from the ground up: exact rationals ([`scalar`]), the
//! loop algebra with central extension ([`loopalg`]), its normal-ordered
//! enveloping algebra ([`pbw`]), a window-tracked model of the completion
//! together with the evaluation images of degree-one generators
//! ([`completion`]), braid operators and affine Weyl words ([`braid`]), the
//! diagonal Heisenberg construction ([`heisenberg`]), the half Casimir in the
//! tensor square ([`coproduct`]), and rank-two / string-module checks for
//! general Cartan data ([`kacmoody`]). Everything is exact: no floats, ever.
//!
//! The [`checks`] module exposes the whole identity battery behind stable
//! string ids; the companion CLI crate drives it.

pub mod scalar;
pub mod loopalg;
pub mod pbw;
pub mod completion;
pub mod braid;
pub mod heisenberg;
pub mod linalg;
pub mod coproduct;
pub mod kacmoody;
pub mod checks;

pub use loopalg::{LieElement, LoopAlgebra, LoopGen};
pub use scalar::{ParamPoint, Rational};
