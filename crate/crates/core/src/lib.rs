//! Birkhoff sums of the sawtooth function over circle rotations, the moments
//! `J_p` built from them, and the machinery for checking their asymptotics and
//! limit laws numerically.
//!
//! The exact core works with rationals `a/q`: continued fractions, Ostrowski
//! numeration and prefix scans over `0 <= N < q`, all in integer arithmetic.

pub mod error;
pub mod harness;
pub mod moments;
pub mod numerics;
pub mod ostrowski;
pub mod quadratic;
pub mod ratcf;
pub mod stablelaw;
pub mod sudler;

pub use error::{Error, Result};
pub use moments::PParam;
pub use ratcf::{CfExpansion, Rational};
