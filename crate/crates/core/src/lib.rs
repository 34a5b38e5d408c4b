//! Compiler core for block-structured Pauli simulation kernels.
//!
//! The pipeline mirrors the usual pass structure: a textual Pauli IR is
//! parsed into a [`Program`], a scheduling pass arranges its blocks into
//! [`schedule::Schedule`] layers, and a backend pass lowers the schedule to a
//! gate-level [`circuit::Circuit`] for either an all-to-all target
//! ([`synth_ft`]) or a connectivity-constrained one ([`synth_sc`]). A dense
//! unitary oracle ([`verify`]) checks small instances exactly.
//!
//! All numeric payloads (weights, parameters, angles, error rates, matrix
//! entries) are generic over the scalar type through the [`Real`] trait;
//! `f64` is the default everywhere and the type aliases at the crate root
//! refer to it.

use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive};

pub mod bench;
pub mod circuit;
pub mod device;
pub mod parse;
pub mod pauli;
pub mod schedule;
pub mod synth_ft;
pub mod synth_sc;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use pauli::{Parameter, PauliAxis, PauliBlock, PauliString, Program, WeightedString};

/// Scalar type used for weights, angles and matrix entries.
pub trait Real:
    Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// Shorthand for lifting an `f64` constant into the working scalar type.
pub(crate) fn real<F: Real>(x: f64) -> F {
    F::from_f64(x).expect("f64 constant must be representable")
}

/// Default-precision aliases for the main pipeline types.
pub type Program64 = pauli::Program<f64>;
pub type Circuit64 = circuit::Circuit<f64>;
pub type Schedule64 = schedule::Schedule<f64>;
pub type Device64 = device::DeviceModel<f64>;
