//! Exact frequency spectra of quantum neural network data encodings.
//!
//! The symbolic path ([`spectrum`], [`schemes`], [`golomb`], [`turnpike`],
//! [`transform`]) works over exact rationals. [`sim`] is a small dense
//! statevector simulator used to cross-check the exact predictions
//! numerically through Fourier-coefficient extraction.

pub mod cli;
pub mod error;
pub mod golomb;
pub mod rational;
pub mod schemes;
pub mod sim;
pub mod spectrum;
pub mod transform;
pub mod turnpike;

pub use error::{Error, Result};
pub use rational::Rational;
pub use spectrum::{EigenvalueList, GeneratorGrid, MultiSpectrum, SpectrumSet};
