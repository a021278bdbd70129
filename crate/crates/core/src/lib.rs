//! Gravitationally induced entanglement dynamics.
//!
//! Clock qubits and frequency-entangled photon pairs placed in a spatial
//! superposition across two gravitational potentials pick up
//! potential-dependent phases. This crate computes the resulting redshift
//! factors, interference patterns of Mach-Zehnder (MZ) and Hong-Ou-Mandel
//! (HOM) setups with quantum memories or delay lines, reduced spatial
//! density matrices with their entanglement measures, and the experimental
//! requirements (storage times, timing resolution, fiber lengths).
//!
//! Every closed form has a brute-force counterpart: adaptive Gauss-Kronrod
//! quadrature for spectral integrals and a Jacobi eigensolver for partial
//! transposes.
//!
//! All frequencies are angular frequencies in rad/s, all times are seconds
//! and ħ = 1.

pub mod cli;
pub mod clocks;
pub mod entanglement;
mod error;
pub mod feasibility;
pub mod gravity;
pub mod interferometer;
pub mod linalg;
pub mod output;
pub mod quadrature;
pub mod selfcheck;
pub mod spectra;
pub mod sweep;
pub mod units;

pub use error::{Error, Result};

/// Speed of light in vacuum [m/s].
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
