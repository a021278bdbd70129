//! Reduced spatial density matrices at the detectors and their entanglement measures.
//!
//! The single photon lives on {⊕, ⊖}; the pair on {⊕⊕, ⊕⊖, ⊖⊕, ⊖⊖} with the
//! first label belonging to photon 1. For the pair every storage model
//! yields
//!
//! ```text
//!        ⎛ n+P   0     0    −(n+P) ⎞
//! ρ = ¼  ⎜  0   n−P  −(n−P)    0   ⎟
//!        ⎜  0  −(n−P)  n−P     0   ⎟
//!        ⎝−(n+P)  0     0     n+P  ⎠
//! ```
//!
//! with P = P_c^HOM and n the stored norm, so the partial transpose has
//! eigenvalues {½, ½, P/2, −P/2} and the negativity is |P|/2.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::gravity::RedshiftPair;
use crate::interferometer::{large_bandwidth_observables, observables, oracle, Observables, Storage};
use crate::linalg::hermitian_eigenvalues;
use crate::quadrature::Quadrature;
use crate::spectra::{TwoPeakSpectrum, LARGE_BANDWIDTH_RATIO};
use crate::{Error, Result};

pub const MZ_BASIS: [&str; 2] = ["⊕", "⊖"];
pub const HOM_BASIS: [&str; 4] = ["⊕⊕", "⊕⊖", "⊖⊕", "⊖⊖"];

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = 1e-10;
const NORM_TOL: f64 = 1e-9;

/// Small complex matrix over a spatial basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialDensityMatrix<const D: usize> {
    entries: [[Complex64; D]; D],
}

impl<const D: usize> SpatialDensityMatrix<D> {
    /// Validates hermiticity, unit trace and positivity.
    pub fn new(entries: [[Complex64; D]; D]) -> Result<Self> {
        let rho = SpatialDensityMatrix { entries };
        for (r, row) in entries.iter().enumerate() {
            for (c, value) in row.iter().enumerate() {
                if (value - entries[c][r].conj()).norm() > HERMITIAN_TOL {
                    return Err(Error::InvalidDensityMatrix(format!("not hermitian at ({r}, {c})")));
                }
            }
        }
        let tr = rho.trace();
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr} differs from 1")));
        }
        let min = rho.eigenvalues()[0];
        if min < -PSD_TOL {
            return Err(Error::InvalidDensityMatrix(format!("negative eigenvalue {min}")));
        }
        Ok(rho)
    }

    pub fn from_entries_unchecked(entries: [[Complex64; D]; D]) -> Self {
        SpatialDensityMatrix { entries }
    }

    pub fn entries(&self) -> &[[Complex64; D]; D] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn trace(&self) -> f64 {
        (0..D).map(|i| self.entries[i][i].re).sum()
    }

    /// Σ|ρ_ij|², equal to Tr ρ² for hermitian ρ.
    pub fn purity(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.norm_sqr()).sum()
    }

    pub fn linear_entropy(&self) -> f64 {
        1.0 - self.purity()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.entries)
    }

    /// Row-major "re im" pairs, one row per line, 17 significant digits.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|z| format!("{:.16e} {:.16e}", z.re, z.im)).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

impl SpatialDensityMatrix<2> {
    /// ρ_⊖⊖ − ρ_⊕⊕.
    pub fn p_c(&self) -> f64 {
        self.entries[1][1].re - self.entries[0][0].re
    }

    /// Length of the Bloch vector, the envelope of the interferogram.
    pub fn visibility(&self) -> f64 {
        let p = self.p_c();
        (p * p + 4.0 * self.entries[0][1].norm_sqr()).sqrt()
    }
}

impl SpatialDensityMatrix<4> {
    /// Bunching minus anti-bunching probability.
    pub fn p_c(&self) -> f64 {
        let d = |i: usize| self.entries[i][i].re;
        d(0) + d(3) - d(1) - d(2)
    }

    /// Transpose on the second tensor factor: ρ^T₂[(a,b),(a',b')] = ρ[(a,b'),(a',b)].
    pub fn partial_transpose(&self) -> [[Complex64; 4]; 4] {
        let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
        for a in 0..2 {
            for b in 0..2 {
                for a2 in 0..2 {
                    for b2 in 0..2 {
                        out[2 * a + b][2 * a2 + b2] = self.entries[2 * a + b2][2 * a2 + b];
                    }
                }
            }
        }
        out
    }

    pub fn partial_transpose_eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.partial_transpose())
    }

    /// Minus the sum of the negative eigenvalues of the partial transpose.
    pub fn negativity(&self) -> f64 {
        -self.partial_transpose_eigenvalues().iter().filter(|&&x| x < 0.0).sum::<f64>()
    }
}

pub fn purity<const D: usize>(rho: &SpatialDensityMatrix<D>) -> f64 {
    rho.purity()
}

pub fn linear_entropy<const D: usize>(rho: &SpatialDensityMatrix<D>) -> f64 {
    rho.linear_entropy()
}

pub fn negativity(rho: &SpatialDensityMatrix<4>) -> f64 {
    rho.negativity()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn check_norm(norm: f64) -> Result<()> {
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::UnnormalizedState { norm });
    }
    Ok(())
}

fn mz_from(obs: &Observables) -> Result<SpatialDensityMatrix<2>> {
    check_norm(obs.norm_mz)?;
    let off = obs.coherence_mz;
    Ok(SpatialDensityMatrix::from_entries_unchecked([
        [c(0.5 * (obs.norm_mz - obs.p_mz)), off],
        [off.conj(), c(0.5 * (obs.norm_mz + obs.p_mz))],
    ]))
}

/// Pair state of the form given in the module docs.
pub fn hom_matrix(norm: f64, p_c: f64) -> SpatialDensityMatrix<4> {
    let b = 0.25 * (norm + p_c);
    let a = 0.25 * (norm - p_c);
    let z = c(0.0);
    SpatialDensityMatrix::from_entries_unchecked([
        [c(b), z, z, c(-b)],
        [z, c(a), c(-a), z],
        [z, c(-a), c(a), z],
        [c(-b), z, z, c(b)],
    ])
}

/// Single-photon detector state from the closed forms.
///
/// Fails with [`Error::UnnormalizedState`] when finite-bandwidth memory
/// storage leaves the state with norm different from one.
pub fn reduced_rho_mz(spec: &TwoPeakSpectrum, storage: &Storage, pair: &RedshiftPair) -> Result<SpatialDensityMatrix<2>> {
    mz_from(&observables(spec, storage, pair)?)
}

/// Pair detector state from the closed forms.
pub fn reduced_rho_hom(spec: &TwoPeakSpectrum, storage: &Storage, pair: &RedshiftPair) -> Result<SpatialDensityMatrix<4>> {
    let obs = observables(spec, storage, pair)?;
    check_norm(obs.norm_hom)?;
    Ok(hom_matrix(obs.norm_hom, obs.p_hom))
}

fn large_bandwidth(spec: &TwoPeakSpectrum, storage: &Storage, pair: &RedshiftPair) -> Result<Observables> {
    if !spec.is_large_bandwidth() {
        return Err(Error::Unsupported(format!(
            "large-bandwidth form needs omega_minus/xi >= {}, got {}",
            LARGE_BANDWIDTH_RATIO,
            spec.bandwidth_ratio()
        )));
    }
    large_bandwidth_observables(spec, storage, pair)
}

/// Single-photon detector state for orthogonal peaks with N_MZ = 1/√2:
/// ½[[1 − c₊c₋, −i s₊c₋], [i s₊c₋, 1 + c₊c₋]] with c± = cos(Ω±δ/2).
pub fn reduced_rho_mz_large_bandwidth(
    spec: &TwoPeakSpectrum,
    storage: &Storage,
    pair: &RedshiftPair,
) -> Result<SpatialDensityMatrix<2>> {
    mz_from(&large_bandwidth(spec, storage, pair)?)
}

/// Pair detector state for orthogonal peaks, P_c^HOM = cos p.
pub fn reduced_rho_hom_large_bandwidth(
    spec: &TwoPeakSpectrum,
    storage: &Storage,
    pair: &RedshiftPair,
) -> Result<SpatialDensityMatrix<4>> {
    Ok(hom_matrix(1.0, large_bandwidth(spec, storage, pair)?.p_hom))
}

/// Single-photon detector state assembled by quadrature over the spectrum.
pub fn reduced_rho_mz_quadrature(
    spec: &TwoPeakSpectrum,
    storage: &Storage,
    pair: &RedshiftPair,
    quad: &Quadrature,
) -> Result<SpatialDensityMatrix<2>> {
    Ok(SpatialDensityMatrix::from_entries_unchecked(oracle::assemble_mz(spec, storage, pair, quad)?))
}

/// Pair detector state assembled by 2-D quadrature over the spectrum.
pub fn reduced_rho_hom_quadrature(
    spec: &TwoPeakSpectrum,
    storage: &Storage,
    pair: &RedshiftPair,
    quad: &Quadrature,
) -> Result<SpatialDensityMatrix<4>> {
    Ok(SpatialDensityMatrix::from_entries_unchecked(oracle::assemble_hom(spec, storage, pair, quad)?))
}
