//! Built-in cross-checks between closed forms and brute-force numerics.

use std::f64::consts::PI;
use std::fmt;

use crate::entanglement::{reduced_rho_hom_quadrature, SpatialDensityMatrix};
use crate::feasibility::{agrees_to_three_figures, qmem_combinations, LISTED_SEPARATIONS_THZ};
use crate::gravity::RedshiftPair;
use crate::interferometer::{pattern, pc_via_quadrature, DelayConfig, QMemConfig, Storage};
use crate::quadrature::Quadrature;
use crate::spectra::TwoPeakSpectrum;
use crate::Result;

const PATTERN_TOL: f64 = 1e-8;
const EIGEN_TOL: f64 = 1e-10;
const PERTURBATION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quadrature,
    PartialTranspose,
    Table,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Quadrature, Suite::PartialTranspose, Suite::Table];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Quadrature => "quadrature-vs-closed-form",
            Suite::PartialTranspose => "partial-transpose-eigenvalues",
            Suite::Table => "memory-combination-table",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    /// Largest deviation; for the table suite, the largest deviation in THz.
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checks, max error {:.3e} (tolerance {:.1e})",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.checks,
            self.max_error,
            self.tolerance
        )
    }
}

fn offset(suite: Suite, perturb: Option<Suite>) -> f64 {
    if perturb == Some(suite) {
        PERTURBATION
    } else {
        0.0
    }
}

fn quadrature_suite(bias: f64) -> Result<SuiteReport> {
    let pair = RedshiftPair::from_shifts(5e-2, 1e-2)?;
    let quad = Quadrature::default();
    let mut worst = 0.0f64;
    let mut checks = 0;
    for &(ratio, phi, phase) in &[(0.5, 0.3, 1.0), (3.0, 1.7, 2.5), (12.0, 4.0, 0.4), (40.0, 0.0, 5.0)] {
        let spec = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi)?;
        let tau = phase / (pair.delta_theta_inv() * spec.omega_minus());
        let storages: [Storage; 2] = [DelayConfig::new(tau)?.into(), QMemConfig::local_equal(tau).into()];
        for storage in &storages {
            if matches!(storage, Storage::QMem(_)) && !spec.is_large_bandwidth() {
                continue;
            }
            let closed = pattern(&spec, storage, &pair)?;
            let brute = pc_via_quadrature(&spec, storage, &pair, &quad)?;
            worst = worst
                .max((closed.p_c_mz + bias - brute.p_c_mz).abs())
                .max((closed.p_c_hom + bias - brute.p_c_hom).abs());
            checks += 2;
        }
    }
    Ok(SuiteReport { suite: Suite::Quadrature, checks, max_error: worst, tolerance: PATTERN_TOL, passed: worst <= PATTERN_TOL })
}

fn partial_transpose_suite(bias: f64) -> Result<SuiteReport> {
    let pair = RedshiftPair::from_shifts(5e-2, 0.0)?;
    let spec = TwoPeakSpectrum::new(100.0, 130.0, 1.0, 0.0)?;
    let quad = Quadrature::default();
    let mut worst = 0.0f64;
    let mut checks = 0;
    for k in 0..6 {
        let p = PI * k as f64 / 5.0;
        let tau = p / (pair.delta_theta_inv() * spec.omega_minus());
        let storage: Storage = DelayConfig::new(tau)?.into();
        let rho: SpatialDensityMatrix<4> = reduced_rho_hom_quadrature(&spec, &storage, &pair, &quad)?;
        let pc = pattern(&spec, &storage, &pair)?.p_c_hom;
        let mut expected = [0.5, 0.5, 0.5 * pc, -0.5 * pc];
        expected.sort_by(f64::total_cmp);
        for (got, want) in rho.partial_transpose_eigenvalues().iter().zip(expected) {
            worst = worst.max((got + bias - want).abs());
            checks += 1;
        }
    }
    Ok(SuiteReport {
        suite: Suite::PartialTranspose,
        checks,
        max_error: worst,
        tolerance: EIGEN_TOL,
        passed: worst <= EIGEN_TOL,
    })
}

fn table_suite(bias: f64) -> SuiteReport {
    let mut worst = 0.0f64;
    let mut passed = true;
    let combos = qmem_combinations();
    for (combo, listed) in combos.iter().zip(LISTED_SEPARATIONS_THZ) {
        let got = combo.separation_thz() + bias * 1e6;
        worst = worst.max((got - listed).abs());
        passed &= agrees_to_three_figures(got, listed);
    }
    SuiteReport { suite: Suite::Table, checks: combos.len(), max_error: worst, tolerance: 0.5, passed }
}

/// Runs every suite. `perturb` biases one suite's computed values so it fails.
pub fn run(perturb: Option<Suite>) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        quadrature_suite(offset(Suite::Quadrature, perturb))?,
        partial_transpose_suite(offset(Suite::PartialTranspose, perturb))?,
        table_suite(offset(Suite::Table, perturb)),
    ])
}
