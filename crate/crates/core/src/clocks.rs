//! Clock qubits in a spatial superposition of two potential levels.
//!
//! A single clock evolves under H₁ = diag(Θ_U μ₁, Θ_U μ₂, Θ_L μ₁, Θ_L μ₂);
//! two clocks under H₂ = H₁ ⊗ 1 + 1 ⊗ H₁. Both are diagonal, so evolution is
//! a set of phase factors. Each phase is split into a common part μτ and a
//! redshift part zμτ so the tiny differential phases survive rounding.

use num_complex::Complex64;
use serde::Serialize;

use crate::entanglement::SpatialDensityMatrix;
use crate::gravity::RedshiftPair;
use crate::{Error, Result};

/// Internal level angular frequencies of a clock [rad/s].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClockSpec {
    pub mu1: f64,
    pub mu2: f64,
}

impl ClockSpec {
    pub fn new(mu1: f64, mu2: f64) -> Result<Self> {
        if !(mu1.is_finite() && mu2.is_finite()) {
            return Err(Error::Domain("clock frequencies must be finite".into()));
        }
        Ok(ClockSpec { mu1, mu2 })
    }

    /// μ₋ = μ₁ − μ₂.
    pub fn mu_minus(&self) -> f64 {
        self.mu1 - self.mu2
    }

    fn level(&self, i: usize) -> f64 {
        if i == 0 {
            self.mu1
        } else {
            self.mu2
        }
    }
}

/// e^{−i Θ_σ μ τ}, with Θ_σ = 1 + z_σ.
fn phase(mu: f64, z: f64, tau: f64) -> Complex64 {
    Complex64::from_polar(1.0, -mu * tau) * Complex64::from_polar(1.0, -z * mu * tau)
}

fn arm_shift(pair: &RedshiftPair, sigma: usize) -> f64 {
    if sigma == 0 {
        pair.z_u()
    } else {
        pair.z_l()
    }
}

/// Purity 1 − sin²(Δ_Θ μ₋ τ/2)/2 of the spatial state of one clock.
pub fn single_qubit_purity(clock: &ClockSpec, delta_theta: f64, tau: f64) -> f64 {
    let s = (0.5 * delta_theta * clock.mu_minus() * tau).sin();
    1.0 - 0.5 * s * s
}

/// Linear entropy 1 − P of the spatial state of one clock.
pub fn single_qubit_linear_entropy(clock: &ClockSpec, delta_theta: f64, tau: f64) -> f64 {
    let s = (0.5 * delta_theta * clock.mu_minus() * tau).sin();
    0.5 * s * s
}

fn coupling_time(clock: &ClockSpec, delta_theta: f64, factor: f64) -> Result<f64> {
    let rate = (delta_theta * clock.mu_minus()).abs();
    if rate == 0.0 || !rate.is_finite() {
        return Err(Error::InfiniteTime { coupling: delta_theta, freq_diff: clock.mu_minus() });
    }
    Ok(std::f64::consts::PI / (factor * rate))
}

/// First time of minimal purity, π/|Δ_Θ μ₋|.
pub fn single_qubit_entangling_time(clock: &ClockSpec, delta_theta: f64) -> Result<f64> {
    coupling_time(clock, delta_theta, 1.0)
}

/// Reduced spatial state of one clock prepared in (|μ₁⟩+|μ₂⟩)(|U⟩+|L⟩)/2.
///
/// Built from the evolved four-component state and a numerical trace over
/// the internal levels.
pub fn single_qubit_reduced_state(clock: &ClockSpec, pair: &RedshiftPair, tau: f64) -> SpatialDensityMatrix<2> {
    // amplitude[sigma][i]
    let mut amp = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (sigma, row) in amp.iter_mut().enumerate() {
        for (i, a) in row.iter_mut().enumerate() {
            *a = phase(clock.level(i), arm_shift(pair, sigma), tau) * 0.5;
        }
    }
    let mut rho = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (s, row) in rho.iter_mut().enumerate() {
        for (t, entry) in row.iter_mut().enumerate() {
            *entry = (0..2).map(|i| amp[s][i] * amp[t][i].conj()).sum();
        }
    }
    SpatialDensityMatrix::from_entries_unchecked(rho)
}

/// Initial states of the two-clock system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwoQubitInitial {
    /// (|μ₁μ₂⟩+|μ₂μ₁⟩) ⊗ (|UL⟩+|LU⟩)/2: anti-aligned internal and spatial Bell states.
    EntangledAntiAligned,
    /// (|μ₁μ₂⟩+|μ₂μ₁⟩) ⊗ (|UU⟩+|LL⟩)/2: spatially aligned, immune to the redshift.
    RobustSpatialAligned,
    /// (|μ₁μ₁⟩+|μ₂μ₂⟩) ⊗ (|UL⟩+|LU⟩)/2: internally aligned, immune to the redshift.
    RobustInternalAligned,
}

impl TwoQubitInitial {
    pub const ALL: [TwoQubitInitial; 3] = [
        TwoQubitInitial::EntangledAntiAligned,
        TwoQubitInitial::RobustSpatialAligned,
        TwoQubitInitial::RobustInternalAligned,
    ];

    fn internal_pairs(&self) -> [(usize, usize); 2] {
        match self {
            TwoQubitInitial::RobustInternalAligned => [(0, 0), (1, 1)],
            _ => [(0, 1), (1, 0)],
        }
    }

    fn spatial_pairs(&self) -> [(usize, usize); 2] {
        match self {
            TwoQubitInitial::RobustSpatialAligned => [(0, 0), (1, 1)],
            _ => [(0, 1), (1, 0)],
        }
    }
}

/// Amplitudes over |μ_i μ_j⟩ ⊗ |σ_k σ_l⟩ with index ((2i + j) · 4) + 2k + l,
/// where level 0 is μ₁ and arm 0 is U.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector16(pub [Complex64; 16]);

impl StateVector16 {
    pub fn index(i: usize, j: usize, k: usize, l: usize) -> usize {
        (2 * i + j) * 4 + 2 * k + l
    }

    pub fn initial(variant: TwoQubitInitial) -> Self {
        let mut v = [Complex64::new(0.0, 0.0); 16];
        for (i, j) in variant.internal_pairs() {
            for (k, l) in variant.spatial_pairs() {
                v[Self::index(i, j, k, l)] = Complex64::new(0.5, 0.0);
            }
        }
        StateVector16(v)
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Traces out both internal levels, leaving the 4×4 state over
    /// {UU, UL, LU, LL}.
    pub fn reduced_spatial(&self) -> SpatialDensityMatrix<4> {
        let mut rho = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (r, row) in rho.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = (0..4).map(|m| self.0[m * 4 + r] * self.0[m * 4 + c].conj()).sum();
            }
        }
        SpatialDensityMatrix::from_entries_unchecked(rho)
    }
}

/// Applies e^{−i H₂ τ} to `state`.
pub fn two_qubit_evolve_state(state: &StateVector16, clock: &ClockSpec, pair: &RedshiftPair, tau: f64) -> StateVector16 {
    let mut out = *state;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let idx = StateVector16::index(i, j, k, l);
                    out.0[idx] = state.0[idx]
                        * phase(clock.level(i), arm_shift(pair, k), tau)
                        * phase(clock.level(j), arm_shift(pair, l), tau);
                }
            }
        }
    }
    out
}

/// Evolves one of the prepared initial states for a proper time τ.
pub fn two_qubit_evolve(initial: TwoQubitInitial, clock: &ClockSpec, pair: &RedshiftPair, tau: f64) -> StateVector16 {
    two_qubit_evolve_state(&StateVector16::initial(initial), clock, pair, tau)
}

/// Negativity of the mutual spatial state after tracing out the clocks.
pub fn two_qubit_negativity(initial: TwoQubitInitial, clock: &ClockSpec, pair: &RedshiftPair, tau: f64) -> f64 {
    two_qubit_evolve(initial, clock, pair, tau).reduced_spatial().negativity()
}

/// Purity of the mutual spatial state after tracing out the clocks.
pub fn two_qubit_spatial_purity(initial: TwoQubitInitial, clock: &ClockSpec, pair: &RedshiftPair, tau: f64) -> f64 {
    two_qubit_evolve(initial, clock, pair, tau).reduced_spatial().purity()
}

/// First zero of the negativity, π/(2|Δ_Θ μ₋|).
pub fn two_qubit_entangling_time(clock: &ClockSpec, delta_theta: f64) -> Result<f64> {
    coupling_time(clock, delta_theta, 2.0)
}
