//! Experimental requirements: entangling times, timing resolution, fiber
//! delay lines and the achievable frequency separations of memory pairs.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use serde::Serialize;

use crate::error::ensure_finite;
use crate::gravity::RedshiftPair;
use crate::sweep;
use crate::{Error, Result, SPEED_OF_LIGHT};

/// Margin that operationalizes "much smaller than".
pub const DEFAULT_MARGIN: f64 = 10.0;

/// Default Ω₋ range of the storage-time grid [rad/s].
pub const GRID_RANGE: (f64, f64) = (1e9, 1e15);
pub const GRID_POINTS: usize = 61;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntanglingKind {
    /// Clock qubit in superposition of heights, coupling Δ_Θ.
    QubitSingle,
    /// Two clock qubits, coupling Δ_Θ.
    QubitPair,
    /// Single photon in a Mach-Zehnder setup, coupling Δ_{Θ⁻¹}.
    Mz,
    /// Photon pair in a Hong-Ou-Mandel setup, coupling Δ_{Θ⁻¹}.
    Hom,
}

/// Time at which internal-external entanglement peaks.
///
/// `freq_diff` is μ₋ for the qubit kinds and Ω₋ for the photonic ones.
pub fn entangling_time(kind: EntanglingKind, freq_diff: f64, coupling: f64) -> Result<f64> {
    ensure_finite("frequency difference", freq_diff)?;
    ensure_finite("coupling", coupling)?;
    let rate = (freq_diff * coupling).abs();
    if rate == 0.0 {
        return Err(Error::InfiniteTime { coupling, freq_diff });
    }
    let half_turns = match kind {
        EntanglingKind::QubitSingle | EntanglingKind::Mz => PI,
        EntanglingKind::QubitPair | EntanglingKind::Hom => FRAC_PI_2,
    };
    Ok(half_turns / rate)
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {v}")))
    }
}

/// τ^reslim = π/(4Ω₋).
pub fn resolution_limit(omega_minus: f64) -> Result<f64> {
    Ok(FRAC_PI_4 / positive("omega_minus", omega_minus)?)
}

/// Ω₋^lim = π/(4τ_res).
pub fn max_omega_minus(tau_res: f64) -> Result<f64> {
    Ok(FRAC_PI_4 / positive("timing resolution", tau_res)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResolutionBudget {
    pub tau_res: f64,
    pub tau_reslim: f64,
    pub feasible: bool,
}

impl ResolutionBudget {
    pub fn new(tau_res: f64, omega_minus: f64) -> Result<Self> {
        Self::with_margin(tau_res, omega_minus, DEFAULT_MARGIN)
    }

    /// Feasible when `tau_res * margin <= tau_reslim`.
    pub fn with_margin(tau_res: f64, omega_minus: f64, margin: f64) -> Result<Self> {
        positive("timing resolution", tau_res)?;
        if !(margin.is_finite() && margin >= 1.0) {
            return Err(Error::Domain(format!("margin must be finite and at least 1, got {margin}")));
        }
        let tau_reslim = resolution_limit(omega_minus)?;
        Ok(ResolutionBudget { tau_res, tau_reslim, feasible: tau_res * margin <= tau_reslim })
    }
}

/// Ω₋ = 2πc|1/λ₂ − 1/λ₁| for wavelengths in metres.
pub fn omega_minus_from_wavelengths(lambda1: f64, lambda2: f64) -> Result<f64> {
    positive("wavelength", lambda1)?;
    positive("wavelength", lambda2)?;
    if lambda1 == lambda2 {
        return Err(Error::ZeroFrequencyDifference);
    }
    Ok(TAU * SPEED_OF_LIGHT * ((lambda1 - lambda2) / (lambda1 * lambda2)).abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FiberSpec {
    pub refractive_index: f64,
    pub attenuation_db_per_km: f64,
}

impl FiberSpec {
    /// Low-loss telecom fiber near 1550 nm.
    pub const LOW_LOSS: FiberSpec = FiberSpec { refractive_index: 1.47, attenuation_db_per_km: 0.2 };
    /// Worst case over the 1310/1550 nm telecom pair.
    pub const TELECOM_PAIR: FiberSpec = FiberSpec { refractive_index: 1.47, attenuation_db_per_km: 0.36 };

    pub fn new(refractive_index: f64, attenuation_db_per_km: f64) -> Result<Self> {
        if !(refractive_index.is_finite() && refractive_index >= 1.0) {
            return Err(Error::Domain(format!("refractive index must be at least 1, got {refractive_index}")));
        }
        if !(attenuation_db_per_km.is_finite() && attenuation_db_per_km >= 0.0) {
            return Err(Error::Domain(format!("attenuation must be non-negative, got {attenuation_db_per_km}")));
        }
        Ok(FiberSpec { refractive_index, attenuation_db_per_km })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DelayLine {
    pub length: f64,
    pub loss_db: f64,
    /// Per photon.
    pub surviving_fraction: f64,
}

impl DelayLine {
    /// Both photons of a coincidence survive.
    pub fn pair_surviving_fraction(&self) -> f64 {
        self.surviving_fraction * self.surviving_fraction
    }
}

pub fn delay_line(tau_d: f64, fiber: &FiberSpec) -> Result<DelayLine> {
    ensure_finite("delay", tau_d)?;
    if tau_d < 0.0 {
        return Err(Error::Domain(format!("delay must be non-negative, got {tau_d}")));
    }
    let length = SPEED_OF_LIGHT / fiber.refractive_index * tau_d;
    let loss_db = fiber.attenuation_db_per_km * length / 1000.0;
    Ok(DelayLine { length, loss_db, surviving_fraction: 10f64.powf(-loss_db / 10.0) })
}

/// Fiber delay needed to reach the HOM entangling time at a given Ω₋.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DelayLineReport {
    pub omega_minus: f64,
    pub tau_d: f64,
    pub fiber: FiberSpec,
    pub line: DelayLine,
}

pub fn delay_line_report(pair: &RedshiftPair, omega_minus: f64, fiber: &FiberSpec) -> Result<DelayLineReport> {
    let tau_d = entangling_time(EntanglingKind::Hom, omega_minus, pair.delta_theta_inv())?;
    Ok(DelayLineReport { omega_minus, tau_d, fiber: *fiber, line: delay_line(tau_d, fiber)? })
}

/// A memory species and its optical carrier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QMemCarrier {
    pub name: &'static str,
    pub frequency_thz: f64,
    pub wavelength_nm: f64,
}

pub const QMEM_CARRIERS: [QMemCarrier; 4] = [
    QMemCarrier { name: "Rb", frequency_thz: 377.1, wavelength_nm: 795.0 },
    QMemCarrier { name: "Cs", frequency_thz: 335.3, wavelength_nm: 894.0 },
    QMemCarrier { name: "Pr", frequency_thz: 494.7, wavelength_nm: 606.0 },
    QMemCarrier { name: "Eu", frequency_thz: 517.9, wavelength_nm: 579.0 },
];

/// Published cross-species separations [THz], in `qmem_combinations` order.
pub const LISTED_SEPARATIONS_THZ: [f64; 6] = [41.8, 117.6, 140.9, 159.6, 182.6, 23.2];

/// Same-species separations reachable by multiplexing within the inhomogeneous line [THz].
pub const MULTIPLEXING_RANGE_THZ: [(&str, f64, f64); 2] = [("Pr", 1e-3, 1e-2), ("Eu", 1e-3, 1e-2)];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QMemCombo {
    pub first: &'static str,
    pub second: &'static str,
    /// Ω₋ [rad/s].
    pub omega_minus: f64,
}

impl QMemCombo {
    pub fn separation_thz(&self) -> f64 {
        self.omega_minus / TAU / 1e12
    }
}

/// All cross-species pairs, computed from the stored carriers.
pub fn qmem_combinations() -> Vec<QMemCombo> {
    let mut out = Vec::with_capacity(6);
    for (i, a) in QMEM_CARRIERS.iter().enumerate() {
        for b in &QMEM_CARRIERS[i + 1..] {
            out.push(QMemCombo {
                first: a.name,
                second: b.name,
                omega_minus: TAU * 1e12 * (b.frequency_thz - a.frequency_thz).abs(),
            });
        }
    }
    out
}

/// Agreement to three significant figures: within half a unit of the listed
/// value's third significant digit.
pub fn agrees_to_three_figures(computed: f64, listed: f64) -> bool {
    if listed == 0.0 {
        return computed == 0.0;
    }
    let unit = 10f64.powf(listed.abs().log10().floor() - 2.0);
    (computed - listed).abs() <= 0.5 * unit * (1.0 + 1e-12)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridRow {
    pub scenario: String,
    pub omega_minus: f64,
    pub tau_ent: f64,
    pub tau_reslim: f64,
}

/// HOM storage time and resolution limit on a log-spaced Ω₋ grid, one block
/// per scenario in input order, ascending Ω₋ within a block.
pub fn figure3_grid(scenarios: &[(String, RedshiftPair)], range: (f64, f64), points: usize) -> Result<Vec<GridRow>> {
    if scenarios.is_empty() {
        return Err(Error::Usage("no scenarios selected for the grid".into()));
    }
    if points < 2 {
        return Err(Error::Usage(format!("grid needs at least 2 points, got {points}")));
    }
    if range.0.is_nan() || range.1.is_nan() || range.0 >= range.1 {
        return Err(Error::Usage(format!("grid range must be increasing, got [{}, {}]", range.0, range.1)));
    }
    let omegas = sweep::logspace(range.0, range.1, points)?;
    let cells: Vec<(&str, f64, f64)> = scenarios
        .iter()
        .flat_map(|(name, pair)| omegas.iter().map(move |&w| (name.as_str(), pair.delta_theta_inv(), w)))
        .collect();
    sweep::par_map(&cells, |&(name, coupling, w)| {
        Ok(GridRow {
            scenario: name.to_owned(),
            omega_minus: w,
            tau_ent: entangling_time(EntanglingKind::Hom, w, coupling)?,
            tau_reslim: resolution_limit(w)?,
        })
    })
    .into_iter()
    .collect()
}
