//! Mach-Zehnder and Hong-Ou-Mandel interference with quantum memories or delay lines.
//!
//! Every storage element multiplies the spectral amplitude in arm σ by a
//! phase. Memories act per spectral peak: a photon of peak i stored for the
//! local time τ_σ picks up α_σi = (χ ν̃_σi + Ω^(r)_σi) τ_σ, where ν̃ is the
//! memory's internal frequency, Ω^(r) the read-out laser frequency and χ
//! selects whether the internal phase is imprinted. With the Lambda
//! relation ν̃ + Ω^(r) = Ω_i/Θ_σ this becomes (Ω_i/Θ_σ + (χ−1) ν̃_σi) τ_σ.
//! Delay lines act per frequency: ω ↦ ω τ_d/Θ_σ.
//!
//! The arm mismatch δ = τ_U/Θ_U − τ_L/Θ_L drives every pattern. Under equal
//! local storage times δ = −Δ_{Θ⁻¹} τ; under global-frame synchronization
//! δ = 0. Delay lines give δ = −Δ_{Θ⁻¹} τ_d.
//!
//! Output ports follow ψ_⊕ = (ψ_U − ψ_L)/√2, ψ_⊖ = −(ψ_U + ψ_L)/√2 for the
//! single photon, so at zero storage time the photon leaves through ⊖.

pub mod oracle;

use num_complex::Complex64;
use serde::Serialize;

pub use oracle::pc_via_quadrature;

use crate::error::ensure_finite;
use crate::gravity::RedshiftPair;
use crate::spectra::TwoPeakSpectrum;
use crate::{Error, Result};

/// How the two local storage times are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SyncMode {
    /// τ_U = τ_L measured by local clocks.
    LocalEqual,
    /// τ_U/Θ_U = τ_L/Θ_L: both arms store for the same reference time.
    GlobalFrame,
    /// Arbitrary local times.
    Explicit,
}

/// One frequency per arm and spectral peak [rad/s].
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct ArmFrequencies {
    pub u1: f64,
    pub u2: f64,
    pub l1: f64,
    pub l2: f64,
}

impl ArmFrequencies {
    pub fn uniform(value: f64) -> Self {
        ArmFrequencies { u1: value, u2: value, l1: value, l2: value }
    }

    fn get(&self, arm: usize, peak: usize) -> f64 {
        match (arm, peak) {
            (0, 0) => self.u1,
            (0, _) => self.u2,
            (_, 0) => self.l1,
            _ => self.l2,
        }
    }

    fn validate(&self, name: &str) -> Result<()> {
        for v in [self.u1, self.u2, self.l1, self.l2] {
            ensure_finite(name, v)?;
        }
        Ok(())
    }
}

/// Read-out laser frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ControlLasers {
    /// ν̃_σi + Ω^(r)_σi equals the locally observed photon frequency Ω_i/Θ_σ.
    Lambda,
    /// Given Ω^(r)_σi.
    Explicit(ArmFrequencies),
}

/// Quantum-memory storage in both arms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QMemConfig {
    pub tau_s_u: f64,
    pub tau_s_l: f64,
    /// Internal memory frequencies ν̃_σi.
    pub nu: ArmFrequencies,
    /// 1 if the internal phase is imprinted on the photon, 0 otherwise.
    pub chi: u8,
    pub sync_mode: SyncMode,
    pub control: ControlLasers,
}

impl QMemConfig {
    /// Equal local storage time τ in both arms, χ = 1, Lambda read-out.
    pub fn local_equal(tau: f64) -> Self {
        QMemConfig {
            tau_s_u: tau,
            tau_s_l: tau,
            nu: ArmFrequencies::default(),
            chi: 1,
            sync_mode: SyncMode::LocalEqual,
            control: ControlLasers::Lambda,
        }
    }

    /// Storage for reference time `tau_ref`: τ_σ = Θ_σ τ_ref.
    pub fn global_frame(tau_ref: f64, pair: &RedshiftPair) -> Self {
        QMemConfig {
            tau_s_u: pair.theta_u() * tau_ref,
            tau_s_l: pair.theta_l() * tau_ref,
            sync_mode: SyncMode::GlobalFrame,
            ..QMemConfig::local_equal(tau_ref)
        }
    }

    pub fn explicit(tau_s_u: f64, tau_s_l: f64) -> Self {
        QMemConfig { tau_s_u, tau_s_l, sync_mode: SyncMode::Explicit, ..QMemConfig::local_equal(0.0) }
    }

    pub fn with_chi(mut self, chi: u8) -> Self {
        self.chi = chi;
        self
    }

    pub fn with_internal_frequencies(mut self, nu: ArmFrequencies) -> Self {
        self.nu = nu;
        self
    }

    pub fn with_control(mut self, control: ControlLasers) -> Self {
        self.control = control;
        self
    }

    pub fn validate(&self, pair: &RedshiftPair) -> Result<()> {
        ensure_finite("tau_s_u", self.tau_s_u)?;
        ensure_finite("tau_s_l", self.tau_s_l)?;
        self.nu.validate("nu")?;
        if let ControlLasers::Explicit(f) = &self.control {
            f.validate("control laser frequency")?;
        }
        if self.tau_s_u < 0.0 || self.tau_s_l < 0.0 {
            return Err(Error::Domain("storage times must be non-negative".into()));
        }
        if self.chi > 1 {
            return Err(Error::Domain(format!("chi must be 0 or 1, got {}", self.chi)));
        }
        match self.sync_mode {
            SyncMode::LocalEqual if self.tau_s_u != self.tau_s_l => Err(Error::Domain(
                "local_equal synchronization needs identical local storage times".into(),
            )),
            SyncMode::GlobalFrame => {
                let scale = self.tau_s_u.max(self.tau_s_l);
                if explicit_mismatch(self.tau_s_u, self.tau_s_l, pair).abs() > 1e-12 * scale {
                    Err(Error::Domain("global_frame synchronization needs tau_u/theta_u = tau_l/theta_l".into()))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// δ = τ_U/Θ_U − τ_L/Θ_L.
    pub fn arm_mismatch(&self, pair: &RedshiftPair) -> f64 {
        match self.sync_mode {
            SyncMode::LocalEqual => -pair.delta_theta_inv() * self.tau_s_u,
            SyncMode::GlobalFrame => 0.0,
            SyncMode::Explicit => explicit_mismatch(self.tau_s_u, self.tau_s_l, pair),
        }
    }

    fn tau(&self, arm: usize) -> f64 {
        if arm == 0 {
            self.tau_s_u
        } else {
            self.tau_s_l
        }
    }

    /// Memory phases reduced to the differences the observables depend on.
    fn phases(&self, spec: &TwoPeakSpectrum, pair: &RedshiftPair) -> StoragePhases {
        let delta = self.arm_mismatch(pair);
        let omegas = [spec.omega1, spec.omega2];
        let chi = f64::from(self.chi);
        match &self.control {
            ControlLasers::Lambda => {
                let internal = |arm: usize, peak: usize| (chi - 1.0) * self.nu.get(arm, peak) * self.tau(arm);
                let diff = |peak: usize| omegas[peak] * delta + internal(0, peak) - internal(1, peak);
                let thetas = [pair.theta_u(), pair.theta_l()];
                let minus = |arm: usize| {
                    spec.omega_minus() * self.tau(arm) / thetas[arm] + internal(arm, 1) - internal(arm, 0)
                };
                let spread = spec.omega_minus() * delta + (internal(0, 1) - internal(1, 1)) - (internal(0, 0) - internal(1, 0));
                StoragePhases { diff: [diff(0), diff(1)], spread, minus: [minus(0), minus(1)] }
            }
            ControlLasers::Explicit(readout) => {
                let alpha = |arm: usize, peak: usize| {
                    (chi * self.nu.get(arm, peak) + readout.get(arm, peak)) * self.tau(arm)
                };
                let diff = [alpha(0, 0) - alpha(1, 0), alpha(0, 1) - alpha(1, 1)];
                StoragePhases {
                    diff,
                    spread: diff[1] - diff[0],
                    minus: [alpha(0, 1) - alpha(0, 0), alpha(1, 1) - alpha(1, 0)],
                }
            }
        }
    }

    /// Per-arm, per-peak phases α_σi computed directly from the model.
    pub(crate) fn raw_phases(&self, spec: &TwoPeakSpectrum, pair: &RedshiftPair) -> [[f64; 2]; 2] {
        let omegas = [spec.omega1, spec.omega2];
        let thetas = [pair.theta_u(), pair.theta_l()];
        let chi = f64::from(self.chi);
        let mut alpha = [[0.0; 2]; 2];
        for (arm, row) in alpha.iter_mut().enumerate() {
            for (peak, a) in row.iter_mut().enumerate() {
                let nu = self.nu.get(arm, peak);
                let readout = match &self.control {
                    ControlLasers::Lambda => omegas[peak] / thetas[arm] - nu,
                    ControlLasers::Explicit(f) => f.get(arm, peak),
                };
                *a = (chi * nu + readout) * self.tau(arm);
            }
        }
        alpha
    }
}

fn explicit_mismatch(tau_u: f64, tau_l: f64, pair: &RedshiftPair) -> f64 {
    let (zu, zl) = (pair.z_u(), pair.z_l());
    ((tau_u - tau_l) + (tau_u * zl - tau_l * zu)) / ((1.0 + zu) * (1.0 + zl))
}

/// α_U1 − α_L1, α_U2 − α_L2 and α_σ2 − α_σ1 per arm.
struct StoragePhases {
    diff: [f64; 2],
    /// diff[1] − diff[0], formed from Ω₋ so it keeps full precision.
    spread: f64,
    minus: [f64; 2],
}

/// Equal local delay τ_d in both arms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DelayConfig {
    pub tau_d: f64,
}

impl DelayConfig {
    pub fn new(tau_d: f64) -> Result<Self> {
        ensure_finite("tau_d", tau_d)?;
        if tau_d < 0.0 {
            return Err(Error::Domain(format!("delay must be non-negative, got {tau_d}")));
        }
        Ok(DelayConfig { tau_d })
    }

    /// δ = τ_d/Θ_U − τ_d/Θ_L.
    pub fn arm_mismatch(&self, pair: &RedshiftPair) -> f64 {
        -pair.delta_theta_inv() * self.tau_d
    }
}

/// Storage element placed in both arms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Storage {
    QMem(QMemConfig),
    Delay(DelayConfig),
}

impl From<QMemConfig> for Storage {
    fn from(q: QMemConfig) -> Self {
        Storage::QMem(q)
    }
}

impl From<DelayConfig> for Storage {
    fn from(d: DelayConfig) -> Self {
        Storage::Delay(d)
    }
}

impl Storage {
    pub fn validate(&self, pair: &RedshiftPair) -> Result<()> {
        match self {
            Storage::QMem(q) => q.validate(pair),
            Storage::Delay(d) => DelayConfig::new(d.tau_d).map(|_| ()),
        }
    }
}

/// Interference observables at one storage setting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PatternPoint {
    /// P_⊖ − P_⊕.
    pub p_c_mz: f64,
    /// Bunching minus anti-bunching probability.
    pub p_c_hom: f64,
    /// [P_⊕, P_⊖].
    pub mz_ports: [f64; 2],
    /// [P_⊕⊕, P_⊕⊖, P_⊖⊕, P_⊖⊖].
    pub hom_ports: [f64; 4],
    /// Total single-photon probability after storage.
    pub norm_mz: f64,
    /// Total pair probability after storage.
    pub norm_hom: f64,
}

/// The independent numbers fixing both reduced density matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Observables {
    pub p_mz: f64,
    pub norm_mz: f64,
    /// ρ_⊕⊖ of the single photon.
    pub coherence_mz: Complex64,
    pub p_hom: f64,
    pub norm_hom: f64,
}

impl Observables {
    pub fn pattern(&self) -> PatternPoint {
        let bunch = 0.25 * (self.norm_hom + self.p_hom);
        let anti = 0.25 * (self.norm_hom - self.p_hom);
        PatternPoint {
            p_c_mz: self.p_mz,
            p_c_hom: self.p_hom,
            mz_ports: [0.5 * (self.norm_mz - self.p_mz), 0.5 * (self.norm_mz + self.p_mz)],
            hom_ports: [bunch, anti, anti, bunch],
            norm_mz: self.norm_mz,
            norm_hom: self.norm_hom,
        }
    }
}

pub(crate) fn qmem_observables(spec: &TwoPeakSpectrum, q: &QMemConfig, pair: &RedshiftPair) -> Result<Observables> {
    q.validate(pair)?;
    let n2_mz = spec.norm_mz()?.powi(2);
    let n2_hom = spec.norm_hom()?.powi(2);
    let ov = spec.overlap_mz();
    let ov2 = spec.overlap_hom();
    let ph = q.phases(spec, pair);
    let half_sum = 0.5 * (ph.diff[0] + ph.diff[1]);
    let half_diff = 0.5 * ph.spread;
    let gamma = 0.5 * (ph.minus[0] + ph.minus[1]) + spec.phi;
    let k = half_diff.cos() + ov * gamma.cos();
    let phi_hom = spec.phi + ph.spread;
    Ok(Observables {
        p_mz: 2.0 * n2_mz * half_sum.cos() * k,
        norm_mz: 2.0 * n2_mz * (1.0 + ov * gamma.cos() * half_diff.cos()),
        coherence_mz: Complex64::new(n2_mz * ov * gamma.sin() * half_diff.sin(), -n2_mz * half_sum.sin() * k),
        p_hom: 2.0 * n2_hom * (phi_hom.cos() + ov2),
        norm_hom: 2.0 * n2_hom * (1.0 + phi_hom.cos() * ov2),
    })
}

pub(crate) fn delay_observables(spec: &TwoPeakSpectrum, d: &DelayConfig, pair: &RedshiftPair) -> Result<Observables> {
    DelayConfig::new(d.tau_d)?;
    let n2_mz = spec.norm_mz()?.powi(2);
    let n2_hom = spec.norm_hom()?.powi(2);
    let delta = d.arm_mismatch(pair);
    let spread = delta * spec.xi;
    let env_mz = (-0.5 * spread * spread).exp();
    let env_hom = env_mz * env_mz;
    let fast = 0.5 * spec.omega_plus() * delta;
    let k = (0.5 * spec.omega_minus() * delta).cos() + spec.overlap_mz() * spec.phi.cos();
    Ok(Observables {
        p_mz: 2.0 * n2_mz * env_mz * fast.cos() * k,
        norm_mz: 1.0,
        coherence_mz: Complex64::new(0.0, -n2_mz * env_mz * fast.sin() * k),
        p_hom: 2.0 * n2_hom * env_hom * ((spec.omega_minus() * delta + spec.phi).cos() + spec.overlap_hom()),
        norm_hom: 1.0,
    })
}

pub(crate) fn observables(spec: &TwoPeakSpectrum, storage: &Storage, pair: &RedshiftPair) -> Result<Observables> {
    match storage {
        Storage::QMem(q) => qmem_observables(spec, q, pair),
        Storage::Delay(d) => delay_observables(spec, d, pair),
    }
}

/// Quantum-memory patterns including the finite-bandwidth overlap terms.
///
/// Outside the large-bandwidth regime the stored state can lose norm; the
/// port probabilities then sum to `norm_mz` / `norm_hom` rather than 1.
pub fn pc_qmem_full(spec: &TwoPeakSpectrum, q: &QMemConfig, pair: &RedshiftPair) -> Result<PatternPoint> {
    Ok(qmem_observables(spec, q, pair)?.pattern())
}

/// Quantum-memory patterns with the peak overlaps dropped:
/// P_c^MZ = cos(Σ/2) cos(Δ/2), P_c^HOM = cos φ'.
pub fn pc_qmem_large_bandwidth(spec: &TwoPeakSpectrum, q: &QMemConfig, pair: &RedshiftPair) -> Result<PatternPoint> {
    Ok(qmem_large_bandwidth_observables(spec, q, pair)?.pattern())
}

fn qmem_large_bandwidth_observables(spec: &TwoPeakSpectrum, q: &QMemConfig, pair: &RedshiftPair) -> Result<Observables> {
    q.validate(pair)?;
    let ph = q.phases(spec, pair);
    let half_sum = 0.5 * (ph.diff[0] + ph.diff[1]);
    let half_diff = 0.5 * ph.spread;
    let p_hom = (spec.phi + ph.spread).cos();
    Ok(Observables {
        p_mz: half_sum.cos() * half_diff.cos(),
        norm_mz: 1.0,
        coherence_mz: Complex64::new(0.0, -0.5 * half_sum.sin() * half_diff.cos()),
        p_hom,
        norm_hom: 1.0,
    })
}

/// Delay-line patterns P_c = 2N²[R + S] with the Gaussian envelopes.
pub fn pc_delay_full(spec: &TwoPeakSpectrum, d: &DelayConfig, pair: &RedshiftPair) -> Result<PatternPoint> {
    Ok(delay_observables(spec, d, pair)?.pattern())
}

/// Delay-line patterns for Ω₋ ≫ ξ: the overlap terms vanish and N² = 1/2.
pub fn pc_delay_large_bandwidth(spec: &TwoPeakSpectrum, d: &DelayConfig, pair: &RedshiftPair) -> Result<PatternPoint> {
    Ok(delay_large_bandwidth_observables(spec, d, pair)?.pattern())
}

fn delay_large_bandwidth_observables(spec: &TwoPeakSpectrum, d: &DelayConfig, pair: &RedshiftPair) -> Result<Observables> {
    DelayConfig::new(d.tau_d)?;
    let delta = d.arm_mismatch(pair);
    let spread = delta * spec.xi;
    let env_mz = (-0.5 * spread * spread).exp();
    let fast = 0.5 * spec.omega_plus() * delta;
    let slow = (0.5 * spec.omega_minus() * delta).cos();
    Ok(Observables {
        p_mz: env_mz * fast.cos() * slow,
        norm_mz: 1.0,
        coherence_mz: Complex64::new(0.0, -0.5 * env_mz * fast.sin() * slow),
        p_hom: env_mz * env_mz * (spec.omega_minus() * delta + spec.phi).cos(),
        norm_hom: 1.0,
    })
}

pub(crate) fn large_bandwidth_observables(
    spec: &TwoPeakSpectrum,
    storage: &Storage,
    pair: &RedshiftPair,
) -> Result<Observables> {
    match storage {
        Storage::QMem(q) => qmem_large_bandwidth_observables(spec, q, pair),
        Storage::Delay(d) => delay_large_bandwidth_observables(spec, d, pair),
    }
}

/// Closed-form pattern for either storage kind.
pub fn pattern(spec: &TwoPeakSpectrum, storage: &Storage, pair: &RedshiftPair) -> Result<PatternPoint> {
    Ok(observables(spec, storage, pair)?.pattern())
}
