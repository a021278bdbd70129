//! Gaussian single- and two-photon spectral wavefunctions.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::ensure_finite;
use crate::{Error, Result};

/// Ratio Ω₋/ξ above which the large-bandwidth closed forms apply.
pub const LARGE_BANDWIDTH_RATIO: f64 = 20.0;

/// Gaussian amplitude g(ω) = (2πξ²)^{-1/4} e^{−(ω−Ω)²/(4ξ²)}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianPeak {
    pub center: f64,
    pub width: f64,
}

impl GaussianPeak {
    pub fn new(center: f64, width: f64) -> Result<Self> {
        ensure_finite("center", center)?;
        ensure_finite("width", width)?;
        if width <= 0.0 {
            return Err(Error::Domain(format!("peak width must be positive, got {width}")));
        }
        if center <= 0.0 {
            return Err(Error::Domain(format!("peak center must be positive, got {center}")));
        }
        Ok(GaussianPeak { center, width })
    }

    pub fn amplitude(&self, omega: f64) -> f64 {
        gaussian(omega - self.center, self.width)
    }
}

/// (2πξ²)^{-1/4} e^{−d²/(4ξ²)} for an offset d from the peak.
pub(crate) fn gaussian(offset: f64, width: f64) -> f64 {
    let x = offset / width;
    (2.0 * PI * width * width).powf(-0.25) * (-0.25 * x * x).exp()
}

/// ∫ g_i g_j dω = e^{−(Ω_j − Ω_i)²/(8ξ²)} for equal widths.
pub fn overlap(a: &GaussianPeak, b: &GaussianPeak) -> Result<f64> {
    if (a.width - b.width).abs() > 1e-12 * a.width.max(b.width) {
        return Err(Error::Unsupported(format!(
            "overlap of peaks with different widths ({} and {})",
            a.width, b.width
        )));
    }
    let d = (b.center - a.center) / a.width;
    Ok((-d * d / 8.0).exp())
}

/// Two-frequency state (Ω₁, Ω₂, ξ, φ).
///
/// Single photon: ψ(ω) = N_MZ [g₁(ω) + e^{iφ} g₂(ω)].
/// Photon pair: ψ(ω₁, ω₂) = N_HOM [g₁(ω₁) g₂(ω₂) + e^{iφ} g₂(ω₁) g₁(ω₂)].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoPeakSpectrum {
    pub omega1: f64,
    pub omega2: f64,
    pub xi: f64,
    pub phi: f64,
}

impl TwoPeakSpectrum {
    pub fn new(omega1: f64, omega2: f64, xi: f64, phi: f64) -> Result<Self> {
        GaussianPeak::new(omega1, xi)?;
        GaussianPeak::new(omega2, xi)?;
        ensure_finite("phi", phi)?;
        if omega2 < omega1 {
            return Err(Error::Domain(format!("expected omega2 >= omega1, got {omega2} < {omega1}")));
        }
        Ok(TwoPeakSpectrum { omega1, omega2, xi, phi })
    }

    pub fn omega_minus(&self) -> f64 {
        self.omega2 - self.omega1
    }

    pub fn omega_plus(&self) -> f64 {
        self.omega2 + self.omega1
    }

    /// Ω₋/ξ.
    pub fn bandwidth_ratio(&self) -> f64 {
        self.omega_minus() / self.xi
    }

    pub fn is_large_bandwidth(&self) -> bool {
        self.bandwidth_ratio() >= LARGE_BANDWIDTH_RATIO
    }

    pub fn peak1(&self) -> GaussianPeak {
        GaussianPeak { center: self.omega1, width: self.xi }
    }

    pub fn peak2(&self) -> GaussianPeak {
        GaussianPeak { center: self.omega2, width: self.xi }
    }

    /// Single-photon peak overlap e^{−Ω₋²/(8ξ²)}.
    pub fn overlap_mz(&self) -> f64 {
        let r = self.bandwidth_ratio();
        (-r * r / 8.0).exp()
    }

    /// Pair overlap e^{−Ω₋²/(4ξ²)}.
    pub fn overlap_hom(&self) -> f64 {
        let r = self.bandwidth_ratio();
        (-r * r / 4.0).exp()
    }

    fn norm_from(&self, overlap: f64) -> Result<f64> {
        let arg = 2.0 * (1.0 + self.phi.cos() * overlap);
        if arg <= 4.0 * f64::EPSILON {
            return Err(Error::ZeroNormState);
        }
        Ok(arg.powf(-0.5))
    }

    /// N_MZ = (2[1 + cos φ e^{−Ω₋²/(8ξ²)}])^{-1/2}.
    pub fn norm_mz(&self) -> Result<f64> {
        self.norm_from(self.overlap_mz())
    }

    /// N_HOM = (2[1 + cos φ e^{−Ω₋²/(4ξ²)}])^{-1/2}.
    pub fn norm_hom(&self) -> Result<f64> {
        self.norm_from(self.overlap_hom())
    }

    /// ψ(ω) for the single photon.
    pub fn psi_mz(&self, omega: f64) -> Result<Complex64> {
        let g1 = gaussian(omega - self.omega1, self.xi);
        let g2 = gaussian(omega - self.omega2, self.xi);
        Ok((Complex64::new(g1, 0.0) + Complex64::from_polar(g2, self.phi)) * self.norm_mz()?)
    }

    /// ψ(ω₁, ω₂) for the photon pair.
    pub fn psi_hom(&self, w1: f64, w2: f64) -> Result<Complex64> {
        let a = gaussian(w1 - self.omega1, self.xi) * gaussian(w2 - self.omega2, self.xi);
        let b = gaussian(w1 - self.omega2, self.xi) * gaussian(w2 - self.omega1, self.xi);
        Ok((Complex64::new(a, 0.0) + Complex64::from_polar(b, self.phi)) * self.norm_hom()?)
    }

    /// Input amplitude ψ_{σ₁σ₂}(ω₁, ω₂) of the pair entering the beam
    /// splitter, one photon per port, labelled by arm (0 = U, 1 = L).
    pub fn psi_hom_ports(&self, s1: usize, s2: usize, w1: f64, w2: f64) -> Result<Complex64> {
        let mut amp = Complex64::new(0.0, 0.0);
        if s1 == 0 && s2 == 1 {
            amp += self.psi_hom(w1, w2)?;
        }
        if s1 == 1 && s2 == 0 {
            amp += self.psi_hom(w2, w1)?;
        }
        Ok(amp / 2f64.sqrt())
    }

    /// Integration window [Ω₁ − 10ξ, Ω₂ + 10ξ].
    pub fn window(&self) -> (f64, f64) {
        (self.omega1 - 10.0 * self.xi, self.omega2 + 10.0 * self.xi)
    }
}
