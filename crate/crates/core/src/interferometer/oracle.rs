//! Brute-force reference: reduced detector states by spectral quadrature.
//!
//! Frequencies are integrated in the scaled variable x = (ω − Ω₁)/ξ, where
//! the peaks sit at 0 and Ω₋/ξ with unit-normalized Gaussian profiles. Arm
//! phases come straight from the storage model rather than from the closed
//! forms' reduced phase differences. The direct phases lose precision when
//! they are huge, so use moderate parameters when comparing.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::{PatternPoint, Storage};
use crate::gravity::RedshiftPair;
use crate::quadrature::{Components, Quadrature};
use crate::spectra::TwoPeakSpectrum;
use crate::Result;

const MAX_SEGMENTS: usize = 4096;

fn profile(x: f64) -> f64 {
    (2.0 * PI).powf(-0.25) * (-0.25 * x * x).exp()
}

/// Per-arm phases in the storage model.
enum ArmModel {
    /// α_σi with a common offset removed.
    Memory([[f64; 2]; 2]),
    /// ω-dependent phase e^{iωδ} on the upper arm relative to the lower one.
    Delay { delta: f64 },
}

struct Setup {
    ratio: f64,
    phi: f64,
    omega1: f64,
    xi: f64,
    model: ArmModel,
}

impl Setup {
    fn new(spec: &TwoPeakSpectrum, storage: &Storage, pair: &RedshiftPair) -> Result<Self> {
        storage.validate(pair)?;
        let model = match storage {
            Storage::QMem(q) => {
                let mut alpha = q.raw_phases(spec, pair);
                let offset = alpha[1][0];
                for a in alpha.iter_mut().flatten() {
                    *a -= offset;
                }
                ArmModel::Memory(alpha)
            }
            Storage::Delay(d) => ArmModel::Delay { delta: d.tau_d / pair.theta_u() - d.tau_d / pair.theta_l() },
        };
        Ok(Setup { ratio: spec.bandwidth_ratio(), phi: spec.phi, omega1: spec.omega1, xi: spec.xi, model })
    }

    fn window(&self) -> (f64, f64) {
        (-10.0, self.ratio + 10.0)
    }

    fn segments(&self) -> usize {
        let rate = match self.model {
            ArmModel::Memory(_) => 0.0,
            ArmModel::Delay { delta } => (self.xi * delta).abs(),
        };
        let (a, b) = self.window();
        let cycles = rate * (b - a) / (4.0 * PI);
        (cycles.ceil() as usize).clamp(1, MAX_SEGMENTS)
    }

    fn quadrature(&self, base: &Quadrature) -> Quadrature {
        base.with_initial_segments(self.segments().max(base.initial_segments))
    }

    /// Single-photon amplitudes (ψ_U, ψ_L) after storage, before the beam splitter.
    fn arms(&self, norm: f64, x: f64) -> (Complex64, Complex64) {
        let g1 = profile(x);
        let g2 = profile(x - self.ratio);
        let scale = norm * FRAC_1_SQRT_2;
        match &self.model {
            ArmModel::Memory(alpha) => {
                let arm = |s: usize| {
                    (Complex64::from_polar(g1, alpha[s][0]) + Complex64::from_polar(g2, alpha[s][1] + self.phi)) * scale
                };
                (arm(0), arm(1))
            }
            ArmModel::Delay { delta } => {
                let psi = (Complex64::new(g1, 0.0) + Complex64::from_polar(g2, self.phi)) * scale;
                let shift = Complex64::from_polar(1.0, self.omega1 * delta) * Complex64::from_polar(1.0, self.xi * x * delta);
                (psi * shift, psi)
            }
        }
    }

    /// Pair amplitude with the upper-arm photon at x1, lower-arm photon at x2.
    fn pair(&self, norm: f64, x1: f64, x2: f64) -> Complex64 {
        let a = profile(x1) * profile(x2 - self.ratio);
        let b = profile(x1 - self.ratio) * profile(x2);
        match &self.model {
            ArmModel::Memory(alpha) => {
                (Complex64::from_polar(a, alpha[0][0] + alpha[1][1])
                    + Complex64::from_polar(b, alpha[0][1] + alpha[1][0] + self.phi))
                    * norm
            }
            ArmModel::Delay { delta } => {
                (Complex64::new(a, 0.0) + Complex64::from_polar(b, self.phi))
                    * norm
                    * Complex64::from_polar(1.0, self.xi * x1 * delta)
            }
        }
    }
}

fn unpack<const D: usize, const N: usize>(c: Components<N>) -> [[Complex64; D]; D] {
    let mut m = [[Complex64::new(0.0, 0.0); D]; D];
    for (k, entry) in m.iter_mut().flatten().enumerate() {
        *entry = Complex64::new(c.0[2 * k], c.0[2 * k + 1]);
    }
    m
}

fn outer<const D: usize, const N: usize>(amps: &[Complex64; D]) -> Components<N> {
    let mut out = [0.0; N];
    for a in 0..D {
        for b in 0..D {
            let z = amps[a] * amps[b].conj();
            out[2 * (a * D + b)] = z.re;
            out[2 * (a * D + b) + 1] = z.im;
        }
    }
    Components(out)
}

/// ρ over {⊕, ⊖} for the single photon, by quadrature.
pub fn assemble_mz(
    spec: &TwoPeakSpectrum,
    storage: &Storage,
    pair: &RedshiftPair,
    quad: &Quadrature,
) -> Result<[[Complex64; 2]; 2]> {
    let setup = Setup::new(spec, storage, pair)?;
    let norm = spec.norm_mz()?;
    let (a, b) = setup.window();
    let est = setup.quadrature(quad).integrate(
        |x| {
            let (u, l) = setup.arms(norm, x);
            let plus = (u - l) * FRAC_1_SQRT_2;
            let minus = -(u + l) * FRAC_1_SQRT_2;
            outer::<2, 8>(&[plus, minus])
        },
        a,
        b,
    )?;
    Ok(unpack(est.value))
}

/// ρ over {⊕⊕, ⊕⊖, ⊖⊕, ⊖⊖} for the photon pair, by 2-D quadrature.
pub fn assemble_hom(
    spec: &TwoPeakSpectrum,
    storage: &Storage,
    pair: &RedshiftPair,
    quad: &Quadrature,
) -> Result<[[Complex64; 4]; 4]> {
    let setup = Setup::new(spec, storage, pair)?;
    let norm = spec.norm_hom()?;
    let w = setup.window();
    let scale = 0.5 * FRAC_1_SQRT_2;
    let est = setup.quadrature(quad).integrate_2d(
        |x1, x2| {
            let direct = setup.pair(norm, x1, x2);
            let swapped = setup.pair(norm, x2, x1);
            let sym = (direct + swapped) * scale;
            let anti = (direct - swapped) * scale;
            outer::<4, 32>(&[sym, anti, -anti, -sym])
        },
        w,
        w,
    )?;
    Ok(unpack(est.value))
}

/// Interference pattern from the quadrature-assembled detector states.
pub fn pc_via_quadrature(
    spec: &TwoPeakSpectrum,
    storage: &Storage,
    pair: &RedshiftPair,
    quad: &Quadrature,
) -> Result<PatternPoint> {
    let mz = assemble_mz(spec, storage, pair, quad)?;
    let hom = assemble_hom(spec, storage, pair, quad)?;
    let mz_ports = [mz[0][0].re, mz[1][1].re];
    let hom_ports = [hom[0][0].re, hom[1][1].re, hom[2][2].re, hom[3][3].re];
    Ok(PatternPoint {
        p_c_mz: mz_ports[1] - mz_ports[0],
        p_c_hom: hom_ports[0] + hom_ports[3] - hom_ports[1] - hom_ports[2],
        mz_ports,
        hom_ports,
        norm_mz: mz_ports.iter().sum(),
        norm_hom: hom_ports.iter().sum(),
    })
}
