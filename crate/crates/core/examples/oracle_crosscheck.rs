//! Closed-form patterns against brute-force quadrature of the detector states.

use gravent::gravity::RedshiftPair;
use gravent::interferometer::{pattern, pc_via_quadrature, DelayConfig, QMemConfig, Storage};
use gravent::quadrature::Quadrature;
use gravent::spectra::TwoPeakSpectrum;

fn main() -> gravent::Result<()> {
    let pair = RedshiftPair::from_shifts(5e-2, 1e-2)?;
    let quad = Quadrature::default();
    for (ratio, phi, phase) in [(0.5, 0.3, 1.0), (3.0, 1.7, 2.5), (25.0, 4.0, 0.4)] {
        let spec = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, phi)?;
        let tau = phase / (pair.delta_theta_inv() * spec.omega_minus());
        let storages: [(&str, Storage); 2] =
            [("delay", DelayConfig::new(tau)?.into()), ("qmem", QMemConfig::local_equal(tau).into())];
        for (label, storage) in storages {
            let closed = pattern(&spec, &storage, &pair)?;
            let brute = pc_via_quadrature(&spec, &storage, &pair, &quad)?;
            println!(
                "ratio {ratio:>4} {label:<5} closed {:+.12} quad {:+.12} diff {:.1e}",
                closed.p_c_hom,
                brute.p_c_hom,
                (closed.p_c_hom - brute.p_c_hom).abs()
            );
        }
    }
    Ok(())
}
