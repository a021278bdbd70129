//! Pair coincidences behind a fiber delay line. The envelope decays once the
//! arm mismatch exceeds the inverse bandwidth.

use gravent::gravity::RedshiftPair;
use gravent::interferometer::{pattern, DelayConfig};
use gravent::spectra::TwoPeakSpectrum;

fn main() -> gravent::Result<()> {
    let pair = RedshiftPair::from_shifts(5e-2, 0.0)?;
    let spec = TwoPeakSpectrum::new(100.0, 130.0, 1.0, 0.0)?;
    for k in 0..=12 {
        let delta = k as f64 * 0.25;
        let storage = DelayConfig::new(delta / pair.delta_theta_inv())?.into();
        let p = pattern(&spec, &storage, &pair)?;
        println!("xi*delta = {delta:>5.2}  P_hom = {:+.6}  ports = {:?}", p.p_c_hom, p.hom_ports);
    }
    Ok(())
}
