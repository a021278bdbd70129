//! Detector density matrices, partial transpose and negativity.

use std::f64::consts::TAU;

use gravent::entanglement::{reduced_rho_hom, reduced_rho_mz};
use gravent::gravity::{redshift_pair, BodyParams, ScenarioCatalog};
use gravent::interferometer::{QMemConfig, Storage};
use gravent::spectra::TwoPeakSpectrum;

fn main() -> gravent::Result<()> {
    let earth = BodyParams::EARTH;
    let pair = redshift_pair(ScenarioCatalog::builtin(&earth).get("geo-vs-ground").unwrap(), &earth)?;
    let spec = TwoPeakSpectrum::new(TAU * 377.1e12, TAU * 377.101e12, TAU * 10e6, 0.0)?;
    for tau in [0.0, 0.2, 0.464] {
        let storage: Storage = QMemConfig::local_equal(tau).into();
        let hom = reduced_rho_hom(&spec, &storage, &pair)?;
        let mz = reduced_rho_mz(&spec, &storage, &pair)?;
        println!("tau = {tau} s");
        println!("{}", hom.dump());
        println!("  PT eigenvalues {:?}", hom.partial_transpose_eigenvalues());
        println!("  negativity {:.6}  purity {:.6}  MZ visibility {:.6}\n", hom.negativity(), hom.purity(), mz.visibility());
    }
    Ok(())
}
