//! Interference patterns with quantum-memory storage, local and global synchronisation.

use std::f64::consts::TAU;

use gravent::gravity::{redshift_pair, BodyParams, ScenarioCatalog};
use gravent::interferometer::{pattern, QMemConfig};
use gravent::spectra::TwoPeakSpectrum;
use gravent::sweep::linspace;

fn main() -> gravent::Result<()> {
    let earth = BodyParams::EARTH;
    let pair = redshift_pair(ScenarioCatalog::builtin(&earth).get("geo-vs-ground").unwrap(), &earth)?;
    let spec = TwoPeakSpectrum::new(TAU * 377.1e12, TAU * 377.101e12, TAU * 10e6, 0.0)?;
    println!("{:>8} {:>10} {:>10} {:>10}", "tau [s]", "P_mz", "P_hom", "P_hom glob");
    for tau in linspace(0.0, 2.0, 11)? {
        let local = pattern(&spec, &QMemConfig::local_equal(tau).into(), &pair)?;
        let global = pattern(&spec, &QMemConfig::global_frame(tau, &pair).into(), &pair)?;
        println!("{tau:>8.2} {:>10.5} {:>10.5} {:>10.5}", local.p_c_mz, local.p_c_hom, global.p_c_hom);
    }
    Ok(())
}
