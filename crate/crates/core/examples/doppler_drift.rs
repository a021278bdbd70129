//! Relative Doppler shift between a MEO and a geostationary satellite.

use gravent::gravity::{doppler_profile, BodyParams};

fn main() -> gravent::Result<()> {
    let earth = BodyParams::EARTH;
    let meo = 1.6371e7;
    let geo = earth.synchronous_radius();
    for t in [0.0, 1.0, 10.0, 60.0, 600.0, 3600.0] {
        let s = doppler_profile(meo, geo, t, &earth)?;
        println!(
            "t = {t:>6} s  separation = {:.6e} m  z = {:+.3e}  path = {:.3e} wavelengths",
            s.separation,
            s.redshift,
            s.path_phase(1550e-9)
        );
    }
    Ok(())
}
