//! Fiber delay line needed to reach the first coincidence zero.

use gravent::feasibility::{delay_line_report, max_omega_minus, omega_minus_from_wavelengths, FiberSpec};
use gravent::gravity::{redshift_pair, BodyParams, ScenarioCatalog};

fn main() -> gravent::Result<()> {
    let earth = BodyParams::EARTH;
    let catalog = ScenarioCatalog::builtin(&earth);

    let sat = redshift_pair(catalog.get("sat-to-sat").unwrap(), &earth)?;
    let w = omega_minus_from_wavelengths(1550e-9, 1310e-9)?;
    let r = delay_line_report(&sat, w, &FiberSpec::TELECOM_PAIR)?;
    println!("1550/1310 nm, sat-to-sat: {:.1} m, {:.2} dB, pair survival {:.3}", r.line.length, r.line.loss_db, r.line.pair_surviving_fraction());

    let geo = redshift_pair(catalog.get("geo-vs-ground").unwrap(), &earth)?;
    for tau_res in [1e-12, 1e-13, 1e-14] {
        let r = delay_line_report(&geo, max_omega_minus(tau_res)?, &FiberSpec::LOW_LOSS)?;
        println!("resolution {tau_res:.0e} s, geo-vs-ground: {:.3e} m, {:.1} dB", r.line.length, r.line.loss_db);
    }
    Ok(())
}
