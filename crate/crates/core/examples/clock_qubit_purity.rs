//! A single clock in superposition of heights loses spatial purity as its
//! internal states drift apart.

use std::f64::consts::TAU;

use gravent::clocks::{single_qubit_entangling_time, single_qubit_reduced_state, ClockSpec};
use gravent::gravity::{redshift_pair, BodyParams, ScenarioCatalog};

fn main() -> gravent::Result<()> {
    let earth = BodyParams::EARTH;
    let catalog = ScenarioCatalog::builtin(&earth);
    let pair = redshift_pair(catalog.get("geo-vs-ground").unwrap(), &earth)?;
    let clock = ClockSpec::new(TAU * 10e9, 0.0)?;
    let t_ent = single_qubit_entangling_time(&clock, pair.delta_theta())?;
    println!("entangling time: {t_ent:.4} s");
    for k in 0..=8 {
        let tau = t_ent * k as f64 / 4.0;
        let rho = single_qubit_reduced_state(&clock, &pair, tau);
        println!("tau = {tau:.4} s  purity = {:.6}  entropy = {:.6}", rho.purity(), rho.linear_entropy());
    }
    Ok(())
}
