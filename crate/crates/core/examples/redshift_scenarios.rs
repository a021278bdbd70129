//! Redshift factors and couplings for the built-in scenarios.

use gravent::gravity::{redshift_pair, BodyParams, ScenarioCatalog};

fn main() -> gravent::Result<()> {
    let earth = BodyParams::EARTH;
    println!("{:<14} {:>22} {:>14}", "scenario", "z_u", "delta");
    for s in ScenarioCatalog::builtin(&earth).iter() {
        let pair = redshift_pair(s, &earth)?;
        println!("{:<14} {:>22.6e} {:>14.4e}", s.name, pair.z_u(), pair.delta_theta_inv());
    }
    Ok(())
}
