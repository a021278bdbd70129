//! Entangling and resolution-limited times over a range of frequency differences.

use gravent::feasibility::{figure3_grid, GRID_RANGE};
use gravent::gravity::{redshift_pair, BodyParams, ScenarioCatalog};

fn main() -> gravent::Result<()> {
    let earth = BodyParams::EARTH;
    let scenarios = ScenarioCatalog::builtin(&earth)
        .iter()
        .map(|s| Ok((s.name.clone(), redshift_pair(s, &earth)?)))
        .collect::<gravent::Result<Vec<_>>>()?;
    for row in figure3_grid(&scenarios, GRID_RANGE, 7)? {
        println!("{:<14} {:>9.1e} rad/s  tau_ent {:>10.3e} s  tau_reslim {:>10.3e} s", row.scenario, row.omega_minus, row.tau_ent, row.tau_reslim);
    }
    Ok(())
}
