//! Two clocks: spatial negativity for each initial state.

use std::f64::consts::TAU;

use gravent::clocks::{two_qubit_entangling_time, two_qubit_negativity, ClockSpec, TwoQubitInitial};
use gravent::gravity::{redshift_pair, BodyParams, ScenarioCatalog};

fn main() -> gravent::Result<()> {
    let earth = BodyParams::EARTH;
    let pair = redshift_pair(ScenarioCatalog::builtin(&earth).get("geo-vs-ground").unwrap(), &earth)?;
    let clock = ClockSpec::new(TAU * 10e9, 0.0)?;
    let t = two_qubit_entangling_time(&clock, pair.delta_theta())?;
    for initial in TwoQubitInitial::ALL {
        let trace: Vec<String> = (0..=4)
            .map(|k| format!("{:.3}", two_qubit_negativity(initial, &clock, &pair, t * k as f64 / 2.0)))
            .collect();
        println!("{initial:?}: {}", trace.join(" "));
    }
    Ok(())
}
