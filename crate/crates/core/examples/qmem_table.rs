use gravent::feasibility::{agrees_to_three_figures, qmem_combinations, LISTED_SEPARATIONS_THZ};

fn main() {
    for (combo, listed) in qmem_combinations().iter().zip(LISTED_SEPARATIONS_THZ) {
        let got = combo.separation_thz();
        let mark = if agrees_to_three_figures(got, listed) { "ok" } else { "differs" };
        println!("{}-{}: {got:>7.2} THz (listed {listed}) {mark}", combo.first, combo.second);
    }
}
