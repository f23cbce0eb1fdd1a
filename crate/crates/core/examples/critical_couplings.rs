//! Binding thresholds of both wells by every applicable method.

use wellbound::analysis::{figure3_data, figure4_data};
use wellbound::SolverConfig;

fn main() -> wellbound::Result<()> {
    let cfg = SolverConfig::default();
    let gaussian = figure3_data(6, &cfg)?;
    println!("gaussian   l   koksal   variational   reference");
    for r in &gaussian.rows {
        println!(
            "        {:>4} {:>8.4} {:>13.4} {:>11.4}",
            r.l,
            r.xi_koksal.unwrap_or(f64::NAN),
            r.xi_variational,
            r.xi_reference
        );
    }

    let yukawa = figure4_data(6, &cfg)?;
    println!("yukawa     l   variational   reference");
    for r in &yukawa.rows {
        println!("        {:>4} {:>13.4} {:>11.4}", r.l, r.xi_variational, r.xi_reference);
    }
    Ok(())
}
