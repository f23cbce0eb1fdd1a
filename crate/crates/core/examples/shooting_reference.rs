//! Numerov shooting for the lowest Gaussian-well levels, with node counts
//! and the step-halving error estimate.

use wellbound::solver::{count_bound_states, solve_bound_state};
use wellbound::{CouplingStrength, PotentialKind, QuantumNumbers, SolverConfig};

fn main() -> wellbound::Result<()> {
    let kind = PotentialKind::Gaussian;
    let xi = CouplingStrength::new(200.0)?;
    let cfg = SolverConfig::default();

    for l in 0..3 {
        let count = count_bound_states(kind, xi, l, &cfg)?;
        println!("l={l}: {count} bound states");
        for n in 0..count.min(4) as u32 {
            let s = solve_bound_state(kind, xi, QuantumNumbers::new(n, l), &cfg)?;
            println!(
                "  n={n}  E = {:>14.8}  nodes = {}  error ~ {:.1e}  r_max = {:.1}",
                s.estimate.value,
                s.solution.node_count,
                s.discretization_error,
                s.solution.r_max()
            );
        }
    }
    Ok(())
}
