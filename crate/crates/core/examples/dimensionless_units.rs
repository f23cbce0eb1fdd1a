//! Maps an electron in a 400 Ry deep Gaussian well of one Bohr radius onto
//! the dimensionless problem, solves it there and converts back to eV.

use wellbound::model::{reduce_to_dimensionless, restore_energy};
use wellbound::solver::solve_bound_state;
use wellbound::{DimensionalParameters, PotentialKind, QuantumNumbers, SolverConfig};

const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
const HBAR: f64 = 1.054_571_817e-34;
const BOHR_RADIUS: f64 = 5.291_772_109_03e-11;
const RYDBERG: f64 = 2.179_872_361_103_5e-18;
const EV: f64 = 1.602_176_634e-19;

fn main() -> wellbound::Result<()> {
    let params = DimensionalParameters {
        mass: ELECTRON_MASS,
        depth: 400.0 * RYDBERG,
        width: 1.0 / (BOHR_RADIUS * BOHR_RADIUS),
        hbar: HBAR,
    };
    let kind = PotentialKind::Gaussian;
    let (xi, scale) = reduce_to_dimensionless(&params, kind)?;
    println!("xi = {:.6}", xi.value());
    println!("energy unit = {:.6} eV", scale / EV);

    let cfg = SolverConfig::default();
    for n in 0..3 {
        let state = solve_bound_state(kind, xi, QuantumNumbers::new(n, 0), &cfg)?;
        let e = state.estimate.value;
        println!(
            "n={n}  E' = {e:>12.6}  E = {:>12.4} eV",
            restore_energy(&params, kind, e)? / EV
        );
    }
    Ok(())
}
