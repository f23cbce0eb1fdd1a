//! Ground states of the screened Coulomb well across couplings. For large
//! xi the energy approaches the hydrogenic -xi²/2 shifted by the screening.

use wellbound::solver::solve_bound_state;
use wellbound::variational::solve_variational;
use wellbound::{CouplingStrength, Error, PotentialKind, QuantumNumbers, SolverConfig};

fn main() -> wellbound::Result<()> {
    let kind = PotentialKind::Yukawa;
    let cfg = SolverConfig::default();
    println!(
        "{:>6} {:>14} {:>14} {:>14}",
        "xi", "variational", "reference", "-xi²/2 + xi"
    );
    for xi in [0.5, 0.9, 1.5, 5.0, 20.0, 50.0] {
        let c = CouplingStrength::new(xi)?;
        let var = solve_variational(kind, 0, c).upper_bound();
        let reference = match solve_bound_state(kind, c, QuantumNumbers::new(0, 0), &cfg) {
            Ok(s) => format!("{:>14.6}", s.estimate.value),
            Err(Error::NotFound { .. }) => format!("{:>14}", "unbound"),
            Err(e) => return Err(e),
        };
        let asymptote = if xi >= 5.0 {
            format!("{:>14.6}", -0.5 * xi * xi + xi)
        } else {
            format!("{:>14}", "-")
        };
        println!("{xi:>6} {var:>14.6} {reference} {asymptote}");
    }
    Ok(())
}
