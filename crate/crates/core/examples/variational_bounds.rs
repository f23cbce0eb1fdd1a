//! Variational ground-state energies per angular momentum, with the
//! optimal trial exponent and the closed-form binding threshold.

use wellbound::variational::{critical_coupling_closed_form, solve_variational};
use wellbound::{CouplingStrength, PotentialKind};

fn main() -> wellbound::Result<()> {
    for (kind, xi) in [(PotentialKind::Gaussian, 50.0), (PotentialKind::Yukawa, 20.0)] {
        println!("{kind}, xi = {xi}");
        let coupling = CouplingStrength::new(xi)?;
        for l in 0..5 {
            let threshold = critical_coupling_closed_form(kind, l).value();
            let r = solve_variational(kind, l, coupling);
            match r.point {
                Some(p) if r.bound => {
                    println!(
                        "  l={l}  a = {:.6}  E <= {:.6}  (bound above xi = {threshold:.4})",
                        p.a, p.energy
                    )
                }
                _ => println!("  l={l}  unbound (needs xi > {threshold:.4})"),
            }
        }
    }
    Ok(())
}
