//! The empirical energy formula for the Gaussian well next to its harmonic
//! zeroth-order term, plus the coupling at which each level appears.

use wellbound::empirical::{harmonic_zeroth_energy, koksal_critical, koksal_energy};
use wellbound::{CouplingStrength, QuantumNumbers};

fn main() -> wellbound::Result<()> {
    let xi = CouplingStrength::new(200.0)?;
    println!("{:>3} {:>3} {:>12} {:>12} {:>10}", "n", "l", "E_HO", "E_K", "xi_K");
    for n in 0..3 {
        for l in 0..4 {
            let qn = QuantumNumbers::new(n, l);
            let ho = harmonic_zeroth_energy(qn, xi).value;
            let k = koksal_energy(qn, xi).value;
            let crit = koksal_critical(qn)?.value();
            println!("{n:>3} {l:>3} {ho:>12.4} {k:>12.4} {crit:>10.4}");
        }
    }
    Ok(())
}
