//! Bound states and binding thresholds of the attractive Gaussian well
//! `-xi exp(-r²)` and the Yukawa well `-xi exp(-r)/r`.
//!
//! Three independent routes to the `n`, `l` energies are provided:
//!
//! * [`empirical`]: Köksal's closed-form approximant (Gaussian only),
//! * [`variational`]: the one-parameter variational bound for `n = 0`,
//! * [`solver`]: a Numerov shooting solver used as the reference.
//!
//! [`analysis`] assembles the method comparisons and [`cli`] writes them out.

pub mod analysis;
pub mod cli;
pub mod empirical;
pub mod error;
pub mod model;
pub mod roots;
pub mod solver;
pub mod variational;

pub use error::{Error, Result};
pub use model::{CouplingStrength, DimensionalParameters, EnergyEstimate, Method, PotentialKind, QuantumNumbers};
pub use solver::SolverConfig;

/// Energy of `(n, l)` by any method.
///
/// Köksal's formula is rejected for the Yukawa well and the variational
/// route only covers `n = 0`.
pub fn estimate_energy(
    kind: PotentialKind,
    method: Method,
    qn: QuantumNumbers,
    xi: CouplingStrength,
    cfg: &SolverConfig,
) -> Result<EnergyEstimate> {
    match method {
        Method::HarmonicZeroth => {
            empirical::ensure_supported(kind)?;
            Ok(empirical::harmonic_zeroth_energy(qn, xi))
        }
        Method::Koksal => empirical::koksal_energy_for(kind, empirical::KoksalInput { qn, xi }),
        Method::Variational => {
            if qn.n != 0 {
                return Err(Error::domain("the variational route only covers n = 0"));
            }
            Ok(variational::solve_variational(kind, qn.l, xi).estimate())
        }
        Method::Reference => Ok(solver::solve_bound_state(kind, xi, qn, cfg)?.estimate),
    }
}

/// Critical coupling of `(n, l)` by any method except the harmonic one.
pub fn critical_coupling(
    kind: PotentialKind,
    method: Method,
    qn: QuantumNumbers,
    cfg: &SolverConfig,
) -> Result<CouplingStrength> {
    match method {
        Method::HarmonicZeroth => Err(Error::Unsupported {
            method: "harmonic",
            potential: kind,
        }),
        Method::Koksal => empirical::koksal_critical_for(kind, qn),
        Method::Variational => {
            if qn.n != 0 {
                return Err(Error::domain("the variational route only covers n = 0"));
            }
            Ok(variational::critical_coupling_closed_form(kind, qn.l))
        }
        Method::Reference => CouplingStrength::new(solver::critical_coupling_reference_state(kind, qn, cfg)?.xi_crit),
    }
}
