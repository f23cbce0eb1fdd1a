//! Köksal's empirical closed-form energies for the Gaussian well.
//!
//! With `x = E_HO + xi = (2n + l + 3/2) sqrt(2 xi)` the formula reads
//! `E_K = x/2 - xi exp(-x / (2 xi))`. There is no counterpart for the
//! Yukawa well, so every entry point taking a [`PotentialKind`] rejects it.

use crate::error::{Error, Result};
use crate::model::{CouplingStrength, EnergyEstimate, Method, PotentialKind, QuantumNumbers};
use crate::roots;

/// Absolute tolerance on the critical coupling.
pub const CRITICAL_XTOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KoksalInput {
    pub qn: QuantumNumbers,
    pub xi: CouplingStrength,
}

pub fn ensure_supported(kind: PotentialKind) -> Result<()> {
    match kind {
        PotentialKind::Gaussian => Ok(()),
        PotentialKind::Yukawa => Err(Error::Unsupported {
            method: "koksal",
            potential: kind,
        }),
    }
}

/// Excitation above the well bottom in the harmonic approximation,
/// `(2n + l + 3/2) sqrt(2 xi)`.
fn harmonic_excitation(qn: QuantumNumbers, xi: f64) -> f64 {
    qn.oscillator_index() * (2.0 * xi).sqrt()
}

fn koksal_value(qn: QuantumNumbers, xi: f64) -> f64 {
    let x = harmonic_excitation(qn, xi);
    0.5 * x - xi * (-x / (2.0 * xi)).exp()
}

/// `-xi + (2n + l + 3/2) sqrt(2 xi)`.
pub fn harmonic_zeroth_energy(qn: QuantumNumbers, xi: CouplingStrength) -> EnergyEstimate {
    let e = -xi.value() + harmonic_excitation(qn, xi.value());
    EnergyEstimate::classify(Method::HarmonicZeroth, PotentialKind::Gaussian, xi, e)
}

pub fn koksal_energy(qn: QuantumNumbers, xi: CouplingStrength) -> EnergyEstimate {
    let e = koksal_value(qn, xi.value());
    EnergyEstimate {
        method: Method::Koksal,
        value: e,
        bound: e < 0.0,
    }
}

pub fn koksal_energy_for(kind: PotentialKind, input: KoksalInput) -> Result<EnergyEstimate> {
    ensure_supported(kind)?;
    Ok(koksal_energy(input.qn, input.xi))
}

/// Relative deviation of the empirical energy from its second-order
/// expansion `E_HO - (E_HO + xi)² / (8 xi)`.
///
/// The difference is formed from `exp_m1` so that it stays accurate when
/// both sides are large and nearly equal.
pub fn expansion_deviation(qn: QuantumNumbers, xi: CouplingStrength) -> f64 {
    let xi = xi.value();
    let x = harmonic_excitation(qn, xi);
    let t = x / (2.0 * xi);
    let second_order = x * x / (8.0 * xi);
    // E_K - [E_HO - x²/(8 xi)] = -xi (e^{-t} - 1 + t - t²/2)
    let tail = (-t).exp_m1() + t - 0.5 * t * t;
    (-xi * tail).abs() / second_order
}

/// Smallest coupling at which the empirical formula predicts a bound
/// `(n, l)` state, i.e. the zero of `E_K(xi)`.
///
/// At `xi0 = (2n + l + 3/2)² / 2` the formula gives `xi0 (1 - 1/e) > 0`; the
/// upper end of the bracket is doubled from there until the energy turns
/// negative.
pub fn koksal_critical(qn: QuantumNumbers) -> Result<CouplingStrength> {
    let k = qn.oscillator_index();
    let lo = 0.5 * k * k;
    if koksal_value(qn, lo) <= 0.0 {
        return Err(Error::Bracket(format!("E_K({lo}) is not positive for {qn:?}")));
    }
    let mut hi = 2.0 * lo;
    let mut doublings = 0;
    while koksal_value(qn, hi) >= 0.0 {
        hi *= 2.0;
        doublings += 1;
        if doublings > 60 {
            return Err(Error::Bracket(format!(
                "no sign change of E_K above xi = {lo} for {qn:?}"
            )));
        }
    }
    let (a, b) = roots::bisect(|xi| koksal_value(qn, xi), lo, hi, CRITICAL_XTOL, 200)?;
    CouplingStrength::new(0.5 * (a + b))
}

pub fn koksal_critical_for(kind: PotentialKind, qn: QuantumNumbers) -> Result<CouplingStrength> {
    ensure_supported(kind)?;
    koksal_critical(qn)
}
