//! One-parameter variational treatment of the `n = 0` states.
//!
//! Trial functions are `r^(l+1) exp(-a r²)` (Gaussian well) and
//! `r^(l+1) exp(-a r)` (Yukawa well). Their Rayleigh quotients are
//!
//! ```text
//! Gaussian: <H>(a) = a (2l+3)/2 - xi (2a / (2a+1))^((2l+3)/2)
//! Yukawa:   <H>(a) = a²/2 - xi (2a)^(2l+3) / ((2l+2) (2a+1)^(2l+2))
//! ```
//!
//! and eliminating `xi` from `d<H>/da = 0` gives a parametric curve
//! `a -> (xi(a), E(a))`, the stationarity locus. The locus has a single
//! minimum in `xi` at `a*`; points with `a > a*` are minima of `<H>`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{CouplingStrength, EnergyEstimate, Method, PotentialKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    LocalMax,
    LocalMin,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationalStationaryPoint {
    pub a: f64,
    pub xi: f64,
    pub energy: f64,
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationalResult {
    /// Energy-minimising stationary point, absent below the locus minimum.
    pub point: Option<VariationalStationaryPoint>,
    /// `<H>` evaluated directly at `point.a` (0 when there is no point, the
    /// infimum reached as `a -> 0`).
    pub functional_value: f64,
    pub bound: bool,
}

impl VariationalResult {
    /// Energy of the stationary point, or 0 when none exists.
    pub fn energy(&self) -> f64 {
        self.point.map_or(0.0, |p| p.energy)
    }

    /// The variational upper bound on the lowest state, `min(E, 0)`.
    ///
    /// `<H>(a) -> 0` as `a -> 0`, so zero is always an admissible bound.
    pub fn upper_bound(&self) -> f64 {
        self.energy().min(0.0)
    }

    pub fn estimate(&self) -> EnergyEstimate {
        EnergyEstimate {
            method: Method::Variational,
            value: self.energy(),
            bound: self.bound,
        }
    }
}

fn check_a(a: f64) -> Result<()> {
    if a.is_finite() && a > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("trial exponent a must be positive, got {a}")))
    }
}

/// `ln xi(a)` on the stationarity locus.
fn ln_locus_xi(kind: PotentialKind, l: u32, a: f64) -> f64 {
    let l = l as f64;
    let ln2 = std::f64::consts::LN_2;
    match kind {
        PotentialKind::Gaussian => {
            0.5 * (2.0 * l + 5.0) * (2.0 * a + 1.0).ln() - (l + 1.5) * ln2 - 0.5 * (2.0 * l + 1.0) * a.ln()
        }
        PotentialKind::Yukawa => {
            (l + 1.0).ln() + (2.0 * l + 3.0) * (2.0 * a + 1.0).ln()
                - (2.0 * l + 2.0) * ln2
                - (2.0 * l + 1.0) * a.ln()
                - (2.0 * a + 2.0 * l + 3.0).ln()
        }
    }
}

fn locus_energy(kind: PotentialKind, l: u32, a: f64) -> f64 {
    let l = l as f64;
    match kind {
        PotentialKind::Gaussian => 0.5 * a * (2.0 * l + 1.0 - 4.0 * a),
        PotentialKind::Yukawa => a * a * (2.0 * l + 1.0 - 2.0 * a) / (2.0 * (2.0 * a + 2.0 * l + 3.0)),
    }
}

/// Trial exponent at which the locus coupling is smallest.
///
/// Gaussian: `(2l+1)/8`. Yukawa: positive root of
/// `4a² + (4l+8)a - (2l+1)(2l+3) = 0`.
pub fn locus_minimum(kind: PotentialKind, l: u32) -> f64 {
    let l = l as f64;
    match kind {
        PotentialKind::Gaussian => (2.0 * l + 1.0) / 8.0,
        PotentialKind::Yukawa => {
            let b = 4.0 * l + 8.0;
            let c = (2.0 * l + 1.0) * (2.0 * l + 3.0);
            // stable form of (-b + sqrt(b² + 16c)) / 8
            2.0 * c / (b + (b * b + 16.0 * c).sqrt())
        }
    }
}

/// Trial exponent at which the locus crosses `E = 0`.
pub fn threshold_exponent(kind: PotentialKind, l: u32) -> f64 {
    let l = l as f64;
    match kind {
        PotentialKind::Gaussian => (2.0 * l + 1.0) / 4.0,
        PotentialKind::Yukawa => (2.0 * l + 1.0) / 2.0,
    }
}

/// `(xi, E)` on the stationarity locus at trial exponent `a`.
pub fn stationary_locus(kind: PotentialKind, l: u32, a: f64) -> Result<(f64, f64)> {
    check_a(a)?;
    Ok((ln_locus_xi(kind, l, a).exp(), locus_energy(kind, l, a)))
}

pub fn stationary_point(kind: PotentialKind, l: u32, a: f64) -> Result<VariationalStationaryPoint> {
    let (xi, energy) = stationary_locus(kind, l, a)?;
    let branch = if a >= locus_minimum(kind, l) {
        Branch::LocalMin
    } else {
        Branch::LocalMax
    };
    Ok(VariationalStationaryPoint { a, xi, energy, branch })
}

/// Rayleigh quotient of the trial function.
pub fn energy_functional(kind: PotentialKind, l: u32, xi: CouplingStrength, a: f64) -> Result<f64> {
    check_a(a)?;
    let (l, xi) = (l as f64, xi.value());
    let ratio = 2.0 * a / (2.0 * a + 1.0);
    Ok(match kind {
        PotentialKind::Gaussian => 0.5 * a * (2.0 * l + 3.0) - xi * ratio.powf(l + 1.5),
        PotentialKind::Yukawa => 0.5 * a * a - xi * 2.0 * a / (2.0 * l + 2.0) * ratio.powi(2 * l as i32 + 2),
    })
}

/// `d<H>/da`, differentiated directly from [`energy_functional`].
pub fn energy_functional_slope(kind: PotentialKind, l: u32, xi: CouplingStrength, a: f64) -> Result<f64> {
    check_a(a)?;
    let (l, xi) = (l as f64, xi.value());
    let ratio = 2.0 * a / (2.0 * a + 1.0);
    let q = 2.0 * a + 1.0;
    Ok(match kind {
        PotentialKind::Gaussian => {
            let p = l + 1.5;
            p - xi * p * ratio.powf(p - 1.0) * 2.0 / (q * q)
        }
        PotentialKind::Yukawa => {
            // P = 2a/(2l+2) * ratio^(2l+2); dP/da = P (1/a + (2l+2)/(a q))
            let m = 2.0 * l + 2.0;
            let p = 2.0 * a / m * ratio.powi(m as i32);
            a - xi * p * (1.0 / a + m / (a * q))
        }
    })
}

/// Optimal one-parameter variational energy at coupling `xi`.
///
/// Returns the larger-`a` root of `xi(a) = xi`, bisected on the monotone
/// `LocalMin` branch. Between the locus minimum and the critical coupling
/// the point exists but has `E > 0` and is flagged unbound.
pub fn solve_variational(kind: PotentialKind, l: u32, xi: CouplingStrength) -> VariationalResult {
    let target = xi.value().ln();
    let a_min = locus_minimum(kind, l);
    let g = |a: f64| ln_locus_xi(kind, l, a) - target;
    if g(a_min) > 0.0 {
        return VariationalResult {
            point: None,
            functional_value: 0.0,
            bound: false,
        };
    }
    let mut hi = (2.0 * a_min).max(1.0);
    while g(hi) <= 0.0 {
        hi *= 2.0;
    }
    let (mut lo, mut hi) = (a_min, hi);
    while hi - lo > 1e-15 * hi {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if g(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a = 0.5 * (lo + hi);
    let energy = locus_energy(kind, l, a);
    let point = VariationalStationaryPoint {
        a,
        xi: xi.value(),
        energy,
        branch: Branch::LocalMin,
    };
    let functional_value = energy_functional(kind, l, xi, a).expect("a > 0 on the branch");
    VariationalResult {
        point: Some(point),
        functional_value,
        bound: energy < 0.0,
    }
}

/// Coupling at which the variational `n = 0` state reaches threshold.
///
/// Gaussian: `(2l+3)^((2l+5)/2) / (8 (2l+1)^((2l+1)/2))`;
/// Yukawa: `4^l (l+1)^(2l+3) / (2l+1)^(2l+1)`. Both are evaluated in
/// factored form so large `l` does not overflow.
pub fn critical_coupling_closed_form(kind: PotentialKind, l: u32) -> CouplingStrength {
    let lf = l as f64;
    let xi = match kind {
        PotentialKind::Gaussian => {
            let s = 2.0 * lf + 3.0;
            s * s / 8.0 * (s / (2.0 * lf + 1.0)).powf(lf + 0.5)
        }
        PotentialKind::Yukawa => {
            let s = lf + 1.0;
            0.5 * s * s * (2.0 * s / (2.0 * lf + 1.0)).powi(2 * l as i32 + 1)
        }
    };
    CouplingStrength::new(xi).expect("closed form is positive")
}
