//! Potentials, quantum numbers and the reduction to dimensionless form.
//!
//! Everything downstream works in natural units (`hbar = m = 1`) where the
//! Hamiltonian is `-1/2 ∇² + V(r)` and the whole spectrum is a function of a
//! single coupling `xi`:
//!
//! * Gaussian: `V(r) = -xi exp(-r²)`, reached from `-γ exp(-λ r²)` with the
//!   length unit `L = λ^(-1/2)`, so `xi = m γ / (λ ħ²)`.
//! * Yukawa: `V(r) = -xi exp(-r) / r`, reached from
//!   `-γ (b / r) exp(-r / b)` with the screening length `b` as length unit,
//!   so `xi = m γ b² / ħ²`.
//!
//! In both cases a dimensional energy is `E = (γ / xi) E'`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PotentialKind {
    Gaussian,
    Yukawa,
}

impl PotentialKind {
    pub const ALL: [PotentialKind; 2] = [PotentialKind::Gaussian, PotentialKind::Yukawa];

    pub fn name(self) -> &'static str {
        match self {
            PotentialKind::Gaussian => "gaussian",
            PotentialKind::Yukawa => "yukawa",
        }
    }
}

impl fmt::Display for PotentialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PotentialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" => Ok(PotentialKind::Gaussian),
            "yukawa" => Ok(PotentialKind::Yukawa),
            other => Err(Error::domain(format!("unknown potential '{other}'"))),
        }
    }
}

/// Physical parameters of a well, in any consistent unit system.
///
/// `width` is the Gaussian exponent `λ` (inverse length squared) for
/// [`PotentialKind::Gaussian`] and the screening length `b` for
/// [`PotentialKind::Yukawa`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionalParameters {
    pub mass: f64,
    pub depth: f64,
    pub width: f64,
    pub hbar: f64,
}

impl DimensionalParameters {
    /// Parameters in natural units (`hbar = 1`).
    pub fn natural(mass: f64, depth: f64, width: f64) -> Self {
        Self {
            mass,
            depth,
            width,
            hbar: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("mass", self.mass),
            ("depth", self.depth),
            ("width", self.width),
            ("hbar", self.hbar),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(())
    }
}

/// The dimensionless coupling `xi > 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CouplingStrength(f64);

impl CouplingStrength {
    pub fn new(xi: f64) -> Result<Self> {
        if xi.is_finite() && xi > 0.0 {
            Ok(Self(xi))
        } else {
            Err(Error::domain(format!(
                "coupling xi must be positive and finite, got {xi}"
            )))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for CouplingStrength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Radial quantum number `n` (number of interior nodes) and angular momentum `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
}

impl QuantumNumbers {
    pub const fn new(n: u32, l: u32) -> Self {
        Self { n, l }
    }

    /// `2n + l + 3/2`, the harmonic-oscillator level index.
    pub fn oscillator_index(self) -> f64 {
        2.0 * self.n as f64 + self.l as f64 + 1.5
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    HarmonicZeroth,
    Koksal,
    Variational,
    Reference,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::HarmonicZeroth => "harmonic",
            Method::Koksal => "koksal",
            Method::Variational => "variational",
            Method::Reference => "reference",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A dimensionless energy `E'` tagged with the method that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyEstimate {
    pub method: Method,
    pub value: f64,
    pub bound: bool,
}

impl EnergyEstimate {
    /// Flags the estimate as bound iff it lies strictly between the bottom of
    /// the spectrum and the continuum threshold.
    ///
    /// For the Gaussian the spectrum is bounded below by `-xi`. The Yukawa
    /// well is bounded below by the Coulomb ground state `-xi²/2`.
    pub fn classify(method: Method, kind: PotentialKind, xi: CouplingStrength, value: f64) -> Self {
        let bound = value.is_finite() && value < 0.0 && value > spectrum_floor(kind, xi);
        Self { method, value, bound }
    }
}

/// Strict lower bound on every eigenvalue of the well.
pub fn spectrum_floor(kind: PotentialKind, xi: CouplingStrength) -> f64 {
    let xi = xi.value();
    match kind {
        PotentialKind::Gaussian => -xi,
        PotentialKind::Yukawa => -0.5 * xi * xi,
    }
}

/// Returns `(xi, energy_scale)` with dimensional `E = energy_scale * E'`.
pub fn reduce_to_dimensionless(p: &DimensionalParameters, kind: PotentialKind) -> Result<(CouplingStrength, f64)> {
    p.validate()?;
    let hbar2 = p.hbar * p.hbar;
    let xi = match kind {
        PotentialKind::Gaussian => p.mass * p.depth / (p.width * hbar2),
        PotentialKind::Yukawa => p.mass * p.depth * p.width * p.width / hbar2,
    };
    let xi = CouplingStrength::new(xi)?;
    Ok((xi, p.depth / xi.value()))
}

/// Dimensional energy from a dimensionless one.
pub fn restore_energy(p: &DimensionalParameters, kind: PotentialKind, e_prime: f64) -> Result<f64> {
    let (_, scale) = reduce_to_dimensionless(p, kind)?;
    Ok(scale * e_prime)
}

/// Dimensionless energy from a dimensional one.
pub fn dimensionless_energy(p: &DimensionalParameters, kind: PotentialKind, energy: f64) -> Result<f64> {
    let (_, scale) = reduce_to_dimensionless(p, kind)?;
    Ok(energy / scale)
}

pub fn potential_value(kind: PotentialKind, xi: CouplingStrength, r: f64) -> Result<f64> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::domain(format!(
            "radius must be finite and non-negative, got {r}"
        )));
    }
    Ok(match kind {
        PotentialKind::Gaussian => -xi.value() * (-r * r).exp(),
        PotentialKind::Yukawa => {
            if r == 0.0 {
                return Err(Error::SingularPoint { potential: kind });
            }
            -xi.value() * (-r).exp() / r
        }
    })
}

/// `V(r) + l(l+1)/(2r²)`.
pub fn effective_radial_potential(kind: PotentialKind, xi: CouplingStrength, l: u32, r: f64) -> Result<f64> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::domain(format!("effective potential needs r > 0, got {r}")));
    }
    let ll = l as f64 * (l as f64 + 1.0);
    Ok(potential_value(kind, xi, r)? + 0.5 * ll / (r * r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn xi(v: f64) -> CouplingStrength {
        CouplingStrength::new(v).unwrap()
    }

    #[test]
    fn koksal_parameters_map_to_xi_200() {
        // CODATA 2018: electron mass, hbar, Bohr radius, Rydberg energy (J).
        let m_e = 9.109_383_701_5e-31;
        let hbar = 1.054_571_817e-34;
        let a_b = 5.291_772_109_03e-11;
        let ryd = 2.179_872_361_103_5e-18;
        let p = DimensionalParameters {
            mass: m_e,
            depth: 400.0 * ryd,
            width: 1.0 / (a_b * a_b),
            hbar,
        };
        let (x, scale) = reduce_to_dimensionless(&p, PotentialKind::Gaussian).unwrap();
        assert_relative_eq!(x.value(), 200.0, max_relative = 1e-8);
        assert_relative_eq!(scale, 2.0 * ryd, max_relative = 1e-8);
    }

    #[test]
    fn natural_unit_reductions() {
        let (x, s) =
            reduce_to_dimensionless(&DimensionalParameters::natural(1.0, 7.0, 7.0), PotentialKind::Gaussian).unwrap();
        assert_eq!((x.value(), s), (1.0, 7.0));
        let (x, s) =
            reduce_to_dimensionless(&DimensionalParameters::natural(2.0, 3.0, 4.0), PotentialKind::Gaussian).unwrap();
        assert_eq!((x.value(), s), (1.5, 2.0));
        // Yukawa uses the screening length: xi = m γ b².
        let (x, s) =
            reduce_to_dimensionless(&DimensionalParameters::natural(1.0, 2.0, 3.0), PotentialKind::Yukawa).unwrap();
        assert_eq!((x.value(), s), (18.0, 2.0 / 18.0));
    }

    #[test]
    fn non_positive_parameters_are_rejected() {
        for p in [
            DimensionalParameters::natural(0.0, 1.0, 1.0),
            DimensionalParameters::natural(1.0, -1.0, 1.0),
            DimensionalParameters::natural(1.0, 1.0, f64::NAN),
            DimensionalParameters {
                hbar: 0.0,
                ..DimensionalParameters::natural(1.0, 1.0, 1.0)
            },
        ] {
            for kind in PotentialKind::ALL {
                assert!(matches!(reduce_to_dimensionless(&p, kind), Err(Error::Domain(_))));
            }
        }
        assert!(CouplingStrength::new(0.0).is_err());
        assert!(CouplingStrength::new(f64::INFINITY).is_err());
    }

    #[test]
    fn potential_values() {
        let e1 = (-1.0f64).exp();
        assert_eq!(
            potential_value(PotentialKind::Gaussian, xi(200.0), 0.0).unwrap(),
            -200.0
        );
        assert_relative_eq!(
            potential_value(PotentialKind::Gaussian, xi(1.0), 1.0).unwrap(),
            -0.367_879_441_171_442_3,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            potential_value(PotentialKind::Yukawa, xi(1.0), 1.0).unwrap(),
            -e1,
            max_relative = 1e-15
        );
        assert!(matches!(
            potential_value(PotentialKind::Yukawa, xi(1.0), 0.0),
            Err(Error::SingularPoint { .. })
        ));
        assert!(potential_value(PotentialKind::Gaussian, xi(1.0), -0.1).is_err());
    }

    #[test]
    fn effective_potential_values() {
        for r in [0.1, 0.7, 3.0] {
            assert_eq!(
                effective_radial_potential(PotentialKind::Gaussian, xi(200.0), 0, r).unwrap(),
                potential_value(PotentialKind::Gaussian, xi(200.0), r).unwrap()
            );
        }
        assert_relative_eq!(
            effective_radial_potential(PotentialKind::Gaussian, xi(1.0), 1, 1.0).unwrap(),
            0.632_120_558_828_557_7,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            effective_radial_potential(PotentialKind::Yukawa, xi(2.0), 2, 2.0).unwrap(),
            0.614_664_716_763_387_3,
            max_relative = 1e-15
        );
        assert!(effective_radial_potential(PotentialKind::Gaussian, xi(1.0), 0, 0.0).is_err());
    }

    #[test]
    fn estimates_outside_the_spectrum_are_unbound() {
        let x = xi(10.0);
        assert!(EnergyEstimate::classify(Method::Koksal, PotentialKind::Gaussian, x, -5.0).bound);
        assert!(!EnergyEstimate::classify(Method::Koksal, PotentialKind::Gaussian, x, -10.5).bound);
        assert!(!EnergyEstimate::classify(Method::Koksal, PotentialKind::Gaussian, x, 0.3).bound);
        assert!(EnergyEstimate::classify(Method::Reference, PotentialKind::Yukawa, x, -40.0).bound);
        assert!(!EnergyEstimate::classify(Method::Reference, PotentialKind::Yukawa, x, -60.0).bound);
    }
}
