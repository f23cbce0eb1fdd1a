//! Invariants of the closed-form modules, checked over random inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use wellbound::model::{
    dimensionless_energy, potential_value, reduce_to_dimensionless, restore_energy, DimensionalParameters,
};
use wellbound::variational::{
    critical_coupling_closed_form, energy_functional, energy_functional_slope, locus_minimum, solve_variational,
    stationary_locus, threshold_exponent,
};
use wellbound::{CouplingStrength, PotentialKind};

fn kind() -> impl Strategy<Value = PotentialKind> {
    prop_oneof![Just(PotentialKind::Gaussian), Just(PotentialKind::Yukawa)]
}

fn positive() -> impl Strategy<Value = f64> {
    (-6.0f64..6.0).prop_map(|e| 10f64.powf(e))
}

proptest! {
    #[test]
    fn restore_inverts_reduce(k in kind(), m in positive(), g in positive(), w in positive(), hbar in positive(), e in -1e3f64..1e3) {
        let p = DimensionalParameters { mass: m, depth: g, width: w, hbar };
        let dimensional = restore_energy(&p, k, e).unwrap();
        let back = dimensionless_energy(&p, k, dimensional).unwrap();
        prop_assert!((back - e).abs() <= 1e-12 * e.abs().max(1e-300));
        let (xi, scale) = reduce_to_dimensionless(&p, k).unwrap();
        prop_assert!(((scale * xi.value() - g) / g).abs() < 1e-12);
    }

    #[test]
    fn potential_increases_with_r(k in kind(), x in 0.01f64..500.0, r in 1e-3f64..8.0, dr in 1e-3f64..1.0) {
        let xi = CouplingStrength::new(x).unwrap();
        let a = potential_value(k, xi, r).unwrap();
        let b = potential_value(k, xi, r + dr).unwrap();
        prop_assert!(a < 0.0);
        prop_assert!(b > a);
    }

    #[test]
    fn functional_is_an_upper_bound_on_its_minimum(k in kind(), l in 0u32..6, x in 0.5f64..300.0, a in 1e-3f64..50.0) {
        let xi = CouplingStrength::new(x).unwrap();
        let r = solve_variational(k, l, xi);
        let h = energy_functional(k, l, xi, a).unwrap();
        prop_assert!(h >= r.upper_bound() - 1e-9 * h.abs().max(1.0));
    }
}

/// Log-spaced trial exponents over [1e-3, 1e3].
fn a_grid() -> Vec<f64> {
    (0..=48).map(|i| 10f64.powf(-3.0 + 6.0 * i as f64 / 48.0)).collect()
}

#[test]
fn locus_round_trip() {
    for kind in PotentialKind::ALL {
        for l in 0..=8 {
            for a in a_grid().into_iter().filter(|&a| a > locus_minimum(kind, l)) {
                let (x, e) = stationary_locus(kind, l, a).unwrap();
                let r = solve_variational(kind, l, CouplingStrength::new(x).unwrap());
                let p = r.point.unwrap();
                assert!(((p.a - a) / a).abs() < 1e-8, "{kind} l={l} a={a}: {}", p.a);
                assert!((p.energy - e).abs() <= 1e-8 * e.abs().max(1e-12), "{kind} l={l} a={a}");
            }
        }
    }
}

#[test]
fn locus_points_are_stationary() {
    for kind in PotentialKind::ALL {
        for l in 0..=8 {
            for a in a_grid() {
                let (x, e) = stationary_locus(kind, l, a).unwrap();
                let xi = CouplingStrength::new(x).unwrap();
                let slope = energy_functional_slope(kind, l, xi, a).unwrap();
                assert!(slope.abs() < 1e-9, "{kind} l={l} a={a}: {slope}");
                let h = energy_functional(kind, l, xi, a).unwrap();
                assert!(
                    (h - e).abs() <= 1e-10 * e.abs().max(1.0),
                    "{kind} l={l} a={a}: {h} vs {e}"
                );
            }
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `xi²` on the Gaussian locus, exact: `(2a+1)^(2l+5) / (2^(2l+3) a^(2l+1))`.
fn gaussian_locus_xi_squared(l: u32, a: &BigRational) -> BigRational {
    let two = rat(2, 1);
    let s = &two * a + BigRational::one();
    s.pow((2 * l + 5) as i32) / (two.pow((2 * l + 3) as i32) * a.pow((2 * l + 1) as i32))
}

/// Yukawa locus, exact.
fn yukawa_locus_xi(l: u32, a: &BigRational) -> BigRational {
    let two = rat(2, 1);
    let s = &two * a + BigRational::one();
    let lf = rat(l as i64, 1);
    (&lf + BigRational::one()) * s.pow((2 * l + 3) as i32)
        / (two.pow((2 * l + 2) as i32) * a.pow((2 * l + 1) as i32) * (&two * a + &two * &lf + rat(3, 1)))
}

#[test]
fn threshold_identity_in_exact_arithmetic() {
    for l in 0..=12u32 {
        let li = l as i64;
        // Gaussian: xi² at a = (2l+1)/4 equals (2l+3)^(2l+5) / (64 (2l+1)^(2l+1))
        let a = rat(2 * li + 1, 4);
        let lhs = gaussian_locus_xi_squared(l, &a);
        let rhs =
            rat(2 * li + 3, 1).pow((2 * l + 5) as i32) / (rat(64, 1) * rat(2 * li + 1, 1).pow((2 * l + 1) as i32));
        assert_eq!(lhs, rhs, "gaussian l={l}");
        // E = a (2l + 1 - 4a) / 2 vanishes there
        assert_eq!(&a * (rat(2 * li + 1, 1) - rat(4, 1) * &a), rat(0, 1));

        // Yukawa: xi at a = (2l+1)/2 equals 4^l (l+1)^(2l+3) / (2l+1)^(2l+1)
        let a = rat(2 * li + 1, 2);
        let lhs = yukawa_locus_xi(l, &a);
        let rhs = rat(4, 1).pow((l) as i32) * rat(li + 1, 1).pow((2 * l + 3) as i32)
            / rat(2 * li + 1, 1).pow((2 * l + 1) as i32);
        assert_eq!(lhs, rhs, "yukawa l={l}");
    }
}

#[test]
fn threshold_identity_in_double() {
    for kind in PotentialKind::ALL {
        for l in 0..=12 {
            let (x, e) = stationary_locus(kind, l, threshold_exponent(kind, l)).unwrap();
            let c = critical_coupling_closed_form(kind, l).value();
            assert!(((x - c) / c).abs() < 1e-12, "{kind} l={l}: {x} vs {c}");
            assert_eq!(e, 0.0);
        }
    }
}

#[test]
fn closed_form_matches_exact_rationals() {
    use num_traits::ToPrimitive;
    for l in 0..=12u32 {
        let li = l as i64;
        let exact = rat(4, 1).pow((l) as i32) * rat(li + 1, 1).pow((2 * l + 3) as i32)
            / rat(2 * li + 1, 1).pow((2 * l + 1) as i32);
        let c = critical_coupling_closed_form(PotentialKind::Yukawa, l).value();
        let e = exact.to_f64().unwrap();
        assert!(((c - e) / e).abs() < 1e-13);
        let exact_sq =
            rat(2 * li + 3, 1).pow((2 * l + 5) as i32) / (rat(64, 1) * rat(2 * li + 1, 1).pow((2 * l + 1) as i32));
        let g = critical_coupling_closed_form(PotentialKind::Gaussian, l).value();
        let e = exact_sq.to_f64().unwrap().sqrt();
        assert!(((g - e) / e).abs() < 1e-13);
    }
}
