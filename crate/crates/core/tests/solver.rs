//! Reference solver behaviour on the documented examples and invariants.

use wellbound::solver::{
    count_bound_states, critical_coupling_reference, integrate_radial, solve_bound_state, solve_bound_state_single,
    SolverConfig,
};
use wellbound::variational::{critical_coupling_closed_form, solve_variational};
use wellbound::{CouplingStrength, Error, PotentialKind, QuantumNumbers};

use PotentialKind::{Gaussian, Yukawa};

fn xi(v: f64) -> CouplingStrength {
    CouplingStrength::new(v).unwrap()
}

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

/// Brute-force bracket of the lowest eigenvalues by scanning the sign of
/// `u(r_max)` of a plain RK4 integration. Independent of the Numerov code.
fn rk4_dirichlet_sign(x: f64, l: u32, e: f64, r_max: f64, h: f64) -> f64 {
    let ll = (l * (l + 1)) as f64;
    let f = |r: f64| ll / (r * r) - 2.0 * x * (-r * r).exp() - 2.0 * e;
    let mut r = h;
    let mut u = h.powi(l as i32 + 1);
    let mut du = (l as f64 + 1.0) * h.powi(l as i32);
    while r < r_max {
        let k1 = (du, f(r) * u);
        let k2 = (du + 0.5 * h * k1.1, f(r + 0.5 * h) * (u + 0.5 * h * k1.0));
        let k3 = (du + 0.5 * h * k2.1, f(r + 0.5 * h) * (u + 0.5 * h * k2.0));
        let k4 = (du + h * k3.1, f(r + h) * (u + h * k3.0));
        u += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        du += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
        r += h;
        if u.abs() > 1e100 {
            u *= 1e-100;
            du *= 1e-100;
        }
    }
    u.signum()
}

#[test]
fn free_particle_has_no_node_and_a_large_defect() {
    let s = integrate_radial(Gaussian, xi(1e-12), 0, -1.0, &cfg()).unwrap();
    assert_eq!(s.node_count, 0);
    assert!(s.matching_defect.abs() > 1.0, "{}", s.matching_defect);
}

#[test]
fn origin_behaviour_is_r_to_the_l_plus_one() {
    for kind in [Gaussian, Yukawa] {
        for l in 0..4 {
            let s = integrate_radial(kind, xi(5.0), l, -0.5, &cfg()).unwrap();
            assert!(s.values[0] > 0.0);
            let ratio = |k: usize| s.values[k] / s.radius(k).powi(l as i32 + 1);
            let (a, b) = (ratio(0), ratio(3));
            assert!(a > 0.0 && ((a - b) / a).abs() < 0.05, "{kind} l={l}: {a} {b}");
        }
    }
}

#[test]
fn energy_window_of_the_two_lowest_s_states() {
    // RK4 oracle: sign of u(r_max) flips across each eigenvalue
    let s_lo = rk4_dirichlet_sign(200.0, 0, -172.0, 6.0, 2e-3);
    let s_mid = rk4_dirichlet_sign(200.0, 0, -150.0, 6.0, 2e-3);
    let s_hi = rk4_dirichlet_sign(200.0, 0, -120.0, 6.0, 2e-3);
    assert!(s_lo != s_mid && s_mid != s_hi);

    let at_170 = integrate_radial(Gaussian, xi(200.0), 0, -170.0, &cfg()).unwrap();
    assert_eq!(at_170.node_count, 0);
    let at_170_5 = integrate_radial(Gaussian, xi(200.0), 0, -170.5, &cfg()).unwrap();
    assert_eq!(at_170.matching_defect.signum(), at_170_5.matching_defect.signum());
    let below = integrate_radial(Gaussian, xi(200.0), 0, -171.5, &cfg()).unwrap();
    assert_ne!(below.matching_defect.signum(), at_170.matching_defect.signum());

    let at_135 = integrate_radial(Gaussian, xi(200.0), 0, -135.0, &cfg()).unwrap();
    assert!(at_135.node_count >= 1, "{}", at_135.node_count);
}

#[test]
fn bound_state_examples() {
    let g = solve_bound_state(Gaussian, xi(200.0), QuantumNumbers::new(0, 0), &cfg()).unwrap();
    let v = solve_variational(Gaussian, 0, xi(200.0)).energy();
    assert!((-171.3..=-170.9).contains(&g.estimate.value));
    assert!(g.estimate.value <= v);

    // screened Coulomb at large xi: -xi²/2 + xi - 3/4 + O(1/xi)
    let y = solve_bound_state(Yukawa, xi(50.0), QuantumNumbers::new(0, 0), &cfg()).unwrap();
    assert!((y.estimate.value + 1200.75).abs() < 0.05, "{}", y.estimate.value);

    let g2 = solve_bound_state(Gaussian, xi(2.0), QuantumNumbers::new(0, 0), &cfg()).unwrap();
    assert!(g2.estimate.bound && g2.estimate.value > -2.0 && g2.estimate.value < 0.0);
}

#[test]
fn not_found_carries_diagnostics() {
    match solve_bound_state(Gaussian, xi(2.0), QuantumNumbers::new(1, 0), &cfg()) {
        Err(Error::NotFound { available, n, .. }) => assert_eq!((available, n), (1, 1)),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn bound_state_counts() {
    assert_eq!(count_bound_states(Gaussian, xi(0.5), 0, &cfg()).unwrap(), 0);
    assert_eq!(count_bound_states(Gaussian, xi(2.0), 0, &cfg()).unwrap(), 1);
    assert_eq!(count_bound_states(Yukawa, xi(0.5), 0, &cfg()).unwrap(), 0);
    // HO-level estimate -200 + (2n + 3/2) 20 < 0 gives a handful of s-states
    let n200 = count_bound_states(Gaussian, xi(200.0), 0, &cfg()).unwrap();
    assert!((5..=9).contains(&n200), "{n200}");
}

#[test]
fn critical_coupling_examples() {
    let y0 = critical_coupling_reference(Yukawa, 0, &cfg()).unwrap();
    assert!((y0.xi_crit - 0.8399).abs() < 0.005);
    assert!(y0.bracket_width <= 1e-6);
    let g0 = critical_coupling_reference(Gaussian, 0, &cfg()).unwrap();
    assert!((g0.xi_crit - 1.34).abs() < 0.02);
    assert!(g0.xi_crit < critical_coupling_closed_form(Gaussian, 0).value());
    let y1 = critical_coupling_reference(Yukawa, 1, &cfg()).unwrap();
    assert!((y1.xi_crit - 4.54).abs() < 0.02);
    assert!(y1.xi_crit < 128.0 / 27.0);
}

#[test]
fn yukawa_critical_matches_existence_scan() {
    let c = critical_coupling_reference(Yukawa, 0, &cfg()).unwrap().xi_crit;
    let qn = QuantumNumbers::new(0, 0);
    assert!(matches!(
        solve_bound_state(Yukawa, xi(c - 0.01), qn, &cfg()),
        Err(Error::NotFound { .. })
    ));
    assert!(solve_bound_state(Yukawa, xi(c + 0.01), qn, &cfg()).is_ok());
}

#[test]
fn counts_change_by_one_across_critical_couplings() {
    for (kind, l) in [(Gaussian, 0), (Gaussian, 3), (Yukawa, 0), (Yukawa, 2)] {
        let c = critical_coupling_reference(kind, l, &cfg()).unwrap().xi_crit;
        let below = count_bound_states(kind, xi(c - 1e-3), l, &cfg()).unwrap();
        let above = count_bound_states(kind, xi(c + 1e-3), l, &cfg()).unwrap();
        assert_eq!(above, below + 1, "{kind} l={l}");
    }
}

#[test]
fn numerov_is_fourth_order() {
    let energies: Vec<f64> = [0.04, 0.02, 0.01]
        .iter()
        .map(|&h| {
            let c = SolverConfig {
                h,
                r_max: Some(12.0),
                energy_tol: 1e-13,
                ..cfg()
            };
            solve_bound_state_single(Gaussian, xi(200.0), QuantumNumbers::new(0, 0), &c)
                .unwrap()
                .energy
        })
        .collect();
    let ratio = (energies[0] - energies[1]) / (energies[1] - energies[2]);
    assert!((8.0..=32.0).contains(&ratio), "{ratio}");
}

#[test]
fn node_theorem_and_ordering_at_200() {
    let mut prev = f64::NEG_INFINITY;
    for n in 0..4 {
        let s = solve_bound_state(Gaussian, xi(200.0), QuantumNumbers::new(n, 0), &cfg()).unwrap();
        assert_eq!(s.solution.node_count, n as usize);
        assert!(s.estimate.value > prev);
        assert!(s.estimate.value > -200.0 && s.estimate.value < 0.0);
        prev = s.estimate.value;
    }
}

#[test]
fn energies_decrease_with_xi_and_increase_with_l() {
    for kind in [Gaussian, Yukawa] {
        let e = |x: f64, l: u32| {
            solve_bound_state(kind, xi(x), QuantumNumbers::new(0, l), &cfg())
                .unwrap()
                .estimate
                .value
        };
        let xs = [20.0, 30.0, 45.0, 60.0];
        for w in xs.windows(2) {
            assert!(e(w[1], 0) < e(w[0], 0));
        }
        for l in 0..3 {
            assert!(e(60.0, l + 1) > e(60.0, l));
        }
    }
}

#[test]
fn dimensional_energies_scale_covariantly() {
    use wellbound::model::{reduce_to_dimensionless, restore_energy, DimensionalParameters};
    // two (depth, width) pairs realising xi = 12
    let p1 = DimensionalParameters::natural(1.0, 12.0, 1.0);
    let p2 = DimensionalParameters::natural(2.0, 9.0, 1.5);
    let (x1, _) = reduce_to_dimensionless(&p1, Gaussian).unwrap();
    let (x2, _) = reduce_to_dimensionless(&p2, Gaussian).unwrap();
    assert!((x1.value() - x2.value()).abs() < 1e-12);
    let e = solve_bound_state(Gaussian, x1, QuantumNumbers::new(0, 0), &cfg())
        .unwrap()
        .estimate
        .value;
    let e1 = restore_energy(&p1, Gaussian, e).unwrap();
    let e2 = restore_energy(&p2, Gaussian, e).unwrap();
    let s1 = e1 / p1.depth * x1.value();
    let s2 = e2 / p2.depth * x2.value();
    assert!(((s1 - s2) / s1).abs() < 1e-9);
}
