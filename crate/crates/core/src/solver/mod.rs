//! Numerov shooting reference solver.
//!
//! Eigenvalues are isolated by bisection on the node count of the outward
//! solution (a Sturm count for the box `[0, r_max]`), then refined with
//! Brent's method on the log-derivative mismatch between outward and inward
//! integrations at the outer classical turning point. Bound-state counts and
//! critical couplings come from the node count of the zero-energy solution.

mod numerov;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{spectrum_floor, CouplingStrength, EnergyEstimate, Method, PotentialKind, QuantumNumbers};
use crate::roots;
use numerov::{count_sign_changes, RadialGrid};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub h: f64,
    /// Fixed integration cutoff; chosen adaptively when `None`.
    pub r_max: Option<f64>,
    /// Upper limit for the adaptive cutoff.
    pub r_max_cap: f64,
    pub energy_tol: f64,
    pub max_iterations: usize,
    /// Bracket width for critical couplings.
    pub critical_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            h: 1e-3,
            r_max: None,
            r_max_cap: 400.0,
            energy_tol: 1e-10,
            max_iterations: 200,
            critical_tol: 1e-6,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.h.is_finite() && self.h > 0.0) {
            return Err(Error::domain(format!("step h must be positive, got {}", self.h)));
        }
        if let Some(r) = self.r_max {
            if !(r.is_finite() && r > self.h) {
                return Err(Error::domain(format!("r_max must exceed h, got {r}")));
            }
        }
        if self.r_max_cap.is_nan() || self.r_max_cap <= self.h {
            return Err(Error::domain("r_max_cap must exceed h"));
        }
        if !(self.energy_tol > 0.0 && self.critical_tol > 0.0) {
            return Err(Error::domain("tolerances must be positive"));
        }
        if self.max_iterations == 0 {
            return Err(Error::domain("max_iterations must be positive"));
        }
        Ok(())
    }

    fn with_step(&self, h: f64) -> Self {
        Self { h, ..*self }
    }
}

/// Cutoff used for zero-energy runs, where tails decay only as powers.
pub fn zero_energy_r_max(kind: PotentialKind) -> f64 {
    match kind {
        PotentialKind::Gaussian => 40.0,
        PotentialKind::Yukawa => 60.0,
    }
}

/// A reduced radial wavefunction `u(r)` on `r = h, 2h, ..., r_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution {
    pub h: f64,
    /// `values[k] = u((k + 1) h)`, scaled so the largest magnitude is 1 and
    /// `u(h) > 0`.
    pub values: Vec<f64>,
    pub node_count: usize,
    pub matching_defect: f64,
    pub matching_radius: f64,
    pub energy: f64,
}

impl RadialSolution {
    pub fn r_max(&self) -> f64 {
        self.values.len() as f64 * self.h
    }

    pub fn radius(&self, k: usize) -> f64 {
        (k + 1) as f64 * self.h
    }
}

/// A reference eigenvalue with its wavefunction and a step-halving check.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub estimate: EnergyEstimate,
    pub solution: RadialSolution,
    /// `E(h/2)` from the same cutoff.
    pub half_step_energy: f64,
    /// Richardson estimate of the error of `estimate.value`,
    /// `16/15 (E(h) - E(h/2))` for a fourth-order scheme.
    pub discretization_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriticalMethod {
    ZeroEnergyNode,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalCouplingRecord {
    pub kind: PotentialKind,
    pub n: u32,
    pub l: u32,
    pub xi_crit: f64,
    pub bracket_width: f64,
    pub method: CriticalMethod,
}

fn decay_radius(e: f64) -> f64 {
    if e < 0.0 {
        10.0 / (-2.0 * e).sqrt()
    } else {
        f64::INFINITY
    }
}

fn default_r_max(grid_probe: Option<&RadialGrid>, e: f64, cap: f64) -> f64 {
    let tp = grid_probe.map_or(0.0, |g| g.turning_radius(e));
    12f64.max(3.0 * tp).max(decay_radius(e)).min(cap)
}

fn merged_solution(grid: &RadialGrid, e: f64, m: usize) -> RadialSolution {
    let mut out = grid.outward(e, m + 1);
    let inw = grid.inward(e, m);
    let defect = (out[m + 1] / out[m] - inw[1] / inw[0]) / grid.h;
    let scale = out[m] / inw[0];
    out.truncate(m + 1);
    out.extend(inw[1..].iter().map(|x| x * scale));
    let peak = out.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let mut values: Vec<f64> = out[1..].iter().map(|x| x / peak).collect();
    if values[0] < 0.0 {
        values.iter_mut().for_each(|x| *x = -*x);
    }
    RadialSolution {
        h: grid.h,
        node_count: count_sign_changes(&values),
        values,
        matching_defect: defect,
        matching_radius: m as f64 * grid.h,
        energy: e,
    }
}

/// Integrates the radial equation at a fixed energy `e <= 0`.
pub fn integrate_radial(
    kind: PotentialKind,
    xi: CouplingStrength,
    l: u32,
    e: f64,
    cfg: &SolverConfig,
) -> Result<RadialSolution> {
    cfg.validate()?;
    if e.is_nan() || e > 0.0 {
        return Err(Error::domain(format!("matching integration needs E <= 0, got {e}")));
    }
    let r_max = match cfg.r_max {
        Some(r) => r,
        None if e == 0.0 => zero_energy_r_max(kind),
        None => {
            let probe = RadialGrid::new(kind, xi.value(), l, cfg.h, 12.0)?;
            default_r_max(Some(&probe), e, cfg.r_max_cap)
        }
    };
    let grid = RadialGrid::new(kind, xi.value(), l, cfg.h, r_max)?;
    let m = grid.matching_index(e);
    let sol = merged_solution(&grid, e, m);
    if sol.values.iter().any(|x| !x.is_finite()) || !sol.matching_defect.is_finite() {
        return Err(Error::Solver(format!("non-finite wavefunction at E = {e}")));
    }
    Ok(sol)
}

/// Number of bound states with angular momentum `l`, from the node count of
/// the zero-energy solution.
pub fn count_bound_states(kind: PotentialKind, xi: CouplingStrength, l: u32, cfg: &SolverConfig) -> Result<usize> {
    cfg.validate()?;
    let r_max = cfg.r_max.unwrap_or_else(|| zero_energy_r_max(kind));
    let grid = RadialGrid::new(kind, xi.value(), l, cfg.h, r_max)?;
    Ok(grid.zero_energy_nodes())
}

/// Eigenvalue at one step size. `r_max_hint` pins the cutoff so that step
/// halving compares nested grids.
fn eigenvalue_at_step(
    kind: PotentialKind,
    xi: CouplingStrength,
    qn: QuantumNumbers,
    cfg: &SolverConfig,
    pinned_r_max: Option<f64>,
) -> Result<RadialSolution> {
    let n = qn.n as usize;
    let fixed = pinned_r_max.or(cfg.r_max);
    let floor = spectrum_floor(kind, xi);
    let e_lo = floor - 1e-3 * floor.abs() - 1e-9;
    let e_top = -1e-13 * xi.value().max(1.0);
    let mut r_max = fixed.unwrap_or(12.0);

    for _pass in 0..24 {
        let grid = RadialGrid::new(kind, xi.value(), qn.l, cfg.h, r_max)?;
        let nodes = |e: f64| grid.sweep_outward(e, grid.last, grid.last).nodes;
        if nodes(e_lo) > n {
            return Err(Error::Solver(format!(
                "node count already exceeds {n} at the spectrum floor {e_lo}"
            )));
        }
        if nodes(e_top) <= n {
            if fixed.is_some() || r_max >= cfg.r_max_cap {
                return Err(Error::Solver(format!(
                    "state {qn:?} is too close to threshold for r_max = {r_max} (cap {})",
                    cfg.r_max_cap
                )));
            }
            r_max = (2.0 * r_max).min(cfg.r_max_cap);
            continue;
        }
        let (a, b) = roots::bisect_predicate(
            |e| nodes(e) <= n,
            e_lo,
            e_top,
            1e-7 * (1.0 + floor.abs()),
            cfg.max_iterations,
        )?;
        let e_est = 0.5 * (a + b);
        if fixed.is_none() {
            let needed = default_r_max(Some(&grid), e_est, cfg.r_max_cap);
            if needed > r_max * (1.0 + 1e-9) {
                r_max = needed;
                continue;
            }
        }
        return refine(&grid, qn, a, b, cfg);
    }
    Err(Error::Solver(format!(
        "cutoff search did not settle for {qn:?} at xi = {xi}"
    )))
}

fn refine(grid: &RadialGrid, qn: QuantumNumbers, a: f64, b: f64, cfg: &SolverConfig) -> Result<RadialSolution> {
    let m = grid.matching_index(0.5 * (a + b));
    let defect = |e: f64| grid.matching_defect(e, m);
    let (mut lo, mut hi) = (a, b);
    let mut width = (b - a).max(1e-12);
    let mut expansions = 0;
    while defect(lo).signum() == defect(hi).signum() {
        expansions += 1;
        if expansions > 40 {
            return Err(Error::Solver(format!(
                "matching defect has no sign change near [{a}, {b}]"
            )));
        }
        width *= 2.0;
        lo = a - width;
        hi = (b + width).min(0.0);
    }
    let e = roots::brent(defect, lo, hi, cfg.energy_tol, cfg.max_iterations)?;
    let sol = merged_solution(grid, e, m);
    if sol.node_count != qn.n as usize {
        return Err(Error::Solver(format!(
            "converged to a state with {} nodes while looking for n = {}",
            sol.node_count, qn.n
        )));
    }
    Ok(sol)
}

/// Reference energy of state `(n, l)` at step `cfg.h`, with a step-halving
/// Richardson error estimate.
pub fn solve_bound_state(
    kind: PotentialKind,
    xi: CouplingStrength,
    qn: QuantumNumbers,
    cfg: &SolverConfig,
) -> Result<BoundState> {
    cfg.validate()?;
    let available = count_bound_states(kind, xi, qn.l, cfg)?;
    if available <= qn.n as usize {
        return Err(Error::NotFound {
            potential: kind,
            xi: xi.value(),
            n: qn.n,
            l: qn.l,
            available,
        });
    }
    let coarse = eigenvalue_at_step(kind, xi, qn, cfg, None)?;
    let fine = eigenvalue_at_step(kind, xi, qn, &cfg.with_step(0.5 * cfg.h), Some(coarse.r_max()))?;
    let estimate = EnergyEstimate::classify(Method::Reference, kind, xi, coarse.energy);
    Ok(BoundState {
        estimate,
        half_step_energy: fine.energy,
        discretization_error: (coarse.energy - fine.energy) * 16.0 / 15.0,
        solution: coarse,
    })
}

/// Eigenvalue at exactly `cfg.h`, without the step-halving companion run.
pub fn solve_bound_state_single(
    kind: PotentialKind,
    xi: CouplingStrength,
    qn: QuantumNumbers,
    cfg: &SolverConfig,
) -> Result<RadialSolution> {
    cfg.validate()?;
    eigenvalue_at_step(kind, xi, qn, cfg, None)
}

/// Critical coupling of the `(n, l)` state: bisection on the number of
/// zero-energy nodes.
pub fn critical_coupling_reference_state(
    kind: PotentialKind,
    qn: QuantumNumbers,
    cfg: &SolverConfig,
) -> Result<CriticalCouplingRecord> {
    cfg.validate()?;
    let need = qn.n as usize + 1;
    let bound_enough =
        |x: f64| -> Result<bool> { Ok(count_bound_states(kind, CouplingStrength::new(x)?, qn.l, cfg)? >= need) };
    let lo = 1e-6;
    if bound_enough(lo)? {
        return Err(Error::Solver(format!("{need} state(s) already bound at xi = {lo}")));
    }
    let mut hi = 1.0;
    while !bound_enough(hi)? {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::Solver(format!("no critical coupling below 1e6 for {qn:?}")));
        }
    }
    let lo = if hi > 1.0 { 0.5 * hi } else { lo };
    let mut failure = None;
    let (a, b) = roots::bisect_predicate(
        |x| match bound_enough(x) {
            Ok(v) => !v,
            Err(e) => {
                failure.get_or_insert(e);
                true
            }
        },
        lo,
        hi,
        cfg.critical_tol,
        cfg.max_iterations,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(CriticalCouplingRecord {
        kind,
        n: qn.n,
        l: qn.l,
        xi_crit: 0.5 * (a + b),
        bracket_width: b - a,
        method: CriticalMethod::ZeroEnergyNode,
    })
}

/// Critical coupling of the lowest state with angular momentum `l`.
pub fn critical_coupling_reference(kind: PotentialKind, l: u32, cfg: &SolverConfig) -> Result<CriticalCouplingRecord> {
    critical_coupling_reference_state(kind, QuantumNumbers::new(0, l), cfg)
}
