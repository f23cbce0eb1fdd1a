//! Method-comparison datasets: ground-state energies against `l` and `xi`
//! for the Gaussian well, and critical couplings against `l` for both wells.
//!
//! Rows are computed independently (in parallel) and always returned in
//! grid order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::empirical;
use crate::error::{Error, Result};
use crate::model::{CouplingStrength, PotentialKind, QuantumNumbers};
use crate::solver::{self, SolverConfig};
use crate::variational;

pub const FIGURE1_XI: f64 = 200.0;
pub const FIGURE1_L_MAX: u32 = 10;
pub const CRITICAL_L_MAX: u32 = 10;

/// `xi = 2, 4, ..., 30`.
pub fn figure2_default_grid() -> Vec<f64> {
    (1..=15).map(|i| 2.0 * i as f64).collect()
}

/// Rows plus free-form provenance notes (warnings, grid choices).
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset<R> {
    pub rows: Vec<R>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub kind: PotentialKind,
    pub xi: f64,
    pub n: u32,
    pub l: u32,
    pub e_koksal: Option<f64>,
    pub e_variational: Option<f64>,
    pub e_reference: Option<f64>,
    /// Richardson estimate of the reference discretisation error.
    pub reference_error: Option<f64>,
    pub abs_err_koksal: Option<f64>,
    pub abs_err_variational: Option<f64>,
    pub rel_err_koksal: Option<f64>,
    pub rel_err_variational: Option<f64>,
}

fn abs_err(value: Option<f64>, reference: Option<f64>) -> Option<f64> {
    Some((value? - reference?).abs())
}

fn rel_err(value: Option<f64>, reference: Option<f64>) -> Option<f64> {
    let r = reference?;
    if r == 0.0 {
        return None;
    }
    Some((value? - r).abs() / r.abs())
}

impl ComparisonRow {
    pub fn new(
        kind: PotentialKind,
        xi: f64,
        qn: QuantumNumbers,
        e_koksal: Option<f64>,
        e_variational: Option<f64>,
        e_reference: Option<f64>,
        reference_error: Option<f64>,
    ) -> Self {
        Self {
            kind,
            xi,
            n: qn.n,
            l: qn.l,
            e_koksal,
            e_variational,
            e_reference,
            reference_error,
            abs_err_koksal: abs_err(e_koksal, e_reference),
            abs_err_variational: abs_err(e_variational, e_reference),
            rel_err_koksal: rel_err(e_koksal, e_reference),
            rel_err_variational: rel_err(e_variational, e_reference),
        }
    }

    /// True when the reference solver found no such bound state.
    pub fn subcritical(&self) -> bool {
        self.e_reference.is_none()
    }
}

/// All applicable methods for one state. A missing reference state is a
/// value (`e_reference = None`), not an error.
pub fn comparison_row(
    kind: PotentialKind,
    xi: CouplingStrength,
    qn: QuantumNumbers,
    cfg: &SolverConfig,
) -> Result<ComparisonRow> {
    let e_koksal = match kind {
        PotentialKind::Gaussian => Some(empirical::koksal_energy(qn, xi).value),
        PotentialKind::Yukawa => None,
    };
    let e_variational = if qn.n == 0 {
        variational::solve_variational(kind, qn.l, xi).point.map(|p| p.energy)
    } else {
        None
    };
    let (e_reference, reference_error) = match solver::solve_bound_state(kind, xi, qn, cfg) {
        Ok(s) => (Some(s.estimate.value), Some(s.discretization_error)),
        Err(Error::NotFound { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(ComparisonRow::new(
        kind,
        xi.value(),
        qn,
        e_koksal,
        e_variational,
        e_reference,
        reference_error,
    ))
}

/// Gaussian `n = 0` energies for `l = 0..=l_max` at fixed `xi`.
///
/// Stops at the first `l` without a reference bound state and records a note.
pub fn figure1_data(l_max: u32, xi: f64, cfg: &SolverConfig) -> Result<Dataset<ComparisonRow>> {
    let coupling = CouplingStrength::new(xi)?;
    let rows: Vec<ComparisonRow> = (0..=l_max)
        .into_par_iter()
        .map(|l| comparison_row(PotentialKind::Gaussian, coupling, QuantumNumbers::new(0, l), cfg))
        .collect::<Result<_>>()?;
    let mut notes = vec![format!("gaussian n=0 energies at xi={xi} for l=0..={l_max}")];
    let kept = rows.iter().position(ComparisonRow::subcritical).unwrap_or(rows.len());
    if kept < rows.len() {
        notes.push(format!(
            "warning: no bound n=0 state for l={} at xi={xi}; rows truncated to l<{}",
            rows[kept].l, rows[kept].l
        ));
    }
    let mut rows = rows;
    rows.truncate(kept);
    Ok(Dataset { rows, notes })
}

/// Gaussian ground-state energies over a grid of couplings, sorted by `xi`.
pub fn figure2_data(xi_values: &[f64], cfg: &SolverConfig) -> Result<Dataset<ComparisonRow>> {
    let mut grid = xi_values.to_vec();
    grid.sort_by(f64::total_cmp);
    let couplings: Vec<CouplingStrength> = grid.iter().map(|&x| CouplingStrength::new(x)).collect::<Result<_>>()?;
    let rows: Vec<ComparisonRow> = couplings
        .into_par_iter()
        .map(|xi| comparison_row(PotentialKind::Gaussian, xi, QuantumNumbers::new(0, 0), cfg))
        .collect::<Result<_>>()?;
    let mut notes = vec![format!("gaussian ground state over xi = {grid:?}")];
    for r in rows.iter().filter(|r| r.subcritical()) {
        notes.push(format!("warning: xi={} is subcritical, no reference bound state", r.xi));
    }
    Ok(Dataset { rows, notes })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalRow {
    pub kind: PotentialKind,
    pub l: u32,
    pub xi_koksal: Option<f64>,
    pub xi_variational: f64,
    pub xi_reference: f64,
    pub reference_bracket: f64,
}

impl CriticalRow {
    pub fn abs_err_koksal(&self) -> Option<f64> {
        Some((self.xi_koksal? - self.xi_reference).abs())
    }

    pub fn abs_err_variational(&self) -> f64 {
        (self.xi_variational - self.xi_reference).abs()
    }
}

fn critical_rows(kind: PotentialKind, l_max: u32, cfg: &SolverConfig) -> Result<Dataset<CriticalRow>> {
    let rows: Vec<CriticalRow> = (0..=l_max)
        .into_par_iter()
        .map(|l| -> Result<CriticalRow> {
            let reference = solver::critical_coupling_reference(kind, l, cfg)?;
            let xi_variational = variational::critical_coupling_closed_form(kind, l).value();
            let xi_koksal = match kind {
                PotentialKind::Gaussian => Some(empirical::koksal_critical(QuantumNumbers::new(0, l))?.value()),
                PotentialKind::Yukawa => None,
            };
            if xi_variational < reference.xi_crit - reference.bracket_width {
                return Err(Error::Solver(format!(
                    "variational critical coupling {xi_variational} fell below the reference {} ({kind}, l={l})",
                    reference.xi_crit
                )));
            }
            Ok(CriticalRow {
                kind,
                l,
                xi_koksal,
                xi_variational,
                xi_reference: reference.xi_crit,
                reference_bracket: reference.bracket_width,
            })
        })
        .collect::<Result<_>>()?;
    let notes = vec![format!("{kind} n=0 critical couplings for l=0..={l_max}")];
    Ok(Dataset { rows, notes })
}

/// Gaussian critical couplings: empirical, variational and reference.
pub fn figure3_data(l_max: u32, cfg: &SolverConfig) -> Result<Dataset<CriticalRow>> {
    critical_rows(PotentialKind::Gaussian, l_max, cfg)
}

/// Yukawa critical couplings: variational and reference.
pub fn figure4_data(l_max: u32, cfg: &SolverConfig) -> Result<Dataset<CriticalRow>> {
    critical_rows(PotentialKind::Yukawa, l_max, cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MethodErrors {
    pub count: usize,
    pub max_abs: f64,
    pub mean_abs: f64,
    pub max_rel: Option<f64>,
    pub mean_rel: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorSummary {
    pub rows: usize,
    pub koksal: Option<MethodErrors>,
    pub variational: Option<MethodErrors>,
}

fn aggregate(abs: impl Iterator<Item = f64>, rel: impl Iterator<Item = f64>) -> Option<MethodErrors> {
    let abs: Vec<f64> = abs.collect();
    if abs.is_empty() {
        return None;
    }
    let rel: Vec<f64> = rel.collect();
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Some(MethodErrors {
        count: abs.len(),
        max_abs: max(&abs),
        mean_abs: mean(&abs),
        max_rel: (!rel.is_empty()).then(|| max(&rel)),
        mean_rel: (!rel.is_empty()).then(|| mean(&rel)),
    })
}

pub fn error_summary(rows: &[ComparisonRow]) -> Result<ErrorSummary> {
    if rows.is_empty() {
        return Err(Error::domain("error summary of an empty table"));
    }
    Ok(ErrorSummary {
        rows: rows.len(),
        koksal: aggregate(
            rows.iter().filter_map(|r| r.abs_err_koksal),
            rows.iter().filter_map(|r| r.rel_err_koksal),
        ),
        variational: aggregate(
            rows.iter().filter_map(|r| r.abs_err_variational),
            rows.iter().filter_map(|r| r.rel_err_variational),
        ),
    })
}
