//! Numerov integration of `u'' = f(r) u` with `f = l(l+1)/r² + 2V(r) - 2E`
//! on the uniform grid `r_i = i h`, `i = 0..=last`.

use crate::error::{Error, Result};
use crate::model::PotentialKind;

/// Magnitude above which running solutions are renormalised.
const RESCALE_ABOVE: f64 = 1e150;
/// Terms kept in the Frobenius series used for the first two grid points.
const SERIES_TERMS: usize = 16;

#[derive(Debug, Clone)]
pub(crate) struct RadialGrid {
    pub kind: PotentialKind,
    pub xi: f64,
    pub l: u32,
    pub h: f64,
    /// Index of the outermost grid point (`r_max = last * h`).
    pub last: usize,
    /// First index advanced by the recurrence; earlier points come from the
    /// series. Keeps `h² l(l+1) / (12 r²)` small where the recurrence starts.
    start: usize,
    /// `l(l+1)/r² + 2V(r)`; entry 0 is unused.
    q: Vec<f64>,
}

/// Summary of an outward sweep that does not keep the wavefunction.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Sweep {
    pub nodes: usize,
    /// `u` at `end`.
    pub last: f64,
    /// `u` at the probe index, in the same normalisation as `last`.
    pub probe: f64,
}

impl RadialGrid {
    pub fn new(kind: PotentialKind, xi: f64, l: u32, h: f64, r_max: f64) -> Result<Self> {
        if !(h > 0.0 && r_max > h && xi > 0.0) {
            return Err(Error::domain(format!(
                "invalid grid: h = {h}, r_max = {r_max}, xi = {xi}"
            )));
        }
        let last = (r_max / h).round() as usize;
        let ll = l as f64 * (l as f64 + 1.0);
        let mut q = Vec::with_capacity(last + 1);
        q.push(f64::NAN);
        for i in 1..=last {
            let r = i as f64 * h;
            let v = match kind {
                PotentialKind::Gaussian => -xi * (-r * r).exp(),
                PotentialKind::Yukawa => -xi * (-r).exp() / r,
            };
            q.push(ll / (r * r) + 2.0 * v);
        }
        let start = ((ll / 3.0).sqrt().ceil() as usize).max(1);
        if start + 4 > last {
            return Err(Error::domain(format!(
                "grid too short: r_max = {r_max} with h = {h} and l = {l}"
            )));
        }
        Ok(Self {
            kind,
            xi,
            l,
            h,
            last,
            start,
            q,
        })
    }

    #[inline]
    fn f(&self, i: usize, e: f64) -> f64 {
        self.q[i] - 2.0 * e
    }

    #[inline]
    fn w(&self, i: usize, e: f64) -> f64 {
        1.0 - self.h * self.h * self.f(i, e) / 12.0
    }

    /// Frobenius coefficients of `u = r^(l+1) Σ c_k r^k` at energy `e`.
    fn series_coefficients(&self, e: f64) -> [f64; SERIES_TERMS] {
        // q(r) - 2E = Σ_{s >= -1} big_q[s + 1] r^s
        let mut big_q = [0.0; SERIES_TERMS + 1];
        let xi = self.xi;
        match self.kind {
            PotentialKind::Gaussian => {
                // -2 xi exp(-r²)
                let mut fact = 1.0;
                for j in 0..=(SERIES_TERMS / 2) {
                    if j > 0 {
                        fact *= j as f64;
                    }
                    let s = 2 * j;
                    if s < SERIES_TERMS {
                        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                        big_q[s + 1] = -2.0 * xi * sign / fact;
                    }
                }
            }
            PotentialKind::Yukawa => {
                // -2 xi exp(-r) / r
                let mut fact = 1.0;
                for (j, q) in big_q.iter_mut().enumerate() {
                    if j > 0 {
                        fact *= j as f64;
                    }
                    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                    *q = -2.0 * xi * sign / fact;
                }
            }
        }
        big_q[1] -= 2.0 * e;
        let two_l1 = 2.0 * self.l as f64 + 1.0;
        let mut c = [0.0; SERIES_TERMS];
        c[0] = 1.0;
        for k in 1..SERIES_TERMS {
            let mut acc = 0.0;
            // s runs from -1 to k-2, i.e. idx = s + 1 from 0 to k-1
            for idx in 0..k {
                acc += big_q[idx] * c[k - 1 - idx];
            }
            c[k] = acc / (k as f64 * (two_l1 + k as f64));
        }
        c
    }

    /// `u(r_i)` from the series, normalised to `u(r_start) ~ 1`.
    fn series_value(&self, c: &[f64; SERIES_TERMS], i: usize) -> f64 {
        let r = i as f64 * self.h;
        let poly = c.iter().rev().fold(0.0, |acc, &ck| acc * r + ck);
        (i as f64 / self.start as f64).powi(self.l as i32 + 1) * poly
    }

    /// Outward sweep from the origin to index `end`, counting strict sign
    /// changes. `probe` records `u` at one intermediate index.
    pub fn sweep_outward(&self, e: f64, end: usize, probe: usize) -> Sweep {
        debug_assert!(end > self.start && end <= self.last);
        let c = self.series_coefficients(e);
        let mut nodes = 0;
        let mut sign = 1.0f64;
        let mut probe_val = f64::NAN;
        let mut prev = self.series_value(&c, self.start);
        let mut cur = self.series_value(&c, self.start + 1);
        for (i, u) in [(self.start, prev), (self.start + 1, cur)] {
            if i == probe {
                probe_val = u;
            }
        }
        let mut w_prev = self.w(self.start, e);
        let mut w_cur = self.w(self.start + 1, e);
        for i in (self.start + 1)..end {
            let w_next = self.w(i + 1, e);
            let next = ((12.0 - 10.0 * w_cur) * cur - w_prev * prev) / w_next;
            prev = cur;
            cur = next;
            w_prev = w_cur;
            w_cur = w_next;
            if cur != 0.0 && cur.signum() != sign {
                nodes += 1;
                sign = cur.signum();
            }
            if i + 1 == probe {
                probe_val = cur;
            }
            if cur.abs() > RESCALE_ABOVE {
                let s = 1.0 / cur.abs();
                prev *= s;
                cur *= s;
                probe_val *= s;
            }
        }
        Sweep {
            nodes,
            last: cur,
            probe: probe_val,
        }
    }

    /// Outward solution stored on indices `0..=end` (`u[0] = 0`).
    pub fn outward(&self, e: f64, end: usize) -> Vec<f64> {
        let c = self.series_coefficients(e);
        let mut u = vec![0.0; end + 1];
        for (i, slot) in u.iter_mut().enumerate().take(self.start + 2).skip(1) {
            *slot = self.series_value(&c, i);
        }
        for i in (self.start + 1)..end {
            u[i + 1] = ((12.0 - 10.0 * self.w(i, e)) * u[i] - self.w(i - 1, e) * u[i - 1]) / self.w(i + 1, e);
            if u[i + 1].abs() > RESCALE_ABOVE {
                let s = 1.0 / u[i + 1].abs();
                u[..=i + 1].iter_mut().for_each(|x| *x *= s);
            }
        }
        u
    }

    /// Inward solution on indices `from..=last`, returned as a vector whose
    /// entry `k` is `u[from + k]`. Starts from `exp(-kappa r)` at `r_max`.
    pub fn inward(&self, e: f64, from: usize) -> Vec<f64> {
        let n = self.last;
        let kappa = self.f(n, e).max(0.0).sqrt();
        let mut u = vec![0.0; n - from + 1];
        let k = |i: usize| i - from;
        u[k(n)] = 1.0;
        u[k(n - 1)] = (kappa * self.h).exp();
        for i in ((from + 1)..n).rev() {
            u[k(i - 1)] = ((12.0 - 10.0 * self.w(i, e)) * u[k(i)] - self.w(i + 1, e) * u[k(i + 1)]) / self.w(i - 1, e);
            if u[k(i - 1)].abs() > RESCALE_ABOVE {
                let s = 1.0 / u[k(i - 1)].abs();
                u[k(i - 1)..].iter_mut().for_each(|x| *x *= s);
            }
        }
        u
    }

    /// Outermost classical turning point at energy `e` (largest index with
    /// `f < 0`), or the minimum of `f` when there is no allowed region.
    /// Clamped so that both integrations have room.
    pub fn matching_index(&self, e: f64) -> usize {
        let lo = self.start + 2;
        let hi = self.last - 2;
        let found = (lo..=hi).rev().find(|&i| self.f(i, e) < 0.0);
        let m = found.unwrap_or_else(|| (lo..=hi).min_by(|&a, &b| self.q[a].total_cmp(&self.q[b])).unwrap_or(lo));
        m.clamp(lo, hi)
    }

    /// Difference of the forward log-derivatives of the outward and inward
    /// solutions at index `m`. Vanishes exactly at an eigenvalue of the
    /// discrete problem.
    pub fn matching_defect(&self, e: f64, m: usize) -> f64 {
        let out = self.sweep_outward(e, m + 1, m);
        let inw = self.inward(e, m);
        (out.last / out.probe - inw[1] / inw[0]) / self.h
    }

    /// Count of interior nodes of the zero-energy solution continued to
    /// infinity.
    ///
    /// Beyond the range of the potential the solution is
    /// `A r^(l+1) + B r^(-l)`; fitting it at two outer radii tells whether
    /// one more node lies past `r_max`.
    pub fn zero_energy_nodes(&self) -> usize {
        let probe = 3 * self.last / 4;
        let s = self.sweep_outward(0.0, self.last, probe);
        let (u1, u2) = (s.probe, s.last);
        let rho = self.last as f64 / probe as f64;
        let extra = u1 * u2 > 0.0 && u1 / u2 > rho.powi(self.l as i32);
        s.nodes + usize::from(extra)
    }

    pub fn turning_radius(&self, e: f64) -> f64 {
        self.matching_index(e) as f64 * self.h
    }
}

/// Strict sign changes, ignoring exact zeros.
pub(crate) fn count_sign_changes(u: &[f64]) -> usize {
    let mut sign = 0.0f64;
    let mut nodes = 0;
    for &x in u {
        if x != 0.0 {
            if sign != 0.0 && x.signum() != sign {
                nodes += 1;
            }
            sign = x.signum();
        }
    }
    nodes
}
