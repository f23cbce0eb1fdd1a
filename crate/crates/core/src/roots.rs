//! Bracketing root finders shared by the closed-form and shooting modules.

use crate::error::{Error, Result};

/// Bisection on a sign change of `f` in `[a, b]`.
///
/// Stops when the bracket is narrower than `xtol` or cannot shrink any
/// further in floating point. Returns the final `(lo, hi)` bracket, ordered
/// so that `f(lo)` has the sign of `f(a)`.
pub fn bisect<F>(mut f: F, a: f64, b: f64, xtol: f64, max_iter: usize) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok((a, a));
    }
    if fb == 0.0 {
        return Ok((b, b));
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket(format!(
            "no sign change on [{a}, {b}]: f(a) = {fa}, f(b) = {fb}"
        )));
    }
    bisect_predicate(|x| f(x).signum() == fa.signum(), a, b, xtol, max_iter)
}

/// Bisection on a boolean predicate with `pred(a) == true`, `pred(b) == false`.
pub fn bisect_predicate<P>(mut pred: P, mut a: f64, mut b: f64, xtol: f64, max_iter: usize) -> Result<(f64, f64)>
where
    P: FnMut(f64) -> bool,
{
    for _ in 0..max_iter {
        if (b - a).abs() <= xtol {
            return Ok((a, b));
        }
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            return Ok((a, b));
        }
        if pred(mid) {
            a = mid;
        } else {
            b = mid;
        }
    }
    if (b - a).abs() <= xtol {
        Ok((a, b))
    } else {
        Err(Error::Bracket(format!(
            "bisection did not reach width {xtol} in {max_iter} iterations (bracket [{a}, {b}])"
        )))
    }
}

/// Brent's method (inverse quadratic interpolation with bisection fallback).
pub fn brent<F>(mut f: F, a: f64, b: f64, xtol: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket(format!(
            "no sign change on [{a}, {b}]: f(a) = {fa}, f(b) = {fb}"
        )));
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
    }
    Err(Error::Bracket(format!(
        "brent did not converge in {max_iter} iterations (last x = {b})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brent_finds_sqrt2() {
        let r = brent(|x| x * x - 2.0, 0.0, 2.0, 1e-14, 100).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn bisect_brackets_root() {
        let (lo, hi) = bisect(|x| x.cos() - x, 0.0, 1.0, 1e-12, 200).unwrap();
        assert!(hi - lo <= 1e-12);
        assert!((lo - 0.739_085_133_215_160_6).abs() < 1e-12);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        assert!(matches!(
            brent(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 50),
            Err(Error::Bracket(_))
        ));
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 50).is_err());
    }
}
