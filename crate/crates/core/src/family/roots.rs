//! Roots of the pencil equation F(λ) = Σ x_k²/(a_k+λ) − 1.
//!
//! F is strictly decreasing between consecutive poles, +∞ at the left end and
//! −∞ at the right end of every interval, so each interval holds exactly one
//! root. Bisection keeps the bracket, Newton accelerates when it stays inside.

use crate::error::{Error, Result};

pub(super) fn pencil(a: &[f64], x: &[f64], lambda: f64) -> f64 {
    x.iter().zip(a).map(|(xk, ak)| xk * xk / (ak + lambda)).sum()
}

fn eval(a: &[f64], x: &[f64], lambda: f64) -> (f64, f64) {
    let mut f = -1.0;
    let mut df = 0.0;
    for (xk, ak) in x.iter().zip(a) {
        let r = 1.0 / (ak + lambda);
        let t = xk * xk * r;
        f += t;
        df -= t * r;
    }
    (f, df)
}

fn root_in(a: &[f64], x: &[f64], mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut l = 0.5 * (lo + hi);
    for _ in 0..400 {
        let (f, df) = eval(a, x, l);
        if f == 0.0 {
            return Ok(l);
        }
        if f > 0.0 {
            lo = l;
        } else {
            hi = l;
        }
        let newton = l - f / df;
        let next = if newton > lo && newton < hi && newton.is_finite() {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if next == l || (next - l).abs() <= 1e-15 * l.abs().max(f64::MIN_POSITIVE) {
            return Ok(next);
        }
        if hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
            return Ok(next);
        }
        l = next;
    }
    Err(Error::Solver(format!(
        "root bracket [{lo}, {hi}] did not converge"
    )))
}

/// The N roots, one per interlacing interval.
pub(super) fn confocal_roots(a: &[f64], x: &[f64]) -> Result<Vec<f64>> {
    let n = a.len();
    let r2: f64 = x.iter().map(|v| v * v).sum();
    (0..n)
        .map(|i| {
            let lo = -a[i];
            let hi = if i + 1 < n {
                -a[i + 1]
            } else {
                // F < 0 beyond this point: Σx²/(a_N+λ) ≤ r²/(λ+a_N) < 1
                -a[n - 1] + r2 + a[0]
            };
            root_in(a, x, lo, hi)
        })
        .collect()
}
