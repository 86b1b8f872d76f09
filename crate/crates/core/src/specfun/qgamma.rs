//! The q-gamma function Γ_q.
//!
//! For 0 < q < 1
//!     Γ_q(z) = (q;q)_∞ / (q^z;q)_∞ · (1−q)^{1−z},
//! for q > 1
//!     Γ_q(z) = q^{(z−1)(z−2)/2} · Γ_{1/q}(z).
//! Both satisfy Γ_q(z+1) = (1−q^z)/(1−q) · Γ_q(z).
//!
//! Internally the reciprocal 1/Γ_q is evaluated as a signed logarithm: it is
//! entire in z, with exact zeros at the poles z = 0, −1, −2, …, and the log form
//! keeps the huge Pochhammer products for q → 1 from under/overflowing.

use crate::error::{domain, Error, Result};

// Truncate the product once q^{z+j} drops below this.
const TAIL: f64 = 1e-17;
const MAX_TERMS: usize = 50_000_000;

/// (ln|1/Γ_q(z)|, sign); sign is 0.0 at a pole of Γ_q.
fn ln_recip(q: f64, z: f64) -> Result<(f64, f64)> {
    if !(q > 0.0) || q == 1.0 || !q.is_finite() {
        return domain(format!("q-gamma needs q > 0, q != 1, got {q}"));
    }
    if !z.is_finite() {
        return domain(format!("q-gamma of non-finite z = {z}"));
    }
    if q > 1.0 {
        let (l, s) = ln_recip(1.0 / q, z)?;
        return Ok((l - 0.5 * (z - 1.0) * (z - 2.0) * q.ln(), s));
    }
    let lq = q.ln();
    // ln (q^z; q)_∞ - ln (q; q)_∞
    let mut acc = 0.0;
    let mut sign = 1.0;
    let mut j = 0usize;
    loop {
        let e = z + j as f64;
        let t = (lq * e).exp(); // q^{z+j}
        if e == 0.0 {
            return Ok((f64::NEG_INFINITY, 0.0));
        }
        if t < 1.0 {
            acc += (-t).ln_1p();
        } else {
            // factor 1 - t < 0
            acc += (t - 1.0).ln();
            sign = -sign;
        }
        let jq = (j + 1) as f64;
        acc -= (-(lq * jq).exp()).ln_1p();
        j += 1;
        if t < TAIL && (lq * jq).exp() < TAIL {
            break;
        }
        if j > MAX_TERMS {
            return Err(Error::Domain(format!(
                "q-gamma product did not converge for q = {q}"
            )));
        }
    }
    Ok((acc + (z - 1.0) * (-q).ln_1p(), sign))
}

/// 1/Γ_q(z); exactly 0 at the poles of Γ_q.
pub fn recip_q_gamma(q: f64, z: f64) -> Result<f64> {
    let (l, s) = ln_recip(q, z)?;
    Ok(if s == 0.0 { 0.0 } else { s * l.exp() })
}

/// Γ_q(z).
pub fn q_gamma(q: f64, z: f64) -> Result<f64> {
    let (l, s) = ln_recip(q, z)?;
    if s == 0.0 {
        return domain(format!("q-gamma pole at z = {z}"));
    }
    Ok(s * (-l).exp())
}

/// Γ_q(num)/Γ_q(den) without forming either factor.
///
/// A pole in the denominator gives an exact 0; a pole in the numerator is an error.
pub fn q_gamma_ratio(q: f64, num: f64, den: f64) -> Result<f64> {
    let (ln_n, s_n) = ln_recip(q, num)?;
    let (ln_d, s_d) = ln_recip(q, den)?;
    if s_n == 0.0 {
        return domain(format!("q-gamma pole in numerator at z = {num}"));
    }
    if s_d == 0.0 {
        return Ok(0.0);
    }
    Ok(s_n * s_d * (ln_d - ln_n).exp())
}
