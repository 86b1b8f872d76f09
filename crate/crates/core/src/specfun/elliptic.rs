//! Complete elliptic integral K(k) and Jacobi sn, cn, dn.
//!
//! K comes from the arithmetic-geometric mean; sn/cn/dn from the descending
//! Gauss–Landen transformation. Arguments are first reduced to [0, K/2] with
//! the exact half- and quarter-period symmetries, which keeps the core
//! evaluation on a short interval and makes values at multiples of K exact.

use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

const AGM_TOL: f64 = 1e-15;
// Landen descent stops once |a - b| <= LANDEN_CA * a; error is O(CA²).
const LANDEN_CA: f64 = 1e-9;

/// Modulus k of the Jacobi functions, 0 ≤ k < 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipticModulus {
    k: f64,
}

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self> {
        check_modulus(k)?;
        Ok(Self { k })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Complementary modulus k' = √(1−k²), computed as √((1−k)(1+k)).
    pub fn kp(&self) -> f64 {
        complementary(self.k)
    }

    pub fn quarter_period(&self) -> f64 {
        agm_k(self.k)
    }
}

fn check_modulus(k: f64) -> Result<()> {
    if !(0.0..1.0).contains(&k) {
        return domain(format!("modulus k = {k} outside [0, 1)"));
    }
    Ok(())
}

fn complementary(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).sqrt()
}

fn agm_k(k: f64) -> f64 {
    let mut a = 1.0;
    let mut b = complementary(k);
    for _ in 0..64 {
        if (a - b).abs() <= AGM_TOL * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    FRAC_PI_2 / a
}

/// Complete elliptic integral of the first kind, K(k) = ∫₀^{π/2} dθ/√(1−k² sin²θ).
pub fn complete_elliptic_k(k: f64) -> Result<f64> {
    check_modulus(k)?;
    Ok(agm_k(k))
}

/// Gauss–Landen core; accurate for moderate |u|.
fn sncndn(u: f64, k: f64) -> (f64, f64, f64) {
    let mut emc = (1.0 - k) * (1.0 + k);
    let mut em = [0.0f64; 16];
    let mut en = [0.0f64; 16];
    let mut a = 1.0;
    let mut dn = 1.0;
    let mut c = 1.0;
    let mut l = 0;
    for i in 0..16 {
        l = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= LANDEN_CA * a {
            break;
        }
        emc *= a;
        a = c;
    }
    let u = u * c;
    let (mut sn, mut cn) = u.sin_cos();
    if sn != 0.0 {
        let mut a = cn / sn;
        c *= a;
        for ii in (0..=l).rev() {
            let b = em[ii];
            a *= c;
            c *= dn;
            dn = (en[ii] + a) / (b + a);
            a = c / b;
        }
        let a = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { a } else { -a };
        cn = c * sn;
    }
    (sn, cn, dn)
}

/// sn, cn, dn at s = t·K(k).
///
/// `t` is reduced modulo 4 exactly; integer `t` yields exact zeros and ±1.
pub fn jacobi_quarter(t: f64, k: f64) -> Result<(f64, f64, f64)> {
    check_modulus(k)?;
    if !t.is_finite() {
        return domain(format!("non-finite argument t = {t}"));
    }
    if k == 0.0 {
        return Ok((
            super::sin_turns(0.25 * t),
            super::cos_turns(0.25 * t),
            1.0,
        ));
    }
    let kk = agm_k(k);
    let kp = complementary(k);
    let mut r = t % 4.0;
    if r < 0.0 {
        r += 4.0;
    }
    let (mut s_sn, mut s_cn) = (1.0, 1.0);
    if r >= 2.0 {
        // sn(s+2K) = -sn, cn(s+2K) = -cn
        r -= 2.0;
        s_sn = -1.0;
        s_cn = -1.0;
    }
    if r > 1.0 {
        // sn(2K-s) = sn, cn(2K-s) = -cn
        r = 2.0 - r;
        s_cn = -s_cn;
    }
    let (sn, cn, dn) = if r > 0.5 {
        // complement: s = K - w
        let (s2, c2, d2) = sncndn((1.0 - r) * kk, k);
        (c2 / d2, kp * s2 / d2, kp / d2)
    } else {
        sncndn(r * kk, k)
    };
    Ok((s_sn * sn, s_cn * cn, dn))
}

/// Jacobi elliptic functions (sn, cn, dn) at argument `s`, modulus `k`.
pub fn jacobi_sn_cn_dn(s: f64, k: f64) -> Result<(f64, f64, f64)> {
    check_modulus(k)?;
    if !s.is_finite() {
        return domain(format!("non-finite argument s = {s}"));
    }
    if k == 0.0 {
        let (sn, cn) = s.sin_cos();
        return Ok((sn, cn, 1.0));
    }
    jacobi_quarter(s / agm_k(k), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_at_zero() {
        assert_eq!(complete_elliptic_k(0.0).unwrap(), FRAC_PI_2);
        assert!(complete_elliptic_k(1.0).is_err());
        assert!(complete_elliptic_k(-0.1).is_err());
    }

    #[test]
    fn quarter_period_values() {
        let k = 0.9;
        let (sn, cn, dn) = jacobi_quarter(1.0, k).unwrap();
        assert_eq!((sn, cn), (1.0, 0.0));
        assert!((dn - complementary(k)).abs() < 1e-15);
        let (sn, cn, _) = jacobi_quarter(2.0, k).unwrap();
        assert_eq!((sn, cn), (0.0, -1.0));
        let (sn, cn, _) = jacobi_quarter(-3.0, k).unwrap();
        assert_eq!((sn, cn), (1.0, 0.0));
    }

    #[test]
    fn zero_argument() {
        for k in [0.0, 0.3, 0.99] {
            assert_eq!(jacobi_sn_cn_dn(0.0, k).unwrap(), (0.0, 1.0, 1.0));
        }
        assert!(jacobi_sn_cn_dn(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn reduction_is_continuous_at_half_quarter() {
        let k = 0.8;
        let below = jacobi_quarter(0.5 - 1e-12, k).unwrap();
        let above = jacobi_quarter(0.5 + 1e-12, k).unwrap();
        assert!((below.0 - above.0).abs() < 1e-11);
        assert!((below.1 - above.1).abs() < 1e-11);
        assert!((below.2 - above.2).abs() < 1e-11);
    }
}
