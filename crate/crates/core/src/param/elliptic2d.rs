//! Elliptic nets diagonally related to straight lines (IC-type nets).

use super::{admissibility, check_ab, Conic, Continuous, Parametrization};
use crate::error::Result;
use crate::family::ConfocalFamily;
use crate::lattice::Window;
use crate::specfun::{complete_elliptic_k, jacobi_quarter, jacobi_sn_cn_dn};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

fn check_k(k: f64) -> Result<()> {
    if !(k > 0.0 && k < 1.0) {
        return admissibility(format!("modulus k = {k}: need 0 < k < 1"));
    }
    Ok(())
}

fn check_half_integer(m: f64) -> Result<()> {
    if !(m >= 1.0) || (2.0 * m).fract() != 0.0 || m > 1e6 {
        return admissibility(format!("m = {m}: need m ∈ ½ℕ, m ≥ 1"));
    }
    Ok(())
}

/// Net outside the ellipse Ê₀ (sn/cn in n₁, dn/cn and 1/cn in n₂), δ = K(k)/m.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticIc {
    fam: ConfocalFamily,
    k: f64,
    m: f64,
    c1: f64,
    c2: f64,
    kk: f64,
    half: (f64, f64, f64),
    amp: [f64; 4],
}

impl EllipticIc {
    pub fn new(a: f64, b: f64, k: f64, m: f64, c1: f64, c2: f64) -> Result<Self> {
        let fam = check_ab(a, b)?;
        check_k(k)?;
        check_half_integer(m)?;
        let kk = complete_elliptic_k(k)?;
        let (sh, ch, dh) = jacobi_quarter(0.5 / m, k)?;
        if !(ch > 0.0) {
            return admissibility(format!("cn(δ/2, k) = {ch} must be positive"));
        }
        let kp = ((1.0 - k) * (1.0 + k)).sqrt();
        let al1 = ((a - b) * dh / ch).sqrt();
        let be1 = ((a - b) / ch).sqrt();
        Ok(Self {
            fam,
            k,
            m,
            c1,
            c2,
            kk,
            half: (sh, ch, dh),
            amp: [al1, be1, al1 / k, kp * be1 / k],
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn delta(&self) -> f64 {
        self.kk / self.m
    }

    /// The tangent ellipse Ê₀ of all diagonal lines.
    pub fn tangent_conic(&self) -> Conic {
        let (_, ch, dh) = self.half;
        let ab = self.fam.semiaxes()[0] - self.fam.semiaxes()[1];
        let kp2 = (1.0 - self.k) * (1.0 + self.k);
        let den = self.k * self.k * ch * ch;
        Conic {
            a0: ab * dh * dh / den,
            b0: ab * kp2 / den,
            sign: 1.0,
        }
    }

    /// (α, β) of the affine map (x, y) ↦ (αx, βy) onto an incircular net.
    pub fn affine_map(&self) -> (f64, f64) {
        let (_, ch, dh) = self.half;
        (ch / dh, ch)
    }

    pub fn continuous(&self) -> Continuous {
        let a = self.fam.semiaxes();
        Continuous::EllipticIc {
            a: a[0],
            b: a[1],
            k: self.k,
        }
    }

    pub fn s_of(&self, q: &[i64]) -> Vec<f64> {
        vec![
            self.delta() * q[0] as f64 * 0.5 + self.c1,
            self.delta() * q[1] as f64 * 0.5 + self.c2,
        ]
    }

    fn jac(&self, q: i64, c: f64) -> (f64, f64, f64) {
        jacobi_quarter(q as f64 / (2.0 * self.m) + c / self.kk, self.k).expect("validated modulus")
    }
}

impl Parametrization for EllipticIc {
    fn family(&self) -> &ConfocalFamily {
        &self.fam
    }

    fn default_window(&self) -> Window {
        let m2 = (2.0 * self.m) as i64;
        Window::new(vec![-2 * m2, 0], vec![2 * m2, m2 - 1]).expect("nonempty")
    }

    fn factor(&self, axis: usize, coord: usize, q: i64) -> Option<f64> {
        let [al1, be1, al2, be2] = self.amp;
        if axis == 0 {
            let (sn, cn, _) = self.jac(q, self.c1);
            Some(if coord == 0 { al1 * sn } else { be1 * cn })
        } else {
            let (_, cn, dn) = self.jac(q, self.c2);
            if cn == 0.0 {
                return None;
            }
            Some(if coord == 0 { al2 * dn / cn } else { be2 / cn })
        }
    }

    fn info(&self) -> BTreeMap<String, f64> {
        let c = self.tangent_conic();
        let (al, be) = self.affine_map();
        BTreeMap::from([
            ("k".to_string(), self.k),
            ("delta".to_string(), self.delta()),
            ("a0_hat".to_string(), c.a0),
            ("b0_hat".to_string(), c.b0),
            ("affine_alpha".to_string(), al),
            ("affine_beta".to_string(), be),
        ])
    }
}

/// Lattice step of a hyperbolic IC net.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Step {
    /// δ = K(k)/m, m ∈ ½ℕ; values at multiples of K are exact.
    QuarterPeriod { m: f64 },
    /// An arbitrary step δ.
    Value { delta: f64 },
}

/// Net outside the hyperbola Ĥ₀ (sn/dn in n₁, 1/sn and cn/sn in n₂).
#[derive(Debug, Clone, PartialEq)]
pub struct HyperbolicIc {
    fam: ConfocalFamily,
    k: f64,
    step: Step,
    delta: f64,
    c1: f64,
    c2: f64,
    kk: f64,
    half: (f64, f64, f64),
    amp: [f64; 3],
}

impl HyperbolicIc {
    pub fn new(a: f64, b: f64, k: f64, step: Step, c1: f64, c2: f64) -> Result<Self> {
        let fam = check_ab(a, b)?;
        check_k(k)?;
        let kk = complete_elliptic_k(k)?;
        let (delta, half) = match step {
            Step::QuarterPeriod { m } => {
                check_half_integer(m)?;
                (kk / m, jacobi_quarter(0.5 / m, k)?)
            }
            Step::Value { delta } => {
                if !(delta > 0.0) || !delta.is_finite() {
                    return admissibility(format!("δ = {delta} must be positive"));
                }
                (delta, jacobi_sn_cn_dn(0.5 * delta, k)?)
            }
        };
        let (_, ch, dh) = half;
        if !(ch > 0.0) {
            return admissibility(format!("cn(δ/2, k) = {ch} must be positive"));
        }
        let al2 = ((a - b) * ch / dh).sqrt();
        let be = ((a - b) / dh).sqrt();
        Ok(Self {
            fam,
            k,
            step,
            delta,
            c1,
            c2,
            kk,
            half,
            amp: [k * al2, al2, be],
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn step(&self) -> Step {
        self.step
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// The tangent hyperbola Ĥ₀ of all diagonal lines.
    pub fn tangent_conic(&self) -> Conic {
        let (_, ch, dh) = self.half;
        let ab = self.fam.semiaxes()[0] - self.fam.semiaxes()[1];
        let kp2 = (1.0 - self.k) * (1.0 + self.k);
        Conic {
            a0: ab * self.k * self.k * ch * ch / (dh * dh),
            b0: ab * kp2 / (dh * dh),
            sign: -1.0,
        }
    }

    /// (α, β) of the affine map onto a hyperbolic incircular net.
    pub fn affine_map(&self) -> (f64, f64) {
        let (_, ch, dh) = self.half;
        (dh / ch, dh)
    }

    pub fn continuous(&self) -> Continuous {
        let a = self.fam.semiaxes();
        Continuous::HyperbolicIc {
            a: a[0],
            b: a[1],
            k: self.k,
        }
    }

    pub fn s_of(&self, q: &[i64]) -> Vec<f64> {
        vec![
            self.delta * q[0] as f64 * 0.5 + self.c1,
            self.delta * q[1] as f64 * 0.5 + self.c2,
        ]
    }

    fn jac(&self, q: i64, c: f64) -> (f64, f64, f64) {
        match self.step {
            Step::QuarterPeriod { m } => jacobi_quarter(q as f64 / (2.0 * m) + c / self.kk, self.k),
            Step::Value { delta } => jacobi_sn_cn_dn(delta * q as f64 * 0.5 + c, self.k),
        }
        .expect("validated modulus")
    }
}

impl Parametrization for HyperbolicIc {
    fn family(&self) -> &ConfocalFamily {
        &self.fam
    }

    fn default_window(&self) -> Window {
        match self.step {
            Step::QuarterPeriod { m } => {
                let m2 = (2.0 * m) as i64;
                Window::new(vec![-2 * m2, 1], vec![2 * m2, m2]).expect("nonempty")
            }
            Step::Value { .. } => Window::new(vec![-8, 1], vec![8, 8]).expect("nonempty"),
        }
    }

    fn factor(&self, axis: usize, coord: usize, q: i64) -> Option<f64> {
        let [al1, al2, be] = self.amp;
        if axis == 0 {
            let (sn, _, dn) = self.jac(q, self.c1);
            Some(if coord == 0 { al1 * sn } else { be * dn })
        } else {
            let (sn, cn, _) = self.jac(q, self.c2);
            if sn == 0.0 {
                return None;
            }
            Some(if coord == 0 { al2 / sn } else { be * cn / sn })
        }
    }

    fn info(&self) -> BTreeMap<String, f64> {
        let c = self.tangent_conic();
        let (al, be) = self.affine_map();
        BTreeMap::from([
            ("k".to_string(), self.k),
            ("delta".to_string(), self.delta),
            ("a0_hat".to_string(), c.a0),
            ("c0_hat".to_string(), c.b0),
            ("affine_alpha".to_string(), al),
            ("affine_beta".to_string(), be),
        ])
    }
}
