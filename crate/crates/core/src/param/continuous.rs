//! Classical (smooth) confocal parametrizations, for continuum-limit and
//! continuous-orthogonality checks.

use crate::lattice::{DiscreteNet, Window};
use crate::specfun::jacobi_sn_cn_dn;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Continuous {
    /// √(a−b) (cos s₁ cosh s₂, sin s₁ sinh s₂).
    TrigHyp { a: f64, b: f64 },
    /// √(a−b)/k (sn s₁ dn s₂/cn s₂, k' cn s₁/cn s₂).
    EllipticIc { a: f64, b: f64, k: f64 },
    /// √(a−b) (k sn s₁/sn s₂, dn s₁ cn s₂/sn s₂).
    HyperbolicIc { a: f64, b: f64, k: f64 },
    /// √(a−b) (e^{s₁+s₂}, √(1−e^{2s₁}) √(e^{2s₂}−1)), s₁ < 0 < s₂.
    Pencil { a: f64, b: f64 },
    /// √(a−b) (s₁s₂, √(1−s₁²) √(s₂²−1)), |s₁| < 1 < s₂.
    Concentric { a: f64, b: f64 },
    /// √(a−c) (sn₁ dn₂ ns₃, cn₁ cn₂ ds₃, dn₁ sn₂ cs₃), k₁² = (a−b)/(a−c) = k₃², k₂² = 1 − k₁².
    Elliptic3d { a: f64, b: f64, c: f64 },
    /// A deliberately non-orthogonal shear of the trig system (negative control).
    Sheared { a: f64, b: f64, shear: f64 },
}

impl Continuous {
    pub fn dim(&self) -> usize {
        match self {
            Continuous::Elliptic3d { .. } => 3,
            _ => 2,
        }
    }

    /// The point with parameters s; `None` outside the domain.
    pub fn point(&self, s: &[f64]) -> Option<Vec<f64>> {
        let jac = |s: f64, k: f64| jacobi_sn_cn_dn(s, k).ok();
        let p = match *self {
            Continuous::TrigHyp { a, b } => {
                let r = (a - b).sqrt();
                vec![r * s[0].cos() * s[1].cosh(), r * s[0].sin() * s[1].sinh()]
            }
            Continuous::Sheared { a, b, shear } => {
                let r = (a - b).sqrt();
                let t = s[0] + shear * s[1];
                vec![r * t.cos() * s[1].cosh(), r * t.sin() * s[1].sinh()]
            }
            Continuous::EllipticIc { a, b, k } => {
                let r = (a - b).sqrt() / k;
                let kp = ((1.0 - k) * (1.0 + k)).sqrt();
                let (sn1, cn1, _) = jac(s[0], k)?;
                let (_, cn2, dn2) = jac(s[1], k)?;
                if cn2 == 0.0 {
                    return None;
                }
                vec![r * sn1 * dn2 / cn2, r * kp * cn1 / cn2]
            }
            Continuous::HyperbolicIc { a, b, k } => {
                let r = (a - b).sqrt();
                let (sn1, _, dn1) = jac(s[0], k)?;
                let (sn2, cn2, _) = jac(s[1], k)?;
                if sn2 == 0.0 {
                    return None;
                }
                vec![r * k * sn1 / sn2, r * dn1 * cn2 / sn2]
            }
            Continuous::Pencil { a, b } => {
                if !(s[0] <= 0.0 && s[1] >= 0.0) {
                    return None;
                }
                let r = (a - b).sqrt();
                vec![
                    r * (s[0] + s[1]).exp(),
                    r * (-(2.0 * s[0]).exp_m1()).sqrt() * (2.0 * s[1]).exp_m1().sqrt(),
                ]
            }
            Continuous::Concentric { a, b } => {
                if !(s[0].abs() <= 1.0 && s[1] >= 1.0) {
                    return None;
                }
                let r = (a - b).sqrt();
                vec![
                    r * s[0] * s[1],
                    r * (1.0 - s[0] * s[0]).sqrt() * (s[1] * s[1] - 1.0).sqrt(),
                ]
            }
            Continuous::Elliptic3d { a, b, c } => {
                let k1 = ((a - b) / (a - c)).sqrt();
                let k2 = ((b - c) / (a - c)).sqrt();
                let (sn1, cn1, dn1) = jac(s[0], k1)?;
                let (sn2, cn2, dn2) = jac(s[1], k2)?;
                let (sn3, cn3, dn3) = jac(s[2], k1)?;
                if sn3 == 0.0 {
                    return None;
                }
                let r = (a - c).sqrt() / sn3;
                vec![r * sn1 * dn2, r * cn1 * cn2 * dn3, r * dn1 * sn2 * cn3]
            }
        };
        p.iter().all(|v| v.is_finite()).then_some(p)
    }

    /// Sample on a window with s_i = origin_i + h·q_i.
    pub fn sample(&self, origin: &[f64], h: f64, window: Window) -> DiscreteNet {
        let dim = self.dim();
        DiscreteNet::from_fn(window, dim, |idx| {
            let s: Vec<f64> = idx
                .q()
                .iter()
                .zip(origin)
                .map(|(&q, &o)| o + h * q as f64)
                .collect();
            self.point(&s)
        })
    }
}
