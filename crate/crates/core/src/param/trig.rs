//! Trigonometric/hyperbolic nets: ellipses and hyperbolas of a planar family.

use super::{admissibility, check_ab, Continuous, Parametrization};
use crate::error::Result;
use crate::family::ConfocalFamily;
use crate::lattice::Window;
use crate::specfun::{cos_turns, sin_turns};
use std::collections::BTreeMap;
use std::f64::consts::TAU;

/// x(n) = A (cos(δ₁n₁+c₁) cosh(δ₂n₂+c₂), sin(δ₁n₁+c₁) sinh(δ₂n₂+c₂)) with
/// δ₁ = 2π/m, A = √((a−b)/(cos(δ₁/2) cosh(δ₂/2))).
///
/// The angular factor is evaluated in turns, so symmetric nets have exact zeros
/// and the period closes exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigHyp {
    fam: ConfocalFamily,
    m: u32,
    delta2: f64,
    c1: f64,
    c2: f64,
    amp1: f64,
    amp2: f64,
}

impl TrigHyp {
    pub fn new(a: f64, b: f64, m: u32, delta2: f64, c1: f64, c2: f64) -> Result<Self> {
        let fam = check_ab(a, b)?;
        if m < 3 {
            return admissibility(format!("m = {m}: need m ≥ 3 so that cos(π/m) > 0"));
        }
        if !(delta2 > 0.0) || !delta2.is_finite() {
            return admissibility(format!("δ₂ = {delta2} must be positive"));
        }
        if !c1.is_finite() || !c2.is_finite() {
            return admissibility("non-finite phase");
        }
        let cos_half = cos_turns(0.5 / m as f64);
        let amp1 = ((a - b) / cos_half).sqrt();
        let amp2 = ((a - b) / (0.5 * delta2).cosh()).sqrt();
        Ok(Self {
            fam,
            m,
            delta2,
            c1,
            c2,
            amp1,
            amp2,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn delta1(&self) -> f64 {
        TAU / self.m as f64
    }

    pub fn delta2(&self) -> f64 {
        self.delta2
    }

    pub fn phases(&self) -> (f64, f64) {
        (self.c1, self.c2)
    }

    /// The continuous system this net approximates; s_i = δ_i n_i + c_i.
    pub fn continuous(&self) -> Continuous {
        let a = self.fam.semiaxes();
        Continuous::TrigHyp { a: a[0], b: a[1] }
    }

    /// Continuous parameters s of the vertex with half-step index q.
    pub fn s_of(&self, q: &[i64]) -> Vec<f64> {
        vec![
            self.delta1() * q[0] as f64 * 0.5 + self.c1,
            self.delta2 * q[1] as f64 * 0.5 + self.c2,
        ]
    }
}

impl Parametrization for TrigHyp {
    fn family(&self) -> &ConfocalFamily {
        &self.fam
    }

    fn default_window(&self) -> Window {
        let m = self.m as i64;
        Window::new(vec![-m, -(m / 2)], vec![m, m / 2]).expect("nonempty")
    }

    fn factor(&self, axis: usize, coord: usize, q: i64) -> Option<f64> {
        match axis {
            0 => {
                let t = q as f64 / (2.0 * self.m as f64) + self.c1 / TAU;
                Some(self.amp1 * if coord == 0 { cos_turns(t) } else { sin_turns(t) })
            }
            _ => {
                let phi = self.delta2 * q as f64 * 0.5 + self.c2;
                Some(self.amp2 * if coord == 0 { phi.cosh() } else { phi.sinh() })
            }
        }
    }

    fn info(&self) -> BTreeMap<String, f64> {
        BTreeMap::from([
            ("delta1".to_string(), self.delta1()),
            ("delta2".to_string(), self.delta2),
        ])
    }
}
