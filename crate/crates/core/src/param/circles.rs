//! Nets diagonally related to circles: a hyperbolic pencil, and two families
//! of concentric circles centred at the foci.

use super::{admissibility, check_ab, Continuous, Parametrization};
use crate::error::Result;
use crate::family::ConfocalFamily;
use crate::lattice::Window;
use crate::specfun::{discrete_sqrt, q_gamma_ratio};
use std::collections::BTreeMap;

/// Exponential factors in x, q-gamma ratios in y (q = e^{∓2δ}).
///
/// With c₁ = ¼, c₂ = −¼ the y-coordinate vanishes exactly on n₁ = 0 and n₂ = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Pencil {
    fam: ConfocalFamily,
    delta: f64,
    c1: f64,
    c2: f64,
    alpha: f64,
    beta1: f64,
    beta2: f64,
}

impl Pencil {
    pub fn new(a: f64, b: f64, delta: f64, c1: f64, c2: f64) -> Result<Self> {
        let fam = check_ab(a, b)?;
        if !(delta > 0.0) || !delta.is_finite() {
            return admissibility(format!("δ = {delta} must be positive"));
        }
        let alpha = (a - b).sqrt();
        Ok(Self {
            fam,
            delta,
            c1,
            c2,
            alpha,
            beta1: alpha * (-(-2.0 * delta).exp_m1()).sqrt(),
            beta2: alpha * (2.0 * delta).exp_m1().sqrt(),
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn phases(&self) -> (f64, f64) {
        (self.c1, self.c2)
    }

    /// Centre abscissa c(η) and radius r(η) of the circle for the diagonal η = n₂ − n₁.
    pub fn circle(&self, eta: f64) -> (f64, f64) {
        let t = self.delta * (eta + self.c2 - self.c1);
        (self.alpha * t.cosh(), self.alpha * t.sinh())
    }

    pub fn continuous(&self) -> Continuous {
        let a = self.fam.semiaxes();
        Continuous::Pencil { a: a[0], b: a[1] }
    }

    pub fn s_of(&self, q: &[i64]) -> Vec<f64> {
        vec![
            self.delta * (q[0] as f64 * 0.5 + self.c1),
            self.delta * (q[1] as f64 * 0.5 + self.c2),
        ]
    }
}

impl Parametrization for Pencil {
    fn family(&self) -> &ConfocalFamily {
        &self.fam
    }

    fn default_window(&self) -> Window {
        Window::new(vec![-8, 0], vec![0, 8]).expect("nonempty")
    }

    fn factor(&self, axis: usize, coord: usize, q: i64) -> Option<f64> {
        let n = q as f64 * 0.5;
        let d = self.delta;
        match (axis, coord) {
            (0, 0) => Some(self.alpha * (d * (n + self.c1)).exp()),
            (1, 0) => Some(self.alpha * (d * (n + self.c2)).exp()),
            (0, _) => {
                let z = -n - self.c1;
                q_gamma_ratio((-2.0 * d).exp(), z + 0.75, z + 0.25)
                    .ok()
                    .map(|r| self.beta1 * r)
            }
            _ => {
                let z = n + self.c2;
                q_gamma_ratio((2.0 * d).exp(), z + 0.75, z + 0.25)
                    .ok()
                    .map(|r| self.beta2 * r)
            }
        }
    }

    fn info(&self) -> BTreeMap<String, f64> {
        BTreeMap::from([("delta".to_string(), self.delta)])
    }
}

/// Linear factors in x, discrete square roots in y; δ = 4/√((2l+1)² − 1).
///
/// With c₁ = c₂ = 0, y vanishes exactly on n₁ = ±(l+1)/2 and n₂ = l/2.
#[derive(Debug, Clone, PartialEq)]
pub struct Concentric {
    fam: ConfocalFamily,
    l: u32,
    c1: f64,
    c2: f64,
    delta: f64,
    // √(16+δ²)/(4δ), equal to (2l+1)/4
    shift: f64,
    alpha: f64,
}

impl Concentric {
    pub fn new(a: f64, b: f64, l: u32, c1: f64, c2: f64) -> Result<Self> {
        let fam = check_ab(a, b)?;
        if l < 1 {
            return admissibility("l must be at least 1");
        }
        let w = (2 * l + 1) as f64;
        Ok(Self {
            fam,
            l,
            c1,
            c2,
            delta: 4.0 / (w * w - 1.0).sqrt(),
            shift: w / 4.0,
            alpha: (a - b).sqrt(),
        })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// The shift √(16+δ²)/(4δ) entering c_i^± = c_i + ¼ ± shift.
    pub fn shift(&self) -> f64 {
        self.shift
    }

    pub fn phases(&self) -> (f64, f64) {
        (self.c1, self.c2)
    }

    /// Circle for the diagonal ξ = n₁ + n₂: centre (−√(a−b), 0), radius.
    pub fn xi_circle(&self, xi: f64) -> (f64, f64) {
        (-self.alpha, self.alpha * self.delta * (xi + self.c1 + self.c2))
    }

    /// Circle for the diagonal η = n₂ − n₁: centre (+√(a−b), 0), radius.
    pub fn eta_circle(&self, eta: f64) -> (f64, f64) {
        (self.alpha, self.alpha * self.delta * (eta + self.c2 - self.c1))
    }

    pub fn continuous(&self) -> Continuous {
        let a = self.fam.semiaxes();
        Continuous::Concentric { a: a[0], b: a[1] }
    }

    pub fn s_of(&self, q: &[i64]) -> Vec<f64> {
        vec![
            self.delta * (q[0] as f64 * 0.5 + self.c1),
            self.delta * (q[1] as f64 * 0.5 + self.c2),
        ]
    }
}

impl Parametrization for Concentric {
    fn family(&self) -> &ConfocalFamily {
        &self.fam
    }

    fn default_window(&self) -> Window {
        let l = self.l as i64;
        Window::new(vec![-(l + 1), l], vec![l + 1, 3 * l + 2]).expect("nonempty")
    }

    fn factor(&self, axis: usize, coord: usize, q: i64) -> Option<f64> {
        let n = q as f64 * 0.5;
        let ad = self.alpha * self.delta;
        let c = if axis == 0 { self.c1 } else { self.c2 };
        let cp = c + 0.25 + self.shift;
        let cm = c + 0.25 - self.shift;
        if coord == 0 {
            return Some(ad * (n + c));
        }
        let s1 = discrete_sqrt(n + cp).ok()?;
        let s2 = if axis == 0 {
            discrete_sqrt(-(n + cm) + 0.5).ok()?
        } else {
            discrete_sqrt(n + cm).ok()?
        };
        Some(ad * s1 * s2)
    }

    fn info(&self) -> BTreeMap<String, f64> {
        BTreeMap::from([
            ("delta".to_string(), self.delta),
            ("shift".to_string(), self.shift),
        ])
    }
}
