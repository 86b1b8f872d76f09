//! The gamma-function solution in any dimension.
//!
//! With integers α₁ > … > α_N, a_k = α_k + k/2 and u_i(n+¼) = n − i/2:
//!
//! ```text
//! f_i^k(n) = sqr(n + α_k + (k−i)/2)          i ≥ k
//! f_i^k(n) = sqr(−n − α_k − (k−i)/2 + ½)     i < k
//! ```
//!
//! so x_k vanishes on n_k = −α_k and on n_{k−1} = −α_k.

use super::Parametrization;
use crate::error::{Error, Result};
use crate::family::ConfocalFamily;
use crate::lattice::Window;
use crate::specfun::discrete_sqrt;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub struct GammaNet {
    fam: ConfocalFamily,
    alpha: Vec<i64>,
}

impl GammaNet {
    pub fn new(alpha: Vec<i64>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::Admissibility("need at least two integers α".into()));
        }
        if alpha.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Admissibility(format!(
                "α = {alpha:?} must be strictly decreasing"
            )));
        }
        if alpha.iter().any(|a| a.abs() > 1 << 20) {
            return Err(Error::Admissibility("α out of range".into()));
        }
        let a = alpha
            .iter()
            .enumerate()
            .map(|(k, &al)| al as f64 + (k + 1) as f64 * 0.5)
            .collect();
        Ok(Self {
            fam: ConfocalFamily::new(a)?,
            alpha,
        })
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    /// u_i at the site with the given key: key/2 − (i+1)/2 (axes 0-based).
    pub fn u_exact(&self, axis: usize, key: i64) -> f64 {
        (key - axis as i64 - 1) as f64 * 0.5
    }
}

impl Parametrization for GammaNet {
    fn family(&self) -> &ConfocalFamily {
        &self.fam
    }

    fn default_window(&self) -> Window {
        let n = self.alpha.len();
        let lo: Vec<i64> = self.alpha.iter().map(|a| -2 * a).collect();
        let hi = (0..n)
            .map(|i| {
                if i + 1 < n {
                    -2 * self.alpha[i + 1]
                } else {
                    -2 * self.alpha[i] + 8
                }
            })
            .collect();
        Window::new(lo, hi).expect("α decreasing")
    }

    fn factor(&self, axis: usize, coord: usize, q: i64) -> Option<f64> {
        // twice the argument, exact in integers
        let d = coord as i64 - axis as i64;
        let two_arg = if axis >= coord {
            q + 2 * self.alpha[coord] + d
        } else {
            -q - 2 * self.alpha[coord] - d + 1
        };
        discrete_sqrt(two_arg as f64 * 0.5).ok()
    }

    fn info(&self) -> BTreeMap<String, f64> {
        self.alpha
            .iter()
            .enumerate()
            .map(|(k, &a)| (format!("alpha{}", k + 1), a as f64))
            .collect()
    }
}
