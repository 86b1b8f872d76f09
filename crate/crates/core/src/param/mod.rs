//! Closed-form discrete parametrizations and their assembly into nets.
//!
//! Every kind is factorized: x_k(n) = Π_i f_i^k(n_i) / Π_{i≠k} √|a_k − a_i|,
//! where the per-axis factors satisfy
//!
//! ```text
//! f_i^k(n) f_i^k(n+½) =  u_i(n+¼) + a_k    (k ≤ i)
//! f_i^k(n) f_i^k(n+½) = −(u_i(n+¼) + a_k)  (k > i)
//! ```
//!
//! A [`Parametrization`] supplies the factors; [`FactorTable`] samples them on a
//! window; [`assemble_net`] and [`recover_u`] turn the table into a net and its
//! parameter sequences.

mod circles;
mod continuous;
mod elliptic2d;
mod elliptic3d;
mod gamma;
mod kind;
pub mod limit;
mod trig;

pub use circles::{Concentric, Pencil};
pub use continuous::Continuous;
pub use elliptic2d::{EllipticIc, HyperbolicIc, Step};
pub use elliptic3d::{solve_modulus_3d, Elliptic3d, UmbilicPair};
pub use gamma::GammaNet;
pub use kind::{generate, Generated, Kind, Model};
pub use limit::{elliptic_ic_sweep, hyperbolic_ic_sweep, trig_sweep, LimitLevel};
pub use trig::TrigHyp;

use crate::error::{Error, Result};
use crate::family::ConfocalFamily;
use crate::lattice::{DiscreteNet, NetIndex, USeq, USequences, Window};
use std::collections::BTreeMap;

/// Relative size below which a coordinate counts as vanishing.
pub const DEGENERATE_REL: f64 = 1e-12;

/// Spread tolerance of [`recover_u`] (relative to max(1, |u|, a_1)).
pub const RECOVER_TOL: f64 = 1e-10;

/// A factorized discrete confocal parametrization.
pub trait Parametrization {
    /// The confocal family (internal convention, see [`ConfocalFamily::offset`]).
    fn family(&self) -> &ConfocalFamily;

    fn default_window(&self) -> Window;

    /// f_axis^coord at the vertex coordinate n = q/2; `None` at a pole.
    fn factor(&self, axis: usize, coord: usize, q: i64) -> Option<f64>;

    /// Named scalar data (moduli, steps, tangent-conic axes, …).
    fn info(&self) -> BTreeMap<String, f64> {
        BTreeMap::new()
    }

    fn dim(&self) -> usize {
        self.family().dim()
    }

    /// The point x(n), evaluated directly from the factors.
    fn point(&self, idx: &NetIndex) -> Option<Vec<f64>> {
        let norm = self.family().normalizers();
        (0..self.dim())
            .map(|k| {
                let mut p = 1.0 / norm[k];
                for (i, &q) in idx.q().iter().enumerate() {
                    p *= self.factor(i, k, q)?;
                }
                Some(p)
            })
            .collect()
    }
}

/// Per-axis factor samples f_i^k over a window.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorTable {
    window: Window,
    normalizers: Vec<f64>,
    // [axis][coord][q - lo]
    values: Vec<Vec<Vec<Option<f64>>>>,
}

impl FactorTable {
    /// Sample a parametrization on `window`.
    pub fn sample(p: &dyn Parametrization, window: &Window) -> Result<Self> {
        let n = p.dim();
        if window.dim() != n {
            return Err(Error::Range(format!(
                "window of dimension {} for a {n}-dimensional parametrization",
                window.dim()
            )));
        }
        let values = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        (window.lo()[i]..=window.hi()[i])
                            .map(|q| p.factor(i, k, q).filter(|v| v.is_finite()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            window: window.clone(),
            normalizers: p.family().normalizers(),
            values,
        })
    }

    /// Solve the difference equations for f from given u-sequences,
    /// seeded with f_i^k at the lower window corner: f(q+1) = ±(u+a_k)/f(q).
    ///
    /// Each seed must be nonzero; a zero product stops the axis (later values absent).
    pub fn resolve_from_u(
        fam: &ConfocalFamily,
        useqs: &USequences,
        window: &Window,
        seeds: &[Vec<f64>],
    ) -> Result<Self> {
        let n = fam.dim();
        if window.dim() != n || useqs.dim() != n || seeds.len() != n {
            return Err(Error::Range("dimension mismatch in resolve_from_u".into()));
        }
        let a = fam.semiaxes();
        let mut values = Vec::with_capacity(n);
        for i in 0..n {
            let mut axis = Vec::with_capacity(n);
            for k in 0..n {
                let sign = if k <= i { 1.0 } else { -1.0 };
                let mut col = vec![None; window.extent(i)];
                let mut cur = seeds[i][k];
                if cur == 0.0 || !cur.is_finite() {
                    return Err(Error::Domain(format!("seed f_{i}^{k} must be finite and nonzero")));
                }
                col[0] = Some(cur);
                for (j, q) in (window.lo()[i]..window.hi()[i]).enumerate() {
                    let Some(u) = useqs.get(i, q) else { break };
                    let next = sign * (u + a[k]) / cur;
                    if !next.is_finite() || next == 0.0 {
                        break;
                    }
                    col[j + 1] = Some(next);
                    cur = next;
                }
                axis.push(col);
            }
            values.push(axis);
        }
        Ok(Self {
            window: window.clone(),
            normalizers: fam.normalizers(),
            values,
        })
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn normalizers(&self) -> &[f64] {
        &self.normalizers
    }

    pub fn get(&self, axis: usize, coord: usize, q: i64) -> Option<f64> {
        let j = q - self.window.lo()[axis];
        if j < 0 {
            return None;
        }
        *self.values[axis][coord].get(j as usize)?
    }
}

/// x_k(n) = Π_j f_j^k(n_j) / normalizer_k, with vanishing coordinates flagged.
pub fn assemble_net(ft: &FactorTable) -> DiscreteNet {
    let n = ft.dim();
    let mut net = DiscreteNet::from_fn(ft.window.clone(), n, |idx| {
        (0..n)
            .map(|k| {
                let mut p = 1.0 / ft.normalizers[k];
                for (i, &q) in idx.q().iter().enumerate() {
                    p *= ft.get(i, k, q)?;
                }
                Some(p)
            })
            .collect()
    });
    net.flag_degenerate(DEGENERATE_REL);
    net
}

/// Recover u_i on every site strictly inside the window from the factor products.
///
/// All coordinates k give the same u_i; a spread above [`RECOVER_TOL`] means
/// the table does not solve the difference equations.
pub fn recover_u(ft: &FactorTable, fam: &ConfocalFamily) -> Result<USequences> {
    let n = ft.dim();
    if fam.dim() != n {
        return Err(Error::Range("family and table dimensions differ".into()));
    }
    let a = fam.semiaxes();
    let mut axes = Vec::with_capacity(n);
    for i in 0..n {
        let lo = ft.window.lo()[i];
        let hi = ft.window.hi()[i] - 1;
        let mut vals = Vec::new();
        for key in lo..=hi {
            let mut cands = Vec::new();
            let mut exact = None;
            for k in 0..n {
                let (Some(f0), Some(f1)) = (ft.get(i, k, key), ft.get(i, k, key + 1)) else {
                    continue;
                };
                let p = f0 * f1;
                let s = if k <= i { 1.0 } else { -1.0 };
                if p == 0.0 {
                    exact = Some(-a[k]);
                }
                cands.push(s * p - a[k]);
            }
            if cands.is_empty() {
                vals.push(None);
                continue;
            }
            let lo_c = cands.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi_c = cands.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let mean = cands.iter().sum::<f64>() / cands.len() as f64;
            let scale = 1f64.max(mean.abs()).max(a[0].abs());
            if hi_c - lo_c > RECOVER_TOL * scale {
                return Err(Error::Corrupted(format!(
                    "u_{} at key {key}: coordinate branches disagree by {:.3e}",
                    i + 1,
                    hi_c - lo_c
                )));
            }
            vals.push(Some(exact.unwrap_or(mean)));
        }
        axes.push(USeq::new(lo, vals));
    }
    Ok(USequences::new(axes))
}

/// A conic x²/a0 + sign·y²/b0 = 1 (sign = +1 ellipse, −1 hyperbola).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic {
    pub a0: f64,
    pub b0: f64,
    pub sign: f64,
}

impl Conic {
    /// Residual of the tangency condition a0·A² + sign·b0·B² = C² for the
    /// line Ax + By = C, normalized by max(C², a0A² + b0B²).
    pub fn tangency_residual(&self, a: f64, b: f64, c: f64) -> f64 {
        let lhs = self.a0 * a * a + self.sign * self.b0 * b * b;
        let den = (c * c).max(self.a0 * a * a + self.b0 * b * b);
        if den == 0.0 {
            return f64::INFINITY;
        }
        (lhs - c * c).abs() / den
    }
}

pub(crate) fn admissibility<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Admissibility(msg.into()))
}

pub(crate) fn check_ab(a: f64, b: f64) -> Result<ConfocalFamily> {
    ConfocalFamily::new(vec![a, b])
}
