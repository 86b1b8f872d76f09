use super::{sigmas, NetIndex, Window};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Status of a stored lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointFlag {
    Regular,
    /// Present, but some coordinate vanishes (focus, umbilic, boundary);
    /// polarity equations through it are not asserted.
    Degenerate,
    /// Not defined here (pole of the parametrization, or outside a sublattice).
    Absent,
}

/// Dense map from a window of (½ℤ)^N to R^N.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteNet {
    window: Window,
    dim: usize,
    coords: Vec<f64>,
    flags: Vec<PointFlag>,
}

/// An elementary quadrilateral (x(n), x(n+e_j), x(n+e_j+e_k), x(n+e_k)).
#[derive(Debug, Clone, PartialEq)]
pub struct Quad {
    pub base: NetIndex,
    pub corners: [Vec<f64>; 4],
}

impl DiscreteNet {
    /// Fill a net from a point function; `None` and non-finite points are absent.
    pub fn from_fn(
        window: Window,
        dim: usize,
        mut f: impl FnMut(&NetIndex) -> Option<Vec<f64>>,
    ) -> Self {
        let len = window.len();
        let mut coords = vec![0.0; len * dim];
        let mut flags = vec![PointFlag::Absent; len];
        for (p, idx) in window.indices().enumerate() {
            if let Some(x) = f(&idx) {
                if x.len() == dim && x.iter().all(|v| v.is_finite()) {
                    coords[p * dim..(p + 1) * dim].copy_from_slice(&x);
                    flags[p] = PointFlag::Regular;
                }
            }
        }
        Self {
            window,
            dim,
            coords,
            flags,
        }
    }

    /// Rebuild from raw storage (used by the document reader).
    pub fn from_parts(
        window: Window,
        dim: usize,
        coords: Vec<f64>,
        flags: Vec<PointFlag>,
    ) -> Result<Self> {
        let len = window.len();
        if coords.len() != len * dim || flags.len() != len {
            return Err(Error::Format("net storage does not match window".into()));
        }
        for (p, fl) in flags.iter().enumerate() {
            if *fl != PointFlag::Absent && coords[p * dim..(p + 1) * dim].iter().any(|v| !v.is_finite()) {
                return Err(Error::Format("non-finite stored point".into()));
            }
        }
        Ok(Self {
            window,
            dim,
            coords,
            flags,
        })
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Dimension N of the ambient space (equals the lattice dimension).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn indices(&self) -> impl Iterator<Item = NetIndex> + '_ {
        self.window.indices()
    }

    /// The point at `idx`, including degenerate ones; `None` if absent or outside.
    pub fn point(&self, idx: &NetIndex) -> Option<&[f64]> {
        let p = self.window.linear(idx)?;
        match self.flags[p] {
            PointFlag::Absent => None,
            _ => Some(&self.coords[p * self.dim..(p + 1) * self.dim]),
        }
    }

    /// The point at `idx` only if it is regular.
    pub fn regular_point(&self, idx: &NetIndex) -> Option<&[f64]> {
        let p = self.window.linear(idx)?;
        match self.flags[p] {
            PointFlag::Regular => Some(&self.coords[p * self.dim..(p + 1) * self.dim]),
            _ => None,
        }
    }

    pub fn flag(&self, idx: &NetIndex) -> Option<PointFlag> {
        self.window.linear(idx).map(|p| self.flags[p])
    }

    pub fn flags(&self) -> &[PointFlag] {
        &self.flags
    }

    pub fn raw_coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn set_flag(&mut self, idx: &NetIndex, flag: PointFlag) {
        if let Some(p) = self.window.linear(idx) {
            self.flags[p] = flag;
        }
    }

    /// Overwrite a point (marks it regular).
    pub fn set_point(&mut self, idx: &NetIndex, x: &[f64]) -> Result<()> {
        let p = self
            .window
            .linear(idx)
            .ok_or_else(|| Error::Range(format!("{idx} outside window")))?;
        self.coords[p * self.dim..(p + 1) * self.dim].copy_from_slice(x);
        self.flags[p] = PointFlag::Regular;
        Ok(())
    }

    pub fn present_count(&self) -> usize {
        self.flags.iter().filter(|f| **f != PointFlag::Absent).count()
    }

    /// Largest |x_k| over present points.
    pub fn scale(&self) -> f64 {
        self.flags
            .iter()
            .enumerate()
            .filter(|(_, f)| **f != PointFlag::Absent)
            .flat_map(|(p, _)| self.coords[p * self.dim..(p + 1) * self.dim].iter())
            .fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Flag present points having some |x_k| ≤ rel·scale as degenerate.
    pub fn flag_degenerate(&mut self, rel: f64) {
        let tol = rel * self.scale();
        for p in 0..self.flags.len() {
            if self.flags[p] == PointFlag::Absent {
                continue;
            }
            let x = &self.coords[p * self.dim..(p + 1) * self.dim];
            self.flags[p] = if x.iter().any(|v| v.abs() <= tol) {
                PointFlag::Degenerate
            } else {
                PointFlag::Regular
            };
        }
    }

    /// The sub-net ℤ^N + ½δ; points of other parities become absent.
    pub fn sublattice(&self, delta: &[u8]) -> DiscreteNet {
        let mut out = self.clone();
        for (p, idx) in self.window.indices().enumerate() {
            if idx.parity() != delta {
                out.flags[p] = PointFlag::Absent;
            }
        }
        out
    }

    /// The 2^{N−1} vertices x(n+½σ), σ_axis = +1, of the facet dual to [n, n+e_axis].
    pub fn dual_facet(&self, base: &NetIndex, axis: usize) -> Result<Vec<Vec<f64>>> {
        if axis >= self.dim || base.dim() != self.dim {
            return Err(Error::Range(format!("axis {axis} / index {base}")));
        }
        sigmas(self.dim)
            .into_iter()
            .filter(|s| s[axis] == 1)
            .map(|s| {
                let idx = base.half_step(&s);
                if !self.window.contains(&idx) {
                    return Err(Error::Range(format!("{idx} outside window")));
                }
                self.point(&idx)
                    .map(|x| x.to_vec())
                    .ok_or_else(|| Error::Absent(format!("{idx}")))
            })
            .collect()
    }

    /// All elementary quadrilaterals in the (j,k) coordinate directions, over every
    /// sublattice; cells with an absent corner are skipped.
    pub fn elementary_quads(&self, j: usize, k: usize) -> Vec<Quad> {
        let mut out = Vec::new();
        if j == k || j >= self.dim || k >= self.dim {
            return out;
        }
        for idx in self.window.indices() {
            let c = [
                idx.clone(),
                idx.shifted(j, 2),
                idx.shifted(j, 2).shifted(k, 2),
                idx.shifted(k, 2),
            ];
            let pts: Option<Vec<Vec<f64>>> =
                c.iter().map(|i| self.point(i).map(|x| x.to_vec())).collect();
            if let Some(p) = pts {
                let [a, b, cc, d]: [Vec<f64>; 4] = p.try_into().unwrap();
                out.push(Quad {
                    base: idx,
                    corners: [a, b, cc, d],
                });
            }
        }
        out
    }

    /// Perturb every present coordinate by `amp`·(uniform in [−1,1])·scale.
    pub fn perturbed(&self, amp: f64, seed: u64) -> DiscreteNet {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let s = self.scale();
        let mut out = self.clone();
        for p in 0..out.flags.len() {
            if out.flags[p] == PointFlag::Absent {
                continue;
            }
            for v in &mut out.coords[p * self.dim..(p + 1) * self.dim] {
                *v += amp * s * rng.gen_range(-1.0..=1.0);
            }
        }
        out
    }
}
