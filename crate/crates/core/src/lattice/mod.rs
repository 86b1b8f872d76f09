//! Half-step lattice bookkeeping.
//!
//! A lattice point n ∈ (½ℤ)^N is stored as the integer vector q = 2n, so the
//! two-point shifts n ± ½σ and n + e_i are integer additions (±1 and +2).
//! Parameter sites live on ½ℤ + ¼. The site between the vertices q and q+1
//! (that is, n + ¼ with n = q/2) is stored under the integer *key* q, with
//! site value key/2 + ¼. Seen from a vertex q, the site towards σ = +1 has
//! key q and the one towards σ = −1 has key q − 1.

mod net;
mod useq;

pub use net::{DiscreteNet, PointFlag, Quad};
pub use useq::{USeq, USequences};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A point of (½ℤ)^N in half-step units (q_i = 2 n_i).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NetIndex(pub Vec<i64>);

impl NetIndex {
    pub fn new(q: Vec<i64>) -> Self {
        Self(q)
    }

    /// Index from lattice coordinates n (which must be multiples of ½).
    pub fn from_n(n: &[f64]) -> Result<Self> {
        n.iter()
            .map(|&v| {
                let q = 2.0 * v;
                if q.fract() != 0.0 || !q.is_finite() {
                    Err(Error::Range(format!("{v} is not a multiple of 1/2")))
                } else {
                    Ok(q as i64)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn q(&self) -> &[i64] {
        &self.0
    }

    /// Lattice coordinate n_i = q_i/2.
    pub fn n(&self, i: usize) -> f64 {
        self.0[i] as f64 * 0.5
    }

    /// Parity pattern δ ∈ {0,1}^N: n lies in ℤ^N + ½δ.
    pub fn parity(&self) -> Vec<u8> {
        self.0.iter().map(|q| q.rem_euclid(2) as u8).collect()
    }

    /// n + (dq/2)·e_axis.
    pub fn shifted(&self, axis: usize, dq: i64) -> Self {
        let mut q = self.0.clone();
        q[axis] += dq;
        Self(q)
    }

    /// n + ½σ for σ ∈ {±1}^N.
    pub fn half_step(&self, sigma: &[i8]) -> Self {
        Self(
            self.0
                .iter()
                .zip(sigma)
                .map(|(q, s)| q + *s as i64)
                .collect(),
        )
    }
}

impl std::fmt::Display for NetIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if q % 2 == 0 {
                write!(f, "{}", q / 2)?;
            } else {
                write!(f, "{}/2", q)?;
            }
        }
        write!(f, ")")
    }
}

/// Key of the parameter site between vertex coordinate `q` and `q + sigma`.
pub fn site_key(q: i64, sigma: i8) -> i64 {
    if sigma > 0 {
        q
    } else {
        q - 1
    }
}

/// Value of the parameter site with the given key: key/2 + ¼.
pub fn site_value(key: i64) -> f64 {
    key as f64 * 0.5 + 0.25
}

/// All σ ∈ {±1}^N, in a fixed order.
pub fn sigmas(dim: usize) -> Vec<Vec<i8>> {
    (0..1usize << dim)
        .map(|m| {
            (0..dim)
                .map(|i| if m >> i & 1 == 1 { 1 } else { -1 })
                .collect()
        })
        .collect()
}

/// Axis-aligned box of half-step indices, bounds inclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() || lo.is_empty() {
            return Err(Error::Range("window bounds of mismatched length".into()));
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::Range(format!("empty window {lo:?}..{hi:?}")));
        }
        Ok(Self { lo, hi })
    }

    pub fn from_ranges(r: &[(i64, i64)]) -> Result<Self> {
        Self::new(r.iter().map(|p| p.0).collect(), r.iter().map(|p| p.1).collect())
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn extent(&self, axis: usize) -> usize {
        (self.hi[axis] - self.lo[axis] + 1) as usize
    }

    pub fn len(&self) -> usize {
        (0..self.dim()).map(|i| self.extent(i)).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, idx: &NetIndex) -> bool {
        idx.dim() == self.dim()
            && idx
                .0
                .iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(q, (l, h))| q >= l && q <= h)
    }

    /// Row-major position (last axis fastest).
    pub fn linear(&self, idx: &NetIndex) -> Option<usize> {
        if !self.contains(idx) {
            return None;
        }
        let mut p = 0usize;
        for i in 0..self.dim() {
            p = p * self.extent(i) + (idx.0[i] - self.lo[i]) as usize;
        }
        Some(p)
    }

    pub fn index_at(&self, mut p: usize) -> NetIndex {
        let mut q = vec![0; self.dim()];
        for i in (0..self.dim()).rev() {
            let e = self.extent(i);
            q[i] = self.lo[i] + (p % e) as i64;
            p /= e;
        }
        NetIndex(q)
    }

    pub fn indices(&self) -> impl Iterator<Item = NetIndex> + '_ {
        (0..self.len()).map(move |p| self.index_at(p))
    }
}
