//! Discrete confocal coordinates in 3-space via Jacobi elliptic functions.

use super::{admissibility, Continuous, Parametrization};
use crate::error::{Error, Result};
use crate::family::ConfocalFamily;
use crate::lattice::{NetIndex, Window};
use crate::specfun::{complete_elliptic_k, jacobi_quarter};
use std::collections::BTreeMap;

const K_LO: f64 = 1e-6;
const K_HI: f64 = 1.0 - 1e-6;
const K_TOL: f64 = 1e-13;

fn modulus_residual(c: f64, m: u32, k: f64) -> f64 {
    let (_, cn, dn) = jacobi_quarter(0.5 / m as f64, k).expect("k in (0,1)");
    k * k * cn * cn - c * dn * dn
}

/// Solve k² cn²(δ/2, k) = C dn²(δ/2, k) with δ = K(k)/m; returns (k, δ).
pub fn solve_modulus_3d(c: f64, m: u32) -> Result<(f64, f64)> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::Domain(format!("ratio C = {c} outside (0, 1)")));
    }
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    let (mut lo, mut hi) = (K_LO, K_HI);
    let (g_lo, g_hi) = (modulus_residual(c, m, lo), modulus_residual(c, m, hi));
    if !(g_lo < 0.0 && g_hi > 0.0) {
        return Err(Error::Solver(format!(
            "no sign change: g({lo}) = {g_lo:.3e}, g({hi}) = {g_hi:.3e}"
        )));
    }
    while hi - lo > K_TOL {
        let mid = 0.5 * (lo + hi);
        if modulus_residual(c, m, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let k = 0.5 * (lo + hi);
    Ok((k, complete_elliptic_k(k)? / m as f64))
}

/// Vertex of reduced valence and the two coinciding neighbour pairs through it.
#[derive(Debug, Clone, PartialEq)]
pub struct UmbilicPair {
    pub vertex: NetIndex,
    /// Two pairs of indices whose points coincide.
    pub pairs: [(NetIndex, NetIndex); 2],
}

/// Ellipsoids (n₃), one-sheeted (n₂) and two-sheeted (n₁) hyperboloids.
#[derive(Debug, Clone, PartialEq)]
pub struct Elliptic3d {
    fam: ConfocalFamily,
    abc: [f64; 3],
    m: [u32; 3],
    k: [f64; 3],
    delta: [f64; 3],
    // [axis][coord]
    amp: [[f64; 3]; 3],
}

impl Elliptic3d {
    pub fn new(a: f64, b: f64, c: f64, m1: u32, m2: u32, m3: u32) -> Result<Self> {
        let fam = ConfocalFamily::with_zero_last(vec![a, b, c])?;
        if m1 == 0 || m2 == 0 || m3 == 0 {
            return admissibility("m₁, m₂, m₃ must be positive");
        }
        let c1 = (a - b) / (a - c);
        let c2 = (b - c) / (a - c);
        let (k1, d1) = solve_modulus_3d(c1, m1)?;
        let (k2, d2) = solve_modulus_3d(c2, m2)?;
        let (k3, d3) = solve_modulus_3d(c1, m3)?;
        let half = |m: u32, k: f64| jacobi_quarter(0.5 / m as f64, k);
        let (_, ch1, dh1) = half(m1, k1)?;
        let (_, ch2, dh2) = half(m2, k2)?;
        let (_, ch3, dh3) = half(m3, k3)?;

        let al1 = ((a - b) * dh1 / ch1).sqrt();
        let be1 = al1 / dh1.sqrt();
        let ga1 = al1 / (k1 * ch1.sqrt());

        let ga2 = ((b - c) * dh2 / ch2).sqrt();
        let al2 = ga2 / (k2 * ch2.sqrt());
        let be2 = ga2 / dh2.sqrt();

        let al3 = ((a - c) * ch3 / dh3).sqrt();
        let be3 = al3 / dh3.sqrt();
        let ga3 = al3 / ch3.sqrt();

        Ok(Self {
            fam,
            abc: [a, b, c],
            m: [m1, m2, m3],
            k: [k1, k2, k3],
            delta: [d1, d2, d3],
            amp: [[al1, be1, ga1], [al2, be2, ga2], [al3, be3, ga3]],
        })
    }

    pub fn moduli(&self) -> [f64; 3] {
        self.k
    }

    pub fn deltas(&self) -> [f64; 3] {
        self.delta
    }

    pub fn m(&self) -> [u32; 3] {
        self.m
    }

    pub fn continuous(&self) -> Continuous {
        let [a, b, c] = self.abc;
        Continuous::Elliptic3d { a, b, c }
    }

    pub fn s_of(&self, q: &[i64]) -> Vec<f64> {
        (0..3).map(|i| self.delta[i] * q[i] as f64 * 0.5).collect()
    }

    /// The discrete umbilics inside the default window, with their coinciding
    /// neighbour pairs: x(εm₁, εm₂, n₃) with ε ∈ {1,3}, and x(n₁, ε*m₂, m₃)
    /// with ε* ∈ {0,2}.
    pub fn umbilics(&self) -> Vec<UmbilicPair> {
        let [m1, m2, m3] = self.m.map(|m| m as i64);
        let w = self.default_window();
        let mut out = Vec::new();
        let pair = |v: &NetIndex, axis: usize| (v.shifted(axis, -2), v.shifted(axis, 2));
        for e1 in [1, 3] {
            for e2 in [1, 3] {
                for q3 in w.lo()[2]..=w.hi()[2] {
                    let v = NetIndex(vec![2 * e1 * m1, 2 * e2 * m2, q3]);
                    out.push(UmbilicPair {
                        pairs: [pair(&v, 0), pair(&v, 1)],
                        vertex: v,
                    });
                }
            }
        }
        for e2 in [0, 2] {
            for q1 in w.lo()[0]..=w.hi()[0] {
                let v = NetIndex(vec![q1, 2 * e2 * m2, 2 * m3]);
                out.push(UmbilicPair {
                    pairs: [pair(&v, 1), pair(&v, 2)],
                    vertex: v,
                });
            }
        }
        out
    }
}

impl Parametrization for Elliptic3d {
    fn family(&self) -> &ConfocalFamily {
        &self.fam
    }

    fn default_window(&self) -> Window {
        let [m1, m2, m3] = self.m.map(|m| m as i64);
        Window::new(vec![0, 0, 1], vec![8 * m1, 8 * m2, 4 * m3 - 1]).expect("nonempty")
    }

    fn factor(&self, axis: usize, coord: usize, q: i64) -> Option<f64> {
        let t = q as f64 / (2.0 * self.m[axis] as f64);
        let (sn, cn, dn) = jacobi_quarter(t, self.k[axis]).expect("solved modulus");
        let amp = self.amp[axis][coord];
        match axis {
            0 => Some(amp * [sn, cn, dn][coord]),
            1 => Some(amp * [dn, cn, sn][coord]),
            _ => {
                if sn == 0.0 {
                    return None;
                }
                Some(amp * [1.0, dn, cn][coord] / sn)
            }
        }
    }

    fn info(&self) -> BTreeMap<String, f64> {
        let mut m = BTreeMap::new();
        for i in 0..3 {
            m.insert(format!("k{}", i + 1), self.k[i]);
            m.insert(format!("delta{}", i + 1), self.delta[i]);
        }
        m
    }
}
