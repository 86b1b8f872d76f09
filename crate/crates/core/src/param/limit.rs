//! Continuum limit: deviation of discrete nets from the smooth system they
//! approximate, at physical points held fixed while the step is refined.

use super::{generate, Kind, Step};
use crate::error::{Error, Result};
use crate::lattice::NetIndex;
use std::f64::consts::TAU;

/// One refinement level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitLevel {
    pub m: u32,
    /// Lattice step δ (δ₁ for the trig kind).
    pub delta: f64,
    /// max |x_discrete − x_continuous| over the fixed points.
    pub deviation: f64,
    pub points: usize,
}

/// Largest componentwise deviation between the net of `kind` and its
/// continuous system at `indices`; also returns the step δ.
pub fn deviation(kind: &Kind, indices: &[NetIndex]) -> Result<(f64, f64)> {
    let g = generate(kind, None)?;
    let cont = g
        .model
        .continuous()
        .ok_or_else(|| Error::Usage(format!("{} has no continuous counterpart", kind.name())))?;
    let mut dev = 0.0f64;
    for idx in indices {
        let x = g
            .net
            .point(idx)
            .ok_or_else(|| Error::Range(format!("no net point at {idx}")))?;
        let s = g.model.s_of(idx).expect("continuous kinds map to s");
        let y = cont
            .point(&s)
            .ok_or_else(|| Error::Domain(format!("continuous system undefined at {idx}")))?;
        dev = x.iter().zip(&y).fold(dev, |m, (a, b)| m.max((a - b).abs()));
    }
    let delta = g
        .info
        .get("delta")
        .or_else(|| g.info.get("delta1"))
        .copied()
        .unwrap_or(f64::NAN);
    Ok((dev, delta))
}

/// Empirical orders log₂(e_m / e_2m) of successive levels.
pub fn orders(levels: &[LimitLevel]) -> Vec<f64> {
    levels
        .windows(2)
        .map(|w| (w[0].deviation / w[1].deviation).log2())
        .collect()
}

fn sweep(
    ms: &[u32],
    divisor: u32,
    kind: impl Fn(u32) -> Kind,
    indices: impl Fn(i64) -> Vec<NetIndex>,
) -> Result<Vec<LimitLevel>> {
    if let Some(m) = ms.iter().find(|m| **m == 0 || *m % divisor != 0) {
        return Err(Error::Usage(format!("m = {m} must be a positive multiple of {divisor}")));
    }
    ms.iter()
        .map(|&m| {
            let idx = indices((m / divisor) as i64);
            let (deviation, delta) = deviation(&kind(m), &idx)?;
            Ok(LimitLevel {
                m,
                delta,
                deviation,
                points: idx.len(),
            })
        })
        .collect()
}

/// Trig/hyperbolic system (a, b) = (2, 1), δ₁ = δ₂ = 2π/m, c = 0, at the
/// physical points s₁ = 2πj/8, s₂ = 2πl/16 with |j|, |l| ≤ 4. m must be a
/// multiple of 8.
pub fn trig_sweep(ms: &[u32]) -> Result<Vec<LimitLevel>> {
    sweep(
        ms,
        8,
        |m| Kind::TrigHyp {
            a: 2.0,
            b: 1.0,
            m,
            delta2: TAU / m as f64,
            c1: 0.0,
            c2: 0.0,
        },
        // s = δ·q/2: q₁ = 2j·(m/8), q₂ = l·(m/8)
        |r| {
            (-4..=4)
                .flat_map(|j| (-4..=4).map(move |l| NetIndex(vec![2 * j * r, l * r])))
                .collect()
        },
    )
}

/// Elliptic IC system (a, b, k) = (2, 1, 0.9), δ = K/m, c = 0, at the
/// physical points s₁ = jK/3 (|j| ≤ 6), s₂ = lK/3 (0 ≤ l ≤ 2). m must be a
/// multiple of 3.
pub fn elliptic_ic_sweep(ms: &[u32]) -> Result<Vec<LimitLevel>> {
    sweep(
        ms,
        3,
        |m| Kind::EllipticIc {
            a: 2.0,
            b: 1.0,
            k: 0.9,
            m: m as f64,
            c1: 0.0,
            c2: 0.0,
        },
        |r| {
            (-6..=6)
                .flat_map(|j| (0..=2).map(move |l| NetIndex(vec![2 * j * r, 2 * l * r])))
                .collect()
        },
    )
}

/// Hyperbolic IC system (a, b, k) = (2, 1, 0.9), δ = K/m, c = 0, at the
/// physical points s₁ = jK/3 (|j| ≤ 6), s₂ = lK/3 (1 ≤ l ≤ 3). m must be a
/// multiple of 3.
pub fn hyperbolic_ic_sweep(ms: &[u32]) -> Result<Vec<LimitLevel>> {
    sweep(
        ms,
        3,
        |m| Kind::HyperbolicIc {
            a: 2.0,
            b: 1.0,
            k: 0.9,
            step: Step::QuarterPeriod { m: m as f64 },
            c1: 0.0,
            c2: 0.0,
        },
        |r| {
            (-6..=6)
                .flat_map(|j| (1..=3).map(move |l| NetIndex(vec![2 * j * r, 2 * l * r])))
                .collect()
        },
    )
}
