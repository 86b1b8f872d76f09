//! Geometry of IC-type nets: straight diagonals, their tangent conic, and
//! incircles after the affine map.

use super::{norm, sub, Acc, CheckReport};
use crate::lattice::{DiscreteNet, NetIndex};
use crate::param::Conic;
use std::collections::BTreeMap;

/// Diagonal classes of a planar net.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diagonal {
    /// n₁ + n₂ = ξ.
    Sum,
    /// n₂ − n₁ = η.
    Difference,
}

impl Diagonal {
    fn key(self, idx: &NetIndex) -> i64 {
        let q = idx.q();
        match self {
            Diagonal::Sum => q[0] + q[1],
            Diagonal::Difference => q[1] - q[0],
        }
    }
}

/// Principal-component line fit of one diagonal class.
#[derive(Debug, Clone, PartialEq)]
pub struct LineFit {
    /// 2·ξ or 2·η of the class.
    pub key: i64,
    /// Unit normal (A, B) and offset C of A x + B y = C.
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub points: usize,
    /// Largest distance of a class point from the line, over the class diameter.
    pub residual: f64,
    pub first: NetIndex,
}

fn fit(key: i64, pts: &[(NetIndex, [f64; 2])]) -> Option<LineFit> {
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let cx = pts.iter().map(|p| p.1[0]).sum::<f64>() / m;
    let cy = pts.iter().map(|p| p.1[1]).sum::<f64>() / m;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (_, p) in pts {
        let (dx, dy) = (p[0] - cx, p[1] - cy);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    // direction of largest spread: angle θ with tan 2θ = 2sxy/(sxx−syy)
    let theta = 0.5 * (2.0 * sxy).atan2(sxx - syy);
    let (dy, dx) = theta.sin_cos();
    let (a, b) = (-dy, dx);
    let c = a * cx + b * cy;
    let mut diam = 0.0f64;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            diam = diam.max(norm(&sub(&p.1, &q.1)));
        }
    }
    if diam == 0.0 {
        return None;
    }
    let dev = pts
        .iter()
        .map(|(_, p)| (a * p[0] + b * p[1] - c).abs())
        .fold(0.0f64, f64::max);
    Some(LineFit {
        key,
        a,
        b,
        c,
        points: pts.len(),
        residual: dev / diam,
        first: pts[0].0.clone(),
    })
}

/// Line fits of all diagonal classes with at least two distinct points.
pub fn diagonal_lines(net: &DiscreteNet, dir: Diagonal) -> Vec<LineFit> {
    let mut classes: BTreeMap<i64, Vec<(NetIndex, [f64; 2])>> = BTreeMap::new();
    if net.dim() != 2 {
        return Vec::new();
    }
    for idx in net.indices() {
        if let Some(p) = net.point(&idx) {
            classes.entry(dir.key(&idx)).or_default().push((idx, [p[0], p[1]]));
        }
    }
    classes.iter().filter_map(|(k, pts)| fit(*k, pts)).collect()
}

/// Points on each diagonal class lie on a straight line (classes with ≥ 3 points).
pub fn check_diagonal_lines(net: &DiscreteNet, dir: Diagonal, tol: f64) -> CheckReport {
    let name = match dir {
        Diagonal::Sum => "diagonals-sum",
        Diagonal::Difference => "diagonals-difference",
    };
    let mut acc = Acc::new(name);
    if net.dim() != 2 {
        acc.add(f64::INFINITY, &NetIndex(vec![]));
        return acc.finish(tol);
    }
    for f in diagonal_lines(net, dir) {
        if f.points < 3 {
            acc.skip();
            continue;
        }
        acc.add(f.residual, &f.first);
    }
    acc.finish(tol)
}

/// Every fitted diagonal line touches the conic: a0·A² ± b0·B² = C².
pub fn check_tangency(net: &DiscreteNet, conic: &Conic, tol: f64) -> CheckReport {
    let mut acc = Acc::new("tangency");
    for dir in [Diagonal::Sum, Diagonal::Difference] {
        for f in diagonal_lines(net, dir) {
            acc.add(conic.tangency_residual(f.a, f.b, f.c), &f.first);
        }
    }
    acc.finish(tol)
}

fn line_through(p: &[f64; 2], q: &[f64; 2]) -> Option<(f64, f64, f64)> {
    let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
    let l = dx.hypot(dy);
    if l == 0.0 {
        return None;
    }
    let (a, b) = (-dy / l, dx / l);
    Some((a, b, a * p[0] + b * p[1]))
}

fn intersect(p: [f64; 2], d: [f64; 2], q: [f64; 2], e: [f64; 2]) -> Option<[f64; 2]> {
    let det = d[0] * (-e[1]) - d[1] * (-e[0]);
    if det.abs() < 1e-300 {
        return None;
    }
    let rx = q[0] - p[0];
    let ry = q[1] - p[1];
    let t = (rx * (-e[1]) - ry * (-e[0])) / det;
    Some([p[0] + t * d[0], p[1] + t * d[1]])
}

fn unit(v: [f64; 2]) -> [f64; 2] {
    let l = v[0].hypot(v[1]);
    [v[0] / l, v[1] / l]
}

fn convex(ps: &[[f64; 2]; 4]) -> bool {
    let mut sign = 0.0;
    for i in 0..4 {
        let (a, b, c) = (ps[i], ps[(i + 1) % 4], ps[(i + 2) % 4]);
        let cr = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        if cr == 0.0 {
            return false;
        }
        if sign == 0.0 {
            sign = cr.signum();
        } else if cr.signum() != sign {
            return false;
        }
    }
    true
}

/// After (x, y) ↦ (αx, βy), the quadrilateral of the diagonal net around every
/// vertex n — corners x(n+½e₁), x(n+½e₂), x(n−½e₁), x(n−½e₂) — has an incircle.
///
/// Returns two reports:
/// * `incircles-pitot`: |a + c − b − d| / perimeter over the side lengths;
/// * `incircles-center`: distance between the bisector-intersection centre and
///   the unmapped point x(n), and the spread of distances from x(n) to the four
///   side lines (relative to the perimeter).
pub fn check_incircles(net: &DiscreteNet, affine: (f64, f64), tol: f64) -> (CheckReport, CheckReport) {
    let mut pitot = Acc::new("incircles-pitot");
    let mut centre = Acc::new("incircles-center");
    if net.dim() != 2 {
        let bad = NetIndex(vec![]);
        pitot.add(f64::INFINITY, &bad);
        centre.add(f64::INFINITY, &bad);
        return (pitot.finish(tol), centre.finish(tol));
    }
    let (al, be) = affine;
    let map = |p: &[f64]| [al * p[0], be * p[1]];
    for idx in net.indices() {
        let Some(x) = net.point(&idx) else { continue };
        let nb = [
            idx.shifted(0, 1),
            idx.shifted(1, 1),
            idx.shifted(0, -1),
            idx.shifted(1, -1),
        ];
        let corners: Option<Vec<[f64; 2]>> = nb.iter().map(|i| net.point(i).map(map)).collect();
        let Some(c) = corners else { continue };
        let ps: [[f64; 2]; 4] = [c[0], c[1], c[2], c[3]];
        if !convex(&ps) {
            pitot.skip();
            centre.skip();
            continue;
        }
        let side = |i: usize| norm(&sub(&ps[(i + 1) % 4], &ps[i]));
        let s: Vec<f64> = (0..4).map(side).collect();
        let per: f64 = s.iter().sum();
        pitot.add((s[0] + s[2] - s[1] - s[3]) / per, &idx);

        // internal bisectors; near-straight corners use the normal of u − v,
        // and the adjacent pair with the best-conditioned intersection wins
        let mid = [
            ps.iter().map(|p| p[0]).sum::<f64>() / 4.0,
            ps.iter().map(|p| p[1]).sum::<f64>() / 4.0,
        ];
        let bis = |i: usize| {
            let p = ps[i];
            let u = unit([ps[(i + 1) % 4][0] - p[0], ps[(i + 1) % 4][1] - p[1]]);
            let v = unit([ps[(i + 3) % 4][0] - p[0], ps[(i + 3) % 4][1] - p[1]]);
            let s = [u[0] + v[0], u[1] + v[1]];
            let d = [u[0] - v[0], u[1] - v[1]];
            if s[0].hypot(s[1]) >= d[0].hypot(d[1]) {
                unit(s)
            } else {
                let n = unit([-d[1], d[0]]);
                let inward = (mid[0] - p[0]) * n[0] + (mid[1] - p[1]) * n[1];
                if inward < 0.0 {
                    [-n[0], -n[1]]
                } else {
                    n
                }
            }
        };
        let b: Vec<[f64; 2]> = (0..4).map(bis).collect();
        let best = (0..4)
            .max_by(|&i, &j| {
                let cond = |i: usize| (b[i][0] * b[(i + 1) % 4][1] - b[i][1] * b[(i + 1) % 4][0]).abs();
                cond(i).total_cmp(&cond(j))
            })
            .unwrap_or(0);
        let Some(o) = intersect(ps[best], b[best], ps[(best + 1) % 4], b[(best + 1) % 4]) else {
            centre.skip();
            continue;
        };
        let x0 = [x[0], x[1]];
        let mut r = norm(&sub(&o, &x0)) / per;
        let dists: Option<Vec<f64>> = (0..4)
            .map(|i| line_through(&ps[i], &ps[(i + 1) % 4]).map(|(a, b, c)| (a * x0[0] + b * x0[1] - c).abs()))
            .collect();
        match dists {
            Some(d) => {
                let lo = d.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = d.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                r = r.max((hi - lo) / per);
            }
            None => r = f64::INFINITY,
        }
        centre.add(r, &idx);
    }
    (pitot.finish(tol), centre.finish(tol))
}
