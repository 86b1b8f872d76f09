//! Circle relations of the pencil and concentric nets.
//!
//! Pairs of vertices on a common diagonal step are symmetric with respect to a
//! circle centred on the x-axis: (p − c)·(p̃ − c) = r², with c = (c_x, 0).

use super::{Acc, CheckReport};
use crate::error::{Error, Result};
use crate::family::ConfocalFamily;
use crate::lattice::{DiscreteNet, NetIndex, USequences};
use crate::param::Model;

// (x(n − ½e₂), x(n + ½e₁)): a step along the line η = const
fn same_eta(idx: &NetIndex) -> (NetIndex, NetIndex) {
    (idx.shifted(1, -1), idx.shifted(0, 1))
}

// (x(n + ½e₁), x(n + ½e₂)): a step along the line ξ = const
fn same_xi(idx: &NetIndex) -> (NetIndex, NetIndex) {
    (idx.shifted(0, 1), idx.shifted(1, 1))
}

fn inversion_residual(p: &[f64], q: &[f64], (cx, r): (f64, f64)) -> f64 {
    let lhs = (p[0] - cx) * (q[0] - cx) + p[1] * q[1];
    let dp = (p[0] - cx).hypot(p[1]);
    let dq = (q[0] - cx).hypot(q[1]);
    (lhs - r * r) / (r * r + dp * dq).max(f64::MIN_POSITIVE)
}

fn pair_check(
    net: &DiscreteNet,
    name: &str,
    pair: fn(&NetIndex) -> (NetIndex, NetIndex),
    circle: impl Fn(&NetIndex) -> (f64, f64),
    tol: f64,
) -> CheckReport {
    let mut acc = Acc::new(name);
    for idx in net.indices() {
        let (s, t) = pair(&idx);
        let (Some(p), Some(q)) = (net.point(&s), net.point(&t)) else {
            continue;
        };
        acc.add(inversion_residual(p, q, circle(&idx)), &idx);
    }
    acc.finish(tol)
}

fn half(v: i64) -> f64 {
    v as f64 * 0.5
}

/// All circle relations of a pencil or concentric net.
///
/// Pencil: `pencil-vertical` (ξ-lines are vertical), `pencil-inversion`
/// (steps along ξ-lines are symmetric in the circle of η) and `pencil-incidence` (the circle
/// of η passes through the intersection of the conics Q(u(n₁+¼)) and
/// Q(v(n₂+¼))). Concentric: `concentric-xi` and `concentric-eta`, steps along
/// η-lines (resp. ξ-lines) are symmetric in the circle of ξ (resp. η), centred
/// at the left (resp. right) focus.
pub fn check_circle_relations(
    net: &DiscreteNet,
    fam: &ConfocalFamily,
    useqs: &USequences,
    model: &Model,
    tol: f64,
) -> Result<Vec<CheckReport>> {
    if net.dim() != 2 {
        return Err(Error::Usage("circle relations need a planar net".into()));
    }
    match model {
        Model::Pencil(m) => {
            let mut vert = Acc::new("pencil-vertical");
            let scale = net.scale().max(f64::MIN_POSITIVE);
            for idx in net.indices() {
                let (s, t) = same_xi(&idx);
                if let (Some(p), Some(q)) = (net.point(&s), net.point(&t)) {
                    vert.add((p[0] - q[0]) / scale, &idx);
                }
            }
            let eta = |idx: &NetIndex| half(idx.q()[1] - idx.q()[0]);
            let inv = pair_check(net, "pencil-inversion", same_xi, |i| m.circle(eta(i)), tol);

            let mut inc = Acc::new("pencil-incidence");
            for idx in net.indices() {
                let q = idx.q();
                let (Some(u), Some(v)) = (useqs.get(0, q[0]), useqs.get(1, q[1])) else {
                    continue;
                };
                let Ok(p) = fam.point_from_coords(&[u, v]) else {
                    inc.skip();
                    continue;
                };
                let (c, r) = m.circle(eta(&idx));
                let d2 = (p[0] - c).powi(2) + p[1] * p[1];
                inc.add((d2 - r * r) / (r * r).max(d2).max(f64::MIN_POSITIVE), &idx);
            }
            Ok(vec![vert.finish(tol), inv, inc.finish(tol)])
        }
        Model::Concentric(m) => Ok(vec![
            pair_check(net, "concentric-xi", same_eta, |i| m.xi_circle(half(i.q()[0] + i.q()[1])), tol),
            pair_check(net, "concentric-eta", same_xi, |i| m.eta_circle(half(i.q()[1] - i.q()[0])), tol),
        ]),
        _ => Err(Error::Usage("circle relations need a pencil or concentric net".into())),
    }
}
