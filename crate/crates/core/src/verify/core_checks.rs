//! Checks shared by all kinds: orthogonality, planarity, polarity,
//! factorization, the discrete EPD system, and continuous orthogonality.

use super::{dot, norm, sub, Acc, CheckReport};
use crate::family::ConfocalFamily;
use crate::lattice::{sigmas, site_key, DiscreteNet, NetIndex, USequences};

// Edges shorter than this (relative to the net scale) carry no direction.
const SHORT_EDGE: f64 = 1e-10;

/// Every edge [n, n+e_i] is orthogonal to its dual facet.
///
/// Residuals: |⟨E, D⟩|/(|E||D|) for each dual edge D of the facet, and the
/// spread of the facet vertices along Ê relative to the facet diameter.
pub fn check_orthogonality(net: &DiscreteNet, tol: f64) -> CheckReport {
    let mut acc = Acc::new("orthogonality");
    let n = net.dim();
    let short = SHORT_EDGE * net.scale();
    let facet_sigmas: Vec<Vec<Vec<i8>>> = (0..n)
        .map(|i| sigmas(n).into_iter().filter(|s| s[i] == 1).collect())
        .collect();
    for idx in net.indices() {
        for i in 0..n {
            let end = idx.shifted(i, 2);
            let (Some(p0), Some(p1)) = (net.point(&idx), net.point(&end)) else {
                continue;
            };
            let e = sub(p1, p0);
            let le = norm(&e);
            if le <= short {
                acc.skip();
                continue;
            }
            let verts: Option<Vec<(&Vec<i8>, &[f64])>> = facet_sigmas[i]
                .iter()
                .map(|s| net.point(&idx.half_step(s)).map(|p| (s, p)))
                .collect();
            let Some(verts) = verts else {
                acc.skip();
                continue;
            };
            // dual edges: facet vertices differing in exactly one σ_j
            let mut diam = 0.0f64;
            for (a, (sa, pa)) in verts.iter().enumerate() {
                for (sb, pb) in verts.iter().skip(a + 1) {
                    let d = sub(pb, pa);
                    let ld = norm(&d);
                    diam = diam.max(ld);
                    let differ = sa.iter().zip(sb.iter()).filter(|(x, y)| x != y).count();
                    if differ != 1 {
                        continue;
                    }
                    if ld <= short {
                        acc.skip();
                        continue;
                    }
                    acc.add(dot(&e, &d) / (le * ld), &idx);
                }
            }
            if verts.len() > 2 && diam > short {
                let proj: Vec<f64> = verts.iter().map(|(_, p)| dot(p, &e) / le).collect();
                let lo = proj.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = proj.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                acc.add((hi - lo) / diam, &idx);
            }
        }
    }
    acc.finish(tol)
}

fn gram_volume(vs: &[Vec<f64>]) -> f64 {
    // modified Gram–Schmidt: volume = Π |r_ii| (no square root of a determinant)
    let mut q: Vec<Vec<f64>> = Vec::with_capacity(vs.len());
    let mut vol = 1.0;
    for v in vs {
        let mut w = v.clone();
        for e in &q {
            let c = dot(&w, e);
            w.iter_mut().zip(e).for_each(|(wi, ei)| *wi -= c * ei);
        }
        let r = norm(&w);
        vol *= r;
        if r == 0.0 {
            return 0.0;
        }
        q.push(w.iter().map(|x| x / r).collect());
    }
    vol
}

/// Elementary quadrilaterals are planar: normalized volume of the spanned tetrahedron.
///
/// Vacuous (zero relations) in dimension 2.
pub fn check_planarity(net: &DiscreteNet, tol: f64) -> CheckReport {
    let mut acc = Acc::new("planarity");
    let n = net.dim();
    if n < 3 {
        return acc.finish(tol);
    }
    let short = SHORT_EDGE * net.scale();
    for j in 0..n {
        for k in j + 1..n {
            for quad in net.elementary_quads(j, k) {
                let [p0, p1, p2, p3] = &quad.corners;
                let vs = vec![sub(p1, p0), sub(p2, p0), sub(p3, p0)];
                let norms: f64 = vs.iter().map(|v| norm(v)).product();
                if vs.iter().any(|v| norm(v) <= short) {
                    acc.skip();
                    continue;
                }
                acc.add(gram_volume(&vs) / norms, &quad.base);
            }
        }
    }
    acc.finish(tol)
}

/// Σ_k x_k(n) x_k(n+½σ)/(a_k + u_i(n_i+¼σ_i)) = 1 for every dual pair and every i.
///
/// Pairs touching a flagged (degenerate) vertex and sites without u are skipped.
pub fn check_polarity(
    net: &DiscreteNet,
    fam: &ConfocalFamily,
    useqs: &USequences,
    tol: f64,
) -> CheckReport {
    let mut acc = Acc::new("polarity");
    let n = net.dim();
    if fam.dim() != n || useqs.dim() != n {
        acc.add(f64::INFINITY, &NetIndex(vec![0; n]));
        return acc.finish(tol);
    }
    let a = fam.semiaxes();
    let sig = sigmas(n);
    for idx in net.indices() {
        let Some(x) = net.regular_point(&idx) else {
            continue;
        };
        for s in &sig {
            let t = idx.half_step(s);
            // each unordered pair once
            if t < idx {
                continue;
            }
            let Some(y) = net.regular_point(&t) else {
                if net.point(&t).is_some() {
                    acc.skip();
                }
                continue;
            };
            for i in 0..n {
                let Some(u) = useqs.get(i, site_key(idx.q()[i], s[i])) else {
                    acc.skip();
                    continue;
                };
                if a.iter().any(|ak| ak + u == 0.0) {
                    acc.skip();
                    continue;
                }
                acc.add(fam.polarity_form(u, x, y) - 1.0, &idx);
            }
        }
    }
    acc.finish(tol)
}

/// x_k(n+e_i)/x_k(n) does not depend on the other indices.
///
/// Within each group of edges sharing q_i, every edge is cross-multiplied with
/// the group's best-conditioned reference: |a·d − b·c| / ((|a|+|b|)(|c|+|d|)).
pub fn check_factorization(net: &DiscreteNet, tol: f64) -> CheckReport {
    let mut acc = Acc::new("factorization");
    let n = net.dim();
    let w = net.window().clone();
    for i in 0..n {
        for k in 0..n {
            // edges (x_k(n), x_k(n+e_i)) grouped by n_i
            let mut groups: Vec<Vec<(NetIndex, f64, f64)>> = vec![Vec::new(); w.extent(i)];
            for idx in net.indices() {
                let (Some(p), Some(q)) = (net.regular_point(&idx), net.regular_point(&idx.shifted(i, 2)))
                else {
                    continue;
                };
                let (a, b) = (p[k], q[k]);
                groups[(idx.q()[i] - w.lo()[i]) as usize].push((idx, a, b));
            }
            for edges in groups {
                let Some(r) = edges
                    .iter()
                    .max_by(|p, q| (p.1.abs() + p.2.abs()).total_cmp(&(q.1.abs() + q.2.abs())))
                else {
                    continue;
                };
                let (_, a, b) = r.clone();
                for (idx, c, d) in &edges {
                    let den = (a.abs() + b.abs()) * (c.abs() + d.abs());
                    if den == 0.0 {
                        acc.skip();
                        continue;
                    }
                    acc.add((a * d - b * c) / den, idx);
                }
            }
        }
    }
    acc.finish(tol)
}

/// Discrete Euler–Poisson–Darboux system with γ = ½:
/// Δ_iΔ_j x_k = (Δ½u_i Δ_j x_k − Δ½u_j Δ_i x_k)/(u_i − u_j).
///
/// Δ_i is the unit step n → n+e_i, u_i = u_i(n_i+¼), Δ½u_i = u_i(n_i+¾) − u_i(n_i+¼).
/// The residual is divided by max|x| over the cell times
/// (1 + (|Δ½u_i| + |Δ½u_j|)/|u_i − u_j|).
pub fn check_epd(net: &DiscreteNet, useqs: &USequences, tol: f64) -> CheckReport {
    let mut acc = Acc::new("epd");
    let n = net.dim();
    for idx in net.indices() {
        for i in 0..n {
            for j in i + 1..n {
                let ni = idx.shifted(i, 2);
                let nj = idx.shifted(j, 2);
                let nij = ni.shifted(j, 2);
                let (Some(x0), Some(xi), Some(xj), Some(xij)) =
                    (net.point(&idx), net.point(&ni), net.point(&nj), net.point(&nij))
                else {
                    continue;
                };
                let (qi, qj) = (idx.q()[i], idx.q()[j]);
                let us = (
                    useqs.get(i, qi),
                    useqs.get(i, qi + 1),
                    useqs.get(j, qj),
                    useqs.get(j, qj + 1),
                );
                let (Some(ui), Some(ui2), Some(uj), Some(uj2)) = us else {
                    acc.skip();
                    continue;
                };
                let du = ui - uj;
                if du == 0.0 {
                    acc.skip();
                    continue;
                }
                let (hi, hj) = (ui2 - ui, uj2 - uj);
                let size = [x0, xi, xj, xij]
                    .iter()
                    .flat_map(|p| p.iter())
                    .fold(0.0f64, |m, v| m.max(v.abs()));
                let scale = size.max(f64::MIN_POSITIVE) * (1.0 + (hi.abs() + hj.abs()) / du.abs());
                for k in 0..n {
                    let dij = xij[k] - xi[k] - xj[k] + x0[k];
                    let di = xi[k] - x0[k];
                    let dj = xj[k] - x0[k];
                    acc.add((dij - (hi * dj - hj * di) / du) / scale, &idx);
                }
            }
        }
    }
    acc.finish(tol)
}

/// Orthogonality of a sampled smooth parametrization: central-difference
/// tangents at interior sites have vanishing normalized inner products.
pub fn check_continuous_orthogonality(net: &DiscreteNet, tol: f64) -> CheckReport {
    let mut acc = Acc::new("continuous-orthogonality");
    let n = net.dim();
    for idx in net.indices() {
        let tangents: Option<Vec<Vec<f64>>> = (0..n)
            .map(|i| Some(sub(net.point(&idx.shifted(i, 1))?, net.point(&idx.shifted(i, -1))?)))
            .collect();
        let Some(t) = tangents else {
            continue;
        };
        for i in 0..n {
            for j in i + 1..n {
                let den = norm(&t[i]) * norm(&t[j]);
                if den == 0.0 {
                    acc.skip();
                    continue;
                }
                acc.add(dot(&t[i], &t[j]) / den, &idx);
            }
        }
    }
    acc.finish(tol)
}
