//! Geometric construction of a net through intersections of polar hyperplanes.
//!
//! Given x(n) and the parameters u_i on the sites between n and n+½σ, the
//! neighbour x(n+½σ) is the common point of the N hyperplanes polar to x(n)
//! with respect to Q(u_1), …, Q(u_N).

use crate::error::{Error, Result};
use crate::family::ConfocalFamily;
use crate::lattice::{sigmas, DiscreteNet, NetIndex, PointFlag, USequences, Window};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

/// Steps whose linear system has a larger condition estimate are refused.
pub const MAX_CONDITION: f64 = 1e12;

/// Components at or below this (relative to |x|∞) count as vanishing.
const VANISH_REL: f64 = 1e-12;

/// Solve M y = 1 with M_ik = x_k/(a_k+u_i): the intersection of the polar hyperplanes.
pub fn polar_step(fam: &ConfocalFamily, x: &[f64], u: &[f64]) -> Result<Vec<f64>> {
    let n = fam.dim();
    if x.len() != n || u.len() != n {
        return Err(Error::Domain(format!("expected {n} components")));
    }
    let xs = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if x.iter().any(|v| v.abs() <= VANISH_REL * xs) || xs == 0.0 {
        return Err(Error::DegeneratePoint(format!("{x:?} has a vanishing component")));
    }
    let a = fam.semiaxes();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let d = a[k] + u[i];
            if d == 0.0 || !d.is_finite() {
                return Err(Error::Domain(format!("u_{} = {} is a pole", i + 1, u[i])));
            }
            m[i][k] = x[k] / d;
        }
    }
    solve(m, vec![1.0; n])
}

/// Partial-pivot elimination with an ∞-norm condition estimate.
fn solve(m: Vec<Vec<f64>>, rhs: Vec<f64>) -> Result<Vec<f64>> {
    let n = rhs.len();
    let norm: f64 = m
        .iter()
        .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    // augmented with identity for the inverse norm
    let mut aug: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.push(rhs[i]);
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&p, &q| aug[p][col].abs().total_cmp(&aug[q][col].abs()))
            .unwrap();
        if aug[piv][col] == 0.0 {
            return Err(Error::Degenerate("singular polar system".into()));
        }
        aug.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = aug[r][col] / aug[col][col];
                if f != 0.0 {
                    for c in col..aug[r].len() {
                        aug[r][c] -= f * aug[col][c];
                    }
                }
            }
        }
    }
    let inv_norm = (0..n)
        .map(|r| (0..n).map(|c| (aug[r][n + 1 + c] / aug[r][r]).abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let cond = norm * inv_norm;
    if !(cond <= MAX_CONDITION) {
        return Err(Error::Degenerate(format!(
            "polar hyperplanes nearly parallel (condition ≈ {cond:.2e})"
        )));
    }
    let y: Vec<f64> = (0..n).map(|r| aug[r][n] / aug[r][r]).collect();
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::Degenerate("non-finite intersection".into()));
    }
    Ok(y)
}

/// Inputs of the construction: family, parameters, seed and window.
#[derive(Debug, Clone)]
pub struct ConstructionPlan {
    pub family: ConfocalFamily,
    pub useqs: USequences,
    pub seed_index: NetIndex,
    pub seed_point: Vec<f64>,
    pub window: Window,
}

impl ConstructionPlan {
    pub fn new(
        family: ConfocalFamily,
        useqs: USequences,
        seed_index: NetIndex,
        seed_point: Vec<f64>,
        window: Window,
    ) -> Result<Self> {
        let n = family.dim();
        if useqs.dim() != n || seed_point.len() != n || window.dim() != n {
            return Err(Error::Domain("plan dimensions disagree".into()));
        }
        if !window.contains(&seed_index) {
            return Err(Error::Range(format!("seed {seed_index} outside window")));
        }
        if seed_point.iter().any(|v| *v == 0.0 || !v.is_finite()) {
            return Err(Error::DegeneratePoint(format!(
                "seed {seed_point:?} must have finite nonzero components"
            )));
        }
        Ok(Self {
            family,
            useqs,
            seed_index,
            seed_point,
            window,
        })
    }

    /// The parameters u_i between `idx` and `idx + ½σ`, if all lie strictly
    /// inside their interlacing intervals.
    fn step_params(&self, idx: &NetIndex, sigma: &[i8]) -> Option<Vec<f64>> {
        (0..self.family.dim())
            .map(|i| {
                let u = self.useqs.between(i, idx.q()[i], sigma[i])?;
                self.family.in_interval(i, u).then_some(u)
            })
            .collect()
    }
}

/// Result of [`build_by_polarity`].
#[derive(Debug, Clone)]
pub struct Construction {
    pub net: DiscreteNet,
    /// Vertices computed (seed included).
    pub computed: usize,
    /// Largest relative disagreement between first and later arrivals.
    pub max_discrepancy: f64,
    /// Later arrivals compared against the first.
    pub arrivals_compared: usize,
    /// Steps refused as numerically degenerate.
    pub degenerate_steps: usize,
    /// Steps not taken because some u_i left its interlacing interval.
    pub boundary_steps: usize,
}

fn vanishes(y: &[f64]) -> bool {
    let s = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    y.iter().any(|v| v.abs() <= VANISH_REL * s)
}

fn rel_diff(a: &[f64], b: &[f64]) -> f64 {
    let s = a.iter().chain(b).fold(1e-300f64, |m, v| m.max(v.abs()));
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs())) / s
}

/// Breadth-first propagation from the seed over V ∪ V*.
pub fn build_by_polarity(plan: &ConstructionPlan) -> Result<Construction> {
    let n = plan.family.dim();
    let mut net = DiscreteNet::from_fn(plan.window.clone(), n, |_| None);
    net.set_point(&plan.seed_index, &plan.seed_point)?;
    let mut out = Construction {
        net,
        computed: 1,
        max_discrepancy: 0.0,
        arrivals_compared: 0,
        degenerate_steps: 0,
        boundary_steps: 0,
    };
    let mut queue = VecDeque::from([plan.seed_index.clone()]);
    let sig = sigmas(n);
    while let Some(idx) = queue.pop_front() {
        let x = out.net.point(&idx).expect("queued points are stored").to_vec();
        for s in &sig {
            let t = idx.half_step(s);
            if !plan.window.contains(&t) {
                continue;
            }
            let Some(u) = plan.step_params(&idx, s) else {
                out.boundary_steps += 1;
                continue;
            };
            let y = match polar_step(&plan.family, &x, &u) {
                Ok(y) => y,
                Err(_) => {
                    out.degenerate_steps += 1;
                    continue;
                }
            };
            if let Some(prev) = out.net.point(&t) {
                out.max_discrepancy = out.max_discrepancy.max(rel_diff(prev, &y));
                out.arrivals_compared += 1;
                continue;
            }
            out.net.set_point(&t, &y)?;
            out.computed += 1;
            if vanishes(&y) {
                out.net.set_flag(&t, PointFlag::Degenerate);
            } else {
                queue.push_back(t);
            }
        }
    }
    Ok(out)
}

/// Result of [`check_path_independence`].
#[derive(Debug, Clone, PartialEq)]
pub struct PathReport {
    /// Path pairs actually compared.
    pub trials: usize,
    pub max_discrepancy: f64,
    /// Start and end of the worst pair.
    pub worst: Option<(NetIndex, NetIndex)>,
    pub longest_path: usize,
}

/// Walk from `start` along `steps` (each a σ vector); `None` if the walk
/// leaves the window or meets a degenerate step.
fn walk(plan: &ConstructionPlan, start: &NetIndex, x0: &[f64], steps: &[Vec<i8>]) -> Option<Vec<f64>> {
    let mut idx = start.clone();
    let mut x = x0.to_vec();
    for s in steps {
        let u = plan.step_params(&idx, s)?;
        x = polar_step(&plan.family, &x, &u).ok()?;
        idx = idx.half_step(s);
        if !plan.window.contains(&idx) {
            return None;
        }
    }
    Some(x)
}

fn random_path(d: &[i64], rng: &mut ChaCha8Rng) -> Vec<Vec<i8>> {
    let l = d.iter().map(|v| v.abs()).max().unwrap_or(0) as usize;
    let per_axis: Vec<Vec<i8>> = d
        .iter()
        .map(|&di| {
            let plus = (l as i64 + di) / 2;
            let mut s: Vec<i8> = (0..l).map(|j| if (j as i64) < plus { 1 } else { -1 }).collect();
            s.shuffle(rng);
            s
        })
        .collect();
    (0..l)
        .map(|j| per_axis.iter().map(|s| s[j]).collect())
        .collect()
}

/// Compare the results of two random lattice paths between random vertex pairs.
///
/// Start points come from a polarity build of the plan; each trial retries
/// (up to 50 times) until both paths stay inside the window and away from
/// degenerate steps.
pub fn check_path_independence(plan: &ConstructionPlan, trials: usize, seed: u64) -> Result<PathReport> {
    let built = build_by_polarity(plan)?;
    let reach: Vec<NetIndex> = built
        .net
        .indices()
        .filter(|i| built.net.flag(i) == Some(PointFlag::Regular))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = PathReport {
        trials: 0,
        max_discrepancy: 0.0,
        worst: None,
        longest_path: 0,
    };
    if reach.is_empty() {
        return Ok(rep);
    }
    for _ in 0..trials {
        for _attempt in 0..50 {
            let s = &reach[rng.gen_range(0..reach.len())];
            let t = &reach[rng.gen_range(0..reach.len())];
            let d: Vec<i64> = t.q().iter().zip(s.q()).map(|(a, b)| a - b).collect();
            let p1 = random_path(&d, &mut rng);
            let p2 = random_path(&d, &mut rng);
            let x0 = built.net.point(s).unwrap();
            let (Some(y1), Some(y2)) = (walk(plan, s, x0, &p1), walk(plan, s, x0, &p2)) else {
                continue;
            };
            let disc = rel_diff(&y1, &y2);
            rep.trials += 1;
            rep.longest_path = rep.longest_path.max(p1.len());
            if disc > rep.max_discrepancy || rep.worst.is_none() {
                rep.max_discrepancy = rep.max_discrepancy.max(disc);
                rep.worst = Some((s.clone(), t.clone()));
            }
            break;
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_and_involution() {
        let f = ConfocalFamily::new(vec![2.0, 1.0]).unwrap();
        let x = f.point_from_coords(&[-1.5, -0.5]).unwrap();
        let y = polar_step(&f, &x, &[-1.5, -0.5]).unwrap();
        assert!(rel_diff(&x, &y) < 1e-12);
        let x = [0.7, 0.4];
        let u = [-1.3, 0.2];
        let y = polar_step(&f, &x, &u).unwrap();
        let z = polar_step(&f, &y, &u).unwrap();
        assert!(rel_diff(&x, &z) < 1e-11);
        assert!(polar_step(&f, &[1.0, 0.0], &u).is_err());
        assert!(polar_step(&f, &x, &[-2.0, 0.0]).is_err());
    }

    #[test]
    fn path_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_path(&[3, -1, 1], &mut rng);
        assert_eq!(p.len(), 3);
        for (ax, want) in [3i64, -1, 1].iter().enumerate() {
            assert_eq!(p.iter().map(|s| s[ax] as i64).sum::<i64>(), *want);
        }
        assert!(random_path(&[0, 0], &mut rng).is_empty());
    }
}
