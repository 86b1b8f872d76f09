//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always print; exits nonzero
//! if any criterion fails.

use confocal::construct::{build_by_polarity, check_path_independence, ConstructionPlan};
use confocal::lattice::{NetIndex, Window};
use confocal::param::limit::{elliptic_ic_sweep, orders, trig_sweep, LimitLevel};
use confocal::param::{generate, solve_modulus_3d, Generated, Kind, Model, Parametrization};
use confocal::specfun::{complete_elliptic_k, discrete_sqrt, jacobi_sn_cn_dn, q_gamma};
use confocal::verify::{
    check_circle_relations, check_diagonal_lines, check_epd, check_incircles, check_orthogonality,
    check_polarity, check_tangency, Diagonal,
};
use confocal::{ConfocalFamily, Hyperplane};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;
use std::time::Instant;

/// Tolerances, as stated by the criteria.
mod tol {
    pub const JACOBI_IDENTITY: f64 = 1e-12;
    pub const DISCRETE_SQRT: f64 = 1e-11;
    pub const Q_GAMMA_RECURRENCE: f64 = 1e-10;
    pub const SPECFUN_SECONDS: f64 = 1.0;
    pub const ROUNDTRIP: f64 = 1e-9;
    pub const POLE_LINE: f64 = 1e-12;
    pub const ORTHOGONALITY: f64 = 1e-9;
    pub const NOISE: f64 = 1e-3;
    pub const POLARITY: f64 = 1e-10;
    pub const EPD: f64 = 1e-9;
    pub const CONSTRUCT_CLOSED_FORM: f64 = 1e-8;
    pub const PATH_INDEPENDENCE: f64 = 1e-9;
    pub const DIAGONALS: f64 = 1e-10;
    pub const TANGENCY: f64 = 1e-9;
    pub const CONIC_CONSTANT: f64 = 1e-12;
    pub const INCIRCLE_SPREAD: f64 = 1e-9;
    pub const INCIRCLE_CENTER: f64 = 1e-8;
    pub const VERTICAL_LINES: f64 = 1e-10;
    pub const CIRCLES: f64 = 1e-9;
    pub const BOUNDARY: f64 = 1e-12;
    pub const GAMMA_U: f64 = 1e-11;
    pub const MODULUS_RESIDUAL: f64 = 1e-12;
    pub const FOCAL_FOLD: f64 = 1e-12;
    pub const UMBILIC: f64 = 1e-10;
    pub const ORDER: f64 = 1.9;
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn all_kinds() -> Vec<Generated> {
    Kind::figure_presets()
        .iter()
        .map(|k| generate(k, None).expect("figure preset generates"))
        .collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

fn c1_special_functions() -> Outcome {
    let t = Instant::now();
    let mut jac = 0.0f64;
    for k in [0.1, 0.5, 0.9, 0.99] {
        for j in 0..10_000 {
            let s = -20.0 + 40.0 * j as f64 / 9_999.0;
            let (sn, cn, dn) = jacobi_sn_cn_dn(s, k).unwrap();
            jac = jac.max((sn * sn + cn * cn - 1.0).abs()).max((dn * dn + k * k * sn * sn - 1.0).abs());
        }
    }
    let mut sq = 0.0f64;
    for j in 0..=2000 {
        let u = 0.25 + 19.75 * j as f64 / 2000.0;
        let scale = u.abs().max(1.0);
        sq = sq.max((discrete_sqrt(u).unwrap() * discrete_sqrt(u + 0.5).unwrap() - u).abs() / scale);
        // −u and −u−½ hit poles of Γ at half-integers
        if (2.0 * u).fract().abs() > 1e-9 {
            let r = discrete_sqrt(-u).unwrap() * discrete_sqrt(-u - 0.5).unwrap();
            sq = sq.max((r - (-u - 0.5)).abs() / scale);
        }
    }
    let mut qg = 0.0f64;
    for q in [0.5, 0.9, 1.1, 2.0] {
        for j in 0..=310 {
            let z = 0.25 + 7.75 * j as f64 / 310.0;
            let (g0, g1) = (q_gamma(q, z).unwrap(), q_gamma(q, z + 1.0).unwrap());
            let rhs = (1.0 - q.powf(z)) / (1.0 - q) * g0;
            qg = qg.max((g1 - rhs).abs() / g1.abs());
        }
    }
    let secs = t.elapsed().as_secs_f64();
    outcome(
        jac <= tol::JACOBI_IDENTITY
            && sq <= tol::DISCRETE_SQRT
            && qg <= tol::Q_GAMMA_RECURRENCE
            && secs < tol::SPECFUN_SECONDS,
        format!("jacobi {jac:.1e}, discrete sqrt {sq:.1e}, q-gamma {qg:.1e}, {secs:.2}s"),
    )
}

fn c2_classical() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut rt = 0.0f64;
    for n in [2usize, 3] {
        for _ in 0..1000 {
            let mut a: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..10.0)).collect();
            a.sort_by(|x, y| y.total_cmp(x));
            if a.windows(2).any(|w| w[0] - w[1] < 1e-3) {
                continue;
            }
            let fam = ConfocalFamily::new(a.clone()).unwrap();
            let u: Vec<f64> = (0..n)
                .map(|i| {
                    let lo = -a[i];
                    let hi = if i + 1 < n { -a[i + 1] } else { -a[n - 1] + 10.0 };
                    lo + (hi - lo) * rng.gen_range(0.02..0.98)
                })
                .collect();
            let x = fam.point_from_coords(&u).unwrap();
            let back = fam.coords_from_point(&x).unwrap();
            let scale = a[0].max(1.0);
            rt = rt.max(max_abs_diff(back.values(), &u) / scale);
            let x2 = fam.point_from_coords(back.values()).unwrap();
            rt = rt.max(max_abs_diff(&x2, &x) / x.iter().fold(1.0f64, |m, v| m.max(v.abs())));
        }
    }
    // poles of a fixed plane w.r.t. Q(λ): on a line along the plane normal
    let mut pole = 0.0f64;
    for _ in 0..200 {
        let fam = ConfocalFamily::new(vec![5.0, 3.0, 1.0]).unwrap();
        let c: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let plane = Hyperplane::new(c.clone()).unwrap();
        let ys: Vec<Vec<f64>> = [-4.0, -2.0, 0.0, 2.5]
            .iter()
            .map(|l| fam.pole_of_hyperplane(*l, &plane).unwrap())
            .collect();
        let cn = c.iter().map(|v| v * v).sum::<f64>().sqrt();
        // tangent vectors of the plane
        let t1 = [c[1], -c[0], 0.0];
        let t2 = [c[2], 0.0, -c[0]];
        for y in &ys[1..] {
            let d: Vec<f64> = y.iter().zip(&ys[0]).map(|(p, q)| p - q).collect();
            let dn = d.iter().map(|v| v * v).sum::<f64>().sqrt();
            let cross = [
                d[1] * c[2] - d[2] * c[1],
                d[2] * c[0] - d[0] * c[2],
                d[0] * c[1] - d[1] * c[0],
            ];
            let cr = cross.iter().map(|v| v * v).sum::<f64>().sqrt() / (dn * cn);
            pole = pole.max(cr);
            for t in [t1, t2] {
                let tn = t.iter().map(|v| v * v).sum::<f64>().sqrt();
                if tn > 0.0 {
                    let dot: f64 = d.iter().zip(t).map(|(p, q)| p * q).sum();
                    pole = pole.max(dot.abs() / (dn * tn));
                }
            }
        }
    }
    outcome(
        rt <= tol::ROUNDTRIP && pole <= tol::POLE_LINE,
        format!("roundtrip {rt:.1e}, pole line {pole:.1e}"),
    )
}

fn per_kind(kinds: &[Generated], f: impl Fn(&Generated) -> f64, limit: f64) -> (bool, String) {
    let mut ok = true;
    let parts: Vec<String> = kinds
        .iter()
        .map(|g| {
            let r = f(g);
            ok &= r <= limit;
            format!("{} {r:.1e}", g.kind.name())
        })
        .collect();
    (ok, parts.join(", "))
}

fn c3_orthogonality(kinds: &[Generated]) -> Outcome {
    let (ok, detail) = per_kind(kinds, |g| check_orthogonality(&g.net, tol::ORTHOGONALITY).max_residual, tol::ORTHOGONALITY);
    let noisy = check_orthogonality(&kinds[0].net.perturbed(tol::NOISE, 3), tol::ORTHOGONALITY);
    outcome(
        ok && !noisy.passed,
        format!("{detail}; noisy control {:.1e} rejected: {}", noisy.max_residual, !noisy.passed),
    )
}

fn c4_polarity(kinds: &[Generated]) -> Outcome {
    let (ok, detail) = per_kind(
        kinds,
        |g| check_polarity(&g.net, &g.family, &g.useqs, tol::POLARITY).max_residual,
        tol::POLARITY,
    );
    outcome(ok, detail)
}

fn c5_epd(kinds: &[Generated]) -> Outcome {
    let (ok, detail) = per_kind(kinds, |g| check_epd(&g.net, &g.useqs, tol::EPD).max_residual, tol::EPD);
    outcome(ok, detail)
}

fn c6_construction() -> Outcome {
    let kind = Kind::TrigHyp {
        a: 2.0,
        b: 1.0,
        m: 64,
        delta2: TAU / 64.0,
        c1: 0.1,
        c2: 0.3,
    };
    let window = Window::new(vec![0, 0], vec![19, 19]).unwrap();
    let g = generate(&kind, Some(window.clone())).unwrap();
    let seed = NetIndex(vec![0, 0]);
    let plan = ConstructionPlan::new(
        g.family.clone(),
        g.useqs.clone(),
        seed.clone(),
        g.net.point(&seed).unwrap().to_vec(),
        window,
    )
    .unwrap();
    let built = build_by_polarity(&plan).unwrap();
    let scale = g.net.scale();
    let mut dev = 0.0f64;
    let mut compared = 0;
    for idx in built.net.indices() {
        if let (Some(x), Some(y)) = (built.net.point(&idx), g.net.point(&idx)) {
            dev = dev.max(max_abs_diff(x, y) / scale);
            compared += 1;
        }
    }
    let paths = check_path_independence(&plan, 100, 11).unwrap();
    outcome(
        dev <= tol::CONSTRUCT_CLOSED_FORM
            && compared == 200
            && paths.trials == 100
            && paths.max_discrepancy <= tol::PATH_INDEPENDENCE,
        format!(
            "closed form {dev:.1e} over {compared} vertices, path independence {:.1e} over {} pairs",
            paths.max_discrepancy, paths.trials
        ),
    )
}

fn c7_ic_geometry() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for kind in [Kind::fig_ic(), Kind::fig_hyp_ic()] {
        let g = generate(&kind, None).unwrap();
        let (conic, affine) = match &g.model {
            Model::EllipticIc(p) => (p.tangent_conic(), p.affine_map()),
            Model::HyperbolicIc(p) => (p.tangent_conic(), p.affine_map()),
            _ => unreachable!(),
        };
        let diag = check_diagonal_lines(&g.net, Diagonal::Sum, tol::DIAGONALS)
            .max_residual
            .max(check_diagonal_lines(&g.net, Diagonal::Difference, tol::DIAGONALS).max_residual);
        let tan = check_tangency(&g.net, &conic, tol::TANGENCY).max_residual;
        // â₀ − b̂₀ = a − b (ellipse), â₀ + ĉ₀ = a − b (hyperbola)
        let constant = (conic.a0 - conic.sign * conic.b0 - 1.0).abs();
        let (pitot, centre) = check_incircles(&g.net, affine, tol::INCIRCLE_SPREAD);
        ok &= diag <= tol::DIAGONALS
            && tan <= tol::TANGENCY
            && constant <= tol::CONIC_CONSTANT
            && pitot.max_residual <= tol::INCIRCLE_SPREAD
            && centre.max_residual <= tol::INCIRCLE_CENTER
            && pitot.count > 0;
        parts.push(format!(
            "{}: diagonals {diag:.1e}, tangency {tan:.1e}, conic constant {constant:.1e}, incircles {:.1e}/{:.1e} ({} quads)",
            g.kind.name(),
            pitot.max_residual,
            centre.max_residual,
            pitot.count
        ));
    }
    outcome(ok, parts.join("; "))
}

fn c8_circles() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let zero_rows = |g: &Generated, rows: &[(usize, i64)]| {
        let mut worst = 0.0f64;
        for idx in g.net.indices() {
            if rows.iter().any(|&(axis, q)| idx.q()[axis] == q) {
                worst = worst.max(g.net.point(&idx).map_or(f64::INFINITY, |p| p[1].abs()));
            }
        }
        worst
    };
    for kind in [Kind::fig_pencil(), Kind::fig_concentric()] {
        let g = generate(&kind, None).unwrap();
        let reports = check_circle_relations(&g.net, &g.family, &g.useqs, &g.model, tol::CIRCLES).unwrap();
        for r in &reports {
            let limit = if r.name == "pencil-vertical" {
                tol::VERTICAL_LINES
            } else {
                tol::CIRCLES
            };
            ok &= r.max_residual <= limit && r.count > 0;
            parts.push(format!("{} {:.1e}", r.name, r.max_residual));
        }
        let rows: Vec<(usize, i64)> = match &g.model {
            Model::Pencil(_) => vec![(0, 0), (1, 0)],
            Model::Concentric(p) => {
                let l = p.l() as i64;
                vec![(0, -(l + 1)), (0, l + 1), (1, l)]
            }
            _ => unreachable!(),
        };
        let y = zero_rows(&g, &rows);
        ok &= y <= tol::BOUNDARY;
        parts.push(format!("{} y=0 rows {y:.1e}", g.kind.name()));
    }
    outcome(ok, parts.join(", "))
}

fn c9_gamma() -> Outcome {
    let alpha = [4i64, 1];
    let g = generate(&Kind::Gamma { alpha: alpha.to_vec() }, None).unwrap();
    let Model::Gamma(p) = &g.model else { unreachable!() };
    // x_k = 0 on n_k = −α_k, and on n_{k−1} = −α_k (k ≥ 2)
    let mut bc = 0.0f64;
    let mut sites = 0;
    for idx in g.net.indices() {
        let q = idx.q();
        let x = g.net.point(&idx).unwrap();
        for k in 0..2 {
            let on_first = q[k] == -2 * alpha[k];
            let on_second = k >= 1 && q[k - 1] == -2 * alpha[k];
            if on_first || on_second {
                bc = bc.max(x[k].abs());
                sites += 1;
            }
        }
    }
    let mut du = 0.0f64;
    for axis in 0..2 {
        let seq = &g.useqs.axes[axis];
        for key in seq.lo_key..seq.hi_key() {
            if let Some(u) = g.useqs.get(axis, key) {
                du = du.max((u - p.u_exact(axis, key)).abs());
            }
        }
    }
    outcome(
        bc <= tol::BOUNDARY && du <= tol::GAMMA_U && sites > 0,
        format!("boundary {bc:.1e} at {sites} sites, u − (n − i/2) {du:.1e}"),
    )
}

fn c10_modulus() -> Outcome {
    let ratio: f64 = (8.0 - 4.0) / (8.0 - 0.0);
    let mut res = 0.0f64;
    let mut ks = Vec::new();
    for m in [4u32, 8, 16, 32, 64] {
        let (k, delta) = solve_modulus_3d(ratio, m).unwrap();
        let kk = complete_elliptic_k(k).unwrap();
        let (_, cn, dn) = jacobi_sn_cn_dn(0.5 * delta, k).unwrap();
        res = res.max((k * k * cn * cn - ratio * dn * dn).abs()).max((delta - kk / m as f64).abs());
        ks.push(k * k);
    }
    let monotone = ks.windows(2).all(|w| w[1] < w[0]) && ks.iter().all(|&k2| k2 > ratio);
    let last = (ks[ks.len() - 1] - ratio).abs();
    outcome(
        res <= tol::MODULUS_RESIDUAL && monotone && last < (ks[0] - ratio).abs() / 100.0,
        format!("residual {res:.1e}, k² {:?} → {ratio}", ks.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>()),
    )
}

fn c11_degeneracies() -> Outcome {
    let g = generate(&Kind::fig_trig(), None).unwrap();
    let fold = max_abs_diff(
        g.net.point(&NetIndex(vec![0, 1])).unwrap(),
        g.net.point(&NetIndex(vec![0, -1])).unwrap(),
    );
    let g3 = generate(&Kind::fig_3d(), None).unwrap();
    let Model::Elliptic3d(p) = &g3.model else { unreachable!() };
    let mut umb = 0.0f64;
    let mut pairs = 0;
    for u in p.umbilics() {
        for (s, t) in &u.pairs {
            umb = umb.max(max_abs_diff(&p.point(s).unwrap(), &p.point(t).unwrap()));
            pairs += 1;
        }
    }
    outcome(
        fold <= tol::FOCAL_FOLD && umb <= tol::UMBILIC && pairs > 0,
        format!("x(0,½) − x(0,−½) {fold:.1e}, umbilic pairs {umb:.1e} over {pairs} pairs"),
    )
}

fn c12_continuum() -> Outcome {
    let describe = |name: &str, lv: &[LimitLevel]| {
        let o = orders(lv);
        let dec = lv.windows(2).all(|w| w[1].deviation < w[0].deviation);
        let ok = dec && lv.len() == 4 && o.iter().all(|&x| x >= tol::ORDER);
        let os: Vec<String> = o.iter().map(|x| format!("{x:.2}")).collect();
        (ok, format!("{name} {:.1e}→{:.1e} orders [{}]", lv[0].deviation, lv[lv.len() - 1].deviation, os.join(", ")))
    };
    let (a, da) = describe("trig", &trig_sweep(&[8, 16, 32, 64]).unwrap());
    let (b, db) = describe("elliptic-ic", &elliptic_ic_sweep(&[3, 6, 12, 24]).unwrap());
    outcome(a && b, format!("{da}; {db}"))
}

fn main() {
    let kinds = all_kinds();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("special functions", Box::new(c1_special_functions)),
        ("classical family", Box::new(c2_classical)),
        ("discrete orthogonality", Box::new(|| c3_orthogonality(&kinds))),
        ("polarity", Box::new(|| c4_polarity(&kinds))),
        ("discrete EPD", Box::new(|| c5_epd(&kinds))),
        ("geometric construction", Box::new(c6_construction)),
        ("IC-net geometry", Box::new(c7_ic_geometry)),
        ("pencil/concentric circles", Box::new(c8_circles)),
        ("gamma kind", Box::new(c9_gamma)),
        ("3D modulus solver", Box::new(c10_modulus)),
        ("umbilic/focal degeneracies", Box::new(c11_degeneracies)),
        ("continuum limit", Box::new(c12_continuum)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<27} {}  {}",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
