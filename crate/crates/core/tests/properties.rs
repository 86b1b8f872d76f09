use confocal::construct::polar_step;
use confocal::lattice::{site_key, site_value};
use confocal::param::{generate, Kind};
use confocal::specfun::{discrete_sqrt, jacobi_sn_cn_dn, q_gamma};
use confocal::verify::{check_epd, check_orthogonality, check_polarity};
use confocal::{ConfocalFamily, Hyperplane, NetIndex, Window};
use proptest::prelude::*;

/// Strictly decreasing semiaxes with gaps of at least 0.05.
fn semiaxes(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.05f64..3.0, n).prop_map(|gaps| {
        let mut a = Vec::with_capacity(gaps.len());
        let mut acc = 0.0;
        for g in gaps.iter().rev() {
            acc += g;
            a.push(acc);
        }
        a.reverse();
        a
    })
}

/// Interlaced coordinates for `a`, each strictly inside its interval.
fn coords(a: &[f64], t: &[f64]) -> Vec<f64> {
    (0..a.len())
        .map(|i| {
            let lo = -a[i];
            let hi = a.get(i + 1).map_or(lo + 5.0, |an| -an);
            lo + (hi - lo) * t[i]
        })
        .collect()
}

proptest! {
    #[test]
    fn jacobi_identities(s in -30.0f64..30.0, k in 0.0f64..0.999) {
        let (sn, cn, dn) = jacobi_sn_cn_dn(s, k).unwrap();
        prop_assert!((sn * sn + cn * cn - 1.0).abs() < 1e-12);
        prop_assert!((dn * dn + k * k * sn * sn - 1.0).abs() < 1e-12);
        // odd/even symmetry
        let (sm, cm, dm) = jacobi_sn_cn_dn(-s, k).unwrap();
        prop_assert!((sm + sn).abs() < 1e-12 && (cm - cn).abs() < 1e-12 && (dm - dn).abs() < 1e-12);
    }

    #[test]
    fn discrete_sqrt_recurrence(u in 0.25f64..50.0) {
        let r = discrete_sqrt(u).unwrap() * discrete_sqrt(u + 0.5).unwrap();
        prop_assert!((r - u).abs() <= 1e-11 * u.max(1.0));
    }

    #[test]
    fn q_gamma_recurrence(q in prop::sample::select(vec![0.3, 0.5, 0.9, 1.1, 2.0]), z in 0.25f64..8.0) {
        let lhs = q_gamma(q, z + 1.0).unwrap();
        let rhs = (1.0 - q.powf(z)) / (1.0 - q) * q_gamma(q, z).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs());
    }

    #[test]
    fn family_roundtrip(a in semiaxes(3), t in prop::collection::vec(0.02f64..0.98, 3)) {
        let fam = ConfocalFamily::new(a.clone()).unwrap();
        let u = coords(&a, &t);
        prop_assert!(fam.is_interlaced(&u));
        let x = fam.point_from_coords(&u).unwrap();
        for ui in &u {
            prop_assert!(fam.quadric_residual(*ui, &x).unwrap().abs() < 1e-9);
        }
        let back = fam.coords_from_point(&x).unwrap();
        prop_assert!(fam.is_interlaced(back.values()));
        for (b, v) in back.values().iter().zip(&u) {
            prop_assert!((b - v).abs() <= 1e-9 * a[0].max(1.0));
        }
    }

    #[test]
    fn pole_polar_involution(a in semiaxes(3), x in prop::collection::vec(0.1f64..3.0, 3), lambda in 0.0f64..4.0) {
        let fam = ConfocalFamily::new(a).unwrap();
        let plane = fam.polar_hyperplane(lambda, &x).unwrap();
        let y = fam.pole_of_hyperplane(lambda, &plane).unwrap();
        for (p, q) in y.iter().zip(&x) {
            prop_assert!((p - q).abs() < 1e-12 * q.abs().max(1.0));
        }
        let z = [1.3, -0.2, 0.7];
        let d = fam.polarity_form(lambda, &x, &z) - fam.polarity_form(lambda, &z, &x);
        prop_assert!(d.abs() < 1e-14);
    }

    #[test]
    fn poles_of_a_plane_are_collinear(c in prop::collection::vec(-2.0f64..2.0, 2), l1 in -0.5f64..3.0, l2 in -0.5f64..3.0) {
        prop_assume!(c[0].abs() + c[1].abs() > 1e-3 && (l1 - l2).abs() > 1e-3);
        let fam = ConfocalFamily::new(vec![2.0, 1.0]).unwrap();
        let plane = Hyperplane::new(c.clone()).unwrap();
        let (p, q) = (fam.pole_of_hyperplane(l1, &plane).unwrap(), fam.pole_of_hyperplane(l2, &plane).unwrap());
        // the difference is (l1 − l2)·c: normal to the line
        let d = [p[0] - q[0], p[1] - q[1]];
        prop_assert!((d[0] * c[1] - d[1] * c[0]).abs() < 1e-12 * (1.0 + d[0].abs() + d[1].abs()));
    }

    #[test]
    fn polar_step_lies_on_all_polars(a in semiaxes(2), t in prop::collection::vec(0.05f64..0.95, 2), s in prop::collection::vec(0.05f64..0.95, 2)) {
        let fam = ConfocalFamily::new(a.clone()).unwrap();
        let x = fam.point_from_coords(&coords(&a, &t)).unwrap();
        let u = coords(&a, &s);
        match polar_step(&fam, &x, &u) {
            Ok(y) => {
                for ui in &u {
                    let r = fam.polarity_form(*ui, &x, &y) - 1.0;
                    prop_assert!(r.abs() < 1e-8, "residual {r}");
                }
            }
            Err(e) => prop_assert!(matches!(e, confocal::Error::Degenerate(_)), "{e}"),
        }
    }

    #[test]
    fn window_linear_roundtrip(lo in prop::collection::vec(-5i64..5, 3), ext in prop::collection::vec(1i64..5, 3), p in 0usize..1000) {
        let hi: Vec<i64> = lo.iter().zip(&ext).map(|(l, e)| l + e - 1).collect();
        let w = Window::new(lo, hi).unwrap();
        let p = p % w.len();
        let idx = w.index_at(p);
        prop_assert!(w.contains(&idx));
        prop_assert_eq!(w.linear(&idx), Some(p));
    }

    #[test]
    fn shifts_and_sites(q in prop::collection::vec(-50i64..50, 2), axis in 0usize..2, dq in -4i64..4) {
        let n = NetIndex(q.clone());
        prop_assert_eq!(n.shifted(axis, dq).shifted(axis, -dq), n.clone());
        // the two sites adjacent to a vertex sit ½ apart around it, in n units
        let v = q[axis] as f64 / 2.0;
        let up = site_value(site_key(q[axis], 1));
        let down = site_value(site_key(q[axis], -1));
        prop_assert!((up - down - 0.5).abs() < 1e-15);
        prop_assert!((up - v - 0.25).abs() < 1e-15 && (v - down - 0.25).abs() < 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_trig_nets_pass_core_checks(
        b in 0.3f64..1.5,
        gap in 0.2f64..2.0,
        m in prop::sample::select(vec![8u32, 12, 16]),
        c1 in -0.4f64..0.4,
        c2 in -0.4f64..0.4,
    ) {
        let kind = Kind::TrigHyp { a: b + gap, b, m, delta2: std::f64::consts::TAU / m as f64, c1, c2 };
        let g = generate(&kind, None).unwrap();
        prop_assert!(check_orthogonality(&g.net, 1e-9).passed);
        prop_assert!(check_polarity(&g.net, &g.family, &g.useqs, 1e-9).passed);
        prop_assert!(check_epd(&g.net, &g.useqs, 1e-9).passed);
    }
}
