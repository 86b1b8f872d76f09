//! Special functions and the classical family against independent
//! references: quadrature, product formulas and closed forms.

use approx::assert_relative_eq;
use confocal::specfun::{
    complete_elliptic_k, cos_turns, discrete_sqrt, jacobi_sn_cn_dn, log_gamma, q_gamma, sin_turns,
};
use confocal::ConfocalFamily;
use std::f64::consts::{FRAC_PI_2, PI};

/// Trapezoidal rule on the periodic integrand: exponentially convergent.
fn k_by_quadrature(k: f64) -> f64 {
    let n = 4000;
    let h = FRAC_PI_2 / n as f64;
    (0..=n)
        .map(|j| {
            let t = j as f64 * h;
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            w / (1.0 - k * k * t.sin().powi(2)).sqrt()
        })
        .sum::<f64>()
        * h
}

/// Γ_q(z) for 0 < q < 1 from its infinite product.
fn q_gamma_product(q: f64, z: f64) -> f64 {
    let mut p = 1.0;
    for j in 0..4000 {
        let qj = q.powi(j);
        p *= (1.0 - qj * q) / (1.0 - qj * q.powf(z));
    }
    p * (1.0 - q).powf(1.0 - z)
}

const GAMMA_QUARTER: f64 = 3.625_609_908_221_908;

#[test]
fn complete_integral_matches_quadrature() {
    for (k, frozen) in [(std::f64::consts::FRAC_1_SQRT_2, 1.854_074_677_301_372), (0.9, 2.280_549_138_422_770)] {
        let kk = complete_elliptic_k(k).unwrap();
        assert_relative_eq!(kk, k_by_quadrature(k), max_relative = 1e-13);
        assert_relative_eq!(kk, frozen, max_relative = 1e-14);
    }
    assert_relative_eq!(complete_elliptic_k(0.0).unwrap(), FRAC_PI_2, max_relative = 1e-15);
}

#[test]
fn jacobi_special_values() {
    let k: f64 = 0.9;
    let kp = (1.0 - k * k).sqrt();
    let kk = complete_elliptic_k(k).unwrap();
    let (sn, cn, dn) = jacobi_sn_cn_dn(kk, k).unwrap();
    assert_relative_eq!(sn, 1.0, epsilon = 1e-14);
    assert!(cn.abs() < 1e-14);
    assert_relative_eq!(dn, kp, epsilon = 1e-14);
    assert_relative_eq!(dn, 0.435_889_894_354_067_4, epsilon = 1e-14);

    // sn(K/2) = 1/√(1+k')
    let (sn, _, dn) = jacobi_sn_cn_dn(kk / 2.0, k).unwrap();
    assert_relative_eq!(sn, 1.0 / (1.0 + kp).sqrt(), epsilon = 1e-14);
    assert_relative_eq!(dn, kp.sqrt(), epsilon = 1e-14);

    // k = 0 degenerates to the circular functions
    let (sn, cn, dn) = jacobi_sn_cn_dn(0.7, 0.0).unwrap();
    assert_relative_eq!(sn, 0.7f64.sin(), epsilon = 1e-15);
    assert_relative_eq!(cn, 0.7f64.cos(), epsilon = 1e-15);
    assert_eq!(dn, 1.0);
}

#[test]
fn log_gamma_by_recursion() {
    // Γ(7.25) = Γ(¼)·¼·(5/4)·…·(25/4)
    let g: f64 = (0..7).map(|j| 0.25 + j as f64).product::<f64>() * GAMMA_QUARTER;
    assert_relative_eq!(log_gamma(7.25).unwrap(), g.ln(), max_relative = 1e-14);
    assert_relative_eq!(log_gamma(7.25).unwrap(), 7.052_185_450_738_540, max_relative = 1e-13);
    assert_relative_eq!(log_gamma(0.5).unwrap(), 0.5 * PI.ln(), max_relative = 1e-14);
}

#[test]
fn discrete_sqrt_closed_forms() {
    assert_relative_eq!(discrete_sqrt(1.0).unwrap(), PI.sqrt() / 2.0, max_relative = 1e-14);
    assert_relative_eq!(discrete_sqrt(0.5).unwrap(), 1.0 / PI.sqrt(), max_relative = 1e-14);
    // asymptotically √u
    let u = 1.0e4;
    assert_relative_eq!(discrete_sqrt(u).unwrap(), u.sqrt(), max_relative = 1e-4);
}

#[test]
fn q_gamma_against_product() {
    for (q, z) in [(0.5, 2.5), (0.9, 0.75), (0.3, 4.2)] {
        assert_relative_eq!(q_gamma(q, z).unwrap(), q_gamma_product(q, z), max_relative = 1e-12);
    }
    // Γ_q(z) = q^{(z−1)(z−2)/2} Γ_{1/q}(z)
    let (q, z) = (2.0f64, 2.5);
    let expect = q.powf((z - 1.0) * (z - 2.0) / 2.0) * q_gamma_product(1.0 / q, z);
    assert_relative_eq!(q_gamma(q, z).unwrap(), expect, max_relative = 1e-12);
}

#[test]
fn q_gamma_classical_limit() {
    // Richardson on the O(1−q) error: 2Γ_{q²} − Γ_q style with h = 1 − q
    let gamma = 1.329_340_388_179_137; // Γ(5/2) = 3√π/4
    assert_relative_eq!(gamma, 0.75 * PI.sqrt(), max_relative = 1e-15);
    let g = |h: f64| q_gamma(1.0 - h, 2.5).unwrap();
    let (e1, e2) = ((g(1e-3) - gamma).abs(), (g(5e-4) - gamma).abs());
    assert!(e2 < 0.6 * e1, "first order in 1 − q: {e1:e} → {e2:e}");
    let extrapolated = 2.0 * g(5e-4) - g(1e-3);
    assert_relative_eq!(extrapolated, gamma, max_relative = 1e-6);
}

#[test]
fn turn_functions_exact_at_quarters() {
    assert_eq!(sin_turns(0.5), 0.0);
    assert_eq!(cos_turns(0.25), 0.0);
    assert_eq!(sin_turns(0.25), 1.0);
    assert_eq!(cos_turns(-1.0), 1.0);
}

#[test]
fn planar_family_point() {
    let fam = ConfocalFamily::new(vec![2.0, 1.0]).unwrap();
    let x = fam.point_from_coords(&[-1.5, -0.5]).unwrap();
    assert_relative_eq!(x[0], 0.75f64.sqrt(), max_relative = 1e-15);
    assert_relative_eq!(x[1], 0.5, max_relative = 1e-15);
    let u = fam.coords_from_point(&x).unwrap();
    assert_relative_eq!(u.values()[0], -1.5, epsilon = 1e-14);
    assert_relative_eq!(u.values()[1], -0.5, epsilon = 1e-14);
    let plane = fam.polar_hyperplane(-1.5, &x).unwrap();
    assert_relative_eq!(plane.coeffs()[0], 1.732_050_807_568_877, max_relative = 1e-15);
    assert_relative_eq!(plane.coeffs()[1], -1.0, max_relative = 1e-15);
    assert!(plane.residual(&x).abs() < 1e-15);
}

#[test]
fn focal_points_on_degenerate_family() {
    // u_1 → −a_2 squeezes the ellipse onto the focal segment |x₁| ≤ √(a₁−a₂)
    let fam = ConfocalFamily::new(vec![5.0, 3.0, 1.0]).unwrap();
    let x = fam.point_from_coords(&[-4.0, -3.0 + 1e-12, 0.5]).unwrap();
    assert!(x[1].abs() < 1e-5);
    assert!(fam.quadric_residual(-4.0, &x).unwrap().abs() < 1e-12);
}
