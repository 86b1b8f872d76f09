//! Elliptic, gamma and q-gamma functions underlying the parametrizations.

use confocal::specfun::{complete_elliptic_k, discrete_sqrt, jacobi_sn_cn_dn, log_gamma, q_gamma};
use confocal::Result;

pub fn run_example() -> Result<()> {
    for k in [0.0, 0.5, 0.9, 0.99] {
        let kk = complete_elliptic_k(k)?;
        let (sn, cn, dn) = jacobi_sn_cn_dn(kk, k)?;
        println!("k = {k:<4}  K = {kk:.15}  sn/cn/dn(K) = ({sn:.3}, {cn:.1e}, {dn:.6})");
    }

    println!("ln Γ(7.25)       = {:.15}", log_gamma(7.25)?);
    for u in [0.5, 1.0, 3.7] {
        let (s, t) = (discrete_sqrt(u)?, discrete_sqrt(u + 0.5)?);
        println!("sqr({u}) = {s:.12}   sqr(u)·sqr(u+½) − u = {:.1e}", s * t - u);
    }

    // q → 1 recovers the ordinary gamma function
    for q in [0.99, 0.999, 0.9999] {
        println!("Γ_q(2.5), q = {q:<6} = {:.10}", q_gamma(q, 2.5)?);
    }
    println!("Γ(2.5)                = {:.10}", log_gamma(2.5)?.exp());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
