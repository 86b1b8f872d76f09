//! Discrete confocal coordinates in 3-space: solved moduli, invariants, and
//! the umbilic vertices where neighbours coincide.

use confocal::param::{generate, solve_modulus_3d, Kind, Model, Parametrization};
use confocal::verify::{applicable_checks, run_check, summary, CheckInput};
use confocal::Result;

pub fn run_example() -> Result<()> {
    let (a, b, c) = (8.0, 4.0, 0.0);
    println!("modulus vs m (continuous limit k² = {}):", (a - b) / (a - c));
    for m in [4, 8, 16, 32, 64] {
        let (k, delta) = solve_modulus_3d((a - b) / (a - c), m)?;
        println!("  m = {m:>2}: k² = {:.12}, δ = {delta:.6}", k * k);
    }

    let g = generate(&Kind::fig_3d(), None)?;
    println!("{} sites; {:?}", g.net.window().len(), g.info);
    let input = CheckInput {
        net: &g.net,
        family: &g.family,
        useqs: &g.useqs,
        model: Some(&g.model),
    };
    let mut reports = Vec::new();
    for name in applicable_checks(Some(&g.model), 3) {
        reports.extend(run_check(name, &input, 1e-9)?);
    }
    print!("{}", summary(&reports));

    let Model::Elliptic3d(p) = &g.model else { unreachable!() };
    let mut worst = 0.0f64;
    let umbilics = p.umbilics();
    for u in &umbilics {
        for (s, t) in &u.pairs {
            let (x, y) = (p.point(s).unwrap(), p.point(t).unwrap());
            worst = x.iter().zip(&y).fold(worst, |m, (a, b)| m.max((a - b).abs()));
        }
    }
    println!("{} umbilic vertices, max neighbour-pair gap {worst:.1e}", umbilics.len());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
