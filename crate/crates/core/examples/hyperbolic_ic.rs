//! Hyperbolic IC-type net: diagonals tangent to a fixed hyperbola, chosen by
//! quarter period or by an explicit step.

use confocal::param::{generate, Kind, Model, Step};
use confocal::verify::{check_incircles, check_tangency};
use confocal::Result;

pub fn run_example() -> Result<()> {
    for step in [Step::QuarterPeriod { m: 3.0 }, Step::Value { delta: 0.25 }] {
        let kind = Kind::HyperbolicIc {
            a: 2.0,
            b: 1.0,
            k: 0.9,
            step,
            c1: 0.0,
            c2: 0.0,
        };
        let g = generate(&kind, None)?;
        let Model::HyperbolicIc(p) = &g.model else { unreachable!() };
        let conic = p.tangent_conic();
        println!("{step:?}: δ = {:.6}, â₀ = {:.6}, ĉ₀ = {:.6}", g.info["delta"], conic.a0, conic.b0);
        println!("  {}", check_tangency(&g.net, &conic, 1e-9).line());
        let (pitot, centre) = check_incircles(&g.net, p.affine_map(), 1e-9);
        println!("  {}\n  {}", pitot.line(), centre.line());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
