//! Elliptic IC-type net: straight diagonals tangent to a fixed ellipse, and
//! incircles after an affine map.

use confocal::param::{generate, Kind, Model};
use confocal::verify::{check_diagonal_lines, check_incircles, check_tangency, diagonal_lines, Diagonal};
use confocal::Result;

pub fn run_example() -> Result<()> {
    let g = generate(&Kind::fig_ic(), None)?;
    let Model::EllipticIc(p) = &g.model else { unreachable!() };
    let conic = p.tangent_conic();
    println!("tangent ellipse: â₀ = {:.6}, b̂₀ = {:.6}, â₀ − b̂₀ = {:.15}", conic.a0, conic.b0, conic.a0 - conic.b0);

    for dir in [Diagonal::Sum, Diagonal::Difference] {
        println!("{}", check_diagonal_lines(&g.net, dir, 1e-10).line());
        if let Some(l) = diagonal_lines(&g.net, dir).into_iter().max_by_key(|l| l.points) {
            println!("  longest line: {:.6} x + {:.6} y = {:.6} ({} points)", l.a, l.b, l.c, l.points);
        }
    }
    println!("{}", check_tangency(&g.net, &conic, 1e-9).line());
    let (pitot, centre) = check_incircles(&g.net, p.affine_map(), 1e-9);
    println!("{}\n{}", pitot.line(), centre.line());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
