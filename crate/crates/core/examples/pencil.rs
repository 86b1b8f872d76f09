//! Net diagonally related to a hyperbolic pencil of circles.

use confocal::lattice::NetIndex;
use confocal::param::{generate, Kind};
use confocal::verify::check_circle_relations;
use confocal::Result;

pub fn run_example() -> Result<()> {
    let g = generate(&Kind::fig_pencil(), None)?;
    for r in check_circle_relations(&g.net, &g.family, &g.useqs, &g.model, 1e-9)? {
        println!("{}", r.line());
    }
    // with c₁ = ¼, c₂ = −¼ the y-coordinate vanishes on n₁ = 0 and n₂ = 0
    for q in [[0, 3], [-5, 0]] {
        println!("x{:?} = {:?}", q, g.net.point(&NetIndex(q.to_vec())).unwrap());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
