//! Net diagonally related to two families of concentric circles at the foci.

use confocal::param::{generate, Kind, Model};
use confocal::verify::check_circle_relations;
use confocal::Result;

pub fn run_example() -> Result<()> {
    for l in [1, 3, 6] {
        let kind = Kind::Concentric {
            a: 2.0,
            b: 1.0,
            l,
            c1: 0.0,
            c2: 0.0,
        };
        let g = generate(&kind, None)?;
        let Model::Concentric(p) = &g.model else { unreachable!() };
        println!("2l+1 = {}: δ = {:.6}", 2 * l + 1, p.delta());
        for r in check_circle_relations(&g.net, &g.family, &g.useqs, &g.model, 1e-9)? {
            println!("  {}", r.line());
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
