//! Build a net from one seed point by successive polar steps and compare with
//! the closed form; different paths to the same vertex agree.

use confocal::construct::{build_by_polarity, check_path_independence, ConstructionPlan};
use confocal::lattice::{NetIndex, Window};
use confocal::param::{generate, Kind};
use confocal::Result;
use std::f64::consts::TAU;

pub fn run_example() -> Result<()> {
    let kind = Kind::TrigHyp {
        a: 2.0,
        b: 1.0,
        m: 64,
        delta2: TAU / 64.0,
        c1: 0.1,
        c2: 0.3,
    };
    let window = Window::new(vec![0, 0], vec![19, 19])?;
    let g = generate(&kind, Some(window.clone()))?;
    let seed = NetIndex(vec![0, 0]);
    let plan = ConstructionPlan::new(
        g.family.clone(),
        g.useqs.clone(),
        seed.clone(),
        g.net.point(&seed).unwrap().to_vec(),
        window,
    )?;
    let built = build_by_polarity(&plan)?;
    let mut dev = 0.0f64;
    for idx in built.net.indices() {
        if let (Some(x), Some(y)) = (built.net.point(&idx), g.net.point(&idx)) {
            dev = x.iter().zip(y).fold(dev, |m, (a, b)| m.max((a - b).abs()));
        }
    }
    println!(
        "built {} vertices (first-arrival discrepancy {:.1e} over {} re-arrivals); max deviation from closed form {dev:.1e}",
        built.computed, built.max_discrepancy, built.arrivals_compared
    );

    let paths = check_path_independence(&plan, 100, 7)?;
    println!(
        "path independence: {} pairs, longest path {}, max discrepancy {:.1e}",
        paths.trials, paths.longest_path, paths.max_discrepancy
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
