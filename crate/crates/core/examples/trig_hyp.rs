//! Trigonometric/hyperbolic discrete confocal coordinates (ellipses and
//! hyperbolae), with the focal degeneracy on the symmetric net.

use confocal::lattice::NetIndex;
use confocal::param::{generate, Kind};
use confocal::verify::{applicable_checks, run_check, summary, CheckInput};
use confocal::Result;

pub fn run_example() -> Result<()> {
    let g = generate(&Kind::fig_trig(), None)?;
    println!("{} net on {} sites, info {:?}", g.kind.name(), g.net.window().len(), g.info);

    let input = CheckInput {
        net: &g.net,
        family: &g.family,
        useqs: &g.useqs,
        model: Some(&g.model),
    };
    let mut reports = Vec::new();
    for name in applicable_checks(Some(&g.model), 2) {
        reports.extend(run_check(name, &input, 1e-9)?);
    }
    print!("{}", summary(&reports));

    // the symmetric net folds at the focal segment: x(0, ½) = x(0, −½)
    let up = g.net.point(&NetIndex(vec![0, 1])).unwrap();
    let down = g.net.point(&NetIndex(vec![0, -1])).unwrap();
    println!("x(0, ½) = {up:?}\nx(0,−½) = {down:?}");
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
