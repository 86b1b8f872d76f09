//! Net from gamma functions with integer semiaxis data: the parameters are
//! exactly u_i(n + ¼) = n − i/2.

use confocal::param::{generate, Kind, Model};
use confocal::verify::{check_epd, check_polarity};
use confocal::Result;

pub fn run_example() -> Result<()> {
    let g = generate(&Kind::Gamma { alpha: vec![4, 1] }, None)?;
    let Model::Gamma(p) = &g.model else { unreachable!() };
    println!("semiaxes {:?}, window {:?}..{:?}", g.family.semiaxes(), g.net.window().lo(), g.net.window().hi());
    for axis in 0..2 {
        let seq = &g.useqs.axes[axis];
        let worst = (seq.lo_key..seq.hi_key())
            .filter_map(|key| Some((g.useqs.get(axis, key)? - p.u_exact(axis, key)).abs()))
            .fold(0.0f64, f64::max);
        println!("axis {}: {} values, max |u − exact| = {worst:.1e}", axis + 1, seq.values.len());
    }
    println!("{}", check_polarity(&g.net, &g.family, &g.useqs, 1e-10).line());
    println!("{}", check_epd(&g.net, &g.useqs, 1e-9).line());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
