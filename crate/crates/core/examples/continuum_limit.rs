//! Refining the step: discrete nets converge to the smooth confocal systems.

use confocal::param::limit::{elliptic_ic_sweep, hyperbolic_ic_sweep, orders, trig_sweep};
use confocal::Result;

pub fn run_example() -> Result<()> {
    let runs = [
        ("trig-hyp", trig_sweep(&[8, 16, 32, 64])?),
        ("elliptic-ic", elliptic_ic_sweep(&[3, 6, 12, 24])?),
        ("hyperbolic-ic", hyperbolic_ic_sweep(&[3, 6, 12, 24])?),
    ];
    for (name, levels) in &runs {
        println!("{name}:");
        for l in levels {
            println!("  m = {:>3}  δ = {:.5}  max deviation {:.3e}", l.m, l.delta, l.deviation);
        }
        let o: Vec<String> = orders(levels).iter().map(|o| format!("{o:.3}")).collect();
        println!("  orders: {}", o.join(", "));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
