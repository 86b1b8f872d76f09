//! The classical confocal family: coordinates of a point, the point of given
//! coordinates, and polarity.

use confocal::{ConfocalFamily, Result};

pub fn run_example() -> Result<()> {
    let fam = ConfocalFamily::new(vec![2.0, 1.0])?;
    let x = fam.point_from_coords(&[-1.5, -0.5])?;
    println!("x(u = −1.5, v = −0.5) = {x:?}");
    println!("back to coordinates   = {:?}", fam.coords_from_point(&x)?.values());

    let plane = fam.polar_hyperplane(-1.5, &x)?;
    println!("polar line w.r.t. Q(−1.5): {:?}", plane.coeffs());
    println!("x lies on it: residual {:.1e}", plane.residual(&x));

    // poles of one plane w.r.t. the whole family lie on a line normal to it
    let space = ConfocalFamily::new(vec![5.0, 3.0, 1.0])?;
    let plane = confocal::Hyperplane::new(vec![0.3, -0.7, 1.1])?;
    for lambda in [-4.0, -2.0, 0.0, 2.0] {
        println!("pole for λ = {lambda:>4}: {:?}", space.pole_of_hyperplane(lambda, &plane)?);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
