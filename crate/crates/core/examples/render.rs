//! Write a JSON document, an SVG drawing and an OBJ mesh to a temporary directory.

use confocal::io::obj::{default_slices, render_obj};
use confocal::io::svg::{render_svg, SvgOptions};
use confocal::io::NetDocument;
use confocal::param::{generate, Kind};
use confocal::Result;

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir().join("confocal-render-example");
    std::fs::create_dir_all(&dir)?;

    let g = generate(&Kind::fig_ic(), None)?;
    let doc = NetDocument::from_generated(&g);
    doc.write(dir.join("ic.json"))?;
    let back = NetDocument::read(dir.join("ic.json"))?;
    assert_eq!(back.to_json()?, doc.to_json()?);
    let svg = render_svg(&back.net()?, &back.family()?, &back.u_sequences, &SvgOptions::default())?;
    std::fs::write(dir.join("ic.svg"), &svg)?;

    let g3 = generate(&Kind::fig_3d(), None)?;
    let obj = render_obj(&g3.net, &default_slices(&g3.net))?;
    std::fs::write(dir.join("3d.obj"), &obj)?;

    println!("wrote {} ({} bytes svg, {} faces obj)", dir.display(), svg.len(), obj.lines().filter(|l| l.starts_with("f ")).count());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
