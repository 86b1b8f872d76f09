use confocal::io::cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use confocal::io::NetDocument;
use std::path::PathBuf;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("confocal-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn confocal(args: &[&str]) -> i32 {
    run(std::iter::once("confocal").chain(args.iter().copied()))
}

#[test]
fn generate_then_verify() {
    let dir = scratch("generate");
    let net = dir.join("trig.json");
    let net = net.to_str().unwrap();
    assert_eq!(confocal(&["generate", "--kind", "trig-hyp", "-a", "2", "-b", "1", "-m", "8", "--out", net]), EXIT_OK);
    let doc = NetDocument::read(net).unwrap();
    assert_eq!(doc.dim(), 2);
    assert_eq!(doc.points.len(), 153);
    assert!(doc.params.is_some());

    let report = dir.join("report.json");
    assert_eq!(
        confocal(&["verify", net, "--format", "json", "--out", report.to_str().unwrap()]),
        EXIT_OK
    );
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(json.to_string().contains("orthogonality"));
    assert_eq!(confocal(&["verify", net, "--checks", "orthogonality,epd"]), EXIT_OK);
}

#[test]
fn noisy_net_fails_verification() {
    let dir = scratch("noisy");
    let net = dir.join("net.json");
    assert_eq!(confocal(&["generate", "--kind", "trig-hyp", "--out", net.to_str().unwrap()]), EXIT_OK);
    let mut doc = NetDocument::read(&net).unwrap();
    for (j, p) in doc.points.iter_mut().enumerate() {
        if let Some(x) = p.x.as_mut() {
            x[0] += 1e-3 * ((j * 7919 % 13) as f64 - 6.0);
        }
    }
    let noisy = dir.join("noisy.json");
    doc.write(&noisy).unwrap();
    assert_eq!(confocal(&["verify", noisy.to_str().unwrap(), "--checks", "orthogonality"]), EXIT_CHECK_FAILED);
}

#[test]
fn usage_errors() {
    assert_eq!(confocal(&["generate", "--kind", "nonsense"]), EXIT_USAGE);
    assert_eq!(confocal(&["generate", "--kind", "trig-hyp", "-a", "1", "-b", "2"]), EXIT_USAGE);
    assert_eq!(confocal(&["verify", "/nonexistent/net.json"]), EXIT_USAGE);
    let dir = scratch("usage");
    let net = dir.join("net.json");
    assert_eq!(confocal(&["generate", "--kind", "pencil", "--out", net.to_str().unwrap()]), EXIT_OK);
    assert_eq!(confocal(&["verify", net.to_str().unwrap(), "--checks", "bogus"]), EXIT_USAGE);
    assert_eq!(confocal(&["render", net.to_str().unwrap(), "--format", "obj"]), EXIT_USAGE);
}

#[test]
fn construct_and_render() {
    let dir = scratch("construct");
    let net = dir.join("net.json");
    let built = dir.join("built.json");
    assert_eq!(confocal(&["generate", "--kind", "elliptic-ic", "--out", net.to_str().unwrap()]), EXIT_OK);
    assert_eq!(
        confocal(&["construct", "--from", net.to_str().unwrap(), "--trials", "20", "--out", built.to_str().unwrap()]),
        EXIT_OK
    );
    let doc = NetDocument::read(&built).unwrap();
    let c = doc.construction.expect("construction summary");
    assert!(c.computed > 1);
    assert!(c.path_discrepancy < 1e-9);

    let svg = dir.join("net.svg");
    assert_eq!(confocal(&["render", built.to_str().unwrap(), "--out", svg.to_str().unwrap()]), EXIT_OK);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("class=\"sublattice-").count(), 4);

    let net3 = dir.join("net3.json");
    let obj = dir.join("net.obj");
    assert_eq!(confocal(&["generate", "--kind", "elliptic-3d", "--out", net3.to_str().unwrap()]), EXIT_OK);
    assert_eq!(
        confocal(&["render", net3.to_str().unwrap(), "--format", "obj", "--out", obj.to_str().unwrap()]),
        EXIT_OK
    );
    let text = std::fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("o ")).count(), 3);
}
