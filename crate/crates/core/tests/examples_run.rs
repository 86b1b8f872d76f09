//! Every example must run to completion.

#[allow(dead_code)]
#[path = "../examples/classical_family.rs"]
mod classical_family;

#[allow(dead_code)]
#[path = "../examples/concentric.rs"]
mod concentric;

#[allow(dead_code)]
#[path = "../examples/continuum_limit.rs"]
mod continuum_limit;

#[allow(dead_code)]
#[path = "../examples/elliptic_3d.rs"]
mod elliptic_3d;

#[allow(dead_code)]
#[path = "../examples/elliptic_ic.rs"]
mod elliptic_ic;

#[allow(dead_code)]
#[path = "../examples/gamma_net.rs"]
mod gamma_net;

#[allow(dead_code)]
#[path = "../examples/hyperbolic_ic.rs"]
mod hyperbolic_ic;

#[allow(dead_code)]
#[path = "../examples/pencil.rs"]
mod pencil;

#[allow(dead_code)]
#[path = "../examples/polarity_construction.rs"]
mod polarity_construction;

#[allow(dead_code)]
#[path = "../examples/render.rs"]
mod render;

#[allow(dead_code)]
#[path = "../examples/special_functions.rs"]
mod special_functions;

#[allow(dead_code)]
#[path = "../examples/trig_hyp.rs"]
mod trig_hyp;

#[test]
fn examples_run() {
    classical_family::run_example().unwrap();
    concentric::run_example().unwrap();
    continuum_limit::run_example().unwrap();
    elliptic_3d::run_example().unwrap();
    elliptic_ic::run_example().unwrap();
    gamma_net::run_example().unwrap();
    hyperbolic_ic::run_example().unwrap();
    pencil::run_example().unwrap();
    polarity_construction::run_example().unwrap();
    render::run_example().unwrap();
    special_functions::run_example().unwrap();
    trig_hyp::run_example().unwrap();
}
