use super::{
    assemble_net, recover_u, Concentric, Continuous, Elliptic3d, EllipticIc, FactorTable,
    GammaNet, HyperbolicIc, Parametrization, Pencil, Step, TrigHyp,
};
use crate::error::Result;
use crate::family::ConfocalFamily;
use crate::lattice::{DiscreteNet, NetIndex, USequences, Window};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::TAU;

/// Kind and parameters of a discrete parametrization (serializable).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Kind {
    TrigHyp {
        a: f64,
        b: f64,
        m: u32,
        delta2: f64,
        c1: f64,
        c2: f64,
    },
    EllipticIc {
        a: f64,
        b: f64,
        k: f64,
        m: f64,
        c1: f64,
        c2: f64,
    },
    HyperbolicIc {
        a: f64,
        b: f64,
        k: f64,
        step: Step,
        c1: f64,
        c2: f64,
    },
    Pencil {
        a: f64,
        b: f64,
        delta: f64,
        c1: f64,
        c2: f64,
    },
    Concentric {
        a: f64,
        b: f64,
        l: u32,
        c1: f64,
        c2: f64,
    },
    Gamma {
        alpha: Vec<i64>,
    },
    Elliptic3d {
        a: f64,
        b: f64,
        c: f64,
        m1: u32,
        m2: u32,
        m3: u32,
    },
}

impl Kind {
    /// a=2, b=1, m=8, δ₁=δ₂=2π/m, c₁=c₂=0.
    pub fn fig_trig() -> Self {
        Kind::TrigHyp {
            a: 2.0,
            b: 1.0,
            m: 8,
            delta2: TAU / 8.0,
            c1: 0.0,
            c2: 0.0,
        }
    }

    /// a=2, b=1, k=0.9, m=3, c₁=c₂=0.
    pub fn fig_ic() -> Self {
        Kind::EllipticIc {
            a: 2.0,
            b: 1.0,
            k: 0.9,
            m: 3.0,
            c1: 0.0,
            c2: 0.0,
        }
    }

    /// a=2, b=1, k=0.9, m=3, c₁=c₂=0.
    pub fn fig_hyp_ic() -> Self {
        Kind::HyperbolicIc {
            a: 2.0,
            b: 1.0,
            k: 0.9,
            step: Step::QuarterPeriod { m: 3.0 },
            c1: 0.0,
            c2: 0.0,
        }
    }

    /// a=2, b=1, δ=0.2, c₁=¼, c₂=−¼.
    pub fn fig_pencil() -> Self {
        Kind::Pencil {
            a: 2.0,
            b: 1.0,
            delta: 0.2,
            c1: 0.25,
            c2: -0.25,
        }
    }

    /// a=2, b=1, 2l+1=7, c₁=c₂=0.
    pub fn fig_concentric() -> Self {
        Kind::Concentric {
            a: 2.0,
            b: 1.0,
            l: 3,
            c1: 0.0,
            c2: 0.0,
        }
    }

    /// α = (4, 1).
    pub fn fig_gamma() -> Self {
        Kind::Gamma { alpha: vec![4, 1] }
    }

    /// a=8, b=4, c=0, m₁=m₂=m₃=4.
    pub fn fig_3d() -> Self {
        Kind::Elliptic3d {
            a: 8.0,
            b: 4.0,
            c: 0.0,
            m1: 4,
            m2: 4,
            m3: 4,
        }
    }

    /// Preset by name: fig-trig, fig-ic, fig-hyp-ic, fig-pencil, fig-concentric, fig-gamma, fig-3d.
    pub fn preset(name: &str) -> Option<Self> {
        Some(match name {
            "fig-trig" => Self::fig_trig(),
            "fig-ic" => Self::fig_ic(),
            "fig-hyp-ic" => Self::fig_hyp_ic(),
            "fig-pencil" => Self::fig_pencil(),
            "fig-concentric" => Self::fig_concentric(),
            "fig-gamma" => Self::fig_gamma(),
            "fig-3d" => Self::fig_3d(),
            _ => return None,
        })
    }

    pub const PRESETS: [&'static str; 7] = [
        "fig-trig",
        "fig-ic",
        "fig-hyp-ic",
        "fig-pencil",
        "fig-concentric",
        "fig-gamma",
        "fig-3d",
    ];

    /// All seven kinds at their figure parameters.
    pub fn figure_presets() -> Vec<Self> {
        Self::PRESETS.iter().filter_map(|p| Self::preset(p)).collect()
    }

    pub fn name(&self) -> &'static str {
        match self {
            Kind::TrigHyp { .. } => "trig-hyp",
            Kind::EllipticIc { .. } => "elliptic-ic",
            Kind::HyperbolicIc { .. } => "hyperbolic-ic",
            Kind::Pencil { .. } => "pencil",
            Kind::Concentric { .. } => "concentric",
            Kind::Gamma { .. } => "gamma",
            Kind::Elliptic3d { .. } => "elliptic-3d",
        }
    }

    /// Validate the parameters and build the parametrization.
    pub fn build(&self) -> Result<Model> {
        Ok(match self.clone() {
            Kind::TrigHyp {
                a,
                b,
                m,
                delta2,
                c1,
                c2,
            } => Model::TrigHyp(TrigHyp::new(a, b, m, delta2, c1, c2)?),
            Kind::EllipticIc { a, b, k, m, c1, c2 } => {
                Model::EllipticIc(EllipticIc::new(a, b, k, m, c1, c2)?)
            }
            Kind::HyperbolicIc {
                a,
                b,
                k,
                step,
                c1,
                c2,
            } => Model::HyperbolicIc(HyperbolicIc::new(a, b, k, step, c1, c2)?),
            Kind::Pencil {
                a,
                b,
                delta,
                c1,
                c2,
            } => Model::Pencil(Pencil::new(a, b, delta, c1, c2)?),
            Kind::Concentric { a, b, l, c1, c2 } => {
                Model::Concentric(Concentric::new(a, b, l, c1, c2)?)
            }
            Kind::Gamma { alpha } => Model::Gamma(GammaNet::new(alpha)?),
            Kind::Elliptic3d {
                a,
                b,
                c,
                m1,
                m2,
                m3,
            } => Model::Elliptic3d(Elliptic3d::new(a, b, c, m1, m2, m3)?),
        })
    }
}

/// A validated parametrization of any kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    TrigHyp(TrigHyp),
    EllipticIc(EllipticIc),
    HyperbolicIc(HyperbolicIc),
    Pencil(Pencil),
    Concentric(Concentric),
    Gamma(GammaNet),
    Elliptic3d(Elliptic3d),
}

impl Model {
    pub fn as_param(&self) -> &dyn Parametrization {
        match self {
            Model::TrigHyp(p) => p,
            Model::EllipticIc(p) => p,
            Model::HyperbolicIc(p) => p,
            Model::Pencil(p) => p,
            Model::Concentric(p) => p,
            Model::Gamma(p) => p,
            Model::Elliptic3d(p) => p,
        }
    }

    /// The smooth system approximated by this net (none for the gamma kind).
    pub fn continuous(&self) -> Option<Continuous> {
        Some(match self {
            Model::TrigHyp(p) => p.continuous(),
            Model::EllipticIc(p) => p.continuous(),
            Model::HyperbolicIc(p) => p.continuous(),
            Model::Pencil(p) => p.continuous(),
            Model::Concentric(p) => p.continuous(),
            Model::Gamma(_) => return None,
            Model::Elliptic3d(p) => p.continuous(),
        })
    }

    /// Continuous parameters s corresponding to the lattice point q.
    pub fn s_of(&self, q: &NetIndex) -> Option<Vec<f64>> {
        let q = q.q();
        Some(match self {
            Model::TrigHyp(p) => p.s_of(q),
            Model::EllipticIc(p) => p.s_of(q),
            Model::HyperbolicIc(p) => p.s_of(q),
            Model::Pencil(p) => p.s_of(q),
            Model::Concentric(p) => p.s_of(q),
            Model::Gamma(_) => return None,
            Model::Elliptic3d(p) => p.s_of(q),
        })
    }
}

/// Output of [`generate`].
#[derive(Debug, Clone)]
pub struct Generated {
    pub kind: Kind,
    pub model: Model,
    pub family: ConfocalFamily,
    pub table: FactorTable,
    pub useqs: USequences,
    pub net: DiscreteNet,
    pub info: BTreeMap<String, f64>,
}

/// Build the net of `kind` on `window` (or its default window).
pub fn generate(kind: &Kind, window: Option<Window>) -> Result<Generated> {
    let model = kind.build()?;
    let p = model.as_param();
    let window = window.unwrap_or_else(|| p.default_window());
    let table = FactorTable::sample(p, &window)?;
    let family = p.family().clone();
    let useqs = recover_u(&table, &family)?;
    let net = assemble_net(&table);
    let info = p.info();
    Ok(Generated {
        kind: kind.clone(),
        model,
        family,
        table,
        useqs,
        net,
        info,
    })
}
