//! Net documents (JSON), SVG and OBJ export, and the command-line driver.
//!
//! Numbers are written as the shortest decimal that round-trips binary64,
//! indices as integers in half-step units, so write → read → write is
//! byte-identical.

pub mod cli;
pub mod obj;
pub mod svg;

use crate::construct::{Construction, PathReport};
use crate::error::{Error, Result};
use crate::family::ConfocalFamily;
use crate::lattice::{DiscreteNet, NetIndex, PointFlag, USequences, Window};
use crate::param::{Generated, Kind, Model};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

/// Semiaxes as given by the user; `offset` is 1 for families with a_N = 0,
/// whose u-values are stored in the translated convention (see
/// [`ConfocalFamily::offset`]).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub semiaxes: Vec<f64>,
    pub offset: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointDoc {
    pub q: Vec<i64>,
    /// `null` for absent points.
    pub x: Option<Vec<f64>>,
    pub flag: PointFlag,
}

/// Summary of a polarity construction embedded in a document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionDoc {
    pub seed: NetIndex,
    pub computed: usize,
    pub arrival_discrepancy: f64,
    pub arrivals_compared: usize,
    pub degenerate_steps: usize,
    pub boundary_steps: usize,
    pub path_trials: usize,
    pub path_discrepancy: f64,
    pub longest_path: usize,
    /// Largest relative deviation from the closed form, when one is known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form_deviation: Option<f64>,
}

impl ConstructionDoc {
    pub fn new(seed: NetIndex, c: &Construction, paths: &PathReport, closed_form: Option<f64>) -> Self {
        Self {
            seed,
            computed: c.computed,
            arrival_discrepancy: c.max_discrepancy,
            arrivals_compared: c.arrivals_compared,
            degenerate_steps: c.degenerate_steps,
            boundary_steps: c.boundary_steps,
            path_trials: paths.trials,
            path_discrepancy: paths.max_discrepancy,
            longest_path: paths.longest_path,
            closed_form_deviation: closed_form,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetDocument {
    pub schema_version: u32,
    pub family: FamilyDoc,
    /// Kind and parameters, when the net came from a known parametrization.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Kind>,
    #[serde(default)]
    pub info: BTreeMap<String, f64>,
    pub window: Window,
    pub points: Vec<PointDoc>,
    pub u_sequences: USequences,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionDoc>,
}

impl NetDocument {
    pub fn new(
        family: &ConfocalFamily,
        params: Option<Kind>,
        info: BTreeMap<String, f64>,
        net: &DiscreteNet,
        useqs: &USequences,
    ) -> Self {
        let points = net
            .indices()
            .map(|idx| {
                let flag = net.flag(&idx).unwrap_or(PointFlag::Absent);
                PointDoc {
                    x: net.point(&idx).map(|p| p.to_vec()),
                    q: idx.0,
                    flag,
                }
            })
            .collect();
        Self {
            schema_version: SCHEMA_VERSION,
            family: FamilyDoc {
                semiaxes: family.user_semiaxes(),
                offset: family.offset(),
            },
            params,
            info,
            window: net.window().clone(),
            points,
            u_sequences: useqs.clone(),
            construction: None,
        }
    }

    pub fn from_generated(g: &Generated) -> Self {
        Self::new(&g.family, Some(g.kind.clone()), g.info.clone(), &g.net, &g.useqs)
    }

    pub fn dim(&self) -> usize {
        self.window.dim()
    }

    pub fn family(&self) -> Result<ConfocalFamily> {
        match self.family.offset {
            o if o == 0.0 => ConfocalFamily::new(self.family.semiaxes.clone()),
            o if o == 1.0 => ConfocalFamily::with_zero_last(self.family.semiaxes.clone()),
            o => Err(Error::Format(format!("unsupported family offset {o}"))),
        }
    }

    pub fn net(&self) -> Result<DiscreteNet> {
        let dim = self.dim();
        let len = self.window.len();
        if self.points.len() != len {
            return Err(Error::Format(format!(
                "{} points for a window of {len} sites",
                self.points.len()
            )));
        }
        let mut coords = vec![0.0; len * dim];
        let mut flags = vec![PointFlag::Absent; len];
        for (p, (pt, idx)) in self.points.iter().zip(self.window.indices()).enumerate() {
            if pt.q != idx.0 {
                return Err(Error::Format(format!("point {p} has index {:?}, expected {idx}", pt.q)));
            }
            match (&pt.x, pt.flag) {
                (None, PointFlag::Absent) => {}
                (Some(x), PointFlag::Regular | PointFlag::Degenerate) if x.len() == dim => {
                    coords[p * dim..(p + 1) * dim].copy_from_slice(x);
                    flags[p] = pt.flag;
                }
                _ => return Err(Error::Format(format!("inconsistent point at {idx}"))),
            }
        }
        DiscreteNet::from_parts(self.window.clone(), dim, coords, flags)
    }

    /// The parametrization named in the document, if any.
    pub fn model(&self) -> Option<Result<Model>> {
        self.params.as_ref().map(|k| k.build())
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(s)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Format(format!(
                "schema version {} (supported: {SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        if doc.u_sequences.dim() != doc.dim() || doc.family.semiaxes.len() != doc.dim() {
            return Err(Error::Format("family, window and u-sequences disagree in dimension".into()));
        }
        Ok(doc)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::generate;

    #[test]
    fn round_trip_is_byte_identical() {
        for kind in [Kind::fig_trig(), Kind::fig_pencil(), Kind::fig_gamma()] {
            let doc = NetDocument::from_generated(&generate(&kind, None).unwrap());
            let s = doc.to_json().unwrap();
            let back = NetDocument::from_json(&s).unwrap();
            assert_eq!(back.to_json().unwrap(), s);
            assert_eq!(back.net().unwrap(), generate(&kind, None).unwrap().net);
        }
    }

    #[test]
    fn rejects_mismatched_points() {
        let mut doc = NetDocument::from_generated(&generate(&Kind::fig_trig(), None).unwrap());
        doc.points.pop();
        assert!(doc.net().is_err());
    }
}
