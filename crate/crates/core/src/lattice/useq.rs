use super::site_key;
use serde::{Deserialize, Serialize};

/// Values u_i on consecutive parameter sites of one axis.
///
/// `values[j]` sits at key `lo_key + j`, i.e. at n = (lo_key + j)/2 + ¼.
/// `None` marks a site where the sequence is undefined (a pole of the
/// parametrization or a site where every factor vanishes).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct USeq {
    pub lo_key: i64,
    pub values: Vec<Option<f64>>,
}

impl USeq {
    pub fn new(lo_key: i64, values: Vec<Option<f64>>) -> Self {
        Self { lo_key, values }
    }

    /// Build from a function of the key over `lo..=hi`.
    pub fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> Option<f64>) -> Self {
        Self {
            lo_key: lo,
            values: (lo..=hi).map(f).collect(),
        }
    }

    pub fn hi_key(&self) -> i64 {
        self.lo_key + self.values.len() as i64 - 1
    }

    pub fn get(&self, key: i64) -> Option<f64> {
        let j = key - self.lo_key;
        if j < 0 {
            return None;
        }
        self.values.get(j as usize).copied().flatten()
    }
}

/// Per-axis parameter sequences u_1, …, u_N.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct USequences {
    pub axes: Vec<USeq>,
}

impl USequences {
    pub fn new(axes: Vec<USeq>) -> Self {
        Self { axes }
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    /// u_axis at the site with the given key.
    pub fn get(&self, axis: usize, key: i64) -> Option<f64> {
        self.axes.get(axis)?.get(key)
    }

    /// u_axis on the site between vertex coordinate q and q + σ.
    pub fn between(&self, axis: usize, q: i64, sigma: i8) -> Option<f64> {
        self.get(axis, site_key(q, sigma))
    }

    /// A copy with every axis shifted by `dk` keys (negative-control helper).
    pub fn shifted(&self, dk: i64) -> Self {
        Self {
            axes: self
                .axes
                .iter()
                .map(|s| USeq::new(s.lo_key + dk, s.values.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        let s = USeq::from_fn(-2, 2, |k| if k == 0 { None } else { Some(k as f64) });
        assert_eq!(s.get(-2), Some(-2.0));
        assert_eq!(s.get(0), None);
        assert_eq!(s.get(3), None);
        assert_eq!(s.hi_key(), 2);
        let u = USequences::new(vec![s]);
        assert_eq!(u.between(0, 2, -1), Some(1.0));
        assert_eq!(u.between(0, 2, 1), Some(2.0));
    }
}
