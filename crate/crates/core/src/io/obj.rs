//! Wavefront OBJ export of coordinate surfaces n_i = const of a 3D net.

use crate::error::{Error, Result};
use crate::lattice::{DiscreteNet, NetIndex};
use std::collections::HashMap;
use std::fmt::Write;

/// One coordinate surface: all vertices with q[axis] = q, on the sublattice
/// whose other indices share the parity of q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slice {
    pub axis: usize,
    pub q: i64,
}

/// The middle of the window along each axis.
pub fn default_slices(net: &DiscreteNet) -> Vec<Slice> {
    let w = net.window();
    (0..net.dim())
        .map(|axis| Slice {
            axis,
            q: w.lo()[axis] + (w.hi()[axis] - w.lo()[axis]) / 2,
        })
        .collect()
}

/// Quad faces of one slice as index quadruples; faces with an absent corner are dropped.
pub fn slice_quads(net: &DiscreteNet, s: Slice) -> Vec<[NetIndex; 4]> {
    let others: Vec<usize> = (0..net.dim()).filter(|&a| a != s.axis).collect();
    let (j, k) = (others[0], others[1]);
    let par = s.q.rem_euclid(2);
    net.indices()
        .filter(|i| i.q()[s.axis] == s.q && i.q()[j].rem_euclid(2) == par && i.q()[k].rem_euclid(2) == par)
        .filter_map(|b| {
            let c = [b.clone(), b.shifted(j, 2), b.shifted(j, 2).shifted(k, 2), b.shifted(k, 2)];
            c.iter().all(|i| net.point(i).is_some()).then_some(c)
        })
        .collect()
}

/// One `o` object per slice, quad faces, vertices shared between slices.
pub fn render_obj(net: &DiscreteNet, slices: &[Slice]) -> Result<String> {
    if net.dim() != 3 {
        return Err(Error::Usage(format!("obj needs a 3D net, got dimension {}", net.dim())));
    }
    let mut out = String::from("# discrete confocal net: coordinate surfaces\n");
    let mut ids: HashMap<NetIndex, usize> = HashMap::new();
    for s in slices {
        if s.axis >= 3 || s.q < net.window().lo()[s.axis] || s.q > net.window().hi()[s.axis] {
            return Err(Error::Usage(format!("slice {}:{} outside the window", s.axis, s.q)));
        }
        let quads = slice_quads(net, *s);
        let _ = writeln!(out, "o slice_n{}_q{}", s.axis + 1, s.q);
        let mut faces = String::new();
        for quad in &quads {
            let mut f = Vec::with_capacity(4);
            for idx in quad {
                let next = ids.len() + 1;
                let id = *ids.entry(idx.clone()).or_insert_with(|| {
                    let p = net.point(idx).expect("checked present");
                    let _ = writeln!(out, "v {} {} {}", p[0], p[1], p[2]);
                    next
                });
                f.push(id);
            }
            let _ = writeln!(faces, "f {} {} {} {}", f[0], f[1], f[2], f[3]);
        }
        out.push_str(&faces);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{PointFlag, Window};

    #[test]
    fn absent_points_drop_faces() {
        let w = Window::new(vec![0, 0, 0], vec![4, 4, 4]).unwrap();
        let mut net = DiscreteNet::from_fn(w, 3, |i| Some(i.q().iter().map(|&q| q as f64).collect()));
        let full = slice_quads(&net, Slice { axis: 0, q: 2 }).len();
        assert_eq!(full, 4);
        net.set_flag(&NetIndex(vec![2, 2, 2]), PointFlag::Absent);
        assert_eq!(slice_quads(&net, Slice { axis: 0, q: 2 }).len(), 0);
        let obj = render_obj(&net, &[Slice { axis: 1, q: 0 }]).unwrap();
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 9);
    }
}
