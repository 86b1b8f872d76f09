//! sin/cos of angles given in turns (1 turn = 2π).
//!
//! Reduction to the first octant is exact, so multiples of a quarter turn
//! give exact zeros and exact ±1. The nets rely on this for their symmetries.

use std::f64::consts::TAU;

fn octant(t: f64) -> (f64, f64) {
    let r = t - t.round(); // [-1/2, 1/2]
    let q = (4.0 * r).round(); // quadrant in {-2,..,2}
    let f = r - 0.25 * q; // [-1/8, 1/8], exact
    let (s, c) = (TAU * f).sin_cos();
    match q as i64 {
        0 => (s, c),
        1 => (c, -s),
        -1 => (-c, s),
        _ => (-s, -c),
    }
}

/// sin(2π t).
pub fn sin_turns(t: f64) -> f64 {
    if !t.is_finite() {
        return f64::NAN;
    }
    octant(t).0
}

/// cos(2π t).
pub fn cos_turns(t: f64) -> f64 {
    if !t.is_finite() {
        return f64::NAN;
    }
    octant(t).1
}

/// sin(π x), exact zero at integers.
pub fn sin_pi(x: f64) -> f64 {
    sin_turns(0.5 * x)
}

/// cos(π x), exact zero at half-integers.
pub fn cos_pi(x: f64) -> f64 {
    cos_turns(0.5 * x)
}
