//! Special functions used by the parametrizations.
//!
//! Everything here is a pure function of its arguments.

mod elliptic;
mod gamma;
mod qgamma;
mod turns;

pub use elliptic::{
    complete_elliptic_k, jacobi_quarter, jacobi_sn_cn_dn, EllipticModulus,
};
pub use gamma::{discrete_sqrt, log_gamma};
pub use qgamma::{q_gamma, q_gamma_ratio, recip_q_gamma};
pub use turns::{cos_pi, cos_turns, sin_pi, sin_turns};
