//! Discrete confocal coordinate systems.
//!
//! Nets on the half-integer lattice `(½ℤ)^N` whose nearest neighbours are
//! related by polarity with respect to confocal quadrics. The crate provides
//!
//! * [`specfun`] — K(k), Jacobi sn/cn/dn, ln Γ, the discrete square root and Γ_q,
//! * [`family`] — the classical confocal family Σ x_k²/(a_k+λ) = 1,
//! * [`lattice`] — exact half-step indexing, nets and parameter sequences,
//! * [`param`] — closed-form discrete parametrizations (and their continuous limits),
//! * [`construct`] — the purely geometric construction through polar hyperplanes,
//! * [`verify`] — numerical checks for every invariant of these nets,
//! * [`io`] — JSON documents, SVG/OBJ export and the command-line driver.
//!
//! ```
//! use confocal::param::{Kind, generate};
//! use confocal::verify;
//!
//! let g = generate(&Kind::fig_trig(), None).unwrap();
//! let rep = verify::check_polarity(&g.net, &g.family, &g.useqs, 1e-10);
//! assert!(rep.passed);
//! ```

pub mod construct;
pub mod error;
pub mod family;
pub mod io;
pub mod lattice;
pub mod param;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use family::{ConfocalCoords, ConfocalFamily, Hyperplane};
pub use lattice::{DiscreteNet, NetIndex, PointFlag, USequences, Window};
