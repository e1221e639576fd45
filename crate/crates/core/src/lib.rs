//! Exact computations in truncated convolution deformation complexes.
//!
//! Everything is carried out over the rationals with arbitrary-precision
//! arithmetic; there is no floating point anywhere. The main pipeline:
//!
//! * [`exact`] — graded vector spaces, Koszul signs, sparse multilinear maps;
//! * [`words`] — the symmetric group algebras, shuffle sums, Eulerian
//!   idempotents, Lyndon bases;
//! * [`conv`] — truncated convolution dg Lie algebras: star product, bracket,
//!   Maurer-Cartan elements, BCH, gauge action;
//! * [`structures`] — A-infinity/C-infinity structure encodings, isotopies,
//!   the PBW retraction, strict units;
//! * [`rectify`] — the gauge-descent iteration turning A-infinity gauges
//!   between C-infinity structures into C-infinity gauges;
//! * [`liealg`] — structure-constant Lie algebras, universal envelopes,
//!   Chevalley-Eilenberg chains, bar/cobar, weight filtrations and the
//!   homotopy-completion model;
//! * [`io`] — the JSON text formats used by the CLI;
//! * [`fixtures`] — reproducible seeded fixture families;
//! * [`acceptance`] — the executable acceptance suite.

pub mod error;
pub mod exact;
pub mod words;
pub mod conv;
pub mod structures;
pub mod rectify;
pub mod linalg;
pub mod liealg;
pub mod io;
pub mod fixtures;
pub mod acceptance;

pub use error::Error;
pub use exact::{GradedSpace, MultilinearMap, Orientation, Vector, Q};
