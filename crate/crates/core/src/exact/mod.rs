//! Exact rational arithmetic, graded vector spaces, Koszul signs, and sparse
//! multilinear maps. Everything downstream builds on this substrate.

mod graded;
mod multilinear;
mod perm;
mod rational;

pub use graded::{GradedSpace, Vector};
pub use multilinear::{MultilinearMap, Orientation};
pub use perm::{koszul_sign, Perm};
pub use rational::{format_q, parse_q, q, qi, Q};
