use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::rational::Q;
use crate::error::{Error, Result};

/// A finite-dimensional Z-graded vector space with a named, ordered basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSpace {
    basis: Vec<(String, i64)>,
    index: BTreeMap<String, usize>,
}

impl GradedSpace {
    pub fn new<S: Into<String>>(basis: Vec<(S, i64)>) -> Result<Self> {
        let basis: Vec<(String, i64)> = basis.into_iter().map(|(n, d)| (n.into(), d)).collect();
        let mut index = BTreeMap::new();
        for (i, (name, _)) in basis.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateBasisName(name.clone()));
            }
        }
        Ok(GradedSpace { basis, index })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].1
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].0
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownBasisName(name.to_string()))
    }

    pub fn basis(&self) -> &[(String, i64)] {
        &self.basis
    }

    /// Same names, all degrees shifted by `k` (the suspension `s^k V`).
    pub fn suspend(&self, k: i64) -> GradedSpace {
        GradedSpace {
            basis: self.basis.iter().map(|(n, d)| (n.clone(), d + k)).collect(),
            index: self.index.clone(),
        }
    }

    pub fn degrees_of(&self, tuple: &[usize]) -> Vec<i64> {
        tuple.iter().map(|&i| self.degree(i)).collect()
    }
}

/// Sparse vector in a [`GradedSpace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    space: Arc<GradedSpace>,
    coords: BTreeMap<usize, Q>,
}

impl Vector {
    pub fn zero(space: Arc<GradedSpace>) -> Self {
        Vector {
            space,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis_vec(space: Arc<GradedSpace>, i: usize) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(i, Q::from_integer(1.into()));
        Vector { space, coords }
    }

    pub fn from_coords(space: Arc<GradedSpace>, coords: Vec<(usize, Q)>) -> Self {
        let mut v = Vector::zero(space);
        for (i, c) in coords {
            v.add_term(i, c);
        }
        v
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn add_term(&mut self, i: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.coords.entry(i).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coords.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coords.iter().map(|(&i, c)| (i, c))
    }

    pub fn scale(&self, c: &Q) -> Vector {
        if c.is_zero() {
            return Vector::zero(self.space.clone());
        }
        Vector {
            space: self.space.clone(),
            coords: self.coords.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch("vector addition".into()));
        }
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    /// Degree of a homogeneous vector, `None` for the zero vector.
    ///
    /// Errors if the support mixes degrees.
    pub fn degree(&self) -> Result<Option<i64>> {
        let mut deg = None;
        for (i, _) in self.iter() {
            let d = self.space.degree(i);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::DegreeMismatch(format!(
                        "vector mixes degrees {e} and {d}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(i, c)| format!("{}*{}", super::rational::format_q(c), self.space.name(i)))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
