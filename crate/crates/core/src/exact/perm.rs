use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored 0-indexed in one-line notation:
/// `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From 0-indexed images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(images.clone()));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    /// From 1-indexed one-line notation, e.g. `[2,1,3]`.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        if line.iter().any(|&v| v == 0) {
            return Err(Error::InvalidPermutation(line.to_vec()));
        }
        Perm::from_images(line.iter().map(|&v| v - 1).collect())
    }

    /// 1-indexed one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Diagrammatic composition: apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.n(), other.n());
        Perm {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// Ordinary sign, `(-1)^{inversions}`.
    pub fn sign(&self) -> i64 {
        let mut inv = 0usize;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// All permutations of `{1..n}` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        use itertools::Itertools;
        (0..n)
            .permutations(n)
            .map(|images| Perm { images })
            .collect()
    }

    /// Cycle notation such as `(1 2)(3 4 5)`; `()` for the identity.
    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.n()];
        let mut out = String::new();
        for start in 0..self.n() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.images[cur];
            }
            out.push('(');
            out.push_str(
                &cyc.iter()
                    .map(|&v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.one_line()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// The Koszul sign of permuting homogeneous factors of the given degrees:
/// the product of `(-1)^{d_i d_j}` over the inverted pairs of `perm`
/// (pairs `i < j` with `perm(i) > perm(j)`).
///
/// Concretely this is the sign of the signed place-permutation operator
/// `T_perm` on a tensor product which moves the factor in slot `i` to slot
/// `perm(i)`.
pub fn koszul_sign(perm: &Perm, degrees: &[i64]) -> Result<i64> {
    if perm.n() != degrees.len() {
        return Err(Error::PermLengthMismatch {
            perm: perm.n(),
            given: degrees.len(),
        });
    }
    let mut sign = 1i64;
    for i in 0..perm.n() {
        for j in i + 1..perm.n() {
            if perm.apply(i) > perm.apply(j) && (degrees[i] * degrees[j]).rem_euclid(2) == 1 {
                sign = -sign;
            }
        }
    }
    Ok(sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: decompose the rearrangement into adjacent swaps and
    /// accumulate `(-1)^{d d'}` for each swap performed.
    fn koszul_sign_bubble(perm: &Perm, degrees: &[i64]) -> i64 {
        // perform the move "slot i -> slot perm(i)" by bubble sort on the
        // target positions, tracking degrees as they swap
        let n = perm.n();
        let mut pos: Vec<usize> = (0..n).map(|i| perm.apply(i)).collect();
        let mut degs = degrees.to_vec();
        let mut sign = 1i64;
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                if pos[i] > pos[i + 1] {
                    if (degs[i] * degs[i + 1]).rem_euclid(2) == 1 {
                        sign = -sign;
                    }
                    pos.swap(i, i + 1);
                    degs.swap(i, i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        sign
    }

    #[test]
    fn identity_sign_is_one() {
        let id = Perm::identity(4);
        assert_eq!(koszul_sign(&id, &[1, 2, 3, 4]).unwrap(), 1);
    }

    #[test]
    fn swap_of_two_odds_is_minus_one() {
        let swap = Perm::from_one_line(&[2, 1]).unwrap();
        assert_eq!(koszul_sign(&swap, &[1, 1]).unwrap(), -1);
        assert_eq!(koszul_sign(&swap, &[1, 2]).unwrap(), 1);
    }

    #[test]
    fn three_cycle_example() {
        // 1 -> 2 -> 3 -> 1 with degrees [1, 1, 2]: derived by transposition
        // decomposition, sign +1
        let c = Perm::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(koszul_sign(&c, &[1, 1, 2]).unwrap(), 1);
        assert_eq!(koszul_sign_bubble(&c, &[1, 1, 2]), 1);
    }

    #[test]
    fn matches_bubble_oracle_exhaustively() {
        // all n <= 4, degrees in {0,1,2}
        for n in 1..=4usize {
            let degree_choices: Vec<Vec<i64>> = (0..3usize.pow(n as u32))
                .map(|mut k| {
                    (0..n)
                        .map(|_| {
                            let d = (k % 3) as i64;
                            k /= 3;
                            d
                        })
                        .collect()
                })
                .collect();
            for p in Perm::all(n) {
                for degs in &degree_choices {
                    assert_eq!(
                        koszul_sign(&p, degs).unwrap(),
                        koszul_sign_bubble(&p, degs),
                        "perm {p} degrees {degs:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn cocycle_property_exhaustive() {
        // sign(s.then(t), d) = sign(t, s·d) * sign(s, d) where (s·d) is d
        // permuted by s (the degree in slot i of s·d is d_{s^{-1}(i)}).
        for n in 1..=4usize {
            let degree_choices: Vec<Vec<i64>> = (0..2usize.pow(n as u32))
                .map(|mut k| {
                    (0..n)
                        .map(|_| {
                            let d = (k % 2) as i64;
                            k /= 2;
                            d
                        })
                        .collect()
                })
                .collect();
            for s in Perm::all(n) {
                for t in Perm::all(n) {
                    for d in &degree_choices {
                        let sd: Vec<i64> = (0..n).map(|i| d[s.inverse().apply(i)]).collect();
                        let lhs = koszul_sign(&s.then(&t), d).unwrap();
                        let rhs = koszul_sign(&t, &sd).unwrap() * koszul_sign(&s, d).unwrap();
                        assert_eq!(lhs, rhs, "s={s} t={t} d={d:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let id = Perm::identity(3);
        assert!(koszul_sign(&id, &[0, 1]).is_err());
    }

    #[test]
    fn compose_inverse_cycles() {
        let p = Perm::from_one_line(&[3, 1, 2]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.cycles(), "(1 3 2)");
    }
}
