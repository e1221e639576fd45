//! Symbolic Baker-Campbell-Hausdorff expansion on two generators.
//!
//! `log(exp(A) exp(B))` is computed in the free associative algebra truncated
//! by word length; each homogeneous piece is turned into a combination of
//! left-nested brackets by the Dynkin bracketing map (dividing by the
//! weight). The resulting table is substituted into any Lie algebra.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
}

/// One left-nested bracket word `[..[[w_0, w_1], w_2].., w_k]` with a
/// rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BchTerm {
    pub word: Vec<Gen>,
    pub coeff: Q,
}

type Poly = BTreeMap<Vec<Gen>, Q>;

fn poly_add_term(p: &mut Poly, word: Vec<Gen>, c: Q) {
    if c.is_zero() {
        return;
    }
    if let Some(slot) = p.get_mut(&word) {
        *slot += c;
        if slot.is_zero() {
            p.remove(&word);
        }
    } else {
        p.insert(word, c);
    }
}

fn poly_mul(a: &Poly, b: &Poly, cap: usize) -> Poly {
    let mut out = Poly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            if wa.len() + wb.len() > cap {
                continue;
            }
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            poly_add_term(&mut out, w, ca * cb);
        }
    }
    out
}

/// `exp` of a single generator, truncated.
fn exp_gen(g: Gen, cap: usize) -> Poly {
    let mut out = Poly::new();
    let mut fact = Q::one();
    poly_add_term(&mut out, vec![], Q::one());
    for k in 1..=cap {
        fact *= Q::from_integer((k as i64).into());
        poly_add_term(&mut out, vec![g; k], Q::one() / &fact);
    }
    out
}

/// The BCH bracket table up to the given weight: entry `w-1` lists the
/// weight-`w` left-nested bracket words with coefficients.
pub fn bch_bracket_table(max_weight: usize) -> Vec<Vec<BchTerm>> {
    let cap = max_weight;
    if cap == 0 {
        return Vec::new();
    }
    // u = exp(A) exp(B) - 1, log(1 + u) = sum (-1)^{k+1} u^k / k
    let prod = poly_mul(&exp_gen(Gen::A, cap), &exp_gen(Gen::B, cap), cap);
    let mut u = prod;
    u.remove(&vec![]);
    let mut log = Poly::new();
    let mut power = u.clone();
    for k in 1..=cap {
        let sign = if k % 2 == 1 { Q::one() } else { -Q::one() };
        let coeff = sign / Q::from_integer((k as i64).into());
        for (w, c) in &power {
            poly_add_term(&mut log, w.clone(), c * &coeff);
        }
        if k < cap {
            power = poly_mul(&power, &u, cap);
        }
    }
    // Dynkin bracketing: the weight-w piece of a Lie series equals
    // (1/w) * (left-to-right bracketing of its associative expansion)
    let mut table: Vec<Vec<BchTerm>> = vec![Vec::new(); cap];
    for (word, coeff) in log {
        let w = word.len();
        debug_assert!(w >= 1);
        if w == 1 {
            table[0].push(BchTerm {
                word,
                coeff,
            });
            continue;
        }
        table[w - 1].push(BchTerm {
            coeff: coeff / Q::from_integer((w as i64).into()),
            word,
        });
    }
    for terms in &mut table {
        terms.sort_by(|a, b| a.word.cmp(&b.word));
    }
    table
}
