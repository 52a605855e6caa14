//! Monomials as dense exponent vectors, and the monomial orders used by the
//! Groebner engine.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A monomial in a fixed number of variables: a dense exponent vector with
/// the total degree cached. The variable count is the length of `exps` and
/// must match the ring the monomial is used with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// The standard basis monomial x_i.
    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self; caller must ensure divisibility.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Monomial {
            exps,
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// True if every variable in the support lies in `allowed` (a bitmask by
    /// variable index).
    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, e)| *e == 0 || allowed[i])
    }

    /// Appends `extra` zero exponents at the front (used when moving a
    /// polynomial into a ring with auxiliary leading variables).
    pub fn prepend_vars(&self, extra: usize) -> Monomial {
        let mut exps = vec![0; extra];
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Drops the first `extra` exponents; caller must ensure they are zero.
    pub fn drop_leading_vars(&self, extra: usize) -> Monomial {
        debug_assert!(self.exps[..extra].iter().all(|e| *e == 0));
        Monomial::new(self.exps[extra..].to_vec())
    }

    pub fn append_vars(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial {
            exps,
            degree: self.degree,
        }
    }
}

/// Total orders on monomials of a fixed ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Degree first, ties broken reverse-lexicographically: the monomial
    /// whose last differing exponent is smaller wins.
    GrevLex,
    /// Pure lexicographic with earlier variables dominating.
    Lex,
    /// Block order eliminating the first `k` variables: compare the leading
    /// block by grevlex, then the remaining block by grevlex.
    Eliminate(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a.exps(), b.exps(), a.total_degree(), b.total_degree()),
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::Eliminate(k) => {
                let (a1, a2) = a.exps().split_at(*k);
                let (b1, b2) = b.exps().split_at(*k);
                grevlex_slices(a1, b1).then_with(|| grevlex_slices(a2, b2))
            }
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // Larger exponent in the *last* differing slot loses.
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

fn grevlex_slices(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    grevlex(a, b, da, db)
}
