//! Hilbert series in reduced rational form t^shift * N(t) / (1-t)^d with
//! N(1) != 0, plus the invariants read from it (dimension, multiplicity).

use serde::{Deserialize, Serialize};
use std::fmt;

/// Reduced Hilbert series of a graded module.
///
/// Invariants: `numer` has no leading/trailing zeros, and `numer` does not
/// vanish at t = 1 (all (1-t) factors are cancelled into `pole_order`).
/// The zero module is represented by an empty numerator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    /// Exponent of the leading t power (generators in negative degrees give
    /// negative shifts).
    pub shift: i64,
    /// Numerator coefficients, ascending from t^shift.
    pub numer: Vec<i64>,
    /// Order of the pole at t = 1; equals the Krull dimension.
    pub pole_order: usize,
}

impl HilbertSeries {
    /// Builds the series from an alternating sum of free-module degree lists
    /// (a finite free resolution over a polynomial ring in `nvars`
    /// variables): H = sum_j (-1)^j sum_g t^(deg g) / (1-t)^nvars.
    pub fn from_resolution_degrees(degree_lists: &[Vec<i64>], nvars: usize) -> HilbertSeries {
        let mut terms: Vec<(i64, i64)> = Vec::new(); // (exponent, coefficient)
        for (j, list) in degree_lists.iter().enumerate() {
            let sign = if j % 2 == 0 { 1i64 } else { -1i64 };
            for d in list {
                terms.push((*d, sign));
            }
        }
        HilbertSeries::from_numerator_terms(terms, nvars)
    }

    pub fn from_numerator_terms(terms: Vec<(i64, i64)>, pole: usize) -> HilbertSeries {
        if terms.is_empty() {
            return HilbertSeries {
                shift: 0,
                numer: Vec::new(),
                pole_order: 0,
            };
        }
        let lo = terms.iter().map(|(e, _)| *e).min().unwrap();
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut numer = vec![0i64; (hi - lo + 1) as usize];
        for (e, c) in terms {
            numer[(e - lo) as usize] += c;
        }
        let mut h = HilbertSeries {
            shift: lo,
            numer,
            pole_order: pole,
        };
        h.normalize();
        h
    }

    fn normalize(&mut self) {
        // Strip zero fringes.
        while self.numer.last() == Some(&0) {
            self.numer.pop();
        }
        let lead_zeros = self.numer.iter().take_while(|c| **c == 0).count();
        if lead_zeros > 0 {
            self.numer.drain(..lead_zeros);
            self.shift += lead_zeros as i64;
        }
        if self.numer.is_empty() {
            self.shift = 0;
            self.pole_order = 0;
            return;
        }
        // Cancel (1-t) factors: N(1) == 0 means (1-t) | N.
        while !self.numer.is_empty() && self.numer.iter().sum::<i64>() == 0 && self.pole_order > 0 {
            // Divide by (1-t): q_i = sum of a_0..a_i.
            let mut acc = 0i64;
            let mut q = Vec::with_capacity(self.numer.len());
            for a in &self.numer {
                acc += a;
                q.push(acc);
            }
            debug_assert_eq!(q.pop(), Some(0));
            self.numer = q;
            self.pole_order -= 1;
            while self.numer.last() == Some(&0) {
                self.numer.pop();
            }
        }
        // A numerator still vanishing at 1 with pole 0 would mean a negative
        // dimension; that cannot happen for an actual module.
        debug_assert!(
            self.numer.is_empty() || self.numer.iter().sum::<i64>() != 0,
            "numerator vanishes at t=1 beyond the pole bound"
        );
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    /// Krull dimension of the module.
    pub fn dimension(&self) -> usize {
        self.pole_order
    }

    /// Multiplicity: Q(1) for the reduced numerator Q. For dimension zero
    /// this is the total length.
    pub fn multiplicity(&self) -> i64 {
        self.numer.iter().sum()
    }

    /// Coefficient of t^d in the power-series expansion (the Hilbert
    /// function value at degree d).
    pub fn value_at(&self, d: i64) -> i64 {
        // H(t) = sum_i numer[i] t^(shift+i) * sum_{k>=0} C(k+p-1, p-1) t^k.
        let p = self.pole_order as i64;
        let mut total = 0i64;
        for (i, c) in self.numer.iter().enumerate() {
            let e = self.shift + i as i64;
            let k = d - e;
            if k < 0 {
                continue;
            }
            let coeff = if p == 0 {
                if k == 0 {
                    1
                } else {
                    0
                }
            } else {
                binom(k + p - 1, p - 1)
            };
            total += c * coeff;
        }
        total
    }

    /// Scales the grading: H(t) -> t^e * H(t).
    pub fn twist(&self, e: i64) -> HilbertSeries {
        if self.is_zero() {
            return self.clone();
        }
        HilbertSeries {
            shift: self.shift + e,
            numer: self.numer.clone(),
            pole_order: self.pole_order,
        }
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.numer.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let e = self.shift + i as i64;
            let mag = c.abs();
            let body = match (e, mag) {
                (0, m) => format!("{m}"),
                (1, 1) => "t".to_string(),
                (1, m) => format!("{m}*t"),
                (e, 1) => format!("t^{e}"),
                (e, m) => format!("{m}*t^{e}"),
            };
            if parts.is_empty() {
                parts.push(if *c < 0 { format!("-{body}") } else { body });
            } else if *c < 0 {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        let numer = parts.join(" ");
        match self.pole_order {
            0 => write!(f, "{numer}"),
            1 => write!(f, "({numer})/(1 - t)"),
            p => write!(f, "({numer})/(1 - t)^{p}"),
        }
    }
}
