//! Multivariate polynomials over an exact coefficient field, with terms kept
//! sorted descending in the ring's monomial order.

use crate::algebra::field::{Coeff, FieldKind};
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::error::{AlgebraError, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub const MAX_VARIABLES: usize = 24;

/// A polynomial ring: coefficient field, ordered variable names, a monomial
/// order, and (currently uniform) grading weights.
#[derive(Debug)]
pub struct PolyRing {
    field: FieldKind,
    vars: Vec<String>,
    order: MonomialOrder,
    weights: Vec<u32>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vars == other.vars
            && self.order == other.order
            && self.weights == other.weights
    }
}
impl Eq for PolyRing {}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(field: FieldKind, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        if vars.len() > MAX_VARIABLES {
            return Err(AlgebraError::TooManyVariables(vars.len(), MAX_VARIABLES));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_var_name(v) {
                return Err(AlgebraError::InvalidVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(AlgebraError::DuplicateVariable(v.clone()));
            }
        }
        let weights = vec![1; vars.len()];
        Ok(Arc::new(PolyRing {
            field,
            vars,
            order,
            weights,
        }))
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> i64 {
        m.exps()
            .iter()
            .zip(&self.weights)
            .map(|(e, w)| *e as i64 * *w as i64)
            .sum()
    }

    pub fn weights_are_uniform(&self) -> bool {
        self.weights.iter().all(|w| *w == 1)
    }

    pub fn same_ring(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    /// A sibling ring with the same field/variables but a different order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            field: self.field,
            vars: self.vars.clone(),
            order,
            weights: self.weights.clone(),
        })
    }

    /// A ring with `extra` fresh variables prepended (auxiliary variables for
    /// elimination tricks come first so `Eliminate(k)` can remove them).
    pub fn with_prepended_vars(
        self: &Arc<Self>,
        extra: &[&str],
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>> {
        let mut vars: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        PolyRing::new(self.field, vars, order)
    }

    /// A ring with fresh variables appended after the existing ones.
    pub fn with_appended_vars(self: &Arc<Self>, extra: &[String]) -> Result<Arc<PolyRing>> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        PolyRing::new(self.field, vars, self.order)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.nvars()), self.field.one())],
        }
    }

    pub fn constant(self: &Arc<Self>, n: i128) -> Polynomial {
        let c = self.field.from_i128(n);
        if c.is_zero() {
            self.zero()
        } else {
            Polynomial {
                ring: self.clone(),
                terms: vec![(Monomial::one(self.nvars()), c)],
            }
        }
    }

    pub fn var_poly(self: &Arc<Self>, i: usize) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(self.nvars(), i), self.field.one())],
        }
    }

    pub fn monomial_poly(self: &Arc<Self>, m: Monomial) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.nvars());
        Polynomial {
            ring: self.clone(),
            terms: vec![(m, self.field.one())],
        }
    }

    pub fn from_terms(self: &Arc<Self>, mut terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        // Combine equal monomials.
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(&last.1, &c);
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            out.push((m, c));
        }
        Polynomial {
            ring: self.clone(),
            terms: out,
        }
    }
}

/// A polynomial with terms sorted strictly descending in the ring order and
/// no zero coefficients.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximum weighted degree over the terms; None for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms
            .iter()
            .map(|(m, _)| self.ring.weighted_degree(m))
            .max()
    }

    /// Every term has the same weighted degree (the zero polynomial counts
    /// as homogeneous of every degree).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = self.ring.weighted_degree(m0);
                self.terms
                    .iter()
                    .all(|(m, _)| self.ring.weighted_degree(m) == d)
            }
        }
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring.same_ring(&other.ring),
            "polynomials from different rings"
        );
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(c)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.merge_scaled(other, None, None, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.merge_scaled(other, None, None, true)
    }

    /// self + sign * (c * m * other), the workhorse for reduction steps.
    /// `c`/`m` of None mean 1.
    pub fn merge_scaled(
        &self,
        other: &Polynomial,
        c: Option<&Coeff>,
        m: Option<&Monomial>,
        negate: bool,
    ) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out: Vec<(Monomial, Coeff)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let scale = |mon: &Monomial, co: &Coeff| -> (Monomial, Coeff) {
            let mon2 = match m {
                Some(mm) => mon.mul(mm),
                None => mon.clone(),
            };
            let mut co2 = match c {
                Some(cc) => field.mul(co, cc),
                None => co.clone(),
            };
            if negate {
                co2 = field.neg(&co2);
            }
            (mon2, co2)
        };
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.terms.len() && j < other.terms.len() {
            let (am, ac) = &self.terms[i];
            let (bm, bc) = scale(&other.terms[j].0, &other.terms[j].1);
            match order.compare(am, &bm) {
                Ordering::Greater => {
                    out.push((am.clone(), ac.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, bc));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(ac, &bc);
                    if !s.is_zero() {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        while j < other.terms.len() {
            out.push(scale(&other.terms[j].0, &other.terms[j].1));
            j += 1;
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, co)| (m.clone(), field.mul(co, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let field = self.ring.field();
        let mut all: Vec<(Monomial, Coeff)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for (am, ac) in &self.terms {
            for (bm, bc) in &other.terms {
                all.push((am.mul(bm), field.mul(ac, bc)));
            }
        }
        self.ring.from_terms(all)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient so the result is monic.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = self
                    .ring
                    .field()
                    .inv(lc)
                    .expect("leading coefficient is a unit");
                self.scale(&inv)
            }
        }
    }

    /// Over Q, rescales by a rational unit so coefficients become coprime
    /// integers with positive leading coefficient (keeps Buchberger
    /// intermediate values small). Over F_p this is `monic`.
    pub fn unit_normalize(&self) -> Polynomial {
        match self.ring.field() {
            FieldKind::Prime(_) => self.monic(),
            FieldKind::Rationals => {
                if self.is_zero() {
                    return self.clone();
                }
                let mut denom_lcm = BigInt::one();
                let mut numer_gcd = BigInt::zero();
                for (_, c) in &self.terms {
                    if let Coeff::Rat(r) = c {
                        denom_lcm = denom_lcm.lcm(r.denom());
                        numer_gcd = numer_gcd.gcd(r.numer());
                    }
                }
                if numer_gcd.is_zero() {
                    return self.clone();
                }
                let mut factor = BigRational::new(denom_lcm, numer_gcd);
                if let Some(Coeff::Rat(lead)) = self.leading_coeff() {
                    if (lead * &factor).is_negative() {
                        factor = -factor;
                    }
                }
                self.scale(&Coeff::Rat(factor))
            }
        }
    }

    /// Exact polynomial division; errors if any remainder step fails.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.assert_same_ring(divisor);
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let field = self.ring.field();
        let dm = divisor.leading_monomial().unwrap();
        let dc = divisor.leading_coeff().unwrap();
        let dc_inv = field.inv(dc)?;
        let mut rem = self.clone();
        let mut quo_terms: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            if !dm.divides(rm) {
                return Err(AlgebraError::InexactDivision(format!(
                    "term {} is not divisible",
                    self.ring.render_monomial(rm)
                )));
            }
            let qm = dm.divide_into(rm);
            let qc = field.mul(rc, &dc_inv);
            rem = rem.merge_scaled(divisor, Some(&qc), Some(&qm), true);
            quo_terms.push((qm, qc));
        }
        Ok(self.ring.from_terms(quo_terms))
    }

    /// Substitutes into a ring with `extra` variables prepended.
    pub fn prepend_vars(&self, target: &Arc<PolyRing>, extra: usize) -> Polynomial {
        debug_assert_eq!(target.nvars(), self.ring.nvars() + extra);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.prepend_vars(extra), c.clone()))
            .collect();
        target.from_terms(terms)
    }

    /// Drops `extra` leading variables (they must not occur).
    pub fn drop_leading_vars(&self, target: &Arc<PolyRing>, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.drop_leading_vars(extra), c.clone()))
            .collect();
        target.from_terms(terms)
    }

    /// Reinterprets in a ring with extra trailing variables appended.
    pub fn append_vars(&self, target: &Arc<PolyRing>) -> Polynomial {
        let extra = target.nvars() - self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.append_vars(extra), c.clone()))
            .collect();
        target.from_terms(terms)
    }

    /// Re-sorts the terms for a sibling ring (same variables, any order).
    pub fn convert_order(&self, target: &Arc<PolyRing>) -> Polynomial {
        debug_assert_eq!(target.nvars(), self.ring.nvars());
        target.from_terms(self.terms.clone())
    }

    /// True if no variable with index < k occurs.
    pub fn avoids_leading_vars(&self, k: usize) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.exps()[..k].iter().all(|e| *e == 0))
    }
}

impl PolyRing {
    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            // Negative rendering only happens over Q; F_p residues are
            // canonical non-negative integers.
            let (neg, mag) = match c {
                Coeff::Rat(r) if r.is_negative() => (true, Coeff::Rat(-r)),
                other => (false, other.clone()),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mon = self.ring.render_monomial(m);
            if m.is_one() {
                out.push_str(&mag.render());
            } else if mag.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&mag.render());
                out.push('*');
                out.push_str(&mon);
            }
        }
        write!(f, "{out}")
    }
}
