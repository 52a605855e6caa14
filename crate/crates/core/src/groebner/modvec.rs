//! Free modules over a polynomial ring and their element vectors.
//!
//! Module terms are pairs (position, monomial) compared position-over-term:
//! a lower position always dominates, with the ring's monomial order breaking
//! ties inside a position. Leading terms are therefore cheap: the first
//! nonzero component's leading monomial.

use crate::algebra::field::Coeff;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::{PolyRing, Polynomial};
use crate::error::{AlgebraError, Result};
use std::sync::Arc;

/// A graded free module R(-d_1) + ... + R(-d_r); `degrees` are the generator
/// degrees (so the unit vector e_i is homogeneous of degree d_i).
#[derive(Debug, Clone)]
pub struct FreeModule {
    ring: Arc<PolyRing>,
    degrees: Arc<Vec<i64>>,
}

impl PartialEq for FreeModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.degrees == other.degrees
    }
}
impl Eq for FreeModule {}

impl FreeModule {
    pub fn new(ring: Arc<PolyRing>, degrees: Vec<i64>) -> FreeModule {
        FreeModule {
            ring,
            degrees: Arc::new(degrees),
        }
    }

    pub fn ungraded(ring: Arc<PolyRing>, rank: usize) -> FreeModule {
        FreeModule::new(ring, vec![0; rank])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn zero_vec(&self) -> ModVec {
        ModVec {
            comps: vec![self.ring.zero(); self.rank()],
        }
    }

    pub fn unit(&self, i: usize) -> ModVec {
        let mut v = self.zero_vec();
        v.comps[i] = self.ring.one();
        v
    }

    pub fn from_comps(&self, comps: Vec<Polynomial>) -> ModVec {
        debug_assert_eq!(comps.len(), self.rank());
        ModVec { comps }
    }

    /// Degree of a homogeneous vector, or an error naming the offending
    /// component. The zero vector has no degree and returns Ok(None).
    pub fn homogeneous_degree(&self, v: &ModVec) -> Result<Option<i64>> {
        let mut deg: Option<i64> = None;
        for (i, c) in v.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(format!(
                    "component {i} is not homogeneous"
                )));
            }
            let d = c.degree().unwrap() + self.degrees[i];
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 == d => {}
                Some(d0) => {
                    return Err(AlgebraError::NotHomogeneous(format!(
                        "component {i} has degree {d}, expected {d0}"
                    )))
                }
            }
        }
        Ok(deg)
    }

    /// Builds the free module for an augmented syzygy computation: this
    /// module's positions first, then one tracking position per generator.
    pub fn augment(&self, gen_degrees: Vec<i64>) -> FreeModule {
        let mut degrees = (*self.degrees).clone();
        degrees.extend(gen_degrees);
        FreeModule::new(self.ring.clone(), degrees)
    }
}

/// An element of a free module: one polynomial per position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModVec {
    comps: Vec<Polynomial>,
}

impl ModVec {
    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn into_comps(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Position of the leading (position-over-term) term.
    pub fn lead_position(&self) -> Option<usize> {
        self.comps.iter().position(|c| !c.is_zero())
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.lead_position()
            .and_then(|p| self.comps[p].leading_monomial())
    }

    pub fn lead_coeff(&self) -> Option<&Coeff> {
        self.lead_position()
            .and_then(|p| self.comps[p].leading_coeff())
    }

    /// True when every component with index < split is zero.
    pub fn vanishes_before(&self, split: usize) -> bool {
        self.comps[..split].iter().all(|c| c.is_zero())
    }

    /// self + sign * c * m * other, componentwise.
    pub fn merge_scaled(
        &self,
        other: &ModVec,
        c: Option<&Coeff>,
        m: Option<&Monomial>,
        negate: bool,
    ) -> ModVec {
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| {
                if b.is_zero() {
                    a.clone()
                } else {
                    a.merge_scaled(b, c, m, negate)
                }
            })
            .collect();
        ModVec { comps }
    }

    pub fn add(&self, other: &ModVec) -> ModVec {
        self.merge_scaled(other, None, None, false)
    }

    pub fn sub(&self, other: &ModVec) -> ModVec {
        self.merge_scaled(other, None, None, true)
    }

    pub fn scale(&self, c: &Coeff) -> ModVec {
        ModVec {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> ModVec {
        ModVec {
            comps: self.comps.iter().map(|p| p.mul(f)).collect(),
        }
    }

    /// Scales by a unit so the vector is in canonical form: monic lead over
    /// F_p; over Q, integer coprime coefficients with positive lead.
    pub fn unit_normalize(&self) -> ModVec {
        match self.lead_position() {
            None => self.clone(),
            Some(p) => {
                let ring = self.comps[p].ring().clone();
                match ring.field() {
                    crate::algebra::field::FieldKind::Prime(_) => {
                        let lc = self.comps[p].leading_coeff().unwrap().clone();
                        if lc.is_one() {
                            self.clone()
                        } else {
                            let inv = ring.field().inv(&lc).unwrap();
                            self.scale(&inv)
                        }
                    }
                    crate::algebra::field::FieldKind::Rationals => {
                        // Normalize using all components so every entry stays
                        // an integer polynomial.
                        use num::bigint::BigInt;
                        use num::rational::BigRational;
                        use num::{Integer, One, Signed, Zero};
                        let mut denom_lcm = BigInt::one();
                        let mut numer_gcd = BigInt::zero();
                        for comp in &self.comps {
                            for (_, c) in comp.terms() {
                                if let Coeff::Rat(r) = c {
                                    denom_lcm = denom_lcm.lcm(r.denom());
                                    numer_gcd = numer_gcd.gcd(r.numer());
                                }
                            }
                        }
                        if numer_gcd.is_zero() {
                            return self.clone();
                        }
                        let mut factor = BigRational::new(denom_lcm, numer_gcd);
                        if let Some(Coeff::Rat(lead)) = self.comps[p].leading_coeff() {
                            if (lead * &factor).is_negative() {
                                factor = -factor;
                            }
                        }
                        self.scale(&Coeff::Rat(factor))
                    }
                }
            }
        }
    }

    /// Makes the leading coefficient exactly 1.
    pub fn monic(&self) -> ModVec {
        match self.lead_position() {
            None => self.clone(),
            Some(p) => {
                let lc = self.comps[p].leading_coeff().unwrap().clone();
                if lc.is_one() {
                    self.clone()
                } else {
                    let ring = self.comps[p].ring().clone();
                    let inv = ring.field().inv(&lc).unwrap();
                    self.scale(&inv)
                }
            }
        }
    }

    /// Extracts components [from, to) as a vector of the given free module.
    pub fn slice(&self, from: usize, to: usize) -> ModVec {
        ModVec {
            comps: self.comps[from..to].to_vec(),
        }
    }

    /// Sugar degree: an upper bound for the degree carried through
    /// reductions; for homogeneous input it is the exact degree.
    pub fn sugar(&self, fm: &FreeModule) -> i64 {
        self.comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c.degree().unwrap() + fm.degrees()[i])
            .max()
            .unwrap_or(0)
    }
}
