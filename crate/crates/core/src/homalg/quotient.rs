//! Graded quotient rings R = S/I of a polynomial ring by a homogeneous
//! ideal, with cached invariants (dimension, Hilbert series, depth) and
//! ideal arithmetic performed inside R.

use crate::algebra::{FieldKind, PolyRing, Polynomial};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::homalg::fpmodule::FPModule;
use crate::homalg::hilbert::HilbertSeries;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

struct QrInner {
    ambient: Arc<PolyRing>,
    ideal: Ideal,
    hilbert: OnceLock<HilbertSeries>,
    dim: OnceLock<usize>,
    depth: OnceLock<usize>,
    residue: OnceLock<FPModule>,
    ring_module: OnceLock<FPModule>,
    gorenstein: Mutex<Option<bool>>,
}

/// A graded quotient of a polynomial ring by a homogeneous ideal.
#[derive(Clone)]
pub struct QuotientRing {
    inner: Arc<QrInner>,
}

impl QuotientRing {
    /// Quotient by the ideal generated by `gens` (all homogeneous, not the
    /// unit ideal).
    pub fn new(ambient: Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<QuotientRing> {
        for g in &gens {
            if !g.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(format!(
                    "defining ideal generator `{g}` is not homogeneous"
                )));
            }
        }
        let ideal = Ideal::new(ambient.clone(), gens);
        if ideal.is_unit() {
            return Err(AlgebraError::Parameter(
                "defining ideal is the unit ideal; the quotient ring is zero".into(),
            ));
        }
        Ok(QuotientRing {
            inner: Arc::new(QrInner {
                ambient,
                ideal,
                hilbert: OnceLock::new(),
                dim: OnceLock::new(),
                depth: OnceLock::new(),
                residue: OnceLock::new(),
                ring_module: OnceLock::new(),
                gorenstein: Mutex::new(None),
            }),
        })
    }

    /// The polynomial ring itself (zero defining ideal).
    pub fn polynomial_ring(ambient: Arc<PolyRing>) -> QuotientRing {
        QuotientRing::new(ambient.clone(), Vec::new()).expect("zero ideal is always proper")
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.inner.ambient
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.inner.ideal
    }

    pub fn field(&self) -> FieldKind {
        self.inner.ambient.field()
    }

    pub fn nvars(&self) -> usize {
        self.inner.ambient.nvars()
    }

    /// Structural identity: same ambient ring and equal defining ideals.
    pub fn same_ring(&self, other: &QuotientRing) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        self.inner.ambient == other.inner.ambient && self.inner.ideal == other.inner.ideal
    }

    /// Canonical representative of the residue class of `f`.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.inner.ideal.normal_form(f)
    }

    pub fn is_zero_element(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn mul_nf(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.normal_form(&a.mul(b))
    }

    /// True when R is the base field (no variables survive).
    pub fn is_base_field(&self) -> bool {
        self.nvars() == 0 || self.inner.ideal == Ideal::irrelevant(&self.inner.ambient)
    }

    /// Krull dimension, computed combinatorially from the staircase and
    /// cross-checked against the pole order of the Hilbert series.
    pub fn dim(&self) -> usize {
        *self.inner.dim.get_or_init(|| {
            let stair = self.inner.ideal.staircase_dimension();
            let pole = self.hilbert_series().dimension();
            assert_eq!(
                stair, pole,
                "staircase dimension and Hilbert pole order disagree"
            );
            stair
        })
    }

    /// Hilbert series of R as a module over itself.
    pub fn hilbert_series(&self) -> HilbertSeries {
        self.inner
            .hilbert
            .get_or_init(|| self.ring_module().hilbert_series())
            .clone()
    }

    pub fn multiplicity(&self) -> i64 {
        self.hilbert_series().multiplicity()
    }

    /// Depth of R (graded): first i with Ext^i(k, R) nonzero.
    pub fn depth(&self) -> usize {
        *self.inner.depth.get_or_init(|| {
            crate::homalg::functors::depth(&self.ring_module())
                .expect("depth of a nonzero ring is always defined")
        })
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth() == self.dim()
    }

    /// Gorenstein test: Cohen-Macaulay of type 1, read off the last Betti
    /// number of the minimal resolution over the ambient polynomial ring.
    pub fn is_gorenstein(&self) -> bool {
        if let Some(v) = *self.inner.gorenstein.lock().unwrap() {
            return v;
        }
        let v = self.is_cohen_macaulay()
            && crate::homalg::functors::cm_type(&self.ring_module())
                .expect("type of a CM ring is defined")
                == 1;
        *self.inner.gorenstein.lock().unwrap() = Some(v);
        v
    }

    /// The residue field k = R/m as an R-module.
    pub fn residue_module(&self) -> FPModule {
        self.inner
            .residue
            .get_or_init(|| {
                let ring = self.inner.ambient.clone();
                let mut rels: Vec<Vec<Polynomial>> = Vec::new();
                for v in 0..ring.nvars() {
                    let x = ring.var_poly(v);
                    if !self.is_zero_element(&x) {
                        rels.push(vec![x]);
                    }
                }
                FPModule::new(self.clone(), vec![0], rels)
                    .expect("residue field presentation is valid")
            })
            .clone()
    }

    /// R as a module over itself.
    pub fn ring_module(&self) -> FPModule {
        self.inner
            .ring_module
            .get_or_init(|| {
                FPModule::new(self.clone(), vec![0], Vec::new())
                    .expect("free presentation of R is valid")
            })
            .clone()
    }

    /// Cyclic module R/a for an ideal a of R given by ambient
    /// representatives.
    pub fn cyclic_module(&self, gens: Vec<Polynomial>) -> Result<FPModule> {
        let rels = gens
            .into_iter()
            .map(|g| vec![g])
            .collect::<Vec<Vec<Polynomial>>>();
        FPModule::new(self.clone(), vec![0], rels)
    }

    /// The irrelevant maximal ideal of R, as an ambient ideal containing I.
    pub fn maximal_ideal(&self) -> Ideal {
        let mut gens: Vec<Polynomial> = (0..self.nvars())
            .map(|v| self.inner.ambient.var_poly(v))
            .collect();
        gens.extend(self.inner.ideal.generators().iter().cloned());
        Ideal::new(self.inner.ambient.clone(), gens)
    }

    /// Lifts an ideal of R (given by representatives) to the ambient ideal
    /// containing I.
    pub fn lift_ideal(&self, gens: &[Polynomial]) -> Ideal {
        let mut all: Vec<Polynomial> = gens.to_vec();
        all.extend(self.inner.ideal.generators().iter().cloned());
        Ideal::new(self.inner.ambient.clone(), all)
    }

    /// Equality of ideals of R given by ambient representatives.
    pub fn ideals_equal(&self, a: &[Polynomial], b: &[Polynomial]) -> bool {
        self.lift_ideal(a) == self.lift_ideal(b)
    }

    /// Ideal quotient (a :_R b), returned as ambient representatives in
    /// normal form (defining-ideal generators filtered out).
    pub fn colon(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let lifted_a = self.lift_ideal(a);
        let b_nonzero: Vec<Polynomial> = b
            .iter()
            .filter(|g| !self.is_zero_element(g))
            .cloned()
            .collect();
        if b_nonzero.is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        let q = lifted_a.colon(&Ideal::new(self.inner.ambient.clone(), b_nonzero))?;
        Ok(self.residue_generators(&q))
    }

    /// Intersection of two ideals of R, as ambient representatives.
    pub fn intersect(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let q = self.lift_ideal(a).intersect(&self.lift_ideal(b))?;
        Ok(self.residue_generators(&q))
    }

    /// Drops an ambient ideal containing I to representatives of its image
    /// in R: normal forms of a Groebner basis, zeros removed.
    pub fn residue_generators(&self, ambient_ideal: &Ideal) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in ambient_ideal.groebner_basis().iter() {
            let nf = self.normal_form(g);
            if !nf.is_zero() {
                out.push(nf);
            }
        }
        out
    }

    /// Annihilator of an element: (0 :_R f).
    pub fn element_annihilator(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        self.colon(&[], std::slice::from_ref(f))
    }

    /// Tests whether `f` is a nonzerodivisor on R.
    pub fn is_nonzerodivisor(&self, f: &Polynomial) -> Result<bool> {
        if self.is_zero_element(f) {
            return Ok(false);
        }
        Ok(self.element_annihilator(f)?.is_empty())
    }
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .inner
            .ideal
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        write!(
            f,
            "QuotientRing({} vars / ({}))",
            self.nvars(),
            gens.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, MonomialOrder};

    fn ring3() -> Arc<PolyRing> {
        PolyRing::new(
                FieldKind::default_prime(),
                vec!["x".into(), "y".into(), "z".into()],
                MonomialOrder::GrevLex,
            )
            .unwrap()
    }

    #[test]
    fn polynomial_ring_invariants() {
        let r = QuotientRing::polynomial_ring(ring3());
        assert_eq!(r.dim(), 3);
        assert_eq!(r.multiplicity(), 1);
        assert!(!r.is_base_field());
        assert_eq!(r.hilbert_series().to_string(), "(1)/(1 - t)^3");
    }

    #[test]
    fn hypersurface_quotient() {
        let ring = ring3();
        let f = parse_polynomial(&ring, "x^2 - y*z").unwrap();
        let r = QuotientRing::new(ring.clone(), vec![f]).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.multiplicity(), 2);
        let nf = r.normal_form(&parse_polynomial(&ring, "x^2").unwrap());
        assert_eq!(nf, parse_polynomial(&ring, "y*z").unwrap());
        assert!(r.is_zero_element(&parse_polynomial(&ring, "x^2 - y*z").unwrap()));
    }

    #[test]
    fn unit_ideal_rejected() {
        let ring = ring3();
        let one = ring.one();
        assert!(QuotientRing::new(ring, vec![one]).is_err());
    }

    #[test]
    fn inhomogeneous_rejected() {
        let ring = ring3();
        let f = parse_polynomial(&ring, "x^2 - y").unwrap();
        assert!(QuotientRing::new(ring, vec![f]).is_err());
    }

    #[test]
    fn colon_and_nzd_in_quotient() {
        // R = k[x,y]/(xy): x is a zerodivisor, x + y is not.
        let ring = PolyRing::new(
                FieldKind::default_prime(),
                vec!["x".into(), "y".into()],
                MonomialOrder::GrevLex,
            )
            .unwrap();
        let xy = parse_polynomial(&ring, "x*y").unwrap();
        let r = QuotientRing::new(ring.clone(), vec![xy]).unwrap();
        let x = parse_polynomial(&ring, "x").unwrap();
        let xpy = parse_polynomial(&ring, "x + y").unwrap();
        assert!(!r.is_nonzerodivisor(&x).unwrap());
        assert!(r.is_nonzerodivisor(&xpy).unwrap());
        // (0 : x) = (y) in R.
        let ann = r.element_annihilator(&x).unwrap();
        let y = parse_polynomial(&ring, "y").unwrap();
        assert!(r.ideals_equal(&ann, std::slice::from_ref(&y)));
    }

    #[test]
    fn ideal_arithmetic_in_quotient() {
        let ring = ring3();
        let f = parse_polynomial(&ring, "x^2 - y*z").unwrap();
        let r = QuotientRing::new(ring.clone(), vec![f]).unwrap();
        let x = parse_polynomial(&ring, "x").unwrap();
        let y = parse_polynomial(&ring, "y").unwrap();
        // (x) cap (y) contains xy and equality via representatives holds.
        let meet = r
            .intersect(std::slice::from_ref(&x), std::slice::from_ref(&y))
            .unwrap();
        let xy = parse_polynomial(&ring, "x*y").unwrap();
        assert!(r
            .lift_ideal(&meet)
            .contains(&xy));
    }
}
