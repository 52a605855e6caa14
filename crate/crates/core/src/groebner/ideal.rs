//! Ideals with cached reduced Groebner bases and the classical operations:
//! sum, product, power, intersection (tag-variable elimination), colon, and
//! variable elimination.

use crate::algebra::monomial::MonomialOrder;
use crate::algebra::poly::{PolyRing, Polynomial};
use crate::error::{AlgebraError, Result};
use std::sync::{Arc, OnceLock};

use super::engine::{is_groebner_basis, module_groebner, reduce_by_set};
use super::modvec::{FreeModule, ModVec};

#[derive(Debug)]
struct IdealInner {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<Vec<Polynomial>>>,
}

/// A cheaply clonable handle to an ideal of a polynomial ring. The reduced
/// Groebner basis (in the ring's own order) is computed once and cached.
#[derive(Debug, Clone)]
pub struct Ideal {
    inner: Arc<IdealInner>,
}

impl PartialEq for Ideal {
    /// Mathematical equality: identical reduced Groebner bases.
    fn eq(&self, other: &Self) -> bool {
        self.ring().same_ring(other.ring()) && self.groebner_basis() == other.groebner_basis()
    }
}
impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Ideal {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(
                g.ring().same_ring(&ring),
                "ideal generator from a different ring"
            );
        }
        Ideal {
            inner: Arc::new(IdealInner {
                ring,
                gens,
                gb: OnceLock::new(),
            }),
        }
    }

    pub fn zero(ring: Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: Arc<PolyRing>) -> Ideal {
        let one = ring.one();
        Ideal::new(ring, vec![one])
    }

    /// The irrelevant maximal ideal (all variables).
    pub fn irrelevant(ring: &Arc<PolyRing>) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| ring.var_poly(i)).collect();
        Ideal::new(ring.clone(), gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.inner.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.inner.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inner.gens.iter().all(|g| g.is_homogeneous())
    }

    fn free_rank1(&self) -> FreeModule {
        FreeModule::ungraded(self.inner.ring.clone(), 1)
    }

    fn wrap(&self, f: &Polynomial) -> ModVec {
        self.free_rank1().from_comps(vec![f.clone()])
    }

    /// Reduced Groebner basis in the ring's monomial order (cached).
    pub fn groebner_basis(&self) -> Arc<Vec<Polynomial>> {
        self.inner
            .gb
            .get_or_init(|| {
                let fm = self.free_rank1();
                let gens: Vec<ModVec> = self.inner.gens.iter().map(|g| self.wrap(g)).collect();
                let gb = module_groebner(&fm, &gens);
                Arc::new(
                    gb.into_iter()
                        .map(|v| v.into_comps().pop().unwrap())
                        .collect(),
                )
            })
            .clone()
    }

    /// Full normal form against the cached reduced basis: the canonical
    /// representative of f + I.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let gb = self.groebner_basis();
        if gb.is_empty() {
            return f.clone();
        }
        let fm = self.free_rank1();
        let set: Vec<ModVec> = gb.iter().map(|g| self.wrap(g)).collect();
        reduce_by_set(&fm, &self.wrap(f), &set)
            .into_comps()
            .pop()
            .unwrap()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    pub fn is_zero(&self) -> bool {
        self.groebner_basis().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner_basis();
        gb.len() == 1 && gb[0].is_one()
    }

    /// Verifies the Buchberger criterion on the cached basis (every S-pair
    /// reduces to zero), with no pruning shortcuts.
    pub fn verify_groebner(&self) -> bool {
        let gb = self.groebner_basis();
        let fm = self.free_rank1();
        let set: Vec<ModVec> = gb.iter().map(|g| self.wrap(g)).collect();
        is_groebner_basis(&fm, &set)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert!(self.ring().same_ring(other.ring()));
        let mut gens = self.inner.gens.clone();
        gens.extend(other.inner.gens.iter().cloned());
        Ideal::new(self.inner.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert!(self.ring().same_ring(other.ring()));
        let mut gens = Vec::new();
        for a in &self.inner.gens {
            for b in &other.inner.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(self.inner.ring.clone(), gens)
    }

    /// I^k, with I^0 the unit ideal.
    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(self.inner.ring.clone());
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Intersection via the tag-variable trick: eliminate t from
    /// t*I + (1-t)*J.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        assert!(self.ring().same_ring(other.ring()));
        let ring = &self.inner.ring;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(ring.clone()));
        }
        let tname = fresh_var_name(ring, "t");
        let aux = ring.with_prepended_vars(&[&tname], MonomialOrder::Eliminate(1))?;
        let t = aux.var_poly(0);
        let one_minus_t = aux.one().sub(&t);
        let mut gens: Vec<Polynomial> = Vec::new();
        for f in &self.inner.gens {
            gens.push(f.prepend_vars(&aux, 1).mul(&t));
        }
        for g in &other.inner.gens {
            gens.push(g.prepend_vars(&aux, 1).mul(&one_minus_t));
        }
        let big = Ideal::new(aux.clone(), gens);
        let gb = big.groebner_basis();
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|f| f.avoids_leading_vars(1))
            .map(|f| f.drop_leading_vars(ring, 1))
            .collect();
        Ok(Ideal::new(ring.clone(), kept))
    }

    /// (I : g) for a single element; (I : 0) is the unit ideal.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Ok(Ideal::unit(self.inner.ring.clone()));
        }
        let principal = Ideal::new(self.inner.ring.clone(), vec![g.clone()]);
        let meet = self.intersect(&principal)?;
        let gens: Result<Vec<Polynomial>> = meet
            .generators()
            .iter()
            .map(|f| f.div_exact(g))
            .collect();
        Ok(Ideal::new(self.inner.ring.clone(), gens?))
    }

    /// (I : J) = intersection over generators g of J of (I : g).
    /// A zero second argument is rejected.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        assert!(self.ring().same_ring(other.ring()));
        if other.generators().is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        let mut acc: Option<Ideal> = None;
        for g in other.generators() {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Generators of I whose terms avoid the first k variables, computed via
    /// a Groebner basis in the block elimination order. The output lives in
    /// `target`, the ring without those variables.
    pub fn eliminate_leading_vars(&self, k: usize, target: &Arc<PolyRing>) -> Result<Ideal> {
        let elim_ring = self.inner.ring.with_order(MonomialOrder::Eliminate(k));
        let moved: Vec<Polynomial> = self
            .inner
            .gens
            .iter()
            .map(|f| f.convert_order(&elim_ring))
            .collect();
        let ideal = Ideal::new(elim_ring, moved);
        let gb = ideal.groebner_basis();
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|f| f.avoids_leading_vars(k))
            .map(|f| f.drop_leading_vars(target, k))
            .collect();
        Ok(Ideal::new(target.clone(), kept))
    }

    /// Leading monomials of the reduced basis.
    pub fn leading_monomials(&self) -> Vec<crate::algebra::monomial::Monomial> {
        self.groebner_basis()
            .iter()
            .map(|f| f.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Krull dimension of R/I read off the staircase: the maximum size of a
    /// variable subset touched by no leading monomial.
    pub fn staircase_dimension(&self) -> usize {
        if self.is_unit() {
            // By convention dim of the zero ring would be -infinity; callers
            // guard this case. Return 0 to stay total.
            return 0;
        }
        let n = self.inner.ring.nvars();
        let supports: Vec<Vec<usize>> = self
            .leading_monomials()
            .iter()
            .map(|m| m.support())
            .collect();
        let mut best = 0usize;
        let mut allowed = vec![true; n];
        fn rec(supports: &[Vec<usize>], allowed: &mut Vec<bool>, count: usize, best: &mut usize) {
            // Find a violating monomial entirely inside the allowed set.
            let violator = supports
                .iter()
                .find(|s| s.iter().all(|v| allowed[*v]));
            match violator {
                None => {
                    *best = (*best).max(count);
                }
                Some(s) => {
                    if count <= *best {
                        return; // cannot beat the current best
                    }
                    for &v in s {
                        if allowed[v] {
                            allowed[v] = false;
                            rec(supports, allowed, count - 1, best);
                            allowed[v] = true;
                        }
                    }
                }
            }
        }
        rec(&supports, &mut allowed, n, &mut best);
        best
    }
}

/// A variable name based on `base` that does not collide with the ring's.
pub fn fresh_var_name(ring: &Arc<PolyRing>, base: &str) -> String {
    if ring.var_index(base).is_none() {
        return base.to_string();
    }
    let mut i = 0usize;
    loop {
        let cand = format!("{base}_{i}");
        if ring.var_index(&cand).is_none() {
            return cand;
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::FieldKind;
    use crate::algebra::parse::parse_polynomial;

    fn ring3() -> Arc<PolyRing> {
        PolyRing::new(
            FieldKind::prime(32003).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(
            ring.clone(),
            gens.iter()
                .map(|s| parse_polynomial(ring, s).unwrap())
                .collect(),
        )
    }

    #[test]
    fn groebner_criterion_holds() {
        let r = ring3();
        for gens in [
            vec!["x^2 - y", "x^3 - z"],
            vec!["x*y - z^2", "x^2 - y*z"],
            vec!["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"],
        ] {
            let i = ideal(&r, &gens);
            let gb = i.groebner_basis();
            assert!(!gb.is_empty());
            assert!(i.verify_groebner(), "criterion failed for {gens:?}");
            // Reduced GB is monic and auto-reduced.
            for f in gb.iter() {
                assert!(f.leading_coeff().unwrap().is_one());
            }
        }
    }

    #[test]
    fn membership_twisted_cubic() {
        // On x^2 = y, x^3 = z we get y^3 = x^6 = z^2.
        let r = ring3();
        let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
        let f = parse_polynomial(&r, "y^3 - z^2").unwrap();
        assert!(i.contains(&f));
        assert!(!i.contains(&parse_polynomial(&r, "y^2 - z").unwrap()));
    }

    #[test]
    fn normal_form_is_canonical() {
        let r = ring3();
        let i = ideal(&r, &["x^2 - y", "x*y - z"]);
        let f = parse_polynomial(&r, "x^3 + x*z + y").unwrap();
        let g = parse_polynomial(&r, "x^2*y + y*x^2").unwrap(); // in I-shifted coset
        let nf = i.normal_form(&f);
        // Adding ideal elements never changes the normal form.
        let shifted = f.add(&i.generators()[0].mul(&g));
        assert_eq!(i.normal_form(&shifted), nf);
        assert_eq!(i.normal_form(&nf), nf);
    }

    #[test]
    fn intersection_and_colon() {
        let r = ring3();
        let ix = ideal(&r, &["x"]);
        let iy = ideal(&r, &["y"]);
        let meet = ix.intersect(&iy).unwrap();
        assert_eq!(meet, ideal(&r, &["x*y"]));

        let i = ideal(&r, &["x*y", "x*z"]);
        let c = i
            .colon_poly(&parse_polynomial(&r, "x").unwrap())
            .unwrap();
        assert_eq!(c, ideal(&r, &["y", "z"]));

        let j = ideal(&r, &["x"]);
        assert_eq!(i.colon(&j).unwrap(), ideal(&r, &["y", "z"]));
        assert!(i.colon(&Ideal::zero(r.clone())).is_err());
    }

    #[test]
    fn elimination_projects_curves() {
        // Eliminate t from (t^2 - x, t^3 - y): the image is the cuspidal
        // cubic x^3 = y^2.
        let base = PolyRing::new(
            FieldKind::prime(32003).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let big = base
            .with_prepended_vars(&["t"], MonomialOrder::Eliminate(1))
            .unwrap();
        let gens = vec![
            parse_polynomial(&big, "t^2 - x").unwrap(),
            parse_polynomial(&big, "t^3 - y").unwrap(),
        ];
        let i = Ideal::new(big, gens);
        let projected = i.eliminate_leading_vars(1, &base).unwrap();
        assert_eq!(projected, ideal(&base, &["x^3 - y^2"]));
    }

    #[test]
    fn ideal_power_and_equality() {
        let r = ring3();
        let m = ideal(&r, &["x", "y"]);
        let m2 = m.power(2);
        assert_eq!(m2, ideal(&r, &["x^2", "x*y", "y^2"]));
        assert_eq!(m.power(0), Ideal::unit(r.clone()));
        assert!(m2 != m);
    }

    #[test]
    fn staircase_dimension_examples() {
        let r = ring3();
        assert_eq!(Ideal::zero(r.clone()).staircase_dimension(), 3);
        assert_eq!(ideal(&r, &["x"]).staircase_dimension(), 2);
        assert_eq!(ideal(&r, &["x*y"]).staircase_dimension(), 2);
        assert_eq!(ideal(&r, &["x", "y", "z"]).staircase_dimension(), 0);
        // Hypersurface x*y - z^2: dimension 2.
        assert_eq!(ideal(&r, &["x*y - z^2"]).staircase_dimension(), 2);
    }

    #[test]
    fn determinism_across_runs() {
        let r = ring3();
        let a = ideal(&r, &["x*y - z^2", "x^2 - y*z", "y^2 - x*z"]);
        let b = ideal(&r, &["x*y - z^2", "x^2 - y*z", "y^2 - x*z"]);
        assert_eq!(a.groebner_basis(), b.groebner_basis());
    }
}
