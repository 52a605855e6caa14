//! Finitely presented graded modules over a quotient ring R = S/I.
//!
//! A module is stored as a presentation: generator degrees plus homogeneous
//! relation columns (entries in normal form mod I). Minimal presentations,
//! Hilbert series and a degreewise dimension oracle live here; resolutions
//! and derived functors build on top.

use crate::algebra::{Coeff, FieldKind, Monomial, Polynomial};
use crate::error::{AlgebraError, Result};
use crate::groebner::{canonical_sort, submodule_contains, FreeModule, GbState, ModVec};
use crate::homalg::hilbert::HilbertSeries;
use crate::homalg::quotient::QuotientRing;
use crate::homalg::resolution::Resolution;
use std::fmt;
use std::sync::{Arc, Mutex};

struct FpmInner {
    ring: QuotientRing,
    gen_degrees: Vec<i64>,
    relations: Vec<ModVec>,
    known_minimal: bool,
    caches: Mutex<FpmCaches>,
}

#[derive(Default)]
struct FpmCaches {
    minimal: Option<(FPModule, Vec<ModVec>)>,
    resolution: Option<Resolution>,
    ambient_resolution: Option<Resolution>,
    hilbert: Option<HilbertSeries>,
    depth: Option<usize>,
}

/// A finitely presented graded module over a [`QuotientRing`].
#[derive(Clone)]
pub struct FPModule {
    inner: Arc<FpmInner>,
}

impl FPModule {
    /// Builds the cokernel of the relation matrix whose columns are given as
    /// component lists over the generators. Entries are reduced mod I and
    /// columns must be homogeneous for the generator degrees.
    pub fn new(
        ring: QuotientRing,
        gen_degrees: Vec<i64>,
        relations: Vec<Vec<Polynomial>>,
    ) -> Result<FPModule> {
        let fm = FreeModule::new(ring.ambient().clone(), gen_degrees.clone());
        let mut cols: Vec<ModVec> = Vec::with_capacity(relations.len());
        for col in relations {
            if col.len() != gen_degrees.len() {
                return Err(AlgebraError::ModuleShape(format!(
                    "relation column has {} entries for {} generators",
                    col.len(),
                    gen_degrees.len()
                )));
            }
            let nf: Vec<Polynomial> = col.iter().map(|p| ring.normal_form(p)).collect();
            let v = fm.from_comps(nf);
            fm.homogeneous_degree(&v)?;
            if !v.is_zero() {
                cols.push(v);
            }
        }
        canonical_sort(&mut cols);
        cols.dedup();
        Ok(FPModule {
            inner: Arc::new(FpmInner {
                ring,
                gen_degrees,
                relations: cols,
                known_minimal: false,
                caches: Mutex::new(FpmCaches::default()),
            }),
        })
    }

    /// Like [`FPModule::new`] but takes ready-made relation vectors.
    pub fn from_modvecs(
        ring: QuotientRing,
        gen_degrees: Vec<i64>,
        relations: Vec<ModVec>,
    ) -> Result<FPModule> {
        let cols = relations
            .into_iter()
            .map(|v| v.into_comps())
            .collect::<Vec<_>>();
        FPModule::new(ring, gen_degrees, cols)
    }

    /// Wraps parts already known to form a minimal presentation (generators
    /// irredundant, relations minimally generated, entries in normal form).
    pub(crate) fn from_minimal_parts(
        ring: QuotientRing,
        gen_degrees: Vec<i64>,
        relations: Vec<ModVec>,
    ) -> FPModule {
        FPModule {
            inner: Arc::new(FpmInner {
                ring,
                gen_degrees,
                relations,
                known_minimal: true,
                caches: Mutex::new(FpmCaches::default()),
            }),
        }
    }

    /// The zero module.
    pub fn zero(ring: QuotientRing) -> FPModule {
        FPModule::from_minimal_parts(ring, Vec::new(), Vec::new())
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.inner.ring
    }

    pub fn gen_degrees(&self) -> &[i64] {
        &self.inner.gen_degrees
    }

    pub fn relations(&self) -> &[ModVec] {
        &self.inner.relations
    }

    /// Number of generators in this (not necessarily minimal) presentation.
    pub fn presented_gens(&self) -> usize {
        self.inner.gen_degrees.len()
    }

    /// Free module on the presentation generators.
    pub fn free(&self) -> FreeModule {
        FreeModule::new(
            self.inner.ring.ambient().clone(),
            self.inner.gen_degrees.clone(),
        )
    }

    /// Defining-ideal multiples of the unit vectors: the background
    /// submodule I * F for the free module `fm`.
    pub fn ideal_blocks(ring: &QuotientRing, fm: &FreeModule) -> Vec<ModVec> {
        let gb = ring.defining_ideal().groebner_basis();
        let mut out = Vec::with_capacity(gb.len() * fm.rank());
        for f in gb.iter() {
            for j in 0..fm.rank() {
                out.push(fm.unit(j).mul_poly(f));
            }
        }
        out
    }

    pub fn background(&self) -> Vec<ModVec> {
        FPModule::ideal_blocks(&self.inner.ring, &self.free())
    }

    /// Relations plus background; the full submodule presented against.
    pub fn relations_with_background(&self) -> Vec<ModVec> {
        let mut all = self.inner.relations.clone();
        all.extend(self.background());
        all
    }

    /// Does the free-module vector `v` represent zero in the module?
    pub fn element_is_zero(&self, v: &ModVec) -> bool {
        if v.is_zero() {
            return true;
        }
        submodule_contains(&self.free(), &self.inner.relations, &self.background(), v)
    }

    /// Number of minimal generators (the zeroth Betti number).
    pub fn beta0(&self) -> usize {
        self.minimal().presented_gens()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.gen_degrees.is_empty() || self.beta0() == 0
    }

    /// Regrades the module by adding `e` to every generator degree
    /// (the twist M(-e) in series terms: H -> t^e H).
    pub fn shift_degrees(&self, e: i64) -> FPModule {
        let degs = self
            .inner
            .gen_degrees
            .iter()
            .map(|d| d + e)
            .collect::<Vec<_>>();
        FPModule {
            inner: Arc::new(FpmInner {
                ring: self.inner.ring.clone(),
                gen_degrees: degs,
                relations: self.inner.relations.clone(),
                known_minimal: self.inner.known_minimal,
                caches: Mutex::new(FpmCaches::default()),
            }),
        }
    }

    /// Minimal presentation (unit relation entries pivoted away, redundant
    /// relations dropped).
    pub fn minimal(&self) -> FPModule {
        self.minimal_with_map().0
    }

    /// Minimal presentation together with the expression of each original
    /// generator in the minimal generators.
    pub fn minimal_with_map(&self) -> (FPModule, Vec<ModVec>) {
        if self.inner.known_minimal {
            let fm = self.free();
            let id = (0..self.presented_gens()).map(|i| fm.unit(i)).collect();
            return (self.clone(), id);
        }
        if let Some(cached) = self.inner.caches.lock().unwrap().minimal.clone() {
            return cached;
        }
        let computed = self.compute_minimal();
        self.inner.caches.lock().unwrap().minimal = Some(computed.clone());
        computed
    }

    fn compute_minimal(&self) -> (FPModule, Vec<ModVec>) {
        let ring = &self.inner.ring;
        let ambient = ring.ambient().clone();
        let old_count = self.presented_gens();
        let mut gens: Vec<i64> = self.inner.gen_degrees.clone();
        let mut cols: Vec<Vec<Polynomial>> = self
            .inner
            .relations
            .iter()
            .map(|v| v.comps().to_vec())
            .collect();
        // Expression of each original generator over the surviving ones.
        let mut map: Vec<Vec<Polynomial>> = (0..old_count)
            .map(|i| {
                let mut row = vec![ambient.zero(); old_count];
                row[i] = ambient.one();
                row
            })
            .collect();
        loop {
            let mut pivot: Option<(usize, usize, Coeff)> = None;
            'scan: for (ci, col) in cols.iter().enumerate() {
                for (ri, entry) in col.iter().enumerate() {
                    if let Some(c) = constant_value(entry) {
                        pivot = Some((ci, ri, c));
                        break 'scan;
                    }
                }
            }
            let Some((ci, ri, a)) = pivot else { break };
            let field = ambient.field();
            let inv_a = field.inv(&a).expect("pivot entry is a nonzero constant");
            let pivot_col = cols.remove(ci);
            // Eliminate generator ri from every remaining column.
            for col in cols.iter_mut() {
                if col[ri].is_zero() {
                    continue;
                }
                let factor = col[ri].scale(&inv_a);
                for j in 0..gens.len() {
                    if j == ri {
                        continue;
                    }
                    let delta = factor.mul(&pivot_col[j]);
                    col[j] = ring.normal_form(&col[j].sub(&delta));
                }
                col[ri] = ambient.zero();
            }
            // Rewrite the generator map: g_ri = -(1/a) sum_{j != ri} c_j g_j.
            for row in map.iter_mut() {
                if row[ri].is_zero() {
                    continue;
                }
                let t = row[ri].scale(&inv_a);
                for j in 0..gens.len() {
                    if j == ri {
                        continue;
                    }
                    let delta = t.mul(&pivot_col[j]);
                    row[j] = ring.normal_form(&row[j].sub(&delta));
                }
                row[ri] = ambient.zero();
            }
            gens.remove(ri);
            for col in cols.iter_mut() {
                col.remove(ri);
            }
            for row in map.iter_mut() {
                row.remove(ri);
            }
        }
        let fm = FreeModule::new(ambient.clone(), gens.clone());
        let mut rel_vecs: Vec<ModVec> = cols
            .into_iter()
            .map(|c| fm.from_comps(c))
            .filter(|v| !v.is_zero())
            .collect();
        canonical_sort(&mut rel_vecs);
        rel_vecs.dedup();
        // Keep only a minimal generating set of relations.
        let blocks = FPModule::ideal_blocks(ring, &fm);
        let keep = minimal_generator_indices(&fm, &rel_vecs, &blocks);
        let mut kept: Vec<ModVec> = keep.into_iter().map(|i| rel_vecs[i].clone()).collect();
        canonical_sort(&mut kept);
        let module = FPModule::from_minimal_parts(ring.clone(), gens, kept);
        let map_vecs = map.into_iter().map(|row| fm.from_comps(row)).collect();
        (module, map_vecs)
    }

    /// Minimal graded free resolution, extended to at least `length` steps
    /// (or to completion if it is shorter).
    pub fn resolution(&self, length: usize) -> Resolution {
        if !self.inner.known_minimal {
            return self.minimal().resolution(length);
        }
        let mut caches = self.inner.caches.lock().unwrap();
        let mut res = caches
            .resolution
            .take()
            .unwrap_or_else(|| Resolution::start(self.clone()));
        res.extend_to(length);
        caches.resolution = Some(res.clone());
        res
    }

    /// Graded Betti number beta_i.
    pub fn betti(&self, i: usize) -> usize {
        self.resolution(i).betti(i)
    }

    /// Hilbert series, computed from a finite free resolution over the
    /// ambient polynomial ring.
    pub fn hilbert_series(&self) -> HilbertSeries {
        if let Some(h) = self.inner.caches.lock().unwrap().hilbert.clone() {
            return h;
        }
        let h = self.compute_hilbert();
        self.inner.caches.lock().unwrap().hilbert = Some(h.clone());
        h
    }

    fn compute_hilbert(&self) -> HilbertSeries {
        let nvars = self.inner.ring.ambient().nvars();
        let res = self.ambient_resolution();
        let lists: Vec<Vec<i64>> = (0..=res.length())
            .map(|i| res.free(i).degrees().to_vec())
            .collect();
        HilbertSeries::from_resolution_degrees(&lists, nvars)
    }

    /// Minimal free resolution of the module over the ambient polynomial
    /// ring (the defining ideal folded into the relations). Always finite.
    pub fn ambient_resolution(&self) -> Resolution {
        if let Some(r) = self.inner.caches.lock().unwrap().ambient_resolution.clone() {
            return r;
        }
        let ambient = self.inner.ring.ambient().clone();
        let nvars = ambient.nvars();
        let poly_ring = QuotientRing::polynomial_ring(ambient);
        // Present the same module over the polynomial ring: original
        // relations plus I times each generator.
        let mut rels: Vec<Vec<Polynomial>> = self
            .inner
            .relations
            .iter()
            .map(|v| v.comps().to_vec())
            .collect();
        for b in self.background() {
            rels.push(b.into_comps());
        }
        let sm = FPModule::new(poly_ring, self.inner.gen_degrees.clone(), rels)
            .expect("ambient presentation is valid");
        let res = sm.resolve_to_completion(nvars + 1);
        self.inner.caches.lock().unwrap().ambient_resolution = Some(res.clone());
        res
    }

    /// Extends the resolution until it terminates; panics past `cap` steps
    /// (used over polynomial rings where Hilbert's bound applies).
    pub fn resolve_to_completion(&self, cap: usize) -> Resolution {
        let mut len = 1;
        loop {
            let res = self.resolution(len);
            if res.is_finished() {
                return res;
            }
            assert!(
                len <= cap,
                "free resolution did not terminate within {cap} steps"
            );
            len += 1;
        }
    }

    /// Krull dimension of the module (0 for the zero module).
    pub fn dim(&self) -> usize {
        self.hilbert_series().dimension()
    }

    /// Multiplicity: reduced Hilbert numerator evaluated at t = 1.
    pub fn multiplicity(&self) -> i64 {
        self.hilbert_series().multiplicity()
    }

    pub(crate) fn cached_depth(&self) -> Option<usize> {
        self.inner.caches.lock().unwrap().depth
    }

    pub(crate) fn store_depth(&self, d: usize) {
        self.inner.caches.lock().unwrap().depth = Some(d);
    }

    /// Dimension over k of the degree-d graded piece, computed directly by
    /// linear algebra on standard monomials (independent of the resolution
    /// machinery; used as an oracle in tests).
    pub fn dim_k_at_degree(&self, d: i64) -> usize {
        let ring = &self.inner.ring;
        let ambient = ring.ambient().clone();
        let nvars = ambient.nvars();
        let lead_terms: Vec<Monomial> = ring
            .defining_ideal()
            .groebner_basis()
            .iter()
            .map(|g| g.leading_monomial().expect("GB elements nonzero").clone())
            .collect();
        // Standard-monomial basis of (R)^gens in degree d.
        let mut basis: Vec<(usize, Monomial)> = Vec::new();
        for (i, gd) in self.inner.gen_degrees.iter().enumerate() {
            let need = d - gd;
            if need < 0 {
                continue;
            }
            for m in monomials_of_degree(nvars, need as u32) {
                let mono = Monomial::new(m);
                if lead_terms.iter().any(|lt| lt.divides(&mono)) {
                    continue;
                }
                basis.push((i, mono));
            }
        }
        if basis.is_empty() {
            return 0;
        }
        let index_of = |pos: usize, m: &Monomial| -> Option<usize> {
            basis.iter().position(|(p, bm)| *p == pos && bm == m)
        };
        // Span of the relations in degree d.
        let fm = self.free();
        let field = ambient.field();
        let mut rows: Vec<Vec<Coeff>> = Vec::new();
        for rel in &self.inner.relations {
            let delta = fm
                .homogeneous_degree(rel)
                .expect("relations are homogeneous")
                .expect("relations are nonzero");
            let need = d - delta;
            if need < 0 {
                continue;
            }
            for m in monomials_of_degree(nvars, need as u32) {
                let mono = Monomial::new(m);
                let prod = rel.mul_poly(&ambient.monomial_poly(mono));
                let mut row = vec![field.zero(); basis.len()];
                let mut nonzero = false;
                for (pos, comp) in prod.comps().iter().enumerate() {
                    let nf = ring.normal_form(comp);
                    for (mm, cc) in nf.terms() {
                        let idx = index_of(pos, mm)
                            .expect("normal form is supported on standard monomials");
                        row[idx] = field.add(&row[idx], cc);
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        basis.len() - row_rank(&field, rows)
    }
}

impl fmt::Debug for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FPModule(gens {:?}, {} relations)",
            self.inner.gen_degrees,
            self.inner.relations.len()
        )
    }
}

/// Returns Some(c) when the polynomial is a nonzero constant.
pub(crate) fn constant_value(p: &Polynomial) -> Option<Coeff> {
    let terms = p.terms();
    if terms.len() == 1 && terms[0].0.total_degree() == 0 {
        Some(terms[0].1.clone())
    } else {
        None
    }
}

/// Indices of a minimal generating subset of `cands` in F/(background),
/// chosen greedily in increasing degree (ties by input position).
pub fn minimal_generator_indices(
    fm: &FreeModule,
    cands: &[ModVec],
    background: &[ModVec],
) -> Vec<usize> {
    let mut order: Vec<usize> = (0..cands.len()).filter(|&i| !cands[i].is_zero()).collect();
    let degree_of = |v: &ModVec| -> i64 {
        match fm.homogeneous_degree(v) {
            Ok(Some(d)) => d,
            _ => v.sugar(fm),
        }
    };
    order.sort_by_key(|&i| (degree_of(&cands[i]), i));
    let mut st = GbState::new(fm.clone(), fm.rank());
    for b in background {
        st.add(b.clone());
    }
    st.complete();
    let mut kept = Vec::new();
    for i in order {
        if st.normal_form(&cands[i]).is_zero() {
            continue;
        }
        kept.push(i);
        st.add(cands[i].clone());
        st.complete();
    }
    kept.sort_unstable();
    kept
}

/// All exponent vectors of total degree `d` in `n` variables.
pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(cur, pos + 1, left - e, out);
        }
        cur[pos] = 0;
    }
    rec(&mut cur, 0, d, &mut out);
    out
}

/// Rank of a dense coefficient matrix by exact Gaussian elimination.
pub(crate) fn row_rank(field: &FieldKind, mut rows: Vec<Vec<Coeff>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    for col in 0..width {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = field
            .inv(&rows[rank][col].clone())
            .expect("pivot is nonzero");
        for j in col..width {
            rows[rank][j] = field.mul(&rows[rank][j], &inv);
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for j in col..width {
                let delta = field.mul(&factor, &rows[rank][j]);
                rows[r][j] = field.sub(&rows[r][j], &delta);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, MonomialOrder, PolyRing};

    fn poly_ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            FieldKind::default_prime(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn minimal_presentation_removes_unit_entries() {
        // Gens g0 (deg 0), g1 (deg 1) with relation x*g0 - g1 = 0:
        // the module is free on g0.
        let ring = poly_ring(&["x", "y"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let x = parse_polynomial(&ring, "x").unwrap();
        let minus_one = ring.constant(-1);
        let m = FPModule::new(qr, vec![0, 1], vec![vec![x, minus_one]]).unwrap();
        let (min, map) = m.minimal_with_map();
        assert_eq!(min.presented_gens(), 1);
        assert_eq!(min.gen_degrees(), &[0]);
        assert!(min.relations().is_empty());
        // g0 -> e0, g1 -> x*e0.
        assert_eq!(map[0].comp(0), &parse_polynomial(&ring, "1").unwrap());
        assert_eq!(map[1].comp(0), &parse_polynomial(&ring, "x").unwrap());
    }

    #[test]
    fn residue_field_hilbert_series() {
        let ring = poly_ring(&["x", "y", "z"]);
        let qr = QuotientRing::polynomial_ring(ring);
        let k = qr.residue_module();
        let h = k.hilbert_series();
        assert_eq!(h.dimension(), 0);
        assert_eq!(h.multiplicity(), 1);
        assert_eq!(h.value_at(0), 1);
        assert_eq!(h.value_at(1), 0);
    }

    #[test]
    fn hilbert_series_of_quotient_module() {
        // R = k[x,y]/(x^2): H_R = (1+t)/(1-t).
        let ring = poly_ring(&["x", "y"]);
        let f = parse_polynomial(&ring, "x^2").unwrap();
        let qr = QuotientRing::new(ring, vec![f]).unwrap();
        let h = qr.ring_module().hilbert_series();
        assert_eq!(h.dimension(), 1);
        assert_eq!(h.multiplicity(), 2);
        assert_eq!(h.to_string(), "(1 + t)/(1 - t)");
    }

    #[test]
    fn degree_oracle_matches_series() {
        // R = k[x,y,z]/(xy, xz), M = R itself.
        let ring = poly_ring(&["x", "y", "z"]);
        let gens = vec![
            parse_polynomial(&ring, "x*y").unwrap(),
            parse_polynomial(&ring, "x*z").unwrap(),
        ];
        let qr = QuotientRing::new(ring, gens).unwrap();
        let m = qr.ring_module();
        let h = m.hilbert_series();
        for d in 0..6 {
            assert_eq!(
                m.dim_k_at_degree(d) as i64,
                h.value_at(d),
                "degree {d} mismatch"
            );
        }
    }

    #[test]
    fn degree_oracle_on_module_with_relations() {
        // M = coker [x y; z w] over k[x,y,z,w] (generic 2x2 presentation).
        let ring = poly_ring(&["x", "y", "z", "w"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let rel1 = vec![
            parse_polynomial(&ring, "x").unwrap(),
            parse_polynomial(&ring, "z").unwrap(),
        ];
        let rel2 = vec![
            parse_polynomial(&ring, "y").unwrap(),
            parse_polynomial(&ring, "w").unwrap(),
        ];
        let m = FPModule::new(qr, vec![0, 0], vec![rel1, rel2]).unwrap();
        let h = m.hilbert_series();
        for d in 0..5 {
            assert_eq!(m.dim_k_at_degree(d) as i64, h.value_at(d));
        }
    }

    #[test]
    fn minimal_generators_greedy() {
        // Candidates x*e0, e0, y*e0: only e0 survives.
        let ring = poly_ring(&["x", "y"]);
        let fm = FreeModule::new(ring.clone(), vec![0]);
        let x = fm.unit(0).mul_poly(&parse_polynomial(&ring, "x").unwrap());
        let e = fm.unit(0);
        let y = fm.unit(0).mul_poly(&parse_polynomial(&ring, "y").unwrap());
        let kept = minimal_generator_indices(&fm, &[x, e, y], &[]);
        assert_eq!(kept, vec![1]);
    }

    #[test]
    fn zero_module_detection() {
        let ring = poly_ring(&["x"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let one = ring.one();
        let m = FPModule::new(qr, vec![0], vec![vec![one]]).unwrap();
        assert!(m.is_zero());
        assert!(m.hilbert_series().is_zero());
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 2).len(), 0);
    }

    #[test]
    fn row_rank_exact() {
        let field = FieldKind::default_prime();
        let c = |n: i128| field.from_i128(n);
        // Row 2 = 2 * row 1; row 3 independent.
        let rows = vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(0), c(1), c(1)],
        ];
        assert_eq!(row_rank(&field, rows), 2);
        let rows = vec![vec![c(0), c(0)], vec![c(0), c(0)]];
        assert_eq!(row_rank(&field, rows), 0);
    }
}
