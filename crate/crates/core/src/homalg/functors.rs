//! Derived functors on finitely presented graded modules: Hom, tensor
//! products, Ext from minimal resolutions, annihilators, rank, depth, type
//! and Bass numbers.
//!
//! Hom-type modules are vectorized: a map M -> N between modules with a and
//! b presentation generators becomes a vector in R^(a*b), slot (i, j) =
//! i*b + j holding the coefficient of target generator j in the image of
//! source generator i. Slot (i, j) carries degree deg_N(j) - deg_M(i), so
//! homogeneous vectors of degree zero are exactly the degree-preserving
//! maps.

use crate::algebra::Polynomial;
use crate::error::{AlgebraError, Result};
use crate::groebner::{
    submodule_contains, syzygies_with_background, FreeModule, Ideal, ModVec,
};
use crate::homalg::fpmodule::{minimal_generator_indices, FPModule};
use crate::homalg::quotient::QuotientRing;

/// A Hom module together with its vectorized generator matrices.
pub struct HomModule {
    /// Hom(M, N) as an abstract module (minimal presentation).
    pub module: FPModule,
    /// The minimalized source M.
    pub source: FPModule,
    /// The minimalized target N.
    pub target: FPModule,
    /// Slot space R^(a*b) with the degree convention above.
    pub hom_free: FreeModule,
    /// Minimal generators of Hom(M, N) as vectors in `hom_free`; the u-th
    /// module generator corresponds to `generators[u]`.
    pub generators: Vec<ModVec>,
    /// Vectors representing the zero map (columns landing in the relation
    /// submodule of N); membership modulo these + I detects equal maps.
    pub boundary: Vec<ModVec>,
}

impl HomModule {
    pub fn source_rank(&self) -> usize {
        self.source.presented_gens()
    }

    pub fn target_rank(&self) -> usize {
        self.target.presented_gens()
    }

    pub fn slot(&self, i: usize, j: usize) -> usize {
        i * self.target_rank() + j
    }

    /// Entry (i, j) of a vectorized map: coefficient of target generator j
    /// in the image of source generator i.
    pub fn entry<'a>(&self, mat: &'a ModVec, i: usize, j: usize) -> &'a Polynomial {
        mat.comp(self.slot(i, j))
    }

    /// Does the vector represent the zero homomorphism?
    pub fn is_zero_map(&self, v: &ModVec) -> bool {
        let ring = self.module.ring();
        let blocks = FPModule::ideal_blocks(ring, &self.hom_free);
        submodule_contains(&self.hom_free, &self.boundary, &blocks, v)
    }

    /// Does the single map `v` generate the whole Hom module?
    pub fn map_generates(&self, v: &ModVec) -> bool {
        let ring = self.module.ring();
        let mut bg = self.boundary.clone();
        bg.extend(FPModule::ideal_blocks(ring, &self.hom_free));
        self.generators
            .iter()
            .all(|g| submodule_contains(&self.hom_free, std::slice::from_ref(v), &bg, g))
    }
}

/// Places a vector over the inner positions into block `r` of a slot space
/// with layout (r, j) = r*inner + j.
fn place_block(fm: &FreeModule, copies: usize, inner: usize, r: usize, w: &[Polynomial]) -> ModVec {
    debug_assert_eq!(fm.rank(), copies * inner);
    debug_assert_eq!(w.len(), inner);
    let ring = fm.ring();
    let mut comps = vec![ring.zero(); fm.rank()];
    for (j, p) in w.iter().enumerate() {
        comps[r * inner + j] = p.clone();
    }
    fm.from_comps(comps)
}

/// Presents (<gens> + <boundary>) / <boundary> inside the free module `fm`
/// over R = S/I. Returns the module (minimal presentation) and the subset
/// of `gens` realizing its generators.
pub fn subquotient(
    ring: &QuotientRing,
    fm: &FreeModule,
    gens: &[ModVec],
    boundary: &[ModVec],
) -> Result<(FPModule, Vec<ModVec>)> {
    let mut bg = boundary.to_vec();
    bg.extend(FPModule::ideal_blocks(ring, fm));
    let keep = minimal_generator_indices(fm, gens, &bg);
    if keep.is_empty() {
        return Ok((FPModule::zero(ring.clone()), Vec::new()));
    }
    let kept: Vec<ModVec> = keep.into_iter().map(|k| gens[k].clone()).collect();
    let degrees: Vec<i64> = kept
        .iter()
        .map(|v| {
            fm.homogeneous_degree(v)
                .map(|d| d.expect("kept generators are nonzero"))
        })
        .collect::<Result<Vec<i64>>>()?;
    let rels = syzygies_with_background(fm, &kept, &bg)?;
    // Relations live in the free module on the kept generators; keep a
    // minimal generating set of them.
    let rel_fm = FreeModule::new(ring.ambient().clone(), degrees.clone());
    let rel_blocks = FPModule::ideal_blocks(ring, &rel_fm);
    let rel_keep = minimal_generator_indices(&rel_fm, &rels, &rel_blocks);
    let mut rel_cols: Vec<ModVec> = rel_keep.into_iter().map(|k| rels[k].clone()).collect();
    for col in rel_cols.iter_mut() {
        let nf: Vec<Polynomial> = col.comps().iter().map(|p| ring.normal_form(p)).collect();
        *col = rel_fm.from_comps(nf);
    }
    rel_cols.retain(|v| !v.is_zero());
    let module = FPModule::from_minimal_parts(ring.clone(), degrees, rel_cols);
    Ok((module, kept))
}

/// Hom_R(M, N) with explicit generator matrices.
pub fn hom_module(m: &FPModule, n: &FPModule) -> Result<HomModule> {
    if !m.ring().same_ring(n.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let ring = m.ring().clone();
    let source = m.minimal();
    let target = n.minimal();
    let a = source.presented_gens();
    let b = target.presented_gens();
    let dm = source.gen_degrees().to_vec();
    let dn = target.gen_degrees().to_vec();
    let ambient = ring.ambient().clone();
    let mut hom_degrees = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            hom_degrees.push(dn[j] - dm[i]);
        }
    }
    let hom_free = FreeModule::new(ambient.clone(), hom_degrees);
    // Boundary: maps whose matrix columns lie in the relation submodule of N.
    let mut boundary: Vec<ModVec> = Vec::new();
    for i in 0..a {
        for beta in target.relations() {
            boundary.push(place_block(&hom_free, a, b, i, beta.comps()));
        }
    }
    // Kernel condition: each relation of M must map into the relations of N.
    let m_rels = source.relations();
    let kernel: Vec<ModVec> = if m_rels.is_empty() || a == 0 {
        (0..a * b).map(|s| hom_free.unit(s)).collect()
    } else {
        let c = m_rels.len();
        let mut cond_degrees = Vec::with_capacity(c * b);
        let f0 = source.free();
        for rel in m_rels {
            let delta = f0
                .homogeneous_degree(rel)?
                .expect("relations are nonzero");
            for j in 0..b {
                cond_degrees.push(dn[j] - delta);
            }
        }
        let cond_free = FreeModule::new(ambient.clone(), cond_degrees);
        // Column for slot (i, j): relation r contributes rho_r[i] at (r, j).
        let mut columns = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                let mut comps = vec![ambient.zero(); c * b];
                for (r, rel) in m_rels.iter().enumerate() {
                    comps[r * b + j] = rel.comp(i).clone();
                }
                columns.push(cond_free.from_comps(comps));
            }
        }
        let mut bg = Vec::new();
        for r in 0..c {
            for beta in target.relations() {
                bg.push(place_block(&cond_free, c, b, r, beta.comps()));
            }
        }
        bg.extend(FPModule::ideal_blocks(&ring, &cond_free));
        syzygies_with_background(&cond_free, &columns, &bg)?
    };
    let (module, generators) = subquotient(&ring, &hom_free, &kernel, &boundary)?;
    Ok(HomModule {
        module,
        source,
        target,
        hom_free,
        generators,
        boundary,
    })
}

/// M tensor_R N by the standard presentation on pairwise generators.
pub fn tensor_module(m: &FPModule, n: &FPModule) -> Result<FPModule> {
    if !m.ring().same_ring(n.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let ring = m.ring().clone();
    let mm = m.minimal();
    let nn = n.minimal();
    let a = mm.presented_gens();
    let b = nn.presented_gens();
    let mut degrees = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            degrees.push(mm.gen_degrees()[i] + nn.gen_degrees()[j]);
        }
    }
    let ambient = ring.ambient().clone();
    let mut rels: Vec<Vec<Polynomial>> = Vec::new();
    for rho in mm.relations() {
        for j in 0..b {
            let mut col = vec![ambient.zero(); a * b];
            for i in 0..a {
                col[i * b + j] = rho.comp(i).clone();
            }
            rels.push(col);
        }
    }
    for beta in nn.relations() {
        for i in 0..a {
            let mut col = vec![ambient.zero(); a * b];
            for j in 0..b {
                col[i * b + j] = beta.comp(j).clone();
            }
            rels.push(col);
        }
    }
    FPModule::new(ring, degrees, rels)
}

/// Ext^i_R(M, N) computed from a minimal free resolution of M.
pub fn ext_module(i: usize, m: &FPModule, n: &FPModule) -> Result<FPModule> {
    if !m.ring().same_ring(n.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    if i == 0 {
        return Ok(hom_module(m, n)?.module);
    }
    let ring = m.ring().clone();
    let res = m.resolution(i + 1);
    if res.is_finished() && res.length() < i {
        return Ok(FPModule::zero(ring));
    }
    let target = n.minimal();
    let b = target.presented_gens();
    let dn = target.gen_degrees().to_vec();
    let fi = res.free(i);
    let rank_i = fi.rank();
    if rank_i == 0 || b == 0 {
        return Ok(FPModule::zero(ring));
    }
    let ambient = ring.ambient().clone();
    let mut hom_degrees = Vec::with_capacity(rank_i * b);
    for l in 0..rank_i {
        for j in 0..b {
            hom_degrees.push(dn[j] - fi.degrees()[l]);
        }
    }
    let hom_free = FreeModule::new(ambient.clone(), hom_degrees);
    // Cocycles: maps F_i -> N vanishing on the image of d_{i+1}.
    let d_next = res.differential(i + 1);
    let cocycles: Vec<ModVec> = if d_next.is_empty() {
        (0..rank_i * b).map(|s| hom_free.unit(s)).collect()
    } else {
        let c = d_next.len();
        let f_next = res.free(i + 1);
        let mut cond_degrees = Vec::with_capacity(c * b);
        for cc in 0..c {
            for j in 0..b {
                cond_degrees.push(dn[j] - f_next.degrees()[cc]);
            }
        }
        let cond_free = FreeModule::new(ambient.clone(), cond_degrees);
        let mut columns = Vec::with_capacity(rank_i * b);
        for l in 0..rank_i {
            for j in 0..b {
                let mut comps = vec![ambient.zero(); c * b];
                for (cc, col) in d_next.iter().enumerate() {
                    comps[cc * b + j] = col.comp(l).clone();
                }
                columns.push(cond_free.from_comps(comps));
            }
        }
        let mut bg = Vec::new();
        for cc in 0..c {
            for beta in target.relations() {
                bg.push(place_block(&cond_free, c, b, cc, beta.comps()));
            }
        }
        bg.extend(FPModule::ideal_blocks(&ring, &cond_free));
        syzygies_with_background(&cond_free, &columns, &bg)?
    };
    // Coboundaries: compositions with d_i, plus maps into the relations.
    let d_i = res.differential(i);
    let f_prev = res.free(i - 1);
    let mut boundary: Vec<ModVec> = Vec::new();
    for lp in 0..f_prev.rank() {
        for j in 0..b {
            let mut comps = vec![ambient.zero(); rank_i * b];
            for (l, col) in d_i.iter().enumerate() {
                comps[l * b + j] = col.comp(lp).clone();
            }
            let v = hom_free.from_comps(comps);
            if !v.is_zero() {
                boundary.push(v);
            }
        }
    }
    for l in 0..rank_i {
        for beta in target.relations() {
            boundary.push(place_block(&hom_free, rank_i, b, l, beta.comps()));
        }
    }
    Ok(subquotient(&ring, &hom_free, &cocycles, &boundary)?.0)
}

/// Annihilator of M as an ambient ideal (always contains the defining
/// ideal).
pub fn annihilator(m: &FPModule) -> Result<Ideal> {
    let ring = m.ring().clone();
    let mm = m.minimal();
    let a = mm.presented_gens();
    let ambient = ring.ambient().clone();
    if a == 0 {
        return Ok(Ideal::unit(ambient));
    }
    // Kernel of R -> M^a sending 1 to (g_1, ..., g_a): stack the copies.
    let mut degrees = Vec::with_capacity(a * a);
    for r in 0..a {
        let _ = r;
        degrees.extend_from_slice(mm.gen_degrees());
    }
    let stacked = FreeModule::new(ambient.clone(), degrees);
    let mut comps = vec![ambient.zero(); a * a];
    for r in 0..a {
        comps[r * a + r] = ambient.one();
    }
    let diag = stacked.from_comps(comps);
    let mut bg = Vec::new();
    for r in 0..a {
        for rel in mm.relations() {
            bg.push(place_block(&stacked, a, a, r, rel.comps()));
        }
    }
    bg.extend(FPModule::ideal_blocks(&ring, &stacked));
    let syz = syzygies_with_background(&stacked, std::slice::from_ref(&diag), &bg)?;
    let mut gens: Vec<Polynomial> = syz.into_iter().map(|v| v.into_comps().remove(0)).collect();
    gens.extend(ring.defining_ideal().generators().iter().cloned());
    Ok(Ideal::new(ambient, gens))
}

/// Is M faithful (annihilator equal to the defining ideal)?
pub fn is_faithful(m: &FPModule) -> Result<bool> {
    Ok(annihilator(m)? == *m.ring().defining_ideal())
}

/// Generic rank of M = coker(A) over a domain R: beta_0 minus the largest
/// size of a minor of A that is nonzero mod I.
pub fn rank(m: &FPModule) -> Result<usize> {
    let ring = m.ring().clone();
    let mm = m.minimal();
    let a = mm.presented_gens();
    let c = mm.relations().len();
    if a == 0 || c == 0 {
        return Ok(a);
    }
    // Entry (i, r) of the presentation matrix.
    let entry = |i: usize, r: usize| mm.relations()[r].comp(i).clone();
    let max_t = a.min(c);
    let mut generic = 0usize;
    for t in 1..=max_t {
        let row_sets = combinations(a, t);
        let col_sets = combinations(c, t);
        if row_sets.len().saturating_mul(col_sets.len()) > 200_000 {
            return Err(AlgebraError::BoundExceeded(
                "minor enumeration too large for rank computation".into(),
            ));
        }
        let mut found = false;
        'search: for rs in &row_sets {
            for cs in &col_sets {
                let det = minor_determinant(&ring, &entry, rs, cs);
                if !ring.is_zero_element(&det) {
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            break;
        }
        generic = t;
    }
    Ok(a - generic)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn minor_determinant(
    ring: &QuotientRing,
    entry: &dyn Fn(usize, usize) -> Polynomial,
    rows: &[usize],
    cols: &[usize],
) -> Polynomial {
    let ambient = ring.ambient().clone();
    let t = rows.len();
    if t == 0 {
        return ambient.one();
    }
    if t == 1 {
        return entry(rows[0], cols[0]);
    }
    // Laplace expansion along the first column, reducing as we go.
    let mut acc = ambient.zero();
    for (pos, &r) in rows.iter().enumerate() {
        let e = entry(r, cols[0]);
        if e.is_zero() {
            continue;
        }
        let sub_rows: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != pos)
            .map(|(_, &rr)| rr)
            .collect();
        let sub = minor_determinant(ring, entry, &sub_rows, &cols[1..]);
        let term = e.mul(&sub);
        acc = if pos % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    ring.normal_form(&acc)
}

/// Depth of a nonzero module, via the Auslander-Buchsbaum formula over the
/// ambient polynomial ring: depth M = n - pd_S M. (Depth is intrinsic to
/// the module and the maximal ideal, so computing it over S is legitimate.)
pub fn depth(m: &FPModule) -> Result<usize> {
    if m.is_zero() {
        return Err(AlgebraError::Parameter(
            "depth of the zero module is undefined".into(),
        ));
    }
    if let Some(d) = m.cached_depth() {
        return Ok(d);
    }
    let n = m.ring().ambient().nvars();
    let pd = m.ambient_resolution().length();
    debug_assert!(pd <= n, "ambient projective dimension exceeds n");
    let d = n - pd;
    m.store_depth(d);
    Ok(d)
}

/// Cohen-Macaulay type of a module with depth = dim: the last Betti number
/// of its minimal resolution over the ambient polynomial ring.
pub fn cm_type(m: &FPModule) -> Result<usize> {
    let d = depth(m)?;
    if d != m.dim() {
        return Err(AlgebraError::Parameter(
            "type requested for a module that is not Cohen-Macaulay".into(),
        ));
    }
    let res = m.ambient_resolution();
    Ok(res.betti(res.length()))
}

/// Bass numbers mu^i(M) = dim_k Ext^i_R(k, M) for i = 0..=up_to, computed
/// over R itself (independent of the Auslander-Buchsbaum route).
pub fn bass_numbers(m: &FPModule, up_to: usize) -> Result<Vec<usize>> {
    let ring = m.ring().clone();
    let k = ring.residue_module();
    let mut out = Vec::with_capacity(up_to + 1);
    for i in 0..=up_to {
        let e = ext_module(i, &k, m)?;
        // Ext into k-modules is killed by the maximal ideal, so the minimal
        // generator count is the k-dimension.
        out.push(e.beta0());
    }
    Ok(out)
}

/// First nonvanishing Ext^i(k, M): the depth, measured directly over R.
/// Quadratic in the resolution of k; used to cross-check `depth`.
pub fn depth_via_ext(m: &FPModule, bound: usize) -> Result<usize> {
    let ring = m.ring().clone();
    let k = ring.residue_module();
    for i in 0..=bound {
        if !ext_module(i, &k, m)?.is_zero() {
            return Ok(i);
        }
    }
    Err(AlgebraError::BoundExceeded(format!(
        "Ext^i(k, M) vanished for all i <= {bound}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, FieldKind, MonomialOrder, PolyRing};
    use std::sync::Arc;

    fn poly_ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            FieldKind::default_prime(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn ideal_module(qr: &QuotientRing, gens: &[&str]) -> FPModule {
        // The ideal as a module: generators with their syzygies.
        let ring = qr.ambient().clone();
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|s| parse_polynomial(&ring, s).unwrap())
            .collect();
        let degrees: Vec<i64> = polys.iter().map(|p| p.degree().unwrap()).collect();
        let fm = FreeModule::new(ring.clone(), vec![0]);
        let cols: Vec<ModVec> = polys
            .iter()
            .map(|p| fm.unit(0).mul_poly(p))
            .collect();
        let bg = FPModule::ideal_blocks(qr, &fm);
        let syz = syzygies_with_background(&fm, &cols, &bg).unwrap();
        FPModule::from_modvecs(
            qr.clone(),
            degrees,
            syz,
        )
        .unwrap()
    }

    #[test]
    fn hom_of_free_modules() {
        // Hom(R^1, R^1) = R.
        let qr = QuotientRing::polynomial_ring(poly_ring(&["x", "y"]));
        let r = qr.ring_module();
        let h = hom_module(&r, &r).unwrap();
        assert_eq!(h.module.beta0(), 1);
        assert!(h.module.relations().is_empty());
        assert_eq!(h.module.gen_degrees(), &[0]);
    }

    #[test]
    fn hom_detects_annihilation() {
        // Hom(k, R) = 0 over a polynomial ring (positive depth).
        let qr = QuotientRing::polynomial_ring(poly_ring(&["x", "y"]));
        let k = qr.residue_module();
        let r = qr.ring_module();
        let h = hom_module(&k, &r).unwrap();
        assert!(h.module.is_zero());
    }

    #[test]
    fn hom_into_residue_field_counts_generators() {
        // Hom(M, k) has dimension beta_0(M).
        let ring = poly_ring(&["x", "y"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let m = FPModule::new(
            qr.clone(),
            vec![0, 1],
            vec![vec![
                parse_polynomial(&ring, "x^2").unwrap(),
                parse_polynomial(&ring, "y").unwrap(),
            ]],
        )
        .unwrap();
        let k = qr.residue_module();
        let h = hom_module(&m, &k).unwrap();
        assert_eq!(h.module.beta0(), 2);
        assert_eq!(h.module.hilbert_series().multiplicity(), 2);
    }

    #[test]
    fn tensor_with_residue_field() {
        // M tensor k has dimension beta_0(M).
        let ring = poly_ring(&["x", "y"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let m = FPModule::new(
            qr.clone(),
            vec![0, 0],
            vec![vec![
                parse_polynomial(&ring, "x").unwrap(),
                parse_polynomial(&ring, "y").unwrap(),
            ]],
        )
        .unwrap();
        let k = qr.residue_module();
        let t = tensor_module(&m, &k).unwrap();
        assert_eq!(t.beta0(), 2);
        assert!(t.hilbert_series().dimension() == 0);
        assert_eq!(t.multiplicity(), 2);
    }

    #[test]
    fn ext_koszul_pattern() {
        // Ext^i(k, S) over S = k[x,y]: 0, 0, k (duality at top).
        let qr = QuotientRing::polynomial_ring(poly_ring(&["x", "y"]));
        let k = qr.residue_module();
        let r = qr.ring_module();
        assert!(ext_module(0, &k, &r).unwrap().is_zero());
        assert!(ext_module(1, &k, &r).unwrap().is_zero());
        let e2 = ext_module(2, &k, &r).unwrap();
        assert_eq!(e2.beta0(), 1);
        assert!(ext_module(3, &k, &r).unwrap().is_zero());
    }

    #[test]
    fn ext_between_cyclic_modules() {
        // Ext^1(k, k) over k[x]: dimension 1.
        let qr = QuotientRing::polynomial_ring(poly_ring(&["x"]));
        let k = qr.residue_module();
        let e1 = ext_module(1, &k, &k).unwrap();
        assert_eq!(e1.beta0(), 1);
        assert!(ext_module(2, &k, &k).unwrap().is_zero());
    }

    #[test]
    fn annihilator_of_cyclic_module() {
        let ring = poly_ring(&["x", "y"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let m = qr
            .cyclic_module(vec![
                parse_polynomial(&ring, "x^2").unwrap(),
                parse_polynomial(&ring, "x*y").unwrap(),
            ])
            .unwrap();
        let ann = annihilator(&m).unwrap();
        let expect = Ideal::new(
            ring.clone(),
            vec![
                parse_polynomial(&ring, "x^2").unwrap(),
                parse_polynomial(&ring, "x*y").unwrap(),
            ],
        );
        assert!(ann == expect);
        assert!(!is_faithful(&m).unwrap());
        assert!(is_faithful(&qr.ring_module()).unwrap());
    }

    #[test]
    fn rank_of_standard_examples() {
        let ring = poly_ring(&["x", "y"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        // Free module of rank 2: no relations.
        let free2 = FPModule::new(qr.clone(), vec![0, 0], vec![]).unwrap();
        assert_eq!(rank(&free2).unwrap(), 2);
        // k has rank 0 over S.
        assert_eq!(rank(&qr.residue_module()).unwrap(), 0);
        // The maximal ideal (x, y) as a module has rank 1.
        let m = ideal_module(&qr, &["x", "y"]);
        assert_eq!(rank(&m).unwrap(), 1);
    }

    #[test]
    fn depth_matches_ext_characterization() {
        // S = k[x,y]: depth S = 2, depth k = 0, depth S/(x) = 1.
        let ring = poly_ring(&["x", "y"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        assert_eq!(depth(&qr.ring_module()).unwrap(), 2);
        assert_eq!(depth(&qr.residue_module()).unwrap(), 0);
        let sx = qr
            .cyclic_module(vec![parse_polynomial(&ring, "x").unwrap()])
            .unwrap();
        assert_eq!(depth(&sx).unwrap(), 1);
        // Cross-check against the Ext definition.
        assert_eq!(depth_via_ext(&qr.ring_module(), 3).unwrap(), 2);
        assert_eq!(depth_via_ext(&qr.residue_module(), 3).unwrap(), 0);
        assert_eq!(depth_via_ext(&sx, 3).unwrap(), 1);
    }

    #[test]
    fn bass_numbers_of_polynomial_ring() {
        // mu^i(S) = delta_{i,n} for S = k[x,y].
        let qr = QuotientRing::polynomial_ring(poly_ring(&["x", "y"]));
        let mu = bass_numbers(&qr.ring_module(), 3).unwrap();
        assert_eq!(mu, vec![0, 0, 1, 0]);
    }

    #[test]
    fn gorenstein_detection() {
        // k[x,y]/(x^2) is a hypersurface, hence Gorenstein.
        let ring = poly_ring(&["x", "y"]);
        let f = parse_polynomial(&ring, "x^2").unwrap();
        let qr = QuotientRing::new(ring.clone(), vec![f]).unwrap();
        assert!(qr.is_cohen_macaulay());
        assert!(qr.is_gorenstein());
        // k[x,y]/(x,y)^2 is artinian with 2-dimensional socle: not
        // Gorenstein.
        let gens = vec![
            parse_polynomial(&ring, "x^2").unwrap(),
            parse_polynomial(&ring, "x*y").unwrap(),
            parse_polynomial(&ring, "y^2").unwrap(),
        ];
        let qr2 = QuotientRing::new(ring, gens).unwrap();
        assert!(qr2.is_cohen_macaulay());
        assert!(!qr2.is_gorenstein());
        assert_eq!(cm_type(&qr2.ring_module()).unwrap(), 2);
    }

    #[test]
    fn subquotient_of_units_is_cokernel() {
        // (<e0> + <x e0>)/<x e0> = R/(x) inside R^1.
        let ring = poly_ring(&["x", "y"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let fm = FreeModule::new(ring.clone(), vec![0]);
        let z = vec![fm.unit(0)];
        let b = vec![fm.unit(0).mul_poly(&parse_polynomial(&ring, "x").unwrap())];
        let (m, kept) = subquotient(&qr, &fm, &z, &b).unwrap();
        assert_eq!(kept.len(), 1);
        assert_eq!(m.beta0(), 1);
        let h = m.hilbert_series();
        assert_eq!(h.dimension(), 1);
        assert_eq!(h.multiplicity(), 1);
    }
}
