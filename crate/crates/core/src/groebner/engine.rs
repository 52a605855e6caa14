//! Buchberger engine for submodules of free modules, with syzygy extraction.
//!
//! One state machine covers every use:
//! - plain Groebner bases (ideals are the rank-1 case);
//! - kernels, lifts, and syzygies via augmented vectors: a generator v_i is
//!   tracked as (v_i, e_i) in R^s + R^k. Position-over-term order makes the
//!   first block dominate, so elements whose first block reduces to zero are
//!   exactly syzygies of the inputs (modulo the untracked background block).
//!
//! Pair selection uses the sugar strategy; ties break by lex comparison on
//! the pair's lcm exponents and then the generator index pair, so runs are
//! deterministic. Pair pruning uses the Gebauer-Moeller chain rules, plus the
//! product criterion when the primary block is a single position (the ideal
//! case, where it is valid). Syzygy generation never trusts phase-1 pruning:
//! a second pass walks every same-position pair of the finished basis,
//! skipping only pairs covered by the strict-degree chain rule, which is
//! sound for generation by induction on the lcm degree.

use crate::algebra::field::Coeff;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::error::Result;

use super::modvec::{FreeModule, ModVec};

struct BasisElem {
    vec: ModVec,
    pos: usize,
    lead: Monomial,
    sugar: i64,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
    sugar: i64,
}

/// Stateful Buchberger computation over a free module.
pub struct GbState {
    ambient: FreeModule,
    /// Positions < split form the primary block; pairs are only formed among
    /// elements leading there. split == rank for plain GB computations.
    split: usize,
    basis: Vec<BasisElem>,
    buckets: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    syzygies: Vec<ModVec>,
}

impl GbState {
    pub fn new(ambient: FreeModule, split: usize) -> GbState {
        let buckets = vec![Vec::new(); split];
        GbState {
            ambient,
            split,
            basis: Vec::new(),
            buckets,
            pairs: Vec::new(),
            syzygies: Vec::new(),
        }
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_vec(&self, i: usize) -> &ModVec {
        &self.basis[i].vec
    }

    /// Fully reduces every component with index < split; components beyond
    /// the split are carried along (they accumulate tracking data). Returns
    /// the remainder and a sugar bound for it.
    fn reduce(&self, v: &ModVec, sugar: i64) -> (ModVec, i64) {
        let mut cur = v.clone();
        let mut sug = sugar;
        for pos in 0..self.split {
            let mut idx = 0usize;
            loop {
                let comp = cur.comp(pos);
                if idx >= comp.num_terms() {
                    break;
                }
                let (mon, coeff) = {
                    let t = &comp.terms()[idx];
                    (t.0.clone(), t.1.clone())
                };
                let mut reduced = false;
                for &bi in &self.buckets[pos] {
                    let be = &self.basis[bi];
                    if be.lead.divides(&mon) {
                        let qm = be.lead.divide_into(&mon);
                        let qc = self
                            .ambient
                            .ring()
                            .field()
                            .div(&coeff, be.vec.comp(pos).leading_coeff().unwrap())
                            .expect("unit leading coefficient");
                        cur = cur.merge_scaled(&be.vec, Some(&qc), Some(&qm), true);
                        sug = sug.max(self.ambient.ring().weighted_degree(&qm) + be.sugar);
                        reduced = true;
                        break;
                    }
                }
                if !reduced {
                    idx += 1;
                }
            }
        }
        (cur, sug)
    }

    fn insert(&mut self, vec: ModVec, sugar: i64) {
        let vec = vec.unit_normalize();
        let pos = vec.lead_position().expect("nonzero insert");
        debug_assert!(pos < self.split);
        let lead = vec.lead_monomial().unwrap().clone();
        let t = self.basis.len();

        // Gebauer-Moeller old-pair filter: drop (i, j) when the new element
        // strictly refines it.
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.pos != pos || !lead.divides(&p.lcm) {
                return true;
            }
            let lcm_it = basis[p.i].lead.lcm(&lead);
            let lcm_jt = basis[p.j].lead.lcm(&lead);
            lcm_it == p.lcm || lcm_jt == p.lcm
        });

        // Candidate new pairs (i, t).
        struct Cand {
            i: usize,
            lcm: Monomial,
            coprime: bool,
        }
        let mut cands: Vec<Cand> = Vec::new();
        for (i, be) in self.basis.iter().enumerate() {
            if be.pos != pos {
                continue;
            }
            let lcm = be.lead.lcm(&lead);
            let coprime = be.lead.is_coprime_with(&lead);
            cands.push(Cand { i, lcm, coprime });
        }
        // M rule: drop candidates whose lcm is a proper multiple of another
        // candidate's lcm.
        let mut keep: Vec<bool> = vec![true; cands.len()];
        for a in 0..cands.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(&cands[a].lcm) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // F rule: one representative per lcm value (keep the smallest index).
        for a in 0..cands.len() {
            if !keep[a] {
                continue;
            }
            for b in (a + 1)..cands.len() {
                if keep[b] && cands[a].lcm == cands[b].lcm {
                    keep[b] = false;
                }
            }
        }
        for (c, kept) in cands.iter().zip(&keep) {
            if !kept {
                continue;
            }
            // Product criterion, valid only when the primary block is a
            // single position (ideal case).
            if self.split == 1 && c.coprime {
                continue;
            }
            let be = &self.basis[c.i];
            let ring = self.ambient.ring();
            let sug = (ring.weighted_degree(&be.lead.divide_into(&c.lcm)) + be.sugar)
                .max(ring.weighted_degree(&lead.divide_into(&c.lcm)) + sugar);
            self.pairs.push(Pair {
                i: c.i,
                j: t,
                pos,
                lcm: c.lcm.clone(),
                sugar: sug,
            });
        }

        self.basis.push(BasisElem {
            vec,
            pos,
            lead,
            sugar,
        });
        self.buckets[pos].push(t);
    }

    /// Feeds a generator: reduce, then either discard (zero), record as a
    /// syzygy (pure tracking block), or insert into the basis.
    pub fn add(&mut self, v: ModVec) {
        if v.is_zero() {
            return;
        }
        let sugar = v.sugar(&self.ambient);
        let (r, sug) = self.reduce(&v, sugar);
        if r.is_zero() {
            return;
        }
        if r.vanishes_before(self.split) {
            self.syzygies.push(r.unit_normalize());
            return;
        }
        self.insert(r, sug);
    }

    fn s_vector(&self, p: &Pair) -> (ModVec, i64) {
        let gi = &self.basis[p.i];
        let gj = &self.basis[p.j];
        let mi = gi.lead.divide_into(&p.lcm);
        let mj = gj.lead.divide_into(&p.lcm);
        let ci = gi.vec.comp(p.pos).leading_coeff().unwrap().clone();
        let cj = gj.vec.comp(p.pos).leading_coeff().unwrap().clone();
        // cj * mi * gi - ci * mj * gj cancels the lcm term exactly.
        let lhs = self.ambient.zero_vec().merge_scaled(&gi.vec, Some(&cj), Some(&mi), false);
        let s = lhs.merge_scaled(&gj.vec, Some(&ci), Some(&mj), true);
        (s, p.sugar)
    }

    fn pop_best_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0usize;
        for k in 1..self.pairs.len() {
            if pair_key_less(&self.pairs[k], &self.pairs[best]) {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    /// Processes pairs until none remain; the primary block of the basis is
    /// then a Groebner basis of the primary projection.
    pub fn complete(&mut self) {
        while let Some(p) = self.pop_best_pair() {
            let (s, sugar) = self.s_vector(&p);
            let (r, sug) = self.reduce(&s, sugar);
            if r.is_zero() {
                continue;
            }
            if r.vanishes_before(self.split) {
                self.syzygies.push(r.unit_normalize());
                continue;
            }
            self.insert(r, sug);
        }
    }

    /// Normal form of a vector: every component before the split is fully
    /// reduced (tail included); tracking components are carried along.
    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        let sugar = v.sugar(&self.ambient);
        self.reduce(v, sugar).0
    }

    /// Schreyer pass: collects syzygies from every same-position pair of the
    /// finished basis, pruning only with the strict-degree chain rule.
    /// Returns all syzygies found so far (phase-1 remainders included).
    pub fn collect_syzygies(&mut self) -> Vec<ModVec> {
        let n = self.basis.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.basis[i].pos != self.basis[j].pos {
                    continue;
                }
                let pos = self.basis[i].pos;
                let lcm = self.basis[i].lead.lcm(&self.basis[j].lead);
                let ldeg = lcm.total_degree();
                // Strict-degree chain rule: some third leading term divides
                // the lcm and both sub-lcms have strictly smaller degree.
                let mut covered = false;
                for (l, bl) in self.basis.iter().enumerate() {
                    if l == i || l == j || bl.pos != pos {
                        continue;
                    }
                    if !bl.lead.divides(&lcm) {
                        continue;
                    }
                    if bl.lead.lcm(&self.basis[i].lead).total_degree() < ldeg
                        && bl.lead.lcm(&self.basis[j].lead).total_degree() < ldeg
                    {
                        covered = true;
                        break;
                    }
                }
                if covered {
                    continue;
                }
                let ring = self.ambient.ring();
                let sug = (ring.weighted_degree(&self.basis[i].lead.divide_into(&lcm))
                    + self.basis[i].sugar)
                    .max(
                        ring.weighted_degree(&self.basis[j].lead.divide_into(&lcm))
                            + self.basis[j].sugar,
                    );
                let p = Pair {
                    i,
                    j,
                    pos,
                    lcm,
                    sugar: sug,
                };
                let (s, sugar) = self.s_vector(&p);
                let (r, _) = self.reduce(&s, sugar);
                debug_assert!(
                    r.vanishes_before(self.split),
                    "S-pair of a completed basis failed to reduce to zero"
                );
                if !r.is_zero() {
                    self.syzygies.push(r.unit_normalize());
                }
            }
        }
        let mut out = self.syzygies.clone();
        canonical_sort(&mut out);
        out.dedup();
        out
    }

    /// The primary-block projections of the basis elements.
    pub fn primary_basis(&self, primary: &FreeModule) -> Vec<ModVec> {
        self.basis
            .iter()
            .map(|b| primary.from_comps(b.vec.comps()[..self.split].to_vec()))
            .collect()
    }

    /// Minimal, fully tail-reduced, unit-normalized basis sorted descending
    /// by leading term: the unique reduced Groebner basis. Only meaningful
    /// for plain runs (split == rank).
    pub fn reduced_basis(&self) -> Vec<ModVec> {
        assert_eq!(self.split, self.ambient.rank(), "reduced_basis on augmented state");
        reduce_basis(&self.ambient, self.basis.iter().map(|b| b.vec.clone()).collect())
    }
}

fn pair_key_less(a: &Pair, b: &Pair) -> bool {
    (a.sugar, a.lcm.total_degree(), a.lcm.exps(), a.i, a.j)
        < (b.sugar, b.lcm.total_degree(), b.lcm.exps(), b.i, b.j)
}

/// Deterministic canonical order: by lead position, then lead monomial
/// descending in the ring order, then full component comparison.
pub fn canonical_sort(vs: &mut Vec<ModVec>) {
    vs.retain(|v| !v.is_zero());
    vs.sort_by(|a, b| compare_canonical(a, b));
}

pub fn compare_canonical(a: &ModVec, b: &ModVec) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let pa = a.lead_position().unwrap_or(usize::MAX);
    let pb = b.lead_position().unwrap_or(usize::MAX);
    pa.cmp(&pb).then_with(|| {
        if pa == usize::MAX {
            return Ordering::Equal;
        }
        let ring = a.comp(pa).ring().clone();
        ring.order()
            .compare(b.lead_monomial().unwrap(), a.lead_monomial().unwrap())
            .then_with(|| {
                // Fall back to a full deterministic comparison.
                for (x, y) in a.comps().iter().zip(b.comps()) {
                    let xs = format!("{x}");
                    let ys = format!("{y}");
                    match xs.cmp(&ys) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    })
}

/// Interreduces a generating set of a Groebner basis into the reduced basis.
fn reduce_basis(fm: &FreeModule, mut vecs: Vec<ModVec>) -> Vec<ModVec> {
    vecs.retain(|v| !v.is_zero());
    // Minimality: drop elements whose lead is divisible by another's lead.
    // Process ascending in the module order so divisors are kept first.
    let ring = fm.ring().clone();
    let mut order: Vec<usize> = (0..vecs.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, ma) = (vecs[a].lead_position().unwrap(), vecs[a].lead_monomial().unwrap());
        let (pb, mb) = (vecs[b].lead_position().unwrap(), vecs[b].lead_monomial().unwrap());
        // Higher position = smaller module term; within a position ascending
        // monomial order.
        pb.cmp(&pa).then(ring.order().compare(ma, mb))
    });
    let mut kept: Vec<usize> = Vec::new();
    'outer: for &i in order.iter() {
        let (pi, mi) = (vecs[i].lead_position().unwrap(), vecs[i].lead_monomial().unwrap());
        for &k in &kept {
            let (pk, mk) = (vecs[k].lead_position().unwrap(), vecs[k].lead_monomial().unwrap());
            if pk == pi && mk.divides(mi) {
                continue 'outer;
            }
        }
        kept.push(i);
    }
    // Tail-reduce each kept element against the others.
    let mut out: Vec<ModVec> = Vec::with_capacity(kept.len());
    for (slot, &i) in kept.iter().enumerate() {
        let others: Vec<ModVec> = kept
            .iter()
            .enumerate()
            .filter(|(s, _)| *s != slot)
            .map(|(_, &k)| vecs[k].clone())
            .collect();
        let reduced = reduce_by_set(fm, &vecs[i], &others);
        out.push(reduced.monic());
    }
    canonical_sort(&mut out);
    out
}

/// Full normal form of `v` against an explicit set (positions all primary).
pub fn reduce_by_set(fm: &FreeModule, v: &ModVec, set: &[ModVec]) -> ModVec {
    let field = fm.ring().field();
    let mut cur = v.clone();
    for pos in 0..fm.rank() {
        let mut idx = 0usize;
        loop {
            let comp = cur.comp(pos);
            if idx >= comp.num_terms() {
                break;
            }
            let (mon, coeff) = {
                let t = &comp.terms()[idx];
                (t.0.clone(), t.1.clone())
            };
            let mut reduced = false;
            for g in set {
                match g.lead_position() {
                    Some(gp) if gp == pos => {}
                    _ => continue,
                }
                let gm = g.lead_monomial().unwrap();
                if gm.divides(&mon) {
                    let qm = gm.divide_into(&mon);
                    let qc = field
                        .div(&coeff, g.lead_coeff().unwrap())
                        .expect("unit leading coefficient");
                    cur = cur.merge_scaled(g, Some(&qc), Some(&qm), true);
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                idx += 1;
            }
        }
    }
    cur
}

/// Reduced Groebner basis of the submodule generated by `gens`.
pub fn module_groebner(fm: &FreeModule, gens: &[ModVec]) -> Vec<ModVec> {
    let mut st = GbState::new(fm.clone(), fm.rank());
    for g in gens {
        st.add(g.clone());
    }
    st.complete();
    st.reduced_basis()
}

/// Checks the Buchberger criterion directly: every same-position S-pair of
/// `basis` reduces to zero against `basis`. No pruning is applied.
pub fn is_groebner_basis(fm: &FreeModule, basis: &[ModVec]) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let (pi, pj) = (basis[i].lead_position(), basis[j].lead_position());
            let (pi, pj) = match (pi, pj) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            if pi != pj {
                continue;
            }
            let mi = basis[i].lead_monomial().unwrap();
            let mj = basis[j].lead_monomial().unwrap();
            let lcm = mi.lcm(mj);
            let qi = mi.divide_into(&lcm);
            let qj = mj.divide_into(&lcm);
            let ci = basis[i].lead_coeff().unwrap().clone();
            let cj = basis[j].lead_coeff().unwrap().clone();
            let lhs = fm
                .zero_vec()
                .merge_scaled(&basis[i], Some(&cj), Some(&qi), false);
            let s = lhs.merge_scaled(&basis[j], Some(&ci), Some(&qj), true);
            if !reduce_by_set(fm, &s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Degrees for the tracking block: exact for homogeneous generators, a sugar
/// bound otherwise (the metadata is only consumed by graded callers, which
/// always pass homogeneous generators).
fn tracking_degrees(fm: &FreeModule, gens: &[ModVec]) -> Vec<i64> {
    gens.iter()
        .map(|g| match fm.homogeneous_degree(g) {
            Ok(d) => d.unwrap_or(0),
            Err(_) => g.sugar(fm),
        })
        .collect()
}

/// Syzygies of `gens` modulo the submodule generated by `background`: all
/// coefficient vectors c with sum(c_i * gens_i) inside <background>.
/// Both gens and background live in `fm`; the result lives in a free module
/// with one position per generator (zero generators yield unit syzygies).
pub fn syzygies_with_background(
    fm: &FreeModule,
    gens: &[ModVec],
    background: &[ModVec],
) -> Result<Vec<ModVec>> {
    let gen_degrees = tracking_degrees(fm, gens);
    let out_fm = FreeModule::new(fm.ring().clone(), gen_degrees.clone());
    let split = fm.rank();
    let aug = fm.augment(gen_degrees);
    let mut st = GbState::new(aug.clone(), split);
    for b in background {
        let mut comps = b.comps().to_vec();
        comps.extend(vec![fm.ring().zero(); gens.len()]);
        st.add(aug.from_comps(comps));
    }
    let mut trivial: Vec<ModVec> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            trivial.push(out_fm.unit(i));
            continue;
        }
        let mut comps = g.comps().to_vec();
        let mut track = vec![fm.ring().zero(); gens.len()];
        track[i] = fm.ring().one();
        comps.extend(track);
        st.add(aug.from_comps(comps));
    }
    st.complete();
    let raw = st.collect_syzygies();
    let mut out: Vec<ModVec> = trivial;
    for s in raw {
        out.push(out_fm.from_comps(s.comps()[split..].to_vec()));
    }
    out.retain(|v| !v.is_zero());
    canonical_sort(&mut out);
    out.dedup();
    Ok(out)
}

/// Expresses `target` as an R-combination of `gens` modulo <background>;
/// returns the coefficients when possible.
pub fn lift_through(
    fm: &FreeModule,
    target: &ModVec,
    gens: &[ModVec],
    background: &[ModVec],
) -> Result<Option<Vec<Polynomial>>> {
    let gen_degrees = tracking_degrees(fm, gens);
    let split = fm.rank();
    let aug = fm.augment(gen_degrees);
    let mut st = GbState::new(aug.clone(), split);
    for b in background {
        let mut comps = b.comps().to_vec();
        comps.extend(vec![fm.ring().zero(); gens.len()]);
        st.add(aug.from_comps(comps));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut comps = g.comps().to_vec();
        let mut track = vec![fm.ring().zero(); gens.len()];
        track[i] = fm.ring().one();
        comps.extend(track);
        st.add(aug.from_comps(comps));
    }
    st.complete();
    let mut comps = target.comps().to_vec();
    comps.extend(vec![fm.ring().zero(); gens.len()]);
    let r = st.normal_form(&aug.from_comps(comps));
    if !r.vanishes_before(split) {
        return Ok(None);
    }
    let field = fm.ring().field();
    let coeffs = r.comps()[split..]
        .iter()
        .map(|p| {
            // target - sum(q * basis) = r, so coefficients are -tracked part.
            let negated: Vec<(Monomial, Coeff)> = p
                .terms()
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect();
            p.ring().from_terms(negated)
        })
        .collect();
    Ok(Some(coeffs))
}

/// Submodule membership: v inside <gens + background>?
pub fn submodule_contains(
    fm: &FreeModule,
    gens: &[ModVec],
    background: &[ModVec],
    v: &ModVec,
) -> bool {
    let mut st = GbState::new(fm.clone(), fm.rank());
    for g in background.iter().chain(gens) {
        st.add(g.clone());
    }
    st.complete();
    st.normal_form(v).is_zero()
}
