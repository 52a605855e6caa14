//! Minimal graded free resolutions over a quotient ring, built one syzygy
//! step at a time. Each step takes syzygies of the previous differential
//! (working modulo the defining ideal) and keeps a minimal generating set,
//! so the Betti numbers read off the free ranks.

use crate::groebner::{syzygies_with_background, FreeModule, ModVec};
use crate::homalg::fpmodule::{minimal_generator_indices, FPModule};

/// A partial minimal free resolution F_len -> ... -> F_1 -> F_0 of a module
/// given by a minimal presentation.
#[derive(Clone)]
pub struct Resolution {
    module: FPModule,
    frees: Vec<FreeModule>,
    /// diffs[i] holds the columns of d_{i+1} as vectors in frees[i];
    /// diffs[0] is the minimal relation list of the module.
    diffs: Vec<Vec<ModVec>>,
    finished: bool,
}

impl Resolution {
    /// Starts a resolution from a minimal presentation: F_0 and d_1.
    pub(crate) fn start(module: FPModule) -> Resolution {
        let f0 = module.free();
        let d1: Vec<ModVec> = module.relations().to_vec();
        let ring = module.ring().clone();
        if d1.is_empty() {
            // Free module: the resolution is already complete.
            return Resolution {
                module,
                frees: vec![f0],
                diffs: Vec::new(),
                finished: true,
            };
        }
        let degrees: Vec<i64> = d1
            .iter()
            .map(|v| {
                f0.homogeneous_degree(v)
                    .expect("relations are homogeneous")
                    .expect("relations are nonzero")
            })
            .collect();
        let f1 = FreeModule::new(ring.ambient().clone(), degrees);
        Resolution {
            module,
            frees: vec![f0, f1],
            diffs: vec![d1],
            finished: false,
        }
    }

    pub fn module(&self) -> &FPModule {
        &self.module
    }

    /// Number of differentials computed so far.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    /// True when the last computed syzygy step was zero, so the resolution
    /// stops here and all later Betti numbers vanish.
    pub fn is_finished(&self) -> bool {
        self.finished
    }

    /// The free module F_i; panics if i exceeds what has been computed
    /// (beyond the end of a finished resolution, returns a rank-0 module).
    pub fn free(&self, i: usize) -> FreeModule {
        if i < self.frees.len() {
            return self.frees[i].clone();
        }
        assert!(
            self.finished,
            "resolution not computed to homological degree {i}"
        );
        FreeModule::new(self.module.ring().ambient().clone(), Vec::new())
    }

    /// Columns of the differential d_i: F_i -> F_{i-1}, for i >= 1.
    pub fn differential(&self, i: usize) -> Vec<ModVec> {
        assert!(i >= 1, "differentials are indexed from 1");
        if i - 1 < self.diffs.len() {
            return self.diffs[i - 1].clone();
        }
        assert!(
            self.finished,
            "resolution not computed to homological degree {i}"
        );
        Vec::new()
    }

    /// Betti number beta_i = rank F_i.
    pub fn betti(&self, i: usize) -> usize {
        self.free(i).rank()
    }

    pub fn betti_table(&self) -> Vec<usize> {
        (0..self.frees.len()).map(|i| self.betti(i)).collect()
    }

    /// Extends the resolution so that F_i and d_i are available for all
    /// i <= length (or the resolution finishes earlier).
    pub fn extend_to(&mut self, length: usize) {
        while !self.finished && self.diffs.len() < length {
            self.step();
        }
    }

    fn step(&mut self) {
        let ring = self.module.ring().clone();
        let i = self.diffs.len(); // about to compute d_{i+1}
        let prev_free = &self.frees[i - 1];
        let cols = &self.diffs[i - 1];
        let background = FPModule::ideal_blocks(&ring, prev_free);
        let syz = syzygies_with_background(prev_free, cols, &background)
            .expect("graded syzygy computation succeeds");
        // Syzygies live in F_i; keep a minimal generating set.
        let fi = &self.frees[i];
        let fi_blocks = FPModule::ideal_blocks(&ring, fi);
        let keep = minimal_generator_indices(fi, &syz, &fi_blocks);
        if keep.is_empty() {
            self.finished = true;
            return;
        }
        let next_cols: Vec<ModVec> = keep.into_iter().map(|k| syz[k].clone()).collect();
        let degrees: Vec<i64> = next_cols
            .iter()
            .map(|v| {
                fi.homogeneous_degree(v)
                    .expect("syzygies of graded input are homogeneous")
                    .expect("kept syzygies are nonzero")
            })
            .collect();
        let next_free = FreeModule::new(ring.ambient().clone(), degrees);
        self.diffs.push(next_cols);
        self.frees.push(next_free);
    }

    /// Checks d_i . d_{i+1} = 0 in the quotient ring for all computed steps
    /// (a direct exactness smoke test; entries reduce to zero mod I).
    pub fn verify_complex(&self) -> bool {
        let ring = self.module.ring();
        for i in 1..self.diffs.len() {
            let upper = &self.diffs[i]; // d_{i+1}: columns in F_i
            let lower = &self.diffs[i - 1]; // d_i: columns in F_{i-1}
            for col in upper {
                // Image of col under d_i: sum_j col[j] * (d_i col j).
                let mut acc = self.frees[i - 1].zero_vec();
                for (j, entry) in col.comps().iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    acc = acc.add(&lower[j].mul_poly(entry));
                }
                let all_zero = acc.comps().iter().all(|p| ring.is_zero_element(p));
                if !all_zero {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, FieldKind, MonomialOrder, PolyRing};
    use crate::homalg::quotient::QuotientRing;
    use std::sync::Arc;

    fn poly_ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            FieldKind::default_prime(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn koszul_resolution_of_residue_field() {
        // k over k[x,y,z]: Betti numbers 1, 3, 3, 1.
        let qr = QuotientRing::polynomial_ring(poly_ring(&["x", "y", "z"]));
        let k = qr.residue_module();
        let res = k.resolution(4);
        assert!(res.is_finished());
        assert_eq!(res.betti_table(), vec![1, 3, 3, 1]);
        assert!(res.verify_complex());
        // Degrees are the binomial strands 0, 1, 2, 3.
        assert_eq!(res.free(2).degrees(), &[2, 2, 2]);
        assert_eq!(res.free(3).degrees(), &[3]);
    }

    #[test]
    fn residue_field_over_hypersurface_is_periodic() {
        // R = k[x]/(x^2): resolution of k is ... -> R -> R -> R with all
        // Betti numbers 1.
        let ring = poly_ring(&["x"]);
        let f = parse_polynomial(&ring, "x^2").unwrap();
        let qr = QuotientRing::new(ring, vec![f]).unwrap();
        let k = qr.residue_module();
        let res = k.resolution(5);
        assert!(!res.is_finished());
        assert_eq!(res.betti_table(), vec![1, 1, 1, 1, 1, 1]);
        assert!(res.verify_complex());
        // Each differential is multiplication by x, so degrees climb by one.
        assert_eq!(res.free(1).degrees(), &[1]);
        assert_eq!(res.free(2).degrees(), &[2]);
        assert_eq!(res.free(3).degrees(), &[3]);
    }

    #[test]
    fn twisted_cubic_point_count_resolution() {
        // I = 2x2 minors of [x y z; y z w] over k[x,y,z,w]:
        // R = S/I has the resolution 1, 3, 2 (Hilbert-Burch).
        let ring = poly_ring(&["x", "y", "z", "w"]);
        let gens = vec![
            parse_polynomial(&ring, "x*z - y^2").unwrap(),
            parse_polynomial(&ring, "x*w - y*z").unwrap(),
            parse_polynomial(&ring, "y*w - z^2").unwrap(),
        ];
        let qr = QuotientRing::polynomial_ring(ring);
        let m = FPModule::new(qr, vec![0], gens.into_iter().map(|g| vec![g]).collect()).unwrap();
        let res = m.resolve_to_completion(5);
        assert_eq!(res.betti_table(), vec![1, 3, 2]);
        assert!(res.verify_complex());
        assert_eq!(res.free(1).degrees(), &[2, 2, 2]);
        assert_eq!(res.free(2).degrees(), &[3, 3]);
    }

    #[test]
    fn koszul_complex_of_regular_sequence_module() {
        // M = S/(x, y) over k[x,y]: Betti 1, 2, 1, finished.
        let ring = poly_ring(&["x", "y"]);
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let m = FPModule::new(
            qr,
            vec![0],
            vec![
                vec![parse_polynomial(&ring, "x").unwrap()],
                vec![parse_polynomial(&ring, "y").unwrap()],
            ],
        )
        .unwrap();
        let res = m.resolve_to_completion(4);
        assert_eq!(res.betti_table(), vec![1, 2, 1]);
    }
}
