//! Groebner engine: Buchberger completion for ideals and submodules of free
//! modules, normal forms, syzygies with coefficient tracking, lifting, and
//! ideal arithmetic built on elimination.

pub mod engine;
pub mod ideal;
pub mod modvec;

pub use engine::{
    canonical_sort, compare_canonical, is_groebner_basis, lift_through, module_groebner,
    reduce_by_set, submodule_contains, syzygies_with_background, GbState,
};
pub use ideal::{fresh_var_name, Ideal};
pub use modvec::{FreeModule, ModVec};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::FieldKind;
    use crate::algebra::monomial::MonomialOrder;
    use crate::algebra::parse::parse_polynomial;
    use crate::algebra::poly::PolyRing;
    use std::sync::Arc;

    fn ring3() -> Arc<PolyRing> {
        PolyRing::new(
            FieldKind::prime(32003).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = ring3();
        let fm = FreeModule::ungraded(r.clone(), 1);
        let x = fm.from_comps(vec![parse_polynomial(&r, "x").unwrap()]);
        let y = fm.from_comps(vec![parse_polynomial(&r, "y").unwrap()]);
        let syz = syzygies_with_background(&fm, &[x.clone(), y.clone()], &[]).unwrap();
        // The syzygy module of (x, y) is generated by (y, -x) alone.
        assert!(!syz.is_empty());
        let out_fm = FreeModule::new(r.clone(), vec![1, 1]);
        let expected = out_fm.from_comps(vec![
            parse_polynomial(&r, "y").unwrap(),
            parse_polynomial(&r, "-x").unwrap(),
        ]);
        // Every reported syzygy annihilates the generators...
        for s in &syz {
            let combo = s.comp(0).mul(x.comp(0)).add(&s.comp(1).mul(y.comp(0)));
            assert!(combo.is_zero());
        }
        // ...and the Koszul relation is generated.
        assert!(submodule_contains(&out_fm, &syz, &[], &expected));
    }

    #[test]
    fn koszul_syzygies_of_three_variables() {
        let r = ring3();
        let fm = FreeModule::ungraded(r.clone(), 1);
        let gens: Vec<ModVec> = ["x", "y", "z"]
            .iter()
            .map(|s| fm.from_comps(vec![parse_polynomial(&r, s).unwrap()]))
            .collect();
        let syz = syzygies_with_background(&fm, &gens, &[]).unwrap();
        let out_fm = FreeModule::new(r.clone(), vec![1, 1, 1]);
        for s in &syz {
            let mut combo = r.zero();
            for (i, g) in gens.iter().enumerate() {
                combo = combo.add(&s.comp(i).mul(g.comp(0)));
            }
            assert!(combo.is_zero(), "not a syzygy: {s:?}");
        }
        // All three Koszul relations must be generated.
        for (a, b, c) in [("y", "-x", "0"), ("z", "0", "-x"), ("0", "z", "-y")] {
            let v = out_fm.from_comps(vec![
                parse_polynomial(&r, a).unwrap(),
                parse_polynomial(&r, b).unwrap(),
                parse_polynomial(&r, c).unwrap(),
            ]);
            assert!(submodule_contains(&out_fm, &syz, &[], &v));
        }
    }

    #[test]
    fn syzygies_respect_background() {
        // Over R = k[x,y]/(x*y), the element y has the syzygy x*e against
        // the background ideal.
        let r = PolyRing::new(
            FieldKind::prime(32003).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let fm = FreeModule::ungraded(r.clone(), 1);
        let y = fm.from_comps(vec![parse_polynomial(&r, "y").unwrap()]);
        let bg = fm.from_comps(vec![parse_polynomial(&r, "x*y").unwrap()]);
        let syz = syzygies_with_background(&fm, &[y], &[bg]).unwrap();
        let out_fm = FreeModule::new(r.clone(), vec![1]);
        let expected = out_fm.from_comps(vec![parse_polynomial(&r, "x").unwrap()]);
        assert!(submodule_contains(&out_fm, &syz, &[], &expected));
    }

    #[test]
    fn lift_expresses_membership() {
        let r = ring3();
        let fm = FreeModule::ungraded(r.clone(), 1);
        let gens: Vec<ModVec> = ["x^2 - y", "x*y - z"]
            .iter()
            .map(|s| fm.from_comps(vec![parse_polynomial(&r, s).unwrap()]))
            .collect();
        // x^2*y - y^2 = y*(x^2 - y) is in the ideal.
        let target = fm.from_comps(vec![parse_polynomial(&r, "x^2*y - y^2").unwrap()]);
        let coeffs = lift_through(&fm, &target, &gens, &[]).unwrap().unwrap();
        let mut acc = r.zero();
        for (c, g) in coeffs.iter().zip(&gens) {
            acc = acc.add(&c.mul(g.comp(0)));
        }
        assert_eq!(acc, target.comp(0).clone());
        // Something outside the ideal fails to lift.
        let bad = fm.from_comps(vec![parse_polynomial(&r, "x").unwrap()]);
        assert!(lift_through(&fm, &bad, &gens, &[]).unwrap().is_none());
    }

    #[test]
    fn segre_minor_syzygies_have_rank_two_shape() {
        // The three 2x2 minors of a generic 3x2 matrix admit exactly two
        // independent linear syzygies (the Eagon-Northcott shape 1, 3, 2).
        let vars: Vec<String> = vec![
            "x11".into(),
            "x12".into(),
            "x21".into(),
            "x22".into(),
            "x31".into(),
            "x32".into(),
        ];
        let r = PolyRing::new(FieldKind::prime(32003).unwrap(), vars, MonomialOrder::GrevLex)
            .unwrap();
        let minors = [
            "x11*x22 - x12*x21",
            "x11*x32 - x12*x31",
            "x21*x32 - x22*x31",
        ];
        let fm = FreeModule::ungraded(r.clone(), 1);
        let gens: Vec<ModVec> = minors
            .iter()
            .map(|s| fm.from_comps(vec![parse_polynomial(&r, s).unwrap()]))
            .collect();
        let syz = syzygies_with_background(&fm, &gens, &[]).unwrap();
        for s in &syz {
            let mut combo = r.zero();
            for (i, g) in gens.iter().enumerate() {
                combo = combo.add(&s.comp(i).mul(g.comp(0)));
            }
            assert!(combo.is_zero());
        }
        // The two row syzygies (linear entries) generate; check one of them:
        // x31 * m1 - x21 * m2 + x11 * m3 = 0.
        let out_fm = FreeModule::new(r.clone(), vec![2, 2, 2]);
        let row = out_fm.from_comps(vec![
            parse_polynomial(&r, "x31").unwrap(),
            parse_polynomial(&r, "-x21").unwrap(),
            parse_polynomial(&r, "x11").unwrap(),
        ]);
        assert!(submodule_contains(&out_fm, &syz, &[], &row));
        let row2 = out_fm.from_comps(vec![
            parse_polynomial(&r, "x32").unwrap(),
            parse_polynomial(&r, "-x22").unwrap(),
            parse_polynomial(&r, "x12").unwrap(),
        ]);
        assert!(submodule_contains(&out_fm, &syz, &[], &row2));
    }
}
