//! Property-level checks of the engine through its public API: Buchberger
//! verification of Groebner bases on randomized ideals, normal-form laws,
//! resolution complexes (d^2 = 0 and minimality), divisorial-hull
//! idempotence, and the group laws of divisor-class arithmetic.

use std::sync::Arc;

use canonica_core::algebra::{
    parse_polynomial, FieldKind, Monomial, MonomialOrder, PolyRing, Polynomial,
};
use canonica_core::builders::{build_chain, build_det_ring, ChainStepSpec};
use canonica_core::divisor::{reflexive_power, FractionalIdeal};
use canonica_core::groebner::Ideal;
use canonica_core::homalg::{QuotientRing, Resolution};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring_over(field: FieldKind, vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(
        field,
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::GrevLex,
    )
    .expect("valid ring")
}

/// A random nonzero polynomial with bounded support, built term by term so
/// the distribution is the same over every coefficient field.
fn random_poly(
    ring: &Arc<PolyRing>,
    rng: &mut ChaCha8Rng,
    max_terms: usize,
    max_exp: u32,
    max_coeff: i128,
) -> Polynomial {
    loop {
        let terms = rng.gen_range(1..=max_terms);
        let field = ring.field();
        let mut acc = ring.zero();
        for _ in 0..terms {
            let exps: Vec<u32> = (0..ring.nvars())
                .map(|_| rng.gen_range(0..=max_exp))
                .collect();
            let c = rng.gen_range(1..=max_coeff);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let term = ring
                .monomial_poly(Monomial::new(exps))
                .scale(&field.from_i128(sign * c));
            acc = acc.add(&term);
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}

fn random_ideal(ring: &Arc<PolyRing>, rng: &mut ChaCha8Rng, max_coeff: i128) -> Ideal {
    let ngens = rng.gen_range(2..=4);
    let gens = (0..ngens)
        .map(|_| random_poly(ring, rng, 4, 2, max_coeff))
        .collect();
    Ideal::new(ring.clone(), gens)
}

/// 200 random small ideals split across F_32003 (three and four variables)
/// and Q. Every completed basis must satisfy the Buchberger criterion, and
/// the normal form against it must be idempotent, vanish on members, and be
/// insensitive to adding members.
#[test]
fn random_ideals_satisfy_buchberger_and_normal_form_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let configs: Vec<(Arc<PolyRing>, i128, usize)> = vec![
        (ring_over(FieldKind::default_prime(), &["x", "y", "z"]), 32002, 120),
        (ring_over(FieldKind::default_prime(), &["x", "y", "z", "w"]), 32002, 40),
        (ring_over(FieldKind::Rationals, &["x", "y", "z"]), 10, 40),
    ];
    let mut total = 0usize;
    for (ring, max_coeff, count) in &configs {
        for _ in 0..*count {
            total += 1;
            let idl = random_ideal(ring, &mut rng, *max_coeff);
            assert!(
                idl.verify_groebner(),
                "Buchberger criterion failed for generators {:?}",
                idl.generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
            );
            let f = random_poly(ring, &mut rng, 3, 2, *max_coeff);
            let nf = idl.normal_form(&f);
            assert_eq!(idl.normal_form(&nf), nf, "normal form must be idempotent");
            for g in idl.generators() {
                assert!(
                    idl.normal_form(g).is_zero(),
                    "generators must reduce to zero"
                );
                assert_eq!(
                    idl.normal_form(&f.add(&g.mul(&nf))),
                    idl.normal_form(&f),
                    "adding a member must not change the normal form"
                );
            }
        }
    }
    assert_eq!(total, 200);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Ring laws for polynomial arithmetic over the default prime field:
    /// associativity, commutativity, distributivity, and cancellation.
    #[test]
    fn polynomial_arithmetic_laws(
        ta in proptest::collection::vec(((0u32..4, 0u32..4, 0u32..4), -50i128..50), 0..5),
        tb in proptest::collection::vec(((0u32..4, 0u32..4, 0u32..4), -50i128..50), 0..5),
        tc in proptest::collection::vec(((0u32..4, 0u32..4, 0u32..4), -50i128..50), 0..5),
    ) {
        let ring = ring_over(FieldKind::default_prime(), &["x", "y", "z"]);
        let field = ring.field();
        let build = |ts: &[((u32, u32, u32), i128)]| {
            let terms = ts
                .iter()
                .map(|((e0, e1, e2), c)| {
                    (Monomial::new(vec![*e0, *e1, *e2]), field.from_i128(*c))
                })
                .collect();
            ring.from_terms(terms)
        };
        let (a, b, c) = (build(&ta), build(&tb), build(&tc));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&ring.one()), a.clone());
        prop_assert!(a.mul(&ring.zero()).is_zero());
    }

    /// Monomial lattice laws: gcd/lcm factor the product, divisibility is
    /// exponentwise, and the graded orders respect total degree.
    #[test]
    fn monomial_lattice_and_order_laws(
        e1 in proptest::collection::vec(0u32..6, 3),
        e2 in proptest::collection::vec(0u32..6, 3),
    ) {
        let m1 = Monomial::new(e1);
        let m2 = Monomial::new(e2);
        prop_assert_eq!(m1.mul(&m2), m1.lcm(&m2).mul(&m1.gcd(&m2)));
        prop_assert!(m1.gcd(&m2).divides(&m1) && m1.gcd(&m2).divides(&m2));
        prop_assert!(m1.divides(&m1.lcm(&m2)) && m2.divides(&m1.lcm(&m2)));
        if m1.divides(&m2) {
            prop_assert_eq!(m1.divide_into(&m2).mul(&m1), m2.clone());
        }
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            prop_assert_eq!(order.compare(&m1, &m1), std::cmp::Ordering::Equal);
            prop_assert_eq!(order.compare(&m1, &m2), order.compare(&m2, &m1).reverse());
        }
        if m1.total_degree() < m2.total_degree() {
            prop_assert_eq!(
                MonomialOrder::GrevLex.compare(&m1, &m2),
                std::cmp::Ordering::Less
            );
        }
    }

    /// The printed form of a polynomial parses back to the same polynomial,
    /// over both coefficient fields.
    #[test]
    fn polynomial_display_round_trips_through_parser(
        ts in proptest::collection::vec(((0u32..5, 0u32..5), -99i128..100), 0..6),
        rational in proptest::bool::ANY,
    ) {
        let field = if rational {
            FieldKind::Rationals
        } else {
            FieldKind::default_prime()
        };
        let ring = ring_over(field, &["x", "y"]);
        let terms = ts
            .iter()
            .map(|((e0, e1), c)| (Monomial::new(vec![*e0, *e1]), field.from_i128(*c)))
            .collect();
        let p = ring.from_terms(terms);
        let reparsed = parse_polynomial(&ring, &p.to_string()).expect("printed form parses");
        prop_assert_eq!(reparsed, p);
    }
}

fn assert_resolution_is_minimal_complex(res: &Resolution, what: &str) {
    assert!(res.verify_complex(), "{what}: d^2 != 0");
    for i in 1..=res.length() {
        for col in res.differential(i) {
            for entry in col.comps() {
                assert!(
                    entry.degree().map_or(true, |d| d >= 1),
                    "{what}: differential d_{i} has a unit entry, resolution not minimal"
                );
            }
        }
    }
}

/// Minimal free resolutions over quotient rings: the differentials compose
/// to zero in the ring and never carry unit entries. The module family
/// mirrors the ones the verification commands resolve: residue fields,
/// determinantal primes and canonical modules, and artinian chain rings.
#[test]
fn resolutions_are_minimal_complexes() {
    for field in [FieldKind::default_prime(), FieldKind::Rationals] {
        let det22 = build_det_ring(field, 2, 2, 1).expect("det 2 2 1");
        let mut res = det22.ring().residue_module().minimal().resolution(5);
        assert_resolution_is_minimal_complex(&mut res, "residue field of det 2 2 1");

        let det32 = build_det_ring(field, 3, 2, 1).expect("det 3 2 1");
        let res = det32.ring().residue_module().minimal().resolution(4);
        assert_resolution_is_minimal_complex(&res, "residue field of det 3 2 1");

        let p_mod = det32
            .row_prime()
            .and_then(|p| p.module())
            .expect("row prime module")
            .minimal();
        let res = p_mod.resolution(4);
        assert_resolution_is_minimal_complex(&res, "row prime of det 3 2 1");

        let w_mod = det32
            .canonical_module()
            .and_then(|w| w.module())
            .expect("canonical module")
            .minimal();
        let res = w_mod.resolution(4);
        assert_resolution_is_minimal_complex(&res, "canonical module of det 3 2 1");

        let chain = build_chain(field, &[], &[ChainStepSpec::TrivialExt { q: 2 }])
            .expect("trivial extension chain");
        let res = chain.final_ring().residue_module().minimal().resolution(5);
        assert_resolution_is_minimal_complex(&res, "residue field of k ltimes k^2");
    }
}

/// Betti numbers of a finished resolution: over the ambient polynomial ring
/// the resolution of the determinantal quotient stops at its grade.
#[test]
fn ambient_resolution_finishes_at_the_grade() {
    let det = build_det_ring(FieldKind::default_prime(), 3, 2, 1).expect("det 3 2 1");
    let mut res = det.ring().ring_module().ambient_resolution();
    res.extend_to(8);
    assert!(res.is_finished());
    assert_eq!(res.betti(0), 1);
    assert!(res.betti(det.grade()) > 0);
    assert_eq!(res.betti(det.grade() + 1), 0);
    assert_resolution_is_minimal_complex(&res, "ambient resolution of det 3 2 1");
}

/// The divisorial hull stabilizes after one application and always yields a
/// divisorial ideal; ordinary products of primes are the interesting cases
/// because they need not be divisorial themselves.
#[test]
fn divisorial_hull_is_idempotent() {
    let det = build_det_ring(FieldKind::default_prime(), 3, 2, 1).expect("det 3 2 1");
    let p = det.row_prime().expect("row prime");
    let q = det.col_prime().expect("col prime");
    let unit = FractionalIdeal::unit(det.ring().clone());
    let candidates = vec![
        unit.clone(),
        p.clone(),
        q.clone(),
        p.mul(&p),
        p.mul(&q),
        q.mul(&q).mul(&p),
    ];
    for x in &candidates {
        let h = x.hull().expect("hull");
        assert!(h.is_divisorial().expect("divisorial test"));
        let hh = h.hull().expect("second hull");
        assert!(hh.equals(&h), "hull must be idempotent");
    }
    assert!(unit.hull().expect("unit hull").equals(&unit));
    assert!(p.mul(&q).hull().expect("pq hull").class_equals(&unit).expect("class test"));
}

/// Divisor-class arithmetic is a group law on reflexive powers: hulled
/// products add exponents, the unit class is the identity, and opposite
/// powers are inverse to each other, for all |a|, |b| <= 2.
#[test]
fn class_arithmetic_satisfies_group_laws() {
    let det = build_det_ring(FieldKind::default_prime(), 3, 2, 1).expect("det 3 2 1");
    let p = det.row_prime().expect("row prime");
    let unit = FractionalIdeal::unit(det.ring().clone());
    let power = |c: i64| reflexive_power(&p, c).expect("reflexive power");
    for a in -2..=2i64 {
        let pa = power(a);
        assert!(
            pa.mul(&unit).hull().expect("hull").class_equals(&pa).expect("class test"),
            "unit class must act as the identity at a={a}"
        );
        assert!(
            pa.mul(&power(-a)).hull().expect("hull").class_equals(&unit).expect("class test"),
            "opposite powers must be inverse at a={a}"
        );
        for b in -2..=2i64 {
            let lhs = pa.mul(&power(b)).hull().expect("hull");
            assert!(
                lhs.class_equals(&power(a + b)).expect("class test"),
                "class addition failed at a={a}, b={b}"
            );
        }
    }
}

/// The column prime represents the inverse of the row-prime class: their
/// hulled product is principal, and reflexive powers of q match negative
/// powers of p.
#[test]
fn column_prime_inverts_the_row_class() {
    let det = build_det_ring(FieldKind::default_prime(), 3, 2, 1).expect("det 3 2 1");
    let p = det.row_prime().expect("row prime");
    let q = det.col_prime().expect("col prime");
    for v in 1..=2i64 {
        let qv = reflexive_power(&q, v).expect("q power");
        let p_neg = reflexive_power(&p, -v).expect("p power");
        assert!(qv.class_equals(&p_neg).expect("class test"));
    }
}

/// Quotient-ring normal forms are ring homomorphisms onto the set of
/// reduced representatives: compatible with sums and products and zero
/// exactly on the defining ideal.
#[test]
fn quotient_normal_form_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd15c0);
    let det = build_det_ring(FieldKind::default_prime(), 3, 2, 1).expect("det 3 2 1");
    let ring: &QuotientRing = det.ring();
    let ambient = ring.ambient();
    for _ in 0..40 {
        let a = random_poly(ambient, &mut rng, 3, 2, 32002);
        let b = random_poly(ambient, &mut rng, 3, 2, 32002);
        let sum_nf = ring.normal_form(&a.add(&b));
        assert_eq!(
            sum_nf,
            ring.normal_form(&ring.normal_form(&a).add(&ring.normal_form(&b)))
        );
        let prod_nf = ring.normal_form(&a.mul(&b));
        assert_eq!(prod_nf, ring.mul_nf(&ring.normal_form(&a), &ring.normal_form(&b)));
        for g in ring.defining_ideal().generators() {
            assert!(ring.is_zero_element(&g.mul(&a)));
        }
    }
}
