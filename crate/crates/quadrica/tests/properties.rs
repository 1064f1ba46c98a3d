//! Property tests: ring axioms, order axioms, print/parse round-trips,
//! linear changes, and the Groebner soundness properties.

use std::sync::Arc;

use proptest::prelude::*;
use quadrica::field::{CoefficientField, Scalar};
use quadrica::groebner;
use quadrica::ideal::Ideal;
use quadrica::monomial::Monomial;
use quadrica::order::{standard_orders, MonomialOrder};
use quadrica::parse::parse_polynomial;
use quadrica::poly::Polynomial;
use quadrica::ring::{LinearChange, PolyRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn qq_ring() -> Arc<PolyRing> {
    PolyRing::grevlex(CoefficientField::Rationals, &["x", "y", "z"])
}

fn fp_ring() -> Arc<PolyRing> {
    PolyRing::grevlex(CoefficientField::prime(101).unwrap(), &["x", "y", "z"])
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u16..4, 3).prop_map(Monomial)
}

fn arb_poly(ring: Arc<PolyRing>) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((-20i64..=20, arb_monomial()), 0..6).prop_map(move |terms| {
        Polynomial::from_terms(
            ring.clone(),
            terms
                .into_iter()
                .map(|(c, m)| (ring.field.from_i64(c), m))
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms_over_qq(
        a in arb_poly(qq_ring()),
        b in arb_poly(qq_ring()),
        c in arb_poly(qq_ring()),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn ring_axioms_over_f101(
        a in arb_poly(fp_ring()),
        b in arb_poly(fp_ring()),
        c in arb_poly(fp_ring()),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn order_axioms(m1 in arb_monomial(), m2 in arb_monomial(), m in arb_monomial()) {
        let one = Monomial::one(3);
        for order in standard_orders(3) {
            // 1 <= m for all m
            prop_assert_ne!(order.compare(&one, &m1), std::cmp::Ordering::Greater);
            // multiplicativity: m1 < m2 implies m*m1 < m*m2
            let base = order.compare(&m1, &m2);
            let shifted = order.compare(&m1.mul(&m), &m2.mul(&m));
            prop_assert_eq!(base, shifted);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_parse_roundtrip_qq(p in arb_poly(qq_ring())) {
        let r = qq_ring();
        let reparsed = parse_polynomial(&p.to_string(), &r).unwrap();
        prop_assert_eq!(p, reparsed);
    }

    #[test]
    fn print_parse_roundtrip_f101(p in arb_poly(fp_ring())) {
        let r = fp_ring();
        let reparsed = parse_polynomial(&p.to_string(), &r).unwrap();
        prop_assert_eq!(p, reparsed);
    }
}

#[test]
fn linear_change_preserves_homogeneity_and_inverts() {
    let r = qq_ring();
    let x_sq = Polynomial::var(r.clone(), 0).pow(2);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let phi = LinearChange::random(r.clone(), &mut rng);
        let moved = phi.apply(&x_sq);
        assert!(moved.is_homogeneous());
        assert_eq!(moved.degree(), Some(2));
        let back = phi.inverse().apply(&moved);
        assert_eq!(back, x_sq);
    }
}

#[test]
fn substitution_example_from_the_proof() {
    // replacing a2 with a1 + a2 sends a1*a2 to a1^2 + a1*a2
    let r = PolyRing::grevlex(CoefficientField::Rationals, &["a1", "a2"]);
    let phi = LinearChange::elementary(r.clone(), 1, &[(0, r.field.one())]).unwrap();
    let p = parse_polynomial("a1*a2", &r).unwrap();
    assert_eq!(
        phi.apply(&p),
        parse_polynomial("a1^2 + a1*a2", &r).unwrap()
    );
}

#[test]
fn membership_soundness_500_trials() {
    // Random coefficient combinations of the generators always reduce to
    // zero against the reduced basis.
    let r = fp_ring();
    let gens: Vec<Polynomial> = ["x^2 - y*z", "x*y + z^2", "y^2 - x*z"]
        .iter()
        .map(|s| parse_polynomial(s, &r).unwrap())
        .collect();
    let gb = groebner::reduced_groebner_basis(&gens, &MonomialOrder::GrevLex, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let mut p = Polynomial::zero(r.clone());
        for g in &gens {
            let c = r.field.from_i64(rng.gen_range(0..101));
            let m = Monomial(vec![
                rng.gen_range(0..2u16),
                rng.gen_range(0..2u16),
                rng.gen_range(0..2u16),
            ]);
            p = p.add(&g.mul_term(&c, &m));
        }
        if p.is_zero() {
            continue;
        }
        let nf = groebner::normal_form(&p, &gb.gens, &gb.order).unwrap();
        assert!(nf.remainder.is_zero());
    }
}

#[test]
fn reduced_basis_unique_under_recombination_50_trials() {
    let r = fp_ring();
    let gens: Vec<Polynomial> = ["x^2 - y*z", "x*y + z^2"]
        .iter()
        .map(|s| parse_polynomial(s, &r).unwrap())
        .collect();
    let reference = groebner::reduced_groebner_basis(&gens, &MonomialOrder::GrevLex, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        // invertible 2x2 scalar recombination
        let (a, b, c, d) = loop {
            let v: Vec<Scalar> = (0..4).map(|_| r.field.random(&mut rng)).collect();
            let det = v[0].mul(&v[3]).sub(&v[1].mul(&v[2]));
            if !det.is_zero() {
                break (v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
            }
        };
        let g1 = gens[0].scale(&a).add(&gens[1].scale(&b));
        let g2 = gens[0].scale(&c).add(&gens[1].scale(&d));
        let gb = groebner::reduced_groebner_basis(&[g1, g2], &MonomialOrder::GrevLex, None).unwrap();
        assert_eq!(gb.gens, reference.gens);
    }
}

#[test]
fn every_buchberger_output_passes_its_own_criterion() {
    let r = qq_ring();
    for gens in [
        vec!["x^2 - y*z", "x*y + z^2"],
        vec!["x*y - z^2", "y*z - x^2"],
        vec!["x^2", "x*y + y^2"],
    ] {
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|s| parse_polynomial(s, &r).unwrap())
            .collect();
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = groebner::buchberger(&polys, &order, None).unwrap();
            assert!(groebner::is_groebner(&gb.gens, &order).unwrap());
            for i in 0..gb.gens.len() {
                for j in i + 1..gb.gens.len() {
                    let s = groebner::s_polynomial(&gb.gens[i], &gb.gens[j], &order);
                    let nf = groebner::normal_form(&s, &gb.gens, &order).unwrap();
                    assert!(nf.remainder.is_zero());
                }
            }
        }
    }
}

#[test]
fn colon_product_is_contained_in_the_ideal() {
    let r = qq_ring();
    let parse = |s: &str| parse_polynomial(s, &r).unwrap();
    let i = Ideal::new(r.clone(), vec![parse("x^2"), parse("x*y"), parse("y^3")]);
    for f in ["x", "y", "x + y", "x*y - z^2"] {
        let f = parse(f);
        let q = i.quotient(&f).unwrap();
        for g in &q.gens {
            assert!(i.contains(&g.mul(&f)));
        }
    }
}

#[test]
fn intersect_is_commutative_associative_idempotent() {
    let r = qq_ring();
    let parse = |s: &str| parse_polynomial(s, &r).unwrap();
    let a = Ideal::new(r.clone(), vec![parse("x"), parse("y^2")]);
    let b = Ideal::new(r.clone(), vec![parse("y"), parse("z")]);
    let c = Ideal::new(r.clone(), vec![parse("x + z")]);
    assert!(a.intersect(&b).equal(&b.intersect(&a)));
    assert!(a
        .intersect(&b.intersect(&c))
        .equal(&a.intersect(&b).intersect(&c)));
    assert!(a.intersect(&a).equal(&a));
}

#[test]
fn minimal_generator_count_is_invariant_under_recombination() {
    let r = PolyRing::grevlex(CoefficientField::prime(101).unwrap(), &["x", "y", "z", "w"]);
    let parse = |s: &str| parse_polynomial(s, &r).unwrap();
    let gens = vec![parse("x*z"), parse("x*w"), parse("y*z"), parse("y*w")];
    let base = Ideal::new(r.clone(), gens.clone());
    let (_, g) = base.minimal_generators().unwrap();
    assert_eq!(g, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..10 {
        let k = gens.len();
        let mat = loop {
            let rows: Vec<Vec<Scalar>> = (0..k)
                .map(|_| (0..k).map(|_| r.field.random(&mut rng)).collect())
                .collect();
            let m = quadrica::linalg::Matrix::from_rows(&r.field, rows);
            if !m.determinant().is_zero() {
                break m;
            }
        };
        let recombined: Vec<Polynomial> = (0..k)
            .map(|i| {
                let mut acc = Polynomial::zero(r.clone());
                for (j, gen) in gens.iter().enumerate() {
                    acc = acc.add(&gen.scale(mat.at(i, j)));
                }
                acc
            })
            .collect();
        let (_, g2) = Ideal::new(r.clone(), recombined).minimal_generators().unwrap();
        assert_eq!(g2, 4);
    }
}

#[test]
fn elimination_handles_non_homogeneous_input() {
    // eliminate t from (t*x - 1, t*y): t*y = y * (t*x) - ... gives (y).
    let r = PolyRing::grevlex(CoefficientField::Rationals, &["t", "x", "y"]);
    let parse = |s: &str| parse_polynomial(s, &r).unwrap();
    let i = Ideal::new(r.clone(), vec![parse("t*x - 1"), parse("t*y")]);
    let e = i.eliminate(&[0]);
    assert!(e.equal(&Ideal::new(r.clone(), vec![parse("y")])));
}

#[test]
fn values_are_shareable_across_threads() {
    // The concurrency contract: immutable values move between threads and
    // independent Groebner runs proceed concurrently.
    let r = fp_ring();
    let gens: Vec<Polynomial> = ["x^2 - y*z", "x*y + z^2", "y^2 - x*z"]
        .iter()
        .map(|s| parse_polynomial(s, &r).unwrap())
        .collect();
    let ideal = Ideal::new(r.clone(), gens.clone());
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let gens = gens.clone();
            let ideal = ideal.clone();
            std::thread::spawn(move || {
                let gb = groebner::reduced_groebner_basis(&gens, &MonomialOrder::GrevLex, None)
                    .unwrap();
                assert!(ideal.contains(&gens[0]));
                gb.gens.len()
            })
        })
        .collect();
    let sizes: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(sizes.windows(2).all(|w| w[0] == w[1]));
}
