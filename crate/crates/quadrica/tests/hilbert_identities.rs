//! Hilbert-series identities: the numerator equation systems behind the
//! classification, additivity along the colon exact sequence, and
//! invariance of the multiplicity under coordinate changes.

use std::sync::Arc;

use quadrica::constructions::{edge_ideal, table1_graphs};
use quadrica::field::CoefficientField;
use quadrica::ideal::Ideal;
use quadrica::invariants::*;
use quadrica::parse::parse_polynomial;
use quadrica::poly::Polynomial;
use quadrica::resolution::betti_table;
use quadrica::ring::{LinearChange, PolyRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::grevlex(CoefficientField::Rationals, vars)
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::new(
        r.clone(),
        gens.iter()
            .map(|s| parse_polynomial(s, r).unwrap())
            .collect(),
    )
}

fn eval_derivs_at_one(q: &[i64]) -> (i64, i64, i64) {
    let q1: i64 = q.iter().sum();
    let dq1: i64 = q.iter().enumerate().map(|(i, &c)| i as i64 * c).sum();
    let ddq1: i64 = q
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as i64) * (i as i64 - 1) * c)
        .sum();
    (q1, dq1, ddq1)
}

#[test]
fn numerators_of_tables_iii_and_iv() {
    // Path P5: Q = 1 - 4t^2 + 3t^3 + t^4 - t^5 (the a = 3, b = 1, d = 1
    // solution of the height-two multiplicity-one system).
    let r5 = ring(&["x1", "x2", "x3", "x4", "x5"]);
    let p5 = edge_ideal(&table1_graphs()[4].1, &r5).unwrap();
    let bt = betti_table(&p5).unwrap();
    let q = hilbert_numerator(&bt);
    assert_eq!(q, vec![1, 0, -4, 3, 1, -1]);
    let (q1, dq1, ddq1) = eval_derivs_at_one(&q);
    assert_eq!((q1, dq1, ddq1 / 2), (0, 0, 1));

    // Two disjoint P3: Q = 1 - 4t^2 + 2t^3 + 4t^4 - 4t^5 + t^6, the
    // a = 2, c = 0, b = 4, d = 4, e = 1, f = 0 solution.
    let r6 = ring(&["x1", "x2", "x3", "x4", "x5", "x6"]);
    let p33 = edge_ideal(&table1_graphs()[5].1, &r6).unwrap();
    let q = hilbert_numerator(&betti_table(&p33).unwrap());
    assert_eq!(q, vec![1, 0, -4, 2, 4, -4, 1]);
    let (q1, dq1, ddq1) = eval_derivs_at_one(&q);
    assert_eq!((q1, dq1, ddq1 / 2), (0, 0, 1));
}

#[test]
fn pd3_system_has_the_unique_stated_solution() {
    // a + b - d = 3; 3a + 4b - 5d = 8; 3a + 6b - 10d = 5 over nonnegative
    // integers: only (3, 1, 1). Brute-force enumeration is the oracle.
    let mut solutions = Vec::new();
    for a in 0..=6i64 {
        for b in 0..=6i64 {
            for d in 0..=6i64 {
                if a + b - d == 3 && 3 * a + 4 * b - 5 * d == 8 && 3 * a + 6 * b - 10 * d == 5 {
                    solutions.push((a, b, d));
                }
            }
        }
    }
    assert_eq!(solutions, vec![(3, 1, 1)]);
}

#[test]
fn pd4_system_reduces_and_forces_table_iv() {
    // The original system
    //   a + b - c - d + e + f = 3
    //   3a + 4b - 4c - 5d + 6e + 7f = 8
    //   3a + 6b - 6c - 10d + 15e + 21f = 5
    // is equivalent (by row reduction) to
    //   a + e + 3f = 3,  b - c - 3e - 8f = 1,  d - 3e - 6f = 1,
    // and with nonnegative integers, a >= 2, pd = 4 (so e + f >= 1), and
    // c = 0, the only solution is table (iv): a=2, b=4, d=4, e=1, f=0.
    let mut table_iv_solutions = Vec::new();
    for a in 0..=8i64 {
        for b in 0..=12i64 {
            for c in 0..=8i64 {
                for d in 0..=12i64 {
                    for e in 0..=4i64 {
                        for f in 0..=4i64 {
                            let orig = a + b - c - d + e + f == 3
                                && 3 * a + 4 * b - 4 * c - 5 * d + 6 * e + 7 * f == 8
                                && 3 * a + 6 * b - 6 * c - 10 * d + 15 * e + 21 * f == 5;
                            let reduced = a + e + 3 * f == 3
                                && b - c - 3 * e - 8 * f == 1
                                && d - 3 * e - 6 * f == 1;
                            assert_eq!(orig, reduced, "systems differ at {:?}", (a, b, c, d, e, f));
                            if orig && a >= 2 && e + f >= 1 && c == 0 {
                                table_iv_solutions.push((a, b, c, d, e, f));
                            }
                        }
                    }
                }
            }
        }
    }
    assert_eq!(table_iv_solutions, vec![(2, 4, 0, 4, 1, 0)]);
}

#[test]
fn mult2_families_satisfy_the_multiplicity_two_identities() {
    // Q(1) = Q'(1) = 0 and Q''(1)/2 = e = 2 for the intersection form.
    let r = ring(&["x", "y", "z", "w"]);
    let i = ideal(&r, &["x*z", "x*w", "y*z", "y*w"]);
    let q = hilbert_numerator(&betti_table(&i).unwrap());
    let (q1, dq1, ddq1) = eval_derivs_at_one(&q);
    assert_eq!((q1, dq1), (0, 0));
    assert_eq!(ddq1 / 2, 2);
    let rep = codim_multiplicity(&q, 4).unwrap();
    assert_eq!((rep.codim, rep.multiplicity), (2, 2));
}

#[test]
fn additivity_along_the_colon_exact_sequence() {
    // 0 -> S/(J : q)(-2) -> S/J -> S/(J + q) -> 0 gives
    // Q_{S/(J+q)} = Q_{S/J} - t^2 Q_{S/(J:q)} exactly.
    let r = ring(&["x", "y", "z", "w"]);
    let j = ideal(&r, &["x^2", "x*y", "y^2"]);
    let q = parse_polynomial("x*z + y*w", &r).unwrap();
    let colon = j.quotient(&q).unwrap();
    let total = Ideal::new(
        r.clone(),
        j.gens.iter().cloned().chain([q.clone()]).collect(),
    );
    let qj = hilbert_numerator_from_initial(&j);
    let qc = hilbert_numerator_from_initial(&colon);
    let qi = hilbert_numerator_from_initial(&total);
    // qi = qj - t^2 * qc
    let mut rhs = qj.clone();
    rhs.resize(rhs.len().max(qc.len() + 2), 0);
    for (k, c) in qc.iter().enumerate() {
        rhs[k + 2] -= c;
    }
    while rhs.last() == Some(&0) {
        rhs.pop();
    }
    assert_eq!(qi, rhs);
}

#[test]
fn multiplicity_is_invariant_under_coordinate_changes() {
    let r = ring(&["x", "y", "z", "w"]);
    let fixtures = [
        vec!["x*z", "x*w", "y*z", "y*w"],
        vec!["x^2", "x*y", "y^2", "x*z + y*w"],
        vec!["x^2 - y*w", "z^2 + x*y"],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for gens in fixtures {
        let i = ideal(&r, &gens);
        let base = hilbert_report(&i).unwrap();
        for _ in 0..20 {
            let phi = LinearChange::random(r.clone(), &mut rng);
            let moved = Ideal::new(
                r.clone(),
                i.gens.iter().map(|g| phi.apply(g)).collect(),
            );
            let rep = hilbert_report(&moved).unwrap();
            assert_eq!(rep.multiplicity, base.multiplicity);
            assert_eq!(rep.codim, base.codim);
        }
    }
}

#[test]
fn hilbert_function_oracle_matches_series_on_fixtures() {
    let r = ring(&["x", "y", "z", "w"]);
    for gens in [
        vec!["x*z", "x*w", "y*z", "y*w"],
        vec!["x^2", "x*y", "y^2", "x*z + y*w"],
        vec!["x^2", "y^2"],
    ] {
        let i = ideal(&r, &gens);
        let q = hilbert_numerator_from_initial(&i);
        let counted = hilbert_function_oracle(&i, 10).unwrap();
        assert_eq!(counted, expand_series(&q, 4, 10));
    }
    // small artinian case in two variables
    let r2 = ring(&["x", "y"]);
    let art = ideal(&r2, &["x^2", "x*y", "y^2"]);
    assert_eq!(
        hilbert_function_oracle(&art, 4).unwrap(),
        vec![1, 2, 0, 0, 0]
    );
    // free ring counts binomials
    assert_eq!(
        hilbert_function_oracle(&Ideal::zero(r2), 4).unwrap(),
        vec![1, 2, 3, 4, 5]
    );
}

#[test]
fn engheta_families_report_height_equals_multiplicity_equals_two() {
    let r = ring(&["x", "y", "z", "w"]);
    let q_poly = |s: &str| parse_polynomial(s, &r).unwrap();
    // (i_b)-style instance in four variables
    let ib = Ideal::new(
        r.clone(),
        vec![
            q_poly("x*z"),
            q_poly("y*z"),
            q_poly("z^2"),
            q_poly("x^2"),
        ],
    );
    let rep = hilbert_report(&ib).unwrap();
    assert_eq!((rep.codim, rep.multiplicity), (2, 2));
    let zero = Polynomial::zero(r.clone());
    drop(zero);
}
