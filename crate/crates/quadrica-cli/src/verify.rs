//! The paper-table verification suite: every criterion the artifact must
//! reproduce, each implemented as one named check with exact expectations
//! and explicit runtime budgets. Golden tables live in-repo as text and are
//! diffed byte for byte.

use std::sync::Arc;
use std::time::{Duration, Instant};

use quadrica::constructions::*;
use quadrica::field::CoefficientField;
use quadrica::groebner;
use quadrica::ideal::Ideal;
use quadrica::invariants::*;
use quadrica::koszul::*;
use quadrica::order::{proof_product_orders, standard_orders, MonomialOrder};
use quadrica::parse::parse_polynomial;
use quadrica::poly::Polynomial;
use quadrica::resolution::{betti_oracle, betti_table, minimize, BettiTable};
use quadrica::ring::PolyRing;

pub struct CriterionResult {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

const GOLDEN_I: &str = include_str!("../golden/table_i.txt");
const GOLDEN_II: &str = include_str!("../golden/table_ii.txt");
const GOLDEN_III: &str = include_str!("../golden/table_iii.txt");
const GOLDEN_IV: &str = include_str!("../golden/table_iv.txt");

const CRITERIA: [(&str, fn() -> Result<(), String>); 12] = [
    ("01-table1-reproduction", criterion_table1),
    ("02-main-theorem-tables", criterion_main_tables),
    ("03-mapping-cones", criterion_mapping_cones),
    ("04-hilbert-system", criterion_hilbert_system),
    ("05-colon-identities", criterion_colon_identities),
    ("06-g-quadratic-witnesses", criterion_g_quadratic),
    ("07-remark-example", criterion_remark_example),
    ("08-thm29-sampling", criterion_sampling),
    ("09-socle-property", criterion_socle),
    ("10-oracle-equivalence", criterion_oracles),
    ("11-classifier-roundtrip", criterion_classifier),
    ("12-battery-consistency", criterion_battery),
];

pub fn criterion_names() -> Vec<&'static str> {
    CRITERIA.iter().map(|(name, _)| *name).collect()
}

pub fn run_all(filter: Option<&str>) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter(|(name, _)| filter.map_or(true, |f| name.contains(f)))
        .map(|(name, f)| CriterionResult {
            name,
            outcome: f(),
        })
        .collect()
}

fn qq_vars(n: usize) -> Arc<PolyRing> {
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    PolyRing::new(CoefficientField::Rationals, vars, MonomialOrder::GrevLex).unwrap()
}

fn check_budget(name: &str, start: Instant, budget: Duration) -> Result<(), String> {
    let elapsed = start.elapsed();
    if elapsed > budget {
        return Err(format!(
            "{name} exceeded its runtime budget: {elapsed:?} > {budget:?}"
        ));
    }
    Ok(())
}

fn diff_table(got: &BettiTable, want_text: &str, label: &str) -> Result<(), String> {
    let got_text = format!("{got}\n");
    if got_text == want_text {
        Ok(())
    } else {
        Err(format!(
            "{label}: expected\n{want_text}computed\n{got_text}"
        ))
    }
}

/// Criterion 1: each of the six classified-table graphs reproduces its row
/// exactly, within five seconds total.
fn criterion_table1() -> Result<(), String> {
    let start = Instant::now();
    let golden = [GOLDEN_I, GOLDEN_I, GOLDEN_I, GOLDEN_II, GOLDEN_III, GOLDEN_IV];
    for ((label, graph), want) in table1_graphs().iter().zip(golden) {
        let ring = qq_vars(graph.vertices);
        let ideal = edge_ideal(graph, &ring).map_err(|e| e.to_string())?;
        let bt = betti_table(&ideal).map_err(|e| e.to_string())?;
        diff_table(&bt, want, &format!("edge ideal {label}"))?;
    }
    check_budget("table1", start, Duration::from_secs(5))
}

fn canonical_ib(g: usize) -> (Ideal, Vec<Polynomial>, Polynomial, Polynomial, Arc<PolyRing>) {
    let vars: Vec<String> = (1..=g - 1).map(|i| format!("a{i}")).collect();
    let ring = PolyRing::new(CoefficientField::Rationals, vars, MonomialOrder::GrevLex).unwrap();
    let a: Vec<Polynomial> = (0..g - 1).map(|i| Polynomial::var(ring.clone(), i)).collect();
    let x = Polynomial::var(ring.clone(), g - 2);
    let q = Polynomial::var(ring.clone(), 0).pow(2);
    let ideal = engheta_form(
        EnghetaCase::Ib,
        g,
        &ring,
        &EnghetaParams {
            linear_forms: a.iter().cloned().chain([x.clone()]).collect(),
            quadric: Some(q.clone()),
        },
    )
    .unwrap();
    (ideal, a, x, q, ring)
}

fn canonical_ii(g: usize) -> (Ideal, Vec<Polynomial>, Polynomial, Polynomial, Arc<PolyRing>) {
    let vars: Vec<String> = (1..=g).map(|i| format!("a{i}")).collect();
    let ring = PolyRing::new(CoefficientField::Rationals, vars, MonomialOrder::GrevLex).unwrap();
    let a: Vec<Polynomial> = (0..g - 1).map(|i| Polynomial::var(ring.clone(), i)).collect();
    // Proof-normal shape: x = a_g + a_1 and q = a_g^2 + a_2 a_3 (the tail
    // free of a_1^2 and a_1 a_g), which is also G-quadratic at the
    // identity under the product order grlex(a_1, a_g).
    let last = Polynomial::var(ring.clone(), g - 1);
    let x = last.add(&Polynomial::var(ring.clone(), 0));
    let q = last
        .pow(2)
        .add(&Polynomial::var(ring.clone(), 1).mul(&Polynomial::var(ring.clone(), 2)));
    let ideal = engheta_form(
        EnghetaCase::Ii,
        g,
        &ring,
        &EnghetaParams {
            linear_forms: a.iter().cloned().chain([x.clone()]).collect(),
            quadric: Some(q.clone()),
        },
    )
    .unwrap();
    (ideal, a, x, q, ring)
}

/// Criterion 2: Engheta constructors at g = 4 give tables (i) and (ii)
/// exactly; the general closed-form tables hold at g = 4, 5, 6.
fn criterion_main_tables() -> Result<(), String> {
    let start = Instant::now();
    let ring = qq_vars(4);
    let forms: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(ring.clone(), i)).collect();
    let params = EnghetaParams {
        linear_forms: forms,
        quadric: None,
    };
    for (case, label) in [
        (EnghetaCase::IaIntersection, "ia-intersection"),
        (EnghetaCase::IaQuadric, "ia-quadric"),
    ] {
        let ideal = engheta_form(case, 4, &ring, &params).map_err(|e| e.to_string())?;
        let bt = betti_table(&ideal).map_err(|e| e.to_string())?;
        diff_table(&bt, GOLDEN_I, label)?;
    }
    let (ib4, ..) = canonical_ib(4);
    diff_table(
        &betti_table(&ib4).map_err(|e| e.to_string())?,
        GOLDEN_I,
        "ib at g = 4",
    )?;
    let (ii4, ..) = canonical_ii(4);
    diff_table(
        &betti_table(&ii4).map_err(|e| e.to_string())?,
        GOLDEN_II,
        "ii at g = 4",
    )?;
    for g in 4..=6 {
        let (ib, ..) = canonical_ib(g);
        let bt = betti_table(&ib).map_err(|e| e.to_string())?;
        if bt != cor33_table_first(g) {
            return Err(format!(
                "closed-form first table fails at g = {g}:\n{bt}\nexpected\n{}",
                cor33_table_first(g)
            ));
        }
        let (ii, ..) = canonical_ii(g);
        let bt = betti_table(&ii).map_err(|e| e.to_string())?;
        if bt != cor33_table_second(g) {
            return Err(format!(
                "closed-form second table fails at g = {g}:\n{bt}\nexpected\n{}",
                cor33_table_second(g)
            ));
        }
    }
    check_budget("main-theorem tables", start, Duration::from_secs(30))
}

/// Criterion 3: the displayed chain map for ((x,y)^2, xz+yw) builds a cone
/// minimizing to table (i); the case (ii) cone at g = 4 minimizes to (ii).
fn criterion_mapping_cones() -> Result<(), String> {
    let ring = qq_vars(4);
    let v = |i: usize| Polynomial::var(ring.clone(), i);
    let chain =
        ia_quadric_chain_map(&v(0), &v(1), &v(2), &v(3)).map_err(|e| e.to_string())?;
    let cone = mapping_cone(&chain).map_err(|e| e.to_string())?;
    if !cone.verify_complex() {
        return Err("ia-quadric cone is not a complex".into());
    }
    diff_table(&minimize(&cone).betti(), GOLDEN_I, "ia-quadric cone")?;

    let (_, a, x, q, _) = canonical_ii(4);
    let f = scaled_koszul(&x, &a).map_err(|e| e.to_string())?;
    let chain = ChainMap::multiplication(&f, &q).map_err(|e| e.to_string())?;
    let cone = mapping_cone(&chain).map_err(|e| e.to_string())?;
    diff_table(&minimize(&cone).betti(), GOLDEN_II, "case (ii) cone")?;
    Ok(())
}

/// Criterion 4: for tables (iii) and (iv), Q(1) = Q'(1) = 0 and
/// Q''(1)/2 = 1 exactly, with the proof's solved values.
fn criterion_hilbert_system() -> Result<(), String> {
    let checks: [(&str, usize, usize, Vec<i64>); 2] = [
        ("iii", 4, 5, vec![1, 0, -4, 3, 1, -1]),
        ("iv", 5, 6, vec![1, 0, -4, 2, 4, -4, 1]),
    ];
    for (label, index, nvars, expected_q) in checks {
        let graph = &table1_graphs()[index].1;
        let ring = qq_vars(nvars);
        let ideal = edge_ideal(graph, &ring).map_err(|e| e.to_string())?;
        let bt = betti_table(&ideal).map_err(|e| e.to_string())?;
        let q = hilbert_numerator(&bt);
        if q != expected_q {
            return Err(format!(
                "table ({label}): Q = {}, expected {}",
                poly_to_string(&q),
                poly_to_string(&expected_q)
            ));
        }
        let q1: i64 = q.iter().sum();
        let dq1: i64 = q.iter().enumerate().map(|(i, &c)| i as i64 * c).sum();
        let ddq1: i64 = q
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as i64) * (i as i64 - 1) * c)
            .sum();
        if (q1, dq1, ddq1) != (0, 0, 2) {
            return Err(format!(
                "table ({label}): (Q(1), Q'(1), Q''(1)/2) = ({q1}, {dq1}, {})",
                ddq1 / 2
            ));
        }
    }
    // The solved values: a = 3, b = 1, d = 1 for (iii); a = 2, c = 0 for
    // (iv) are the Betti entries themselves.
    let p5 = edge_ideal(&table1_graphs()[4].1, &qq_vars(5)).map_err(|e| e.to_string())?;
    let bt = betti_table(&p5).map_err(|e| e.to_string())?;
    if (bt.beta(2, 3), bt.beta(2, 4), bt.beta(3, 5)) != (3, 1, 1) {
        return Err("table (iii) solved values (a, b, d) != (3, 1, 1)".into());
    }
    let p33 = edge_ideal(&table1_graphs()[5].1, &qq_vars(6)).map_err(|e| e.to_string())?;
    let bt = betti_table(&p33).map_err(|e| e.to_string())?;
    if (bt.beta(2, 3), bt.beta(3, 4)) != (2, 0) {
        return Err("table (iv) solved values (a, c) != (2, 0)".into());
    }
    Ok(())
}

/// Criterion 5: the three colon identities, as reduced-basis equalities.
fn criterion_colon_identities() -> Result<(), String> {
    let ring = PolyRing::grevlex(CoefficientField::Rationals, &["x", "y", "z", "w"]);
    let p = |s: &str| parse_polynomial(s, &ring).unwrap();
    let mk = |gens: &[&str]| {
        Ideal::new(ring.clone(), gens.iter().map(|s| p(s)).collect::<Vec<_>>())
    };
    let sq = mk(&["x^2", "x*y", "y^2"]);
    let colon = sq.quotient(&p("x*z + y*w")).map_err(|e| e.to_string())?;
    if !colon.equal(&mk(&["x", "y"])) {
        return Err("((x,y)^2 : xz+yw) != (x,y)".into());
    }
    let three = mk(&["x*z", "x*w", "y*z"]);
    let colon = three.quotient(&p("y*w")).map_err(|e| e.to_string())?;
    if !colon.equal(&mk(&["x", "z"])) {
        return Err("((xz,xw,yz) : yw) != (x,z)".into());
    }
    // (i_b): ((a_1 x, ..., a_{g-1} x) : q) = (x).
    let (_, a, x, q, ring_ib) = canonical_ib(4);
    let zj = Ideal::new(ring_ib.clone(), a.iter().map(|ai| ai.mul(&x)).collect());
    let colon = zj.quotient(&q).map_err(|e| e.to_string())?;
    if !colon.equal(&Ideal::new(ring_ib, vec![x])) {
        return Err("((a_i x) : q) != (x) for the (i_b) instance".into());
    }
    Ok(())
}

/// Criterion 6: (i_a) is a quadratic basis under all eight standard orders;
/// the proof's explicit changes handle (i_b) and (ii) over F_101; and the
/// witness search succeeds within its 200-trial budget.
fn criterion_g_quadratic() -> Result<(), String> {
    let ring = qq_vars(4);
    let p = |s: &str| parse_polynomial(s, &ring).unwrap();
    let gens = [p("x1^2"), p("x1*x2"), p("x2^2"), p("x1*x3 + x2*x4")];
    let orders = standard_orders(4);
    if orders.len() != 8 {
        return Err("standard order family must have eight members".into());
    }
    for order in &orders {
        if !groebner::is_groebner(&gens, order).map_err(|e| e.to_string())? {
            return Err(format!("(i_a) is not a Groebner basis under {order}"));
        }
        let gb = groebner::reduced_groebner_basis(&gens, order, None).map_err(|e| e.to_string())?;
        if groebner::max_basis_degree(&gb) > 2 {
            return Err(format!("(i_a) basis exceeds degree 2 under {order}"));
        }
    }

    let f101 = CoefficientField::prime(101).unwrap();
    // (i_b) instance over F_101 with a non-monomial q.
    let ring_ib = PolyRing::grevlex(f101.clone(), &["a1", "a2", "a3"]);
    let a: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(ring_ib.clone(), i)).collect();
    let x = parse_polynomial("a1 + 2*a3", &ring_ib).unwrap();
    let q = parse_polynomial("3*a2^2 + a1*a2", &ring_ib).unwrap();
    let ib = engheta_form(
        EnghetaCase::Ib,
        4,
        &ring_ib,
        &EnghetaParams {
            linear_forms: a.iter().cloned().chain([x.clone()]).collect(),
            quadric: Some(q.clone()),
        },
    )
    .map_err(|e| e.to_string())?;
    let (_, order, moved) = ib_proof_change(&a, &x, &q).map_err(|e| e.to_string())?;
    let gb = groebner::reduced_groebner_basis(&moved, &order, None).map_err(|e| e.to_string())?;
    if groebner::max_basis_degree(&gb) > 2 {
        return Err("(i_b) explicit change did not yield a quadratic basis".into());
    }
    let mut search_orders = standard_orders(3);
    search_orders.extend(proof_product_orders(3));
    if g_quadratic_witness(&ib, &search_orders, 200, 11)
        .map_err(|e| e.to_string())?
        .is_none()
    {
        return Err("witness search failed on the (i_b) instance".into());
    }

    // (ii) instance over F_101.
    let ring_ii = PolyRing::grevlex(f101, &["a1", "a2", "a3", "a4"]);
    let a: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(ring_ii.clone(), i)).collect();
    let x = parse_polynomial("a4 + a1", &ring_ii).unwrap();
    let q = parse_polynomial("a4^2 + a2*a3", &ring_ii).unwrap();
    let ii = engheta_form(
        EnghetaCase::Ii,
        4,
        &ring_ii,
        &EnghetaParams {
            linear_forms: a.iter().cloned().chain([x.clone()]).collect(),
            quadric: Some(q.clone()),
        },
    )
    .map_err(|e| e.to_string())?;
    let (_, order, moved) = ii_proof_change(&a, &x, &q).map_err(|e| e.to_string())?;
    let gb = groebner::reduced_groebner_basis(&moved, &order, None).map_err(|e| e.to_string())?;
    if groebner::max_basis_degree(&gb) > 2 {
        return Err("(ii) explicit change did not yield a quadratic basis".into());
    }
    let mut search_orders = standard_orders(4);
    search_orders.extend(proof_product_orders(4));
    if g_quadratic_witness(&ii, &search_orders, 200, 12)
        .map_err(|e| e.to_string())?
        .is_none()
    {
        return Err("witness search failed on the (ii) instance".into());
    }
    Ok(())
}

/// Criterion 7: the determinantal Remark example over the rationals. The
/// six minors satisfy two linear relations, so the minimal generator count
/// frozen from the rank oracle is four (the spec sheet's printed six
/// contradicts its own oracle; see the decisions ledger).
fn criterion_remark_example() -> Result<(), String> {
    let start = Instant::now();
    let ring = PolyRing::grevlex(CoefficientField::Rationals, &["x", "y", "z", "w"]);
    let p = |s: &str| parse_polynomial(s, &ring).unwrap();
    let m = LinearMatrix::new(
        ring.clone(),
        vec![
            vec![p("x"), p("y"), p("z"), p("w")],
            vec![p("-y"), p("x"), p("-w"), p("z")],
        ],
    )
    .map_err(|e| e.to_string())?;
    let ideal = minors2(&m).map_err(|e| e.to_string())?;
    let (_, g) = ideal.minimal_generators().map_err(|e| e.to_string())?;
    if g != 4 {
        return Err(format!("minimal generator count {g}, oracle value is 4"));
    }
    if !is_nondegenerate(&ideal) {
        return Err("the Remark ideal must be nondegenerate".into());
    }
    let rep = hilbert_report(&ideal).map_err(|e| e.to_string())?;
    if (rep.codim, rep.multiplicity) != (2, 2) {
        return Err(format!(
            "(codim, e) = ({}, {}), expected (2, 2)",
            rep.codim, rep.multiplicity
        ));
    }
    check_budget("remark example", start, Duration::from_secs(10))
}

/// Criterion 8: 200 seeded samples at (n, g) = (4, 4) over F_101 filtered
/// to codim 2 all have e <= 2; at g = 3 all have e <= 3 and every e = 3
/// case has the Hilbert-Burch hull shape (1; 3, 2) with linear syzygies.
fn criterion_sampling() -> Result<(), String> {
    let start = Instant::now();
    let field = CoefficientField::prime(101).unwrap();
    let spec4 = SampleSpec {
        n: 4,
        g: 4,
        field: field.clone(),
        count: 200,
        base_seed: 101,
        witness_trials: 2,
    };
    let rows4 = sample_experiment(&spec4).map_err(|e| e.to_string())?;
    for row in rows4.iter().filter(|r| r.codim == 2) {
        if row.multiplicity > 2 {
            return Err(format!(
                "seed {}: codim 2 with e = {} > 2 at g = 4",
                row.seed, row.multiplicity
            ));
        }
    }
    let spec3 = SampleSpec {
        n: 4,
        g: 3,
        field: field.clone(),
        count: 200,
        base_seed: 303,
        witness_trials: 0,
    };
    let rows3 = sample_experiment(&spec3).map_err(|e| e.to_string())?;
    let mut e3_cases = 0;
    for row in rows3.iter().filter(|r| r.codim == 2) {
        if row.multiplicity > 3 {
            return Err(format!(
                "seed {}: codim 2 with e = {} > 3 at g = 3",
                row.seed, row.multiplicity
            ));
        }
        if row.multiplicity == 3 {
            e3_cases += 1;
            let raw = random_quadric_ideal(4, 3, &field, row.seed);
            let (gens, _) = raw.minimal_generators().map_err(|e| e.to_string())?;
            let ideal = Ideal::new(raw.ring.clone(), gens);
            let hull = ideal.unmixed_part().map_err(|e| e.to_string())?;
            let bt = betti_table(&hull).map_err(|e| e.to_string())?;
            let hb = BettiTable::from_display_rows(&[(0, vec![1]), (1, vec![0, 3, 2])]);
            if bt != hb {
                return Err(format!(
                    "seed {}: e = 3 hull is not Hilbert-Burch (1; 3, 2):\n{bt}",
                    row.seed
                ));
            }
        }
    }
    // Uniform draws land on height two with probability ~ 1/p^3, so the
    // sweeps above are near-vacuous for the filtered claims. A stratified
    // sweep inside a random height-two linear prime makes codim 2 generic
    // and exercises the multiplicity bound on a real sample.
    let mut stratified_codim2 = 0;
    for k in 0..200u64 {
        let raw = random_quadrics_in_pencil(4, 4, &field, 50_000 + k);
        let (gens, g) = raw.minimal_generators().map_err(|e| e.to_string())?;
        if g < 4 {
            continue;
        }
        let ideal = Ideal::new(raw.ring.clone(), gens);
        let rep = hilbert_report(&ideal).map_err(|e| e.to_string())?;
        if rep.codim != 2 {
            continue;
        }
        stratified_codim2 += 1;
        if rep.multiplicity > 2 {
            return Err(format!(
                "stratified seed {k}: g >= 4, codim 2, e = {} > 2",
                rep.multiplicity
            ));
        }
    }
    if stratified_codim2 < 50 {
        return Err(format!(
            "stratified sweep produced only {stratified_codim2} codim-2 samples"
        ));
    }
    // The e = 3 equality case at g = 3: seeded Hilbert-Burch instances
    // (2x2 minors of a random 3x2 matrix of linear forms). Their hull is
    // themselves with the (1; 3, 2) table and pure linear first syzygies.
    let ring4 = qq_vars(4);
    let _ = &ring4;
    let mut hb_checked = 0;
    let mut k = 0u64;
    while hb_checked < 20 && k < 200 {
        k += 1;
        let ideal = match random_hilbert_burch_3x2(&field, 60_000 + k) {
            Some(i) => i,
            None => continue,
        };
        let rep = hilbert_report(&ideal).map_err(|e| e.to_string())?;
        if rep.codim != 2 {
            continue;
        }
        if rep.multiplicity != 3 {
            return Err(format!(
                "Hilbert-Burch seed {k}: codim 2 but e = {} != 3",
                rep.multiplicity
            ));
        }
        e3_cases += 1;
        let hull = ideal.unmixed_part().map_err(|e| e.to_string())?;
        if !hull.equal(&ideal) {
            return Err(format!("Hilbert-Burch seed {k}: hull differs from the ideal"));
        }
        let bt = betti_table(&hull).map_err(|e| e.to_string())?;
        let hb = BettiTable::from_display_rows(&[(0, vec![1]), (1, vec![0, 3, 2])]);
        if bt != hb {
            return Err(format!(
                "Hilbert-Burch seed {k}: hull table is not (1; 3, 2):\n{bt}"
            ));
        }
        hb_checked += 1;
    }
    if e3_cases < 20 {
        return Err(format!("only {e3_cases} e = 3 cases exercised"));
    }
    check_budget("sampling", start, Duration::from_secs(300))
}

/// I_2 of a random 3x2 matrix of linear forms over F_p in four variables,
/// or None when the draw degenerates.
fn random_hilbert_burch_3x2(field: &CoefficientField, seed: u64) -> Option<Ideal> {
    use rand::SeedableRng;
    let ring = PolyRing::new(
        field.clone(),
        (1..=4).map(|i| format!("x{i}")).collect(),
        MonomialOrder::GrevLex,
    )
    .unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut random_linear = || -> Polynomial {
        Polynomial::from_terms(
            ring.clone(),
            (0..4)
                .map(|i| {
                    (
                        field.random(&mut rng),
                        quadrica::monomial::Monomial::var(i, 4),
                    )
                })
                .collect(),
        )
    };
    let rows: Vec<Vec<Polynomial>> = (0..3)
        .map(|_| (0..2).map(|_| random_linear()).collect())
        .collect();
    let matrix = LinearMatrix::new(ring, rows).ok()?;
    let ideal = minors2(&matrix.transpose()).ok()?;
    let (gens, g) = ideal.minimal_generators().ok()?;
    if g != 3 {
        return None;
    }
    Some(Ideal::new(ideal.ring.clone(), gens))
}

/// Criterion 9: twenty artinian-reduced fixtures with a top linear strand
/// have a nonzero degree-one socle.
fn criterion_socle() -> Result<(), String> {
    let mut fixtures: Vec<(String, Ideal)> = Vec::new();
    for field in [
        CoefficientField::Rationals,
        CoefficientField::prime(101).unwrap(),
    ] {
        // The three table-(i) edge ideals.
        for (label, graph) in table1_graphs().iter().take(3) {
            let vars: Vec<String> = (1..=graph.vertices).map(|i| format!("x{i}")).collect();
            let ring = PolyRing::new(field.clone(), vars, MonomialOrder::GrevLex).unwrap();
            fixtures.push((
                format!("edge-{label}-{field}"),
                edge_ideal(graph, &ring).unwrap(),
            ));
        }
        // Engheta (i_a) forms.
        let ring4 = PolyRing::new(
            field.clone(),
            (1..=4).map(|i| format!("x{i}")).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let forms: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(ring4.clone(), i)).collect();
        for (case, label) in [
            (EnghetaCase::IaIntersection, "ia1"),
            (EnghetaCase::IaQuadric, "ia2"),
        ] {
            fixtures.push((
                format!("engheta-{label}-{field}"),
                engheta_form(
                    case,
                    4,
                    &ring4,
                    &EnghetaParams {
                        linear_forms: forms.clone(),
                        quadric: None,
                    },
                )
                .unwrap(),
            ));
        }
        // z*J and the square of the maximal ideal in two variables.
        for nf in [3usize, 4] {
            let ringz = PolyRing::new(
                field.clone(),
                (1..=nf).map(|i| format!("x{i}")).collect(),
                MonomialOrder::GrevLex,
            )
            .unwrap();
            let z = Polynomial::var(ringz.clone(), 0);
            let zj: Vec<Polynomial> = (1..nf)
                .map(|i| z.mul(&Polynomial::var(ringz.clone(), i)))
                .collect();
            fixtures.push((format!("zj{}-{field}", nf - 1), Ideal::new(ringz, zj)));
        }
        let ring2 = PolyRing::new(
            field.clone(),
            (1..=2).map(|i| format!("x{i}")).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let (u, v) = (
            Polynomial::var(ring2.clone(), 0),
            Polynomial::var(ring2.clone(), 1),
        );
        fixtures.push((
            format!("m-squared-{field}"),
            Ideal::new(ring2, vec![u.mul(&u), u.mul(&v), v.mul(&v)]),
        ));
        // Canonical (i_b) instances at g = 4, 5, rebuilt over this field.
        for g in [4usize, 5] {
            let vars: Vec<String> = (1..=g - 1).map(|i| format!("a{i}")).collect();
            let ring = PolyRing::new(field.clone(), vars, MonomialOrder::GrevLex).unwrap();
            let a: Vec<Polynomial> =
                (0..g - 1).map(|i| Polynomial::var(ring.clone(), i)).collect();
            let x = Polynomial::var(ring.clone(), g - 2);
            let q = Polynomial::var(ring.clone(), 0).pow(2);
            fixtures.push((
                format!("ib-g{g}-{field}"),
                engheta_form(
                    EnghetaCase::Ib,
                    g,
                    &ring,
                    &EnghetaParams {
                        linear_forms: a.iter().cloned().chain([x]).collect(),
                        quadric: Some(q),
                    },
                )
                .unwrap(),
            ));
        }
    }
    if fixtures.len() != 20 {
        return Err(format!("expected 20 fixtures, built {}", fixtures.len()));
    }
    for (seed, (label, ideal)) in fixtures.iter().enumerate() {
        let reduced = ideal
            .artinian_reduction(7000 + seed as u64)
            .map_err(|e| format!("{label}: {e}"))?;
        let bt = betti_table(&reduced).map_err(|e| e.to_string())?;
        let pd = bt.projective_dimension();
        if bt.beta(pd, pd as i64 + 1) == 0 {
            return Err(format!(
                "{label}: reduced fixture has no top linear strand, hypothesis unmet:\n{bt}"
            ));
        }
        let socle = socle_degrees(&reduced).map_err(|e| format!("{label}: {e}"))?;
        if socle.degrees.get(&1).copied().unwrap_or(0) == 0 {
            return Err(format!(
                "{label}: no degree-one socle despite beta_{{r,r+1}} != 0"
            ));
        }
    }
    Ok(())
}

/// Criterion 10: resolution pipeline and Koszul-homology oracle agree on
/// every fixture and on fifty random quadric ideals; the Hilbert-function
/// oracle matches the Betti-derived series to degree ten.
fn criterion_oracles() -> Result<(), String> {
    let mut fixtures: Vec<(String, Ideal)> = Vec::new();
    for (label, graph) in table1_graphs() {
        let ring = qq_vars(graph.vertices);
        fixtures.push((format!("edge-{label}"), edge_ideal(&graph, &ring).unwrap()));
    }
    let (ib, ..) = canonical_ib(4);
    fixtures.push(("ib-4".into(), ib));
    let (ii, ..) = canonical_ii(4);
    fixtures.push(("ii-4".into(), ii));

    let field = CoefficientField::prime(101).unwrap();
    for k in 0..50u64 {
        let n = 3 + (k % 3) as usize; // 3, 4, 5
        let g = 2 + (k % 3) as usize;
        let raw = random_quadric_ideal(n, g, &field, 40_000 + k);
        let (gens, cnt) = raw.minimal_generators().map_err(|e| e.to_string())?;
        if cnt == 0 {
            continue;
        }
        fixtures.push((format!("random-{k}"), Ideal::new(raw.ring.clone(), gens)));
    }

    for (label, ideal) in &fixtures {
        let bt = betti_table(ideal).map_err(|e| format!("{label}: {e}"))?;
        let max_i = bt.projective_dimension() + 1;
        let max_j = bt.entries.keys().map(|(_, j)| *j).max().unwrap_or(0) + 1;
        let oracle =
            betti_oracle(ideal, max_i.min(5 + 1), max_j.min(9)).map_err(|e| format!("{label}: {e}"))?;
        let clipped: std::collections::BTreeMap<(usize, i64), u64> = bt
            .entries
            .iter()
            .filter(|((i, j), _)| *i <= max_i.min(6) && *j <= max_j.min(9))
            .map(|(k, v)| (*k, *v))
            .collect();
        if oracle.entries != clipped {
            return Err(format!(
                "{label}: oracle disagrees\noracle: {:?}\ntable:  {:?}",
                oracle.entries, clipped
            ));
        }
        // Hilbert function oracle against the series expansion.
        let q = hilbert_numerator(&bt);
        let counted =
            hilbert_function_oracle(ideal, 10).map_err(|e| format!("{label}: {e}"))?;
        if counted != expand_series(&q, ideal.ring.nvars(), 10) {
            return Err(format!("{label}: Hilbert function oracle mismatch"));
        }
    }
    Ok(())
}

/// Criterion 11: the classifier recovers the constructing label on fifty
/// randomized draws per case, including after generator recombination.
fn criterion_classifier() -> Result<(), String> {
    use rand::{Rng, SeedableRng};
    let field = CoefficientField::prime(7).unwrap();
    let ring = PolyRing::new(
        field.clone(),
        (1..=4).map(|i| format!("x{i}")).collect(),
        MonomialOrder::GrevLex,
    )
    .unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(777);
    let random_form = |rng: &mut rand_chacha::ChaCha8Rng| -> Polynomial {
        loop {
            let terms: Vec<_> = (0..4)
                .map(|i| {
                    (
                        field.from_i64(rng.gen_range(0..7)),
                        quadrica::monomial::Monomial::var(i, 4),
                    )
                })
                .collect();
            let f = Polynomial::from_terms(ring.clone(), terms);
            if !f.is_zero() {
                return f;
            }
        }
    };
    let independent = |rng: &mut rand_chacha::ChaCha8Rng, k: usize| -> Vec<Polynomial> {
        loop {
            let forms: Vec<Polynomial> = (0..k).map(|_| random_form(rng)).collect();
            if linear_rank(&forms) == k {
                return forms;
            }
        }
    };
    for case_index in 0..4 {
        let mut done = 0;
        let mut attempts = 0;
        while done < 50 {
            attempts += 1;
            if attempts > 3000 {
                return Err("classifier draw resampling exhausted".into());
            }
            let (ideal, expected) = match case_index {
                0 => {
                    let f = independent(&mut rng, 4);
                    let params = EnghetaParams {
                        linear_forms: f,
                        quadric: None,
                    };
                    match engheta_form(EnghetaCase::IaIntersection, 4, &ring, &params) {
                        Ok(i) => (i, Ht2Mult2Class::IaIntersection),
                        Err(_) => continue,
                    }
                }
                1 => {
                    let f = independent(&mut rng, 4);
                    let params = EnghetaParams {
                        linear_forms: f,
                        quadric: None,
                    };
                    match engheta_form(EnghetaCase::IaQuadric, 4, &ring, &params) {
                        Ok(i) => (i, Ht2Mult2Class::IaQuadric),
                        Err(_) => continue,
                    }
                }
                2 => {
                    let a = independent(&mut rng, 3);
                    let x = random_form(&mut rng);
                    // q = sum l_i a_i for random linear l_i
                    let q = {
                        let mut acc = Polynomial::zero(ring.clone());
                        for ai in &a {
                            acc = acc.add(&ai.mul(&random_form(&mut rng)));
                        }
                        acc
                    };
                    if q.is_zero() {
                        continue;
                    }
                    let params = EnghetaParams {
                        linear_forms: a.iter().cloned().chain([x]).collect(),
                        quadric: Some(q),
                    };
                    match engheta_form(EnghetaCase::Ib, 4, &ring, &params) {
                        Ok(i) => (i, Ht2Mult2Class::Ib),
                        Err(_) => continue,
                    }
                }
                _ => {
                    let a = independent(&mut rng, 3);
                    let x = random_form(&mut rng);
                    let q = {
                        // random quadric
                        let basis = quadrica::ideal::monomials_of_degree(&ring, 2);
                        let terms: Vec<_> = basis
                            .iter()
                            .map(|m| (field.from_i64(rng.gen_range(0..7)), m.clone()))
                            .collect();
                        Polynomial::from_terms(ring.clone(), terms)
                    };
                    if q.is_zero() {
                        continue;
                    }
                    let params = EnghetaParams {
                        linear_forms: a.iter().cloned().chain([x]).collect(),
                        quadric: Some(q),
                    };
                    match engheta_form(EnghetaCase::Ii, 4, &ring, &params) {
                        Ok(i) => (i, Ht2Mult2Class::Ii),
                        Err(_) => continue,
                    }
                }
            };
            // Half the draws get a random invertible generator recombination.
            let ideal = if done % 2 == 1 {
                let k = ideal.gens.len();
                let mat = loop {
                    let rows: Vec<Vec<quadrica::Scalar>> = (0..k)
                        .map(|_| (0..k).map(|_| field.random(&mut rng)).collect())
                        .collect();
                    let m = quadrica::linalg::Matrix::from_rows(&field, rows);
                    if !m.determinant().is_zero() {
                        break m;
                    }
                };
                let gens: Vec<Polynomial> = (0..k)
                    .map(|i| {
                        let mut acc = Polynomial::zero(ring.clone());
                        for (j, g) in ideal.gens.iter().enumerate() {
                            acc = acc.add(&g.scale(mat.at(i, j)));
                        }
                        acc
                    })
                    .collect();
                Ideal::new(ring.clone(), gens)
            } else {
                ideal
            };
            match classify_ht2_mult2(&ideal).map_err(|e| e.to_string())? {
                Classification::Match(class) if class == expected => {
                    done += 1;
                }
                Classification::Match(class) => {
                    return Err(format!(
                        "draw {done} of case {expected}: classified as {class}"
                    ));
                }
                Classification::NoMatch { diagnostics } => {
                    return Err(format!(
                        "draw {done} of case {expected}: no match ({diagnostics})"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Criterion 12: every G-quadratic-witnessed ideal passes the full
/// necessary battery and the binomial Betti bound; a violation would be a
/// soundness bug (or a finding).
fn criterion_battery() -> Result<(), String> {
    // Constructed witnessed families first.
    let mut witnessed: Vec<(String, Ideal)> = Vec::new();
    for (label, graph) in table1_graphs() {
        let ring = qq_vars(graph.vertices);
        witnessed.push((format!("edge-{label}"), edge_ideal(&graph, &ring).unwrap()));
    }
    let ring = qq_vars(4);
    let forms: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(ring.clone(), i)).collect();
    for (case, label) in [
        (EnghetaCase::IaIntersection, "ia1"),
        (EnghetaCase::IaQuadric, "ia2"),
    ] {
        witnessed.push((
            label.into(),
            engheta_form(
                case,
                4,
                &ring,
                &EnghetaParams {
                    linear_forms: forms.clone(),
                    quadric: None,
                },
            )
            .unwrap(),
        ));
    }
    let (ib, ..) = canonical_ib(4);
    witnessed.push(("ib-4".into(), ib));
    let (ii, ..) = canonical_ii(4);
    witnessed.push(("ii-4".into(), ii));

    for (label, ideal) in &witnessed {
        let n = ideal.ring.nvars();
        let mut orders = standard_orders(n);
        orders.extend(proof_product_orders(n));
        let witness = g_quadratic_witness(ideal, &orders, 50, 99).map_err(|e| e.to_string())?;
        if witness.is_none() {
            return Err(format!("{label}: expected a G-quadratic witness"));
        }
        let report = koszul_necessary_battery(ideal).map_err(|e| e.to_string())?;
        if !report.all_pass() {
            return Err(format!(
                "{label}: witnessed ideal fails the necessary battery: {report:?}"
            ));
        }
    }

    // Random monomial quadric ideals are identity-witnessed (a monomial
    // basis is its own Groebner basis) and quadratic monomial quotients
    // are Koszul, so the battery must pass on every draw; witnessed g = 4
    // codim-2 draws must additionally land in the classified tables.
    use rand::{Rng, SeedableRng};
    let field = CoefficientField::prime(101).unwrap();
    let ring4 = PolyRing::new(
        field.clone(),
        (1..=4).map(|i| format!("x{i}")).collect(),
        MonomialOrder::GrevLex,
    )
    .unwrap();
    let quadric_monomials = quadrica::ideal::monomials_of_degree(&ring4, 2);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8888);
    let mut checked = 0;
    for k in 0..100 {
        let mut picks = std::collections::BTreeSet::new();
        while picks.len() < 4 {
            picks.insert(rng.gen_range(0..quadric_monomials.len()));
        }
        let gens: Vec<Polynomial> = picks
            .iter()
            .map(|&i| {
                Polynomial::monomial(
                    ring4.clone(),
                    field.one(),
                    quadric_monomials[i].clone(),
                )
            })
            .collect();
        let raw = Ideal::new(ring4.clone(), gens);
        let (gens, g) = raw.minimal_generators().map_err(|e| e.to_string())?;
        let ideal = Ideal::new(ring4.clone(), gens);
        let witness = g_quadratic_witness(&ideal, &standard_orders(4), 0, k)
            .map_err(|e| e.to_string())?;
        if witness.is_none() {
            return Err(format!("monomial draw {k}: identity witness missing"));
        }
        let report = koszul_necessary_battery(&ideal).map_err(|e| e.to_string())?;
        if !report.all_pass() {
            return Err(format!(
                "monomial draw {k}: witnessed ideal fails the battery (a finding!): {report:?}"
            ));
        }
        if g == 4 && report.codim == 2 {
            let bt = betti_table(&ideal).map_err(|e| e.to_string())?;
            if main_theorem_membership(&bt).is_none() {
                return Err(format!(
                    "monomial draw {k}: witnessed g = 4 codim-2 ideal matches no table:\n{bt}"
                ));
            }
        }
        checked += 1;
    }
    // Stratified height-two draws: check the battery on whatever the
    // search manages to witness.
    let mut orders = standard_orders(4);
    orders.extend(proof_product_orders(4));
    for k in 0..60u64 {
        let raw = random_quadrics_in_pencil(4, 4, &field, 70_000 + k);
        let (gens, _) = raw.minimal_generators().map_err(|e| e.to_string())?;
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(raw.ring.clone(), gens);
        if let Some(_w) = g_quadratic_witness(&ideal, &orders, 2, k)
            .map_err(|e| e.to_string())?
        {
            let report = koszul_necessary_battery(&ideal).map_err(|e| e.to_string())?;
            if !report.all_pass() {
                return Err(format!(
                    "stratified seed {k}: witnessed sample fails the battery: {report:?}"
                ));
            }
            checked += 1;
        }
    }
    if checked < 100 {
        return Err(format!("only {checked} witnessed samples checked"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_golden_text_produces_a_diff() {
        // fault injection: a wrong expected table must surface as a FAIL
        // with both tables in the diff.
        let bt = BettiTable::from_display_rows(&[(0, vec![1]), (1, vec![0, 4, 4, 1])]);
        assert!(diff_table(&bt, GOLDEN_I, "table (i)").is_ok());
        let corrupted = GOLDEN_I.replace("4 4 1", "4 5 1");
        let err = diff_table(&bt, &corrupted, "table (i)").unwrap_err();
        assert!(err.contains("expected"));
        assert!(err.contains("4 5 1"));
        assert!(err.contains("4 4 1"));
    }

    #[test]
    fn filters_select_criteria_by_substring() {
        assert_eq!(criterion_names().len(), 12);
        let one = run_all(Some("04-hilbert"));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].name, "04-hilbert-system");
    }
}
