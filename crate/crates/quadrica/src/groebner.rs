//! Division algorithm, Buchberger's algorithm, and reduced Groebner bases.
//!
//! The S-pair queue uses the normal strategy (smallest lcm degree first,
//! ties broken by the computation order on the lcms), with the coprime
//! leading-term criterion and the chain criterion applied before reduction.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// Result of the multivariate division algorithm.
///
/// Satisfies `input = sum_i quotients[i] * divisors[i] + remainder`, no
/// remainder term is divisible by any divisor's leading monomial, and the
/// lead of every `quotients[i] * divisors[i]` is bounded by the lead of the
/// input.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisionResult {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// A Groebner basis for an ideal under a fixed monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    pub gens: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
    /// Set when a degree cap dropped S-pairs: the basis is only valid up to
    /// this degree.
    pub truncated_at: Option<u32>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Option<&Arc<PolyRing>> {
        self.gens.first().map(|g| &g.ring)
    }
}

/// Working polynomial: terms sorted strictly descending under the
/// computation order, which may differ from the ring's ambient order.
#[derive(Clone, Debug)]
struct Work {
    terms: Vec<(Scalar, Monomial)>,
}

impl Work {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms = p.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Work { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Scalar, Monomial) {
        &self.terms[0]
    }

    /// self -= c * m * other, merging sorted term lists.
    fn sub_scaled(&self, c: &Scalar, m: &Monomial, other: &Work, order: &MonomialOrder) -> Work {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let (oc, om) = &other.terms[j];
            let sm = om.mul(m);
            match order.compare(&self.terms[i].1, &sm) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((oc.mul(c).neg(), sm));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let nc = self.terms[i].0.sub(&oc.mul(c));
                    if !nc.is_zero() {
                        out.push((nc, sm));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (oc, om) in &other.terms[j..] {
            out.push((oc.mul(c).neg(), om.mul(m)));
        }
        Work { terms: out }
    }
}

/// Multivariate division of `p` by an ordered list of divisors.
pub fn normal_form(
    p: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<DivisionResult> {
    if divisors.iter().any(|d| d.is_zero()) {
        return Err(AlgebraError::Invalid("zero divisor in division".into()));
    }
    for d in divisors {
        if !d.ring.compatible(&p.ring) {
            return Err(AlgebraError::RingMismatch);
        }
    }
    let ring = &p.ring;
    let divs: Vec<Work> = divisors
        .iter()
        .map(|d| Work::from_poly(d, order))
        .collect();
    let mut work = Work::from_poly(p, order);
    let mut remainder: Vec<(Scalar, Monomial)> = Vec::new();
    let mut quotients: Vec<Vec<(Scalar, Monomial)>> = vec![Vec::new(); divisors.len()];

    while !work.is_zero() {
        let (lc, lm) = work.lead().clone();
        let hit = divs
            .iter()
            .position(|d| d.lead().1.divides(&lm));
        match hit {
            Some(i) => {
                let (dc, dm) = divs[i].lead();
                let c = lc.div(dc);
                let m = lm.div(dm).unwrap();
                quotients[i].push((c.clone(), m.clone()));
                work = work.sub_scaled(&c, &m, &divs[i], order);
            }
            None => {
                remainder.push((lc, lm));
                work.terms.remove(0);
            }
        }
    }

    Ok(DivisionResult {
        remainder: Polynomial::from_terms(ring.clone(), remainder),
        quotients: quotients
            .into_iter()
            .map(|q| Polynomial::from_terms(ring.clone(), q))
            .collect(),
    })
}

/// The S-polynomial of `f` and `g` under `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fc, fm) = f.leading_term_under(order).expect("nonzero input");
    let (gc, gm) = g.leading_term_under(order).expect("nonzero input");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fc.inv().unwrap(), &lcm.div(fm).unwrap());
    let b = g.mul_term(&gc.inv().unwrap(), &lcm.div(gm).unwrap());
    a.sub(&b)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

/// Buchberger's algorithm. Zero generators are dropped; with a degree cap,
/// S-pairs above the cap are skipped and the result carries the truncation
/// flag instead of silently claiming completeness.
pub fn buchberger(
    gens: &[Polynomial],
    order: &MonomialOrder,
    degree_cap: Option<u32>,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut ring: Option<Arc<PolyRing>> = None;
    for g in gens {
        if let Some(r) = &ring {
            if !r.compatible(&g.ring) {
                return Err(AlgebraError::RingMismatch);
            }
        } else {
            ring = Some(g.ring.clone());
        }
        if !g.is_zero() {
            basis.push(g.monic_under(order));
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            gens: Vec::new(),
            order: order.clone(),
            reduced: true,
            truncated_at: None,
        });
    }
    order.validate(basis[0].ring.nvars())?;

    let lead = |p: &Polynomial| p.leading_term_under(order).unwrap().1.clone();
    let mut leads: Vec<Monomial> = basis.iter().map(&lead).collect();
    let mut pairs: Vec<Pair> = Vec::new();
    let push_pairs = |pairs: &mut Vec<Pair>, leads: &[Monomial], new: usize| {
        for i in 0..new {
            let lcm = leads[i].lcm(&leads[new]);
            pairs.push(Pair {
                i,
                j: new,
                lcm: lcm.clone(),
                degree: lcm.degree(),
            });
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &leads, j);
    }

    let mut processed: HashSet<(usize, usize)> = HashSet::new();
    let mut truncated_at: Option<u32> = None;

    while !pairs.is_empty() {
        // Normal strategy: minimal lcm degree, then the order on lcms, then
        // indices for determinism.
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let ord = a
                .degree
                .cmp(&b.degree)
                .then_with(|| order.compare(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);

        if let Some(cap) = degree_cap {
            if pair.degree > cap {
                truncated_at = Some(truncated_at.map_or(cap, |t| t.min(cap)));
                continue;
            }
        }

        // Coprime leading-term criterion.
        if leads[i].is_coprime_with(&leads[j]) {
            processed.insert((i, j));
            continue;
        }
        // Chain criterion: some k with lm_k | lcm(i,j) and both (i,k), (j,k)
        // already handled.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&pair.lcm)
                && processed.contains(&key(i, k))
                && processed.contains(&key(j, k))
        });
        if chain {
            processed.insert((i, j));
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let rem = normal_form(&s, &basis, order)?.remainder;
        processed.insert((i, j));
        if !rem.is_zero() {
            let rem = rem.monic_under(order);
            leads.push(lead(&rem));
            basis.push(rem);
            let new = basis.len() - 1;
            push_pairs(&mut pairs, &leads, new);
        }
    }

    Ok(GroebnerBasis {
        gens: basis,
        order: order.clone(),
        reduced: false,
        truncated_at,
    })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Interreduces a Groebner basis into the unique reduced basis: monic
/// generators, no term of one divisible by the lead of another, pairwise
/// distinct leads, sorted descending by lead monomial.
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    let order = &gb.order;
    let mut kept: Vec<Polynomial> = Vec::new();
    // Keep only lead-minimal elements.
    let leads: Vec<Monomial> = gb
        .gens
        .iter()
        .map(|p| p.leading_term_under(order).unwrap().1.clone())
        .collect();
    for (i, p) in gb.gens.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(k, lk)| {
            k != i
                && lk.divides(&leads[i])
                && (leads[i] != *lk || k < i)
        });
        if !redundant {
            kept.push(p.monic_under(order));
        }
    }
    // Tail-reduce each against the others.
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, p)| p.clone())
            .collect();
        let nf = normal_form(&kept[i], &others, order)
            .expect("nonzero divisors")
            .remainder;
        reduced.push(nf.monic_under(order));
    }
    reduced.sort_by(|a, b| {
        order.compare(
            &b.leading_term_under(order).unwrap().1,
            &a.leading_term_under(order).unwrap().1,
        )
    });
    GroebnerBasis {
        gens: reduced,
        order: order.clone(),
        reduced: true,
        truncated_at: gb.truncated_at,
    }
}

/// Convenience: Buchberger followed by interreduction.
pub fn reduced_groebner_basis(
    gens: &[Polynomial],
    order: &MonomialOrder,
    degree_cap: Option<u32>,
) -> Result<GroebnerBasis> {
    Ok(reduce_basis(&buchberger(gens, order, degree_cap)?))
}

/// True when every S-pair of the generators reduces to zero over them.
/// Coprime-lead pairs are skipped; the criterion guarantees they reduce.
pub fn is_groebner(gens: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let li = &gens[i].leading_term_under(order).unwrap().1;
            let lj = &gens[j].leading_term_under(order).unwrap().1;
            if li.is_coprime_with(lj) {
                continue;
            }
            let s = s_polynomial(&gens[i], &gens[j], order);
            if !normal_form(&s, &gens, order)?.remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Maximum total degree appearing in the basis (0 for the zero ideal).
pub fn max_basis_degree(gb: &GroebnerBasis) -> u32 {
    gb.gens
        .iter()
        .filter_map(|g| g.degree())
        .max()
        .unwrap_or(0)
}

/// Leading monomials of the reduced basis: the minimal generators of the
/// initial ideal. Reduces first when handed a non-reduced basis.
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    let reduced;
    let gb = if gb.reduced {
        gb
    } else {
        reduced = reduce_basis(gb);
        &reduced
    };
    gb.gens
        .iter()
        .map(|g| g.leading_term_under(&gb.order).unwrap().1.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::parse::parse_polynomial;

    fn ring() -> Arc<PolyRing> {
        PolyRing::grevlex(CoefficientField::Rationals, &["x", "y", "z", "w"])
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn division_invariants() {
        let r = ring();
        let divisors = vec![p(&r, "x^2"), p(&r, "x*y"), p(&r, "y^2"), p(&r, "x*z + y*w")];
        let f = p(&r, "x^2*z");
        let res = normal_form(&f, &divisors, &MonomialOrder::GrevLex).unwrap();
        assert!(res.remainder.is_zero());
        // re-expansion oracle: sum quotient_i * divisor_i + remainder == input
        let mut acc = res.remainder.clone();
        for (q, d) in res.quotients.iter().zip(&divisors) {
            acc = acc.add(&q.mul(d));
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn division_without_hits_is_identity_remainder() {
        let r = ring();
        let res = normal_form(&p(&r, "x"), &[p(&r, "y")], &MonomialOrder::GrevLex).unwrap();
        assert_eq!(res.remainder, p(&r, "x"));
        assert!(res.quotients[0].is_zero());
    }

    #[test]
    fn zero_divisor_rejected() {
        let r = ring();
        assert!(normal_form(
            &p(&r, "x"),
            &[Polynomial::zero(r.clone())],
            &MonomialOrder::GrevLex
        )
        .is_err());
    }

    #[test]
    fn engheta_quadrics_are_already_a_basis() {
        let r = ring();
        let gens = vec![p(&r, "x^2"), p(&r, "x*y"), p(&r, "y^2"), p(&r, "x*z + y*w")];
        let gb = buchberger(&gens, &MonomialOrder::GrevLex, None).unwrap();
        let red = reduce_basis(&gb);
        assert_eq!(red.gens.len(), 4);
        assert_eq!(max_basis_degree(&red), 2);
        assert!(is_groebner(&gens, &MonomialOrder::GrevLex).unwrap());
    }

    #[test]
    fn principal_ideal() {
        let r = ring();
        let gb = buchberger(&[p(&r, "x")], &MonomialOrder::GrevLex, None).unwrap();
        assert_eq!(reduce_basis(&gb).gens, vec![p(&r, "x")]);
    }

    #[test]
    fn coprime_leads_are_already_a_basis() {
        // Under lex the leads of xz - y^2 and yw - z^2 are xz and yw,
        // which are coprime, so the pair is a Groebner basis as given.
        let r = PolyRing::new(
            CoefficientField::Rationals,
            vec!["x".into(), "y".into(), "z".into(), "w".into()],
            MonomialOrder::Lex,
        )
        .unwrap();
        let gens = vec![p(&r, "x*z - y^2"), p(&r, "y*w - z^2")];
        assert!(is_groebner(&gens, &MonomialOrder::Lex).unwrap());
    }

    #[test]
    fn lex_twisted_cubic_style_grows() {
        // {xy - z^2, yz - w^2} under lex x>y>z>w: S(f1, f2) = x*w^2 - z^3
        // does not reduce, so the basis must grow.
        let r = PolyRing::new(
            CoefficientField::Rationals,
            vec!["x".into(), "y".into(), "z".into(), "w".into()],
            MonomialOrder::Lex,
        )
        .unwrap();
        let gens = vec![p(&r, "x*y - z^2"), p(&r, "y*z - w^2")];
        assert!(!is_groebner(&gens, &MonomialOrder::Lex).unwrap());
        let gb = reduce_basis(&buchberger(&gens, &MonomialOrder::Lex, None).unwrap());
        assert!(gb.gens.len() > 2);
        // Exhaustive S-pair closure oracle at degree <= 6: every S-pair of
        // basis elements of lcm degree <= 6 reduces to zero.
        for i in 0..gb.gens.len() {
            for j in i + 1..gb.gens.len() {
                let li = &gb.gens[i].leading_term_under(&gb.order).unwrap().1;
                let lj = &gb.gens[j].leading_term_under(&gb.order).unwrap().1;
                if li.lcm(lj).degree() > 6 {
                    continue;
                }
                let s = s_polynomial(&gb.gens[i], &gb.gens[j], &gb.order);
                assert!(normal_form(&s, &gb.gens, &gb.order)
                    .unwrap()
                    .remainder
                    .is_zero());
            }
        }
    }

    #[test]
    fn reduce_is_idempotent_and_cleans_linear_input() {
        let r = ring();
        let gb = buchberger(&[p(&r, "x"), p(&r, "x + y")], &MonomialOrder::GrevLex, None).unwrap();
        let red = reduce_basis(&gb);
        assert_eq!(red.gens, vec![p(&r, "x"), p(&r, "y")]);
        assert_eq!(reduce_basis(&red), red);
    }

    #[test]
    fn initial_ideal_of_monomial_gens() {
        let r = ring();
        let gb = reduced_groebner_basis(&[p(&r, "x"), p(&r, "y")], &MonomialOrder::GrevLex, None)
            .unwrap();
        let init = initial_ideal(&gb);
        assert_eq!(init.len(), 2);
        assert!(init.contains(&Monomial::var(0, 4)));
        assert!(init.contains(&Monomial::var(1, 4)));
    }

    #[test]
    fn degree_cap_sets_truncation_flag() {
        let r = PolyRing::new(
            CoefficientField::Rationals,
            vec!["x".into(), "y".into(), "z".into(), "w".into()],
            MonomialOrder::Lex,
        )
        .unwrap();
        let gens = vec![p(&r, "x*y - z^2"), p(&r, "y*z - w^2")];
        let gb = buchberger(&gens, &MonomialOrder::Lex, Some(3)).unwrap();
        assert!(gb.truncated_at.is_some());
        let full = buchberger(&gens, &MonomialOrder::Lex, None).unwrap();
        assert!(full.truncated_at.is_none());
        // Degree-cap monotonicity: low-degree elements survive raising the cap.
        let capped = reduce_basis(&gb);
        let complete = reduce_basis(&full);
        for g in capped.gens.iter().filter(|g| g.degree().unwrap_or(0) <= 2) {
            assert!(complete.gens.contains(g));
        }
    }
}
