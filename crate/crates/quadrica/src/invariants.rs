//! Hilbert-series invariants: numerator Q(t), codimension, multiplicity,
//! dimension, plus socle degrees and nondegeneracy.
//!
//! Everything is exact integer arithmetic. The numerator is computed two
//! independent ways: from a minimal Betti table (alternating sum) and from
//! the initial ideal (monomial recursion); tests hold them equal.

use std::collections::BTreeMap;

use crate::error::{AlgebraError, Result};
use crate::ideal::{monomials_of_degree, Ideal};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::resolution::BettiTable;

/// Integer polynomial in t, dense coefficient vector indexed by degree.
pub type IntPoly = Vec<i64>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn poly_eval_at_one(p: &[i64]) -> i64 {
    p.iter().sum()
}

pub fn poly_to_string(p: &[i64]) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (d, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        let abs = c.abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        match d {
            0 => out.push_str(&abs.to_string()),
            _ => {
                if abs != 1 {
                    out.push_str(&format!("{abs}*"));
                }
                out.push('t');
                if d > 1 {
                    out.push_str(&format!("^{d}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Hilbert-series report for a graded quotient S/I of an n-variable ring:
/// Q(t) with H(t) = Q(t)/(1-t)^n, the codimension c (order of vanishing of
/// Q at t = 1), K(t) = Q(t)/(1-t)^c, the multiplicity e = K(1), and
/// dim = n - c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub numerator: IntPoly,
    pub codim: usize,
    pub k_poly: IntPoly,
    pub multiplicity: i64,
    pub dim: i64,
}

/// Q(t) = sum_{i,j} (-1)^i beta_{i,j} t^j from a minimal Betti table.
pub fn hilbert_numerator(bt: &BettiTable) -> IntPoly {
    let mut q: IntPoly = Vec::new();
    for ((i, j), v) in &bt.entries {
        let d = *j as usize;
        if q.len() <= d {
            q.resize(d + 1, 0);
        }
        let signed = if i % 2 == 0 { *v as i64 } else { -(*v as i64) };
        q[d] += signed;
    }
    trim(q)
}

/// Q(t) of S/I computed from the initial ideal: the Hilbert series of S/I
/// and of S/in(I) coincide, and the monomial case admits the classical
/// colon recursion N(G + m) = N(G) - t^deg(m) * N(G : m).
pub fn hilbert_numerator_from_initial(ideal: &Ideal) -> IntPoly {
    let gb = ideal.groebner_under(&MonomialOrder::GrevLex);
    let leads: Vec<Monomial> = gb
        .gens
        .iter()
        .map(|g| g.leading_term_under(&gb.order).unwrap().1.clone())
        .collect();
    monomial_numerator(&leads)
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    for m in sorted {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Hilbert numerator of S modulo a monomial ideal.
pub fn monomial_numerator(gens: &[Monomial]) -> IntPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    // Complete-intersection base case: pairwise coprime generators.
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime_with(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let mut factor = vec![0i64; m.degree() as usize + 1];
            factor[0] = 1;
            factor[m.degree() as usize] = -1;
            acc = poly_mul(&acc, &factor);
        }
        return trim(acc);
    }
    let (last, rest) = gens.split_last().unwrap();
    let without = monomial_numerator(rest);
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|m| m.div(&m.gcd(last)).unwrap())
        .collect();
    let colon_num = monomial_numerator(&colon);
    let mut shifted = vec![0i64; last.degree() as usize];
    shifted.extend(colon_num);
    trim(poly_sub(&without, &shifted))
}

fn poly_mul(a: &[i64], b: &[i64]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// Exact division by (1 - t); the caller guarantees Q(1) = 0.
fn divide_by_one_minus_t(q: &[i64]) -> IntPoly {
    // Q = (1 - t) K: k_0 = q_0, k_i = q_i + k_{i-1}.
    let mut k = Vec::with_capacity(q.len().saturating_sub(1));
    let mut carry = 0i64;
    for (i, &c) in q.iter().enumerate() {
        let v = c + carry;
        if i + 1 == q.len() {
            debug_assert_eq!(v, 0, "Q(1) != 0");
            break;
        }
        k.push(v);
        carry = v;
    }
    trim(k)
}

/// Splits Q(t) as (1-t)^c K(t) with K(1) != 0 and reads off the report.
pub fn codim_multiplicity(q: &IntPoly, nvars: usize) -> Result<HilbertReport> {
    let q = trim(q.clone());
    if q.first() != Some(&1) {
        return Err(AlgebraError::Invalid(
            "Hilbert numerator must have constant term 1 (proper ideal)".into(),
        ));
    }
    let mut k = q.clone();
    let mut c = 0usize;
    while !k.is_empty() && poly_eval_at_one(&k) == 0 {
        k = divide_by_one_minus_t(&k);
        c += 1;
    }
    let e = poly_eval_at_one(&k);
    Ok(HilbertReport {
        numerator: q,
        codim: c,
        k_poly: k,
        multiplicity: e,
        dim: nvars as i64 - c as i64,
    })
}

/// Full report for an ideal via the initial-ideal numerator.
pub fn hilbert_report(ideal: &Ideal) -> Result<HilbertReport> {
    let q = hilbert_numerator_from_initial(ideal);
    if q.is_empty() {
        return Err(AlgebraError::Invalid(
            "unit ideal has no Hilbert report".into(),
        ));
    }
    codim_multiplicity(&q, ideal.ring.nvars())
}

/// dim_k (S/I)_d for d = 0..=up_to, by counting standard monomials of the
/// initial ideal. Independent of the series arithmetic.
pub fn hilbert_function_oracle(ideal: &Ideal, up_to: u32) -> Result<Vec<i64>> {
    if up_to > 12 {
        return Err(AlgebraError::SearchBound(
            "hilbert_function_oracle is capped at degree 12".into(),
        ));
    }
    let gb = ideal.groebner_under(&MonomialOrder::GrevLex);
    let leads: Vec<Monomial> = gb
        .gens
        .iter()
        .map(|g| g.leading_term_under(&gb.order).unwrap().1.clone())
        .collect();
    let mut out = Vec::with_capacity(up_to as usize + 1);
    for d in 0..=up_to {
        let count = monomials_of_degree(&ideal.ring, d)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count();
        out.push(count as i64);
    }
    Ok(out)
}

/// Series expansion of Q(t)/(1-t)^n up to the given degree.
pub fn expand_series(q: &[i64], nvars: usize, up_to: u32) -> Vec<i64> {
    // (1-t)^{-n} has coefficients C(n-1+k, k).
    let mut inv = Vec::with_capacity(up_to as usize + 1);
    for k in 0..=up_to as usize {
        inv.push(binomial((nvars - 1 + k) as u64, k as u64) as i64);
    }
    let mut out = vec![0i64; up_to as usize + 1];
    for (i, &c) in q.iter().enumerate() {
        if i > up_to as usize {
            break;
        }
        for k in 0..=(up_to as usize - i) {
            out[i + k] += c * inv[k];
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Graded dimensions of the socle (0 : m)_j of an artinian quotient S/I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleReport {
    pub degrees: BTreeMap<i64, u64>,
}

/// Socle of an artinian quotient: dim (0 :_{S/I} m)_j computed as the
/// difference of Hilbert functions of S/I and S/(I : m).
pub fn socle_degrees(ideal: &Ideal) -> Result<SocleReport> {
    let report = hilbert_report(ideal)?;
    if report.dim != 0 {
        return Err(AlgebraError::Invalid(format!(
            "socle requires an artinian quotient (dim = {})",
            report.dim
        )));
    }
    let ring = &ideal.ring;
    let irrelevant = Ideal::new(
        ring.clone(),
        (0..ring.nvars())
            .map(|i| crate::poly::Polynomial::var(ring.clone(), i))
            .collect(),
    );
    let colon = ideal.colon(&irrelevant)?;
    // Artinian: the Hilbert function vanishes past the socle degree, which
    // is bounded by the degree where HF(S/I) dies.
    let mut top = 0u32;
    loop {
        let hf = hilbert_function_oracle(ideal, top)?;
        if hf[top as usize] == 0 {
            break;
        }
        top += 1;
        if top > 12 {
            return Err(AlgebraError::SearchBound(
                "artinian socle search exceeded degree 12".into(),
            ));
        }
    }
    let hf_i = hilbert_function_oracle(ideal, top)?;
    let hf_c = hilbert_function_oracle(&colon, top)?;
    let mut degrees = BTreeMap::new();
    for d in 0..=top as usize {
        let v = hf_i[d] - hf_c[d];
        debug_assert!(v >= 0);
        if v > 0 {
            degrees.insert(d as i64, v as u64);
        }
    }
    Ok(SocleReport { degrees })
}

/// True when the ideal contains no linear form: the reduced Groebner basis
/// has no degree-1 element.
pub fn is_nondegenerate(ideal: &Ideal) -> bool {
    let gb = ideal.groebner_under(&MonomialOrder::GrevLex);
    gb.gens.iter().all(|g| g.degree() != Some(1))
}
