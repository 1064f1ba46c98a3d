//! Ideals and ideal arithmetic: sum, product, intersection, colon,
//! saturation, elimination, minimal generators, equidimensional hull, and
//! artinian reduction.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::groebner::{self, GroebnerBasis};
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// Default degree cap applied to Groebner runs in rings with more than
/// eight variables; a safety valve for the sampling harness.
const DEFAULT_CAP_ABOVE: usize = 8;
const DEFAULT_DEGREE_CAP: u32 = 8;

/// An ideal given by a finite generator list, with its reduced Groebner
/// bases cached per order. Ideals are immutable; clones share the cache.
#[derive(Clone, Debug)]
pub struct Ideal {
    pub ring: Arc<PolyRing>,
    pub gens: Vec<Polynomial>,
    cache: Arc<RwLock<BTreeMap<String, Arc<GroebnerBasis>>>>,
}

impl Ideal {
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens
            .into_iter()
            .inspect(|g| assert!(g.ring.compatible(&ring), "generator from another ring"))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            ring,
            gens,
            cache: Arc::new(RwLock::new(BTreeMap::new())),
        }
    }

    pub fn zero(ring: Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Groebner basis under the ring's ambient order.
    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.groebner_under(&self.ring.order.clone())
    }

    /// The reduced Groebner basis under an arbitrary order, cached.
    pub fn groebner_under(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        let key = order.to_string();
        if let Some(gb) = self.cache.read().unwrap().get(&key) {
            return gb.clone();
        }
        let cap = if self.ring.nvars() > DEFAULT_CAP_ABOVE {
            Some(DEFAULT_DEGREE_CAP)
        } else {
            None
        };
        let gb = Arc::new(
            groebner::reduced_groebner_basis(&self.gens, order, cap)
                .expect("generators live in one ring"),
        );
        self.cache.write().unwrap().insert(key, gb.clone());
        gb
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        let gb = self.groebner();
        if gb.gens.is_empty() {
            return false;
        }
        groebner::normal_form(p, &gb.gens, &gb.order)
            .expect("nonzero basis")
            .remainder
            .is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Semantic equality: identical reduced Groebner bases.
    pub fn equal(&self, other: &Ideal) -> bool {
        assert!(self.ring.compatible(&other.ring), "ring mismatch");
        let order = self.ring.order.clone();
        let a = self.groebner_under(&order);
        let b = other.groebner_under(&order);
        a.gens == b.gens
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert!(self.ring.compatible(&other.ring), "ring mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert!(self.ring.compatible(&other.ring), "ring mismatch");
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// Intersection via elimination of one auxiliary variable `t` from
    /// `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert!(self.ring.compatible(&other.ring), "ring mismatch");
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ideal::zero(self.ring.clone());
        }
        let (ext, lift, t_index) = extend_ring_with_aux(&self.ring);
        let t = Polynomial::var(ext.clone(), t_index);
        let one_minus_t = Polynomial::one(ext.clone()).sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(t.mul(&lift(g)));
        }
        for h in &other.gens {
            gens.push(one_minus_t.mul(&lift(h)));
        }
        let order = MonomialOrder::elimination(&[t_index], ext.nvars());
        let gb = groebner::reduced_groebner_basis(&gens, &order, None).expect("one ring");
        let kept: Vec<Polynomial> = gb
            .gens
            .iter()
            .filter(|g| g.terms.iter().all(|(_, m)| m.exponent(t_index) == 0))
            .map(|g| project_drop_aux(g, &self.ring))
            .collect();
        Ideal::new(self.ring.clone(), kept)
    }

    /// Ideal quotient by a single element, computed as (I ∩ (f)) / f.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(AlgebraError::Invalid("colon by zero".into()));
        }
        let fid = Ideal::new(self.ring.clone(), vec![f.clone()]);
        let inter = self.intersect(&fid);
        let mut gens = Vec::new();
        for g in &inter.gens {
            gens.push(divide_exact(g, f)?);
        }
        Ok(Ideal::new(self.ring.clone(), gens))
    }

    /// Colon by an ideal: intersection of the quotients by its generators.
    /// The colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let q = self.quotient(f)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        Ok(acc.unwrap_or_else(|| {
            Ideal::new(self.ring.clone(), vec![Polynomial::one(self.ring.clone())])
        }))
    }

    /// Saturation by repeated colon, to a fixed point. Fails loudly after
    /// fifty rounds instead of looping.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let mut cur = self.clone();
        for _ in 0..50 {
            let next = cur.quotient(f)?;
            if next.equal(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
        Err(AlgebraError::BoundExhausted(
            "saturation did not stabilize within 50 colon iterations".into(),
        ))
    }

    /// Generators of `I` not involving the given variables, i.e. generators
    /// of the elimination ideal, still presented in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Ideal {
        let order = MonomialOrder::elimination(vars, self.ring.nvars());
        let gb = self.groebner_under(&order);
        let kept: Vec<Polynomial> = gb
            .gens
            .iter()
            .filter(|g| {
                g.terms
                    .iter()
                    .all(|(_, m)| vars.iter().all(|&v| m.exponent(v) == 0))
            })
            .cloned()
            .collect();
        Ideal::new(self.ring.clone(), kept)
    }

    /// Degree-by-degree minimal generators of a homogeneous ideal: a basis
    /// of I_d modulo (m·I)_d for each degree d, together with their count.
    pub fn minimal_generators(&self) -> Result<(Vec<Polynomial>, usize)> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::Invalid(
                "minimal generators require a homogeneous ideal".into(),
            ));
        }
        if self.is_zero_ideal() {
            return Ok((Vec::new(), 0));
        }
        let field = &self.ring.field;
        let maxd = self.gens.iter().filter_map(|g| g.degree()).max().unwrap();
        let mut minimal = Vec::new();
        for d in 1..=maxd {
            let basis = monomials_of_degree(&self.ring, d);
            let index: BTreeMap<&Monomial, usize> =
                basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for g in &self.gens {
                let dg = g.degree().unwrap();
                if dg >= d {
                    continue;
                }
                for m in monomials_of_degree(&self.ring, d - dg) {
                    let prod = g.mul_term(&field.one(), &m);
                    rows.push(vector_of(&prod, &index, basis.len(), field));
                }
            }
            let mut mat = MatAccum::new(field, basis.len(), rows);
            for g in &self.gens {
                if g.degree() != Some(d) {
                    continue;
                }
                let v = vector_of(g, &index, basis.len(), field);
                if mat.insert_if_independent(v) {
                    minimal.push(g.clone());
                }
            }
        }
        let count = minimal.len();
        Ok((minimal, count))
    }

    /// Equidimensional hull: the annihilator of Ext^c(S/I, S) where c is
    /// the Hilbert-series codimension. Avoids primary decomposition.
    pub fn unmixed_part(&self) -> Result<Ideal> {
        use crate::resolution::{free_resolution, minimize};
        if self.is_zero_ideal() {
            return Ok(self.clone());
        }
        let report = crate::invariants::hilbert_report(self)?;
        let c = report.codim;
        if c == 0 {
            return Ok(self.clone());
        }
        let res = minimize(&free_resolution(self, &MonomialOrder::GrevLex)?);
        if c > res.maps.len() {
            return Err(AlgebraError::Invalid(
                "codimension exceeds projective dimension".into(),
            ));
        }
        // Dualize. delta_k = (d_k)^T : F_{k-1}* -> F_k*.
        let delta_c1 = if c < res.maps.len() {
            Some(res.maps[c].transpose_dual())
        } else {
            None
        };
        let delta_c = res.maps[c - 1].transpose_dual();

        // Generators of ker(delta_{c+1}) inside F_c*.
        let rank_c = res.modules[c].rank();
        let kernel_cols: Vec<crate::syzygy::ModElem> = match &delta_c1 {
            None => (0..rank_c)
                .map(|i| crate::syzygy::ModElem {
                    terms: vec![crate::syzygy::ModTerm {
                        coeff: self.ring.field.one(),
                        comp: i,
                        mono: Monomial::one(self.ring.nvars()),
                    }],
                })
                .collect(),
            Some(d) => {
                let (syz, _) = crate::syzygy::syzygy_columns(
                    &d.columns(),
                    d.target.rank(),
                    &crate::syzygy::ModOrder::Top {
                        base: MonomialOrder::GrevLex,
                    },
                );
                syz
            }
        };
        if kernel_cols.is_empty() {
            return Err(AlgebraError::Invalid(
                "Ext^c vanished; codimension bookkeeping is inconsistent".into(),
            ));
        }
        // Relations among the kernel generators modulo im(delta_c):
        // syzygies of [kernel | delta_c columns], projected to the kernel
        // block.
        let m = kernel_cols.len();
        let mut combined = kernel_cols.clone();
        combined.extend(delta_c.columns());
        let (rels, _) = crate::syzygy::syzygy_columns(
            &combined,
            rank_c,
            &crate::syzygy::ModOrder::Top {
                base: MonomialOrder::GrevLex,
            },
        );
        let projected: Vec<crate::syzygy::ModElem> = rels
            .iter()
            .map(|s| crate::syzygy::ModElem {
                terms: s
                    .terms
                    .iter()
                    .filter(|t| t.comp < m)
                    .cloned()
                    .collect(),
            })
            .filter(|s| !s.is_zero())
            .collect();
        // Ext^c = coker(proj(rels): S^r -> S^m). ann = ∩_i (im rels : e_i).
        let mut ann: Option<Ideal> = None;
        for i in 0..m {
            let colon_i = module_colon_by_unit_vector(&self.ring, &projected, m, i);
            ann = Some(match ann {
                None => colon_i,
                Some(a) => a.intersect(&colon_i),
            });
        }
        Ok(ann.unwrap())
    }

    /// Quotients by successive generic linear forms until the quotient ring
    /// is artinian, substituting a variable away at each step. Each step
    /// must drop the dimension by exactly one; a step is retried with fresh
    /// randomness up to twenty times before giving up.
    pub fn artinian_reduction(&self, seed: u64) -> Result<Ideal> {
        if let Some(size) = self.ring.field.size() {
            if size < 101 {
                return Err(AlgebraError::Invalid(
                    "artinian reduction needs |field| >= 101 for generic linear forms".into(),
                ));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut current = self.clone();
        loop {
            let report = crate::invariants::hilbert_report(&current)?;
            if report.dim <= 0 {
                return Ok(current);
            }
            let mut done = false;
            for _retry in 0..20 {
                let cand = kill_random_linear_form(&current, &mut rng)?;
                let cand_report = crate::invariants::hilbert_report(&cand)?;
                if cand_report.dim == report.dim - 1 && cand_report.codim == report.codim {
                    current = cand;
                    done = true;
                    break;
                }
            }
            if !done {
                return Err(AlgebraError::BoundExhausted(format!(
                    "artinian reduction: 20 retries failed to drop dimension (seed {seed})"
                )));
            }
        }
    }
}

/// All monomials of total degree `d`, descending under the ring order.
pub fn monomials_of_degree(ring: &Arc<PolyRing>, d: u32) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, n: usize, out: &mut Vec<Monomial>) {
        if i == n - 1 {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps).expect("small degree"));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, n, out);
            exps[i] = 0;
        }
    }
    rec(0, d, &mut exps, n, &mut out);
    out.sort_by(|a, b| ring.order.compare(b, a));
    out
}

fn vector_of(
    p: &Polynomial,
    index: &BTreeMap<&Monomial, usize>,
    len: usize,
    field: &crate::field::CoefficientField,
) -> Vec<Scalar> {
    let mut v = vec![field.zero(); len];
    for (c, m) in &p.terms {
        v[*index.get(m).expect("monomial of the right degree")] = c.clone();
    }
    v
}

/// Incremental row-space accumulator for independence tests.
struct MatAccum {
    mat: Matrix,
    rank: usize,
}

impl MatAccum {
    fn new(field: &crate::field::CoefficientField, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let mut mat = if rows.is_empty() {
            Matrix::zero(0, cols, field)
        } else {
            Matrix::from_rows(field, rows)
        };
        let rank = mat.row_echelon().len();
        MatAccum { mat, rank }
    }

    fn insert_if_independent(&mut self, row: Vec<Scalar>) -> bool {
        let field = self.mat.field.clone();
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(self.rank + 1);
        for i in 0..self.mat.rows() {
            rows.push((0..self.mat.cols()).map(|j| self.mat.at(i, j).clone()).collect());
        }
        rows.push(row);
        let mut m = Matrix::from_rows(&field, rows);
        let new_rank = m.row_echelon().len();
        if new_rank > self.rank {
            self.mat = m;
            self.rank = new_rank;
            true
        } else {
            false
        }
    }
}

/// Extends a ring by one auxiliary variable placed first; returns the new
/// ring, a lift for polynomials, and the auxiliary index.
fn extend_ring_with_aux(
    ring: &Arc<PolyRing>,
) -> (
    Arc<PolyRing>,
    impl Fn(&Polynomial) -> Polynomial + '_,
    usize,
) {
    let mut name = "t".to_string();
    while ring.vars.contains(&name) {
        name.push('_');
    }
    let mut vars = vec![name];
    vars.extend(ring.vars.iter().cloned());
    let ext = PolyRing::new(
        ring.field.clone(),
        vars,
        MonomialOrder::elimination(&[0], ring.nvars() + 1),
    )
    .expect("fresh variable");
    let ext_for_lift = ext.clone();
    let lift = move |p: &Polynomial| -> Polynomial {
        let terms = p
            .terms
            .iter()
            .map(|(c, m)| {
                let mut e = vec![0u16];
                e.extend(&m.0);
                (c.clone(), Monomial(e))
            })
            .collect();
        Polynomial::from_terms(ext_for_lift.clone(), terms)
    };
    (ext, lift, 0)
}

/// Drops the first (auxiliary) exponent; caller guarantees it is zero.
fn project_drop_aux(p: &Polynomial, target: &Arc<PolyRing>) -> Polynomial {
    let terms = p
        .terms
        .iter()
        .map(|(c, m)| {
            debug_assert_eq!(m.exponent(0), 0);
            (c.clone(), Monomial(m.0[1..].to_vec()))
        })
        .collect();
    Polynomial::from_terms(target.clone(), terms)
}

/// Exact division of a (known) multiple; errors if the division leaves a
/// remainder.
pub fn divide_exact(p: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let res = groebner::normal_form(p, std::slice::from_ref(f), &p.ring.order.clone())?;
    if !res.remainder.is_zero() {
        return Err(AlgebraError::Invalid(
            "exact division left a remainder".into(),
        ));
    }
    Ok(res.quotients.into_iter().next().unwrap())
}

/// {f in S : f * e_i lies in the column span}, via syzygies of
/// [e_i | columns]: first components of the syzygies generate the colon.
fn module_colon_by_unit_vector(
    ring: &Arc<PolyRing>,
    columns: &[crate::syzygy::ModElem],
    rank: usize,
    i: usize,
) -> Ideal {
    let mut cols = Vec::with_capacity(columns.len() + 1);
    cols.push(crate::syzygy::ModElem {
        terms: vec![crate::syzygy::ModTerm {
            coeff: ring.field.one(),
            comp: i,
            mono: Monomial::one(ring.nvars()),
        }],
    });
    cols.extend(columns.iter().cloned());
    let (syz, _) = crate::syzygy::syzygy_columns(
        &cols,
        rank,
        &crate::syzygy::ModOrder::Top {
            base: MonomialOrder::GrevLex,
        },
    );
    let gens: Vec<Polynomial> = syz
        .iter()
        .map(|s| {
            let terms: Vec<(Scalar, Monomial)> = s
                .terms
                .iter()
                .filter(|t| t.comp == 0)
                .map(|t| (t.coeff.clone(), t.mono.clone()))
                .collect();
            Polynomial::from_terms(ring.clone(), terms)
        })
        .filter(|p| !p.is_zero())
        .collect();
    Ideal::new(ring.clone(), gens)
}

/// Substitutes a random linear form into the ideal, eliminating one
/// variable and producing an ideal in a ring with one variable fewer.
fn kill_random_linear_form(ideal: &Ideal, rng: &mut impl Rng) -> Result<Ideal> {
    let ring = &ideal.ring;
    let n = ring.nvars();
    if n == 0 {
        return Err(AlgebraError::Invalid("no variables left".into()));
    }
    // l = sum c_i x_i with at least the pivot coefficient nonzero.
    let coeffs: Vec<Scalar> = (0..n).map(|_| ring.field.random(rng)).collect();
    let pivot = match (0..n).rev().find(|&i| !coeffs[i].is_zero()) {
        Some(p) => p,
        None => return kill_random_linear_form(ideal, rng),
    };
    // x_pivot = -(1/c_pivot) * sum_{i != pivot} c_i x_i
    let new_vars: Vec<String> = ring
        .vars
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pivot)
        .map(|(_, v)| v.clone())
        .collect();
    let new_ring = PolyRing::new(ring.field.clone(), new_vars, MonomialOrder::GrevLex)?;
    let inv = coeffs[pivot].inv().unwrap().neg();
    let replacement: Polynomial = {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            if i == pivot || c.is_zero() {
                continue;
            }
            let ni = if i < pivot { i } else { i - 1 };
            terms.push((c.mul(&inv), Monomial::var(ni, n - 1)));
        }
        Polynomial::from_terms(new_ring.clone(), terms)
    };
    let var_images: Vec<Polynomial> = (0..n)
        .map(|i| {
            if i == pivot {
                replacement.clone()
            } else {
                let ni = if i < pivot { i } else { i - 1 };
                Polynomial::var(new_ring.clone(), ni)
            }
        })
        .collect();
    let gens: Vec<Polynomial> = ideal
        .gens
        .iter()
        .map(|g| {
            let mut acc = Polynomial::zero(new_ring.clone());
            for (c, m) in &g.terms {
                let mut term = Polynomial::constant(new_ring.clone(), c.clone());
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        term = term.mul(&var_images[i].pow(e as u32));
                    }
                }
                acc = acc.add(&term);
            }
            acc
        })
        .collect();
    Ok(Ideal::new(new_ring, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::parse::parse_polynomial;

    fn ring() -> Arc<PolyRing> {
        PolyRing::grevlex(CoefficientField::Rationals, &["x", "y", "z", "w"])
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(
            r.clone(),
            gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect(),
        )
    }

    #[test]
    fn intersection_of_disjoint_linear_ideals() {
        let r = ring();
        let i = ideal(&r, &["x", "y"]);
        let j = ideal(&r, &["z", "w"]);
        let inter = i.intersect(&j);
        let expected = ideal(&r, &["x*z", "x*w", "y*z", "y*w"]);
        assert!(inter.equal(&expected));
        assert!(i.intersect(&i).equal(&i));
    }

    #[test]
    fn product_and_sum() {
        let r = ring();
        let i = ideal(&r, &["x"]);
        let j = ideal(&r, &["x", "y", "z"]);
        assert!(i.product(&j).equal(&ideal(&r, &["x^2", "x*y", "x*z"])));
        assert!(i.sum(&Ideal::zero(r.clone())).equal(&i));
    }

    #[test]
    fn colon_identities_from_the_corollary() {
        let r = ring();
        // ((x,y)^2 : xz + yw) = (x, y)
        let sq = ideal(&r, &["x^2", "x*y", "y^2"]);
        let q = parse_polynomial("x*z + y*w", &r).unwrap();
        assert!(sq.quotient(&q).unwrap().equal(&ideal(&r, &["x", "y"])));
        // ((xz, xw, yz) : yw) = (x, z)
        let part = ideal(&r, &["x*z", "x*w", "y*z"]);
        let yw = parse_polynomial("y*w", &r).unwrap();
        assert!(part.quotient(&yw).unwrap().equal(&ideal(&r, &["x", "z"])));
        // ((x^2) : x) = (x)
        let x = parse_polynomial("x", &r).unwrap();
        assert!(ideal(&r, &["x^2"]).quotient(&x).unwrap().equal(&ideal(&r, &["x"])));
    }

    #[test]
    fn saturation_and_elimination() {
        let r = ring();
        let x = parse_polynomial("x", &r).unwrap();
        let i = ideal(&r, &["x^2*y"]);
        assert!(i.saturate(&x).unwrap().equal(&ideal(&r, &["y"])));
        let one = Polynomial::one(r.clone());
        assert!(i.saturate(&one).unwrap().equal(&i));

        // eliminate x from (x*y - z): nothing survives in QQ[y,z,w]... use a
        // hand-checkable case: (x - y, x*w) eliminating x gives (y*w).
        let j = ideal(&r, &["x - y", "x*w"]);
        let e = j.eliminate(&[0]);
        assert!(e.equal(&ideal(&r, &["y*w"])));
    }

    #[test]
    fn minimal_generator_trimming() {
        let r = ring();
        let i = ideal(&r, &["x", "x^2", "x*y"]);
        let (gens, g) = i.minimal_generators().unwrap();
        assert_eq!(g, 1);
        assert_eq!(gens, vec![parse_polynomial("x", &r).unwrap()]);

        let edge = ideal(&r, &["x*z", "x*w", "y*z", "y*w"]);
        assert_eq!(edge.minimal_generators().unwrap().1, 4);
    }

    #[test]
    fn membership_and_equality() {
        let r = ring();
        let i = ideal(&r, &["x*z - y^2", "y*w - z^2"]);
        let p = parse_polynomial("z*(x*z - y^2) + y*(y*w - z^2)", &r).unwrap();
        assert!(i.contains(&p));
        assert!(!i.contains(&parse_polynomial("x", &r).unwrap()));
        // recombined generators present the same ideal
        let j = ideal(&r, &["x*z - y^2 + y*w - z^2", "y*w - z^2"]);
        assert!(i.equal(&j));
    }
}
