//! Groebner machinery for submodules of free modules, used to compute
//! syzygies.
//!
//! Syzygies of a list of columns are found by one Buchberger run on tagged
//! elements (column, unit tag) under an elimination order whose second block
//! carries the Schreyer order induced by the column leads. Basis elements
//! whose target part vanished are exactly a generating set (indeed a
//! Groebner basis) of the syzygy module.

use std::cmp::Ordering;

use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

/// One term of a free-module element: coefficient, component, monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ModTerm {
    pub coeff: Scalar,
    pub comp: usize,
    pub mono: Monomial,
}

/// A free-module element with terms sorted strictly descending under the
/// order in force for the computation.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ModElem {
    pub terms: Vec<ModTerm>,
}

/// A total order on module terms (component, monomial).
#[derive(Clone, Debug)]
pub enum ModOrder {
    /// Term-over-position: the base order on monomials, smaller component
    /// index winning ties.
    Top { base: MonomialOrder },
    /// Elimination across components: components below `cut` dominate; each
    /// side is compared by its own order (the second with shifted indices).
    Elim {
        cut: usize,
        first: Box<ModOrder>,
        second: Box<ModOrder>,
    },
    /// Schreyer order induced by column leads in a parent module: compare
    /// `lead(col_c) * m` in the parent, smaller column index winning ties.
    Schreyer {
        parent: Box<ModOrder>,
        leads: Vec<(usize, Monomial)>,
    },
}

impl ModOrder {
    pub fn compare(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self {
            ModOrder::Top { base } => base
                .compare(a.1, b.1)
                .then_with(|| b.0.cmp(&a.0)),
            ModOrder::Elim { cut, first, second } => {
                let (fa, fb) = (a.0 < *cut, b.0 < *cut);
                match (fa, fb) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (true, true) => first.compare(a, b),
                    (false, false) => second.compare((a.0 - cut, a.1), (b.0 - cut, b.1)),
                }
            }
            ModOrder::Schreyer { parent, leads } => {
                let (ca, ma) = (&leads[a.0], a.1);
                let (cb, mb) = (&leads[b.0], b.1);
                let pa = ca.1.mul(ma);
                let pb = cb.1.mul(mb);
                parent
                    .compare((ca.0, &pa), (cb.0, &pb))
                    .then_with(|| b.0.cmp(&a.0))
            }
        }
    }
}

impl ModElem {
    pub fn zero() -> Self {
        ModElem { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &ModTerm {
        &self.terms[0]
    }

    pub fn from_terms(mut terms: Vec<ModTerm>, order: &ModOrder) -> Self {
        terms.sort_by(|a, b| order.compare((b.comp, &b.mono), (a.comp, &a.mono)));
        let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if t.coeff.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        ModElem { terms: out }
    }

    pub fn scale(&self, c: &Scalar) -> ModElem {
        ModElem {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    coeff: t.coeff.mul(c),
                    comp: t.comp,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> ModElem {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().coeff.inv().unwrap())
    }

    /// self - c * m * other, merging sorted term lists.
    fn sub_scaled(&self, c: &Scalar, m: &Monomial, other: &ModElem, order: &ModOrder) -> ModElem {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let o = &other.terms[j];
            let sm = o.mono.mul(m);
            match order.compare(
                (self.terms[i].comp, &self.terms[i].mono),
                (o.comp, &sm),
            ) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(ModTerm {
                        coeff: o.coeff.mul(c).neg(),
                        comp: o.comp,
                        mono: sm,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let nc = self.terms[i].coeff.sub(&o.coeff.mul(c));
                    if !nc.is_zero() {
                        out.push(ModTerm {
                            coeff: nc,
                            comp: o.comp,
                            mono: sm,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for o in &other.terms[j..] {
            out.push(ModTerm {
                coeff: o.coeff.mul(c).neg(),
                comp: o.comp,
                mono: o.mono.mul(m),
            });
        }
        ModElem { terms: out }
    }
}

/// Fully reduces `elem` against the basis.
pub fn module_normal_form(elem: &ModElem, basis: &[ModElem], order: &ModOrder) -> ModElem {
    let mut work = elem.clone();
    let mut rem: Vec<ModTerm> = Vec::new();
    while !work.is_zero() {
        let lt = work.lead().clone();
        let hit = basis.iter().find(|b| {
            let bl = b.lead();
            bl.comp == lt.comp && bl.mono.divides(&lt.mono)
        });
        match hit {
            Some(b) => {
                let bl = b.lead();
                let c = lt.coeff.div(&bl.coeff);
                let m = lt.mono.div(&bl.mono).unwrap();
                work = work.sub_scaled(&c, &m, b, order);
            }
            None => {
                rem.push(lt);
                work.terms.remove(0);
            }
        }
    }
    ModElem { terms: rem }
}

/// Buchberger for submodules of a free module. S-pairs form only between
/// elements with the same lead component; no coprime criterion is applied
/// (it is not valid for modules).
///
/// When `skip_comp_from` is set, pairs in which both leads lie in
/// components at or above the bound are not processed. In the tagged
/// syzygy computation those are pairs of pure-tag elements; the collected
/// tag elements then still generate the syzygy module (they contain the
/// Schreyer syzygies of the image Groebner basis expressed in the original
/// generators), they just need not form a Groebner basis of it.
pub fn module_buchberger(
    gens: &[ModElem],
    order: &ModOrder,
    skip_comp_from: Option<usize>,
) -> Vec<ModElem> {
    let mut basis: Vec<ModElem> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            // Re-sort under the computation order before anything else.
            ModElem::from_terms(g.terms.clone(), order).monic()
        })
        .collect();

    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let add_pairs = |pairs: &mut Vec<(usize, usize, Monomial)>, basis: &[ModElem], new: usize| {
        for i in 0..new {
            let a = basis[i].lead();
            let b = basis[new].lead();
            if a.comp != b.comp {
                continue;
            }
            if let Some(cut) = skip_comp_from {
                if a.comp >= cut {
                    continue;
                }
            }
            pairs.push((i, new, a.mono.lcm(&b.mono)));
        }
    };
    for j in 0..basis.len() {
        add_pairs(&mut pairs, &basis, j);
    }

    while !pairs.is_empty() {
        // Smallest lcm degree first, then indices; deterministic.
        let mut best = 0;
        for k in 1..pairs.len() {
            let ka = (pairs[k].2.degree(), pairs[k].0, pairs[k].1);
            let kb = (pairs[best].2.degree(), pairs[best].0, pairs[best].1);
            if ka < kb {
                best = k;
            }
        }
        let (i, j, lcm) = pairs.swap_remove(best);
        let (fi, fj) = (&basis[i], &basis[j]);
        let (li, lj) = (fi.lead(), fj.lead());
        let mi = lcm.div(&li.mono).unwrap();
        let mj = lcm.div(&lj.mono).unwrap();
        let left = mul_term(fi, &li.coeff.inv().unwrap(), &mi, order);
        let spair = left.sub_scaled(&lj.coeff.inv().unwrap(), &mj, fj, order);
        let rem = module_normal_form(&spair, &basis, order);
        if !rem.is_zero() {
            basis.push(rem.monic());
            let new = basis.len() - 1;
            add_pairs(&mut pairs, &basis, new);
        }
    }
    basis
}

fn mul_term(e: &ModElem, c: &Scalar, m: &Monomial, _order: &ModOrder) -> ModElem {
    // multiplying by one term preserves sortedness
    ModElem {
        terms: e
            .terms
            .iter()
            .map(|t| ModTerm {
                coeff: t.coeff.mul(c),
                comp: t.comp,
                mono: t.mono.mul(m),
            })
            .collect(),
    }
}

/// Columns are elements of a free module of rank `target_rank` ordered by
/// `target_order`. Returns generators of the syzygy module of the columns,
/// as elements of a free module of rank `columns.len()`, together with the
/// Schreyer order induced on that module.
pub fn syzygy_columns(
    columns: &[ModElem],
    target_rank: usize,
    target_order: &ModOrder,
) -> (Vec<ModElem>, ModOrder) {
    let _s = columns.len();
    let leads: Vec<(usize, Monomial)> = columns
        .iter()
        .map(|c| {
            let sorted = ModElem::from_terms(c.terms.clone(), target_order);
            let l = sorted.lead();
            (l.comp, l.mono.clone())
        })
        .collect();
    let schreyer = ModOrder::Schreyer {
        parent: Box::new(target_order.clone()),
        leads,
    };
    let tagged_order = ModOrder::Elim {
        cut: target_rank,
        first: Box::new(target_order.clone()),
        second: Box::new(schreyer.clone()),
    };

    let nvars = columns
        .iter()
        .flat_map(|c| c.terms.first())
        .map(|t| t.mono.nvars())
        .next()
        .unwrap_or(0);
    let one = columns
        .iter()
        .flat_map(|c| c.terms.first())
        .map(|t| t.coeff.field().one())
        .next();
    let Some(one) = one else {
        // all columns zero: syzygies are the unit vectors, but rank is
        // unknown without a field; callers never pass all-zero columns.
        return (Vec::new(), schreyer);
    };

    let tagged: Vec<ModElem> = columns
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let mut terms = c.terms.clone();
            terms.push(ModTerm {
                coeff: one.clone(),
                comp: target_rank + idx,
                mono: Monomial::one(nvars),
            });
            ModElem::from_terms(terms, &tagged_order)
        })
        .collect();

    let gb = module_buchberger(&tagged, &tagged_order, Some(target_rank));
    let mut syzygies: Vec<ModElem> = gb
        .into_iter()
        .filter(|e| !e.is_zero() && e.lead().comp >= target_rank)
        .map(|e| ModElem {
            terms: e
                .terms
                .into_iter()
                .map(|t| ModTerm {
                    coeff: t.coeff,
                    comp: t.comp - target_rank,
                    mono: t.mono,
                })
                .collect(),
        })
        .collect();
    // Deterministic column order for the syzygy map: ascending lead under
    // the Schreyer order reversed gives descending leads, the classical
    // arrangement for iterated Schreyer steps.
    syzygies.sort_by(|a, b| {
        let la = a.lead();
        let lb = b.lead();
        schreyer
            .compare((lb.comp, &lb.mono), (la.comp, &la.mono))
    });
    (syzygies, schreyer)
}
