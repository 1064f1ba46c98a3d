//! Monomial orders: lex, graded lex, graded reverse lex, and block
//! ("product") orders built from them.
//!
//! A block order compares block by block over an ordered partition of the
//! variables; within each block the listed variable sequence is used by the
//! block's sub-order. This realizes product orders such as "degree lex on
//! {a1, ag} followed by grevlex on the rest".

use std::cmp::Ordering;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;

/// Sub-order kinds usable inside a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimpleOrder {
    Lex,
    GrLex,
    GrevLex,
}

impl SimpleOrder {
    pub fn name(self) -> &'static str {
        match self {
            SimpleOrder::Lex => "lex",
            SimpleOrder::GrLex => "grlex",
            SimpleOrder::GrevLex => "grevlex",
        }
    }

    fn cmp_exps(self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            SimpleOrder::Lex => cmp_lex(a, b),
            SimpleOrder::GrLex => cmp_degree(a, b).then_with(|| cmp_lex(a, b)),
            SimpleOrder::GrevLex => cmp_degree(a, b).then_with(|| cmp_revlex(a, b)),
        }
    }
}

fn cmp_degree(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db)
}

fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Reverse-lex tiebreak: scan from the last variable; the monomial with the
/// smaller exponent there is the larger one.
fn cmp_revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// One block of a block order: a variable sequence and the sub-order applied
/// to it. The sequence fixes the variable priority inside the block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderBlock {
    pub vars: Vec<usize>,
    pub order: SimpleOrder,
}

/// A total, multiplicative monomial order with 1 smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
    Block(Vec<OrderBlock>),
}

impl MonomialOrder {
    /// Checks that a block order's blocks form an ordered partition of the
    /// ring's variables. Non-block orders always validate.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let MonomialOrder::Block(blocks) = self {
            let mut seen = vec![false; nvars];
            for b in blocks {
                if b.vars.is_empty() {
                    return Err(AlgebraError::BadOrder("empty block".into()));
                }
                for &v in &b.vars {
                    if v >= nvars {
                        return Err(AlgebraError::BadOrder(format!(
                            "block variable index {v} out of range"
                        )));
                    }
                    if seen[v] {
                        return Err(AlgebraError::BadOrder(format!(
                            "variable index {v} appears in two blocks"
                        )));
                    }
                    seen[v] = true;
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(AlgebraError::BadOrder(
                    "blocks do not cover all variables".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => SimpleOrder::Lex.cmp_exps(&a.0, &b.0),
            MonomialOrder::GrLex => SimpleOrder::GrLex.cmp_exps(&a.0, &b.0),
            MonomialOrder::GrevLex => SimpleOrder::GrevLex.cmp_exps(&a.0, &b.0),
            MonomialOrder::Block(blocks) => {
                for blk in blocks {
                    let ea: Vec<u16> = blk.vars.iter().map(|&v| a.0[v]).collect();
                    let eb: Vec<u16> = blk.vars.iter().map(|&v| b.0[v]).collect();
                    match blk.order.cmp_exps(&ea, &eb) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// True when the order refines total degree, i.e. higher degree always
    /// wins. Lex and block orders are not degree-compatible in general.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrLex | MonomialOrder::GrevLex)
    }

    /// An elimination order for the given variables: one block holding them
    /// (grevlex) followed by one block with the rest (grevlex). Any monomial
    /// containing an eliminated variable is larger than any monomial without.
    pub fn elimination(eliminated: &[usize], nvars: usize) -> MonomialOrder {
        let rest: Vec<usize> = (0..nvars).filter(|v| !eliminated.contains(v)).collect();
        let mut blocks = vec![OrderBlock {
            vars: eliminated.to_vec(),
            order: SimpleOrder::GrevLex,
        }];
        if !rest.is_empty() {
            blocks.push(OrderBlock {
                vars: rest,
                order: SimpleOrder::GrevLex,
            });
        }
        MonomialOrder::Block(blocks)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrLex => write!(f, "grlex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block(blocks) => {
                write!(f, "block(")?;
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{}:", b.order.name())?;
                    for (j, v) in b.vars.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{v}")?;
                    }
                }
                write!(f, ")")
            }
        }
    }
}

/// The enumerated "standard" order family used by universality spot-checks:
/// lex, grlex, grevlex in the ambient variable sequence and in the reversed
/// sequence, plus a two-block grevlex split at the midpoint, forward and
/// reversed. Eight orders for any ring with at least two variables.
pub fn standard_orders(nvars: usize) -> Vec<MonomialOrder> {
    assert!(nvars >= 2);
    let forward: Vec<usize> = (0..nvars).collect();
    let reversed: Vec<usize> = (0..nvars).rev().collect();
    let single = |vars: &[usize], order: SimpleOrder| {
        MonomialOrder::Block(vec![OrderBlock {
            vars: vars.to_vec(),
            order,
        }])
    };
    let half = nvars.div_ceil(2);
    let split = |vars: &[usize]| {
        MonomialOrder::Block(vec![
            OrderBlock {
                vars: vars[..half].to_vec(),
                order: SimpleOrder::GrevLex,
            },
            OrderBlock {
                vars: vars[half..].to_vec(),
                order: SimpleOrder::GrevLex,
            },
        ])
    };
    vec![
        MonomialOrder::Lex,
        MonomialOrder::GrLex,
        MonomialOrder::GrevLex,
        single(&reversed, SimpleOrder::Lex),
        single(&reversed, SimpleOrder::GrLex),
        single(&reversed, SimpleOrder::GrevLex),
        split(&forward),
        split(&reversed),
    ]
}

/// The product orders "degree lex on (v_i, v_j), then grevlex on the rest",
/// one per ordered pair of distinct variables. These are the orders the
/// G-quadratic constructions for the (a_1 x, ..., a_{g-1} x, q) families
/// need; generic orders do not witness those ideals.
pub fn proof_product_orders(nvars: usize) -> Vec<MonomialOrder> {
    let mut out = Vec::new();
    for i in 0..nvars {
        for j in 0..nvars {
            if i == j {
                continue;
            }
            let rest: Vec<usize> = (0..nvars).filter(|&v| v != i && v != j).collect();
            let mut blocks = vec![OrderBlock {
                vars: vec![i, j],
                order: SimpleOrder::GrLex,
            }];
            if !rest.is_empty() {
                blocks.push(OrderBlock {
                    vars: rest,
                    order: SimpleOrder::GrevLex,
                });
            }
            out.push(MonomialOrder::Block(blocks));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn grevlex_vs_grlex() {
        // x*z^2 vs y^2*z in 3 vars: same degree.
        // grlex compares lex: x beats y, so x*z^2 wins.
        // grevlex compares from the back: z-exponent 2 > 1, so x*z^2 loses.
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 2, 1]);
        assert_eq!(MonomialOrder::GrLex.compare(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn block_order_prioritizes_first_block() {
        // Eliminate variable 2: anything containing it dominates.
        let o = MonomialOrder::elimination(&[2], 3);
        assert_eq!(o.compare(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
    }

    #[test]
    fn standard_family_has_eight_orders() {
        let fam = standard_orders(4);
        assert_eq!(fam.len(), 8);
        for o in &fam {
            o.validate(4).unwrap();
        }
    }

    #[test]
    fn one_is_smallest_and_multiplicative() {
        let one = m(&[0, 0, 0]);
        for o in standard_orders(3) {
            for a in [m(&[1, 0, 0]), m(&[0, 3, 1]), m(&[2, 2, 2])] {
                assert_eq!(o.compare(&one, &a), Ordering::Less);
                // multiplicativity spot-check
                let b = m(&[0, 1, 0]);
                let c = m(&[1, 1, 0]);
                let ab = a.mul(&b);
                let ac = a.mul(&c);
                assert_eq!(o.compare(&ab, &ac), o.compare(&b, &c));
            }
        }
    }
}
