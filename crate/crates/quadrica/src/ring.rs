//! Polynomial rings and linear changes of coordinates.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::{CoefficientField, Scalar};
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// A standard graded polynomial ring: named variables (each of degree one)
/// over an exact coefficient field, with an ambient monomial order used for
/// canonical term sorting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub vars: Vec<String>,
    pub field: CoefficientField,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(
        field: CoefficientField,
        vars: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(AlgebraError::BadRing("no variables".into()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(AlgebraError::BadRing(format!("bad variable name `{v}`")));
            }
            if !seen.insert(v.clone()) {
                return Err(AlgebraError::BadRing(format!("duplicate variable `{v}`")));
            }
        }
        order.validate(vars.len())?;
        Ok(Arc::new(PolyRing { vars, field, order }))
    }

    /// Convenience constructor with grevlex ambient order.
    pub fn grevlex(field: CoefficientField, vars: &[&str]) -> Arc<Self> {
        PolyRing::new(
            field,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Rings are compatible when they have the same field and variables;
    /// the ambient order is presentation only.
    pub fn compatible(&self, other: &PolyRing) -> bool {
        self.vars == other.vars && self.field == other.field
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {} [", self.field)?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "] order {}", ring_order_text(&self.order, &self.vars))
    }
}

/// Renders an order using variable names, in the grammar the parser accepts.
pub fn ring_order_text(order: &MonomialOrder, vars: &[String]) -> String {
    match order {
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::GrLex => "grlex".into(),
        MonomialOrder::GrevLex => "grevlex".into(),
        MonomialOrder::Block(blocks) => {
            let parts: Vec<String> = blocks
                .iter()
                .map(|b| {
                    let names: Vec<&str> =
                        b.vars.iter().map(|&v| vars[v].as_str()).collect();
                    format!("{}[{}]", b.order.name(), names.join(","))
                })
                .collect();
            format!("block({})", parts.join(";"))
        }
    }
}

/// An invertible linear change of coordinates on a ring.
///
/// Column `j` of the matrix is the image of variable `j`, so applying the
/// change substitutes `x_j -> sum_i m[i][j] * x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearChange {
    pub ring: Arc<PolyRing>,
    pub matrix: Matrix,
}

impl LinearChange {
    pub fn new(ring: Arc<PolyRing>, matrix: Matrix) -> Result<Self> {
        let n = ring.nvars();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(AlgebraError::Invalid(format!(
                "linear change must be {n}x{n}"
            )));
        }
        if matrix.determinant().is_zero() {
            return Err(AlgebraError::SingularMatrix);
        }
        Ok(LinearChange { ring, matrix })
    }

    pub fn identity(ring: Arc<PolyRing>) -> Self {
        let n = ring.nvars();
        LinearChange {
            matrix: Matrix::identity(n, &ring.field),
            ring,
        }
    }

    /// A random invertible change, resampling until the determinant is
    /// nonzero.
    pub fn random(ring: Arc<PolyRing>, rng: &mut impl rand::Rng) -> Self {
        let n = ring.nvars();
        loop {
            let mut m = Matrix::zero(n, n, &ring.field);
            for i in 0..n {
                for j in 0..n {
                    *m.at_mut(i, j) = ring.field.random(rng);
                }
            }
            if !m.determinant().is_zero() {
                return LinearChange { ring, matrix: m };
            }
        }
    }

    /// Substitution sending variable `target` to `target + sum c_i * x_i`
    /// while fixing the others.
    pub fn elementary(ring: Arc<PolyRing>, target: usize, add: &[(usize, Scalar)]) -> Result<Self> {
        let n = ring.nvars();
        let mut m = Matrix::identity(n, &ring.field);
        for (i, c) in add {
            if *i == target {
                return Err(AlgebraError::Invalid(
                    "elementary change cannot add the target to itself".into(),
                ));
            }
            *m.at_mut(*i, target) = c.clone();
        }
        LinearChange::new(ring, m)
    }

    pub fn inverse(&self) -> LinearChange {
        LinearChange {
            ring: self.ring.clone(),
            matrix: self
                .matrix
                .inverse()
                .expect("linear change is invertible by construction"),
        }
    }

    /// Composition: applying the result equals applying `inner` then `self`.
    pub fn compose(&self, inner: &LinearChange) -> LinearChange {
        LinearChange {
            ring: self.ring.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        }
    }

    /// Image of variable `j` as a linear form.
    pub fn image_of_var(&self, j: usize) -> Polynomial {
        let n = self.ring.nvars();
        let mut terms = Vec::new();
        for i in 0..n {
            let c = self.matrix.at(i, j).clone();
            if !c.is_zero() {
                terms.push((c, Monomial::var(i, n)));
            }
        }
        Polynomial::from_terms(self.ring.clone(), terms)
    }

    /// Applies the substitution to a polynomial. Degree-preserving ring
    /// homomorphism on each term.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert!(p.ring.compatible(&self.ring), "ring mismatch");
        let images: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|j| self.image_of_var(j))
            .collect();
        let mut acc = Polynomial::zero(p.ring.clone());
        for (c, m) in &p.terms {
            let mut term = Polynomial::constant(p.ring.clone(), c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[j].pow(e as u32));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}
