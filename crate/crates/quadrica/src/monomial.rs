//! Monomials as exponent vectors, one `u16` exponent per ring variable.

use std::fmt;

use crate::error::{AlgebraError, Result};

/// Hard cap on a single exponent.
pub const MAX_EXPONENT: u32 = 1 << 16;
/// Hard cap on total degree.
pub const MAX_TOTAL_DEGREE: u32 = 1 << 20;

/// A monomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let mut v = Vec::with_capacity(exps.len());
        let mut total: u32 = 0;
        for &e in exps {
            if e >= MAX_EXPONENT {
                return Err(AlgebraError::DegreeOverflow(format!(
                    "exponent {e} exceeds cap {MAX_EXPONENT}"
                )));
            }
            total = total
                .checked_add(e)
                .filter(|t| *t < MAX_TOTAL_DEGREE)
                .ok_or_else(|| {
                    AlgebraError::DegreeOverflow(format!(
                        "total degree exceeds cap {MAX_TOTAL_DEGREE}"
                    ))
                })?;
            v.push(e as u16);
        }
        Ok(Monomial(v))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    /// Product of two monomials. Panics on exponent overflow past the hard
    /// caps; desk-scale inputs never approach them and silent wraparound is
    /// the one failure mode this representation must exclude.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        let mut total: u32 = 0;
        for (a, b) in self.0.iter().zip(&other.0) {
            let e = *a as u32 + *b as u32;
            assert!(e < MAX_EXPONENT, "monomial exponent overflow");
            total += e;
            out.push(e as u16);
        }
        assert!(total < MAX_TOTAL_DEGREE, "monomial total degree overflow");
        Monomial(out)
    }

    /// Exact quotient, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps: Vec<u32> = self.0.iter().map(|&e| e as u32 * k).collect();
        Monomial::from_exponents(&exps)
    }

    /// Display against a list of variable names, `*`-separated with `^`.
    pub fn display<'a>(&'a self, vars: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, vars }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.vars[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
