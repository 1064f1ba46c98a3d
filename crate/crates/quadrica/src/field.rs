//! Exact coefficient fields: the rationals and prime fields F_p.
//!
//! All arithmetic is exact. Rational coefficients are arbitrary-precision
//! and stored reduced; prime-field elements are reduced residues modulo a
//! prime below 2^31, so products fit in 64-bit intermediates.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

/// Largest allowed prime-field modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// An exact coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    /// The rational numbers.
    Rationals,
    /// The prime field F_p.
    Prime(u64),
}

impl CoefficientField {
    /// Builds F_p, validating that `p` is a prime with 2 < p < 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p <= 2 || p >= MAX_MODULUS {
            return Err(AlgebraError::BadModulus(format!(
                "modulus {p} out of range (need 2 < p < 2^31)"
            )));
        }
        if !is_prime(p) {
            return Err(AlgebraError::BadModulus(format!("{p} is not prime")));
        }
        Ok(CoefficientField::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            CoefficientField::Rationals => Scalar::Rat(BigRational::zero()),
            CoefficientField::Prime(p) => Scalar::Mod { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            CoefficientField::Rationals => Scalar::Rat(BigRational::one()),
            CoefficientField::Prime(p) => Scalar::Mod { v: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            CoefficientField::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            CoefficientField::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod { v: r, p: *p }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            CoefficientField::Rationals => Scalar::Rat(BigRational::from(n.clone())),
            CoefficientField::Prime(p) => {
                let m = BigInt::from(*p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                let digits = r.to_u64_digits().1;
                let v = if digits.is_empty() { 0 } else { digits[0] };
                Scalar::Mod { v, p: *p }
            }
        }
    }

    /// Builds the fraction a/b; `b` must be nonzero (and invertible mod p).
    pub fn fraction(&self, a: &BigInt, b: &BigInt) -> Result<Scalar> {
        if b.is_zero() {
            return Err(AlgebraError::Invalid("zero denominator".into()));
        }
        match self {
            CoefficientField::Rationals => Ok(Scalar::Rat(BigRational::new(a.clone(), b.clone()))),
            CoefficientField::Prime(_) => {
                let num = self.from_bigint(a);
                let den = self.from_bigint(b);
                den.inv()
                    .map(|inv| num.mul(&inv))
                    .ok_or_else(|| AlgebraError::Invalid("denominator is zero mod p".into()))
            }
        }
    }

    /// Uniformly random field element. For the rationals, a small integer in
    /// [-10, 10]; for F_p, uniform over all residues including zero.
    pub fn random(&self, rng: &mut impl rand::Rng) -> Scalar {
        match self {
            CoefficientField::Rationals => self.from_i64(rng.gen_range(-10..=10)),
            CoefficientField::Prime(p) => Scalar::Mod {
                v: rng.gen_range(0..*p),
                p: *p,
            },
        }
    }

    /// Number of elements, or `None` for an infinite field.
    pub fn size(&self) -> Option<u64> {
        match self {
            CoefficientField::Rationals => None,
            CoefficientField::Prime(p) => Some(*p),
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::Prime(p) => write!(f, "Fp({p})"),
        }
    }
}

/// An element of a coefficient field.
///
/// Prime-field elements carry their modulus so arithmetic is self-contained;
/// mixing moduli is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> CoefficientField {
        match self {
            Scalar::Rat(_) => CoefficientField::Rationals,
            Scalar::Mod { p, .. } => CoefficientField::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    /// Negative in the rational sense; prime-field elements never are.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                assert_eq!(p, q, "mixed moduli");
                let s = a + b;
                Scalar::Mod {
                    v: if s >= *p { s - p } else { s },
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { v, p } => Scalar::Mod {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Mod {
                    v: (a * b) % p,
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Mod { v, p } => {
                if *v == 0 {
                    None
                } else {
                    Some(Scalar::Mod {
                        v: mod_inverse(*v, *p),
                        p: *p,
                    })
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// A square root in the field, if one exists. Over the rationals only
    /// squares of rationals with square numerator and denominator qualify.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(a) => {
                if a.is_negative() {
                    return None;
                }
                let n = a.numer().sqrt();
                let d = a.denom().sqrt();
                let cand = BigRational::new(n, d);
                if &cand * &cand == *a {
                    Some(Scalar::Rat(cand))
                } else {
                    None
                }
            }
            Scalar::Mod { v, p } => tonelli_shanks(*v, *p).map(|r| Scalar::Mod { v: r, p: *p }),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mod_inverse(v: u64, p: u64) -> u64 {
    // p is prime, so Fermat suffices.
    mod_pow(v, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all u64.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_pow_u128(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = p as u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Square root mod an odd prime via Tonelli-Shanks; `None` for non-residues.
fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if mod_pow(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(a, (p + 1) / 4, p));
    }
    // Write p - 1 = q * 2^s with q odd.
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    // Find a quadratic non-residue z.
    let mut z = 2;
    while mod_pow(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = tt * tt % p;
            i += 1;
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(CoefficientField::prime(101).is_ok());
        assert!(CoefficientField::prime(2).is_err());
        assert!(CoefficientField::prime(91).is_err());
        assert!(CoefficientField::prime(1 << 31).is_err());
    }

    #[test]
    fn mod_arithmetic() {
        let f = CoefficientField::prime(7).unwrap();
        let a = f.from_i64(5);
        let b = f.from_i64(-3); // 4 mod 7
        assert_eq!(a.add(&b), f.from_i64(2));
        assert_eq!(a.mul(&b), f.from_i64(6));
        assert_eq!(a.mul(&a.inv().unwrap()), f.one());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = CoefficientField::Rationals;
        let third = f
            .fraction(&BigInt::from(1), &BigInt::from(3))
            .unwrap();
        let sum = third.add(&third).add(&third);
        assert!(sum.is_one());
    }

    #[test]
    fn sqrt_mod_p() {
        let f = CoefficientField::prime(101).unwrap();
        for v in 0..101u64 {
            let sq = Scalar::Mod { v, p: 101 }.mul(&Scalar::Mod { v, p: 101 });
            let r = sq.sqrt().expect("square must have a root");
            assert_eq!(r.mul(&r), sq);
        }
        assert_eq!(f.from_i64(2).sqrt(), None); // 2 is a non-residue mod 101
    }
}
