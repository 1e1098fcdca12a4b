//! Elements a + b√d of a quadratic extension of the rationals.
//!
//! `d` is kept square-free by the constructor; purely rational values are
//! normalized to `d = 0` so they mix freely with any extension. Nested
//! extensions (mixing two different nonzero `d`) are not supported and
//! panic, which suffices for residual intersections of rational pairs.

use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::rational::{rational_sqrt, square_free_decompose, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExtElem {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadExtElem {
    /// Build a + b√d, normalizing: the square part of `d` is folded into
    /// `b`, a perfect-square `d` collapses to a rational, and `b = 0` forces
    /// `d = 0`.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() || d.is_zero() {
            return Self {
                a,
                b: Rational::zero(),
                d: BigInt::zero(),
            };
        }
        let (free, square) = square_free_decompose(&d);
        let b = b * Rational::from_integer(square);
        if free.is_one() {
            return Self {
                a: a + b,
                b: Rational::zero(),
                d: BigInt::zero(),
            };
        }
        Self { a, b, d: free }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value when `b = 0`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Shared `d` of two operands; a rational operand adopts the other's
    /// extension. Mixing two distinct nonzero `d` is a caller bug.
    fn join_d(&self, other: &Self) -> BigInt {
        if self.d == other.d {
            self.d.clone()
        } else if self.d.is_zero() {
            other.d.clone()
        } else if other.d.is_zero() {
            self.d.clone()
        } else {
            panic!(
                "mixed quadratic extensions: sqrt({}) vs sqrt({})",
                self.d, other.d
            );
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.join_d(other);
        Self {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: if (&self.b + &other.b).is_zero() {
                BigInt::zero()
            } else {
                d
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.join_d(other);
        let dr = Rational::from_integer(d.clone());
        let a = &self.a * &other.a + &self.b * &other.b * &dr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Self {
            a,
            d: if b.is_zero() { BigInt::zero() } else { d },
            b,
        }
    }

    /// Conjugation a + b√d ↦ a − b√d; an involution fixing the rationals.
    pub fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// Field norm a² − b²d.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn inverse(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero quadratic element");
        let c = self.conj();
        Self {
            a: c.a / &n,
            b: c.b / &n,
            d: c.d,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let b = &self.b * r;
        Self {
            a: &self.a * r,
            d: if b.is_zero() {
                BigInt::zero()
            } else {
                self.d.clone()
            },
            b,
        }
    }

    /// Square root inside the ambient field Q(√`field_d`), when it exists.
    ///
    /// For s + t√d the candidate is u + v√d with u² + v²d = s, 2uv = t;
    /// solvable over Q exactly when s² − t²d is a rational square e² and one
    /// of (s ± e)/2 is a rational square.
    pub fn sqrt_in_field(&self, field_d: &BigInt) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::from_int(0));
        }
        let d_rat = Rational::from_integer(field_d.clone());
        if self.b.is_zero() {
            // Purely rational: either √s is rational, or √s = v√d.
            if let Some(u) = rational_sqrt(&self.a) {
                return Some(Self::from_rational(u));
            }
            if !field_d.is_zero() {
                let q = &self.a / &d_rat;
                if let Some(v) = rational_sqrt(&q) {
                    return Some(Self::new(Rational::zero(), v, field_d.clone()));
                }
            }
            return None;
        }
        if self.d != *field_d {
            return None;
        }
        let s = &self.a;
        let t = &self.b;
        let e2 = s * s - t * t * &d_rat;
        let e = rational_sqrt(&e2.abs().clone())?;
        if e2.is_negative() {
            return None;
        }
        let two = Rational::from_integer(BigInt::from(2));
        for cand in [(s + &e) / &two, (s - &e) / &two] {
            if cand.is_negative() {
                continue;
            }
            if let Some(u) = rational_sqrt(&cand) {
                if u.is_zero() {
                    continue;
                }
                let v = t / (&two * &u);
                let w = Self::new(u, v, field_d.clone());
                if w.mul(&w) == *self {
                    return Some(w);
                }
                let wn = w.neg();
                if wn.mul(&wn) == *self {
                    return Some(wn);
                }
            }
        }
        None
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn q(a: i64, b: i64, d: i64) -> QuadExtElem {
        QuadExtElem::new(rat(a), rat(b), BigInt::from(d))
    }

    #[test]
    fn conjugation_is_involution() {
        let x = q(3, 2, 5);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn d_normalization() {
        // 1 + 2√12 = 1 + 4√3
        let x = q(1, 2, 12);
        assert_eq!(x.surd_part(), &rat(4));
        assert_eq!(x.d(), &BigInt::from(3));
        // 1 + 3√4 = 7
        let y = q(1, 3, 4);
        assert!(y.is_rational());
        assert_eq!(y.rational_part(), &rat(7));
    }

    #[test]
    fn arithmetic_closure_and_inverse() {
        let x = q(1, 1, -7);
        let y = q(2, -3, -7);
        let p = x.mul(&y);
        // (1+√-7)(2-3√-7) = 2 - 3√-7 + 2√-7 + 21 = 23 - √-7
        assert_eq!(p, q(23, -1, -7));
        let inv = y.inverse();
        assert_eq!(y.mul(&inv), q(1, 0, 0));
        assert_eq!(p.div(&y), x);
    }

    #[test]
    fn rational_mixes_with_extension() {
        let x = q(5, 0, 0);
        let y = q(1, 2, 5);
        assert_eq!(x.add(&y), q(6, 2, 5));
        assert_eq!(x.mul(&y), q(5, 10, 5));
    }

    #[test]
    fn sqrt_in_field_examples() {
        let d = BigInt::from(5);
        // (2 + √5)² = 9 + 4√5
        let target = q(9, 4, 5);
        let w = target.sqrt_in_field(&d).unwrap();
        assert_eq!(w.mul(&w), target);
        // √4 = 2 stays rational.
        let four = q(4, 0, 0);
        assert_eq!(four.sqrt_in_field(&d).unwrap(), q(2, 0, 0));
        // √5 lives in the field as 0 + 1·√5.
        let five = q(5, 0, 0);
        assert_eq!(five.sqrt_in_field(&d).unwrap(), q(0, 1, 5));
        // √2 does not exist in Q(√5).
        assert!(q(2, 0, 0).sqrt_in_field(&d).is_none());
    }
}
