//! Exact arithmetic in real quadratic extensions ℚ(√m).
//!
//! A `Quad` is `a + b√m` with rational `a`, `b` and a fixed nonnegative
//! rational radicand `m`. Signs, equality and zero tests are decided exactly,
//! which is what lets equilibrium classification and normal-form codimension
//! tests avoid floating point entirely.
//!
//! Values are canonicalized: if `b = 0` the radicand is dropped (`m = 0`),
//! and if `m` is a perfect rational square the radical is collapsed into the
//! rational part. Mixing two values with different (non-collapsible)
//! radicands is a programming error and panics.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Quad {
    a: Rational,
    b: Rational,
    m: Rational,
}

impl Quad {
    /// Builds `a + b√m`. Panics if `m < 0`.
    pub fn new(a: Rational, b: Rational, m: Rational) -> Self {
        assert!(!m.is_negative(), "negative radicand in Quad");
        let mut q = Quad { a, b, m };
        q.canonicalize();
        q
    }

    pub fn rational(a: Rational) -> Self {
        Quad {
            a,
            b: Rational::zero(),
            m: Rational::zero(),
        }
    }

    /// √m as a `Quad` (collapses if `m` is a perfect square).
    pub fn sqrt(m: Rational) -> Self {
        Quad::new(Rational::zero(), Rational::one(), m)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.m
    }

    /// `Some(a)` when the value is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.b.is_zero() || self.m.is_zero() {
            self.b = Rational::zero();
            self.m = Rational::zero();
            return;
        }
        if let Some(r) = self.m.sqrt_exact() {
            self.a = &self.a + &(&self.b * &r);
            self.b = Rational::zero();
            self.m = Rational::zero();
        }
    }

    fn merged_radicand(&self, other: &Quad) -> Rational {
        if self.b.is_zero() {
            other.m.clone()
        } else if other.b.is_zero() {
            self.m.clone()
        } else {
            assert_eq!(
                self.m, other.m,
                "Quad arithmetic across distinct radicands ({} vs {})",
                self.m, other.m
            );
            self.m.clone()
        }
    }

    /// Exact sign of `a + b√m` (-1, 0, +1).
    pub fn signum(&self) -> i32 {
        let (sa, sb) = (self.a.signum(), self.b.signum());
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb; // m > 0 after canonicalization
        }
        if sa == sb {
            return sa;
        }
        // a and b√m compete: the larger magnitude wins, compare a² with b²m.
        let cmp = (&self.a * &self.a) - (&self.b * &self.b * &self.m);
        match cmp.signum() {
            0 => 0,
            1 => sa,
            _ => sb,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// (a + b√m)² — always representable over the same radicand.
    pub fn square(&self) -> Quad {
        self.clone() * self.clone()
    }

    /// Exact value equality that tolerates different radicands, provided at
    /// least one side is "pure" (rational, or a pure multiple of its radical).
    pub fn value_eq(&self, other: &Quad) -> bool {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => self.a == other.a,
            (true, false) | (false, true) => {
                // rational vs irrational (a + b√m with b≠0, m not a square)
                if self.a == other.a && self.b.is_zero() == other.b.is_zero() {
                    unreachable!()
                } else if self.signum() != other.signum() {
                    false
                } else {
                    // a rational can only equal an irrational if both are
                    // forced through squares AND the pure parts line up,
                    // which cannot happen for b≠0 with non-square m.
                    self.a == other.a && self.b == other.b
                }
            }
            (false, false) => {
                if self.m == other.m {
                    return self.a == other.a && self.b == other.b;
                }
                // different radicands: only comparable when both are pure
                // radical parts (a = 0): b₁√m₁ = b₂√m₂ ⇔ signs match and
                // b₁²m₁ = b₂²m₂.
                if self.a.is_zero() && other.a.is_zero() {
                    self.b.signum() == other.b.signum()
                        && (&self.b * &self.b * &self.m) == (&other.b * &other.b * &other.m)
                } else {
                    panic!(
                        "value_eq across radicands {} vs {} with mixed parts",
                        self.m, other.m
                    )
                }
            }
        }
    }

    pub fn recip(&self) -> Quad {
        assert!(!self.is_zero(), "division by zero Quad");
        // 1/(a+b√m) = (a−b√m)/(a²−b²m)
        let norm = (&self.a * &self.a) - (&self.b * &self.b * &self.m);
        assert!(!norm.is_zero(), "zero field norm with nonzero value");
        Quad::new(&self.a / &norm, &(-&self.b) / &norm, self.m.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * self.m.to_f64().sqrt()
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({})*sqrt({})", self.b, self.m)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.m)
        }
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, rhs: Quad) -> Quad {
        let m = self.merged_radicand(&rhs);
        Quad::new(&self.a + &rhs.a, &self.b + &rhs.b, m)
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, rhs: Quad) -> Quad {
        let m = self.merged_radicand(&rhs);
        Quad::new(&self.a - &rhs.a, &self.b - &rhs.b, m)
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, rhs: Quad) -> Quad {
        let m = self.merged_radicand(&rhs);
        let a = (&self.a * &rhs.a) + (&self.b * &rhs.b * &m);
        let b = (&self.a * &rhs.b) + (&self.b * &rhs.a);
        Quad::new(a, b, m)
    }
}

impl Div for Quad {
    type Output = Quad;
    #[allow(clippy::suspicious_arithmetic_impl)] // division via the conjugate
    fn div(self, rhs: Quad) -> Quad {
        self * rhs.recip()
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            a: -self.a,
            b: -self.b,
            m: self.m,
        }
    }
}

impl Zero for Quad {
    fn zero() -> Self {
        Quad::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        Quad::is_zero(self)
    }
}

impl One for Quad {
    fn one() -> Self {
        Quad::rational(Rational::one())
    }
}

impl From<Rational> for Quad {
    fn from(r: Rational) -> Self {
        Quad::rational(r)
    }
}
