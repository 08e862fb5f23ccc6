//! Coefficient fields for exact polynomial arithmetic: arbitrary-precision
//! rationals and the quadratic extension Q(√2), both with exact total order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always in reduced form with a
/// positive denominator (the representation `num_rational` maintains).
pub type Rational = num_rational::BigRational;

/// An ordered field with decidable exact comparison — the coefficient
/// domain the polynomial and Sturm machinery is generic over.
///
/// Implementations must be exact: `sign` and the arithmetic operators may
/// never approximate. Both [`Rational`] and [`FieldElement`] qualify;
/// `f64` deliberately does not.
pub trait OrderedField:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// Embeds a machine integer.
    fn from_int(n: i64) -> Self;

    /// Exact sign relative to zero.
    fn sign(&self) -> Ordering;

    fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// Self divided by two; used by bisection loops.
    fn half(&self) -> Self {
        self.clone() / Self::from_int(2)
    }
}

impl OrderedField for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if Signed::is_positive(self) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Builds `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rounds a rational to the nearest `f64`, for displays and witness
/// reports only — never for decisions.
pub fn rational_to_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// An element a + b√2 of the real quadratic field Q(√2), with exact
/// rational components. The representation is unique because √2 is
/// irrational, so derived equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    a: Rational,
    b: Rational,
}

impl FieldElement {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
        }
    }

    /// The element √2 itself.
    pub fn sqrt2() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// Builds (p + q√2) / d from machine integers. Panics if `d == 0`.
    pub fn from_ints(p: i64, q: i64, d: i64) -> Self {
        Self {
            a: rat(p, d),
            b: rat(q, d),
        }
    }

    /// Rational part a.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient b of √2.
    pub fn sqrt2_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field conjugate a − b√2; the norm (self × conjugate) is the
    /// rational a² − 2b², zero only for the zero element.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_int(2) * &self.b * &self.b
    }

    /// Nearest-double approximation, for reporting only.
    pub fn approx_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * std::f64::consts::SQRT_2
    }

    /// Multiplicative inverse. Panics on zero, like rational division.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(sqrt 2)");
        let n = self.norm();
        Self {
            a: &self.a / &n,
            b: -(&self.b / &n),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt(2)", self.b);
        }
        if Signed::is_negative(&self.b) {
            write!(f, "{} - {}*sqrt(2)", self.a, -&self.b)
        } else {
            write!(f, "{} + {}*sqrt(2)", self.a, self.b)
        }
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let two = Rational::from_int(2);
        Self {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for FieldElement {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for FieldElement {
    fn one() -> Self {
        Self {
            a: Rational::one(),
            b: Rational::zero(),
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }
}

impl OrderedField for FieldElement {
    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    /// Exact sign of a + b√2 by case analysis: when a and b disagree in
    /// sign, compare a² against 2b² (i.e. decide |a| vs |b|√2 without
    /// leaving Q).
    fn sign(&self) -> Ordering {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (Ordering::Equal, _) => sb,
            (_, Ordering::Equal) => sa,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // a > 0 > b: positive iff a² > 2b²; a < 0 < b: positive iff 2b² > a².
            (Ordering::Greater, Ordering::Less) => {
                let a2 = &self.a * &self.a;
                let b2_twice = Rational::from_int(2) * &self.b * &self.b;
                a2.cmp(&b2_twice)
            }
            (Ordering::Less, Ordering::Greater) => {
                let a2 = &self.a * &self.a;
                let b2_twice = Rational::from_int(2) * &self.b * &self.b;
                b2_twice.cmp(&a2)
            }
        }
    }
}
