//! Validated rational interval arithmetic: every operation returns an
//! interval guaranteed to contain the exact real result. Field operations
//! are exact; square and n-th roots round outward by a caller-chosen
//! number of binary digits. This is the substrate for the sign
//! certificates and for enclosing the irrational constants (√2, γ, η, ε)
//! to arbitrary accuracy.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::field::{rational_to_f64, FieldElement, OrderedField, Rational};
use super::poly::Polynomial;

/// A closed interval [lo, hi] with exact rational endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct RatInterval {
    lo: Rational,
    hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    /// The degenerate interval [q, q].
    pub fn point(q: Rational) -> Self {
        Self {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Self::new(Rational::from_int(lo), Rational::from_int(hi))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_int(2)
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !Signed::is_positive(&self.lo) && !Signed::is_negative(&self.hi)
    }

    pub fn is_strictly_negative(&self) -> bool {
        Signed::is_negative(&self.hi)
    }

    pub fn is_strictly_positive(&self) -> bool {
        Signed::is_positive(&self.lo)
    }

    pub fn is_nonpositive(&self) -> bool {
        !Signed::is_positive(&self.hi)
    }

    /// Splits at the midpoint; both halves share the cut endpoint.
    pub fn split(&self) -> (Self, Self) {
        let m = self.midpoint();
        (
            Self::new(self.lo.clone(), m.clone()),
            Self::new(m, self.hi.clone()),
        )
    }

    /// Intersection of two enclosures of the same quantity. Panics if the
    /// intervals are disjoint, since that means at least one of them was
    /// not actually an enclosure.
    pub fn intersect(&self, rhs: &Self) -> Self {
        let lo = self.lo.clone().max(rhs.lo.clone());
        let hi = self.hi.clone().min(rhs.hi.clone());
        assert!(
            lo <= hi,
            "intersection of disjoint enclosures: one of them is unsound"
        );
        Self { lo, hi }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let candidates = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    /// Division; panics if the divisor straddles zero (the certifier never
    /// divides by a sign-indefinite quantity).
    pub fn div(&self, rhs: &Self) -> Self {
        assert!(
            !rhs.contains_zero(),
            "interval division by an interval containing zero"
        );
        let candidates = [
            &self.lo / &rhs.lo,
            &self.lo / &rhs.hi,
            &self.hi / &rhs.lo,
            &self.hi / &rhs.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    /// Exact scaling by a rational.
    pub fn scale(&self, s: &Rational) -> Self {
        let a = &self.lo * s;
        let b = &self.hi * s;
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn add_rational(&self, s: &Rational) -> Self {
        Self {
            lo: &self.lo + s,
            hi: &self.hi + s,
        }
    }

    /// Tight enclosure of {x² : x ∈ self}; sharper than `mul(self, self)`
    /// when the interval straddles zero.
    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            Self {
                lo: Rational::zero(),
                hi: a.max(b),
            }
        } else {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            Self { lo, hi }
        }
    }

    /// Outward-rounded square root, valid for lo ≥ 0; endpoints gain at
    /// most 2^(−bits) of slack each.
    pub fn sqrt(&self, bits: u32) -> Self {
        assert!(
            !Signed::is_negative(&self.lo),
            "sqrt of an interval reaching below zero"
        );
        let (lo, _) = sqrt_bounds(&self.lo, bits);
        let (_, hi) = sqrt_bounds(&self.hi, bits);
        Self { lo, hi }
    }

    /// Nearest-double endpoint approximations, for reports only (the
    /// conversion rounds to nearest, not outward).
    pub fn approx_f64(&self) -> (f64, f64) {
        (rational_to_f64(&self.lo), rational_to_f64(&self.hi))
    }
}

/// Floor/ceiling enclosure of √q with denominator den(q)·2^bits: integer
/// square root of the scaled numerator gives ⌊√(q)·2^bits·den⌋-style
/// bounds, collapsing to a point for exact squares.
pub fn sqrt_bounds(q: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(!Signed::is_negative(q), "sqrt of a negative rational");
    let scaled: BigInt = (q.numer() * q.denom()) << (2 * bits as usize);
    let root = scaled.sqrt();
    let scale_den: BigInt = q.denom() << (bits as usize);
    let lo = Rational::new(root.clone(), scale_den.clone());
    if &root * &root == scaled {
        (lo.clone(), lo)
    } else {
        (lo, Rational::new(root + 1, scale_den))
    }
}

/// Enclosure of q^(1/n) for q ≥ 0, n ≥ 1, by the same scaling trick with
/// the integer n-th root.
pub fn nth_root_bounds(q: &Rational, n: u32, bits: u32) -> (Rational, Rational) {
    assert!(n >= 1, "root order must be positive");
    assert!(!Signed::is_negative(q), "even roots of negatives are complex");
    let den_pow = num_traits::pow::pow(q.denom().clone(), (n - 1) as usize);
    let scaled: BigInt = (q.numer() * den_pow) << ((n as usize) * (bits as usize));
    let root = scaled.nth_root(n);
    let scale_den: BigInt = q.denom() << (bits as usize);
    let lo = Rational::new(root.clone(), scale_den.clone());
    if num_traits::pow::pow(root.clone(), n as usize) == scaled {
        (lo.clone(), lo)
    } else {
        (lo, Rational::new(root + 1, scale_den))
    }
}

/// Enclosure of √2.
pub fn sqrt2_enclosure(bits: u32) -> RatInterval {
    let (lo, hi) = sqrt_bounds(&Rational::from_int(2), bits);
    RatInterval::new(lo, hi)
}

/// Enclosure of α = 1/√2 = √2/2.
pub fn alpha_enclosure(bits: u32) -> RatInterval {
    sqrt2_enclosure(bits).scale(&Rational::new(BigInt::from(1), BigInt::from(2)))
}

/// Enclosure of γ = 5/2 − √2 + ½√(29 − 20√2), the expansion bound of the
/// outer-ring regions.
pub fn gamma_enclosure(bits: u32) -> RatInterval {
    let s2 = sqrt2_enclosure(bits + 8);
    let inner = RatInterval::point(Rational::from_int(29)).sub(&s2.scale(&Rational::from_int(20)));
    let root = inner.sqrt(bits + 8);
    RatInterval::point(Rational::new(BigInt::from(5), BigInt::from(2)))
        .sub(&s2)
        .add(&root.scale(&Rational::new(BigInt::from(1), BigInt::from(2))))
}

/// Enclosure of η = 1/γ = 5/2 − √2 − ½√(29 − 20√2).
pub fn eta_enclosure(bits: u32) -> RatInterval {
    let s2 = sqrt2_enclosure(bits + 8);
    let inner = RatInterval::point(Rational::from_int(29)).sub(&s2.scale(&Rational::from_int(20)));
    let root = inner.sqrt(bits + 8);
    RatInterval::point(Rational::new(BigInt::from(5), BigInt::from(2)))
        .sub(&s2)
        .sub(&root.scale(&Rational::new(BigInt::from(1), BigInt::from(2))))
}

/// Enclosure of ε = (1 − 2^(−1/3))^(3/2), the x-threshold below which the
/// convergence argument stops tracking orbits.
pub fn epsilon_enclosure(bits: u32) -> RatInterval {
    let (lo, hi) = nth_root_bounds(&Rational::new(BigInt::from(1), BigInt::from(2)), 3, bits + 8);
    let cbrt_half = RatInterval::new(lo, hi); // 2^(−1/3)
    let base = RatInterval::point(Rational::from_int(1)).sub(&cbrt_half);
    let cubed = base.mul(&base).mul(&base);
    cubed.sqrt(bits)
}

/// Enclosure of a + b√2 given an enclosure of √2.
pub fn field_element_enclosure(x: &FieldElement, sqrt2: &RatInterval) -> RatInterval {
    sqrt2
        .scale(x.sqrt2_part())
        .add_rational(x.rational_part())
}

/// Interval Horner evaluation of a rational polynomial.
pub fn eval_poly(p: &Polynomial<Rational>, x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add_rational(c);
    }
    acc
}

/// Interval Horner evaluation when the coefficients are themselves
/// enclosures (ascending degree order).
pub fn eval_poly_interval_coeffs(coeffs: &[RatInterval], x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}
