//! Dense univariate polynomials over an exact ordered field, with the
//! Sturm-sequence operations the certificates are built on: root counting
//! with explicit endpoint handling, bisection isolation, and exact
//! factorization checks.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use super::field::OrderedField;

/// Errors from root counting and isolation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SturmError {
    #[error("the zero polynomial has no root-counting data")]
    ZeroPolynomial,
    #[error("interval endpoints must satisfy lo < hi")]
    EmptyInterval,
    #[error("expected exactly one root in the open interval, found {found}")]
    NotExactlyOneRoot { found: usize },
}

/// Distinct-root count of a closed interval, split by location so callers
/// can honor open/closed endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootCount {
    /// Distinct roots strictly inside the interval.
    pub interior: usize,
    pub at_lo: bool,
    pub at_hi: bool,
}

/// A dense polynomial with coefficients in ascending degree order; the
/// zero polynomial is the empty coefficient list, so the leading
/// coefficient is nonzero whenever it exists.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<F: OrderedField> {
    coeffs: Vec<F>,
}

impl<F: OrderedField> Polynomial<F> {
    /// From ascending coefficients (constant term first); trailing zeros
    /// are trimmed.
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// From descending coefficients, the order polynomials are written in:
    /// `from_descending([8, 4, -39, -7, 51, -9])` is 8z⁵+4z⁴−39z³−7z²+51z−9.
    pub fn from_descending(mut coeffs: Vec<F>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn from_descending_ints(coeffs: &[i64]) -> Self {
        Self::from_descending(coeffs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// c·xᵏ.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Coefficient of xᵏ (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| F::from_int(k as i64) * c.clone())
            .collect();
        Self::new(coeffs)
    }

    pub fn mul_scalar(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Quotient and remainder of exact field division. Panics on a zero
    /// divisor, like scalar division.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.degree().expect("polynomial division by zero");
        let d_lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.leading().unwrap().clone() / d_lead.clone();
            let shift = r_deg - d_deg;
            // rem -= factor · x^shift · divisor, dropping the cancelled lead
            let mut next = rem.coeffs;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let term = factor.clone() * dc.clone();
                next[k + shift] = next[k + shift].clone() - term;
            }
            next.truncate(r_deg); // leading term cancels exactly
            quot[shift] = factor;
            rem = Self::new(next);
        }
        (Self::new(quot), rem)
    }

    /// Divides out (x − r) once, if r is a root.
    pub fn deflate_root(&self, r: &F) -> Option<Self> {
        if self.is_zero() || !self.eval(r).is_zero() {
            return None;
        }
        // synthetic division; the final remainder is p(r) = 0
        let mut quot = vec![F::zero(); self.coeffs.len() - 1];
        let mut carry = F::zero();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if k == 0 {
                break;
            }
            carry = carry * r.clone() + c.clone();
            quot[k - 1] = carry.clone();
        }
        Some(Self::new(quot))
    }

    /// Monic greatest common divisor (1 for coprime inputs, 0 only if both
    /// are zero).
    pub fn gcd(p: &Self, q: &Self) -> Self {
        let mut a = p.clone();
        let mut b = q.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lead) => {
                let inv = F::one() / lead.clone();
                a.mul_scalar(&inv)
            }
            None => a,
        }
    }

    /// The square-free part p / gcd(p, p′): same distinct roots, all simple.
    pub fn square_free_part(&self) -> Self {
        if self.degree().map_or(true, |d| d <= 1) {
            return self.clone();
        }
        let g = Self::gcd(self, &self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero(), "gcd must divide the polynomial exactly");
        q
    }

    /// Rescales by 1/|leading|, a positive scalar, so remainder-sequence
    /// coefficients stay small without disturbing any sign evaluation
    /// (the content stripping step of the Sturm construction).
    fn normalized_by_positive_scalar(self) -> Self {
        match self.leading() {
            Some(lead) => {
                let inv = F::one() / lead.abs();
                self.mul_scalar(&inv)
            }
            None => self,
        }
    }

    /// Sturm chain of the square-free part: s₀ = p*, s₁ = p*′, then
    /// sᵢ₊₁ = −rem(sᵢ₋₁, sᵢ) until the remainder vanishes.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let sf = self.square_free_part().normalized_by_positive_scalar();
        let deriv = sf.derivative();
        if deriv.is_zero() {
            return vec![sf];
        }
        let mut chain = vec![sf, deriv.normalized_by_positive_scalar()];
        loop {
            let (_, r) = chain[chain.len() - 2].div_rem(&chain[chain.len() - 1]);
            if r.is_zero() {
                // sf is square-free, so the chain ends at a nonzero constant
                break;
            }
            chain.push((-r).normalized_by_positive_scalar());
        }
        chain
    }

    /// Sign variations of the chain at x, skipping exact zeros.
    pub fn sign_variations(chain: &[Self], x: &F) -> usize {
        let mut variations = 0;
        let mut prev: Option<Ordering> = None;
        for p in chain {
            let s = p.eval(x).sign();
            if s == Ordering::Equal {
                continue;
            }
            if let Some(ps) = prev {
                if ps != s {
                    variations += 1;
                }
            }
            prev = Some(s);
        }
        variations
    }

    /// Distinct real roots in [lo, hi], split into interior and endpoint
    /// hits. Endpoint roots are divided out first, after which Sturm's
    /// theorem applied to the square-free part counts the open interval.
    pub fn count_roots(&self, lo: &F, hi: &F) -> Result<RootCount, SturmError> {
        if self.is_zero() {
            return Err(SturmError::ZeroPolynomial);
        }
        if !matches!(lo.partial_cmp(hi), Some(Ordering::Less)) {
            return Err(SturmError::EmptyInterval);
        }
        let mut p = self.clone();
        let at_lo = p.eval(lo).is_zero();
        let at_hi = p.eval(hi).is_zero();
        while let Some(q) = p.deflate_root(lo) {
            p = q;
        }
        while let Some(q) = p.deflate_root(hi) {
            p = q;
        }
        if p.degree().map_or(true, |d| d == 0) {
            return Ok(RootCount {
                interior: 0,
                at_lo,
                at_hi,
            });
        }
        let chain = p.sturm_chain();
        let v_lo = Self::sign_variations(&chain, lo);
        let v_hi = Self::sign_variations(&chain, hi);
        debug_assert!(v_lo >= v_hi, "sign variations must not increase");
        Ok(RootCount {
            interior: v_lo.saturating_sub(v_hi),
            at_lo,
            at_hi,
        })
    }

    /// Number of distinct real roots in the interval with the requested
    /// endpoint convention.
    pub fn sturm_count(
        &self,
        lo: &F,
        hi: &F,
        include_lo: bool,
        include_hi: bool,
    ) -> Result<usize, SturmError> {
        let rc = self.count_roots(lo, hi)?;
        Ok(rc.interior
            + usize::from(include_lo && rc.at_lo)
            + usize::from(include_hi && rc.at_hi))
    }

    /// Shrinks (lo, hi), which must contain exactly one root in its
    /// interior, to an enclosure of width ≤ `width` by Sturm-guided
    /// bisection. Endpoint roots of the original interval are ignored.
    pub fn isolate_root(&self, lo: &F, hi: &F, width: &F) -> Result<(F, F), SturmError> {
        let rc = self.count_roots(lo, hi)?;
        if rc.interior != 1 {
            return Err(SturmError::NotExactlyOneRoot { found: rc.interior });
        }
        // work on the endpoint-deflated square-free part: same interior root
        let mut p = self.clone();
        while let Some(q) = p.deflate_root(lo) {
            p = q;
        }
        while let Some(q) = p.deflate_root(hi) {
            p = q;
        }
        let chain = p.sturm_chain();
        let mut a = lo.clone();
        let mut b = hi.clone();
        let v_a = Self::sign_variations(&chain, &a);
        while (b.clone() - a.clone()).partial_cmp(width) == Some(Ordering::Greater) {
            let mid = (a.clone() + b.clone()).half();
            if p.eval(&mid).is_zero() {
                return Ok((mid.clone(), mid));
            }
            if v_a.saturating_sub(Self::sign_variations(&chain, &mid)) == 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        Ok((a, b))
    }

    /// Exact check that the product of `factors` equals `product`.
    pub fn verify_factorization(product: &Self, factors: &[Self]) -> bool {
        let mut acc = Self::constant(F::one());
        for f in factors {
            acc = &acc * f;
        }
        acc == *product
    }
}

impl<F: OrderedField> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl<F: OrderedField> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl<F: OrderedField> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl<F: OrderedField> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<F: OrderedField> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<F: OrderedField> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: OrderedField> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: OrderedField> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{rat, FieldElement, Rational};
    use num_traits::{One, Zero};

    type RatPoly = Polynomial<Rational>;
    type ExtPoly = Polynomial<FieldElement>;

    fn fe(p: i64, q: i64, d: i64) -> FieldElement {
        FieldElement::from_ints(p, q, d)
    }

    #[test]
    fn division_reconstructs_the_dividend() {
        let p = RatPoly::from_descending_ints(&[3, 0, -2, 7, 1]);
        let d = RatPoly::from_descending_ints(&[2, -1, 4]);
        let (q, r) = p.div_rem(&d);
        assert!(r.degree() < d.degree());
        assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn deflation_strips_one_linear_factor() {
        // (x − 1)²(x + 3)
        let p = RatPoly::from_descending_ints(&[1, 1, -5, 3]);
        let one = Rational::from_int(1);
        let d1 = p.deflate_root(&one).unwrap();
        let d2 = d1.deflate_root(&one).unwrap();
        assert!(d2.deflate_root(&one).is_none());
        assert_eq!(d2, RatPoly::from_descending_ints(&[1, 3]));
        assert!(p.deflate_root(&Rational::from_int(2)).is_none());
    }

    #[test]
    fn square_free_part_drops_multiplicities() {
        // (x − 1)²(x + 3) → (x − 1)(x + 3) up to the forced monic gcd scale
        let p = RatPoly::from_descending_ints(&[1, 1, -5, 3]);
        let sf = p.square_free_part();
        assert_eq!(sf.degree(), Some(2));
        assert!(sf.eval(&Rational::from_int(1)).is_zero());
        assert!(sf.eval(&Rational::from_int(-3)).is_zero());
        assert!(!sf.derivative().eval(&Rational::from_int(1)).is_zero());
    }

    #[test]
    fn sturm_counts_simple_examples() {
        // z² − 2 has one root in (0, 2)
        let p = RatPoly::from_descending_ints(&[1, 0, -2]);
        assert_eq!(
            p.sturm_count(&Rational::from_int(0), &Rational::from_int(2), false, false),
            Ok(1)
        );
        // and two in (−2, 2)
        assert_eq!(
            p.sturm_count(&Rational::from_int(-2), &Rational::from_int(2), false, false),
            Ok(2)
        );
        // none in (2, 3)
        assert_eq!(
            p.sturm_count(&Rational::from_int(2), &Rational::from_int(3), false, false),
            Ok(0)
        );
    }

    #[test]
    fn quintic_has_one_root_in_unit_interval() {
        let quintic = RatPoly::from_descending_ints(&[8, 4, -39, -7, 51, -9]);
        assert_eq!(
            quintic.sturm_count(&Rational::from_int(0), &Rational::from_int(1), false, false),
            Ok(1)
        );
        // sign change confirms the bracket: p(0) = −9 < 0 < 8 = p(1)
        assert!(quintic.eval(&Rational::from_int(0)).is_negative());
        assert!(quintic.eval(&Rational::from_int(1)).is_positive());
    }

    #[test]
    fn endpoint_roots_are_reported_separately() {
        // x(x − 1)(x − 2) on [0, 2]: interior root 1, both endpoints roots
        let p = RatPoly::from_descending_ints(&[1, -3, 2, 0]);
        let rc = p
            .count_roots(&Rational::from_int(0), &Rational::from_int(2))
            .unwrap();
        assert_eq!(
            rc,
            RootCount {
                interior: 1,
                at_lo: true,
                at_hi: true
            }
        );
        assert_eq!(
            p.sturm_count(&Rational::from_int(0), &Rational::from_int(2), true, true),
            Ok(3)
        );
        assert_eq!(
            p.sturm_count(&Rational::from_int(0), &Rational::from_int(2), true, false),
            Ok(2)
        );
    }

    #[test]
    fn multiple_roots_count_once() {
        // (x − 1)²(x + 3) has two distinct roots in (−4, 2)
        let p = RatPoly::from_descending_ints(&[1, 1, -5, 3]);
        assert_eq!(
            p.sturm_count(&Rational::from_int(-4), &Rational::from_int(2), false, false),
            Ok(2)
        );
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let p = RatPoly::zero();
        assert_eq!(
            p.count_roots(&Rational::from_int(0), &Rational::from_int(1)),
            Err(SturmError::ZeroPolynomial)
        );
        let q = RatPoly::from_descending_ints(&[1, 0, -2]);
        assert_eq!(
            q.count_roots(&Rational::from_int(1), &Rational::from_int(1)),
            Err(SturmError::EmptyInterval)
        );
    }

    #[test]
    fn isolates_sqrt_two() {
        let p = RatPoly::from_descending_ints(&[1, 0, -2]);
        let width = rat(1, 1_000_000_000_000);
        let (lo, hi) = p
            .isolate_root(&Rational::from_int(1), &Rational::from_int(2), &width)
            .unwrap();
        assert!(hi.clone() - lo.clone() <= width);
        // the enclosure really brackets √2: lo² ≤ 2 ≤ hi²
        assert!(&lo * &lo <= Rational::from_int(2));
        assert!(&hi * &hi >= Rational::from_int(2));
        // and agrees with the printed decimal 1.414213562373
        let printed = rat(1_414_213_562_373, 1_000_000_000_000);
        assert!((lo - printed.clone()).abs() <= rat(1, 1_000_000_000));
        assert!((hi - printed).abs() <= rat(1, 1_000_000_000));
    }

    #[test]
    fn isolate_requires_a_unique_root() {
        let p = RatPoly::from_descending_ints(&[1, 0, -2]);
        let width = rat(1, 1024);
        assert_eq!(
            p.isolate_root(&Rational::from_int(-2), &Rational::from_int(2), &width),
            Err(SturmError::NotExactlyOneRoot { found: 2 })
        );
        assert_eq!(
            p.isolate_root(&Rational::from_int(2), &Rational::from_int(3), &width),
            Err(SturmError::NotExactlyOneRoot { found: 0 })
        );
    }

    #[test]
    fn factorization_checks_are_exact() {
        // 8z⁶ − 4z⁵ − 43z⁴ + 32z³ + 58z² − 60z + 9 = (z − 1) · quintic
        let sextic = RatPoly::from_descending_ints(&[8, -4, -43, 32, 58, -60, 9]);
        let quintic = RatPoly::from_descending_ints(&[8, 4, -39, -7, 51, -9]);
        let linear = RatPoly::from_descending_ints(&[1, -1]);
        assert!(RatPoly::verify_factorization(&sextic, &[linear, quintic]));

        let not_it = RatPoly::from_descending_ints(&[1, 0, -2]);
        let f1 = RatPoly::from_descending_ints(&[1, -1]);
        let f2 = RatPoly::from_descending_ints(&[1, 2]);
        assert!(!RatPoly::verify_factorization(&not_it, &[f1, f2]));
    }

    #[test]
    fn quartic_factorization_over_the_extension_field() {
        // w⁴ − 4√2w³ + 6w² + 4√2w − 8 = (w − √2)² (w² − 2√2w − 4)
        let quartic = ExtPoly::from_descending(vec![
            fe(1, 0, 1),
            fe(0, -4, 1),
            fe(6, 0, 1),
            fe(0, 4, 1),
            fe(-8, 0, 1),
        ]);
        let linear = ExtPoly::from_descending(vec![fe(1, 0, 1), fe(0, -1, 1)]);
        let quadratic =
            ExtPoly::from_descending(vec![fe(1, 0, 1), fe(0, -2, 1), fe(-4, 0, 1)]);
        assert!(ExtPoly::verify_factorization(
            &quartic,
            &[linear.clone(), linear, quadratic]
        ));
    }

    #[test]
    fn sturm_over_the_extension_field() {
        // square-free part of the quartic above has roots √2 and √2 ± √6;
        // none of them lies in the open interval (1, √2)
        let quartic = ExtPoly::from_descending(vec![
            fe(1, 0, 1),
            fe(0, -4, 1),
            fe(6, 0, 1),
            fe(0, 4, 1),
            fe(-8, 0, 1),
        ]);
        let sf = quartic.square_free_part();
        assert_eq!(sf.degree(), Some(3));
        let one = FieldElement::one();
        let sqrt2 = FieldElement::sqrt2();
        assert_eq!(sf.sturm_count(&one, &sqrt2, false, false), Ok(0));
        // √2 itself is a root, picked up by the closed endpoint
        assert_eq!(sf.sturm_count(&one, &sqrt2, false, true), Ok(1));
        // and √2 + √6 ≈ 3.86 is the only root beyond it
        assert_eq!(
            sf.sturm_count(&sqrt2, &FieldElement::from_int(10), false, false),
            Ok(1)
        );
    }

    #[test]
    fn chain_evaluation_skips_exact_zeros() {
        // evaluate variations at a point where a chain member is exactly 0
        let p = RatPoly::from_descending_ints(&[1, 0, -1, 0]);
        assert_eq!(
            p.sturm_count(&rat(-2, 1), &rat(2, 1), false, false),
            Ok(3)
        );
        // variation count at 0 (a root of p itself) still behaves
        let chain = p.sturm_chain();
        let v0 = RatPoly::sign_variations(&chain, &Rational::from_int(0));
        let v2 = RatPoly::sign_variations(&chain, &Rational::from_int(2));
        assert_eq!(v0 - v2, 1, "one root in (0, 2)");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// ∏ (2x − 2r)^m over the given integer roots, times an optional
        /// irreducible quadratic — a polynomial whose real roots are known
        /// by construction.
        fn build_poly(roots: &[(i64, usize)], quad: Option<(i64, i64)>) -> RatPoly {
            let mut p = RatPoly::constant(Rational::from_int(1));
            for &(r, m) in roots {
                let factor = RatPoly::from_descending(vec![
                    Rational::from_int(1),
                    Rational::from_int(-r),
                ]);
                for _ in 0..m {
                    p = &p * &factor;
                }
            }
            if let Some((b, c)) = quad {
                let q = RatPoly::from_descending_ints(&[1, b, c]);
                p = &p * &q;
            }
            p
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn sturm_counts_match_constructed_root_sets(
                root_set in proptest::collection::btree_set(-9i64..=9, 1..5),
                mults in proptest::collection::vec(1usize..=2, 5),
                quad in proptest::option::of((-3i64..=3, 1i64..=5)),
                lo in -12i64..=8,
                span in 1i64..=12,
            ) {
                if let Some((b, c)) = quad {
                    prop_assume!(b * b < 4 * c); // keep the quadratic rootless
                }
                let roots: Vec<(i64, usize)> = root_set
                    .iter()
                    .zip(mults.iter())
                    .map(|(&r, &m)| (r, m))
                    .collect();
                let p = build_poly(&roots, quad);
                let hi = lo + span;

                let expected_interior =
                    roots.iter().filter(|(r, _)| lo < *r && *r < hi).count();
                let counts = p
                    .count_roots(&Rational::from_int(lo), &Rational::from_int(hi))
                    .unwrap();
                prop_assert_eq!(counts.interior, expected_interior);
                prop_assert_eq!(counts.at_lo, roots.iter().any(|(r, _)| *r == lo));
                prop_assert_eq!(counts.at_hi, roots.iter().any(|(r, _)| *r == hi));
            }

            #[test]
            fn isolation_brackets_every_constructed_root(
                root_set in proptest::collection::btree_set(-9i64..=9, 1..4),
                quad in proptest::option::of((-3i64..=3, 1i64..=5)),
            ) {
                if let Some((b, c)) = quad {
                    prop_assume!(b * b < 4 * c);
                }
                let roots: Vec<(i64, usize)> =
                    root_set.iter().map(|&r| (r, 1)).collect();
                let p = build_poly(&roots, quad);
                let width = rat(1, 1_000_000);
                for &(r, _) in &roots {
                    // integer roots are at least 1 apart, so ±1/4 isolates
                    let (lo, hi) = p
                        .isolate_root(&(rat(4 * r - 1, 4)), &rat(4 * r + 1, 4), &width)
                        .unwrap();
                    let exact = Rational::from_int(r);
                    prop_assert!(lo <= exact && exact <= hi);
                    prop_assert!(&hi - &lo <= width);
                }
            }

            #[test]
            fn products_evaluate_exactly_over_the_extension_field(
                a in proptest::collection::vec((-9i64..=9, -9i64..=9), 1..5),
                b in proptest::collection::vec((-9i64..=9, -9i64..=9), 1..5),
                t in (-9i64..=9, -9i64..=9),
            ) {
                let mk = |cs: &[(i64, i64)]| {
                    ExtPoly::new(cs.iter().map(|&(p, q)| fe(p, q, 1)).collect())
                };
                let pa = mk(&a);
                let pb = mk(&b);
                let at = fe(t.0, t.1, 1);
                let lhs = (&pa * &pb).eval(&at);
                let rhs = pa.eval(&at) * pb.eval(&at);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
