//! The fixed polynomials and the two inequality kernels the certificates
//! examine, in exact and interval form.
//!
//! Both kernels are quadratics in the radius ρ whose coefficients depend
//! on w = sinθ (with cosθ = +√(1−w²), valid throughout the first
//! quadrant): the half-rate kernel decides when one step halves the
//! squared distance to the solution, the eta-rate kernel decides when the
//! γ-growth bound holds. Interval evaluation needs only +, −, ×, √.

use num_traits::Zero;

use crate::exact::field::{rat, FieldElement, OrderedField, Rational};
use crate::exact::interval::{sqrt2_enclosure, RatInterval};
use crate::exact::poly::Polynomial;

/// Enclosure of c = √(1 − w²) on a w interval.
fn cosine_enclosure(w: &RatInterval, bits: u32) -> RatInterval {
    RatInterval::point(Rational::from_int(1))
        .sub(&w.square())
        .sqrt(bits)
}

/// The half-rate kernel viewed as A·ρ² + B·ρ + C, returning (A, B, C)
/// enclosures on a w interval:
///   A = 2w² − 1, B = √2(w + c) − 4w², C = 2 − 2√2c,  c = √(1 − w²).
pub fn half_kernel_rho_coeffs(
    w: &RatInterval,
    bits: u32,
) -> (RatInterval, RatInterval, RatInterval) {
    let one = RatInterval::point(Rational::from_int(1));
    let s2 = sqrt2_enclosure(bits);
    let w_sq = w.square();
    let c = cosine_enclosure(w, bits);

    let a = w_sq.scale(&rat(2, 1)).sub(&one);
    let b = s2.mul(&w.add(&c)).sub(&w_sq.scale(&rat(4, 1)));
    let cc = RatInterval::point(rat(2, 1)).sub(&s2.mul(&c).scale(&rat(2, 1)));
    (a, b, cc)
}

/// w-derivatives (A′, B′, C′) of the half-rate coefficients on a w
/// interval, with c′ = −w/c:
///   A′ = 4w, B′ = √2(1 − w/c) − 8w, C′ = 2√2·w/c.
pub fn half_kernel_rho_coeffs_deriv(
    w: &RatInterval,
    bits: u32,
) -> (RatInterval, RatInterval, RatInterval) {
    let one = RatInterval::point(Rational::from_int(1));
    let s2 = sqrt2_enclosure(bits);
    let w_over_c = w.div(&cosine_enclosure(w, bits));

    let ad = w.scale(&rat(4, 1));
    let bd = s2.mul(&one.sub(&w_over_c)).sub(&w.scale(&rat(8, 1)));
    let cd = s2.mul(&w_over_c).scale(&rat(2, 1));
    (ad, bd, cd)
}

/// The eta-rate kernel viewed as A·ρ² + B·ρ + C, returning (A, B, C)
/// enclosures on a w interval:
///   A = ηw² − 1, B = √2(w + c) − 2ηw², C = (3/2 − √2c)η − 1.
/// The caller supplies an enclosure of η since η lies outside ℚ(√2).
pub fn eta_kernel_rho_coeffs(
    w: &RatInterval,
    eta: &RatInterval,
    bits: u32,
) -> (RatInterval, RatInterval, RatInterval) {
    let one = RatInterval::point(Rational::from_int(1));
    let s2 = sqrt2_enclosure(bits);
    let w_sq = w.square();
    let c = cosine_enclosure(w, bits);

    let eta_w_sq = eta.mul(&w_sq);
    let a = eta_w_sq.sub(&one);
    let b = s2.mul(&w.add(&c)).sub(&eta_w_sq.scale(&rat(2, 1)));
    let cc = RatInterval::point(rat(3, 2))
        .sub(&s2.mul(&c))
        .mul(eta)
        .sub(&one);
    (a, b, cc)
}

/// w-derivatives (A′, B′, C′) of the eta-rate coefficients on a w
/// interval:
///   A′ = 2ηw, B′ = √2(1 − w/c) − 4ηw, C′ = √2·(w/c)·η.
pub fn eta_kernel_rho_coeffs_deriv(
    w: &RatInterval,
    eta: &RatInterval,
    bits: u32,
) -> (RatInterval, RatInterval, RatInterval) {
    let one = RatInterval::point(Rational::from_int(1));
    let s2 = sqrt2_enclosure(bits);
    let w_over_c = w.div(&cosine_enclosure(w, bits));
    let eta_w = eta.mul(w);

    let ad = eta_w.scale(&rat(2, 1));
    let bd = s2.mul(&one.sub(&w_over_c)).sub(&eta_w.scale(&rat(4, 1)));
    let cd = s2.mul(&w_over_c).mul(eta);
    (ad, bd, cd)
}

/// Second w-derivatives (A″, B″, C″) of the half-rate coefficients on a
/// w interval. Since c² + w² = 1, c″ = −1/c³, giving:
///   A″ = 4, B″ = −√2/c³ − 8, C″ = 2√2/c³.
pub fn half_kernel_rho_coeffs_second(
    w: &RatInterval,
    bits: u32,
) -> (RatInterval, RatInterval, RatInterval) {
    let s2 = sqrt2_enclosure(bits);
    let c = cosine_enclosure(w, bits);
    let s2_over_c3 = s2.div(&c.mul(&c.square()));

    let add = RatInterval::point(rat(4, 1));
    let bdd = s2_over_c3.neg().sub(&RatInterval::point(rat(8, 1)));
    let cdd = s2_over_c3.scale(&rat(2, 1));
    (add, bdd, cdd)
}

/// Second w-derivatives (A″, B″, C″) of the eta-rate coefficients on a
/// w interval:
///   A″ = 2η, B″ = −√2/c³ − 4η, C″ = √2η/c³.
pub fn eta_kernel_rho_coeffs_second(
    w: &RatInterval,
    eta: &RatInterval,
    bits: u32,
) -> (RatInterval, RatInterval, RatInterval) {
    let s2 = sqrt2_enclosure(bits);
    let c = cosine_enclosure(w, bits);
    let s2_over_c3 = s2.div(&c.mul(&c.square()));

    let add = eta.scale(&rat(2, 1));
    let bdd = s2_over_c3.neg().sub(&eta.scale(&rat(4, 1)));
    let cdd = s2_over_c3.mul(eta);
    (add, bdd, cdd)
}

/// Enclosure of A·ρ² + B·ρ + C over a ρ interval, given coefficient
/// enclosures.
pub fn quadratic_in_rho(
    a: &RatInterval,
    b: &RatInterval,
    c: &RatInterval,
    rho: &RatInterval,
) -> RatInterval {
    a.mul(&rho.square()).add(&b.mul(rho)).add(c)
}

/// Enclosure of the half-rate kernel
/// (2w² − 1)ρ² − (4w² − √2(w + c))ρ + 2 − 2√2c,  c = √(1 − w²),
/// which must be ≤ 0 for the one-step halving bound.
pub fn half_kernel_enclosure(rho: &RatInterval, w: &RatInterval, bits: u32) -> RatInterval {
    let (a, b, c) = half_kernel_rho_coeffs(w, bits);
    quadratic_in_rho(&a, &b, &c, rho)
}

/// Enclosure of the eta-rate kernel
/// (ηw² − 1)ρ² − (2ηw² − √2(w + c))ρ − (√2c − 3/2)η − 1,  c = √(1 − w²),
/// which must be < 0 for the γ-growth bound.
pub fn eta_kernel_enclosure(
    rho: &RatInterval,
    w: &RatInterval,
    eta: &RatInterval,
    bits: u32,
) -> RatInterval {
    let (a, b, c) = eta_kernel_rho_coeffs(w, eta, bits);
    quadratic_in_rho(&a, &b, &c, rho)
}

type CoeffTriple = (RatInterval, RatInterval, RatInterval);

/// disc = B² − 4AC from a coefficient triple.
fn disc_of((a, b, c): &CoeffTriple) -> RatInterval {
    b.square().sub(&a.mul(c).scale(&rat(4, 1)))
}

/// disc′ = 2BB′ − 4(A′C + AC′) from coefficients and first derivatives.
fn disc_prime((a, b, c): &CoeffTriple, (ad, bd, cd): &CoeffTriple) -> RatInterval {
    b.mul(bd)
        .scale(&rat(2, 1))
        .sub(&ad.mul(c).add(&a.mul(cd)).scale(&rat(4, 1)))
}

/// disc″ = 2(B′² + BB″) − 4(A″C + 2A′C′ + AC″).
fn disc_second(
    (a, b, c): &CoeffTriple,
    (ad, bd, cd): &CoeffTriple,
    (add, bdd, cdd): &CoeffTriple,
) -> RatInterval {
    let first = bd.square().add(&b.mul(bdd)).scale(&rat(2, 1));
    let second = add
        .mul(c)
        .add(&ad.mul(cd).scale(&rat(2, 1)))
        .add(&a.mul(cdd))
        .scale(&rat(4, 1));
    first.sub(&second)
}

/// Second-order Taylor enclosure of a kernel's ρ-discriminant B² − 4AC
/// on a w cell: the plain interval evaluation intersected with
///   disc(m) + disc′(m)·(w − m) + ½·disc″(cell)·(w − m)²
/// at the cell midpoint m. The centered form is what keeps the enclosure
/// usable near w = √2/2, where the half-rate discriminant vanishes to
/// fourth order and plain evaluation would need quartically small cells.
fn disc_taylor<F, G, H>(w: &RatInterval, coeffs: F, derivs: G, seconds: H) -> RatInterval
where
    F: Fn(&RatInterval) -> CoeffTriple,
    G: Fn(&RatInterval) -> CoeffTriple,
    H: Fn(&RatInterval) -> CoeffTriple,
{
    let on_cell = coeffs(w);
    let naive = disc_of(&on_cell);
    if w.width() == Rational::zero() {
        return naive;
    }

    let mid = RatInterval::point(w.midpoint());
    let at_mid_coeffs = coeffs(&mid);
    let at_mid = disc_of(&at_mid_coeffs);
    let slope_mid = disc_prime(&at_mid_coeffs, &derivs(&mid));
    let curvature = disc_second(&on_cell, &derivs(w), &seconds(w));

    let offset = w.sub(&mid);
    let taylor = at_mid
        .add(&slope_mid.mul(&offset))
        .add(&curvature.mul(&offset.square()).scale(&rat(1, 2)));
    naive.intersect(&taylor)
}

/// Taylor-form enclosure of the half-rate kernel's ρ-discriminant.
pub fn half_kernel_disc_enclosure(w: &RatInterval, bits: u32) -> RatInterval {
    disc_taylor(
        w,
        |cell| half_kernel_rho_coeffs(cell, bits),
        |cell| half_kernel_rho_coeffs_deriv(cell, bits),
        |cell| half_kernel_rho_coeffs_second(cell, bits),
    )
}

/// Taylor-form enclosure of the eta-rate kernel's ρ-discriminant.
pub fn eta_kernel_disc_enclosure(w: &RatInterval, eta: &RatInterval, bits: u32) -> RatInterval {
    disc_taylor(
        w,
        |cell| eta_kernel_rho_coeffs(cell, eta, bits),
        |cell| eta_kernel_rho_coeffs_deriv(cell, eta, bits),
        |cell| eta_kernel_rho_coeffs_second(cell, eta, bits),
    )
}

/// The half-rate kernel's quadratic coefficients (lead, mid, tail) at a
/// w where c = √(1 − w²) stays inside ℚ(√2); the two such points the
/// certificates use are w = 0 (c = 1) and w = √2/2 (c = √2/2).
pub fn half_kernel_coeffs_exact(w: &FieldElement, c: &FieldElement) -> (FieldElement, FieldElement, FieldElement) {
    let one = FieldElement::from_int(1);
    let two = FieldElement::from_int(2);
    let four = FieldElement::from_int(4);
    let s2 = FieldElement::sqrt2();
    let w_sq = w.clone() * w.clone();
    let lead = two.clone() * w_sq.clone() - one;
    let mid = four * w_sq - s2.clone() * (w.clone() + c.clone());
    let tail = two.clone() - two * s2 * c.clone();
    (lead, mid, tail)
}

/// The quintic 8z⁵ + 4z⁴ − 39z³ − 7z² + 51z − 9 whose unique root in
/// (0, 1) locates the lowest entry height of the slow sector.
pub fn quintic() -> Polynomial<Rational> {
    Polynomial::from_descending_ints(&[8, 4, -39, -7, 51, -9])
}

/// The sextic 8z⁶ − 4z⁵ − 43z⁴ + 32z³ + 58z² − 60z + 9, which factors as
/// (z − 1) times the quintic.
pub fn sextic() -> Polynomial<Rational> {
    Polynomial::from_descending_ints(&[8, -4, -43, 32, 58, -60, 9])
}

fn fe(p: i64, q: i64) -> FieldElement {
    FieldElement::from_ints(p, q, 1)
}

/// The quartic w⁴ − 4√2w³ + 6w² + 4√2w − 8 over ℚ(√2) and its factors
/// (w − √2)² and (w² − 2√2w − 4).
pub fn lemma_quartic() -> Polynomial<FieldElement> {
    Polynomial::from_descending(vec![fe(1, 0), fe(0, -4), fe(6, 0), fe(0, 4), fe(-8, 0)])
}

pub fn lemma_quartic_factors() -> Vec<Polynomial<FieldElement>> {
    let linear = Polynomial::from_descending(vec![fe(1, 0), fe(0, -1)]); // w − √2
    let quadratic = Polynomial::from_descending(vec![fe(1, 0), fe(0, -2), fe(-4, 0)]);
    vec![linear.clone(), linear, quadratic]
}

/// The octic 64w⁸ − 64√2w⁷ − 64w⁶ + 80√2w⁵ + 52w⁴ − 72√2w³ + 12w² +
/// 16√2w − 7 over ℚ(√2): every zero of the half-rate kernel's
/// discriminant is a root of it (squaring only adds candidates), so an
/// empty Sturm count on [0, √2/2) certifies the discriminant keeps one
/// sign there.
pub fn discriminant_octic() -> Polynomial<FieldElement> {
    Polynomial::from_descending(vec![
        fe(64, 0),
        fe(0, -64),
        fe(-64, 0),
        fe(0, 80),
        fe(52, 0),
        fe(0, -72),
        fe(12, 0),
        fe(0, 16),
        fe(-7, 0),
    ])
}

/// Coefficients of the degree-8 polynomial in u = √2·w tied to the
/// eta-rate kernel's discriminant, each as an exact polynomial in η
/// (the list runs from u⁰ up to u⁸; each entry is written below with
/// its highest η power first).
pub fn eta_octic_coeff_polys() -> Vec<Polynomial<Rational>> {
    let p = |cs: &[i64]| Polynomial::from_descending_ints(cs);
    vec![
        p(&[4, -24, 4]),        // 4η² − 24η + 4
        p(&[32, 0]),            // 32η
        p(&[-4, 20, -8, -8]),   // −4η³ + 20η² − 8η − 8
        p(&[-40, 8, 0]),        // −40η² + 8η
        p(&[1, 0, 8, 0, 4]),    // η⁴ + 8η² + 4
        p(&[12, 0, -8, 0]),     // 12η³ − 8η
        p(&[-2, -4, 8, 0, 0]),  // −2η⁴ − 4η³ + 8η²
        p(&[-4, 0, 0, 0]),      // −4η³
        p(&[1, 0, 0, 0, 0]),    // η⁴
    ]
}

/// The same coefficients as enclosures, given an enclosure of η.
pub fn eta_octic_interval_coeffs(eta: &RatInterval) -> Vec<RatInterval> {
    eta_octic_coeff_polys()
        .iter()
        .map(|p| crate::exact::interval::eval_poly(p, eta))
        .collect()
}

/// The minimal polynomial of η over ℚ(√2): η² − (5 − 2√2)η + 1. Both
/// η and 1/η are its roots, which encodes γ·η = 1 exactly.
pub fn eta_min_poly() -> Polynomial<FieldElement> {
    Polynomial::from_descending(vec![fe(1, 0), fe(-5, 2), fe(1, 0)])
}

/// Evaluates a polynomial whose coefficients are polynomials in η at
/// u ∈ ℚ(√2), collecting the result as a polynomial in η over ℚ(√2).
pub fn eval_eta_poly_at_field_point(
    coeffs: &[Polynomial<Rational>],
    u: &FieldElement,
) -> Polynomial<FieldElement> {
    let mut acc = Polynomial::<FieldElement>::zero();
    for c in coeffs.iter().rev() {
        let lifted = Polynomial::new(
            c.coeffs()
                .iter()
                .map(|q| FieldElement::from_rational(q.clone()))
                .collect(),
        );
        acc = &acc.mul_scalar(u) + &lifted;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::rational_to_f64;
    use crate::exact::interval::eta_enclosure;
    use num_traits::One;

    fn point(n: i64, d: i64) -> RatInterval {
        RatInterval::point(rat(n, d))
    }

    /// Double-precision transliteration of the half-rate kernel, used as
    /// an independent oracle for the interval evaluator.
    fn half_kernel_f64(rho: f64, w: f64) -> f64 {
        let c = (1.0 - w * w).sqrt();
        (2.0 * w * w - 1.0) * rho * rho
            - (4.0 * w * w - f64::sqrt(2.0) * (w + c)) * rho
            + 2.0
            - 2.0 * f64::sqrt(2.0) * c
    }

    fn eta_kernel_f64(rho: f64, w: f64) -> f64 {
        let eta = 1.0 / (2.5 - f64::sqrt(2.0) + 0.5 * (29.0 - 20.0 * f64::sqrt(2.0)).sqrt());
        let c = (1.0 - w * w).sqrt();
        (eta * w * w - 1.0) * rho * rho
            - (2.0 * eta * w * w - f64::sqrt(2.0) * (w + c)) * rho
            - (f64::sqrt(2.0) * c - 1.5) * eta
            - 1.0
    }

    #[test]
    fn half_kernel_encloses_double_evaluations() {
        for (rn, wn) in [(0i64, 0i64), (1, 0), (1, 7), (3, 5), (10, 3)] {
            let rho = point(rn, 10);
            let w = point(wn, 10);
            let enc = half_kernel_enclosure(&rho, &w, 80);
            let approx = half_kernel_f64(rn as f64 / 10.0, wn as f64 / 10.0);
            let (lo, hi) = enc.approx_f64();
            assert!(
                lo - 1e-12 <= approx && approx <= hi + 1e-12,
                "({rn}/10, {wn}/10): {approx} outside [{lo}, {hi}]"
            );
        }
    }

    #[test]
    fn half_kernel_value_at_the_origin_is_two_minus_two_sqrt_two() {
        let enc = half_kernel_enclosure(&point(0, 1), &point(0, 1), 80);
        // exactly 2 − 2√2 ≈ −0.828427
        let expected = 2.0 - 2.0 * std::f64::consts::SQRT_2;
        let (lo, hi) = enc.approx_f64();
        assert!(lo <= expected && expected <= hi);
        assert!(enc.is_strictly_negative());
    }

    #[test]
    fn half_kernel_vanishes_exactly_on_the_diagonal_face() {
        // w = c = √2/2: all three quadratic coefficients are 0 in ℚ(√2)
        let half_rt2 = FieldElement::new(rat(0, 1), rat(1, 2));
        let (lead, mid, tail) = half_kernel_coeffs_exact(&half_rt2, &half_rt2);
        assert!(lead.is_zero() && mid.is_zero() && tail.is_zero());

        // at w = 0 (c = 1) they reproduce −ρ² + √2ρ + 2 − 2√2
        let (lead, mid, tail) =
            half_kernel_coeffs_exact(&FieldElement::from_int(0), &FieldElement::one());
        assert_eq!(lead, FieldElement::from_int(-1));
        assert_eq!(mid, FieldElement::from_ints(0, -1, 1));
        assert_eq!(tail, FieldElement::from_ints(2, -2, 1));
    }

    #[test]
    fn eta_kernel_encloses_double_evaluations() {
        let eta = eta_enclosure(96);
        for (rn, wn) in [(1i64, 8i64), (5, 8), (10, 8), (10, 9), (3, 9)] {
            let rho = point(rn, 10);
            let w = point(wn, 10);
            let enc = eta_kernel_enclosure(&rho, &w, &eta, 96);
            let approx = eta_kernel_f64(rn as f64 / 10.0, wn as f64 / 10.0);
            let (lo, hi) = enc.approx_f64();
            assert!(
                lo - 1e-12 <= approx && approx <= hi + 1e-12,
                "({rn}/10, {wn}/10): {approx} outside [{lo}, {hi}]"
            );
        }
    }

    #[test]
    fn eta_octic_coefficients_agree_between_forms() {
        let eta = eta_enclosure(96);
        let coeffs = eta_octic_interval_coeffs(&eta);
        assert_eq!(coeffs.len(), 9);
        // spot-check the constant coefficient 4η² − 24η + 4 ≈ −10.15
        let eta_mid = rational_to_f64(&eta.midpoint());
        let expected = 4.0 * eta_mid * eta_mid - 24.0 * eta_mid + 4.0;
        let (lo, hi) = coeffs[0].approx_f64();
        assert!(lo <= expected && expected <= hi);
        // leading coefficient η⁴ is positive
        assert!(coeffs[8].is_strictly_positive());
    }

    #[test]
    fn eta_min_poly_annihilates_eta() {
        // interval check: |η² − (5−2√2)η + 1| encloses 0 tightly
        let eta = eta_enclosure(120);
        let s2 = crate::exact::interval::sqrt2_enclosure(120);
        let lin = RatInterval::point(rat(5, 1)).sub(&s2.scale(&rat(2, 1)));
        let val = eta
            .square()
            .sub(&lin.mul(&eta))
            .add(&RatInterval::point(rat(1, 1)));
        assert!(val.contains(&Rational::zero()));
        assert!(val.width() < rat(1, 1 << 62));
    }

    #[test]
    fn quintic_and_sextic_match_their_printed_degrees() {
        assert_eq!(quintic().degree(), Some(5));
        assert_eq!(sextic().degree(), Some(6));
        assert_eq!(lemma_quartic().degree(), Some(4));
        assert_eq!(discriminant_octic().degree(), Some(8));
    }

    /// Double-precision ρ-discriminant of the half-rate kernel.
    fn half_disc_f64(w: f64) -> f64 {
        let c = (1.0 - w * w).sqrt();
        let a = 2.0 * w * w - 1.0;
        let b = f64::sqrt(2.0) * (w + c) - 4.0 * w * w;
        let cc = 2.0 - 2.0 * f64::sqrt(2.0) * c;
        b * b - 4.0 * a * cc
    }

    #[test]
    fn half_disc_enclosure_contains_double_evaluations_on_cells() {
        for (lo, hi) in [(0i64, 5i64), (30, 35), (60, 65), (65, 70)] {
            let cell = RatInterval::new(rat(lo, 100), rat(hi, 100));
            let enc = half_kernel_disc_enclosure(&cell, 96);
            for k in 0..=10 {
                let w = (lo as f64 + (hi - lo) as f64 * k as f64 / 10.0) / 100.0;
                let d = half_disc_f64(w);
                let (elo, ehi) = enc.approx_f64();
                assert!(
                    elo - 1e-10 <= d && d <= ehi + 1e-10,
                    "disc({w}) = {d} outside [{elo}, {ehi}]"
                );
            }
        }
    }

    #[test]
    fn half_disc_at_zero_is_ten_minus_eight_sqrt_two() {
        let enc = half_kernel_disc_enclosure(&point(0, 1), 96);
        let expected = 10.0 - 8.0 * std::f64::consts::SQRT_2;
        let (lo, hi) = enc.approx_f64();
        assert!(lo <= expected && expected <= hi);
        assert!(enc.is_strictly_negative());
    }

    #[test]
    fn eta_disc_enclosure_contains_double_evaluations_on_cells() {
        let eta_f64 = 1.0
            / (2.5 - std::f64::consts::SQRT_2
                + 0.5 * (29.0 - 20.0 * std::f64::consts::SQRT_2).sqrt());
        let eta = eta_enclosure(96);
        for (lo, hi) in [(72i64, 75i64), (80, 85), (95, 99)] {
            let cell = RatInterval::new(rat(lo, 100), rat(hi, 100));
            let enc = eta_kernel_disc_enclosure(&cell, &eta, 96);
            for k in 0..=10 {
                let w = (lo as f64 + (hi - lo) as f64 * k as f64 / 10.0) / 100.0;
                let c = (1.0 - w * w).sqrt();
                let a = eta_f64 * w * w - 1.0;
                let b = f64::sqrt(2.0) * (w + c) - 2.0 * eta_f64 * w * w;
                let cc = (1.5 - f64::sqrt(2.0) * c) * eta_f64 - 1.0;
                let d = b * b - 4.0 * a * cc;
                let (elo, ehi) = enc.approx_f64();
                assert!(
                    elo - 1e-10 <= d && d <= ehi + 1e-10,
                    "disc({w}) = {d} outside [{elo}, {ehi}]"
                );
            }
        }
    }

    #[test]
    fn centered_form_beats_plain_evaluation_near_the_diagonal() {
        // on a small cell close to w = √2/2 the mean-value enclosure must
        // be dramatically tighter than plain evaluation would allow; the
        // certified sign there is what makes the box claims tractable
        let cell = RatInterval::new(rat(70_000, 100_000), rat(70_001, 100_000));
        let enc = half_kernel_disc_enclosure(&cell, 96);
        assert!(enc.is_strictly_negative());
        let (_, hi) = enc.approx_f64();
        assert!(hi < -1e-9, "upper bound {hi} is not separated from zero");
    }
}
