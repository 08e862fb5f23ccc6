//! Scratch probe for branch-and-bound cost (not part of the test suite).

use std::time::Instant;

use drsl_core::certify::functions::{
    half_kernel_disc_enclosure, half_kernel_rho_coeffs, quadratic_in_rho,
};
use drsl_core::certify::{certify_sign_on_box, half_rate_box, SignTarget};
use drsl_core::exact::field::{rat, Rational};
use drsl_core::exact::interval::{alpha_enclosure, RatInterval};

fn main() {
    // a deep cell like the ones the refinement visits near the face
    let alpha = alpha_enclosure(80);
    let base = alpha.hi() - &rat(1, 1000);
    let h = Rational::new(1.into(), num_bigint::BigInt::from(1) << 20);
    let cell = RatInterval::new(&base - &h, base.clone());
    let rho = RatInterval::new(rat(0, 1), rat(1, 1));

    for bits in [96u32, 128] {
        let start = Instant::now();
        for _ in 0..200 {
            let (a, b, c) = half_kernel_rho_coeffs(&cell, bits);
            let _ = quadratic_in_rho(&a, &b, &c, &rho);
        }
        println!("coeffs+naive {bits} bits: {:?}/eval", start.elapsed() / 200);

        let start = Instant::now();
        for _ in 0..200 {
            let _ = half_kernel_disc_enclosure(&cell, bits);
        }
        println!("disc mv      {bits} bits: {:?}/eval", start.elapsed() / 200);
    }

    let start = Instant::now();
    let out = certify_sign_on_box(
        &half_rate_box(&rat(1, 1000)),
        SignTarget::StrictlyNegative,
        100_000,
    );
    let report = out.report();
    println!(
        "full run: proved={} boxes={} depth={} worst={:.3e} in {:.2?}",
        out.is_proved(),
        report.boxes_processed,
        report.max_depth,
        report.worst_bound,
        start.elapsed()
    );
}
