//! Douglas-Rachford iteration for the sphere/line feasibility problem.
//!
//! The library has four layers:
//!
//! * [`dr`] — projections, reflections, and the Douglas-Rachford operator
//!   for the unit sphere and the offset line, in general dimension and in
//!   the 2-D closed form.
//! * [`regions`] — the partition P0..P6 of the right half-plane, per-region
//!   contraction factors, and step-level transition contracts.
//! * [`certify`] — exact polynomial arithmetic over Q and Q(sqrt 2), Sturm
//!   root counting, and rational interval branch-and-bound certificates for
//!   the sign claims the convergence argument rests on.
//! * [`basin`] — trajectory runner with outcome classification, convergence
//!   grid verification, and basin-of-attraction sampling, with CSV/JSON/SVG
//!   export in [`export`].
//!
//! Sampled contract checks used by the CLI `verify` subcommand live in
//! [`verify`]. Grid and sample sweeps run on rayon when the `parallel`
//! feature (default) is enabled; disabling it yields a sequential build
//! with identical results.

pub mod certify;
pub mod dr;
pub mod exact;
pub mod regions;

mod parallel;
