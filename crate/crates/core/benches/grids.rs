//! Placeholder bench harness; filled in once the grid runners exist.
fn main() {}
