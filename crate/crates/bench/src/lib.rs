//! Shared inputs for the criterion benches.

use divcat_core::{build_reduced, enumerate_io, DivisionCategory, FiniteInverseMonoid};

/// `IO_n` with its reduced division category on the default transversal.
pub fn reduced_io(n: usize) -> (FiniteInverseMonoid, DivisionCategory) {
    let m = enumerate_io(n).expect("bench sizes are small");
    let c = build_reduced(&m, &m.choose_transversal()).expect("default transversal is valid");
    (m, c)
}
