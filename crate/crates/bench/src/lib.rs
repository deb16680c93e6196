//! Fixed inputs shared by the benchmarks.

use braidsat_core::{BraidWord, SatelliteSpec};

/// `(σ1 σ2 ⋯ σ_{n-1} σ_1^{-1})^reps`, a mixed word whose normal form has many factors.
pub fn mixed_word(n: usize, reps: usize) -> BraidWord {
    let mut letters: Vec<i32> = (1..n as i32).collect();
    letters.push(-1);
    BraidWord::new(n, letters).unwrap().pow(reps as i64)
}

/// The rendered (2, q) cable of the trefoil.
pub fn trefoil_cable(q: usize) -> BraidWord {
    let spec = SatelliteSpec::new(BraidWord::new(2, vec![1; 3]).unwrap(), vec![BraidWord::new(2, vec![1; q]).unwrap()])
        .unwrap();
    braidsat_core::satellite::build_satellite(&spec).unwrap().0
}

/// `(σ1 ⋯ σ_{n-1})^q`, the torus knot or link `T(n, q)`.
pub fn torus(n: usize, q: usize) -> BraidWord {
    BraidWord::cycle_word(n).pow(q as i64)
}
