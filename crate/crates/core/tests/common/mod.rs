#![allow(dead_code)]

use std::sync::Arc;

use homlab::algdef::{Algebra, AlgebraSpec};

pub fn k2x() -> Arc<Algebra> {
    Algebra::truncated_polynomial(2, 2).unwrap()
}

pub fn k3x() -> Arc<Algebra> {
    Algebra::truncated_polynomial(3, 2).unwrap()
}

pub fn k2x3() -> Arc<Algebra> {
    Algebra::truncated_polynomial(2, 3).unwrap()
}

pub fn k2xy() -> Arc<Algebra> {
    Algebra::local_radical_square_zero(2, 2).unwrap()
}

/// Path algebra of 1 → 2 over F_2.
pub fn a2() -> Arc<Algebra> {
    Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[])).unwrap()
}

/// F_2 × F_2[x]/(x²) as a quiver with a loop at the second vertex.
pub fn product() -> Arc<Algebra> {
    Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("x", 2, 2)], &["x*x"])).unwrap()
}
