//! Fixed inputs shared by the benchmarks and their smoke tests.

use dennis_core::quadratic::forms::QuadForm;
use dennis_core::quadratic::search::witness_form;
use dennis_core::{BigInt, Fp, Prime};

/// Primes for the per-prime kernels, small to large.
pub const SCAN_PRIMES: [u64; 4] = [101, 331, 557, 997];

pub fn prime(p: u64) -> Prime {
    Prime::new(p).expect("fixture is prime")
}

/// A generic evaluation point: not 0, 1, -1 or 1/2.
pub fn point(p: Prime) -> Fp {
    p.elem(3)
}

/// `(discriminant, witness form, order)` for the class-group benchmarks.
pub fn torsion_forms() -> Vec<(BigInt, QuadForm, u64)> {
    [(2, 3, 3), (1, 2, 7), (49, 31, 3), (293, 37, 3)]
        .into_iter()
        .map(|(alpha, b, n)| {
            let f = witness_form(alpha, b, n);
            (f.disc(), f, n as u64)
        })
        .collect()
}
