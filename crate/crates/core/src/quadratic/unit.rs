//! Fundamental units of real quadratic fields by the continued fraction of `ω`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quadratic::disc::QuadDisc;
use crate::quadratic::int::QuadInt;

/// Smallest unit `ε > 1` of `Z[ω]`, `ω = (P₀ + √δ)/2`, `P₀ = δ mod 2`.
///
/// Expands `ω = (P + √δ)/Q` and tests each convergent `h/k`: the first time
/// `N(h - kω) = ±1`, the conjugate `h - kω̄ = (2h - kP₀ + k√δ)/2` is `ε`.
pub fn fundamental_unit(delta: &QuadDisc) -> Result<QuadInt> {
    if !delta.is_real() {
        return Err(Error::BadInput("fundamental unit needs δ > 0".into()));
    }
    let d = delta.value().clone();
    let p0 = BigInt::from(delta.parity());
    let root = d.sqrt();
    let (mut p, mut q) = (p0.clone(), BigInt::from(2));
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    loop {
        let num: BigInt = if q.is_positive() { &p + &root } else { &p + &root + 1 };
        let a = num.div_floor(&q);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let eps = QuadInt::new(d.clone(), BigInt::from(2) * &h - &k * &p0, k.clone())?;
        if eps.norm().abs().is_one() {
            return Ok(eps);
        }
        p = &a * &q - &p;
        q = (&d - &p * &p) / &q;
    }
}

/// Imaginary `δ`: true. Real `δ`: `n | ε₂`.
pub fn unit_condition(delta: &QuadDisc, n: u64) -> Result<bool> {
    if !delta.is_real() {
        return Ok(true);
    }
    let eps = fundamental_unit(delta)?;
    Ok((eps.beta % BigInt::from(n)).is_zero())
}
