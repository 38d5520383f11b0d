use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::factorize;

/// `|m|` has no square factor; `m` must fit in 63 bits.
pub fn is_squarefree(m: &BigInt) -> Result<bool> {
    let a = m
        .abs()
        .to_u64()
        .filter(|&v| v < 1 << 63)
        .ok_or_else(|| Error::BadInput(format!("{m} is too large to factor")))?;
    if a == 0 {
        return Ok(false);
    }
    Ok(factorize(a).iter().all(|&(_, e)| e == 1))
}

/// `δ ≡ 1 mod 4` squarefree, or `δ = 4m` with `m ≡ 2, 3 mod 4` squarefree; `δ ≠ 1`.
pub fn is_fundamental(delta: &BigInt) -> Result<bool> {
    if delta.is_zero() || *delta == BigInt::from(1) {
        return Ok(false);
    }
    let r = delta.mod_floor(&BigInt::from(4));
    if r == BigInt::from(1) {
        return is_squarefree(delta);
    }
    if r.is_zero() {
        let m: BigInt = delta / 4;
        let rm = m.mod_floor(&BigInt::from(4));
        if rm == BigInt::from(2) || rm == BigInt::from(3) {
            return is_squarefree(&m);
        }
    }
    Ok(false)
}

/// A fundamental discriminant other than `-3` and `-4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuadDisc(#[serde(serialize_with = "crate::quadratic::int::ser_big")] BigInt);

impl QuadDisc {
    pub fn new(delta: impl Into<BigInt>) -> Result<Self> {
        let delta = delta.into();
        if delta == BigInt::from(-3) || delta == BigInt::from(-4) {
            return Err(Error::BadInput(format!(
                "discriminant {delta} has extra roots of unity"
            )));
        }
        if !is_fundamental(&delta)? {
            return Err(Error::NotFundamental(delta.to_string()));
        }
        Ok(QuadDisc(delta))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_real(&self) -> bool {
        self.0.is_positive()
    }

    /// `1` when `δ` is odd, `0` when `4 | δ`: `ω = (ε + √δ)/2`.
    pub fn parity(&self) -> i64 {
        if self.0.is_odd() {
            1
        } else {
            0
        }
    }
}

impl fmt::Display for QuadDisc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
