use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `z = (α + β√δ)/2` with `α ≡ βδ mod 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuadInt {
    #[serde(serialize_with = "ser_big")]
    pub delta: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub alpha: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub beta: BigInt,
}

impl QuadInt {
    pub fn new(delta: impl Into<BigInt>, alpha: impl Into<BigInt>, beta: impl Into<BigInt>) -> Result<Self> {
        let (delta, alpha, beta) = (delta.into(), alpha.into(), beta.into());
        if delta.mod_floor(&BigInt::from(4)) > BigInt::one() {
            return Err(Error::BadInput(format!("{delta} is not 0 or 1 mod 4")));
        }
        if (&alpha - &beta * &delta).is_odd() {
            return Err(Error::BadInput(format!(
                "({alpha} + {beta}√{delta})/2 is not integral"
            )));
        }
        Ok(QuadInt { delta, alpha, beta })
    }

    /// The rational integer `m`.
    pub fn rational(delta: impl Into<BigInt>, m: impl Into<BigInt>) -> Self {
        QuadInt {
            delta: delta.into(),
            alpha: m.into() * 2,
            beta: BigInt::zero(),
        }
    }

    /// `N(z) = (α² - δβ²)/4`.
    pub fn norm(&self) -> BigInt {
        (&self.alpha * &self.alpha - &self.delta * &self.beta * &self.beta) / 4
    }

    /// `tr(z) = α`; for a quadratic field this is also `N_1(z)`.
    pub fn trace(&self) -> BigInt {
        self.alpha.clone()
    }

    pub fn conj(&self) -> Self {
        QuadInt {
            delta: self.delta.clone(),
            alpha: self.alpha.clone(),
            beta: -&self.beta,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.delta, other.delta);
        QuadInt {
            delta: self.delta.clone(),
            alpha: &self.alpha + &other.alpha,
            beta: &self.beta + &other.beta,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.delta, other.delta);
        let alpha = (&self.alpha * &other.alpha + &self.delta * &self.beta * &other.beta) / 2;
        let beta = (&self.alpha * &other.beta + &other.alpha * &self.beta) / 2;
        QuadInt {
            delta: self.delta.clone(),
            alpha,
            beta,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QuadInt::rational(self.delta.clone(), 1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `z + h` for a rational integer `h`.
    pub fn add_rational(&self, h: &BigInt) -> Self {
        QuadInt {
            delta: self.delta.clone(),
            alpha: &self.alpha + h * 2,
            beta: self.beta.clone(),
        }
    }
}

/// `(b, true)` when `|m| = b^n` exactly.
pub fn exact_nth_root(m: &BigInt, n: u32) -> Option<BigInt> {
    let a = m.abs();
    let r = a.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == a).then_some(r)
}

/// `N(u) = ± b^n` and `gcd(N(u), N_1(u)) = 1`: then `[u]` lies in `K_1(A; Z/n)`.
pub fn nn1_check(u: &QuadInt, n: u32) -> bool {
    let norm = u.norm();
    if norm.is_zero() || n < 2 {
        return false;
    }
    exact_nth_root(&norm, n).is_some() && norm.gcd(&u.trace()).is_one()
}
