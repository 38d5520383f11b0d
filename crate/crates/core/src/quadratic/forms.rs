//! Positive definite binary quadratic forms `ax² + bxy + cy²` and their class group.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::is_prime;
use crate::quadratic::int::ser_big;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuadForm {
    #[serde(serialize_with = "ser_big")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub c: BigInt,
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl QuadForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        QuadForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn disc(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// Form with first coefficient 1 and the given discriminant.
    pub fn principal(delta: &BigInt) -> Self {
        let e = if delta.is_odd() { 1 } else { 0 };
        let b = BigInt::from(e);
        let c = (&b * &b - delta) / 4;
        QuadForm::new(1, b, c)
    }

    pub fn inverse(&self) -> Self {
        QuadForm::new(self.a.clone(), -&self.b, self.c.clone())
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c).is_one()
    }

    pub fn is_reduced(&self) -> bool {
        let ab = self.b.abs();
        ab <= self.a
            && self.a <= self.c
            && (!(ab == self.a || self.a == self.c) || !self.b.is_negative())
    }

    fn check_definite(&self) -> Result<()> {
        if !self.disc().is_negative() {
            return Err(Error::IndefiniteUnsupported);
        }
        if !self.a.is_positive() {
            return Err(Error::BadInput(format!("{self} is negative definite")));
        }
        Ok(())
    }

    /// Reduced representative: `|b| ≤ a ≤ c`, and `b ≥ 0` if `|b| = a` or `a = c`.
    pub fn reduce(&self) -> Result<Self> {
        self.check_definite()?;
        let d = self.disc();
        let (mut a, mut b, mut c) = (self.a.clone(), self.b.clone(), self.c.clone());
        loop {
            // bring b into (-a, a]
            if b > a || b <= -&a {
                let two_a = BigInt::from(2) * &a;
                let k = (&a - &b).div_floor(&two_a);
                b += &two_a * k;
                c = (&b * &b - &d) / (BigInt::from(4) * &a);
            }
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b.is_negative() {
                b = -b;
            }
            return Ok(QuadForm { a, b, c });
        }
    }

    /// Gaussian composition (Cohen, Algorithm 5.4.7), then reduction.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_definite()?;
        other.check_definite()?;
        let d = self.disc();
        if d != other.disc() {
            return Err(Error::BadInput(format!(
                "discriminants differ: {} vs {}",
                d,
                other.disc()
            )));
        }
        let (f1, f2) = if self.a > other.a {
            (other, self)
        } else {
            (self, other)
        };
        let (a1, b1) = (&f1.a, &f1.b);
        let (a2, b2, c2) = (&f2.a, &f2.b, &f2.c);
        let s: BigInt = (b1 + b2) / 2;
        let n = b2 - &s;
        let (y1, dd) = if (a2 % a1).is_zero() {
            (BigInt::zero(), a1.clone())
        } else {
            let e = a2.extended_gcd(a1);
            (e.x, e.gcd)
        };
        let (x2, y2, d1) = if (&s % &dd).is_zero() {
            (BigInt::zero(), BigInt::from(-1), dd.clone())
        } else {
            let e = s.extended_gcd(&dd);
            (e.x, -e.y, e.gcd)
        };
        let v1 = a1 / &d1;
        let v2 = a2 / &d1;
        let r = (&y1 * &y2 * &n - &x2 * c2).mod_floor(&v1);
        let b3 = b2 + BigInt::from(2) * &v2 * &r;
        let a3 = &v1 * &v2;
        let c3 = (&b3 * &b3 - &d) / (BigInt::from(4) * &a3);
        QuadForm::new(a3, b3, c3).reduce()
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let mut base = self.reduce()?;
        let mut acc = QuadForm::principal(&self.disc());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            base = base.compose(&base)?;
            e >>= 1;
        }
        acc.reduce()
    }
}

/// Order of the class of `f` by repeated composition, at most `limit`.
pub fn form_order(f: &QuadForm, limit: u64) -> Result<u64> {
    let f = f.reduce()?;
    let id = QuadForm::principal(&f.disc());
    let mut g = f.clone();
    for k in 1..=limit {
        if g == id {
            return Ok(k);
        }
        g = g.compose(&f)?;
    }
    Err(Error::OrderLimit(limit))
}

/// All primitive reduced forms of discriminant `δ < 0`.
pub fn reduced_forms(delta: &BigInt) -> Result<Vec<QuadForm>> {
    if !delta.is_negative() {
        return Err(Error::IndefiniteUnsupported);
    }
    let d = delta.abs();
    let bound: BigInt = (&d / BigInt::from(3)).sqrt();
    let mut out = Vec::new();
    let mut a = BigInt::one();
    while a <= bound {
        let mut b: BigInt = -&a + 1;
        while b <= a {
            let num: BigInt = &b * &b - delta;
            let four_a = BigInt::from(4) * &a;
            if (&num % &four_a).is_zero() {
                let c = num / &four_a;
                let f = QuadForm::new(a.clone(), b.clone(), c);
                if f.is_reduced() && f.is_primitive() {
                    out.push(f);
                }
            }
            b += 1;
        }
        a += 1;
    }
    Ok(out)
}

/// Class number of primitive forms of discriminant `δ < 0`.
pub fn class_number(delta: &BigInt) -> Result<usize> {
    Ok(reduced_forms(delta)?.len())
}

/// Forms of prime first coefficient `q ≤ √(|δ|/3)`; they generate the class group.
pub fn prime_forms(delta: &BigInt) -> Result<Vec<QuadForm>> {
    if !delta.is_negative() {
        return Err(Error::IndefiniteUnsupported);
    }
    let bound: BigInt = (delta.abs() / BigInt::from(3)).sqrt();
    let bound = bound.to_u64().unwrap_or(u64::MAX);
    let mut out = Vec::new();
    for q in 2..=bound {
        if !is_prime(q) {
            continue;
        }
        let four_q = BigInt::from(4 * q);
        for b in 0..=q as i64 {
            let bb = BigInt::from(b);
            let num: BigInt = &bb * &bb - delta;
            if (&num % &four_q).is_zero() {
                let f = QuadForm::new(q, bb, num / &four_q);
                if f.is_primitive() {
                    out.push(f.reduce()?);
                }
                break;
            }
        }
    }
    Ok(out)
}

/// Size of the subgroup generated by `gens` (breadth-first closure).
pub fn subgroup_size(delta: &BigInt, gens: &[QuadForm]) -> Result<usize> {
    let id = QuadForm::principal(delta);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(f) = queue.pop_front() {
        for g in gens {
            let h = f.compose(g)?;
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    Ok(seen.len())
}

/// Whether the class of `g` lies in the cyclic subgroup generated by `f`.
pub fn in_cyclic_subgroup(f: &QuadForm, g: &QuadForm, limit: u64) -> Result<bool> {
    let order = form_order(f, limit)?;
    let target = g.reduce()?;
    let mut h = QuadForm::principal(&f.disc());
    for _ in 0..order {
        if h == target {
            return Ok(true);
        }
        h = h.compose(f)?;
    }
    Ok(false)
}
