//! Prime-field arithmetic and the small integer utilities every other module leans on.
//!
//! Residues are machine words; products go through `u64` (the modulus is below 2^31).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd prime below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= 1 << 31 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0 as u64
    }

    /// `(p - 1) / 2`, the size of the minus/plus halves everywhere in the cyclotomic code.
    #[inline]
    pub fn half(self) -> usize {
        (self.0 as usize - 1) / 2
    }

    pub fn elem(self, v: i64) -> Fp {
        Fp::new(v, self)
    }

    pub fn zero(self) -> Fp {
        Fp { value: 0, p: self }
    }

    pub fn one(self) -> Fp {
        Fp { value: 1, p: self }
    }

    /// All residues `0..p`.
    pub fn elements(self) -> impl Iterator<Item = Fp> {
        (0..self.0).map(move |v| Fp { value: v, p: self })
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.get()
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue modulo a [`Prime`], always canonical in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: Prime,
}

impl Fp {
    pub fn new(v: i64, p: Prime) -> Self {
        let m = p.get() as i64;
        Fp {
            value: v.rem_euclid(m) as u32,
            p,
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value as u64
    }

    #[inline]
    pub fn prime(self) -> Prime {
        self.p
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Representative in `(-p/2, p/2]`, handy for printing.
    pub fn signed(self) -> i64 {
        let v = self.value as i64;
        let p = self.p.get() as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }

    pub fn inv(self) -> Result<Fp> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        // extended Euclid on (value, p)
        let (mut r0, mut r1) = (self.p.get() as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Fp::new(t0, self.p))
    }

    /// `a^e` for a signed exponent; negative exponents need `a != 0`.
    pub fn pow(self, e: i64) -> Result<Fp> {
        if e < 0 {
            return self.inv().map(|a| a.pow_u(e.unsigned_abs()));
        }
        Ok(self.pow_u(e as u64))
    }

    pub fn pow_u(self, mut e: u64) -> Fp {
        let m = self.p.get();
        let mut base = self.value as u64;
        let mut acc = 1u64 % m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Fp {
            value: acc as u32,
            p: self.p,
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.p.get() - 1;
        let mut ord = n;
        for (q, _) in factorize(n) {
            while ord % q == 0 && self.pow_u(ord / q).value == 1 {
                ord /= q;
            }
        }
        Some(ord)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Serialize for Fp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        let m = self.p.0;
        let s = self.value + rhs.value;
        Fp {
            value: if s >= m { s - m } else { s },
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        let m = self.p.0;
        Fp {
            value: if self.value >= rhs.value {
                self.value - rhs.value
            } else {
                self.value + m - rhs.value
            },
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            value: ((self.value as u64 * rhs.value as u64) % self.p.get()) as u32,
            p: self.p,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        Fp {
            value: if self.value == 0 {
                0
            } else {
                self.p.0 - self.value
            },
            p: self.p,
        }
    }
}

/// Panics on division by zero; use [`Fp::inv`] when the divisor may vanish.
impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

pub fn inv(a: Fp) -> Result<Fp> {
    a.inv()
}

pub fn pow_mod(a: Fp, e: i64) -> Result<Fp> {
    a.pow(e)
}

/// Smallest positive generator of `(Z/p)^×`.
pub fn primitive_root(p: Prime) -> Fp {
    let n = p.get() - 1;
    let qs: Vec<u64> = factorize(n).into_iter().map(|(q, _)| q).collect();
    (2..p.get())
        .map(|s| p.elem(s as i64))
        .find(|g| qs.iter().all(|&q| g.pow_u(n / q).value() != 1))
        .expect("every prime has a primitive root")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Pollard rho, Brent variant; `n` is odd, composite, not a prime power of a tiny prime.
fn rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Prime-power factorization `[(q, e), ...]`, sorted by `q`. `factorize(1)` is empty.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    assert!(m >= 1, "factorize needs m >= 1");
    let mut primes = Vec::new();
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while m % q == 0 {
            primes.push(q);
            m /= q;
        }
    }
    split_into(m, &mut primes);
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// Odd primes in `[lo, hi)`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<Prime> {
    (lo.max(3)..hi)
        .filter(|&n| n % 2 == 1 && is_prime(n))
        .map(|n| Prime(n as u32))
        .collect()
}
