//! Class-group torsion from representations `δ = α² - 4bⁿ`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::factorize;
use crate::quadratic::disc::{is_fundamental, QuadDisc};
use crate::quadratic::forms::{form_order, in_cyclic_subgroup, QuadForm};
use crate::quadratic::int::{nn1_check, ser_big, QuadInt};
use crate::quadratic::omega::dennis_trace_quad;
use crate::quadratic::unit::unit_condition;

/// Iteration cap for witness orders in searches.
pub const SEARCH_ORDER_LIMIT: u64 = 10_000;

fn disc_of(alpha: i64, b: i64, n: u32) -> BigInt {
    BigInt::from(alpha).pow(2) - BigInt::from(4) * BigInt::from(b).pow(n)
}

/// `(b, α, b^{n-1})`, of discriminant `α² - 4bⁿ`.
pub fn witness_form(alpha: i64, b: i64, n: u32) -> QuadForm {
    QuadForm::new(b, alpha, BigInt::from(b).pow(n - 1))
}

fn is_square(v: &BigInt) -> bool {
    if v.is_negative() {
        return false;
    }
    let r = v.sqrt();
    &r * &r == *v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionWitness {
    #[serde(serialize_with = "ser_big")]
    pub delta: BigInt,
    pub n: u32,
    pub alpha: i64,
    pub b: i64,
    /// `u = (α + √δ)/2` has `N(u) = bⁿ` and `gcd(N(u), tr u) = 1`.
    pub nn1_passed: bool,
    /// `(m, δ + 4b^m is not a square)` for proper divisors `m` of `n`.
    pub nonsquare: Vec<(u32, bool)>,
    /// `δ + 4bⁿ` is not a square; it equals `α²`, so this is always false.
    pub nonsquare_at_n: bool,
    /// `n | δ`.
    pub ramified: bool,
    /// `2/α mod n` when `n | δ` and `gcd(N(u), n) = 1`.
    pub trace_residue: Option<u64>,
    /// Real `δ` only: `n | ε₂`.
    pub unit_condition: Option<bool>,
    /// Imaginary `δ` only: order of the witness form, if below the search cap.
    pub form_order: Option<u64>,
    /// Imaginary: order is exactly `n`. Real: ramified, unit condition and nonzero trace.
    pub certified: bool,
}

fn proper_divisors(n: u32) -> Vec<u32> {
    (1..n).filter(|m| n % m == 0).collect()
}

fn witness(delta: BigInt, n: u32, alpha: i64, b: i64) -> Result<TorsionWitness> {
    let u = QuadInt::new(delta.clone(), alpha, 1)?;
    let nonsquare = proper_divisors(n)
        .into_iter()
        .map(|m| (m, !is_square(&(&delta + BigInt::from(4) * BigInt::from(b).pow(m)))))
        .collect();
    let nonsquare_at_n = !is_square(&(&delta + BigInt::from(4) * BigInt::from(b).pow(n)));
    let ramified = n % 2 == 1 && n >= 3 && (&delta % BigInt::from(n)).is_zero();
    let trace_residue = if ramified {
        dennis_trace_quad(&u, n as u64).ok()
    } else {
        None
    };
    let disc = QuadDisc::new(delta.clone())?;
    let (unit_cond, order) = if disc.is_real() {
        (Some(unit_condition(&disc, n as u64)?), None)
    } else {
        match form_order(&witness_form(alpha, b, n), SEARCH_ORDER_LIMIT) {
            Ok(o) => (None, Some(o)),
            Err(Error::OrderLimit(_)) => (None, None),
            Err(e) => return Err(e),
        }
    };
    let certified = match (unit_cond, order) {
        (_, Some(o)) => o == n as u64,
        (Some(uc), None) => ramified && uc && trace_residue.is_some_and(|t| t != 0),
        (None, None) => false,
    };
    Ok(TorsionWitness {
        nn1_passed: nn1_check(&u, n),
        delta,
        n,
        alpha,
        b,
        nonsquare,
        nonsquare_at_n,
        ramified,
        trace_residue,
        unit_condition: unit_cond,
        form_order: order,
        certified,
    })
}

fn admissible(alpha: i64, b: i64, n: u32) -> Result<Option<BigInt>> {
    if b == 0 || alpha.gcd(&b) != 1 {
        return Ok(None);
    }
    let delta = disc_of(alpha, b, n);
    if delta == BigInt::from(-3) || delta == BigInt::from(-4) || !is_fundamental(&delta)? {
        return Ok(None);
    }
    Ok(Some(delta))
}

/// Coprime `(α, b)` with `1 ≤ α ≤ α_max`, `0 < |b| ≤ b_max` and `α² - 4bⁿ` fundamental.
/// Sorted by `(δ, α, b)`; identical for every worker count.
pub fn torsion_search(
    n: u32,
    alpha_max: i64,
    b_max: i64,
    workers: usize,
) -> Result<Vec<TorsionWitness>> {
    if n < 2 {
        return Err(Error::BadInput("n must be at least 2".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let chunks: Vec<Result<Vec<TorsionWitness>>> = pool.install(|| {
        (1..=alpha_max)
            .into_par_iter()
            .map(|alpha| {
                let mut out = Vec::new();
                for b in -b_max..=b_max {
                    if let Some(delta) = admissible(alpha, b, n)? {
                        out.push(witness(delta, n, alpha, b)?);
                    }
                }
                Ok(out)
            })
            .collect()
    });
    let mut all = Vec::new();
    for c in chunks {
        all.extend(c?);
    }
    all.sort_by(|x, y| (&x.delta, x.alpha, x.b).cmp(&(&y.delta, y.alpha, y.b)));
    Ok(all)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertVerdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certification {
    #[serde(serialize_with = "ser_big")]
    pub delta: BigInt,
    pub n: u32,
    pub alpha: i64,
    pub b: i64,
    /// Reduced witness form.
    pub form: QuadForm,
    pub order: u64,
    pub n_divides_order: bool,
    /// `order == n`.
    pub verdict: CertVerdict,
}

/// Order of the witness form `(b, α, b^{n-1})` for `δ = α² - 4bⁿ < 0`.
pub fn certify_table_entry(delta: &BigInt, n: u32, alpha: i64, b: i64) -> Result<Certification> {
    if disc_of(alpha, b, n) != *delta {
        return Err(Error::BadInput(format!("{alpha}² - 4·{b}^{n} ≠ {delta}")));
    }
    if !delta.is_negative() {
        return Err(Error::IndefiniteUnsupported);
    }
    QuadDisc::new(delta.clone())?;
    certify_form(delta, n, alpha, b)
}

/// As [`certify_table_entry`] without the fundamentality requirement: orders are then
/// taken in the form class group of the order of discriminant `δ`.
pub fn certify_form(delta: &BigInt, n: u32, alpha: i64, b: i64) -> Result<Certification> {
    let f = witness_form(alpha, b, n);
    if f.disc() != *delta {
        return Err(Error::BadInput(format!("{alpha}² - 4·{b}^{n} ≠ {delta}")));
    }
    let order = form_order(&f, 1_000_000)?;
    Ok(Certification {
        delta: delta.clone(),
        n,
        alpha,
        b,
        form: f.reduce()?,
        order,
        n_divides_order: order % n as u64 == 0,
        verdict: if order == n as u64 {
            CertVerdict::Pass
        } else {
            CertVerdict::Fail
        },
    })
}

/// Whether `x` is a `p`-th power in `Z/m`, by exhaustive tables on each prime-power
/// factor of `|m|` (Chinese remainder theorem).
pub fn is_pth_power_mod(x: &BigInt, m: i64, p: u32) -> Result<bool> {
    let m = m.unsigned_abs();
    if m <= 1 {
        return Ok(true);
    }
    for (q, e) in factorize(m) {
        let qe = q.pow(e);
        if qe > 10_000_000 {
            return Err(Error::BadInput(format!("modulus factor {qe} too large for tables")));
        }
        let r = x.mod_floor(&BigInt::from(qe)).to_u64().expect("residue fits");
        let mut found = false;
        for y in 0..qe {
            let mut v = 1u128;
            for _ in 0..p {
                v = v * y as u128 % qe as u128;
            }
            if v as u64 == r {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YamamotoPrime {
    pub p: u32,
    /// `α` is not a `p`-th power mod `b`.
    pub a_first: bool,
    /// `α'` is not a `p`-th power mod `b'`.
    pub a_second: bool,
    /// `(α + α')/2` is a `p`-th power mod `b`.
    pub b_first: bool,
    /// `(α + α')/2` is a `p`-th power mod `b'`.
    pub b_second: bool,
}

impl YamamotoPrime {
    pub fn holds(&self) -> bool {
        self.a_first && self.a_second && self.b_first && self.b_second
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum YamamotoOutcome {
    /// Both representations coincide; the conditions say nothing.
    SamePair,
    Checked {
        #[serde(serialize_with = "ser_big")]
        delta: BigInt,
        per_prime: Vec<YamamotoPrime>,
        all_hold: bool,
    },
}

/// Conditions for two representations `α² - 4bⁿ = α'² - 4b'ⁿ = δ`, `n` odd.
pub fn yamamoto_check(alpha: i64, b: i64, alpha2: i64, b2: i64, n: u32) -> Result<YamamotoOutcome> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::BadInput(format!("n = {n} must be odd and at least 3")));
    }
    if alpha.gcd(&b) != 1 || alpha2.gcd(&b2) != 1 {
        return Err(Error::BadInput("each pair must be coprime".into()));
    }
    let delta = disc_of(alpha, b, n);
    let delta2 = disc_of(alpha2, b2, n);
    if delta != delta2 {
        return Err(Error::BadInput(format!("discriminants differ: {delta} vs {delta2}")));
    }
    if (alpha, b) == (alpha2, b2) {
        return Ok(YamamotoOutcome::SamePair);
    }
    let mean = BigInt::from(alpha + alpha2) / 2;
    let mut per_prime = Vec::new();
    for (p, _) in factorize(n as u64) {
        let p = p as u32;
        per_prime.push(YamamotoPrime {
            p,
            a_first: !is_pth_power_mod(&BigInt::from(alpha), b, p)?,
            a_second: !is_pth_power_mod(&BigInt::from(alpha2), b2, p)?,
            b_first: is_pth_power_mod(&mean, b, p)?,
            b_second: is_pth_power_mod(&mean, b2, p)?,
        });
    }
    let all_hold = per_prime.iter().all(YamamotoPrime::holds);
    Ok(YamamotoOutcome::Checked {
        delta,
        per_prime,
        all_hold,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleRep {
    #[serde(serialize_with = "ser_big")]
    pub delta: BigInt,
    pub first: (i64, i64),
    pub second: (i64, i64),
    pub outcome: YamamotoOutcome,
    /// Imaginary `δ`: the second witness class lies outside the cyclic group of the first.
    pub independent: Option<bool>,
}

/// Discriminants with two coprime representations in the box, each pair checked.
pub fn search_double_reps(n: u32, alpha_max: i64, b_max: i64) -> Result<Vec<DoubleRep>> {
    let mut groups: BTreeMap<BigInt, BTreeSet<(i64, i64)>> = BTreeMap::new();
    for alpha in 1..=alpha_max {
        for b in -b_max..=b_max {
            if let Some(delta) = admissible(alpha, b, n)? {
                groups.entry(delta).or_default().insert((alpha, b));
            }
        }
    }
    let mut out = Vec::new();
    for (delta, reps) in groups {
        let reps: Vec<_> = reps.into_iter().collect();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                let (a1, b1) = reps[i];
                let (a2, b2) = reps[j];
                let outcome = yamamoto_check(a1, b1, a2, b2, n)?;
                let independent = if delta.is_negative() {
                    let f = witness_form(a1, b1, n);
                    let g = witness_form(a2, b2, n);
                    match in_cyclic_subgroup(&f, &g, SEARCH_ORDER_LIMIT) {
                        Ok(inside) => Some(!inside),
                        Err(Error::OrderLimit(_)) => None,
                        Err(e) => return Err(e),
                    }
                } else {
                    None
                };
                out.push(DoubleRep {
                    delta: delta.clone(),
                    first: (a1, b1),
                    second: (a2, b2),
                    outcome,
                    independent,
                });
            }
        }
    }
    Ok(out)
}
