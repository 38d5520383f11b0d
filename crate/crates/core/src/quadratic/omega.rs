//! `Ω¹(A)` for the ring of integers `A = Z[ω]` and the Dennis trace into `Ω¹(A)/(n)`.
//!
//! `A = Z[X]/(f)` gives `Ω¹(A) = A dω / f'(ω)`, and `f'(ω) = √δ`, so `Ω¹(A) ≅ A/(√δ)`:
//! * `δ` odd: `Z/|δ| · dω`, with `ω ≡ 1/2` so that `ω dω = ½ dω`;
//! * `4 | δ`: `Z/(|δ|/2) · dω ⊕ Z/2 · ω dω`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadratic::int::{ser_big, QuadInt};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaComponent {
    #[serde(serialize_with = "ser_big")]
    pub modulus: BigInt,
    pub generator: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaModule {
    #[serde(serialize_with = "ser_big")]
    pub delta: BigInt,
    /// `None` for `Ω¹(A)` itself, `Some(n)` for `Ω¹(A)/(n)`.
    pub n: Option<u64>,
    /// Cyclic summands; trivial ones are dropped.
    pub components: Vec<OmegaComponent>,
    /// How `ω dω` is rewritten in terms of `dω`, when it is not a free generator.
    pub relation: Option<&'static str>,
}

impl OmegaModule {
    pub fn order(&self) -> BigInt {
        self.components
            .iter()
            .fold(BigInt::one(), |acc, c| acc * &c.modulus)
    }
}

/// Structure of `Ω¹(A)`, or of `Ω¹(A)/(n)` when `n` is given.
pub fn omega_module(delta: &BigInt, n: Option<u64>) -> OmegaModule {
    let d = delta.abs();
    let odd = delta.is_odd();
    let reduce = |m: BigInt| match n {
        Some(n) => m.gcd(&BigInt::from(n)),
        None => m,
    };
    let mut components = Vec::new();
    let relation;
    if odd {
        components.push(OmegaComponent {
            modulus: reduce(d),
            generator: "dω",
        });
        relation = Some("ω dω = ½ dω");
    } else {
        components.push(OmegaComponent {
            modulus: reduce(&d / 2),
            generator: "dω",
        });
        let second = reduce(BigInt::from(2));
        if second.is_one() {
            relation = Some("ω dω = 0");
        } else {
            components.push(OmegaComponent {
                modulus: second,
                generator: "ω dω",
            });
            relation = None;
        }
    }
    components.retain(|c| !c.modulus.is_one());
    OmegaModule {
        delta: delta.clone(),
        n,
        components,
        relation,
    }
}

fn inv_mod(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(n);
    e.gcd.is_one().then(|| e.x.mod_floor(n))
}

fn check_trace_input(z: &QuadInt, n: u64) -> Result<BigInt> {
    let nb = BigInt::from(n);
    if n < 3 || n % 2 == 0 || !(&z.delta % &nb).is_zero() {
        return Err(Error::BadInput(format!(
            "n = {n} must be odd, at least 3 and divide δ = {}",
            z.delta
        )));
    }
    if !z.norm().gcd(&nb).is_one() {
        return Err(Error::NonCoprimeNorm(n.to_string()));
    }
    Ok(nb)
}

/// Coefficient of `dω` in `z⁻¹dz mod n` for odd `n | δ`: `2β/α mod n`.
///
/// `N(z) ≡ α²/4 mod n`, so a norm prime to `n` makes `α` invertible.
pub fn dennis_trace_quad(z: &QuadInt, n: u64) -> Result<u64> {
    let nb = check_trace_input(z, n)?;
    let inv = inv_mod(&z.alpha, &nb).ok_or_else(|| Error::NonCoprimeNorm(n.to_string()))?;
    let v = (BigInt::from(2) * &z.beta * inv).mod_floor(&nb);
    Ok(v.try_into().expect("residue fits"))
}

/// Same coefficient by the route `z = a + bω`, `dz = b dω`, `z ≡ a + b·ω₀` on `Ω¹(A)/(n)`,
/// where `ω₀ = 1/2` (δ odd) or `0` (`4 | δ`).
pub fn dennis_trace_quad_basis(z: &QuadInt, n: u64) -> Result<u64> {
    let nb = check_trace_input(z, n)?;
    let (a, b): (BigInt, BigInt) = if z.delta.is_odd() {
        ((&z.alpha - &z.beta) / 2, z.beta.clone())
    } else {
        (&z.alpha / 2, z.beta.clone())
    };
    let denom = if z.delta.is_odd() {
        let half = inv_mod(&BigInt::from(2), &nb).expect("n is odd");
        let v: BigInt = &a + &b * half;
        v.mod_floor(&nb)
    } else {
        a.mod_floor(&nb)
    };
    let inv = inv_mod(&denom, &nb).ok_or_else(|| Error::NonCoprimeNorm(n.to_string()))?;
    let v = (b * inv).mod_floor(&nb);
    Ok(v.try_into().expect("residue fits"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn moduli(m: &OmegaModule) -> Vec<i64> {
        m.components
            .iter()
            .map(|c| c.modulus.clone().try_into().unwrap())
            .collect()
    }

    #[test]
    fn structures() {
        let m = omega_module(&BigInt::from(-231), None);
        assert_eq!(moduli(&m), vec![231]);
        assert_eq!(m.relation, Some("ω dω = ½ dω"));
        assert_eq!(moduli(&omega_module(&BigInt::from(-104), None)), vec![52, 2]);
        assert_eq!(moduli(&omega_module(&BigInt::from(-231), Some(3))), vec![3]);
        let m = omega_module(&BigInt::from(-104), Some(4));
        assert_eq!(moduli(&m), vec![4, 2]);
        assert_eq!(m.order(), BigInt::from(8));
        assert_eq!(moduli(&omega_module(&BigInt::from(-5320), Some(5))), vec![5]);
        assert_eq!(omega_module(&BigInt::from(-127), Some(3)).components.len(), 0);
    }

    /// `Ω¹(A) ≅ A/(√δ)`: count residues by brute force for small δ.
    #[test]
    fn order_is_abs_delta() {
        for d in [-7i64, -8, -15, -20, -24, 5, 8, 12, 13, 21, 28] {
            let m = omega_module(&BigInt::from(d), None);
            assert_eq!(m.order(), BigInt::from(d.abs()));
        }
    }

    #[test]
    fn trace_examples() {
        let z = QuadInt::new(-104, 2, 1).unwrap();
        // 1 + √-26 = 1 + ω: coefficient 2·1/2 with β = 1 in the (α + β√δ)/2 scale
        assert_eq!(dennis_trace_quad(&z, 13).unwrap(), 1);
        let u = QuadInt::new(321, 17, 1).unwrap();
        assert_eq!(dennis_trace_quad(&u, 3).unwrap(), 1);
        assert_eq!(dennis_trace_quad(&QuadInt::rational(-231, 5), 3).unwrap(), 0);
        assert_eq!(
            dennis_trace_quad(&QuadInt::rational(-231, 3), 3),
            Err(Error::NonCoprimeNorm("3".into()))
        );
        assert!(dennis_trace_quad(&u, 5).is_err());
    }

    #[test]
    fn routes_agree_and_trace_is_logarithmic() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for (d, n) in [(-231i64, 3u64), (-231, 7), (-231, 21), (321, 3), (-255, 15), (-104, 13), (-511, 7)] {
            let mut done = 0;
            while done < 100 {
                let beta: i64 = rng.gen_range(-30..30);
                let mut alpha: i64 = rng.gen_range(-60..60);
                if (alpha - beta * d).rem_euclid(2) != 0 {
                    alpha += 1;
                }
                let z = QuadInt::new(d, alpha, beta).unwrap();
                let beta2: i64 = rng.gen_range(-30..30);
                let mut alpha2: i64 = rng.gen_range(-60..60);
                if (alpha2 - beta2 * d).rem_euclid(2) != 0 {
                    alpha2 += 1;
                }
                let w = QuadInt::new(d, alpha2, beta2).unwrap();
                let (Ok(tz), Ok(tw)) = (dennis_trace_quad(&z, n), dennis_trace_quad(&w, n)) else {
                    continue;
                };
                assert_eq!(dennis_trace_quad_basis(&z, n).unwrap(), tz);
                assert_eq!(dennis_trace_quad(&z.mul(&w), n).unwrap(), (tz + tw) % n);
                done += 1;
            }
        }
    }
}
