//! Mirimanoff polynomials `M_k(X) = Σ_{j=1}^{p-1} j^{k-1} X^j` over `F_p` and the
//! statistics built on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::Fp;

pub mod bernoulli;
pub mod circulant;
pub mod dimv;
pub mod scan;

pub use bernoulli::{bernoulli_mod_p, irregular_index, kummer_congruence_solutions, BernoulliTable};
pub use circulant::{circulant, Circulant, Spectrum};
pub use dimv::{dim_v, DimV};
pub use scan::{r_p, scan_rp, RpScanRecord, ThresholdVerdict};

/// `M_k(t)` by direct summation; `1 ≤ k ≤ p`.
pub fn mirimanoff_eval(k: u64, t: Fp) -> Result<Fp> {
    let p = t.prime();
    if k == 0 || k > p.get() {
        return Err(Error::IndexRange {
            index: k as usize,
            min: 1,
            max: p.get() as usize,
        });
    }
    let mut acc = p.zero();
    let mut tj = p.one();
    for j in 1..p.get() {
        tj *= t;
        acc += p.elem(j as i64).pow_u(k - 1) * tj;
    }
    Ok(acc)
}

/// `t ∉ {0, 1, -1}`.
pub fn check_t(t: Fp) -> Result<()> {
    let p = t.prime();
    if t.is_zero() || t == p.one() || t == -p.one() {
        return Err(Error::ExcludedT(t.value()));
    }
    Ok(())
}

/// Odd-index values `M_3(t), M_5(t), …, M_p(t)` at one point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirimanoffRecord {
    pub p: u64,
    pub t: u64,
    /// `M_{2k+1}(t)` for `k = 1..=(p-1)/2`.
    pub values: Vec<Fp>,
    /// Number of nonzero entries of `values`.
    pub r_p_of_t: usize,
}

impl MirimanoffRecord {
    pub fn new(t: Fp) -> Self {
        let p = t.prime();
        let values = scan::odd_values(t);
        let r = values.iter().filter(|v| !v.is_zero()).count();
        MirimanoffRecord {
            p: p.get(),
            t: t.value(),
            values,
            r_p_of_t: r,
        }
    }

    pub fn zero_count(&self) -> usize {
        self.values.len() - self.r_p_of_t
    }
}

/// `r_p(t) = #{k ≤ (p-1)/2 : M_{2k+1}(t) ≠ 0}`.
pub fn r_p_of_t(t: Fp) -> Result<usize> {
    check_t(t)?;
    Ok(MirimanoffRecord::new(t).r_p_of_t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modp::{primes_in, Prime};

    /// `M_k(t) = t(c_1 + t(c_2 + … + t c_{p-1}))` with `c_j = j^{k-1}`.
    fn horner(k: u64, t: Fp) -> Fp {
        let p = t.prime();
        let mut acc = p.zero();
        for j in (1..p.get()).rev() {
            acc = (acc + p.elem(j as i64).pow_u(k - 1)) * t;
        }
        acc
    }

    #[test]
    fn desk_values() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(mirimanoff_eval(3, p5.elem(2)).unwrap().value(), 1);
        assert_eq!(mirimanoff_eval(5, p5.elem(2)).unwrap().value(), 0);
        assert_eq!(mirimanoff_eval(3, p5.elem(3)).unwrap().value(), 3);
        assert_eq!(r_p_of_t(p5.elem(2)).unwrap(), 1);
        assert_eq!(r_p_of_t(p5.elem(3)).unwrap(), 1);
        let p7 = Prime::new(7).unwrap();
        let two = p7.elem(2);
        assert_eq!(mirimanoff_eval(3, two).unwrap().value(), 6);
        assert_eq!(mirimanoff_eval(5, two).unwrap().value(), 3);
        assert_eq!(mirimanoff_eval(7, two).unwrap().value(), 0);
        assert_eq!(r_p_of_t(two).unwrap(), 2);
        assert_eq!(r_p_of_t(p7.elem(6)), Err(Error::ExcludedT(6)));
        assert_eq!(r_p_of_t(p7.elem(1)), Err(Error::ExcludedT(1)));
        assert!(mirimanoff_eval(0, two).is_err());
    }

    #[test]
    fn agrees_with_horner() {
        for p in primes_in(3, 32) {
            for t in p.elements() {
                for k in 1..=p.get() {
                    assert_eq!(mirimanoff_eval(k, t).unwrap(), horner(k, t));
                }
            }
        }
    }

    #[test]
    fn record_matches_direct_evaluation() {
        for p in primes_in(5, 60) {
            for t in p.elements().skip(2) {
                let rec = MirimanoffRecord::new(t);
                assert_eq!(rec.values.len(), p.half());
                for (i, v) in rec.values.iter().enumerate() {
                    let k = 2 * (i as u64 + 1) + 1;
                    assert_eq!(*v, mirimanoff_eval(k, t).unwrap(), "p = {p}, t = {t}, k = {k}");
                }
                if check_t(t).is_ok() {
                    assert_eq!(r_p_of_t(t).unwrap(), rec.r_p_of_t);
                }
            }
        }
    }
}
