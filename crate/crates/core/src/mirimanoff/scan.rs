//! The `r_p` statistic and the parallel scan over primes.
//!
//! Kernel: pairing `j ↔ p - j` gives
//! `M_{2k+1}(t) = Σ_{j=1}^{h} j^{2k} (t^j + t^{1-j})` with `h = (p-1)/2`.
//! Powers `j^{2k}` are read from a table of `g^e` through discrete logarithms, so the
//! inner loop is an index add mod `p - 1` and a multiply-accumulate with lazy reduction.
//! Since `M_{2k+1}(1/t) = t⁻¹ M_{2k+1}(t)`, only one of `t, 1/t` is evaluated.

use rayon::prelude::*;
use serde::Serialize;

use crate::modp::{primes_in, primitive_root, Fp, Prime};

/// Discrete-log tables for one prime.
struct LogTables {
    p: u64,
    /// `pow[e] = g^e`, `e < p - 1`
    pow: Vec<u64>,
    /// `ind[a]` with `g^{ind[a]} = a`, `1 ≤ a < p`
    ind: Vec<u64>,
}

impl LogTables {
    fn new(p: Prime) -> Self {
        let n = p.get();
        let g = primitive_root(p).value();
        let mut pow = vec![0u64; (n - 1) as usize];
        let mut ind = vec![0u64; n as usize];
        let mut cur = 1u64;
        for (e, slot) in pow.iter_mut().enumerate() {
            *slot = cur;
            ind[cur as usize] = e as u64;
            cur = cur * g % n;
        }
        LogTables { p: n, pow, ind }
    }

    /// `M_{2k+1}(t)` for `k = 1..=h`, as residues.
    fn odd_values(&self, t: u64) -> Vec<u64> {
        let p = self.p;
        let m = p - 1;
        let h = (m / 2) as usize;
        // c_j = t^j + t^{1-j}
        let it = self.ind[t as usize];
        let mut c = Vec::with_capacity(h);
        for j in 1..=h as u64 {
            let a = self.pow[(it * j % m) as usize];
            let b = self.pow[((it * (m + 1 - j % m)) % m) as usize];
            c.push((a + b) % p);
        }
        let step: Vec<u64> = (1..=h).map(|j| 2 * self.ind[j] % m).collect();
        let mut exp = vec![0u64; h];
        // products are < p², so this many can be summed before reducing
        let batch = (u64::MAX / ((p - 1) * (p - 1))).max(1) as usize;
        let mut out = Vec::with_capacity(h);
        for _ in 0..h {
            let mut acc = 0u64;
            let mut pending = 0usize;
            for j in 0..h {
                let mut e = exp[j] + step[j];
                if e >= m {
                    e -= m;
                }
                exp[j] = e;
                acc += self.pow[e as usize] * c[j];
                pending += 1;
                if pending == batch {
                    acc %= p;
                    pending = 0;
                }
            }
            out.push(acc % p);
        }
        out
    }
}

/// `M_{2k+1}(t)` for `k = 1..=(p-1)/2`.
pub fn odd_values(t: Fp) -> Vec<Fp> {
    let p = t.prime();
    if t.is_zero() {
        return vec![p.zero(); p.half()];
    }
    LogTables::new(p)
        .odd_values(t.value())
        .into_iter()
        .map(|v| p.elem(v as i64))
        .collect()
}

/// Position of `r_p` against `(p + 11)/4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ThresholdVerdict {
    Above,
    Equal,
    Below,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RpScanRecord {
    pub p: u64,
    pub r_p: usize,
    /// Smallest admissible `t` attaining `r_p`.
    pub argmin_t: u64,
    /// Largest number of vanishing `M_{2k+1}(t)`, `1 ≤ k ≤ (p-1)/2`, over admissible `t`.
    /// Includes the vanishing of `M_p`, which holds for every `t`.
    pub max_zero_count: usize,
    /// `(p + 11)/4`.
    pub threshold: f64,
    pub verdict: ThresholdVerdict,
    /// `r_p - 2`, the resulting lower bound on the minus part of the `p`-rank.
    pub dp_minus_lower_bound: i64,
}

/// Scan one prime `p ≥ 5` over `t ∉ {0, 1, -1}`.
pub fn r_p(p: Prime) -> RpScanRecord {
    assert!(p.get() >= 5, "r_p needs p >= 5");
    let tables = LogTables::new(p);
    let n = p.get();
    let h = p.half();
    let (mut best, mut arg, mut max_zero) = (usize::MAX, 0u64, 0usize);
    for t in 2..n - 1 {
        let inv = p.elem(t as i64).inv().expect("t != 0").value();
        // r(t) = r(1/t); the smaller representative does the work
        if inv < t {
            continue;
        }
        let vals = tables.odd_values(t);
        let r = vals.iter().filter(|&&v| v != 0).count();
        if r < best || (r == best && t < arg) {
            best = r;
            arg = t;
        }
        max_zero = max_zero.max(h - r);
    }
    let four_r = 4 * best as u64;
    let verdict = match four_r.cmp(&(n + 11)) {
        std::cmp::Ordering::Greater => ThresholdVerdict::Above,
        std::cmp::Ordering::Equal => ThresholdVerdict::Equal,
        std::cmp::Ordering::Less => ThresholdVerdict::Below,
    };
    RpScanRecord {
        p: n,
        r_p: best,
        argmin_t: arg,
        max_zero_count: max_zero,
        threshold: (n + 11) as f64 / 4.0,
        verdict,
        dp_minus_lower_bound: best as i64 - 2,
    }
}

/// One record per prime `5 ≤ p < p_max`, sorted by `p`, using `workers` threads.
pub fn scan_rp(p_max: u64, workers: usize) -> Vec<RpScanRecord> {
    let primes = primes_in(5, p_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    // large primes first so the tail is short; order restored below
    let mut out: Vec<RpScanRecord> =
        pool.install(|| primes.par_iter().rev().map(|&p| r_p(p)).collect());
    out.sort_by_key(|r| r.p);
    out
}
