//! Bernoulli numbers mod `p`, the irregularity index and Kummer's congruences.

use serde::Serialize;

use crate::mirimanoff::scan::odd_values;
use crate::modp::{Fp, Prime};

/// `B_0, …, B_{p-3}` reduced mod `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BernoulliTable {
    pub p: u64,
    /// `values[k] = B_k mod p`, `0 ≤ k ≤ p - 3`.
    pub values: Vec<Fp>,
    /// Even `2k ≤ p - 3` with `p | B_{2k}`.
    pub irregular: Vec<u64>,
}

impl BernoulliTable {
    pub fn get(&self, k: usize) -> Option<Fp> {
        self.values.get(k).copied()
    }

    pub fn irregularity_index(&self) -> usize {
        self.irregular.len()
    }
}

/// Uses `Σ_{j=0}^{k} C(k+1, j) B_j = 0`; the divisor `k + 1 ≤ p - 2` is invertible.
pub fn bernoulli_mod_p(p: Prime) -> BernoulliTable {
    assert!(p.get() >= 5, "Bernoulli table needs p >= 5");
    let top = p.get() as usize - 3;
    // binomial row C(k+1, ·), rebuilt in place
    let mut row = vec![p.zero(); top + 3];
    row[0] = p.one();
    row[1] = p.one();
    let mut b: Vec<Fp> = Vec::with_capacity(top + 1);
    b.push(p.one());
    for k in 1..=top {
        // advance row from C(k, ·) to C(k+1, ·)
        for j in (1..=k + 1).rev() {
            let prev = row[j - 1];
            row[j] += prev;
        }
        let mut s = p.zero();
        for (j, &bj) in b.iter().enumerate() {
            s += row[j] * bj;
        }
        let inv = row[k].inv().expect("k + 1 < p");
        b.push(-(s * inv));
    }
    let irregular = (2..=top)
        .step_by(2)
        .filter(|&k| b[k].is_zero())
        .map(|k| k as u64)
        .collect();
    BernoulliTable {
        p: p.get(),
        values: b,
        irregular,
    }
}

/// `(i(p), witnesses 2k)`.
pub fn irregular_index(p: Prime) -> (usize, Vec<u64>) {
    let t = bernoulli_mod_p(p);
    (t.irregular.len(), t.irregular)
}

/// `t ∈ F_p ∖ {0, 1}` with `B_{p-2k-1} M_{2k+1}(t) = 0` for `1 ≤ k ≤ (p-3)/2`.
pub fn kummer_congruence_solutions(p: Prime) -> Vec<u64> {
    let table = bernoulli_mod_p(p);
    let n = p.get() as usize;
    let needed: Vec<usize> = (1..=(n - 3) / 2)
        .filter(|&k| !table.values[n - 2 * k - 1].is_zero())
        .collect();
    p.elements()
        .skip(2)
        .filter(|&t| {
            let vals = odd_values(t);
            needed.iter().all(|&k| vals[k - 1].is_zero())
        })
        .map(|t| t.value())
        .collect()
}
