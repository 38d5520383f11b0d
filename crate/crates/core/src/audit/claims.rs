//! The curated table of audited claims.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    /// A mismatch is a failure.
    Assert,
    /// Recorded, never fails a strict run.
    ReportOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    pub mode: Mode,
}

const fn a(id: &'static str, anchor: &'static str) -> Claim {
    Claim { id, anchor, mode: Mode::Assert }
}

const fn r(id: &'static str, anchor: &'static str) -> Claim {
    Claim { id, anchor, mode: Mode::ReportOnly }
}

pub const CLAIMS: &[Claim] = &[
    a("cyclo.gamma_closed_form", "series coefficients of D(z'(x)) in A/p equal gamma_k(x), 0 <= k <= p-3"),
    a("cyclo.trace_leading_coeffs", "D(z'(x)) = 2y dl + 2y l dl + (3y + 3y^2 + 2y^3) l^2 dl + ..., y = x - 1"),
    a("cyclo.trace_not_colinear", "D(z'(x)) and D(1 - l) are independent for x not in {0, 1, 1/2}"),
    a("cyclo.trace_plus_block_zero", "sigma(z_k) = z_k^-1, so D(z_k(x)) has no f+ component"),
    a("cyclo.galois_shift", "g(f_l^{+-}) = s f_{l+1}^{+-} for l < (p-1)/2"),
    a("cyclo.galois_wrap", "g(f_h^-) = s f_1^-, g(f_h^+) = -s f_1^+, h = (p-1)/2"),
    r("cyclo.galois_wrap_printed", "g(f_h^{+-}) = f_1^{+-}, h = (p-1)/2"),
    r("cyclo.z1_trace", "D(z_1(x)) = -s(x-1)(2 f_0^- + sum_k alpha_k f_k^-); conv: 0 literal, 1 mod p-1, 2 reflected"),
    r("miri.spectrum_vs_values", "eigenvalues of C(x) are the M_{2k+1}(x/y); conv as for cyclo.z1_trace"),
    r("miri.alpha_sum", "sum_k alpha_k = -1"),
    r("miri.rank_vs_rp", "rank C(x) = r_p(x/y)"),
    r("miri.dim_v_ge_rank", "dim V(x) >= rank C(x)"),
    r("miri.dim_v_ge_rp", "dim V(x) >= r_p(x/y)"),
    a("miri.trace_rank_le_dim_v", "rank of the minus blocks of D(z_k(x)) is at most dim V(x)"),
    a("miri.m1_vanishes", "M_1(t) = 0 for t != 1"),
    a("miri.minus_one_vanishes", "M_{2k+1}(-1) = 0 for 1 <= k <= (p-1)/2"),
    a("miri.max_zero_count", "for p < 1000 at most 7 of the M_{2k+1}(t) vanish, t not in {0, 1, -1}"),
    a("miri.threshold", "r_p > (p + 11)/4 for p < 1000"),
    r("miri.threshold_small_p", "r_p > (p + 11)/4 for p < 1000, primes below 43"),
    r("miri.dp_minus_bound", "d_p^- >= r_p - 2"),
    a("bern.minus_one_solves", "t = -1 solves B_{p-2k-1} M_{2k+1}(t) = 0 for 1 <= k <= (p-3)/2"),
    a("kummer.even_vanish", "l_{2k}(z'(x)) = 0"),
    a("kummer.doubling", "l_{2k+1}(z'(x)) = 2 l_{2k+1}(x - y zeta)"),
    a("kummer.homomorphism", "l_k(zw) = l_k(z) + l_k(w) on units prime to 1 - zeta"),
    r("kummer.identity_printed", "l_{2k+1}(x - y zeta) = -x M_{2k+1}(x/y)"),
    a("kummer.identity_uniform", "exactly one of -x M(x/y), -x M(y/x), -y M(x/y), -y M(y/x) fits every (x, k); it is -x M(y/x)"),
    a("kummer.triangular", "for p <= 13 some triangular invertible A has l(x) = A D(x) for all x"),
    r("kummer.triangular_beyond", "a triangular invertible A with l(x) = A D(x), p >= 17"),
    r("kummer.ell_length", "l(x) = (l_3, ..., l_p) of length (p-1)/2"),
    a("quad.search_recovers", "n = 3, alpha = 2: delta in {-104, -5320, -48664} arise from coprime (alpha, b)"),
    a("quad.yamamoto", "two coprime representations meeting the p-th power conditions give Z/n + Z/n in Cl for delta < -4"),
    a("quad.table.delta", "delta = alpha^2 - 4 b^n"),
    a("quad.table.shown", "displayed right-hand side alpha^2 - c b^e equals delta"),
    a("quad.table.factors", "displayed factorization multiplies to delta and has prime factors"),
    a("quad.table.fundamental", "delta is a field discriminant"),
    a("quad.table.ramified", "n | delta and gcd(alpha, n) = 1"),
    a("quad.table.torsion", "Cl has an element of order n: witness form (b, alpha, b^{n-1}) of order n, or n | eps_2 with nonzero trace 2/alpha"),
    a("quad.table.class_number", "n divides h(delta)"),
    a("quad.table.unit", "fundamental unit (eps_1 + eps_2 sqrt(delta))/2 as displayed"),
    r("quad.erratum.delta", "printed delta = alpha^2 - 4 b^n"),
    r("quad.erratum.shown", "displayed right-hand side equals delta"),
    r("quad.erratum.factors", "displayed factorization multiplies to delta"),
    r("quad.erratum.not-fundamental", "delta is a field discriminant"),
];

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}
