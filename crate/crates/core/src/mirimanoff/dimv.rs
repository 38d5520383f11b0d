//! `V(x) = span(z_1(x), …, z_h(x))` inside `K_1(R; Z/p) = 1 + uF_p[u]`.
//!
//! `1 + uF_p[u]` is elementary abelian (`(1 + uf)^p = 1 + u^p f^p = 1`) and the truncated
//! logarithm identifies it with `(uF_p[u], +)`, so `dim V(x)` is the rank of the logs.

use serde::Serialize;

use crate::cyclo::{to_f_basis, z_k, TruncatedRing};
use crate::error::Result;
use crate::linalg::rank_of;
use crate::modp::Fp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimV {
    pub p: u64,
    pub x: u64,
    /// Rank of `log z_k(x)`, `1 ≤ k ≤ h`.
    pub dim_v: usize,
    /// Rank of the minus-block coordinates of `D(z_k(x))`.
    pub trace_rank: usize,
}

pub fn dim_v(x: Fp) -> Result<DimV> {
    let p = x.prime();
    let mut logs = Vec::with_capacity(p.half());
    let mut traces = Vec::with_capacity(p.half());
    for k in 1..=p.half() {
        let z = z_k(x, k)?;
        logs.push(z.log_unit()?);
        traces.push(to_f_basis(&z.dennis_trace()?).minus);
    }
    Ok(DimV {
        p: p.get(),
        x: x.value(),
        dim_v: rank_of(p, &logs),
        trace_rank: rank_of(p, &traces),
    })
}

/// `dim` of the span of arbitrary units of `1 + uF_p[u]` (constant term normalized).
pub fn span_dimension(p: crate::modp::Prime, units: &[crate::cyclo::RSeries]) -> Result<usize> {
    let logs: Vec<Vec<Fp>> = units.iter().map(|z| z.log_unit()).collect::<Result<_>>()?;
    Ok(rank_of(p, &logs))
}
