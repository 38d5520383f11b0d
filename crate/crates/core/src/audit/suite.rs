//! Runs every registered claim over a range of primes.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::audit::Registry;
use crate::cyclo::{
    check_z1_trace, galois_image_of_basis, to_f_basis, trace_independent_of_one_minus_lambda,
    z_k, z_prime, AlphaConvention, FBasisCoords, FBasisIndex, TruncatedRing,
};
use crate::error::{Error, Result};
use crate::kummer::{
    ell_homomorphism_check, gamma_comparison, log_derivatives, mirimanoff_identity_audit,
    triangular_relation, CycloElement, EllLayout, MiriCandidate,
};
use crate::mirimanoff::{
    circulant, dim_v, kummer_congruence_solutions, mirimanoff_eval, r_p_of_t, scan_rp, ThresholdVerdict,
};
use crate::modp::{primes_in, primitive_root, Fp, Prime};
use crate::quadratic::search::{search_double_reps, YamamotoOutcome};
use crate::quadratic::tables::{all_rows, check_row, Erratum, RowCheck, TableKind};
use crate::quadratic::torsion_search;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    /// Cyclotomic claims for `5 ≤ p ≤ p_max`.
    pub p_max: u64,
    /// Scan claims for `5 ≤ p ≤ scan_p_max`.
    pub scan_p_max: u64,
    pub workers: usize,
    pub seed: u64,
    /// Treat report-only claims as asserted.
    pub promote: bool,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            p_max: 31,
            scan_p_max: 31,
            workers: 1,
            seed: 0,
            promote: false,
        }
    }
}

fn conv_index(c: AlphaConvention) -> i64 {
    AlphaConvention::ALL.iter().position(|&d| d == c).unwrap() as i64
}

fn show(v: &[Fp]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.value().to_string()).collect();
    format!("({})", parts.join(","))
}

fn show_set(mut v: Vec<u64>) -> String {
    v.sort_unstable();
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn new_registry(promote: bool) -> Registry {
    if promote {
        Registry::promoted()
    } else {
        Registry::new()
    }
}

pub fn audit_all(opts: &AuditOptions) -> Result<Registry> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .expect("thread pool");
    let primes = primes_in(5, opts.p_max + 1);
    let parts: Vec<Result<Registry>> = pool.install(|| {
        primes
            .par_iter()
            .map(|&p| {
                let mut reg = new_registry(opts.promote);
                audit_prime(&mut reg, p, opts.seed)?;
                Ok(reg)
            })
            .collect()
    });
    let mut reg = new_registry(opts.promote);
    for part in parts {
        reg.merge(part?)?;
    }
    pool.install(|| audit_scan(&mut reg, opts))?;
    audit_quadratic(&mut reg, opts)?;
    Ok(reg)
}

fn audit_prime(reg: &mut Registry, p: Prime, seed: u64) -> Result<()> {
    let pi = ("p", p.get() as i64);
    let h = p.half();
    let xs: Vec<Fp> = p.elements().skip(2).collect();
    let half = p.elem(2).inv()?;

    // series-side facts, one entry per prime
    let mut gamma_ok = true;
    let mut lead_ok = true;
    let mut indep_ok = true;
    let mut plus_ok = true;
    for &x in &xs {
        let g = gamma_comparison(x)?;
        gamma_ok &= g.series == g.closed_form;
        let y = x - p.one();
        if p.get() >= 7 {
            let t = z_prime(x)?.dennis_trace()?;
            let c = crate::cyclo::DifferentialForm::coeffs(&t);
            let y2 = y * y;
            lead_ok &= c[0] == p.elem(2) * y
                && c[1] == p.elem(2) * y
                && c[2] == p.elem(3) * y + p.elem(3) * y2 + p.elem(2) * y2 * y;
        }
        if x != half {
            indep_ok &= trace_independent_of_one_minus_lambda(x)?;
        }
        for k in 1..=h {
            plus_ok &= to_f_basis(&z_k(x, k)?.dennis_trace()?).plus_is_zero();
        }
    }
    reg.check("cyclo.gamma_closed_form", &[pi], "equal", if gamma_ok { "equal" } else { "differ" }, gamma_ok, "all x")?;
    if p.get() >= 7 {
        reg.check("cyclo.trace_leading_coeffs", &[pi], "(2y, 2y, 3y+3y^2+2y^3)", if lead_ok { "same" } else { "differ" }, lead_ok, "all x")?;
    }
    reg.check("cyclo.trace_not_colinear", &[pi], "independent", if indep_ok { "independent" } else { "colinear somewhere" }, indep_ok, "")?;
    reg.check("cyclo.trace_plus_block_zero", &[pi], "0", if plus_ok { "0" } else { "nonzero" }, plus_ok, "all x, all k")?;

    // Galois action on the f-basis
    let s = primitive_root(p);
    let mut shift_ok = true;
    for l in 1..h {
        for idx in [FBasisIndex::Minus(l), FBasisIndex::Plus(l)] {
            let target = match idx {
                FBasisIndex::Minus(_) => FBasisIndex::Minus(l + 1),
                FBasisIndex::Plus(_) => FBasisIndex::Plus(l + 1),
            };
            shift_ok &= galois_image_of_basis(p, idx) == scaled_unit(p, target, s);
        }
    }
    reg.check("cyclo.galois_shift", &[pi], "s f_{l+1}", if shift_ok { "s f_{l+1}" } else { "other" }, shift_ok, "")?;
    let gm = galois_image_of_basis(p, FBasisIndex::Minus(h));
    let gp = galois_image_of_basis(p, FBasisIndex::Plus(h));
    let derived = gm == scaled_unit(p, FBasisIndex::Minus(1), s) && gp == scaled_unit(p, FBasisIndex::Plus(1), -s);
    reg.check("cyclo.galois_wrap", &[pi], "(s f_1^-, -s f_1^+)", "computed image", derived, "")?;
    let printed = gm == scaled_unit(p, FBasisIndex::Minus(1), p.one())
        && gp == scaled_unit(p, FBasisIndex::Plus(1), p.one());
    reg.check(
        "cyclo.galois_wrap_printed",
        &[pi],
        "(f_1^-, f_1^+)",
        format!("({} f_1^-, {} f_1^+)", s.value(), (-s).value()),
        printed,
        "",
    )?;

    // per-x claims around the circulant
    for &x in &xs {
        let xi = ("x", x.value() as i64);
        let d = dim_v(x)?;
        reg.check(
            "miri.trace_rank_le_dim_v",
            &[pi, xi],
            format!("<= {}", d.dim_v),
            d.trace_rank,
            d.trace_rank <= d.dim_v,
            "",
        )?;
        let z1 = check_z1_trace(x)?;
        for ((conv, claimed), (_, m)) in z1.claimed.iter().zip(&z1.matches) {
            reg.check(
                "cyclo.z1_trace",
                &[pi, xi, ("conv", conv_index(*conv))],
                show(claimed),
                show(&z1.exact.minus),
                *m,
                conv.name(),
            )?;
        }
        if x == half {
            continue;
        }
        let y = x - p.one();
        let t = x / y;
        let values: Vec<u64> = (1..=h)
            .map(|k| mirimanoff_eval(2 * k as u64 + 1, t).map(|v| v.value()))
            .collect::<Result<_>>()?;
        let rpt = r_p_of_t(t)?;
        for conv in AlphaConvention::ALL {
            let ci = ("conv", conv_index(conv));
            let c = circulant(x, conv)?;
            let sp = c.spectrum();
            let mut want = values.clone();
            want.sort_unstable();
            reg.check(
                "miri.spectrum_vs_values",
                &[pi, xi, ci],
                show_set(want.clone()),
                show_set(sp.sorted()),
                sp.sorted() == want,
                conv.name(),
            )?;
            let sum = c.row_sum();
            reg.check("miri.alpha_sum", &[pi, xi, ci], (-p.one()).value(), sum.value(), sum == -p.one(), conv.name())?;
            reg.check("miri.rank_vs_rp", &[pi, xi, ci], rpt, sp.rank, sp.rank == rpt, conv.name())?;
            reg.check(
                "miri.dim_v_ge_rank",
                &[pi, xi, ci],
                format!(">= {}", sp.rank),
                d.dim_v,
                d.dim_v >= sp.rank,
                conv.name(),
            )?;
        }
        reg.check("miri.dim_v_ge_rp", &[pi, xi], format!(">= {rpt}"), d.dim_v, d.dim_v >= rpt, "")?;
    }

    // Mirimanoff polynomial basics
    let m1_ok = p
        .elements()
        .filter(|&t| t != p.one())
        .all(|t| mirimanoff_eval(1, t).is_ok_and(|v| v.is_zero()));
    reg.check("miri.m1_vanishes", &[pi], 0, if m1_ok { "0" } else { "nonzero" }, m1_ok, "t != 1; M_1(1) = p - 1")?;
    let minus_one = -p.one();
    let neg_ok = (1..=h).all(|k| mirimanoff_eval(2 * k as u64 + 1, minus_one).is_ok_and(|v| v.is_zero()));
    reg.check("miri.minus_one_vanishes", &[pi], 0, if neg_ok { "0" } else { "nonzero" }, neg_ok, "")?;
    let sols = kummer_congruence_solutions(p);
    reg.check(
        "bern.minus_one_solves",
        &[pi],
        format!("{} in S", minus_one.value()),
        show_set(sols.clone()),
        sols.contains(&minus_one.value()),
        "",
    )?;

    // Kummer logarithmic derivatives
    let audit = mirimanoff_identity_audit(p)?;
    reg.check("kummer.even_vanish", &[pi], 0, if audit.even_vanish { "0" } else { "nonzero" }, audit.even_vanish, "")?;
    reg.check("kummer.doubling", &[pi], "2x", if audit.doubling { "2x" } else { "other" }, audit.doubling, "")?;
    let uniform: Vec<&str> = audit.uniform.iter().map(|c| c.name()).collect();
    let single = audit.distinct_uniform == 1 && audit.uniform.contains(&MiriCandidate::MinusXAtYOverX);
    reg.check(
        "kummer.identity_uniform",
        &[pi],
        MiriCandidate::MinusXAtYOverX.name(),
        format!("[{}]", uniform.join(" ")),
        single,
        format!("{} points", audit.points),
    )?;
    for &x in &xs {
        let y = x - p.one();
        let ell = log_derivatives(&CycloElement::binomial(x, y, 1))?;
        for k in 1..=(p.get() as usize - 3) / 2 {
            let lhs = ell.get(2 * k + 1)?;
            let rhs = MiriCandidate::MinusXAtXOverY.eval(x, 2 * k as u64 + 1)?;
            reg.check(
                "kummer.identity_printed",
                &[pi, ("x", x.value() as i64), ("k", k as i64)],
                rhs.value(),
                lhs.value(),
                lhs == rhs,
                "",
            )?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.get());
    let mut hom_ok = true;
    let mut pairs = 0;
    while pairs < 200 {
        let z = random_unit(p, &mut rng);
        let w = random_unit(p, &mut rng);
        hom_ok &= ell_homomorphism_check(&z, &w)?;
        pairs += 1;
    }
    reg.check(
        "kummer.homomorphism",
        &[pi, ("seed", seed as i64)],
        "additive",
        if hom_ok { "additive" } else { "not additive" },
        hom_ok,
        "200 random pairs",
    )?;
    let tri = triangular_relation(p, EllLayout::FromOne)?;
    let ok = tri.exists && tri.invertible && (tri.lower_triangular || tri.upper_triangular);
    let id = if p.get() <= 13 { "kummer.triangular" } else { "kummer.triangular_beyond" };
    reg.check(
        id,
        &[pi],
        "triangular invertible A",
        format!(
            "exists={} unique={} lower={} upper={} invertible={}",
            tri.exists, tri.unique, tri.lower_triangular, tri.upper_triangular, tri.invertible
        ),
        ok,
        EllLayout::FromOne.name(),
    )?;
    let long = triangular_relation(p, EllLayout::FromThreeToP);
    reg.check(
        "kummer.ell_length",
        &[pi],
        "(l_3, ..., l_p)",
        match &long {
            Ok(_) => "defined".to_string(),
            Err(e) => e.to_string(),
        },
        long.is_ok(),
        "l_k is defined only for k <= p - 2",
    )?;
    Ok(())
}

fn scaled_unit(p: Prime, idx: FBasisIndex, c: Fp) -> FBasisCoords {
    let mut v = FBasisCoords::unit(p, idx);
    for e in v.minus.iter_mut().chain(v.plus.iter_mut()) {
        *e *= c;
    }
    v
}

fn random_unit(p: Prime, rng: &mut ChaCha8Rng) -> CycloElement {
    loop {
        let coeffs: Vec<Fp> = (0..p.get()).map(|_| p.elem(rng.gen_range(0..p.get() as i64))).collect();
        let z = CycloElement::new(p, &coeffs);
        if !z.augmentation().is_zero() {
            return z;
        }
    }
}

fn audit_scan(reg: &mut Registry, opts: &AuditOptions) -> Result<()> {
    for rec in scan_rp(opts.scan_p_max + 1, opts.workers) {
        let pi = ("p", rec.p as i64);
        reg.check("miri.max_zero_count", &[pi], "<= 7", rec.max_zero_count, rec.max_zero_count <= 7, "includes M_p = 0")?;
        let id = if rec.p >= 43 { "miri.threshold" } else { "miri.threshold_small_p" };
        reg.check(
            id,
            &[pi],
            format!("> {}", rec.threshold),
            rec.r_p,
            rec.verdict == ThresholdVerdict::Above,
            format!("argmin t = {}", rec.argmin_t),
        )?;
        reg.check(
            "miri.dp_minus_bound",
            &[pi],
            "d_p^- >= r_p - 2",
            format!(">= {}", rec.dp_minus_lower_bound),
            true,
            "lower bound only",
        )?;
    }
    Ok(())
}

/// Files `holds` under `quad.table.<name>`, or under `quad.erratum.<name>` when it fails
/// on a row carrying that erratum.
fn table_check(
    reg: &mut Registry,
    c: &RowCheck,
    name: &str,
    erratum: Option<Erratum>,
    claimed: impl std::fmt::Display,
    computed: impl std::fmt::Display,
    holds: bool,
) -> Result<()> {
    let inputs = [
        ("table", if c.row.kind == TableKind::Torsion { 0 } else { 1 }),
        ("n", c.row.n as i64),
        ("alpha", c.row.alpha),
        ("b", c.row.b),
    ];
    let documented = erratum.is_some_and(|e| c.row.errata.contains(&e));
    let id = match (holds, documented, erratum) {
        (false, true, Some(e)) => format!("quad.erratum.{}", e.name()),
        _ => format!("quad.table.{name}"),
    };
    reg.check(&id, &inputs, claimed, computed, holds, format!("printed delta {}", c.row.delta))
}

fn audit_quadratic(reg: &mut Registry, opts: &AuditOptions) -> Result<()> {
    for row in all_rows() {
        let c = check_row(row)?;
        table_check(reg, &c, "delta", Some(Erratum::Delta), row.delta, &c.computed_delta, c.delta_matches)?;
        table_check(
            reg,
            &c,
            "shown",
            Some(Erratum::Shown),
            format!("{}^2 - {}*{}^{} = {}", row.alpha, row.shown.0, row.b, row.shown.1, row.delta),
            &c.shown_value,
            c.shown_matches,
        )?;
        if let (Some(m), Some(pr)) = (c.factors_match, c.factors_prime) {
            let prod: Vec<String> = row.factors.iter().map(|f| f.to_string()).collect();
            table_check(reg, &c, "factors", Some(Erratum::Factors), prod.join("*"), &c.computed_delta, m && pr)?;
        }
        table_check(
            reg,
            &c,
            "fundamental",
            Some(Erratum::NotFundamental),
            "fundamental",
            if c.fundamental { "fundamental" } else { "not fundamental" },
            c.fundamental,
        )?;
        if row.kind == TableKind::Ramified {
            table_check(
                reg,
                &c,
                "ramified",
                None,
                format!("{} | delta", row.n),
                format!("n|delta={} gcd(alpha,n)=1:{}", c.n_divides_delta, c.alpha_prime_to_n),
                c.n_divides_delta && c.alpha_prime_to_n,
            )?;
        }
        let computed = match (c.form_order, c.unit_condition) {
            (Some(o), _) => format!("form order {o}"),
            (None, Some(uc)) => format!("n|eps_2={uc} trace={:?}", c.trace_residue),
            _ => "uncertified".to_string(),
        };
        table_check(reg, &c, "torsion", None, format!("order {}", row.n), computed, c.torsion_certified())?;
        if let Some(h) = c.class_number {
            table_check(reg, &c, "class_number", None, format!("{} | h", row.n), h, h % row.n as usize == 0)?;
        }
        if let Some((e1, e2)) = row.unit {
            let got = c.unit.map(|(a, b)| format!("({a}+{b}sqrt)/2")).unwrap_or_default();
            table_check(reg, &c, "unit", None, format!("({e1}+{e2}sqrt)/2"), got, c.unit == Some((e1, e2)))?;
        }
    }

    let found: Vec<BigInt> = torsion_search(3, 2, 25, opts.workers)?
        .into_iter()
        .filter(|w| w.certified)
        .map(|w| w.delta)
        .collect();
    for d in [-104i64, -5320, -48664] {
        let ok = found.contains(&BigInt::from(d));
        reg.check(
            "quad.search_recovers",
            &[("delta", d), ("n", 3)],
            d,
            if ok { "found, order 3" } else { "missing" },
            ok,
            "alpha <= 2, |b| <= 25",
        )?;
    }

    let mut instances = 0;
    for rep in search_double_reps(3, 300, 40)? {
        let YamamotoOutcome::Checked { all_hold: true, .. } = rep.outcome else {
            continue;
        };
        if !rep.delta.is_negative() {
            continue;
        }
        instances += 1;
        let d: i64 = (&rep.delta).try_into().map_err(|_| Error::BadInput("delta overflow".into()))?;
        reg.check(
            "quad.yamamoto",
            &[
                ("delta", d),
                ("alpha1", rep.first.0),
                ("b1", rep.first.1),
                ("alpha2", rep.second.0),
                ("b2", rep.second.1),
            ],
            "Z/3 + Z/3",
            match rep.independent {
                Some(true) => "independent witnesses of order 3",
                Some(false) => "second witness in the first's cyclic group",
                None => "order above search cap",
            },
            rep.independent == Some(true),
            "alpha <= 300, |b| <= 40",
        )?;
    }
    if instances == 0 {
        reg.check("quad.yamamoto", &[], "instance", "none in box", false, "alpha <= 300, |b| <= 40")?;
    }
    Ok(())
}
