//! One line per acceptance criterion.
//!
//! Criterion 7 contains a sub-claim that computation refutes (a prime below 1000 has
//! 13 vanishing values); it is reported red. The test fails if any other criterion
//! is red, or if criterion 7 unexpectedly turns green.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dennis_core::audit::{audit_all, AuditEntry, AuditOptions, Registry, Verdict};
use dennis_core::cyclo::{trace_independent_of_one_minus_lambda, z_prime, AlphaConvention, DifferentialForm, TruncatedRing};
use dennis_core::kummer::{
    ell_homomorphism_check, gamma_series_check, log_derivatives, mirimanoff_identity_audit,
    triangular_relation, CycloElement, EllLayout, MiriCandidate,
};
use dennis_core::mirimanoff::circulant::spectrum_matches_char_poly;
use dennis_core::mirimanoff::{
    bernoulli_mod_p, circulant, irregular_index, kummer_congruence_solutions, mirimanoff_eval, scan_rp,
    ThresholdVerdict,
};
use dennis_core::modp::primes_in;
use dennis_core::quadratic::omega::dennis_trace_quad;
use dennis_core::quadratic::search::CertVerdict;
use dennis_core::quadratic::{
    certify_table_entry, class_number, fundamental_unit, torsion_search, unit_condition, QuadDisc, QuadInt,
};
use dennis_core::{Fp, Prime};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn pr(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    if t <= limit {
        Ok(format!("{:.1}s", t.as_secs_f64()))
    } else {
        Err(format!("took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
    }
}

fn audit31() -> Registry {
    audit_all(&AuditOptions {
        p_max: 31,
        scan_p_max: 31,
        workers: 1,
        seed: 7,
        promote: false,
    })
    .unwrap()
}

fn find<'a>(reg: &'a Registry, id: &str, inputs: &[(&str, i64)]) -> Option<&'a AuditEntry> {
    reg.entries().find(|e| {
        e.claim_id == id && e.inputs.len() == inputs.len() && inputs.iter().all(|(k, v)| e.inputs.get(*k) == Some(v))
    })
}

fn c1_gamma() -> Outcome {
    let start = Instant::now();
    let primes = primes_in(5, 102);
    for &p in &primes {
        ensure!(gamma_series_check(p), "p = {p}: series and closed form differ");
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{} primes, all x, all k <= p-3, {t}", primes.len()))
}

fn c2_leading() -> Outcome {
    let mut n = 0;
    for p in primes_in(7, 102) {
        for x in p.elements().skip(2) {
            let y = x - p.one();
            let t = z_prime(x).unwrap().dennis_trace().unwrap();
            let c = t.coeffs();
            let y2 = y * y;
            ensure!(c[0] == p.elem(2) * y && c[1] == p.elem(2) * y, "p = {p}, x = {x}: {:?}", &c[..2]);
            ensure!(c[2] == p.elem(3) * y + p.elem(3) * y2 + p.elem(2) * y2 * y, "p = {p}, x = {x}: third");
            n += 1;
        }
    }
    Ok(format!("{n} (p, x) pairs, 7 <= p <= 101"))
}

fn c3_noncolinear() -> Outcome {
    let mut n = 0;
    for p in primes_in(5, 102) {
        let half = p.elem(2).inv().unwrap();
        for x in p.elements().skip(2).filter(|&x| x != half) {
            ensure!(trace_independent_of_one_minus_lambda(x).unwrap(), "p = {p}, x = {x}");
            n += 1;
        }
    }
    Ok(format!("{n} (p, x) pairs"))
}

fn c4_mirimanoff() -> Outcome {
    for p in primes_in(5, 102) {
        for t in p.elements().filter(|&t| t != p.one()) {
            ensure!(mirimanoff_eval(1, t).unwrap().is_zero(), "M_1({t}) != 0 mod {p}");
        }
        let m1 = -p.one();
        for k in 1..=p.half() as u64 {
            ensure!(mirimanoff_eval(2 * k + 1, m1).unwrap().is_zero(), "M_{}(-1) != 0 mod {p}", 2 * k + 1);
        }
    }
    let p5 = pr(5);
    let m3 = mirimanoff_eval(3, p5.elem(2)).unwrap().value();
    let m5 = mirimanoff_eval(5, p5.elem(2)).unwrap().value();
    ensure!((m3, m5) == (1, 0), "M_3(2), M_5(2) = {m3}, {m5} mod 5");
    Ok("p <= 101; M_1(t) = 0 for t != 1 (M_1(1) = p - 1); M_3(2) = 1, M_5(2) = 0 mod 5".into())
}

fn c5_circulant() -> Outcome {
    let mut n = 0;
    for p in primes_in(5, 62) {
        for x in p.elements().skip(2) {
            for conv in AlphaConvention::ALL {
                let c = circulant(x, conv).unwrap();
                ensure!(spectrum_matches_char_poly(&c), "p = {p}, x = {x}, {}: char poly", conv.name());
                ensure!(c.spectrum().rank == c.gaussian_rank(), "p = {p}, x = {x}, {}: rank", conv.name());
                n += 1;
            }
        }
    }
    Ok(format!("{n} circulants, p <= 61, three exponent conventions"))
}

fn c6_audit(reg: &Registry) -> Outcome {
    let e = find(reg, "miri.spectrum_vs_values", &[("p", 5), ("x", 2), ("conv", 0)]).ok_or("no spectrum entry")?;
    ensure!(
        e.verdict == Verdict::ReportOnly && e.paper_value == "{0,1}" && e.computed_value == "{2,3}",
        "spectrum entry {e:?}"
    );
    let e = find(reg, "miri.alpha_sum", &[("p", 5), ("x", 2), ("conv", 0)]).ok_or("no alpha-sum entry")?;
    ensure!(
        e.verdict == Verdict::ReportOnly && e.computed_value == "3" && e.paper_value == "4",
        "alpha-sum entry {e:?}"
    );
    let ranks = reg.filter("miri.trace_rank_le_dim_v");
    let expected: usize = primes_in(5, 32).iter().map(|p| p.get() as usize - 2).sum();
    ensure!(ranks.len() == expected, "{} rank entries, expected {expected}", ranks.len());
    ensure!(ranks.iter().all(|e| e.verdict == Verdict::Pass), "a rank entry failed");
    ensure!(reg.strict_ok(), "strict audit has failures");
    let s = reg.summarize();
    Ok(format!(
        "{} entries: {} pass, {} fail, {} report-only; {} rank checks pass",
        s.total(),
        s.pass,
        s.fail,
        s.report_only,
        ranks.len()
    ))
}

fn c7_scan(reg: &Registry) -> Outcome {
    let start = Instant::now();
    let recs = scan_rp(1000, 8);
    let elapsed = within(start, Duration::from_secs(300))?;
    ensure!(recs.len() == 166, "{} records", recs.len());
    ensure!(recs[0].p == 5 && recs[0].r_p == 1, "r_5 = {}", recs[0].r_p);
    ensure!(recs[1].p == 7 && recs[1].r_p == 2, "r_7 = {}", recs[1].r_p);
    for r in recs.iter().filter(|r| r.p >= 43) {
        ensure!(r.verdict == ThresholdVerdict::Above, "p = {}: r_p = {} vs {}", r.p, r.r_p, r.threshold);
    }
    for p in [5, 7] {
        let e = find(reg, "miri.threshold_small_p", &[("p", p)]).ok_or("no small-p entry")?;
        ensure!(e.verdict == Verdict::ReportOnly && !e.holds, "p = {p}: {e:?}");
    }
    let worst = recs.iter().max_by_key(|r| r.max_zero_count).unwrap();
    ensure!(
        worst.max_zero_count <= 7,
        "max zero count {} at p = {} (threshold r_p > (p+11)/4 holds for all 43 <= p < 1000; scan {elapsed})",
        worst.max_zero_count,
        worst.p
    );
    Ok(format!("166 primes in {elapsed}"))
}

/// Akiyama–Tanigawa, with the sign of `B_1` flipped to `-1/2`.
fn exact_bernoulli(n: usize) -> Vec<BigRational> {
    let mut a: Vec<BigRational> = Vec::new();
    let mut out = Vec::new();
    for m in 0..=n {
        a.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            a[j - 1] = (&a[j - 1] - &a[j]) * BigRational::from_integer(BigInt::from(j));
        }
        out.push(a[0].clone());
    }
    out[1] = -out[1].clone();
    out
}

fn c8_bernoulli() -> Outcome {
    let start = Instant::now();
    let irregular: Vec<u64> = primes_in(5, 300)
        .into_iter()
        .filter(|&p| irregular_index(p).0 > 0)
        .map(|p| p.get())
        .collect();
    let want = [37, 59, 67, 101, 103, 131, 149, 157, 233, 257, 263, 271, 283, 293];
    ensure!(irregular == want, "irregular primes {irregular:?}");
    let exact = exact_bernoulli(36);
    for p in primes_in(5, 38) {
        let m = BigInt::from(p.get());
        for (k, v) in bernoulli_mod_p(p).values.iter().enumerate() {
            let q = &exact[k];
            let num = ((q.numer() % &m + &m) % &m).to_i64().unwrap();
            let den = ((q.denom() % &m + &m) % &m).to_i64().unwrap();
            ensure!(*v == p.elem(num) / p.elem(den), "B_{k} mod {p}");
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{} irregular primes below 300, exact cross-check p <= 37, {t}", want.len()))
}

fn c9_kummer_congruences() -> Outcome {
    ensure!(kummer_congruence_solutions(pr(5)) == vec![4], "solutions(5)");
    ensure!(kummer_congruence_solutions(pr(7)) == vec![6], "solutions(7)");
    for p in primes_in(5, 102) {
        ensure!(kummer_congruence_solutions(p).contains(&(p.get() - 1)), "-1 missing for p = {p}");
    }
    Ok("solutions(5) = {-1}, solutions(7) = {-1}, -1 always a solution for p <= 101".into())
}

fn c10_ell() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let unit = |p: Prime, rng: &mut ChaCha8Rng| loop {
        let c: Vec<Fp> = (0..p.get()).map(|_| p.elem(rng.gen_range(0..p.get() as i64))).collect();
        let z = CycloElement::new(p, &c);
        if !z.augmentation().is_zero() {
            return z;
        }
    };
    for p in primes_in(5, 32) {
        for _ in 0..200 {
            let (z, w) = (unit(p, &mut rng), unit(p, &mut rng));
            ensure!(ell_homomorphism_check(&z, &w).unwrap(), "p = {p}: not additive");
        }
        let a = mirimanoff_identity_audit(p).unwrap();
        ensure!(a.even_vanish && a.doubling, "p = {p}: parity facts");
    }
    let p5 = pr(5);
    let l3 = log_derivatives(&CycloElement::binomial(p5.elem(2), p5.one(), 1)).unwrap().get(3).unwrap();
    ensure!(l3.value() == 4, "l_3(2 - zeta) = {l3}");
    Ok("200 pairs per p <= 31; l_3(2 - zeta) = 4 mod 5; parity and doubling for p <= 31".into())
}

fn c11_identity(reg: &Registry) -> Outcome {
    for p in primes_in(5, 32) {
        let a = mirimanoff_identity_audit(p).unwrap();
        ensure!(
            a.distinct_uniform == 1 && a.uniform.contains(&MiriCandidate::MinusXAtYOverX),
            "p = {p}: uniform {:?}",
            a.uniform
        );
    }
    let lit = reg.filter("kummer.identity_printed");
    let p5: Vec<_> = lit.iter().filter(|e| e.inputs["p"] == 5 && !e.holds).collect();
    ensure!(!p5.is_empty(), "no p = 5 mismatch recorded");
    ensure!(lit.iter().all(|e| e.verdict == Verdict::ReportOnly), "printed form not report-only");
    let x2 = find(reg, "kummer.identity_printed", &[("p", 5), ("x", 2), ("k", 1)]).ok_or("no (5, 2, 1) entry")?;
    ensure!(x2.paper_value == "3" && x2.computed_value == "4", "{x2:?}");
    Ok(format!(
        "-x*M(y/x) is the only fit for p <= 31; {} p = 5 mismatches of the printed form recorded",
        p5.len()
    ))
}

fn c12_triangular() -> Outcome {
    for p in [5, 7, 11, 13] {
        let t = triangular_relation(pr(p), EllLayout::FromOne).unwrap();
        ensure!(
            t.exists && t.invertible && (t.lower_triangular || t.upper_triangular),
            "p = {p}: {t:?}"
        );
    }
    let beyond: Vec<String> = primes_in(17, 32)
        .into_iter()
        .map(|p| {
            let t = triangular_relation(p, EllLayout::FromOne).unwrap();
            format!("{p}:{}", if t.exists && t.lower_triangular && t.invertible { "lower" } else { "none" })
        })
        .collect();
    Ok(format!("p in {{5, 7, 11, 13}} triangular invertible; recorded {}", beyond.join(" ")))
}

fn c13_quadratic() -> Outcome {
    let start = Instant::now();
    let c = certify_table_entry(&BigInt::from(-104), 3, 2, 3).unwrap();
    ensure!(c.verdict == CertVerdict::Pass && c.order == 3, "(-104, 3): {c:?}");
    let c = certify_table_entry(&BigInt::from(-127), 5, 1, 2).unwrap();
    ensure!(c.verdict == CertVerdict::Pass && c.order == 5, "(-127, 5): {c:?}");
    let c = certify_table_entry(&BigInt::from(-511), 7, 1, 2).unwrap();
    ensure!(c.order % 7 == 0, "(-511, 7): order {}", c.order);
    let order511 = c.order;
    for (d, h) in [(-104, 6), (-127, 5), (-231, 12)] {
        let got = class_number(&BigInt::from(d)).unwrap();
        ensure!(got == h, "h({d}) = {got}");
    }
    let found: Vec<BigInt> = torsion_search(3, 2, 25, 1).unwrap().into_iter().map(|w| w.delta).collect();
    for d in [-104, -5320, -48664] {
        ensure!(found.contains(&BigInt::from(d)), "search misses {d}");
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("orders 3, 5, {order511}; h = 6, 5, 12; search recovers all three; {t}"))
}

fn c14_real(reg: &Registry) -> Outcome {
    let d = QuadDisc::new(321).unwrap();
    let e = fundamental_unit(&d).unwrap();
    ensure!(
        e.alpha == BigInt::from(430) && e.beta == BigInt::from(24) && e.norm() == BigInt::one(),
        "unit {e:?}"
    );
    ensure!(unit_condition(&d, 3).unwrap(), "3 does not divide eps_2");
    let u = QuadInt::new(321, 17, 1).unwrap();
    let tr = dennis_trace_quad(&u, 3).unwrap();
    ensure!(tr != 0, "trace vanishes");
    let e = find(reg, "quad.erratum.delta", &[("table", 1), ("n", 3), ("alpha", 17), ("b", -2)])
        .ok_or("no erratum entry for the printed 231")?;
    ensure!(e.paper_value == "231" && e.computed_value == "321" && e.verdict == Verdict::ReportOnly, "{e:?}");
    Ok(format!("eps = (430 + 24 sqrt 321)/2, N = 1, 3 | 24, trace {tr} mod 3; printed 231 filed as erratum"))
}

fn c15_determinism() -> Outcome {
    let scans: Vec<String> = [1, 4, 8]
        .iter()
        .map(|&w| serde_json::to_string(&scan_rp(1000, w)).unwrap())
        .collect();
    ensure!(scans[0] == scans[1] && scans[1] == scans[2], "scan output depends on workers");
    let searches: Vec<String> = [1, 4, 8]
        .iter()
        .map(|&w| serde_json::to_string(&torsion_search(3, 30, 30, w).unwrap()).unwrap())
        .collect();
    ensure!(searches[0] == searches[1] && searches[1] == searches[2], "search output depends on workers");
    Ok(format!("scan ({} bytes) and search ({} bytes) identical for 1, 4, 8 workers", scans[0].len(), searches[0].len()))
}

/// Criteria expected red, with the reason.
const KNOWN_RED: &[u32] = &[7];

#[test]
fn acceptance() {
    let reg = audit31();
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "gamma identity", c1_gamma()),
        (2, "leading trace coefficients", c2_leading()),
        (3, "trace not colinear with D(1 - l)", c3_noncolinear()),
        (4, "Mirimanoff basics", c4_mirimanoff()),
        (5, "circulant algebra", c5_circulant()),
        (6, "circulant and trace audit", c6_audit(&reg)),
        (7, "r_p scan", c7_scan(&reg)),
        (8, "Bernoulli and irregularity", c8_bernoulli()),
        (9, "Kummer congruences", c9_kummer_congruences()),
        (10, "Kummer logarithmic derivatives", c10_ell()),
        (11, "Mirimanoff identity audit", c11_identity(&reg)),
        (12, "triangular relation", c12_triangular()),
        (13, "quadratic tables", c13_quadratic()),
        (14, "real quadratic pipeline", c14_real(&reg)),
        (15, "determinism", c15_determinism()),
    ];
    let mut red = Vec::new();
    for (n, name, r) in &results {
        match r {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(why) => {
                println!("criterion {n:>2} FAIL  {name}: {why}");
                red.push(*n);
            }
        }
    }
    assert_eq!(red, KNOWN_RED, "red criteria differ from the documented set");
}
