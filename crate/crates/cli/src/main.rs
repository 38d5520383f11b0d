mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dennis_core::audit::{audit_all, AuditOptions, Verdict};
use dennis_core::cyclo::{check_z1_trace, AlphaConvention};
use dennis_core::kummer::{
    gamma_series_check, log_derivatives, mirimanoff_identity_audit, triangular_relation, CycloElement,
    EllLayout,
};
use dennis_core::mirimanoff::{
    bernoulli_mod_p, circulant, dim_v, kummer_congruence_solutions, scan_rp, MirimanoffRecord,
};
use dennis_core::modp::primes_in;
use dennis_core::quadratic::search::CertVerdict;
use dennis_core::quadratic::{
    certify_table_entry, fundamental_unit, torsion_search, unit_condition, QuadDisc,
};
use dennis_core::{BigInt, Error, Fp, Prime};

use output::{emit, Format};

#[derive(Parser)]
#[command(name = "dennis", version, about = "Dennis-trace scans, tables and audits")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// One JSON object per line.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Comma-separated with a header row.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads.
    #[arg(long, global = true, env = "DENNIS_JOBS", default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Exit 1 when an asserted check fails.
    #[arg(long, global = true)]
    strict: bool,
    /// Count report-only claims as asserted.
    #[arg(long, global = true)]
    assert: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// r_p = min_t r_p(t) for every prime 5 <= p < pmax.
    ScanRp {
        #[arg(long)]
        pmax: u64,
    },
    /// M_{2k+1}(t), 1 <= k <= (p-1)/2, and r_p(t).
    Mirimanoff {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// The circulant C(x), its spectrum and rank.
    Circulant {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long, default_value = "literal")]
        convention: AlphaConvention,
    },
    /// dim V(x) and the rank of the traces of z_k(x); every x when --x is absent.
    Dimv {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<i64>,
    },
    /// B_k mod p for a prime, or the irregularity index of every prime below --pmax.
    Bernoulli {
        #[arg(long, required_unless_present = "pmax", conflicts_with = "pmax")]
        p: Option<u64>,
        #[arg(long)]
        pmax: Option<u64>,
    },
    /// Solutions t of Kummer's congruences mod p.
    KummerSolutions {
        #[arg(long)]
        p: u64,
    },
    /// l_1, ..., l_{p-2} of x - (x-1)zeta, or of sum a_i zeta^i.
    Logderiv {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "coeffs")]
        x: Option<i64>,
        /// Comma-separated a_0, a_1, ...
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "x")]
        coeffs: Option<Vec<i64>>,
    },
    /// Series coefficients of D(z'(x)) against the closed form, all x.
    GammaCheck {
        #[arg(long)]
        p: u64,
    },
    /// Which candidate right-hand side matches l_{2k+1}(x - y zeta) everywhere.
    MiriIdentity {
        #[arg(long)]
        p: u64,
    },
    /// A with l(x) = A D(x) for all x.
    Triangular {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "from-one")]
        layout: EllLayout,
    },
    /// Exact D(z_1(x)) in the f-basis against -s(x-1)(2, alpha_1, ...).
    TraceCyclo {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
    },
    /// Coprime (alpha, b) with alpha^2 - 4b^n a fundamental discriminant.
    QuadSearch {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        alpha_max: i64,
        #[arg(long)]
        b_max: i64,
    },
    /// Order of the witness form (b, alpha, b^{n-1}).
    QuadCertify {
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Fundamental unit of a real quadratic field.
    FundamentalUnit {
        #[arg(long)]
        delta: i64,
        /// Also test n | eps_2.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Every registered claim.
    AuditAll {
        #[arg(long, default_value_t = 31)]
        pmax: u64,
        #[arg(long)]
        scan_pmax: Option<u64>,
    },
}

/// Rows to print and whether every asserted check held.
struct Outcome {
    rows: Vec<Value>,
    ok: bool,
}

impl Outcome {
    fn rows(rows: Vec<Value>) -> Self {
        Outcome { rows, ok: true }
    }

    fn one(row: Value, ok: bool) -> Self {
        Outcome { rows: vec![row], ok }
    }
}

fn prime(p: u64) -> Result<Prime, Error> {
    Prime::new(p)
}

fn vals(v: &[Fp]) -> Vec<u64> {
    v.iter().map(|e| e.value()).collect()
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("record serializes")
}

fn run(cmd: Command, g: &Global) -> Result<Outcome, Error> {
    let jobs = g.jobs as usize;
    Ok(match cmd {
        Command::ScanRp { pmax } => Outcome::rows(scan_rp(pmax, jobs).iter().map(to_value).collect()),
        Command::Mirimanoff { p, t } => {
            let p = prime(p)?;
            let t = p.elem(t);
            dennis_core::mirimanoff::check_t(t)?;
            let rec = MirimanoffRecord::new(t);
            Outcome::one(
                json!({"p": rec.p, "t": rec.t, "zero_count": rec.zero_count(), "r_p_of_t": rec.r_p_of_t, "values": vals(&rec.values)}),
                true,
            )
        }
        Command::Circulant { p, x, convention } => {
            let c = circulant(prime(p)?.elem(x), convention)?;
            let s = c.spectrum();
            let gauss = c.gaussian_rank();
            Outcome::one(
                json!({
                    "p": p, "x": c.x, "s": c.s, "convention": convention.name(),
                    "first_row": vals(&c.first_row), "eigenvalues": s.sorted(),
                    "rank": s.rank, "gaussian_rank": gauss, "row_sum": c.row_sum().value(),
                }),
                s.rank == gauss,
            )
        }
        Command::Dimv { p, x } => {
            let p = prime(p)?;
            let xs: Vec<Fp> = match x {
                Some(x) => vec![p.elem(x)],
                None => p.elements().skip(2).collect(),
            };
            let mut rows = Vec::new();
            let mut ok = true;
            for x in xs {
                let d = dim_v(x)?;
                ok &= d.trace_rank <= d.dim_v;
                rows.push(to_value(&d));
            }
            Outcome { rows, ok }
        }
        Command::Bernoulli { p, pmax } => match (p, pmax) {
            (Some(p), _) => {
                let t = bernoulli_mod_p(prime(p)?);
                Outcome::one(
                    json!({"p": p, "irregularity_index": t.irregularity_index(), "irregular": t.irregular, "values": vals(&t.values)}),
                    true,
                )
            }
            (None, Some(pmax)) => Outcome::rows(
                primes_in(5, pmax)
                    .into_iter()
                    .map(|p| {
                        let t = bernoulli_mod_p(p);
                        json!({"p": p.get(), "irregularity_index": t.irregularity_index(), "irregular": t.irregular})
                    })
                    .collect(),
            ),
            (None, None) => unreachable!("clap requires one of --p, --pmax"),
        },
        Command::KummerSolutions { p } => {
            let s = kummer_congruence_solutions(prime(p)?);
            let ok = s.contains(&(p - 1));
            Outcome::one(json!({"p": p, "solutions": s}), ok)
        }
        Command::Logderiv { p, x, coeffs } => {
            let p = prime(p)?;
            let z = match (x, coeffs) {
                (Some(x), _) => {
                    let x = p.elem(x);
                    CycloElement::binomial(x, x - p.one(), 1)
                }
                (None, Some(c)) => CycloElement::from_i64(p, &c),
                (None, None) => unreachable!("clap requires one of --x, --coeffs"),
            };
            let ell = log_derivatives(&z)?;
            Outcome::one(
                json!({"p": p.get(), "coeffs": vals(z.coeffs()), "ell": vals(&ell.entries)}),
                true,
            )
        }
        Command::GammaCheck { p } => {
            let holds = gamma_series_check(prime(p)?);
            Outcome::one(json!({"p": p, "holds": holds}), holds)
        }
        Command::MiriIdentity { p } => {
            let a = mirimanoff_identity_audit(prime(p)?)?;
            let ok = a.even_vanish && a.doubling && a.distinct_uniform == 1;
            let counts: Vec<String> = a.match_counts.iter().map(|(c, n)| format!("{}={n}", c.name())).collect();
            let uniform: Vec<&str> = a.uniform.iter().map(|c| c.name()).collect();
            Outcome::one(
                json!({
                    "p": a.p, "points": a.points, "match_counts": counts, "uniform": uniform,
                    "distinct_uniform": a.distinct_uniform, "even_vanish": a.even_vanish,
                    "doubling": a.doubling, "literal_mismatches": a.literal_mismatches.len(),
                }),
                ok,
            )
        }
        Command::Triangular { p, layout } => {
            let t = triangular_relation(prime(p)?, layout)?;
            let row = json!({
                "p": t.p, "layout": layout.name(), "exists": t.exists, "unique": t.unique,
                "d_rank": t.d_rank, "lower_triangular": t.lower_triangular,
                "upper_triangular": t.upper_triangular, "invertible": t.invertible,
                "matrix": t.matrix.as_ref().map(|m| m.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>()),
            });
            let ok = p > 13 || (t.exists && t.invertible && (t.lower_triangular || t.upper_triangular));
            Outcome::one(row, ok)
        }
        Command::TraceCyclo { p, x } => {
            let c = check_z1_trace(prime(p)?.elem(x))?;
            let mut row = json!({
                "p": c.p, "x": c.x, "s": c.s,
                "minus": vals(&c.exact.minus), "plus": vals(&c.exact.plus),
            });
            for ((conv, claimed), (_, m)) in c.claimed.iter().zip(&c.matches) {
                row[format!("claimed_{}", conv.name())] = json!(vals(claimed));
                row[format!("match_{}", conv.name())] = json!(m);
            }
            Outcome::one(row, c.exact.plus_is_zero())
        }
        Command::QuadSearch { n, alpha_max, b_max } => Outcome::rows(
            torsion_search(n, alpha_max, b_max, jobs)?
                .iter()
                .map(|w| {
                    let mut v = to_value(w);
                    v["nonsquare"] = json!(w.nonsquare.iter().map(|(m, ok)| format!("{m}:{ok}")).collect::<Vec<_>>());
                    v
                })
                .collect(),
        ),
        Command::QuadCertify { delta, n, alpha, b } => {
            let c = certify_table_entry(&BigInt::from(delta), n, alpha, b)?;
            let mut v = to_value(&c);
            v["form"] = json!(format!("({},{},{})", c.form.a, c.form.b, c.form.c));
            Outcome::one(v, c.verdict == CertVerdict::Pass)
        }
        Command::FundamentalUnit { delta, n } => {
            let d = QuadDisc::new(delta)?;
            let e = fundamental_unit(&d)?;
            let mut row = json!({
                "delta": delta, "eps1": e.alpha.to_string(), "eps2": e.beta.to_string(),
                "norm": e.norm().to_string(),
            });
            if let Some(n) = n {
                row["n"] = json!(n);
                row["unit_condition"] = json!(unit_condition(&d, n)?);
            }
            Outcome::one(row, true)
        }
        Command::AuditAll { pmax, scan_pmax } => {
            let reg = audit_all(&AuditOptions {
                p_max: pmax,
                scan_p_max: scan_pmax.unwrap_or(pmax),
                workers: jobs,
                seed: g.seed,
                promote: g.assert,
            })?;
            let rows = reg
                .entries()
                .map(|e| {
                    let mut v = to_value(e);
                    if !g.json {
                        let inputs: Vec<String> = e.inputs.iter().map(|(k, x)| format!("{k}={x}")).collect();
                        v["inputs"] = json!(inputs.join(";"));
                        // text columns stay comma-free
                        for k in ["paper_anchor", "paper_value", "computed_value", "notes"] {
                            v[k] = json!(v[k].as_str().unwrap_or_default().replace(',', ";"));
                        }
                    }
                    v
                })
                .collect();
            let s = reg.summarize();
            eprintln!(
                "{} entries: {} pass, {} fail, {} report-only ({} not holding)",
                s.total(),
                s.pass,
                s.fail,
                s.report_only,
                s.report_only_mismatch
            );
            debug_assert_eq!(reg.entries().filter(|e| e.verdict == Verdict::Fail).count(), s.fail);
            Outcome { rows, ok: reg.strict_ok() }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = if cli.global.json {
        Format::Json
    } else if cli.global.csv {
        Format::Csv
    } else {
        Format::Table
    };
    match run(cli.command, &cli.global) {
        Ok(out) => {
            if let Err(e) = emit(&out.rows, format) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if cli.global.strict && !out.ok {
                eprintln!("strict: a checked claim failed");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
