//! Command-line front end. [`run`] is a pure function of its arguments so it
//! can be tested without spawning processes.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclotomy::{value_counts, ClassMap, ClassSet};
use crate::error::Result;
use crate::finite_field::FieldTable;
use crate::gauss_theory::{
    class_number, classify_index2, gauss_sum_numeric, index2_gauss_prime_power,
    index2_gauss_two_primes, mult_order, semiprimitive_gauss,
};
use crate::search::{
    pairs_tsv, scan_pairs, scan_triples, triples_tsv, verify_named_example, DEFAULT_PAIR_BOUNDS,
    DEFAULT_TRIPLE_BOUNDS,
};
use crate::srg::{difference_count_oracle, srg_from_connection_sums, CertificateInputs};

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "cyclosrg",
    version,
    about = "Strongly regular Cayley graphs from cyclotomic classes"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "pretty")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dump the log, antilog and trace tables of F_{p^f}.
    BuildField {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        f: u32,
        /// Coefficients c_0,...,c_f of a monic irreducible modulus.
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u64>>,
    },
    /// Exact Gauss periods of the N cyclotomic classes.
    Periods {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        n: usize,
    },
    /// Decide whether a union of classes gives a strongly regular graph.
    VerifySrg {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        classes: Vec<usize>,
        /// Also run the difference-count oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Run one of the built-in examples end to end.
    VerifyExample {
        #[arg(long)]
        name: String,
    },
    /// Gauss sum of order N over F_{p^r} in the semi-primitive case.
    GaussSemiprimitive {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Quadratic-field Gauss sum in the index-2 case.
    GaussIndex2 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        p1: u64,
        #[arg(long)]
        p2: Option<u64>,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Floating-point Gauss sum for chi(gamma) = exp(2 pi i j / N).
    GaussNumeric {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
    },
    /// Class number of Q(sqrt(-d)) for squarefree d.
    ClassNumber {
        #[arg(long)]
        d: u64,
    },
    /// Multiplicative order of p modulo n.
    MultOrder {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
    /// Index-2 classification of (p, N).
    ClassifyIndex2 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
    /// Scan prime pairs (p, p1) for the prime-power family.
    ScanPairs {
        #[arg(long, default_value_t = DEFAULT_PAIR_BOUNDS.0)]
        p_max: u64,
        #[arg(long, default_value_t = DEFAULT_PAIR_BOUNDS.1)]
        p1_max: u64,
    },
    /// Scan prime triples (p, p1, p2) for the two-prime family.
    ScanTriples {
        #[arg(long, default_value_t = DEFAULT_TRIPLE_BOUNDS.0)]
        p_max: u64,
        #[arg(long, default_value_t = DEFAULT_TRIPLE_BOUNDS.1)]
        n_max: u64,
    },
}

/// Text plus whether the checked property held.
struct Rendered {
    text: String,
    holds: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, holds: true }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command, cli.format) {
        Ok(r) => Outcome {
            code: if r.holds { 0 } else { 1 },
            stdout: r.text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_json<T: Serialize>(x: &T) -> String {
    // Value's map is ordered by key, which makes the output stable
    let v = serde_json::to_value(x).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(command: Command, format: Format) -> Result<Rendered> {
    match command {
        Command::BuildField { p, f, modulus } => {
            let field = match modulus {
                Some(m) => FieldTable::with_modulus(p, &m)?,
                None => FieldTable::build(p, f)?,
            };
            Ok(Rendered::ok(render_field(&field, format)))
        }
        Command::Periods { p, f, n } => {
            let field = FieldTable::build(p, f)?;
            let cm = ClassMap::new(&field, n)?;
            let periods = cm.periods()?;
            let text = match format {
                Format::Json => to_json(&json!({
                    "p": p,
                    "f": f,
                    "N": n,
                    "class_size": cm.class_size(),
                    "periods": periods.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })),
                Format::Tsv => {
                    let mut s = String::from("a\teta\n");
                    for (a, eta) in periods.iter().enumerate() {
                        let _ = writeln!(s, "{a}\t{eta}");
                    }
                    s
                }
                Format::Pretty => {
                    let mut s = format!(
                        "F_{}^{}, N = {}, class size {} (z = exp(2 pi i/{}))\n",
                        p,
                        f,
                        n,
                        cm.class_size(),
                        p
                    );
                    for (a, eta) in periods.iter().enumerate() {
                        let _ = writeln!(s, "eta_{a} = {eta}");
                    }
                    s
                }
            };
            Ok(Rendered::ok(text))
        }
        Command::VerifySrg {
            p,
            f,
            n,
            classes,
            oracle,
        } => verify_srg(p, f, n, classes, oracle, format),
        Command::VerifyExample { name } => {
            let report = verify_named_example(&name)?;
            let mut record = report.to_json();
            if let Some(cert) = record["certificate"].as_object().cloned() {
                // the certificate fields sit at the top level
                record.as_object_mut().unwrap().extend(cert);
            }
            record["srg"] = json!(report.certificate.is_some());
            let text = match format {
                Format::Json => to_json(&record),
                Format::Tsv => {
                    let mut s = String::from(
                        "name\tv\tk\tlambda\tmu\tr\ts\tmult_r\tmult_s\tpredicted\toracle\n",
                    );
                    let c = &record;
                    let _ = writeln!(
                        s,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        name,
                        c["v"],
                        c["k"],
                        c["lambda"],
                        c["mu"],
                        c["r"],
                        c["s"],
                        c["mult_r"],
                        c["mult_s"],
                        report.prediction_matches,
                        c["oracle_agrees"]
                    );
                    s
                }
                Format::Pretty => {
                    let mut s = format!("{name}: ");
                    match &report.certificate {
                        Some(c) => {
                            let (mr, ms) = c.multiplicities();
                            let _ = writeln!(
                                s,
                                "srg({}, {}, {}, {}), eigenvalues {} ^{} and {} ^{}",
                                c.v, c.k, c.lambda, c.mu, record["r"], mr, record["s"], ms
                            );
                        }
                        None => s.push_str("not strongly regular\n"),
                    }
                    let _ = writeln!(s, "closed form agrees: {}", report.prediction_matches);
                    match report.oracle_agrees() {
                        Some(a) => {
                            let _ = writeln!(s, "oracle agrees: {a}");
                        }
                        None => s.push_str("oracle skipped (field too large)\n"),
                    }
                    s
                }
            };
            Ok(Rendered {
                text,
                holds: report.is_consistent(),
            })
        }
        Command::GaussSemiprimitive { p, n, r } => {
            let g = semiprimitive_gauss(p, n, r)?;
            let value = g.value().to_string();
            let text = match format {
                Format::Json => {
                    let mut v = serde_json::to_value(&g).expect("serializable");
                    v["value"] = json!(value);
                    to_json(&v)
                }
                Format::Tsv => format!(
                    "p\tn\tr\tt\ts\tsign\tvalue\n{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    g.p, g.n, g.r, g.t, g.s, g.sign, value
                ),
                Format::Pretty => format!(
                    "g = {}{}^{} = {}\n",
                    if g.sign < 0 { "-" } else { "" },
                    g.p,
                    g.half_r,
                    value
                ),
            };
            Ok(Rendered::ok(text))
        }
        Command::GaussIndex2 { p, p1, p2, m } => {
            let (g, n) = match p2 {
                Some(p2) => (index2_gauss_two_primes(p, p1, p2, m)?, p1.pow(m) * p2),
                None => (index2_gauss_prime_power(p, p1, m)?, p1.pow(m)),
            };
            let case = classify_index2(p, n)?;
            let text = match format {
                Format::Json => to_json(&json!({
                    "inputs": { "p": p, "p1": p1, "p2": p2, "m": m, "N": n },
                    "case": case.tag(),
                    "f": g.f,
                    "h": g.h,
                    "h0": g.h0,
                    "b": g.b,
                    "c_abs": g.c_abs,
                    "delta": g.delta,
                })),
                Format::Tsv => format!(
                    "p\tN\tcase\tf\th\th0\tb\tc_abs\tdelta\n{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    p,
                    n,
                    case.tag(),
                    g.f,
                    g.h,
                    g.h0,
                    g.b,
                    g.c_abs,
                    g.delta
                ),
                Format::Pretty => format!(
                    "g = ({} + {} sqrt(-{})) / 2 * {}^{}  (f = {}, h = {}, {})\n",
                    g.b,
                    g.c_abs,
                    g.delta,
                    p,
                    g.h0,
                    g.f,
                    g.h,
                    case.tag()
                ),
            };
            Ok(Rendered::ok(text))
        }
        Command::GaussNumeric { p, f, n, j } => {
            let field = FieldTable::build(p, f)?;
            let g = gauss_sum_numeric(&field, n, j)?;
            let text = match format {
                Format::Json => to_json(&g),
                Format::Tsv => format!(
                    "re\tim\terror_bound\n{}\t{}\t{}\n",
                    g.re, g.im, g.error_bound
                ),
                Format::Pretty => format!(
                    "g = {:.9} + {:.9} i  (|g|^2 = {:.9})\n",
                    g.re,
                    g.im,
                    g.norm_sqr()
                ),
            };
            Ok(Rendered::ok(text))
        }
        Command::ClassNumber { d } => {
            let h = class_number(d)?;
            let text = match format {
                Format::Json => to_json(&json!({ "d": d, "h": h })),
                Format::Tsv => format!("d\th\n{d}\t{h}\n"),
                Format::Pretty => format!("{h}\n"),
            };
            Ok(Rendered::ok(text))
        }
        Command::MultOrder { p, n } => {
            let ord = mult_order(p, n)?;
            let text = match format {
                Format::Json => to_json(&json!({ "p": p, "n": n, "order": ord })),
                Format::Tsv => format!("p\tn\torder\n{p}\t{n}\t{ord}\n"),
                Format::Pretty => format!("{ord}\n"),
            };
            Ok(Rendered::ok(text))
        }
        Command::ClassifyIndex2 { p, n } => {
            let case = classify_index2(p, n)?;
            let text = match format {
                Format::Json => to_json(&case),
                Format::Tsv => format!("p\tN\tcase\n{p}\t{n}\t{}\n", case.tag()),
                Format::Pretty => format!("{}\n", case.tag()),
            };
            Ok(Rendered {
                text,
                holds: case.is_index2(),
            })
        }
        Command::ScanPairs { p_max, p1_max } => {
            let report = scan_pairs(p_max, p1_max);
            let text = match format {
                Format::Json => to_json(&report),
                Format::Tsv => pairs_tsv(&report),
                Format::Pretty => {
                    let mut s = format!(
                        "{} hits, {} rejected (p <= {}, p1 <= {})\n",
                        report.hits.len(),
                        report.rejections.len(),
                        p_max,
                        p1_max
                    );
                    for h in &report.hits {
                        let w = h.witness.as_ref().expect("hits carry witnesses");
                        let _ =
                            writeln!(s, "(p, p1) = ({}, {}): h = {}, b = {}", h.p, h.p1, w.h, w.b);
                    }
                    s
                }
            };
            Ok(Rendered::ok(text))
        }
        Command::ScanTriples { p_max, n_max } => {
            let report = scan_triples(p_max, n_max);
            let text = match format {
                Format::Json => to_json(&report),
                Format::Tsv => triples_tsv(&report),
                Format::Pretty => {
                    let mut s = format!(
                        "{} hits, {} rejected (p <= {}, p1 p2 <= {})\n",
                        report.hits.len(),
                        report.rejections.len(),
                        p_max,
                        n_max
                    );
                    for h in &report.hits {
                        let w = h.witness.as_ref().expect("hits carry witnesses");
                        let _ = writeln!(
                            s,
                            "(p, p1, p2) = ({}, {}, {}): h = {}, b = {}",
                            h.p, h.p1, h.p2, w.h, w.b
                        );
                    }
                    s
                }
            };
            Ok(Rendered::ok(text))
        }
    }
}

fn render_field(field: &FieldTable, format: Format) -> String {
    let log = |x: usize| {
        let l = field.log_table()[x];
        (l != u32::MAX).then_some(l)
    };
    match format {
        Format::Json => to_json(&json!({
            "p": field.p(),
            "f": field.f(),
            "q": field.q(),
            "modulus": field.modulus(),
            "gamma": field.gamma(),
            "antilog": field.antilog_table(),
            "log": (0..field.q()).map(log).collect::<Vec<_>>(),
            "trace": field.trace_table(),
        })),
        Format::Tsv => {
            let mut s = String::from("x\tlog\ttrace\n");
            for x in 0..field.q() {
                let l = log(x).map_or_else(|| "-".to_string(), |l| l.to_string());
                let _ = writeln!(s, "{x}\t{l}\t{}", field.trace_table()[x]);
            }
            s
        }
        Format::Pretty => format!(
            "F_{}^{} (q = {}), modulus coefficients {:?} (constant term first), gamma = {}\n",
            field.p(),
            field.f(),
            field.q(),
            field.modulus(),
            field.gamma()
        ),
    }
}

fn verify_srg(
    p: u64,
    f: u32,
    n: usize,
    classes: Vec<usize>,
    run_oracle: bool,
    format: Format,
) -> Result<Rendered> {
    let field = FieldTable::build(p, f)?;
    let cm = ClassMap::new(&field, n)?;
    let set = ClassSet::new(n, classes)?;
    let inputs = CertificateInputs {
        p,
        p1: None,
        p2: None,
        m: None,
        n: n as u64,
        d: set.indices().to_vec(),
    };
    let sums = cm.connection_sums(&set)?;
    let values: Vec<Value> = value_counts(&sums)
        .iter()
        .map(|(v, c)| json!({ "value": v.to_string(), "classes": c }))
        .collect();
    let cert = srg_from_connection_sums(&cm, &set)?;
    let oracle = if run_oracle {
        Some(difference_count_oracle(&cm, &set)?)
    } else {
        None
    };
    let agrees = oracle.as_ref().map(|o| match (o, &cert) {
        (Some(a), Some(b)) => a.same_parameters(b),
        (None, None) => true,
        _ => false,
    });
    let mut record = match &cert {
        Some(c) => c.to_json(&inputs),
        None => json!({ "inputs": inputs }),
    };
    record["srg"] = json!(cert.is_some());
    record["values"] = json!(values);
    if let Some(o) = &oracle {
        record["oracle"] = json!(o.as_ref().map(|c| c.to_json(&inputs)));
        record["oracle_agrees"] = json!(agrees);
    }
    let text = match format {
        Format::Json => to_json(&record),
        Format::Tsv => {
            let mut s = String::from("srg\tv\tk\tlambda\tmu\tr\ts\tmult_r\tmult_s\n");
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                cert.is_some(),
                record.get("v").unwrap_or(&Value::Null),
                record.get("k").unwrap_or(&Value::Null),
                record.get("lambda").unwrap_or(&Value::Null),
                record.get("mu").unwrap_or(&Value::Null),
                record.get("r").unwrap_or(&Value::Null),
                record.get("s").unwrap_or(&Value::Null),
                record.get("mult_r").unwrap_or(&Value::Null),
                record.get("mult_s").unwrap_or(&Value::Null),
            );
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            match &cert {
                Some(c) => {
                    let _ = writeln!(s, "srg({}, {}, {}, {})", c.v, c.k, c.lambda, c.mu);
                    if c.degenerate {
                        s.push_str("warning: mu = 0, disjoint union of cliques\n");
                    }
                }
                None => s.push_str("not strongly regular\n"),
            }
            for (v, c) in value_counts(&sums) {
                let _ = writeln!(s, "  {v}  ({c} classes)");
            }
            if let Some(a) = agrees {
                let _ = writeln!(s, "oracle agrees: {a}");
            }
            s
        }
    };
    Ok(Rendered {
        text,
        holds: cert.is_some() && agrees != Some(false),
    })
}
