//! Command-line front end for `ramsum-core`.
//!
//! [`run`] takes the argument list and two sinks and returns the process
//! exit code, so the whole surface is testable in-process:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | usage error |
//! | 2 | expression syntax error (message carries the byte offset) |
//! | 3 | domain error |
//! | 4 | internal-consistency failure |

pub mod record;
pub mod tables;
pub mod verify;

use clap::{Parser, Subcommand};
use ramsum_core::parse::parse_genfunc;
use ramsum_core::ramanujan::{gauge_expand, smoothed_sum, smoothed_sum_all, Diagnostics};
use ramsum_core::rational::parse_rational;
use ramsum_core::{Error, Fault, Method, NumberCache, Rational, SeriesFamily, SmoothedSum};
use record::{emit, terms, Format, Record, Report};
use std::ffi::OsString;
use std::io::Write;

#[derive(Parser, Debug)]
#[command(
    name = "ramsum",
    version,
    about = "Exact smoothed sums of divergent series"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Print selected values with the unreduced denominators used in the
    /// classic tables (text output only).
    #[arg(long, global = true)]
    pub paper_form: bool,
    /// Corrupt one memoized value before running, e.g. `bernoulli:12`.
    #[arg(long, global = true, hide = true, value_parser = parse_fault)]
    pub inject_fault: Option<Fault>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bernoulli number B_n (B_1 = -1/2).
    Bernoulli {
        #[arg(long)]
        n: usize,
    },
    /// Eulerian polynomial P_n(x).
    Eulerian {
        #[arg(long)]
        n: usize,
    },
    /// Gregory coefficient G_n, or (-1)^n G_n with --signed.
    Gregory {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        signed: bool,
    },
    /// Gregory polynomial G_m^(u), as a polynomial or at a rational u.
    GregoryPoly {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_q)]
        u: Option<Rational>,
    },
    /// Extended Gregory coefficient G~_n^s.
    Extgregory {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: usize,
    },
    /// Hirzebruch number h_k.
    Hirzebruch {
        #[arg(long)]
        k: u64,
    },
    /// Smoothed sum of a power or figurate series.
    Smooth {
        #[arg(value_parser = parse_family)]
        family: SeriesFamily,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = parse_q)]
        m: Option<Rational>,
        /// closed, asym, intuitive, regularize, bernoulli, or all.
        #[arg(long, default_value = "closed")]
        method: String,
    },
    /// Taylor coefficients a_0 .. a_(n-1) of a generating function.
    Coeffs {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        n: usize,
    },
    /// Laurent expansion of g(e^(-λ)) about λ = 0.
    Expand {
        #[arg(long)]
        expr: String,
        #[arg(long, required = true)]
        gauge: bool,
        /// Number of coefficients after the leading divergent one.
        #[arg(long)]
        order: i64,
    },
    /// Regenerate a reference table.
    Table {
        #[arg(value_parser = ["1", "4", "5"])]
        which: String,
    },
    /// Run self-checks; exits 4 if any fails.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
    },
}

fn parse_q(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational number: {s}"))
}

fn parse_family(s: &str) -> Result<SeriesFamily, String> {
    SeriesFamily::from_tag(s).ok_or_else(|| format!("unknown family {s}; use power or figurate"))
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |i: usize| -> Result<usize, String> {
        parts
            .get(i)
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| format!("bad fault spec {s}"))
    };
    // the corrupted value is simply wrong; which wrong value does not matter
    let bogus = Rational::from_integer(7919.into());
    match parts[0] {
        "bernoulli" => Ok(Fault::Bernoulli {
            n: num(1)?,
            value: bogus,
        }),
        "gregory" => Ok(Fault::Gregory {
            n: num(1)?,
            value: bogus,
        }),
        "extgregory" => Ok(Fault::ExtendedGregory {
            s: num(1)? as u32,
            n: num(2)?,
            value: bogus,
        }),
        "eulerian" => Ok(Fault::EulerianCoeff {
            n: num(1)?,
            power: num(2)?,
            value: bogus,
        }),
        _ => Err(format!("bad fault spec {s}")),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } => 2,
        Error::Consistency(_) => 4,
        _ => 3,
    }
}

fn show(v: &Rational) -> String {
    v.to_string()
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut cache = NumberCache::new();
    if let Some(fault) = cli.inject_fault.clone() {
        cache.inject_fault(fault);
    }
    let (report, code) = match execute(&cli, &mut cache) {
        Ok(done) => done,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    if let Err(e) = emit(&report, cli.format, out) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    if code == 4 {
        let _ = writeln!(err, "error: verification failed");
    }
    code
}

fn execute(cli: &Cli, cache: &mut NumberCache) -> ramsum_core::Result<(Report, i32)> {
    let mut report = Report::default();
    match &cli.command {
        Command::Bernoulli { n } => {
            let v = cache.bernoulli(*n);
            report.push(
                Record::new("bernoulli").param("n", n).value(*n as i64, &v),
                format!("B_{n} = {v}"),
            );
        }
        Command::Eulerian { n } => {
            let p = cache.eulerian_polynomial(*n);
            let mut rec = Record::new("eulerian").param("n", n);
            for (i, c) in p.coeffs().iter().enumerate() {
                rec = rec.value(i as i64, c);
            }
            report.push(rec, format!("P_{n}(x) = {p}"));
        }
        Command::Gregory { n, signed } => {
            let v = cache.gregory_coefficient(*n, *signed);
            let name = if *signed {
                format!("(-1)^{n} G_{n}")
            } else {
                format!("G_{n}")
            };
            let rec = Record::new("gregory")
                .param("n", n)
                .param("signed", signed)
                .value(*n as i64, &v);
            report.push(rec, format!("{name} = {v}"));
        }
        Command::GregoryPoly { m, u } => {
            let g = cache.gregory_polynomial(*m);
            let rec = Record::new("gregory-poly").param("m", m);
            match u {
                Some(u) => {
                    let v = g.eval(u)?;
                    report.push(
                        rec.param("u", u).value(*m as i64, &v),
                        format!("G_{m}^({u}) = {v}"),
                    );
                }
                None => {
                    // u G_m^(u) is a polynomial in u for every m
                    let mut rec = rec.param("scaled_by", "u");
                    for (i, c) in g.scaled().coeffs().iter().enumerate() {
                        rec = rec.value(i as i64, c);
                    }
                    let line = match g.polynomial() {
                        Some(p) => format!("G_{m}^(u) = {}", p.display_with("u")),
                        None => format!("G_{m}^(u) = {}/u", g.scaled().coeff(0)),
                    };
                    report.push(rec, line);
                }
            }
        }
        Command::Extgregory { s, n } => {
            let v = cache.extended_gregory(*s, *n);
            let text = if cli.paper_form {
                let h = ramsum_core::numbers::hirzebruch(*n as u64);
                match u64::try_from(h) {
                    Ok(h) => tables::over_power(&v, h, *s),
                    Err(_) => show(&v),
                }
            } else {
                show(&v)
            };
            let rec = Record::new("extgregory")
                .param("s", s)
                .param("n", n)
                .value(*n as i64, &v);
            report.push(rec, format!("G~_{n}^{s} = {text}"));
        }
        Command::Hirzebruch { k } => {
            let h = Rational::from_integer(ramsum_core::numbers::hirzebruch(*k));
            report.push(
                Record::new("hirzebruch").param("k", k).value(*k as i64, &h),
                format!("h_{k} = {h}"),
            );
        }
        Command::Smooth {
            family,
            k,
            m,
            method,
        } => {
            let m = m
                .clone()
                .unwrap_or_else(|| Rational::from_integer(1.into()));
            let sums = if method == "all" {
                smoothed_sum_all(cache, *family, *k, &m)?
            } else {
                let me = Method::from_tag(method).ok_or_else(|| {
                    Error::Domain(format!(
                        "unknown method {method}; use closed, asym, intuitive, regularize, bernoulli or all"
                    ))
                })?;
                vec![smoothed_sum(cache, *family, *k, &m, me)?]
            };
            for s in &sums {
                let (rec, line) = smooth_record(*family, *k, &m, s, cli.paper_form);
                report.push(rec, line);
            }
        }
        Command::Coeffs { expr, n } => {
            let g = parse_genfunc(expr)?;
            let cs = g.taylor_coeffs(*n)?;
            let mut rec = Record::new("coeffs").param("expr", g.render());
            for (i, c) in cs.iter().enumerate() {
                rec = rec.value(i as i64, c);
            }
            let list: Vec<String> = cs.iter().map(show).collect();
            report.push(rec, format!("{}: {}", g.render(), list.join(", ")));
        }
        Command::Expand {
            expr,
            gauge: _,
            order,
        } => {
            let g = parse_genfunc(expr)?;
            let e = gauge_expand(&g, *order)?;
            let rec = Record {
                divergent: Some(terms(e.divergent.iter().map(|(&p, c)| (p, c)))),
                constant: Some((&e.constant).into()),
                tail: Some(terms(
                    e.tail.iter().enumerate().map(|(i, c)| (i as i64 + 1, c)),
                )),
                ..Record::new("expand")
                    .param("expr", g.render())
                    .param("order", order)
            };
            let mut lines = vec![format!("{} at x = e^(-λ):", g.render())];
            for (p, c) in &e.divergent {
                lines.push(format!("  λ^{p}: {c}"));
            }
            lines.push(format!("  constant: {}", e.constant));
            for (i, c) in e.tail.iter().enumerate() {
                lines.push(format!("  λ^{}: {c}", i + 1));
            }
            report.push(rec, lines.join("\n"));
        }
        Command::Table { which } => {
            let rec = match which.as_str() {
                "1" => tables::table1(cache)?,
                "4" => tables::table4(cache, cli.paper_form)?,
                _ => tables::table5(cache, cli.paper_form)?,
            };
            let lines = tables::render(rec.table.as_ref().expect("table record"));
            report.push(rec, lines.join("\n"));
        }
        Command::Verify { suite } => {
            let checks = verify::run(*suite, cache);
            let failed: Vec<&record::Check> = checks.iter().filter(|c| !c.passed).collect();
            let mut lines = vec![format!(
                "verify {}: {} checks, {} failed",
                suite.tag(),
                checks.len(),
                failed.len()
            )];
            for c in &failed {
                lines.push(format!(
                    "  FAIL {}: {}",
                    c.name,
                    c.detail.as_deref().unwrap_or("")
                ));
            }
            let code = if failed.is_empty() { 0 } else { 4 };
            let rec = Record {
                checks: Some(checks.clone()),
                ..Record::new("verify").param("suite", suite.tag())
            };
            report.push(rec, lines.join("\n"));
            return Ok((report, code));
        }
    }
    Ok((report, 0))
}

fn smooth_record(
    family: SeriesFamily,
    k: u32,
    m: &Rational,
    s: &SmoothedSum,
    paper_form: bool,
) -> (Record, String) {
    let mut rec = Record::new("smooth")
        .param("family", family.tag())
        .param("k", k)
        .param("m", m)
        .value(i64::from(k), &s.value);
    rec.method = Some(s.method.tag().to_string());
    rec.constant = Some((&s.value).into());
    match &s.diagnostics {
        Diagnostics::Expansion(e) => {
            rec.params.insert("variable".into(), "λ".into());
            rec.divergent = Some(terms(e.divergent.iter().map(|(&p, c)| (p, c))));
        }
        Diagnostics::Regularization(r) => {
            rec.params.insert("variable".into(), "ε".into());
            rec.divergent = Some(terms(r.divergent.iter().map(|(p, c, _)| (*p, c))));
        }
        _ => {}
    }
    let value =
        if paper_form && family == SeriesFamily::Figurate && m == &Rational::from_integer(1.into())
        {
            tables::figurate_paper_form(k, &s.value)
        } else {
            show(&s.value)
        };
    let line = format!("{} k={k} m={m} {}: {value}", family.tag(), s.method.tag());
    (rec, line)
}
