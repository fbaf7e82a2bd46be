//! The reference tables: power sums, figurate sums, extended Gregory
//! coefficients.

use crate::record::{Cell, Record, Table};
use num_bigint::BigInt;
use num_traits::Pow;
use ramsum_core::numbers::hirzebruch;
use ramsum_core::ramanujan::{
    closed_figurate, closed_power_sum, figurate_gf, gauge_expand, power_gf,
};
use ramsum_core::{NumberCache, Polynomial, Rational, Result};

const TERMS: usize = 7;

/// Renders `v` as `n/d^s` with the given `d`, the way tables of these
/// numbers are usually printed. Falls back to the reduced form when `v d^s`
/// is not an integer.
pub fn over_power(v: &Rational, d: u64, s: u32) -> String {
    let scale = Rational::from_integer(Pow::pow(BigInt::from(d), s));
    let n = v * &scale;
    if !n.is_integer() {
        return v.to_string();
    }
    match (d, s) {
        (1, _) => n.to_string(),
        (_, 1) => format!("{n}/{d}"),
        _ => format!("{n}/{d}^{s}"),
    }
}

/// Unreduced denominators under which the figurate sums are often quoted.
pub fn figurate_paper_form(k: u32, v: &Rational) -> String {
    match k {
        5 => over_power(v, 1440, 1),
        7 => over_power(v, 120960, 1),
        _ => v.to_string(),
    }
}

fn sequence(coeffs: &[Rational]) -> String {
    let mut s: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
    s.push("...".into());
    s.join(" ")
}

fn times_x(p: &Polynomial) -> String {
    if *p == Polynomial::one() {
        "x".into()
    } else {
        format!("x*({})", p)
    }
}

fn pole(k: u32) -> String {
    if k == 1 {
        "(1-x)".into()
    } else {
        format!("(1-x)^{k}")
    }
}

pub fn table1(cache: &mut NumberCache) -> Result<Record> {
    let mut rows = Vec::new();
    for k in 1..=8u32 {
        let g = power_gf(cache, k)?;
        let seq = g.taylor_coeffs(TERMS + 1)?;
        let p = cache.eulerian_polynomial(k as usize - 1);
        rows.push(vec![
            Cell::Text((k - 1).to_string()),
            Cell::Value((&closed_power_sum(cache, k)?).into()),
            Cell::Text(sequence(&seq[1..])),
            Cell::Text(format!("{}/{}", times_x(&p), pole(k))),
        ]);
    }
    let table = Table {
        columns: vec![
            "k-1".into(),
            "smoothed sum".into(),
            "n^(k-1), n = 1..".into(),
            "x P_(k-1)(x)/(1-x)^k".into(),
        ],
        rows,
        footnotes: vec![
            "P_7(x) = 1 + 120x + 1191x^2 + 2416x^3 + 1191x^4 + 120x^5 + x^6; \
             copies ending in \"+ 120x^5 + 1\" are misprinted"
                .into(),
        ],
    };
    Ok(Record {
        table: Some(table),
        ..Record::new("table").param("table", 1)
    })
}

pub fn table4(cache: &mut NumberCache, paper_form: bool) -> Result<Record> {
    let mut rows = Vec::new();
    for k in 1..=7u32 {
        let g = figurate_gf(k)?;
        let seq = g.taylor_coeffs(TERMS + 1)?;
        let asym = gauge_expand(&g, i64::from(k))?.constant;
        let closed = closed_figurate(cache, k)?;
        let cell = |v: &Rational| {
            if paper_form {
                Cell::Text(figurate_paper_form(k, v))
            } else {
                Cell::Value(v.into())
            }
        };
        let gf = if k == 1 {
            "x/(1-x)".to_string()
        } else {
            format!("x/{}", pole(k))
        };
        rows.push(vec![
            Cell::Text(k.to_string()),
            cell(&closed),
            Cell::Text(sequence(&seq[1..])),
            Cell::Text(gf),
            cell(&asym),
            cell(&cache.gregory_coefficient(k as usize, true)),
        ]);
    }
    let table = Table {
        columns: vec![
            "k".into(),
            "smoothed sum".into(),
            "C(n+k-1, n), n = 0..".into(),
            "generating function".into(),
            "asymptotic constant".into(),
            "(-1)^k G_k".into(),
        ],
        rows,
        footnotes: vec![
            "generating functions are x/(1-x)^k; the variant x^(k-1)/(1-x)^k seen in some \
             tables gives the same smoothed sum only for even k"
                .into(),
        ],
    };
    Ok(Record {
        table: Some(table),
        ..Record::new("table").param("table", 4)
    })
}

pub fn table5(cache: &mut NumberCache, paper_form: bool) -> Result<Record> {
    let mut rows = Vec::new();
    for s in 1..=5u32 {
        let mut row = vec![Cell::Text(s.to_string())];
        for n in 0..TERMS {
            let v = cache.extended_gregory(s, n);
            row.push(if paper_form {
                let h: u64 = hirzebruch(n as u64).try_into().expect("small");
                Cell::Text(over_power(&v, h, s))
            } else {
                Cell::Value((&v).into())
            });
        }
        rows.push(row);
    }
    let mut columns = vec!["s".to_string()];
    columns.extend((0..TERMS).map(|n| format!("n={n}")));
    let table = Table {
        columns,
        rows,
        footnotes: Vec::new(),
    };
    Ok(Record {
        table: Some(table),
        ..Record::new("table").param("table", 5)
    })
}

/// Column-aligned text rendering.
pub fn render(table: &Table) -> Vec<String> {
    let text = |c: &Cell| match c {
        Cell::Text(s) => s.clone(),
        Cell::Value(q) if q.den == "1" => q.num.clone(),
        Cell::Value(q) => format!("{}/{}", q.num, q.den),
    };
    let mut grid: Vec<Vec<String>> = vec![table.columns.clone()];
    grid.extend(table.rows.iter().map(|r| r.iter().map(text).collect()));
    let widths: Vec<usize> = (0..table.columns.len())
        .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut lines: Vec<String> = grid
        .iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect();
    for (i, f) in table.footnotes.iter().enumerate() {
        lines.push(format!("[{}] {f}", i + 1));
    }
    lines
}
