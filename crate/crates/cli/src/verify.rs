//! Self-checks run by `verify`. Every suite works through the caller's
//! cache, so a corrupted memo entry surfaces as a failed check.

use crate::record::{Cell, Check};
use crate::tables;
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use ramsum_core::parse::parse_genfunc;
use ramsum_core::ramanujan::{figurate_gf, power_gf, smoothed_sum_all};
use ramsum_core::rational::parse_rational;
use ramsum_core::{NumberCache, Polynomial, Rational, SeriesFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    Tables,
    Parser,
    All,
}

impl Suite {
    pub fn tag(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Tables => "tables",
            Suite::Parser => "parser",
            Suite::All => "all",
        }
    }
}

fn q(text: &str) -> Rational {
    parse_rational(text).expect("literal")
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) {
        let detail = if passed { None } else { Some(detail()) };
        self.0.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }
}

pub fn run(suite: Suite, cache: &mut NumberCache) -> Vec<Check> {
    let mut c = Checks(Vec::new());
    if matches!(suite, Suite::Identities | Suite::All) {
        identities(&mut c, cache);
    }
    if matches!(suite, Suite::Tables | Suite::All) {
        tables(&mut c, cache);
    }
    if matches!(suite, Suite::Parser | Suite::All) {
        parser(&mut c);
    }
    // anything memoized along the way must match a fresh computation
    let bad = cache.audit();
    c.add("memo audit", bad.is_empty(), || bad.join("; "));
    c.0
}

fn identities(c: &mut Checks, cache: &mut NumberCache) {
    let odd: Vec<usize> = (3..=41)
        .step_by(2)
        .filter(|&n| !cache.bernoulli(n).is_zero())
        .collect();
    c.add("odd Bernoulli numbers vanish", odd.is_empty(), || {
        format!("n = {odd:?}")
    });

    let mut fact = int(1);
    for k in 2..=20i64 {
        fact *= int(k - 1);
        let p = cache.eulerian_polynomial(k as usize - 1);
        c.add(
            format!("P_{}(1) = {}!", k - 1, k - 1),
            p.eval(&int(1)) == fact,
            || format!("got {}", p.eval(&int(1))),
        );
        let two_k = Rational::from_integer(BigInt::from(1) << k as usize);
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let want = sign * &two_k * (&two_k - int(1)) * cache.bernoulli(k as usize) / int(k);
        let got = p.eval(&int(-1));
        c.add(format!("P_{}(-1)", k - 1), got == want, || {
            format!("{got} vs {want}")
        });
    }

    for n in 0..=20usize {
        let (a, b) = (
            cache.gregory_coefficient(n, true),
            cache.extended_gregory(1, n),
        );
        c.add(format!("extended Gregory s=1 n={n}"), a == b, || {
            format!("{a} vs {b}")
        });
    }

    let mut k_fact = int(1);
    for k in 1..=15usize {
        k_fact *= int(k as i64);
        let lhs = cache.gen_bernoulli_poly(k, k as i64, &int(k as i64 - 1)) / &k_fact;
        let rhs = cache.gregory_coefficient(k, true);
        c.add(
            format!("B_{k}^({k})({})/{k}! = signed G_{k}", k - 1),
            lhs == rhs,
            || format!("{lhs} vs {rhs}"),
        );
    }

    let one = int(1);
    for family in [SeriesFamily::Power, SeriesFamily::Figurate] {
        for k in 1..=12u32 {
            let r = smoothed_sum_all(cache, family, k, &one);
            let name = format!("{} k={k} methods agree", family.tag());
            c.add(name, r.is_ok(), || {
                r.err().map(|e| e.to_string()).unwrap_or_default()
            });
        }
    }
}

const TABLE1: [&str; 8] = ["-1/2", "-1/12", "0", "1/120", "0", "-1/252", "0", "1/240"];
const TABLE4: [&str; 7] = [
    "-1/2",
    "-1/12",
    "-1/24",
    "-19/720",
    "-3/160",
    "-863/60480",
    "-275/24192",
];
/// `G̃_n^s h_n^s` for s = 1..5, n = 0..6.
const TABLE5: [[&str; 7]; 5] = [
    ["1", "-1", "-1", "-1", "-19", "-27", "-863"],
    ["1", "-1", "-7", "-13", "-6911", "-18453", "-23419855"],
    [
        "1",
        "-1",
        "-37",
        "-115",
        "-1572859",
        "-7346157",
        "-347737791311",
    ],
    [
        "1",
        "-1",
        "-175",
        "-865",
        "-292581071",
        "-2315047233",
        "-3980321414135551",
    ],
    [
        "1",
        "-1",
        "-781",
        "-5971",
        "-48979036099",
        "-647280499677",
        "-40003092470353818383",
    ],
];
const HIRZEBRUCH: [u64; 7] = [1, 2, 12, 24, 720, 1440, 60480];

fn cell_value(cell: &Cell) -> Option<Rational> {
    match cell {
        Cell::Value(v) => v.to_rational(),
        Cell::Text(_) => None,
    }
}

fn tables(c: &mut Checks, cache: &mut NumberCache) {
    match tables::table1(cache) {
        Ok(rec) => {
            let rows = &rec.table.as_ref().expect("table").rows;
            for (row, want) in rows.iter().zip(TABLE1) {
                let got = cell_value(&row[1]);
                c.add(
                    format!("table 1 k-1={:?}", row[0]),
                    got == Some(q(want)),
                    || format!("{got:?} vs {want}"),
                );
            }
        }
        Err(e) => c.add("table 1", false, || e.to_string()),
    }
    match tables::table4(cache, false) {
        Ok(rec) => {
            let rows = &rec.table.as_ref().expect("table").rows;
            for (k, (row, want)) in rows.iter().zip(TABLE4).enumerate() {
                let want = q(want);
                let same = [1, 4, 5]
                    .iter()
                    .all(|&j| cell_value(&row[j]).as_ref() == Some(&want));
                c.add(format!("table 4 k={}", k + 1), same, || {
                    format!("{row:?} vs {want}")
                });
            }
        }
        Err(e) => c.add("table 4", false, || e.to_string()),
    }
    for (si, row) in TABLE5.iter().enumerate() {
        let s = si as u32 + 1;
        for (n, want) in row.iter().enumerate() {
            let v = cache.extended_gregory(s, n);
            let h = Rational::from_integer(Pow::pow(BigInt::from(HIRZEBRUCH[n]), s));
            let got = &v * &h;
            c.add(format!("table 5 s={s} n={n}"), got == q(want), || {
                format!("{got} vs {want}")
            });
        }
    }
    let cubes = power_gf(cache, 4).and_then(|g| g.taylor_coeffs(6));
    let want: Vec<Rational> = [0, 1, 8, 27, 64, 125].iter().map(|&n| int(n)).collect();
    c.add(
        "n^3 coefficients",
        cubes.as_ref().ok() == Some(&want),
        || format!("{cubes:?}"),
    );
}

/// Every generating function from the reference tables, in the forms they
/// are usually written.
const CORPUS: &[&str] = &[
    "x/(1-x)",
    "x/(1-x)^2",
    "x*(1+x)/(1-x)^3",
    "x*(1+4*x+x^2)/(1-x)^4",
    "x*(1+x)*(1+10*x+x^2)/(1-x)^5",
    "x*(1+26*x+66*x^2+26*x^3+x^4)/(1-x)^6",
    "x*(1+x)*(1+56*x+246*x^2+56*x^3+x^4)/(1-x)^7",
    "x*(1+120*x+1191*x^2+2416*x^3+1191*x^4+120*x^5+x^6)/(1-x)^8",
    "x^2/(1-x^2)^2",
    "x/(1+x)^2",
    "-4*x^2/(1-x^2)^2",
    "x*(1-4*x+x^2)/(1+x)^4",
    "16*x^2*(1+4*x^2+x^4)/(1-x^2)^4",
    "2*x^2/(1-x^2)",
    "4*x^2/(1-x^2)^2",
    "2*x^2*(x^2+3)/(1-x^2)^3",
    "8*x^2*(x^2+1)/(1-x^2)^4",
    "2*x^2*(x^4+10*x^2+5)/(1-x^2)^5",
    "4*x^2*(x^2+3)*(3*x^2+1)/(1-x^2)^6",
    "2*x^2*(x^6+21*x^4+35*x^2+7)/(1-x^2)^7",
    "x/(1-x)^3",
    "x/(1-x)^4",
    "x/(1-x)^5",
    "x/(1-x)^6",
    "x/(1-x)^7",
    "x/(1+x)^3",
];

fn parser(c: &mut Checks) {
    for text in CORPUS {
        let parsed = parse_genfunc(text);
        let ok = parsed.as_ref().is_ok_and(|g| {
            parse_genfunc(&g.render()).as_ref() == Ok(g)
                && parse_genfunc(&g.render_grouped()).as_ref() == Ok(g)
        });
        c.add(format!("parse {text}"), ok, || format!("{parsed:?}"));
    }
    // table generating functions parse to the library's own
    for k in 1..=8u32 {
        let text = CORPUS[k as usize - 1];
        let mut cache = NumberCache::new();
        let same = parse_genfunc(text).ok() == power_gf(&mut cache, k).ok();
        c.add(
            format!("parse {text} = x P_{}/(1-x)^{k}", k - 1),
            same,
            String::new,
        );
    }
    for (k, text) in [(3u32, "x/(1-x)^3"), (7, "x/(1-x)^7")] {
        let same = parse_genfunc(text).ok() == figurate_gf(k).ok();
        c.add(format!("parse {text} as figurate"), same, String::new);
    }
    let differences = CORPUS[13..20].iter().enumerate().all(|(i, text)| {
        let k = i as u32 + 1;
        let g = figurate_gf(k).expect("k >= 1");
        parse_genfunc(text).ok() == Some(g.sub(&g.twist()))
    });
    c.add("figurate differences", differences, String::new);
    let constant = parse_genfunc("(1-x)/(1-x)").map(|g| *g.num() == Polynomial::one());
    c.add("cancelled pole", constant == Ok(true), || {
        format!("{constant:?}")
    });
}
