//! Rational generating functions `N(x) / ((1-x)^a (1+x)^b)`.
//!
//! Every generating function handled here has its poles at `x = ±1`, which
//! keeps all manipulation exact: canonicalization only ever divides out the
//! linear factors `1-x` and `1+x`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{binomial, from_bigint, int, sign_pow, Rational};
use crate::series::TruncatedLaurentSeries;

/// `num / ((1-x)^a (1+x)^b)` in canonical form: `num` has no factor `1-x`
/// when `a > 0` and no factor `1+x` when `b > 0`. The zero function has
/// `a = b = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalGF {
    num: Polynomial,
    a: u32,
    b: u32,
}

fn one_minus_x() -> Polynomial {
    Polynomial::from_ints(&[1, -1])
}

fn one_plus_x() -> Polynomial {
    Polynomial::from_ints(&[1, 1])
}

impl RationalGF {
    pub fn new(num: Polynomial, a: u32, b: u32) -> Self {
        let mut g = RationalGF { num, a, b };
        g.deflate();
        g
    }

    fn deflate(&mut self) {
        if self.num.is_zero() {
            self.a = 0;
            self.b = 0;
            return;
        }
        while self.a > 0 {
            let (q, r) = self.num.divide_by_root(&Rational::one());
            if !r.is_zero() {
                break;
            }
            // num = q (x - 1) = -q (1 - x)
            self.num = -q;
            self.a -= 1;
        }
        while self.b > 0 {
            let (q, r) = self.num.divide_by_root(&-Rational::one());
            if !r.is_zero() {
                break;
            }
            self.num = q;
            self.b -= 1;
        }
    }

    /// `x^shift / (1-x)^k`, the figurate generating function (`shift = 1`).
    pub fn figurate(k: u32, shift: usize) -> Self {
        Self::new(Polynomial::monomial(Rational::one(), shift), k, 0)
    }

    /// `x P(x) / (1-x)^k`, the power-sum generating function when `P` is the
    /// Eulerian polynomial `P_{k-1}`.
    pub fn power_sum(eulerian: &Polynomial, k: u32) -> Self {
        Self::new(eulerian.shift(1), k, 0)
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    /// Exponent of `1-x` in the denominator.
    pub fn a(&self) -> u32 {
        self.a
    }

    /// Exponent of `1+x` in the denominator.
    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn denominator(&self) -> Polynomial {
        &one_minus_x().pow(self.a) * &one_plus_x().pow(self.b)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.num.scale(k), self.a, self.b)
    }

    /// Numerator over `(1-x)^a (1+x)^b` with the given (larger) exponents.
    fn numerator_over(&self, a: u32, b: u32) -> Polynomial {
        let lift = &one_minus_x().pow(a - self.a) * &one_plus_x().pow(b - self.b);
        &self.num * &lift
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (self.a.max(other.a), self.b.max(other.b));
        Self::new(
            &self.numerator_over(a, b) + &other.numerator_over(a, b),
            a,
            b,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = (self.a.max(other.a), self.b.max(other.b));
        Self::new(
            &self.numerator_over(a, b) - &other.numerator_over(a, b),
            a,
            b,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, self.a + other.a, self.b + other.b)
    }

    /// Substitutes `x -> x^2`: `(1-x^2)^e = (1-x)^e (1+x)^e`, so only pure
    /// `(1-x)` denominators can be squared in this representation.
    pub fn square_argument(&self) -> Result<Self> {
        if self.b != 0 {
            return Err(Error::domain(
                "x -> x^2 of a (1+x) denominator leaves the (1±x) family",
            ));
        }
        Ok(Self::new(self.num.square_argument(), self.a, self.a))
    }

    /// The first `n` Taylor coefficients at `x = 0`.
    pub fn taylor_coeffs(&self, n: usize) -> Result<Vec<Rational>> {
        if n == 0 {
            return Err(Error::domain("need at least one coefficient"));
        }
        let order = n as i64;
        let num = TruncatedLaurentSeries::from_polynomial(&self.num, order);
        let minus = TruncatedLaurentSeries::from_polynomial(&one_minus_x(), order)
            .pow(-i64::from(self.a))?;
        let plus = TruncatedLaurentSeries::from_polynomial(&one_plus_x(), order)
            .pow(-i64::from(self.b))?;
        let s = &(&num * &minus) * &plus;
        Ok(s.coeffs_from(0))
    }

    /// The alternating counterpart: `x -> -x`, with the overall sign chosen so
    /// the lowest Taylor coefficient keeps its sign. For a numerator of
    /// valuation `v` this is `(-1)^v g(-x)`; for the usual `v = 1` it maps
    /// `Σ c_n x^n` to `Σ (-1)^(n+1) c_n x^n`. Applying it twice is the
    /// identity.
    pub fn twist(&self) -> Self {
        let Some(v) = self.num.valuation() else {
            return self.clone();
        };
        let num = self.num.reflect().scale(&sign_pow(v as i64));
        Self::new(num, self.b, self.a)
    }

    /// Value at `x = 1`; requires no pole there.
    pub fn abel_value(&self) -> Result<Rational> {
        if self.a > 0 {
            return Err(Error::PoleAtOne);
        }
        let two_b = from_bigint(Pow::pow(num_bigint::BigInt::from(2u32), self.b));
        Ok(self.num.eval(&Rational::one()) / two_b)
    }

    /// Renders in the expression grammar accepted by
    /// [`parse_genfunc`](crate::parse::parse_genfunc).
    pub fn render(&self) -> String {
        self.render_with(false)
    }

    /// Like [`render`](Self::render) but writes `(1-x)^e (1+x)^e` as
    /// `(1-x^2)^e`.
    pub fn render_grouped(&self) -> String {
        self.render_with(true)
    }

    fn render_with(&self, group: bool) -> String {
        let num = self.num.to_string();
        let mut den: Vec<String> = Vec::new();
        let common = if group { self.a.min(self.b) } else { 0 };
        let mut push = |base: &str, e: u32| match e {
            0 => {}
            1 => den.push(format!("({base})")),
            _ => den.push(format!("({base})^{e}")),
        };
        push("1-x^2", common);
        push("1-x", self.a - common);
        push("1+x", self.b - common);
        if den.is_empty() {
            return num;
        }
        let single_term = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
            && !self.num.coeffs().iter().any(Signed::is_negative);
        let num = if single_term { num } else { format!("({num})") };
        let den = if den.len() == 1 {
            den.pop().expect("one factor")
        } else {
            format!("({})", den.join("*"))
        };
        format!("{num}/{den}")
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `Σ_j d_j x^2 / (1-x^2)^j`, keyed by `j ≥ 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub terms: BTreeMap<u32, Rational>,
}

impl Decomposition {
    pub fn get(&self, j: u32) -> Rational {
        self.terms.get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest `j` present.
    pub fn top(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Recombines the terms over the common denominator `(1-x^2)^top`.
    pub fn recombine(&self) -> RationalGF {
        let Some(top) = self.top() else {
            return RationalGF::new(Polynomial::zero(), 0, 0);
        };
        let one_minus_y = Polynomial::from_ints(&[1, -1]);
        let mut q = Polynomial::zero();
        for (&j, d) in &self.terms {
            q = &q + &one_minus_y.pow(top - j).scale(d);
        }
        RationalGF::new(q.square_argument().shift(2), top, top)
    }
}

/// Splits `x/(1-x)^k - x/(1+x)^k = x^2 Q(x^2) / (1-x^2)^k` into
/// `Σ d_j x^2/(1-x^2)^j`.
///
/// `Q(y) = 2 Σ_{odd i ≤ k} C(k, i) y^((i-1)/2)`; writing
/// `Q(y) = Σ q_j (1-y)^j` gives `d_{k-j} = q_j`. The expansion about `y = 1`
/// uses repeated synthetic division.
pub fn figurate_difference_decompose(k: u32) -> Result<Decomposition> {
    if k == 0 {
        return Err(Error::domain("figurate order k must be at least 1"));
    }
    let q = figurate_difference_numerator(k);
    let mut terms = BTreeMap::new();
    // Q = Σ r_j (y-1)^j = Σ (-1)^j r_j (1-y)^j
    for (j, r) in q.taylor_shift(&Rational::one()).into_iter().enumerate() {
        if r.is_zero() {
            continue;
        }
        terms.insert(k - j as u32, sign_pow(j as i64) * r);
    }
    Ok(Decomposition { terms })
}

/// `Q(y)` with `x/(1-x)^k - x/(1+x)^k = x^2 Q(x^2)/(1-x^2)^k`.
pub fn figurate_difference_numerator(k: u32) -> Polynomial {
    let coeffs = (1..=u64::from(k))
        .step_by(2)
        .map(|i| from_bigint(binomial(u64::from(k), i)) * int(2))
        .collect();
    Polynomial::new(coeffs)
}

pub fn gf_sub(g1: &RationalGF, g2: &RationalGF) -> RationalGF {
    g1.sub(g2)
}
