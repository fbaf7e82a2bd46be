//! Smoothed sums of divergent series.
//!
//! Four independent routes compute the constant assigned to a series:
//!
//! - closed forms in Bernoulli numbers and Gregory coefficients,
//! - the asymptotic expansion of the generating function under the gauge
//!   `x = e^(-λ)`, discarding the divergent powers of `λ`,
//! - the intuitive method, which subtracts the alternating counterpart and
//!   solves a linear equation for the constant,
//! - regularization against `(k-1)!/(-ln x)^k` in `ε = 1 - x`.
//!
//! Functions that need number families take a [`NumberCache`], so a caller
//! that corrupts the cache sees the corruption propagate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::genfunc::{figurate_difference_decompose, RationalGF};
use crate::numbers::NumberCache;
use crate::poly::Polynomial;
use crate::rational::{factorial, from_bigint, int, sign_pow, Rational};
use crate::series::{exp_series, gauge_series, log_factor_series, TruncatedLaurentSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesFamily {
    /// `Σ n^(k-1)`, generating function `x P_{k-1}(x) / (1-x)^k`.
    Power,
    /// `Σ C(n+k-1, n)`, generating function `x / (1-x)^k`.
    Figurate,
}

impl SeriesFamily {
    pub fn tag(self) -> &'static str {
        match self {
            SeriesFamily::Power => "power",
            SeriesFamily::Figurate => "figurate",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "power" => Some(SeriesFamily::Power),
            "figurate" => Some(SeriesFamily::Figurate),
            _ => None,
        }
    }

    /// The methods that apply to this family, in reporting order.
    pub fn methods(self) -> &'static [Method] {
        match self {
            SeriesFamily::Power => &[
                Method::Closed,
                Method::Asymptotic,
                Method::Intuitive,
                Method::Regularized,
            ],
            SeriesFamily::Figurate => &[
                Method::Closed,
                Method::Asymptotic,
                Method::Intuitive,
                Method::BernoulliForm,
            ],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Closed,
    Asymptotic,
    Intuitive,
    Regularized,
    /// `B_k^(k)(k - m) / k!`, figurate family only.
    BernoulliForm,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Asymptotic => "asym",
            Method::Intuitive => "intuitive",
            Method::Regularized => "regularize",
            Method::BernoulliForm => "bernoulli",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "closed" => Some(Method::Closed),
            "asym" | "asymptotic" => Some(Method::Asymptotic),
            "intuitive" => Some(Method::Intuitive),
            "regularize" | "regularized" => Some(Method::Regularized),
            "bernoulli" => Some(Method::BernoulliForm),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A Laurent expansion in `λ` split at the constant term.
///
/// `divergent` holds every power from `-pole` to `-1`, zeros included, so a
/// vanishing coefficient is visible rather than implied. `tail[i]` is the
/// coefficient of `λ^(i+1)`; powers at or beyond `order` are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticExpansion {
    pub divergent: BTreeMap<i64, Rational>,
    pub constant: Rational,
    pub tail: Vec<Rational>,
    pub order: i64,
}

impl AsymptoticExpansion {
    fn from_series(s: &TruncatedLaurentSeries, pole: i64) -> Result<Self> {
        let order = s.order();
        if order <= 0 {
            return Err(Error::Truncated { power: 0, order });
        }
        let divergent = (-pole..0)
            .map(|p| Ok((p, s.coeff(p)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let tail = (1..order).map(|p| s.coeff(p)).collect::<Result<Vec<_>>>()?;
        Ok(AsymptoticExpansion {
            divergent,
            constant: s.coeff(0)?,
            tail,
            order,
        })
    }

    pub fn pole_order(&self) -> i64 {
        self.divergent.len() as i64
    }

    pub fn coeff(&self, power: i64) -> Result<Rational> {
        if power >= self.order {
            return Err(Error::Truncated {
                power,
                order: self.order,
            });
        }
        Ok(match power {
            0 => self.constant.clone(),
            p if p < 0 => self
                .divergent
                .get(&p)
                .cloned()
                .unwrap_or_else(Rational::zero),
            p => self.tail[(p - 1) as usize].clone(),
        })
    }
}

/// The intermediate quantities of one intuitive-method solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntuitiveLedger {
    /// Abel value of the alternating counterpart.
    pub abel: Rational,
    /// `d_j` of the difference `g - twist(g) = Σ d_j g_j(x^2)`.
    pub terms: BTreeMap<u32, Rational>,
    /// Smoothed sums of the lower-order series that enter the equation.
    pub prior: Vec<Rational>,
}

/// Output of [`regularization_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularizationReport {
    pub k: u32,
    /// `(power, generating-function coefficient, comparator coefficient)`
    /// for each negative power of `ε`.
    pub divergent: Vec<(i64, Rational, Rational)>,
    /// Constant term of the difference.
    pub constant: Rational,
    /// `-k! G_k^(k)`.
    pub gregory_constant: Rational,
    /// `(-1)^(k-1) B_k / k`.
    pub bernoulli_constant: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostics {
    None,
    Expansion(AsymptoticExpansion),
    Intuitive(IntuitiveLedger),
    Regularization(RegularizationReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothedSum {
    pub value: Rational,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

fn two_pow(k: u32) -> Rational {
    from_bigint(Pow::pow(BigInt::from(2u32), k))
}

fn k_factorial(k: u32) -> Rational {
    from_bigint(factorial(u64::from(k)))
}

fn require_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    Ok(())
}

/// `x P_{k-1}(x) / (1-x)^k`, whose coefficients are `n^(k-1)`.
pub fn power_gf(cache: &mut NumberCache, k: u32) -> Result<RationalGF> {
    require_k(k)?;
    Ok(RationalGF::power_sum(
        &cache.eulerian_polynomial(k as usize - 1),
        k,
    ))
}

/// `x / (1-x)^k`, whose coefficients are `C(n+k-2, n-1)`.
pub fn figurate_gf(k: u32) -> Result<RationalGF> {
    require_k(k)?;
    Ok(RationalGF::figurate(k, 1))
}

/// Expands `g(e^(-λ))` about `λ = 0`.
///
/// With `a` the pole order at `x = 1`, the result holds the powers
/// `-a ..= order - a`: `order` counts the known coefficients after the
/// leading divergent one.
pub fn gauge_expand(g: &RationalGF, order: i64) -> Result<AsymptoticExpansion> {
    gauge_expand_shifted(g, &Rational::zero(), order)
}

/// [`gauge_expand`] of `x^shift g(x)`, for rational `shift`.
pub fn gauge_expand_shifted(
    g: &RationalGF,
    shift: &Rational,
    order: i64,
) -> Result<AsymptoticExpansion> {
    let a = i64::from(g.a());
    if order < a {
        return Err(Error::Truncated {
            power: 0,
            order: order - a + 1,
        });
    }
    let n = order + 1;
    let mut num = TruncatedLaurentSeries::zero(n);
    for (j, c) in g.num().coeffs().iter().enumerate() {
        if !c.is_zero() {
            num = &num + &exp_series(&-int(j as i64), n).scale(c);
        }
    }
    if !shift.is_zero() {
        num = &num * &exp_series(&-shift, n);
    }
    let gauge = gauge_series(n + 1);
    // 1 - e^(-λ) = λ U(λ) with U(0) = 1
    let one_minus = &TruncatedLaurentSeries::one(n + 1) - &gauge;
    let unit = one_minus.shift(-1);
    let one_plus = &TruncatedLaurentSeries::one(n) + &gauge.truncate(n);
    let body = &(&num * &unit.pow(-a)?) * &one_plus.pow(-i64::from(g.b()))?;
    AsymptoticExpansion::from_series(&body.shift(-a), a)
}

/// `(-1)^(k-1) B_k / k`.
pub fn closed_power_sum(cache: &mut NumberCache, k: u32) -> Result<Rational> {
    require_k(k)?;
    Ok(sign_pow(i64::from(k) - 1) * cache.bernoulli(k as usize) / int(i64::from(k)))
}

/// `(-1)^k G_k`, the signed Gregory coefficient.
pub fn closed_figurate(cache: &mut NumberCache, k: u32) -> Result<Rational> {
    require_k(k)?;
    Ok(cache.gregory_coefficient(k as usize, true))
}

/// `B_k^(k)(k - m) / k!`, the smoothed sum of `x^m / (1-x)^k`.
pub fn smoothed_bernoulli_form(cache: &mut NumberCache, k: u32, m: &Rational) -> Result<Rational> {
    require_k(k)?;
    let x = int(i64::from(k)) - m;
    Ok(cache.gen_bernoulli_poly(k as usize, i64::from(k), &x) / k_factorial(k))
}

/// [`smoothed_bernoulli_form`] as a polynomial in `m`.
pub fn shift_constant_poly(cache: &mut NumberCache, k: u32) -> Result<Polynomial> {
    require_k(k)?;
    let b = cache.gen_bernoulli_symbolic(k as usize, i64::from(k));
    let k_minus_m = Polynomial::linear(int(i64::from(k)), -Rational::one());
    Ok(b.compose(&k_minus_m).scale(&k_factorial(k).recip()))
}

/// One step of the intuitive method.
///
/// For the figurate family `memo[j-1]` must hold the smoothed sum of order
/// `j` for every `j < k`; the power family needs no memo.
pub fn intuitive_solve(
    cache: &mut NumberCache,
    family: SeriesFamily,
    k: u32,
    memo: &[Rational],
) -> Result<Rational> {
    intuitive_ledger(cache, family, k, memo).map(|(c, _)| c)
}

fn intuitive_ledger(
    cache: &mut NumberCache,
    family: SeriesFamily,
    k: u32,
    memo: &[Rational],
) -> Result<(Rational, IntuitiveLedger)> {
    require_k(k)?;
    match family {
        SeriesFamily::Power => {
            let g = power_gf(cache, k)?;
            let twisted = g.twist();
            let abel = twisted.abel_value()?;
            // g - twist(g) = 2^k g(x^2)
            let d = two_pow(k);
            if g.sub(&twisted) != g.square_argument()?.scale(&d) {
                return Err(Error::Consistency(format!(
                    "power-sum difference for k = {k} is not 2^k g(x^2)"
                )));
            }
            let c = &abel / (Rational::one() - &d);
            let terms = BTreeMap::from([(k, d)]);
            Ok((
                c,
                IntuitiveLedger {
                    abel,
                    terms,
                    prior: Vec::new(),
                },
            ))
        }
        SeriesFamily::Figurate => {
            if memo.len() + 1 < k as usize {
                return Err(Error::domain(format!(
                    "figurate order {k} needs the smoothed sums of orders 1..{}",
                    k - 1
                )));
            }
            let abel = figurate_gf(k)?.twist().abel_value()?;
            let dec = figurate_difference_decompose(k)?;
            let mut rhs = abel.clone();
            for (&j, d) in dec.terms.range(..k) {
                rhs += d * &memo[j as usize - 1];
            }
            let denom = Rational::one() - dec.get(k);
            if denom.is_zero() {
                return Err(Error::domain("intuitive equation is singular"));
            }
            let prior = memo[..k as usize - 1].to_vec();
            Ok((
                rhs / denom,
                IntuitiveLedger {
                    abel,
                    terms: dec.terms,
                    prior,
                },
            ))
        }
    }
}

/// Figurate smoothed sums for orders `1..=k`, each solved from the previous
/// ones.
pub fn intuitive_progressive(cache: &mut NumberCache, k: u32) -> Result<Vec<Rational>> {
    let mut memo = Vec::with_capacity(k as usize);
    for j in 1..=k {
        let c = intuitive_solve(cache, SeriesFamily::Figurate, j, &memo)?;
        memo.push(c);
    }
    Ok(memo)
}

/// The general intuitive equation for `x^k F(x)/(1-x)^k` whose difference
/// from its counterpart `x^k F(-x)/(1+x)^k` smooths to `a1 c + a2`:
/// `c = (F(-1)/2^k + a2) / (1 - a1)`.
pub fn intuitive_general(f: &Polynomial, k: u32, a1: &Rational, a2: &Rational) -> Result<Rational> {
    let one = Rational::one();
    if f.eval(&one).is_zero() || f.eval(&-one.clone()).is_zero() {
        return Err(Error::domain("F must not vanish at x = ±1"));
    }
    let denom = &one - a1;
    if denom.is_zero() {
        return Err(Error::domain("a1 = 1 leaves the constant undetermined"));
    }
    Ok((f.eval(&-one) / two_pow(k) + a2) / denom)
}

/// Expands `x P_{k-1}(x)/(1-x)^k` and `(k-1)!/(-ln x)^k` in `ε = 1 - x`,
/// checks that every negative power cancels in the difference, and returns
/// the difference's constant term.
///
/// `order` bounds the work: both series are known through `ε^(order-k-1)`.
pub fn regularization_check(
    cache: &mut NumberCache,
    k: u32,
    order: i64,
) -> Result<RegularizationReport> {
    require_k(k)?;
    let ki = i64::from(k);
    if order < ki + 2 {
        return Err(Error::domain(format!(
            "order must be at least k + 2 = {}",
            ki + 2
        )));
    }
    let n = order;
    // x P(x) with x = 1 - ε, a polynomial in ε, over ε^k
    let one_minus_eps = Polynomial::from_ints(&[1, -1]);
    let num = power_gf(cache, k)?.num().compose(&one_minus_eps);
    let gf = TruncatedLaurentSeries::from_polynomial(&num, n).shift(-ki);
    // -ln(1-ε) = ε u(ε)
    let comparator = log_factor_series(n)
        .pow(-ki)?
        .scale(&k_factorial(k - 1))
        .shift(-ki);
    let diff = &gf - &comparator;

    let mut divergent = Vec::with_capacity(k as usize);
    for p in -ki..0 {
        let (lhs, rhs) = (gf.coeff(p)?, comparator.coeff(p)?);
        // comparator coefficient of ε^(m-k) is k! G_m^(k)
        let m = (p + ki) as usize;
        let expected = k_factorial(k) * cache.gregory_polynomial_eval(m, &int(ki))?;
        if lhs != rhs || rhs != expected {
            return Err(Error::Consistency(format!(
                "ε^{p} does not cancel for k = {k}: {lhs} vs {rhs} (expected {expected})"
            )));
        }
        divergent.push((p, lhs, rhs));
    }
    let constant = diff.coeff(0)?;
    let gregory_constant = -k_factorial(k) * cache.gregory_polynomial_eval(k as usize, &int(ki))?;
    let bernoulli_constant = closed_power_sum(cache, k)?;
    if constant != bernoulli_constant {
        return Err(Error::Consistency(format!(
            "regularized constant {constant} differs from (-1)^(k-1) B_k / k = {bernoulli_constant}"
        )));
    }
    Ok(RegularizationReport {
        k,
        divergent,
        constant,
        gregory_constant,
        bernoulli_constant,
    })
}

fn require_canonical_shift(m: &Rational, what: &str) -> Result<()> {
    if !m.is_one() {
        return Err(Error::domain(format!("{what} requires m = 1")));
    }
    Ok(())
}

/// Smoothed sum of the family's order-`k` series shifted to `x^m`, by the
/// requested method.
pub fn smoothed_sum(
    cache: &mut NumberCache,
    family: SeriesFamily,
    k: u32,
    m: &Rational,
    method: Method,
) -> Result<SmoothedSum> {
    require_k(k)?;
    let done = |value, diagnostics| {
        Ok(SmoothedSum {
            value,
            method,
            diagnostics,
        })
    };
    match (family, method) {
        (SeriesFamily::Power, Method::Closed) => {
            require_canonical_shift(m, "the closed power-sum formula")?;
            done(closed_power_sum(cache, k)?, Diagnostics::None)
        }
        (SeriesFamily::Figurate, Method::Closed) => {
            // m = 1 is the Gregory form; other shifts go through B_k^(k)
            let value = if m.is_one() {
                closed_figurate(cache, k)?
            } else {
                smoothed_bernoulli_form(cache, k, m)?
            };
            done(value, Diagnostics::None)
        }
        (_, Method::Asymptotic) => {
            let g = match family {
                SeriesFamily::Power => power_gf(cache, k)?,
                SeriesFamily::Figurate => figurate_gf(k)?,
            };
            let shift = m - Rational::one();
            let e = gauge_expand_shifted(&g, &shift, i64::from(g.a()) + 6)?;
            done(e.constant.clone(), Diagnostics::Expansion(e))
        }
        (_, Method::Intuitive) => {
            require_canonical_shift(m, "the intuitive method")?;
            let memo = match family {
                SeriesFamily::Power => Vec::new(),
                SeriesFamily::Figurate => intuitive_progressive(cache, k - 1)?,
            };
            let (value, ledger) = intuitive_ledger(cache, family, k, &memo)?;
            done(value, Diagnostics::Intuitive(ledger))
        }
        (SeriesFamily::Power, Method::Regularized) => {
            require_canonical_shift(m, "regularization")?;
            let report = regularization_check(cache, k, i64::from(k) + 2)?;
            done(report.constant.clone(), Diagnostics::Regularization(report))
        }
        (SeriesFamily::Figurate, Method::BernoulliForm) => {
            done(smoothed_bernoulli_form(cache, k, m)?, Diagnostics::None)
        }
        (family, method) => Err(Error::domain(format!(
            "method {method} does not apply to the {} family",
            family.tag()
        ))),
    }
}

/// Every applicable method for the family; fails with a consistency error
/// if any two disagree.
pub fn smoothed_sum_all(
    cache: &mut NumberCache,
    family: SeriesFamily,
    k: u32,
    m: &Rational,
) -> Result<Vec<SmoothedSum>> {
    let methods: Vec<Method> = if m.is_one() {
        family.methods().to_vec()
    } else {
        family
            .methods()
            .iter()
            .copied()
            .filter(|&me| {
                matches!(me, Method::Asymptotic | Method::BernoulliForm)
                    || (family == SeriesFamily::Figurate && me == Method::Closed)
            })
            .collect()
    };
    let sums = methods
        .into_iter()
        .map(|me| smoothed_sum(cache, family, k, m, me))
        .collect::<Result<Vec<_>>>()?;
    if let Some(first) = sums.first() {
        for s in &sums[1..] {
            if s.value != first.value {
                return Err(Error::Consistency(format!(
                    "{} gives {} but {} gives {}",
                    first.method, first.value, s.method, s.value
                )));
            }
        }
    }
    Ok(sums)
}
