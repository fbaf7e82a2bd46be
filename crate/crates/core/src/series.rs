//! Truncated Laurent series with exact coefficients and tracked truncation
//! order.
//!
//! A series stores the coefficients of `x^v, x^(v+1), ..., x^(order-1)`
//! where `v` is the valuation. Every power at or above `order` is unknown,
//! and asking for one is an error rather than a silent zero. Arithmetic
//! results carry the tightest order derivable from their inputs.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedLaurentSeries {
    valuation: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl TruncatedLaurentSeries {
    /// Coefficients start at `valuation`; any power below `order` not covered
    /// by `coeffs` is a known zero. Coefficients at or beyond `order` are
    /// discarded.
    pub fn new(valuation: i64, mut coeffs: Vec<Rational>, order: i64) -> Result<Self> {
        if valuation > order {
            return Err(Error::domain(
                "series valuation exceeds its truncation order",
            ));
        }
        let len = (order - valuation) as usize;
        coeffs.resize(len, Rational::zero());
        Ok(Self::normalized(valuation, coeffs, order))
    }

    fn normalized(valuation: i64, mut coeffs: Vec<Rational>, order: i64) -> Self {
        debug_assert_eq!(coeffs.len() as i64, order - valuation);
        match coeffs.iter().position(|c| !c.is_zero()) {
            Some(0) => TruncatedLaurentSeries {
                valuation,
                coeffs,
                order,
            },
            Some(skip) => {
                coeffs.drain(..skip);
                TruncatedLaurentSeries {
                    valuation: valuation + skip as i64,
                    coeffs,
                    order,
                }
            }
            None => TruncatedLaurentSeries {
                valuation: order,
                coeffs: Vec::new(),
                order,
            },
        }
    }

    /// Zero, known up to (not including) `order`.
    pub fn zero(order: i64) -> Self {
        TruncatedLaurentSeries {
            valuation: order,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    /// `c x^power`, known up to `order`.
    pub fn monomial(c: Rational, power: i64, order: i64) -> Self {
        if power >= order {
            return Self::zero(order);
        }
        let mut coeffs = vec![Rational::zero(); (order - power) as usize];
        coeffs[0] = c;
        Self::normalized(power, coeffs, order)
    }

    /// An exact polynomial viewed as a series truncated at `order`.
    pub fn from_polynomial(p: &Polynomial, order: i64) -> Self {
        if order <= 0 {
            return Self::zero(order.max(0));
        }
        let coeffs = (0..order as usize).map(|i| p.coeff(i)).collect();
        Self::normalized(0, coeffs, order)
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficients of powers `valuation..order`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of known coefficients starting at the valuation.
    pub fn precision(&self) -> i64 {
        self.order - self.valuation
    }

    pub fn coeff(&self, power: i64) -> Result<Rational> {
        if power >= self.order {
            return Err(Error::Truncated {
                power,
                order: self.order,
            });
        }
        if power < self.valuation {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(power - self.valuation) as usize].clone())
    }

    /// Known coefficients from `from` up to the order (zeros below the
    /// valuation are filled in).
    pub fn coeffs_from(&self, from: i64) -> Vec<Rational> {
        (from..self.order)
            .map(|p| self.coeff(p).expect("below order"))
            .collect()
    }

    /// Keeps only powers below `order` (no-op if already tighter).
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        if order <= self.valuation {
            return Self::zero(order);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate((order - self.valuation) as usize);
        Self::normalized(self.valuation, coeffs, order)
    }

    /// Multiplies by `x^power`.
    pub fn shift(&self, power: i64) -> Self {
        TruncatedLaurentSeries {
            valuation: self.valuation + power,
            coeffs: self.coeffs.clone(),
            order: self.order + power,
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.order);
        }
        TruncatedLaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            order: self.order,
        }
    }

    fn add_signed(&self, rhs: &Self, negate: bool) -> Self {
        let order = self.order.min(rhs.order);
        let low = self.valuation.min(rhs.valuation).min(order);
        let coeffs = (low..order)
            .map(|p| {
                let a = self.coeff(p).expect("below order");
                let b = rhs.coeff(p).expect("below order");
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        Self::normalized(low, coeffs, order)
    }

    fn mul_series(&self, rhs: &Self) -> Self {
        let order = (self.order + rhs.valuation).min(rhs.order + self.valuation);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(order);
        }
        let valuation = self.valuation + rhs.valuation;
        let len = (order - valuation) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::normalized(valuation, coeffs, order)
    }

    /// Multiplicative inverse. The result has valuation `-self.valuation` and
    /// the same number of known coefficients as `self`.
    pub fn reciprocal(&self) -> Result<Self> {
        let Some(lead) = self.coeffs.first() else {
            return Err(Error::domain("reciprocal of a zero series"));
        };
        let inv_lead = lead.recip();
        let n = self.coeffs.len();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(inv_lead.clone());
        for k in 1..n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                let c = &self.coeffs[i];
                if !c.is_zero() {
                    acc += c * &out[k - i];
                }
            }
            out.push(-acc * &inv_lead);
        }
        let valuation = -self.valuation;
        Ok(Self::normalized(valuation, out, valuation + n as i64))
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.reciprocal()?.pow(-e);
        }
        if e == 0 {
            return Ok(Self::one(self.precision().max(1)));
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => &a * &base,
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc.expect("positive exponent"))
    }

    /// `self(inner)`, where `self` is a power series and `inner` has positive
    /// valuation.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.valuation < 0 {
            return Err(Error::domain("composition needs an outer power series"));
        }
        if inner.valuation < 1 {
            return Err(Error::domain(
                "composition needs an inner series with positive valuation",
            ));
        }
        // Unknown outer terms contribute O(inner^order).
        let tail = inner.valuation * self.order;
        let mut acc = Self::zero(tail);
        let mut power = Self::one(tail);
        for p in 0..self.order {
            let c = self.coeff(p)?;
            if !c.is_zero() {
                acc = &acc + &power.scale(&c);
            }
            if p + 1 < self.order {
                power = &power * inner;
            }
        }
        Ok(acc)
    }

    /// Evaluates the known coefficients as a polynomial in `x`, for series
    /// with nonnegative valuation.
    pub fn partial_sum(&self, x: &Rational) -> Result<Rational> {
        if self.valuation < 0 {
            return Err(Error::domain("partial sum of a series with a pole"));
        }
        let mut acc = Rational::zero();
        let mut xp = Rational::one();
        for p in 0..self.order {
            acc += self.coeff(p)? * &xp;
            xp *= x;
        }
        Ok(acc)
    }
}

impl Add for &TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;
    fn add(self, rhs: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
        self.add_signed(rhs, false)
    }
}

impl Sub for &TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;
    fn sub(self, rhs: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
        self.add_signed(rhs, true)
    }
}

impl Mul for &TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;
    fn mul(self, rhs: &TruncatedLaurentSeries) -> TruncatedLaurentSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &TruncatedLaurentSeries {
    type Output = TruncatedLaurentSeries;
    fn neg(self) -> TruncatedLaurentSeries {
        self.scale(&-Rational::one())
    }
}

/// `e^(a t)` truncated at `order`.
pub fn exp_series(a: &Rational, order: i64) -> TruncatedLaurentSeries {
    let n = order.max(0) as usize;
    let mut coeffs = Vec::with_capacity(n);
    let mut term = Rational::one();
    for k in 0..n {
        if k > 0 {
            term = term * a / int(k as i64);
        }
        coeffs.push(term.clone());
    }
    TruncatedLaurentSeries::normalized(0, coeffs, n as i64)
}

/// The gauge `e^(-λ) = Σ (-λ)^n / n!`, truncated at `order`.
pub fn gauge_series(order: i64) -> TruncatedLaurentSeries {
    exp_series(&-Rational::one(), order)
}

/// `-ln(1-ε)/ε = Σ ε^n / (n+1)`, truncated at `order`.
pub fn log_factor_series(order: i64) -> TruncatedLaurentSeries {
    let n = order.max(0);
    let coeffs = (0..n)
        .map(|k| Rational::new(1.into(), (k + 1).into()))
        .collect();
    TruncatedLaurentSeries::normalized(0, coeffs, n)
}

/// `-ln(1-ε) = Σ_{n≥1} ε^n / n`, truncated at `order`.
pub fn neg_log_one_minus_series(order: i64) -> TruncatedLaurentSeries {
    log_factor_series(order - 1).shift(1)
}

/// `(e^t - 1)/t = Σ t^n / (n+1)!`, truncated at `order`.
pub fn exp_minus_one_over_t(order: i64) -> TruncatedLaurentSeries {
    let n = order.max(0) as usize;
    let mut coeffs = Vec::with_capacity(n);
    let mut term = Rational::one();
    for k in 0..n {
        if k > 0 {
            term /= int(k as i64 + 1);
        }
        coeffs.push(term.clone());
    }
    TruncatedLaurentSeries::normalized(0, coeffs, n as i64)
}
