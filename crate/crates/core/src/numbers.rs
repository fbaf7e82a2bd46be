//! Number families: Bernoulli numbers, generalized Bernoulli polynomials,
//! Eulerian polynomials, Gregory coefficients and polynomials, extended
//! Gregory coefficients, and Hirzebruch numbers.
//!
//! [`NumberCache`] memoizes each family. A cached lookup always equals what a
//! fresh cache would compute; [`NumberCache::audit`] checks exactly that, and
//! [`NumberCache::inject_fault`] exists so that check can be exercised.
//! The free functions at the bottom of the module use a throwaway cache.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{factorial, from_bigint, int, rat, sign_pow, Rational};
use crate::series::{exp_minus_one_over_t, TruncatedLaurentSeries};

/// A deliberately corrupted memo entry, for exercising consistency checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    Bernoulli {
        n: usize,
        value: Rational,
    },
    /// Signed Gregory coefficient `Ḡ_n`.
    Gregory {
        n: usize,
        value: Rational,
    },
    ExtendedGregory {
        s: u32,
        n: usize,
        value: Rational,
    },
    EulerianCoeff {
        n: usize,
        power: usize,
        value: Rational,
    },
}

/// The `m`-th Gregory polynomial `G_m^(u)`, the coefficient of `x^m` in
/// `(-x/ln(1-x))^u / u`.
///
/// Stored as `u * G_m^(u)`, which is a polynomial in `u` for every `m`
/// (it is `1` for `m = 0` and has zero constant term otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GregoryPolynomial {
    m: usize,
    scaled: Polynomial,
}

impl GregoryPolynomial {
    pub fn order(&self) -> usize {
        self.m
    }

    /// `u * G_m^(u)`.
    pub fn scaled(&self) -> &Polynomial {
        &self.scaled
    }

    /// `G_m^(u)` as a polynomial in `u` (degree `m - 1`); `None` for `m = 0`,
    /// where it is `1/u`.
    pub fn polynomial(&self) -> Option<Polynomial> {
        if self.m == 0 {
            return None;
        }
        let coeffs = self.scaled.coeffs().iter().skip(1).cloned().collect();
        Some(Polynomial::new(coeffs))
    }

    pub fn eval(&self, u: &Rational) -> Result<Rational> {
        match self.polynomial() {
            Some(p) => Ok(p.eval(u)),
            None if u.is_zero() => Err(Error::domain("G_0^(u) = 1/u is undefined at u = 0")),
            None => Ok(u.recip()),
        }
    }
}

impl fmt::Display for GregoryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polynomial() {
            Some(p) => f.write_str(&p.display_with("u")),
            None => f.write_str("1/u"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct NumberCache {
    bernoulli: Vec<Rational>,
    signed_gregory: Vec<Rational>,
    eulerian_rows: Vec<Vec<BigInt>>,
    gregory_scaled: Vec<Polynomial>,
    extended_gregory: BTreeMap<u32, Vec<Rational>>,
    bernoulli_powers: BTreeMap<i64, TruncatedLaurentSeries>,
}

impl NumberCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `B_n` with `t/(e^t - 1) = Σ B_n t^n / n!`, so `B_1 = -1/2`.
    pub fn bernoulli(&mut self, n: usize) -> Rational {
        if n >= self.bernoulli.len() {
            let target = (n + 1).max(2 * self.bernoulli.len()).max(8);
            let recip = exp_minus_one_over_t(target as i64)
                .reciprocal()
                .expect("constant term is 1");
            for k in self.bernoulli.len()..target {
                let c = recip.coeff(k as i64).expect("within order");
                self.bernoulli.push(c * from_bigint(factorial(k as u64)));
            }
        }
        self.bernoulli[n].clone()
    }

    fn eulerian_row(&mut self, n: usize) -> &[BigInt] {
        if self.eulerian_rows.is_empty() {
            self.eulerian_rows.push(vec![BigInt::one()]);
        }
        while self.eulerian_rows.len() <= n {
            let prev = self.eulerian_rows.last().expect("seeded");
            let row_n = self.eulerian_rows.len();
            // A(n, m) = (m + 1) A(n-1, m) + (n - m) A(n-1, m-1), m < max(n, 1)
            let width = row_n.max(1);
            let at = |m: isize| -> BigInt {
                if m < 0 {
                    BigInt::zero()
                } else {
                    prev.get(m as usize).cloned().unwrap_or_else(BigInt::zero)
                }
            };
            let row: Vec<BigInt> = (0..width as isize)
                .map(|m| BigInt::from(m + 1) * at(m) + BigInt::from(row_n as isize - m) * at(m - 1))
                .collect();
            self.eulerian_rows.push(row);
        }
        &self.eulerian_rows[n]
    }

    /// Eulerian polynomial `P_n(x) = Σ_m A(n, m) x^m`.
    pub fn eulerian_polynomial(&mut self, n: usize) -> Polynomial {
        let row = self.eulerian_row(n);
        Polynomial::new(row.iter().cloned().map(from_bigint).collect())
    }

    /// `d^m P_u / dx^m` at `x = 1`, by differentiating the polynomial.
    pub fn eulerian_derivative_at_one(&mut self, u: usize, m: usize) -> Rational {
        let mut p = self.eulerian_polynomial(u);
        for _ in 0..m {
            p = p.derivative();
        }
        p.eval(&Rational::one())
    }

    fn extend_signed_gregory(&mut self, n: usize) {
        if self.signed_gregory.is_empty() {
            self.signed_gregory.push(Rational::one());
        }
        while self.signed_gregory.len() <= n {
            let i = self.signed_gregory.len();
            let acc = (1..=i).fold(Rational::zero(), |acc, k| {
                acc + &self.signed_gregory[i - k] / int(k as i64 + 1)
            });
            self.signed_gregory.push(-acc);
        }
    }

    /// Gregory coefficient. `signed` gives `Ḡ_n`, the coefficients of
    /// `-x/ln(1-x)`; otherwise `G_n = (-1)^n Ḡ_n`, the coefficients of
    /// `x/ln(1+x)`.
    pub fn gregory_coefficient(&mut self, n: usize, signed: bool) -> Rational {
        self.extend_signed_gregory(n);
        let g = self.signed_gregory[n].clone();
        if signed {
            g
        } else {
            sign_pow(n as i64) * g
        }
    }

    fn extend_gregory_polynomials(&mut self, m: usize) {
        if self.gregory_scaled.is_empty() {
            self.gregory_scaled.push(Polynomial::one());
            self.gregory_scaled
                .push(Polynomial::linear(Rational::zero(), rat(-1, 2)));
        }
        while self.gregory_scaled.len() <= m {
            // Ḡ_{i+1} = -u/(i+2) - 1/(i+1) Σ_{n=1..i} (u(i-n+1) + n)/(i-n+2) Ḡ_n
            let i = self.gregory_scaled.len() - 1;
            let mut acc = Polynomial::zero();
            for n in 1..=i {
                let factor = Polynomial::linear(
                    rat(n as i64, (i - n + 2) as i64),
                    rat((i - n + 1) as i64, (i - n + 2) as i64),
                );
                acc = &acc + &(&factor * &self.gregory_scaled[n]);
            }
            let head = Polynomial::linear(Rational::zero(), rat(-1, i as i64 + 2));
            let next = &head - &acc.scale(&rat(1, i as i64 + 1));
            self.gregory_scaled.push(next);
        }
    }

    pub fn gregory_polynomial(&mut self, m: usize) -> GregoryPolynomial {
        self.extend_gregory_polynomials(m);
        GregoryPolynomial {
            m,
            scaled: self.gregory_scaled[m].clone(),
        }
    }

    pub fn gregory_polynomial_eval(&mut self, m: usize, u: &Rational) -> Result<Rational> {
        self.gregory_polynomial(m).eval(u)
    }

    /// Extended Gregory coefficient `G̃_n^s`, the coefficients of the
    /// reciprocal of `Σ x^n / (n+1)^s`.
    pub fn extended_gregory(&mut self, s: u32, n: usize) -> Rational {
        let table = self
            .extended_gregory
            .entry(s)
            .or_insert_with(|| vec![Rational::one()]);
        while table.len() <= n {
            let i = table.len();
            let acc = (1..=i).fold(Rational::zero(), |acc, k| {
                let w = num_traits::Pow::pow(BigInt::from(k as u64 + 1), s);
                acc + &table[i - k] / from_bigint(w)
            });
            table.push(-acc);
        }
        table[n].clone()
    }

    /// `(t/(e^t - 1))^k`, known through `t^(order-1)`. `k` may be negative.
    fn bernoulli_power(&mut self, k: i64, order: i64) -> &TruncatedLaurentSeries {
        let fresh = match self.bernoulli_powers.get(&k) {
            Some(s) => s.order() < order,
            None => true,
        };
        if fresh {
            let base = exp_minus_one_over_t(order);
            let series = base.pow(-k).expect("constant term is 1");
            self.bernoulli_powers.insert(k, series);
        }
        &self.bernoulli_powers[&k]
    }

    /// Generalized Bernoulli number `B_n^(k) = B_n^(k)(0)`.
    pub fn gen_bernoulli_number(&mut self, n: usize, k: i64) -> Rational {
        let c = self
            .bernoulli_power(k, n as i64 + 1)
            .coeff(n as i64)
            .expect("within order");
        c * from_bigint(factorial(n as u64))
    }

    /// Generalized Bernoulli polynomial `B_n^(k)(x)`: `n!` times the `t^n`
    /// coefficient of `(t/(e^t - 1))^k e^(x t)`.
    pub fn gen_bernoulli_poly(&mut self, n: usize, k: i64, x: &Rational) -> Rational {
        self.gen_bernoulli_symbolic(n, k).eval(x)
    }

    /// `B_n^(k)(x)` as a polynomial in `x`, from the same convolution with
    /// `x` carried symbolically.
    pub fn gen_bernoulli_symbolic(&mut self, n: usize, k: i64) -> Polynomial {
        let base = self.bernoulli_power(k, n as i64 + 1);
        let nf = from_bigint(factorial(n as u64));
        let coeffs = (0..=n)
            .map(|j| {
                let b = base.coeff((n - j) as i64).expect("within order");
                b * &nf / from_bigint(factorial(j as u64))
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// Overwrites a memo entry, populating the table first if needed.
    #[doc(hidden)]
    pub fn inject_fault(&mut self, fault: Fault) {
        match fault {
            Fault::Bernoulli { n, value } => {
                self.bernoulli(n);
                self.bernoulli[n] = value;
            }
            Fault::Gregory { n, value } => {
                self.extend_signed_gregory(n);
                self.signed_gregory[n] = value;
            }
            Fault::ExtendedGregory { s, n, value } => {
                self.extended_gregory(s, n);
                self.extended_gregory.get_mut(&s).expect("populated")[n] = value;
            }
            Fault::EulerianCoeff { n, power, value } => {
                self.eulerian_row(n);
                let row = &mut self.eulerian_rows[n];
                if row.len() <= power {
                    row.resize(power + 1, BigInt::zero());
                }
                row[power] = value.to_integer();
            }
        }
    }

    /// Compares every memoized entry against a fresh computation and returns
    /// a description of each mismatch.
    pub fn audit(&self) -> Vec<String> {
        let mut fresh = NumberCache::new();
        let mut bad = Vec::new();
        for (n, v) in self.bernoulli.iter().enumerate() {
            if *v != fresh.bernoulli(n) {
                bad.push(format!("bernoulli({n}) = {v}"));
            }
        }
        for (n, v) in self.signed_gregory.iter().enumerate() {
            if *v != fresh.gregory_coefficient(n, true) {
                bad.push(format!("signed gregory({n}) = {v}"));
            }
        }
        for (n, row) in self.eulerian_rows.iter().enumerate() {
            if row.as_slice() != fresh.eulerian_row(n) {
                bad.push(format!("eulerian row {n}"));
            }
        }
        for (m, p) in self.gregory_scaled.iter().enumerate() {
            if *p != *fresh.gregory_polynomial(m).scaled() {
                bad.push(format!("gregory polynomial {m}"));
            }
        }
        for (&s, table) in &self.extended_gregory {
            for (n, v) in table.iter().enumerate() {
                if *v != fresh.extended_gregory(s, n) {
                    bad.push(format!("extended gregory (s={s}, n={n}) = {v}"));
                }
            }
        }
        for (&k, series) in &self.bernoulli_powers {
            let again = exp_minus_one_over_t(series.order())
                .pow(-k)
                .expect("constant term is 1");
            if *series != again {
                bad.push(format!("bernoulli power series k={k}"));
            }
        }
        bad
    }
}

/// Hirzebruch number `h_k = Π_{p ≤ k+1 prime} p^⌊k/(p-1)⌋`.
pub fn hirzebruch(k: u64) -> BigInt {
    let limit = (k + 1) as usize;
    let mut composite = vec![false; limit + 1];
    let mut acc = BigInt::one();
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        for q in (p * p..=limit).step_by(p) {
            composite[q] = true;
        }
        let e = k / (p as u64 - 1);
        acc *= num_traits::Pow::pow(BigInt::from(p), e);
    }
    acc
}

pub fn bernoulli(n: usize) -> Rational {
    NumberCache::new().bernoulli(n)
}

pub fn eulerian_polynomial(n: usize) -> Polynomial {
    NumberCache::new().eulerian_polynomial(n)
}

pub fn eulerian_derivative_at_one(u: usize, m: usize) -> Rational {
    NumberCache::new().eulerian_derivative_at_one(u, m)
}

pub fn gregory_coefficient(n: usize, signed: bool) -> Rational {
    NumberCache::new().gregory_coefficient(n, signed)
}

pub fn gregory_polynomial(m: usize) -> GregoryPolynomial {
    NumberCache::new().gregory_polynomial(m)
}

pub fn gregory_polynomial_eval(m: usize, u: &Rational) -> Result<Rational> {
    NumberCache::new().gregory_polynomial_eval(m, u)
}

pub fn extended_gregory(s: u32, n: usize) -> Rational {
    NumberCache::new().extended_gregory(s, n)
}

pub fn gen_bernoulli_poly(n: usize, k: i64, x: &Rational) -> Rational {
    NumberCache::new().gen_bernoulli_poly(n, k, x)
}
