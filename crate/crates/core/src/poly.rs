//! Dense univariate polynomials over [`Rational`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// Coefficients indexed by power. The highest stored coefficient is nonzero;
/// the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * inner) + &Polynomial::constant(c.clone())
        })
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `self(x^2)`.
    pub fn square_argument(&self) -> Self {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^power`.
    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Synthetic division by `x - root`: returns the quotient and `self(root)`.
    pub fn divide_by_root(&self, root: &Rational) -> (Polynomial, Rational) {
        if self.is_zero() {
            return (Polynomial::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                carry = value;
            } else {
                quotient[i - 1] = value.clone();
                carry = value;
            }
        }
        (Polynomial::new(quotient), carry)
    }

    /// Coefficients `r_j` with `self(x) = Σ r_j (x - center)^j`, by repeated
    /// synthetic division.
    pub fn taylor_shift(&self, center: &Rational) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut rest = self.clone();
        while !rest.is_zero() {
            let (q, r) = rest.divide_by_root(center);
            out.push(r);
            rest = q;
        }
        out
    }

    /// Euclidean division. `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let d_deg = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Some((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + d_deg] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        Some((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(lead) => a.scale(&lead.recip()),
            None => a,
        }
    }

    /// Renders with the given variable name in the generating-function
    /// expression grammar, ascending powers: `1 - 4*x + x^2`.
    pub fn display_with(&self, var: &str) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                let _ = write!(out, "{mag}");
            }
            if i > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    let _ = write!(out, "^{i}");
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
