//! Sparse multivariate polynomials with exact rational coefficients, and a
//! small dense univariate type used for gcd computations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::{var_name, Exponent};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    dimension: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl SparsePolynomial {
    pub fn zero(dimension: usize) -> Self {
        SparsePolynomial {
            dimension,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational, dimension: usize) -> Self {
        Self::monomial(c, vec![0; dimension])
    }

    pub fn one(dimension: usize) -> Self {
        Self::constant(Rational::one(), dimension)
    }

    pub fn monomial(c: Rational, exponent: Exponent) -> Self {
        let dimension = exponent.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        SparsePolynomial { dimension, terms }
    }

    /// The `i`-th coordinate function.
    pub fn variable(i: usize, dimension: usize) -> Result<Self> {
        if i >= dimension {
            return Err(Error::VariableOutOfRange { index: i, dimension });
        }
        let mut e = vec![0; dimension];
        e[i] = 1;
        Ok(Self::monomial(Rational::one(), e))
    }

    /// Collects terms, merging repeated exponents and dropping zeros.
    pub fn from_terms(
        dimension: usize,
        terms: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dimension);
        for (e, c) in terms {
            if e.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dimension);
        }
        SparsePolynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// `c * x^shift * self`.
    pub fn mul_term(&self, c: &Rational, shift: &[u32]) -> Self {
        if c.is_zero() {
            return Self::zero(self.dimension);
        }
        SparsePolynomial {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), a * c))
                .collect(),
        }
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.dimension {
            return Err(Error::VariableOutOfRange {
                index: i,
                dimension: self.dimension,
            });
        }
        let mut out = Self::zero(self.dimension);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(BigInt::from(e[i])));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.dimension)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Terms whose exponents satisfy `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(&[u32]) -> bool) -> Self {
        SparsePolynomial {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Same polynomial viewed in `total` variables with its own variables
    /// starting at `offset`.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        SparsePolynomial {
            dimension: total,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = vec![0; total];
                    v[offset..offset + self.dimension].copy_from_slice(e);
                    (v, c.clone())
                })
                .collect(),
        }
    }

    fn assert_same_dim(&self, other: &Self) {
        assert_eq!(self.dimension, other.dimension, "polynomial dimension mismatch");
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.assert_same_dim(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.assert_same_dim(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    // exponents add when terms multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.assert_same_dim(rhs);
        let mut out = SparsePolynomial::zero(self.dimension);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.dimension;
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        var_name(i, d)
                    } else {
                        format!("{}^{}", var_name(i, d), k)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial, coefficients from degree 0 upward, with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePolynomial {
    coeffs: Vec<Rational>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x * self`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Rational::zero()];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| {
                    self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
                        + other.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
                })
                .collect(),
        )
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs[dd].clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let q = &r[top] / &lead;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                r[idx] -= &q * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Removes factors of `x`.
    pub fn strip_zero_roots(&self) -> Self {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        Self::new(self.coeffs[k..].to_vec())
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*u"),
                _ => format!("({c})*u^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn poly(d: usize, terms: &[(i64, &[u32])]) -> SparsePolynomial {
        SparsePolynomial::from_terms(d, terms.iter().map(|(c, e)| (e.to_vec(), int(*c)))).unwrap()
    }

    #[test]
    fn partials() {
        let f = poly(2, &[(1, &[3, 0]), (1, &[0, 4])]);
        assert_eq!(f.partial_derivative(0).unwrap(), poly(2, &[(3, &[2, 0])]));
        assert!(poly(2, &[(5, &[0, 0])]).partial_derivative(0).unwrap().is_zero());
        let g = poly(2, &[(1, &[2, 3])]);
        assert_eq!(g.partial_derivative(1).unwrap(), poly(2, &[(3, &[2, 2])]));
        assert!(f.partial_derivative(2).is_err());
    }

    #[test]
    fn ring_operations() {
        let s_plus_t = poly(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let sq = &s_plus_t * &s_plus_t;
        assert_eq!(sq, poly(2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]));
        let diff = &sq - &sq;
        assert!(diff.is_zero());
        assert_eq!(&s_plus_t + &(-&s_plus_t), SparsePolynomial::zero(2));
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = SparsePolynomial::from_terms(1, vec![(vec![1], int(2)), (vec![1], int(-2))]).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn evaluation() {
        let f = poly(2, &[(1, &[3, 0]), (1, &[0, 4])]);
        assert_eq!(f.evaluate(&[rat(1, 2), int(1)]).unwrap(), rat(9, 8));
    }

    #[test]
    fn display() {
        let f = poly(2, &[(1, &[3, 0]), (-2, &[0, 4]), (7, &[0, 0])]);
        assert_eq!(f.to_string(), "s^3 - 2*t^4 + 7");
    }

    #[test]
    fn univariate_gcd() {
        // (1+u)^2 and its derivative 2(1+u) share the factor 1+u
        let p = UnivariatePolynomial::new(vec![int(1), int(2), int(1)]);
        let g = p.gcd(&p.derivative());
        assert_eq!(g, UnivariatePolynomial::new(vec![int(1), int(1)]));
        let q = UnivariatePolynomial::new(vec![int(1), int(0), int(1)]);
        assert_eq!(q.gcd(&q.derivative()).degree(), Some(0));
        let x3 = UnivariatePolynomial::new(vec![int(0), int(0), int(0), int(4)]);
        assert_eq!(x3.strip_zero_roots().degree(), Some(0));
    }
}
