use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Ring, RingKind};

/// Name of the indeterminate of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    Gamma,
    Q,
    Alpha,
}

impl Variable {
    fn symbol(self) -> &'static str {
        match self {
            Variable::Gamma => "g",
            Variable::Q => "q",
            Variable::Alpha => "a",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Dense univariate integer polynomial. The coefficient vector never ends in
/// a zero, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient, `None` for zero.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) + other.coeff(k))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn is_palindromic(&self) -> bool {
        let Some(lo) = self.low_degree() else {
            return true;
        };
        let body = &self.coeffs[lo..];
        body.iter().eq(body.iter().rev())
    }

    pub fn render(&self, var: Variable) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let unit = mag.is_one();
            match k {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(var.symbol());
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Variable::Q))
    }
}

/// The ring Z[x] with a named variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntPolys {
    pub var: Variable,
}

impl IntPolys {
    pub fn new(var: Variable) -> Self {
        Self { var }
    }
}

impl Ring for IntPolys {
    type Elem = IntPoly;

    fn kind(&self) -> RingKind {
        RingKind::Polynomials(self.var)
    }
    fn zero(&self) -> IntPoly {
        IntPoly::zero()
    }
    fn one(&self) -> IntPoly {
        IntPoly::constant(1)
    }
    fn from_int(&self, n: &BigInt) -> IntPoly {
        IntPoly::constant(n.clone())
    }
    fn is_zero(&self, a: &IntPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a.add(b)
    }
    fn sub(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a.sub(b)
    }
    fn mul(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a.mul(b)
    }
    fn neg(&self, a: &IntPoly) -> IntPoly {
        a.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let one_plus = IntPoly::from_i64s(&[1, 1]);
        let one_minus = IntPoly::from_i64s(&[1, -1]);
        assert_eq!(one_plus.mul(&one_minus), IntPoly::from_i64s(&[1, 0, -1]));
    }

    #[test]
    fn trailing_zeros_normalised() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        let z = IntPoly::from_i64s(&[1]).sub(&IntPoly::constant(1));
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.low_degree(), None);
    }

    #[test]
    fn rendering() {
        let p = IntPoly::from_i64s(&[1, 0, -3, 1]);
        assert_eq!(p.render(Variable::Gamma), "1 - 3*g^2 + g^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn palindromes() {
        assert!(IntPoly::from_i64s(&[0, 0, 1, 2, 1]).is_palindromic());
        assert!(!IntPoly::from_i64s(&[1, 2]).is_palindromic());
    }
}
