//! Exact coefficient rings.
//!
//! Every algorithm in the crate is generic over [`Ring`] (and [`Field`] where
//! elimination is needed). A ring is a runtime value rather than a marker type
//! because the prime field carries its modulus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

mod poly;
mod scalar;

pub use poly::{IntPoly, IntPolys, Variable};
pub use scalar::{RingTag, Scalar};

/// Which concrete ring a [`Ring`] value is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    PrimeField(u32),
    Polynomials(Variable),
}

impl RingKind {
    /// Characteristic-zero rings on which the sl2 action (with its integer
    /// structure constants) is meaningful as a Lie algebra action.
    pub fn supports_lie_action(self) -> bool {
        matches!(self, RingKind::Integers | RingKind::Rationals)
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::PrimeField(p) => write!(f, "F_{p}"),
            RingKind::Polynomials(v) => write!(f, "Z[{v}]"),
        }
    }
}

pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn kind(&self) -> RingKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// Arbitrary precision integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn kind(&self) -> RingKind {
        RingKind::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }
}

/// Arbitrary precision rationals, always reduced with positive denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn kind(&self) -> RingKind {
        RingKind::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
}

/// The prime field F_p for p < 2^16. Residues live in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn reduce(&self, n: &BigInt) -> u32 {
        n.mod_floor(&BigInt::from(self.p)).to_u32().expect("residue fits")
    }

    /// All field elements `0..p`.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }
}

impl Ring for PrimeField {
    type Elem = u32;

    fn kind(&self) -> RingKind {
        RingKind::PrimeField(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_int(&self, n: &BigInt) -> u32 {
        self.reduce(n)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        (self.p - a) % self.p
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u32) -> Result<u32> {
        if (*a).is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2)
        Ok(self.pow(a, self.p - 2))
    }
}

/// Exact binomial coefficient; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc = acc * BigInt::from(a - t) / BigInt::from(t + 1);
    }
    acc
}

/// `binomial` as a machine integer, for counts known to be small.
pub fn binomial_usize(a: usize, b: usize) -> usize {
    binomial(a as u64, b as u64)
        .to_usize()
        .expect("binomial coefficient fits in usize")
}

/// Sign helper: `(-1)^n` as an `i64`.
pub fn sign_pow(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_sum() {
        assert_eq!(Rationals.add(&q(1, 3), &q(1, 6)), q(1, 2));
    }

    #[test]
    fn rationals_stay_reduced() {
        let x = Rationals.mul(&q(2, -4), &q(3, 1));
        assert_eq!(*x.numer(), BigInt::from(-3));
        assert_eq!(*x.denom(), BigInt::from(2));
    }

    #[test]
    fn fp_product() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.mul(&3, &4), 2);
        assert_eq!(f5.from_i64(-1), 4);
        assert_eq!(f5.inv(&2).unwrap(), 3);
        assert_eq!(f5.inv(&0), Err(Error::DivisionByZero));
    }

    #[test]
    fn nonprime_modulus_rejected() {
        assert_eq!(PrimeField::new(6), Err(Error::NotPrime(6)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(65537), Err(Error::NotPrime(65537)));
        assert!(PrimeField::new(65521).is_ok());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 4), BigInt::from(35));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        // exceeds 64 bits
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn pow_matches_repeated_product() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.pow(&3, 6), 1);
        assert_eq!(Integers.pow(&BigInt::from(-2), 5), BigInt::from(-32));
    }
}
