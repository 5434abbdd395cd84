use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, IntPoly, IntPolys, Integers, PrimeField, Rationals, Ring, Variable};
use crate::error::{Error, Result};

/// Tag of the ring a [`Scalar`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Integers,
    Rationals,
    PrimeField(PrimeField),
    Polynomials(Variable),
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Integers => write!(f, "Z"),
            RingTag::Rationals => write!(f, "Q"),
            RingTag::PrimeField(fp) => write!(f, "F_{}", fp.modulus()),
            RingTag::Polynomials(v) => write!(f, "Z[{v}]"),
        }
    }
}

/// A dynamically tagged ring element. Mixed-ring arithmetic is an error
/// rather than an implicit coercion.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod(PrimeField, u32),
    Poly(Variable, IntPoly),
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Int(n.into())
    }

    pub fn rat(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rat(BigRational::new(n.into(), d.into())))
    }

    pub fn modp(n: i64, p: u64) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        Ok(Scalar::Mod(fp, fp.from_i64(n)))
    }

    pub fn poly(var: Variable, coeffs: &[i64]) -> Self {
        Scalar::Poly(var, IntPoly::from_i64s(coeffs))
    }

    pub fn tag(&self) -> RingTag {
        match self {
            Scalar::Int(_) => RingTag::Integers,
            Scalar::Rat(_) => RingTag::Rationals,
            Scalar::Mod(fp, _) => RingTag::PrimeField(*fp),
            Scalar::Poly(v, _) => RingTag::Polynomials(*v),
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.tag() == other.tag() {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.tag().to_string(),
                other.tag().to_string(),
            ))
        }
    }

    fn binary(
        &self,
        other: &Self,
        int: fn(&Integers, &BigInt, &BigInt) -> BigInt,
        rat: fn(&Rationals, &BigRational, &BigRational) -> BigRational,
        modp: fn(&PrimeField, &u32, &u32) -> u32,
        poly: fn(&IntPolys, &IntPoly, &IntPoly) -> IntPoly,
    ) -> Result<Self> {
        self.same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(int(&Integers, a, b)),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat(&Rationals, a, b)),
            (Scalar::Mod(fp, a), Scalar::Mod(_, b)) => Scalar::Mod(*fp, modp(fp, a, b)),
            (Scalar::Poly(v, a), Scalar::Poly(_, b)) => {
                Scalar::Poly(*v, poly(&IntPolys::new(*v), a, b))
            }
            _ => unreachable!("tags already compared"),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.binary(other, Ring::add, Ring::add, Ring::add, Ring::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.binary(other, Ring::sub, Ring::sub, Ring::sub, Ring::sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.binary(other, Ring::mul, Ring::mul, Ring::mul, Ring::mul)
    }

    pub fn neg(&self) -> Self {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod(fp, a) => Scalar::Mod(*fp, fp.neg(a)),
            Scalar::Poly(v, a) => Scalar::Poly(*v, a.neg()),
        }
    }

    /// Exact division; only Q and F_p admit it.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(Rationals.div(a, b)?)),
            (Scalar::Mod(fp, a), Scalar::Mod(_, b)) => Ok(Scalar::Mod(*fp, fp.div(a, b)?)),
            _ => Err(Error::NoDivision(self.tag().to_string())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(a) => Integers.is_zero(a),
            Scalar::Rat(a) => Rationals.is_zero(a),
            Scalar::Mod(_, a) => *a == 0,
            Scalar::Poly(_, a) => a.is_zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(a) => write!(f, "{a}"),
            Scalar::Rat(a) => write!(f, "{a}"),
            Scalar::Mod(_, a) => write!(f, "{a}"),
            Scalar::Poly(v, a) => f.write_str(&a.render(*v)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let sum = Scalar::rat(1, 3).unwrap().add(&Scalar::rat(1, 6).unwrap());
        assert_eq!(sum.unwrap(), Scalar::rat(1, 2).unwrap());

        let prod = Scalar::modp(3, 5).unwrap().mul(&Scalar::modp(4, 5).unwrap());
        assert_eq!(prod.unwrap(), Scalar::modp(2, 5).unwrap());

        let g = Variable::Gamma;
        let prod = Scalar::poly(g, &[1, 1]).mul(&Scalar::poly(g, &[1, -1]));
        assert_eq!(prod.unwrap(), Scalar::poly(g, &[1, 0, -1]));
    }

    #[test]
    fn errors() {
        let mismatch = Scalar::int(1).add(&Scalar::rat(1, 1).unwrap());
        assert!(matches!(mismatch, Err(Error::RingMismatch(_, _))));
        let f5 = Scalar::modp(1, 5).unwrap();
        let f7 = Scalar::modp(1, 7).unwrap();
        assert!(matches!(f5.mul(&f7), Err(Error::RingMismatch(_, _))));
        assert_eq!(
            Scalar::rat(1, 2).unwrap().div(&Scalar::rat(0, 1).unwrap()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            Scalar::modp(3, 5).unwrap().div(&Scalar::modp(5, 5).unwrap()),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            Scalar::int(4).div(&Scalar::int(2)),
            Err(Error::NoDivision(_))
        ));
        assert_eq!(Scalar::modp(1, 9), Err(Error::NotPrime(9)));
        assert_eq!(Scalar::rat(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::rat(-2, 4).unwrap().to_string(), "-1/2");
        assert_eq!(Scalar::modp(-1, 5).unwrap().to_string(), "4");
        assert_eq!(Scalar::poly(Variable::Q, &[0, 1, 1]).to_string(), "q + q^2");
    }
}
