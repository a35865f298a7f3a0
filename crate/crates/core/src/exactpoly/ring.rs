use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::PolyError;

/// A modulus `m >= 2` for the ring of integers mod `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self, PolyError> {
        if m < 2 {
            Err(PolyError::InvalidModulus(m))
        } else {
            Ok(Modulus(m))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Coefficient domain of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    IntegersMod(Modulus),
    Rationals,
}

impl CoefficientRing {
    pub fn integers_mod(m: u64) -> Result<Self, PolyError> {
        Ok(CoefficientRing::IntegersMod(Modulus::new(m)?))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoefficientRing::IntegersMod(m) => Some(m.get()),
            _ => None,
        }
    }

    /// True when every element is represented by an integer.
    pub fn is_integral(&self) -> bool {
        !matches!(self, CoefficientRing::Rationals)
    }

    /// Brings a rational value into this ring's canonical representative.
    ///
    /// Residues mod `m` use the symmetric range `(-m/2, m/2]`, so over `Z/3`
    /// the representatives are `-1, 0, 1`. A rational maps into `Z/m` only when
    /// its denominator is invertible mod `m`.
    pub fn normalize(&self, c: BigRational) -> Result<BigRational, PolyError> {
        match self {
            CoefficientRing::Rationals => Ok(c),
            CoefficientRing::Integers => {
                if c.is_integer() {
                    Ok(c)
                } else {
                    Err(PolyError::NonIntegral(c.to_string()))
                }
            }
            CoefficientRing::IntegersMod(m) => {
                let m = BigInt::from(m.get());
                let numer = c.numer().mod_floor(&m);
                let value = if c.denom().is_one() {
                    numer
                } else {
                    let inv = mod_inverse(&c.denom().mod_floor(&m), &m)
                        .ok_or_else(|| PolyError::NonIntegral(c.to_string()))?;
                    (numer * inv).mod_floor(&m)
                };
                Ok(BigRational::from_integer(symmetric_residue(value, &m)))
            }
        }
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> BigRational {
        self.normalize(BigRational::from_integer(n.into()))
            .expect("integers embed in every coefficient ring")
    }
}

/// Representative of `value` mod `m` in `(-m/2, m/2]`.
pub fn symmetric_residue(value: BigInt, m: &BigInt) -> BigInt {
    let r = value.mod_floor(m);
    if (&r * 2u32) > *m {
        r - m
    } else {
        r
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.abs().is_one() {
        Some((e.x * e.gcd.signum()).mod_floor(m))
    } else {
        None
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::IntegersMod(m) => write!(f, "Z/{}", m.get()),
            CoefficientRing::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for CoefficientRing {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Z" => Ok(CoefficientRing::Integers),
            "Q" => Ok(CoefficientRing::Rationals),
            other => {
                let m = other
                    .strip_prefix("Z/")
                    .and_then(|m| m.trim().parse::<u64>().ok())
                    .ok_or_else(|| PolyError::Parse {
                        position: 0,
                        message: format!("unknown coefficient ring `{other}`"),
                    })?;
                CoefficientRing::integers_mod(m)
            }
        }
    }
}
