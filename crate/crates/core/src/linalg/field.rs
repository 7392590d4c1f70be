//! Coefficient fields: GF(2), GF(p) for odd primes below 2^31, and exact
//! rationals.

use core::fmt;
use core::str::FromStr;

use alloc::format;
use alloc::string::String;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arithmetic of a coefficient field.
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// 0 for the rationals.
    fn characteristic(&self) -> u32;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Gf2;

impl Field for Gf2 {
    type Elem = bool;

    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn from_i64(&self, v: i64) -> bool {
        v & 1 == 1
    }
    fn is_zero(&self, a: &bool) -> bool {
        !*a
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        a ^ b
    }
    fn sub(&self, a: &bool, b: &bool) -> bool {
        a ^ b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        a & b
    }
    fn neg(&self, a: &bool) -> bool {
        *a
    }
    fn inv(&self, a: &bool) -> bool {
        assert!(*a, "inverse of zero");
        true
    }
    fn characteristic(&self) -> u32 {
        2
    }
}

/// GF(p) for an odd prime `p < 2^31`, plain modular arithmetic on `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut q = 2u64;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::Input("use GF(2) for characteristic 2".into()));
        }
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::Input(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, base: u32, mut e: u32) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
}

/// Exact arbitrary-precision rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
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
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn characteristic(&self) -> u32 {
        0
    }
}

/// Runtime choice of coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Gf2,
    /// An odd prime below 2^31.
    Gfp(u32),
    Rational,
}

impl FieldSpec {
    /// Validating constructor for `GF(p)`; `p = 2` maps to [`FieldSpec::Gf2`].
    pub fn gf(p: u32) -> Result<Self> {
        if p == 2 {
            return Ok(FieldSpec::Gf2);
        }
        PrimeField::new(p).map(|f| FieldSpec::Gfp(f.modulus()))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Gf2 => 2,
            FieldSpec::Gfp(p) => p,
            FieldSpec::Rational => 0,
        }
    }

    /// The probe set standing in for "every field".
    pub const PROBES: [FieldSpec; 3] = [FieldSpec::Gf2, FieldSpec::Gfp(3), FieldSpec::Rational];
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2 => f.write_str("gf2"),
            FieldSpec::Gfp(p) => write!(f, "gf{p}"),
            FieldSpec::Rational => f.write_str("q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "q" | "rational" | "rationals" => Ok(FieldSpec::Rational),
            _ => {
                let digits = lower
                    .strip_prefix("gf")
                    .ok_or_else(|| Error::Input(format!("unknown field {s:?}")))?;
                let p: u32 = digits
                    .parse()
                    .map_err(|_| Error::Input(format!("unknown field {s:?}")))?;
                FieldSpec::gf(p)
            }
        }
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        format!("{f}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7u32 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.sub(&2, &5), 4);
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn parse_field_specs() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::Gf2);
        assert_eq!("GF5".parse::<FieldSpec>().unwrap(), FieldSpec::Gfp(5));
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!("gf4".parse::<FieldSpec>().is_err());
        assert!("reals".parse::<FieldSpec>().is_err());
        assert_eq!(String::from(FieldSpec::Gfp(3)), "gf3");
    }
}
