use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::KernelError;

/// Ground field of every matrix in a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// GF(p). Rejects composite moduli and anything that would overflow `u64` products.
    pub fn prime(p: u64) -> Result<Field, KernelError> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(KernelError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp {
                value: reduce_i64(v, *p),
                p: *p,
            },
        }
    }

    /// Parses "a/b", "a" for ℚ and a canonical residue for GF(p).
    pub fn parse(&self, text: &str) -> Result<Scalar, KernelError> {
        let bad = || KernelError::BadScalar {
            text: text.to_string(),
            field: *self,
        };
        match self {
            Field::Rationals => {
                let t = text.trim();
                let q = match t.split_once('/') {
                    Some((n, d)) => {
                        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                        if d.is_zero() {
                            return Err(bad());
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(BigInt::from_str(t).map_err(|_| bad())?),
                };
                Ok(Scalar::Q(q))
            }
            Field::Prime(_) => {
                let v: u64 = text.trim().parse().map_err(|_| bad())?;
                self.residue(v).ok_or_else(bad)
            }
        }
    }

    /// Residue `v` in GF(p); `None` unless `0 <= v < p`. Over ℚ this is just the integer.
    pub fn residue(&self, v: u64) -> Option<Scalar> {
        match self {
            Field::Rationals => Some(Scalar::Q(BigRational::from_integer(BigInt::from(v)))),
            Field::Prime(p) if v < *p => Some(Scalar::Fp { value: v, p: *p }),
            Field::Prime(_) => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn reduce_i64(v: i64, p: u64) -> u64 {
    let r = (v as i128).rem_euclid(p as i128);
    r as u64
}

/// A single field element, tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// Integer value when the scalar is an integer in ℚ or any residue in GF(p).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { value, .. } => i64::try_from(*value).ok(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Element arithmetic used by the dense matrix kernels.
pub(crate) trait Arith {
    type E: Clone + PartialEq + fmt::Debug + Send + Sync;
    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `acc += a * b`
    fn mul_add(&self, acc: &mut Self::E, a: &Self::E, b: &Self::E);
    fn inv(&self, a: &Self::E) -> Self::E;
}

pub(crate) struct QArith;

impl Arith for QArith {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
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
    fn mul_add(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        *acc += a * b;
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

pub(crate) struct ModArith {
    pub p: u64,
}

impl Arith for ModArith {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn mul_add(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b) % self.p;
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat; p is prime and a != 0.
        let mut base = *a % self.p;
        let mut e = self.p - 2;
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_is_enforced() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(5).is_ok());
        assert!(matches!(Field::prime(4), Err(KernelError::NotPrime(4))));
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn parse_and_print_round_trip() {
        let q = Field::Rationals;
        assert_eq!(q.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse("-2").unwrap().to_string(), "-2");
        assert!(q.parse("1/0").is_err());
        let f = Field::Prime(5);
        assert_eq!(f.parse("4").unwrap().to_string(), "4");
        assert!(f.parse("5").is_err());
        assert_eq!(f.from_i64(-1).to_string(), "4");
    }

    #[test]
    fn modular_inverse() {
        let m = ModArith { p: 7 };
        for a in 1..7u64 {
            assert_eq!(m.mul(&a, &m.inv(&a)), 1);
        }
    }
}
