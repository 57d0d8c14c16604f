//! Exact scalars: rational numbers and residues modulo a prime.
//!
//! Both backends live in one [`Scalar`] enum tagged by [`Field`]. Mixing
//! backends inside a single arithmetic operation is a programming error and
//! panics; the public operations that accept user data check
//! [`Scalar::field`] up front and return [`Error::FieldMismatch`] instead.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Upper bound (exclusive) on supported primes so products fit in `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Prime field `F_p`; `p` must be prime, at least 5 and below 2^31.
    pub fn prime(p: u64) -> Result<Field> {
        if !(5..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_int(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_int(self, 1)
    }

    pub fn int(self, v: i64) -> Scalar {
        Scalar::from_int(self, v)
    }

    pub fn check(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self, other))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, prime: u64 },
}

impl Scalar {
    pub fn from_int(field: Field, v: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u64,
                prime: p,
            },
        }
    }

    pub fn from_bigint(field: Field, v: &BigInt) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => Scalar::Modular {
                value: reduce_bigint(v, p),
                prime: p,
            },
        }
    }

    /// `num/den` in the given field. Over `F_p` a denominator divisible by `p`
    /// is rejected.
    pub fn from_ratio(field: Field, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        match field {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let d = reduce_bigint(den, p);
                if d == 0 {
                    return Err(Error::DenominatorDivisibleByPrime(p));
                }
                let n = reduce_bigint(num, p);
                Ok(Scalar::Modular {
                    value: n * inv_mod(d, p) % p,
                    prime: p,
                })
            }
        }
    }

    pub fn from_rational(field: Field, q: &BigRational) -> Result<Scalar> {
        Scalar::from_ratio(field, q.numer(), q.denom())
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { prime, .. } => Field::Prime(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, prime } => Scalar::Modular {
                value: inv_mod(*value, *prime),
                prime: *prime,
            },
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Rational view. Residues are lifted to their representative in `[0, p)`.
    pub fn as_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Modular { value, .. } => BigRational::from_integer(BigInt::from(*value)),
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Modular { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => Some(*value as i64),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    /// Reduce a rational scalar into `F_p`.
    pub fn reduce(&self, field: Field) -> Result<Scalar> {
        match self {
            Scalar::Rational(q) => Scalar::from_rational(field, q),
            Scalar::Modular { .. } => {
                self.field().check(field)?;
                Ok(self.clone())
            }
        }
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    v.mod_floor(&m).to_u64().expect("residue fits in u64")
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn same_prime(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "mixing prime fields F_{a} and F_{b}");
    a
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, prime: p }, Scalar::Modular { value: b, prime: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Modular { value: (a + b) % p, prime: p }
            }
            _ => panic!("mixing rational and modular scalars"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, prime: p }, Scalar::Modular { value: b, prime: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Modular { value: (a + p - b) % p, prime: p }
            }
            _ => panic!("mixing rational and modular scalars"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, prime: p }, Scalar::Modular { value: b, prime: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Modular { value: a * b % p, prime: p }
            }
            _ => panic!("mixing rational and modular scalars"),
        }
    }
}

/// Panics on division by zero, like the integer operators.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, prime } => Scalar::Modular {
                value: (prime - value) % prime,
                prime: *prime,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(Field::Rational, &BigInt::from(n), &BigInt::from(d)).unwrap()
    }

    #[test]
    fn rationals_are_reduced() {
        let a = q(6, -4);
        match &a {
            Scalar::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
        assert_eq!(a.to_string(), "-3/2");
    }

    #[test]
    fn modular_basics() {
        let f = Field::prime(13).unwrap();
        let a = f.int(-1);
        assert_eq!(a.residue(), Some(12));
        assert_eq!((&a * &a).residue(), Some(1));
        let half = Scalar::from_ratio(f, &BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!((&half + &half), f.one());
        assert!(matches!(
            Scalar::from_ratio(f, &BigInt::from(1), &BigInt::from(26)),
            Err(Error::DenominatorDivisibleByPrime(13))
        ));
    }

    #[test]
    fn prime_validation() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(3).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(MAX_PRIME + 11).is_err());
    }

    #[test]
    #[should_panic(expected = "mixing")]
    fn mixing_backends_panics() {
        let _ = Field::Rational.one() + Field::Prime(7).one();
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn division_undoes_multiplication(an in -10_000i64..10_000, ad in 1i64..500,
                                          bn in -10_000i64..10_000, bd in 1i64..500) {
            prop_assume!(bn != 0);
            let a = q(an, ad);
            let b = q(bn, bd);
            prop_assert_eq!(&(&a / &b) * &b, a);
        }

        #[test]
        fn modular_division_undoes_multiplication(a in 0u64..1_000_000, b in 1u64..1_000_000) {
            let f = Field::prime(1_000_003).unwrap();
            let a = f.int(a as i64);
            let b = f.int(b as i64);
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert!(a.residue().unwrap() < 1_000_003);
        }
    }
}
