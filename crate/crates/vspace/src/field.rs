//! Exact scalar fields: arbitrary-precision rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::SpaceError;

/// The field a space lives over. Scalars carry no tag of their own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Gf(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    P(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn gf(p: u64) -> Result<Field, SpaceError> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(SpaceError::NotPrime(p));
        }
        Ok(Field::Gf(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Gf(_) => Scalar::P(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Gf(p) => Scalar::P(v.rem_euclid(p as i64) as u64),
        }
    }

    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, SpaceError> {
        if den.is_zero() {
            return Err(SpaceError::ZeroDenominator);
        }
        match *self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(num.clone(), den.clone()))),
            Field::Gf(p) => {
                let m = BigInt::from(p);
                let n = num.mod_floor(&m);
                let d = den.mod_floor(&m);
                if d.is_zero() {
                    return Err(SpaceError::ZeroDenominator);
                }
                let n: u64 = n.try_into().expect("residue fits");
                let d: u64 = d.try_into().expect("residue fits");
                Ok(Scalar::P(n * inv_mod(d, p) % p))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, self) {
            (Scalar::Q(x), Scalar::Q(y), _) => Scalar::Q(x + y),
            (Scalar::P(x), Scalar::P(y), Field::Gf(p)) => Scalar::P((x + y) % p),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, self) {
            (Scalar::Q(x), Scalar::Q(y), _) => Scalar::Q(x * y),
            (Scalar::P(x), Scalar::P(y), Field::Gf(p)) => Scalar::P(x * y % p),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (a, self) {
            (Scalar::Q(x), _) => Scalar::Q(-x),
            (Scalar::P(x), Field::Gf(p)) => Scalar::P((p - x) % p),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Panics on zero; callers only invert pivots.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!self.is_zero(a), "inverse of zero");
        match (a, self) {
            (Scalar::Q(x), _) => Scalar::Q(x.recip()),
            (Scalar::P(x), Field::Gf(p)) => Scalar::P(inv_mod(*x, *p)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn parse(&self, tok: &str) -> Result<Scalar, SpaceError> {
        let bad = || SpaceError::BadScalar(tok.to_string());
        let (n, d) = match tok.split_once('/') {
            Some((n, d)) => (n, d),
            None => (tok, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        self.from_ratio(&n, &d)
    }

    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::P(v) => v.to_string(),
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (a, self) {
            (Scalar::Q(q), Field::Rational) => !q.denom().is_negative(),
            (Scalar::P(v), Field::Gf(p)) => v < p,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Gf(p) => write!(f, "gf {p}"),
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}
