//! Arbitrary-precision rationals with an inline `i64` fast path.
//!
//! Values that fit in a pair of machine words stay in [`Rational::Small`];
//! anything larger is promoted to a boxed [`BigRational`] and demoted again
//! as soon as it fits. Both variants are always fully reduced with a positive
//! denominator, so derived equality is value equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    /// `num / den` with `den > 0`, `gcd(num, den) = 1` and `num != i64::MIN`.
    Small(i64, i64),
    Large(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn fits(v: i128) -> bool {
    v > i64::MIN as i128 && v <= i64::MAX as i128
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small(0, 1)
    }

    pub fn one() -> Self {
        Rational::Small(1, 1)
    }

    pub fn from_int(v: i64) -> Self {
        if v == i64::MIN {
            Rational::Large(Box::new(BigRational::from_integer(BigInt::from(v))))
        } else {
            Rational::Small(v, 1)
        }
    }

    /// Builds `num / den`, reducing. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        if den < 0 {
            num = -num;
            den = -den;
        }
        if num == 0 {
            return Rational::zero();
        }
        let g = gcd_u128(num.unsigned_abs(), den as u128) as i128;
        if g > 1 {
            num /= g;
            den /= g;
        }
        if fits(num) && fits(den) {
            Rational::Small(num as i64, den as i64)
        } else {
            Rational::Large(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            )))
        }
    }

    /// Takes an already reduced big rational and demotes it when possible.
    pub fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational::Small(n, d);
            }
        }
        Rational::Large(Box::new(r))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        Self::from_big(BigRational::new(num, den))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Large(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Large(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Large(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Large(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small(n, _) => n.signum() as i32,
            Rational::Large(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small(n, d) => Rational::Small(-n, *d),
            Rational::Large(b) => Self::from_big(-(**b).clone()),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, 1), Rational::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) if s != i64::MIN => Rational::Small(s, 1),
                _ => Self::from_i128(*a as i128 + *c as i128, 1),
            },
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a + c, b)
                } else {
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, 1), Rational::Small(c, 1)) => match a.checked_mul(*c) {
                Some(p) if p != i64::MIN => Rational::Small(p, 1),
                _ => Self::from_i128(*a as i128 * *c as i128, 1),
            },
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        match self {
            Rational::Small(0, _) => panic!("inverse of zero"),
            Rational::Small(n, d) => {
                if *n < 0 {
                    Rational::Small(-d, -n)
                } else {
                    Rational::Small(*d, *n)
                }
            }
            Rational::Large(b) => Self::from_big(b.recip()),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, 1), Rational::Small(c, 1)) if *c != 0 && a % c == 0 => {
                Self::from_i128(*a as i128 / *c as i128, 1)
            }
            _ => self.mul(&other.inv()),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reduces modulo a prime; `None` when the denominator vanishes mod `p`.
    pub fn to_mod(&self, p: u64) -> Option<u64> {
        match self {
            Rational::Small(n, d) => {
                let den = (*d as u64) % p;
                if den == 0 {
                    return None;
                }
                let num = (*n as i128).rem_euclid(p as i128) as u64;
                Some(super::scalar::mul_mod(num, super::scalar::inv_mod(den, p), p))
            }
            Rational::Large(b) => {
                let pb = BigInt::from(p);
                let den = b.denom().mod_floor(&pb).to_u64()?;
                if den == 0 {
                    return None;
                }
                let num = b.numer().mod_floor(&pb).to_u64()?;
                Some(super::scalar::mul_mod(num, super::scalar::inv_mod(den, p), p))
            }
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Self::from_bigints(n, d))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Large(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}
