//! Coefficient fields: the rationals and prime fields GF(p).

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Serialize, Serializer};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Prime field with the given modulus (`p < 2^63`).
    Prime(u64),
}

/// Element of a [`Field`].
///
/// Prime-field elements carry their modulus; combining elements of two
/// different fields is a programming error and panics. Polynomial-level
/// operations check field compatibility up front and report
/// [`Error::FieldMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { value: u64, modulus: u64 },
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero in GF({p})");
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field {
    /// GF(p), checking that `p` is a prime below 2^63.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 63 || !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
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
            Field::Rational => Scalar::Q(Rational::from_int(v)),
            Field::Prime(p) => Scalar::Fp {
                value: (v as i128).rem_euclid(*p as i128) as u64,
                modulus: *p,
            },
        }
    }

    /// Maps a rational into this field. `None` if the denominator vanishes.
    pub fn from_rational(&self, r: &Rational) -> Option<Scalar> {
        match self {
            Field::Rational => Some(Scalar::Q(r.clone())),
            Field::Prime(p) => r.to_mod(*p).map(|value| Scalar::Fp { value, modulus: *p }),
        }
    }

    /// A uniformly random element; over the rationals an integer in
    /// `[-bound, bound]`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::from_int(rng.gen_range(-bound..=bound))),
            Field::Prime(p) => Scalar::Fp {
                value: rng.gen_range(0..*p),
                modulus: *p,
            },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "QQ" {
            return Ok(Field::Rational);
        }
        if let Some(inner) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
            let p: u64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus in `{t}`")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!("unknown field `{t}` (expected QQ or GF(p))")))
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// Sign used for display and normalization. Prime-field elements use the
    /// symmetric representative in `(-p/2, p/2]`.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Q(r) => r.signum(),
            Scalar::Fp { value, modulus } => {
                if *value == 0 {
                    0
                } else if *value > modulus / 2 {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => {
                Scalar::Fp { value: add_mod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.sub(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => {
                Scalar::Fp { value: sub_mod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => {
                Scalar::Fp { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: sub_mod(0, *value, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.inv()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Panics on division by zero.
    pub fn div(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.div(b)),
            _ => self.mul(&o.inv()),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.pow(e)),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: pow_mod(*value, e as u64, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }

    /// Residue of a prime-field element.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Q(_) => None,
            Scalar::Fp { value, .. } => Some(*value),
        }
    }

    /// Reduces into another field (rationals map into any prime field).
    pub fn convert(&self, target: Field) -> Option<Scalar> {
        match (self, target) {
            (Scalar::Q(r), f) => f.from_rational(r),
            (Scalar::Fp { modulus, .. }, Field::Prime(p)) if *modulus == p => Some(self.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { value, modulus } => {
                if *value > modulus / 2 {
                    write!(f, "-{}", modulus - value)
                } else {
                    write!(f, "{value}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(65521));
        assert!(!is_prime_u64(65523));
        assert!(is_prime_u64(2305843009213693951));
        assert!(!is_prime_u64(1));
        assert!(Field::prime(65536).is_err());
    }

    #[test]
    fn field_parse_round_trip() {
        for s in ["QQ", "GF(65521)", "GF(7)"] {
            assert_eq!(s.parse::<Field>().unwrap().to_string(), s);
        }
        assert!("GF(8)".parse::<Field>().is_err());
        assert!("RR".parse::<Field>().is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.add(&b), f.from_i64(1));
        assert_eq!(a.mul(&b), f.from_i64(1));
        assert_eq!(a.div(&b), f.from_i64(2));
        assert_eq!(f.from_i64(-1).to_string(), "-1");
    }

    #[test]
    #[should_panic(expected = "mismatch")]
    fn mixed_moduli_panic() {
        let _ = Field::Prime(7).one().add(&Field::Prime(11).one());
    }
}
