use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LinalgError;

/// A prime `2 <= p < 2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        if !(2..(1 << 16)).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The coefficient field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(Prime),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self, LinalgError> {
        Prime::new(p).map(FieldSpec::PrimeField)
    }

    /// `0` for the rationals, `p` for `F_p`.
    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p.get(),
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn order(self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(p.get() as u64),
        }
    }

    /// Whether an integer (e.g. a group order) is a unit in the field.
    pub fn is_invertible(self, n: u64) -> bool {
        match self {
            FieldSpec::Rationals => n != 0,
            FieldSpec::PrimeField(p) => n % p.get() as u64 != 0,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Prime(0),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Prime(1),
        }
    }

    /// The image of an integer under the canonical map `Z -> k`.
    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Prime(n.rem_euclid(p.get() as i64) as u32),
        }
    }

    /// Parses a scalar in the text encoding used by all file formats.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, LinalgError> {
        let text = text.trim();
        let bad = || LinalgError::InvalidScalar(text.to_string());
        match self {
            FieldSpec::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if !den.is_positive() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::PrimeField(p) => {
                let v: u32 = text.parse().map_err(|_| bad())?;
                if v >= p.get() {
                    return Err(bad());
                }
                Ok(Scalar::Prime(v))
            }
        }
    }

    /// Checks that a scalar belongs to this field and is canonical.
    pub fn check(self, s: &Scalar) -> Result<(), LinalgError> {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => Ok(()),
            (FieldSpec::PrimeField(p), Scalar::Prime(v)) if *v < p.get() => Ok(()),
            (FieldSpec::PrimeField(_), Scalar::Prime(v)) => {
                Err(LinalgError::InvalidScalar(v.to_string()))
            }
            _ => Err(LinalgError::FieldMismatch),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{}", p.get()),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = LinalgError;

    /// Accepts `Q`, `QQ`, `F<p>`, `GF<p>` and `GF(<p>)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let upper = t.to_ascii_uppercase();
        let digits = upper
            .strip_prefix("GF")
            .or_else(|| upper.strip_prefix('F'))
            .map(|d| d.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| LinalgError::InvalidField(s.to_string()))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| LinalgError::InvalidField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

#[derive(Serialize, Deserialize)]
struct FieldRepr {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u32>,
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            FieldSpec::Rationals => FieldRepr { kind: "Q".into(), p: None },
            FieldSpec::PrimeField(p) => FieldRepr { kind: "Fp".into(), p: Some(p.get()) },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = FieldRepr::deserialize(deserializer)?;
        match repr.kind.as_str() {
            "Q" | "Rationals" => Ok(FieldSpec::Rationals),
            "Fp" | "PrimeField" => {
                let p = repr.p.ok_or_else(|| D::Error::custom("prime field needs \"p\""))?;
                FieldSpec::prime(p).map_err(D::Error::custom)
            }
            other => Err(D::Error::custom(format!("unknown field kind {other:?}"))),
        }
    }
}

/// A single field element. Rationals are always kept in lowest terms with
/// positive denominator; prime-field values lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime(u32),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(v) => *v == 0,
        }
    }

    /// The integer value when the scalar is integral (always for `F_p`).
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => i64::try_from(q.to_integer()).ok(),
            Scalar::Rational(_) => None,
            Scalar::Prime(v) => Some(*v as i64),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Prime(v) => write!(f, "{v}"),
        }
    }
}
