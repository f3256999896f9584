//! Exact rational helpers on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `C(m, 3)`, taken to be zero for `m < 3`.
pub fn binom3(m: i64) -> BigInt {
    if m < 3 {
        return BigInt::zero();
    }
    let m = BigInt::from(m);
    &m * (&m - 1) * (&m - 2) / 6
}

/// `C(m, 2)`, zero for `m < 2`.
pub fn binom2(m: i64) -> BigInt {
    if m < 2 {
        return BigInt::zero();
    }
    let m = BigInt::from(m);
    &m * (&m - 1) / 2
}

/// Returns the numerator when `q` is an integer.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    as_integer(q).and_then(|n| n.to_i64())
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn render(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_str {
    use super::{parse, render, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&render(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).ok_or_else(|| D::Error::custom(format!("not a rational: {s:?}")))
    }
}

/// Serde adapter for maps of rationals.
pub mod serde_str_map {
    use super::{parse, render, Rational};
    use serde::{de::Error, ser::SerializeMap, Deserialize, Deserializer, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<String, Rational>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(k, &render(v))?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<String, Rational>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| match parse(&v) {
                Some(q) => Ok((k, q)),
                None => Err(D::Error::custom(format!("not a rational: {v:?}"))),
            })
            .collect()
    }
}

/// Serde adapter writing big integers as decimal strings.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}
