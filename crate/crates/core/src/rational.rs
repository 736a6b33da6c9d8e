//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(p.into())
}

/// Always `p/q` in lowest terms with positive `q`, including `q = 1`.
pub fn format(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q`, a plain integer, or a terminating decimal like `0.25`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = if whole.is_empty() || whole == "-" { BigInt::zero() } else { whole.parse().ok()? };
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().ok()?;
        let mag = whole.abs() * &scale + frac;
        let num = if negative { -mag } else { mag };
        return Some(BigRational::new(num, scale));
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// Smallest integer not below `r`.
pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Serde adapter storing a [`Rational`] as `"p/q"`.
pub mod serde_str {
    use super::*;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}")))
    }
}

/// Serde adapter for [`BigInt`] as a JSON number when it fits in `i64`,
/// otherwise as a decimal string.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(BigInt::from(x)),
            Repr::Str(s) => s.parse().map_err(D::Error::custom),
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                match x.to_i64() {
                    Some(i) => seq.serialize_element(&i)?,
                    None => seq.serialize_element(&x.to_string())?,
                }
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?
                .into_iter()
                .map(|r| match r {
                    Repr::Num(x) => Ok(BigInt::from(x)),
                    Repr::Str(s) => s.parse().map_err(D::Error::custom),
                })
                .collect()
        }
    }
}
