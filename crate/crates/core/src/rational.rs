//! Exact coordinates.
//!
//! Every geometric model in this crate uses exact rationals; string form is
//! `"p/q"` or a bare integer, which is what the JSON model files carry.

use num_rational::Ratio;
use serde::{de, Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Coord = Ratio<i64>;

pub fn int(v: i64) -> Coord {
    Coord::from_integer(v)
}

pub fn ratio(p: i64, q: i64) -> Coord {
    Coord::new(p, q)
}

pub fn parse(s: &str) -> Result<Coord> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Coord::new(p, q))
        }
        None => s.parse::<i64>().map(Coord::from_integer).map_err(|_| bad()),
    }
}

/// Canonical string form: `"3"` for integers, `"-1/4"` otherwise.
pub fn format(c: &Coord) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Raw {
    Str(String),
    Int(i64),
}

impl Raw {
    fn into_coord<E: de::Error>(self) -> std::result::Result<Coord, E> {
        match self {
            Raw::Str(s) => parse(&s).map_err(E::custom),
            Raw::Int(v) => Ok(int(v)),
        }
    }
}

/// serde adapter for `Vec<Coord>` as an array of rational strings.
pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Coord], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for c in v {
            seq.serialize_element(&format(c))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Coord>, D::Error> {
        Vec::<Raw>::deserialize(d)?.into_iter().map(Raw::into_coord).collect()
    }
}

/// serde adapter for a coordinate pair `[a, b]`.
pub mod pair {
    use super::*;
    use serde::ser::SerializeTuple;

    pub fn serialize<S: Serializer>(v: &(Coord, Coord), s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&format(&v.0))?;
        t.serialize_element(&format(&v.1))?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<(Coord, Coord), D::Error> {
        let (a, b) = <(Raw, Raw)>::deserialize(d)?;
        Ok((a.into_coord()?, b.into_coord()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(parse(" 7 / 3 ").unwrap(), ratio(7, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn format_canonical() {
        assert_eq!(format(&ratio(4, 2)), "2");
        assert_eq!(format(&ratio(-3, 12)), "-1/4");
    }
}
