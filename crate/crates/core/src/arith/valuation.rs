use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A 2-adic valuation of a value that may be zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// Adds a finite shift; infinity absorbs.
    pub fn plus(self, shift: u64) -> Self {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v + shift),
            Valuation::Infinite => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

// Serialized as a JSON number, or the string "inf".
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(v) => Ok(Valuation::Finite(v)),
            Raw::S(s) if s == "inf" => Ok(Valuation::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad valuation {s:?}"))),
        }
    }
}

/// 2-adic valuation of an arbitrary integer; zero maps to `Infinite`.
pub fn nu2_int(x: &BigInt) -> Valuation {
    if x.is_zero() {
        Valuation::Infinite
    } else {
        Valuation::Finite(x.trailing_zeros().expect("nonzero"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentinel() {
        assert_eq!(nu2_int(&BigInt::zero()), Valuation::Infinite);
        assert_eq!(nu2_int(&BigInt::from(-24)), Valuation::Finite(3));
        assert_eq!(Valuation::Infinite.plus(3), Valuation::Infinite);
        let json = serde_json::to_string(&[Valuation::Finite(2), Valuation::Infinite]).unwrap();
        assert_eq!(json, r#"[2,"inf"]"#);
        let back: Vec<Valuation> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![Valuation::Finite(2), Valuation::Infinite]);
    }
}
