//! Walk and distance lengths that may be infinite.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// A non-negative length, or `Infinite` when no walk exists.
///
/// `Infinite` compares greater than every finite value. Serialized as a JSON
/// integer, or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ExtLen {
    Finite(usize),
    #[default]
    Infinite,
}

pub use ExtLen::{Finite, Infinite};

impl ExtLen {
    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Finite(k) => Some(k),
            Infinite => None,
        }
    }

    /// `Infinite - 1 = Infinite`, `0 - 1 = 0`.
    pub fn minus_one(self) -> ExtLen {
        match self {
            Finite(k) => Finite(k.saturating_sub(1)),
            Infinite => Infinite,
        }
    }

    pub fn plus(self, k: usize) -> ExtLen {
        match self {
            Finite(a) => Finite(a + k),
            Infinite => Infinite,
        }
    }

    pub fn times(self, k: usize) -> ExtLen {
        match self {
            Finite(a) => Finite(a * k),
            Infinite => Infinite,
        }
    }
}

impl From<usize> for ExtLen {
    fn from(k: usize) -> Self {
        Finite(k)
    }
}

impl From<Option<usize>> for ExtLen {
    fn from(k: Option<usize>) -> Self {
        k.map_or(Infinite, Finite)
    }
}

impl PartialOrd for ExtLen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtLen {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl Add for ExtLen {
    type Output = ExtLen;

    fn add(self, rhs: ExtLen) -> ExtLen {
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl Add<usize> for ExtLen {
    type Output = ExtLen;

    fn add(self, rhs: usize) -> ExtLen {
        self.plus(rhs)
    }
}

impl fmt::Display for ExtLen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(k) => write!(f, "{k}"),
            Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtLen {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(k) => serializer.serialize_u64(*k as u64),
            Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtLen {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExtLenVisitor;

        impl Visitor<'_> for ExtLenVisitor {
            type Value = ExtLen;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtLen, E> {
                Ok(Finite(v as usize))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtLen, E> {
                usize::try_from(v).map(Finite).map_err(|_| E::custom("negative length"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtLen, E> {
                if v == "inf" {
                    Ok(Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        deserializer.deserialize_any(ExtLenVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn infinite_dominates() {
        assert!(Finite(usize::MAX) < Infinite);
        assert_eq!(Infinite.max(Finite(3)), Infinite);
        assert_eq!(Infinite.minus_one(), Infinite);
        assert_eq!(Finite(2) + Infinite, Infinite);
        assert_eq!(Finite(0).minus_one(), Finite(0));
    }

    #[test]
    fn json_encoding() {
        assert_eq!(serde_json::to_string(&Finite(4)).unwrap(), "4");
        assert_eq!(serde_json::to_string(&Infinite).unwrap(), "\"inf\"");
        let back: Vec<ExtLen> = serde_json::from_str("[3, \"inf\"]").unwrap();
        assert_eq!(back, vec![Finite(3), Infinite]);
        assert!(serde_json::from_str::<ExtLen>("\"nan\"").is_err());
    }

    proptest! {
        #[test]
        fn finite_order_is_numeric(a in 0usize..1000, b in 0usize..1000) {
            prop_assert_eq!(Finite(a).cmp(&Finite(b)), a.cmp(&b));
            prop_assert_eq!(Finite(a) + Finite(b), Finite(a + b));
        }
    }
}
