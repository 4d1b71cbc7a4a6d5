//! Serde adapters writing naturals as decimal strings.
//!
//! Use with `#[serde(with = "serde_decimal")]` on a `BigUint` field, or
//! `#[serde(with = "serde_decimal::vec")]` on a `Vec<BigUint>`.

use num_bigint::BigUint;
use serde::{de, Deserialize, Deserializer, Serializer};

use crate::modarith::parse_natural;

pub fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigUint, D::Error> {
    let s = String::deserialize(deserializer)?;
    parse_natural(&s).map_err(de::Error::custom)
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<BigUint>, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter()
            .map(|s| parse_natural(s).map_err(de::Error::custom))
            .collect()
    }
}
