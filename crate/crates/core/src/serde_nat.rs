//! Serde helpers that encode [`Natural`] values as decimal strings.
//!
//! The reports routinely carry integers far beyond 2^53, so JSON numbers are
//! not a safe representation; decimal strings round-trip exactly everywhere.

use crate::Natural;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;

pub fn serialize<S: Serializer>(n: &Natural, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Natural, D::Error> {
    let raw = String::deserialize(d)?;
    Natural::from_str(&raw).map_err(serde::de::Error::custom)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Natural], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(|n| n.to_string()).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Natural>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .into_iter()
            .map(|raw| Natural::from_str(&raw).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Natural>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|n| n.to_string()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Natural>, D::Error> {
        match Option::<String>::deserialize(d)? {
            None => Ok(None),
            Some(raw) => Natural::from_str(&raw)
                .map(Some)
                .map_err(serde::de::Error::custom),
        }
    }
}
