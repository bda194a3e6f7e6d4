//! Serde helpers that write big integers as decimal strings.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

fn parse<'de, D: Deserializer<'de>>(s: &str) -> Result<BigUint, D::Error> {
    BigUint::from_str(s).map_err(|_| D::Error::custom("expected a decimal integer string"))
}

pub mod biguint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings.iter().map(|s| parse::<D>(s)).collect()
    }
}

pub mod factor_counts {
    use super::*;
    use crate::loops::LoopFactor;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        factor: LoopFactor,
        multiplicity: String,
    }

    pub fn serialize<S: Serializer>(v: &[(LoopFactor, BigUint)], s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = v
            .iter()
            .map(|(f, n)| Entry {
                factor: f.clone(),
                multiplicity: n.to_string(),
            })
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(LoopFactor, BigUint)>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        entries
            .into_iter()
            .map(|e| Ok((e.factor, parse::<D>(&e.multiplicity)?)))
            .collect()
    }
}

pub mod subset_map {
    use super::*;
    use crate::complex::VertexSubset;
    use alloc::collections::BTreeMap;

    pub fn serialize<S: Serializer, T: Serialize>(map: &BTreeMap<VertexSubset, T>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(map.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>, T: Deserialize<'de>>(
        d: D,
    ) -> Result<BTreeMap<VertexSubset, T>, D::Error> {
        Ok(Vec::<(VertexSubset, T)>::deserialize(d)?.into_iter().collect())
    }
}
