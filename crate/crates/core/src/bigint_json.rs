//! Serde adapters rendering `BigUint` as a bare JSON number in full decimal.
//!
//! Relies on serde_json's `arbitrary_precision` feature, so the digits are
//! carried verbatim in both directions and never pass through `f64`.

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

fn to_number<E: serde::ser::Error>(v: &BigUint) -> Result<Number, E> {
    v.to_string().parse::<Number>().map_err(E::custom)
}

fn from_number<E: serde::de::Error>(n: &Number) -> Result<BigUint, E> {
    n.to_string()
        .parse::<BigUint>()
        .map_err(|_| E::custom(format!("expected a non-negative integer, got {n}")))
}

pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    to_number::<S::Error>(v)?.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    from_number(&Number::deserialize(d)?)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let nums = v
            .iter()
            .map(to_number::<S::Error>)
            .collect::<Result<Vec<_>, _>>()?;
        nums.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Number>::deserialize(d)?
            .iter()
            .map(from_number::<D::Error>)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    struct Wrap {
        #[serde(with = "super")]
        x: BigUint,
        #[serde(with = "super::vec")]
        xs: Vec<BigUint>,
    }

    #[test]
    fn huge_values_stay_exact() {
        let x: BigUint = "123456789012345678901234567890123456789".parse().unwrap();
        let w = Wrap { x: x.clone(), xs: vec![BigUint::from(0u8), x] };
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(
            s,
            r#"{"x":123456789012345678901234567890123456789,"xs":[0,123456789012345678901234567890123456789]}"#
        );
        let back: Wrap = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn rejects_negative_and_fractional() {
        assert!(serde_json::from_str::<Wrap>(r#"{"x":-1,"xs":[]}"#).is_err());
        assert!(serde_json::from_str::<Wrap>(r#"{"x":1.5,"xs":[]}"#).is_err());
    }
}
