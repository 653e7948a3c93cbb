//! JSON form of a set function:
//! `{"n": 4, "values": {"1": "0", "2": "1", ...}}`.
//!
//! Keys are decimal bitmasks. String values are exact rationals (`"p/q"` or
//! `"p"`); numeric values select the floating-point backend. Mixing the two
//! in one object is rejected.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{GroundSet, SetFunction, Subset};
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SetFunctionJson {
    pub n: usize,
    pub values: Map<String, Value>,
}

/// A set function loaded from JSON, on whichever backend its values imply.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySetFunction {
    Exact(SetFunction<BigRational>),
    Real(SetFunction<f64>),
}

impl AnySetFunction {
    pub fn ground(&self) -> GroundSet {
        match self {
            AnySetFunction::Exact(f) => f.ground(),
            AnySetFunction::Real(f) => f.ground(),
        }
    }

    pub fn to_real(&self) -> SetFunction<f64> {
        match self {
            AnySetFunction::Exact(f) => f.to_real(),
            AnySetFunction::Real(f) => f.clone(),
        }
    }

    pub fn from_json(json: &SetFunctionJson) -> Result<Self> {
        let ground = GroundSet::new(json.n)?;
        let mut slots: Vec<Option<&Value>> = vec![None; ground.dim()];
        for (key, v) in &json.values {
            let mask: u32 = key
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("subset key `{key}` is not a decimal bitmask")))?;
            let s = Subset(mask);
            ground.check(s)?;
            if s.is_empty() {
                // the empty set is pinned to zero
                if !matches!(v, Value::Number(x) if x.as_f64() == Some(0.0))
                    && !matches!(v, Value::String(x) if parse_rational(x).is_some_and(|r| r == BigRational::from_i64(0)))
                {
                    return Err(Error::Parse("value on the empty set must be 0".into()));
                }
                continue;
            }
            slots[s.index()] = Some(v);
        }
        if let Some(missing) = slots.iter().position(Option::is_none) {
            return Err(Error::Parse(format!("missing value for subset {}", missing + 1)));
        }
        let values: Vec<&Value> = slots.into_iter().flatten().collect();
        if values.iter().all(|v| v.is_string()) {
            let vals = values
                .iter()
                .map(|v| {
                    let s = v.as_str().unwrap_or_default();
                    parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnySetFunction::Exact(SetFunction::new(ground, vals)?))
        } else if values.iter().all(|v| v.is_number()) {
            let vals = values.iter().filter_map(|v| v.as_f64()).collect();
            Ok(AnySetFunction::Real(SetFunction::new(ground, vals)?))
        } else {
            Err(Error::Parse(
                "values must be all rational strings or all numbers".into(),
            ))
        }
    }

}

impl std::str::FromStr for AnySetFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

impl<T: Scalar> SetFunction<T> {
    pub fn to_json(&self) -> SetFunctionJson {
        SetFunctionJson {
            n: self.ground().size(),
            values: self
                .ground()
                .subsets()
                .zip(self.values())
                .map(|(s, v)| (s.mask().to_string(), v.to_json()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_round_trip() {
        let g = GroundSet::new(2).unwrap();
        let f = SetFunction::new(
            g,
            vec![
                BigRational::from_i64(1),
                parse_rational("3/2").unwrap(),
                BigRational::from_i64(2),
            ],
        )
        .unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(text, r#"{"n":2,"values":{"1":"1","2":"3/2","3":"2"}}"#);
        assert_eq!(text.parse::<AnySetFunction>().unwrap(), AnySetFunction::Exact(f));
    }

    #[test]
    fn real_backend_inferred() {
        let f = r#"{"n":2,"values":{"3":2.0,"1":1,"2":1.5}}"#.parse::<AnySetFunction>().unwrap();
        match f {
            AnySetFunction::Real(f) => assert_eq!(f.values(), &[1.0, 1.5, 2.0]),
            other => panic!("expected real backend, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            r#"{"n":2,"values":{"1":"1","2":1,"3":"2"}}"#,
            r#"{"n":2,"values":{"1":"1","2":"1"}}"#,
            r#"{"n":2,"values":{"1":"1","2":"1","3":"2","4":"1"}}"#,
            r#"{"n":2,"values":{"1":"1","2":"x","3":"2"}}"#,
            r#"{"n":7,"values":{}}"#,
        ] {
            assert!(bad.parse::<AnySetFunction>().is_err(), "{bad}");
        }
    }
}
