//! Fan files (JSON `{"rank", "rays", "cones"}`) and divisor coefficient
//! files (integers separated by whitespace or commas, `#` comments).

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::LatticeVector;

#[derive(Serialize, Deserialize)]
struct FanDocument {
    rank: usize,
    rays: Vec<Vec<Number>>,
    cones: Vec<Vec<usize>>,
}

fn parse_error(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        message: message.into(),
    }
}

pub fn fan_to_json(fan: &Fan) -> String {
    let doc = FanDocument {
        rank: fan.rank(),
        rays: fan
            .rays()
            .iter()
            .map(|r| {
                r.coords()
                    .iter()
                    .map(|c| Number::from_str(&c.to_string()).expect("integer literal"))
                    .collect()
            })
            .collect(),
        cones: fan.cones().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn fan_from_json(text: &str) -> Result<Fan> {
    let doc: FanDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let rays = doc
        .rays
        .iter()
        .map(|r| {
            r.iter()
                .map(|n| {
                    BigInt::from_str(&n.to_string())
                        .map_err(|_| parse_error(format!("ray entry {n} is not an integer")))
                })
                .collect::<Result<Vec<_>>>()
                .and_then(LatticeVector::new)
        })
        .collect::<Result<Vec<_>>>()?;
    Fan::new(doc.rank, rays, doc.cones)
}

/// Parses divisor coefficients, one integer per ray.
pub fn parse_divisor_coefficients(text: &str) -> Result<Vec<BigInt>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            out.push(BigInt::from_str(tok).map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("expected an integer, found {tok:?}"),
            })?);
        }
    }
    Ok(out)
}

pub fn divisor_coefficients_to_string(coeffs: &[BigInt]) -> String {
    let parts: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
    parts.join(" ") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_round_trip() {
        for name in fixtures::names() {
            let fan = fixtures::by_name(&name).unwrap();
            let text = fan_to_json(&fan);
            assert_eq!(fan_from_json(&text).unwrap(), *fan, "{name}");
            assert_eq!(fan_to_json(&fan_from_json(&text).unwrap()), text);
        }
    }

    #[test]
    fn big_entries_survive() {
        let text = r#"{"rank":1,"rays":[[1],[-1]],"cones":[[0],[1]]}"#;
        assert!(fan_from_json(text).unwrap().is_complete());
        let coeffs =
            parse_divisor_coefficients("123456789012345678901234567890, -3 # tail\n\n4").unwrap();
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[0].to_string(), "123456789012345678901234567890");
        let back = parse_divisor_coefficients(&divisor_coefficients_to_string(&coeffs)).unwrap();
        assert_eq!(back, coeffs);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(fan_from_json("{"), Err(Error::Parse { .. })));
        assert!(fan_from_json(r#"{"rank":1,"rays":[[1.5]],"cones":[[0]]}"#).is_err());
        assert_eq!(
            parse_divisor_coefficients("1 2\n x").unwrap_err(),
            Error::Parse {
                line: 2,
                message: "expected an integer, found \"x\"".into()
            }
        );
    }
}
