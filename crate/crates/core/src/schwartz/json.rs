//! `{"basis":"hermite-2pi","coeffs":[[re,im],...]}`

use num_complex::Complex64;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::SchwartzFn;
use crate::error::{Error, Result};

pub const SCHWARTZ_BASIS_TAG: &str = "hermite-2pi";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    basis: String,
    coeffs: Vec<[f64; 2]>,
}

/// Validates a coefficient list read from a document.
pub(crate) fn decode_coeffs(basis: &str, coeffs: &[[f64; 2]]) -> Result<Vec<Complex64>> {
    if basis != SCHWARTZ_BASIS_TAG {
        return Err(Error::Format(format!(
            "unsupported basis `{basis}`, expected `{SCHWARTZ_BASIS_TAG}`"
        )));
    }
    if coeffs.is_empty() {
        return Err(Error::Format("coefficient list is empty".into()));
    }
    coeffs
        .iter()
        .enumerate()
        .map(|(n, [re, im])| {
            if re.is_finite() && im.is_finite() {
                Ok(Complex64::new(*re, *im))
            } else {
                Err(Error::Format(format!("coefficient {n} is not finite")))
            }
        })
        .collect()
}

pub(crate) fn encode_coeffs(coeffs: &[Complex64]) -> Vec<[f64; 2]> {
    coeffs.iter().map(|c| [c.re, c.im]).collect()
}

impl Serialize for SchwartzFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Doc {
            basis: SCHWARTZ_BASIS_TAG.into(),
            coeffs: encode_coeffs(self.coeffs()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchwartzFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = Doc::deserialize(d)?;
        let coeffs = decode_coeffs(&doc.basis, &doc.coeffs).map_err(de::Error::custom)?;
        Ok(SchwartzFn::from_coeffs(coeffs))
    }
}

impl SchwartzFn {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coefficients are finite")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
