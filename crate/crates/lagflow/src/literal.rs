//! Rational and polynomial literals as they cross the CLI and fixture
//! boundary. Rationals are always strings, `"p/q"` or `"n"`.

use std::str::FromStr;

use lagflow_core::{Poly, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("malformed rational {s:?}: expected \"p/q\" or an integer string"));
    let int = |t: &str| -> Result<BigInt, CliError> {
        if t.is_empty() || t.contains(char::is_whitespace) {
            return Err(bad());
        }
        BigInt::from_str(t).map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(CliError::Usage(format!("malformed rational {s:?}: zero denominator")));
            }
            Ok(Rational::new(int(n)?, d))
        }
    }
}

/// Comma-separated list of rationals, e.g. `0,1/10,1/5`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PolyLiteral {
    Coeffs {
        coeffs: Vec<String>,
    },
    Roots {
        roots: Vec<(String, u32)>,
        #[serde(default)]
        lead: Option<String>,
    },
}

/// Canonical emitted form: `{"coeffs": [...]}`, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(rational_string).collect(),
        }
    }
}

/// Accepts `{"coeffs": ["a0", "a1", ...]}` or
/// `{"roots": [["r1", m1], ...], "lead": "c"}` (lead defaults to 1).
pub fn parse_poly(text: &str) -> Result<Poly, CliError> {
    let lit: PolyLiteral = serde_json::from_str(text).map_err(|e| {
        CliError::Usage(format!(
            "malformed polynomial literal ({e}); expected {{\"coeffs\": [...]}} or {{\"roots\": [[\"r\", m], ...]}}"
        ))
    })?;
    match lit {
        PolyLiteral::Coeffs { coeffs } => Ok(Poly::new(
            coeffs.iter().map(|c| parse_rational(c)).collect::<Result<_, _>>()?,
        )),
        PolyLiteral::Roots { roots, lead } => {
            let lead = match lead {
                Some(l) => parse_rational(&l)?,
                None => Rational::one(),
            };
            if lead.is_zero() {
                return Err(CliError::Usage("roots literal: \"lead\" must be nonzero".into()));
            }
            let mut parsed = Vec::with_capacity(roots.len());
            for (r, m) in roots {
                if m == 0 {
                    return Err(CliError::Usage(format!("roots literal: multiplicity of {r:?} must be positive")));
                }
                parsed.push((parse_rational(&r)?, m));
            }
            Ok(Poly::from_roots(&parsed, lead))
        }
    }
}

pub fn poly_to_json(p: &Poly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("strings serialize")
}
