//! JSON wire format: `{"poly": ["c0", ...], "exp": [{"base": "p/q", "poly": [...]}]}`
//! with every rational written as a string.

use serde::{Deserialize, Serialize};

use crate::deform::DeformationChain;
use crate::exact::{parse_rational, ExpPoly, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireExpPoly {
    #[serde(default)]
    pub poly: Vec<String>,
    #[serde(default)]
    pub exp: Vec<WireTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireTerm {
    pub base: String,
    pub poly: Vec<String>,
}

fn strings(coeffs: &[Rational]) -> Vec<String> {
    coeffs.iter().map(ToString::to_string).collect()
}

fn rationals(coeffs: &[String]) -> Result<Vec<Rational>> {
    coeffs.iter().map(|c| parse_rational(c)).collect()
}

impl From<&ExpPoly> for WireExpPoly {
    fn from(e: &ExpPoly) -> Self {
        WireExpPoly {
            poly: strings(e.polynomial_part()),
            exp: e
                .terms()
                .filter(|(b, _)| !num_traits::One::is_one(*b))
                .map(|(b, p)| WireTerm {
                    base: b.to_string(),
                    poly: strings(p),
                })
                .collect(),
        }
    }
}

impl TryFrom<&WireExpPoly> for ExpPoly {
    type Error = Error;

    fn try_from(w: &WireExpPoly) -> Result<Self> {
        let mut terms = vec![(Rational::from_integer(1.into()), rationals(&w.poly)?)];
        for t in &w.exp {
            let base = parse_rational(&t.base)?;
            if num_traits::Zero::is_zero(&base) {
                return Err(Error::Parse("zero exponential base".into()));
            }
            terms.push((base, rationals(&t.poly)?));
        }
        Ok(ExpPoly::from_terms(terms))
    }
}

pub fn to_json(e: &ExpPoly) -> serde_json::Value {
    serde_json::to_value(WireExpPoly::from(e)).expect("plain strings serialise")
}

pub fn to_json_string(e: &ExpPoly) -> String {
    to_json(e).to_string()
}

pub fn from_json_str(text: &str) -> Result<ExpPoly> {
    let wire: WireExpPoly =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad ExpPoly JSON: {e}")))?;
    ExpPoly::try_from(&wire)
}

/// A chain is exported as its start and parameters; importing re-runs the
/// recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireChain {
    pub start: WireExpPoly,
    pub params: Vec<String>,
}

pub fn chain_to_json_string(chain: &DeformationChain) -> String {
    let wire = WireChain {
        start: WireExpPoly::from(chain.start()),
        params: strings(&chain.params()),
    };
    serde_json::to_string(&wire).expect("plain strings serialise")
}

pub fn chain_from_json_str(text: &str) -> Result<DeformationChain> {
    let wire: WireChain =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad chain JSON: {e}")))?;
    DeformationChain::new(ExpPoly::try_from(&wire.start)?, &rationals(&wire.params)?)
}
