//! The textual ring description language.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Declarative description of a computable commutative ring.
///
/// Serialized as JSON with a `kind` tag, e.g. `{"kind":"IntegersMod","n":6}`.
/// Ideal generators and relations are element literals of the base ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingDescriptor {
    Integers,
    IntegersMod { n: u64 },
    PrimeField { p: u64 },
    PolyQuotient { p: u64, vars: Vec<String>, relations: Vec<String> },
    Product { factors: Vec<RingDescriptor> },
    Quotient { base: Box<RingDescriptor>, ideal: Vec<String> },
    Excision { base: Box<RingDescriptor>, ideal: Vec<String> },
    PolyExt { base: Box<RingDescriptor>, var: String },
}

impl RingDescriptor {
    /// Parses either the JSON form or a shorthand alias: `Z`, `Z/6`, `F5`,
    /// `F_5`, `GF(5)`, optionally followed by `[X]` for a polynomial extension.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| Error::Parse(format!("ring DSL: {e}")));
        }
        if let Some(open) = text.rfind('[') {
            if text.ends_with(']') {
                let var = text[open + 1..text.len() - 1].trim();
                if var.is_empty() || !var.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(Error::Parse(format!("bad polynomial variable in {text:?}")));
                }
                let base = Self::parse(&text[..open])?;
                return Ok(RingDescriptor::PolyExt { base: Box::new(base), var: var.to_string() });
            }
        }
        let number = |s: &str| -> Result<u64> {
            s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("unknown ring alias {text:?}")))
        };
        if text == "Z" {
            return Ok(RingDescriptor::Integers);
        }
        if let Some(rest) = text.strip_prefix("Z/") {
            return Ok(RingDescriptor::IntegersMod { n: number(rest)? });
        }
        if let Some(rest) = text.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
            return Ok(RingDescriptor::PrimeField { p: number(rest)? });
        }
        if let Some(rest) = text.strip_prefix("F_").or_else(|| text.strip_prefix('F')) {
            return Ok(RingDescriptor::PrimeField { p: number(rest)? });
        }
        Err(Error::Parse(format!("unknown ring alias {text:?}")))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("descriptor serializes")
    }

    /// Reads a JSON object, or a string holding an alias.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        match v {
            serde_json::Value::String(s) => Self::parse(s),
            other => serde_json::from_value(other.clone()).map_err(|e| Error::Parse(format!("ring DSL: {e}"))),
        }
    }

    /// Canonical JSON text; aliases and explicit DSL agree on it.
    pub fn to_dsl(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::IntegersMod { n } => write!(f, "Z/{n}"),
            RingDescriptor::PrimeField { p } => write!(f, "F{p}"),
            RingDescriptor::PolyQuotient { p, vars, relations } => {
                write!(f, "F{p}[{}]/({})", vars.join(","), relations.join(","))
            }
            RingDescriptor::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|r| r.to_string()).collect();
                write!(f, "{}", parts.join(" x "))
            }
            RingDescriptor::Quotient { base, ideal } => write!(f, "({base})/({})", ideal.join(",")),
            RingDescriptor::Excision { base, ideal } => write!(f, "{base} (+) ({})", ideal.join(",")),
            RingDescriptor::PolyExt { base, var } => write!(f, "{base}[{var}]"),
        }
    }
}
