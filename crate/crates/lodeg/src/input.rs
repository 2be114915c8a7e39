//! Variety files.
//!
//! ```json
//! {
//!   "variables": ["x1", "x2", "x3"],
//!   "polynomials": ["x1^2 + x2^2 + x3^2 - 100"],
//!   "assumed_irreducible": true,
//!   "homogeneous": false
//! }
//! ```
//!
//! The two flags are optional. `homogeneous: true` asserts that every
//! polynomial is homogeneous and is checked.

use std::fmt;
use std::path::Path;

use lodeg_core::field::Rationals;
use lodeg_core::monomial::MonomialOrder;
use lodeg_core::parse::parse_polynomial;
use lodeg_core::poly::PolyRing;
use lodeg_core::variety::VarietySpec;
use serde::Deserialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyFile {
    pub variables: Vec<String>,
    pub polynomials: Vec<String>,
    #[serde(default = "yes")]
    pub assumed_irreducible: bool,
    #[serde(default)]
    pub homogeneous: Option<bool>,
}

fn yes() -> bool {
    true
}

/// A rejected input file, located in the source text when possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl InputError {
    fn plain(message: impl Into<String>) -> Self {
        InputError {
            line: None,
            column: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for InputError {}

/// A parsed input with its digest.
#[derive(Debug, Clone)]
pub struct LoadedVariety {
    pub file: VarietyFile,
    pub spec: VarietySpec<Rationals>,
    pub sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Line and column (1-based) of byte offset `pos`.
fn locate(text: &str, pos: usize) -> (usize, usize) {
    let before = &text[..pos.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

/// Byte offset of the opening quote of the `k`-th polynomial string.
fn polynomial_offset(text: &str, file: &VarietyFile, k: usize) -> Option<usize> {
    let key = text.find("\"polynomials\"")?;
    let mut from = key;
    for (j, p) in file.polynomials.iter().enumerate() {
        let lit = serde_json::to_string(p).ok()?;
        let at = from + text[from..].find(&lit)?;
        if j == k {
            return Some(at);
        }
        from = at + lit.len();
    }
    None
}

pub fn parse_variety(text: &str) -> Result<LoadedVariety, InputError> {
    let file: VarietyFile = serde_json::from_str(text).map_err(|e| InputError {
        line: Some(e.line()),
        column: Some(e.column()),
        message: e.to_string(),
    })?;
    if file.variables.is_empty() {
        return Err(InputError::plain("\"variables\" is empty"));
    }
    for (k, v) in file.variables.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(InputError::plain(format!("variable {k} ({v:?}) is not an identifier")));
        }
        if file.variables[..k].contains(v) {
            return Err(InputError::plain(format!("variable {v:?} is listed twice")));
        }
    }
    if file.polynomials.is_empty() {
        return Err(InputError::plain("\"polynomials\" is empty"));
    }
    let ring = PolyRing::new(Rationals, file.variables.iter().cloned(), MonomialOrder::Grevlex);
    let mut gens = Vec::with_capacity(file.polynomials.len());
    for (k, text_k) in file.polynomials.iter().enumerate() {
        match parse_polynomial(&ring, text_k) {
            Ok(p) => gens.push(p),
            Err(lodeg_core::Error::Parse { column, message }) => {
                let (line, col) = match polynomial_offset(text, &file, k) {
                    // +1 skips the quote; exact only for strings without escapes
                    Some(at) => {
                        let (l, c) = locate(text, at);
                        (Some(l), Some(c + column))
                    }
                    None => (None, None),
                };
                return Err(InputError {
                    line,
                    column: col,
                    message: format!("polynomial {k}: {message} (column {column} of {text_k:?})"),
                });
            }
            Err(e) => return Err(InputError::plain(format!("polynomial {k}: {e}"))),
        }
    }
    let spec = VarietySpec::new(ring, gens)
        .map_err(|e| InputError::plain(e.to_string()))?
        .with_assumed_irreducible(file.assumed_irreducible);
    if file.homogeneous == Some(true) {
        if let Some(k) = spec.first_inhomogeneous() {
            return Err(InputError::plain(format!(
                "file declares homogeneous input but polynomial {k} is not homogeneous"
            )));
        }
    }
    Ok(LoadedVariety {
        file,
        spec,
        sha256: sha256_hex(text.as_bytes()),
    })
}

pub fn read_variety(path: &Path) -> Result<LoadedVariety, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::plain(format!("cannot read {}: {e}", path.display())))?;
    parse_variety(&text)
}
