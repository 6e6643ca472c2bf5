use std::path::PathBuf;

use painleve_core::catalog::CatalogError;
use painleve_core::diffpoly::DiffPolyError;
use painleve_core::exactnum::ParseError;
use painleve_core::numint::NumIntError;
use painleve_core::weyl::WeylError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{flag}: {source}")]
    Family {
        flag: &'static str,
        source: CatalogError,
    },
    #[error("{flag} {text:?}: {source}")]
    Param {
        flag: &'static str,
        text: String,
        source: ParseError,
    },
    #[error("{flag}: {source}{}", hint.as_ref().map(|h| format!("; {h}")).unwrap_or_default())]
    Equation {
        flag: &'static str,
        hint: Option<String>,
        source: Box<CatalogError>,
    },
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    NumInt(#[from] NumIntError),
    #[error(transparent)]
    DiffPoly(#[from] DiffPolyError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// `"input"` errors exit with 2; everything else with 1.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::DiffPoly(_) => "internal",
            _ => "input",
        }
    }
}
