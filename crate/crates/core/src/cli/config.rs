use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ExactConfig, DEFAULT_ENUMERATION_CAP};
use crate::numeric::NumericConfig;
use crate::verify::VerifyConfig;

/// Environment variable that overrides the enumeration cap.
pub const ENUM_CAP_ENV: &str = "ORBIDEG_ENUM_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Settings shared by all subcommands. Defaults: JSON output, cap `10^7`,
/// residual `1e-9`, derivative threshold `1e-8`, finite-difference step
/// `1e-5`, seed 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub format: Format,
    pub enumeration_cap: u64,
    pub residual_tol: f64,
    pub derivative_threshold: f64,
    pub fd_step: f64,
    pub seed: u64,
}

impl Default for CliConfig {
    fn default() -> Self {
        let numeric = NumericConfig::default();
        CliConfig {
            format: Format::Json,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            residual_tol: numeric.residual_tol,
            derivative_threshold: numeric.derivative_threshold,
            fd_step: numeric.fd_step,
            seed: 0,
        }
    }
}

impl CliConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::InvalidInput(format!("bad config {}: {e}", path.display())))
    }

    /// Applies `ORBIDEG_ENUM_CAP` when set.
    pub fn with_env(mut self, value: Option<String>) -> Result<Self> {
        if let Some(v) = value {
            self.enumeration_cap = v.trim().parse().map_err(|_| {
                Error::InvalidInput(format!("{ENUM_CAP_ENV}={v} is not an integer"))
            })?;
        }
        Ok(self)
    }

    pub fn exact(&self) -> ExactConfig {
        ExactConfig {
            enumeration_cap: self.enumeration_cap,
        }
    }

    pub fn numeric(&self) -> NumericConfig {
        NumericConfig {
            residual_tol: self.residual_tol,
            derivative_threshold: self.derivative_threshold,
            fd_step: self.fd_step,
            ..NumericConfig::default()
        }
    }

    pub fn verify(&self) -> VerifyConfig {
        VerifyConfig {
            exact: self.exact(),
            numeric: self.numeric(),
            seed: self.seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_stable() {
        let c = CliConfig::default();
        assert_eq!(c.enumeration_cap, 10_000_000);
        assert_eq!(c.residual_tol, 1e-9);
        assert_eq!(c.derivative_threshold, 1e-8);
        assert_eq!(c.fd_step, 1e-5);
        assert_eq!(c.seed, 0);
        assert_eq!(c.format, Format::Json);
    }

    #[test]
    fn partial_json_fills_defaults() {
        let c: CliConfig = serde_json::from_str(r#"{"seed": 7, "format": "text"}"#).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.format, Format::Text);
        assert_eq!(c.enumeration_cap, 10_000_000);
        assert!(serde_json::from_str::<CliConfig>(r#"{"sed": 7}"#).is_err());
    }

    #[test]
    fn env_overrides_cap() {
        let c = CliConfig::default().with_env(Some("12".into())).unwrap();
        assert_eq!(c.enumeration_cap, 12);
        assert!(CliConfig::default().with_env(Some("x".into())).is_err());
    }
}
