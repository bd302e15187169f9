use std::path::Path;

use serde::Deserialize;

use crate::args::{Cli, Format};
use crate::error::CliError;

pub const HEIGHT_CAP: u32 = 12;
pub const DEGREE_CAP: u32 = 8;
pub const CAP_ENV: &str = "ROOTPOLY_CAP_OVERRIDE";

/// Keys accepted in a config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "type")]
    pub root_type: Option<String>,
    pub k: Option<toml::Value>,
    pub format: Option<String>,
    pub sequential: Option<bool>,
    pub height_cap: Option<u32>,
    pub degree_cap: Option<u32>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("bad config: {}", e.message())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub height: u32,
    pub degree: u32,
}

impl Caps {
    /// Config values replace the defaults; the environment override can
    /// only raise them.
    pub fn resolve(file: &FileConfig, env: Option<&str>) -> Result<Self, CliError> {
        let mut caps = Caps {
            height: file.height_cap.unwrap_or(HEIGHT_CAP),
            degree: file.degree_cap.unwrap_or(DEGREE_CAP),
        };
        if let Some(raw) = env {
            let n: u32 = raw
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{CAP_ENV} must be a nonnegative integer, got {raw:?}")))?;
            caps.height = caps.height.max(n);
            caps.degree = caps.degree.max(n);
        }
        Ok(caps)
    }

    pub fn check_height(&self, what: &str, h: i64) -> Result<(), CliError> {
        if h > self.height as i64 {
            return Err(CliError::Usage(format!(
                "{what} has height {h}, above the cap {}; raise it with height_cap or {CAP_ENV}",
                self.height
            )));
        }
        Ok(())
    }

    pub fn check_degree(&self, what: &str, d: u64) -> Result<(), CliError> {
        if d > self.degree as u64 {
            return Err(CliError::Usage(format!(
                "{what} has degree {d}, above the cap {}; raise it with degree_cap or {CAP_ENV}",
                self.degree
            )));
        }
        Ok(())
    }
}

/// Command-line flags merged over the config file.
#[derive(Debug, Clone)]
pub struct Settings {
    pub root_type: Option<String>,
    pub k: Option<String>,
    pub format: Format,
    pub sequential: bool,
    pub caps: Caps,
}

impl Settings {
    pub fn resolve(cli: &Cli, file: FileConfig, env: Option<&str>) -> Result<Self, CliError> {
        let caps = Caps::resolve(&file, env)?;
        let file_format = match file.format.as_deref() {
            None => None,
            Some("json") => Some(Format::Json),
            Some("latex") => Some(Format::Latex),
            Some("csv") => Some(Format::Csv),
            Some(other) => return Err(CliError::Usage(format!("bad format {other:?} in config"))),
        };
        let file_k = match file.k {
            None => None,
            Some(toml::Value::String(s)) => Some(s),
            Some(toml::Value::Integer(i)) => Some(i.to_string()),
            Some(toml::Value::Array(a)) => Some(
                a.iter()
                    .map(|v| v.as_integer().map(|i| i.to_string()))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| CliError::Usage("config k must hold integers".into()))?
                    .join(","),
            ),
            Some(other) => return Err(CliError::Usage(format!("bad k {other} in config"))),
        };
        Ok(Settings {
            root_type: cli.root_type.clone().or(file.root_type),
            k: cli.k.clone().or(file_k),
            format: cli.format.or(file_format).unwrap_or(Format::Json),
            sequential: cli.sequential || file.sequential.unwrap_or(false),
            caps,
        })
    }
}
