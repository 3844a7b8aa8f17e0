//! Optional `key=value` configuration file.

use std::path::Path;

use thiserror::Error;

pub const DEFAULT_ORDER_CAP: i64 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest order any command will accept.
    pub order_cap: i64,
    /// Worker threads for parallel term evaluation; `None` leaves the default.
    pub threads: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order_cap: DEFAULT_ORDER_CAP,
            threads: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("config line {line}: expected key=value, found `{text}`")]
    Syntax { line: usize, text: String },
    #[error("config line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("config line {line}: bad value `{value}` for `{key}`")]
    BadValue { line: usize, key: String, value: String },
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let Some((key, value)) = body.split_once('=') else {
                return Err(ConfigError::Syntax {
                    line,
                    text: body.to_string(),
                });
            };
            let (key, value) = (key.trim(), value.trim());
            let bad = || ConfigError::BadValue {
                line,
                key: key.to_string(),
                value: value.to_string(),
            };
            match key {
                "order_cap" => cfg.order_cap = value.parse().map_err(|_| bad())?,
                "threads" => {
                    let n: usize = value.parse().map_err(|_| bad())?;
                    if n == 0 {
                        return Err(bad());
                    }
                    cfg.threads = Some(n);
                }
                _ => {
                    return Err(ConfigError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })
                }
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Config::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_comments() {
        let cfg = Config::parse("# nothing\n\n").unwrap();
        assert_eq!(cfg, Config::default());
        let cfg = Config::parse("order_cap = 12  # small\nthreads=2\n").unwrap();
        assert_eq!(cfg.order_cap, 12);
        assert_eq!(cfg.threads, Some(2));
    }

    #[test]
    fn rejects_junk() {
        assert!(matches!(Config::parse("order_cap"), Err(ConfigError::Syntax { line: 1, .. })));
        assert!(matches!(Config::parse("\ncache=3"), Err(ConfigError::UnknownKey { line: 2, .. })));
        assert!(matches!(Config::parse("threads=0"), Err(ConfigError::BadValue { .. })));
    }
}
