//! Line-oriented `key = value` configuration with strict key checking,
//! and the flag > config > default resolution into run settings.

use std::fmt;
use std::path::Path;

use bijulia_core::{BicomplexClass, IterParams, Palette};

use crate::parse::{parse_rgb, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigError {
    Io(String),
    /// Unknown key, reported by name.
    UnknownKey(String),
    Value(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Io(m) => write!(f, "config: {m}"),
            ConfigError::UnknownKey(k) => write!(f, "config: unknown key `{k}`"),
            ConfigError::Value(m) => write!(f, "config: {m}"),
        }
    }
}

impl std::error::Error for ConfigError {}

/// Values read from a config file; `None` means "not set here".
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Config {
    pub max_iter: Option<u32>,
    pub de_threshold: Option<f64>,
    pub escape_safety: Option<f64>,
    pub resolution: Option<String>,
    pub window: Option<String>,
    pub threads: Option<usize>,
    pub background: Option<[u8; 3]>,
    pub palette: [Option<[u8; 3]>; 5],
}

const PALETTE_KEYS: [(&str, usize); 5] = [
    ("palette.j2", 0),
    ("palette.k2_interior", 1),
    ("palette.f2_bounded", 2),
    ("palette.f2_unbounded_mixed", 3),
    ("palette.f2_unbounded", 4),
];

impl Config {
    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
        Config::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::Value(format!(
                    "line {}: expected `key = value`, got `{raw}`",
                    lineno + 1
                )));
            };
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let bad = |what: &str| ConfigError::Value(format!("key `{key}`: {what} (got `{value}`)"));
        match key {
            "max_iter" => {
                self.max_iter = Some(value.parse().map_err(|_| bad("expected an integer"))?)
            }
            "de_threshold" => {
                let v: f64 = value.parse().map_err(|_| bad("expected a number"))?;
                if !(v > 0.0) {
                    return Err(bad("must be positive"));
                }
                self.de_threshold = Some(v);
            }
            "escape_safety" => {
                let v: f64 = value.parse().map_err(|_| bad("expected a number"))?;
                if !(v > 0.0) {
                    return Err(bad("must be positive"));
                }
                self.escape_safety = Some(v);
            }
            "resolution" => self.resolution = Some(value.to_string()),
            "window" => self.window = Some(value.to_string()),
            "threads" => {
                self.threads = Some(value.parse().map_err(|_| bad("expected an integer"))?)
            }
            "background" => {
                self.background =
                    Some(parse_rgb(value).map_err(|ParseError(m)| ConfigError::Value(m))?)
            }
            _ => {
                for (name, at) in PALETTE_KEYS {
                    if key == name {
                        self.palette[at] =
                            Some(parse_rgb(value).map_err(|ParseError(m)| ConfigError::Value(m))?);
                        return Ok(());
                    }
                }
                return Err(ConfigError::UnknownKey(key.to_string()));
            }
        }
        Ok(())
    }
}

/// Flag values as given on the command line; `None` means "not passed".
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub max_iter: Option<u32>,
    pub de_threshold: Option<f64>,
    pub escape_safety: Option<f64>,
    pub resolution: Option<String>,
    pub window: Option<String>,
    pub threads: Option<usize>,
    pub background: Option<[u8; 3]>,
}

/// Fully resolved run settings (flag > config > default).
#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub max_iter: u32,
    pub de_threshold: f64,
    pub escape_safety: f64,
    /// Textual window/resolution defaults; commands parse them against
    /// the slice's free-axis count.
    pub resolution: String,
    pub window: String,
    /// 0 means "use available parallelism".
    pub threads: usize,
    pub background: [u8; 3],
    pub palette: Palette,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_iter: 500,
            de_threshold: 1e-3,
            escape_safety: 1.0,
            resolution: "65".to_string(),
            window: "-1.5:1.5".to_string(),
            threads: 0,
            background: [0, 0, 0],
            palette: Palette::default(),
        }
    }
}

impl Settings {
    pub fn resolve(flags: &Overrides, config: &Config) -> Settings {
        let mut s = Settings::default();
        // Config layer.
        if let Some(v) = config.max_iter {
            s.max_iter = v;
        }
        if let Some(v) = config.de_threshold {
            s.de_threshold = v;
        }
        if let Some(v) = config.escape_safety {
            s.escape_safety = v;
        }
        if let Some(v) = &config.resolution {
            s.resolution = v.clone();
        }
        if let Some(v) = &config.window {
            s.window = v.clone();
        }
        if let Some(v) = config.threads {
            s.threads = v;
        }
        if let Some(v) = config.background {
            s.background = v;
        }
        for (at, slot) in config.palette.iter().enumerate() {
            if let Some(rgb) = slot {
                s.palette
                    .set_color(BicomplexClass::from_ordinal(at as u8).unwrap(), *rgb);
            }
        }
        // Flag layer.
        if let Some(v) = flags.max_iter {
            s.max_iter = v;
        }
        if let Some(v) = flags.de_threshold {
            s.de_threshold = v;
        }
        if let Some(v) = flags.escape_safety {
            s.escape_safety = v;
        }
        if let Some(v) = &flags.resolution {
            s.resolution = v.clone();
        }
        if let Some(v) = &flags.window {
            s.window = v.clone();
        }
        if let Some(v) = flags.threads {
            s.threads = v;
        }
        if let Some(v) = flags.background {
            s.background = v;
        }
        s
    }

    pub fn iter_params(&self) -> IterParams {
        IterParams {
            max_iter: self.max_iter,
            escape_radius: None,
            escape_safety: self.escape_safety,
            de_threshold: self.de_threshold,
            tol: bijulia_core::NULL_CONE_TOL,
        }
    }

    /// Stable `key=value` dump of every resolved setting.
    pub fn dump(&self) -> String {
        let hex = |c: [u8; 3]| format!("{:02x}{:02x}{:02x}", c[0], c[1], c[2]);
        let mut out = String::new();
        out.push_str(&format!("max_iter={}\n", self.max_iter));
        out.push_str(&format!("de_threshold={}\n", self.de_threshold));
        out.push_str(&format!("escape_safety={}\n", self.escape_safety));
        out.push_str(&format!("resolution={}\n", self.resolution));
        out.push_str(&format!("window={}\n", self.window));
        out.push_str(&format!("threads={}\n", self.threads));
        out.push_str(&format!("background={}\n", hex(self.background)));
        for (name, at) in PALETTE_KEYS {
            let class = BicomplexClass::from_ordinal(at as u8).unwrap();
            out.push_str(&format!("{name}={}\n", hex(self.palette.color(class))));
        }
        out
    }
}
