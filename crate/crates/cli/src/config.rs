//! Run configuration: flags, an optional flat `key = value` file, defaults,
//! and validation. Flags override file values; both use the same keys.

use std::fmt;

use glhat::checks::{self, CheckConfig};
use glhat::scalar::{ParamPoint, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tap,
    Text,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Format::Json => write!(f, "json"),
            Format::Tap => write!(f, "tap"),
            Format::Text => write!(f, "text"),
        }
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n_list: Vec<usize>,
    pub param_points: Vec<(Rational, Rational)>,
    pub cutoff: i64,
    pub guard: i64,
    pub m_max: i64,
    pub s_range: (i64, i64),
    pub checks: Vec<String>,
    pub jobs: usize,
    pub format: Format,
    pub seed: u64,
    pub g2_fixture: Option<String>,
}

/// A human-readable configuration error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigInvalid(pub String);

impl fmt::Display for ConfigInvalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid configuration: {}", self.0)
    }
}

impl std::error::Error for ConfigInvalid {}

fn invalid<T>(msg: impl Into<String>) -> Result<T, ConfigInvalid> {
    Err(ConfigInvalid(msg.into()))
}

/// Raw key/value settings accumulated from the file and flags.
#[derive(Debug, Clone, Default)]
pub struct RawSettings {
    entries: Vec<(String, String)>,
}

impl RawSettings {
    pub fn set(&mut self, key: &str, value: &str) {
        self.entries.push((key.to_owned(), value.to_owned()));
    }

    fn last(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .rev()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Entries in insertion order, for layering flags over a file.
    pub fn entries_for_layering(&self) -> Vec<(String, String)> {
        self.entries.clone()
    }
}

/// Parses the flat `key = value` configuration file format. Blank lines and
/// `#` comments are ignored; later entries win.
pub fn parse_config_file(text: &str) -> Result<RawSettings, ConfigInvalid> {
    let mut out = RawSettings::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return invalid(format!("line {}: expected 'key = value'", lineno + 1));
        };
        let key = key.trim();
        if !is_known_key(key) {
            return invalid(format!("line {}: unknown key {key:?}", lineno + 1));
        }
        out.set(key, value.trim());
    }
    Ok(out)
}

pub const KNOWN_KEYS: &[&str] = &[
    "n",
    "params",
    "trunc",
    "guard",
    "m-max",
    "s-range",
    "checks",
    "jobs",
    "format",
    "seed",
    "g2-fixture",
];

fn is_known_key(key: &str) -> bool {
    KNOWN_KEYS.contains(&key)
}

fn parse_i64(key: &str, value: &str) -> Result<i64, ConfigInvalid> {
    value
        .trim()
        .parse::<i64>()
        .map_err(|_| ConfigInvalid(format!("{key}: expected an integer, got {value:?}")))
}

fn parse_rational(key: &str, value: &str) -> Result<Rational, ConfigInvalid> {
    value
        .trim()
        .parse::<Rational>()
        .map_err(|e| ConfigInvalid(format!("{key}: bad rational {value:?}: {e}")))
}

/// Resolves raw settings into a validated [`RunConfig`].
pub fn resolve(settings: &RawSettings) -> Result<RunConfig, ConfigInvalid> {
    let n_list: Vec<usize> = match settings.last("n") {
        None => vec![3, 4, 5],
        Some(v) => v
            .split(',')
            .map(|part| {
                let n = parse_i64("n", part)?;
                if n < 3 {
                    return invalid(format!("n: rank must be at least 3, got {n}"));
                }
                Ok(n as usize)
            })
            .collect::<Result<_, _>>()?,
    };
    if n_list.is_empty() {
        return invalid("n: empty rank list");
    }

    let param_points: Vec<(Rational, Rational)> = match settings.last("params") {
        None => glhat::scalar::default_points(),
        Some(v) => v
            .split(';')
            .map(|pair| {
                let Some((a, b)) = pair.split_once(',') else {
                    return invalid(format!("params: expected 'eps1,eps2', got {pair:?}"));
                };
                Ok((parse_rational("params", a)?, parse_rational("params", b)?))
            })
            .collect::<Result<_, _>>()?,
    };
    if param_points.is_empty() {
        return invalid("params: empty parameter list");
    }

    let m_max = match settings.last("m-max") {
        None => 3,
        Some(v) => parse_i64("m-max", v)?,
    };
    if m_max < 1 {
        return invalid(format!("m-max: must be at least 1, got {m_max}"));
    }

    let cutoff = match settings.last("trunc") {
        None => 12,
        Some(v) => parse_i64("trunc", v)?,
    };
    if cutoff < 2 * m_max + 6 {
        return invalid(format!(
            "trunc: cutoff {cutoff} is below 2*m_max + 6 = {}",
            2 * m_max + 6
        ));
    }

    let guard = match settings.last("guard") {
        None => 4,
        Some(v) => parse_i64("guard", v)?,
    };
    if guard < 2 {
        return invalid(format!("guard: must be at least 2, got {guard}"));
    }

    let s_range = match settings.last("s-range") {
        None => (-4, 4),
        Some(v) => {
            let Some((lo, hi)) = v.split_once(',') else {
                return invalid(format!("s-range: expected 'lo,hi', got {v:?}"));
            };
            let lo = parse_i64("s-range", lo)?;
            let hi = parse_i64("s-range", hi)?;
            if lo > hi {
                return invalid(format!("s-range: empty interval {lo}..{hi}"));
            }
            (lo, hi)
        }
    };

    let checks: Vec<String> = match settings.last("checks") {
        None | Some("all") => checks::registry().iter().map(|d| d.id.to_owned()).collect(),
        Some(list) => {
            let ids: Vec<String> = list.split(',').map(|s| s.trim().to_owned()).collect();
            for id in &ids {
                if checks::find_check(id).is_none() {
                    return invalid(format!("checks: unknown check id {id:?}"));
                }
            }
            ids
        }
    };
    if checks.is_empty() {
        return invalid("checks: empty check list");
    }

    let jobs = match settings.last("jobs") {
        None => std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1),
        Some(v) => {
            let j = parse_i64("jobs", v)?;
            if j < 1 {
                return invalid(format!("jobs: must be at least 1, got {j}"));
            }
            j as usize
        }
    };

    let format = match settings.last("format") {
        None => Format::Text,
        Some("json") => Format::Json,
        Some("tap") => Format::Tap,
        Some("text") => Format::Text,
        Some(other) => return invalid(format!("format: expected json|tap|text, got {other:?}")),
    };

    let seed = match settings.last("seed") {
        None => 0x5eed_cafe,
        Some(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|_| ConfigInvalid(format!("seed: expected an unsigned integer, got {v:?}")))?,
    };

    let g2_fixture = match settings.last("g2-fixture") {
        None => None,
        Some(path) => Some(std::fs::read_to_string(path).map_err(|e| {
            ConfigInvalid(format!("g2-fixture: cannot read {path:?}: {e}"))
        })?),
    };

    // the parameter points must admit the evaluation regime at every rank
    for &n in &n_list {
        for (eps1, eps2) in &param_points {
            if let Err(e) = ParamPoint::new(eps1.clone(), eps2.clone(), n, true) {
                return invalid(format!(
                    "params: point ({eps1}, {eps2}) at rank {n}: {e}"
                ));
            }
        }
    }

    Ok(RunConfig {
        n_list,
        param_points,
        cutoff,
        guard,
        m_max,
        s_range,
        checks,
        jobs,
        format,
        seed,
        g2_fixture,
    })
}

impl RunConfig {
    pub fn check_config(&self) -> CheckConfig {
        CheckConfig {
            cutoff: self.cutoff,
            guard: self.guard,
            m_max: self.m_max,
            s_range: self.s_range,
            seed: self.seed,
            trials: 120,
            g2_fixture: self.g2_fixture.clone(),
        }
    }
}
