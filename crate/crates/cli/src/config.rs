//! Run configuration: flags override GG_* environment variables, which
//! override the config file, which overrides the defaults.

use gg_core::Caps;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const ENV_MAX_LATTICE: &str = "GG_MAX_LATTICE";
pub const ENV_MAX_VERTICES: &str = "GG_MAX_VERTICES";
pub const ENV_THREADS: &str = "GG_THREADS";

const KNOWN_KEYS: &[&str] = &["max_lattice", "max_vertices", "assoc_check_max", "threads", "out_dir", "strict"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub caps: Caps,
    pub threads: usize,
    pub out_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { caps: Caps::default(), threads: default_threads(), out_dir: None }
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Values given on the command line; `None` means not given.
#[derive(Clone, Debug, Default)]
pub struct ConfigFlags {
    pub config: Option<PathBuf>,
    pub max_lattice: Option<usize>,
    pub max_vertices: Option<u64>,
    pub threads: Option<usize>,
    pub out_dir: Option<PathBuf>,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn positive<T: std::str::FromStr + PartialEq + Default>(key: &str, raw: &str) -> Result<T, ConfigError> {
    match raw.trim().parse::<T>() {
        Ok(v) if v != T::default() => Ok(v),
        _ => Err(ConfigError(format!("{key} must be a positive integer, got `{raw}`"))),
    }
}

/// Parses a key = value file. Unknown keys are rejected.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, toml::Value>, ConfigError> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| ConfigError(format!("config file: {e}")))?;
    for key in table.keys() {
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(ConfigError(format!("unknown config key `{key}`")));
        }
    }
    Ok(table.into_iter().collect())
}

fn file_int(map: &BTreeMap<String, toml::Value>, key: &str) -> Result<Option<u64>, ConfigError> {
    match map.get(key) {
        None => Ok(None),
        Some(toml::Value::Integer(i)) if *i > 0 => Ok(Some(*i as u64)),
        Some(v) => Err(ConfigError(format!("{key} must be a positive integer, got {v}"))),
    }
}

impl RunConfig {
    pub fn resolve(flags: &ConfigFlags, env: &BTreeMap<String, String>) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &flags.config {
            cfg.apply_file(path)?;
        }
        if let Some(v) = env.get(ENV_MAX_LATTICE) {
            cfg.caps.max_lattice = positive(ENV_MAX_LATTICE, v)?;
        }
        if let Some(v) = env.get(ENV_MAX_VERTICES) {
            cfg.caps.max_vertices = positive(ENV_MAX_VERTICES, v)?;
        }
        if let Some(v) = env.get(ENV_THREADS) {
            cfg.threads = positive(ENV_THREADS, v)?;
        }
        if let Some(v) = flags.max_lattice {
            cfg.caps.max_lattice = positive("--max-lattice", &v.to_string())?;
        }
        if let Some(v) = flags.max_vertices {
            cfg.caps.max_vertices = positive("--max-vertices", &v.to_string())?;
        }
        if let Some(v) = flags.threads {
            cfg.threads = positive("--threads", &v.to_string())?;
        }
        if let Some(p) = &flags.out_dir {
            cfg.out_dir = Some(p.clone());
        }
        if flags.strict {
            cfg.caps.strict = true;
        }
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        let map = parse_config_file(&text)?;
        if let Some(v) = file_int(&map, "max_lattice")? {
            self.caps.max_lattice = v as usize;
        }
        if let Some(v) = file_int(&map, "max_vertices")? {
            self.caps.max_vertices = v;
        }
        if let Some(v) = file_int(&map, "assoc_check_max")? {
            self.caps.assoc_check_max = v as usize;
        }
        if let Some(v) = file_int(&map, "threads")? {
            self.threads = v as usize;
        }
        match map.get("out_dir") {
            None => {}
            Some(toml::Value::String(s)) => self.out_dir = Some(PathBuf::from(s)),
            Some(v) => return Err(ConfigError(format!("out_dir must be a string, got {v}"))),
        }
        match map.get("strict") {
            None => {}
            Some(toml::Value::Boolean(b)) => self.caps.strict = *b,
            Some(v) => return Err(ConfigError(format!("strict must be true or false, got {v}"))),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let dir = std::env::temp_dir().join(format!("gg-config-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("gg.toml");
        std::fs::write(&path, "max_lattice = 100\nmax_vertices = 500\nthreads = 3\n").unwrap();
        let flags = ConfigFlags { config: Some(path.clone()), max_lattice: Some(50), ..Default::default() };
        let env = BTreeMap::from([(ENV_MAX_VERTICES.to_string(), "700".to_string())]);
        let cfg = RunConfig::resolve(&flags, &env).unwrap();
        assert_eq!(cfg.caps.max_lattice, 50);
        assert_eq!(cfg.caps.max_vertices, 700);
        assert_eq!(cfg.threads, 3);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_config_file("max_lattice = 10\ncolour = 3\n").is_err());
        assert!(parse_config_file("max_lattice = \n").is_err());
        let env = BTreeMap::from([(ENV_THREADS.to_string(), "0".to_string())]);
        assert!(RunConfig::resolve(&ConfigFlags::default(), &env).is_err());
        let env = BTreeMap::from([(ENV_MAX_LATTICE.to_string(), "many".to_string())]);
        assert!(RunConfig::resolve(&ConfigFlags::default(), &env).is_err());
    }
}
