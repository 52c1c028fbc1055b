//! On-disk cache of state spaces and semigroup enumerations.
//!
//! Entries are keyed by a SHA-256 over the entry kind, this crate's version
//! and the game configuration, so a change to any convention switch or to the
//! code version gets a fresh entry. Writes go to a temporary file that is then
//! renamed over the target.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use tetris_sgp::engine::{enumerate_state_space, GameConfig, StateSpace};
use tetris_sgp::tsgrp::{enumerate_semigroup, SemigroupEnumeration};
use tetris_sgp::Error;

use crate::args::Cli;
use crate::{CliError, CliResult};

pub const CACHE_ENV: &str = "TETRIS_SGP_CACHE_DIR";

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn from_cli(cli: &Cli) -> Cache {
        if cli.no_cache {
            return Cache { dir: None };
        }
        let dir = cli.cache_dir.clone().or_else(default_dir);
        Cache { dir }
    }

    fn path(&self, kind: &str, config: &GameConfig) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let mut h = Sha256::new();
        h.update(kind.as_bytes());
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        h.update(serde_json::to_vec(config).expect("config serializes"));
        let key = hex::encode(h.finalize());
        Some(dir.join(format!("{kind}-{}.json", &key[..24])))
    }

    /// The cached state space, or a fresh enumeration that is then stored.
    pub fn state_space(&self, config: &GameConfig, cap: usize) -> CliResult<StateSpace> {
        let path = self.path("state-space", config);
        if let Some(p) = &path {
            if let Ok(text) = fs::read_to_string(p) {
                // unreadable or foreign entries are recomputed and replaced
                if let Ok(space) = StateSpace::from_cache_str(&text) {
                    if space.config() == config && space.len() <= cap {
                        return Ok(space);
                    }
                }
            }
        }
        let space = enumerate_state_space(config, cap)?;
        if let Some(p) = &path {
            write_atomic(p, &space.to_cache_string())?;
        }
        Ok(space)
    }

    /// Complete enumerations only are stored.
    pub fn semigroup(&self, space: &StateSpace, cap: usize) -> CliResult<SemigroupEnumeration> {
        let path = self.path("semigroup", space.config());
        let hash = space.content_hash();
        if let Some(p) = &path {
            if let Ok(text) = fs::read_to_string(p) {
                if let Ok((e, h)) = SemigroupEnumeration::from_cache_str(&text, space.tables()) {
                    if h == hash && e.is_complete() {
                        if e.len() > cap {
                            return Err(Error::EnumerationLimit {
                                what: "element",
                                cap,
                                found: e.len(),
                            }
                            .into());
                        }
                        return Ok(e);
                    }
                }
            }
        }
        let e = enumerate_semigroup(space, cap)?;
        if let Some(p) = &path {
            write_atomic(p, &e.to_cache_string(&hash))?;
        }
        Ok(e)
    }
}

fn default_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("tetris-sgp"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("tetris-sgp"))
}

pub fn write_atomic(path: &Path, text: &str) -> CliResult<()> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(io)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}
