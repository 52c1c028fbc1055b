use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::board::BoardState;
use super::config::{GameConfig, Variant};
use super::dynamics::{drop_piece, Event};
use crate::error::{Error, Result};

/// Default cap on the number of enumerated board states.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// Every state reachable from the empty board, with one transition table per
/// generator. State 0 is the empty board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpace {
    config: GameConfig,
    states: Vec<BoardState>,
    generators: Vec<Event>,
    tables: Vec<Vec<u32>>,
}

impl StateSpace {
    pub fn config(&self) -> &GameConfig {
        &self.config
    }

    pub fn states(&self) -> &[BoardState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn generators(&self) -> &[Event] {
        &self.generators
    }

    /// `tables()[g][i]` is the state reached from state `i` by generator `g`.
    pub fn tables(&self) -> &[Vec<u32>] {
        &self.tables
    }

    pub fn table(&self, generator: usize) -> &[u32] {
        &self.tables[generator]
    }

    pub fn index_of(&self, state: &BoardState) -> Option<u32> {
        self.states.iter().position(|s| s == state).map(|i| i as u32)
    }

    pub fn end_index(&self) -> Option<u32> {
        self.states.iter().position(|s| s.is_end()).map(|i| i as u32)
    }

    pub fn generator_index(&self, label: &str, column: u32) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| g.piece == label && g.column == column)
    }

    /// Assembles a space from precomputed parts, checking closure.
    pub fn from_parts(
        config: GameConfig,
        states: Vec<BoardState>,
        generators: Vec<Event>,
        tables: Vec<Vec<u32>>,
    ) -> Result<Self> {
        config.validate()?;
        let n = states.len();
        if generators.len() != tables.len() {
            return Err(Error::LengthMismatch {
                left: generators.len(),
                right: tables.len(),
            });
        }
        for t in &tables {
            if t.len() != n {
                return Err(Error::LengthMismatch { left: t.len(), right: n });
            }
            if t.iter().any(|&j| j as usize >= n) {
                return Err(Error::Format("transition table entry out of range".into()));
            }
        }
        Ok(StateSpace {
            config,
            states,
            generators,
            tables,
        })
    }

    /// Serializes to the versioned cache format (pretty JSON, fixed field
    /// order, so equal spaces give byte-identical files).
    pub fn to_cache_string(&self) -> String {
        let file = CacheFile {
            format: CACHE_FORMAT.to_owned(),
            version: CACHE_VERSION,
            config: self.config.clone(),
            generators: self.generators.clone(),
            states: self.states.iter().map(CachedState::from).collect(),
            tables: self.tables.clone(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("state space serializes");
        s.push('\n');
        s
    }

    pub fn from_cache_str(text: &str) -> Result<Self> {
        let file: CacheFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if file.format != CACHE_FORMAT || file.version != CACHE_VERSION {
            return Err(Error::Format(format!(
                "unsupported cache `{}` version {}",
                file.format, file.version
            )));
        }
        let (w, h) = (file.config.width, file.config.height);
        let states = file
            .states
            .iter()
            .map(|s| {
                if s.end {
                    Ok(BoardState::end())
                } else {
                    BoardState::from_cells(w, h, &s.cells)
                        .ok_or_else(|| Error::Format("cached board is not in normal form".into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(file.config, states, file.generators, file.tables)
    }

    /// SHA-256 over the cache serialization, hex encoded.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_cache_string().as_bytes()))
    }
}

const CACHE_FORMAT: &str = "tetris-sgp/state-space";
const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    config: GameConfig,
    generators: Vec<Event>,
    states: Vec<CachedState>,
    tables: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct CachedState {
    end: bool,
    cells: Vec<(u32, u32)>,
}

impl From<&BoardState> for CachedState {
    fn from(b: &BoardState) -> Self {
        CachedState {
            end: b.is_end(),
            cells: b.cells(),
        }
    }
}

/// All events of a configuration: pieces in configuration order, columns
/// ascending.
pub fn generators_of(config: &GameConfig) -> Vec<Event> {
    config
        .pieces
        .iter()
        .flat_map(|p| (0..=config.width - p.width()).map(move |c| Event::new(p.label(), c)))
        .collect()
}

/// Breadth-first closure of the empty board under every generator.
///
/// States are numbered in discovery order; within one state the generators
/// are tried in [`generators_of`] order.
pub fn enumerate_state_space(config: &GameConfig, cap: usize) -> Result<StateSpace> {
    config.validate()?;
    let generators = generators_of(config);
    let shapes: Vec<_> = generators
        .iter()
        .map(|g| config.piece(&g.piece).map(|(_, p)| p))
        .collect::<Result<_>>()?;

    let empty = BoardState::empty(config.height);
    let mut index: HashMap<BoardState, u32> = HashMap::from([(empty.clone(), 0)]);
    let mut states = vec![empty];
    let mut tables: Vec<Vec<u32>> = vec![Vec::new(); generators.len()];
    let mut queue = VecDeque::from([0u32]);

    while let Some(i) = queue.pop_front() {
        for (g, (event, shape)) in generators.iter().zip(&shapes).enumerate() {
            let next = drop_piece(&states[i as usize], shape, event.column, config);
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    if states.len() >= cap {
                        return Err(Error::EnumerationLimit {
                            what: "state",
                            cap,
                            found: states.len(),
                        });
                    }
                    let j = states.len() as u32;
                    index.insert(next.clone(), j);
                    states.push(next);
                    queue.push_back(j);
                    j
                }
            };
            // states are dequeued in index order, so this pushes entry i
            tables[g].push(j);
        }
    }
    debug_assert!(config.variant == Variant::Standard || states.iter().all(|s| !s.is_end()));
    Ok(StateSpace {
        config: config.clone(),
        states,
        generators,
        tables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Catalog;

    fn tri_tris(n: u32, k: u32, variant: Variant) -> GameConfig {
        GameConfig::new(n, k, Catalog::tri_tris().pieces().to_vec())
            .unwrap()
            .with_variant(variant)
    }

    #[test]
    fn three_by_three_counts() {
        let s = enumerate_state_space(&tri_tris(3, 3, Variant::Standard), DEFAULT_STATE_CAP).unwrap();
        assert_eq!(s.len(), 35);
        assert_eq!(s.generators().len(), 11);
        let p = enumerate_state_space(&tri_tris(3, 3, Variant::Periodic), DEFAULT_STATE_CAP).unwrap();
        assert_eq!(p.len(), 34);
        assert!(p.end_index().is_none());
    }

    #[test]
    fn end_is_absorbing() {
        let s = enumerate_state_space(&tri_tris(3, 3, Variant::Standard), DEFAULT_STATE_CAP).unwrap();
        let e = s.end_index().unwrap() as usize;
        assert!(s.tables().iter().all(|t| t[e] as usize == e));
        assert!(s.states()[0].is_empty());
    }

    #[test]
    fn state_cap_is_reported() {
        let err = enumerate_state_space(&tri_tris(3, 3, Variant::Standard), 10).unwrap_err();
        assert_eq!(
            err,
            Error::EnumerationLimit {
                what: "state",
                cap: 10,
                found: 10
            }
        );
    }

    #[test]
    fn cache_round_trip_is_exact() {
        let s = enumerate_state_space(&tri_tris(3, 3, Variant::Standard), DEFAULT_STATE_CAP).unwrap();
        let text = s.to_cache_string();
        let back = StateSpace::from_cache_str(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_cache_string(), text);
        assert_eq!(back.content_hash(), s.content_hash());
        assert!(StateSpace::from_cache_str(&text.replace("\"version\": 1", "\"version\": 99")).is_err());
    }
}
