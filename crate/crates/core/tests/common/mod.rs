//! Independent reference model of the drop dynamics, written against plain
//! boolean grids with a literal step-by-step fall. Shares nothing with the
//! engine except the `BoardState` type used to compare results.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use tetris_sgp::engine::{BoardState, GameConfig, OverflowPolicy, Variant};

/// An event as (label, column, piece cells).
pub type Ev = (String, u32, Vec<(u32, u32)>);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sim {
    End,
    /// `grid[row][column]`, row 0 at the bottom.
    Grid(Vec<Vec<bool>>),
}

pub fn empty(cfg: &GameConfig) -> Sim {
    Sim::Grid(vec![vec![false; cfg.width as usize]; cfg.height as usize])
}

pub fn to_board(cfg: &GameConfig, s: &Sim) -> BoardState {
    match s {
        Sim::End => BoardState::end(),
        Sim::Grid(g) => {
            let mut cells = Vec::new();
            for (r, row) in g.iter().enumerate() {
                for (c, &f) in row.iter().enumerate() {
                    if f {
                        cells.push((c as u32, r as u32));
                    }
                }
            }
            BoardState::from_cells(cfg.width, cfg.height, &cells).expect("oracle grid fits the board")
        }
    }
}

fn filled(g: &[Vec<bool>], c: i64, r: i64) -> bool {
    r >= 0 && (r as usize) < g.len() && g[r as usize][c as usize]
}

/// One drop of `cells` with its bounding box's left edge at `column`.
pub fn step(cfg: &GameConfig, s: &Sim, cells: &[(u32, u32)], column: u32) -> Sim {
    let Sim::Grid(g) = s else { return Sim::End };
    let k = cfg.height as i64;
    let mut y = k;
    let blocked = |y: i64| {
        cells
            .iter()
            .any(|&(dx, dy)| y + (dy as i64) < 0 || filled(g, (column + dx) as i64, y + dy as i64))
    };
    while !blocked(y - 1) {
        y -= 1;
    }
    // work on a grid tall enough for any overhang, then cut back to k rows
    let mut g = g.clone();
    let spare = cells.iter().map(|&(_, dy)| dy as usize + 1).max().unwrap_or(0);
    g.resize(k as usize + spare, vec![false; cfg.width as usize]);
    for &(dx, dy) in cells {
        g[(y + dy as i64) as usize][(column + dx) as usize] = true;
    }
    let over = |g: &[Vec<bool>]| g[k as usize..].iter().any(|row| row.iter().any(|&f| f));
    let clear = |g: Vec<Vec<bool>>| -> Vec<Vec<bool>> {
        let len = g.len();
        let mut kept: Vec<_> = g.into_iter().filter(|row| !row.iter().all(|&f| f)).collect();
        kept.resize(len, vec![false; cfg.width as usize]);
        kept
    };
    let lose = || match cfg.variant {
        Variant::Standard => Sim::End,
        Variant::Periodic => empty(cfg),
    };
    let g = match cfg.overflow {
        OverflowPolicy::PreClear => {
            if over(&g) {
                return lose();
            }
            clear(g)
        }
        OverflowPolicy::PostClear => {
            let g = clear(g);
            if over(&g) {
                return lose();
            }
            g
        }
    };
    Sim::Grid(g[..k as usize].to_vec())
}

/// Every event of the configuration as (label, column, cells).
pub fn events(cfg: &GameConfig) -> Vec<Ev> {
    let mut out = Vec::new();
    for p in &cfg.pieces {
        for c in 0..=cfg.width - p.width() {
            out.push((p.label().to_owned(), c, p.cells().to_vec()));
        }
    }
    out
}

/// States reached from the empty board by every play sequence of length at
/// most `depth`, enumerated sequence by sequence.
pub fn all_sequences(cfg: &GameConfig, depth: usize) -> BTreeSet<Sim> {
    let evs = events(cfg);
    let mut seen = BTreeSet::new();
    fn go(
        cfg: &GameConfig,
        evs: &[Ev],
        s: Sim,
        left: usize,
        seen: &mut BTreeSet<Sim>,
    ) {
        seen.insert(s.clone());
        if left == 0 {
            return;
        }
        for (_, c, cells) in evs {
            go(cfg, evs, step(cfg, &s, cells, *c), left - 1, seen);
        }
    }
    go(cfg, &evs, empty(cfg), depth, &mut seen);
    seen
}

/// Breadth-first reachable set, for boards where exhaustive sequences are too many.
pub fn reachable(cfg: &GameConfig) -> BTreeSet<Sim> {
    let evs = events(cfg);
    let mut seen = BTreeSet::from([empty(cfg)]);
    let mut queue = VecDeque::from([empty(cfg)]);
    while let Some(s) = queue.pop_front() {
        for (_, c, cells) in &evs {
            let t = step(cfg, &s, cells, *c);
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    seen
}

/// Compares the engine's state space with the reference model on `reached`:
/// the two state sets must agree and every transition out of every reached
/// state must land where the model says. Returns the number of transitions
/// checked.
pub fn compare_with_engine(cfg: &GameConfig, reached: &BTreeSet<Sim>) -> Result<usize, String> {
    use tetris_sgp::engine::{enumerate_state_space, DEFAULT_STATE_CAP};
    let space = enumerate_state_space(cfg, DEFAULT_STATE_CAP).map_err(|e| e.to_string())?;
    let ours: BTreeSet<BoardState> = reached.iter().map(|s| to_board(cfg, s)).collect();
    let theirs: BTreeSet<BoardState> = space.states().iter().cloned().collect();
    if ours != theirs {
        return Err(format!(
            "{}: model reaches {} states, engine {}",
            cfg.describe(),
            ours.len(),
            theirs.len()
        ));
    }
    let mut checked = 0;
    for s in reached {
        let from = space.index_of(&to_board(cfg, s)).expect("same state set");
        for (label, c, cells) in events(cfg) {
            let g = space.generator_index(&label, c).ok_or_else(|| format!("no generator {label}_{c}"))?;
            let want = to_board(cfg, &step(cfg, s, &cells, c));
            let got = &space.states()[space.table(g)[from as usize] as usize];
            if *got != want {
                return Err(format!("{}: state {from} under {label}_{c}", cfg.describe()));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

pub fn config(w: u32, h: u32, labels: &[&str], variant: Variant) -> GameConfig {
    let pieces = tetris_sgp::engine::Catalog::triominoes().select(labels).expect("known labels");
    GameConfig::new(w, h, pieces).expect("valid board").with_variant(variant)
}
