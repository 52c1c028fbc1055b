//! Tetris dynamics on an `n x k` board and enumeration of the reachable
//! state space.

mod board;
mod config;
mod dynamics;
mod piece;
mod space;

pub use board::BoardState;
pub use config::{GameConfig, OverflowPolicy, Variant, MAX_WIDTH};
pub use dynamics::{apply_event, resting_offset, Event};
pub(crate) use dynamics::check_column;
pub use piece::{Catalog, PieceShape};
pub use space::{enumerate_state_space, generators_of, StateSpace, DEFAULT_STATE_CAP};
