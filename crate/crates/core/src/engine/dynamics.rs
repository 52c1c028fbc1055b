//! Dropping a piece, clearing rows and detecting overflow.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::board::{full_mask, BoardState};
use super::config::{GameConfig, OverflowPolicy, Variant};
use super::piece::PieceShape;
use crate::error::{Error, Result};

/// A basic event: drop `piece` with its leftmost cell in `column` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Event {
    pub piece: String,
    pub column: u32,
}

impl Event {
    pub fn new(piece: impl Into<String>, column: u32) -> Self {
        Event {
            piece: piece.into(),
            column,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.piece, self.column)
    }
}

fn resolve<'c>(event: &Event, config: &'c GameConfig) -> Result<&'c PieceShape> {
    let (_, piece) = config.piece(&event.piece)?;
    check_column(piece, event.column, config.width)?;
    Ok(piece)
}

pub(crate) fn check_column(piece: &PieceShape, column: u32, board_width: u32) -> Result<()> {
    if column + piece.width() > board_width {
        return Err(Error::PlacementOutOfBounds {
            label: piece.label().to_owned(),
            width: piece.width(),
            column,
            board_width,
        });
    }
    Ok(())
}

/// How far above the floor the piece's bounding box comes to rest: the piece
/// falls straight down until one of its cells would enter a filled cell (or
/// the floor). Overhangs are allowed; there is no sliding.
///
/// The caller must not pass the end state.
pub fn resting_offset(board: &BoardState, event: &Event, config: &GameConfig) -> Result<u32> {
    let piece = resolve(event, config)?;
    Ok(offset_for(board, piece, event.column))
}

fn offset_for(board: &BoardState, piece: &PieceShape, column: u32) -> u32 {
    piece
        .cells()
        .iter()
        .map(|&(c, r)| board.column_height(column + c).saturating_sub(r))
        .max()
        .unwrap_or(0)
}

/// Applies one event to a board and returns the settled result.
pub fn apply_event(board: &BoardState, event: &Event, config: &GameConfig) -> Result<BoardState> {
    let piece = resolve(event, config)?;
    Ok(drop_piece(board, piece, event.column, config))
}

/// Unchecked core of [`apply_event`]; `column` must be valid for `piece`.
pub(crate) fn drop_piece(board: &BoardState, piece: &PieceShape, column: u32, config: &GameConfig) -> BoardState {
    if board.is_end() {
        return BoardState::end();
    }
    let k = config.height as usize;
    let v = offset_for(board, piece, column) as usize;
    let mut rows = board.rows().to_vec();
    let top = v + piece.height() as usize;
    if rows.len() < top {
        rows.resize(top, 0);
    }
    for &(c, r) in piece.cells() {
        rows[v + r as usize] |= 1 << (column + c);
    }

    let overflowed = |rows: &[u32]| rows.iter().skip(k).any(|&m| m != 0);
    let lost = match config.overflow {
        OverflowPolicy::PreClear => overflowed(&rows),
        OverflowPolicy::PostClear => {
            clear_full_rows(&mut rows, config.width);
            overflowed(&rows)
        }
    };
    if lost {
        return match config.variant {
            Variant::Standard => BoardState::end(),
            Variant::Periodic => BoardState::empty(config.height),
        };
    }
    if config.overflow == OverflowPolicy::PreClear {
        clear_full_rows(&mut rows, config.width);
    }
    rows.resize(k, 0);
    BoardState::from_rows(rows)
}

/// Removes every full row, letting the rows above shift down rigidly. Rows
/// keep their contents while shifting, so one pass reaches the fixed point of
/// repeated clearing.
fn clear_full_rows(rows: &mut Vec<u32>, width: u32) {
    let full = full_mask(width);
    let len = rows.len();
    rows.retain(|&m| m != full);
    rows.resize(len, 0);
}
