use std::fmt::Write as _;

/// A settled board: row bitmasks from the bottom up (bit `c` is column `c`),
/// or the absorbing game-over state.
///
/// Persisted boards never contain a full row and always have exactly
/// `height` rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoardState {
    rows: Vec<u32>,
    end: bool,
}

impl BoardState {
    pub fn empty(height: u32) -> Self {
        BoardState {
            rows: vec![0; height as usize],
            end: false,
        }
    }

    /// The game-over state `E`. It carries no grid.
    pub fn end() -> Self {
        BoardState {
            rows: Vec::new(),
            end: true,
        }
    }

    /// Builds a board from filled `(column, row)` cells. Returns `None` when a
    /// cell is off the board or a row is full.
    pub fn from_cells(width: u32, height: u32, cells: &[(u32, u32)]) -> Option<Self> {
        let mut rows = vec![0u32; height as usize];
        for &(c, r) in cells {
            if c >= width || r >= height {
                return None;
            }
            rows[r as usize] |= 1 << c;
        }
        let full = full_mask(width);
        if rows.contains(&full) {
            return None;
        }
        Some(BoardState { rows, end: false })
    }

    pub(crate) fn from_rows(rows: Vec<u32>) -> Self {
        BoardState { rows, end: false }
    }

    pub fn is_end(&self) -> bool {
        self.end
    }

    pub fn is_empty(&self) -> bool {
        !self.end && self.rows.iter().all(|&r| r == 0)
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn is_filled(&self, column: u32, row: u32) -> bool {
        self.rows
            .get(row as usize)
            .is_some_and(|&m| m & (1 << column) != 0)
    }

    /// Filled cells in row-major order, bottom row first.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (r, &mask) in self.rows.iter().enumerate() {
            for c in 0..32 {
                if mask & (1 << c) != 0 {
                    out.push((c, r as u32));
                }
            }
        }
        out
    }

    /// One above the highest filled row of `column`, or 0 if it is empty.
    pub fn column_height(&self, column: u32) -> u32 {
        self.rows
            .iter()
            .rposition(|&m| m & (1 << column) != 0)
            .map_or(0, |r| r as u32 + 1)
    }

    /// ASCII dump, top row first, `#` for filled cells.
    pub fn render(&self, width: u32) -> String {
        if self.end {
            return "E\n".to_owned();
        }
        let mut s = String::new();
        for &mask in self.rows.iter().rev() {
            s.push('|');
            for c in 0..width {
                s.push(if mask & (1 << c) != 0 { '#' } else { '.' });
            }
            let _ = writeln!(s, "|");
        }
        s
    }
}

pub(crate) fn full_mask(width: u32) -> u32 {
    if width >= 32 {
        u32::MAX
    } else {
        (1u32 << width) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_heights_and_cells() {
        let b = BoardState::from_cells(3, 3, &[(0, 0), (0, 1), (2, 0)]).unwrap();
        assert_eq!(b.column_height(0), 2);
        assert_eq!(b.column_height(1), 0);
        assert_eq!(b.column_height(2), 1);
        assert_eq!(b.cells(), vec![(0, 0), (2, 0), (0, 1)]);
        assert_eq!(b.render(3), "|...|\n|#..|\n|#.#|\n");
    }

    #[test]
    fn full_rows_and_off_board_rejected() {
        assert!(BoardState::from_cells(3, 3, &[(0, 0), (1, 0), (2, 0)]).is_none());
        assert!(BoardState::from_cells(3, 3, &[(3, 0)]).is_none());
        assert!(BoardState::from_cells(3, 3, &[(0, 3)]).is_none());
    }

    #[test]
    fn end_state_has_no_grid() {
        let e = BoardState::end();
        assert!(e.is_end());
        assert!(e.cells().is_empty());
        assert!(!e.is_empty());
    }
}
