//! Polyomino shapes and the piece catalogs they are drawn from.
//!
//! A shape is a fixed orientation: events never rotate a piece, so every
//! orientation that should be playable appears as its own catalog entry.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A connected set of cells, normalized so the lowest row and the leftmost
/// column are both 0. Row 0 is the bottom of the bounding box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PieceShape {
    label: String,
    cells: Vec<(u32, u32)>,
}

impl PieceShape {
    /// Builds a shape, checking that the cells are non-empty, normalized and
    /// edge-connected. Cells are stored sorted and deduplicated.
    pub fn new(label: impl Into<String>, cells: &[(u32, u32)]) -> Result<Self> {
        let label = label.into();
        let invalid = |reason: &str| Error::InvalidPiece {
            label: label.clone(),
            reason: reason.to_owned(),
        };
        if label.is_empty() || label.contains(|c: char| c == '_' || c.is_whitespace()) {
            return Err(invalid("labels must be non-empty and contain no '_' or whitespace"));
        }
        let set: BTreeSet<(u32, u32)> = cells.iter().copied().collect();
        if set.is_empty() {
            return Err(invalid("a piece needs at least one cell"));
        }
        if set.iter().map(|&(c, _)| c).min() != Some(0) || set.iter().map(|&(_, r)| r).min() != Some(0) {
            return Err(invalid("cell offsets must be normalized to a minimum of 0"));
        }
        if !is_edge_connected(&set) {
            return Err(invalid("cells are not edge-connected"));
        }
        Ok(PieceShape {
            label,
            cells: set.into_iter().collect(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `(column offset, row offset)` pairs in ascending order.
    pub fn cells(&self) -> &[(u32, u32)] {
        &self.cells
    }

    /// Number of columns spanned.
    pub fn width(&self) -> u32 {
        self.cells.iter().map(|&(c, _)| c).max().unwrap_or(0) + 1
    }

    /// Number of rows spanned.
    pub fn height(&self) -> u32 {
        self.cells.iter().map(|&(_, r)| r).max().unwrap_or(0) + 1
    }

    /// Same cells under a different label.
    pub fn relabeled(&self, label: impl Into<String>) -> Result<Self> {
        PieceShape::new(label, &self.cells)
    }
}

fn is_edge_connected(cells: &BTreeSet<(u32, u32)>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((c, r)) = stack.pop() {
        let neighbours = [
            (c.wrapping_sub(1), r),
            (c + 1, r),
            (c, r.wrapping_sub(1)),
            (c, r + 1),
        ];
        for n in neighbours {
            if cells.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == cells.len()
}

/// An ordered list of shapes with unique labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    #[serde(rename = "piece")]
    pieces: Vec<PieceShape>,
}

impl Catalog {
    pub fn new(pieces: Vec<PieceShape>) -> Result<Self> {
        let mut labels = BTreeSet::new();
        for p in &pieces {
            if !labels.insert(p.label()) {
                return Err(Error::InvalidPiece {
                    label: p.label().to_owned(),
                    reason: "duplicate label in catalog".into(),
                });
            }
        }
        Ok(Catalog { pieces })
    }

    /// The six triominoes: the four one-sided L orientations, the vertical
    /// bar `V` and the horizontal bar `H`.
    ///
    /// `LS`/`RS` stand on a flat bottom with the upright arm on the left and
    /// right respectively; `LUS`/`RUS` are their vertical mirror images (flat
    /// top). Only the complete set of four is label-independent; the reduced
    /// set without `LS` depends on this assignment.
    pub fn triominoes() -> Self {
        let shape = |l: &str, cells: &[(u32, u32)]| PieceShape::new(l, cells).expect("built-in shape");
        Catalog {
            pieces: vec![
                shape("LS", &[(0, 0), (1, 0), (0, 1)]),
                shape("RS", &[(0, 0), (1, 0), (1, 1)]),
                shape("LUS", &[(0, 0), (0, 1), (1, 1)]),
                shape("RUS", &[(1, 0), (0, 1), (1, 1)]),
                shape("V", &[(0, 0), (0, 1), (0, 2)]),
                shape("H", &[(0, 0), (1, 0), (2, 0)]),
            ],
        }
    }

    /// The seven one-sided tetrominoes in their spawn orientation.
    pub fn tetrominoes() -> Self {
        let shape = |l: &str, cells: &[(u32, u32)]| PieceShape::new(l, cells).expect("built-in shape");
        Catalog {
            pieces: vec![
                shape("I", &[(0, 0), (1, 0), (2, 0), (3, 0)]),
                shape("O", &[(0, 0), (1, 0), (0, 1), (1, 1)]),
                shape("T", &[(0, 0), (1, 0), (2, 0), (1, 1)]),
                shape("S", &[(0, 0), (1, 0), (1, 1), (2, 1)]),
                shape("Z", &[(1, 0), (2, 0), (0, 1), (1, 1)]),
                shape("J", &[(0, 0), (1, 0), (2, 0), (0, 1)]),
                shape("L", &[(0, 0), (1, 0), (2, 0), (2, 1)]),
            ],
        }
    }

    /// The Tri-tris generating pieces used throughout: every triomino except `H`.
    pub fn tri_tris() -> Self {
        let mut c = Self::triominoes();
        c.pieces.retain(|p| p.label() != "H");
        c
    }

    pub fn pieces(&self) -> &[PieceShape] {
        &self.pieces
    }

    pub fn get(&self, label: &str) -> Result<&PieceShape> {
        self.pieces
            .iter()
            .find(|p| p.label() == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Picks pieces by label, in the order given.
    pub fn select(&self, labels: &[&str]) -> Result<Vec<PieceShape>> {
        labels.iter().map(|l| self.get(l).cloned()).collect()
    }

    /// Parses a TOML catalog of the form
    ///
    /// ```toml
    /// [[piece]]
    /// label = "V"
    /// cells = [[0, 0], [0, 1], [0, 2]]
    /// ```
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: Catalog = toml::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let pieces = raw
            .pieces
            .into_iter()
            .map(|p| PieceShape::new(p.label, &p.cells))
            .collect::<Result<Vec<_>>>()?;
        Catalog::new(pieces)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("catalog serializes")
    }
}
