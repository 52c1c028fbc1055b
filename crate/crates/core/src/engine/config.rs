use serde::{Deserialize, Serialize};

use super::piece::PieceShape;
use crate::error::{Error, Result};

/// Widest board a row bitmask can hold.
pub const MAX_WIDTH: u32 = 32;

/// What happens when a drop leaves cells above the top row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// The game ends in the absorbing state `E`.
    #[default]
    Standard,
    /// The board is wiped back to the empty state.
    Periodic,
}

/// Whether overflow is tested before or after full rows are cleared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum OverflowPolicy {
    /// A piece landing above the top row loses, even if clearing would have
    /// brought the stack back inside the board.
    #[default]
    PreClear,
    /// Clear first; only the settled stack is tested.
    PostClear,
}

/// Board dimensions, rules and the pieces that generate the dynamics.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameConfig {
    pub width: u32,
    pub height: u32,
    pub variant: Variant,
    pub overflow: OverflowPolicy,
    pub pieces: Vec<PieceShape>,
}

impl GameConfig {
    /// Standard rules with pre-clear overflow.
    pub fn new(width: u32, height: u32, pieces: Vec<PieceShape>) -> Result<Self> {
        let config = GameConfig {
            width,
            height,
            variant: Variant::Standard,
            overflow: OverflowPolicy::PreClear,
            pieces,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_overflow(mut self, overflow: OverflowPolicy) -> Self {
        self.overflow = overflow;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidConfig(format!(
                "board must be at least 1x1, got {}x{}",
                self.width, self.height
            )));
        }
        if self.width > MAX_WIDTH {
            return Err(Error::InvalidConfig(format!(
                "board width {} exceeds the supported maximum of {MAX_WIDTH}",
                self.width
            )));
        }
        if self.pieces.is_empty() {
            return Err(Error::InvalidConfig("no pieces given".into()));
        }
        for (i, p) in self.pieces.iter().enumerate() {
            if self.pieces[..i].iter().any(|q| q.label() == p.label()) {
                return Err(Error::InvalidConfig(format!("piece `{}` listed twice", p.label())));
            }
            if p.width() > self.width {
                return Err(Error::InvalidConfig(format!(
                    "piece `{}` has width {}, wider than the board ({})",
                    p.label(),
                    p.width(),
                    self.width
                )));
            }
        }
        Ok(())
    }

    pub fn piece(&self, label: &str) -> Result<(usize, &PieceShape)> {
        self.pieces
            .iter()
            .enumerate()
            .find(|(_, p)| p.label() == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Short human-readable description, e.g. `3x4 periodic [RS,LUS,RUS,V]`.
    pub fn describe(&self) -> String {
        let labels: Vec<&str> = self.pieces.iter().map(|p| p.label()).collect();
        let variant = match self.variant {
            Variant::Standard => "standard",
            Variant::Periodic => "periodic",
        };
        format!("{}x{} {} [{}]", self.width, self.height, variant, labels.join(","))
    }
}
