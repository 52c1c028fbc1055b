//! Event words such as `V_0 LS_1 V_2`: parsing, rendering, evaluation, and
//! the action a word induces on the tiles of a holonomy component.
//!
//! A token is a piece label, `_`, and a column. Whitespace between tokens is
//! optional: `V_0V_1` reads as two tokens, because a column ends at the first
//! non-digit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::{check_column, Event, GameConfig, StateSpace};
use crate::error::{Error, Result};
use crate::holonomy::{HolonomyComponent, ImageSet, Permutation};
use crate::tsgrp::{Transformation, Word};

/// A parsed word over basic events.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EventWord {
    pub tokens: Vec<Event>,
    pub source: String,
}

impl EventWord {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Tokens separated by single spaces.
    pub fn render(&self) -> String {
        render(&self.tokens)
    }

    /// Generator indices in `space`.
    pub fn to_word(&self, space: &StateSpace) -> Result<Word> {
        self.tokens
            .iter()
            .map(|e| {
                space
                    .generator_index(&e.piece, e.column)
                    .map(|g| g as u32)
                    .ok_or_else(|| Error::MissingGenerator {
                        label: e.piece.clone(),
                        column: e.column,
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn concat(&self, other: &EventWord) -> EventWord {
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        EventWord {
            source: render(&tokens),
            tokens,
        }
    }
}

impl fmt::Display for EventWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn render(tokens: &[Event]) -> String {
    tokens.iter().map(Event::to_string).collect::<Vec<_>>().join(" ")
}

/// Renders generator indices of `space` as event text.
pub fn render_word(word: &Word, space: &StateSpace) -> String {
    render(
        &word
            .letters
            .iter()
            .map(|&g| space.generators()[g as usize].clone())
            .collect::<Vec<_>>(),
    )
}

/// Splits text into `(label, column)` tokens without checking them against a
/// game.
pub fn tokenize(text: &str) -> Result<Vec<Event>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    loop {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i == bytes.len() {
            break;
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'_' && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i == start {
            return Err(syntax(start, "expected a piece label"));
        }
        if i == bytes.len() || bytes[i] != b'_' {
            return Err(syntax(i, "expected `_` after the piece label"));
        }
        let label = &text[start..i];
        i += 1;
        let digits = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == digits {
            return Err(syntax(digits, "expected a column number"));
        }
        let column = text[digits..i]
            .parse::<u32>()
            .map_err(|_| syntax(digits, "column number too large"))?;
        tokens.push(Event::new(label, column));
    }
    Ok(tokens)
}

fn syntax(offset: usize, reason: &str) -> Error {
    Error::WordSyntax {
        offset,
        reason: reason.to_owned(),
    }
}

/// Parses a non-empty word and checks every token against `config`.
pub fn parse_word(text: &str, config: &GameConfig) -> Result<EventWord> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty word"));
    }
    for e in &tokens {
        let (_, piece) = config.piece(&e.piece)?;
        check_column(piece, e.column, config.width)?;
    }
    Ok(EventWord {
        tokens,
        source: text.to_owned(),
    })
}

/// The word's total transformation on the state space, left to right.
pub fn evaluate_word(word: &EventWord, space: &StateSpace) -> Result<Transformation> {
    word.to_word(space)?.evaluate(space.len(), space.tables())
}

/// One line of a word file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedWord {
    pub name: Option<String>,
    pub line: usize,
    pub text: String,
}

/// Reads a word file: one word per line, optionally `name = word`; `#` starts
/// a comment. Words are only tokenized here, not checked against a game.
pub fn read_word_file(text: &str) -> Result<Vec<NamedWord>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, body) = match line.split_once('=') {
            Some((name, body)) => (Some(name.trim().to_owned()), body.trim()),
            None => (None, line),
        };
        tokenize(body).map_err(|e| Error::Format(format!("line {}: {e}", n + 1)))?;
        out.push(NamedWord {
            name,
            line: n + 1,
            text: body.to_owned(),
        });
    }
    Ok(out)
}

/// What a word does to the tiles of a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TileAction {
    Permutation(Permutation),
    /// Tile `tile` is sent to `image`, which is not a tile.
    NotAPermutation { tile: ImageSet, image: ImageSet },
}

/// Applies the word to each tile of `component`.
pub fn induced_tile_action(word: &EventWord, component: &HolonomyComponent, space: &StateSpace) -> Result<TileAction> {
    let t = evaluate_word(word, space)?;
    Ok(tile_action_of(&t, &component.tiles))
}

pub fn tile_action_of(t: &Transformation, tiles: &[ImageSet]) -> TileAction {
    let mut images = Vec::with_capacity(tiles.len());
    for tile in tiles {
        let image = tile.act(t.as_slice());
        match tiles.iter().position(|x| *x == image) {
            Some(j) => images.push(j as u32),
            None => {
                return TileAction::NotAPermutation {
                    tile: tile.clone(),
                    image,
                }
            }
        }
    }
    match Permutation::new(images) {
        Some(p) => TileAction::Permutation(p),
        None => {
            // two tiles land on the same one; report the second
            let mut seen = std::collections::HashSet::new();
            let tile = tiles
                .iter()
                .find(|tile| !seen.insert(tile.act(t.as_slice())))
                .expect("a repeated image exists");
            TileAction::NotAPermutation {
                tile: tile.clone(),
                image: tile.act(t.as_slice()),
            }
        }
    }
}

/// The permutation `t` induces on the listed points, if it maps them
/// bijectively onto themselves; `points[i]` is point `i` of the result.
pub fn restrict_to(t: &Transformation, points: &[u32]) -> Option<Permutation> {
    let images: Option<Vec<u32>> = points
        .iter()
        .map(|&x| points.iter().position(|&y| y == t.image_of(x)).map(|j| j as u32))
        .collect();
    Permutation::new(images?)
}

/// The cycle of `t` through `point`, if `point` lies on one.
pub fn cycle_through(t: &Transformation, point: u32) -> Option<Vec<u32>> {
    let mut cycle = vec![point];
    let mut x = t.image_of(point);
    while x != point {
        if cycle.len() > t.degree() {
            return None;
        }
        cycle.push(x);
        x = t.image_of(x);
    }
    Some(cycle)
}
