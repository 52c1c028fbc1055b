use hashbrown::{DefaultHashBuilder, HashTable};
use serde::{Deserialize, Serialize};
use std::hash::BuildHasher;

use super::transformation::{map_is_aperiodic, Transformation, Word};
use crate::engine::StateSpace;
use crate::error::{Error, Result};

/// Default cap on the number of semigroup elements.
pub const DEFAULT_ELEMENT_CAP: usize = 5_000_000;

const NO_PARENT: u32 = u32::MAX;

/// The elements of the semigroup generated by a set of transformations, in
/// breadth-first discovery order, each with a witness word.
///
/// Maps are stored flat as `u16`, so the degree is limited to 65536 points.
/// The adjoined identity is not an element unless some product equals it.
pub struct SemigroupEnumeration {
    degree: usize,
    arena: Vec<u16>,
    parent: Vec<u32>,
    letter: Vec<u32>,
    index: HashTable<u32>,
    hasher: DefaultHashBuilder,
    complete: bool,
}

impl std::fmt::Debug for SemigroupEnumeration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SemigroupEnumeration")
            .field("degree", &self.degree)
            .field("size", &self.len())
            .field("complete", &self.complete)
            .finish()
    }
}

impl SemigroupEnumeration {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `|S|`, or the number found before the cap when incomplete.
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// False when enumeration stopped at the element cap.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    fn slice(&self, i: usize) -> &[u16] {
        &self.arena[i * self.degree..(i + 1) * self.degree]
    }

    pub fn element(&self, i: usize) -> Transformation {
        Transformation::from_vec_unchecked(self.slice(i).iter().map(|&x| x as u32).collect())
    }

    pub fn elements(&self) -> impl Iterator<Item = Transformation> + '_ {
        (0..self.len()).map(|i| self.element(i))
    }

    /// The breadth-first word that produced element `i`. Shortest among the
    /// words explored, not necessarily a geodesic.
    pub fn witness(&self, i: usize) -> Word {
        let mut letters = Vec::new();
        let mut cur = i as u32;
        while cur != NO_PARENT {
            letters.push(self.letter[cur as usize]);
            cur = self.parent[cur as usize];
        }
        letters.reverse();
        Word::new(letters)
    }

    pub fn position(&self, t: &Transformation) -> Option<usize> {
        if t.degree() != self.degree {
            return None;
        }
        let key: Vec<u16> = t.as_slice().iter().map(|&x| x as u16).collect();
        self.find(&key).map(|i| i as usize)
    }

    fn find(&self, key: &[u16]) -> Option<u32> {
        let h = self.hasher.hash_one(key);
        self.index
            .find(h, |&i| self.slice(i as usize) == key)
            .copied()
    }

    /// Inserts unless present; returns whether it was new.
    fn insert(&mut self, key: &[u16], parent: u32, letter: u32) -> bool {
        if self.find(key).is_some() {
            return false;
        }
        let id = self.parent.len() as u32;
        self.arena.extend_from_slice(key);
        self.parent.push(parent);
        self.letter.push(letter);
        let (arena, degree, hasher) = (&self.arena, self.degree, &self.hasher);
        let h = hasher.hash_one(key);
        self.index.insert_unique(h, id, |&j| {
            hasher.hash_one(&arena[j as usize * degree..(j as usize + 1) * degree])
        });
        true
    }

    /// Versioned cache form; `state_space_hash` ties it to the state space
    /// it was computed from. Only the discovery steps are stored: each
    /// element is its parent times one generator.
    pub fn to_cache_string(&self, state_space_hash: &str) -> String {
        let file = SemigroupCache {
            format: SEMIGROUP_FORMAT.to_owned(),
            version: SEMIGROUP_VERSION,
            state_space: state_space_hash.to_owned(),
            degree: self.degree,
            complete: self.complete,
            steps: self.parent.iter().zip(&self.letter).map(|(&p, &l)| (p, l)).collect(),
        };
        let mut s = serde_json::to_string(&file).expect("semigroup serializes");
        s.push('\n');
        s
    }

    /// Reads a cache written by [`Self::to_cache_string`], replaying its
    /// steps over `generators`; returns the enumeration and the state-space
    /// hash it references.
    pub fn from_cache_str(text: &str, generators: &[Vec<u32>]) -> Result<(Self, String)> {
        let file: SemigroupCache = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if file.format != SEMIGROUP_FORMAT || file.version != SEMIGROUP_VERSION {
            return Err(Error::Format("unsupported semigroup cache".into()));
        }
        let degree = file.degree;
        if generators.iter().any(|g| g.len() != degree || g.iter().any(|&x| x as usize >= degree)) {
            return Err(Error::Format("generators do not match the cached degree".into()));
        }
        let mut out = Self::with_degree(degree)?;
        out.complete = file.complete;
        let mut scratch = vec![0u16; degree];
        for (i, &(parent, letter)) in file.steps.iter().enumerate() {
            let g = generators
                .get(letter as usize)
                .ok_or_else(|| Error::Format(format!("step {i} uses unknown generator {letter}")))?;
            if parent == NO_PARENT {
                for (dst, &x) in scratch.iter_mut().zip(g) {
                    *dst = x as u16;
                }
            } else {
                if parent as usize >= i {
                    return Err(Error::Format(format!("step {i} refers forward to {parent}")));
                }
                let base = out.slice(parent as usize);
                for (dst, &x) in scratch.iter_mut().zip(base) {
                    *dst = g[x as usize] as u16;
                }
            }
            if !out.insert(&scratch, parent, letter) {
                return Err(Error::Format("duplicate element in cache".into()));
            }
        }
        Ok((out, file.state_space))
    }

    fn with_degree(degree: usize) -> Result<Self> {
        if degree > u16::MAX as usize + 1 {
            return Err(Error::InvalidConfig(format!(
                "degree {degree} is too large for semigroup enumeration"
            )));
        }
        Ok(SemigroupEnumeration {
            degree,
            arena: Vec::new(),
            parent: Vec::new(),
            letter: Vec::new(),
            index: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
            complete: false,
        })
    }
}

const SEMIGROUP_FORMAT: &str = "tetris-sgp/semigroup";
const SEMIGROUP_VERSION: u32 = 2;

#[derive(Serialize, Deserialize)]
struct SemigroupCache {
    format: String,
    version: u32,
    state_space: String,
    degree: usize,
    complete: bool,
    steps: Vec<(u32, u32)>,
}

/// Enumerates the semigroup generated by the transition tables of `space`.
pub fn enumerate_semigroup(space: &StateSpace, cap: usize) -> Result<SemigroupEnumeration> {
    enumerate_generated(space.len(), space.tables(), cap)
}

/// Enumerates `<generators>` by breadth-first right multiplication. Fails
/// with [`Error::EnumerationLimit`] once more than `cap` elements are found.
pub fn enumerate_generated(degree: usize, generators: &[Vec<u32>], cap: usize) -> Result<SemigroupEnumeration> {
    let e = enumerate_generated_partial(degree, generators, cap)?;
    if !e.is_complete() {
        return Err(Error::EnumerationLimit {
            what: "element",
            cap,
            found: e.len(),
        });
    }
    Ok(e)
}

/// Like [`enumerate_generated`] but returns what was found when the cap is
/// hit, flagged incomplete.
pub fn enumerate_generated_partial(
    degree: usize,
    generators: &[Vec<u32>],
    cap: usize,
) -> Result<SemigroupEnumeration> {
    let mut out = SemigroupEnumeration::with_degree(degree)?;
    let gens: Vec<Vec<u16>> = generators
        .iter()
        .map(|g| {
            if g.len() != degree || g.iter().any(|&x| x as usize >= degree) {
                return Err(Error::LengthMismatch {
                    left: g.len(),
                    right: degree,
                });
            }
            Ok(g.iter().map(|&x| x as u16).collect())
        })
        .collect::<Result<_>>()?;

    for (i, g) in gens.iter().enumerate() {
        if out.len() >= cap && out.find(g).is_none() {
            return Ok(out);
        }
        out.insert(g, NO_PARENT, i as u32);
    }
    let mut scratch = vec![0u16; degree];
    let mut next = 0usize;
    while next < out.len() {
        for (gi, g) in gens.iter().enumerate() {
            for (dst, &x) in scratch.iter_mut().zip(out.slice(next)) {
                *dst = g[x as usize];
            }
            if out.find(&scratch).is_none() {
                if out.len() >= cap {
                    return Ok(out);
                }
                out.insert(&scratch, next as u32, gi as u32);
            }
        }
        next += 1;
    }
    out.complete = true;
    Ok(out)
}

/// True iff every element satisfies `s^(k+1) = s^k` for some `k`.
pub fn semigroup_is_aperiodic_elementwise(e: &SemigroupEnumeration) -> Result<bool> {
    if !e.is_complete() {
        return Err(Error::Incomplete(format!(
            "element-wise aperiodicity needs a complete enumeration ({} elements found before the cap)",
            e.len()
        )));
    }
    Ok((0..e.len()).all(|i| map_is_aperiodic(e.slice(i))))
}

/// First element that is not aperiodic, with its witness.
pub fn find_periodic_element(e: &SemigroupEnumeration) -> Option<(Transformation, Word)> {
    (0..e.len())
        .find(|&i| !map_is_aperiodic(e.slice(i)))
        .map(|i| (e.element(i), e.witness(i)))
}
