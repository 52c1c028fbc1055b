use std::collections::VecDeque;

use hashbrown::HashMap;
use serde::{Deserialize, Serialize};

use super::classify::EquivClassification;
use super::identify::{fingerprint_of_group, GroupFingerprint};
use super::imageset::ImageSet;
use super::perm::Permutation;
use super::skeleton::Skeleton;
use super::tiles::{tile_nodes, TileMode};
use crate::error::{Error, Result};
use crate::tsgrp::Word;

/// Default cap on search states per component.
pub const DEFAULT_SEARCH_BUDGET: usize = 10_000_000;

/// The permutation group induced on the tiles of one class representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolonomyComponent {
    pub representative: ImageSet,
    pub representative_node: u32,
    pub height: Option<u32>,
    pub tiles: Vec<ImageSet>,
    pub tile_nodes: Vec<u32>,
    /// Sorted; the identity comes first.
    pub perms: Vec<Permutation>,
    /// `witnesses[i]` takes the representative onto itself and moves tile
    /// `j` onto tile `perms[i][j]`.
    pub witnesses: Vec<Word>,
    pub fingerprint: GroupFingerprint,
    /// False when the search hit its budget; `perms` is then only part of the
    /// group and the order a lower bound.
    pub complete: bool,
    pub search_states: usize,
}

impl HolonomyComponent {
    pub fn degree(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.len() == 1
    }

    pub fn name(&self) -> &str {
        &self.fingerprint.name
    }

    pub fn witness_for(&self, perm: &Permutation) -> Option<&Word> {
        self.perms.binary_search(perm).ok().map(|i| &self.witnesses[i])
    }
}

/// Holonomy group of a node, failing with a budget error when the search
/// does not finish.
pub fn holonomy_group(node: u32, skel: &Skeleton, classes: &EquivClassification) -> Result<HolonomyComponent> {
    let c = holonomy_search(node, skel, classes, TileMode::Maximal, DEFAULT_SEARCH_BUDGET)?;
    if !c.complete {
        return Err(Error::SearchBudget {
            budget: DEFAULT_SEARCH_BUDGET,
            lower_bound: c.perms.len(),
        });
    }
    Ok(c)
}

/// Breadth-first search over tuples of tile images.
///
/// A search state is the list of current tile images; the image of the node
/// itself is their union and is tracked alongside. States whose node image
/// leaves the node's class are dropped: no word brings them back. Every time
/// the node image returns to the node, the tile tuple is a permutation of the
/// tiles and is recorded with the path as witness.
pub fn holonomy_search(
    node: u32,
    skel: &Skeleton,
    classes: &EquivClassification,
    mode: TileMode,
    budget: usize,
) -> Result<HolonomyComponent> {
    let tiles = tile_nodes(node, skel, mode)?;
    let degree = tiles.len();
    let class = classes.class_of(node);
    let position: HashMap<u32, u32> = tiles.iter().enumerate().map(|(i, &t)| (t, i as u32)).collect();

    let mut seen: HashMap<Vec<u32>, u32> = HashMap::new();
    // per state: (node image, parent state, generator)
    let mut meta: Vec<(u32, u32, u32)> = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(tiles.clone(), 0);
    meta.push((node, u32::MAX, u32::MAX));
    queue.push_back(tiles.clone());
    let mut found: Vec<(Permutation, u32)> = vec![(Permutation::identity(degree), 0)];
    let mut complete = true;

    'search: while let Some(state) = queue.pop_front() {
        let here = seen[&state];
        let image = meta[here as usize].0;
        for g in 0..skel.num_generators() {
            let next_image = skel.edge(image, g);
            if classes.class_of(next_image) != class {
                continue;
            }
            let next: Vec<u32> = state.iter().map(|&t| skel.edge(t, g)).collect();
            if seen.contains_key(&next) {
                continue;
            }
            if seen.len() >= budget {
                complete = false;
                break 'search;
            }
            let id = meta.len() as u32;
            meta.push((next_image, here, g as u32));
            if next_image == node {
                let images: Option<Vec<u32>> = next.iter().map(|t| position.get(t).copied()).collect();
                let perm = images.and_then(Permutation::new).ok_or_else(|| {
                    Error::Invariant(format!("word returning {} to itself does not permute its tiles", skel.node(node)))
                })?;
                found.push((perm, id));
            }
            seen.insert(next.clone(), id);
            queue.push_back(next);
        }
    }

    let witness = |mut s: u32| {
        let mut letters = Vec::new();
        while meta[s as usize].1 != u32::MAX {
            letters.push(meta[s as usize].2);
            s = meta[s as usize].1;
        }
        letters.reverse();
        Word::new(letters)
    };
    found.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    found.dedup_by(|a, b| a.0 == b.0);
    // the identity is the least image list, so it stays first
    let fingerprint = fingerprint_of_group(&found.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>());
    Ok(HolonomyComponent {
        representative: skel.node(node),
        representative_node: node,
        height: classes.has_heights().then(|| classes.height(node)),
        tiles: tiles.iter().map(|&t| skel.node(t)).collect(),
        witnesses: found.iter().map(|&(_, s)| witness(s)).collect(),
        perms: found.into_iter().map(|(p, _)| p).collect(),
        fingerprint,
        complete,
        search_states: seen.len(),
        tile_nodes: tiles,
    })
}

/// Whether every element fixing a class representative setwise also fixes it
/// pointwise, for every class. Needs only the generator arcs.
///
/// A spanning tree of each class gives, for every member `v`, a bijection
/// from the representative onto `v`; each arc `v -g-> w` inside the class then
/// yields a Schreier generator of the representative's stabilizer, which is
/// trivial exactly when `g` carries the bijection for `v` onto the one for
/// `w`. An element acting nontrivially on some representative has a cycle
/// and is not aperiodic; conversely all holonomy groups are quotients of
/// these stabilizer actions. Returns a witness node and word on failure.
pub fn stabilizers_trivial(skel: &Skeleton, classes: &EquivClassification) -> std::result::Result<(), (u32, Word)> {
    for class in 0..classes.num_classes() as u32 {
        let rep = classes.representative(class);
        if skel.node_len(rep) > 1 {
            if let Some(w) = stabilizer_witness(rep, skel, classes) {
                return Err((rep, w));
            }
        }
    }
    Ok(())
}

/// A word fixing `rep` setwise but not pointwise, if there is one.
pub fn stabilizer_witness(rep: u32, skel: &Skeleton, classes: &EquivClassification) -> Option<Word> {
    let class = classes.class_of(rep);
    let tables = skel.tables();
    // frame[v] = images of the representative's members, in member order
    let mut frame: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut tree: HashMap<u32, (u32, u32)> = HashMap::new();
    frame.insert(rep, skel.iter_members(rep).collect());
    let mut queue = VecDeque::from([rep]);
    while let Some(v) = queue.pop_front() {
        for (g, table) in tables.iter().enumerate() {
            let w = skel.edge(v, g);
            if classes.class_of(w) != class {
                continue;
            }
            let moved: Vec<u32> = frame[&v].iter().map(|&x| table[x as usize]).collect();
            match frame.get(&w) {
                None => {
                    frame.insert(w, moved);
                    tree.insert(w, (v, g as u32));
                    queue.push_back(w);
                }
                Some(f) if *f == moved => {}
                Some(_) => {
                    let mut word = Vec::new();
                    let mut x = v;
                    while let Some(&(p, l)) = tree.get(&x) {
                        word.push(l);
                        x = p;
                    }
                    word.reverse();
                    word.push(g as u32);
                    word.extend(return_path(w, rep, skel, classes));
                    return Some(Word::new(word));
                }
            }
        }
    }
    None
}

/// A word taking `from` to `to` along generator arcs inside their class.
fn return_path(from: u32, to: u32, skel: &Skeleton, classes: &EquivClassification) -> Vec<u32> {
    let class = classes.class_of(from);
    let mut prev: HashMap<u32, (u32, u32)> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    prev.insert(from, (u32::MAX, u32::MAX));
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for g in 0..skel.num_generators() {
            let w = skel.edge(v, g);
            if classes.class_of(w) == class && !prev.contains_key(&w) {
                prev.insert(w, (v, g as u32));
                queue.push_back(w);
            }
        }
    }
    let mut letters = Vec::new();
    let mut x = to;
    while x != from {
        let (p, g) = prev[&x];
        letters.push(g);
        x = p;
    }
    letters.reverse();
    letters
}
