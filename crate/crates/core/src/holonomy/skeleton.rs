//! The skeleton: every image set `X.s`, the full set `X` and all singletons,
//! with generator arcs between them and the inclusion covers inside them.
//!
//! Nodes live in one flat arena of bitset blocks; millions of nodes are
//! expected for boards of modest size. Inclusion covers are quadratic to
//! compute and are only built when first asked for.

use std::collections::VecDeque;
use std::hash::BuildHasher;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use hashbrown::{DefaultHashBuilder, HashTable};

use super::imageset::ImageSet;
use crate::engine::StateSpace;
use crate::error::{Error, Result};
use crate::tsgrp::Word;

/// Default cap on skeleton nodes.
pub const DEFAULT_NODE_CAP: usize = 5_000_000;

const NO_PARENT: u32 = u32::MAX;
type Block = usize;
const BLOCK_BITS: usize = Block::BITS as usize;

pub struct Skeleton {
    degree: usize,
    blocks: usize,
    arena: Vec<Block>,
    sizes: Vec<u32>,
    index: HashTable<u32>,
    hasher: DefaultHashBuilder,
    tables: Vec<Vec<u32>>,
    /// `edges[node * generators + g]`
    edges: Vec<u32>,
    parent: Vec<(u32, u32)>,
    covers: OnceLock<Vec<Vec<u32>>>,
}

impl std::fmt::Debug for Skeleton {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Skeleton")
            .field("degree", &self.degree)
            .field("nodes", &self.len())
            .field("generators", &self.tables.len())
            .finish()
    }
}

/// Builds the skeleton of a state space without enumerating the semigroup.
pub fn build_skeleton(space: &StateSpace) -> Result<Skeleton> {
    build_skeleton_from_tables(space.len(), space.tables(), DEFAULT_NODE_CAP)
}

/// Builds the skeleton of the transformation semigroup generated by
/// `tables` acting on `degree` points.
///
/// Node 0 is `X`; the images follow in breadth-first order, then any
/// singletons that are not images, in ascending order.
pub fn build_skeleton_from_tables(degree: usize, tables: &[Vec<u32>], cap: usize) -> Result<Skeleton> {
    if degree == 0 {
        return Err(Error::InvalidConfig("empty state set".into()));
    }
    for t in tables {
        if t.len() != degree || t.iter().any(|&y| y as usize >= degree) {
            return Err(Error::LengthMismatch {
                left: t.len(),
                right: degree,
            });
        }
    }
    let blocks = degree.div_ceil(BLOCK_BITS);
    let mut sk = Skeleton {
        degree,
        blocks,
        arena: Vec::new(),
        sizes: Vec::new(),
        index: HashTable::new(),
        hasher: DefaultHashBuilder::default(),
        tables: tables.to_vec(),
        edges: Vec::new(),
        parent: Vec::new(),
        covers: OnceLock::new(),
    };
    let full = ImageSet::full(degree);
    sk.intern(full.bits().as_slice(), (NO_PARENT, NO_PARENT), cap)?;

    let mut buf = vec![0 as Block; blocks];
    let mut queue = VecDeque::from([0u32]);
    while let Some(a) = queue.pop_front() {
        for g in 0..tables.len() {
            sk.act_into(a, g, &mut buf);
            let (target, new) = sk.intern(&buf, (a, g as u32), cap)?;
            if new {
                queue.push_back(target);
            }
            // dequeued in index order, so edges stay row-major
            sk.edges.push(target);
        }
    }
    let first_adjoined = sk.len();
    for x in 0..degree as u32 {
        let single = ImageSet::singleton(degree, x);
        sk.intern(single.bits().as_slice(), (NO_PARENT, NO_PARENT), cap)?;
    }
    for a in first_adjoined..sk.len() {
        for g in 0..tables.len() {
            sk.act_into(a as u32, g, &mut buf);
            let target = sk.find(&buf).expect("singleton images are singletons");
            sk.edges.push(target);
        }
    }
    Ok(sk)
}

impl Skeleton {
    fn words(&self, i: u32) -> &[Block] {
        let i = i as usize;
        &self.arena[i * self.blocks..(i + 1) * self.blocks]
    }

    fn find(&self, key: &[Block]) -> Option<u32> {
        let h = self.hasher.hash_one(key);
        self.index.find(h, |&i| self.words(i) == key).copied()
    }

    fn intern(&mut self, key: &[Block], from: (u32, u32), cap: usize) -> Result<(u32, bool)> {
        if let Some(i) = self.find(key) {
            return Ok((i, false));
        }
        if self.sizes.len() >= cap {
            return Err(Error::EnumerationLimit {
                what: "skeleton node",
                cap,
                found: self.sizes.len(),
            });
        }
        let id = self.sizes.len() as u32;
        self.arena.extend_from_slice(key);
        self.sizes.push(key.iter().map(|b| b.count_ones()).sum());
        self.parent.push(from);
        let (arena, blocks, hasher) = (&self.arena, self.blocks, &self.hasher);
        self.index.insert_unique(hasher.hash_one(key), id, |&j| {
            hasher.hash_one(&arena[j as usize * blocks..(j as usize + 1) * blocks])
        });
        Ok((id, true))
    }

    fn act_into(&self, node: u32, g: usize, out: &mut [Block]) {
        out.iter_mut().for_each(|b| *b = 0);
        let table = &self.tables[g];
        for x in self.iter_members(node) {
            let y = table[x as usize] as usize;
            out[y / BLOCK_BITS] |= 1 << (y % BLOCK_BITS);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_generators(&self) -> usize {
        self.tables.len()
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn node(&self, i: u32) -> ImageSet {
        let bits = FixedBitSet::with_capacity_and_blocks(self.degree, self.words(i).iter().copied());
        ImageSet::from_bits(bits)
    }

    /// Number of states in node `i`.
    pub fn node_len(&self, i: u32) -> usize {
        self.sizes[i as usize] as usize
    }

    pub fn iter_members(&self, i: u32) -> impl Iterator<Item = u32> + '_ {
        self.words(i).iter().enumerate().flat_map(|(w, &block)| {
            let mut m = block;
            std::iter::from_fn(move || {
                if m == 0 {
                    return None;
                }
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                Some((w * BLOCK_BITS + b) as u32)
            })
        })
    }

    pub fn node_contains(&self, i: u32, x: u32) -> bool {
        let x = x as usize;
        self.words(i)[x / BLOCK_BITS] & (1 << (x % BLOCK_BITS)) != 0
    }

    /// Whether node `a` is a subset of node `b`.
    pub fn node_subset(&self, a: u32, b: u32) -> bool {
        self.words(a).iter().zip(self.words(b)).all(|(x, y)| x & !y == 0)
    }

    pub fn node_index(&self, set: &ImageSet) -> Option<u32> {
        if set.degree() != self.degree {
            return None;
        }
        self.find(set.bits().as_slice())
    }

    pub fn tables(&self) -> &[Vec<u32>] {
        &self.tables
    }

    /// Target of the generator arc `node --g-->`.
    pub fn edge(&self, node: u32, g: usize) -> u32 {
        self.edges[node as usize * self.tables.len() + g]
    }

    pub fn successors(&self, node: u32) -> &[u32] {
        let n = self.tables.len();
        let start = node as usize * n;
        &self.edges[start..start + n]
    }

    /// Inclusion-maximal nodes strictly contained in `node`. The first call
    /// computes covers for every node, quadratic in the node count.
    pub fn covers(&self, node: u32) -> &[u32] {
        &self.all_covers()[node as usize]
    }

    fn all_covers(&self) -> &Vec<Vec<u32>> {
        self.covers
            .get_or_init(|| (0..self.len() as u32).map(|a| self.maximal_subsets(a)).collect())
    }

    /// Inclusion-maximal nodes strictly inside `node`, computed directly.
    pub fn maximal_subsets(&self, node: u32) -> Vec<u32> {
        let size = self.node_len(node);
        let mut cands: Vec<u32> = (0..self.len() as u32)
            .filter(|&b| self.node_len(b) < size && self.node_subset(b, node))
            .collect();
        cands.sort_by_key(|&b| (std::cmp::Reverse(self.node_len(b)), b));
        let mut kept: Vec<u32> = Vec::new();
        for b in cands {
            // larger candidates come first, so anything kept that contains
            // this one makes it non-maximal
            if !kept.iter().any(|&k| self.node_subset(b, k)) {
                kept.push(b);
            }
        }
        kept.sort_unstable();
        kept
    }

    /// Pairs `(A, B)` with `B` a maximal proper subset of `A` in the skeleton.
    pub fn inclusion_edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.all_covers()
            .iter()
            .enumerate()
            .flat_map(|(a, bs)| bs.iter().map(move |&b| (a as u32, b)))
    }

    /// A word taking `X` to `node`, if `node` is an image (`X` itself gets the
    /// empty word). Adjoined singletons have none.
    pub fn in_word(&self, node: u32) -> Option<Word> {
        let mut letters = Vec::new();
        let mut cur = node;
        while cur != 0 {
            let (p, g) = self.parent[cur as usize];
            if p == NO_PARENT {
                return None;
            }
            letters.push(g);
            cur = p;
        }
        letters.reverse();
        Some(Word::new(letters))
    }

    /// Whether `node` is `X` or an image `X.s`.
    pub fn is_image(&self, node: u32) -> bool {
        node == 0 || self.parent[node as usize].0 != NO_PARENT
    }

    /// Every node `C` with `C <= b`: those reached from `b` through generator
    /// arcs and inclusion covers.
    pub fn down_set(&self, b: u32) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[b as usize] = true;
        let mut stack = vec![b];
        while let Some(x) = stack.pop() {
            for &y in self.successors(x).iter().chain(self.covers(x)) {
                if !std::mem::replace(&mut seen[y as usize], true) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Subduction `a <= b`: some `s` in `S` with an identity adjoined has
    /// `a ⊆ b.s`.
    ///
    /// Set action is monotone, so following generator arcs and inclusion
    /// covers from `b` visits exactly the nodes contained in some `b.s`.
    pub fn subduction_leq(&self, a: u32, b: u32) -> bool {
        if self.node_subset(a, b) {
            return true;
        }
        // an image of b is never larger than b
        if self.node_len(a) > self.node_len(b) {
            return false;
        }
        let mut seen = vec![false; self.len()];
        seen[b as usize] = true;
        let mut stack = vec![b];
        while let Some(x) = stack.pop() {
            if self.node_subset(a, x) {
                return true;
            }
            for &y in self.successors(x) {
                if !std::mem::replace(&mut seen[y as usize], true) {
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// Subduction on image sets, looked up in the skeleton. Sets that are not
/// nodes are never related.
pub fn subduction_leq(a: &ImageSet, b: &ImageSet, skel: &Skeleton) -> bool {
    match (skel.node_index(a), skel.node_index(b)) {
        (Some(i), Some(j)) => skel.subduction_leq(i, j),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tsgrp::flip_flop;

    fn set(d: usize, m: &[u32]) -> ImageSet {
        ImageSet::from_members(d, m.iter().copied())
    }

    #[test]
    fn flip_flop_skeleton() {
        let sk = build_skeleton_from_tables(2, &flip_flop(), 100).unwrap();
        assert_eq!(sk.len(), 3);
        assert_eq!(sk.node(0), set(2, &[0, 1]));
        let zero = sk.node_index(&set(2, &[0])).unwrap();
        let one = sk.node_index(&set(2, &[1])).unwrap();
        assert_eq!(sk.covers(0), &[zero.min(one), zero.max(one)]);
        assert!(sk.subduction_leq(zero, 0));
        assert!(!sk.subduction_leq(0, zero));
        assert!(sk.subduction_leq(zero, zero));
        assert!(sk.in_word(zero).is_some());
        assert_eq!(sk.in_word(0), Some(Word::empty()));
    }

    #[test]
    fn identity_only_adjoins_singletons() {
        let sk = build_skeleton_from_tables(2, &[vec![0, 1]], 100).unwrap();
        assert_eq!(sk.len(), 3);
        for x in 0..2 {
            let n = sk.node_index(&ImageSet::singleton(2, x)).unwrap();
            assert!(!sk.is_image(n));
            assert!(sk.in_word(n).is_none());
            assert_eq!(sk.edge(n, 0), n);
        }
    }

    /// Subduction by brute force: enumerate `S` and quantify directly.
    #[test]
    fn subduction_matches_definition_on_a_small_semigroup() {
        let tables = vec![vec![1, 2, 3, 3, 4], vec![0, 0, 2, 1, 3], vec![1, 0, 3, 2, 4]];
        let sk = build_skeleton_from_tables(5, &tables, 1000).unwrap();
        let s = crate::tsgrp::enumerate_generated(5, &tables, 10_000).unwrap();
        for a in 0..sk.len() as u32 {
            let down = sk.down_set(a);
            for b in 0..sk.len() as u32 {
                let (sa, sb) = (sk.node(a), sk.node(b));
                let by_def = sa.is_subset(&sb) || s.elements().any(|t| sa.is_subset(&sb.act(t.as_slice())));
                assert_eq!(sk.subduction_leq(a, b), by_def, "{sa} <= {sb}");
                assert_eq!(sk.down_set(b)[a as usize], by_def);
                let _ = &down;
            }
        }
    }

    #[test]
    fn covers_are_maximal_proper_subsets() {
        let tables = vec![vec![1, 2, 3, 3, 4], vec![0, 0, 2, 1, 3], vec![1, 0, 3, 2, 4]];
        let sk = build_skeleton_from_tables(5, &tables, 1000).unwrap();
        for a in 0..sk.len() as u32 {
            for b in 0..sk.len() as u32 {
                let proper = sk.node(b).is_proper_subset(&sk.node(a));
                let maximal = proper
                    && !(0..sk.len() as u32)
                        .any(|c| sk.node(b).is_proper_subset(&sk.node(c)) && sk.node(c).is_proper_subset(&sk.node(a)));
                assert_eq!(sk.covers(a).contains(&b), maximal);
            }
        }
    }

    #[test]
    fn node_cap() {
        let tables = vec![vec![1, 2, 3, 3], vec![0, 0, 2, 1], vec![1, 0, 3, 2]];
        assert!(matches!(
            build_skeleton_from_tables(4, &tables, 2),
            Err(Error::EnumerationLimit { .. })
        ));
    }
}
