use serde::{Deserialize, Serialize};

use super::scc::tarjan;
use super::skeleton::Skeleton;

/// How chain lengths are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeightConvention {
    /// Every singleton sits at height 0; above that, each strict subduction
    /// step adds one.
    #[default]
    SingletonsAtZero,
    /// Plain longest strict chain, so singletons can sit above one another
    /// when one state is reachable from another.
    LongestChain,
}

/// Subduction equivalence classes with a representative and a height each.
#[derive(Debug, Clone)]
pub struct EquivClassification {
    class_of: Vec<u32>,
    representative: Vec<u32>,
    /// Tarjan order: every generator arc leaves a class for one earlier in
    /// this list.
    topo: Vec<u32>,
    heights: Option<Vec<u32>>,
    convention: HeightConvention,
}

impl EquivClassification {
    pub fn num_classes(&self) -> usize {
        self.representative.len()
    }

    pub fn class_of(&self, node: u32) -> u32 {
        self.class_of[node as usize]
    }

    /// The lowest-numbered node of the class.
    pub fn representative(&self, class: u32) -> u32 {
        self.representative[class as usize]
    }

    pub fn is_representative(&self, node: u32) -> bool {
        self.representative[self.class_of(node) as usize] == node
    }

    pub fn members(&self, class: u32) -> Vec<u32> {
        (0..self.class_of.len() as u32)
            .filter(|&n| self.class_of[n as usize] == class)
            .collect()
    }

    pub fn equivalent(&self, a: u32, b: u32) -> bool {
        self.class_of(a) == self.class_of(b)
    }

    pub fn has_heights(&self) -> bool {
        self.heights.is_some()
    }

    pub fn convention(&self) -> HeightConvention {
        self.convention
    }

    /// Height of a node's class. Panics when heights were not computed.
    pub fn height(&self, node: u32) -> u32 {
        self.class_height(self.class_of(node))
    }

    pub fn class_height(&self, class: u32) -> u32 {
        self.heights.as_ref().expect("heights not computed")[class as usize]
    }

    /// `h(X)`.
    pub fn height_of_x(&self) -> u32 {
        self.height(0)
    }

    /// Classes in an order where all generator arcs point backwards.
    pub(crate) fn bottom_up(&self) -> &[u32] {
        &self.topo
    }
}

/// Equivalence classes only; cheap, no inclusion covers needed.
///
/// `A ≡ B` forces `|A| = |B|`, so each side is an image of the other and
/// the classes are the strongly connected components of the generator arcs.
pub fn classes(skel: &Skeleton) -> EquivClassification {
    let n = skel.len();
    let (comp, count) = tarjan(n, |v| skel.successors(v).iter().copied());
    // renumber by lowest member so class 0 holds X
    let mut rename = vec![u32::MAX; count];
    let mut representative = Vec::with_capacity(count);
    for (v, &c) in comp.iter().enumerate() {
        let c = c as usize;
        if rename[c] == u32::MAX {
            rename[c] = representative.len() as u32;
            representative.push(v as u32);
        }
    }
    let class_of: Vec<u32> = comp.iter().map(|&c| rename[c as usize]).collect();
    let mut topo = vec![0u32; count];
    for (tarjan_id, &new) in rename.iter().enumerate() {
        topo[tarjan_id] = new;
    }
    EquivClassification {
        class_of,
        representative,
        topo,
        heights: None,
        convention: HeightConvention::default(),
    }
}

/// Classes plus heights under the default convention.
pub fn classify(skel: &Skeleton) -> EquivClassification {
    classify_with(skel, HeightConvention::default())
}

/// Heights are longest paths in the condensation of the generator arcs and
/// inclusion covers: every such path is a strict subduction chain and every
/// strict step `A < B` unfolds into one.
pub fn classify_with(skel: &Skeleton, convention: HeightConvention) -> EquivClassification {
    let mut c = classes(skel);
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); c.num_classes()];
    for v in 0..skel.len() as u32 {
        members[c.class_of(v) as usize].push(v);
    }
    // covers shrink sets and generator arcs never grow them, so ordering by
    // size, then by Tarjan order within a size, puts every arc's target first
    let mut order = c.bottom_up().to_vec();
    order.sort_by_key(|&class| skel.node_len(c.representative(class)));
    let mut heights = vec![0u32; c.num_classes()];
    for &class in &order {
        let rep = c.representative(class);
        if convention == HeightConvention::SingletonsAtZero && skel.node_len(rep) == 1 {
            heights[class as usize] = 0;
            continue;
        }
        let mut h = 0u32;
        for &v in &members[class as usize] {
            for &w in skel.successors(v).iter().chain(skel.covers(v)) {
                let cw = c.class_of(w);
                if cw != class {
                    h = h.max(heights[cw as usize] + 1);
                }
            }
        }
        heights[class as usize] = h;
    }
    c.heights = Some(heights);
    c.convention = convention;
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::build_skeleton_from_tables;
    use crate::tsgrp::flip_flop;

    #[test]
    fn flip_flop_heights() {
        let sk = build_skeleton_from_tables(2, &flip_flop(), 10).unwrap();
        let c = classify(&sk);
        // the two singletons are images of each other
        assert_eq!(c.num_classes(), 2);
        assert_eq!(c.height_of_x(), 1);
        assert_eq!(c.representative(0), 0);
        let lc = classify_with(&sk, HeightConvention::LongestChain);
        assert_eq!(lc.height_of_x(), 1);
    }

    /// Heights against a brute-force longest chain over the subduction
    /// relation itself.
    #[test]
    fn heights_match_longest_strict_chain() {
        let tables = vec![vec![1, 2, 3, 3, 4, 0], vec![0, 0, 2, 1, 3, 5], vec![1, 0, 3, 2, 4, 4]];
        let sk = build_skeleton_from_tables(6, &tables, 1000).unwrap();
        let n = sk.len() as u32;
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| sk.subduction_leq(a, b)).collect()).collect();
        for conv in [HeightConvention::SingletonsAtZero, HeightConvention::LongestChain] {
            let c = classify_with(&sk, conv);
            let mut memo = vec![None; n as usize];
            fn chain(a: u32, leq: &[Vec<bool>], sk: &Skeleton, conv: HeightConvention, memo: &mut Vec<Option<u32>>) -> u32 {
                if let Some(h) = memo[a as usize] {
                    return h;
                }
                let h = if conv == HeightConvention::SingletonsAtZero && sk.node_len(a) == 1 {
                    0
                } else {
                    (0..leq.len() as u32)
                        .filter(|&b| leq[b as usize][a as usize] && !leq[a as usize][b as usize])
                        .map(|b| chain(b, leq, sk, conv, memo) + 1)
                        .max()
                        .unwrap_or(0)
                };
                memo[a as usize] = Some(h);
                h
            }
            for a in 0..n {
                assert_eq!(c.height(a), chain(a, &leq, &sk, conv, &mut memo), "node {a} {conv:?}");
                for b in 0..n {
                    assert_eq!(c.equivalent(a, b), leq[a as usize][b as usize] && leq[b as usize][a as usize]);
                }
            }
        }
    }
}
