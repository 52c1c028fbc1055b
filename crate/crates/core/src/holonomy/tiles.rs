use hashbrown::HashMap;
use serde::{Deserialize, Serialize};

use super::imageset::ImageSet;
use super::skeleton::Skeleton;
use crate::error::{Error, Result};

/// Which notion of "tile" to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TileMode {
    /// Inclusion-maximal proper subsets of the set within the skeleton.
    #[default]
    Maximal,
    /// Proper subsets `C` such that no skeleton node `Z` satisfies
    /// `C < Z < set` strictly under subduction. Read with equality instead of
    /// equivalence, flip-flop `X` would have no tiles at all.
    Strict,
}

/// Tiles of a skeleton node, ascending by node index.
pub fn tile_nodes(node: u32, skel: &Skeleton, mode: TileMode) -> Result<Vec<u32>> {
    if skel.node_len(node) < 2 {
        return Err(Error::InvalidConfig(format!(
            "tiles asked of singleton {}",
            skel.node(node)
        )));
    }
    match mode {
        TileMode::Maximal => Ok(skel.maximal_subsets(node)),
        TileMode::Strict => Ok(strict_tiles(node, skel)),
    }
}

/// Tiles of `rep`, which must be a node of `skel`.
pub fn tiles(rep: &ImageSet, skel: &Skeleton, mode: TileMode) -> Result<Vec<ImageSet>> {
    let node = skel
        .node_index(rep)
        .ok_or_else(|| Error::InvalidConfig(format!("{rep} is not a skeleton node")))?;
    Ok(tile_nodes(node, skel, mode)?.into_iter().map(|t| skel.node(t)).collect())
}

fn strict_tiles(node: u32, skel: &Skeleton) -> Vec<u32> {
    let below = skel.down_set(node);
    let downs: HashMap<u32, Vec<bool>> = (0..skel.len() as u32)
        .filter(|&z| below[z as usize])
        .map(|z| (z, skel.down_set(z)))
        .collect();
    let leq = |a: u32, b: u32| downs[&b][a as usize];
    // C fails as soon as some Z strictly between it and `node` has C < Z
    let mut blocked = vec![false; skel.len()];
    for (&z, under_z) in &downs {
        if leq(node, z) {
            continue;
        }
        for (c, &under) in under_z.iter().enumerate() {
            if under && !leq(z, c as u32) {
                blocked[c] = true;
            }
        }
    }
    (0..skel.len() as u32)
        .filter(|&c| c != node && !blocked[c as usize] && skel.node_len(c) < skel.node_len(node) && skel.node_subset(c, node))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::build_skeleton_from_tables;
    use crate::tsgrp::flip_flop;

    #[test]
    fn flip_flop_tiles() {
        let sk = build_skeleton_from_tables(2, &flip_flop(), 10).unwrap();
        let x = ImageSet::full(2);
        for mode in [TileMode::Maximal, TileMode::Strict] {
            let t = tiles(&x, &sk, mode).unwrap();
            assert_eq!(t, vec![ImageSet::singleton(2, 0), ImageSet::singleton(2, 1)]);
        }
        assert!(tile_nodes(1, &sk, TileMode::Maximal).is_err());
    }

    #[test]
    fn maximal_tiles_cover_and_are_maximal() {
        let tables = vec![vec![1, 2, 3, 3, 4, 0], vec![0, 0, 2, 1, 3, 5], vec![1, 0, 3, 2, 4, 4]];
        let sk = build_skeleton_from_tables(6, &tables, 1000).unwrap();
        for a in 0..sk.len() as u32 {
            if sk.node_len(a) < 2 {
                continue;
            }
            let t = tile_nodes(a, &sk, TileMode::Maximal).unwrap();
            let mut union = sk.node(t[0]);
            for &x in &t {
                union.union_with(&sk.node(x));
                assert!(sk.node(x).is_proper_subset(&sk.node(a)));
                for c in 0..sk.len() as u32 {
                    let between = sk.node(x).is_proper_subset(&sk.node(c)) && sk.node(c).is_proper_subset(&sk.node(a));
                    assert!(!between);
                }
            }
            assert_eq!(union, sk.node(a));
        }
    }
}
