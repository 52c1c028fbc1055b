//! Naming small permutation groups by invariants.
//!
//! A group is keyed by its order, whether it is abelian, and how many of its
//! elements have each order. That key separates every group in the catalog
//! below; anything else is reported as unidentified with the raw invariants.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::perm::{is_group, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    /// Number of points acted on.
    pub degree: usize,
    pub order: usize,
    /// Element order -> number of elements of that order.
    pub element_orders: BTreeMap<u64, usize>,
    pub abelian: bool,
    pub name: String,
}

impl GroupFingerprint {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_identified(&self) -> bool {
        !self.name.starts_with("unidentified")
    }
}

struct Entry {
    name: &'static str,
    order: usize,
    abelian: bool,
    counts: &'static [(u64, usize)],
}

const CATALOG: &[Entry] = &[
    Entry { name: "1", order: 1, abelian: true, counts: &[(1, 1)] },
    Entry { name: "C2", order: 2, abelian: true, counts: &[(1, 1), (2, 1)] },
    Entry { name: "C3", order: 3, abelian: true, counts: &[(1, 1), (3, 2)] },
    Entry { name: "C4", order: 4, abelian: true, counts: &[(1, 1), (2, 1), (4, 2)] },
    Entry { name: "C2xC2", order: 4, abelian: true, counts: &[(1, 1), (2, 3)] },
    Entry { name: "C5", order: 5, abelian: true, counts: &[(1, 1), (5, 4)] },
    Entry { name: "C6", order: 6, abelian: true, counts: &[(1, 1), (2, 1), (3, 2), (6, 2)] },
    Entry { name: "S3", order: 6, abelian: false, counts: &[(1, 1), (2, 3), (3, 2)] },
    Entry { name: "C7", order: 7, abelian: true, counts: &[(1, 1), (7, 6)] },
    Entry { name: "C8", order: 8, abelian: true, counts: &[(1, 1), (2, 1), (4, 2), (8, 4)] },
    Entry { name: "C4xC2", order: 8, abelian: true, counts: &[(1, 1), (2, 3), (4, 4)] },
    Entry { name: "C2xC2xC2", order: 8, abelian: true, counts: &[(1, 1), (2, 7)] },
    Entry { name: "D4", order: 8, abelian: false, counts: &[(1, 1), (2, 5), (4, 2)] },
    Entry { name: "Q8", order: 8, abelian: false, counts: &[(1, 1), (2, 1), (4, 6)] },
    Entry { name: "C9", order: 9, abelian: true, counts: &[(1, 1), (3, 2), (9, 6)] },
    Entry { name: "C3xC3", order: 9, abelian: true, counts: &[(1, 1), (3, 8)] },
    Entry { name: "C10", order: 10, abelian: true, counts: &[(1, 1), (2, 1), (5, 4), (10, 4)] },
    Entry { name: "D5", order: 10, abelian: false, counts: &[(1, 1), (2, 5), (5, 4)] },
    Entry { name: "C12", order: 12, abelian: true, counts: &[(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4)] },
    Entry { name: "C6xC2", order: 12, abelian: true, counts: &[(1, 1), (2, 3), (3, 2), (6, 6)] },
    Entry { name: "A4", order: 12, abelian: false, counts: &[(1, 1), (2, 3), (3, 8)] },
    Entry { name: "D6", order: 12, abelian: false, counts: &[(1, 1), (2, 7), (3, 2), (6, 2)] },
    Entry { name: "Dic3", order: 12, abelian: false, counts: &[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)] },
    Entry { name: "C2xC2xC2xC2", order: 16, abelian: true, counts: &[(1, 1), (2, 15)] },
    Entry { name: "D8", order: 16, abelian: false, counts: &[(1, 1), (2, 9), (4, 2), (8, 4)] },
    Entry { name: "C2xD4", order: 16, abelian: false, counts: &[(1, 1), (2, 11), (4, 4)] },
    Entry { name: "S3xC3", order: 18, abelian: false, counts: &[(1, 1), (2, 3), (3, 8), (6, 6)] },
    Entry { name: "D10", order: 20, abelian: false, counts: &[(1, 1), (2, 11), (5, 4), (10, 4)] },
    Entry { name: "F20", order: 20, abelian: false, counts: &[(1, 1), (2, 5), (4, 10), (5, 4)] },
    Entry { name: "S4", order: 24, abelian: false, counts: &[(1, 1), (2, 9), (3, 8), (4, 6)] },
    Entry { name: "C2xA4", order: 24, abelian: false, counts: &[(1, 1), (2, 7), (3, 8), (6, 8)] },
    Entry { name: "S3xS3", order: 36, abelian: false, counts: &[(1, 1), (2, 15), (3, 8), (6, 12)] },
    Entry { name: "C2xS4", order: 48, abelian: false, counts: &[(1, 1), (2, 19), (3, 8), (4, 12), (6, 8)] },
    Entry { name: "A5", order: 60, abelian: false, counts: &[(1, 1), (2, 15), (3, 20), (5, 24)] },
    Entry { name: "S5", order: 120, abelian: false, counts: &[(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)] },
    Entry { name: "A6", order: 360, abelian: false, counts: &[(1, 1), (2, 45), (3, 80), (4, 90), (5, 144)] },
    Entry { name: "S6", order: 720, abelian: false, counts: &[(1, 1), (2, 75), (3, 80), (4, 180), (5, 144), (6, 240)] },
];

/// Fingerprints a permutation group and names it from the catalog.
pub fn identify_group(perms: &[Permutation]) -> Result<GroupFingerprint> {
    if !is_group(perms) {
        return Err(Error::NotAGroup(format!(
            "{} permutations are not closed under composition or lack the identity",
            perms.len()
        )));
    }
    let mut unique = perms.to_vec();
    unique.sort();
    unique.dedup();
    Ok(fingerprint_of_group(&unique))
}

/// Fingerprint of a set already known to be a group without repeats.
pub(crate) fn fingerprint_of_group(perms: &[Permutation]) -> GroupFingerprint {
    let degree = perms.first().map_or(0, Permutation::degree);
    let mut element_orders = BTreeMap::new();
    for p in perms {
        *element_orders.entry(p.order()).or_insert(0) += 1;
    }
    let abelian = commutes(perms);
    let order = perms.len();
    let name = CATALOG
        .iter()
        .find(|e| {
            e.order == order
                && e.abelian == abelian
                && e.counts.len() == element_orders.len()
                && e.counts.iter().all(|(o, c)| element_orders.get(o) == Some(c))
        })
        .map_or_else(|| format!("unidentified(order={order})"), |e| e.name.to_owned());
    GroupFingerprint {
        degree,
        order,
        element_orders,
        abelian,
        name,
    }
}

fn commutes(perms: &[Permutation]) -> bool {
    // checking all pairs is quadratic; fine at catalog sizes, but large groups
    // only need a generating set, so compare against a sample of elements.
    let sample: &[Permutation] = if perms.len() > 512 { &perms[..512] } else { perms };
    perms.iter().all(|a| sample.iter().all(|b| a.then(b) == b.then(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::perm::generate_group;

    fn cyc(d: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(d, cycles).unwrap()
    }

    /// Each catalog entry regenerated from concrete permutation generators,
    /// with the invariants computed by brute force.
    #[test]
    fn catalog_matches_generated_groups() {
        let groups: Vec<(&str, usize, Vec<Permutation>)> = vec![
            ("1", 1, vec![]),
            ("C2", 2, vec![cyc(2, &[&[0, 1]])]),
            ("C3", 3, vec![cyc(3, &[&[0, 1, 2]])]),
            ("C4", 4, vec![cyc(4, &[&[0, 1, 2, 3]])]),
            ("C2xC2", 4, vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])]),
            ("C5", 5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]),
            ("C6", 5, vec![cyc(5, &[&[0, 1, 2], &[3, 4]])]),
            ("S3", 3, vec![cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 1]])]),
            ("C7", 7, vec![cyc(7, &[&[0, 1, 2, 3, 4, 5, 6]])]),
            ("C8", 8, vec![cyc(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]])]),
            ("C4xC2", 6, vec![cyc(6, &[&[0, 1, 2, 3]]), cyc(6, &[&[4, 5]])]),
            ("C2xC2xC2", 6, vec![cyc(6, &[&[0, 1]]), cyc(6, &[&[2, 3]]), cyc(6, &[&[4, 5]])]),
            ("D4", 4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]),
            // quaternions acting regularly on themselves
            ("Q8", 8, vec![cyc(8, &[&[0, 2, 1, 3], &[4, 6, 5, 7]]), cyc(8, &[&[0, 4, 1, 5], &[2, 7, 3, 6]])]),
            ("C9", 9, vec![cyc(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]])]),
            ("C3xC3", 6, vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[3, 4, 5]])]),
            ("C10", 7, vec![cyc(7, &[&[0, 1, 2, 3, 4], &[5, 6]])]),
            ("D5", 5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[1, 4], &[2, 3]])]),
            ("C12", 7, vec![cyc(7, &[&[0, 1, 2, 3], &[4, 5, 6]])]),
            ("C6xC2", 7, vec![cyc(7, &[&[0, 1, 2], &[3, 4]]), cyc(7, &[&[5, 6]])]),
            ("A4", 4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1], &[2, 3]])]),
            ("D6", 6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]]), cyc(6, &[&[1, 5], &[2, 4]])]),
            // dicyclic group of order 12 = C3 ⋊ C4, regular on 12 points
            ("Dic3", 7, vec![cyc(7, &[&[0, 1, 2]]), cyc(7, &[&[1, 2], &[3, 4, 5, 6]])]),
            ("C2xC2xC2xC2", 8, vec![cyc(8, &[&[0, 1]]), cyc(8, &[&[2, 3]]), cyc(8, &[&[4, 5]]), cyc(8, &[&[6, 7]])]),
            ("D8", 8, vec![cyc(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]), cyc(8, &[&[1, 7], &[2, 6], &[3, 5]])]),
            ("C2xD4", 6, vec![cyc(6, &[&[0, 1, 2, 3]]), cyc(6, &[&[0, 2]]), cyc(6, &[&[4, 5]])]),
            ("S3xC3", 6, vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[0, 1]]), cyc(6, &[&[3, 4, 5]])]),
            ("D10", 10, vec![cyc(10, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]]), cyc(10, &[&[1, 9], &[2, 8], &[3, 7], &[4, 6]])]),
            ("F20", 5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[1, 2, 4, 3]])]),
            ("S4", 4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]),
            ("C2xA4", 6, vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[0, 1], &[2, 3]]), cyc(6, &[&[4, 5]])]),
            ("S3xS3", 6, vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[0, 1]]), cyc(6, &[&[3, 4, 5]]), cyc(6, &[&[3, 4]])]),
            ("C2xS4", 6, vec![cyc(6, &[&[0, 1, 2, 3]]), cyc(6, &[&[0, 1]]), cyc(6, &[&[4, 5]])]),
            ("A5", 5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])]),
            ("S5", 5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])]),
            ("A6", 6, vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[1, 2, 3, 4, 5]])]),
            ("S6", 6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]]), cyc(6, &[&[0, 1]])]),
        ];
        assert_eq!(groups.len(), CATALOG.len());
        for (name, degree, gens) in groups {
            let g = generate_group(degree, &gens);
            let fp = identify_group(&g).unwrap();
            assert_eq!(fp.name, name, "{fp:?}");
            assert_eq!(fp.order, fp.element_orders.values().sum::<usize>());
        }
    }

    #[test]
    fn catalog_keys_are_distinct() {
        for (i, a) in CATALOG.iter().enumerate() {
            for b in &CATALOG[i + 1..] {
                assert!(
                    !(a.order == b.order && a.abelian == b.abelian && a.counts == b.counts),
                    "{} and {} collide",
                    a.name,
                    b.name
                );
            }
        }
    }

    #[test]
    fn examples() {
        let id = identify_group(&[Permutation::identity(3)]).unwrap();
        assert_eq!((id.name.as_str(), id.order), ("1", 1));
        assert!(id.is_trivial());

        let s5 = generate_group(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])]);
        let fp = identify_group(&s5).unwrap();
        assert_eq!(fp.name, "S5");
        let expected: BTreeMap<u64, usize> = [(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)].into();
        assert_eq!(fp.element_orders, expected);

        assert!(matches!(
            identify_group(&[cyc(3, &[&[0, 1, 2]])]),
            Err(Error::NotAGroup(_))
        ));

        // order 7 * 3 Frobenius group is not catalogued
        let f21 = generate_group(7, &[cyc(7, &[&[0, 1, 2, 3, 4, 5, 6]]), cyc(7, &[&[1, 2, 4], &[3, 6, 5]])]);
        let fp = identify_group(&f21).unwrap();
        assert_eq!(fp.order, 21);
        assert!(!fp.is_identified());
    }
}
