use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A non-empty set of state indices, stored as a bitset over the state space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImageSet {
    bits: FixedBitSet,
}

impl ImageSet {
    pub fn full(degree: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(degree);
        bits.insert_range(..);
        ImageSet { bits }
    }

    pub fn singleton(degree: usize, x: u32) -> Self {
        let mut bits = FixedBitSet::with_capacity(degree);
        bits.insert(x as usize);
        ImageSet { bits }
    }

    pub fn from_members(degree: usize, members: impl IntoIterator<Item = u32>) -> Self {
        let mut bits = FixedBitSet::with_capacity(degree);
        for x in members {
            bits.insert(x as usize);
        }
        ImageSet { bits }
    }

    pub fn degree(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.bits.contains(x as usize)
    }

    /// Members in ascending order.
    pub fn members(&self) -> Vec<u32> {
        self.bits.ones().map(|x| x as u32).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.ones().map(|x| x as u32)
    }

    pub fn is_subset(&self, other: &ImageSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_proper_subset(&self, other: &ImageSet) -> bool {
        self.bits != other.bits && self.bits.is_subset(&other.bits)
    }

    /// `{ table[x] : x in self }`.
    pub fn act(&self, table: &[u32]) -> ImageSet {
        let mut bits = FixedBitSet::with_capacity(self.bits.len());
        for x in self.bits.ones() {
            bits.insert(table[x] as usize);
        }
        ImageSet { bits }
    }

    pub fn union_with(&mut self, other: &ImageSet) {
        self.bits.union_with(&other.bits);
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        ImageSet { bits }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

impl fmt::Debug for ImageSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ImageSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    degree: usize,
    members: Vec<u32>,
}

impl Serialize for ImageSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            degree: self.degree(),
            members: self.members(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ImageSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        if let Some(&x) = r.members.iter().find(|&&x| x as usize >= r.degree) {
            return Err(serde::de::Error::custom(format!("member {x} outside 0..{}", r.degree)));
        }
        Ok(ImageSet::from_members(r.degree, r.members))
    }
}
