use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A total self-map of `{0, .., n-1}`; entry `i` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Transformation {
    map: Vec<u32>,
}

impl Transformation {
    pub fn new(map: Vec<u32>) -> Result<Self> {
        let n = map.len();
        if let Some(&bad) = map.iter().find(|&&j| j as usize >= n) {
            return Err(Error::Format(format!("image {bad} out of range for degree {n}")));
        }
        Ok(Transformation { map })
    }

    pub(crate) fn from_vec_unchecked(map: Vec<u32>) -> Self {
        Transformation { map }
    }

    pub fn identity(degree: usize) -> Self {
        Transformation {
            map: (0..degree as u32).collect(),
        }
    }

    pub fn constant(degree: usize, value: u32) -> Self {
        assert!((value as usize) < degree, "constant outside the domain");
        Transformation {
            map: vec![value; degree],
        }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    pub fn image_of(&self, point: u32) -> u32 {
        self.map[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Number of distinct images.
    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.map.len()];
        self.map.iter().filter(|&&j| !std::mem::replace(&mut seen[j as usize], true)).count()
    }

    /// `self` followed by `other`: `x . (ab) = (x . a) . b`.
    pub fn then(&self, other: &Transformation) -> Result<Transformation> {
        compose(self, other)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, j) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "]")
    }
}

/// Left-to-right product: apply `a`, then `b`.
pub fn compose(a: &Transformation, b: &Transformation) -> Result<Transformation> {
    if a.map.len() != b.map.len() {
        return Err(Error::LengthMismatch {
            left: a.map.len(),
            right: b.map.len(),
        });
    }
    Ok(Transformation {
        map: a.map.iter().map(|&j| b.map[j as usize]).collect(),
    })
}

/// Whether some power satisfies `t^(m+1) = t^m`.
///
/// The powers of `t` settle onto the permutation `t` induces on the points
/// lying on cycles of its functional graph; that permutation is trivial
/// exactly when every cycle is a fixed point.
pub fn element_is_aperiodic(t: &Transformation) -> bool {
    map_is_aperiodic(&t.map)
}

pub(crate) fn map_is_aperiodic<T: Copy + Into<u32>>(map: &[T]) -> bool {
    const UNSEEN: u32 = u32::MAX;
    let n = map.len();
    // visit stamp per point; a walk that hits its own stamp has found a cycle
    let mut stamp = vec![UNSEEN; n];
    for start in 0..n {
        if stamp[start] != UNSEEN {
            continue;
        }
        let mut x = start;
        while stamp[x] == UNSEEN {
            stamp[x] = start as u32;
            x = map[x].into() as usize;
        }
        if stamp[x] == start as u32 && map[x].into() as usize != x {
            return false;
        }
    }
    true
}

/// A word over generator indices. The empty word stands for the adjoined
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    pub letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Folds the word over generator tables, left to right.
    pub fn evaluate(&self, degree: usize, tables: &[Vec<u32>]) -> Result<Transformation> {
        let mut map: Vec<u32> = (0..degree as u32).collect();
        for &g in &self.letters {
            let table = tables
                .get(g as usize)
                .ok_or_else(|| Error::Format(format!("generator {g} out of range")))?;
            if table.len() != degree {
                return Err(Error::LengthMismatch {
                    left: table.len(),
                    right: degree,
                });
            }
            for x in map.iter_mut() {
                *x = table[*x as usize];
            }
        }
        Ok(Transformation { map })
    }

    /// Image of a single point.
    pub fn act(&self, point: u32, tables: &[Vec<u32>]) -> u32 {
        self.letters.iter().fold(point, |x, &g| tables[g as usize][x as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> Transformation {
        Transformation::new(v.to_vec()).unwrap()
    }

    /// Literal power iteration: walk t, t^2, ... until a power repeats and
    /// check that the repeat is immediate.
    fn aperiodic_by_powers(t: &Transformation) -> bool {
        let mut seen = vec![t.clone()];
        loop {
            let next = compose(seen.last().unwrap(), t).unwrap();
            if let Some(pos) = seen.iter().position(|p| *p == next) {
                return pos == seen.len() - 1;
            }
            seen.push(next);
        }
    }

    #[test]
    fn compose_laws() {
        let a = t(&[1, 2, 0, 0]);
        assert_eq!(compose(&Transformation::identity(4), &a).unwrap(), a);
        assert_eq!(compose(&a, &Transformation::identity(4)).unwrap(), a);
        let c = Transformation::constant(4, 3);
        assert_eq!(compose(&a, &c).unwrap(), c);
        // left to right: 0 -a-> 1 -b-> b[1]
        let b = t(&[3, 0, 1, 2]);
        assert_eq!(compose(&a, &b).unwrap(), t(&[0, 1, 3, 3]));
        assert!(matches!(
            compose(&a, &Transformation::identity(3)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn aperiodicity_examples() {
        assert!(element_is_aperiodic(&Transformation::identity(3)));
        assert!(!element_is_aperiodic(&t(&[1, 0])));
        assert!(element_is_aperiodic(&Transformation::constant(5, 2)));
        // tail into a 2-cycle
        assert!(!element_is_aperiodic(&t(&[1, 2, 3, 2])));
        // tail into a fixed point
        assert!(element_is_aperiodic(&t(&[1, 2, 3, 3])));
    }

    #[test]
    fn cycle_test_matches_power_iteration_exhaustively() {
        // every self-map of a 4-point set
        for code in 0..256u32 {
            let map: Vec<u32> = (0..4).map(|i| (code >> (2 * i)) & 3).collect();
            let t = t(&map);
            assert_eq!(element_is_aperiodic(&t), aperiodic_by_powers(&t), "{t}");
        }
    }

    #[test]
    fn word_evaluation() {
        let tables = vec![vec![1, 2, 0], vec![0, 0, 2]];
        let w = Word::new(vec![0, 1]);
        let expected = compose(&t(&tables[0]), &t(&tables[1])).unwrap();
        assert_eq!(w.evaluate(3, &tables).unwrap(), expected);
        assert_eq!(Word::empty().evaluate(3, &tables).unwrap(), Transformation::identity(3));
        assert_eq!(w.act(2, &tables), expected.image_of(2));
        assert!(Word::new(vec![5]).evaluate(3, &tables).is_err());
    }
}
