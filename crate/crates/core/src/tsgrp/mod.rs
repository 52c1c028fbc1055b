//! Transformation semigroups: elements, products, enumeration with witness
//! words, and the element-wise aperiodicity test.

mod enumerate;
mod transformation;

pub use enumerate::{
    enumerate_generated, enumerate_generated_partial, enumerate_semigroup, find_periodic_element,
    semigroup_is_aperiodic_elementwise, SemigroupEnumeration, DEFAULT_ELEMENT_CAP,
};
pub use transformation::{compose, element_is_aperiodic, Transformation, Word};

/// The flip-flop monoid on two points: the resets to 0 and to 1, plus the
/// identity. Returned as generator tables.
pub fn flip_flop() -> Vec<Vec<u32>> {
    vec![vec![0, 0], vec![1, 1], vec![0, 1]]
}
