//! Holonomy decomposition: the skeleton of image sets, subduction classes
//! and heights, tiles, and the permutation groups induced on them.

mod classify;
mod export;
mod group;
mod identify;
mod imageset;
mod perm;
mod report;
mod scc;
mod skeleton;
mod tiles;

pub use classify::{classes, classify, classify_with, EquivClassification, HeightConvention};
pub use export::{condensation_dot, format_components, report_from_json, report_to_json, REPORT_FORMAT, REPORT_VERSION};
pub use group::{
    holonomy_group, holonomy_search, stabilizer_witness, stabilizers_trivial, HolonomyComponent,
    DEFAULT_SEARCH_BUDGET,
};
pub use identify::{identify_group, GroupFingerprint};
pub use imageset::ImageSet;
pub use perm::{generate_group, is_group, Permutation};
pub use report::{
    aperiodic_via_holonomy, decomposition_report, nontrivial_components, report_for_skeleton, skeleton_aperiodic,
    DecompositionReport, HeightLevel, ReportOptions,
};
pub use skeleton::{build_skeleton, build_skeleton_from_tables, subduction_leq, Skeleton, DEFAULT_NODE_CAP};
pub use tiles::{tile_nodes, tiles, TileMode};
