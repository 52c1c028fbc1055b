use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::classify::{classes, classify_with, EquivClassification, HeightConvention};
use super::group::{holonomy_search, stabilizer_witness, HolonomyComponent, DEFAULT_SEARCH_BUDGET};
use super::skeleton::{build_skeleton, Skeleton};
use super::tiles::TileMode;
use crate::engine::StateSpace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOptions {
    pub convention: HeightConvention,
    pub tile_mode: TileMode,
    /// Search-state cap per component.
    pub budget: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            convention: HeightConvention::default(),
            tile_mode: TileMode::default(),
            budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

/// Components at one height.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightLevel {
    pub height: u32,
    pub components: Vec<HolonomyComponent>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub states: usize,
    pub generators: usize,
    pub skeleton_nodes: usize,
    pub classes: usize,
    pub height_of_x: u32,
    /// `|S|`, when it was enumerated separately.
    pub semigroup_size: Option<usize>,
    pub options: ReportOptions,
    /// Highest level first; only non-singleton classes appear.
    pub levels: Vec<HeightLevel>,
}

impl DecompositionReport {
    pub fn components(&self) -> impl Iterator<Item = &HolonomyComponent> {
        self.levels.iter().flat_map(|l| &l.components)
    }

    pub fn is_complete(&self) -> bool {
        self.components().all(|c| c.complete)
    }

    /// Distinct `(degree, group name)` pairs of the nontrivial components.
    pub fn nontrivial_summary(&self) -> BTreeSet<(usize, String)> {
        self.components()
            .filter(|c| !c.is_trivial())
            .map(|c| (c.degree(), c.name().to_owned()))
            .collect()
    }

    /// True iff every holonomy group is trivial. Refuses partial reports,
    /// since an unfinished search may be hiding a permutation.
    pub fn is_aperiodic(&self) -> Result<bool> {
        if let Some(c) = self.components().find(|c| !c.complete) {
            return Err(Error::Incomplete(format!(
                "holonomy search for {} stopped after {} states",
                c.representative, c.search_states
            )));
        }
        Ok(self.components().all(HolonomyComponent::is_trivial))
    }
}

/// Full holonomy report with default options.
pub fn decomposition_report(space: &StateSpace) -> Result<DecompositionReport> {
    let skel = build_skeleton(space)?;
    Ok(report_for_skeleton(&skel, ReportOptions::default()))
}

/// Heights need inclusion covers, quadratic in the skeleton size.
pub fn report_for_skeleton(skel: &Skeleton, options: ReportOptions) -> DecompositionReport {
    let classes = classify_with(skel, options.convention);
    report_with_classes(skel, &classes, options)
}

pub(crate) fn report_with_classes(skel: &Skeleton, classes: &EquivClassification, options: ReportOptions) -> DecompositionReport {
    let mut levels: Vec<HeightLevel> = Vec::new();
    for class in 0..classes.num_classes() as u32 {
        let rep = classes.representative(class);
        if skel.node_len(rep) < 2 {
            continue;
        }
        let component = match holonomy_search(rep, skel, classes, options.tile_mode, options.budget) {
            Ok(c) => c,
            // strict tiles can come out empty or single; such classes carry no action
            Err(_) => continue,
        };
        let height = classes.class_height(class);
        match levels.iter_mut().find(|l| l.height == height) {
            Some(l) => l.components.push(component),
            None => levels.push(HeightLevel {
                height,
                components: vec![component],
            }),
        }
    }
    levels.sort_by_key(|l| std::cmp::Reverse(l.height));
    DecompositionReport {
        states: skel.degree(),
        generators: skel.num_generators(),
        skeleton_nodes: skel.len(),
        classes: classes.num_classes(),
        height_of_x: classes.height_of_x(),
        semigroup_size: None,
        options,
        levels,
    }
}

/// The nontrivial holonomy components only, without heights or covers.
///
/// A class whose representative has a pointwise-trivial stabilizer has a
/// trivial holonomy group, so tiles are only computed where the stabilizer
/// moves a point. This reaches skeletons far too large for a full report.
pub fn nontrivial_components(skel: &Skeleton, budget: usize) -> Vec<HolonomyComponent> {
    let classes = classes(skel);
    let mut out = Vec::new();
    for class in 0..classes.num_classes() as u32 {
        let rep = classes.representative(class);
        if skel.node_len(rep) < 2 || stabilizer_witness(rep, skel, &classes).is_none() {
            continue;
        }
        if let Ok(c) = holonomy_search(rep, skel, &classes, TileMode::Maximal, budget) {
            if !c.is_trivial() || !c.complete {
                out.push(c);
            }
        }
    }
    out
}

/// Aperiodicity decided by holonomy: true iff no class carries a nontrivial
/// holonomy group. Never enumerates the semigroup.
pub fn aperiodic_via_holonomy(space: &StateSpace) -> Result<bool> {
    let skel = build_skeleton(space)?;
    skeleton_aperiodic(&skel, DEFAULT_SEARCH_BUDGET)
}

pub fn skeleton_aperiodic(skel: &Skeleton, budget: usize) -> Result<bool> {
    let found = nontrivial_components(skel, budget);
    if found.iter().any(|c| !c.is_trivial()) {
        return Ok(false);
    }
    match found.first() {
        Some(c) => Err(Error::Incomplete(format!(
            "holonomy search for {} stopped after {} states",
            c.representative, c.search_states
        ))),
        None => Ok(true),
    }
}
