use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::classify::EquivClassification;
use super::report::DecompositionReport;
use super::skeleton::Skeleton;
use crate::engine::GameConfig;
use crate::error::{Error, Result};

pub const REPORT_FORMAT: &str = "tetris-sgp/holonomy-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Envelope {
    format: String,
    version: u32,
    config: Option<GameConfig>,
    report: DecompositionReport,
}

/// Versioned JSON document holding the report and, optionally, the game it
/// came from.
pub fn report_to_json(report: &DecompositionReport, config: Option<&GameConfig>) -> String {
    let env = Envelope {
        format: REPORT_FORMAT.to_owned(),
        version: REPORT_VERSION,
        config: config.cloned(),
        report: report.clone(),
    };
    serde_json::to_string_pretty(&env).expect("report serializes")
}

pub fn report_from_json(text: &str) -> Result<(DecompositionReport, Option<GameConfig>)> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if env.format != REPORT_FORMAT || env.version != REPORT_VERSION {
        return Err(Error::Format(format!("unsupported report {} v{}", env.format, env.version)));
    }
    Ok((env.report, env.config))
}

/// `(4,C2xC2) (3,S3)` style list, largest degree first.
pub fn format_components(pairs: &BTreeSet<(usize, String)>) -> String {
    let mut v: Vec<_> = pairs.iter().collect();
    v.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    v.iter().map(|(d, n)| format!("({d},{n})")).collect::<Vec<_>>().join(" ")
}

/// Graphviz rendering of the class DAG: one box per class with its
/// representative and height, arcs for generator and inclusion steps between
/// classes. Classes carrying a nontrivial group are labelled with it.
pub fn condensation_dot(skel: &Skeleton, classes: &EquivClassification, report: Option<&DecompositionReport>) -> String {
    let mut out = String::from("digraph holonomy {\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n");
    for class in 0..classes.num_classes() as u32 {
        let rep = classes.representative(class);
        let mut label = format!("{}", skel.node(rep));
        if classes.has_heights() {
            let _ = write!(label, "\\nh={}", classes.class_height(class));
        }
        if let Some(c) = report.and_then(|r| r.components().find(|c| c.representative_node == rep)) {
            if !c.is_trivial() {
                let _ = write!(label, "\\n({},{})", c.degree(), c.name());
            }
        }
        let _ = writeln!(out, "  c{class} [label=\"{label}\"];");
    }
    let mut arcs = BTreeSet::new();
    for v in 0..skel.len() as u32 {
        let cv = classes.class_of(v);
        let below = skel.successors(v).iter().chain(if classes.has_heights() { skel.covers(v) } else { &[] });
        for &w in below {
            let cw = classes.class_of(w);
            if cw != cv {
                arcs.insert((cw, cv));
            }
        }
    }
    for (a, b) in arcs {
        let _ = writeln!(out, "  c{a} -> c{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::{build_skeleton_from_tables, classify, report_for_skeleton, ReportOptions};
    use crate::tsgrp::flip_flop;

    #[test]
    fn json_round_trip_and_dot() {
        let tables = vec![vec![1, 2, 0], vec![0, 0, 1]];
        let sk = build_skeleton_from_tables(3, &tables, 100).unwrap();
        let r = report_for_skeleton(&sk, ReportOptions::default());
        let text = report_to_json(&r, None);
        let (back, cfg) = report_from_json(&text).unwrap();
        assert_eq!(back, r);
        assert!(cfg.is_none());
        assert!(report_from_json("{}").is_err());

        let dot = condensation_dot(&sk, &classify(&sk), Some(&r));
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("(3,C3)"));
        assert_eq!(format_components(&r.nontrivial_summary()), "(3,C3) (2,C2)");
    }

    #[test]
    fn dot_for_flip_flop() {
        let sk = build_skeleton_from_tables(2, &flip_flop(), 10).unwrap();
        let dot = condensation_dot(&sk, &classify(&sk), None);
        assert!(dot.contains("c1 -> c0;") || dot.contains("c2 -> c0;"));
    }
}
