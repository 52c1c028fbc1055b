mod common;

use common::{all_sequences, compare_with_engine, config, reachable};
use tetris_sgp::engine::{OverflowPolicy, Variant};

#[test]
fn v_only_up_to_2x2_by_exhaustive_sequences() {
    for (w, h) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for variant in [Variant::Standard, Variant::Periodic] {
            let cfg = config(w, h, &["V"], variant);
            let reached = all_sequences(&cfg, 8);
            compare_with_engine(&cfg, &reached).unwrap();
        }
    }
}

#[test]
fn v_only_taller_boards() {
    for (w, h) in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3)] {
        for variant in [Variant::Standard, Variant::Periodic] {
            let cfg = config(w, h, &["V"], variant);
            compare_with_engine(&cfg, &all_sequences(&cfg, 8)).unwrap();
        }
    }
}

#[test]
fn all_triominoes_small_boards() {
    for (w, h) in [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3)] {
        for variant in [Variant::Standard, Variant::Periodic] {
            for overflow in [OverflowPolicy::PreClear, OverflowPolicy::PostClear] {
                let labels: &[&str] = if w >= 3 {
                    &["LS", "RS", "LUS", "RUS", "V", "H"]
                } else {
                    &["LS", "RS", "LUS", "RUS", "V"]
                };
                let cfg = config(w, h, labels, variant).with_overflow(overflow);
                compare_with_engine(&cfg, &reachable(&cfg)).unwrap();
            }
        }
    }
}

#[test]
fn tri_tris_counts_from_the_model_alone() {
    // frozen from the reference model, not from the engine
    let std33 = config(3, 3, &["LS", "RS", "LUS", "RUS", "V"], Variant::Standard);
    let per33 = config(3, 3, &["LS", "RS", "LUS", "RUS", "V"], Variant::Periodic);
    assert_eq!(reachable(&std33).len(), 35);
    assert_eq!(reachable(&per33).len(), 34);
}
