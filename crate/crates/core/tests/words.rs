mod common;

use tetris_sgp::engine::{enumerate_state_space, Variant, DEFAULT_STATE_CAP};
use tetris_sgp::holonomy::{build_skeleton, nontrivial_components, DEFAULT_SEARCH_BUDGET};
use tetris_sgp::wordlang::{induced_tile_action, parse_word, read_word_file, TileAction};
use tetris_sgp::Error;

const WORDS: &str = include_str!("../fixtures/printed_words.txt");

fn word(name: &str) -> String {
    read_word_file(WORDS)
        .unwrap()
        .into_iter()
        .find(|w| w.name.as_deref() == Some(name))
        .unwrap()
        .text
}

#[test]
fn fixture_lengths() {
    let cfg = common::config(3, 4, &["RS", "LUS", "RUS", "V"], Variant::Periodic);
    assert_eq!(parse_word(&word("GEN1"), &cfg).unwrap().len(), 85);
    assert_eq!(parse_word(&word("GEN2"), &cfg).unwrap().len(), 56);
    let cfg = common::config(3, 3, &["LS", "RS", "LUS", "RUS", "V"], Variant::Periodic);
    let lens: Vec<usize> = ["A", "B", "C"].iter().map(|n| parse_word(&word(n), &cfg).unwrap().len()).collect();
    assert_eq!(lens, [10, 12, 4]);
}

#[test]
fn gen_words_need_no_ls() {
    // LS is not among the reduced pieces, so it must not appear in GEN1/GEN2
    let cfg = common::config(3, 4, &["RS", "LUS", "RUS", "V"], Variant::Periodic);
    assert!(parse_word(&word("GEN1"), &cfg).is_ok());
    let err = parse_word(&word("A"), &cfg).unwrap_err();
    assert_eq!(err, Error::UnknownLabel("LS".into()));
}

#[test]
fn c2xc2_words_act_on_the_component_tiles() {
    let cfg = common::config(3, 3, &["LS", "RS", "LUS", "RUS", "V"], Variant::Periodic);
    let space = enumerate_state_space(&cfg, DEFAULT_STATE_CAP).unwrap();
    let skel = build_skeleton(&space).unwrap();
    let comps = nontrivial_components(&skel, DEFAULT_SEARCH_BUDGET);
    let k4 = comps.iter().find(|c| c.name() == "C2xC2").unwrap();
    for name in ["A", "B", "C"] {
        let w = parse_word(&word(name), &cfg).unwrap();
        match induced_tile_action(&w, k4, &space).unwrap() {
            TileAction::Permutation(p) => {
                assert_eq!(p.order(), 2, "{name}");
                assert!(k4.perms.contains(&p));
            }
            other => panic!("{name}: {other:?}"),
        }
    }
}

#[test]
fn malformed_words() {
    let cfg = common::config(3, 3, &["LS", "RS", "LUS", "RUS", "V"], Variant::Standard);
    assert!(matches!(parse_word("", &cfg), Err(Error::WordSyntax { .. })));
    assert!(matches!(parse_word("V_", &cfg), Err(Error::WordSyntax { .. })));
    assert!(matches!(parse_word("V_0 ?", &cfg), Err(Error::WordSyntax { .. })));
    assert!(matches!(parse_word("LS_2", &cfg), Err(Error::PlacementOutOfBounds { column: 2, .. })));
    assert_eq!(parse_word("T_0", &cfg).unwrap_err(), Error::UnknownLabel("T".into()));
}
