use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::json;
use tetris_sgp::engine::StateSpace;
use tetris_sgp::holonomy::{
    build_skeleton_from_tables, classify_with, condensation_dot, format_components, nontrivial_components,
    report_for_skeleton, report_to_json, HolonomyComponent, Permutation, ReportOptions, Skeleton,
};
use tetris_sgp::tsgrp::{find_periodic_element, semigroup_is_aperiodic_elementwise};
use tetris_sgp::wordlang::{
    cycle_through, evaluate_word, parse_word, read_word_file, render_word, restrict_to, tile_action_of, TileAction,
};
use tetris_sgp::Error;

use crate::args::{AperiodicArgs, Cli, EvalWordArgs, Format, GameArgs, HolonomyArgs, HolonomyKnobs, Method, SemigroupArgs};
use crate::cache::{write_atomic, Cache};
use crate::{CliError, CliResult};

fn space_for(cli: &Cli, game: &GameArgs) -> CliResult<StateSpace> {
    Cache::from_cli(cli).state_space(&game.config()?, game.state_cap)
}

fn skeleton_for(space: &StateSpace, knobs: &HolonomyKnobs) -> CliResult<Skeleton> {
    Ok(build_skeleton_from_tables(space.len(), space.tables(), knobs.node_cap)?)
}

fn no_csv(cli: &Cli, what: &str) -> CliResult<()> {
    if cli.format == Format::Csv {
        return Err(CliError::Usage(format!("`{what}` has no CSV output")));
    }
    Ok(())
}

pub fn enumerate(cli: &Cli, game: &GameArgs) -> CliResult<String> {
    let space = space_for(cli, game)?;
    let (x, g) = (space.len(), space.generators().len());
    Ok(match cli.format {
        Format::Text => format!("|X| = {x}, generators = {g}\n"),
        Format::Json => format!(
            "{}\n",
            json!({"game": space.config().describe(), "states": x, "generators": g})
        ),
        Format::Csv => format!("states,generators\n{x},{g}\n"),
    })
}

pub fn states(cli: &Cli, game: &GameArgs) -> CliResult<String> {
    no_csv(cli, "states")?;
    let space = space_for(cli, game)?;
    let width = space.config().width;
    if cli.format == Format::Json {
        let list: Vec<_> = space
            .states()
            .iter()
            .enumerate()
            .map(|(i, s)| json!({"index": i, "end": s.is_end(), "cells": s.cells()}))
            .collect();
        return Ok(format!("{}\n", serde_json::Value::Array(list)));
    }
    let mut out = String::new();
    for (i, s) in space.states().iter().enumerate() {
        let _ = writeln!(out, "state {i}");
        out.push_str(&s.render(width));
        out.push('\n');
    }
    Ok(out)
}

pub fn semigroup(cli: &Cli, a: &SemigroupArgs) -> CliResult<String> {
    let space = space_for(cli, &a.game)?;
    let e = Cache::from_cli(cli).semigroup(&space, a.element_cap)?;
    Ok(match cli.format {
        Format::Text => format!("|S| = {}\n", e.len()),
        Format::Json => format!("{}\n", json!({"game": space.config().describe(), "elements": e.len()})),
        Format::Csv => format!("elements\n{}\n", e.len()),
    })
}

pub fn aperiodic(cli: &Cli, a: &AperiodicArgs) -> CliResult<String> {
    no_csv(cli, "aperiodic")?;
    let space = space_for(cli, &a.game)?;
    let (aperiodic, witness) = match a.method {
        Method::Element => {
            let e = Cache::from_cli(cli).semigroup(&space, a.element_cap)?;
            let ok = semigroup_is_aperiodic_elementwise(&e)?;
            let witness = find_periodic_element(&e).map(|(t, w)| {
                let on = (0..t.degree() as u32).find_map(|x| cycle_through(&t, x).filter(|c| c.len() > 1));
                format!(
                    "{} (cycle {})",
                    render_word(&w, &space),
                    on.map_or_else(String::new, |c| state_cycle(&c))
                )
            });
            (ok, witness)
        }
        Method::Holonomy => {
            let skel = skeleton_for(&space, &a.holonomy)?;
            let found = nontrivial_components(&skel, a.holonomy.budget);
            match found.iter().find(|c| !c.is_trivial()) {
                Some(c) => (false, Some(component_witness(c, &space))),
                None => match found.first() {
                    Some(c) => {
                        return Err(Error::Incomplete(format!(
                            "holonomy search for {} stopped after {} states",
                            c.representative, c.search_states
                        ))
                        .into())
                    }
                    None => (true, None),
                },
            }
        }
    };
    let method = match a.method {
        Method::Element => "element",
        Method::Holonomy => "holonomy",
    };
    Ok(match cli.format {
        Format::Json => format!(
            "{}\n",
            json!({"game": space.config().describe(), "method": method, "aperiodic": aperiodic, "witness": witness})
        ),
        _ => {
            let mut out = format!("aperiodic = {aperiodic}\n");
            if let Some(w) = witness {
                let _ = writeln!(out, "witness: {w}");
            }
            out
        }
    })
}

fn component_witness(c: &HolonomyComponent, space: &StateSpace) -> String {
    let i = c.perms.iter().position(|p| !p.is_identity()).expect("nontrivial component");
    format!(
        "({},{}) on {}: {} via {}",
        c.degree(),
        c.name(),
        c.representative,
        c.perms[i],
        render_word(&c.witnesses[i], space)
    )
}

fn state_cycle(points: &[u32]) -> String {
    let inner: Vec<String> = points.iter().map(u32::to_string).collect();
    format!("({})", inner.join(","))
}

/// A permutation of positions in `points`, written with the state indices.
fn on_states(p: &Permutation, points: &[u32]) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| state_cycle(&c.iter().map(|&i| points[i as usize]).collect::<Vec<_>>()))
        .collect()
}

pub fn holonomy(cli: &Cli, a: &HolonomyArgs) -> CliResult<String> {
    let space = space_for(cli, &a.game)?;
    let skel = skeleton_for(&space, &a.knobs)?;
    let mut out = String::new();
    if a.quick {
        no_csv(cli, "holonomy --quick")?;
        let found = nontrivial_components(&skel, a.knobs.budget);
        if cli.format == Format::Json {
            return Ok(format!("{}\n", serde_json::to_string_pretty(&found).expect("components serialize")));
        }
        let _ = writeln!(out, "game: {}", space.config().describe());
        let _ = writeln!(out, "|X| = {}, generators = {}, |Q| = {}", space.len(), space.generators().len(), skel.len());
        for c in &found {
            write_component(&mut out, c);
        }
        let pairs = found.iter().filter(|c| !c.is_trivial()).map(|c| (c.degree(), c.name().to_owned())).collect();
        let _ = writeln!(out, "nontrivial: {}", format_components(&pairs));
        return Ok(out);
    }

    let options = ReportOptions {
        convention: a.convention(),
        tile_mode: a.tile_mode(),
        budget: a.knobs.budget,
    };
    let report = report_for_skeleton(&skel, options);
    if let Some(path) = &a.dot {
        let classes = classify_with(&skel, options.convention);
        write_atomic(path, &condensation_dot(&skel, &classes, Some(&report)))?;
    }
    match cli.format {
        Format::Json => Ok(report_to_json(&report, Some(space.config())) + "\n"),
        Format::Csv => {
            out.push_str("height,degree,group,order,complete,representative\n");
            for level in &report.levels {
                for c in level.components.iter().filter(|c| a.all || !c.is_trivial()) {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},\"{}\"",
                        level.height,
                        c.degree(),
                        c.name(),
                        c.perms.len(),
                        c.complete,
                        c.representative
                    );
                }
            }
            Ok(out)
        }
        Format::Text => {
            let _ = writeln!(out, "game: {}", space.config().describe());
            let _ = writeln!(
                out,
                "|X| = {}, generators = {}, |Q| = {}, classes = {}",
                report.states, report.generators, report.skeleton_nodes, report.classes
            );
            let _ = writeln!(
                out,
                "h(X) = {} (heights {}, tiles {})",
                report.height_of_x,
                value_name(a.height_convention),
                value_name(a.tile_mode)
            );
            for level in &report.levels {
                let shown: Vec<_> = level.components.iter().filter(|c| a.all || !c.is_trivial()).collect();
                if shown.is_empty() {
                    continue;
                }
                let _ = writeln!(out, "height {}:", level.height);
                for c in shown {
                    write_component(&mut out, c);
                }
            }
            let _ = writeln!(out, "nontrivial: {}", format_components(&report.nontrivial_summary()));
            if !report.is_complete() {
                out.push_str("warning: some searches hit the budget; their group orders are lower bounds\n");
            }
            Ok(out)
        }
    }
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_owned()).unwrap_or_default()
}

fn write_component(out: &mut String, c: &HolonomyComponent) {
    let _ = writeln!(
        out,
        "  ({},{}) order {} on {}{}",
        c.degree(),
        c.name(),
        c.perms.len(),
        c.representative,
        if c.complete { "" } else { " [partial]" }
    );
}

pub fn eval_word(cli: &Cli, a: &EvalWordArgs) -> CliResult<String> {
    no_csv(cli, "eval-word")?;
    let config = a.game.config()?;
    let words: Vec<(String, String)> = match (&a.word, &a.file) {
        (Some(w), _) => vec![("word".to_owned(), w.clone())],
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            read_word_file(&text)?
                .into_iter()
                .map(|w| (w.name.unwrap_or_else(|| format!("line {}", w.line)), w.text))
                .collect()
        }
        (None, None) => return Err(CliError::Usage("give --word or --file".into())),
    };
    let space = Cache::from_cli(cli).state_space(&config, a.game.state_cap)?;
    let components = if a.components {
        let skel = skeleton_for(&space, &a.knobs)?;
        nontrivial_components(&skel, a.knobs.budget)
    } else {
        Vec::new()
    };
    let mut out = String::new();
    let mut records = Vec::new();
    for (name, text) in words {
        let word = parse_word(&text, &config)?;
        let t = evaluate_word(&word, &space)?;
        let start = cycle_through(&t, 0).map(|c| state_cycle(&c));
        let on = if a.on.is_empty() {
            None
        } else {
            Some(restrict_to(&t, &a.on).map(|p| on_states(&p, &a.on)))
        };
        let mut actions = Vec::new();
        for c in &components {
            let action = match tile_action_of(&t, &c.tiles) {
                TileAction::Permutation(p) => p.to_string(),
                TileAction::NotAPermutation { tile, image } => format!("not a permutation: {tile} -> {image}"),
            };
            actions.push(format!("({},{}) on {}: {}", c.degree(), c.name(), c.representative, action));
        }
        if cli.format == Format::Json {
            records.push(json!({
                "name": name, "word": word.render(), "tokens": word.len(), "rank": t.rank(),
                "cycle_through_start": start, "on": on, "components": actions,
            }));
            continue;
        }
        let _ = writeln!(out, "{name}: {} tokens, rank {}", word.len(), t.rank());
        let _ = writeln!(out, "  cycle through state 0: {}", start.as_deref().unwrap_or("none"));
        if let Some(on) = on {
            let _ = writeln!(
                out,
                "  on {}: {}",
                state_cycle(&a.on),
                on.as_deref().unwrap_or("not a permutation")
            );
        }
        for line in actions {
            let _ = writeln!(out, "  {line}");
        }
    }
    if cli.format == Format::Json {
        out = format!("{}\n", serde_json::Value::Array(records));
    }
    Ok(out)
}
