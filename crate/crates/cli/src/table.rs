//! The Tri-tris tables: one CSV row per board, "-" wherever a cap stops the
//! computation.

use std::fmt::Write as _;

use tetris_sgp::engine::{Catalog, GameConfig, StateSpace, Variant, DEFAULT_STATE_CAP};
use tetris_sgp::holonomy::{build_skeleton_from_tables, classify, format_components, nontrivial_components};
use tetris_sgp::Error;

use crate::args::{Cli, Format, ReproduceArgs, Table};
use crate::cache::Cache;
use crate::{CliError, CliResult};

const TRI_TRIS: &[&str] = &["LS", "RS", "LUS", "RUS", "V"];
const REDUCED: &[&str] = &["RS", "LUS", "RUS", "V"];

fn config(w: u32, h: u32, pieces: &[&str], variant: Variant) -> CliResult<GameConfig> {
    let pieces = Catalog::triominoes().select(pieces)?;
    Ok(GameConfig::new(w, h, pieces)?.with_variant(variant))
}

/// Budget failures become "-"; anything else is a real error.
fn or_dash<T: ToString>(r: CliResult<T>) -> CliResult<String> {
    match r {
        Ok(v) => Ok(v.to_string()),
        Err(CliError::Core(Error::EnumerationLimit { .. } | Error::SearchBudget { .. } | Error::Incomplete(_))) => {
            Ok("-".into())
        }
        Err(e) => Err(e),
    }
}

struct Row {
    board: String,
    pieces: String,
    states: String,
    semigroup: String,
    height: String,
    groups: String,
}

fn run_row(cache: &Cache, cfg: &GameConfig, args: &ReproduceArgs, table: Table) -> CliResult<Row> {
    let space = cache.state_space(cfg, DEFAULT_STATE_CAP)?;
    let per_element = 2 * space.len() + 16;
    let cap = (args.memory_mb << 20) / per_element;
    let semigroup = or_dash(cache.semigroup(&space, cap).map(|e| e.len()))?;
    let (height, groups) = holonomy_columns(&space, args, table)?;
    Ok(Row {
        board: format!("{}x{}", cfg.width, cfg.height),
        pieces: cfg.pieces.iter().map(|p| p.label()).collect::<Vec<_>>().join(" "),
        states: space.len().to_string(),
        semigroup,
        height,
        groups,
    })
}

fn holonomy_columns(space: &StateSpace, args: &ReproduceArgs, table: Table) -> CliResult<(String, String)> {
    let skel = match build_skeleton_from_tables(space.len(), space.tables(), args.knobs.node_cap) {
        Ok(s) => s,
        Err(Error::EnumerationLimit { .. }) => return Ok(("-".into(), "-".into())),
        Err(e) => return Err(e.into()),
    };
    let height = if table == Table::Table1 && skel.len() <= args.cover_cap {
        classify(&skel).height_of_x().to_string()
    } else {
        "-".into()
    };
    let groups = if table == Table::Table2 {
        let found = nontrivial_components(&skel, args.knobs.budget);
        if found.iter().any(|c| !c.complete) {
            "-".into()
        } else {
            let pairs = found.iter().map(|c| (c.degree(), c.name().to_owned())).collect();
            format_components(&pairs)
        }
    } else {
        String::new()
    };
    Ok((height, groups))
}

pub fn reproduce(cli: &Cli, args: &ReproduceArgs) -> CliResult<String> {
    if cli.format != Format::Csv && cli.format != Format::Text {
        return Err(CliError::Usage("`reproduce` writes CSV only".into()));
    }
    let cache = Cache::from_cli(cli);
    let configs = match args.table {
        Table::Table1 => vec![
            config(3, 3, TRI_TRIS, Variant::Standard)?,
            config(3, 4, TRI_TRIS, Variant::Standard)?,
            config(3, 5, TRI_TRIS, Variant::Standard)?,
        ],
        Table::Table2 => vec![
            config(3, 3, TRI_TRIS, Variant::Periodic)?,
            config(3, 4, TRI_TRIS, Variant::Periodic)?,
            config(3, 4, REDUCED, Variant::Periodic)?,
        ],
    };
    let mut out = String::new();
    match args.table {
        Table::Table1 => out.push_str("board,states,semigroup,height\n"),
        Table::Table2 => out.push_str("board,pieces,states,semigroup,groups\n"),
    }
    for cfg in &configs {
        let r = run_row(&cache, cfg, args, args.table)?;
        let _ = match args.table {
            Table::Table1 => writeln!(out, "{},{},{},{}", r.board, r.states, r.semigroup, r.height),
            Table::Table2 => writeln!(
                out,
                "{},{},{},{},\"{}\"",
                r.board, r.pieces, r.states, r.semigroup, r.groups
            ),
        };
    }
    Ok(out)
}
