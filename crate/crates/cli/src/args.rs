use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tetris_sgp::engine::{Catalog, GameConfig, OverflowPolicy, Variant};
use tetris_sgp::holonomy::{HeightConvention, TileMode, DEFAULT_NODE_CAP, DEFAULT_SEARCH_BUDGET};

use crate::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "tetris-sgp", version, about = "Tetris as a transformation semigroup")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cache directory; defaults to $TETRIS_SGP_CACHE_DIR, then the user cache dir.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate reachable states and print |X| and the generator count.
    Enumerate(GameArgs),
    /// Print every reachable state as an ASCII board.
    States(GameArgs),
    /// Enumerate the semigroup and print |S|.
    Semigroup(SemigroupArgs),
    /// Decide aperiodicity element-wise or through holonomy.
    Aperiodic(AperiodicArgs),
    /// Holonomy decomposition report.
    Holonomy(HolonomyArgs),
    /// Parse and evaluate event words.
    EvalWord(EvalWordArgs),
    /// Regenerate the Tri-tris tables as CSV.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GameArgs {
    /// Board as WIDTHxHEIGHT.
    #[arg(long, default_value = "3x3", value_parser = parse_board)]
    pub board: (u32, u32),
    #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
    pub variant: VariantArg,
    /// Comma-separated piece labels.
    #[arg(long, default_value = "LS,RS,LUS,RUS,V", value_delimiter = ',')]
    pub pieces: Vec<String>,
    /// TOML piece catalog replacing the built-in one.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OverflowArg::PreClear)]
    pub overflow: OverflowArg,
    /// Maximum number of states.
    #[arg(long, default_value_t = tetris_sgp::engine::DEFAULT_STATE_CAP, value_parser = positive)]
    pub state_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Standard,
    Periodic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OverflowArg {
    PreClear,
    PostClear,
}

#[derive(Debug, Clone, Args)]
pub struct SemigroupArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// Maximum number of semigroup elements.
    #[arg(long, default_value_t = tetris_sgp::tsgrp::DEFAULT_ELEMENT_CAP, value_parser = positive)]
    pub element_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Element,
    Holonomy,
}

#[derive(Debug, Clone, Args)]
pub struct AperiodicArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long, value_enum, default_value_t = Method::Holonomy)]
    pub method: Method,
    #[arg(long, default_value_t = tetris_sgp::tsgrp::DEFAULT_ELEMENT_CAP, value_parser = positive)]
    pub element_cap: usize,
    #[command(flatten)]
    pub holonomy: HolonomyKnobs,
}

#[derive(Debug, Clone, Args)]
pub struct HolonomyKnobs {
    /// Search-state budget per holonomy component.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET, value_parser = positive)]
    pub budget: usize,
    /// Maximum number of skeleton nodes.
    #[arg(long, default_value_t = DEFAULT_NODE_CAP, value_parser = positive)]
    pub node_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeightArg {
    SingletonsAtZero,
    LongestChain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TileArg {
    Maximal,
    Strict,
}

#[derive(Debug, Clone, Args)]
pub struct HolonomyArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[command(flatten)]
    pub knobs: HolonomyKnobs,
    #[arg(long, value_enum, default_value_t = HeightArg::SingletonsAtZero)]
    pub height_convention: HeightArg,
    #[arg(long, value_enum, default_value_t = TileArg::Maximal)]
    pub tile_mode: TileArg,
    /// Only the nontrivial components: no heights, no inclusion covers.
    #[arg(long)]
    pub quick: bool,
    /// List trivial components too.
    #[arg(long)]
    pub all: bool,
    /// Write the class DAG in Graphviz format here.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EvalWordArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// A word such as "V_0 LS_1 V_2".
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub word: Option<String>,
    /// A word file: one word per line, optional `name =`, `#` comments.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Comma-separated state indices the words should permute.
    #[arg(long, value_delimiter = ',')]
    pub on: Vec<u32>,
    /// Report the action on the tiles of every nontrivial holonomy component.
    #[arg(long)]
    pub components: bool,
    #[command(flatten)]
    pub knobs: HolonomyKnobs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Table1,
    Table2,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub table: Table,
    /// Memory allowed for semigroup enumeration per row; rows needing more print "-".
    #[arg(long, default_value_t = 512, value_parser = positive)]
    pub memory_mb: usize,
    /// Skeletons larger than this skip the height computation and print "-".
    #[arg(long, default_value_t = 50_000, value_parser = positive)]
    pub cover_cap: usize,
    #[command(flatten)]
    pub knobs: HolonomyKnobs,
}

fn parse_board(s: &str) -> Result<(u32, u32), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WIDTHxHEIGHT, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(w)?, num(h)?))
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl GameArgs {
    pub fn config(&self) -> CliResult<GameConfig> {
        let catalog = match &self.catalog {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                Catalog::from_toml(&text)?
            }
            None => builtin_catalog(),
        };
        let labels: Vec<&str> = self.pieces.iter().map(|s| s.trim()).collect();
        let pieces = catalog.select(&labels)?;
        let (w, h) = self.board;
        let variant = match self.variant {
            VariantArg::Standard => Variant::Standard,
            VariantArg::Periodic => Variant::Periodic,
        };
        let overflow = match self.overflow {
            OverflowArg::PreClear => OverflowPolicy::PreClear,
            OverflowArg::PostClear => OverflowPolicy::PostClear,
        };
        Ok(GameConfig::new(w, h, pieces)?.with_variant(variant).with_overflow(overflow))
    }
}

/// Triominoes and tetrominoes together.
pub fn builtin_catalog() -> Catalog {
    let mut pieces = Catalog::triominoes().pieces().to_vec();
    pieces.extend(Catalog::tetrominoes().pieces().iter().cloned());
    Catalog::new(pieces).expect("built-in labels are distinct")
}

impl HolonomyArgs {
    pub fn convention(&self) -> HeightConvention {
        match self.height_convention {
            HeightArg::SingletonsAtZero => HeightConvention::SingletonsAtZero,
            HeightArg::LongestChain => HeightConvention::LongestChain,
        }
    }

    pub fn tile_mode(&self) -> TileMode {
        match self.tile_mode {
            TileArg::Maximal => TileMode::Maximal,
            TileArg::Strict => TileMode::Strict,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boards() {
        assert_eq!(parse_board("3x4"), Ok((3, 4)));
        assert_eq!(parse_board("10X20"), Ok((10, 20)));
        assert!(parse_board("3*4").is_err());
        assert!(parse_board("ax4").is_err());
        assert!(positive("0").is_err());
    }

    #[test]
    fn catalog_has_both_families() {
        let c = builtin_catalog();
        assert!(c.get("LS").is_ok() && c.get("T").is_ok());
    }
}
