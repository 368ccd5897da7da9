use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use xi_core::coloring::check_fox_coloring;
use xi_core::cover::CoverComplex;
use xi_core::linking::linking_block;

use crate::error::AppError;
use crate::lists::{all_lists, component_lists};
use crate::problem::{load, load_scene, ProviderChoice};
use crate::report::{human_report, json_report};
use crate::table::rational_json;

#[derive(Debug, Parser)]
#[command(
    name = "xi3",
    version,
    about = "Ribbon obstruction Xi_3 for Fox 3-colored knots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Scene or problem file.
    #[arg(long, short)]
    pub input: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    pub p: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a scene: planarity, coloring, cover homology.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Print the crossing lists of one or all components.
    Lists {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        component: Option<String>,
    },
    /// Linking block lk(g^a, h^b) in the cover.
    Block {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Evaluate Xi for a scene or problem file.
    Xi {
        #[command(flatten)]
        common: Common,
        /// `computed` or `table:PATH`.
        #[arg(long, default_value = "computed")]
        provider: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Validate { common }
            | Command::Lists { common, .. }
            | Command::Block { common, .. }
            | Command::Xi { common, .. } => common,
        }
    }
}

#[derive(Debug, Serialize)]
struct Validation {
    components: Vec<String>,
    crossings: usize,
    colored: bool,
    coloring_issues: Vec<String>,
    cover: Option<CoverSummary>,
    ok: bool,
}

#[derive(Debug, Serialize)]
struct CoverSummary {
    g: String,
    cells: [usize; 4],
    euler_characteristic: i64,
    betti: [usize; 4],
    h1: Vec<String>,
    rational_homology_sphere: bool,
}

fn validate(path: &Path) -> Result<String, AppError> {
    let (scene, _) = load_scene(path)?;
    let issues: Vec<String> = if scene.is_colored() {
        check_fox_coloring(&scene)
            .iter()
            .map(ToString::to_string)
            .collect()
    } else {
        Vec::new()
    };
    let cover = match scene.g() {
        Some(g) if issues.is_empty() && scene.p() == 3 => {
            let name = scene.name(g).to_string();
            let cx = CoverComplex::build(&scene, &name)?;
            let h = cx.homology();
            Some(CoverSummary {
                g: name,
                cells: cx.cell_counts(),
                euler_characteristic: cx.euler_characteristic(),
                betti: h.betti,
                h1: h.h1_factors().iter().map(ToString::to_string).collect(),
                rational_homology_sphere: h.is_rational_sphere(),
            })
        }
        _ => None,
    };
    let v = Validation {
        components: scene.components().iter().map(|c| c.name.clone()).collect(),
        crossings: scene.crossings().len(),
        colored: scene.is_colored(),
        ok: issues.is_empty(),
        coloring_issues: issues,
        cover,
    };
    Ok(serde_json::to_string_pretty(&v).expect("validation serializes") + "\n")
}

fn block(path: &Path, g: &str, h: &str) -> Result<String, AppError> {
    let (scene, _) = load_scene(path)?;
    let b = linking_block(&scene, g, h)?;
    let rows: Vec<Vec<Value>> = b
        .to_rows()
        .iter()
        .map(|r| r.iter().map(rational_json).collect())
        .collect();
    let out = serde_json::json!({"g": g, "h": h, "block": rows});
    Ok(serde_json::to_string_pretty(&out).expect("block serializes") + "\n")
}

pub fn parse_provider(s: &str) -> Result<ProviderChoice<'_>, AppError> {
    match s {
        "computed" => Ok(ProviderChoice::Computed),
        "table" => Err(AppError::Usage(
            "provider table needs a file: table:PATH".into(),
        )),
        _ => match s.strip_prefix("table:") {
            Some(p) if !p.is_empty() => Ok(ProviderChoice::Table(Path::new(p))),
            _ => Err(AppError::Usage(format!("unknown provider {s:?}"))),
        },
    }
}

/// Execute one command and return the text it produces.
pub fn execute(cmd: &Command) -> Result<String, AppError> {
    let common = cmd.common();
    if common.p != 3 && !matches!(cmd, Command::Lists { .. }) {
        return Err(xi_core::Error::Unsupported(format!(
            "p = {}; only p = 3 is implemented",
            common.p
        ))
        .into());
    }
    match cmd {
        Command::Validate { common } => validate(&common.input),
        Command::Lists { common, component } => {
            let (scene, _) = load_scene(&common.input)?;
            match component {
                Some(c) => component_lists(&scene, c),
                None => all_lists(&scene),
            }
        }
        Command::Block { common, g, h } => block(&common.input, g, h),
        Command::Xi {
            common,
            provider,
            format,
        } => {
            let choice = parse_provider(provider)?;
            let outcome = load(&common.input)?.run(choice)?;
            Ok(match format {
                Format::Human => human_report(&outcome),
                Format::Json => {
                    serde_json::to_string_pretty(&json_report(&outcome)).expect("report serializes")
                        + "\n"
                }
            })
        }
    }
}

/// Run and write output; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = execute(&cli.command).and_then(|text| match &cli.command.common().output {
        Some(path) => fs::write(path, text).map_err(|source| AppError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!(
                "{}",
                serde_json::to_string(&e.record()).expect("error record serializes")
            );
            1
        }
    }
}
