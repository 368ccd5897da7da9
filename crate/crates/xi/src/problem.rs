//! Inputs of a Ξ computation and their assembly.
//!
//! A problem is either the `problem` object of a scene file or a standalone
//! JSON file of the same shape with an optional `scene` path (relative to the
//! problem file):
//!
//! ```json
//! {
//!   "seifert": {"matrix": [[-1, 1], [0, 2]], "basis": ["a", "b"]},
//!   "beta": {"name": "beta", "vector": [1, -1], "seifert_matrix": []},
//!   "omegas": [],
//!   "anchors": {"gamma_r": {"arcs": []}, "gamma_l": {"arcs": [0, 3, 2, 1, 10, 4]}},
//!   "blocks": [{"row": "beta", "col": "beta", "g": "beta", "h": "beta_r"}]
//! }
//! ```
//!
//! `seifert` takes either `matrix` (a Seifert matrix) or `symmetrized`.
//! Anchor paths are given by the α arcs they pass under (`arcs`, needs a
//! scene) or directly by the colors of those arcs (`colors`). `c0` defaults
//! to the color of α's arc 0. `h1` asserts the invariant factors of H₁ of the
//! cover when there is no scene to compute them from. Each entry of `blocks`
//! says which scene computes lk(rowᵃ, col^{b,+}): `g` plays the row curve and
//! `h` the positive push-off of the column curve.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use xi_core::coloring::{
    monodromy, monodromy_of_colors, AnchorPath, BasisInput, DihedralPermutation,
};
use xi_core::cover::CoverComplex;
use xi_core::diagram::Scene;
use xi_core::linking::{compute_blocks, BlockSource, TableProvider};
use xi_core::matrix::Matrix;
use xi_core::seifert::SeifertData;
use xi_core::xi::{compute_xi, XiInput, XiReport};
use xi_core::Int;

use crate::error::AppError;
use crate::scene_file::{parse_scene, SceneFile};
use crate::table::parse_table;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scene: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub seifert: SeifertDto,
    pub beta: BetaDto,
    #[serde(default)]
    pub omegas: Vec<OmegaDto>,
    pub anchors: AnchorsDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c0: Option<u8>,
    #[serde(default)]
    pub blocks: Vec<BlockDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrized: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BetaDto {
    pub name: String,
    pub vector: Vec<i64>,
    #[serde(default)]
    pub seifert_matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaDto {
    pub name: String,
    pub anchor: AnchorDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnchorsDto {
    pub gamma_r: AnchorDto,
    pub gamma_l: AnchorDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnchorDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDto {
    pub row: String,
    pub col: String,
    pub g: String,
    pub h: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scene: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProviderChoice<'a> {
    Computed,
    Table(&'a Path),
}

/// A scene file or a standalone problem file, read from disk.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub path: PathBuf,
    pub scene: Option<(Scene, SceneFile)>,
    pub problem: Option<ProblemSection>,
}

pub fn read_text(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|source| AppError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn load_scene(path: &Path) -> Result<(Scene, SceneFile), AppError> {
    parse_scene(&read_text(path)?)
}

pub fn load(path: &Path) -> Result<Loaded, AppError> {
    let text = read_text(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(AppError::Json)?;
    if value.get("components").is_some() {
        let (scene, file) = parse_scene(&text)?;
        let problem = file.problem.clone();
        return Ok(Loaded {
            path: path.to_path_buf(),
            scene: Some((scene, file)),
            problem,
        });
    }
    let problem: ProblemSection = serde_json::from_value(value).map_err(AppError::Json)?;
    let scene = match &problem.scene {
        Some(rel) => Some(load_scene(&base_dir(path).join(rel))?),
        None => None,
    };
    Ok(Loaded {
        path: path.to_path_buf(),
        scene,
        problem: Some(problem),
    })
}

fn int_matrix(rows: &[Vec<i64>]) -> Result<Matrix<i64>, AppError> {
    Ok(Matrix::from_rows(rows.to_vec())?)
}

fn anchor_monodromy(
    a: &AnchorDto,
    target: &str,
    scene: Option<&Scene>,
    p: u32,
) -> Result<DihedralPermutation, AppError> {
    match (&a.arcs, &a.colors) {
        (Some(arcs), None) => {
            let scene = scene.ok_or_else(|| {
                AppError::schema(format!(
                    "anchor path to {target} is given by arcs but there is no scene"
                ))
            })?;
            let path = AnchorPath {
                target: target.to_string(),
                arcs: arcs.clone(),
            };
            Ok(monodromy(&path, scene)?)
        }
        (None, Some(colors)) => Ok(monodromy_of_colors(colors, p)?),
        _ => Err(AppError::schema(format!(
            "anchor path to {target} needs exactly one of arcs or colors"
        ))),
    }
}

/// Where H₁ of the cover came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H1Source {
    Computed,
    Asserted,
    Unknown,
}

impl H1Source {
    pub fn as_str(&self) -> &'static str {
        match self {
            H1Source::Computed => "computed",
            H1Source::Asserted => "asserted",
            H1Source::Unknown => "unknown",
        }
    }
}

pub struct Outcome {
    pub report: XiReport,
    pub c0: u8,
    pub h1_source: H1Source,
    pub blocks: TableProvider,
    pub provider: String,
}

impl Loaded {
    pub fn problem(&self) -> Result<&ProblemSection, AppError> {
        self.problem
            .as_ref()
            .ok_or_else(|| AppError::schema("the input has no problem section"))
    }

    fn block_sources(&self, problem: &ProblemSection) -> Result<Vec<BlockSource>, AppError> {
        let mut out = Vec::new();
        for b in &problem.blocks {
            let scene = match &b.scene {
                Some(rel) => load_scene(&base_dir(&self.path).join(rel))?.0,
                None => self.scene.as_ref().map(|(s, _)| s.clone()).ok_or_else(|| {
                    AppError::schema(format!(
                        "block ({}, {}) has no scene to compute it from",
                        b.row, b.col
                    ))
                })?,
            };
            out.push(BlockSource {
                row: b.row.clone(),
                col: b.col.clone(),
                scene,
                g: b.g.clone(),
                h: b.h.clone(),
            });
        }
        Ok(out)
    }

    pub fn run(&self, provider: ProviderChoice<'_>) -> Result<Outcome, AppError> {
        let problem = self.problem()?;
        let scene = self.scene.as_ref().map(|(s, _)| s);
        let p = problem.p.or(scene.map(Scene::p)).unwrap_or(3);
        if let Some(s) = scene {
            if s.p() != p {
                return Err(AppError::schema(format!(
                    "problem has p = {p} but the scene has p = {}",
                    s.p()
                )));
            }
        }
        let seifert = match (&problem.seifert.matrix, &problem.seifert.symmetrized) {
            (Some(a), None) => {
                SeifertData::from_seifert_matrix(int_matrix(a)?, problem.seifert.basis.clone())?
            }
            (None, Some(l)) => {
                SeifertData::from_symmetrized(int_matrix(l)?, problem.seifert.basis.clone())?
            }
            _ => {
                return Err(AppError::schema(
                    "seifert needs exactly one of matrix or symmetrized",
                ))
            }
        };
        let beta_seifert = int_matrix(&problem.beta.seifert_matrix)?;

        let beta = &problem.beta.name;
        let mut omegas = Vec::new();
        for o in &problem.omegas {
            omegas.push((
                o.name.clone(),
                anchor_monodromy(&o.anchor, &o.name, scene, p)?,
            ));
        }
        let anchors = BasisInput {
            omegas,
            beta: beta.clone(),
            gamma_r: Some(anchor_monodromy(
                &problem.anchors.gamma_r,
                &format!("{beta}_r"),
                scene,
                p,
            )?),
            gamma_l: Some(anchor_monodromy(
                &problem.anchors.gamma_l,
                &format!("{beta}_l"),
                scene,
                p,
            )?),
        };
        let c0 = match (problem.c0, scene) {
            (Some(c), _) => c,
            (None, Some(s)) if s.is_colored() => s.coloring()[0],
            _ => {
                return Err(AppError::schema(
                    "c0 is required when there is no colored scene",
                ))
            }
        };

        let (blocks, provider_name) = match provider {
            ProviderChoice::Computed => (
                compute_blocks(&self.block_sources(problem)?)?,
                "computed".to_string(),
            ),
            ProviderChoice::Table(path) => (
                parse_table(&read_text(path)?)?,
                format!("table:{}", path.display()),
            ),
        };

        let (h1, h1_source) = match scene {
            Some(s) => {
                let g = problem
                    .blocks
                    .first()
                    .map(|b| b.g.clone())
                    .or_else(|| s.g().map(|g| s.name(g).to_string()))
                    .ok_or_else(|| AppError::schema("the scene has no companion curve"))?;
                let cx = CoverComplex::build(s, &g)?;
                (Some(cx.homology().h1_factors()), H1Source::Computed)
            }
            None => match &problem.h1 {
                Some(v) => (
                    Some(v.iter().map(|&x| Int::from(x)).collect()),
                    H1Source::Asserted,
                ),
                None => (None, H1Source::Unknown),
            },
        };

        let input = XiInput {
            p,
            seifert,
            beta: problem.beta.vector.clone(),
            beta_seifert,
            anchors,
            c0,
            h1,
            provider: &blocks,
        };
        let report = compute_xi(&input)?;
        Ok(Outcome {
            report,
            c0,
            h1_source,
            blocks,
            provider: provider_name,
        })
    }
}
