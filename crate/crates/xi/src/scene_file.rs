//! JSON scene files.
//!
//! ```json
//! {
//!   "name": "trefoil",
//!   "p": 3,
//!   "components": [{"name": "alpha", "role": "alpha", "segments": 6}],
//!   "g": null,
//!   "zeroth_arcs": {"alpha": 0},
//!   "coloring": [1, 2, 3],
//!   "crossings": [
//!     {"id": "x0", "sign": -1,
//!      "over": {"component": "alpha", "in": 0, "out": 1},
//!      "under": {"component": "alpha", "in": 3, "out": 4},
//!      "rotation": ["alpha:3", "alpha:0", "alpha:4", "alpha:1"]}
//!   ]
//! }
//! ```
//!
//! Segment `k` of a component enters its `k`-th crossing passage, so a
//! strand's `out` is always `in + 1` modulo the segment count. `rotation`
//! lists the four segment ends counterclockwise and may be omitted.
//! `coloring` has one entry per arc of α, numbered as in the crossing lists;
//! an empty list leaves the scene uncolored. An optional `problem` object
//! carries the inputs of a Ξ computation (see [`crate::problem`]).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use xi_core::diagram::{ComponentSpec, CrossingSpec, Role, Scene, SceneSpec, StrandSpec};

use crate::error::AppError;
use crate::problem::ProblemSection;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default = "default_p")]
    pub p: u32,
    pub components: Vec<ComponentDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default)]
    pub zeroth_arcs: BTreeMap<String, usize>,
    #[serde(default)]
    pub coloring: Vec<u8>,
    #[serde(default)]
    pub crossings: Vec<CrossingDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub problem: Option<ProblemSection>,
}

fn default_p() -> u32 {
    3
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoleDto {
    Alpha,
    Companion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDto {
    pub name: String,
    pub role: RoleDto,
    pub segments: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrandDto {
    pub component: String,
    #[serde(rename = "in")]
    pub incoming: usize,
    #[serde(rename = "out")]
    pub outgoing: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingDto {
    pub id: String,
    pub sign: i8,
    pub over: StrandDto,
    pub under: StrandDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<String>>,
}

impl SceneFile {
    pub fn to_spec(&self) -> Result<SceneSpec, AppError> {
        let strand = |s: &StrandDto| StrandSpec {
            component: s.component.clone(),
            incoming: s.incoming,
            outgoing: s.outgoing,
        };
        let mut crossings = Vec::with_capacity(self.crossings.len());
        for x in &self.crossings {
            let rotation = match &x.rotation {
                None => None,
                Some(ends) => {
                    if ends.len() != 4 {
                        return Err(AppError::schema(format!(
                            "crossing {}: rotation needs four entries",
                            x.id
                        )));
                    }
                    Some(
                        ends.iter()
                            .map(|e| parse_end(e))
                            .collect::<Result<Vec<_>, _>>()?,
                    )
                }
            };
            crossings.push(CrossingSpec {
                id: x.id.clone(),
                sign: x.sign,
                over: strand(&x.over),
                under: strand(&x.under),
                rotation,
            });
        }
        Ok(SceneSpec {
            p: self.p,
            components: self
                .components
                .iter()
                .map(|c| ComponentSpec {
                    name: c.name.clone(),
                    role: match c.role {
                        RoleDto::Alpha => Role::Alpha,
                        RoleDto::Companion => Role::Companion,
                    },
                    segments: c.segments,
                })
                .collect(),
            crossings,
            g: self.g.clone(),
            zeroth_arcs: self.zeroth_arcs.clone(),
            coloring: self.coloring.clone(),
        })
    }

    pub fn from_scene(scene: &Scene, name: Option<String>) -> SceneFile {
        let spec = scene.to_spec();
        let strand = |s: &StrandSpec| StrandDto {
            component: s.component.clone(),
            incoming: s.incoming,
            outgoing: s.outgoing,
        };
        SceneFile {
            name,
            p: spec.p,
            components: spec
                .components
                .iter()
                .map(|c| ComponentDto {
                    name: c.name.clone(),
                    role: match c.role {
                        Role::Alpha => RoleDto::Alpha,
                        Role::Companion => RoleDto::Companion,
                    },
                    segments: c.segments,
                })
                .collect(),
            g: spec.g.clone(),
            zeroth_arcs: spec.zeroth_arcs.clone(),
            coloring: spec.coloring.clone(),
            crossings: spec
                .crossings
                .iter()
                .map(|x| CrossingDto {
                    id: x.id.clone(),
                    sign: x.sign,
                    over: strand(&x.over),
                    under: strand(&x.under),
                    rotation: x
                        .rotation
                        .as_ref()
                        .map(|r| r.iter().map(|(c, s)| format!("{c}:{s}")).collect()),
                })
                .collect(),
            problem: None,
        }
    }
}

fn parse_end(s: &str) -> Result<(String, usize), AppError> {
    let (c, seg) = s.rsplit_once(':').ok_or_else(|| {
        AppError::schema(format!("rotation entry {s:?} is not component:segment"))
    })?;
    let seg = seg
        .parse()
        .map_err(|_| AppError::schema(format!("rotation entry {s:?} has a bad segment index")))?;
    Ok((c.to_string(), seg))
}

/// Parse and validate a scene; the problem section, if any, is returned alongside.
pub fn parse_scene(text: &str) -> Result<(Scene, SceneFile), AppError> {
    let file: SceneFile = serde_json::from_str(text).map_err(AppError::Json)?;
    let scene = Scene::new(file.to_spec()?)?;
    Ok((scene, file))
}

pub fn serialize_scene(scene: &Scene) -> String {
    serde_json::to_string_pretty(&SceneFile::from_scene(scene, None))
        .expect("scene files always serialize")
}
