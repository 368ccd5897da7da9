//! Crossing lists as text.
//!
//! α gets four labelled lines, `f=(...)`, `eps=(...)`, `t=(...)` and `c=(...)`.
//! Any other component gets the three bare lines of over-arcs, signs and types.

use xi_core::diagram::{CrossingType, GaussLists, Scene, ALPHA};

use crate::error::AppError;

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    let parts: Vec<String> = items.iter().map(f).collect();
    format!("({})", parts.join(","))
}

fn sign(e: &i8) -> String {
    if *e < 0 {
        "-".into()
    } else {
        "+".into()
    }
}

fn kind(t: &CrossingType) -> String {
    match t {
        CrossingType::K => "k".into(),
        CrossingType::P => "p".into(),
    }
}

pub fn format_lists(lists: &GaussLists, is_alpha: bool) -> String {
    let f = join(&lists.f, |v| v.to_string());
    let e = join(&lists.eps, sign);
    let t = join(&lists.t, kind);
    if is_alpha {
        let c = join(lists.c.as_deref().unwrap_or(&[]), |v| v.to_string());
        format!("f={f}\neps={e}\nt={t}\nc={c}\n")
    } else {
        format!("{f}\n{e}\n{t}\n")
    }
}

pub fn component_lists(scene: &Scene, name: &str) -> Result<String, AppError> {
    let lists = scene.gauss_lists(name)?;
    let is_alpha = scene.component_index(name)? == ALPHA;
    Ok(format_lists(&lists, is_alpha))
}

/// Lists for every component, each block headed by the component name.
pub fn all_lists(scene: &Scene) -> Result<String, AppError> {
    let mut out = String::new();
    for c in scene.components() {
        out.push_str(&format!("# {}\n", c.name));
        out.push_str(&component_lists(scene, &c.name)?);
    }
    Ok(out)
}
