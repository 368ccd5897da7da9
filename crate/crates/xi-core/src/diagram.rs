//! Planar diagrams of α together with companion curves.
//!
//! A component with `n` crossing passages is cut into `n` segments. Passage
//! `k` sits at the head of segment `k`, so segment `k` enters it and segment
//! `k + 1 (mod n)` leaves it. A component without crossings is one segment.
//!
//! Signs follow the right-handed rule: a crossing is positive when
//! over × under > 0. Around a positive crossing the counterclockwise order of
//! arc ends is (under in, over out, under out, over in); around a negative one
//! it is (under in, over in, under out, over out).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Index of α after validation; α is always stored first.
pub const ALPHA: usize = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Alpha,
    Companion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpec {
    pub name: String,
    pub role: Role,
    pub segments: usize,
}

/// One end of a segment: (component name, segment index).
pub type ArcEnd = (String, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandSpec {
    pub component: String,
    pub incoming: usize,
    pub outgoing: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingSpec {
    pub id: String,
    pub sign: i8,
    pub over: StrandSpec,
    pub under: StrandSpec,
    /// Counterclockwise arc ends starting anywhere; checked against `sign` when present.
    pub rotation: Option<Vec<ArcEnd>>,
}

/// Unvalidated scene, as read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneSpec {
    pub p: u32,
    pub components: Vec<ComponentSpec>,
    pub crossings: Vec<CrossingSpec>,
    /// The companion whose crossings over α renumber α's arcs.
    pub g: Option<String>,
    /// Segment lying on each component's zeroth arc; defaults to 0.
    pub zeroth_arcs: BTreeMap<String, usize>,
    /// One color per arc of α in the numbering of [`Scene::gauss_lists`]; may be empty.
    pub coloring: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strand {
    pub component: usize,
    pub incoming: usize,
    pub outgoing: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub id: String,
    pub sign: i8,
    pub over: Strand,
    pub under: Strand,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub name: String,
    pub role: Role,
    pub segments: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    p: u32,
    components: Vec<Component>,
    crossings: Vec<Crossing>,
    g: Option<usize>,
    zeroth: Vec<usize>,
    coloring: Vec<u8>,
    passages: Vec<Vec<Passage>>,
    arc_of_segment: Vec<Vec<usize>>,
    arc_heads: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingType {
    /// Under α.
    K,
    /// Under the renumbering companion g.
    P,
}

/// Crossing lists of one component: over-arc, sign and type at the head of each arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussLists {
    pub f: Vec<usize>,
    pub eps: Vec<i8>,
    pub t: Vec<CrossingType>,
    /// Colors, present for α only.
    pub c: Option<Vec<u8>>,
}

impl Scene {
    pub fn new(spec: SceneSpec) -> Result<Scene, Error> {
        let alphas: Vec<usize> = spec
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.role == Role::Alpha)
            .map(|(i, _)| i)
            .collect();
        if alphas.len() != 1 {
            return Err(Error::Schema(format!(
                "expected exactly one alpha component, found {}",
                alphas.len()
            )));
        }
        let mut order = alphas.clone();
        order.extend((0..spec.components.len()).filter(|i| *i != alphas[0]));
        let components: Vec<Component> = order
            .iter()
            .map(|&i| {
                let c = &spec.components[i];
                Component {
                    name: c.name.clone(),
                    role: c.role,
                    segments: c.segments,
                }
            })
            .collect();
        for (i, c) in components.iter().enumerate() {
            if components[..i].iter().any(|d| d.name == c.name) {
                return Err(Error::Schema(format!(
                    "duplicate component name {}",
                    c.name
                )));
            }
            if c.segments == 0 {
                return Err(Error::OpenComponent(c.name.clone()));
            }
        }
        let index = |name: &str| -> Result<usize, Error> {
            components
                .iter()
                .position(|c| c.name == name)
                .ok_or_else(|| Error::UnknownComponent(name.to_string()))
        };
        let mut crossings = Vec::with_capacity(spec.crossings.len());
        for x in &spec.crossings {
            if x.sign != 1 && x.sign != -1 {
                return Err(Error::Schema(format!(
                    "crossing {}: sign must be +1 or -1",
                    x.id
                )));
            }
            let strand = |s: &StrandSpec| -> Result<Strand, Error> {
                let component = index(&s.component)?;
                let n = components[component].segments;
                if s.incoming >= n || s.outgoing >= n {
                    return Err(Error::Schema(format!(
                        "crossing {}: segment out of range on {}",
                        x.id, s.component
                    )));
                }
                Ok(Strand {
                    component,
                    incoming: s.incoming,
                    outgoing: s.outgoing,
                })
            };
            crossings.push(Crossing {
                id: x.id.clone(),
                sign: x.sign,
                over: strand(&x.over)?,
                under: strand(&x.under)?,
            });
        }
        for (i, x) in crossings.iter().enumerate() {
            if crossings[..i].iter().any(|y| y.id == x.id) {
                return Err(Error::Schema(format!("duplicate crossing id {}", x.id)));
            }
        }

        // closed components: every segment enters and leaves exactly one passage
        let mut passages: Vec<Vec<Option<Passage>>> =
            components.iter().map(|c| vec![None; c.segments]).collect();
        let mut outs: Vec<Vec<u8>> = components.iter().map(|c| vec![0u8; c.segments]).collect();
        let mut counts = vec![0usize; components.len()];
        for (ci, x) in crossings.iter().enumerate() {
            for (s, over) in [(x.over, true), (x.under, false)] {
                let name = &components[s.component].name;
                let n = components[s.component].segments;
                counts[s.component] += 1;
                if s.outgoing != (s.incoming + 1) % n {
                    return Err(Error::OpenComponent(name.clone()));
                }
                let slot = &mut passages[s.component][s.incoming];
                if slot.is_some() {
                    return Err(Error::OpenComponent(name.clone()));
                }
                *slot = Some(Passage { crossing: ci, over });
                outs[s.component][s.outgoing] += 1;
                if outs[s.component][s.outgoing] > 1 {
                    return Err(Error::OpenComponent(name.clone()));
                }
            }
        }
        let mut passages_done = Vec::with_capacity(components.len());
        for (k, c) in components.iter().enumerate() {
            if counts[k] == 0 {
                if c.segments != 1 {
                    return Err(Error::OpenComponent(c.name.clone()));
                }
                passages_done.push(Vec::new());
                continue;
            }
            if counts[k] != c.segments {
                return Err(Error::OpenComponent(c.name.clone()));
            }
            let ps: Option<Vec<Passage>> = passages[k].iter().copied().collect();
            passages_done.push(ps.ok_or_else(|| Error::OpenComponent(c.name.clone()))?);
        }

        for (x, xs) in crossings.iter().zip(&spec.crossings) {
            if let Some(rot) = &xs.rotation {
                let expected = rotation_of(x, &components);
                if !is_cyclic_shift(rot, &expected) {
                    return Err(Error::Schema(format!(
                        "crossing {}: rotation disagrees with sign",
                        x.id
                    )));
                }
            }
        }

        let g = match &spec.g {
            Some(name) => {
                let gi = index(name)?;
                if gi == ALPHA {
                    return Err(Error::Schema("g must be a companion".to_string()));
                }
                Some(gi)
            }
            None => (1..components.len()).next(),
        };
        let mut zeroth = vec![0usize; components.len()];
        for (name, &seg) in &spec.zeroth_arcs {
            let i = index(name)?;
            if seg >= components[i].segments {
                return Err(Error::Schema(format!("zeroth arc of {name} out of range")));
            }
            zeroth[i] = seg;
        }

        let mut scene = Scene {
            p: spec.p,
            components,
            crossings,
            g,
            zeroth,
            coloring: Vec::new(),
            passages: passages_done,
            arc_of_segment: Vec::new(),
            arc_heads: Vec::new(),
        };
        let bad = scene.planarity_failures();
        if bad > 0 {
            return Err(Error::NotPlanar { pieces: bad });
        }
        scene.number_arcs();
        scene.set_coloring(spec.coloring)?;
        Ok(scene)
    }

    /// Replace the coloring (one entry per α arc, or empty for none).
    pub fn set_coloring(&mut self, coloring: Vec<u8>) -> Result<(), Error> {
        let m = self.arc_count(ALPHA);
        if !coloring.is_empty() {
            if coloring.len() < m {
                return Err(Error::MissingColor(coloring.len()));
            }
            if coloring.len() > m {
                return Err(Error::Schema(format!(
                    "coloring has {} entries but alpha has {m} arcs",
                    coloring.len()
                )));
            }
            if let Some(&c) = coloring.iter().find(|&&c| c == 0 || u32::from(c) > self.p) {
                return Err(Error::ColorOutOfRange(u32::from(c)));
            }
        }
        self.coloring = coloring;
        Ok(())
    }

    fn number_arcs(&mut self) {
        let alpha = ALPHA;
        let g = self.g;
        self.arc_of_segment.clear();
        self.arc_heads.clear();
        for c in 0..self.components.len() {
            let n = self.components[c].segments;
            let z = self.zeroth[c];
            let mut arc = vec![0usize; n];
            let mut heads = Vec::new();
            let mut cur = 0usize;
            for step in 0..n {
                let s = (z + step) % n;
                arc[s] = cur;
                if let Some(pa) = self.passages[c].get(s) {
                    if !pa.over {
                        let oc = self.crossings[pa.crossing].over.component;
                        if oc == alpha || Some(oc) == g {
                            heads.push(s);
                            cur += 1;
                        }
                    }
                }
            }
            if !heads.is_empty() {
                // the segments after the last break close up with arc 0
                for step in 0..n {
                    let s = (z + step) % n;
                    if arc[s] == heads.len() {
                        arc[s] = 0;
                    }
                }
            }
            self.arc_of_segment.push(arc);
            self.arc_heads.push(heads);
        }
    }

    /// Number of pieces of the projection whose rotation system violates V − E + F = 2.
    fn planarity_failures(&self) -> usize {
        // darts: (component, segment, head?)
        let mut dart_id: BTreeMap<(usize, usize, bool), usize> = BTreeMap::new();
        for (c, comp) in self.components.iter().enumerate() {
            if self.passages[c].is_empty() {
                continue;
            }
            for s in 0..comp.segments {
                for head in [false, true] {
                    let id = dart_id.len();
                    dart_id.insert((c, s, head), id);
                }
            }
        }
        let nd = dart_id.len();
        let mut next_ccw = vec![usize::MAX; nd];
        let mut at_crossing = vec![0usize; nd];
        for (xi, x) in self.crossings.iter().enumerate() {
            let ui = dart_id[&(x.under.component, x.under.incoming, true)];
            let uo = dart_id[&(x.under.component, x.under.outgoing, false)];
            let oi = dart_id[&(x.over.component, x.over.incoming, true)];
            let oo = dart_id[&(x.over.component, x.over.outgoing, false)];
            let ring = if x.sign > 0 {
                [ui, oo, uo, oi]
            } else {
                [ui, oi, uo, oo]
            };
            for k in 0..4 {
                next_ccw[ring[k]] = ring[(k + 1) % 4];
                at_crossing[ring[k]] = xi;
            }
        }
        let opposite = |d: usize| d ^ 1;
        // pieces via union-find on crossings
        let nx = self.crossings.len();
        let mut parent: Vec<usize> = (0..nx).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for d in (0..nd).step_by(2) {
            let a = find(&mut parent, at_crossing[d]);
            let b = find(&mut parent, at_crossing[d + 1]);
            parent[a] = b;
        }
        let mut faces = vec![0i64; nx];
        let mut seen = vec![false; nd];
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let piece = find(&mut parent, at_crossing[start]);
            faces[piece] += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = next_ccw[opposite(d)];
            }
        }
        let mut verts = vec![0i64; nx];
        for x in 0..nx {
            let r = find(&mut parent, x);
            verts[r] += 1;
        }
        (0..nx)
            .filter(|&r| verts[r] > 0 && verts[r] - 2 * verts[r] + faces[r] != 2)
            .count()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_name(&self, i: usize) -> String {
        self.crossings[i].id.clone()
    }

    pub fn component_index(&self, name: &str) -> Result<usize, Error> {
        self.components
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownComponent(name.to_string()))
    }

    pub fn name(&self, c: usize) -> &str {
        &self.components[c].name
    }

    pub fn g(&self) -> Option<usize> {
        self.g
    }

    pub fn zeroth_segment(&self, c: usize) -> usize {
        self.zeroth[c]
    }

    pub fn coloring(&self) -> &[u8] {
        &self.coloring
    }

    pub fn is_colored(&self) -> bool {
        !self.coloring.is_empty()
    }

    pub fn passages(&self, c: usize) -> &[Passage] {
        &self.passages[c]
    }

    pub fn segments(&self, c: usize) -> usize {
        self.components[c].segments
    }

    pub fn arc_of_segment(&self, c: usize, s: usize) -> usize {
        self.arc_of_segment[c][s]
    }

    pub fn arc_count(&self, c: usize) -> usize {
        self.arc_heads[c].len().max(1)
    }

    /// Color of the α arc through segment `s`.
    pub fn color_of_segment(&self, s: usize) -> u8 {
        self.coloring[self.arc_of_segment[ALPHA][s]]
    }

    pub fn gauss_lists(&self, name: &str) -> Result<GaussLists, Error> {
        let c = self.component_index(name)?;
        let mut lists = GaussLists {
            f: Vec::new(),
            eps: Vec::new(),
            t: Vec::new(),
            c: None,
        };
        for &s in &self.arc_heads[c] {
            let x = &self.crossings[self.passages[c][s].crossing];
            lists
                .f
                .push(self.arc_of_segment[x.over.component][x.over.incoming]);
            lists.eps.push(x.sign);
            lists.t.push(if x.over.component == ALPHA {
                CrossingType::K
            } else {
                CrossingType::P
            });
        }
        if c == ALPHA && !self.arc_heads[c].is_empty() {
            lists.c = Some(self.coloring.clone());
        }
        Ok(lists)
    }

    /// Classical linking number: half the signed count of mutual crossings.
    pub fn s3_linking(&self, g: &str, h: &str) -> Result<i64, Error> {
        let gi = self.component_index(g)?;
        let hi = self.component_index(h)?;
        if gi == hi {
            return Err(Error::SharedArc(g.to_string()));
        }
        let total: i64 = self
            .crossings
            .iter()
            .filter(|x| {
                (x.over.component == gi && x.under.component == hi)
                    || (x.over.component == hi && x.under.component == gi)
            })
            .map(|x| i64::from(x.sign))
            .sum();
        debug_assert!(total % 2 == 0);
        Ok(total / 2)
    }

    /// Inverse of [`Scene::new`].
    pub fn to_spec(&self) -> SceneSpec {
        let name = |c: usize| self.components[c].name.clone();
        SceneSpec {
            p: self.p,
            components: self
                .components
                .iter()
                .map(|c| ComponentSpec {
                    name: c.name.clone(),
                    role: c.role,
                    segments: c.segments,
                })
                .collect(),
            crossings: self
                .crossings
                .iter()
                .map(|x| CrossingSpec {
                    id: x.id.clone(),
                    sign: x.sign,
                    over: StrandSpec {
                        component: name(x.over.component),
                        incoming: x.over.incoming,
                        outgoing: x.over.outgoing,
                    },
                    under: StrandSpec {
                        component: name(x.under.component),
                        incoming: x.under.incoming,
                        outgoing: x.under.outgoing,
                    },
                    rotation: Some(rotation_of(x, &self.components)),
                })
                .collect(),
            g: self.g.map(name),
            zeroth_arcs: (0..self.components.len())
                .map(|c| (name(c), self.zeroth[c]))
                .collect(),
            coloring: self.coloring.clone(),
        }
    }
}

fn rotation_of(x: &Crossing, components: &[Component]) -> Vec<ArcEnd> {
    let end = |s: &Strand, seg: usize| (components[s.component].name.clone(), seg);
    let ui = end(&x.under, x.under.incoming);
    let uo = end(&x.under, x.under.outgoing);
    let oi = end(&x.over, x.over.incoming);
    let oo = end(&x.over, x.over.outgoing);
    if x.sign > 0 {
        vec![ui, oo, uo, oi]
    } else {
        vec![ui, oi, uo, oo]
    }
}

fn is_cyclic_shift(a: &[ArcEnd], b: &[ArcEnd]) -> bool {
    a.len() == b.len() && (0..b.len()).any(|k| (0..b.len()).all(|i| a[i] == b[(i + k) % b.len()]))
}
