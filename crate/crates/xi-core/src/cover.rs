//! Cell structure on the 3-fold irregular dihedral cover of S³ branched along α.
//!
//! The base complex is the cone on L = α ∪ g. Below every edge of L hangs a
//! wall 2-cell; the walls cut S³ into a single 3-cell. Each wall has a top
//! edge on L, two vertical edges at its ends and a bottom running through
//! the cone point, so at every crossing of L there is a vertical edge `R`
//! from the crossing down to the cone point, and an extra short edge `S`
//! between the over and under strands. A component of L with no crossings
//! gets one marker vertex.
//!
//! Lifting: the 3-cell has three lifts e³₁, e³₂, e³₃. Crossing the wall under
//! an α edge colored by the transposition τ moves sheet a to τ(a). Every wall
//! lifts to three 2-cells `W(e, a)`, indexed by the sheet on its left. Over a
//! colored edge the two cells of a swapped pair meet along the branch edge
//! and together form the branched lift of the wall; the fixed sheet gives
//! the other lift. The top edge lifts once per τ-orbit.
//!
//! Only p = 3 is supported.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::diagram::{Scene, ALPHA};
use crate::error::Error;
use crate::snf::Smith;
use crate::Int;

/// A permutation of the sheets {1, 2, 3}; `perm[a - 1]` is the image of a.
pub type Perm = [u8; 3];

const ID: Perm = [1, 2, 3];

fn act(p: &Perm, a: u8) -> u8 {
    p[usize::from(a) - 1]
}

/// `first` then `second`.
fn then(first: &Perm, second: &Perm) -> Perm {
    [
        act(second, first[0]),
        act(second, first[1]),
        act(second, first[2]),
    ]
}

fn inverse(p: &Perm) -> Perm {
    let mut q = [0u8; 3];
    for a in 1..=3u8 {
        q[usize::from(act(p, a)) - 1] = a;
    }
    q
}

fn color_perm(color: u8) -> Perm {
    match color {
        1 => [1, 3, 2],
        2 => [3, 2, 1],
        3 => [2, 1, 3],
        _ => ID,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EventRole {
    Over,
    Under,
    Marker,
}

#[derive(Debug, Clone, Copy)]
struct Event {
    node: usize,
    role: EventRole,
}

#[derive(Debug, Clone)]
struct LComponent {
    events: Vec<Event>,
    /// Scene passage of each event; empty for a marker.
    passages: Vec<usize>,
    /// τ of edge i, which runs from event i to event i + 1.
    tau: Vec<Perm>,
}

#[derive(Debug, Clone, Copy, Default)]
struct NodeInfo {
    sign: i8,
    marker: bool,
    over_in: usize,
    over_out: usize,
    under_in: usize,
    under_out: usize,
}

/// Names of the cells, for dumps and tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell1 {
    /// Lift of an L edge for one τ-orbit, labelled by the orbit minimum.
    Top {
        edge: usize,
        sheet: u8,
    },
    Short {
        node: usize,
        sheet: u8,
    },
    Vertical {
        node: usize,
        sheet: u8,
    },
}

#[derive(Debug, Clone)]
pub struct CoverComplex {
    scene: Scene,
    g: usize,
    l: Vec<LComponent>,
    edge_offset: Vec<usize>,
    nodes: Vec<NodeInfo>,
    node_names: Vec<String>,
    cells1: Vec<Cell1>,
    top_cell: Vec<[usize; 3]>,
    n0: usize,
    /// (tail, head) of each 1-cell.
    d1: Vec<(usize, usize)>,
    d2: Vec<Vec<(usize, i64)>>,
    d3: Vec<Vec<(usize, i64)>>,
    smith2: Smith,
    rank1: usize,
    rank3: usize,
}

/// A closed lift of g as a cellular 1-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedCycle {
    pub component: String,
    pub sheet: u8,
    /// Coefficients on the 1-cells.
    pub chain: Vec<Int>,
}

/// One transverse passage of a lifted curve through a lifted wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piercing {
    pub cell: usize,
    pub sign: i8,
}

/// A closed lift of a curve off L, recorded by its wall piercings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub component: String,
    pub sheet: u8,
    pub piercings: Vec<Piercing>,
    /// Sheet after each piercing.
    pub sheets: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    pub betti: [usize; 4],
    /// Invariant factors of H₁ greater than one.
    pub torsion: Vec<Int>,
}

impl Homology {
    /// Invariant factors of H₁ in the usual listing: torsion, then a 0 per free summand.
    pub fn h1_factors(&self) -> Vec<Int> {
        let mut out = self.torsion.clone();
        out.extend((0..self.betti[1]).map(|_| Int::zero()));
        out
    }

    pub fn is_rational_sphere(&self) -> bool {
        self.betti == [1, 0, 0, 1]
    }
}

impl CoverComplex {
    /// Cover branched along α with g carried by the 1-skeleton. α and g
    /// must cross at least once.
    ///
    /// An uncolored scene gives the unbranched cover: three disjoint copies of S³.
    pub fn build(scene: &Scene, g: &str) -> Result<CoverComplex, Error> {
        if scene.p() != 3 {
            return Err(Error::Unsupported(
                "the cover engine only handles p = 3".to_string(),
            ));
        }
        if scene.is_colored() {
            let issues = crate::coloring::check_fox_coloring(scene);
            if let Some(first) = issues.first() {
                return Err(Error::InvalidColoring(first.to_string()));
            }
        }
        let gi = scene.component_index(g)?;
        if gi == ALPHA {
            return Err(Error::Schema("g must be a companion curve".to_string()));
        }
        let in_l = |c: usize| c == ALPHA || c == gi;
        // the sheet labels of the two pieces of a split diagram are never tied together
        if !scene.crossings().iter().any(|x| {
            in_l(x.over.component)
                && in_l(x.under.component)
                && x.over.component != x.under.component
        }) {
            return Err(Error::Unsupported(alloc::format!(
                "alpha and {g} must cross in the diagram"
            )));
        }

        let mut node_of_crossing: BTreeMap<usize, usize> = BTreeMap::new();
        let mut nodes: Vec<NodeInfo> = Vec::new();
        let mut node_names: Vec<String> = Vec::new();
        for (ci, x) in scene.crossings().iter().enumerate() {
            if in_l(x.over.component) && in_l(x.under.component) {
                node_of_crossing.insert(ci, nodes.len());
                nodes.push(NodeInfo {
                    sign: x.sign,
                    ..NodeInfo::default()
                });
                node_names.push(x.id.clone());
            }
        }

        let mut l = Vec::new();
        let mut edge_offset = Vec::new();
        let mut total_edges = 0;
        for comp in [ALPHA, gi] {
            let mut events = Vec::new();
            let mut passages = Vec::new();
            for (k, pa) in scene.passages(comp).iter().enumerate() {
                if let Some(&node) = node_of_crossing.get(&pa.crossing) {
                    let role = if pa.over {
                        EventRole::Over
                    } else {
                        EventRole::Under
                    };
                    events.push(Event { node, role });
                    passages.push(k);
                }
            }
            if events.is_empty() {
                let node = nodes.len();
                nodes.push(NodeInfo {
                    marker: true,
                    sign: 1,
                    ..NodeInfo::default()
                });
                node_names.push(alloc::format!("marker:{}", scene.name(comp)));
                events.push(Event {
                    node,
                    role: EventRole::Marker,
                });
            }
            let m = events.len();
            let tau: Vec<Perm> = (0..m)
                .map(|i| {
                    if comp != ALPHA || !scene.is_colored() || passages.is_empty() {
                        return ID;
                    }
                    let seg = (passages[i] + 1) % scene.segments(comp);
                    color_perm(scene.color_of_segment(seg))
                })
                .collect();
            edge_offset.push(total_edges);
            for (i, ev) in events.iter().enumerate() {
                let into = total_edges + (i + m - 1) % m;
                let out = total_edges + i;
                let info = &mut nodes[ev.node];
                match ev.role {
                    EventRole::Over => {
                        info.over_in = into;
                        info.over_out = out;
                    }
                    EventRole::Under => {
                        info.under_in = into;
                        info.under_out = out;
                    }
                    EventRole::Marker => {
                        info.over_in = into;
                        info.over_out = out;
                    }
                }
            }
            total_edges += m;
            l.push(LComponent {
                events,
                passages,
                tau,
            });
        }

        let mut cx = CoverComplex {
            scene: scene.clone(),
            g: gi,
            l,
            edge_offset,
            nodes,
            node_names,
            cells1: Vec::new(),
            top_cell: Vec::new(),
            n0: 0,
            d1: Vec::new(),
            d2: Vec::new(),
            d3: Vec::new(),
            smith2: Smith::new(0, 0, Vec::new()),
            rank1: 0,
            rank3: 0,
        };
        cx.assemble(total_edges)?;
        Ok(cx)
    }

    fn edge_tau(&self, e: usize) -> Perm {
        let lc = if self.l.len() > 1 && e >= self.edge_offset[1] {
            1
        } else {
            0
        };
        self.l[lc].tau[e - self.edge_offset[lc]]
    }

    /// (component slot, local index) of a global edge.
    fn edge_local(&self, e: usize) -> (usize, usize) {
        let lc = if self.l.len() > 1 && e >= self.edge_offset[1] {
            1
        } else {
            0
        };
        (lc, e - self.edge_offset[lc])
    }

    /// Transport from quadrant B to each quadrant, and the two quadrants
    /// (left, right) beside the wall hanging from `edge` at the given end.
    fn quadrant_transport(&self, node: usize, q: Quadrant) -> Perm {
        let n = &self.nodes[node];
        if n.marker {
            return ID;
        }
        let to = self.edge_tau(n.over_in);
        let ti = self.edge_tau(n.under_in);
        let tout = self.edge_tau(n.under_out);
        match (n.sign > 0, q) {
            (_, Quadrant::B) => ID,
            (_, Quadrant::C) => to,
            (true, Quadrant::A) => tout,
            (true, Quadrant::D) => then(&to, &ti),
            (false, Quadrant::A) => ti,
            (false, Quadrant::D) => then(&ti, &to),
        }
    }

    /// Cells on the vertical side of wall `W(edge, a)` at its head or tail,
    /// oriented downward.
    fn vertical_side(&self, edge: usize, head: bool, a: u8, c1: &Index1) -> Vec<usize> {
        let (lc, i) = self.edge_local(edge);
        let comp = &self.l[lc];
        let m = comp.events.len();
        let ev = if head {
            comp.events[(i + 1) % m]
        } else {
            comp.events[i]
        };
        let positive = self.nodes[ev.node].sign > 0;
        let left = match (ev.role, head, positive) {
            (EventRole::Marker, _, _) => Quadrant::B,
            (EventRole::Over, true, _) => Quadrant::B,
            (EventRole::Over, false, _) => Quadrant::A,
            (EventRole::Under, true, true) => Quadrant::C,
            (EventRole::Under, true, false) => Quadrant::A,
            (EventRole::Under, false, true) => Quadrant::B,
            (EventRole::Under, false, false) => Quadrant::D,
        };
        let tr = self.quadrant_transport(ev.node, left);
        let b = act(&inverse(&tr), a);
        let mut out = Vec::with_capacity(2);
        if ev.role == EventRole::Over {
            out.push(c1.short[ev.node][usize::from(a) - 1]);
        }
        out.push(c1.vertical[ev.node][usize::from(b) - 1]);
        out
    }

    fn assemble(&mut self, total_edges: usize) -> Result<(), Error> {
        let mut cells1 = Vec::new();
        let mut top_cell = Vec::with_capacity(total_edges);
        for e in 0..total_edges {
            let t = self.edge_tau(e);
            let mut row = [usize::MAX; 3];
            for a in 1..=3u8 {
                let rep = a.min(act(&t, a));
                if rep == a {
                    row[usize::from(a) - 1] = cells1.len();
                    cells1.push(Cell1::Top { edge: e, sheet: a });
                }
            }
            for a in 1..=3u8 {
                let rep = a.min(act(&t, a));
                row[usize::from(a) - 1] = row[usize::from(rep) - 1];
            }
            top_cell.push(row);
        }
        let mut short = vec![[usize::MAX; 3]; self.nodes.len()];
        let mut vertical = vec![[usize::MAX; 3]; self.nodes.len()];
        for (n, info) in self.nodes.iter().enumerate() {
            for a in 1..=3u8 {
                if !info.marker {
                    short[n][usize::from(a) - 1] = cells1.len();
                    cells1.push(Cell1::Short { node: n, sheet: a });
                }
                vertical[n][usize::from(a) - 1] = cells1.len();
                cells1.push(Cell1::Vertical { node: n, sheet: a });
            }
        }
        let index = Index1 { short, vertical };

        // walls and their corner identifications
        let n1 = cells1.len();
        let mut uf = UnionFind::new(2 * n1);
        let tail = |c: usize| 2 * c;
        let head = |c: usize| 2 * c + 1;
        let mut d2 = Vec::with_capacity(3 * total_edges);
        for e in 0..total_edges {
            for a in 1..=3u8 {
                let top = top_cell[e][usize::from(a) - 1];
                let hv = self.vertical_side(e, true, a, &index);
                let tv = self.vertical_side(e, false, a, &index);
                let mut bd: BTreeMap<usize, i64> = BTreeMap::new();
                *bd.entry(top).or_default() += 1;
                for &c in &hv {
                    *bd.entry(c).or_default() += 1;
                }
                for &c in &tv {
                    *bd.entry(c).or_default() -= 1;
                }
                uf.union(head(top), tail(hv[0]));
                uf.union(tail(top), tail(tv[0]));
                uf.union(head(*hv.last().unwrap()), head(*tv.last().unwrap()));
                if hv.len() == 2 {
                    uf.union(head(hv[0]), tail(hv[1]));
                }
                if tv.len() == 2 {
                    uf.union(head(tv[0]), tail(tv[1]));
                }
                d2.push(bd.into_iter().filter(|(_, v)| *v != 0).collect::<Vec<_>>());
            }
        }
        let mut vid: BTreeMap<usize, usize> = BTreeMap::new();
        let mut d1 = Vec::with_capacity(n1);
        for c in 0..n1 {
            let t = uf.find(tail(c));
            let h = uf.find(head(c));
            let nt = vid.len();
            let t = *vid.entry(t).or_insert(nt);
            let nh = vid.len();
            let h = *vid.entry(h).or_insert(nh);
            d1.push((t, h));
        }
        let n0 = vid.len();

        let mut d3 = Vec::with_capacity(3);
        for a in 1..=3u8 {
            let mut bd: BTreeMap<usize, i64> = BTreeMap::new();
            for e in 0..total_edges {
                let t = self.edge_tau(e);
                *bd.entry(3 * e + usize::from(a) - 1).or_default() += 1;
                *bd.entry(3 * e + usize::from(act(&t, a)) - 1).or_default() -= 1;
            }
            d3.push(bd.into_iter().filter(|(_, v)| *v != 0).collect::<Vec<_>>());
        }

        let mut comps = UnionFind::new(n0);
        for &(t, h) in &d1 {
            comps.union(t, h);
        }
        let components = (0..n0).filter(|&v| comps.find(v) == v).count();
        let rank1 = n0 - components;

        let mut entries2 = Vec::new();
        for (w, bd) in d2.iter().enumerate() {
            for &(c, v) in bd {
                entries2.push((c, w, v));
            }
        }
        let smith2 = Smith::from_sparse(n1, d2.len(), &entries2);
        let mut entries3 = Vec::new();
        for (k, bd) in d3.iter().enumerate() {
            for &(w, v) in bd {
                entries3.push((w, k, v));
            }
        }
        let rank3 = Smith::from_sparse(d2.len(), 3, &entries3).rank();

        self.cells1 = cells1;
        self.top_cell = top_cell;
        self.n0 = n0;
        self.d1 = d1;
        self.d2 = d2;
        self.d3 = d3;
        self.smith2 = smith2;
        self.rank1 = rank1;
        self.rank3 = rank3;
        Ok(())
    }

    /// Number of cells in dimensions 0 through 3.
    pub fn cell_counts(&self) -> [usize; 4] {
        [self.n0, self.cells1.len(), self.d2.len(), 3]
    }

    pub fn euler_characteristic(&self) -> i64 {
        let [a, b, c, d] = self.cell_counts();
        a as i64 - b as i64 + c as i64 - d as i64
    }

    pub fn cells1(&self) -> &[Cell1] {
        &self.cells1
    }

    pub fn node_name(&self, n: usize) -> &str {
        &self.node_names[n]
    }

    /// ∂₁ of a 1-cell as (tail, head) vertices.
    pub fn boundary1(&self, c: usize) -> (usize, usize) {
        self.d1[c]
    }

    pub fn boundary2(&self, w: usize) -> &[(usize, i64)] {
        &self.d2[w]
    }

    pub fn boundary3(&self, k: usize) -> &[(usize, i64)] {
        &self.d3[k]
    }

    /// Index of the 2-cell `W(edge, sheet)`.
    pub fn wall_cell(&self, edge: usize, sheet: u8) -> usize {
        3 * edge + usize::from(sheet) - 1
    }

    pub fn edge_count(&self) -> usize {
        self.top_cell.len()
    }

    /// Number of edges of L on α.
    pub fn alpha_edge_count(&self) -> usize {
        self.l[0].events.len()
    }

    pub fn alpha_edge_transposition(&self, i: usize) -> Perm {
        self.l[0].tau[i]
    }

    /// The geometric lifts of the wall under `edge`, as groups of 2-cells:
    /// one group per τ-orbit of the sheets.
    pub fn wall_lifts(&self, edge: usize) -> Vec<Vec<usize>> {
        let t = self.edge_tau(edge);
        let mut out: Vec<Vec<usize>> = Vec::new();
        for a in 1..=3u8 {
            let b = act(&t, a);
            if b < a {
                continue;
            }
            let mut group = vec![self.wall_cell(edge, a)];
            if b != a {
                group.push(self.wall_cell(edge, b));
            }
            out.push(group);
        }
        out
    }

    /// Check ∂₁∂₂ = 0 and ∂₂∂₃ = 0.
    pub fn check_boundaries(&self) -> bool {
        for bd in &self.d2 {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(c, v) in bd {
                let (t, h) = self.d1[c];
                *acc.entry(h).or_default() += v;
                *acc.entry(t).or_default() -= v;
            }
            if acc.values().any(|v| *v != 0) {
                return false;
            }
        }
        for bd in &self.d3 {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(w, v) in bd {
                for &(c, u) in &self.d2[w] {
                    *acc.entry(c).or_default() += u * v;
                }
            }
            if acc.values().any(|v| *v != 0) {
                return false;
            }
        }
        true
    }

    pub fn homology(&self) -> Homology {
        let [n0, n1, n2, n3] = self.cell_counts();
        let rank2 = self.smith2.rank();
        Homology {
            betti: [
                n0 - self.rank1,
                n1 - self.rank1 - rank2,
                n2 - rank2 - self.rank3,
                n3 - self.rank3,
            ],
            torsion: self.smith2.torsion(),
        }
    }

    pub fn g_name(&self) -> &str {
        self.scene.name(self.g)
    }

    pub fn scene(&self) -> &Scene {
        &self.scene
    }

    /// Global L edge on scene component `comp` that contains segment `s`.
    fn edge_containing(&self, lc: usize, s: usize) -> usize {
        let comp = &self.l[lc];
        if comp.passages.is_empty() {
            return self.edge_offset[lc];
        }
        let m = comp.passages.len();
        // the last event strictly before segment s, cyclically
        let i = match comp.passages.iter().rposition(|&p| p < s) {
            Some(i) => i,
            None => m - 1,
        };
        self.edge_offset[lc] + i
    }

    /// The lift of g whose zeroth arc lies in e³_sheet.
    pub fn lift(&self, sheet: u8) -> Result<LiftedCycle, Error> {
        check_sheet(sheet)?;
        let comp = &self.l[1];
        let m = comp.events.len();
        let z = self.scene.zeroth_segment(self.g);
        let start = self.edge_containing(1, z) - self.edge_offset[1];
        let mut chain = vec![Int::zero(); self.cells1.len()];
        let mut sh = sheet;
        for step in 0..m {
            let i = (start + step) % m;
            let e = self.edge_offset[1] + i;
            chain[self.top_cell[e][usize::from(sh) - 1]] += 1;
            let ev = comp.events[(i + 1) % m];
            if ev.role == EventRole::Under {
                let over = self.nodes[ev.node].over_in;
                sh = act(&self.edge_tau(over), sh);
            }
        }
        if sh != sheet {
            return Err(Error::LiftDoesNotClose {
                component: self.g_name().to_string(),
                sheet,
            });
        }
        Ok(LiftedCycle {
            component: self.g_name().to_string(),
            sheet,
            chain,
        })
    }

    /// ∂₁ of an integer 1-chain, on the vertices.
    pub fn boundary_of_chain(&self, chain: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.n0];
        for (c, v) in chain.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (t, h) = self.d1[c];
            out[h] += v;
            out[t] -= v;
        }
        out
    }

    /// Piercings of the lift of `h` starting in e³_sheet through the walls of L.
    ///
    /// The lift runs just above the diagram plane and meets a wall exactly
    /// where it passes under an edge of L.
    pub fn trace(&self, h: &str, sheet: u8) -> Result<Trace, Error> {
        check_sheet(sheet)?;
        let hi = self.scene.component_index(h)?;
        if hi == ALPHA || hi == self.g {
            return Err(Error::SharedArc(h.to_string()));
        }
        let n = self.scene.segments(hi);
        let z = self.scene.zeroth_segment(hi);
        let passages = self.scene.passages(hi);
        let mut piercings = Vec::new();
        let mut sheets = Vec::new();
        let mut sh = sheet;
        for step in 0..n {
            let s = (z + step) % n;
            let Some(pa) = passages.get(s) else { continue };
            if pa.over {
                continue;
            }
            let x = &self.scene.crossings()[pa.crossing];
            let lc = if x.over.component == ALPHA {
                0
            } else if x.over.component == self.g {
                1
            } else {
                continue;
            };
            let e = self.edge_containing(lc, x.over.incoming);
            let t = self.edge_tau(e);
            let (lift, sign) = if x.sign < 0 {
                (sh, -1)
            } else {
                (act(&t, sh), 1)
            };
            piercings.push(Piercing {
                cell: self.wall_cell(e, lift),
                sign,
            });
            sh = act(&t, sh);
            sheets.push(sh);
        }
        if sh != sheet {
            return Err(Error::LiftDoesNotClose {
                component: h.to_string(),
                sheet,
            });
        }
        Ok(Trace {
            component: h.to_string(),
            sheet,
            piercings,
            sheets,
        })
    }

    pub(crate) fn smith2(&self) -> &Smith {
        &self.smith2
    }

    /// Integer 2-chain evaluated against a trace.
    pub fn pair(&self, chain2: &[Int], trace: &Trace) -> Int {
        trace
            .piercings
            .iter()
            .map(|p| {
                let v = &chain2[p.cell];
                if p.sign > 0 {
                    v.clone()
                } else {
                    -v
                }
            })
            .sum()
    }

    /// ∂₂ of an integer 2-chain.
    pub fn boundary_of_2chain(&self, chain2: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.cells1.len()];
        for (w, v) in chain2.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for &(c, u) in &self.d2[w] {
                out[c] += v * Int::from(u);
            }
        }
        out
    }

    /// Plain text dump: counts, then one line per boundary.
    pub fn dump(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let [a, b, c, d] = self.cell_counts();
        let _ = writeln!(s, "cells {a} {b} {c} {d}");
        for (i, (t, h)) in self.d1.iter().enumerate() {
            let _ = writeln!(s, "d1 {i}: {h} - {t}");
        }
        for (i, bd) in self.d2.iter().enumerate() {
            let _ = write!(s, "d2 {i}:");
            for (c, v) in bd {
                let _ = write!(s, " {}{}*{c}", if *v < 0 { "-" } else { "+" }, v.abs());
            }
            s.push('\n');
        }
        for (i, bd) in self.d3.iter().enumerate() {
            let _ = write!(s, "d3 {i}:");
            for (w, v) in bd {
                let _ = write!(s, " {}{}*{w}", if *v < 0 { "-" } else { "+" }, v.abs());
            }
            s.push('\n');
        }
        s
    }
}

fn check_sheet(sheet: u8) -> Result<(), Error> {
    if (1..=3).contains(&sheet) {
        Ok(())
    } else {
        Err(Error::Schema(alloc::format!(
            "sheet {sheet} is not in 1..=3"
        )))
    }
}

#[derive(Debug, Clone, Copy)]
enum Quadrant {
    A,
    B,
    C,
    D,
}

struct Index1 {
    short: Vec<[usize; 3]>,
    vertical: Vec<[usize; 3]>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let n = self.parent[y];
            self.parent[y] = r;
            y = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
