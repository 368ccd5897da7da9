//! Fox colorings as dihedral permutations of the sheets, and anchor-path monodromy.
//!
//! Sheets are labelled 1..=p. The color c acts on sheets by the reflection
//! x ↦ 2c − x (mod p, representatives 1..=p); for p = 3 this is
//! 1 ↦ (23), 2 ↦ (13), 3 ↦ (12).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Scene, ALPHA};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralPermutation {
    /// `images[x-1]` is the image of sheet x.
    images: Vec<u8>,
}

impl DihedralPermutation {
    pub fn identity(p: u32) -> Self {
        DihedralPermutation {
            images: (1..=p as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        DihedralPermutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, sheet: u8) -> u8 {
        self.images[usize::from(sheet) - 1]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| usize::from(v) == i + 1)
    }

    /// Reflections are the maps x ↦ b − x.
    pub fn is_reflection(&self) -> bool {
        let p = self.images.len() as i64;
        let b = i64::from(self.images[0]) + 1;
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| (b - (i as i64 + 1) - i64::from(v)).rem_euclid(p) == 0)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &DihedralPermutation) -> DihedralPermutation {
        DihedralPermutation {
            images: self.images.iter().map(|&x| next.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> DihedralPermutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[usize::from(v) - 1] = (i + 1) as u8;
        }
        DihedralPermutation { images }
    }

    /// Disjoint cycle notation, e.g. `(123)` or `Id`.
    pub fn cycle_notation(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start - 1] || usize::from(self.images[start - 1]) == start {
                continue;
            }
            out.push('(');
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                out.push_str(&format!("{x}"));
                x = usize::from(self.images[x - 1]);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("Id");
        }
        out
    }
}

impl fmt::Display for DihedralPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

pub fn color_to_transposition(color: u32, p: u32) -> Result<DihedralPermutation, Error> {
    if color == 0 || color > p {
        return Err(Error::ColorOutOfRange(color));
    }
    let p = i64::from(p);
    let c = i64::from(color);
    let images = (1..=p)
        .map(|x| {
            let y = (2 * c - x).rem_euclid(p);
            if y == 0 {
                p as u8
            } else {
                y as u8
            }
        })
        .collect();
    Ok(DihedralPermutation { images })
}

/// Composite of the transpositions of `colors`, the first color acting first.
pub fn monodromy_of_colors(colors: &[u32], p: u32) -> Result<DihedralPermutation, Error> {
    let mut m = DihedralPermutation::identity(p);
    for &c in colors {
        m = m.then(&color_to_transposition(c, p)?);
    }
    Ok(m)
}

/// The product of the transpositions written left to right in path order and
/// composed right to left, the way the monodromy word is usually displayed.
/// It equals the inverse of [`monodromy_of_colors`].
pub fn displayed_product(colors: &[u32], p: u32) -> Result<DihedralPermutation, Error> {
    let mut m = DihedralPermutation::identity(p);
    for &c in colors.iter().rev() {
        m = m.then(&color_to_transposition(c, p)?);
    }
    Ok(m)
}

/// An anchor path: the α-arcs it passes under, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorPath {
    pub target: String,
    pub arcs: Vec<usize>,
}

pub fn monodromy(path: &AnchorPath, scene: &Scene) -> Result<DihedralPermutation, Error> {
    let colors = path_colors(path, scene)?;
    monodromy_of_colors(&colors, scene.p())
}

pub fn path_colors(path: &AnchorPath, scene: &Scene) -> Result<Vec<u32>, Error> {
    let coloring = scene.coloring();
    path.arcs
        .iter()
        .map(|&a| {
            coloring
                .get(a)
                .map(|&c| u32::from(c))
                .ok_or(Error::ArcNotOnAlpha(a))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringIssue {
    /// The relation a + c ≡ 2b fails at a self-crossing of α.
    Relation {
        crossing: String,
        over: u8,
        under_in: u8,
        under_out: u8,
    },
    /// The color changes where α passes under a companion.
    ChangesUnderCompanion {
        crossing: String,
    },
    NotSurjective,
    Missing {
        arc: usize,
    },
}

impl fmt::Display for ColoringIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringIssue::Relation {
                crossing,
                over,
                under_in,
                under_out,
            } => write!(
                f,
                "crossing {crossing}: {under_in} + {under_out} is not 2·{over} mod p"
            ),
            ColoringIssue::ChangesUnderCompanion { crossing } => {
                write!(
                    f,
                    "crossing {crossing}: color changes under a companion curve"
                )
            }
            ColoringIssue::NotSurjective => write!(f, "not surjective: fewer than two colors"),
            ColoringIssue::Missing { arc } => write!(f, "arc {arc} has no color"),
        }
    }
}

/// Diagnostics for the scene's own coloring.
pub fn check_fox_coloring(scene: &Scene) -> Vec<ColoringIssue> {
    check_coloring(scene, scene.coloring())
}

/// Diagnostics for an arbitrary coloring of α's arcs (in the scene's numbering).
pub fn check_coloring(scene: &Scene, coloring: &[u8]) -> Vec<ColoringIssue> {
    let mut issues = Vec::new();
    let m = scene.arc_count(ALPHA);
    if coloring.len() < m {
        for arc in coloring.len()..m {
            issues.push(ColoringIssue::Missing { arc });
        }
        return issues;
    }
    let p = i64::from(scene.p());
    let alpha = ALPHA;
    for (ci, x) in scene.crossings().iter().enumerate() {
        if x.under.component != alpha {
            continue;
        }
        let a = coloring[scene.arc_of_segment(alpha, x.under.incoming)];
        let c = coloring[scene.arc_of_segment(alpha, x.under.outgoing)];
        if x.over.component == alpha {
            let b = coloring[scene.arc_of_segment(alpha, x.over.incoming)];
            if (i64::from(a) + i64::from(c) - 2 * i64::from(b)).rem_euclid(p) != 0 {
                issues.push(ColoringIssue::Relation {
                    crossing: scene.crossing_name(ci),
                    over: b,
                    under_in: a,
                    under_out: c,
                });
            }
        } else if a != c {
            issues.push(ColoringIssue::ChangesUnderCompanion {
                crossing: scene.crossing_name(ci),
            });
        }
    }
    let first = coloring.first().copied();
    if coloring[..m].iter().all(|&c| Some(c) == first) {
        issues.push(ColoringIssue::NotSurjective);
    }
    issues
}

/// All surjective Fox colorings of α up to the affine action x ↦ ux + v of
/// Aut(D_p), one canonical (lexicographically smallest) representative each.
/// Colorings are returned in the scene's arc numbering.
pub fn enumerate_colorings(scene: &Scene, p: u32) -> Vec<Vec<u8>> {
    let alpha = ALPHA;
    let m = scene.arc_count(alpha);
    // Wirtinger arcs: merge arcs of α separated only by companion under-passes
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let n = parent[y];
            parent[y] = r;
            y = n;
        }
        r
    }
    let mut relations = Vec::new();
    for x in scene.crossings() {
        if x.under.component != alpha {
            continue;
        }
        let a = scene.arc_of_segment(alpha, x.under.incoming);
        let c = scene.arc_of_segment(alpha, x.under.outgoing);
        if x.over.component == alpha {
            relations.push((a, c, scene.arc_of_segment(alpha, x.over.incoming)));
        } else {
            let (ra, rc) = (find(&mut parent, a), find(&mut parent, c));
            parent[ra] = rc;
        }
    }
    let mut roots: Vec<usize> = (0..m).map(|a| find(&mut parent, a)).collect();
    let mut ids: Vec<usize> = roots.clone();
    ids.sort_unstable();
    ids.dedup();
    for r in roots.iter_mut() {
        *r = ids.binary_search(r).unwrap();
    }
    let n = ids.len();
    let rows: Vec<Vec<i64>> = relations
        .iter()
        .map(|&(a, c, b)| {
            let mut row = vec![0i64; n];
            row[roots[a]] += 1;
            row[roots[c]] += 1;
            row[roots[b]] -= 2;
            row
        })
        .collect();
    let kernel = nullspace_mod_p(&rows, n, p as i64);
    let p8 = p as u8;
    let mut seen: Vec<Vec<u8>> = Vec::new();
    let total = (p as u64).pow(kernel.len() as u32);
    for idx in 0..total {
        let mut v = vec![0i64; n];
        let mut t = idx;
        for b in &kernel {
            let coef = (t % p as u64) as i64;
            t /= p as u64;
            for (x, y) in v.iter_mut().zip(b) {
                *x = (*x + coef * y).rem_euclid(p as i64);
            }
        }
        if v.iter().all(|&x| x == v[0]) {
            continue;
        }
        let mut best: Option<Vec<u8>> = None;
        for u in 1..p as i64 {
            for s in 0..p as i64 {
                let c: Vec<u8> = roots
                    .iter()
                    .map(|&r| {
                        let y = (u * v[r] + s).rem_euclid(p as i64) as u8;
                        if y == 0 {
                            p8
                        } else {
                            y
                        }
                    })
                    .collect();
                if best.as_ref().map_or(true, |b| c < *b) {
                    best = Some(c);
                }
            }
        }
        let best = best.expect("p >= 2");
        if !seen.contains(&best) {
            seen.push(best);
        }
    }
    seen.sort();
    seen
}

/// Basis of the nullspace of an integer matrix modulo a prime.
pub fn nullspace_mod_p(rows: &[Vec<i64>], n: usize, p: i64) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][col], p);
        for x in a[r].iter_mut() {
            *x = (*x * inv).rem_euclid(p);
        }
        for i in 0..a.len() {
            if i != r && a[i][col] != 0 {
                let f = a[i][col];
                for k in 0..n {
                    a[i][k] = (a[i][k] - f * a[r][k]).rem_euclid(p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0i64; n];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = (-a[i][free]).rem_euclid(p);
        }
        basis.push(v);
    }
    basis
}

fn inv_mod(a: i64, p: i64) -> i64 {
    let (mut t, mut nt, mut r, mut nr) = (0i64, 1i64, p, a.rem_euclid(p));
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    t.rem_euclid(p)
}

/// One basis difference of lifts used as a row of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub curve: String,
    /// `first` − `second`, sheets in 1..=3.
    pub first: u8,
    pub second: u8,
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{c}^{} - {c}^{}",
            self.first,
            self.second,
            c = self.curve
        )
    }
}

/// Per-curve monodromies needed to choose the basis.
#[derive(Debug, Clone)]
pub struct BasisInput {
    /// (ω_i name, μ_{δ_i})
    pub omegas: Vec<(String, DihedralPermutation)>,
    pub beta: String,
    pub gamma_r: Option<DihedralPermutation>,
    pub gamma_l: Option<DihedralPermutation>,
}

pub fn basis_lifts(input: &BasisInput, c0: u8) -> Result<Vec<BasisElement>, Error> {
    let mut out = Vec::new();
    for (name, mu) in &input.omegas {
        let fixed = mu.apply(c0);
        let rest: Vec<u8> = (1..=3u8).filter(|&s| s != fixed).collect();
        out.push(BasisElement {
            curve: name.clone(),
            first: rest[0],
            second: rest[1],
        });
    }
    let gr = input
        .gamma_r
        .as_ref()
        .ok_or_else(|| Error::MissingMonodromy(format!("{}_r", input.beta)))?;
    let gl = input
        .gamma_l
        .as_ref()
        .ok_or_else(|| Error::MissingMonodromy(format!("{}_l", input.beta)))?;
    let j = gr.apply(c0);
    let l = gl.apply(c0);
    if j == l {
        return Err(Error::InvalidColoring(format!(
            "gamma_r and gamma_l both end in sheet {j}"
        )));
    }
    let k = (1..=3u8).find(|&s| s != j && s != l).expect("three sheets");
    out.push(BasisElement {
        curve: input.beta.clone(),
        first: j,
        second: k,
    });
    Ok(out)
}
