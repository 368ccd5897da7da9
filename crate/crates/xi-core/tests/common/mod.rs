#![allow(dead_code)]

use std::collections::BTreeMap;

use xi_core::coloring::{color_to_transposition, enumerate_colorings, DihedralPermutation};
use xi_core::diagram::{ComponentSpec, CrossingSpec, Role, Scene, SceneSpec, StrandSpec, ALPHA};
use xi_core::snf::Smith;
use xi_core::Int;

/// Closure of a braid on `n` strands. Generator `±i` crosses positions i and
/// i+1 (1-based). The component through strand 0 becomes α, the others are
/// companions `c1`, `c2`, ...
pub fn braid_spec(n: usize, word: &[i32]) -> SceneSpec {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut events: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    let mut signs = Vec::new();
    for (ci, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (perm[i], perm[i + 1]);
        let (over, under) = if g > 0 { (a, b) } else { (b, a) };
        signs.push(if g > 0 { -1 } else { 1 });
        events[over].push((ci, true));
        events[under].push((ci, false));
        perm.swap(i, i + 1);
    }
    let mut end = vec![0; n];
    for (pos, &s) in perm.iter().enumerate() {
        end[s] = pos;
    }
    let mut seen = vec![false; n];
    let mut comps: Vec<Vec<(usize, bool)>> = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            comp.extend(events[x].iter().copied());
            x = end[x];
        }
        comps.push(comp);
    }

    let names: Vec<String> = (0..comps.len())
        .map(|k| {
            if k == 0 {
                "alpha".to_string()
            } else {
                format!("c{k}")
            }
        })
        .collect();
    let mut over: Vec<Option<StrandSpec>> = vec![None; word.len()];
    let mut under: Vec<Option<StrandSpec>> = vec![None; word.len()];
    let mut components = Vec::new();
    for (k, comp) in comps.iter().enumerate() {
        let len = comp.len().max(1);
        for (pos, &(ci, is_over)) in comp.iter().enumerate() {
            let st = StrandSpec {
                component: names[k].clone(),
                incoming: pos,
                outgoing: (pos + 1) % len,
            };
            if is_over {
                over[ci] = Some(st);
            } else {
                under[ci] = Some(st);
            }
        }
        let role = if k == 0 { Role::Alpha } else { Role::Companion };
        components.push(ComponentSpec {
            name: names[k].clone(),
            role,
            segments: len,
        });
    }
    let crossings = (0..word.len())
        .map(|ci| CrossingSpec {
            id: format!("x{ci}"),
            sign: signs[ci],
            over: over[ci].clone().unwrap(),
            under: under[ci].clone().unwrap(),
            rotation: None,
        })
        .collect();
    SceneSpec {
        p: 3,
        components,
        crossings,
        g: None,
        zeroth_arcs: BTreeMap::new(),
        coloring: Vec::new(),
    }
}

/// The braid closure with its first nontrivial 3-coloring, if α has one.
pub fn colored_braid(n: usize, word: &[i32]) -> Option<Scene> {
    let mut scene = Scene::new(braid_spec(n, word)).ok()?;
    let coloring = enumerate_colorings(&scene, 3).into_iter().next()?;
    scene.set_coloring(coloring).ok()?;
    Some(scene)
}

/// A trefoil α, 3-colored, with a companion `c1` that links it once.
pub fn trefoil() -> Scene {
    colored_braid(3, &[1, 1, 1, 2, 2]).expect("the trefoil is 3-colorable")
}

/// First companion that crosses α, the only kind the cover accepts as g.
pub fn crossing_companion(scene: &Scene) -> Option<String> {
    (1..scene.components().len())
        .find(|&c| {
            scene.crossings().iter().any(|x| {
                (x.over.component == ALPHA && x.under.component == c)
                    || (x.under.component == ALPHA && x.over.component == c)
            })
        })
        .map(|c| scene.name(c).to_string())
}

/// H₁ of the 3-fold irregular dihedral cover branched along α, computed from
/// the Wirtinger presentation of α alone: lift the presentation complex
/// through the permutation representation of the coloring and cap off every
/// lifted meridian. Returns (free rank, torsion invariant factors).
pub fn wirtinger_h1(scene: &Scene) -> (usize, Vec<Int>) {
    let nseg = scene.segments(ALPHA);
    let rho: Vec<Vec<u8>> = (0..nseg)
        .map(|s| {
            color_to_transposition(scene.color_of_segment(s).into(), 3)
                .unwrap()
                .images()
                .to_vec()
        })
        .collect();
    let edge = |x: usize, a: u8| 3 * x + a as usize - 1;
    let act = |x: usize, a: u8| rho[x][a as usize - 1];

    // relators as words of (generator, ±1)
    let mut relators: Vec<Vec<(usize, i32)>> = Vec::new();
    for (k, pa) in scene.passages(ALPHA).iter().enumerate() {
        let seg_in = k;
        let seg_out = (k + 1) % nseg;
        let x = &scene.crossings()[pa.crossing];
        if !pa.over && x.over.component == ALPHA {
            let o = x.over.incoming;
            let e = i32::from(x.sign);
            relators.push(vec![(o, e), (seg_in, 1), (o, -e), (seg_out, -1)]);
        } else {
            relators.push(vec![(seg_in, 1), (seg_out, -1)]);
        }
    }

    let mut d2: Vec<(usize, usize, i64)> = Vec::new();
    let mut col = 0;
    for r in &relators {
        for start in 1..=3u8 {
            let mut a = start;
            for &(x, e) in r {
                if e > 0 {
                    d2.push((edge(x, a), col, 1));
                    a = act(x, a);
                } else {
                    let b = act(x, a);
                    d2.push((edge(x, b), col, -1));
                    a = b;
                }
            }
            assert_eq!(a, start, "relator does not lift to a loop");
            col += 1;
        }
    }
    for x in 0..nseg {
        let mut done = [false; 3];
        for a in 1..=3u8 {
            if done[a as usize - 1] {
                continue;
            }
            let mut b = a;
            loop {
                done[b as usize - 1] = true;
                d2.push((edge(x, b), col, 1));
                b = act(x, b);
                if b == a {
                    break;
                }
            }
            col += 1;
        }
    }
    let n1 = 3 * nseg;
    let mut d1: Vec<(usize, usize, i64)> = Vec::new();
    for x in 0..nseg {
        for a in 1..=3u8 {
            let b = act(x, a);
            if a != b {
                d1.push((a as usize - 1, edge(x, a), -1));
                d1.push((b as usize - 1, edge(x, a), 1));
            }
        }
    }
    let rank1 = Smith::from_sparse(3, n1, &d1).rank();
    let s2 = Smith::from_sparse(n1, col, &d2);
    (n1 - rank1 - s2.rank(), s2.torsion())
}

/// Braid words on 2 or 3 strands whose closure is a single 3-colorable knot.
pub fn alpha_pool() -> &'static [(usize, Vec<i32>)] {
    static POOL: std::sync::OnceLock<Vec<(usize, Vec<i32>)>> = std::sync::OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for n in 2..=3usize {
            let gens: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
            for len in 3..=6u32 {
                let total = gens.len().pow(len);
                for code in 0..total {
                    let mut c = code;
                    let word: Vec<i32> = (0..len)
                        .map(|_| {
                            let g = gens[c % gens.len()];
                            c /= gens.len();
                            g
                        })
                        .collect();
                    let Ok(scene) = Scene::new(braid_spec(n, &word)) else {
                        continue;
                    };
                    if scene.components().len() == 1 && !enumerate_colorings(&scene, 3).is_empty() {
                        out.push((n, word));
                    }
                }
            }
        }
        out
    })
}

/// One companion excursion: companion `which` moves `signs.len() / 2`
/// places left across the strands and straight back.
#[derive(Debug, Clone)]
pub struct Excursion {
    pub which: usize,
    pub signs: Vec<bool>,
}

/// An α braid on `n` strands with `m` pure companion strands appended. The
/// excursions run as one block, repeated `r` times, before letter `at` of the
/// α word. α's diagram, up to the new crossings, is unchanged.
pub fn with_companions(
    n: usize,
    alpha: &[i32],
    m: usize,
    at: usize,
    excursions: &[Excursion],
    r: usize,
) -> (usize, Vec<i32>) {
    let mut block = Vec::new();
    for ex in excursions {
        let q = (n + ex.which % m) as i32;
        let depth = (ex.signs.len() / 2).clamp(1, q as usize) as i32;
        let path = (0..depth)
            .map(|k| q - k)
            .chain((0..depth).rev().map(|k| q - k));
        for (g, &s) in path.zip(ex.signs.iter().chain(std::iter::repeat(&true))) {
            block.push(if s { g } else { -g });
        }
    }
    let at = at.min(alpha.len());
    let mut word = alpha[..at].to_vec();
    for _ in 0..r {
        word.extend_from_slice(&block);
    }
    word.extend_from_slice(&alpha[at..]);
    (n + m, word)
}

/// Monodromy of a companion: the transpositions of the α arcs it passes under.
pub fn companion_monodromy(scene: &Scene, c: usize) -> DihedralPermutation {
    let mut m = DihedralPermutation::identity(3);
    for pa in scene.passages(c) {
        let x = &scene.crossings()[pa.crossing];
        if !pa.over && x.over.component == ALPHA {
            let color = scene.color_of_segment(x.over.incoming);
            m = m.then(&color_to_transposition(color.into(), 3).unwrap());
        }
    }
    m
}

fn order(p: &DihedralPermutation) -> usize {
    let mut q = p.clone();
    let mut k = 1;
    while !q.is_identity() {
        q = q.then(p);
        k += 1;
    }
    k
}

/// Colored scene with the excursion block repeated just often enough that
/// every companion has trivial monodromy, so all its lifts close.
pub fn closing_scene(
    n: usize,
    alpha: &[i32],
    m: usize,
    at: usize,
    excursions: &[Excursion],
) -> Scene {
    let (nn, w) = with_companions(n, alpha, m, at, excursions, 1);
    let scene = colored_braid(nn, &w).expect("pool braids are colorable");
    let mut r = 1;
    for c in 1..scene.components().len() {
        let o = order(&companion_monodromy(&scene, c));
        r = r * o / gcd(r, o);
    }
    let (nn, w) = with_companions(n, alpha, m, at, excursions, r);
    colored_braid(nn, &w).expect("pool braids are colorable")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
