//! Smith normal form over ℤ with recorded row and column operations.
//!
//! `P·A·Q = D` where `P` and `Q` are never stored; the elementary operations
//! are replayed on vectors instead, which is all the bounding-chain solver needs.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Int;

#[derive(Debug, Clone)]
enum Op {
    Swap(usize, usize),
    /// `dst += k * src`
    AddMul {
        dst: usize,
        src: usize,
        k: Int,
    },
    Neg(usize),
}

#[derive(Debug, Clone)]
pub struct Smith {
    rows: usize,
    cols: usize,
    diag: Vec<Int>,
    row_ops: Vec<Op>,
    col_ops: Vec<Op>,
}

/// Solution of `A·x = n·b` with the smallest admissible `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledSolution {
    pub multiplier: Int,
    pub x: Vec<Int>,
}

impl Smith {
    /// Decompose a dense `rows × cols` matrix given row-major.
    pub fn new(rows: usize, cols: usize, mut a: Vec<Vec<Int>>) -> Self {
        let mut row_ops = Vec::new();
        let mut col_ops = Vec::new();
        let mut diag = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = min_entry(&a, t, rows, cols) else {
                break;
            };
            swap_rows(&mut a, &mut row_ops, t, pi);
            swap_cols(&mut a, &mut col_ops, t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = &a[i][t] / &a[t][t];
                    if !q.is_zero() {
                        add_row(&mut a, &mut row_ops, i, t, -q);
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..cols {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = &a[t][j] / &a[t][t];
                    if !q.is_zero() {
                        add_col(&mut a, &mut col_ops, j, t, -q);
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    let mut best: Option<(usize, usize)> = None;
                    for i in t + 1..rows {
                        if !a[i][t].is_zero()
                            && best.map_or(true, |(bi, bj)| a[i][t].abs() < a[bi][bj].abs())
                        {
                            best = Some((i, t));
                        }
                    }
                    for j in t + 1..cols {
                        if !a[t][j].is_zero()
                            && best.map_or(true, |(bi, bj)| a[t][j].abs() < a[bi][bj].abs())
                        {
                            best = Some((t, j));
                        }
                    }
                    if let Some((bi, bj)) = best {
                        swap_rows(&mut a, &mut row_ops, t, bi);
                        swap_cols(&mut a, &mut col_ops, t, bj);
                    }
                    continue;
                }
                let p = a[t][t].clone();
                let bad =
                    (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
                match bad {
                    Some(i) => add_row(&mut a, &mut row_ops, t, i, Int::one()),
                    None => break,
                }
            }
            if a[t][t].is_negative() {
                for v in a[t].iter_mut() {
                    *v = -core::mem::take(v);
                }
                row_ops.push(Op::Neg(t));
            }
            diag.push(a[t][t].clone());
            t += 1;
        }
        Smith {
            rows,
            cols,
            diag,
            row_ops,
            col_ops,
        }
    }

    pub fn from_sparse(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut a = vec![vec![Int::zero(); cols]; rows];
        for &(i, j, v) in entries {
            a[i][j] += Int::from(v);
        }
        Smith::new(rows, cols, a)
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Nonzero diagonal entries, each dividing the next.
    pub fn diagonal(&self) -> &[Int] {
        &self.diag
    }

    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<Int> {
        self.diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn apply_p(&self, v: &mut [Int]) {
        for op in &self.row_ops {
            match op {
                Op::Swap(i, j) => v.swap(*i, *j),
                Op::AddMul { dst, src, k } => {
                    let add = &v[*src] * k;
                    v[*dst] += add;
                }
                Op::Neg(i) => v[*i] = -core::mem::take(&mut v[*i]),
            }
        }
    }

    pub fn apply_q(&self, y: &mut [Int]) {
        for op in self.col_ops.iter().rev() {
            match op {
                Op::Swap(i, j) => y.swap(*i, *j),
                Op::AddMul { dst, src, k } => {
                    let add = &y[*dst] * k;
                    y[*src] += add;
                }
                Op::Neg(i) => y[*i] = -core::mem::take(&mut y[*i]),
            }
        }
    }

    /// Smallest `n ≥ 1` and an integer `x` with `A·x = n·b`.
    pub fn solve_scaled(&self, b: &[Int]) -> Result<ScaledSolution, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut pb = b.to_vec();
        self.apply_p(&mut pb);
        if pb[self.rank()..].iter().any(|v| !v.is_zero()) {
            return Err(Error::InfiniteOrder);
        }
        let mut n = Int::one();
        for (d, v) in self.diag.iter().zip(&pb) {
            let need = d / d.gcd(v);
            n = n.lcm(&need);
        }
        let mut y = vec![Int::zero(); self.cols];
        for (i, (d, v)) in self.diag.iter().zip(&pb).enumerate() {
            y[i] = &n * v / d;
        }
        self.apply_q(&mut y);
        Ok(ScaledSolution {
            multiplier: n,
            x: y,
        })
    }
}

fn min_entry(a: &[Vec<Int>], t: usize, rows: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..rows {
        for j in t..cols {
            if a[i][j].is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if a[i][j].abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn swap_rows(a: &mut [Vec<Int>], ops: &mut Vec<Op>, i: usize, j: usize) {
    if i != j {
        a.swap(i, j);
        ops.push(Op::Swap(i, j));
    }
}

fn swap_cols(a: &mut [Vec<Int>], ops: &mut Vec<Op>, i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        ops.push(Op::Swap(i, j));
    }
}

fn add_row(a: &mut [Vec<Int>], ops: &mut Vec<Op>, dst: usize, src: usize, k: Int) {
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x += y * &k;
        }
    }
    ops.push(Op::AddMul { dst, src, k });
}

fn add_col(a: &mut [Vec<Int>], ops: &mut Vec<Op>, dst: usize, src: usize, k: Int) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let add = &row[src] * &k;
            row[dst] += add;
        }
    }
    ops.push(Op::AddMul { dst, src, k });
}
