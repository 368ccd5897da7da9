//! Linking numbers of lifted curves and the matrix `M` of basis differences.
//!
//! lk(gʲ, hᵏ) = ⟨F, hᵏ⟩ / n where ∂F = n·gʲ. Blocks are indexed from sheet 1:
//! `block[a-1][b-1] = lk(Xᵃ, Z^{b,+})` for the block of (X, Z⁺).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::coloring::BasisElement;
use crate::cover::{CoverComplex, LiftedCycle};
use crate::diagram::Scene;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::{Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundingChain {
    pub multiplier: Int,
    /// Coefficients on the 2-cells.
    pub chain: Vec<Int>,
}

/// Smallest n ≥ 1 with n·cycle a boundary, and one 2-chain it bounds.
pub fn order_and_bounding_chain(
    cx: &CoverComplex,
    cycle: &LiftedCycle,
) -> Result<BoundingChain, Error> {
    if cycle.chain.len() != cx.cells1().len() {
        return Err(Error::DimensionMismatch);
    }
    if cycle.chain.iter().all(Zero::is_zero) {
        return Ok(BoundingChain {
            multiplier: Int::one(),
            chain: alloc::vec![Int::zero(); cx.cell_counts()[2]],
        });
    }
    let sol = cx.smith2().solve_scaled(&cycle.chain)?;
    debug_assert_eq!(
        cx.boundary_of_2chain(&sol.x),
        cycle
            .chain
            .iter()
            .map(|v| v * &sol.multiplier)
            .collect::<Vec<_>>()
    );
    Ok(BoundingChain {
        multiplier: sol.multiplier,
        chain: sol.x,
    })
}

/// lk(gʲ, hᵏ) in the cover built for g.
pub fn linking_number(cx: &CoverComplex, j: u8, h: &str, k: u8) -> Result<Rat, Error> {
    let cycle = cx.lift(j)?;
    let f = order_and_bounding_chain(cx, &cycle)?;
    let trace = cx.trace(h, k)?;
    Ok(Rat::new(cx.pair(&f.chain, &trace), f.multiplier))
}

/// The 3×3 block lk(gʲ, hᵏ).
pub fn linking_block_in(cx: &CoverComplex, h: &str) -> Result<Matrix<Rat>, Error> {
    let traces = (1..=3u8)
        .map(|k| cx.trace(h, k))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::with_capacity(3);
    for j in 1..=3u8 {
        let cycle = cx.lift(j)?;
        let f = order_and_bounding_chain(cx, &cycle)?;
        rows.push(
            traces
                .iter()
                .map(|t| Rat::new(cx.pair(&f.chain, t), f.multiplier.clone()))
                .collect(),
        );
    }
    Matrix::from_rows(rows)
}

pub fn linking_block(scene: &Scene, g: &str, h: &str) -> Result<Matrix<Rat>, Error> {
    if g == h {
        return Err(Error::SharedArc(g.to_string()));
    }
    let cx = CoverComplex::build(scene, g)?;
    linking_block_in(&cx, h)
}

/// Source of blocks `lk(rowᵃ, col^{b,+})`.
pub trait BlockProvider {
    fn block(&self, row: &str, col: &str) -> Result<Matrix<Rat>, Error>;
}

/// Blocks given as data.
#[derive(Debug, Clone, Default)]
pub struct TableProvider {
    blocks: BTreeMap<(String, String), Matrix<Rat>>,
}

impl TableProvider {
    pub fn new() -> Self {
        TableProvider::default()
    }

    pub fn insert(&mut self, row: &str, col: &str, block: Matrix<Rat>) -> Result<(), Error> {
        if block.nrows() != 3 || block.ncols() != 3 {
            return Err(Error::DimensionMismatch);
        }
        self.blocks
            .insert((row.to_string(), col.to_string()), block);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(String, String), &Matrix<Rat>)> {
        self.blocks.iter()
    }
}

impl BlockProvider for TableProvider {
    fn block(&self, row: &str, col: &str) -> Result<Matrix<Rat>, Error> {
        self.blocks
            .get(&(row.to_string(), col.to_string()))
            .cloned()
            .ok_or_else(|| Error::MissingBlock {
                row: row.to_string(),
                col: col.to_string(),
            })
    }
}

/// Where a computed block comes from: a scene in which `g` stands for the
/// row curve and `h` for the positive push-off of the column curve.
#[derive(Debug, Clone)]
pub struct BlockSource {
    pub row: String,
    pub col: String,
    pub scene: Scene,
    pub g: String,
    pub h: String,
}

/// Run the cover engine for every source and collect the blocks.
pub fn compute_blocks(sources: &[BlockSource]) -> Result<TableProvider, Error> {
    let mut t = TableProvider::new();
    for src in sources {
        t.insert(
            &src.row,
            &src.col,
            linking_block(&src.scene, &src.g, &src.h)?,
        )?;
    }
    Ok(t)
}

/// lk(Xᵃ, Z^{b,−}), from the block of (Z, X⁺) by the push-off shift identity.
fn lk_minus(provider: &dyn BlockProvider, x: &str, a: u8, z: &str, b: u8) -> Result<Rat, Error> {
    let blk = provider.block(z, x)?;
    Ok(blk.get(usize::from(b) - 1, usize::from(a) - 1).clone())
}

fn lk_plus(provider: &dyn BlockProvider, x: &str, a: u8, z: &str, b: u8) -> Result<Rat, Error> {
    let blk = provider.block(x, z)?;
    Ok(blk.get(usize::from(a) - 1, usize::from(b) - 1).clone())
}

/// m_{r,s} = lk(A_r − B_r, A_s⁺ − B_s⁻) expanded over the four lifts.
pub fn assemble_m(
    provider: &dyn BlockProvider,
    basis: &[BasisElement],
) -> Result<Matrix<Rat>, Error> {
    let mut rows = Vec::with_capacity(basis.len());
    for r in basis {
        let mut row = Vec::with_capacity(basis.len());
        for s in basis {
            let (x, z) = (&r.curve, &s.curve);
            let v = lk_plus(provider, x, r.first, z, s.first)?
                - lk_minus(provider, x, r.first, z, s.second)?
                - lk_plus(provider, x, r.second, z, s.first)?
                + lk_minus(provider, x, r.second, z, s.second)?;
            row.push(v);
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// Row sums of a block; each equals the classical linking number.
pub fn row_sums(block: &Matrix<Rat>) -> Vec<Rat> {
    (0..block.nrows())
        .map(|i| block.row(i).iter().cloned().sum())
        .collect()
}
