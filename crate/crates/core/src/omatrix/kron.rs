//! Kronecker-like products over 8×8 blocks.
//!
//! Both products multiply blocks as real 8×8 matrices. They differ only in
//! which operand indexes the outer block grid:
//!
//! * `A ⊗̂ B`: block `((s,i),(t,j))` is `A_st · B_ij`, outer index from `A`;
//! * `A ⊗̃ B`: block `((i,s),(j,t))` is `A_st · B_ij`, outer index from `B`.

use crate::error::{Error, Result};
use crate::realmat::RealMatrix;

fn block_grid(m: &RealMatrix, name: &str) -> Result<(usize, usize)> {
    if !m.rows().is_multiple_of(8) || !m.cols().is_multiple_of(8) {
        return Err(Error::DimensionMismatch(format!(
            "{name} is {}x{}, not a grid of 8x8 blocks",
            m.rows(),
            m.cols()
        )));
    }
    Ok((m.rows() / 8, m.cols() / 8))
}

fn blocks(m: &RealMatrix, (r, c): (usize, usize)) -> Vec<Vec<RealMatrix>> {
    (0..r)
        .map(|s| (0..c).map(|t| m.block(8 * s, 8 * t, 8, 8)).collect())
        .collect()
}

fn is_zero(m: &RealMatrix) -> bool {
    m.as_slice().iter().all(|&v| v == 0.0)
}

/// `A ⊗̂ B`.
#[allow(clippy::needless_range_loop)]
pub fn block_kron_left(a: &RealMatrix, b: &RealMatrix) -> Result<RealMatrix> {
    let (m, n) = block_grid(a, "left operand")?;
    let (p, q) = block_grid(b, "right operand")?;
    let (ab, bb) = (blocks(a, (m, n)), blocks(b, (p, q)));
    let mut out = RealMatrix::zeros(8 * m * p, 8 * n * q);
    for s in 0..m {
        for t in 0..n {
            if is_zero(&ab[s][t]) {
                continue;
            }
            for i in 0..p {
                for j in 0..q {
                    out.set_block(8 * (s * p + i), 8 * (t * q + j), &(&ab[s][t] * &bb[i][j]));
                }
            }
        }
    }
    Ok(out)
}

/// `A ⊗̃ B`.
#[allow(clippy::needless_range_loop)]
pub fn block_kron_right(a: &RealMatrix, b: &RealMatrix) -> Result<RealMatrix> {
    let (m, n) = block_grid(a, "left operand")?;
    let (p, q) = block_grid(b, "right operand")?;
    let (ab, bb) = (blocks(a, (m, n)), blocks(b, (p, q)));
    let mut out = RealMatrix::zeros(8 * m * p, 8 * n * q);
    for i in 0..p {
        for j in 0..q {
            if is_zero(&bb[i][j]) {
                continue;
            }
            for s in 0..m {
                for t in 0..n {
                    out.set_block(8 * (i * m + s), 8 * (j * n + t), &(&ab[s][t] * &bb[i][j]));
                }
            }
        }
    }
    Ok(out)
}

/// `I_{8n}`, the block identity with `n` diagonal blocks.
pub fn block_identity(n: usize) -> RealMatrix {
    RealMatrix::identity(8 * n)
}
