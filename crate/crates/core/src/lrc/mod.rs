//! Local reconstruction codes: the block parity-check model, maximal
//! recoverability checking, erasure coding, and field-size lower bounds.
//!
//! Coordinates are grouped into `g = n / r` contiguous local groups. The
//! parity-check matrix has the shape
//!
//! ```text
//! | A_1             |
//! |      A_2        |
//! |          ...    |
//! |             A_g |
//! | B_1 B_2 ... B_g |
//! ```
//!
//! with each `A_i` an `a x r` block whose every `a x a` minor is nonzero and each
//! `B_i` an `h x r` block of heavy parities.

mod bound;
mod codec;
mod pattern;
mod verify;

use crate::combinat::Combinations;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

pub use bound::{lower_bound_q, LowerBound, Rational};
pub use codec::{
    decode_erasures, encode, generator_matrix, local_repair, SymbolSource, SystematicEncoder,
};
pub use pattern::{enumerate_mr_patterns, extras_vectors, pattern_count, ErasurePattern};
pub use verify::{
    is_correctable, reduced_check_count, verify_mr, verify_mr_with, Verdict, VerifyOptions,
    VerifyReport, DEFAULT_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrcParams {
    pub n: usize,
    pub r: usize,
    pub a: usize,
    pub h: usize,
    pub field: Field,
}

impl LrcParams {
    pub fn new(n: usize, r: usize, a: usize, h: usize, field: &Field) -> Result<LrcParams> {
        check_shape(n, r, a, h)?;
        Ok(LrcParams {
            n,
            r,
            a,
            h,
            field: field.clone(),
        })
    }

    /// Number of local groups.
    pub fn g(&self) -> usize {
        self.n / self.r
    }

    /// Code dimension `n - g*a - h`.
    pub fn k(&self) -> usize {
        self.n - self.g() * self.a - self.h
    }

    /// Number of parity checks `g*a + h`.
    pub fn redundancy(&self) -> usize {
        self.g() * self.a + self.h
    }

    pub fn group_of(&self, coord: usize) -> usize {
        coord / self.r
    }

    pub fn group_range(&self, group: usize) -> std::ops::Range<usize> {
        group * self.r..(group + 1) * self.r
    }
}

/// Validates `(n, r, a, h)` without a field.
pub fn check_shape(n: usize, r: usize, a: usize, h: usize) -> Result<()> {
    if r == 0 || n == 0 || !n.is_multiple_of(r) {
        return Err(Error::InvalidParams(format!("r = {r} must divide n = {n}")));
    }
    if a >= r {
        return Err(Error::InvalidParams(format!(
            "need a < r, got a = {a}, r = {r}"
        )));
    }
    let g = n / r;
    if g * a + h >= n {
        return Err(Error::InvalidParams(format!(
            "dimension n - g*a - h = {n} - {} - {h} must be positive",
            g * a
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrcCode {
    params: LrcParams,
    a_blocks: Vec<Matrix>,
    b_blocks: Vec<Matrix>,
    h: Matrix,
}

impl LrcCode {
    pub fn params(&self) -> &LrcParams {
        &self.params
    }

    pub fn field(&self) -> &Field {
        &self.params.field
    }

    pub fn a_blocks(&self) -> &[Matrix] {
        &self.a_blocks
    }

    pub fn b_blocks(&self) -> &[Matrix] {
        &self.b_blocks
    }

    /// The assembled `(g*a + h) x n` parity-check matrix.
    pub fn parity_check(&self) -> &Matrix {
        &self.h
    }

    /// Rebuilds the code from a parity-check matrix with the block layout above.
    pub fn from_parity_check(params: LrcParams, h: &Matrix) -> Result<LrcCode> {
        let (n, r, a, g) = (params.n, params.r, params.a, params.g());
        if h.shape() != (params.redundancy(), n) {
            return Err(Error::ShapeMismatch(format!(
                "parity-check matrix is {}x{}, expected {}x{}",
                h.rows(),
                h.cols(),
                params.redundancy(),
                n
            )));
        }
        if h.field() != &params.field {
            return Err(Error::FieldMismatch);
        }
        for row in 0..g * a {
            let owner = row / a;
            for col in 0..n {
                if col / r != owner && !h[(row, col)].is_zero() {
                    return Err(Error::ShapeMismatch(format!(
                        "nonzero entry at ({row}, {col}) outside local block {owner}"
                    )));
                }
            }
        }
        let a_blocks = (0..g)
            .map(|i| h.submatrix(i * a..(i + 1) * a, i * r..(i + 1) * r))
            .collect();
        let b_blocks = (0..g)
            .map(|i| h.submatrix(g * a..g * a + params.h, i * r..(i + 1) * r))
            .collect();
        assemble(params, a_blocks, b_blocks)
    }

    /// Same code with heavy block `i` replaced.
    pub fn with_b_block(&self, i: usize, block: Matrix) -> Result<LrcCode> {
        let mut b = self.b_blocks.clone();
        if i >= b.len() {
            return Err(Error::InvalidParams(format!("no group {i}")));
        }
        b[i] = block;
        assemble(self.params.clone(), self.a_blocks.clone(), b)
    }
}

/// Lays out the blocks into a parity-check matrix, checking shapes and that
/// every local block is MDS.
pub fn assemble(
    params: LrcParams,
    a_blocks: Vec<Matrix>,
    b_blocks: Vec<Matrix>,
) -> Result<LrcCode> {
    let (r, a, h, g) = (params.r, params.a, params.h, params.g());
    if a_blocks.len() != g || b_blocks.len() != g {
        return Err(Error::ShapeMismatch(format!(
            "expected {g} blocks, got {} local and {} heavy",
            a_blocks.len(),
            b_blocks.len()
        )));
    }
    for (i, (ab, bb)) in a_blocks.iter().zip(&b_blocks).enumerate() {
        if ab.field() != &params.field || bb.field() != &params.field {
            return Err(Error::FieldMismatch);
        }
        if ab.shape() != (a, r) || bb.shape() != (h, r) {
            return Err(Error::ShapeMismatch(format!(
                "group {i}: local block {}x{} and heavy block {}x{}, expected {a}x{r} and {h}x{r}",
                ab.rows(),
                ab.cols(),
                bb.rows(),
                bb.cols()
            )));
        }
    }
    let mut checked: Vec<&Matrix> = Vec::new();
    for (i, ab) in a_blocks.iter().enumerate() {
        if checked.contains(&ab) {
            continue;
        }
        if let Some(columns) = first_singular_minor(ab) {
            return Err(Error::LocalNotMds { group: i, columns });
        }
        checked.push(ab);
    }
    let mut hm = Matrix::zeros(&params.field, params.redundancy(), params.n);
    for i in 0..g {
        hm.set_block(i * a, i * r, &a_blocks[i]);
        hm.set_block(g * a, i * r, &b_blocks[i]);
    }
    Ok(LrcCode {
        params,
        a_blocks,
        b_blocks,
        h: hm,
    })
}

/// Columns of the first singular `a x a` minor, if any.
fn first_singular_minor(block: &Matrix) -> Option<Vec<usize>> {
    let a = block.rows();
    Combinations::new(block.cols(), a).find(|cols| block.select_columns(cols).rank() < a)
}
