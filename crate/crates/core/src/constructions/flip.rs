use crate::algebra::FpMatrix;
use crate::code::NrtCode;
use crate::error::{Error, Result};

/// Coordinate reversal `(v_1,…,v_s) ↦ (v_s,…,v_1)`.
pub fn flip_vector(v: &[u32]) -> Vec<u32> {
    v.iter().rev().copied().collect()
}

/// Reverses every row.
pub fn flip_matrix(a: &FpMatrix) -> FpMatrix {
    let rows: Vec<Vec<u32>> = (0..a.rows()).map(|r| flip_vector(a.row(r))).collect();
    FpMatrix::from_rows(a.field(), a.cols(), &rows).expect("same width")
}

/// `A^o`, the transpose of the row-flipped matrix.
pub fn flip_transpose(a: &FpMatrix) -> FpMatrix {
    flip_matrix(a).transpose()
}

/// Hamming inner product `Σ u_i v_i`.
pub fn hamming_inner(field: crate::algebra::PrimeField, u: &[u32], v: &[u32]) -> u32 {
    u.iter()
        .zip(v)
        .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

/// A `k × ns` generator split into `n` blocks of width `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockGenerator {
    n: usize,
    s: usize,
    matrix: FpMatrix,
}

impl BlockGenerator {
    pub fn new(n: usize, s: usize, matrix: FpMatrix) -> Result<Self> {
        if n == 0 || s == 0 {
            return Err(Error::InvalidParameter("n and s must be positive".into()));
        }
        if matrix.cols() != n * s {
            return Err(Error::DimensionMismatch(format!(
                "{} columns for {n} blocks of width {s}",
                matrix.cols()
            )));
        }
        Ok(Self { n, s, matrix })
    }

    pub fn from_blocks(blocks: &[FpMatrix]) -> Result<Self> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::InvalidParameter("no blocks".into()))?;
        let (k, s, field) = (first.rows(), first.cols(), first.field());
        if blocks
            .iter()
            .any(|b| b.rows() != k || b.cols() != s || b.field() != field)
        {
            return Err(Error::DimensionMismatch(
                "blocks differ in shape or field".into(),
            ));
        }
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|r| blocks.iter().flat_map(|b| b.row(r).to_vec()).collect())
            .collect();
        Self::new(
            blocks.len(),
            s,
            FpMatrix::from_rows(field, blocks.len() * s, &rows)?,
        )
    }

    /// The canonical generator of a code.
    pub fn of_code(code: &NrtCode) -> Self {
        Self {
            n: code.n(),
            s: code.s(),
            matrix: code.generator().clone(),
        }
    }

    pub fn k(&self) -> usize {
        self.matrix.rows()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    /// Block `i` (0-based) as a `k × s` matrix.
    pub fn block(&self, i: usize) -> FpMatrix {
        let rows: Vec<Vec<u32>> = (0..self.k())
            .map(|r| self.matrix.row(r)[i * self.s..(i + 1) * self.s].to_vec())
            .collect();
        FpMatrix::from_rows(self.matrix.field(), self.s, &rows).expect("block width")
    }

    pub fn blocks(&self) -> Vec<FpMatrix> {
        (0..self.n).map(|i| self.block(i)).collect()
    }

    pub fn to_code(&self) -> Result<NrtCode> {
        NrtCode::from_flat_rows(self.matrix.field(), self.n, self.s, &self.matrix.row_vecs())
    }

    /// `OFlip(G) = [Flip(G_1)|…|Flip(G_n)]`.
    pub fn ordered_flip(&self) -> Self {
        let rows: Vec<Vec<u32>> = (0..self.k())
            .map(|r| {
                self.matrix
                    .row(r)
                    .chunks(self.s)
                    .flat_map(flip_vector)
                    .collect()
            })
            .collect();
        let matrix =
            FpMatrix::from_rows(self.matrix.field(), self.n * self.s, &rows).expect("same width");
        Self {
            n: self.n,
            s: self.s,
            matrix,
        }
    }

    /// `G^od`, the `ns × k` transpose of the ordered flip.
    pub fn od_transpose(&self) -> FpMatrix {
        self.ordered_flip().matrix.transpose()
    }

    /// `G · G^od`, the Gram matrix of the NRT pairing on the rows.
    pub fn gram(&self) -> FpMatrix {
        self.matrix
            .mul(&self.od_transpose())
            .expect("k×ns times ns×k")
    }

    /// Self-orthogonality of the row space via `G · G^od = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.gram().is_zero()
    }
}
