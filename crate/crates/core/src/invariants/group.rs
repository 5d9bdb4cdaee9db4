use std::collections::{HashSet, VecDeque};

use crate::algebra::{Field, Matrix, QuadElement};
use crate::error::{Error, Result};
use crate::shape::normalized_t;

pub type QuadMatrix = Matrix<QuadElement>;

/// A finite group of invertible matrices over Q(√2), stored element-wise.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    elements: Vec<QuadMatrix>,
    generators: Vec<QuadMatrix>,
}

impl MatrixGroup {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in discovery order; the identity comes first.
    pub fn elements(&self) -> &[QuadMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[QuadMatrix] {
        &self.generators
    }

    pub fn contains(&self, m: &QuadMatrix) -> bool {
        self.elements.contains(m)
    }
}

/// Closure of the generators under multiplication, breadth first. Fails once
/// more than `cap` elements have been found.
pub fn group_closure(generators: &[QuadMatrix], cap: usize) -> Result<MatrixGroup> {
    let dim = generators.first().map_or(0, Matrix::rows);
    if dim == 0 {
        return Err(Error::InvalidParameter(
            "at least one nonempty generator is required".into(),
        ));
    }
    if generators.iter().any(|g| !g.is_square() || g.rows() != dim) {
        return Err(Error::DimensionMismatch(
            "generators must be square of equal size".into(),
        ));
    }
    let identity = QuadMatrix::identity(dim);
    let mut seen: HashSet<QuadMatrix> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.mul(g)?;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "group closure",
                        needed: seen.len() as u128,
                        cap: cap as u128,
                    });
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(MatrixGroup {
        dim,
        elements,
        generators: generators.to_vec(),
    })
}

pub(crate) const GROUP_CAP: usize = 100_000;

fn diag(entries: &[i64]) -> QuadMatrix {
    QuadMatrix::from_fn(entries.len(), entries.len(), |r, c| {
        if r == c {
            QuadElement::int(entries[r])
        } else {
            QuadElement::zero()
        }
    })
}

/// `diag(1, −1, 1)`: flips the sign of z1.
pub fn sign_z1() -> QuadMatrix {
    diag(&[1, -1, 1])
}

/// `diag(1, −1, −1)`: flips the signs of z1 and z2.
pub fn sign_z1_z2() -> QuadMatrix {
    diag(&[1, -1, -1])
}

/// `⟨T⟩` for `s = 2`, the symmetry of every binary self-dual enumerator.
pub fn self_dual_group() -> Result<MatrixGroup> {
    group_closure(&[normalized_t(2)?], GROUP_CAP)
}

/// `⟨T, diag(1,−1,1)⟩`, adding even total weight.
pub fn even_weight_group() -> Result<MatrixGroup> {
    group_closure(&[normalized_t(2)?, sign_z1()], GROUP_CAP)
}

/// `⟨T, diag(1,−1,−1)⟩`, adding even counts of weight-1 and weight-2 rows.
pub fn even_rows_group() -> Result<MatrixGroup> {
    group_closure(&[normalized_t(2)?, sign_z1_z2()], GROUP_CAP)
}

/// `{I, T}` for any `s`.
pub fn t_group(s: usize) -> Result<MatrixGroup> {
    group_closure(&[normalized_t(s)?], GROUP_CAP)
}

/// `{±I, ±T}` for any `s`.
pub fn signed_t_group(s: usize) -> Result<MatrixGroup> {
    group_closure(
        &[normalized_t(s)?, QuadMatrix::identity(s + 1).negate()],
        GROUP_CAP,
    )
}

/// The group whose invariants contain every binary self-dual enumerator
/// with row width `s`: `{I, T}` for even `s`, `{±I, ±T}` for odd `s`.
pub fn general_self_dual_group(s: usize) -> Result<MatrixGroup> {
    if s.is_multiple_of(2) {
        t_group(s)
    } else {
        signed_t_group(s)
    }
}
