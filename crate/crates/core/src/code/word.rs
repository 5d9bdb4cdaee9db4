use std::fmt;

use serde::Serialize;

use crate::algebra::{FieldElement, PrimeField};
use crate::error::{Error, Result};

/// An n×s matrix over GF(p), stored row-major (the flattening used for
/// generator matrices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NrtWord {
    field: PrimeField,
    n: usize,
    s: usize,
    entries: Vec<u32>,
}

/// Row-weight counts `e_1..e_s` plus the number `e_0` of zero rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShapeVector {
    pub e0: u32,
    pub e: Vec<u32>,
}

impl ShapeVector {
    /// Exponent vector `(e_0, e_1, ..., e_s)` for the enumerator monomial.
    pub fn exponents(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.e.len() + 1);
        v.push(self.e0);
        v.extend_from_slice(&self.e);
        v
    }

    /// NRT weight `Σ j·e_j`.
    pub fn weight(&self) -> u64 {
        self.e
            .iter()
            .enumerate()
            .map(|(j, &c)| (j as u64 + 1) * c as u64)
            .sum()
    }
}

/// NRT weight of a single row: the 1-based index of its last nonzero entry.
pub fn row_weight(row: &[u32]) -> usize {
    row.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)
}

impl NrtWord {
    pub fn new(field: PrimeField, n: usize, s: usize, entries: Vec<u32>) -> Result<Self> {
        if n == 0 || s == 0 {
            return Err(Error::InvalidParameter(
                "word dimensions must be positive".into(),
            ));
        }
        if entries.len() != n * s {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {n}x{s} word",
                entries.len()
            )));
        }
        let p = field.modulus();
        if let Some(&bad) = entries.iter().find(|&&x| x >= p) {
            return Err(Error::InvalidParameter(format!(
                "entry {bad} not in [0,{p})"
            )));
        }
        Ok(Self {
            field,
            n,
            s,
            entries,
        })
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let s = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != s) {
            return Err(Error::DimensionMismatch("ragged word rows".into()));
        }
        Self::new(field, n, s, rows.concat())
    }

    pub fn zero(field: PrimeField, n: usize, s: usize) -> Self {
        Self {
            field,
            n,
            s,
            entries: vec![0; n * s],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.s..(i + 1) * self.s]
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::new(self.row(i)[j] as u64, self.field.modulus()).expect("prime modulus")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// ρ(v) = Σ_i max{j : v_ij ≠ 0}.
    pub fn weight(&self) -> u64 {
        (0..self.n).map(|i| row_weight(self.row(i)) as u64).sum()
    }

    pub fn shape(&self) -> ShapeVector {
        let mut e = vec![0u32; self.s];
        for i in 0..self.n {
            let w = row_weight(self.row(i));
            if w > 0 {
                e[w - 1] += 1;
            }
        }
        let e0 = self.n as u32 - e.iter().sum::<u32>();
        ShapeVector { e0, e }
    }

    /// ⟨u, v⟩_N = Σ_i Σ_j u_ij · v_{i,s+1−j}.
    pub fn inner(&self, other: &Self) -> Result<FieldElement> {
        if self.field != other.field || self.n != other.n || self.s != other.s {
            return Err(Error::DimensionMismatch(
                "inner product of words with different parameters".into(),
            ));
        }
        let v = nrt_pairing(self.field, self.s, &self.entries, &other.entries);
        FieldElement::new(v as u64, self.field.modulus())
    }
}

/// The NRT pairing on flattened vectors of width-`s` blocks.
pub(crate) fn nrt_pairing(f: PrimeField, s: usize, u: &[u32], v: &[u32]) -> u32 {
    let mut acc = 0;
    for (bu, bv) in u.chunks(s).zip(v.chunks(s)) {
        for j in 0..s {
            acc = f.add(acc, f.mul(bu[j], bv[s - 1 - j]));
        }
    }
    acc
}

impl fmt::Display for NrtWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
