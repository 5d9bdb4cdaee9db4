use itertools::Itertools;

use super::code::NrtCode;
use super::word::NrtWord;
use super::{check_cap, pow_u128, Limits};
use crate::algebra::{FpMatrix, PrimeField};
use crate::error::{Error, Result};

/// A linear NRT isometry: a row permutation followed by an invertible upper
/// triangular block acting on each row as `v ↦ v·Mᵀ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NrtIsometry {
    perm: Vec<usize>,
    blocks: Vec<FpMatrix>,
}

impl NrtIsometry {
    /// `perm[i]` is the source row placed at position `i`.
    pub fn new(perm: Vec<usize>, blocks: Vec<FpMatrix>) -> Result<Self> {
        let n = perm.len();
        if blocks.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} blocks for {n} rows",
                blocks.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        for b in &blocks {
            if !is_invertible_upper(b) {
                return Err(Error::InvalidParameter(
                    "block is not invertible upper triangular".into(),
                ));
            }
        }
        if blocks
            .windows(2)
            .any(|w| w[0].rows() != w[1].rows() || w[0].field() != w[1].field())
        {
            return Err(Error::DimensionMismatch(
                "blocks differ in size or field".into(),
            ));
        }
        Ok(Self { perm, blocks })
    }

    pub fn identity(field: PrimeField, n: usize, s: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            blocks: vec![FpMatrix::identity(field, s); n],
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn blocks(&self) -> &[FpMatrix] {
        &self.blocks
    }

    pub fn apply(&self, w: &NrtWord) -> Result<NrtWord> {
        let n = self.perm.len();
        let s = self.blocks.first().map_or(0, FpMatrix::rows);
        let f = w.field();
        if w.n() != n || w.s() != s || self.blocks[0].field() != f {
            return Err(Error::DimensionMismatch(
                "isometry and word parameters differ".into(),
            ));
        }
        let mut out = Vec::with_capacity(n * s);
        for (i, block) in self.blocks.iter().enumerate() {
            let src = w.row(self.perm[i]);
            for j in 0..s {
                let mut acc = 0;
                for (k, &v) in src.iter().enumerate().skip(j) {
                    acc = f.add(acc, f.mul(block.get(j, k), v));
                }
                out.push(acc);
            }
        }
        NrtWord::new(f, n, s, out)
    }
}

fn is_invertible_upper(m: &FpMatrix) -> bool {
    m.rows() == m.cols()
        && (0..m.rows()).all(|i| m.get(i, i) != 0 && (0..i).all(|j| m.get(i, j) == 0))
}

/// All invertible upper triangular `s×s` matrices over the field.
pub fn triangular_group(field: PrimeField, s: usize) -> Vec<FpMatrix> {
    let q = field.modulus();
    let slots: Vec<(usize, usize)> = (0..s).flat_map(|i| (i..s).map(move |j| (i, j))).collect();
    slots
        .iter()
        .map(|&(i, j)| if i == j { 1..q } else { 0..q })
        .multi_cartesian_product()
        .map(|vals| {
            let mut m = FpMatrix::zeros(field, s, s);
            for (&(i, j), v) in slots.iter().zip(vals) {
                m.set(i, j, v);
            }
            m
        })
        .collect()
}

/// Streams the full isometry group of `M_{n,s}(F_q)`, each element once.
pub struct IsometryIter {
    inner: Box<dyn Iterator<Item = NrtIsometry>>,
}

impl Iterator for IsometryIter {
    type Item = NrtIsometry;

    fn next(&mut self) -> Option<NrtIsometry> {
        self.inner.next()
    }
}

/// Order `((q−1)^s q^{s(s−1)/2})^n · n!`, saturating.
fn group_order(q: u128, n: usize, s: usize) -> u128 {
    let tri = pow_u128(q - 1, s).saturating_mul(pow_u128(q, s * (s - 1) / 2));
    let fact = (1..=n as u128).fold(1u128, |a, b| a.saturating_mul(b));
    pow_u128(tri, n).saturating_mul(fact)
}

pub fn isometry_group(
    field: PrimeField,
    n: usize,
    s: usize,
    limits: &Limits,
) -> Result<IsometryIter> {
    if n == 0 || s == 0 {
        return Err(Error::InvalidParameter("n and s must be positive".into()));
    }
    check_cap(
        "isometry enumeration",
        group_order(field.modulus() as u128, n, s),
        limits.max_isometries,
    )?;
    let tri = triangular_group(field, s);
    let inner = (0..n).permutations(n).flat_map(move |perm| {
        let tri = tri.clone();
        (0..n)
            .map(|_| 0..tri.len())
            .multi_cartesian_product()
            .map(move |idx| NrtIsometry {
                perm: perm.clone(),
                blocks: idx.iter().map(|&t| tri[t].clone()).collect(),
            })
    });
    Ok(IsometryIter {
        inner: Box::new(inner),
    })
}

/// Whether some isometry maps `a` onto `b`. Codes with different shape
/// distributions are rejected before the group search.
pub fn codes_equivalent(a: &NrtCode, b: &NrtCode, limits: &Limits) -> Result<bool> {
    if a.field() != b.field() || a.n() != b.n() || a.s() != b.s() {
        return Err(Error::DimensionMismatch(
            "codes live in different spaces".into(),
        ));
    }
    if a == b {
        return Ok(true);
    }
    if a.k() != b.k() || a.shape_distribution(limits)? != b.shape_distribution(limits)? {
        return Ok(false);
    }
    for sigma in isometry_group(a.field(), a.n(), a.s(), limits)? {
        if &a.map_generators(|w| sigma.apply(w).expect("matching parameters")) == b {
            return Ok(true);
        }
    }
    Ok(false)
}
