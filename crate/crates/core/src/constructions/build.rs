use super::flip::{flip_vector, hamming_inner};
use crate::algebra::{FpMatrix, PrimeField};
use crate::code::NrtCode;
use crate::error::{Error, Result};

fn require_hamming_input(c: &NrtCode) -> Result<()> {
    if c.n() != 1 {
        return Err(Error::InvalidParameter(format!(
            "expected a code with n = 1, got n = {}",
            c.n()
        )));
    }
    Ok(())
}

/// Hamming dual of a code viewed as a subspace of `F_q^{ns}`, with the same
/// `(n, s)` layout.
pub fn hamming_dual(c: &NrtCode) -> NrtCode {
    if c.k() == 0 {
        return NrtCode::full(c.field(), c.n(), c.s());
    }
    NrtCode::from_flat_rows(
        c.field(),
        c.n(),
        c.s(),
        &c.generator().nullspace().row_vecs(),
    )
    .expect("valid rows")
}

pub fn is_hamming_self_orthogonal(c: &NrtCode) -> bool {
    let g = c.generator();
    (0..c.k()).all(|a| (a..c.k()).all(|b| hamming_inner(c.field(), g.row(a), g.row(b)) == 0))
}

pub fn is_hamming_self_dual(c: &NrtCode) -> bool {
    2 * c.k() == c.length() && is_hamming_self_orthogonal(c)
}

fn verify(code: NrtCode, k: usize, self_dual: bool, what: &str) -> Result<NrtCode> {
    if code.k() != k {
        return Err(Error::PropertyViolation(format!(
            "{what}: dimension {} instead of {k}",
            code.k()
        )));
    }
    let ok = if self_dual {
        code.is_self_dual()
    } else {
        code.is_self_orthogonal()
    };
    if !ok {
        let kind = if self_dual {
            "self-dual"
        } else {
            "self-orthogonal"
        };
        return Err(Error::PropertyViolation(format!(
            "{what}: output is not {kind}"
        )));
    }
    Ok(code)
}

fn concat(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().chain(b).copied().collect()
}

/// `{(v, flip(u)) : v ∈ C, u ∈ C⊥}` with the Hamming dual, in `M_{1,2s}`.
pub fn construct_co(c: &NrtCode) -> Result<NrtCode> {
    require_hamming_input(c)?;
    let s = c.s();
    let zero = vec![0; s];
    let mut rows: Vec<Vec<u32>> = c
        .generator()
        .row_vecs()
        .iter()
        .map(|v| concat(v, &zero))
        .collect();
    let perp = hamming_dual(c);
    rows.extend(
        perp.generator()
            .row_vecs()
            .iter()
            .map(|u| concat(&zero, &flip_vector(u))),
    );
    let out = NrtCode::from_flat_rows(c.field(), 1, 2 * s, &rows)?;
    verify(out, c.k() + perp.k(), false, "C_o")
}

/// `{(v, flip(v)) : v ∈ C}` for a Hamming self-orthogonal `C`.
pub fn construct_cort(c: &NrtCode) -> Result<NrtCode> {
    require_hamming_input(c)?;
    if !is_hamming_self_orthogonal(c) {
        return Err(Error::NotSelfOrthogonal);
    }
    let rows: Vec<Vec<u32>> = c
        .generator()
        .row_vecs()
        .iter()
        .map(|v| concat(v, &flip_vector(v)))
        .collect();
    let out = NrtCode::from_flat_rows(c.field(), 1, 2 * c.s(), &rows)?;
    verify(out, c.k(), false, "C_ort")
}

/// `{(v, flip(v′)) : v, v′ ∈ C}` for a Hamming self-dual `C`.
pub fn construct_cn(c: &NrtCode) -> Result<NrtCode> {
    require_hamming_input(c)?;
    if !is_hamming_self_dual(c) {
        return Err(Error::NotSelfDual);
    }
    let zero = vec![0; c.s()];
    let gens = c.generator().row_vecs();
    let mut rows: Vec<Vec<u32>> = gens.iter().map(|v| concat(v, &zero)).collect();
    rows.extend(gens.iter().map(|v| concat(&zero, &flip_vector(v))));
    let out = NrtCode::from_flat_rows(c.field(), 1, 2 * c.s(), &rows)?;
    verify(out, 2 * c.k(), true, "C_N")
}

fn require_self_orthogonal(codes: &[&NrtCode]) -> Result<()> {
    if codes.iter().all(|c| c.is_self_orthogonal()) {
        Ok(())
    } else {
        Err(Error::NotSelfOrthogonal)
    }
}

/// Generator `[G_1¹|0|…|G_n¹|0 ; 0|G_1²|…|0|G_n²]`, a code in `M_{2n,s}`.
pub fn construct_interleave(a: &NrtCode, b: &NrtCode) -> Result<NrtCode> {
    if a.field() != b.field() || a.n() != b.n() || a.s() != b.s() {
        return Err(Error::DimensionMismatch(
            "interleaved codes must share q, n and s".into(),
        ));
    }
    require_self_orthogonal(&[a, b])?;
    let (n, s) = (a.n(), a.s());
    let zero = vec![0; s];
    let mut rows = Vec::with_capacity(a.k() + b.k());
    for (code, first) in [(a, true), (b, false)] {
        for r in code.generator().row_vecs() {
            let row: Vec<u32> = r
                .chunks(s)
                .flat_map(|blk| {
                    if first {
                        concat(blk, &zero)
                    } else {
                        concat(&zero, blk)
                    }
                })
                .collect();
            rows.push(row);
        }
    }
    let out = NrtCode::from_flat_rows(a.field(), 2 * n, s, &rows)?;
    let self_dual = a.is_self_dual() && b.is_self_dual();
    verify(out, a.k() + b.k(), self_dual, "interleave")
}

/// Block-diagonal concatenation with every block right-padded by zeros to the
/// largest width. The output is re-checked, since padding a block of width
/// strictly between half the maximum and the maximum changes the pairing.
pub fn construct_padded_concat(codes: &[NrtCode]) -> Result<NrtCode> {
    let first = codes
        .first()
        .ok_or_else(|| Error::InvalidParameter("no codes to concatenate".into()))?;
    let field = first.field();
    if codes.iter().any(|c| c.field() != field) {
        return Err(Error::DimensionMismatch(
            "codes over different fields".into(),
        ));
    }
    require_self_orthogonal(&codes.iter().collect::<Vec<_>>())?;
    let s_max = codes.iter().map(NrtCode::s).max().expect("nonempty");
    let n_max = codes.iter().map(NrtCode::n).max().expect("nonempty");
    let k: usize = codes.iter().map(NrtCode::k).sum();
    if k > n_max * s_max {
        return Err(Error::InvalidParameter(format!(
            "total dimension {k} exceeds {n_max}·{s_max}"
        )));
    }
    let n_total: usize = codes.iter().map(NrtCode::n).sum();
    let mut rows = Vec::with_capacity(k);
    let mut offset = 0;
    for c in codes {
        for r in c.generator().row_vecs() {
            let mut row = vec![0; n_total * s_max];
            for (i, blk) in r.chunks(c.s()).enumerate() {
                let start = (offset + i) * s_max;
                row[start..start + blk.len()].copy_from_slice(blk);
            }
            rows.push(row);
        }
        offset += c.n();
    }
    let out = NrtCode::from_flat_rows(field, n_total, s_max, &rows)?;
    let self_dual = 2 * k == n_total * s_max;
    verify(out, k, self_dual, "padded concatenation")
}

/// The extended binary Hamming code `[8,4,4]`, as a code in `M_{1,8}(F_2)`.
pub fn extended_hamming_8_4() -> NrtCode {
    let rows = [
        [1, 0, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 0, 1],
        [0, 0, 0, 1, 1, 1, 1, 0],
    ];
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    NrtCode::from_flat_rows(PrimeField::new(2).expect("prime"), 1, 8, &rows).expect("valid rows")
}

/// A matrix given by integer rows, reduced mod p.
pub(crate) fn int_matrix(field: PrimeField, rows: &[Vec<i64>]) -> FpMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    let reduced: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| field.reduce(x)).collect())
        .collect();
    FpMatrix::from_rows(field, cols, &reduced).expect("rectangular rows")
}
