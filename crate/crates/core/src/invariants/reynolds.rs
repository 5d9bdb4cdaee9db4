use num_bigint::BigInt;

use super::group::MatrixGroup;
use super::molien::molien_series;
use crate::algebra::multipoly::{jacobian_matrix, monomials_of_degree, poly_det};
use crate::algebra::{Field, Matrix, Monomial, MultiPoly, QuadElement, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReynoldsMode {
    Sum,
    Average,
}

fn check_dim(g: &MatrixGroup, f: &MultiPoly) -> Result<()> {
    if f.nvars() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} variables for a group of degree {}",
            f.nvars(),
            g.dim()
        )));
    }
    Ok(())
}

/// `Σ_{A∈G} f(AZ)`, optionally divided by `|G|`.
pub fn reynolds(g: &MatrixGroup, f: &MultiPoly, mode: ReynoldsMode) -> Result<MultiPoly> {
    check_dim(g, f)?;
    let mut acc = MultiPoly::zero(f.nvars());
    for a in g.elements() {
        acc = acc.add(&f.substitute_linear(a)?);
    }
    Ok(match mode {
        ReynoldsMode::Sum => acc,
        ReynoldsMode::Average => acc.scale(&QuadElement::rational(Rational::new(
            1.into(),
            BigInt::from(g.order()),
        ))),
    })
}

pub fn is_invariant(g: &MatrixGroup, f: &MultiPoly) -> Result<bool> {
    check_dim(g, f)?;
    for a in g.elements() {
        if &f.substitute_linear(a)? != f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficient rows of `polys` over `basis`, reduced; zero rows dropped.
pub(crate) fn reduced_span(polys: &[MultiPoly], basis: &[Monomial]) -> Matrix<QuadElement> {
    let rows: Vec<Vec<QuadElement>> = polys.iter().map(|p| p.coefficient_vector(basis)).collect();
    if rows.is_empty() {
        return Matrix::zeros(0, basis.len());
    }
    Matrix::from_rows(rows).expect("rectangular").rref().0
}

pub(crate) fn row_to_poly(row: &[QuadElement], basis: &[Monomial], nvars: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    for (m, c) in basis.iter().zip(row) {
        p.add_term(m.clone(), c.clone());
    }
    p
}

/// Basis of the degree-`d` invariants: Reynolds averages of all monomials,
/// row reduced. The size is checked against the Molien coefficient.
pub fn invariant_space_basis(g: &MatrixGroup, d: u32) -> Result<Vec<MultiPoly>> {
    let n = g.dim();
    let monos = monomials_of_degree(n, d);
    let averages: Vec<MultiPoly> = monos
        .iter()
        .map(|m| {
            reynolds(
                g,
                &MultiPoly::monomial(n, m.0.clone(), QuadElement::one()),
                ReynoldsMode::Average,
            )
        })
        .collect::<Result<_>>()?;
    let red = reduced_span(&averages, &monos);
    let expected = molien_series(g, d as usize)?.coeffs[d as usize];
    if red.rows() as u64 != expected {
        return Err(Error::PropertyViolation(format!(
            "degree {d}: {} independent invariants but Molien predicts {expected}",
            red.rows()
        )));
    }
    Ok((0..red.rows())
        .map(|r| row_to_poly(red.row(r), &monos, n))
        .collect())
}

/// Deterministic evaluation points: the `set`-th point has coordinates
/// taken from consecutive primes, shifted by `set`.
fn sample_point(set: usize, nvars: usize) -> Vec<QuadElement> {
    const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    (0..nvars)
        .map(|i| {
            if set == 0 {
                QuadElement::int(i as i64 + 1)
            } else {
                QuadElement::int(PRIMES[(i + set - 1) % PRIMES.len()] * set as i64 + i as i64)
            }
        })
        .collect()
}

const POINT_SETS: usize = 5;

/// Whether the polynomials are algebraically independent: the Jacobian has
/// full row rank. Tries numeric points first and falls back to symbolic
/// minors before declaring dependence.
pub fn jacobian_independent(fs: &[MultiPoly]) -> Result<bool> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    let n = first.nvars();
    let m = fs.len();
    if m > n {
        return Ok(false);
    }
    let jac = jacobian_matrix(fs)?;
    for set in 0..POINT_SETS {
        let pt = sample_point(set, n);
        let num = Matrix::from_fn(m, n, |r, c| jac[r][c].eval(&pt));
        if num.rank() == m {
            return Ok(true);
        }
    }
    Ok(jacobian_minors_nonzero(&jac, m, n))
}

fn jacobian_minors_nonzero(jac: &[Vec<MultiPoly>], m: usize, n: usize) -> bool {
    use itertools::Itertools;
    (0..n).combinations(m).any(|cols| {
        let sub: Vec<Vec<MultiPoly>> = jac
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        !poly_det(&sub, n).is_zero()
    })
}
