//! Shape enumerators and their MacWilliams transform.
//!
//! The shape enumerator of a code in `M_{n,s}(F_q)` is the homogeneous
//! polynomial `Σ_{c∈C} z0^{e0(c)} z1^{e1(c)} ⋯ zs^{es(c)}` of degree `n`. The
//! enumerator of the dual is `H(ΘZ)/|C|` for an explicit integer matrix Θ.

use std::fmt;

use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::algebra::matrix::det_poly;
use crate::algebra::{Field, Matrix, Monomial, MultiPoly, QuadElement, Rational, UniPoly};
use crate::code::{Limits, NrtCode};
use crate::error::{Error, Result};

/// Homogeneous polynomial in `z0..zs` with nonnegative integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeEnumerator {
    s: usize,
    poly: MultiPoly,
}

/// Integer coefficient of a polynomial term, or the matching error.
fn integer_coefficient(c: &QuadElement) -> Result<BigInt> {
    match c.as_rational() {
        Some(r) if r.is_integer() => Ok(r.to_integer()),
        _ => Err(Error::NonIntegerCoefficient(c.to_string())),
    }
}

impl ShapeEnumerator {
    /// Wraps a polynomial after checking it could be an enumerator.
    pub fn from_poly(s: usize, poly: MultiPoly) -> Result<Self> {
        if poly.nvars() != s + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} variables for s = {s}",
                poly.nvars()
            )));
        }
        if poly.is_zero() || poly.homogeneous_degree().is_none() {
            return Err(Error::InvalidParameter(
                "enumerator must be a nonzero homogeneous polynomial".into(),
            ));
        }
        for (_, c) in poly.terms() {
            if integer_coefficient(c)? < BigInt::from(0) {
                return Err(Error::NegativeCoefficient(c.to_string()));
            }
        }
        Ok(Self { s, poly })
    }

    pub fn parse(s: usize, text: &str) -> Result<Self> {
        Self::from_poly(s, MultiPoly::parse_with_vars(text, s + 1)?)
    }

    pub fn of_code(code: &NrtCode, limits: &Limits) -> Result<Self> {
        let s = code.s();
        let mut poly = MultiPoly::zero(s + 1);
        for (shape, count) in code.shape_distribution(limits)? {
            poly.add_term(Monomial(shape.exponents()), QuadElement::int(count as i64));
        }
        Ok(Self { s, poly })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of rows `n`, the homogeneous degree.
    pub fn n(&self) -> u32 {
        self.poly
            .homogeneous_degree()
            .expect("homogeneous by construction")
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// Number of codewords counted.
    pub fn total(&self) -> BigInt {
        self.coefficients().into_iter().map(|(_, c)| c).sum()
    }

    /// `(exponent vector, count)` pairs in descending monomial order.
    pub fn coefficients(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.poly
            .terms()
            .map(|(m, c)| {
                (
                    m.0.clone(),
                    integer_coefficient(c).expect("integer by construction"),
                )
            })
            .collect()
    }
}

impl fmt::Display for ShapeEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl Serialize for ShapeEnumerator {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            shape: Vec<u32>,
            count: String,
        }
        let terms: Vec<Term> = self
            .coefficients()
            .into_iter()
            .map(|(shape, c)| Term {
                shape,
                count: c.to_string(),
            })
            .collect();
        let mut st = ser.serialize_struct("ShapeEnumerator", 3)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("polynomial", &self.poly.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// The `(s+1)×(s+1)` integer matrix of the MacWilliams substitution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaMatrix {
    pub s: usize,
    pub q: u32,
    pub entries: Vec<Vec<i64>>,
}

impl ThetaMatrix {
    pub fn to_quad(&self) -> Matrix<QuadElement> {
        Matrix::from_ints(&self.entries)
    }
}

impl fmt::Display for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_quad().fmt(f)
    }
}

fn checked_pow(q: i64, e: usize) -> Result<i64> {
    u32::try_from(e)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .ok_or_else(|| Error::InvalidParameter(format!("{q}^{e} overflows")))
}

/// Entry `(l, k)` is `1` for `k = 0`, `q^{k−1}(q−1)` for `0 < k ≤ s−l`,
/// `−q^{k−1}` on the antidiagonal `l + k = s+1`, and `0` below it.
pub fn theta_matrix(s: usize, q: u32) -> Result<ThetaMatrix> {
    if s == 0 || q < 2 {
        return Err(Error::InvalidParameter(format!(
            "theta needs s >= 1 and q >= 2, got s = {s}, q = {q}"
        )));
    }
    let qi = q as i64;
    let mut entries = vec![vec![0i64; s + 1]; s + 1];
    for (l, row) in entries.iter_mut().enumerate() {
        for (k, e) in row.iter_mut().enumerate() {
            *e = if k == 0 {
                1
            } else if k + l <= s {
                checked_pow(qi, k - 1)?
                    .checked_mul(qi - 1)
                    .ok_or_else(|| Error::InvalidParameter("overflow".into()))?
            } else if k + l == s + 1 {
                -checked_pow(qi, k - 1)?
            } else {
                0
            };
        }
    }
    Ok(ThetaMatrix { s, q, entries })
}

/// `H_{C⊥}(Z) = H_C(ΘZ) / |C|`.
pub fn macwilliams_transform(
    h: &ShapeEnumerator,
    q: u32,
    code_size: &BigInt,
) -> Result<ShapeEnumerator> {
    if *code_size <= BigInt::from(0) {
        return Err(Error::InvalidParameter(format!(
            "code size must be positive, got {code_size}"
        )));
    }
    let theta = theta_matrix(h.s, q)?;
    let scale = QuadElement::rational(Rational::new(BigInt::from(1), code_size.clone()));
    let poly = h.poly.substitute_linear(&theta.to_quad())?.scale(&scale);
    ShapeEnumerator::from_poly(h.s, poly)
}

/// Eigenvalue data of the binary Θ_s: `Θ_s` has eigenvalues `±2^{s/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSpectrum {
    pub r1: usize,
    pub r2: usize,
    pub beta1: QuadElement,
    pub beta2: QuadElement,
}

/// Checked algebraic facts about the binary Θ_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    pub s: usize,
    pub trace: QuadElement,
    pub det: QuadElement,
    /// `det(λI − Θ_s)`, lowest coefficient first.
    pub char_poly: UniPoly<QuadElement>,
    /// `λ² − 2^s`.
    pub min_poly: UniPoly<QuadElement>,
    pub spectrum: ThetaSpectrum,
}

fn violation(what: &str, got: impl fmt::Display, want: impl fmt::Display) -> Error {
    Error::PropertyViolation(format!("{what}: got {got}, expected {want}"))
}

/// Strips factors `(λ − root)` and returns how many there were.
fn root_multiplicity(p: &mut UniPoly<QuadElement>, root: &QuadElement) -> usize {
    let lin = UniPoly::new(vec![root.negate(), QuadElement::one()]);
    let mut k = 0;
    loop {
        let (q, r) = p.div_rem(&lin).expect("nonzero divisor");
        if !r.is_zero() || p.degree() == Some(0) {
            return k;
        }
        *p = q;
        k += 1;
    }
}

/// Verifies square, trace, determinant, characteristic and minimal
/// polynomials of the binary Θ_s against their closed forms.
pub fn verify_theta_properties(s: usize) -> Result<ThetaReport> {
    let theta = theta_matrix(s, 2)?.to_quad();
    let dim = s + 1;
    let two_s = QuadElement::int(2).pow(s as u32);
    let square = theta.mul(&theta)?;
    if square != Matrix::identity(dim).scale(&two_s) {
        return Err(violation(
            "square",
            format!("\n{square}"),
            format!("{two_s}·I"),
        ));
    }
    let beta = QuadElement::pow_sqrt2(s as i64);
    let trace = theta.trace();
    let want_trace = if s.is_multiple_of(2) {
        beta.clone()
    } else {
        QuadElement::zero()
    };
    if trace != want_trace {
        return Err(violation("trace", &trace, &want_trace));
    }
    let det = theta.det()?;
    let sign_exp = if s.is_multiple_of(2) { s / 2 } else { s.div_ceil(2) };
    let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
    let want_det = QuadElement::int(sign).times(&QuadElement::int(2).pow((s * (s + 1) / 2) as u32));
    if det != want_det {
        return Err(violation("determinant", &det, &want_det));
    }
    // det(λI − Θ) is det(I − λΘ) with its coefficients reversed
    let reversed = det_poly(&theta)?;
    let mut coeffs: Vec<QuadElement> = (0..=dim).map(|i| reversed.coeff(i)).collect();
    coeffs.reverse();
    let char_poly = UniPoly::new(coeffs);
    let mut rest = char_poly.clone();
    let r1 = root_multiplicity(&mut rest, &beta);
    let r2 = root_multiplicity(&mut rest, &beta.negate());
    let (want1, want2) = if s.is_multiple_of(2) {
        ((s + 2) / 2, s / 2)
    } else {
        (s.div_ceil(2), s.div_ceil(2))
    };
    if rest.degree() != Some(0) || (r1, r2) != (want1, want2) {
        return Err(violation(
            "eigenvalue multiplicities",
            format!("({r1}, {r2})"),
            format!("({want1}, {want2})"),
        ));
    }
    let min_poly = UniPoly::new(vec![
        two_s.negate(),
        QuadElement::zero(),
        QuadElement::one(),
    ]);
    let beta_i = Matrix::identity(dim).scale(&beta);
    if theta == beta_i || theta == beta_i.negate() {
        return Err(Error::PropertyViolation(
            "minimal polynomial has degree one".into(),
        ));
    }
    Ok(ThetaReport {
        s,
        trace,
        det,
        char_poly,
        min_poly,
        spectrum: ThetaSpectrum {
            r1,
            r2,
            beta1: beta.clone(),
            beta2: beta.negate(),
        },
    })
}

/// `T = Θ_s / 2^{s/2}` for `q = 2`, an involution over Q(√2).
pub fn normalized_t(s: usize) -> Result<Matrix<QuadElement>> {
    Ok(theta_matrix(s, 2)?
        .to_quad()
        .scale(&QuadElement::pow_sqrt2(-(s as i64))))
}
