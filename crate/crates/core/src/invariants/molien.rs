use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;

use super::group::MatrixGroup;
use crate::algebra::matrix::det_poly;
use crate::algebra::{Field, QuadElement, Rational, RationalFunction, UniPoly};
use crate::error::{Error, Result};

/// Molien series as an exact rational function plus its leading coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienSeries {
    pub closed: RationalFunction<Rational>,
    pub coeffs: Vec<u64>,
}

impl MolienSeries {
    pub fn coeff(&self, d: usize) -> Option<u64> {
        self.coeffs.get(d).copied()
    }
}

impl Serialize for MolienSeries {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("MolienSeries", 4)?;
        st.serialize_field("series", &self.closed.pretty())?;
        st.serialize_field("numerator", &self.closed.num().format("λ", false))?;
        st.serialize_field("denominator", &self.closed.den().format("λ", false))?;
        st.serialize_field("coefficients", &self.coeffs)?;
        st.end()
    }
}

/// `(1/|G|) Σ_A 1/det(I − λA)` as a normalized rational function over Q.
pub fn molien_function(g: &MatrixGroup) -> Result<RationalFunction<Rational>> {
    let mut counts: HashMap<UniPoly<QuadElement>, usize> = HashMap::new();
    for a in g.elements() {
        *counts.entry(det_poly(a)?).or_insert(0) += 1;
    }
    let mut sum = RationalFunction::<QuadElement>::zero();
    for (den, count) in counts {
        let term = RationalFunction::new(UniPoly::constant(QuadElement::int(count as i64)), den)?;
        sum = sum.add(&term);
    }
    let sum = sum.scale(&QuadElement::rational(Rational::new(
        1.into(),
        BigInt::from(g.order()),
    )));
    sum.to_rational().ok_or_else(|| {
        Error::NonIntegerCoefficient(format!("Molien series has irrational part: {sum}"))
    })
}

fn to_count(c: &Rational) -> Result<u64> {
    if !c.is_integer() {
        return Err(Error::NonIntegerCoefficient(c.to_string()));
    }
    u64::try_from(c.to_integer()).map_err(|_| Error::NegativeCoefficient(c.to_string()))
}

/// Molien series with coefficients up to `λ^max_degree`.
pub fn molien_series(g: &MatrixGroup, max_degree: usize) -> Result<MolienSeries> {
    let closed = molien_function(g)?;
    let coeffs = closed
        .series(max_degree)?
        .iter()
        .map(to_count)
        .collect::<Result<_>>()?;
    Ok(MolienSeries { closed, coeffs })
}

/// `(1/|G|) Σ trace(A)`, the number of independent linear invariants.
pub fn degree1_count(g: &MatrixGroup) -> Result<Rational> {
    let total = g
        .elements()
        .iter()
        .fold(QuadElement::zero(), |acc, a| acc.plus(&a.trace()));
    let avg = total.scale(&Rational::new(1.into(), BigInt::from(g.order())));
    avg.as_rational()
        .cloned()
        .ok_or_else(|| Error::NonIntegerCoefficient(avg.to_string()))
}

/// `Σ_{l=0}^{t} C(m, 2l) λ^{2l}` for `m ∈ {2t, 2t+1}`.
fn even_binomial_sum(m: usize) -> UniPoly<Rational> {
    let mut c = vec![Rational::zero(); m + 1];
    for l in (0..=m).step_by(2) {
        c[l] = Rational::from_integer(binomial(BigInt::from(m), BigInt::from(l)));
    }
    UniPoly::new(c)
}

/// Closed form of the Molien series of the binary self-dual group for row
/// width `s`: `{±I, ±T}` when `s` is odd, `{I, T}` when `s` is even.
pub fn closed_form_molien(s: usize) -> Result<RationalFunction<Rational>> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    let one_minus_sq = UniPoly::<Rational>::one_minus_power(2);
    let one_minus = UniPoly::<Rational>::one_minus_power(1);
    if s % 2 == 1 {
        // m = (s+1)/2 is 2t or 2t+1; the denominator exponent is 2m either way
        let m = s.div_ceil(2);
        let num = even_binomial_sum(m).pow(2);
        RationalFunction::new(num, one_minus_sq.pow(2 * m as u32))
    } else {
        let m = s / 2;
        let num = even_binomial_sum(m);
        let den = one_minus_sq.pow(m as u32).mul(&one_minus.pow(m as u32 + 1));
        RationalFunction::new(num, den)
    }
}
