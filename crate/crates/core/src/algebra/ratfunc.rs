//! Univariate rational functions with a canonical reduced form.

use std::fmt;

use num_traits::Signed;

use super::unipoly::UniPoly;
use super::{Field, QuadElement, Rational};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction<F> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: UniPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lead_inv = den.leading().and_then(Field::inverse).expect("nonzero");
        Ok(Self {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        Self {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::new(num, self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.num.scale(s), self.den.clone()).expect("nonzero denominator")
    }

    /// `1/p`
    pub fn recip_poly(p: UniPoly<F>) -> Result<Self> {
        Self::new(UniPoly::one(), p)
    }

    /// Power-series coefficients of λ^0..λ^max_degree.
    pub fn series(&self, max_degree: usize) -> Result<Vec<F>> {
        let d0 = self.den.coeff(0);
        let inv = d0.inverse().ok_or(Error::PoleAtZero)?;
        let mut out: Vec<F> = Vec::with_capacity(max_degree + 1);
        for t in 0..=max_degree {
            // den · series = num, solved term by term
            let mut acc = self.num.coeff(t);
            for j in 1..=t.min(self.den.degree().unwrap_or(0)) {
                acc = acc.minus(&self.den.coeff(j).times(&out[t - j]));
            }
            out.push(acc.times(&inv));
        }
        Ok(out)
    }
}

impl RationalFunction<QuadElement> {
    /// The rational-coefficient version when both parts lie in Q[λ].
    pub fn to_rational(&self) -> Option<RationalFunction<Rational>> {
        Some(RationalFunction {
            num: self.num.to_rational()?,
            den: self.den.to_rational()?,
        })
    }
}

/// Truncated power-series expansion of `r` to degree `max_degree`.
pub fn series_expand<F: Field>(r: &RationalFunction<F>, max_degree: usize) -> Result<Vec<F>> {
    r.series(max_degree)
}

/// m-th cyclotomic polynomial over Q.
fn cyclotomic(m: usize) -> UniPoly<Rational> {
    let mut p = UniPoly::<Rational>::monomial(Field::one(), m).sub(&UniPoly::one());
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = p.div_rem(&cyclotomic(d)).expect("nonzero").0;
        }
    }
    p
}

impl RationalFunction<Rational> {
    /// Rewrites the function as `N(λ) / Π(1 − λ^{d_i})` with the fewest factors
    /// whose poles cover the denominator, when the denominator splits into
    /// cyclotomic factors. Returns the numerator and the sorted degrees `d_i`.
    pub fn molien_form(&self) -> Option<(UniPoly<Rational>, Vec<usize>)> {
        let deg = self.den.degree()?;
        let mut rest = self.den.clone();
        let mut mult: Vec<(usize, usize)> = Vec::new();
        let bound = 2 * deg * deg + 2;
        for m in 1..=bound {
            if rest.degree() == Some(0) {
                break;
            }
            let c = cyclotomic(m);
            let mut k = 0;
            loop {
                let (q, r) = rest.div_rem(&c).ok()?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                k += 1;
            }
            if k > 0 {
                mult.push((m, k));
            }
        }
        if rest.degree() != Some(0) {
            return None;
        }
        // greedy: the largest remaining cyclotomic order m becomes a (1 − λ^m)
        let mut remaining: std::collections::BTreeMap<usize, usize> = mult.into_iter().collect();
        let mut degrees = Vec::new();
        let mut product = UniPoly::<Rational>::one();
        while let Some((&m, _)) = remaining.iter().rev().find(|(_, &k)| k > 0) {
            degrees.push(m);
            product = product.mul(&UniPoly::one_minus_power(m));
            for d in 1..=m {
                if m % d == 0 {
                    if let Some(k) = remaining.get_mut(&d) {
                        if *k > 0 {
                            *k -= 1;
                        }
                    }
                }
            }
        }
        let (scale, r) = product.div_rem(&self.den).ok()?;
        if !r.is_zero() {
            return None;
        }
        let numer = self.num.mul(&scale);
        degrees.sort_unstable();
        Some((numer, degrees))
    }

    /// `N/((1-λ^a)^i(1-λ^b)^j...)` when [`molien_form`](Self::molien_form)
    /// applies with a nonnegative numerator, else the plain `num / den` form.
    pub fn pretty(&self) -> String {
        match self.molien_form() {
            Some((numer, degrees)) if numer.coeffs().iter().all(|c| !c.is_negative()) => {
                let n = numer.to_string();
                let n = if numer
                    .coeffs()
                    .iter()
                    .filter(|c| !num_traits::Zero::is_zero(*c))
                    .count()
                    > 1
                {
                    format!("({n})")
                } else {
                    n
                };
                let mut groups: Vec<(usize, usize)> = Vec::new();
                for d in degrees {
                    match groups.last_mut() {
                        Some((g, k)) if *g == d => *k += 1,
                        _ => groups.push((d, 1)),
                    }
                }
                if groups.is_empty() {
                    return n;
                }
                let factors: String = groups
                    .iter()
                    .map(|&(d, k)| {
                        let base = if d == 1 {
                            "(1-λ)".to_string()
                        } else {
                            format!("(1-λ^{d})")
                        };
                        if k == 1 {
                            base
                        } else {
                            format!("{base}^{k}")
                        }
                    })
                    .collect();
                let single = groups.len() == 1;
                if single {
                    format!("{n}/{factors}")
                } else {
                    format!("{n}/({factors})")
                }
            }
            _ => self.to_string(),
        }
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    type P = UniPoly<Rational>;
    type R = RationalFunction<Rational>;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    /// Convolution oracle: multiply the geometric series of each factor.
    fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        (0..a.len())
            .map(|t| (0..=t).map(|i| &a[i] * &b[t - i]).sum())
            .collect()
    }

    fn geometric(step: usize, len: usize) -> Vec<Rational> {
        (0..len)
            .map(|i| if i % step == 0 { int(1) } else { int(0) })
            .collect()
    }

    #[test]
    fn geometric_series() {
        let r = R::recip_poly(P::from_ints(&[1, -1])).unwrap();
        assert_eq!(r.series(3).unwrap(), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn product_series_against_convolution() {
        let den = P::one_minus_power(1).pow(2).mul(&P::one_minus_power(2));
        let r = R::recip_poly(den).unwrap();
        let oracle = convolve(
            &convolve(&geometric(1, 5), &geometric(1, 5)),
            &geometric(2, 5),
        );
        assert_eq!(oracle, ints(&[1, 2, 4, 6, 9]));
        assert_eq!(r.series(4).unwrap(), oracle);
    }

    #[test]
    fn g3_series_has_no_degree_one_term() {
        let den = P::one_minus_power(2).pow(2).mul(&P::one_minus_power(6));
        let r = R::new(P::from_ints(&[1, 0, 0, 0, 1]), den).unwrap();
        assert_eq!(r.series(1).unwrap(), ints(&[1, 0]));
    }

    #[test]
    fn pole_at_zero() {
        let r = R::recip_poly(P::from_ints(&[0, 1])).unwrap();
        assert_eq!(r.series(2), Err(Error::PoleAtZero));
    }

    #[test]
    fn normalization_is_canonical() {
        // (1−λ)/(1−λ²) = 1/(1+λ)
        let a = R::new(P::from_ints(&[1, -1]), P::from_ints(&[1, 0, -1])).unwrap();
        let b = R::recip_poly(P::from_ints(&[1, 1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.den(), &P::from_ints(&[1, 1]));
    }

    #[test]
    fn molien_pretty_forms() {
        let g3 = R::new(
            P::from_ints(&[1, 0, 0, 0, 1]),
            P::one_minus_power(2).pow(2).mul(&P::one_minus_power(6)),
        )
        .unwrap();
        assert_eq!(g3.pretty(), "(1+λ^4)/((1-λ^2)^2(1-λ^6))");
        let g2 = R::recip_poly(
            P::one_minus_power(1)
                .mul(&P::one_minus_power(2))
                .mul(&P::one_minus_power(3)),
        )
        .unwrap();
        assert_eq!(g2.pretty(), "1/((1-λ)(1-λ^2)(1-λ^3))");
        let ham = R::recip_poly(P::one_minus_power(2).pow(2)).unwrap();
        assert_eq!(ham.pretty(), "1/(1-λ^2)^2");
    }

    #[test]
    fn series_recomposes() {
        let r = R::new(P::from_ints(&[2, 1]), P::from_ints(&[1, -3, 1])).unwrap();
        let s = r.series(8).unwrap();
        let back = P::new(s).mul(r.den());
        for t in 0..=8 {
            assert_eq!(back.coeff(t), r.num().coeff(t));
        }
    }
}
