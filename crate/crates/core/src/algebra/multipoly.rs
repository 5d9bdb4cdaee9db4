//! Sparse multivariate polynomials over Q(√2) in variables z0..z{m-1}.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{Field, Matrix, QuadElement};
use crate::error::{Error, Result};

/// Exponent vector ordered graded-lexicographically with z0 highest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("z{i}")
                } else {
                    format!("z{i}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All exponent vectors of total degree `d` in `nvars` variables, highest first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == nvars {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, QuadElement>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: QuadElement) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, QuadElement::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: QuadElement) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), c);
        p
    }

    /// Builds a polynomial from integer-coefficient terms.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e.to_vec()), QuadElement::int(*c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in canonical order, highest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QuadElement)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u32]) -> QuadElement {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: QuadElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Common degree of all terms; `None` for the zero polynomial or a mixed-degree one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&QuadElement::int(-1))
    }

    pub fn scale(&self, s: &QuadElement) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.times(s)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(e), ca.times(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.nvars, QuadElement::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn check_vars(&self, o: &Self) {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
    }

    /// `f(MZ)`: every `z_i` is replaced by the linear form `Σ_j M[i][j]·z_j`.
    pub fn substitute_linear(&self, m: &Matrix<QuadElement>) -> Result<Self> {
        if !m.is_square() || m.rows() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix acting on {} variables",
                m.rows(),
                m.cols(),
                self.nvars
            )));
        }
        let n = self.nvars;
        let forms: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let mut p = Self::zero(n);
                for j in 0..n {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    p.add_term(Monomial(e), m.get(i, j).clone());
                }
                p
            })
            .collect();
        let mut cache: Vec<Vec<MultiPoly>> = forms
            .iter()
            .map(|f| vec![Self::constant(n, QuadElement::one()), f.clone()])
            .collect();
        let mut out = Self::zero(n);
        for (mono, c) in &self.terms {
            let mut t = Self::constant(n, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().expect("seeded").mul(&forms[i]);
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][e as usize]);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `z_j`.
    pub fn derivative(&self, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut ne = m.0.clone();
            ne[j] -= 1;
            out.add_term(Monomial(ne), c.times(&QuadElement::int(e as i64)));
        }
        out
    }

    pub fn eval(&self, point: &[QuadElement]) -> QuadElement {
        assert_eq!(point.len(), self.nvars, "evaluation point dimension");
        let mut acc = QuadElement::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t.times(&x.pow(e));
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    pub fn coefficient_sum(&self) -> QuadElement {
        self.terms
            .values()
            .fold(QuadElement::zero(), |acc, c| acc.plus(c))
    }

    /// Coefficients against a list of monomials (missing terms are zero).
    pub fn coefficient_vector(&self, basis: &[Monomial]) -> Vec<QuadElement> {
        basis
            .iter()
            .map(|m| self.terms.get(m).cloned().unwrap_or_default())
            .collect()
    }

    /// Parses the canonical string form with an explicit variable count.
    pub fn parse_with_vars(s: &str, nvars: usize) -> Result<Self> {
        super::parse::parse_poly(s, Some(nvars))
    }
}

/// Jacobian matrix `J[i][j] = ∂f_i/∂z_j`.
pub fn jacobian_matrix(fs: &[MultiPoly]) -> Result<Vec<Vec<MultiPoly>>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    if fs.iter().any(|f| f.nvars() != n) {
        return Err(Error::DimensionMismatch(
            "polynomials over different variable counts".into(),
        ));
    }
    Ok(fs
        .iter()
        .map(|f| (0..n).map(|j| f.derivative(j)).collect())
        .collect())
}

/// Determinant of a square polynomial matrix by cofactor expansion.
pub fn poly_det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let k = m.len();
    match k {
        0 => MultiPoly::constant(nvars, QuadElement::one()),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = MultiPoly::zero(nvars);
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MultiPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].mul(&poly_det(&minor, nvars));
                acc = if c % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let constant = m.degree() == 0;
            let (neg, body) = if c.is_rational() || c.a.is_zero() {
                let neg = if c.is_rational() {
                    num_traits::Signed::is_negative(&c.a)
                } else {
                    num_traits::Signed::is_negative(&c.b)
                };
                let mag = if neg { c.negate() } else { c.clone() };
                let s = mag.to_string();
                let body = match (constant, s.as_str()) {
                    (true, _) => s,
                    (false, "1") => m.to_string(),
                    (false, _) => format!("{s}*{m}"),
                };
                (neg, body)
            } else if constant {
                (false, format!("({c})"))
            } else {
                (false, format!("({c})*{m}"))
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Variable count is one more than the largest index mentioned (at least one).
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_poly(s, None)
    }
}
