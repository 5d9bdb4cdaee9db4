use std::fmt;

use super::group::{even_rows_group, even_weight_group, self_dual_group, MatrixGroup};
use super::molien::molien_series;
use super::reynolds::{invariant_space_basis, reduced_span, reynolds, ReynoldsMode};
use crate::algebra::multipoly::monomials_of_degree;
use crate::algebra::{Field, Matrix, MultiPoly, QuadElement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    Primary,
    Secondary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry {
    pub label: String,
    pub poly: MultiPoly,
    pub kind: InvariantKind,
}

impl BasisEntry {
    pub fn degree(&self) -> u32 {
        self.poly
            .homogeneous_degree()
            .expect("homogeneous invariant")
    }
}

/// Generators of an invariant ring as a free module: the ring is
/// `⊕_h h·C[f1, ..., fk]` with `h` ranging over 1 and the secondaries.
#[derive(Clone, Debug)]
pub struct KnownBasis {
    pub name: &'static str,
    pub group: MatrixGroup,
    pub entries: Vec<BasisEntry>,
}

impl KnownBasis {
    pub fn primaries(&self) -> Vec<&BasisEntry> {
        self.entries
            .iter()
            .filter(|e| e.kind == InvariantKind::Primary)
            .collect()
    }

    pub fn secondaries(&self) -> Vec<&BasisEntry> {
        self.entries
            .iter()
            .filter(|e| e.kind == InvariantKind::Secondary)
            .collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.entries.iter().map(BasisEntry::degree).collect()
    }

    /// Every product `h·f^α` of total degree `d`, with `h = 1` first.
    fn products(&self, d: u32) -> Vec<Product> {
        let prim = self.primaries();
        let degs: Vec<u32> = prim.iter().map(|e| e.degree()).collect();
        let mut out = Vec::new();
        let mut push = |secondary: Option<usize>, rest: u32| {
            for alpha in exponent_vectors(&degs, rest) {
                out.push(Product {
                    exponents: alpha,
                    secondary,
                });
            }
        };
        push(None, d);
        for (j, sec) in self.secondaries().iter().enumerate() {
            if sec.degree() <= d {
                push(Some(j), d - sec.degree());
            }
        }
        out
    }

    fn evaluate(&self, p: &Product) -> MultiPoly {
        let nvars = self.group.dim();
        let mut acc = MultiPoly::constant(nvars, QuadElement::one());
        for (f, &e) in self.primaries().iter().zip(&p.exponents) {
            acc = acc.mul(&f.poly.pow(e));
        }
        if let Some(j) = p.secondary {
            acc = acc.mul(&self.secondaries()[j].poly);
        }
        acc
    }

    /// Checks, for every degree up to `max_degree`, that the products are
    /// linearly independent invariants whose count is the Molien coefficient.
    pub fn verify_decomposition(&self, max_degree: u32) -> Result<()> {
        let series = molien_series(&self.group, max_degree as usize)?;
        for d in 0..=max_degree {
            let prods: Vec<MultiPoly> = self.products(d).iter().map(|p| self.evaluate(p)).collect();
            let rank = reduced_span(&prods, &monomials_of_degree(self.group.dim(), d)).rows();
            let want = series.coeffs[d as usize] as usize;
            if rank != prods.len() || rank != want {
                return Err(Error::PropertyViolation(format!(
                    "{}: degree {d} has {} products of rank {rank}, Molien coefficient {want}",
                    self.name,
                    prods.len()
                )));
            }
        }
        Ok(())
    }
}

/// All `α` with `Σ α_i·degs_i = d`.
fn exponent_vectors(degs: &[u32], d: u32) -> Vec<Vec<u32>> {
    match degs.split_first() {
        None => {
            if d == 0 {
                vec![Vec::new()]
            } else {
                Vec::new()
            }
        }
        Some((&first, rest)) => {
            let mut out = Vec::new();
            for a in 0..=d / first {
                for mut tail in exponent_vectors(rest, d - a * first) {
                    tail.insert(0, a);
                    out.push(tail);
                }
            }
            out
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Product {
    exponents: Vec<u32>,
    secondary: Option<usize>,
}

fn p3(s: &str) -> MultiPoly {
    MultiPoly::parse_with_vars(s, 3).expect("well-formed constant polynomial")
}

fn entry(label: &str, poly: MultiPoly, kind: InvariantKind) -> BasisEntry {
    BasisEntry {
        label: label.into(),
        poly,
        kind,
    }
}

/// Invariants of `⟨T⟩`: `z0+z2`, `z0+z1`, `z0²+z1²+2z2²`.
pub fn self_dual_basis() -> Result<KnownBasis> {
    use InvariantKind::Primary;
    Ok(KnownBasis {
        name: "g1",
        group: self_dual_group()?,
        entries: vec![
            entry("f1", p3("z0 + z2"), Primary),
            entry("f2", p3("z0 + z1"), Primary),
            entry("f3", p3("z0^2 + z1^2 + 2*z2^2"), Primary),
        ],
    })
}

/// Invariants of `⟨T, diag(1,−1,1)⟩`: `z0+z2`, `z0²+z1²+2z2²`, `z0³+3z0z1²+4z2³`.
pub fn even_weight_basis() -> Result<KnownBasis> {
    use InvariantKind::Primary;
    Ok(KnownBasis {
        name: "g2",
        group: even_weight_group()?,
        entries: vec![
            entry("f1", p3("z0 + z2"), Primary),
            entry("f2", p3("z0^2 + z1^2 + 2*z2^2"), Primary),
            entry("f3", p3("z0^3 + 3*z0*z1^2 + 4*z2^3"), Primary),
        ],
    })
}

/// The quadratic `5z0² − 2z0z1 + z1² + 8z2² + 8z1z2`. It is not invariant
/// under `⟨T, diag(1,−1,−1)⟩`.
pub fn stated_even_rows_quadratic() -> MultiPoly {
    p3("5*z0^2 - 2*z0*z1 + z1^2 + 8*z2^2 + 8*z1*z2")
}

/// The invariant quadratic `2z0² − 2z1² + 8z1z2` of `⟨T, diag(1,−1,−1)⟩`.
pub fn even_rows_auxiliary_quadratic() -> MultiPoly {
    p3("2*z0^2 - 2*z1^2 + 8*z1*z2")
}

/// First element of `candidates` outside the span of `span`.
fn first_outside(
    candidates: &[MultiPoly],
    span: &[MultiPoly],
    nvars: usize,
    d: u32,
) -> Option<MultiPoly> {
    let monos = monomials_of_degree(nvars, d);
    let base = reduced_span(span, &monos).rows();
    candidates
        .iter()
        .find(|c| {
            let mut all = span.to_vec();
            all.push((*c).clone());
            reduced_span(&all, &monos).rows() > base
        })
        .cloned()
}

/// Invariants of `⟨T, diag(1,−1,−1)⟩`: primaries of degrees 2, 2, 6 and one
/// secondary of degree 4. The quadratics are `z0²+z1²+2z2²` and six times the
/// Reynolds average of `z0²`; the degree-4 and degree-6 generators are the
/// first row-reduced invariants outside the span of lower products.
pub fn even_rows_basis() -> Result<KnownBasis> {
    use InvariantKind::{Primary, Secondary};
    let group = even_rows_group()?;
    let f1 = p3("z0^2 + z1^2 + 2*z2^2");
    let f2 = reynolds(&group, &p3("z0^2"), ReynoldsMode::Average)?.scale(&QuadElement::int(6));
    let quartic_span = [f1.pow(2), f1.mul(&f2), f2.pow(2)];
    let h = first_outside(&invariant_space_basis(&group, 4)?, &quartic_span, 3, 4)
        .ok_or_else(|| Error::NoSolution("no degree-4 secondary invariant".into()))?;
    let sextic_span = [
        f1.pow(3),
        f1.pow(2).mul(&f2),
        f1.mul(&f2.pow(2)),
        f2.pow(3),
        h.mul(&f1),
        h.mul(&f2),
    ];
    let mut candidates = invariant_space_basis(&group, 6)?;
    loop {
        let f3 = first_outside(&candidates, &sextic_span, 3, 6)
            .ok_or_else(|| Error::NoSolution("no degree-6 primary invariant".into()))?;
        let basis = KnownBasis {
            name: "g3",
            group: group.clone(),
            entries: vec![
                entry("f1", f1.clone(), Primary),
                entry("f2", f2.clone(), Primary),
                entry("f3", f3.clone(), Primary),
                entry("h1", h.clone(), Secondary),
            ],
        };
        if basis.verify_decomposition(12).is_ok() {
            return Ok(basis);
        }
        candidates.retain(|c| c != &f3);
    }
}

pub fn known_bases() -> Result<Vec<KnownBasis>> {
    Ok(vec![
        self_dual_basis()?,
        even_weight_basis()?,
        even_rows_basis()?,
    ])
}

pub fn known_basis(name: &str) -> Result<KnownBasis> {
    match name {
        "g1" => self_dual_basis(),
        "g2" => even_weight_basis(),
        "g3" => even_rows_basis(),
        other => Err(Error::InvalidParameter(format!(
            "unknown basis '{other}' (expected g1, g2 or g3)"
        ))),
    }
}

/// One term `c · h · Π f_i^{α_i}` of an expression in a known basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTerm {
    pub coeff: QuadElement,
    pub exponents: Vec<u32>,
    pub secondary: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpression {
    pub primary_labels: Vec<String>,
    pub secondary_labels: Vec<String>,
    pub terms: Vec<BasisTerm>,
}

impl fmt::Display for BasisExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            if let Some(j) = t.secondary {
                factors.push(self.secondary_labels[j].clone());
            }
            for (label, &e) in self.primary_labels.iter().zip(&t.exponents) {
                match e {
                    0 => {}
                    1 => factors.push(label.clone()),
                    _ => factors.push(format!("{label}^{e}")),
                }
            }
            let coeff = MultiPoly::constant(1, t.coeff.clone()).to_string();
            let (neg, mag) = match coeff.strip_prefix('-') {
                Some(rest) => (true, rest.trim().to_string()),
                None => (false, coeff),
            };
            let body = match (factors.is_empty(), mag.as_str()) {
                (true, _) => mag.clone(),
                (false, "1") => factors.join("*"),
                (false, m) if m.contains(['+', '-']) => format!("({m})*{}", factors.join("*")),
                (false, m) => format!("{m}*{}", factors.join("*")),
            };
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Writes a homogeneous invariant as a combination of basis products by an
/// exact linear solve. Fails when no combination exists.
pub fn express_in_basis(h: &MultiPoly, basis: &KnownBasis) -> Result<BasisExpression> {
    let nvars = basis.group.dim();
    if h.nvars() != nvars {
        return Err(Error::DimensionMismatch(format!(
            "{} variables, basis has {nvars}",
            h.nvars()
        )));
    }
    let primary_labels = basis.primaries().iter().map(|e| e.label.clone()).collect();
    let secondary_labels = basis
        .secondaries()
        .iter()
        .map(|e| e.label.clone())
        .collect();
    if h.is_zero() {
        return Ok(BasisExpression {
            primary_labels,
            secondary_labels,
            terms: Vec::new(),
        });
    }
    let d = h
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidParameter("polynomial is not homogeneous".into()))?;
    let monos = monomials_of_degree(nvars, d);
    let products = basis.products(d);
    let columns: Vec<Vec<QuadElement>> = products
        .iter()
        .map(|p| basis.evaluate(p).coefficient_vector(&monos))
        .collect();
    let target = h.coefficient_vector(&monos);
    let aug = Matrix::from_fn(monos.len(), products.len() + 1, |r, c| {
        if c < products.len() {
            columns[c][r].clone()
        } else {
            target[r].clone()
        }
    });
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&products.len()) {
        return Err(Error::NoSolution(format!(
            "{h} is not in the span of the {} basis products",
            basis.name
        )));
    }
    let mut terms = Vec::new();
    for (r, &c) in pivots.iter().enumerate() {
        let coeff = red.get(r, products.len()).clone();
        if !coeff.is_zero() {
            terms.push(BasisTerm {
                coeff,
                exponents: products[c].exponents.clone(),
                secondary: products[c].secondary,
            });
        }
    }
    Ok(BasisExpression {
        primary_labels,
        secondary_labels,
        terms,
    })
}

impl BasisExpression {
    /// The polynomial the expression denotes.
    pub fn expand(&self, basis: &KnownBasis) -> MultiPoly {
        let mut acc = MultiPoly::zero(basis.group.dim());
        for t in &self.terms {
            let p = Product {
                exponents: t.exponents.clone(),
                secondary: t.secondary,
            };
            acc = acc.add(&basis.evaluate(&p).scale(&t.coeff));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::super::reynolds::{is_invariant, jacobian_independent};
    use super::*;

    #[test]
    fn bases_are_invariant_and_independent() {
        for b in known_bases().unwrap() {
            for e in &b.entries {
                assert!(
                    is_invariant(&b.group, &e.poly).unwrap(),
                    "{} {}",
                    b.name,
                    e.label
                );
            }
            let prim: Vec<MultiPoly> = b.primaries().iter().map(|e| e.poly.clone()).collect();
            assert!(jacobian_independent(&prim).unwrap());
            b.verify_decomposition(10).unwrap();
        }
    }

    #[test]
    fn even_rows_shape() {
        let b = even_rows_basis().unwrap();
        assert_eq!(b.degrees(), vec![2, 2, 6, 4]);
        assert_eq!(b.entries[1].poly, p3("3*z0^2 + z1^2 + 4*z1*z2 + 4*z2^2"));
        let g = &b.group;
        assert!(!is_invariant(g, &stated_even_rows_quadratic()).unwrap());
        assert!(is_invariant(g, &even_rows_auxiliary_quadratic()).unwrap());
        // the auxiliary quadratic is 2·f2 − 4·f1, so its cube adds nothing new
        let aux = b.entries[1]
            .poly
            .scale(&QuadElement::int(2))
            .sub(&b.entries[0].poly.scale(&QuadElement::int(4)));
        assert_eq!(aux, even_rows_auxiliary_quadratic());
    }

    #[test]
    fn expressions() {
        let g1 = self_dual_basis().unwrap();
        assert_eq!(
            express_in_basis(&p3("z0 + z2"), &g1).unwrap().to_string(),
            "f1"
        );
        assert_eq!(
            express_in_basis(&p3("z0^2 + z1^2 + 2*z2^2"), &g1)
                .unwrap()
                .to_string(),
            "f3"
        );
        let h = p3("2*z0^2 + z0*z1 + z0*z2 + z1*z2 + z1^2 + 2*z2^2");
        let e = express_in_basis(&h, &g1).unwrap();
        assert_eq!(e.to_string(), "f3 + f1*f2");
        assert_eq!(e.expand(&g1), h);
        assert!(matches!(
            express_in_basis(&p3("z1"), &g1),
            Err(Error::NoSolution(_))
        ));
        let g3 = even_rows_basis().unwrap();
        let e = express_in_basis(&p3("z0^2 + z1^2 + 2*z2^2").pow(3), &g3).unwrap();
        assert_eq!(e.to_string(), "f1^3");
    }
}
