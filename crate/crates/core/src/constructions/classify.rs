use std::collections::HashMap;

use serde::Serialize;

use super::build::int_matrix;
use crate::algebra::PrimeField;
use crate::code::{all_codes, codes_equivalent, Limits, NrtCode};
use crate::error::{Error, Result};
use crate::shape::ShapeEnumerator;

/// Largest field size accepted by the `ns = 4` classification.
pub const MAX_CLASSIFY_Q: u32 = 5;

/// The three ways to write `ns = 4` with a two-dimensional self-dual code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Ns4Case {
    #[serde(rename = "i")]
    OneByFour,
    #[serde(rename = "ii")]
    TwoByTwo,
    #[serde(rename = "iii")]
    FourByOne,
}

impl Ns4Case {
    pub const ALL: [Ns4Case; 3] = [Ns4Case::OneByFour, Ns4Case::TwoByTwo, Ns4Case::FourByOne];

    pub fn n(self) -> usize {
        match self {
            Ns4Case::OneByFour => 1,
            Ns4Case::TwoByTwo => 2,
            Ns4Case::FourByOne => 4,
        }
    }

    pub fn s(self) -> usize {
        4 / self.n()
    }

    pub fn label(self) -> &'static str {
        match self {
            Ns4Case::OneByFour => "i",
            Ns4Case::TwoByTwo => "ii",
            Ns4Case::FourByOne => "iii",
        }
    }
}

#[derive(Clone, Copy)]
enum Term {
    Zero,
    One,
    Lambda,
    OnePlusLambda,
}

use Term::{Lambda as L, One as I, OnePlusLambda as P, Zero as O};

type Template = [[Term; 4]; 2];

const CASE_I: [Template; 8] = [
    [[I, O, O, O], [O, I, O, O]],
    [[I, O, O, O], [O, O, I, O]],
    [[O, I, O, O], [O, O, O, I]],
    [[O, O, I, O], [O, O, O, I]],
    [[I, O, L, O], [O, O, I, O]],
    [[I, L, O, O], [O, I, O, O]],
    [[O, I, O, L], [O, O, O, I]],
    [[O, O, I, L], [O, O, O, I]],
];

const CASE_II: [Template; 12] = [
    [[I, O, O, O], [O, O, I, O]],
    [[I, O, O, O], [O, O, O, I]],
    [[O, I, O, O], [O, O, I, O]],
    [[O, I, O, O], [O, O, O, I]],
    [[O, I, I, O], [O, O, I, O]],
    [[O, I, O, I], [O, O, O, I]],
    [[I, O, I, O], [O, O, I, O]],
    [[I, O, O, I], [O, O, O, I]],
    [[O, I, P, O], [O, O, I, O]],
    [[O, I, O, P], [O, O, O, I]],
    [[I, O, P, O], [O, O, I, O]],
    [[I, O, O, P], [O, O, O, I]],
];

fn has_lambda(t: &Template) -> bool {
    t.iter().flatten().any(|x| matches!(x, L | P))
}

fn instantiate(t: &Template, lambda: i64) -> Vec<Vec<i64>> {
    t.iter()
        .map(|row| {
            row.iter()
                .map(|x| match x {
                    O => 0,
                    I => 1,
                    L => lambda,
                    P => 1 + lambda,
                })
                .collect()
        })
        .collect()
}

/// One emitted generator matrix.
#[derive(Clone, Debug, Serialize)]
pub struct Ns4Entry {
    pub case: Ns4Case,
    /// 1-based position in the case's list.
    pub family: usize,
    pub lambda: Option<u32>,
    /// The listed matrix, entries reduced mod p.
    pub generator: Vec<Vec<u32>>,
    /// RREF of the same code.
    pub canonical: Vec<Vec<u32>>,
    pub enumerator: String,
    /// Index of the first earlier entry generating the same code.
    pub duplicate_of: Option<usize>,
    #[serde(skip)]
    pub code: NrtCode,
}

/// All listed and brute-forced self-dual codes with `ns = 4`.
#[derive(Clone, Debug, Serialize)]
pub struct Ns4Classification {
    pub q: u32,
    pub entries: Vec<Ns4Entry>,
}

impl Ns4Classification {
    pub fn entries_in(&self, case: Ns4Case) -> impl Iterator<Item = &Ns4Entry> {
        self.entries.iter().filter(move |e| e.case == case)
    }

    /// Distinct codes of a case, in emission order.
    pub fn distinct_codes(&self, case: Ns4Case) -> Vec<&NrtCode> {
        self.entries_in(case)
            .filter(|e| e.duplicate_of.is_none())
            .map(|e| &e.code)
            .collect()
    }
}

fn check_q(q: u32) -> Result<PrimeField> {
    let field = PrimeField::new(q)?;
    if q > MAX_CLASSIFY_Q {
        return Err(Error::CapExceeded {
            what: "classification field size",
            needed: q as u128,
            cap: MAX_CLASSIFY_Q as u128,
        });
    }
    Ok(field)
}

/// Emits the listed families for `M_{1,4}` and `M_{2,2}` with every nonzero
/// λ, plus every self-dual code of `M_{4,1}` found by exhaustive search.
pub fn classify_ns4(q: u32) -> Result<Ns4Classification> {
    let field = check_q(q)?;
    let limits = Limits::default();
    let mut entries: Vec<Ns4Entry> = Vec::new();
    let mut seen: HashMap<(Ns4Case, NrtCode), usize> = HashMap::new();
    let mut push = |case: Ns4Case,
                    family: usize,
                    lambda: Option<u32>,
                    generator: Vec<Vec<u32>>|
     -> Result<()> {
        let code = NrtCode::from_flat_rows(field, case.n(), case.s(), &generator)?;
        if !code.is_self_dual() {
            return Err(Error::PropertyViolation(format!(
                "case {} family {family} (λ = {lambda:?}) is not self-dual over GF({q})",
                case.label()
            )));
        }
        let duplicate_of = seen.get(&(case, code.clone())).copied();
        if duplicate_of.is_none() {
            seen.insert((case, code.clone()), entries.len());
        }
        entries.push(Ns4Entry {
            case,
            family,
            lambda,
            generator,
            canonical: code.generator().row_vecs(),
            enumerator: ShapeEnumerator::of_code(&code, &limits)?.to_string(),
            duplicate_of,
            code,
        });
        Ok(())
    };
    for (case, list) in [
        (Ns4Case::OneByFour, &CASE_I[..]),
        (Ns4Case::TwoByTwo, &CASE_II[..]),
    ] {
        for (i, t) in list.iter().enumerate() {
            let lambdas: Vec<Option<u32>> = if has_lambda(t) {
                field.nonzero().map(Some).collect()
            } else {
                vec![None]
            };
            for lambda in lambdas {
                let rows = instantiate(t, lambda.map_or(0, i64::from));
                push(case, i + 1, lambda, int_matrix(field, &rows).row_vecs())?;
            }
        }
    }
    let brute = all_codes(field, 4, 1, 2, &limits)?;
    for (i, c) in brute.into_iter().filter(NrtCode::is_self_dual).enumerate() {
        push(Ns4Case::FourByOne, i + 1, None, c.generator().row_vecs())?;
    }
    Ok(Ns4Classification { q, entries })
}

/// One isometry class of self-dual codes found by exhaustive search.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceClass {
    pub representative: Vec<Vec<u32>>,
    pub enumerator: String,
    pub size: usize,
    /// Whether some emitted code lies in this class.
    pub listed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompletenessReport {
    pub case: Ns4Case,
    pub q: u32,
    pub self_dual_total: usize,
    pub classes: Vec<EquivalenceClass>,
}

impl CompletenessReport {
    pub fn is_complete(&self) -> bool {
        self.classes.iter().all(|c| c.listed)
    }

    pub fn unlisted(&self) -> impl Iterator<Item = &EquivalenceClass> {
        self.classes.iter().filter(|c| !c.listed)
    }
}

/// Partitions every self-dual `[4,2]` code of the case's space into isometry
/// classes and marks the classes that contain an emitted code.
pub fn classification_completeness(
    q: u32,
    case: Ns4Case,
    limits: &Limits,
) -> Result<CompletenessReport> {
    let field = check_q(q)?;
    let listed = classify_ns4(q)?;
    let listed = listed.distinct_codes(case);
    let all: Vec<NrtCode> = all_codes(field, case.n(), case.s(), 2, limits)?
        .into_iter()
        .filter(NrtCode::is_self_dual)
        .collect();
    let mut reps: Vec<(NrtCode, usize)> = Vec::new();
    for c in &all {
        let mut placed = false;
        for (rep, size) in reps.iter_mut() {
            if codes_equivalent(rep, c, limits)? {
                *size += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            reps.push((c.clone(), 1));
        }
    }
    let mut classes = Vec::with_capacity(reps.len());
    for (rep, size) in reps {
        let mut is_listed = false;
        for l in &listed {
            if codes_equivalent(&rep, l, limits)? {
                is_listed = true;
                break;
            }
        }
        classes.push(EquivalenceClass {
            representative: rep.generator().row_vecs(),
            enumerator: ShapeEnumerator::of_code(&rep, limits)?.to_string(),
            size,
            listed: is_listed,
        });
    }
    Ok(CompletenessReport {
        case,
        q,
        self_dual_total: all.len(),
        classes,
    })
}
