use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use super::word::{nrt_pairing, NrtWord, ShapeVector};
use super::{check_cap, pow_u128, Limits};
use crate::algebra::{FpMatrix, PrimeField};
use crate::error::{Error, Result};

/// A linear code in `M_{n,s}(F_q)`, held as the RREF of a generator matrix
/// over the row-major flattening. Two codes are equal iff they are the same
/// subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NrtCode {
    n: usize,
    s: usize,
    gen: FpMatrix,
}

/// Weight-parity facts about every codeword of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityProfile {
    pub all_even_weight: bool,
    pub even_rows_weight1_and_2: bool,
}

impl NrtCode {
    /// Code spanned by flattened rows of length `n·s`.
    pub fn from_flat_rows(
        field: PrimeField,
        n: usize,
        s: usize,
        rows: &[Vec<u32>],
    ) -> Result<Self> {
        if n == 0 || s == 0 {
            return Err(Error::InvalidParameter("n and s must be positive".into()));
        }
        let p = field.modulus();
        for r in rows {
            if let Some(&bad) = r.iter().find(|&&x| x >= p) {
                return Err(Error::InvalidParameter(format!(
                    "entry {bad} not in [0,{p})"
                )));
            }
        }
        let m = FpMatrix::from_rows(field, n * s, rows)?;
        Ok(Self::from_matrix(n, s, &m))
    }

    /// Code spanned by the given words, which must all be `n×s` over `field`.
    pub fn from_words(field: PrimeField, n: usize, s: usize, words: &[NrtWord]) -> Result<Self> {
        for w in words {
            if w.field() != field || w.n() != n || w.s() != s {
                return Err(Error::DimensionMismatch(format!(
                    "word is {}x{} over GF({}), code is {n}x{s} over GF({})",
                    w.n(),
                    w.s(),
                    w.field().modulus(),
                    field.modulus()
                )));
            }
        }
        let rows: Vec<Vec<u32>> = words.iter().map(|w| w.entries().to_vec()).collect();
        Self::from_flat_rows(field, n, s, &rows)
    }

    fn from_matrix(n: usize, s: usize, m: &FpMatrix) -> Self {
        Self {
            n,
            s,
            gen: m.rref().0,
        }
    }

    pub fn zero(field: PrimeField, n: usize, s: usize) -> Self {
        Self {
            n,
            s,
            gen: FpMatrix::zeros(field, 0, n * s),
        }
    }

    pub fn full(field: PrimeField, n: usize, s: usize) -> Self {
        Self {
            n,
            s,
            gen: FpMatrix::identity(field, n * s),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.gen.field()
    }

    pub fn q(&self) -> u32 {
        self.gen.field().modulus()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Length of the flattened ambient space, `n·s`.
    pub fn length(&self) -> usize {
        self.n * self.s
    }

    /// Canonical RREF generator matrix.
    pub fn generator(&self) -> &FpMatrix {
        &self.gen
    }

    pub fn generator_words(&self) -> Vec<NrtWord> {
        (0..self.k())
            .map(|r| {
                NrtWord::new(self.field(), self.n, self.s, self.gen.row(r).to_vec())
                    .expect("valid row")
            })
            .collect()
    }

    /// Number of codewords `q^k`, saturating.
    pub fn size(&self) -> u128 {
        pow_u128(self.q() as u128, self.k())
    }

    pub fn contains(&self, w: &NrtWord) -> bool {
        if w.field() != self.field() || w.n() != self.n || w.s() != self.s {
            return false;
        }
        let mut rows = self.gen.row_vecs();
        rows.push(w.entries().to_vec());
        FpMatrix::from_rows(self.field(), self.length(), &rows)
            .expect("consistent widths")
            .rank()
            == self.k()
    }

    /// All `q^k` codewords, in lexicographic order of their coefficient vectors.
    pub fn codewords(&self, limits: &Limits) -> Result<Codewords<'_>> {
        check_cap("codeword enumeration", self.size(), limits.max_enum)?;
        Ok(Codewords {
            code: self,
            coeffs: vec![0; self.k()],
            done: false,
        })
    }

    /// `C⊥ = {v : ⟨c, v⟩_N = 0 for all c ∈ C}`, solved as the kernel of the
    /// generator with each block reversed.
    pub fn dual(&self) -> Self {
        let ns = self.length();
        if self.k() == 0 {
            return Self::full(self.field(), self.n, self.s);
        }
        let mut flipped = FpMatrix::zeros(self.field(), self.k(), ns);
        for r in 0..self.k() {
            let row = self.gen.row(r);
            for (b, block) in row.chunks(self.s).enumerate() {
                for j in 0..self.s {
                    flipped.set(r, b * self.s + j, block[self.s - 1 - j]);
                }
            }
        }
        Self::from_matrix(self.n, self.s, &flipped.nullspace())
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let f = self.field();
        (0..self.k()).all(|a| {
            (a..self.k()).all(|b| nrt_pairing(f, self.s, self.gen.row(a), self.gen.row(b)) == 0)
        })
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.length() && self.is_self_orthogonal()
    }

    /// Number of codewords of each shape.
    pub fn shape_distribution(&self, limits: &Limits) -> Result<BTreeMap<ShapeVector, u64>> {
        let mut out = BTreeMap::new();
        for w in self.codewords(limits)? {
            *out.entry(w.shape()).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Whether every codeword has even NRT weight.
    pub fn all_even_weight(&self, limits: &Limits) -> Result<bool> {
        Ok(self.codewords(limits)?.all(|w| w.weight() % 2 == 0))
    }

    /// Parity flags; the row-count flag only makes sense for `s = 2`.
    pub fn parity_profile(&self, limits: &Limits) -> Result<ParityProfile> {
        if self.s != 2 {
            return Err(Error::InvalidParameter(format!(
                "parity profile needs s = 2, got s = {}",
                self.s
            )));
        }
        let mut all_even_weight = true;
        let mut even_rows = true;
        for w in self.codewords(limits)? {
            let sh = w.shape();
            all_even_weight &= w.weight() % 2 == 0;
            even_rows &= sh.e[0] % 2 == 0 && sh.e[1] % 2 == 0;
        }
        Ok(ParityProfile {
            all_even_weight,
            even_rows_weight1_and_2: even_rows,
        })
    }

    /// Image of the code under a linear map applied row by row to generators.
    pub(crate) fn map_generators(&self, f: impl Fn(&NrtWord) -> NrtWord) -> Self {
        let rows: Vec<Vec<u32>> = self
            .generator_words()
            .iter()
            .map(|w| f(w).entries().to_vec())
            .collect();
        let m = FpMatrix::from_rows(self.field(), self.length(), &rows).expect("consistent widths");
        Self::from_matrix(self.n, self.s, &m)
    }
}

impl fmt::Display for NrtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::write_code(self))
    }
}

/// Stream of codewords, see [`NrtCode::codewords`].
pub struct Codewords<'a> {
    code: &'a NrtCode,
    coeffs: Vec<u32>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = NrtWord;

    fn next(&mut self) -> Option<NrtWord> {
        if self.done {
            return None;
        }
        let code = self.code;
        let f = code.field();
        let mut entries = vec![0u32; code.length()];
        for (r, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                for (e, &g) in entries.iter_mut().zip(code.gen.row(r)) {
                    *e = f.add(*e, f.mul(c, g));
                }
            }
        }
        // advance the coefficient odometer, last coordinate fastest
        let q = code.q();
        let mut i = self.coeffs.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.coeffs[i] += 1;
            if self.coeffs[i] < q {
                break;
            }
            self.coeffs[i] = 0;
        }
        Some(NrtWord::new(f, code.n, code.s, entries).expect("valid codeword"))
    }
}

/// Every `k`-dimensional code in `M_{n,s}(F_q)`, one per subspace, by
/// enumerating RREF matrices: pivot sets, then free entries.
pub fn all_codes(
    field: PrimeField,
    n: usize,
    s: usize,
    k: usize,
    limits: &Limits,
) -> Result<Vec<NrtCode>> {
    let len = n * s;
    if k > len {
        return Err(Error::InvalidParameter(format!(
            "dimension {k} exceeds length {len}"
        )));
    }
    let q = field.modulus();
    let mut total: u128 = 0;
    let pivot_sets: Vec<Vec<usize>> = (0..len).combinations(k).collect();
    let free_counts: Vec<usize> = pivot_sets
        .iter()
        .map(|piv| free_positions(piv, len).len())
        .collect();
    for &fc in &free_counts {
        total = total.saturating_add(pow_u128(q as u128, fc));
    }
    check_cap("subspace enumeration", total, limits.max_enum)?;
    let mut out = Vec::with_capacity(total as usize);
    for piv in &pivot_sets {
        let free = free_positions(piv, len);
        for values in (0..free.len()).map(|_| 0..q).multi_cartesian_product() {
            let mut m = FpMatrix::zeros(field, k, len);
            for (r, &c) in piv.iter().enumerate() {
                m.set(r, c, 1);
            }
            for (&(r, c), &v) in free.iter().zip(&values) {
                m.set(r, c, v);
            }
            out.push(NrtCode { n, s, gen: m });
        }
    }
    Ok(out)
}

/// `(row, col)` entries left free by an RREF pivot pattern.
fn free_positions(pivots: &[usize], len: usize) -> Vec<(usize, usize)> {
    let mut free = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..len {
            if !pivots.contains(&c) {
                free.push((r, c));
            }
        }
    }
    free
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn code(p: u32, n: usize, s: usize, rows: &[&[u32]]) -> NrtCode {
        NrtCode::from_flat_rows(
            f(p),
            n,
            s,
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn canonical_form() {
        let c11 = code(2, 1, 2, &[&[0, 1]]);
        assert_eq!(c11.k(), 1);
        assert_eq!(code(2, 1, 2, &[&[1, 0], &[1, 0]]).k(), 1);
        let z = code(2, 1, 2, &[]);
        assert_eq!(z.k(), 0);
        assert_eq!(z, NrtCode::zero(f(2), 1, 2));
        assert_eq!(code(3, 1, 2, &[&[2, 1]]), code(3, 1, 2, &[&[1, 2]]));
    }

    #[test]
    fn codeword_streams() {
        let lim = Limits::default();
        let c11 = code(2, 1, 2, &[&[0, 1]]);
        let words: Vec<Vec<u32>> = c11
            .codewords(&lim)
            .unwrap()
            .map(|w| w.entries().to_vec())
            .collect();
        assert_eq!(words, vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(
            NrtCode::zero(f(2), 2, 2).codewords(&lim).unwrap().count(),
            1
        );
        let c21 = code(2, 2, 2, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        let mut got: Vec<Vec<u32>> = c21
            .codewords(&lim)
            .unwrap()
            .map(|w| w.entries().to_vec())
            .collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                vec![0, 0, 0, 0],
                vec![0, 1, 0, 1],
                vec![1, 0, 1, 0],
                vec![1, 1, 1, 1]
            ]
        );
        let tight = Limits { max_enum: 3, ..lim };
        assert!(matches!(
            c21.codewords(&tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn duals() {
        let c11 = code(2, 1, 2, &[&[0, 1]]);
        assert_eq!(c11.dual(), c11);
        assert!(c11.is_self_dual());
        let z = NrtCode::zero(f(2), 1, 2);
        assert_eq!(z.dual().k(), 2);
        assert!(z.is_self_orthogonal());
        assert!(!z.is_self_dual());
        // a self-orthogonal code whose dual strictly contains it
        let co = code(2, 2, 2, &[&[0, 1, 0, 0]]);
        assert!(co.is_self_orthogonal());
        assert!(!co.is_self_dual());
        let w = NrtWord::new(f(2), 2, 2, vec![0, 1, 0, 1]).unwrap();
        assert!(co.dual().contains(&w));
    }

    #[test]
    fn parity() {
        let lim = Limits::default();
        let c12 = code(2, 1, 2, &[&[1, 0]]);
        assert!(!c12.all_even_weight(&lim).unwrap());
        let c21 = code(2, 2, 2, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        assert!(c21.parity_profile(&lim).unwrap().even_rows_weight1_and_2);
        assert!(code(2, 1, 3, &[&[1, 0, 0]]).parity_profile(&lim).is_err());
    }

    #[test]
    fn subspace_counts() {
        let lim = Limits::default();
        // Gaussian binomials: [4 choose k]_2 sums to 67, [4 choose 2]_3 = 130
        let total: usize = (0..=4)
            .map(|k| all_codes(f(2), 1, 4, k, &lim).unwrap().len())
            .sum();
        assert_eq!(total, 67);
        assert_eq!(all_codes(f(3), 2, 2, 2, &lim).unwrap().len(), 130);
        assert_eq!(all_codes(f(2), 3, 2, 3, &lim).unwrap().len(), 1395);
        let codes = all_codes(f(2), 2, 2, 2, &lim).unwrap();
        for c in &codes {
            assert_eq!(&NrtCode::from_matrix(c.n, c.s, c.generator()), c);
        }
    }

    fn random_code(p: u32, n: usize, s: usize) -> impl Strategy<Value = NrtCode> {
        let len = n * s;
        (0..=len).prop_flat_map(move |k| {
            proptest::collection::vec(proptest::collection::vec(0..p, len), k)
                .prop_map(move |rows| NrtCode::from_flat_rows(f(p), n, s, &rows).unwrap())
        })
    }

    fn param_family() -> impl Strategy<Value = NrtCode> {
        prop_oneof![
            random_code(2, 1, 2),
            random_code(3, 1, 2),
            random_code(2, 2, 2),
            random_code(3, 2, 2),
            random_code(2, 1, 4),
            random_code(3, 1, 4),
            random_code(2, 3, 2),
            random_code(3, 3, 2),
        ]
    }

    proptest! {
        #[test]
        fn dual_dimension_law(c in param_family()) {
            prop_assert_eq!(c.k() + c.dual().k(), c.length());
        }

        #[test]
        fn dual_is_involution(c in param_family()) {
            prop_assert_eq!(c.dual().dual(), c);
        }

        #[test]
        fn dual_is_orthogonal(c in param_family()) {
            let d = c.dual();
            for a in c.generator_words() {
                for b in d.generator_words() {
                    prop_assert_eq!(a.inner(&b).unwrap().value(), 0);
                }
            }
        }

        #[test]
        fn self_orthogonal_means_inside_dual(c in param_family()) {
            let d = c.dual();
            let inside = c.generator_words().iter().all(|w| d.contains(w));
            prop_assert_eq!(inside, c.is_self_orthogonal());
        }
    }
}
