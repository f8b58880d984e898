//! The Orlik–Solomon algebra of an arrangement.
//!
//! Elements are stored on the no-broken-circuit basis. Every nbc monomial
//! gets a global index; monomials are grouped by flat and flats are sorted
//! by codimension, so each degree occupies a contiguous index range.
//!
//! Any independent monomial is brought to normal form by straightening:
//! if `I` contains the broken circuit `C \ {c}` then the relation coming
//! from the dependent set `I ∪ {c}` expresses `e_I` through monomials with
//! a smaller label sum.

use std::collections::HashMap;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix, SparseVec};
use crate::matroid::{shuffle_sign, Arrangement, FlatId, LabelSet};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub struct OsAlgebra {
    id: u64,
    arr: Arrangement,
    bases: Vec<Vec<LabelSet>>,
    offsets: Vec<usize>,
    index: HashMap<LabelSet, usize>,
    locate: Vec<(FlatId, usize)>,
    cache: RwLock<HashMap<LabelSet, Arc<SparseVec>>>,
}

impl Clone for OsAlgebra {
    fn clone(&self) -> Self {
        OsAlgebra {
            id: self.id,
            arr: self.arr.clone(),
            bases: self.bases.clone(),
            offsets: self.offsets.clone(),
            index: self.index.clone(),
            locate: self.locate.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl std::fmt::Debug for OsAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OsAlgebra")
            .field("labels", &self.arr.len())
            .field("dims", &self.poincare_polynomial())
            .finish()
    }
}

/// An element of an [`OsAlgebra`], as coordinates on the nbc basis.
#[derive(Clone, Debug, PartialEq)]
pub struct OsElement {
    owner: u64,
    coeffs: SparseVec,
}

impl OsElement {
    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn scaled(&self, c: &Rational) -> OsElement {
        OsElement {
            owner: self.owner,
            coeffs: self.coeffs.scaled(c),
        }
    }

    fn check(&self, other: &OsElement) {
        assert_eq!(self.owner, other.owner, "elements of different algebras");
    }
}

impl Add for &OsElement {
    type Output = OsElement;

    /// Panics if the elements belong to different algebras.
    fn add(self, rhs: &OsElement) -> OsElement {
        self.check(rhs);
        let mut coeffs = self.coeffs.clone();
        coeffs.add_scaled(&rhs.coeffs, &Rational::one());
        OsElement {
            owner: self.owner,
            coeffs,
        }
    }
}

impl Sub for &OsElement {
    type Output = OsElement;

    fn sub(self, rhs: &OsElement) -> OsElement {
        self + &(-rhs)
    }
}

impl Neg for &OsElement {
    type Output = OsElement;

    fn neg(self) -> OsElement {
        OsElement {
            owner: self.owner,
            coeffs: self.coeffs.neg(),
        }
    }
}

impl OsAlgebra {
    pub fn new(arr: Arrangement) -> Self {
        let mut bases = Vec::new();
        let mut offsets = Vec::new();
        let mut index = HashMap::new();
        let mut locate = Vec::new();
        for id in arr.flats().ids() {
            offsets.push(locate.len());
            let nbc = arr.nbc_sets(id);
            for (k, &s) in nbc.iter().enumerate() {
                index.insert(s, locate.len());
                locate.push((id, k));
            }
            bases.push(nbc);
        }
        OsAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            arr,
            bases,
            offsets,
            index,
            locate,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    /// nbc monomials spanning `A_S`, in lexicographic order.
    pub fn basis(&self, flat: FlatId) -> &[LabelSet] {
        &self.bases[flat.0]
    }

    pub fn flat_dim(&self, flat: FlatId) -> usize {
        self.bases[flat.0].len()
    }

    pub fn total_dim(&self) -> usize {
        self.locate.len()
    }

    /// Global index of the `k`-th basis monomial of `flat`.
    pub fn global_index(&self, flat: FlatId, k: usize) -> usize {
        self.offsets[flat.0] + k
    }

    /// Inverse of [`OsAlgebra::global_index`].
    pub fn locate(&self, global: usize) -> (FlatId, usize) {
        self.locate[global]
    }

    pub fn monomial_at(&self, global: usize) -> LabelSet {
        let (f, k) = self.locate[global];
        self.bases[f.0][k]
    }

    /// Global indices of degree `k`, as a contiguous range.
    pub fn degree_range(&self, k: usize) -> std::ops::Range<usize> {
        let flats = self.arr.flats();
        let start = flats
            .iter()
            .find(|(_, f)| f.codim >= k)
            .map_or(self.total_dim(), |(id, _)| self.offsets[id.0]);
        let end = flats
            .iter()
            .find(|(_, f)| f.codim > k)
            .map_or(self.total_dim(), |(id, _)| self.offsets[id.0]);
        start..end
    }

    pub fn dim(&self, k: usize) -> usize {
        self.degree_range(k).len()
    }

    /// Coefficients of the Poincaré polynomial, lowest degree first.
    pub fn poincare_polynomial(&self) -> Vec<usize> {
        (0..=self.arr.flats().max_codim()).map(|k| self.dim(k)).collect()
    }

    pub fn zero(&self) -> OsElement {
        self.element(SparseVec::new())
    }

    pub fn unit(&self) -> OsElement {
        self.element(SparseVec::unit(0))
    }

    pub fn element(&self, coeffs: SparseVec) -> OsElement {
        OsElement {
            owner: self.id,
            coeffs,
        }
    }

    /// `e_i` for a single label.
    pub fn generator(&self, i: usize) -> Result<OsElement> {
        if i >= self.arr.len() {
            return Err(Error::LabelOutOfRange(i));
        }
        self.monomial(LabelSet::singleton(i))
    }

    /// `e_I` in normal form; zero for dependent or null `I`.
    pub fn monomial(&self, set: LabelSet) -> Result<OsElement> {
        if let Some(bad) = set.iter().find(|&i| i >= self.arr.len()) {
            return Err(Error::LabelOutOfRange(bad));
        }
        Ok(self.element((*self.rewrite(set)).clone()))
    }

    /// Degree of a homogeneous element, `None` for zero or mixed degree.
    pub fn degree(&self, a: &OsElement) -> Option<usize> {
        let mut it = a.coeffs.iter().map(|(i, _)| self.monomial_at(i).len());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Normal form of `e_I` on the global nbc basis.
    pub fn rewrite(&self, set: LabelSet) -> Arc<SparseVec> {
        if let Some(&g) = self.index.get(&set) {
            return Arc::new(SparseVec::unit(g));
        }
        if !self.arr.independent(set) {
            return Arc::new(SparseVec::new());
        }
        if let Some(v) = self.cache.read().expect("cache lock").get(&set) {
            return v.clone();
        }
        let b = *self
            .arr
            .broken_circuits()
            .iter()
            .find(|b| b.is_subset_of(set))
            .expect("independent non-nbc sets contain a broken circuit");
        let circuit = self
            .arr
            .circuits()
            .iter()
            .find(|c| c.without(c.first().expect("nonempty")) == b)
            .expect("broken circuits come from circuits");
        let c0 = circuit.first().expect("nonempty");
        let d = set.with(c0);
        let outer = -shuffle_sign(LabelSet::singleton(c0), set);
        let mut out = SparseVec::new();
        for i in b.iter() {
            let rest = d.without(i);
            if !self.arr.independent(rest) {
                continue;
            }
            let s = outer * shuffle_sign(LabelSet::singleton(i), rest);
            out.add_scaled(&self.rewrite(rest), &Rational::from_int(s as i64));
        }
        let out = Arc::new(out);
        self.cache
            .write()
            .expect("cache lock")
            .insert(set, out.clone());
        out
    }

    fn same(&self, a: &OsElement) -> Result<()> {
        if a.owner != self.id {
            return Err(Error::MismatchedAlgebras);
        }
        Ok(())
    }

    /// `e_I · e_J` on the nbc basis.
    pub fn product_monomials(&self, i: LabelSet, j: LabelSet) -> SparseVec {
        if !i.is_disjoint(j) {
            return SparseVec::new();
        }
        let u = i.union(j);
        if !self.arr.independent(u) {
            return SparseVec::new();
        }
        let v = self.rewrite(u);
        if shuffle_sign(i, j) < 0 {
            v.neg()
        } else {
            (*v).clone()
        }
    }

    pub fn product(&self, a: &OsElement, b: &OsElement) -> Result<OsElement> {
        self.same(a)?;
        self.same(b)?;
        let mut out = SparseVec::new();
        for (x, cx) in a.coeffs.iter() {
            let mx = self.monomial_at(x);
            for (y, cy) in b.coeffs.iter() {
                let p = self.product_monomials(mx, self.monomial_at(y));
                if !p.is_zero() {
                    out.add_scaled(&p, &(cx * cy));
                }
            }
        }
        Ok(self.element(out))
    }

    /// `δ(e_I) = Σ (-1)^{s-1} e_{I \ i_s}` on the nbc basis.
    pub fn delta_monomial(&self, set: LabelSet) -> SparseVec {
        let mut out = SparseVec::new();
        for (s, i) in set.iter().enumerate() {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            out.add_scaled(&self.rewrite(set.without(i)), &Rational::from_int(sign));
        }
        out
    }

    pub fn delta(&self, a: &OsElement) -> Result<OsElement> {
        self.same(a)?;
        let mut out = SparseVec::new();
        for (x, c) in a.coeffs.iter() {
            out.add_scaled(&self.delta_monomial(self.monomial_at(x)), c);
        }
        Ok(self.element(out))
    }

    /// Component of `δ` from `A_S` to `A_{S'}` as a matrix
    /// (`dim A_{S'}` rows, `dim A_S` columns).
    pub fn delta_component(&self, s: FlatId, s_prime: FlatId) -> SparseMatrix {
        let rows = self.flat_dim(s_prime);
        let cols = self.flat_dim(s);
        let lo = self.offsets[s_prime.0];
        let mut triplets = Vec::new();
        for (c, &mono) in self.bases[s.0].iter().enumerate() {
            for (g, v) in self.delta_monomial(mono).iter() {
                if self.locate[g].0 == s_prime {
                    triplets.push((g - lo, c, v.clone()));
                }
            }
        }
        SparseMatrix::from_triplets(rows, cols, triplets).expect("indices in range")
    }

    /// The algebra map `A(L') → A(L)` with `e'_J ↦ Σ_I m_IJ e_I`, where
    /// `self` is `A(L')` and `m` has one row per label of `target`.
    /// Returned as a matrix on the global nbc bases.
    pub fn functorial_map(&self, target: &OsAlgebra, m: &[Vec<i64>]) -> Result<SparseMatrix> {
        let (l, lp) = (target.arr.len(), self.arr.len());
        if m.len() != l || m.iter().any(|r| r.len() != lp) {
            return Err(Error::Shape(format!(
                "multiplicity matrix must be {}x{}",
                l, lp
            )));
        }
        for (i, row) in m.iter().enumerate() {
            if let Some(j) = row.iter().position(|&x| x < 0) {
                return Err(Error::NegativeMultiplicity(i, j));
            }
        }
        let mut triplets = Vec::new();
        for col in 0..self.total_dim() {
            for (set, det) in minor_expansion(m, self.monomial_at(col)) {
                for (row, v) in target.rewrite(set).iter() {
                    triplets.push((row, col, v * &Rational::from_int(det)));
                }
            }
        }
        SparseMatrix::from_triplets(target.total_dim(), self.total_dim(), triplets)
    }

    /// Deletion and restriction with respect to the last label, with the
    /// maps of the short exact sequence.
    pub fn deletion_restriction(&self) -> Result<DeletionRestriction> {
        let deletion = OsAlgebra::new(self.arr.deletion()?);
        let (rarr, lambda) = self.arr.restriction()?;
        let restriction = OsAlgebra::new(rarr);
        let last = self.arr.len() - 1;

        let mut inc = Vec::new();
        for col in 0..deletion.total_dim() {
            for (row, v) in self.rewrite(deletion.monomial_at(col)).iter() {
                inc.push((row, col, v.clone()));
            }
        }
        let inclusion = SparseMatrix::from_triplets(self.total_dim(), deletion.total_dim(), inc)?;

        let mut proj = Vec::new();
        for col in 0..self.total_dim() {
            let mono = self.monomial_at(col);
            if !mono.contains(last) {
                continue;
            }
            let images: Vec<usize> = mono
                .without(last)
                .iter()
                .map(|i| lambda[i].expect("independent sets meet the last label"))
                .collect();
            let (sign, sorted) = sort_sign(&images);
            let image: LabelSet = sorted.iter().copied().collect();
            if image.len() != sorted.len() {
                continue;
            }
            for (row, v) in restriction.rewrite(image).iter() {
                proj.push((row, col, v.clone().signed(sign)));
            }
        }
        let projection = SparseMatrix::from_triplets(restriction.total_dim(), self.total_dim(), proj)?;
        Ok(DeletionRestriction {
            deletion,
            restriction,
            lambda,
            inclusion,
            projection,
        })
    }

    pub fn to_json(&self, a: &OsElement) -> Result<OsElementJson> {
        self.same(a)?;
        let terms = a
            .coeffs
            .iter()
            .map(|(g, c)| {
                let (f, k) = self.locate[g];
                OsTermJson {
                    flat: self.arr.flats().get(f).members.iter().map(|i| i + 1).collect(),
                    basis: k,
                    coeff: c.clone(),
                }
            })
            .collect();
        Ok(OsElementJson { terms })
    }

    pub fn from_json(&self, js: &OsElementJson) -> Result<OsElement> {
        let mut coeffs = SparseVec::new();
        for t in &js.terms {
            if let Some(&bad) = t.flat.iter().find(|&&i| i == 0 || i > self.arr.len()) {
                return Err(Error::LabelOutOfRange(bad));
            }
            let members: LabelSet = t.flat.iter().map(|i| i - 1).collect();
            let f = self
                .arr
                .flats()
                .id_of(members)
                .ok_or_else(|| Error::Shape(format!("{:?} is not a flat", t.flat)))?;
            if t.basis >= self.flat_dim(f) {
                return Err(Error::Shape(format!(
                    "basis index {} out of range for flat {:?}",
                    t.basis, t.flat
                )));
            }
            coeffs.add_term(self.global_index(f, t.basis), &t.coeff);
        }
        Ok(self.element(coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OsTermJson {
    pub flat: Vec<usize>,
    pub basis: usize,
    pub coeff: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OsElementJson {
    pub terms: Vec<OsTermJson>,
}

/// Sign of the permutation sorting `v`, and the sorted vector.
fn sort_sign(v: &[usize]) -> (i32, Vec<usize>) {
    let mut inversions = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] > v[b] {
                inversions += 1;
            }
        }
    }
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    (if inversions % 2 == 0 { 1 } else { -1 }, sorted)
}

/// The nonzero minors `m_IJ = det(m_ij)_{i∈I, j∈J}` over all row sets `I`
/// with `|I| = |J|`.
pub fn minor_expansion(m: &[Vec<i64>], cols: LabelSet) -> Vec<(LabelSet, i64)> {
    let k = cols.len();
    let cols = cols.to_vec();
    LabelSet::full(m.len())
        .subsets_of_size(k)
        .into_iter()
        .filter_map(|rows| {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| cols.iter().map(|&c| i128::from(m[r][c])).collect())
                .collect();
            let d = bareiss_det(sub);
            (d != 0).then(|| (rows, i64::try_from(d).expect("minor fits in i64")))
        })
        .collect()
}

/// Fraction-free determinant of a small integer matrix.
fn bareiss_det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// How a stratum of `L` sits relative to the deletion and restriction.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum StratumCase {
    /// Not contained in the last hypersurface.
    DeletionOnly,
    /// Contained in the last hypersurface but not a stratum of `L'`.
    RestrictionOnly,
    /// Contained in the last hypersurface and a stratum of `L'`.
    Both,
}

/// The deletion–restriction short exact sequence
/// `0 → A_k(L') → A_k(L) → A_{k-1}(L'') → 0`.
pub struct DeletionRestriction {
    pub deletion: OsAlgebra,
    pub restriction: OsAlgebra,
    pub lambda: Vec<Option<usize>>,
    /// `i`, from the deletion into `A(L)`.
    pub inclusion: SparseMatrix,
    /// `j`, from `A(L)` onto the restriction.
    pub projection: SparseMatrix,
}

impl DeletionRestriction {
    /// Checks exactness degree by degree through ranks. `whole` is the
    /// algebra the sequence was built from.
    pub fn check_exact(&self, whole: &OsAlgebra) -> std::result::Result<(), String> {
        let comp = self
            .projection
            .mul(&self.inclusion)
            .map_err(|e| e.to_string())?;
        if !comp.is_zero() {
            return Err("j∘i is not zero".into());
        }
        for k in 0..=whole.arrangement().flats().max_codim() {
            let r = whole.degree_range(k);
            let rp = self.deletion.degree_range(k);
            let rpp = if k == 0 {
                0..0
            } else {
                self.restriction.degree_range(k - 1)
            };
            let i_k = block(&self.inclusion, &r, &rp);
            let j_k = block(&self.projection, &rpp, &r);
            if i_k.rank() != rp.len() {
                return Err(format!("i is not injective in degree {}", k));
            }
            if j_k.rank() != rpp.len() {
                return Err(format!("j is not surjective in degree {}", k));
            }
            if r.len() != rp.len() + rpp.len() {
                return Err(format!(
                    "dim A_{} = {} but deletion and restriction give {} + {}",
                    k,
                    r.len(),
                    rp.len(),
                    rpp.len()
                ));
            }
        }
        Ok(())
    }

    /// Per-stratum splitting: for each flat of `L`, its case and the
    /// dimensions `(dim A_S(L'), dim A_S(L), dim A_S(L''))`.
    pub fn stratum_cases(&self, whole: &OsAlgebra) -> Vec<(FlatId, StratumCase, [usize; 3])> {
        let arr = whole.arrangement();
        let last = arr.len() - 1;
        let del = self.deletion.arrangement();
        let res = self.restriction.arrangement();
        arr.flats()
            .iter()
            .map(|(id, f)| {
                let rest = f.members.without(last);
                let in_deletion = del.codim(rest) == Some(f.codim);
                let dim_del = if in_deletion {
                    let members = del.closure(rest).expect("nonempty");
                    self.deletion.flat_dim(del.flats().id_of(members).expect("closed"))
                } else {
                    0
                };
                let on_last = f.members.contains(last);
                let dim_res = if on_last {
                    let image: LabelSet = rest
                        .iter()
                        .filter_map(|i| self.lambda[i])
                        .collect();
                    let members = res.closure(image).expect("nonempty");
                    self.restriction.flat_dim(res.flats().id_of(members).expect("closed"))
                } else {
                    0
                };
                let case = match (on_last, in_deletion) {
                    (false, _) => StratumCase::DeletionOnly,
                    (true, false) => StratumCase::RestrictionOnly,
                    (true, true) => StratumCase::Both,
                };
                (id, case, [dim_del, whole.flat_dim(id), dim_res])
            })
            .collect()
    }
}

fn block(m: &SparseMatrix, rows: &std::ops::Range<usize>, cols: &std::ops::Range<usize>) -> SparseMatrix {
    SparseMatrix::from_triplets(
        rows.len(),
        cols.len(),
        m.entries()
            .filter(|(r, c, _)| rows.contains(r) && cols.contains(c))
            .map(|(r, c, v)| (r - rows.start, c - cols.start, v.clone())),
    )
    .expect("block indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ls(v: &[usize]) -> LabelSet {
        LabelSet::from_slice(v)
    }

    pub(crate) fn braid(n: usize) -> Arrangement {
        let mut normals = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                normals.push(v);
            }
        }
        Arrangement::from_int_vectors(n, &normals).unwrap()
    }

    fn boolean(n: usize) -> Arrangement {
        let normals: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Arrangement::from_int_vectors(n, &normals).unwrap()
    }

    fn concurrent() -> OsAlgebra {
        OsAlgebra::new(Arrangement::from_int_vectors(2, &[vec![1, 0], vec![0, 1], vec![1, -1]]).unwrap())
    }

    fn mono(os: &OsAlgebra, v: &[usize]) -> OsElement {
        os.monomial(ls(v)).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(concurrent().poincare_polynomial(), vec![1, 3, 2]);
        assert_eq!(OsAlgebra::new(boolean(4)).poincare_polynomial(), vec![1, 4, 6, 4, 1]);
        assert_eq!(OsAlgebra::new(braid(4)).poincare_polynomial(), vec![1, 6, 11, 6]);
    }

    #[test]
    fn products() {
        let os = concurrent();
        let e = |i| os.generator(i).unwrap();
        assert_eq!(os.product(&e(0), &e(1)).unwrap(), mono(&os, &[0, 1]));
        assert!(os.product(&e(0), &e(0)).unwrap().is_zero());
        let e23 = os.product(&e(1), &e(2)).unwrap();
        assert_eq!(e23, &mono(&os, &[0, 2]) - &mono(&os, &[0, 1]));
    }

    #[test]
    fn deltas() {
        let os = concurrent();
        let d = os.delta(&mono(&os, &[0, 1])).unwrap();
        assert_eq!(d, &mono(&os, &[1]) - &mono(&os, &[0]));
        assert_eq!(os.delta(&mono(&os, &[0])).unwrap(), os.unit());
        let x = &mono(&os, &[0, 1]) - &mono(&os, &[0, 2]);
        assert_eq!(os.delta(&x).unwrap(), &mono(&os, &[1]) - &mono(&os, &[2]));
    }

    #[test]
    fn mismatched_algebras() {
        let a = concurrent();
        let b = concurrent();
        assert_eq!(a.product(&a.unit(), &b.unit()), Err(Error::MismatchedAlgebras));
    }

    #[test]
    fn braid_poincare_factorizes() {
        for n in 2..=5 {
            let mut expected = vec![1usize];
            for k in 1..n {
                let mut next = vec![0; expected.len() + 1];
                for (d, &c) in expected.iter().enumerate() {
                    next[d] += c;
                    next[d + 1] += k * c;
                }
                expected = next;
            }
            assert_eq!(OsAlgebra::new(braid(n)).poincare_polynomial(), expected);
        }
    }

    /// Independent route: per flat, span all independent monomials and
    /// quotient by the relations of dependent sets with that closure.
    #[test]
    fn straightening_agrees_with_relation_elimination() {
        for arr in [braid(4), Arrangement::from_int_vectors(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap()] {
            let os = OsAlgebra::new(arr.clone());
            for (fid, f) in arr.flats().iter() {
                let indep: Vec<LabelSet> = f
                    .members
                    .subsets_of_size(f.codim)
                    .into_iter()
                    .filter(|&s| arr.independent(s))
                    .collect();
                let pos: HashMap<LabelSet, usize> = indep.iter().enumerate().map(|(k, &s)| (s, k)).collect();
                let mut rels = Vec::new();
                for d in f.members.subsets_of_size(f.codim + 1) {
                    let mut r = SparseVec::new();
                    for (s, i) in d.iter().enumerate() {
                        if let Some(&k) = pos.get(&d.without(i)) {
                            r.add_term(k, &Rational::from_int(if s % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    if !r.is_zero() {
                        rels.push(r);
                    }
                }
                let rel_mat = SparseMatrix::from_columns(indep.len(), &rels).unwrap();
                let rank = rel_mat.rank();
                assert_eq!(indep.len() - rank, os.flat_dim(fid));
                // e_I - normal_form(e_I) must be a combination of relations.
                for &s in &indep {
                    let mut diff = SparseVec::unit(pos[&s]);
                    for (g, c) in os.rewrite(s).iter() {
                        diff.add_term(pos[&os.monomial_at(g)], &(-c));
                    }
                    let mut cols = rels.clone();
                    cols.push(diff);
                    assert_eq!(SparseMatrix::from_columns(indep.len(), &cols).unwrap().rank(), rank);
                }
            }
        }
    }

    #[test]
    fn minors() {
        let m = vec![vec![1, 0], vec![1, 1], vec![0, 1]];
        let got = minor_expansion(&m, ls(&[0, 1]));
        assert_eq!(got, vec![(ls(&[0, 1]), 1), (ls(&[0, 2]), 1), (ls(&[1, 2]), 1)]);
        assert_eq!(bareiss_det(vec![vec![2, 3, 1], vec![4, 1, 5], vec![0, 2, 7]]), -82);
    }

    #[test]
    fn functorial_identity() {
        let os = concurrent();
        let id: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| i64::from(i == j)).collect()).collect();
        assert_eq!(os.functorial_map(&os, &id).unwrap(), SparseMatrix::identity(os.total_dim()));
        assert_eq!(
            os.functorial_map(&os, &[vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, 1]]).unwrap_err(),
            Error::NegativeMultiplicity(1, 1)
        );
    }

    #[test]
    fn deletion_restriction_examples() {
        let b2 = OsAlgebra::new(boolean(2));
        let dr = b2.deletion_restriction().unwrap();
        dr.check_exact(&b2).unwrap();
        assert_eq!(dr.deletion.dim(1) + dr.restriction.dim(0), b2.dim(1));

        let c = concurrent();
        let dr = c.deletion_restriction().unwrap();
        dr.check_exact(&c).unwrap();
        assert_eq!((dr.deletion.dim(2), dr.restriction.dim(1)), (1, 1));

        let b3 = OsAlgebra::new(braid(3));
        let dr = b3.deletion_restriction().unwrap();
        let p = b3.poincare_polynomial();
        let pd = dr.deletion.poincare_polynomial();
        let pr = dr.restriction.poincare_polynomial();
        for k in 0..p.len() {
            let rhs = pd.get(k).copied().unwrap_or(0) + if k > 0 { pr.get(k - 1).copied().unwrap_or(0) } else { 0 };
            assert_eq!(p[k], rhs);
        }
        for (_, case, [a, b, c]) in dr.stratum_cases(&b3) {
            assert_eq!(b, a + c, "{:?}", case);
        }
    }

    #[test]
    fn json_roundtrip() {
        let os = concurrent();
        let x = &mono(&os, &[1, 2]) - &os.generator(0).unwrap();
        let js = os.to_json(&x).unwrap();
        let text = serde_json::to_string(&js).unwrap();
        let back: OsElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(os.from_json(&back).unwrap(), x);
    }

    fn random_element(os: &OsAlgebra, degree: usize, seed: &[i64]) -> OsElement {
        let r = os.degree_range(degree);
        let v: SparseVec = r
            .clone()
            .zip(seed.iter().cycle())
            .map(|(i, &c)| (i, Rational::from_int(c)))
            .collect();
        os.element(v)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn delta_squares_to_zero(seed in prop::collection::vec(-3i64..=3, 1..12), k in 0usize..=3) {
            let os = OsAlgebra::new(braid(4));
            let a = random_element(&os, k, &seed);
            prop_assert!(os.delta(&os.delta(&a).unwrap()).unwrap().is_zero());
        }

        #[test]
        fn delta_is_a_derivation(sa in prop::collection::vec(-3i64..=3, 1..8), sb in prop::collection::vec(-3i64..=3, 1..8), ka in 0usize..=2, kb in 0usize..=2) {
            let os = OsAlgebra::new(braid(4));
            let a = random_element(&os, ka, &sa);
            let b = random_element(&os, kb, &sb);
            let lhs = os.delta(&os.product(&a, &b).unwrap()).unwrap();
            let t1 = os.product(&os.delta(&a).unwrap(), &b).unwrap();
            let t2 = os.product(&a, &os.delta(&b).unwrap()).unwrap();
            let sign = if ka % 2 == 0 { Rational::one() } else { -Rational::one() };
            prop_assert_eq!(lhs, &t1 + &t2.scaled(&sign));
        }

        #[test]
        fn graded_commutative(sa in prop::collection::vec(-3i64..=3, 1..8), sb in prop::collection::vec(-3i64..=3, 1..8), ka in 0usize..=2, kb in 0usize..=2) {
            let os = OsAlgebra::new(braid(4));
            let a = random_element(&os, ka, &sa);
            let b = random_element(&os, kb, &sb);
            let sign = if (ka * kb) % 2 == 0 { Rational::one() } else { -Rational::one() };
            prop_assert_eq!(os.product(&a, &b).unwrap(), os.product(&b, &a).unwrap().scaled(&sign));
        }

        /// A(ψ∘φ) = A(φ)∘A(ψ) on Boolean arrangements, where every
        /// multiplicity matrix defines a map.
        #[test]
        fn functoriality_composes(
            mphi in prop::collection::vec(prop::collection::vec(0i64..=2, 3), 4),
            mpsi in prop::collection::vec(prop::collection::vec(0i64..=2, 3), 3),
        ) {
            let a4 = OsAlgebra::new(boolean(4));
            let a3 = OsAlgebra::new(boolean(3));
            let a3b = OsAlgebra::new(boolean(3));
            let f_phi = a3.functorial_map(&a4, &mphi).unwrap();
            let f_psi = a3b.functorial_map(&a3, &mpsi).unwrap();
            let composite: Vec<Vec<i64>> = (0..4)
                .map(|i| (0..3).map(|j| (0..3).map(|k| mphi[i][k] * mpsi[k][j]).sum()).collect())
                .collect();
            let f_comp = a3b.functorial_map(&a4, &composite).unwrap();
            prop_assert_eq!(f_comp, f_phi.mul(&f_psi).unwrap());
        }
    }
}
