//! The bigraded Gysin model of an arrangement complement.
//!
//! `M_q^n = ⊕_{codim S = q-n} H^{2n-q}(S) ⊗ A_S(L)`, with differential
//! built from Gysin maps and the `δ`-components of the Orlik–Solomon
//! algebra, and product built from restriction, cup product and the
//! Orlik–Solomon product. Its cohomology is the associated graded of the
//! weight filtration on the cohomology of the complement.

mod map;

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Neg, Range, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

pub use map::{blowup_map, BlowupMap, ModelMap, QuasiIsoReport, QuasiIsoRow};

use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix, SparseVec};
use crate::geometry::GeometricArrangement;
use crate::matroid::FlatId;
use crate::orlik_solomon::OsAlgebra;

/// Default bound on the total number of basis elements of a model.
pub const DEFAULT_CAP: usize = 200_000;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A basis element `c ⊗ e_I` of the model: a basis class of `H(S)` and the
/// index of an nbc monomial of `A_S`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisKey {
    pub flat: FlatId,
    pub class: usize,
    pub os: usize,
}

#[derive(Clone, Debug)]
pub struct GysinModel {
    id: u64,
    geom: GeometricArrangement,
    os: OsAlgebra,
    keys: Vec<BasisKey>,
    bidegrees: Vec<(usize, usize)>,
    index: HashMap<BasisKey, usize>,
    ranges: BTreeMap<(usize, usize), Range<usize>>,
    diff: SparseMatrix,
}

/// An element of a [`GysinModel`] on its basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelElement {
    owner: u64,
    coeffs: SparseVec,
}

impl ModelElement {
    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn scaled(&self, c: &Rational) -> ModelElement {
        ModelElement {
            owner: self.owner,
            coeffs: self.coeffs.scaled(c),
        }
    }
}

impl Add for &ModelElement {
    type Output = ModelElement;

    /// Panics if the elements belong to different models.
    fn add(self, rhs: &ModelElement) -> ModelElement {
        assert_eq!(self.owner, rhs.owner, "elements of different models");
        let mut coeffs = self.coeffs.clone();
        coeffs.add_scaled(&rhs.coeffs, &Rational::one());
        ModelElement {
            owner: self.owner,
            coeffs,
        }
    }
}

impl Sub for &ModelElement {
    type Output = ModelElement;

    fn sub(self, rhs: &ModelElement) -> ModelElement {
        self + &(-rhs)
    }
}

impl Neg for &ModelElement {
    type Output = ModelElement;

    fn neg(self) -> ModelElement {
        ModelElement {
            owner: self.owner,
            coeffs: self.coeffs.neg(),
        }
    }
}

fn sign(parity: usize) -> Rational {
    if parity % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl GysinModel {
    pub fn new(geom: GeometricArrangement) -> Result<Self> {
        Self::with_cap(geom, DEFAULT_CAP)
    }

    /// Builds the model, failing with [`Error::InstanceTooLarge`] when the
    /// total dimension exceeds `cap`.
    pub fn with_cap(geom: GeometricArrangement, cap: usize) -> Result<Self> {
        let os = OsAlgebra::new(geom.arrangement().clone());
        let flats = geom.arrangement().flats();
        let total: usize = flats.ids().map(|f| geom.ring(f).dim() * os.flat_dim(f)).sum();
        if total > cap {
            return Err(Error::InstanceTooLarge { dim: total, cap });
        }
        let mut entries: Vec<((usize, usize), BasisKey)> = Vec::with_capacity(total);
        for (f, flat) in flats.iter() {
            let ring = geom.ring(f);
            let p = flat.codim;
            for class in 0..ring.dim() {
                let k = ring.degree(class);
                for o in 0..os.flat_dim(f) {
                    entries.push(((k + 2 * p, k + p), BasisKey { flat: f, class, os: o }));
                }
            }
        }
        entries.sort();
        let keys: Vec<BasisKey> = entries.iter().map(|e| e.1).collect();
        let bidegrees: Vec<(usize, usize)> = entries.iter().map(|e| e.0).collect();
        let index: HashMap<BasisKey, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut ranges: BTreeMap<(usize, usize), Range<usize>> = BTreeMap::new();
        for (i, &qn) in bidegrees.iter().enumerate() {
            ranges.entry(qn).or_insert(i..i).end = i + 1;
        }
        let mut model = GysinModel {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            geom,
            os,
            keys,
            bidegrees,
            index,
            ranges,
            diff: SparseMatrix::zero(0, 0),
        };
        model.diff = model.build_differential()?;
        Ok(model)
    }

    fn build_differential(&self) -> Result<SparseMatrix> {
        let flats = self.geom.arrangement().flats();
        // δ-components per (flat, nbc index): image as (flat', local index, coeff)
        let mut deltas: HashMap<(FlatId, usize), Vec<(FlatId, usize, Rational)>> = HashMap::new();
        for f in flats.ids() {
            for (o, &mono) in self.os.basis(f).iter().enumerate() {
                let img = self
                    .os
                    .delta_monomial(mono)
                    .iter()
                    .map(|(g, c)| {
                        let (f2, o2) = self.os.locate(g);
                        (f2, o2, c.clone())
                    })
                    .collect();
                deltas.insert((f, o), img);
            }
        }
        let mut triplets = Vec::new();
        for (col, key) in self.keys.iter().enumerate() {
            let (q, _) = self.bidegrees[col];
            let eps = sign(q);
            for (f2, o2, c) in &deltas[&(key.flat, key.os)] {
                let img = self.geom.gysin_basis(key.flat, *f2, key.class)?;
                for (class, v) in img.iter() {
                    let row = self.index[&BasisKey {
                        flat: *f2,
                        class,
                        os: *o2,
                    }];
                    triplets.push((row, col, &(v * c) * &eps));
                }
            }
        }
        SparseMatrix::from_triplets(self.keys.len(), self.keys.len(), triplets)
    }

    pub fn geometry(&self) -> &GeometricArrangement {
        &self.geom
    }

    pub fn os(&self) -> &OsAlgebra {
        &self.os
    }

    pub fn total_dim(&self) -> usize {
        self.keys.len()
    }

    pub fn key(&self, i: usize) -> BasisKey {
        self.keys[i]
    }

    pub fn index_of(&self, key: &BasisKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// `(q, n)` of a basis element.
    pub fn bidegree(&self, i: usize) -> (usize, usize) {
        self.bidegrees[i]
    }

    /// Global indices spanning `M_q^n`.
    pub fn range(&self, q: usize, n: usize) -> Range<usize> {
        self.ranges.get(&(q, n)).cloned().unwrap_or(0..0)
    }

    pub fn dim(&self, q: usize, n: usize) -> usize {
        self.range(q, n).len()
    }

    /// Bidegrees `(q, n)` with `M_q^n ≠ 0`, sorted.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        self.ranges.keys().copied().collect()
    }

    pub fn max_weight(&self) -> usize {
        self.ranges.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Human-readable name of a basis element, e.g. `h ⊗ e{1,2}`.
    pub fn describe(&self, i: usize) -> String {
        let k = self.keys[i];
        let arr = self.geom.arrangement();
        let mono = self.os.basis(k.flat)[k.os];
        let names: Vec<&str> = mono.iter().map(|l| arr.names()[l].as_str()).collect();
        format!("{} ⊗ e{{{}}}", self.geom.ring(k.flat).label(k.class), names.join(","))
    }

    /// The full differential as a square matrix on the global basis.
    pub fn differential(&self) -> &SparseMatrix {
        &self.diff
    }

    /// `d: M_q^n → M_q^{n+1}`.
    pub fn differential_block(&self, q: usize, n: usize) -> SparseMatrix {
        block(&self.diff, &self.range(q, n + 1), &self.range(q, n))
    }

    pub fn element(&self, coeffs: SparseVec) -> ModelElement {
        ModelElement {
            owner: self.id,
            coeffs,
        }
    }

    pub fn basis_element(&self, i: usize) -> ModelElement {
        self.element(SparseVec::unit(i))
    }

    pub fn zero(&self) -> ModelElement {
        self.element(SparseVec::new())
    }

    pub fn unit(&self) -> ModelElement {
        let i = self.index[&BasisKey {
            flat: FlatId(0),
            class: 0,
            os: 0,
        }];
        self.basis_element(i)
    }

    fn same(&self, a: &ModelElement) -> Result<()> {
        if a.owner != self.id {
            return Err(Error::MismatchedAlgebras);
        }
        Ok(())
    }

    pub fn d(&self, a: &ModelElement) -> Result<ModelElement> {
        self.same(a)?;
        Ok(self.element(self.diff.mul_vec(&a.coeffs)))
    }

    /// Bidegree of a homogeneous element; `None` for zero or mixed.
    pub fn bidegree_of(&self, a: &ModelElement) -> Option<(usize, usize)> {
        let mut it = a.coeffs.iter().map(|(i, _)| self.bidegrees[i]);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Product of two basis elements.
    pub fn product_basis(&self, i: usize, j: usize) -> Result<SparseVec> {
        let (a, b) = (self.keys[i], self.keys[j]);
        let (q, n) = self.bidegrees[i];
        let (q2, _) = self.bidegrees[j];
        let arr = self.geom.arrangement();
        let flats = arr.flats();
        let (fa, fb) = (flats.get(a.flat), flats.get(b.flat));
        let Some(t) = arr.flat_of(fa.members.union(fb.members)) else {
            return Ok(SparseVec::new());
        };
        if flats.get(t).codim != fa.codim + fb.codim {
            return Ok(SparseVec::new());
        }
        let os_part = self
            .os
            .product_monomials(self.os.basis(a.flat)[a.os], self.os.basis(b.flat)[b.os]);
        if os_part.is_zero() {
            return Ok(SparseVec::new());
        }
        let ra = self.geom.restrict_basis(a.flat, t, a.class)?;
        let rb = self.geom.restrict_basis(b.flat, t, b.class)?;
        let cup = self.geom.ring(t).mul(&ra, &rb);
        let eps = sign((q - n) * q2);
        let mut out = SparseVec::new();
        for (g, c) in os_part.iter() {
            let (f, o) = self.os.locate(g);
            debug_assert_eq!(f, t);
            for (class, v) in cup.iter() {
                let idx = self.index[&BasisKey { flat: f, class, os: o }];
                out.add_term(idx, &(&(c * v) * &eps));
            }
        }
        Ok(out)
    }

    pub fn product(&self, a: &ModelElement, b: &ModelElement) -> Result<ModelElement> {
        self.same(a)?;
        self.same(b)?;
        let mut out = SparseVec::new();
        for (i, x) in a.coeffs.iter() {
            for (j, y) in b.coeffs.iter() {
                let p = self.product_basis(i, j)?;
                if !p.is_zero() {
                    out.add_scaled(&p, &(x * y));
                }
            }
        }
        Ok(self.element(out))
    }

    /// Dimensions of the weight-graded cohomology. Only meaningful when
    /// [`GysinModel::check_d_squared`] passes.
    pub fn weight_betti(&self) -> BettiTable {
        let mut entries = Vec::new();
        let mut ranks: HashMap<(usize, usize), usize> = HashMap::new();
        let mut rank = |q: usize, n: usize| -> usize {
            *ranks
                .entry((q, n))
                .or_insert_with(|| self.differential_block(q, n).rank())
        };
        for &(q, n) in self.ranges.keys() {
            let before = if n == 0 { 0 } else { rank(q, n - 1) };
            // saturating: without d² = 0 the numbers are meaningless anyway
            let dim = self.dim(q, n).saturating_sub(rank(q, n) + before);
            entries.push(BettiEntry { n, q, dim });
        }
        BettiTable::new(entries, 2 * self.geom.dim())
    }

    /// Cocycles whose classes form a basis of the cohomology at `(q, n)`.
    pub fn cohomology_basis(&self, q: usize, n: usize) -> Vec<ModelElement> {
        let range = self.range(q, n);
        let (cycles, boundaries) = self.cycles_and_boundaries(q, n);
        let mut cols = boundaries.clone();
        cols.extend(cycles.iter().cloned());
        let m = SparseMatrix::from_columns(range.len(), &cols).expect("column lengths match");
        m.pivot_columns()
            .into_iter()
            .filter(|&c| c >= boundaries.len())
            .map(|c| self.element(shift(&cols[c], range.start)))
            .collect()
    }

    fn cycles_and_boundaries(&self, q: usize, n: usize) -> (Vec<SparseVec>, Vec<SparseVec>) {
        let cycles = self.differential_block(q, n).kernel_basis();
        let boundaries = if n == 0 {
            Vec::new()
        } else {
            self.differential_block(q, n - 1).columns()
        };
        (cycles, boundaries)
    }

    /// Coordinates of the class of a cocycle `z` in
    /// [`GysinModel::cohomology_basis`].
    pub fn reduce(&self, q: usize, n: usize, z: &ModelElement) -> Result<Vec<Rational>> {
        self.same(z)?;
        let range = self.range(q, n);
        if z.coeffs.iter().any(|(i, _)| !range.contains(&i)) {
            return Err(Error::Shape(format!("element is not in bidegree ({}, {})", q, n)));
        }
        if !self.d(z)?.is_zero() {
            return Err(Error::NotClosed);
        }
        let reps = self.cohomology_basis(q, n);
        let (_, boundaries) = self.cycles_and_boundaries(q, n);
        let mut cols = boundaries.clone();
        cols.extend(reps.iter().map(|r| unshift(&r.coeffs, range.start)));
        let m = SparseMatrix::from_columns(range.len(), &cols)?;
        let x = m
            .solve(&unshift(&z.coeffs, range.start))
            .ok_or(Error::NotClosed)?;
        Ok((0..reps.len()).map(|k| x.get(boundaries.len() + k)).collect())
    }

    /// Checks `d² = 0` in every bidegree.
    pub fn check_d_squared(&self) -> std::result::Result<(), String> {
        let dd = self.diff.mul(&self.diff).map_err(|e| e.to_string())?;
        let first = dd.entries().next().map(|(r, c, _)| (r, c));
        match first {
            None => Ok(()),
            Some((r, c)) => {
                let (q, n) = self.bidegrees[c];
                Err(format!(
                    "d² ≠ 0 at (q={}, n={}): {} hits {}",
                    q,
                    n,
                    self.describe(c),
                    self.describe(r)
                ))
            }
        }
    }

    /// Embeds a class of `H^n(X)` of the ambient variety into `M_n^n`.
    pub fn ambient_class(&self, x: &SparseVec) -> ModelElement {
        let coeffs = x
            .iter()
            .map(|(c, v)| {
                let idx = self.index[&BasisKey {
                    flat: FlatId(0),
                    class: c,
                    os: 0,
                }];
                (idx, v.clone())
            })
            .collect();
        self.element(coeffs)
    }
}

fn shift(v: &SparseVec, offset: usize) -> SparseVec {
    v.iter().map(|(i, c)| (i + offset, c.clone())).collect()
}

fn unshift(v: &SparseVec, offset: usize) -> SparseVec {
    v.iter().map(|(i, c)| (i - offset, c.clone())).collect()
}

pub(crate) fn block(m: &SparseMatrix, rows: &Range<usize>, cols: &Range<usize>) -> SparseMatrix {
    SparseMatrix::from_triplets(
        rows.len(),
        cols.len(),
        m.entries()
            .filter(|(r, c, _)| rows.contains(r) && cols.contains(c))
            .map(|(r, c, v)| (r - rows.start, c - cols.start, v.clone())),
    )
    .expect("block indices in range")
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub n: usize,
    pub q: usize,
    pub dim: usize,
}

/// Weight-graded Betti numbers `dim gr^W_q H^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    /// One entry per bidegree where the model is nonzero, sorted by
    /// `(n, q)`.
    pub betti: Vec<BettiEntry>,
    /// `dim H^n` for `n = 0..=2·dim X`.
    pub totals: Vec<usize>,
    pub euler: i64,
}

impl BettiTable {
    pub fn new(mut entries: Vec<BettiEntry>, top: usize) -> Self {
        entries.sort_by_key(|e| (e.n, e.q));
        let mut totals = vec![0; top + 1];
        for e in &entries {
            if e.n >= totals.len() {
                totals.resize(e.n + 1, 0);
            }
            totals[e.n] += e.dim;
        }
        let euler = totals
            .iter()
            .enumerate()
            .map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        BettiTable {
            betti: entries,
            totals,
            euler,
        }
    }

    pub fn get(&self, n: usize, q: usize) -> usize {
        self.betti
            .iter()
            .find(|e| e.n == n && e.q == q)
            .map_or(0, |e| e.dim)
    }

    /// Total Betti numbers with trailing zeros removed.
    pub fn trimmed_totals(&self) -> Vec<usize> {
        let mut t = self.totals.clone();
        while t.len() > 1 && t.last() == Some(&0) {
            t.pop();
        }
        t
    }

    /// Nonzero entries only.
    pub fn nonzero(&self) -> impl Iterator<Item = &BettiEntry> {
        self.betti.iter().filter(|e| e.dim > 0)
    }
}
