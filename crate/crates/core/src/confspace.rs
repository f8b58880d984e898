//! Configuration spaces of points on a smooth projective curve.
//!
//! For a curve `Y` of genus `g` and a graph `Γ` on `V`, the complement of
//! the edge diagonals in `Y^V` has two models: the Gysin model of the
//! diagonal arrangement, and the algebra `N(Y, Γ)` generated over
//! `H(Y^V)` by degree-one classes `G_e`, one per edge, with `dG_e = [Δ_e]`.
//! This module builds `N`, the comparison maps `α: N → M` and `β: M → N`,
//! and the chromatic polynomial that governs Euler characteristics.

use std::collections::HashMap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix, SparseVec};
use crate::geometry::{GeometricArrangement, Graph};
use crate::matroid::{sgn, FlatId, LabelSet};
use crate::model::{BasisKey, BettiEntry, BettiTable, GysinModel};
use crate::orlik_solomon::OsAlgebra;

/// The algebra `N(Y, Γ)`. A basis element `(S, c, I)` stands for
/// `f_S^*(c) · G_I`, where `I` is an nbc set with closure `S`, `c` a basis
/// class of `H(S) ≅ H(Y^{V/S})` and `f_S: Y^V → S` keeps the coordinate of
/// the least vertex of every block.
#[derive(Clone, Debug)]
pub struct BlochModel {
    geom: GeometricArrangement,
    os: OsAlgebra,
    keys: Vec<BasisKey>,
    degrees: Vec<usize>,
    index: HashMap<BasisKey, usize>,
    lifts: Vec<SparseVec>,
    diagonals: Vec<SparseVec>,
    diff: SparseMatrix,
}

impl BlochModel {
    pub fn new(genus: usize, graph: &Graph) -> Result<Self> {
        Self::from_geometry(GeometricArrangement::curve_power(genus, graph)?, crate::model::DEFAULT_CAP)
    }

    /// Builds `N` over a curve-power geometry. The geometry supplies the
    /// ring `H(Y^V)`, restrictions to diagonals and the diagonal classes.
    pub fn from_geometry(geom: GeometricArrangement, cap: usize) -> Result<Self> {
        let edges = match geom.curve_data() {
            Some(c) => c.graph.edges().len(),
            None => return Err(Error::InvalidMap("not a curve geometry".into())),
        };
        let os = OsAlgebra::new(geom.arrangement().clone());
        let flats = geom.arrangement().flats();
        let total: usize = flats.ids().map(|f| geom.ring(f).dim() * os.flat_dim(f)).sum();
        if total > cap {
            return Err(Error::InstanceTooLarge { dim: total, cap });
        }
        let mut entries = Vec::with_capacity(total);
        for (f, flat) in flats.iter() {
            let ring = geom.ring(f);
            for class in 0..ring.dim() {
                for os_idx in 0..os.flat_dim(f) {
                    entries.push((ring.degree(class) + flat.codim, BasisKey { flat: f, class, os: os_idx }));
                }
            }
        }
        entries.sort();
        let keys: Vec<BasisKey> = entries.iter().map(|e| e.1).collect();
        let degrees = entries.iter().map(|e| e.0).collect();
        let index = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut lifts = Vec::with_capacity(keys.len());
        for k in &keys {
            lifts.push(geom.splitting_pullback(k.flat, FlatId(0), k.class)?);
        }
        let diagonals = (0..edges).map(|e| geom.diagonal_of_edge(e)).collect::<Result<_>>()?;
        let mut model = BlochModel {
            geom,
            os,
            keys,
            degrees,
            index,
            lifts,
            diagonals,
            diff: SparseMatrix::zero(0, 0),
        };
        model.diff = model.build_differential()?;
        Ok(model)
    }

    pub fn geometry(&self) -> &GeometricArrangement {
        &self.geom
    }

    pub fn total_dim(&self) -> usize {
        self.keys.len()
    }

    pub fn key(&self, i: usize) -> BasisKey {
        self.keys[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn range(&self, n: usize) -> Range<usize> {
        let start = self.degrees.partition_point(|&d| d < n);
        let end = self.degrees.partition_point(|&d| d <= n);
        start..end
    }

    /// Weight of a basis element: cohomological degree of the class plus
    /// twice the number of generators.
    pub fn weight(&self, i: usize) -> usize {
        let k = self.keys[i];
        self.geom.ring(k.flat).degree(k.class) + 2 * self.monomial(i).len()
    }

    fn monomial(&self, i: usize) -> LabelSet {
        let k = self.keys[i];
        self.os.basis(k.flat)[k.os]
    }

    /// Rewrites `x · G_I` for an ambient class `x ∈ H(Y^V)` on the basis.
    pub fn normalize(&self, x: &SparseVec, set: LabelSet) -> Result<SparseVec> {
        let arr = self.geom.arrangement();
        if !arr.is_independent(set)? {
            return Ok(SparseVec::new());
        }
        let t = arr.flat_of(set).expect("independent sets have a flat");
        let restricted = self.geom.restrict(FlatId(0), t, x)?;
        let mut out = SparseVec::new();
        for (g, c) in self.os.rewrite(set).iter() {
            let (f, o) = self.os.locate(g);
            debug_assert_eq!(f, t);
            for (class, v) in restricted.iter() {
                out.add_term(self.index[&BasisKey { flat: f, class, os: o }], &(c * v));
            }
        }
        Ok(out)
    }

    fn ambient_mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.geom.ring(FlatId(0)).mul(a, b)
    }

    fn build_differential(&self) -> Result<SparseMatrix> {
        let ring = self.geom.ring(FlatId(0));
        let mut triplets = Vec::new();
        for col in 0..self.keys.len() {
            let set = self.monomial(col);
            let lift = &self.lifts[col];
            let deg = ring.degree(lift.iter().next().map_or(0, |(i, _)| i));
            for (s, e) in set.iter().enumerate() {
                let sign = if (deg + s) % 2 == 0 { 1 } else { -1 };
                let x = self.ambient_mul(lift, &self.diagonals[e]);
                for (row, v) in self.normalize(&x, set.without(e))?.iter() {
                    triplets.push((row, col, v.clone().signed(sign)));
                }
            }
        }
        SparseMatrix::from_triplets(self.keys.len(), self.keys.len(), triplets)
    }

    pub fn differential(&self) -> &SparseMatrix {
        &self.diff
    }

    pub fn d(&self, x: &SparseVec) -> SparseVec {
        self.diff.mul_vec(x)
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Result<SparseVec> {
        let (a, b) = (self.monomial(i), self.monomial(j));
        if !a.is_disjoint(b) {
            return Ok(SparseVec::new());
        }
        let ring = self.geom.ring(FlatId(0));
        let cj = ring.degree(self.lifts[j].iter().next().map_or(0, |(k, _)| k));
        let sign = sgn(a, b)? * if (a.len() * cj) % 2 == 0 { 1 } else { -1 };
        let x = self.ambient_mul(&self.lifts[i], &self.lifts[j]);
        Ok(self.normalize(&x, a.union(b))?.scaled(&Rational::from_int(sign as i64)))
    }

    pub fn product(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(&self.product_basis(i, j)?, &(a * b));
            }
        }
        Ok(out)
    }

    pub fn check_d_squared(&self) -> std::result::Result<(), String> {
        let dd = self.diff.mul(&self.diff).map_err(|e| e.to_string())?;
        let first = dd.entries().next().map(|(_, c, _)| c);
        match first {
            None => Ok(()),
            Some(c) => Err(format!("d² ≠ 0 on basis element {}", c)),
        }
    }

    /// Betti numbers graded by degree and weight.
    pub fn betti(&self) -> BettiTable {
        let mut by: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for i in 0..self.keys.len() {
            by.entry((self.degrees[i], self.weight(i))).or_default().push(i);
        }
        let block = |rows: &[usize], cols: &[usize]| {
            let rpos: HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
            let cpos: HashMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
            let t = self.diff.entries().filter_map(|(r, c, v)| {
                Some((*rpos.get(&r)?, *cpos.get(&c)?, v.clone()))
            });
            SparseMatrix::from_triplets(rows.len(), cols.len(), t).expect("in range").rank()
        };
        let empty = Vec::new();
        let mut entries = Vec::new();
        for (&(n, q), cols) in &by {
            let next = by.get(&(n + 1, q)).unwrap_or(&empty);
            let out_rank = block(next, cols);
            let in_rank = match n.checked_sub(1).and_then(|m| by.get(&(m, q))) {
                Some(prev) => block(cols, prev),
                None => 0,
            };
            entries.push(BettiEntry {
                n,
                q,
                dim: cols.len() - out_rank - in_rank,
            });
        }
        BettiTable::new(entries, 2 * self.geom.dim())
    }

    /// `α: N → M`, computed as products in `M` of the embedded ambient
    /// lift and the degree-one generators `1 ⊗ e_e`.
    pub fn alpha(&self, m: &GysinModel) -> Result<SparseMatrix> {
        self.check_same_geometry(m)?;
        let arr = self.geom.arrangement();
        let generators: Vec<_> = (0..arr.len())
            .map(|e| {
                let f = arr.flat_of(LabelSet::singleton(e)).expect("hyperplanes are flats");
                let key = BasisKey { flat: f, class: 0, os: 0 };
                m.basis_element(m.index_of(&key).expect("generator in model"))
            })
            .collect();
        let mut cols = Vec::with_capacity(self.keys.len());
        for i in 0..self.keys.len() {
            let mut x = m.ambient_class(&self.lifts[i]);
            for e in self.monomial(i).iter() {
                x = m.product(&x, &generators[e])?;
            }
            cols.push(x.coeffs().clone());
        }
        SparseMatrix::from_columns(m.total_dim(), &cols)
    }

    /// `β: M → N`, sending `c ⊗ e_I` to `f_S^*(c) · G_I`.
    pub fn beta(&self, m: &GysinModel) -> Result<SparseMatrix> {
        self.check_same_geometry(m)?;
        let mut cols = Vec::with_capacity(m.total_dim());
        for i in 0..m.total_dim() {
            let k = m.key(i);
            let lift = self.geom.splitting_pullback(k.flat, FlatId(0), k.class)?;
            cols.push(self.normalize(&lift, m.os().basis(k.flat)[k.os])?);
        }
        SparseMatrix::from_columns(self.keys.len(), &cols)
    }

    fn check_same_geometry(&self, m: &GysinModel) -> Result<()> {
        let (a, b) = (self.geom.curve_data(), m.geometry().curve_data());
        match (a, b) {
            (Some(a), Some(b)) if a.genus == b.genus && a.graph == b.graph => Ok(()),
            _ => Err(Error::MismatchedAlgebras),
        }
    }

    /// Checks that `α` and `β` are mutually inverse maps of differential
    /// graded algebras. Multiplicativity is checked on every pair of basis
    /// elements when `all_pairs` is set, and on products with degree-one
    /// generators and ambient classes otherwise.
    pub fn verify_comparison(&self, m: &GysinModel, all_pairs: bool) -> Result<ComparisonReport> {
        let alpha = self.alpha(m)?;
        let beta = self.beta(m)?;
        let mut report = ComparisonReport::default();
        report.inverse = alpha.mul(&beta)? == SparseMatrix::identity(m.total_dim())
            && beta.mul(&alpha)? == SparseMatrix::identity(self.total_dim());
        report.alpha_chain = m.differential().mul(&alpha)? == alpha.mul(&self.diff)?;
        report.beta_chain = self.diff.mul(&beta)? == beta.mul(m.differential())?;
        let pairs: Vec<(usize, usize)> = if all_pairs {
            (0..self.total_dim())
                .flat_map(|i| (0..self.total_dim()).map(move |j| (i, j)))
                .collect()
        } else {
            let small: Vec<usize> = (0..self.total_dim())
                .filter(|&i| self.monomial(i).len() + self.geom.ring(self.keys[i].flat).degree(self.keys[i].class) <= 1
                    || self.monomial(i).is_empty())
                .collect();
            small
                .iter()
                .flat_map(|&i| (0..self.total_dim()).map(move |j| (i, j)))
                .collect()
        };
        report.multiplicative = true;
        for (i, j) in pairs {
            let lhs = alpha.mul_vec(&self.product_basis(i, j)?);
            let rhs = m.product(
                &m.element(alpha.column(i)),
                &m.element(alpha.column(j)),
            )?;
            if &lhs != rhs.coeffs() {
                report.multiplicative = false;
                break;
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ComparisonReport {
    pub inverse: bool,
    pub alpha_chain: bool,
    pub beta_chain: bool,
    pub multiplicative: bool,
}

impl ComparisonReport {
    pub fn ok(&self) -> bool {
        self.inverse && self.alpha_chain && self.beta_chain && self.multiplicative
    }
}

/// Coefficients of the chromatic polynomial, constant term first.
pub fn chromatic_polynomial(graph: &Graph) -> Vec<i64> {
    if graph.edges().is_empty() {
        let mut p = vec![0; graph.vertex_count() + 1];
        p[graph.vertex_count()] = 1;
        return p;
    }
    let del = chromatic_polynomial(&graph.delete(0));
    let con = chromatic_polynomial(&graph.contract(0));
    del.iter()
        .enumerate()
        .map(|(k, &c)| c - con.get(k).copied().unwrap_or(0))
        .collect()
}

pub fn evaluate(poly: &[i64], x: i64) -> i64 {
    poly.iter().rev().fold(0, |acc, &c| acc * x + c)
}

/// Euler characteristic of the configuration space predicted by the
/// chromatic polynomial: `P_Γ(2 - 2g)`.
pub fn predicted_euler(genus: usize, graph: &Graph) -> i64 {
    evaluate(&chromatic_polynomial(graph), 2 - 2 * genus as i64)
}
