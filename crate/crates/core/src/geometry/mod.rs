//! Arrangements in smooth projective varieties together with the cohomology
//! of every stratum, restriction maps between strata and Gysin maps for
//! codimension-one inclusions.

mod blowup;
mod graph;
mod ring;

use std::collections::HashMap;

pub use blowup::{blown_up_surface, BlowupData};
pub use graph::Graph;
pub use ring::{CohomologyRing, TableRing};

use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix, SparseVec};
use crate::matroid::{covector_ranks, Arrangement, FlatId};
use ring::{curve_mul, curve_pullback, from_digits};

/// A hypersurface arrangement with the cohomological data of its strata.
#[derive(Clone, Debug)]
pub struct GeometricArrangement {
    arr: Arrangement,
    rings: Vec<CohomologyRing>,
    data: Data,
}

#[derive(Clone, Debug)]
enum Data {
    Curve(CurveData),
    Projective,
    Table(TableData),
}

/// The partition of the vertices attached to a flat of a graphic
/// arrangement: the blocks, ordered by least vertex, and the block of each
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub blocks: Vec<Vec<usize>>,
    pub block_of: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CurveData {
    pub genus: usize,
    pub graph: Graph,
    pub partitions: Vec<Partition>,
    /// Sign in front of `Σ (α_i ⊗ β_i - β_i ⊗ α_i)` in the diagonal class;
    /// `-1` is the correct class, `+1` is kept as a broken fixture.
    odd_sign: i64,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct TableData {
    pub restrict: HashMap<(FlatId, FlatId), SparseMatrix>,
    pub gysin: HashMap<(FlatId, FlatId), SparseMatrix>,
}

/// Which of the two merged blocks keeps its coordinate when a diagonal is
/// split off.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Splitting {
    LeastVertex,
    Other,
}

impl GeometricArrangement {
    /// `Y^V` for a curve `Y` of genus `g`, with the diagonals `Δ_e` for the
    /// edges of `graph`, ordered as the edges.
    pub fn curve_power(genus: usize, graph: &Graph) -> Result<Self> {
        Self::curve_power_with_sign(genus, graph, -1)
    }

    /// Same as [`GeometricArrangement::curve_power`] but with the sign of the
    /// odd part of the diagonal class flipped. The result is not a valid
    /// geometry; it exists to exercise the self-checks.
    pub fn curve_power_corrupted(genus: usize, graph: &Graph) -> Result<Self> {
        Self::curve_power_with_sign(genus, graph, 1)
    }

    fn curve_power_with_sign(genus: usize, graph: &Graph, odd_sign: i64) -> Result<Self> {
        let n = graph.vertex_count();
        let arr = Arrangement::from_oracle(graph.edges().len(), |s| {
            Some(n - graph.components(s).len())
        })?;
        let partitions: Vec<Partition> = arr
            .flats()
            .iter()
            .map(|(_, f)| {
                let blocks = graph.components(f.members);
                let mut block_of = vec![0; n];
                for (b, blk) in blocks.iter().enumerate() {
                    for &v in blk {
                        block_of[v] = b;
                    }
                }
                Partition { blocks, block_of }
            })
            .collect();
        let rings = partitions
            .iter()
            .map(|p| CohomologyRing::Curve {
                genus,
                factors: p.blocks.len(),
            })
            .collect();
        Ok(GeometricArrangement {
            arr,
            rings,
            data: Data::Curve(CurveData {
                genus,
                graph: graph.clone(),
                partitions,
                odd_sign,
            }),
        })
    }

    /// `P^dim` with hyperplanes given by covectors on `C^{dim+1}`.
    pub fn projective(dim: usize, normals: &[Vec<Rational>]) -> Result<Self> {
        let ranks = covector_ranks(dim + 1, normals)?;
        let codims: Vec<Option<usize>> = ranks
            .into_iter()
            .map(|r| (r <= dim).then_some(r))
            .collect();
        let arr = Arrangement::from_oracle(normals.len(), |s| codims[s.bits() as usize])?;
        let rings = arr
            .flats()
            .iter()
            .map(|(_, f)| CohomologyRing::Projective { dim: dim - f.codim })
            .collect();
        Ok(GeometricArrangement {
            arr,
            rings,
            data: Data::Projective,
        })
    }

    pub fn projective_int(dim: usize, normals: &[Vec<i64>]) -> Result<Self> {
        let normals: Vec<Vec<Rational>> = normals
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        Self::projective(dim, &normals)
    }

    pub(crate) fn from_tables(arr: Arrangement, rings: Vec<CohomologyRing>, tables: TableData) -> Self {
        GeometricArrangement {
            arr,
            rings,
            data: Data::Table(tables),
        }
    }

    pub fn with_names(mut self, names: &[&str]) -> Self {
        self.arr = self.arr.with_names(names.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    pub fn ring(&self, flat: FlatId) -> &CohomologyRing {
        &self.rings[flat.0]
    }

    /// Complex dimension of the ambient variety.
    pub fn dim(&self) -> usize {
        self.rings[0].complex_dim()
    }

    pub fn curve_data(&self) -> Option<&CurveData> {
        match &self.data {
            Data::Curve(c) => Some(c),
            _ => None,
        }
    }

    fn check_below(&self, s: FlatId, t: FlatId) -> Result<()> {
        if self.arr.flats().is_below(t, s) {
            Ok(())
        } else {
            Err(Error::NotIncident(s.0, t.0))
        }
    }

    /// Restriction `H(S) → H(T)` for strata `T ⊆ S`, on one basis element.
    pub fn restrict_basis(&self, s: FlatId, t: FlatId, i: usize) -> Result<SparseVec> {
        self.check_below(s, t)?;
        if s == t {
            return Ok(SparseVec::unit(i));
        }
        Ok(match &self.data {
            Data::Curve(c) => {
                let (ps, pt) = (&c.partitions[s.0], &c.partitions[t.0]);
                let u: Vec<usize> = ps.blocks.iter().map(|b| pt.block_of[b[0]]).collect();
                signed_unit(curve_pullback(c.genus, ps.blocks.len(), &u, pt.blocks.len(), i))
            }
            Data::Projective => {
                if i <= self.rings[t.0].complex_dim() {
                    SparseVec::unit(i)
                } else {
                    SparseVec::new()
                }
            }
            Data::Table(tb) => tb
                .restrict
                .get(&(s, t))
                .ok_or(Error::NotIncident(s.0, t.0))?
                .column(i),
        })
    }

    pub fn restrict(&self, s: FlatId, t: FlatId, x: &SparseVec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (i, c) in x.iter() {
            out.add_scaled(&self.restrict_basis(s, t, i)?, c);
        }
        Ok(out)
    }

    fn check_cover(&self, s: FlatId, s_prime: FlatId) -> Result<()> {
        let flats = self.arr.flats();
        if flats.is_below(s, s_prime) && flats.get(s).codim == flats.get(s_prime).codim + 1 {
            Ok(())
        } else {
            Err(Error::NotIncident(s.0, s_prime.0))
        }
    }

    /// Gysin map `H^k(S) → H^{k+2}(S')` for a codimension-one inclusion
    /// `S ⊂ S'`, on one basis element.
    pub fn gysin_basis(&self, s: FlatId, s_prime: FlatId, i: usize) -> Result<SparseVec> {
        self.check_cover(s, s_prime)?;
        Ok(match &self.data {
            Data::Curve(c) => self.curve_gysin(c, s, s_prime, i, Splitting::LeastVertex),
            Data::Projective => {
                if i < self.rings[s_prime.0].complex_dim() {
                    SparseVec::unit(i + 1)
                } else {
                    SparseVec::new()
                }
            }
            Data::Table(tb) => tb
                .gysin
                .get(&(s, s_prime))
                .ok_or(Error::NotIncident(s.0, s_prime.0))?
                .column(i),
        })
    }

    pub fn gysin(&self, s: FlatId, s_prime: FlatId, x: &SparseVec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (i, c) in x.iter() {
            out.add_scaled(&self.gysin_basis(s, s_prime, i)?, c);
        }
        Ok(out)
    }

    /// The curve Gysin map computed with a chosen splitting. Both choices
    /// give the same answer for a valid diagonal class.
    pub fn curve_gysin_with(&self, s: FlatId, s_prime: FlatId, i: usize, splitting: Splitting) -> Result<SparseVec> {
        self.check_cover(s, s_prime)?;
        match &self.data {
            Data::Curve(c) => Ok(self.curve_gysin(c, s, s_prime, i, splitting)),
            _ => Err(Error::InvalidMap("not a curve geometry".into())),
        }
    }

    fn curve_gysin(&self, c: &CurveData, s: FlatId, s_prime: FlatId, i: usize, splitting: Splitting) -> SparseVec {
        let (deep, wide) = (&c.partitions[s.0], &c.partitions[s_prime.0]);
        let mut merged = (0, 0);
        let u: Vec<usize> = deep
            .blocks
            .iter()
            .map(|blk| {
                let first = wide.block_of[blk[0]];
                if let Some(other) = blk.iter().map(|v| wide.block_of[*v]).find(|&b| b != first) {
                    merged = (first, other);
                    match splitting {
                        Splitting::LeastVertex => first,
                        Splitting::Other => other,
                    }
                } else {
                    first
                }
            })
            .collect();
        let k = wide.blocks.len();
        let Some((pulled, sign)) = curve_pullback(c.genus, deep.blocks.len(), &u, k, i) else {
            return SparseVec::new();
        };
        let diag = diagonal_class(c.genus, k, merged.0, merged.1, c.odd_sign);
        let mut out = SparseVec::new();
        for (t, v) in diag.iter() {
            if let Some((r, s2)) = curve_mul(c.genus, k, pulled, t) {
                out.add_term(r, &(v * &Rational::from_int((sign * s2) as i64)));
            }
        }
        out
    }

    /// Pullback `H(Δ) → H(Δ')` along the splitting that keeps, for every
    /// block of the deeper stratum, the coordinate of its least vertex.
    /// `deep` must lie below `wide`.
    pub fn splitting_pullback(&self, deep: FlatId, wide: FlatId, i: usize) -> Result<SparseVec> {
        self.check_below(wide, deep)?;
        let Data::Curve(c) = &self.data else {
            return Err(Error::InvalidMap("not a curve geometry".into()));
        };
        let (pd, pw) = (&c.partitions[deep.0], &c.partitions[wide.0]);
        let u: Vec<usize> = pd.blocks.iter().map(|b| pw.block_of[b[0]]).collect();
        Ok(signed_unit(curve_pullback(c.genus, pd.blocks.len(), &u, pw.blocks.len(), i)))
    }

    /// The class `[Δ_e]` of the diagonal of edge `e` in `H^2(Y^V)`.
    pub fn diagonal_of_edge(&self, e: usize) -> Result<SparseVec> {
        let Data::Curve(c) = &self.data else {
            return Err(Error::InvalidMap("not a curve geometry".into()));
        };
        let (a, b) = c.graph.edges()[e];
        Ok(diagonal_class(c.genus, c.graph.vertex_count(), a, b, c.odd_sign))
    }

    /// Restriction of `gysin(1)` back to `S`: the self-intersection class.
    pub fn euler_class(&self, s: FlatId, s_prime: FlatId) -> Result<SparseVec> {
        let g = self.gysin_basis(s, s_prime, 0)?;
        self.restrict(s_prime, s, &g)
    }

    /// `(2 - 2g)` times the point class of the merged factor of `S`: what
    /// [`GeometricArrangement::euler_class`] must return for a curve power.
    /// Built from the factor layout alone, without the diagonal class.
    pub fn expected_euler_class(&self, s: FlatId, s_prime: FlatId) -> Result<SparseVec> {
        self.check_cover(s, s_prime)?;
        let Data::Curve(c) = &self.data else {
            return Err(Error::InvalidMap("not a curve geometry".into()));
        };
        let (deep, wide) = (&c.partitions[s.0], &c.partitions[s_prime.0]);
        let merged = deep
            .blocks
            .iter()
            .position(|blk| blk.iter().any(|v| wide.block_of[*v] != wide.block_of[blk[0]]))
            .expect("a cover merges two blocks");
        let mut d = vec![0; deep.blocks.len()];
        d[merged] = 2 * c.genus + 1;
        Ok(SparseVec::from_pairs([(
            from_digits(c.genus, &d),
            Rational::from_int(2 - 2 * c.genus as i64),
        )]))
    }

    /// Checks `gysin(restrict(y) · x) = y · gysin(x)` on all basis pairs
    /// (or every `stride`-th one) of a codimension-one inclusion.
    pub fn check_projection_formula(&self, s: FlatId, s_prime: FlatId, stride: usize) -> std::result::Result<(), String> {
        let (rs, rp) = (self.ring(s), self.ring(s_prime));
        let err = |e: Error| e.to_string();
        for y in (0..rp.dim()).step_by(stride.max(1)) {
            let ry = self.restrict_basis(s_prime, s, y).map_err(err)?;
            for x in (0..rs.dim()).step_by(stride.max(1)) {
                let lhs = self
                    .gysin(s, s_prime, &rs.mul(&ry, &SparseVec::unit(x)))
                    .map_err(err)?;
                let rhs = rp.mul(&SparseVec::unit(y), &self.gysin_basis(s, s_prime, x).map_err(err)?);
                if lhs != rhs {
                    return Err(format!(
                        "projection formula fails for y = {}, x = {}",
                        rp.label(y),
                        rs.label(x)
                    ));
                }
            }
        }
        Ok(())
    }

    /// Pairs `(S, S')` of flats with `S ⊂ S'` of codimension one.
    pub fn covers(&self) -> Vec<(FlatId, FlatId)> {
        let flats = self.arr.flats();
        flats
            .ids()
            .flat_map(|s| flats.covered_by(s).into_iter().map(move |t| (s, t)))
            .collect()
    }
}

fn signed_unit(x: Option<(usize, i32)>) -> SparseVec {
    match x {
        Some((k, s)) => SparseVec::from_pairs([(k, Rational::from_int(s as i64))]),
        None => SparseVec::new(),
    }
}

/// `1⊗P + P⊗1 - Σ_i (α_i⊗β_i - β_i⊗α_i)` in factors `a < b` of `Y^k`
/// (with `odd_sign` in place of the leading minus).
fn diagonal_class(genus: usize, k: usize, a: usize, b: usize, odd_sign: i64) -> SparseVec {
    let p = 2 * genus + 1;
    let mut out = SparseVec::new();
    let mut put = |da: usize, db: usize, c: i64| {
        let mut d = vec![0; k];
        d[a] = da;
        d[b] = db;
        out.add_term(from_digits(genus, &d), &Rational::from_int(c));
    };
    put(0, p, 1);
    put(p, 0, 1);
    for i in 1..=genus {
        put(i, i + genus, odd_sign);
        put(i + genus, i, -odd_sign);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ambient() -> FlatId {
        FlatId(0)
    }

    #[test]
    fn single_vertex_curve() {
        for g in 0..3 {
            let geo = GeometricArrangement::curve_power(g, &Graph::empty(1)).unwrap();
            assert_eq!(geo.arrangement().flats().len(), 1);
            assert_eq!(geo.ring(ambient()).betti(), vec![1, 2 * g, 1]);
        }
    }

    #[test]
    fn two_points_on_elliptic_curve() {
        let geo = GeometricArrangement::curve_power(1, &Graph::complete(2)).unwrap();
        assert_eq!(geo.ring(FlatId(0)).betti(), vec![1, 4, 6, 4, 1]);
        assert_eq!(geo.ring(FlatId(1)).betti(), vec![1, 2, 1]);
    }

    #[test]
    fn euler_class_of_diagonal() {
        for g in 0..=2 {
            let geo = GeometricArrangement::curve_power(g, &Graph::complete(2)).unwrap();
            let e = geo.euler_class(FlatId(1), FlatId(0)).unwrap();
            let pt = geo.ring(FlatId(1)).point_class();
            let expected = Rational::from_int(2 - 2 * g as i64);
            assert_eq!(e, SparseVec::from_pairs([(pt, expected)]));

            let bad = GeometricArrangement::curve_power_corrupted(g, &Graph::complete(2)).unwrap();
            let e = bad.euler_class(FlatId(1), FlatId(0)).unwrap();
            assert_eq!(e, SparseVec::from_pairs([(pt, Rational::from_int(2 + 2 * g as i64))]));
        }
    }

    #[test]
    fn splitting_independence_and_projection_formula() {
        for g in 0..=2 {
            for graph in [Graph::complete(2), Graph::complete(3), Graph::new(3, vec![(0, 2)]).unwrap()] {
                let geo = GeometricArrangement::curve_power(g, &graph).unwrap();
                for (s, sp) in geo.covers() {
                    geo.check_projection_formula(s, sp, 1).unwrap();
                    for i in 0..geo.ring(s).dim() {
                        assert_eq!(
                            geo.curve_gysin_with(s, sp, i, Splitting::LeastVertex).unwrap(),
                            geo.curve_gysin_with(s, sp, i, Splitting::Other).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn euler_class_on_every_cover() {
        for g in 0..=2 {
            for graph in [Graph::complete(3), Graph::cycle(4)] {
                let geo = GeometricArrangement::curve_power(g, &graph).unwrap();
                let bad = GeometricArrangement::curve_power_corrupted(g, &graph).unwrap();
                for (s, sp) in geo.covers() {
                    let expected = geo.expected_euler_class(s, sp).unwrap();
                    assert_eq!(geo.euler_class(s, sp).unwrap(), expected);
                    assert_eq!(bad.euler_class(s, sp).unwrap() == expected, g == 0);
                }
            }
        }
    }

    #[test]
    fn corrupted_diagonal_breaks_splitting_independence() {
        let geo = GeometricArrangement::curve_power_corrupted(1, &Graph::complete(2)).unwrap();
        let differs = (0..geo.ring(FlatId(1)).dim()).any(|i| {
            geo.curve_gysin_with(FlatId(1), FlatId(0), i, Splitting::LeastVertex).unwrap()
                != geo.curve_gysin_with(FlatId(1), FlatId(0), i, Splitting::Other).unwrap()
        });
        assert!(differs);
    }

    #[test]
    fn complete_graph_flats_are_set_partitions() {
        // Bell numbers
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)] {
            let geo = GeometricArrangement::curve_power(0, &Graph::complete(n)).unwrap();
            let flats = geo.arrangement().flats();
            assert_eq!(flats.len(), bell);
            // partitions with k blocks have codim n - k
            let parts = &geo.curve_data().unwrap().partitions;
            for (id, f) in flats.iter() {
                assert_eq!(f.codim, n - parts[id.0].blocks.len());
            }
        }
    }

    #[test]
    fn restriction_composes() {
        let geo = GeometricArrangement::curve_power(1, &Graph::complete(3)).unwrap();
        let flats = geo.arrangement().flats();
        for s in flats.ids() {
            for t in flats.ids().filter(|&t| flats.is_below(t, s)) {
                for u in flats.ids().filter(|&u| flats.is_below(u, t)) {
                    for i in 0..geo.ring(s).dim() {
                        let two = geo.restrict(t, u, &geo.restrict_basis(s, t, i).unwrap()).unwrap();
                        assert_eq!(two, geo.restrict_basis(s, u, i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn projective_examples() {
        let three = GeometricArrangement::projective_int(2, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, -1, 0]]).unwrap();
        let codims: Vec<usize> = three.arrangement().flats().iter().map(|(_, f)| f.codim).collect();
        assert_eq!(codims, vec![0, 1, 1, 1, 2]);

        let p1 = GeometricArrangement::projective_int(1, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(p1.arrangement().flats().max_codim(), 1);

        let generic = GeometricArrangement::projective_int(2, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let arr = generic.arrangement();
        assert_eq!(arr.flats().of_codim(2).count(), 3);
        assert!(arr.is_null(crate::matroid::LabelSet::from_slice(&[0, 1, 2])));
        for (s, sp) in generic.covers() {
            generic.check_projection_formula(s, sp, 1).unwrap();
        }
    }
}
