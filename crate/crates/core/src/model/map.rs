use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{block, BasisKey, GysinModel, ModelElement};
use crate::error::{Error, Result};
use crate::exact::{SparseMatrix, SparseVec};
use crate::geometry::{blown_up_surface, BlowupData};
use crate::matroid::FlatId;

/// A morphism of models, stored as a matrix from the global basis of the
/// source to that of the target.
#[derive(Clone, Debug)]
pub struct ModelMap {
    source: u64,
    target: u64,
    matrix: SparseMatrix,
}

impl ModelMap {
    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn apply(&self, a: &ModelElement) -> Result<SparseVec> {
        if a.owner != self.source {
            return Err(Error::MismatchedAlgebras);
        }
        Ok(self.matrix.mul_vec(&a.coeffs))
    }

    /// The component `M_q^n(source) → M_q^n(target)`.
    pub fn block(&self, source: &GysinModel, target: &GysinModel, q: usize, n: usize) -> Result<SparseMatrix> {
        self.check(source, target)?;
        Ok(block(&self.matrix, &target.range(q, n), &source.range(q, n)))
    }

    fn check(&self, source: &GysinModel, target: &GysinModel) -> Result<()> {
        if source.id != self.source || target.id != self.target {
            return Err(Error::MismatchedAlgebras);
        }
        Ok(())
    }
}

impl GysinModel {
    /// The map `M(X', L') → M(X, L)` induced by a morphism of arrangements:
    /// `m` holds vanishing multiplicities (one row per label of `target`),
    /// and `pullback(S, S')` the pullback `H(S') → H(S)` for strata of equal
    /// codimension with `S` mapping into `S'`.
    ///
    /// Fails with [`Error::NotChainMap`] if the result does not commute with
    /// the differentials.
    pub fn model_map<F>(&self, target: &GysinModel, m: &[Vec<i64>], pullback: F) -> Result<ModelMap>
    where
        F: Fn(FlatId, FlatId) -> Option<SparseMatrix>,
    {
        let os = self.os.functorial_map(&target.os, m)?;
        let mut triplets = Vec::new();
        for (col, key) in self.keys.iter().enumerate() {
            let g = self.os.global_index(key.flat, key.os);
            for (row, v) in os.column(g).iter() {
                let (tf, to) = target.os.locate(row);
                let p = pullback(tf, key.flat).ok_or_else(|| {
                    Error::InvalidMap(format!("no pullback from flat {} to flat {}", key.flat.0, tf.0))
                })?;
                if p.cols() != self.geom.ring(key.flat).dim() || p.rows() != target.geom.ring(tf).dim() {
                    return Err(Error::InvalidMap(format!(
                        "pullback from flat {} to flat {} has shape {}x{}",
                        key.flat.0,
                        tf.0,
                        p.rows(),
                        p.cols()
                    )));
                }
                for (class, w) in p.column(key.class).iter() {
                    let tkey = BasisKey {
                        flat: tf,
                        class,
                        os: to,
                    };
                    let t = target.index_of(&tkey).expect("key of target model");
                    if target.bidegree(t) != self.bidegree(col) {
                        return Err(Error::InvalidMap(format!(
                            "{} is sent out of its bidegree",
                            self.describe(col)
                        )));
                    }
                    triplets.push((t, col, v * w));
                }
            }
        }
        let matrix = SparseMatrix::from_triplets(target.total_dim(), self.total_dim(), triplets)?;
        let lhs = target.diff.mul(&matrix)?;
        let rhs = matrix.mul(&self.diff)?;
        let diff = lhs.sub(&rhs)?;
        if let Some((r, c, v)) = diff.entries().next() {
            let (q, n) = self.bidegree(c);
            return Err(Error::NotChainMap {
                q,
                n,
                detail: format!(
                    "dF - Fd sends {} to {} times {}",
                    self.describe(c),
                    v,
                    target.describe(r)
                ),
            });
        }
        Ok(ModelMap {
            source: self.id,
            target: target.id,
            matrix,
        })
    }

    /// Compares the maps induced on cohomology in every bidegree.
    pub fn verify_quasi_iso(&self, target: &GysinModel, map: &ModelMap) -> Result<QuasiIsoReport> {
        map.check(self, target)?;
        let src = self.weight_betti();
        let tgt = target.weight_betti();
        let bidegrees: BTreeSet<(usize, usize)> =
            self.ranges.keys().chain(target.ranges.keys()).copied().collect();
        let mut rows = Vec::new();
        for (q, n) in bidegrees {
            let (cycles, _) = self.cycles_and_boundaries(q, n);
            let (_, boundaries) = target.cycles_and_boundaries(q, n);
            let f = map.block(self, target, q, n)?;
            let rt = target.dim(q, n);
            let b_rank = SparseMatrix::from_columns(rt, &boundaries)?.rank();
            let mut cols = boundaries;
            cols.extend(cycles.iter().map(|z| f.mul_vec(z)));
            let induced_rank = SparseMatrix::from_columns(rt, &cols)?.rank() - b_rank;
            let source_dim = src.get(n, q);
            let target_dim = tgt.get(n, q);
            rows.push(QuasiIsoRow {
                n,
                q,
                source_dim,
                target_dim,
                induced_rank,
                iso: source_dim == target_dim && induced_rank == source_dim,
            });
        }
        let all_iso = rows.iter().all(|r| r.iso);
        Ok(QuasiIsoReport { rows, all_iso })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiIsoRow {
    pub n: usize,
    pub q: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub induced_rank: usize,
    pub iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiIsoReport {
    pub rows: Vec<QuasiIsoRow>,
    pub all_iso: bool,
}

/// Models of three concurrent lines in the plane and of the blow-up of
/// their common point, with the map between them.
#[derive(Clone, Debug)]
pub struct BlowupMap {
    pub data: BlowupData,
    pub base: GysinModel,
    pub blown: GysinModel,
    pub map: ModelMap,
}

pub fn blowup_map() -> Result<BlowupMap> {
    let data = blown_up_surface();
    let base = GysinModel::new(data.base.clone())?;
    let blown = GysinModel::new(data.blown.clone())?;
    let map = base.model_map(&blown, &data.multiplicities, |s, sp| data.pullback(s, sp).cloned())?;
    Ok(BlowupMap {
        data,
        base,
        blown,
        map,
    })
}
