//! Three concurrent lines in the projective plane and the blow-up of their
//! common point.
//!
//! Labels of the blown-up arrangement: `0` is the exceptional divisor `E`,
//! `1..=3` the strict transforms of the lines. The ambient ring has basis
//! `1, h, ε, pt` where `h` is the pulled-back line class and `ε = [E]`.

use std::collections::HashMap;

use super::{CohomologyRing, GeometricArrangement, TableData, TableRing};
use crate::exact::{SparseMatrix, SparseVec};
use crate::matroid::{Arrangement, FlatId, LabelSet};

/// Both sides of the blow-up and the data of the map between their models.
#[derive(Clone, Debug)]
pub struct BlowupData {
    pub base: GeometricArrangement,
    pub blown: GeometricArrangement,
    /// Vanishing multiplicities: row `i` is a label of the blown-up
    /// arrangement, column `j` a line of the base.
    pub multiplicities: Vec<Vec<i64>>,
    pullbacks: HashMap<(FlatId, FlatId), SparseMatrix>,
}

impl BlowupData {
    /// Pullback `H(S') → H(S)` for a blown-up stratum `S` mapping into the
    /// base stratum `S'` of the same codimension.
    pub fn pullback(&self, blown: FlatId, base: FlatId) -> Option<&SparseMatrix> {
        self.pullbacks.get(&(blown, base))
    }
}

fn m(rows: &[Vec<i64>]) -> SparseMatrix {
    SparseMatrix::from_dense(rows).expect("rectangular")
}

fn ambient_ring() -> CohomologyRing {
    // basis 1, h, ε, pt with h² = pt, ε² = -pt, hε = 0
    let v = |i: usize, c: i64| SparseVec::from_pairs([(i, c.into())]);
    let z = SparseVec::new;
    let products = vec![
        vec![v(0, 1), v(1, 1), v(2, 1), v(3, 1)],
        vec![v(1, 1), v(3, 1), z(), z()],
        vec![v(2, 1), z(), v(3, -1), z()],
        vec![v(3, 1), z(), z(), z()],
    ];
    CohomologyRing::Table(TableRing {
        names: ["1", "h", "e", "pt"].map(String::from).to_vec(),
        degrees: vec![0, 2, 2, 4],
        complex_dim: 2,
        products,
    })
}

pub fn blown_up_surface() -> BlowupData {
    let base = GeometricArrangement::projective_int(2, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, -1, 0]])
        .expect("three distinct lines")
        .with_names(&["L1", "L2", "L3"]);

    let arr = Arrangement::from_oracle(4, |s| match s.len() {
        0 | 1 => Some(s.len()),
        2 if s.contains(0) => Some(2),
        _ => None,
    })
    .expect("valid oracle")
    .with_names(["E", "L1", "L2", "L3"].map(String::from).to_vec());
    let flats = arr.flats();
    let id = |v: &[usize]| flats.id_of(LabelSet::from_slice(v)).expect("flat exists");
    let x = id(&[]);
    let e = id(&[0]);
    let lines: Vec<FlatId> = (1..=3).map(|i| id(&[i])).collect();
    let points: Vec<FlatId> = (1..=3).map(|i| id(&[0, i])).collect();

    let mut rings = vec![CohomologyRing::point(); flats.len()];
    rings[x.0] = ambient_ring();
    for f in std::iter::once(e).chain(lines.iter().copied()) {
        rings[f.0] = CohomologyRing::Projective { dim: 1 };
    }

    let mut t = TableData::default();
    t.restrict.insert((x, e), m(&[vec![1, 0, 0, 0], vec![0, 0, -1, 0]]));
    t.gysin.insert((e, x), m(&[vec![0, 0], vec![0, 0], vec![1, 0], vec![0, 1]]));
    for k in 0..3 {
        let (l, p) = (lines[k], points[k]);
        t.restrict.insert((x, l), m(&[vec![1, 0, 0, 0], vec![0, 1, 1, 0]]));
        t.restrict.insert((x, p), m(&[vec![1, 0, 0, 0]]));
        t.restrict.insert((e, p), m(&[vec![1, 0]]));
        t.restrict.insert((l, p), m(&[vec![1, 0]]));
        t.gysin.insert((l, x), m(&[vec![0, 0], vec![1, 0], vec![-1, 0], vec![0, 1]]));
        t.gysin.insert((p, e), m(&[vec![0], vec![1]]));
        t.gysin.insert((p, l), m(&[vec![0], vec![1]]));
    }
    let blown = GeometricArrangement::from_tables(arr, rings, t);

    let bflats = base.arrangement().flats();
    let bid = |v: &[usize]| bflats.id_of(LabelSet::from_slice(v)).expect("flat exists");
    let mut pullbacks = HashMap::new();
    pullbacks.insert((x, bid(&[])), m(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 1]]));
    for k in 0..3 {
        pullbacks.insert((e, bid(&[k])), m(&[vec![1, 0], vec![0, 0]]));
        pullbacks.insert((lines[k], bid(&[k])), SparseMatrix::identity(2));
        pullbacks.insert((points[k], bid(&[0, 1, 2])), SparseMatrix::identity(1));
    }
    let multiplicities = vec![vec![1, 1, 1], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];

    BlowupData {
        base,
        blown,
        multiplicities,
        pullbacks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_and_maps() {
        let d = blown_up_surface();
        let b = &d.blown;
        let x = FlatId(0);
        b.ring(x).check_axioms(usize::MAX).unwrap();
        let arr = b.arrangement();
        assert!(arr.is_null(LabelSet::from_slice(&[1, 2])));
        assert_eq!(arr.flats().len(), 8);
        for (s, sp) in b.covers() {
            b.check_projection_formula(s, sp, 1).unwrap();
        }
        // [L̃_1]·[E] = pt
        let l1 = arr.flats().id_of(LabelSet::from_slice(&[1])).unwrap();
        let e = arr.flats().id_of(LabelSet::from_slice(&[0])).unwrap();
        let cl = b.gysin_basis(l1, x, 0).unwrap();
        let ce = b.gysin_basis(e, x, 0).unwrap();
        assert_eq!(b.ring(x).mul(&cl, &ce), SparseVec::unit(3));
        // π*[L_i] = [E] + [L̃_i] = h
        let mut sum = ce.clone();
        sum.add_scaled(&cl, &1.into());
        assert_eq!(sum, SparseVec::unit(1));
    }

    #[test]
    fn restrictions_compose() {
        let d = blown_up_surface();
        let b = &d.blown;
        let flats = b.arrangement().flats();
        for s in flats.ids() {
            for t in flats.ids().filter(|&t| flats.is_below(t, s)) {
                for u in flats.ids().filter(|&u| flats.is_below(u, t)) {
                    for i in 0..b.ring(s).dim() {
                        let two = b.restrict(t, u, &b.restrict_basis(s, t, i).unwrap()).unwrap();
                        assert_eq!(two, b.restrict_basis(s, u, i).unwrap());
                    }
                }
            }
        }
    }
}
