//! Exact rational arithmetic and sparse linear algebra.
//!
//! Every rank, kernel and cokernel in the crate goes through this module;
//! there is no floating point anywhere.

mod elim;
mod rational;
mod sparse;

pub use rational::Rational;
pub use sparse::{SparseMatrix, SparseVec};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Textbook dense Gauss-Jordan elimination, kept separate from the
    /// sparse integer kernel.
    fn dense_rank(mut m: Vec<Vec<Rational>>) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][c].recip().unwrap();
            for r in 0..rows {
                if r != rank && !m[r][c].is_zero() {
                    let f = &m[r][c] * &inv;
                    for k in 0..cols {
                        let delta = &f * &m[rank][k];
                        m[r][k] -= &delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        // Mostly zeros so that ranks vary.
        prop_oneof![
            3 => Just(Rational::zero()),
            2 => (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Rational::new(p, q).unwrap()),
        ]
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        prop::collection::vec(prop::collection::vec(small_rational(), cols), rows)
    }

    fn to_sparse(m: &[Vec<Rational>]) -> SparseMatrix {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        SparseMatrix::from_triplets(
            rows,
            cols,
            m.iter().enumerate().flat_map(|(i, r)| {
                r.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
            }),
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn rank_matches_dense_oracle(m in matrix(6, 6)) {
            prop_assert_eq!(to_sparse(&m).rank(), dense_rank(m));
        }

        #[test]
        fn rank_of_transpose(m in matrix(4, 7)) {
            let s = to_sparse(&m);
            prop_assert_eq!(s.rank(), s.transpose().rank());
        }

        #[test]
        fn rank_of_product_is_bounded(a in matrix(4, 5), b in matrix(5, 3)) {
            let (a, b) = (to_sparse(&a), to_sparse(&b));
            let ab = a.mul(&b).unwrap();
            prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in matrix(4, 6)) {
            let s = to_sparse(&m);
            let ker = s.kernel_basis();
            prop_assert_eq!(ker.len(), s.cols() - s.rank());
            for v in &ker {
                prop_assert!(s.mul_vec(v).is_zero());
            }
            let k = SparseMatrix::from_columns(6, &ker).unwrap();
            prop_assert_eq!(k.rank(), ker.len());
        }

        #[test]
        fn solve_finds_preimages(m in matrix(5, 4), x in prop::collection::vec(small_rational(), 4)) {
            let s = to_sparse(&m);
            let b = s.mul_vec(&SparseVec::from_dense(&x));
            let y = s.solve(&b).unwrap();
            prop_assert_eq!(s.mul_vec(&y), b);
        }
    }
}
