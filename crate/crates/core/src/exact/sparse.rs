use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::elim::{Echelon, Reduced};
use super::Rational;
use crate::error::{Error, Result};

/// A sparse rational vector; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    terms: BTreeMap<usize, Rational>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Self::new();
        v.terms.insert(i, Rational::one());
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut v = Self::new();
        for (i, c) in pairs {
            v.add_term(i, &c);
        }
        v
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self::from_pairs(values.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (&i, c) in &self.terms {
            out[i] = c.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Rational {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, i: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(i).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&i);
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &SparseVec, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_term(i, &(c * factor));
        }
    }

    pub fn scaled(&self, factor: &Rational) -> SparseVec {
        if factor.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            terms: self.terms.iter().map(|(&i, c)| (i, c * factor)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        self.scaled(&Rational::from_int(-1))
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in self.iter() {
            if let Some(d) = other.terms.get(&i) {
                acc += c * d;
            }
        }
        acc
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl FromIterator<(usize, Rational)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        Self::from_pairs(iter)
    }
}

/// An immutable sparse matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n).map(|i| ((i, i), Rational::one())).collect();
        SparseMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions
    /// are summed and zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut entries: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (row, col, value) in triplets {
            if row >= rows || col >= cols {
                return Err(Error::OutOfBounds {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            *entries.entry((row, col)).or_default() += value;
        }
        entries.retain(|_, v| !v.is_zero());
        Ok(SparseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged dense matrix".into()));
        }
        Self::from_triplets(
            r,
            c,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(j, &v)| (i, j, Rational::from_int(v)))
            }),
        )
    }

    /// A matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        Self::from_triplets(
            rows,
            columns.len(),
            columns
                .iter()
                .enumerate()
                .flat_map(|(j, col)| col.iter().map(move |(i, c)| (i, j, c.clone()))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn column(&self, j: usize) -> SparseVec {
        self.entries
            .iter()
            .filter(|(&(_, c), _)| c == j)
            .map(|(&(i, _), v)| (i, v.clone()))
            .collect()
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut cols = vec![SparseVec::new(); self.cols];
        for (&(i, j), v) in &self.entries {
            cols[j].add_term(i, v);
        }
        cols
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            rows[i].push((j, v.clone()));
        }
        rows
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let other_rows = other.sparse_rows();
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (j, b) in &other_rows[k] {
                *acc.entry((i, *j)).or_default() += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            entries: acc,
        })
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&(i, j), a) in &self.entries {
            let x = v.get(j);
            if !x.is_zero() {
                out.add_term(i, &(a * &x));
            }
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("cannot subtract matrices of different shapes".into()));
        }
        Self::from_triplets(
            self.rows,
            self.cols,
            self.entries().map(|(i, j, v)| (i, j, v.clone())).chain(
                other.entries().map(|(i, j, v)| (i, j, -v)),
            ),
        )
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new();
        for row in self.sparse_rows() {
            ech.insert_rational(&row);
        }
        ech
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// `rows - rank`.
    pub fn cokernel_dim(&self) -> usize {
        self.rows - self.rank()
    }

    /// Columns carrying a pivot in the row-echelon form, i.e. the
    /// lexicographically first maximal set of independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon().pivot_columns()
    }

    fn reduced(&self) -> Reduced {
        self.echelon().reduce()
    }

    /// Basis of the right kernel, one vector per non-pivot column in
    /// increasing order. Each vector has a 1 at its free column and zeros at
    /// the other free columns.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let rref = self.reduced();
        let pivots: Vec<usize> = rref.rows.iter().map(|(p, _)| *p).collect();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = SparseVec::unit(f);
                for (p, row) in &rref.rows {
                    let c = row.get(f);
                    if !c.is_zero() {
                        v.add_term(*p, &(-c));
                    }
                }
                v
            })
            .collect()
    }

    /// Some solution `x` of `self * x = b`, with zeros at free columns, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let mut aug = self.sparse_rows();
        for (i, c) in b.iter() {
            if i >= self.rows {
                return None;
            }
            aug[i].push((self.cols, c.clone()));
        }
        let mut ech = Echelon::new();
        for row in &aug {
            ech.insert_rational(row);
        }
        let rref = ech.reduce();
        let mut x = SparseVec::new();
        for (p, row) in &rref.rows {
            if *p == self.cols {
                return None;
            }
            x.add_term(*p, &row.get(self.cols));
        }
        Some(x)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Rational)>,
}

impl Serialize for SparseMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries().map(|(i, j, v)| (i, j, v.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparseMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        SparseMatrix::from_triplets(repr.rows, repr.cols, repr.entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SparseMatrix::zero(0, 0).rank(), 0);
        assert_eq!(SparseMatrix::identity(3).rank(), 3);
        let m = SparseMatrix::from_dense(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(SparseMatrix::identity(2).kernel_basis().is_empty());

        let z = SparseMatrix::zero(2, 3);
        let k = z.kernel_basis();
        assert_eq!(k, vec![SparseVec::unit(0), SparseVec::unit(1), SparseVec::unit(2)]);

        let m = SparseMatrix::from_dense(&[vec![1, -1, 0], vec![0, 0, 0]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0].to_dense(3), vec![q(1), q(1), q(0)]);
        assert_eq!(k[1].to_dense(3), vec![q(0), q(0), q(1)]);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(SparseMatrix::identity(3).cokernel_dim(), 0);
        assert_eq!(SparseMatrix::zero(2, 1).cokernel_dim(), 2);
        let m = SparseMatrix::from_dense(&[vec![1], vec![2]]).unwrap();
        assert_eq!(m.cokernel_dim(), 1);
    }

    #[test]
    fn out_of_bounds_rejected() {
        let err = SparseMatrix::from_triplets(2, 2, [(2, 0, q(1))]).unwrap_err();
        assert!(matches!(err, Error::OutOfBounds { .. }));
    }

    #[test]
    fn zeros_are_not_stored() {
        let m = SparseMatrix::from_triplets(2, 2, [(0, 0, q(1)), (0, 0, q(-1)), (1, 1, q(0))])
            .unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = SparseMatrix::from_dense(&[vec![1, 1], vec![0, 0]]).unwrap();
        let x = m.solve(&SparseVec::unit(0)).unwrap();
        assert_eq!(m.mul_vec(&x), SparseVec::unit(0));
        assert!(m.solve(&SparseVec::unit(1)).is_none());
    }

    #[test]
    fn pivot_columns_pick_first_independent() {
        let m = SparseMatrix::from_dense(&[vec![0, 1, 2, 0], vec![0, 2, 4, 1]]).unwrap();
        assert_eq!(m.pivot_columns(), vec![1, 3]);
    }

    #[test]
    fn json_shape() {
        let m = SparseMatrix::from_triplets(2, 3, [(0, 1, Rational::new(1, 2).unwrap())]).unwrap();
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, r#"{"rows":2,"cols":3,"entries":[[0,1,"1/2"]]}"#);
        let back: SparseMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
    }
}
