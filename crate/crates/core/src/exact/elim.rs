//! Sparse elimination kernel.
//!
//! Rows are cleared of denominators and kept as primitive integer vectors.
//! A new row is top-reduced against the stored pivots with the
//! cross-multiplication `b*r - a*p` followed by division by the row content,
//! so intermediate entries stay integral and small. Back-substitution to the
//! reduced echelon form happens once, over the rationals, at the end.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, SparseVec};

type IntRow = Vec<(usize, BigInt)>;

#[derive(Default)]
pub(crate) struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

pub(crate) struct Reduced {
    /// `(pivot column, row)` with a 1 at the pivot, sorted by pivot.
    pub rows: Vec<(usize, SparseVec)>,
}

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let flip = row.first().is_some_and(|(_, v)| v.is_negative());
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if flip {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

/// `b * r - a * p` where `a`, `b` are the leading entries of `r`, `p`
/// divided by their gcd. The leading entry cancels.
fn cross_reduce(r: &IntRow, p: &IntRow) -> IntRow {
    let a = &r[0].1;
    let b = &p[0].1;
    let g = a.gcd(b);
    let a = a / &g;
    let b = b / &g;
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map(|x| x.0);
        let cj = p.get(j).map(|x| x.0);
        let (col, val) = match (ci, cj) {
            (Some(x), Some(y)) if x == y => {
                let v = &b * &r[i].1 - &a * &p[j].1;
                i += 1;
                j += 1;
                (x, v)
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                (x, &b * &r[i - 1].1)
            }
            (Some(x), None) => {
                i += 1;
                (x, &b * &r[i - 1].1)
            }
            (_, Some(y)) => {
                j += 1;
                (y, -(&a * &p[j - 1].1))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    make_primitive(&mut out);
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Inserts a row given with rational entries; returns whether it was
    /// independent of the rows already present.
    pub fn insert_rational(&mut self, row: &[(usize, Rational)]) -> bool {
        let mut lcm = BigInt::one();
        for (_, v) in row {
            lcm = lcm.lcm(v.denom());
        }
        let mut int_row: IntRow = row
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
            .collect();
        int_row.sort_by_key(|(c, _)| *c);
        make_primitive(&mut int_row);
        self.insert(int_row)
    }

    fn insert(&mut self, mut row: IntRow) -> bool {
        loop {
            let Some(&(lead, _)) = row.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => row = cross_reduce(&row, p),
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn reduce(self) -> Reduced {
        let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (lead, row) in self.pivots.into_iter().rev() {
            let lead_val = Rational::from_bigint(row[0].1.clone());
            let inv = lead_val.recip().expect("pivot entries are nonzero");
            let mut v: SparseVec = row
                .into_iter()
                .map(|(c, x)| (c, &Rational::from_bigint(x) * &inv))
                .collect();
            let hits: Vec<(usize, Rational)> = v
                .iter()
                .filter(|(c, _)| *c != lead && rows.contains_key(c))
                .map(|(c, x)| (c, x.clone()))
                .collect();
            for (c, x) in hits {
                let other = &rows[&c];
                v.add_scaled(other, &(-x));
            }
            rows.insert(lead, v);
        }
        Reduced {
            rows: rows.into_iter().collect(),
        }
    }
}
