use std::fmt::Write as _;

use crate::exact::{Rational, SparseMatrix, SparseVec};

/// Graded cohomology ring of a stratum with a fixed basis.
///
/// Index 0 is always the unit and the last index the point class.
#[derive(Clone, Debug, PartialEq)]
pub enum CohomologyRing {
    /// `H(Y^k)` for a smooth projective curve `Y` of genus `g`.
    ///
    /// A basis element is a tensor `x_1 ⊗ … ⊗ x_k` of per-factor classes
    /// `1, α_1..α_g, β_1..β_g, P` (digits `0`, `1..=g`, `g+1..=2g`,
    /// `2g+1`), encoded in mixed radix with the first factor most
    /// significant.
    Curve { genus: usize, factors: usize },
    /// `Q[h]/(h^{dim+1})`.
    Projective { dim: usize },
    /// Explicit multiplication table.
    Table(TableRing),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRing {
    pub names: Vec<String>,
    pub degrees: Vec<usize>,
    pub complex_dim: usize,
    /// `products[i][j] = x_i · x_j`.
    pub products: Vec<Vec<SparseVec>>,
}

impl CohomologyRing {
    pub fn point() -> Self {
        CohomologyRing::Projective { dim: 0 }
    }

    /// Number of basis elements.
    pub fn dim(&self) -> usize {
        match self {
            CohomologyRing::Curve { genus, factors } => (2 * genus + 2).pow(*factors as u32),
            CohomologyRing::Projective { dim } => dim + 1,
            CohomologyRing::Table(t) => t.degrees.len(),
        }
    }

    /// Complex dimension of the underlying variety.
    pub fn complex_dim(&self) -> usize {
        match self {
            CohomologyRing::Curve { factors, .. } => *factors,
            CohomologyRing::Projective { dim } => *dim,
            CohomologyRing::Table(t) => t.complex_dim,
        }
    }

    pub fn unit(&self) -> usize {
        0
    }

    pub fn point_class(&self) -> usize {
        self.dim() - 1
    }

    pub fn degree(&self, i: usize) -> usize {
        match self {
            CohomologyRing::Curve { genus, factors } => {
                digits(*genus, *factors, i).iter().map(|&d| digit_degree(*genus, d)).sum()
            }
            CohomologyRing::Projective { .. } => 2 * i,
            CohomologyRing::Table(t) => t.degrees[i],
        }
    }

    /// Basis indices of degree `k`, increasing.
    pub fn basis_of_degree(&self, k: usize) -> Vec<usize> {
        match self {
            CohomologyRing::Projective { dim } => {
                if k % 2 == 0 && k / 2 <= *dim {
                    vec![k / 2]
                } else {
                    vec![]
                }
            }
            _ => (0..self.dim()).filter(|&i| self.degree(i) == k).collect(),
        }
    }

    /// Betti numbers, indexed by degree.
    pub fn betti(&self) -> Vec<usize> {
        let mut out = vec![0; 2 * self.complex_dim() + 1];
        for i in 0..self.dim() {
            out[self.degree(i)] += 1;
        }
        out
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            CohomologyRing::Curve { genus, factors } => {
                if *factors == 0 {
                    return "1".into();
                }
                let g = *genus;
                let mut s = String::new();
                for (f, d) in digits(g, *factors, i).into_iter().enumerate() {
                    if f > 0 {
                        s.push('⊗');
                    }
                    match d {
                        0 => s.push('1'),
                        d if d <= g => write!(s, "a{}", d).expect("write to string"),
                        d if d <= 2 * g => write!(s, "b{}", d - g).expect("write to string"),
                        _ => s.push('P'),
                    }
                }
                s
            }
            CohomologyRing::Projective { .. } => match i {
                0 => "1".into(),
                1 => "h".into(),
                _ => format!("h^{}", i),
            },
            CohomologyRing::Table(t) => t.names[i].clone(),
        }
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> SparseVec {
        match self {
            CohomologyRing::Curve { genus, factors } => match curve_mul(*genus, *factors, i, j) {
                Some((k, s)) => SparseVec::from_pairs([(k, Rational::from_int(s as i64))]),
                None => SparseVec::new(),
            },
            CohomologyRing::Projective { dim } => {
                if i + j <= *dim {
                    SparseVec::unit(i + j)
                } else {
                    SparseVec::new()
                }
            }
            CohomologyRing::Table(t) => t.products[i][j].clone(),
        }
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let p = self.mul_basis(i, j);
                if !p.is_zero() {
                    out.add_scaled(&p, &(x * y));
                }
            }
        }
        out
    }

    /// Checks unit, graded commutativity, associativity and Poincaré
    /// duality. Triples are exhaustive when `dim^3` is at most
    /// `max_triples`, otherwise a fixed stride through the basis is used.
    pub fn check_axioms(&self, max_triples: usize) -> std::result::Result<(), String> {
        let n = self.dim();
        let sample: Vec<usize> = if n.pow(3) <= max_triples {
            (0..n).collect()
        } else {
            let k = ((max_triples as f64).cbrt() as usize).max(2);
            let step = (n / k).max(1);
            (0..n).step_by(step).chain([n - 1]).collect()
        };
        for &i in &sample {
            if self.mul_basis(0, i) != SparseVec::unit(i) || self.mul_basis(i, 0) != SparseVec::unit(i) {
                return Err(format!("unit fails on {}", self.label(i)));
            }
        }
        for &i in &sample {
            for &j in &sample {
                let sign = if (self.degree(i) * self.degree(j)) % 2 == 0 { 1 } else { -1 };
                let ij = self.mul_basis(i, j);
                if ij != self.mul_basis(j, i).scaled(&Rational::from_int(sign)) {
                    return Err(format!(
                        "graded commutativity fails on {}, {}",
                        self.label(i),
                        self.label(j)
                    ));
                }
                for (t, v) in ij.iter() {
                    if self.degree(t) != self.degree(i) + self.degree(j) || v.is_zero() {
                        return Err("product is not graded".into());
                    }
                }
                for &k in &sample {
                    let left = self.mul(&ij, &SparseVec::unit(k));
                    let right = self.mul(&SparseVec::unit(i), &self.mul_basis(j, k));
                    if left != right {
                        return Err(format!(
                            "associativity fails on {}, {}, {}",
                            self.label(i),
                            self.label(j),
                            self.label(k)
                        ));
                    }
                }
            }
        }
        let d = self.complex_dim();
        let top = self.basis_of_degree(2 * d);
        if top != vec![self.point_class()] {
            return Err("top degree is not spanned by the point class".into());
        }
        for k in 0..=2 * d {
            let lo = self.basis_of_degree(k);
            let hi = self.basis_of_degree(2 * d - k);
            if lo.len() != hi.len() {
                return Err(format!("Betti numbers are not symmetric in degree {}", k));
            }
            let pt = self.point_class();
            let pairing = SparseMatrix::from_triplets(
                lo.len(),
                hi.len(),
                lo.iter().enumerate().flat_map(|(r, &x)| {
                    hi.iter()
                        .enumerate()
                        .map(move |(c, &y)| (r, c, self.mul_basis(x, y).get(pt)))
                }),
            )
            .expect("indices in range");
            if pairing.rank() != lo.len() {
                return Err(format!("Poincaré pairing degenerate in degree {}", k));
            }
        }
        Ok(())
    }
}

pub(crate) fn radix(genus: usize) -> usize {
    2 * genus + 2
}

pub(crate) fn digits(genus: usize, factors: usize, mut i: usize) -> Vec<usize> {
    let r = radix(genus);
    let mut out = vec![0; factors];
    for f in (0..factors).rev() {
        out[f] = i % r;
        i /= r;
    }
    out
}

pub(crate) fn from_digits(genus: usize, d: &[usize]) -> usize {
    let r = radix(genus);
    d.iter().fold(0, |acc, &x| acc * r + x)
}

pub(crate) fn digit_degree(genus: usize, d: usize) -> usize {
    if d == 0 {
        0
    } else if d == 2 * genus + 1 {
        2
    } else {
        1
    }
}

/// Product in `H(Y)`: `α_i β_i = P = -β_i α_i`, all other products of
/// positive-degree classes vanish.
fn curve_digit_mul(genus: usize, x: usize, y: usize) -> Option<(usize, i32)> {
    let g = genus;
    match (x, y) {
        (0, y) => Some((y, 1)),
        (x, 0) => Some((x, 1)),
        (x, y) if x <= g && y == x + g => Some((2 * g + 1, 1)),
        (x, y) if x > g && x <= 2 * g && y == x - g => Some((2 * g + 1, -1)),
        _ => None,
    }
}

/// Product of two tensors with the Koszul sign
/// `(-1)^{Σ_{f > f'} |x_f| |y_f'|}`.
pub(crate) fn curve_mul_digits(genus: usize, x: &[usize], y: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut sign = 1;
    let mut out = Vec::with_capacity(x.len());
    let mut odd_y_before = 0usize;
    for f in 0..x.len() {
        if digit_degree(genus, x[f]) % 2 == 1 && odd_y_before % 2 == 1 {
            sign = -sign;
        }
        let (d, s) = curve_digit_mul(genus, x[f], y[f])?;
        sign *= s;
        out.push(d);
        if digit_degree(genus, y[f]) % 2 == 1 {
            odd_y_before += 1;
        }
    }
    Some((out, sign))
}

pub(crate) fn curve_mul(genus: usize, factors: usize, i: usize, j: usize) -> Option<(usize, i32)> {
    let x = digits(genus, factors, i);
    let y = digits(genus, factors, j);
    curve_mul_digits(genus, &x, &y).map(|(d, s)| (from_digits(genus, &d), s))
}

/// Pullback of a basis tensor on `Y^B` along the map `Y^T → Y^B` whose
/// `b`-th component is the projection to factor `u[b]`.
pub(crate) fn curve_pullback(
    genus: usize,
    source_factors: usize,
    u: &[usize],
    target_factors: usize,
    i: usize,
) -> Option<(usize, i32)> {
    let src = digits(genus, source_factors, i);
    let mut acc = vec![0; target_factors];
    let mut sign = 1;
    for (b, &d) in src.iter().enumerate() {
        if d == 0 {
            continue;
        }
        let mut factor = vec![0; target_factors];
        factor[u[b]] = d;
        let (next, s) = curve_mul_digits(genus, &acc, &factor)?;
        acc = next;
        sign *= s;
    }
    Some((from_digits(genus, &acc), sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_betti() {
        for g in 0..3 {
            assert_eq!(CohomologyRing::Curve { genus: g, factors: 1 }.betti(), vec![1, 2 * g, 1]);
        }
        assert_eq!(CohomologyRing::Curve { genus: 1, factors: 2 }.betti(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn symplectic_relations() {
        let r = CohomologyRing::Curve { genus: 2, factors: 1 };
        // a1 * b1 = P, b1 * a1 = -P, a1 * b2 = 0
        assert_eq!(r.mul_basis(1, 3), SparseVec::unit(5));
        assert_eq!(r.mul_basis(3, 1), SparseVec::unit(5).neg());
        assert!(r.mul_basis(1, 4).is_zero());
        assert!(r.mul_basis(1, 1).is_zero());
    }

    #[test]
    fn koszul_sign() {
        let g = 1;
        // (a⊗1)(1⊗b) = a⊗b, (1⊗b)(a⊗1) = -(a⊗b)
        let a1 = from_digits(g, &[1, 0]);
        let b2 = from_digits(g, &[0, 2]);
        let ab = from_digits(g, &[1, 2]);
        assert_eq!(curve_mul(g, 2, a1, b2), Some((ab, 1)));
        assert_eq!(curve_mul(g, 2, b2, a1), Some((ab, -1)));
    }

    #[test]
    fn axioms_small_rings() {
        for g in 0..=2 {
            for k in 0..=2 {
                CohomologyRing::Curve { genus: g, factors: k }.check_axioms(usize::MAX).unwrap();
            }
        }
        CohomologyRing::Curve { genus: 1, factors: 3 }.check_axioms(usize::MAX).unwrap();
        for d in 0..4 {
            CohomologyRing::Projective { dim: d }.check_axioms(usize::MAX).unwrap();
        }
    }

    #[test]
    fn pullback_along_diagonal() {
        // Y → Y², y ↦ (y, y): a⊗b pulls back to a·b = P.
        let g = 1;
        let ab = from_digits(g, &[1, 2]);
        assert_eq!(curve_pullback(g, 2, &[0, 0], 1, ab), Some((3, 1)));
        let ba = from_digits(g, &[2, 1]);
        assert_eq!(curve_pullback(g, 2, &[0, 0], 1, ba), Some((3, -1)));
    }
}
