//! Combinatorics of an arrangement: the rank oracle, circuits, the poset of
//! flats and no-broken-circuit sets.
//!
//! An [`Arrangement`] is a finite, linearly ordered list of hypersurfaces
//! together with the codimension of every intersection `L_I`, or `None` when
//! that intersection is empty ("null"). Everything else is derived from this
//! table, so the same code serves hyperplanes given by covectors, projective
//! arrangements, diagonals in powers of a curve and hand-written data.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Rational, SparseMatrix};

/// Largest number of hypersurfaces accepted; flats and circuits are found
/// by enumerating all subsets.
pub const MAX_LABELS: usize = 20;

/// A subset of the hypersurface labels `0..l`, stored as a bitmask.
///
/// Ordering is lexicographic on the increasing sequence of elements, so
/// `{0,1} < {0,1,2} < {0,2} < {1}`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u32);

impl LabelSet {
    pub const fn empty() -> Self {
        LabelSet(0)
    }

    pub const fn from_bits(bits: u32) -> Self {
        LabelSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        LabelSet(1 << i)
    }

    /// All labels `0..l`.
    pub fn full(l: usize) -> Self {
        if l >= 32 {
            LabelSet(u32::MAX)
        } else {
            LabelSet((1u32 << l) - 1)
        }
    }

    pub fn from_slice(labels: &[usize]) -> Self {
        labels.iter().fold(Self::empty(), |s, &i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        LabelSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        LabelSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        LabelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        LabelSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        LabelSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of `i` among the elements of the set, counting from 0.
    pub fn rank_of(self, i: usize) -> usize {
        (self.0 & ((1u32 << i) - 1)).count_ones() as usize
    }

    /// All subsets of `self` with exactly `k` elements, in lexicographic
    /// order.
    pub fn subsets_of_size(self, k: usize) -> Vec<LabelSet> {
        let elems = self.to_vec();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        fn rec(elems: &[usize], k: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<LabelSet>) {
            if chosen.len() == k {
                out.push(LabelSet::from_slice(chosen));
                return;
            }
            for idx in start..elems.len() {
                if elems.len() - idx < k - chosen.len() {
                    break;
                }
                chosen.push(elems[idx]);
                rec(elems, k, idx + 1, chosen, out);
                chosen.pop();
            }
        }
        rec(&elems, k, 0, &mut chosen, &mut out);
        out
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for LabelSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(Self::empty(), |s, i| s.with(i))
    }
}

/// Shuffle sign defined by `x_{I ∪ J} = sgn(I, J) x_I ∧ x_J`.
pub fn sgn(i: LabelSet, j: LabelSet) -> Result<i32> {
    if !i.is_disjoint(j) {
        return Err(Error::Overlap);
    }
    Ok(shuffle_sign(i, j))
}

pub(crate) fn shuffle_sign(i: LabelSet, j: LabelSet) -> i32 {
    let inversions: u32 = i.iter().map(|x| (j.0 & ((1u32 << x) - 1)).count_ones()).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Index of a flat inside its arrangement's [`FlatPoset`].
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FlatId(pub usize);

/// A nonempty stratum, recorded by the set of hypersurfaces containing it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flat {
    pub members: LabelSet,
    pub codim: usize,
}

/// The strata of an arrangement graded by codimension. Flats are sorted by
/// codimension, then lexicographically by members; the ambient flat is
/// always `FlatId(0)`.
#[derive(Clone, Debug)]
pub struct FlatPoset {
    flats: Vec<Flat>,
    index: HashMap<LabelSet, FlatId>,
}

impl FlatPoset {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn ambient(&self) -> FlatId {
        FlatId(0)
    }

    pub fn get(&self, id: FlatId) -> &Flat {
        &self.flats[id.0]
    }

    pub fn id_of(&self, members: LabelSet) -> Option<FlatId> {
        self.index.get(&members).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (FlatId, &Flat)> + '_ {
        self.flats.iter().enumerate().map(|(i, f)| (FlatId(i), f))
    }

    pub fn ids(&self) -> impl Iterator<Item = FlatId> {
        (0..self.flats.len()).map(FlatId)
    }

    pub fn of_codim(&self, codim: usize) -> impl Iterator<Item = FlatId> + '_ {
        self.iter().filter(move |(_, f)| f.codim == codim).map(|(id, _)| id)
    }

    pub fn max_codim(&self) -> usize {
        self.flats.iter().map(|f| f.codim).max().unwrap_or(0)
    }

    /// Whether the stratum of `a` is contained in the stratum of `b`.
    pub fn is_below(&self, a: FlatId, b: FlatId) -> bool {
        self.get(b).members.is_subset_of(self.get(a).members)
    }

    /// Flats `b` with `a ⊂ b` as strata and `codim b = codim a - 1`.
    pub fn covered_by(&self, a: FlatId) -> Vec<FlatId> {
        let fa = self.get(a);
        self.iter()
            .filter(|(_, f)| f.codim + 1 == fa.codim && f.members.is_subset_of(fa.members))
            .map(|(id, _)| id)
            .collect()
    }
}

/// A finite, linearly ordered arrangement of hypersurfaces given by its
/// rank oracle.
#[derive(Clone, Debug)]
pub struct Arrangement {
    len: usize,
    codims: Vec<Option<u8>>,
    names: Vec<String>,
    flats: FlatPoset,
    circuits: Vec<LabelSet>,
    broken: Vec<LabelSet>,
}

impl Arrangement {
    /// Builds an arrangement from an oracle returning the codimension of
    /// `L_I`, or `None` when `L_I` is empty.
    ///
    /// The oracle is called once per subset and must be pure.
    pub fn from_oracle<F>(len: usize, oracle: F) -> Result<Self>
    where
        F: Fn(LabelSet) -> Option<usize>,
    {
        if len > MAX_LABELS {
            return Err(Error::TooManyLabels(len));
        }
        let codims: Vec<Option<u8>> = (0..1u32 << len)
            .map(|bits| oracle(LabelSet(bits)).map(|c| c as u8))
            .collect();
        let names = (1..=len).map(|i| i.to_string()).collect();
        Self::from_table(len, codims, names)
    }

    fn from_table(len: usize, codims: Vec<Option<u8>>, names: Vec<String>) -> Result<Self> {
        if codims[0] != Some(0) {
            return Err(Error::InvalidOracle("the empty intersection must be the ambient space".into()));
        }
        for bits in 0..codims.len() as u32 {
            let set = LabelSet(bits);
            for i in 0..len {
                if set.contains(i) {
                    continue;
                }
                let bigger = codims[set.with(i).0 as usize];
                match (codims[bits as usize], bigger) {
                    (None, Some(_)) => {
                        return Err(Error::InvalidOracle(format!(
                            "{:?} is empty but {:?} is not",
                            set,
                            set.with(i)
                        )))
                    }
                    (Some(a), Some(b)) if b < a || b > a + 1 => {
                        return Err(Error::InvalidOracle(format!(
                            "codim jumps from {} to {} when adding {} to {:?}",
                            a, b, i, set
                        )))
                    }
                    _ => {}
                }
            }
        }
        for i in 0..len {
            if codims[1 << i] != Some(1) {
                return Err(Error::InvalidOracle(format!("label {} is not a hypersurface", i)));
            }
        }
        let mut arr = Arrangement {
            len,
            codims,
            names,
            flats: FlatPoset {
                flats: Vec::new(),
                index: HashMap::new(),
            },
            circuits: Vec::new(),
            broken: Vec::new(),
        };
        arr.flats = arr.compute_flats();
        arr.circuits = arr.compute_circuits();
        arr.broken = arr
            .circuits
            .iter()
            .map(|c| c.without(c.first().expect("circuits are nonempty")))
            .collect();
        Ok(arr)
    }

    /// Central hyperplane arrangement in `C^dim` given by rational linear
    /// forms.
    pub fn from_vectors(dim: usize, normals: &[Vec<Rational>]) -> Result<Self> {
        let ranks = covector_ranks(dim, normals)?;
        let codims = ranks.into_iter().map(|r| Some(r as u8)).collect();
        let names = (1..=normals.len()).map(|i| i.to_string()).collect();
        Self::from_table(normals.len(), codims, names)
    }

    /// Same as [`Arrangement::from_vectors`] with integer entries.
    pub fn from_int_vectors(dim: usize, normals: &[Vec<i64>]) -> Result<Self> {
        let normals: Vec<Vec<Rational>> = normals
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        Self::from_vectors(dim, &normals)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.len);
        self.names = names;
        self
    }

    /// Number of hypersurfaces.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn all_labels(&self) -> LabelSet {
        LabelSet::full(self.len)
    }

    /// Codimension of `L_I`, `None` if `L_I` is empty.
    pub fn codim(&self, set: LabelSet) -> Option<usize> {
        self.codims[set.0 as usize].map(usize::from)
    }

    pub fn is_null(&self, set: LabelSet) -> bool {
        self.codim(set).is_none()
    }

    pub fn is_independent(&self, set: LabelSet) -> Result<bool> {
        match self.codim(set) {
            None => Err(Error::EmptyStratum),
            Some(c) => Ok(c == set.len()),
        }
    }

    /// Independent with nonempty stratum; null sets give `false`.
    pub(crate) fn independent(&self, set: LabelSet) -> bool {
        self.codim(set) == Some(set.len())
    }

    /// Members of the flat `L_I`, or `None` if `L_I` is empty.
    pub fn closure(&self, set: LabelSet) -> Option<LabelSet> {
        let c = self.codim(set)?;
        Some(
            (0..self.len)
                .filter(|&i| self.codim(set.with(i)) == Some(c))
                .collect(),
        )
    }

    pub fn flat_of(&self, set: LabelSet) -> Option<FlatId> {
        self.closure(set).and_then(|m| self.flats.id_of(m))
    }

    pub fn flats(&self) -> &FlatPoset {
        &self.flats
    }

    /// Minimal dependent subsets with nonempty stratum, in lexicographic
    /// order.
    pub fn circuits(&self) -> &[LabelSet] {
        &self.circuits
    }

    /// Circuits with their least element removed.
    pub fn broken_circuits(&self) -> &[LabelSet] {
        &self.broken
    }

    pub fn is_nbc(&self, set: LabelSet) -> bool {
        self.independent(set) && !self.broken.iter().any(|b| b.is_subset_of(set))
    }

    /// Independent sets spanning `flat` that contain no broken circuit, in
    /// lexicographic order. They index a basis of `A_S(L)`.
    pub fn nbc_sets(&self, flat: FlatId) -> Vec<LabelSet> {
        let f = self.flats.get(flat);
        f.members
            .subsets_of_size(f.codim)
            .into_iter()
            .filter(|&s| self.is_nbc(s))
            .collect()
    }

    /// Checks submodularity of the codimension function on nonempty strata.
    /// Quadratic in the number of subsets; meant for small arrangements.
    pub fn check_submodular(&self) -> Result<()> {
        let n = self.codims.len() as u32;
        for a in 0..n {
            for b in 0..n {
                let (ia, ib) = (LabelSet(a), LabelSet(b));
                let (Some(ca), Some(cb), Some(cu)) =
                    (self.codim(ia), self.codim(ib), self.codim(ia.union(ib)))
                else {
                    continue;
                };
                let ci = self.codim(ia.intersection(ib)).expect("subsets of nonempty strata are nonempty");
                if cu + ci > ca + cb {
                    return Err(Error::InvalidOracle(format!(
                        "not submodular on {:?}, {:?}",
                        ia, ib
                    )));
                }
            }
        }
        Ok(())
    }

    /// The arrangement without its last hypersurface.
    pub fn deletion(&self) -> Result<Arrangement> {
        if self.len == 0 {
            return Err(Error::NoHyperplane);
        }
        let len = self.len - 1;
        let codims = self.codims[..1 << len].to_vec();
        Self::from_table(len, codims, self.names[..len].to_vec())
    }

    /// The arrangement induced on the last hypersurface `L_l`, together with
    /// the relabeling `λ`: `lambda[i]` is the index of `L_l ∩ L_i` in the
    /// restriction (or `None` when that intersection is empty).
    pub fn restriction(&self) -> Result<(Arrangement, Vec<Option<usize>>)> {
        if self.len == 0 {
            return Err(Error::NoHyperplane);
        }
        let last = self.len - 1;
        let mut reps: Vec<usize> = Vec::new();
        let mut keys: Vec<LabelSet> = Vec::new();
        let mut lambda = vec![None; last];
        for (i, slot) in lambda.iter_mut().enumerate() {
            let Some(key) = self.closure(LabelSet::from_slice(&[i, last])) else {
                continue;
            };
            match keys.iter().position(|&k| k == key) {
                Some(j) => *slot = Some(j),
                None => {
                    keys.push(key);
                    reps.push(i);
                    *slot = Some(reps.len() - 1);
                }
            }
        }
        let len = reps.len();
        let codims = (0..1u32 << len)
            .map(|bits| {
                let set: LabelSet = LabelSet(bits).iter().map(|j| reps[j]).collect();
                self.codim(set.with(last)).map(|c| (c - 1) as u8)
            })
            .collect();
        let names = reps.iter().map(|&i| self.names[i].clone()).collect();
        Ok((Self::from_table(len, codims, names)?, lambda))
    }

    fn compute_flats(&self) -> FlatPoset {
        let mut set: BTreeSet<(usize, LabelSet)> = BTreeSet::new();
        for bits in 0..self.codims.len() as u32 {
            let s = LabelSet(bits);
            if self.independent(s) {
                let members = self.closure(s).expect("independent sets are nonempty");
                set.insert((s.len(), members));
            }
        }
        let flats: Vec<Flat> = set
            .into_iter()
            .map(|(codim, members)| Flat { members, codim })
            .collect();
        let index = flats
            .iter()
            .enumerate()
            .map(|(i, f)| (f.members, FlatId(i)))
            .collect();
        FlatPoset { flats, index }
    }

    fn compute_circuits(&self) -> Vec<LabelSet> {
        let mut out: Vec<LabelSet> = (0..self.codims.len() as u32)
            .map(LabelSet)
            .filter(|&s| {
                matches!(self.codim(s), Some(c) if c < s.len())
                    && s.iter().all(|i| self.independent(s.without(i)))
            })
            .collect();
        out.sort();
        out
    }
}

/// Rank of every subset of the given covectors, indexed by bitmask.
pub(crate) fn covector_ranks(dim: usize, normals: &[Vec<Rational>]) -> Result<Vec<usize>> {
    if normals.len() > MAX_LABELS {
        return Err(Error::TooManyLabels(normals.len()));
    }
    for (i, v) in normals.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::CovectorLength {
                index: i,
                expected: dim,
                found: v.len(),
            });
        }
        if v.iter().all(Rational::is_zero) {
            return Err(Error::DegenerateHyperplane(i));
        }
    }
    let rank_of = |set: LabelSet| -> usize {
        let m = SparseMatrix::from_triplets(
            set.len(),
            dim,
            set.iter().enumerate().flat_map(|(r, i)| {
                normals[i].iter().enumerate().map(move |(c, x)| (r, c, x.clone()))
            }),
        )
        .expect("indices are in range");
        m.rank()
    };
    let l = normals.len();
    for i in 0..l {
        for j in i + 1..l {
            if rank_of(LabelSet::from_slice(&[i, j])) < 2 {
                return Err(Error::RepeatedHyperplane(i, j));
            }
        }
    }
    Ok((0..1u32 << l).map(|bits| rank_of(LabelSet(bits))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn concurrent_lines() -> Arrangement {
        Arrangement::from_int_vectors(2, &[vec![1, 0], vec![0, 1], vec![1, -1]]).unwrap()
    }

    #[test]
    fn from_vectors_codims() {
        assert_eq!(concurrent_lines().codim(ls(&[0, 1, 2])), Some(2));
        assert_eq!(boolean(3).codim(ls(&[0, 1, 2])), Some(3));
        let b = Arrangement::from_int_vectors(3, &[vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]]).unwrap();
        assert_eq!(b.codim(ls(&[0, 1, 2])), Some(2));
    }

    #[test]
    fn from_vectors_errors() {
        assert_eq!(
            Arrangement::from_int_vectors(2, &[vec![1, 0], vec![0, 0]]).unwrap_err(),
            Error::DegenerateHyperplane(1)
        );
        assert_eq!(
            Arrangement::from_int_vectors(2, &[vec![1, 2], vec![-2, -4]]).unwrap_err(),
            Error::RepeatedHyperplane(0, 1)
        );
        let too_many: Vec<Vec<i64>> = (0..21).map(|i| vec![1, i]).collect();
        assert_eq!(
            Arrangement::from_int_vectors(2, &too_many).unwrap_err(),
            Error::TooManyLabels(21)
        );
    }

    #[test]
    fn independence() {
        let b = braid(3);
        assert!(b.is_independent(ls(&[0, 1])).unwrap());
        assert!(!b.is_independent(ls(&[0, 1, 2])).unwrap());
        assert!(b.is_independent(LabelSet::empty()).unwrap());
        let blown = Arrangement::from_oracle(2, |s| if s.len() == 2 { None } else { Some(s.len()) }).unwrap();
        assert_eq!(blown.is_independent(ls(&[0, 1])), Err(Error::EmptyStratum));
    }

    #[test]
    fn circuit_examples() {
        assert_eq!(concurrent_lines().circuits(), &[ls(&[0, 1, 2])]);
        assert!(boolean(3).circuits().is_empty());
        let b4 = braid(4);
        let sizes: Vec<usize> = b4.circuits().iter().map(|c| c.len()).collect();
        // triangles of K4 and its 4-cycles
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 4).count(), 3);
    }

    #[test]
    fn flats_examples() {
        let c = concurrent_lines();
        let codims: Vec<usize> = c.flats().iter().map(|(_, f)| f.codim).collect();
        assert_eq!(codims, vec![0, 1, 1, 1, 2]);
        assert_eq!(c.flats().get(FlatId(4)).members, ls(&[0, 1, 2]));

        let b2 = boolean(2);
        let members: Vec<LabelSet> = b2.flats().iter().map(|(_, f)| f.members).collect();
        assert_eq!(members, vec![ls(&[]), ls(&[0]), ls(&[1]), ls(&[0, 1])]);

        let codims: Vec<usize> = braid(3).flats().iter().map(|(_, f)| f.codim).collect();
        assert_eq!(codims, vec![0, 1, 1, 1, 2]);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sgn(ls(&[1]), ls(&[0, 2])).unwrap(), -1);
        assert_eq!(sgn(ls(&[]), ls(&[0, 4])).unwrap(), 1);
        assert_eq!(sgn(ls(&[2]), ls(&[0, 1])).unwrap(), 1);
        assert_eq!(sgn(ls(&[0, 1]), ls(&[1])), Err(Error::Overlap));
    }

    #[test]
    fn nbc_examples() {
        let c = concurrent_lines();
        assert_eq!(c.nbc_sets(FlatId(4)), vec![ls(&[0, 1]), ls(&[0, 2])]);
        let b = boolean(4);
        let top = b.flats().id_of(ls(&[0, 1, 2, 3])).unwrap();
        assert_eq!(b.nbc_sets(top), vec![ls(&[0, 1, 2, 3])]);
        let b4 = braid(4);
        let mut per_codim = vec![0; 4];
        for (id, f) in b4.flats().iter() {
            per_codim[f.codim] += b4.nbc_sets(id).len();
        }
        assert_eq!(per_codim, vec![1, 6, 11, 6]);
    }

    #[test]
    fn labelset_order_is_lexicographic() {
        let mut v = vec![ls(&[1]), ls(&[0, 2]), ls(&[0, 1, 2]), ls(&[0, 1])];
        v.sort();
        assert_eq!(v, vec![ls(&[0, 1]), ls(&[0, 1, 2]), ls(&[0, 2]), ls(&[1])]);
    }

    #[test]
    fn deletion_and_restriction_of_concurrent_lines() {
        let c = concurrent_lines();
        let d = c.deletion().unwrap();
        assert_eq!(d.len(), 2);
        let (r, lambda) = c.restriction().unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(lambda, vec![Some(0), Some(0)]);
    }

    #[test]
    fn submodular_zoo() {
        for a in [braid(3), braid(4), boolean(3), concurrent_lines()] {
            a.check_submodular().unwrap();
        }
    }

    #[test]
    fn oracle_validation() {
        assert!(Arrangement::from_oracle(1, |_| Some(0)).is_err());
        assert!(Arrangement::from_oracle(2, |s| if s.is_empty() { Some(0) } else if s.len() == 1 { Some(1) } else { Some(3) }).is_err());
    }
}
