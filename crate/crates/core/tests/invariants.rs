use gysin_core::matroid::{sgn, Arrangement, FlatId, LabelSet};
use gysin_core::orlik_solomon::OsAlgebra;
use proptest::prelude::*;

fn arrangement_strategy() -> impl Strategy<Value = Arrangement> {
    (2usize..=4)
        .prop_flat_map(|dim| prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 2..=7).prop_map(move |v| (dim, v)))
        .prop_filter_map("degenerate or repeated normals", |(dim, v)| Arrangement::from_int_vectors(dim, &v).ok())
}

fn independent(arr: &Arrangement, s: LabelSet) -> bool {
    arr.is_independent(s).unwrap()
}

fn mobius(arr: &Arrangement) -> Vec<i64> {
    let flats = arr.flats();
    let mut mu = vec![0i64; flats.len()];
    let ids: Vec<FlatId> = {
        let mut v: Vec<FlatId> = flats.ids().collect();
        v.sort_by_key(|f| flats.get(*f).codim);
        v
    };
    for &s in &ids {
        mu[s.0] = if s == flats.ambient() {
            1
        } else {
            -ids.iter()
                .filter(|&&t| t != s && flats.is_below(s, t))
                .map(|t| mu[t.0])
                .sum::<i64>()
        };
    }
    mu
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn independent_sets_satisfy_exchange(arr in arrangement_strategy()) {
        let all = arr.all_labels();
        let indep: Vec<LabelSet> = (0..=arr.len())
            .flat_map(|k| all.subsets_of_size(k))
            .filter(|&s| independent(&arr, s))
            .collect();
        for &a in &indep {
            for &b in &indep {
                if a.len() < b.len() {
                    prop_assert!(b.difference(a).iter().any(|x| independent(&arr, a.with(x))));
                }
            }
        }
    }

    #[test]
    fn mobius_counts_nbc_sets(arr in arrangement_strategy()) {
        let mu = mobius(&arr);
        let os = OsAlgebra::new(arr.clone());
        for (f, flat) in arr.flats().iter() {
            let sign = if flat.codim % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(mu[f.0], sign * os.flat_dim(f) as i64);
        }
    }

    #[test]
    fn relabeling_preserves_flat_dimensions(arr_v in (2usize..=3).prop_flat_map(|dim| {
        (Just(dim), prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 2..=6))
    }), seed in any::<u64>()) {
        let (dim, normals) = arr_v;
        let Ok(arr) = Arrangement::from_int_vectors(dim, &normals) else { return Ok(()); };
        let n = normals.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let permuted: Vec<Vec<i64>> = perm.iter().map(|&p| normals[p].clone()).collect();
        let arr2 = Arrangement::from_int_vectors(dim, &permuted).unwrap();
        let (os1, os2) = (OsAlgebra::new(arr.clone()), OsAlgebra::new(arr2.clone()));
        prop_assert_eq!(os1.poincare_polynomial(), os2.poincare_polynomial());
        for (f, flat) in arr.flats().iter() {
            // label i of arr2 is label perm[i] of arr
            let image: LabelSet = (0..n).filter(|&i| flat.members.contains(perm[i])).collect();
            let g = arr2.flats().id_of(image).expect("relabeled flat");
            prop_assert_eq!(os1.flat_dim(f), os2.flat_dim(g));
        }
    }

    #[test]
    fn shuffle_sign_is_associative(a in 0u32..1 << 8, b in 0u32..1 << 8, c in 0u32..1 << 8) {
        let (a, b, c) = (a & !b & !c, b & !c, c);
        let (i, j, k) = (LabelSet::from_bits(a), LabelSet::from_bits(b), LabelSet::from_bits(c));
        let lhs = sgn(i, j).unwrap() * sgn(i.union(j), k).unwrap();
        let rhs = sgn(j, k).unwrap() * sgn(i, j.union(k)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn overlapping_sets_have_no_sign() {
    assert!(sgn(LabelSet::from_slice(&[0, 1]), LabelSet::from_slice(&[1])).is_err());
}
