//! Invariant checks over the built-in instances. Each check returns one
//! [`Outcome`] per instance.

use serde::{Deserialize, Serialize};

use gysin_core::confspace::{predicted_euler, BlochModel};
use gysin_core::exact::Rational;
use gysin_core::geometry::{GeometricArrangement, Graph, Splitting};
use gysin_core::matroid::{Arrangement, LabelSet};
use gysin_core::model::{blowup_map, GysinModel};
use gysin_core::orlik_solomon::OsAlgebra;

use crate::zoo;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub check: String,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(check: &str, instance: impl Into<String>, result: Result<String, String>) -> Self {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Outcome {
            check: check.to_string(),
            instance: instance.into(),
            passed,
            detail,
        }
    }
}

/// Poincaré polynomial from a brute-force enumeration of nbc sets, using
/// only the rank function.
pub fn nbc_oracle(arr: &Arrangement) -> Vec<usize> {
    let l = arr.len();
    let dependent = |s: LabelSet| arr.codim(s) != Some(s.len());
    let subsets: Vec<LabelSet> = (0u32..1 << l).map(LabelSet::from_bits).collect();
    let circuits: Vec<LabelSet> = subsets
        .iter()
        .copied()
        .filter(|&s| dependent(s) && s.iter().all(|x| !dependent(s.without(x))))
        .collect();
    let broken: Vec<LabelSet> = circuits
        .iter()
        .map(|c| c.without(c.first().expect("circuits are nonempty")))
        .collect();
    let mut poly = vec![0usize; l + 1];
    for s in subsets {
        if !dependent(s) && broken.iter().all(|b| !b.is_subset_of(s)) {
            poly[s.len()] += 1;
        }
    }
    while poly.len() > 1 && poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}

/// Coefficients of `Π (1 + k t)`.
pub fn product_of_linear(ks: &[usize]) -> Vec<usize> {
    let mut p = vec![1usize];
    for &k in ks {
        let mut next = vec![0; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * k;
        }
        p = next;
    }
    p
}

pub fn poincare(arr: &Arrangement, expected: &[usize]) -> Result<String, String> {
    let os = OsAlgebra::new(arr.clone()).poincare_polynomial();
    let oracle = nbc_oracle(arr);
    if os != oracle {
        return Err(format!("algebra {:?}, nbc oracle {:?}", os, oracle));
    }
    if os != expected {
        return Err(format!("algebra {:?}, expected {:?}", os, expected));
    }
    Ok(format!("{:?}", os))
}

pub fn bos(max_braid: usize, max_boolean: usize) -> Vec<Outcome> {
    let mut out = Vec::new();
    for n in 2..=max_braid {
        let ks: Vec<usize> = (1..n).collect();
        out.push(Outcome::new("poincare", format!("braid n={}", n), poincare(&zoo::braid(n), &product_of_linear(&ks))));
    }
    for n in 1..=max_boolean {
        let ks = vec![1; n];
        out.push(Outcome::new(
            "poincare",
            format!("boolean n={}", n),
            poincare(&zoo::boolean(n), &product_of_linear(&ks)),
        ));
    }
    out
}

pub fn deletion_restriction_of(arr: &Arrangement) -> Result<String, String> {
    let os = OsAlgebra::new(arr.clone());
    let dr = os.deletion_restriction().map_err(|e| e.to_string())?;
    let top = os.poincare_polynomial().len();
    for k in 0..top {
        let lhs = os.dim(k);
        let rhs = dr.deletion.dim(k) + if k == 0 { 0 } else { dr.restriction.dim(k - 1) };
        if lhs != rhs {
            return Err(format!("degree {}: {} != {}", k, lhs, rhs));
        }
    }
    dr.check_exact(&os)?;
    Ok(format!(
        "{:?} = {:?} + t·{:?}",
        os.poincare_polynomial(),
        dr.deletion.poincare_polynomial(),
        dr.restriction.poincare_polynomial()
    ))
}

pub fn deletion_restriction() -> Vec<Outcome> {
    zoo::arrangements()
        .into_iter()
        .map(|(name, arr)| Outcome::new("deletion-restriction", name, deletion_restriction_of(&arr)))
        .collect()
}

/// Indices `0, s, 2s, ...` with about `budget` entries.
fn sample(n: usize, budget: usize) -> Vec<usize> {
    let step = n.div_ceil(budget.max(1)).max(1);
    (0..n).step_by(step).collect()
}

fn geometry_checks(geom: &GeometricArrangement) -> Result<(), String> {
    let err = |e: gysin_core::Error| e.to_string();
    for f in geom.arrangement().flats().ids() {
        geom.ring(f)
            .check_axioms(8000)
            .map_err(|e| format!("ring of flat {}: {}", f.0, e))?;
    }
    for (s, sp) in geom.covers() {
        let size = geom.ring(s).dim() * geom.ring(sp).dim();
        geom.check_projection_formula(s, sp, size.div_ceil(4000).max(1))?;
        if geom.curve_data().is_some() {
            for i in 0..geom.ring(s).dim() {
                let a = geom.curve_gysin_with(s, sp, i, Splitting::LeastVertex).map_err(err)?;
                let b = geom.curve_gysin_with(s, sp, i, Splitting::Other).map_err(err)?;
                if a != b {
                    return Err(format!(
                        "Gysin image of {} depends on the splitting",
                        geom.ring(s).label(i)
                    ));
                }
            }
            let e = geom.euler_class(s, sp).map_err(err)?;
            let expected = geom.expected_euler_class(s, sp).map_err(err)?;
            if e != expected {
                return Err(format!(
                    "self-intersection of flat {} in flat {} is {:?}, expected {:?}",
                    s.0, sp.0, e, expected
                ));
            }
        }
    }
    Ok(())
}

fn algebra_checks(m: &GysinModel) -> Result<(), String> {
    let err = |e: gysin_core::Error| e.to_string();
    m.check_d_squared()?;
    let n = m.total_dim();
    let deg = |i: usize| m.bidegree(i).1;
    let idx = sample(n, 160);
    for &i in &idx {
        let a = m.basis_element(i);
        let da = m.d(&a).map_err(err)?;
        for &j in &idx {
            let b = m.basis_element(j);
            let ab = m.product(&a, &b).map_err(err)?;
            let ba = m.product(&b, &a).map_err(err)?;
            let s: Rational = if deg(i) * deg(j) % 2 == 0 { 1 } else { -1 }.into();
            if ab != ba.scaled(&s) {
                return Err(format!("graded commutativity fails for {} and {}", m.describe(i), m.describe(j)));
            }
            let t: Rational = if deg(i) % 2 == 0 { 1 } else { -1 }.into();
            let rhs = &m.product(&da, &b).map_err(err)? + &m.product(&a, &m.d(&b).map_err(err)?).map_err(err)?.scaled(&t);
            if m.d(&ab).map_err(err)? != rhs {
                return Err(format!("Leibniz rule fails for {} and {}", m.describe(i), m.describe(j)));
            }
        }
    }
    let idx = sample(n, 24);
    for &i in &idx {
        for &j in &idx {
            let ab = m.product(&m.basis_element(i), &m.basis_element(j)).map_err(err)?;
            for &k in &idx {
                let c = m.basis_element(k);
                let left = m.product(&ab, &c).map_err(err)?;
                let bc = m.product(&m.basis_element(j), &c).map_err(err)?;
                if left != m.product(&m.basis_element(i), &bc).map_err(err)? {
                    return Err(format!(
                        "associativity fails for {}, {}, {}",
                        m.describe(i),
                        m.describe(j),
                        m.describe(k)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Ring axioms, projection formula, splitting independence and the
/// self-intersection of diagonals on the geometry; `d² = 0`, graded
/// Leibniz, graded commutativity and associativity on the model.
pub fn structure_of(geom: &GeometricArrangement) -> Result<String, String> {
    geometry_checks(geom)?;
    let m = GysinModel::new(geom.clone()).map_err(|e| e.to_string())?;
    algebra_checks(&m)?;
    Ok(format!("model dimension {}", m.total_dim()))
}

pub fn structure(corrupt: bool) -> Vec<Outcome> {
    zoo::geometries(corrupt)
        .into_iter()
        .map(|(name, geom)| Outcome::new("structure", name, structure_of(&geom)))
        .collect()
}

/// Complements of hyperplanes in `P^d` against the cone: the total Betti
/// numbers are the Poincaré polynomial of the central arrangement divided
/// by `1 + t`.
pub fn projective_vs_central() -> Vec<Outcome> {
    let cases: Vec<(&str, Vec<Vec<i64>>)> = vec![
        ("three concurrent lines", vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, -1, 0]]),
        ("coordinate lines", vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
        ("four general lines", vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]),
        ("braid cone", vec![vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1], vec![1, 0, 0]]),
        (
            "five planes in P^3",
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![1, 1, 1, 0], vec![0, 0, 0, 1]],
        ),
    ];
    cases
        .into_iter()
        .map(|(name, normals)| {
            let result = (|| {
                let d = normals[0].len();
                let geom = GeometricArrangement::projective_int(d - 1, &normals).map_err(|e| e.to_string())?;
                let totals = GysinModel::new(geom).map_err(|e| e.to_string())?.weight_betti().trimmed_totals();
                let central = Arrangement::from_int_vectors(d, &normals).map_err(|e| e.to_string())?;
                let p = OsAlgebra::new(central).poincare_polynomial();
                // synthetic division by 1 + t
                let mut q = Vec::new();
                let mut carry = 0i64;
                for &c in &p[..p.len() - 1] {
                    carry = c as i64 - carry;
                    q.push(carry);
                }
                let expected: Vec<usize> = q.iter().map(|&c| c as usize).collect();
                if totals == expected {
                    Ok(format!("{:?}", totals))
                } else {
                    Err(format!("model {:?}, algebra quotient {:?}", totals, expected))
                }
            })();
            Outcome::new("projective-vs-central", name, result)
        })
        .collect()
}

/// Betti numbers of `Y` and of `Y` minus a point.
fn curve_betti(genus: usize) -> (Vec<usize>, Vec<usize>) {
    (vec![1, 2 * genus, 1], vec![1, 2 * genus])
}

fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Independently known Betti numbers of `C(Y, n)`: two points via
/// `C(Y, 2) → Y` with fibre `Y` minus a point (the Leray sequence
/// degenerates), three points on `P^1` via `PGL_2(C) ≃ SO(3)`.
pub fn known_configuration_betti(genus: usize, n: usize) -> Option<Vec<usize>> {
    match (genus, n) {
        (g, 2) => {
            let (y, punctured) = curve_betti(g);
            Some(convolve(&y, &punctured))
        }
        (0, 3) => Some(vec![1, 0, 0, 1]),
        _ => None,
    }
}

pub fn configuration_table(genus: usize, n: usize, corrupt: bool) -> Result<String, String> {
    let graph = Graph::complete(n);
    let geom = if corrupt {
        GeometricArrangement::curve_power_corrupted(genus, &graph)
    } else {
        GeometricArrangement::curve_power(genus, &graph)
    }
    .map_err(|e| e.to_string())?;
    let m = GysinModel::new(geom).map_err(|e| e.to_string())?;
    m.check_d_squared()?;
    let b = m.weight_betti();
    let expected = known_configuration_betti(genus, n).ok_or("no independent value")?;
    let got = b.trimmed_totals();
    let mut want = expected;
    while want.len() > 1 && want.last() == Some(&0) {
        want.pop();
    }
    if got == want {
        Ok(format!("{:?}", b.totals))
    } else {
        Err(format!("model {:?}, expected {:?}", b.totals, want))
    }
}

pub fn configuration_tables(corrupt: bool) -> Vec<Outcome> {
    [(0, 2), (0, 3), (1, 2)]
        .into_iter()
        .map(|(g, n)| {
            Outcome::new(
                "configuration-betti",
                format!("C(genus {}, {})", g, n),
                configuration_table(g, n, corrupt),
            )
        })
        .collect()
}

pub fn euler_of(genus: usize, graph: &Graph, corrupt: bool) -> Result<String, String> {
    let geom = if corrupt {
        GeometricArrangement::curve_power_corrupted(genus, graph)
    } else {
        GeometricArrangement::curve_power(genus, graph)
    }
    .map_err(|e| e.to_string())?;
    let m = GysinModel::new(geom).map_err(|e| e.to_string())?;
    m.check_d_squared()?;
    let b = m.weight_betti();
    let predicted = predicted_euler(genus, graph);
    if b.euler != predicted {
        return Err(format!("alternating sum {}, chromatic value {}", b.euler, predicted));
    }
    Ok(format!("χ = {}", b.euler))
}

pub fn euler_chromatic(max_genus: usize, max_vertices: usize, corrupt: bool) -> Vec<Outcome> {
    let mut out = Vec::new();
    for g in 0..=max_genus {
        for graph in zoo::graphs(max_vertices) {
            out.push(Outcome::new(
                "euler-chromatic",
                format!("genus {}, {}", g, describe_graph(&graph)),
                euler_of(g, &graph, corrupt),
            ));
        }
    }
    out
}

pub fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(a, b)| format!("{}{}", a, b)).collect();
    format!("{} vertices, edges [{}]", g.vertex_count(), edges.join(" "))
}

pub fn comparison_of(genus: usize, graph: &Graph, corrupt: bool) -> Result<String, String> {
    let geom = if corrupt {
        GeometricArrangement::curve_power_corrupted(genus, graph)
    } else {
        GeometricArrangement::curve_power(genus, graph)
    }
    .map_err(|e| e.to_string())?;
    let n = BlochModel::from_geometry(geom.clone(), gysin_core::model::DEFAULT_CAP).map_err(|e| e.to_string())?;
    let m = GysinModel::new(geom).map_err(|e| e.to_string())?;
    n.check_d_squared()?;
    let r = n
        .verify_comparison(&m, m.total_dim() <= 80)
        .map_err(|e| e.to_string())?;
    if r.ok() {
        Ok(format!("dimension {}", m.total_dim()))
    } else {
        Err(format!("{:?}", r))
    }
}

pub fn comparison(corrupt: bool) -> Vec<Outcome> {
    let mut out = Vec::new();
    for g in 0..=2 {
        let max_v = if g <= 1 { 4 } else { 3 };
        for graph in zoo::graphs(max_v) {
            out.push(Outcome::new(
                "alpha-beta",
                format!("genus {}, {}", g, describe_graph(&graph)),
                comparison_of(g, &graph, corrupt),
            ));
        }
    }
    out
}

/// Weight-two and weight-four complexes of the blow-up, the chain-map
/// property and the quasi-isomorphism.
pub fn blowup() -> Vec<Outcome> {
    let result = (|| {
        let b = blowup_map().map_err(|e| e.to_string())?;
        let dims = |m: &GysinModel, q: usize| -> Vec<usize> {
            (0..=q).map(|n| m.dim(q, n)).filter(|&d| d > 0).collect()
        };
        let want = [(2, vec![3, 1], vec![4, 2]), (4, vec![2, 3, 1], vec![3, 4, 1])];
        for (q, base, blown) in want {
            if dims(&b.base, q) != base || dims(&b.blown, q) != blown {
                return Err(format!(
                    "weight {}: {:?} and {:?}",
                    q,
                    dims(&b.base, q),
                    dims(&b.blown, q)
                ));
            }
        }
        let r = b.base.verify_quasi_iso(&b.blown, &b.map).map_err(|e| e.to_string())?;
        if !r.all_iso {
            return Err(format!("{:?}", r));
        }
        if r.rows.iter().any(|row| row.q == 4 && (row.source_dim != 0 || row.target_dim != 0)) {
            return Err("weight four is not acyclic".into());
        }
        Ok("quasi-isomorphism in every bidegree".to_string())
    })();
    vec![Outcome::new("blowup", "three concurrent lines", result)]
}

/// Everything; `corrupt` swaps in the broken diagonal class for curves.
pub fn all(corrupt: bool) -> Vec<Outcome> {
    let mut out = bos(6, 8);
    out.extend(deletion_restriction());
    out.extend(blowup());
    out.extend(projective_vs_central());
    out.extend(structure(corrupt));
    out.extend(configuration_tables(corrupt));
    out.extend(euler_chromatic(2, 4, corrupt));
    out.extend(comparison(corrupt));
    out
}
