//! Built-in instances for the self-check and the acceptance suite.

use gysin_core::geometry::{blown_up_surface, GeometricArrangement, Graph};
use gysin_core::matroid::Arrangement;

/// `x_i - x_j` in `C^n`.
pub fn braid(n: usize) -> Arrangement {
    let mut normals = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = -1;
            normals.push(v);
        }
    }
    Arrangement::from_int_vectors(n, &normals).expect("braid normals are distinct")
}

/// Coordinate hyperplanes in `C^n`.
pub fn boolean(n: usize) -> Arrangement {
    let normals: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    Arrangement::from_int_vectors(n, &normals).expect("coordinate normals are distinct")
}

fn central(dim: usize, normals: &[&[i64]]) -> Arrangement {
    let normals: Vec<Vec<i64>> = normals.iter().map(|v| v.to_vec()).collect();
    Arrangement::from_int_vectors(dim, &normals).expect("zoo arrangement is valid")
}

/// Central arrangements with at most eight hyperplanes.
pub fn arrangements() -> Vec<(&'static str, Arrangement)> {
    vec![
        ("braid C^3", braid(3)),
        ("braid C^4", braid(4)),
        ("boolean C^3", boolean(3)),
        ("boolean C^5", boolean(5)),
        ("x, y, x-y", central(2, &[&[1, 0], &[0, 1], &[1, -1]])),
        ("pencil of four lines", central(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, 2]])),
        ("generic four planes", central(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])),
        (
            "generic five planes",
            central(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]]),
        ),
        (
            "non-Fano",
            central(
                3,
                &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]],
            ),
        ),
        (
            "deleted B3",
            central(
                3,
                &[
                    &[1, 0, 0],
                    &[0, 1, 0],
                    &[0, 0, 1],
                    &[1, -1, 0],
                    &[1, 1, 0],
                    &[1, 0, -1],
                    &[1, 0, 1],
                    &[0, 1, -1],
                ],
            ),
        ),
        ("two planes in C^3", central(3, &[&[1, 0, 0], &[0, 1, 0]])),
        ("braid C^4 with x+y+z+w", {
            let mut normals: Vec<Vec<i64>> = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    let mut v = vec![0; 4];
                    v[i] = 1;
                    v[j] = -1;
                    normals.push(v);
                }
            }
            normals.push(vec![1, 1, 1, 1]);
            Arrangement::from_int_vectors(4, &normals).expect("valid")
        }),
    ]
}

/// Geometries for the structural suite. With `corrupt`, curve powers use the
/// broken diagonal class.
pub fn geometries(corrupt: bool) -> Vec<(String, GeometricArrangement)> {
    let proj = |normals: &[Vec<i64>]| GeometricArrangement::projective_int(normals[0].len() - 1, normals).expect("valid");
    let mut out = vec![
        ("three concurrent lines in P^2".to_string(), proj(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, -1, 0]])),
        ("coordinate lines in P^2".to_string(), proj(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])),
        (
            "four general lines in P^2".to_string(),
            proj(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]),
        ),
        (
            "five planes in P^3".to_string(),
            proj(&[
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![1, 1, 1, 0],
                vec![0, 0, 0, 1],
            ]),
        ),
        ("blown-up plane".to_string(), blown_up_surface().blown),
    ];
    let graphs = [
        ("K2", Graph::complete(2)),
        ("K3", Graph::complete(3)),
        ("path on 3 vertices", Graph::new(3, vec![(0, 1), (1, 2)]).expect("valid")),
        ("4-cycle", Graph::cycle(4)),
    ];
    for g in 0..=2 {
        for (name, graph) in &graphs {
            if g == 2 && graph.vertex_count() > 3 {
                continue;
            }
            let geom = if corrupt {
                GeometricArrangement::curve_power_corrupted(g, graph)
            } else {
                GeometricArrangement::curve_power(g, graph)
            };
            out.push((format!("genus {} curve, {}", g, name), geom.expect("valid graph")));
        }
    }
    out
}

/// All graphs on `1..=max_vertices` vertices up to isomorphism.
pub fn graphs(max_vertices: usize) -> Vec<Graph> {
    (1..=max_vertices).flat_map(Graph::isomorphism_classes).collect()
}
