use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::LabelSet;

/// A finite simple graph. Edges are stored with the smaller endpoint
/// first, in the order given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.vertices, r.edges.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            vertices: g.vertices,
            edges: g.edges.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = Vec::new();
        let mut out = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= vertices || b >= vertices {
                return Err(Error::InvalidGraph(format!("edge ({}, {}) out of range", a, b)));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {}", a)));
            }
            let e = (a.min(b), a.max(b));
            if seen.contains(&e) {
                return Err(Error::InvalidGraph(format!("repeated edge ({}, {})", a, b)));
            }
            seen.push(e);
            out.push(e);
        }
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            vertices: n,
            edges: Vec::new(),
        }
    }

    /// `K_n` with edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph { vertices: n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).map(|(a, b)| (a.min(b), a.max(b))).collect();
        Graph::new(n, edges).expect("cycles with n >= 3 are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Connected components of `(V, I)` for an edge subset `I`, each sorted,
    /// ordered by least vertex.
    pub fn components(&self, edges: LabelSet) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in edges.iter() {
            let (a, b) = self.edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_block = vec![usize::MAX; self.vertices];
        for v in 0..self.vertices {
            let r = find(&mut parent, v);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[root_block[r]].push(v);
        }
        blocks
    }

    /// The graph without edge `e`.
    pub fn delete(&self, e: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Graph {
            vertices: self.vertices,
            edges,
        }
    }

    /// The simple graph obtained by contracting edge `e`; parallel edges are
    /// merged.
    pub fn contract(&self, e: usize) -> Graph {
        let (a, b) = self.edges[e];
        let relabel = |v: usize| {
            let v = if v == b { a } else { v };
            if v > b {
                v - 1
            } else {
                v
            }
        };
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (k, &(x, y)) in self.edges.iter().enumerate() {
            if k == e {
                continue;
            }
            let (x, y) = (relabel(x), relabel(y));
            let edge = (x.min(y), x.max(y));
            if !edges.contains(&edge) {
                edges.push(edge);
            }
        }
        Graph {
            vertices: self.vertices - 1,
            edges,
        }
    }

    /// One representative of every isomorphism class of graphs on `n`
    /// vertices (`n ≤ 5`).
    pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
        assert!(n <= 5, "brute-force enumeration is for small graphs");
        let pairs: Vec<(usize, usize)> = Graph::complete(n).edges;
        let perms = permutations(n);
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| pairs[k])
                .collect();
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize)> = edges
                        .iter()
                        .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                        .collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .expect("at least one permutation");
            if seen.insert(canon) {
                out.push(Graph { vertices: n, edges });
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Graph::new(2, vec![(0, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
        assert_eq!(Graph::new(3, vec![(2, 1)]).unwrap().edges(), &[(1, 2)]);
    }

    #[test]
    fn components_are_ordered_by_least_vertex() {
        let g = Graph::new(4, vec![(1, 3), (0, 2)]).unwrap();
        assert_eq!(g.components(LabelSet::from_slice(&[0])), vec![vec![0], vec![1, 3], vec![2]]);
        assert_eq!(g.components(LabelSet::from_slice(&[0, 1])), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| Graph::isomorphism_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11]);
    }

    #[test]
    fn contraction_merges_parallel_edges() {
        let k3 = Graph::complete(3);
        let c = k3.contract(0);
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.edges(), &[(0, 1)]);
    }

    #[test]
    fn serde_roundtrip() {
        let g = Graph::cycle(4);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"vertices":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&s).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":2,"edges":[[0,0]]}"#).is_err());
    }
}
