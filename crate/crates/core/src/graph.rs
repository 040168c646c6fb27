//! Directed graphs of 𝓚ₙ arrays: an arrow `v_i → v_j` for every entry `(i, j)`
//! equal to ½.
//!
//! Isomorphism of two such graphs is decided by recovering the vertex labels
//! from the shape alone: `v_n` carries the only loop, `v_{n−1}` is its other
//! out-neighbour, and each further vertex is the single out-neighbour of the
//! previous one that has not been labelled yet.

use std::collections::BTreeSet;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::GhwArray;

/// A directed graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GhwGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl GhwGraph {
    /// Builds a graph from 1-based edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i == 0 || j == 0 || i > n || j > n) {
            return Err(Error::OutOfRange {
                what: "graph edge",
                detail: format!("({i}, {j}) is not within 1..={n}"),
            });
        }
        Ok(GhwGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains(&(from, to))
    }

    fn out_neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((v, 0)..(v + 1, 0)).map(|&(_, j)| j)
    }

    /// The graph with vertex `order[k]` renamed to `k + 1`.
    pub fn relabel(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: order.len(),
            });
        }
        let mut new_name = vec![0usize; self.n + 1];
        for (k, &v) in order.iter().enumerate() {
            if v == 0 || v > self.n || new_name[v] != 0 {
                return Err(Error::OutOfRange {
                    what: "vertex order",
                    detail: format!("{order:?} is not a permutation of 1..={}", self.n),
                });
            }
            new_name[v] = k + 1;
        }
        Self::from_edges(self.n, self.edges.iter().map(|&(i, j)| (new_name[i], new_name[j])))
    }

    /// The array whose ½ entries are the edges.
    pub fn to_array(&self) -> Result<GhwArray> {
        let mut half = vec![vec![false; self.n]; self.n];
        for &(i, j) in &self.edges {
            half[i - 1][j - 1] = true;
        }
        GhwArray::new(half)
    }
}

impl Serialize for GhwGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(i, j)| [i, j]).collect();
        let mut st = serializer.serialize_struct("GhwGraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

pub fn graph_of(array: &GhwArray) -> GhwGraph {
    let n = array.n();
    let edges = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| array.is_half(i, j))
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    GhwGraph { n, edges }
}

fn not_kn(reason: String) -> Error {
    Error::NotKnShape(reason)
}

/// Recovers which vertex plays `v_1, …, v_n`; `order[k]` is the vertex labelled `k + 1`.
pub fn canonical_vertex_order(graph: &GhwGraph) -> Result<Vec<usize>> {
    let n = graph.n;
    if n < 2 {
        return Err(not_kn(format!("{n} vertices")));
    }
    let loops: Vec<usize> = (1..=n).filter(|&v| graph.has_edge(v, v)).collect();
    let top = match loops.as_slice() {
        [v] => *v,
        _ => return Err(not_kn(format!("{} vertices carry a loop, expected exactly one", loops.len()))),
    };
    let mut labelled = vec![false; n + 1];
    labelled[top] = true;
    let mut order = vec![top];
    while order.len() < n {
        let current = *order.last().expect("nonempty");
        let fresh: Vec<usize> = graph.out_neighbours(current).filter(|&w| !labelled[w]).collect();
        let next = match fresh.as_slice() {
            [w] => *w,
            _ => {
                return Err(not_kn(format!(
                    "vertex {current} has {} unlabelled out-neighbours, expected exactly one",
                    fresh.len()
                )))
            }
        };
        labelled[next] = true;
        order.push(next);
    }
    order.reverse();
    let canonical = graph.relabel(&order)?;
    canonical
        .to_array()
        .map_err(|e| not_kn(format!("relabelled graph is not a valid array: {e}")))?;
    Ok(order)
}

/// The graph relabelled into its canonical vertex order.
pub fn canonical_form(graph: &GhwGraph) -> Result<GhwGraph> {
    graph.relabel(&canonical_vertex_order(graph)?)
}

/// Isomorphism of 𝓚ₙ graphs, decided by comparing canonical forms.
pub fn graphs_isomorphic(a: &GhwGraph, b: &GhwGraph) -> Result<bool> {
    if a.n != b.n || a.edges.len() != b.edges.len() {
        // still surface shape errors before answering
        canonical_form(a)?;
        canonical_form(b)?;
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// DOT text with vertices `v1…vn` and edges in lexicographic order.
pub fn to_dot(graph: &GhwGraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 1..=graph.n {
        out.push_str(&format!("  v{v};\n"));
    }
    for &(i, j) in &graph.edges {
        out.push_str(&format!("  v{i} -> v{j};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &GhwGraph) -> Vec<(usize, usize)> {
        g.edges().iter().copied().collect()
    }

    #[test]
    fn klein_bottle_graph() {
        let g = graph_of(&GhwArray::from_free_bits(2, 0).unwrap());
        assert_eq!(edges(&g), vec![(2, 1), (2, 2)]);
        assert_eq!(canonical_vertex_order(&g).unwrap(), vec![1, 2]);
        assert_eq!(to_dot(&g), "digraph G {\n  v1;\n  v2;\n  v2 -> v1;\n  v2 -> v2;\n}\n");
        // swapping the names is undone by the canonical order
        let swapped = g.relabel(&[2, 1]).unwrap();
        assert_eq!(edges(&swapped), vec![(1, 1), (1, 2)]);
        assert_eq!(canonical_vertex_order(&swapped).unwrap(), vec![2, 1]);
    }

    #[test]
    fn first_amphidicosm_graph() {
        let g = graph_of(&GhwArray::from_free_bits(3, 0).unwrap());
        assert_eq!(edges(&g), vec![(2, 1), (2, 3), (3, 2), (3, 3)]);
    }

    #[test]
    fn kn_graph_edges() {
        let g = graph_of(&GhwArray::from_free_bits(4, 0).unwrap());
        assert_eq!(edges(&g), vec![(2, 1), (2, 4), (3, 2), (3, 4), (4, 3), (4, 4)]);
        assert_eq!(to_dot(&g).matches("->").count(), 6);
    }

    #[test]
    fn family_graphs_canonicalize_to_identity() {
        for bits in 0..8 {
            let g = graph_of(&GhwArray::from_free_bits(4, bits).unwrap());
            assert_eq!(canonical_vertex_order(&g).unwrap(), vec![1, 2, 3, 4]);
            assert_eq!(g.to_array().unwrap().free_bits(), bits);
        }
    }

    #[test]
    fn shape_errors() {
        let two_loops = GhwGraph::from_edges(3, [(1, 1), (3, 3), (2, 1), (3, 2)]).unwrap();
        assert!(matches!(canonical_vertex_order(&two_loops), Err(Error::NotKnShape(_))));
        let branching = GhwGraph::from_edges(3, [(3, 3), (3, 1), (3, 2)]).unwrap();
        assert!(canonical_vertex_order(&branching).is_err());
        assert!(GhwGraph::from_edges(2, [(0, 1)]).is_err());
        let plus = graph_of(&GhwArray::from_free_bits(3, 0).unwrap());
        assert!(graphs_isomorphic(&plus, &two_loops).is_err());
    }

    #[test]
    fn amphidicosm_graphs_differ() {
        let plus = graph_of(&GhwArray::from_free_bits(3, 0).unwrap());
        let minus = graph_of(&GhwArray::from_free_bits(3, 1).unwrap());
        assert!(graphs_isomorphic(&plus, &plus).unwrap());
        assert!(!graphs_isomorphic(&plus, &minus).unwrap());
        let shuffled = minus.relabel(&[3, 1, 2]).unwrap();
        assert!(graphs_isomorphic(&minus, &shuffled).unwrap());
    }

    #[test]
    fn json_edge_list() {
        let g = graph_of(&GhwArray::from_free_bits(2, 0).unwrap());
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":2,"edges":[[2,1],[2,2]]}"#);
    }
}
