//! Standard small complexes used throughout the tests and the shipped corpus.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{SimplicialComplex, VertexSubset};

fn build(m: usize, facets: Vec<Vec<u32>>) -> SimplicialComplex {
    SimplicialComplex::from_facets(m, facets).expect("fixture is well formed")
}

/// `∂Δ^{m-1}`: all proper subsets of `{1..=m}`, for `m >= 2`.
pub fn boundary_of_simplex(m: usize) -> SimplicialComplex {
    assert!(m >= 2, "the boundary of a point is empty");
    let full = VertexSubset::full(m);
    SimplicialComplex::new(m, (1..=m as u32).map(|v| full.without(v))).expect("fixture is well formed")
}

/// `m` isolated vertices.
pub fn disjoint_points(m: usize) -> SimplicialComplex {
    build(m, (1..=m as u32).map(|v| vec![v]).collect())
}

/// The path `1 - 2 - ... - n`.
pub fn path(n: usize) -> SimplicialComplex {
    if n == 1 {
        return disjoint_points(1);
    }
    build(n, (1..n as u32).map(|v| vec![v, v + 1]).collect())
}

/// The cycle `1 - 2 - ... - n - 1`, for `n >= 3`.
pub fn cycle(n: usize) -> SimplicialComplex {
    assert!(n >= 3);
    let n32 = n as u32;
    build(n, (1..=n32).map(|v| vec![v, v % n32 + 1]).collect())
}

/// The 1-skeleton of the simplex on `m` vertices.
pub fn complete_graph(m: usize) -> SimplicialComplex {
    if m == 1 {
        return disjoint_points(1);
    }
    let mut edges = Vec::new();
    for a in 1..=m as u32 {
        for b in a + 1..=m as u32 {
            edges.push(vec![a, b]);
        }
    }
    build(m, edges)
}

/// The minimal 6-vertex triangulation of the real projective plane.
pub fn rp2_six_vertex() -> SimplicialComplex {
    build(
        6,
        vec![
            vec![1, 2, 3],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![1, 5, 6],
            vec![1, 2, 6],
            vec![2, 3, 5],
            vec![3, 4, 6],
            vec![2, 4, 5],
            vec![3, 5, 6],
            vec![2, 4, 6],
        ],
    )
}

/// The 7-vertex (Möbius–Császár) torus: triangles `{i, i+1, i+3}` and
/// `{i, i+2, i+3}` modulo 7.
pub fn torus_seven_vertex() -> SimplicialComplex {
    let wrap = |x: u32| x % 7 + 1;
    let mut facets = Vec::new();
    for i in 0..7u32 {
        facets.push(vec![wrap(i), wrap(i + 1), wrap(i + 3)]);
        facets.push(vec![wrap(i), wrap(i + 2), wrap(i + 3)]);
    }
    build(7, facets)
}

/// Cone over `base` with apex `m + 1`.
pub fn cone(base: &SimplicialComplex) -> SimplicialComplex {
    let apex = base.vertex_count() as u32 + 1;
    SimplicialComplex::new(base.vertex_count() + 1, base.facets().iter().map(|f| f.with(apex)))
        .expect("cone is well formed")
}

/// A 4-simplex on `{1..5}` with a sixth vertex joined to it only by edges.
///
/// The 1-skeleton is complete, the complex is 4-dimensional and only
/// 1-neighbourly, so none of the sufficient criteria applies.
pub fn four_dim_unknown() -> SimplicialComplex {
    build(
        6,
        vec![
            vec![1, 2, 3, 4, 5],
            vec![1, 6],
            vec![2, 6],
            vec![3, 6],
            vec![4, 6],
            vec![5, 6],
        ],
    )
}

/// The shipped corpus: `(name, complex)` pairs.
pub fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for n in 1..=6usize {
        out.push((format!("boundary-simplex-{n}"), boundary_of_simplex(n + 1)));
    }
    for m in 1..=8usize {
        out.push((format!("points-{m}"), disjoint_points(m)));
    }
    for n in 2..=5usize {
        out.push((format!("path-{n}"), path(n)));
    }
    for n in 3..=6usize {
        out.push((format!("cycle-{n}"), cycle(n)));
    }
    out.push((String::from("complete-graph-4"), complete_graph(4)));
    out.push((String::from("rp2-6"), rp2_six_vertex()));
    out.push((String::from("torus-7"), torus_seven_vertex()));
    out.push((String::from("cone-rp2-6"), cone(&rp2_six_vertex())));
    out.push((String::from("four-dim-unknown"), four_dim_unknown()));
    out
}
