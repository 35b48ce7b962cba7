//! Hand-checked embedded fixtures: small solids used all over the tests and
//! as named inputs (the dodecahedral graph in particular).

use crate::dual;
use crate::embedding::EmbeddedGraph;

/// K4 with its sphere rotation.
pub fn tetrahedron() -> EmbeddedGraph {
    EmbeddedGraph::from_rotations(&[
        vec![1, 2, 3],
        vec![0, 3, 2],
        vec![0, 1, 3],
        vec![0, 2, 1],
    ])
    .expect("valid rotation")
}

/// Double wheel: a rim cycle of length `rim` (>= 3) plus two apexes adjacent
/// to every rim vertex. Vertices: rim `0..rim`, apexes `rim` and `rim + 1`.
/// This is a planar triangulation; `rim = 4` gives the octahedron.
pub fn double_wheel(rim: usize) -> EmbeddedGraph {
    assert!(rim >= 3, "double wheel needs a rim of length at least 3");
    let apex_down = rim; // sees the rim in descending order
    let apex_up = rim + 1;
    let mut rotations = Vec::with_capacity(rim + 2);
    for i in 0..rim {
        let prev = (i + rim - 1) % rim;
        let next = (i + 1) % rim;
        rotations.push(vec![prev, apex_down, next, apex_up]);
    }
    rotations.push((0..rim).rev().collect());
    rotations.push((0..rim).collect());
    EmbeddedGraph::from_rotations(&rotations).expect("valid rotation")
}

pub fn octahedron() -> EmbeddedGraph {
    double_wheel(4)
}

/// The triangular prism, dual of the 5-vertex stacked triangulation.
pub fn triangular_prism() -> EmbeddedGraph {
    // Top triangle 0,1,2 inside bottom triangle 3,4,5; vertical edges i -- i+3.
    EmbeddedGraph::from_rotations(&[
        vec![1, 2, 3],
        vec![2, 0, 4],
        vec![0, 1, 5],
        vec![5, 4, 0],
        vec![3, 5, 1],
        vec![4, 3, 2],
    ])
    .expect("valid rotation")
}

pub fn cube() -> EmbeddedGraph {
    dual::dual(&octahedron()).expect("octahedron is a sphere embedding").dual().clone()
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> EmbeddedGraph {
    EmbeddedGraph::from_rotations(&[
        vec![5, 4, 3, 2, 1],
        vec![0, 2, 6, 10, 5],
        vec![0, 3, 7, 6, 1],
        vec![0, 4, 8, 7, 2],
        vec![0, 5, 9, 8, 3],
        vec![0, 1, 10, 9, 4],
        vec![1, 2, 7, 11, 10],
        vec![2, 3, 8, 11, 6],
        vec![3, 4, 9, 11, 7],
        vec![4, 5, 10, 11, 8],
        vec![5, 1, 6, 11, 9],
        vec![6, 7, 8, 9, 10],
    ])
    .expect("valid rotation")
}

/// The dodecahedral graph, the smallest cyclically 5-edge-connected cubic
/// planar graph.
pub fn dodecahedron() -> EmbeddedGraph {
    dual::dual(&icosahedron()).expect("icosahedron is a sphere embedding").dual().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_sphere(emb: &EmbeddedGraph, n: usize, m: usize, f: usize) {
        assert_eq!(emb.n(), n);
        assert_eq!(emb.edge_count(), m);
        assert_eq!(emb.face_traversal().walks.len(), f);
        assert_eq!(emb.euler_characteristic().unwrap(), 2);
        assert!(emb.is_strong());
    }

    #[test]
    fn fixture_face_counts() {
        check_sphere(&tetrahedron(), 4, 6, 4);
        check_sphere(&octahedron(), 6, 12, 8);
        check_sphere(&triangular_prism(), 6, 9, 5);
        check_sphere(&cube(), 8, 12, 6);
        check_sphere(&icosahedron(), 12, 30, 20);
        check_sphere(&dodecahedron(), 20, 30, 12);
    }

    #[test]
    fn triangulation_fixtures_have_triangle_faces() {
        for emb in [tetrahedron(), octahedron(), icosahedron(), double_wheel(6)] {
            assert!(emb.face_traversal().walks.iter().all(|w| w.len() == 3));
        }
    }

    #[test]
    fn dodecahedron_is_cubic_with_pentagon_faces() {
        let d = dodecahedron();
        assert!(d.graph().is_cubic());
        assert!(d.face_traversal().walks.iter().all(|w| w.len() == 5));
        assert!(d.graph().is_three_connected());
    }
}
