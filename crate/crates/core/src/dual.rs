//! Dual graphs of sphere embeddings and signature twisting.

use std::collections::HashMap;

use crate::embedding::{EmbeddedGraph, FacialWalk};
use crate::error::{Error, Result};
use crate::graph::Subgraph;
use crate::patterns::TwistedSubgraph;

/// A sphere embedding together with its dual and the edge bijection.
///
/// Dual vertex `f` is the face discovered `f`-th by the face traversal of the
/// primal embedding; the dual rotation at `f` is the cyclic order of the
/// primal edges along that facial walk.
#[derive(Clone, Debug)]
pub struct Duality {
    primal: EmbeddedGraph,
    dual: EmbeddedGraph,
    faces: Vec<FacialWalk>,
    /// Face pair bounding each primal edge, `(face_of_dart(2e), face_of_dart(2e+1))`.
    edge_faces: Vec<(usize, usize)>,
    primal_to_dual: Vec<usize>,
    dual_to_primal: Vec<usize>,
}

impl Duality {
    pub fn primal(&self) -> &EmbeddedGraph {
        &self.primal
    }

    pub fn dual(&self) -> &EmbeddedGraph {
        &self.dual
    }

    pub fn faces(&self) -> &[FacialWalk] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn primal_to_dual_edge(&self, e: usize) -> usize {
        self.primal_to_dual[e]
    }

    pub fn dual_to_primal_edge(&self, e: usize) -> usize {
        self.dual_to_primal[e]
    }

    /// The two faces separated by primal edge `e`.
    pub fn faces_of_primal_edge(&self, e: usize) -> (usize, usize) {
        self.edge_faces[e]
    }

    /// Primal embedding re-signed so that an edge is twisted iff its dual
    /// edge lies in `h`.
    pub fn apply_twist(&self, h: &TwistedSubgraph) -> Result<EmbeddedGraph> {
        let mut twisted = Vec::with_capacity(h.edges.len());
        for &(a, b) in &h.edges {
            let de = self
                .dual
                .edge_id(a, b)
                .ok_or_else(|| Error::Invalid(format!("({a}, {b}) is not a dual edge")))?;
            twisted.push(self.primal.edges()[self.dual_to_primal[de]]);
        }
        self.primal.with_twisted_edges(&twisted)
    }

    /// Inverse direction of the edge bijection, as a subgraph of the dual:
    /// the twisted edges of `emb` mapped onto dual edges.
    pub fn dual_subgraph_of_twist(&self, emb: &EmbeddedGraph) -> Result<Subgraph> {
        let mut edges = Vec::new();
        let mut vertices = Vec::new();
        for (e, &(u, v)) in self.primal.edges().iter().enumerate() {
            let pe = emb
                .edge_id(u, v)
                .ok_or_else(|| Error::Invalid("embedding does not match the primal graph".into()))?;
            if emb.is_twisted(pe) {
                let (a, b) = self.dual.edges()[self.primal_to_dual[e]];
                edges.push((a, b));
                vertices.push(a);
                vertices.push(b);
            }
        }
        Subgraph::new(vertices, edges)
    }
}

/// Builds the dual of a sphere embedding with all-positive signature.
///
/// Fails unless the input is connected, has Euler characteristic 2, all
/// facial walks are cycles, and the dual comes out simple (true for
/// 3-connected inputs).
pub fn dual(emb: &EmbeddedGraph) -> Result<Duality> {
    if !emb.is_all_positive() {
        return Err(Error::TwistedInput);
    }
    if !emb.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let faces = emb.face_traversal();
    if faces.self_mirror_orbits > 0 {
        return Err(Error::Diagnostic("self-mirror facial orbit on a sphere input".into()));
    }
    let chi = emb.n() as i64 - emb.edge_count() as i64 + faces.walks.len() as i64;
    if chi != 2 {
        return Err(Error::NotSphere(chi));
    }
    for walk in &faces.walks {
        if !walk.is_simple() {
            return Err(Error::NotStrong);
        }
    }

    // The two faces along edge e are the walk classes of the states
    // (dart 2e, +1) and (dart 2e, -1); mirror states share a class.
    let mut edge_faces = Vec::with_capacity(emb.edge_count());
    for e in 0..emb.edge_count() {
        let f1 = faces.state_walk[(2 * e) * 2];
        let f2 = faces.state_walk[(2 * e) * 2 + 1];
        if f1 == f2 {
            return Err(Error::NonSimpleDual(format!(
                "primal edge {e} lies twice on face {f1} (dual loop)"
            )));
        }
        edge_faces.push((f1, f2));
    }
    let mut seen_pairs = HashMap::new();
    for (e, &(f1, f2)) in edge_faces.iter().enumerate() {
        if let Some(prev) = seen_pairs.insert((f1.min(f2), f1.max(f2)), e) {
            return Err(Error::NonSimpleDual(format!(
                "faces {f1} and {f2} share primal edges {prev} and {e}"
            )));
        }
    }

    // With an all-positive signature the side is constant along an orbit, but
    // the reported representative of a mirror pair may be the -1 traversal.
    // Re-orient every walk to its +1 traversal (reverse the dart order and
    // each dart) so the dual rotations share one global orientation.
    let oriented: Vec<Vec<usize>> = faces
        .walks
        .iter()
        .map(|walk| {
            if walk.sides.iter().any(|&s| s != walk.sides[0]) {
                return Err(Error::Diagnostic(
                    "mixed sides in a facial orbit of an all-positive embedding".into(),
                ));
            }
            Ok(if walk.sides[0] == 1 {
                walk.darts.clone()
            } else {
                walk.darts.iter().rev().map(|&d| d ^ 1).collect()
            })
        })
        .collect::<Result<_>>()?;
    // Dual rotation at face f: the face on the other side of each edge along
    // the +1 traversal. The other side of state (d, +1) is the class of (d, -1).
    let dual_rotations: Vec<Vec<usize>> = oriented
        .iter()
        .map(|darts| darts.iter().map(|&d| faces.state_walk[d * 2 + 1]).collect())
        .collect();
    let dual_emb = EmbeddedGraph::from_rotations(&dual_rotations)?;

    let mut primal_to_dual = vec![usize::MAX; emb.edge_count()];
    let mut dual_to_primal = vec![usize::MAX; emb.edge_count()];
    for (e, &(f1, f2)) in edge_faces.iter().enumerate() {
        let de = dual_emb
            .edge_id(f1, f2)
            .ok_or_else(|| Error::Diagnostic("dual edge missing after construction".into()))?;
        if dual_to_primal[de] != usize::MAX {
            return Err(Error::NonSimpleDual("duplicate dual edge".into()));
        }
        primal_to_dual[e] = de;
        dual_to_primal[de] = e;
    }

    Ok(Duality {
        primal: emb.clone(),
        dual: dual_emb,
        faces: faces.walks,
        edge_faces,
        primal_to_dual,
        dual_to_primal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon;
    use crate::patterns::PatternKind;
    use crate::solids;

    #[test]
    fn tetrahedron_is_self_dual() {
        let d = dual(&solids::tetrahedron()).unwrap();
        assert_eq!(d.dual().n(), 4);
        assert!(canon::are_isomorphic(d.primal().graph(), d.dual().graph()));
        // The edge bijection is a bijection.
        let mut seen = vec![false; 6];
        for e in 0..6 {
            let de = d.primal_to_dual_edge(e);
            assert!(!seen[de]);
            seen[de] = true;
            assert_eq!(d.dual_to_primal_edge(de), e);
        }
    }

    #[test]
    fn cube_dualizes_to_the_octahedron() {
        let d = dual(&solids::cube()).unwrap();
        assert!(canon::are_isomorphic(d.dual().graph(), solids::octahedron().graph()));
    }

    #[test]
    fn dual_of_dual_is_the_original_embedding() {
        for emb in [solids::tetrahedron(), solids::cube(), solids::dodecahedron()] {
            let d = dual(&emb).unwrap();
            let dd = dual(d.dual()).unwrap();
            assert_eq!(
                dd.dual().canonical_embedded_code().unwrap(),
                emb.canonical_embedded_code().unwrap()
            );
        }
    }

    #[test]
    fn dual_of_cubic_graph_is_a_triangulation() {
        for emb in [solids::tetrahedron(), solids::triangular_prism(), solids::cube()] {
            let d = dual(&emb).unwrap();
            let walks = d.dual().face_traversal().walks;
            assert!(walks.iter().all(|w| w.len() == 3));
        }
    }

    #[test]
    fn empty_twist_is_the_identity() {
        let d = dual(&solids::tetrahedron()).unwrap();
        let empty = TwistedSubgraph {
            kind: PatternKind::EvenSubgraph,
            vertices: vec![],
            edges: vec![],
        };
        let twisted = d.apply_twist(&empty).unwrap();
        assert!(twisted.is_all_positive());
        assert_eq!(twisted.surface_of().unwrap().name(), "sphere");
    }

    #[test]
    fn dual_rejects_nonsphere_input() {
        let emb = solids::tetrahedron();
        let all: Vec<(usize, usize)> = emb.edges().to_vec();
        let projective = emb.with_twisted_edges(&all).unwrap();
        assert!(dual(&projective).is_err());
    }
}
