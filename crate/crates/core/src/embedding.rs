//! Cellular embeddings as rotation systems with edge signatures.
//!
//! An embedding is a graph together with a cyclic order of darts at each
//! vertex and a sign per edge. Darts are numbered `2e` and `2e + 1` for edge
//! index `e`; `2e` runs from the smaller endpoint to the larger one and
//! `d ^ 1` is the reverse dart.
//!
//! Face traversal works on (dart, side) states. From state `(d, s)` with
//! `d = (u, v)`, let `s' = s * sign(edge(d))`; the next dart is the rotation
//! successor of `reverse(d)` at `v` when `s' = +1` and the rotation
//! predecessor when `s' = -1`, and the new state is `(next, s')`. This
//! successor is a bijection on the `4|E|` states. Orbits come in mirror pairs
//! (reverse every dart, flip every side); one walk per pair is reported, so
//! the walk lengths add up to `2|E|`.

use std::collections::BTreeSet;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Surface identified by Euler characteristic and orientability.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SurfaceId {
    pub euler_characteristic: i64,
    pub orientable: bool,
}

impl SurfaceId {
    pub fn sphere() -> Self {
        SurfaceId { euler_characteristic: 2, orientable: true }
    }

    pub fn projective_plane() -> Self {
        SurfaceId { euler_characteristic: 1, orientable: false }
    }

    pub fn torus() -> Self {
        SurfaceId { euler_characteristic: 0, orientable: true }
    }

    pub fn klein_bottle() -> Self {
        SurfaceId { euler_characteristic: 0, orientable: false }
    }

    /// Genus for orientable surfaces: `(2 - chi) / 2`.
    pub fn genus(&self) -> Option<i64> {
        self.orientable.then(|| (2 - self.euler_characteristic) / 2)
    }

    /// Crosscap number for non-orientable surfaces: `2 - chi`.
    pub fn crosscap_number(&self) -> Option<i64> {
        (!self.orientable).then(|| 2 - self.euler_characteristic)
    }

    pub fn name(&self) -> String {
        match (self.euler_characteristic, self.orientable) {
            (2, true) => "sphere".into(),
            (1, false) => "projective plane".into(),
            (0, true) => "torus".into(),
            (0, false) => "Klein bottle".into(),
            (_, true) => format!("orientable genus {}", self.genus().unwrap()),
            (_, false) => format!("non-orientable crosscap {}", self.crosscap_number().unwrap()),
        }
    }
}

impl std::fmt::Display for SurfaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// One facial walk: the cyclic dart sequence and the side carried into each
/// step. `vertices[i]` is the origin of `darts[i]`.
#[derive(Clone, Debug)]
pub struct FacialWalk {
    pub darts: Vec<usize>,
    pub sides: Vec<i8>,
    pub vertices: Vec<usize>,
}

impl FacialWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// A walk is simple when it visits no vertex twice, i.e. it is a cycle.
    pub fn is_simple(&self) -> bool {
        let mut seen = 0u64;
        for &v in &self.vertices {
            if seen & (1 << v) != 0 {
                return false;
            }
            seen |= 1 << v;
        }
        true
    }
}

/// Result of a face traversal.
#[derive(Clone, Debug)]
pub struct Faces {
    pub walks: Vec<FacialWalk>,
    /// Walk index owning each traversal state, indexed by `dart * 2 + side`
    /// with side bit 0 for +1 and 1 for -1. Mirror states share the walk.
    pub state_walk: Vec<usize>,
    /// Number of orbits that were their own mirror. Never happens for the
    /// embeddings in scope; counted (once per orbit) instead of dropped so
    /// callers can raise a diagnostic.
    pub self_mirror_orbits: usize,
}

/// A graph with a rotation system and a signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddedGraph {
    graph: Graph,
    edges: Vec<(usize, usize)>,
    edge_ids: HashMap<(usize, usize), usize>,
    rotation: Vec<Vec<usize>>,
    rot_next: Vec<usize>,
    rot_prev: Vec<usize>,
    twisted: Vec<bool>,
}

impl EmbeddedGraph {
    /// Builds an embedding from per-vertex neighbor lists in rotation order,
    /// with an all-positive signature. Validates symmetry and simplicity.
    pub fn from_rotations(rotations: &[Vec<usize>]) -> Result<Self> {
        let n = rotations.len();
        let mut graph = Graph::new(n)?;
        for (v, nbrs) in rotations.iter().enumerate() {
            let mut seen = 0u64;
            for &w in nbrs {
                if w >= n {
                    return Err(Error::InvalidVertex(w));
                }
                if w == v {
                    return Err(Error::LoopEdge(v));
                }
                if seen & (1 << w) != 0 {
                    return Err(Error::MalformedRotation(format!(
                        "vertex {v} lists neighbor {w} twice"
                    )));
                }
                seen |= 1 << w;
                graph.add_edge(v, w)?;
            }
        }
        for (v, nbrs) in rotations.iter().enumerate() {
            if nbrs.len() != graph.degree(v) {
                return Err(Error::MalformedRotation(format!(
                    "vertex {v} has degree {} but lists {} neighbors",
                    graph.degree(v),
                    nbrs.len()
                )));
            }
        }

        let edges = graph.edges();
        let mut edge_ids = HashMap::new();
        for (e, &(u, v)) in edges.iter().enumerate() {
            edge_ids.insert((u, v), e);
        }
        let dart_count = 2 * edges.len();
        let mut rot_next = vec![usize::MAX; dart_count];
        let mut rot_prev = vec![usize::MAX; dart_count];
        let mut rotation = Vec::with_capacity(n);
        for (v, nbrs) in rotations.iter().enumerate() {
            let darts: Vec<usize> = nbrs
                .iter()
                .map(|&w| {
                    let e = edge_ids[&(v.min(w), v.max(w))];
                    2 * e + usize::from(v > w)
                })
                .collect();
            let deg = darts.len();
            for i in 0..deg {
                rot_next[darts[i]] = darts[(i + 1) % deg];
                rot_prev[darts[(i + 1) % deg]] = darts[i];
            }
            rotation.push(darts);
        }

        Ok(EmbeddedGraph {
            twisted: vec![false; edges.len()],
            graph,
            edges,
            edge_ids,
            rotation,
            rot_next,
            rot_prev,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_ids.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn dart_origin(&self, d: usize) -> usize {
        let (u, v) = self.edges[d / 2];
        if d % 2 == 0 {
            u
        } else {
            v
        }
    }

    pub fn dart_terminus(&self, d: usize) -> usize {
        self.dart_origin(d ^ 1)
    }

    pub fn dart_edge(&self, d: usize) -> usize {
        d / 2
    }

    pub fn dart_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_id(u, v).map(|e| 2 * e + usize::from(u > v))
    }

    /// Neighbor list of `v` in rotation order.
    pub fn rotation_at(&self, v: usize) -> Vec<usize> {
        self.rotation[v].iter().map(|&d| self.dart_terminus(d)).collect()
    }

    pub fn rotation_darts(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rot_next(&self, d: usize) -> usize {
        self.rot_next[d]
    }

    pub fn rot_prev(&self, d: usize) -> usize {
        self.rot_prev[d]
    }

    pub fn is_twisted(&self, edge: usize) -> bool {
        self.twisted[edge]
    }

    /// Edge-indexed signature as a bitmask (bit `e` set iff edge `e` maps to -1).
    pub fn twisted_mask(&self) -> u64 {
        self.twisted
            .iter()
            .enumerate()
            .fold(0u64, |m, (e, &t)| if t { m | (1 << e) } else { m })
    }

    pub fn twisted_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.twisted)
            .filter_map(|(&e, &t)| t.then_some(e))
            .collect()
    }

    pub fn is_all_positive(&self) -> bool {
        self.twisted.iter().all(|&t| !t)
    }

    /// Same embedding with the signature replaced by the given twisted edges.
    pub fn with_twisted_edges(&self, twisted: &[(usize, usize)]) -> Result<Self> {
        let mut out = self.clone();
        out.twisted = vec![false; self.edges.len()];
        for &(u, v) in twisted {
            let e = self
                .edge_id(u, v)
                .ok_or_else(|| Error::Invalid(format!("({u}, {v}) is not an edge")))?;
            out.twisted[e] = true;
        }
        Ok(out)
    }

    /// Signature from an edge-index bitmask; bits beyond the edge count must be zero.
    pub fn with_twisted_mask(&self, mask: u64) -> Result<Self> {
        if self.edges.len() < 64 && mask >> self.edges.len() != 0 {
            return Err(Error::Invalid("twist mask addresses nonexistent edges".into()));
        }
        let mut out = self.clone();
        for e in 0..self.edges.len() {
            out.twisted[e] = mask & (1 << e) != 0;
        }
        Ok(out)
    }

    /// The embedding with every rotation reversed (global reflection).
    pub fn mirror(&self) -> Self {
        let rotations: Vec<Vec<usize>> = (0..self.n())
            .map(|v| {
                let mut r = self.rotation_at(v);
                r.reverse();
                r
            })
            .collect();
        let mut out = Self::from_rotations(&rotations).expect("mirror of a valid embedding");
        out.twisted = self.twisted.clone();
        out
    }

    /// Successor of a traversal state. Side `s` is encoded as a bool (`true`
    /// for -1); returns (next dart, next side).
    fn successor(&self, d: usize, flipped: bool) -> (usize, bool) {
        let flipped = flipped ^ self.twisted[d / 2];
        let r = d ^ 1;
        let next = if flipped { self.rot_prev[r] } else { self.rot_next[r] };
        (next, flipped)
    }

    /// All facial walks, one per mirror pair of traversal orbits. Each walk
    /// starts at the numerically smallest state of its pair.
    pub fn face_traversal(&self) -> Faces {
        let dart_count = self.dart_count();
        let state_count = 2 * dart_count;
        let mut state_walk = vec![usize::MAX; state_count];
        let mut walks: Vec<FacialWalk> = Vec::new();
        let mut self_mirror_orbits = 0;
        // State encoding: dart * 2 + side, side 0 = +1, 1 = -1.
        for start in 0..state_count {
            if state_walk[start] != usize::MAX {
                continue;
            }
            let walk_id = walks.len();
            let mut darts = Vec::new();
            let mut sides = Vec::new();
            let mut vertices = Vec::new();
            // Trace the whole orbit first (the successor is a bijection, so
            // it closes at the start state), then mark it and its mirror.
            let (mut d, mut flipped) = (start / 2, start % 2 == 1);
            loop {
                darts.push(d);
                sides.push(if flipped { -1i8 } else { 1 });
                vertices.push(self.dart_origin(d));
                let (nd, nf) = self.successor(d, flipped);
                d = nd;
                flipped = nf;
                if d * 2 + usize::from(flipped) == start {
                    break;
                }
            }
            // Mirror involution: (d, s) -> (reverse d, -s * sign(edge d)),
            // so a twisted edge keeps its side under mirroring.
            let mut self_mirror = false;
            for (&d, &s) in darts.iter().zip(&sides) {
                let state = d * 2 + usize::from(s == -1);
                let mirror_flipped = if self.twisted[d / 2] { s == -1 } else { s == 1 };
                let mirror = (d ^ 1) * 2 + usize::from(mirror_flipped);
                if state_walk[mirror] == walk_id {
                    self_mirror = true;
                }
                state_walk[state] = walk_id;
                state_walk[mirror] = walk_id;
            }
            if self_mirror {
                self_mirror_orbits += 1;
            }
            walks.push(FacialWalk { darts, sides, vertices });
        }
        Faces { walks, state_walk, self_mirror_orbits }
    }

    /// `|V| - |E| + F`.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.edges.is_empty() {
            // A single vertex has one face.
            return Ok(self.n() as i64 + 1);
        }
        let faces = self.face_traversal();
        Ok(self.n() as i64 - self.edges.len() as i64 + faces.walks.len() as i64)
    }

    /// True iff the signature is switching-equivalent to all-positive, i.e.
    /// some vertex sign assignment satisfies `sigma(u) * sigma(v) = sign(uv)`
    /// on every edge. Decided by spanning-tree propagation per component.
    pub fn is_orientable(&self) -> bool {
        let n = self.n();
        let mut sign = vec![0i8; n];
        for root in 0..n {
            if sign[root] != 0 {
                continue;
            }
            sign[root] = 1;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for v in self.graph.neighbors(u) {
                    let e = self.edge_id(u, v).expect("adjacency implies edge");
                    let expected = if self.twisted[e] { -sign[u] } else { sign[u] };
                    if sign[v] == 0 {
                        sign[v] = expected;
                        stack.push(v);
                    } else if sign[v] != expected {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn surface_of(&self) -> Result<SurfaceId> {
        Ok(SurfaceId {
            euler_characteristic: self.euler_characteristic()?,
            orientable: self.is_orientable(),
        })
    }

    /// True iff no facial walk repeats a vertex.
    pub fn is_strong(&self) -> bool {
        self.face_traversal().walks.iter().all(|w| w.is_simple())
    }

    /// The set of facial cycles, each normalized up to rotation and reversal:
    /// rotate the smallest vertex to the front, then keep the direction with
    /// the smaller second vertex.
    pub fn facial_cycle_set(&self) -> Result<BTreeSet<Vec<usize>>> {
        let faces = self.face_traversal();
        let mut out = BTreeSet::new();
        for walk in &faces.walks {
            if !walk.is_simple() {
                return Err(Error::NotStrong);
            }
            out.insert(normalize_cycle(&walk.vertices));
        }
        Ok(out)
    }

    /// Canonical byte code of the embedded graph (all-positive signature),
    /// invariant under relabelings that map rotations to rotations, including
    /// the global reflection.
    pub fn canonical_embedded_code(&self) -> Result<Vec<u8>> {
        if !self.is_all_positive() {
            return Err(Error::TwistedInput);
        }
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.n();
        if self.edges.is_empty() {
            return Ok(vec![n as u8]);
        }
        let mut best: Option<Vec<u8>> = None;
        for start in 0..self.dart_count() {
            for reversed in [false, true] {
                let code = self.rooted_code(start, reversed);
                if best.as_ref().map_or(true, |b| code < *b) {
                    best = Some(code);
                }
            }
        }
        Ok(best.unwrap())
    }

    /// Planar-code-like byte string from a rooted oriented traversal: vertices
    /// are labeled in discovery order; each vertex emits its neighbor labels
    /// (1-based) in rotation order starting from the dart pointing back to the
    /// vertex it was discovered from, terminated by 0.
    fn rooted_code(&self, root_dart: usize, reversed: bool) -> Vec<u8> {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut entry = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let root = self.dart_origin(root_dart);
        label[root] = 0;
        entry[root] = root_dart;
        order.push(root);
        let mut code = Vec::with_capacity(1 + self.dart_count() + n);
        code.push(n as u8);
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            let mut d = entry[v];
            for _ in 0..self.rotation[v].len() {
                let w = self.dart_terminus(d);
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    entry[w] = d ^ 1;
                    order.push(w);
                }
                code.push(label[w] as u8 + 1);
                d = if reversed { self.rot_prev[d] } else { self.rot_next[d] };
            }
            code.push(0);
        }
        code
    }
}

/// Normal form of a cycle given as a vertex sequence.
pub fn normalize_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len <= 1 {
        return cycle.to_vec();
    }
    let min_pos = (0..len).min_by_key(|&i| cycle[i]).expect("nonempty");
    let forward: Vec<usize> = (0..len).map(|i| cycle[(min_pos + i) % len]).collect();
    let backward: Vec<usize> = (0..len).map(|i| cycle[(min_pos + len - i) % len]).collect();
    if forward[1.min(len - 1)] <= backward[1.min(len - 1)] {
        forward
    } else {
        backward
    }
}
