//! Abstract simple undirected graphs on densely numbered vertices.
//!
//! Vertices are `0..n`; adjacency is kept as one 64-bit mask per vertex, which
//! caps graphs at [`MAX_VERTICES`] vertices. Everything in scope here (cubic
//! planar graphs up to a couple dozen vertices and their dual triangulations)
//! fits comfortably.

use crate::error::{Error, Result};

/// Hard capacity limit imposed by the bitmask adjacency representation.
pub const MAX_VERTICES: usize = 64;

/// A labeled simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::InvalidVertex(v));
        }
        Ok(())
    }

    /// Adds the edge `{u, v}`. Adding an existing edge is a no-op (edge sets).
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n() && v < self.n() {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask of all vertices reachable from those set in `start`, moving only
    /// through vertices set in `allowed`.
    pub fn reachable_mask(&self, start: u64, allowed: u64) -> u64 {
        let mut seen = start & allowed;
        loop {
            let mut grown = seen;
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= self.adj[v] & allowed;
            }
            if grown == seen {
                return seen;
            }
            seen = grown;
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let all = full_mask(self.n());
        self.reachable_mask(1, all) == all
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut remaining = full_mask(self.n());
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.reachable_mask(1 << v, remaining);
            out.push(mask_to_vec(comp));
            remaining &= !comp;
        }
        out
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Brute-force 3-connectivity test: no pair of vertices disconnects the
    /// graph. Adequate for the vertex counts in scope.
    pub fn is_three_connected(&self) -> bool {
        let n = self.n();
        if n < 4 || !self.is_connected() {
            return false;
        }
        let all = full_mask(n);
        for u in 0..n {
            for v in u + 1..n {
                let allowed = all & !(1 << u) & !(1 << v);
                let start = 1 << allowed.trailing_zeros();
                if self.reachable_mask(start, allowed) != allowed {
                    return false;
                }
            }
        }
        true
    }

    /// `N(u) ∩ N(v)` as a sorted vertex list.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Invalid(format!("common_neighbors needs u != v, got {u}")));
        }
        Ok(mask_to_vec(self.adj[u] & self.adj[v]))
    }

    /// The graph relabeled by `p`: vertex `v` becomes `p(v)`.
    pub fn permuted(&self, p: &Permutation) -> Graph {
        let mut g = Graph { adj: vec![0; self.n()] };
        for (u, v) in self.edges() {
            let _ = g.add_edge(p.apply(u), p.apply(v));
        }
        g
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A bijection on `0..n`, stored as the image sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::Invalid(format!("not a bijection on 0..{n}: {image:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let image = other.image.iter().map(|&v| self.image[v]).collect();
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// A subgraph given by an explicit vertex set and edge set.
///
/// Identity is the pair (vertex set, edge set): two subgraphs on the same
/// vertices with different edge sets are distinct.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Subgraph {
    /// Normalizes (sorts, orients pairs, dedups) and checks that every edge
    /// endpoint is listed among the vertices.
    pub fn new(vertices: Vec<usize>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if !vertices.contains(&u) || !vertices.contains(&v) {
                return Err(Error::NotASubgraph(format!(
                    "edge ({u}, {v}) has an endpoint outside the vertex set"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Subgraph { vertices, edges: norm })
    }

    pub fn contained_in(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.n())
            && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }

    pub fn apply(&self, p: &Permutation) -> Subgraph {
        let vertices = self.vertices.iter().map(|&v| p.apply(v)).collect();
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (p.apply(u), p.apply(v)))
            .collect();
        Subgraph::new(vertices, edges).expect("image of a valid subgraph is valid")
    }

    pub fn degree_within(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

/// True iff every vertex of `h` has even degree within `h`.
pub fn is_even_subgraph(g: &Graph, h: &Subgraph) -> Result<bool> {
    if !h.contained_in(g) {
        return Err(Error::NotASubgraph(
            "even-subgraph test on a subgraph outside the host".into(),
        ));
    }
    Ok(h.vertices.iter().all(|&v| h.degree_within(v) % 2 == 0))
}
