//! Canonical labeling, automorphism groups and subgraph orbits.
//!
//! The search refines an ordered partition of the vertices (splitting cells by
//! neighbor counts into every other cell until stable) and then branches by
//! individualizing one vertex of the first smallest non-singleton cell. Every
//! leaf yields a complete labeling; the canonical code is the minimal
//! adjacency matrix over all leaves, and the labelings that attain it encode
//! the full automorphism group. Graphs in scope stay below ~30 vertices, so
//! no further pruning is needed.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation, Subgraph};

/// Canonical code plus the relabeling that maps the input onto it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalForm {
    /// `[n]` followed by the adjacency bit-matrix of the canonically relabeled
    /// graph, packed row-major (MSB first within each byte).
    pub code: Vec<u8>,
    /// Maps each input vertex to its position in the canonical labeling.
    pub relabeling: Permutation,
}

/// The full automorphism group, stored by explicit enumeration.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Every group element, identity included. The set trivially generates
    /// the group; orbit computations just apply each element once.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }
}

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | (1 << v))
}

/// Splits cells by neighbor counts into other cells until the partition is
/// equitable. New subcells are ordered by ascending count, which keeps the
/// refinement invariant under relabeling.
fn equitable_refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        let masks: Vec<u64> = cells.iter().map(|c| cell_mask(c)).collect();
        for i in 0..cells.len() {
            if cells[i].len() <= 1 {
                continue;
            }
            for &mj in &masks {
                let count = |v: usize| (g.neighbors_mask(v) & mj).count_ones();
                let c0 = count(cells[i][0]);
                if cells[i].iter().any(|&v| count(v) != c0) {
                    let mut buckets: std::collections::BTreeMap<u32, Vec<usize>> =
                        std::collections::BTreeMap::new();
                    for &v in &cells[i] {
                        buckets.entry(count(v)).or_default().push(v);
                    }
                    let replacement: Vec<Vec<usize>> = buckets.into_values().collect();
                    cells.splice(i..=i, replacement);
                    continue 'outer;
                }
            }
        }
        return;
    }
}

/// Adjacency matrix rows of the graph read through `order` (position -> vertex).
fn code_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut rows = vec![0u64; n];
    for p in 0..n {
        for q in 0..n {
            if g.has_edge(order[p], order[q]) {
                rows[p] |= 1 << q;
            }
        }
    }
    rows
}

struct Search<'a> {
    g: &'a Graph,
    best_rows: Option<Vec<u64>>,
    best_orders: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn dfs(&mut self, mut cells: Vec<Vec<usize>>) {
        equitable_refine(self.g, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        match target {
            None => {
                let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let rows = code_rows(self.g, &order);
                match &self.best_rows {
                    Some(best) if rows > *best => {}
                    Some(best) if rows == *best => self.best_orders.push(order),
                    _ => {
                        self.best_rows = Some(rows);
                        self.best_orders = vec![order];
                    }
                }
            }
            Some(t) => {
                for k in 0..cells[t].len() {
                    let mut child = cells.clone();
                    let v = child[t][k];
                    let rest: Vec<usize> =
                        child[t].iter().copied().filter(|&w| w != v).collect();
                    child.splice(t..=t, [vec![v], rest]);
                    self.dfs(child);
                }
            }
        }
    }
}

fn pack_code(n: usize, rows: &[u64]) -> Vec<u8> {
    let mut code = Vec::with_capacity(1 + (n * n + 7) / 8);
    code.push(n as u8);
    let mut acc = 0u8;
    let mut bits = 0;
    for row in rows {
        for q in 0..n {
            acc = (acc << 1) | ((row >> q) & 1) as u8;
            bits += 1;
            if bits == 8 {
                code.push(acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        code.push(acc << (8 - bits));
    }
    code
}

fn canonicalize(g: &Graph) -> (CanonicalForm, AutomorphismGroup) {
    let n = g.n();
    if n == 0 {
        return (
            CanonicalForm { code: vec![0], relabeling: Permutation::identity(0) },
            AutomorphismGroup { elements: vec![Permutation::identity(0)] },
        );
    }
    let mut search = Search { g, best_rows: None, best_orders: Vec::new() };
    search.dfs(vec![(0..n).collect()]);
    let rows = search.best_rows.expect("at least one leaf");

    // order[p] = vertex at canonical position p; the relabeling is its inverse.
    let to_position = |order: &[usize]| {
        let mut image = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            image[v] = p;
        }
        Permutation::from_image(image).expect("leaf order is a bijection")
    };

    let reference = to_position(&search.best_orders[0]);
    let ref_inv = reference.inverse();
    let elements: Vec<Permutation> = search
        .best_orders
        .iter()
        .map(|order| ref_inv.compose(&to_position(order)))
        .collect();
    debug_assert!(elements.iter().any(|p| p.is_identity()));

    (
        CanonicalForm { code: pack_code(n, &rows), relabeling: reference },
        AutomorphismGroup { elements },
    )
}

/// Canonical code and relabeling; equal codes iff isomorphic.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonicalize(g).0
}

/// The automorphism group of `g`, fully enumerated.
pub fn automorphism_group(g: &Graph) -> AutomorphismGroup {
    canonicalize(g).1
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.n() == g2.n()
        && g1.edge_count() == g2.edge_count()
        && canonical_form(g1).code == canonical_form(g2).code
}

/// Partitions `subgraphs` into `Aut(g)`-orbits, returned as groups of indices
/// into the input slice. Two subgraphs share a part iff some automorphism maps
/// one (vertex set, edge set) pair onto the other.
pub fn subgraph_orbits(g: &Graph, subgraphs: &[Subgraph]) -> Result<Vec<Vec<usize>>> {
    let aut = automorphism_group(g);
    subgraph_orbits_with(g, &aut, subgraphs)
}

/// Same as [`subgraph_orbits`] with a precomputed automorphism group.
pub fn subgraph_orbits_with(
    g: &Graph,
    aut: &AutomorphismGroup,
    subgraphs: &[Subgraph],
) -> Result<Vec<Vec<usize>>> {
    let mut index: HashMap<&Subgraph, usize> = HashMap::new();
    for (i, s) in subgraphs.iter().enumerate() {
        if !s.contained_in(g) {
            return Err(Error::NotASubgraph(format!(
                "orbit input {i} is not contained in the host graph"
            )));
        }
        index.insert(s, i);
    }
    let mut dsu: Vec<usize> = (0..subgraphs.len()).collect();
    fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    for (i, s) in subgraphs.iter().enumerate() {
        for p in aut.elements() {
            let image = s.apply(p);
            if let Some(&j) = index.get(&image) {
                let (a, b) = (find(&mut dsu, i), find(&mut dsu, j));
                if a != b {
                    dsu[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> =
        std::collections::BTreeMap::new();
    for i in 0..subgraphs.len() {
        let root = find(&mut dsu, i);
        groups.entry(root).or_default().push(i);
    }
    Ok(groups.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn octahedron() -> Graph {
        // Antipodal pairs (0,1), (2,3), (4,5); all cross pairs adjacent.
        let mut g = Graph::new(6).unwrap();
        let pairs = [(0, 1), (2, 3), (4, 5)];
        for u in 0..6 {
            for v in u + 1..6 {
                if !pairs.contains(&(u, v)) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Brute-force automorphism count by filtering all n! permutations.
    fn brute_force_aut_order(g: &Graph) -> usize {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.n())
            .into_iter()
            .filter(|image| {
                let p = Permutation::from_image(image.clone()).unwrap();
                g.permuted(&p) == *g
            })
            .count()
    }

    #[test]
    fn k4_group_order_is_24() {
        assert_eq!(automorphism_group(&k4()).order(), 24);
    }

    #[test]
    fn octahedron_group_order_matches_brute_force() {
        let g = octahedron();
        let order = automorphism_group(&g).order();
        assert_eq!(order, 48);
        assert_eq!(order, brute_force_aut_order(&g));
    }

    #[test]
    fn small_graph_orders_match_brute_force() {
        let samples = vec![
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]).unwrap(),
        ];
        for g in samples {
            assert_eq!(
                automorphism_group(&g).order(),
                brute_force_aut_order(&g),
                "graph {g:?}"
            );
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let g = octahedron();
        let base = canonical_form(&g);
        for _ in 0..20 {
            let mut image: Vec<usize> = (0..g.n()).collect();
            image.shuffle(&mut rng);
            let p = Permutation::from_image(image).unwrap();
            assert_eq!(canonical_form(&g.permuted(&p)).code, base.code);
        }
        // The relabeling really maps g onto the coded graph.
        let relabeled = g.permuted(&base.relabeling);
        assert_eq!(canonical_form(&relabeled).code, base.code);
        assert!(canonical_form(&relabeled).relabeling.is_identity());
    }

    #[test]
    fn distinct_graphs_have_distinct_codes() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_ne!(canonical_form(&k4()).code, canonical_form(&c4).code);
        assert!(!are_isomorphic(&k4(), &c4));
        let k13 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&k4(), &k13));
        assert!(are_isomorphic(&k4(), &k4()));
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        let g = octahedron();
        let aut = automorphism_group(&g);
        let triangles: Vec<Subgraph> = {
            let mut out = Vec::new();
            for a in 0..6 {
                for b in a + 1..6 {
                    for c in b + 1..6 {
                        if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                            out.push(
                                Subgraph::new(vec![a, b, c], vec![(a, b), (b, c), (a, c)])
                                    .unwrap(),
                            );
                        }
                    }
                }
            }
            out
        };
        assert_eq!(triangles.len(), 8);
        let orbits = subgraph_orbits_with(&g, &aut, &triangles).unwrap();
        assert_eq!(orbits.len(), 1);
        for orbit in &orbits {
            assert_eq!(aut.order() % orbit.len(), 0);
        }
    }

    #[test]
    fn k4_triangles_form_one_orbit() {
        let g = k4();
        let tris: Vec<Subgraph> = vec![
            Subgraph::new(vec![0, 1, 2], vec![(0, 1), (1, 2), (0, 2)]).unwrap(),
            Subgraph::new(vec![0, 1, 3], vec![(0, 1), (1, 3), (0, 3)]).unwrap(),
            Subgraph::new(vec![0, 2, 3], vec![(0, 2), (2, 3), (0, 3)]).unwrap(),
            Subgraph::new(vec![1, 2, 3], vec![(1, 2), (2, 3), (1, 3)]).unwrap(),
        ];
        assert_eq!(subgraph_orbits(&g, &tris).unwrap().len(), 1);
        let empty: Vec<Subgraph> = Vec::new();
        assert!(subgraph_orbits(&g, &empty).unwrap().is_empty());
    }
}
