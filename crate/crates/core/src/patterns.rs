//! Twisted-subgraph patterns in the dual triangulation.
//!
//! For a 3-connected cubic planar graph, the inequivalent strong embeddings
//! on the projective plane, the torus and the Klein bottle correspond
//! one-to-one to subgraphs of the dual of these shapes:
//!
//! * projective plane: `K4`;
//! * torus: `K_{2,2,2}`, and `K_{2,2m}` (m >= 1) whose size-2 parts are
//!   non-adjacent in the dual (for `K_{2,2}` both parts are size 2 and both
//!   must be non-adjacent);
//! * Klein bottle: `A3`, `A5`, `A6`, and `K_{2,2m-1}` (m >= 2) whose size-2
//!   part is non-adjacent in the dual.
//!
//! `A3` is two vertex-disjoint K4 blocks, `A5` two K4 blocks sharing one
//! vertex, and `A6` two K4 blocks sharing the pair `{c, d}` with the edge
//! `cd` removed; an `A6` subgraph does not require `cd` to be present in the
//! host at all, so it is enumerated directly rather than from K4 pairs.

use itertools::Itertools;

use crate::dual::Duality;
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};

/// Shape of a twisted subgraph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PatternKind {
    K4,
    K222,
    /// `K_{2,2m}`, the torus family; stores `m`.
    K2Even(usize),
    /// `K_{2,2m-1}`, the Klein family; stores `m`.
    K2Odd(usize),
    A3,
    A5,
    A6,
    /// Cycle of the given (even) length, used by the orientable constructions.
    EvenCycle(usize),
    /// Arbitrary even subgraph, used by oracle witnesses.
    EvenSubgraph,
}

impl PatternKind {
    pub fn token(&self) -> String {
        match self {
            PatternKind::K4 => "k4".into(),
            PatternKind::K222 => "k222".into(),
            PatternKind::K2Even(m) => format!("k2_{}", 2 * m),
            PatternKind::K2Odd(m) => format!("k2_{}", 2 * m - 1),
            PatternKind::A3 => "a3".into(),
            PatternKind::A5 => "a5".into(),
            PatternKind::A6 => "a6".into(),
            PatternKind::EvenCycle(len) => format!("even_cycle_{len}"),
            PatternKind::EvenSubgraph => "even_subgraph".into(),
        }
    }

    pub fn parse(tok: &str) -> Result<PatternKind> {
        let bad = || Error::Database(format!("unknown pattern kind `{tok}`"));
        Ok(match tok {
            "k4" => PatternKind::K4,
            "k222" => PatternKind::K222,
            "a3" => PatternKind::A3,
            "a5" => PatternKind::A5,
            "a6" => PatternKind::A6,
            "even_subgraph" => PatternKind::EvenSubgraph,
            _ => {
                if let Some(rest) = tok.strip_prefix("even_cycle_") {
                    PatternKind::EvenCycle(rest.parse().map_err(|_| bad())?)
                } else if let Some(rest) = tok.strip_prefix("k2_") {
                    let part: usize = rest.parse().map_err(|_| bad())?;
                    if part == 0 {
                        return Err(bad());
                    }
                    if part % 2 == 0 {
                        PatternKind::K2Even(part / 2)
                    } else {
                        PatternKind::K2Odd((part + 1) / 2)
                    }
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

/// A subgraph of the dual tagged with its pattern kind. Ordered by
/// (vertex set, edge set) so representatives are easy to pick.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TwistedSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub kind: PatternKind,
}

impl TwistedSubgraph {
    pub fn new(kind: PatternKind, vertices: Vec<usize>, edges: Vec<(usize, usize)>) -> Self {
        let s = Subgraph::new(vertices, edges).expect("pattern construction is well formed");
        TwistedSubgraph { vertices: s.vertices, edges: s.edges, kind }
    }

    pub fn as_subgraph(&self) -> Subgraph {
        Subgraph { vertices: self.vertices.clone(), edges: self.edges.clone() }
    }

    pub fn from_subgraph(kind: PatternKind, s: Subgraph) -> Self {
        TwistedSubgraph { vertices: s.vertices, edges: s.edges, kind }
    }
}

/// Target surfaces of the classification.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassSurface {
    Projective,
    Torus,
    Klein,
}

impl ClassSurface {
    pub const ALL: [ClassSurface; 3] =
        [ClassSurface::Projective, ClassSurface::Torus, ClassSurface::Klein];

    pub fn token(&self) -> &'static str {
        match self {
            ClassSurface::Projective => "projective",
            ClassSurface::Torus => "torus",
            ClassSurface::Klein => "klein",
        }
    }

    pub fn parse(tok: &str) -> Result<ClassSurface> {
        match tok {
            "projective" => Ok(ClassSurface::Projective),
            "torus" => Ok(ClassSurface::Torus),
            "klein" => Ok(ClassSurface::Klein),
            _ => Err(Error::Invalid(format!("unknown surface `{tok}`"))),
        }
    }

    pub fn surface_id(&self) -> crate::embedding::SurfaceId {
        match self {
            ClassSurface::Projective => crate::embedding::SurfaceId::projective_plane(),
            ClassSurface::Torus => crate::embedding::SurfaceId::torus(),
            ClassSurface::Klein => crate::embedding::SurfaceId::klein_bottle(),
        }
    }
}

/// Requested parity of the size-`m` part of `K_{2,m}` enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// All 4-cliques of `gstar`, each with its 6 edges.
pub fn enumerate_k4(gstar: &Graph) -> Vec<TwistedSubgraph> {
    let n = gstar.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !gstar.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !(gstar.has_edge(a, c) && gstar.has_edge(b, c)) {
                    continue;
                }
                for d in c + 1..n {
                    if gstar.has_edge(a, d) && gstar.has_edge(b, d) && gstar.has_edge(c, d) {
                        out.push(TwistedSubgraph::new(
                            PatternKind::K4,
                            vec![a, b, c, d],
                            vec![(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)],
                        ));
                    }
                }
            }
        }
    }
    out
}

fn bipartite_edges(pair: (usize, usize), part: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(2 * part.len());
    for &s in part {
        edges.push((pair.0, s));
        edges.push((pair.1, s));
    }
    edges
}

/// Complete bipartite subgraphs `K_{2,m}` with the given parity of `m` and a
/// non-adjacent size-2 part. For `m = 2` both parts must be non-adjacent and
/// the subgraph arising from either pair choice is emitted once.
pub fn enumerate_k2m(gstar: &Graph, parity: Parity) -> Vec<TwistedSubgraph> {
    let n = gstar.n();
    let mut out = Vec::new();
    let mut seen_k22 = std::collections::BTreeSet::new();
    for a in 0..n {
        for c in a + 1..n {
            if gstar.has_edge(a, c) {
                continue;
            }
            let common = gstar.common_neighbors(a, c).expect("valid pair");
            let min_size = match parity {
                Parity::Even => 2,
                Parity::Odd => 3,
            };
            for size in (min_size..=common.len()).step_by(2) {
                for part in common.iter().copied().combinations(size) {
                    if size == 2 {
                        if gstar.has_edge(part[0], part[1]) {
                            continue;
                        }
                        let mut key = vec![a, c, part[0], part[1]];
                        key.sort_unstable();
                        if !seen_k22.insert((key, {
                            let mut e = bipartite_edges((a, c), &part);
                            e.iter_mut().for_each(|p| *p = (p.0.min(p.1), p.0.max(p.1)));
                            e.sort_unstable();
                            e
                        })) {
                            continue;
                        }
                    }
                    let kind = match parity {
                        Parity::Even => PatternKind::K2Even(size / 2),
                        Parity::Odd => PatternKind::K2Odd((size + 1) / 2),
                    };
                    let mut vertices = vec![a, c];
                    vertices.extend_from_slice(&part);
                    out.push(TwistedSubgraph::new(
                        kind,
                        vertices,
                        bipartite_edges((a, c), &part),
                    ));
                }
            }
        }
    }
    out
}

/// All octahedron-patterned subgraphs: 6 vertices split into three antipodal
/// pairs with all 12 cross edges present. No adjacency condition is put on
/// the antipodal pairs; the pattern's edge set never contains them.
pub fn enumerate_k222(gstar: &Graph) -> Vec<TwistedSubgraph> {
    let n = gstar.n();
    let mut out = Vec::new();
    if n < 6 {
        return out;
    }
    for six in (0..n).combinations(6) {
        // Pairings: fix six[0]'s partner, then pair the remaining four.
        for i in 1..6 {
            let p0 = (six[0], six[i]);
            let rest: Vec<usize> =
                (1..6).filter(|&j| j != i).map(|j| six[j]).collect();
            for k in 1..4 {
                let p1 = (rest[0], rest[k]);
                let others: Vec<usize> =
                    (1..4).filter(|&j| j != k).map(|j| rest[j]).collect();
                let p2 = (others[0], others[1]);
                let pairs = [p0, p1, p2];
                let mut edges = Vec::with_capacity(12);
                let mut ok = true;
                'check: for x in 0..3 {
                    for y in x + 1..3 {
                        for &u in &[pairs[x].0, pairs[x].1] {
                            for &v in &[pairs[y].0, pairs[y].1] {
                                if !gstar.has_edge(u, v) {
                                    ok = false;
                                    break 'check;
                                }
                                edges.push((u, v));
                            }
                        }
                    }
                }
                if ok {
                    out.push(TwistedSubgraph::new(PatternKind::K222, six.clone(), edges));
                }
            }
        }
    }
    out
}

/// `A3`, `A5` and `A6` subgraphs.
///
/// `A3` and `A5` come from unordered pairs of K4 subgraphs sharing 0 or 1
/// vertices; their blocks really are 4-cliques. `A6` is enumerated directly:
/// any pair `{c, d}` (adjacent or not) with two disjoint adjacent pairs among
/// its common neighbors spans one, and the subgraph's edge set never includes
/// `cd`.
pub fn enumerate_a_graphs(gstar: &Graph) -> Vec<TwistedSubgraph> {
    let mut out = Vec::new();
    let k4s = enumerate_k4(gstar);
    for i in 0..k4s.len() {
        for j in i + 1..k4s.len() {
            let vi = &k4s[i].vertices;
            let vj = &k4s[j].vertices;
            let shared: Vec<usize> =
                vi.iter().copied().filter(|v| vj.contains(v)).collect();
            let kind = match shared.len() {
                0 => PatternKind::A3,
                1 => PatternKind::A5,
                _ => continue,
            };
            let mut vertices = vi.clone();
            vertices.extend_from_slice(vj);
            let mut edges = k4s[i].edges.clone();
            edges.extend_from_slice(&k4s[j].edges);
            out.push(TwistedSubgraph::new(kind, vertices, edges));
        }
    }
    let n = gstar.n();
    for c in 0..n {
        for d in c + 1..n {
            let common = gstar.common_neighbors(c, d).expect("valid pair");
            let mut blocks: Vec<(usize, usize)> = Vec::new();
            for x in 0..common.len() {
                for y in x + 1..common.len() {
                    if gstar.has_edge(common[x], common[y]) {
                        blocks.push((common[x], common[y]));
                    }
                }
            }
            for x in 0..blocks.len() {
                for y in x + 1..blocks.len() {
                    let (a, b) = blocks[x];
                    let (e, f) = blocks[y];
                    if a == e || a == f || b == e || b == f {
                        continue;
                    }
                    let edges = vec![
                        (a, b),
                        (e, f),
                        (a, c),
                        (a, d),
                        (b, c),
                        (b, d),
                        (e, c),
                        (e, d),
                        (f, c),
                        (f, d),
                    ];
                    out.push(TwistedSubgraph::new(
                        PatternKind::A6,
                        vec![a, b, c, d, e, f],
                        edges,
                    ));
                }
            }
        }
    }
    out
}

/// All twisted subgraphs characterizing strong embeddings on the given surface.
pub fn enumerate_for_surface(gstar: &Graph, surface: ClassSurface) -> Vec<TwistedSubgraph> {
    match surface {
        ClassSurface::Projective => enumerate_k4(gstar),
        ClassSurface::Torus => {
            let mut out = enumerate_k222(gstar);
            out.extend(enumerate_k2m(gstar, Parity::Even));
            out
        }
        ClassSurface::Klein => {
            let mut out = enumerate_a_graphs(gstar);
            out.extend(enumerate_k2m(gstar, Parity::Odd));
            out
        }
    }
}

/// Visited edges of one facial walk of the all-twisted embedding of `h`
/// inside the dual: per vertex occurrence, the dual edges swept strictly
/// between the inbound and outbound walk edges.
#[derive(Clone, Debug)]
pub struct WalkVisits {
    /// Vertex at each occurrence, in walk order.
    pub vertices: Vec<usize>,
    /// Dual edges visited at each occurrence.
    pub visited: Vec<Vec<(usize, usize)>>,
}

/// Facial walks of the embedding of `h` with the rotation induced by the
/// dual and every edge of `h` twisted, annotated with visited edges.
pub fn visited_edges(duality: &Duality, h: &TwistedSubgraph) -> Result<Vec<WalkVisits>> {
    let dual = duality.dual();
    let mut in_h = vec![false; dual.edge_count()];
    for &(a, b) in &h.edges {
        let e = dual
            .edge_id(a, b)
            .ok_or_else(|| Error::NotASubgraph(format!("({a}, {b}) is not a dual edge")))?;
        in_h[e] = true;
    }
    // States: (dart of h, flipped). All edges twisted, so the side always
    // alternates. The outbound dart is found by sweeping the full dual
    // rotation from the reverse of the inbound dart; the swept non-h edges
    // are the visited edges of the occurrence.
    let h_darts: Vec<usize> = (0..dual.dart_count()).filter(|&d| in_h[d / 2]).collect();
    let mut walks = Vec::new();
    let mut visited_state: std::collections::HashSet<(usize, bool)> =
        std::collections::HashSet::new();
    for &start in &h_darts {
        for start_flip in [false, true] {
            if visited_state.contains(&(start, start_flip)) {
                continue;
            }
            let mut verts = Vec::new();
            let mut visits = Vec::new();
            let mut states = Vec::new();
            let (mut d, mut flipped) = (start, start_flip);
            loop {
                if states.contains(&(d, flipped)) {
                    break;
                }
                states.push((d, flipped));
                // Arrive at v = terminus(d); the new side applies there.
                let s = !flipped; // every h-edge is twisted
                let v = dual.dart_terminus(d);
                let mut cursor = d ^ 1;
                let mut swept = Vec::new();
                loop {
                    cursor = if s { dual.rot_prev(cursor) } else { dual.rot_next(cursor) };
                    if in_h[cursor / 2] {
                        break;
                    }
                    let (x, y) = dual.edges()[cursor / 2];
                    swept.push((x, y));
                }
                verts.push(v);
                visits.push(swept);
                d = cursor;
                flipped = s;
            }
            // Every h-edge is twisted, so the mirror of (d, s) is (d^1, s).
            for &(sd, sf) in &states {
                visited_state.insert((sd, sf));
                visited_state.insert((sd ^ 1, sf));
            }
            walks.push(WalkVisits { vertices: verts, visited: visits });
        }
    }
    Ok(walks)
}

/// Strongness certificate from visited edges: every facial walk of the
/// all-twisted embedding of `h` must be a cycle, and within each walk the
/// visited-edge sets of the occurrences must be pairwise disjoint.
pub fn strong_by_visited_edges(duality: &Duality, h: &TwistedSubgraph) -> Result<bool> {
    let walks = visited_edges(duality, h)?;
    for walk in &walks {
        let mut seen_vertices = std::collections::HashSet::new();
        for &v in &walk.vertices {
            if !seen_vertices.insert(v) {
                return Ok(false);
            }
        }
        let mut seen_edges = std::collections::HashSet::new();
        for swept in &walk.visited {
            for &(x, y) in swept {
                if !seen_edges.insert((x.min(y), x.max(y))) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::dual;
    use crate::graph::Graph;
    use crate::solids;

    fn octahedron_graph() -> Graph {
        solids::octahedron().graph().clone()
    }

    fn stacked_five() -> Graph {
        // K4 on 0..4 plus apex 4 on face (0,1,2).
        Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1), (4, 2)],
        )
        .unwrap()
    }

    #[test]
    fn k4_counts() {
        let k4 = solids::tetrahedron().graph().clone();
        assert_eq!(enumerate_k4(&k4).len(), 1);
        assert_eq!(enumerate_k4(&octahedron_graph()).len(), 0);
        // A stacked triangulation on v vertices has v - 3 K4 subgraphs.
        assert_eq!(enumerate_k4(&stacked_five()).len(), 2);
    }

    #[test]
    fn k2m_counts_on_small_hosts() {
        let k4 = solids::tetrahedron().graph().clone();
        assert!(enumerate_k2m(&k4, Parity::Even).is_empty());
        assert!(enumerate_k2m(&k4, Parity::Odd).is_empty());
        // Octahedron: exactly the three antipodal K_{2,2}s (checked against
        // the brute-force count below), plus three K_{2,4}s.
        let oct = octahedron_graph();
        let even = enumerate_k2m(&oct, Parity::Even);
        let k22 = even.iter().filter(|t| t.kind == PatternKind::K2Even(1)).count();
        let k24 = even.iter().filter(|t| t.kind == PatternKind::K2Even(2)).count();
        assert_eq!((k22, k24), (3, 3));
        // 5-vertex stacked triangulation: one K_{2,3}, nothing even.
        let s5 = stacked_five();
        assert!(enumerate_k2m(&s5, Parity::Even).is_empty());
        let odd = enumerate_k2m(&s5, Parity::Odd);
        assert_eq!(odd.len(), 1);
        assert_eq!(odd[0].kind, PatternKind::K2Odd(2));
        assert_eq!(odd[0].vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn k22_brute_force_cross_check() {
        // Enumerate C4 subgraphs with both diagonals non-adjacent directly.
        let oct = octahedron_graph();
        let mut count = 0;
        let n = oct.n();
        for quad in (0..n).combinations(4) {
            for perm in [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]] {
                let (a, b, c, d) =
                    (quad[perm[0]], quad[perm[1]], quad[perm[2]], quad[perm[3]]);
                // Cycle a-b-c-d with diagonals {a,c}, {b,d}.
                if oct.has_edge(a, b)
                    && oct.has_edge(b, c)
                    && oct.has_edge(c, d)
                    && oct.has_edge(d, a)
                    && !oct.has_edge(a, c)
                    && !oct.has_edge(b, d)
                {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 3);
    }

    #[test]
    fn k222_counts() {
        assert_eq!(enumerate_k222(&octahedron_graph()).len(), 1);
        assert_eq!(enumerate_k222(&solids::tetrahedron().graph().clone()).len(), 0);
        assert_eq!(enumerate_k222(&stacked_five()).len(), 0);
    }

    #[test]
    fn a_graph_shapes() {
        // The 6-vertex stacked triangulation: K4 on 0..4, apex 4 on (0,1,2),
        // apex 5 on (0,1,4). Its three K4 blocks pairwise share >= 2 vertices,
        // so no A3/A5; blocks {0,1,2,3} and {0,1,4,5} share {0,1} giving an A6.
        let mut g = stacked_five();
        let mut g6 = Graph::new(6).unwrap();
        for (u, v) in g.edges() {
            g6.add_edge(u, v).unwrap();
        }
        for v in [0, 1, 4] {
            g6.add_edge(5, v).unwrap();
        }
        g = g6;
        let a = enumerate_a_graphs(&g);
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].kind, PatternKind::A6);
        assert_eq!(a[0].edges.len(), 10);
        assert!(!a[0].edges.contains(&(0, 1)), "shared pair edge must be excluded");
    }

    #[test]
    fn a6_exists_with_nonadjacent_shared_pair() {
        // In the octahedron the antipodal pair {c, d} is non-adjacent but has
        // two disjoint adjacent pairs among its common neighbors, so A6
        // subgraphs exist even though there are no K4 blocks.
        let oct = octahedron_graph();
        let a = enumerate_a_graphs(&oct);
        assert_eq!(a.len(), 6);
        assert!(a.iter().all(|t| t.kind == PatternKind::A6));
        // Each of them induces a strong Klein-bottle embedding of the cube.
        let duality = dual(&solids::cube()).unwrap();
        for t in enumerate_a_graphs(duality.dual().graph()) {
            let emb = duality.apply_twist(&t).unwrap();
            assert!(emb.is_strong());
            assert_eq!(emb.surface_of().unwrap(), ClassSurface::Klein.surface_id());
        }
    }

    #[test]
    fn pattern_kind_tokens_round_trip() {
        for kind in [
            PatternKind::K4,
            PatternKind::K222,
            PatternKind::K2Even(2),
            PatternKind::K2Odd(2),
            PatternKind::A3,
            PatternKind::A5,
            PatternKind::A6,
            PatternKind::EvenCycle(6),
            PatternKind::EvenSubgraph,
        ] {
            assert_eq!(PatternKind::parse(&kind.token()).unwrap(), kind);
        }
        assert!(PatternKind::parse("nope").is_err());
    }

    #[test]
    fn visited_edges_certificate_matches_direct_test_on_patterns() {
        for emb in [
            solids::tetrahedron(),
            solids::triangular_prism(),
            solids::cube(),
        ] {
            let duality = dual(&emb).unwrap();
            let gstar = duality.dual().graph().clone();
            for surface in ClassSurface::ALL {
                for h in enumerate_for_surface(&gstar, surface) {
                    let direct = duality.apply_twist(&h).unwrap().is_strong();
                    let cert = strong_by_visited_edges(&duality, &h).unwrap();
                    assert_eq!(direct, cert, "{surface:?} {h:?}");
                    assert!(direct, "enumerated patterns must be strong");
                }
            }
        }
    }

    #[test]
    fn visited_edges_flags_twisted_triangle_around_cubic_face() {
        // A triangle in the dual around a degree-3 dual vertex twists the
        // star of a primal vertex; the embedding is never strong.
        let duality = dual(&solids::triangular_prism()).unwrap();
        let gstar = duality.dual().graph();
        let mut tri = None;
        'outer: for a in 0..gstar.n() {
            if gstar.degree(a) != 3 {
                continue;
            }
            for b in gstar.neighbors(a) {
                for c in gstar.neighbors(a) {
                    if b < c && gstar.has_edge(b, c) {
                        tri = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        let (a, b, c) = tri.expect("prism dual has a degree-3 vertex in a triangle");
        let h = TwistedSubgraph::new(
            PatternKind::EvenCycle(3),
            vec![a, b, c],
            vec![(a, b), (b, c), (a, c)],
        );
        assert!(!duality.apply_twist(&h).unwrap().is_strong());
        assert!(!strong_by_visited_edges(&duality, &h).unwrap());
    }

    #[test]
    fn k23_from_separating_triangle_is_strong() {
        let prism = solids::triangular_prism();
        let duality = dual(&prism).unwrap();
        let gstar = duality.dual().graph().clone();
        let odd = enumerate_k2m(&gstar, Parity::Odd);
        assert_eq!(odd.len(), 1);
        assert!(strong_by_visited_edges(&duality, &odd[0]).unwrap());
        let emb = duality.apply_twist(&odd[0]).unwrap();
        assert!(emb.is_strong());
        assert_eq!(emb.surface_of().unwrap(), ClassSurface::Klein.surface_id());
    }
}
