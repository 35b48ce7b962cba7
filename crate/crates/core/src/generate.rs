//! Generation of simple planar triangulations by vertex splitting, and of
//! 3-connected cubic planar graphs by dualizing them.
//!
//! Every simple triangulation other than K4 has a contractible edge, so all
//! triangulations on `k + 1` vertices arise by splitting a vertex of one on
//! `k` vertices: pick a vertex `u` and two rotation positions `i < j`; the
//! two arcs of `u`'s rotation delimited by (and including) the hinge
//! neighbors at `i` and `j` go to the two halves `u'` and `u''`, which are
//! joined by a new edge. Duplicates are removed per level with the canonical
//! embedded code.

use std::collections::BTreeMap;

use crate::dual;
use crate::embedding::EmbeddedGraph;
use crate::error::{Error, Result};
use crate::solids;

/// Splits vertex `u` of an embedded triangulation at rotation positions
/// `i < j`. Reuses `u` for one half; the other half becomes vertex `n`.
fn split_vertex(emb: &EmbeddedGraph, u: usize, i: usize, j: usize) -> Result<EmbeddedGraph> {
    let n = emb.n();
    let rot_u = emb.rotation_at(u);
    let d = rot_u.len();
    debug_assert!(i < j && j < d);
    let new = n;

    // Arc A (kept by u): positions i..=j; arc B (moved to `new`): j..=i.
    let arc_a: Vec<usize> = (i..=j).map(|p| rot_u[p]).collect();
    let mut arc_b: Vec<usize> = Vec::with_capacity(d - (j - i) + 1);
    let mut p = j;
    loop {
        arc_b.push(rot_u[p]);
        if p == i {
            break;
        }
        p = (p + 1) % d;
    }
    let hinge_a = rot_u[i];
    let hinge_b = rot_u[j];

    let mut rotations: Vec<Vec<usize>> = (0..n + 1)
        .map(|v| if v < n { emb.rotation_at(v) } else { Vec::new() })
        .collect();

    // u keeps arc A plus the new vertex; `new` takes arc B plus u.
    rotations[u] = arc_a.clone();
    rotations[u].push(new);
    rotations[new] = arc_b.clone();
    rotations[new].push(u);

    // Interior arc members just rename u; hinges see both halves. At hinge
    // `a = rot_u[i]` the order around is (.., prev, u-side-new, u-side-old, next, ..)
    // so that the new triangles (u, new, a) and (u, new, b) are faces: in the
    // rotation of `a`, `u'` (old u) follows `u''` (new); at `b` the other way.
    for (v, rot) in rotations.iter_mut().enumerate().take(n) {
        if v == u || !rot.contains(&u) {
            continue;
        }
        let pos = rot.iter().position(|&w| w == u).expect("checked");
        if v == hinge_a && v == hinge_b {
            return Err(Error::Invalid("degenerate split: equal hinges".into()));
        }
        if v == hinge_a {
            rot.splice(pos..=pos, [u, new]);
        } else if v == hinge_b {
            rot.splice(pos..=pos, [new, u]);
        } else if arc_b.contains(&v) {
            rot[pos] = new;
        }
        // Interior members of arc A keep u as-is.
    }

    EmbeddedGraph::from_rotations(&rotations)
}

fn is_triangulation(emb: &EmbeddedGraph) -> bool {
    emb.graph().is_connected()
        && emb.euler_characteristic().map_or(false, |chi| chi == 2)
        && emb.face_traversal().walks.iter().all(|w| w.len() == 3)
}

/// All simple planar triangulations on `nv >= 4` vertices, one per
/// isomorphism class, sorted by canonical embedded code.
pub fn triangulations(nv: usize) -> Result<Vec<EmbeddedGraph>> {
    if nv < 4 {
        return Err(Error::Invalid(format!(
            "triangulations need at least 4 vertices, got {nv}"
        )));
    }
    if nv > 16 {
        return Err(Error::Invalid(format!(
            "triangulation generation is capped at 16 vertices, got {nv}"
        )));
    }
    let mut level: BTreeMap<Vec<u8>, EmbeddedGraph> = BTreeMap::new();
    let k4 = solids::tetrahedron();
    level.insert(k4.canonical_embedded_code()?, k4);
    for _ in 4..nv {
        let mut next: BTreeMap<Vec<u8>, EmbeddedGraph> = BTreeMap::new();
        for emb in level.values() {
            for u in 0..emb.n() {
                let d = emb.graph().degree(u);
                for i in 0..d {
                    for j in i + 1..d {
                        let cand = match split_vertex(emb, u, i, j) {
                            Ok(c) => c,
                            Err(_) => continue,
                        };
                        if !is_triangulation(&cand) {
                            continue;
                        }
                        let code = cand.canonical_embedded_code()?;
                        next.entry(code).or_insert(cand);
                    }
                }
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// All 3-connected cubic planar graphs on `n` vertices (n even, >= 4), one
/// per isomorphism class, each carrying its sphere rotation. Obtained by
/// dualizing the triangulations on `n/2 + 2` vertices.
pub fn generate_cubic_planar(n: usize) -> Result<Vec<EmbeddedGraph>> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::Invalid(format!(
            "cubic planar graphs need an even vertex count >= 4, got {n}"
        )));
    }
    let tris = triangulations(n / 2 + 2)?;
    let mut out = Vec::with_capacity(tris.len());
    for tri in &tris {
        let duality = dual::dual(tri)?;
        let cubic = duality.dual().clone();
        if !cubic.graph().is_cubic() || cubic.n() != n {
            return Err(Error::Diagnostic(format!(
                "dual of a triangulation on {} vertices is not cubic on {n}",
                tri.n()
            )));
        }
        out.push(cubic);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon;

    #[test]
    fn triangulation_counts_match_known_values() {
        // 1, 1, 2, 5, 14, 50 triangulations on 4..=9 vertices.
        let expect = [(4, 1), (5, 1), (6, 2), (7, 5), (8, 14), (9, 50)];
        for (nv, count) in expect {
            assert_eq!(triangulations(nv).unwrap().len(), count, "nv = {nv}");
        }
    }

    #[test]
    fn generated_triangulations_are_pairwise_nonisomorphic() {
        let tris = triangulations(7).unwrap();
        for i in 0..tris.len() {
            for j in i + 1..tris.len() {
                assert!(!canon::are_isomorphic(tris[i].graph(), tris[j].graph()));
            }
        }
    }

    #[test]
    fn cubic_counts_match_known_values() {
        for (n, count) in [(4, 1), (6, 1), (8, 2), (10, 5), (12, 14)] {
            let graphs = generate_cubic_planar(n).unwrap();
            assert_eq!(graphs.len(), count, "n = {n}");
            for g in &graphs {
                assert!(g.graph().is_cubic());
                assert!(g.graph().is_three_connected());
                assert_eq!(g.euler_characteristic().unwrap(), 2);
            }
        }
    }

    #[test]
    fn n4_is_the_tetrahedron() {
        let graphs = generate_cubic_planar(4).unwrap();
        assert_eq!(graphs.len(), 1);
        assert!(canon::are_isomorphic(
            graphs[0].graph(),
            crate::solids::tetrahedron().graph()
        ));
    }

    #[test]
    fn odd_or_tiny_counts_are_rejected(){
        assert!(generate_cubic_planar(7).is_err());
        assert!(generate_cubic_planar(2).is_err());
        assert!(triangulations(3).is_err());
    }
}
