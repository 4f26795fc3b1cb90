//! Vertex, edge and triangle classes of a triangulation.

use super::{face_edges, Triangulation, EDGE_VERTICES};

/// Union-find with a parity bit relative to the parent, used for edge
/// orientation tracking. Plain vertex/triangle classes use parity 0.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
    conflict: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind { parent: (0..n).collect(), parity: vec![false; n], conflict: vec![false; n] }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, par) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    fn union(&mut self, a: usize, b: usize, reversed: bool) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb != reversed {
                self.conflict[ra] = true;
            }
            return;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        self.parity[hi] = pa ^ pb ^ reversed;
        self.conflict[lo] |= self.conflict[hi];
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClass {
    /// `(tet, local vertex)` pairs in this class.
    pub corners: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClass {
    /// `(tet, local edge)` pairs in this class.
    pub embeddings: Vec<(usize, usize)>,
    /// Vertex classes at the tail and head of the class orientation, which is
    /// the increasing local orientation of the first embedding.
    pub ends: [usize; 2],
    /// False when the edge is identified with itself in reverse.
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleClass {
    /// `(tet, face)` pairs: two for an internal triangle, one on the boundary.
    pub embeddings: Vec<(usize, usize)>,
    /// Edge classes of the first embedding's local edges, in the order of
    /// [`face_edges`]. Entries repeat when edges of the triangle are identified.
    pub edges: [usize; 3],
}

#[derive(Clone, Debug)]
pub struct Skeleton {
    n: usize,
    vertex_of: Vec<[usize; 4]>,
    edge_of: Vec<[usize; 6]>,
    /// True when the local edge's increasing orientation is opposite to its class.
    edge_reversed: Vec<[bool; 6]>,
    triangle_of: Vec<[usize; 4]>,
    pub vertices: Vec<VertexClass>,
    pub edges: Vec<EdgeClass>,
    pub triangles: Vec<TriangleClass>,
}

impl Skeleton {
    pub fn num_tets(&self) -> usize {
        self.n
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn vertex_of(&self, tet: usize, v: usize) -> usize {
        self.vertex_of[tet][v]
    }

    /// Edge classes of the six local edges 01, 02, 03, 12, 13, 23.
    pub fn tet_edges(&self, tet: usize) -> [usize; 6] {
        self.edge_of[tet]
    }

    pub fn edge_reversed(&self, tet: usize, e: usize) -> bool {
        self.edge_reversed[tet][e]
    }

    pub fn triangle_of(&self, tet: usize, f: usize) -> usize {
        self.triangle_of[tet][f]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_triangles() as i64 - self.n as i64
    }
}

pub fn build_skeleton(tri: &Triangulation) -> Skeleton {
    let n = tri.size();
    let mut vuf = ParityUnionFind::new(4 * n);
    let mut euf = ParityUnionFind::new(6 * n);
    let mut fuf = ParityUnionFind::new(4 * n);

    for t in 0..n {
        for f in 0..4 {
            let Some(g) = tri.gluing(t, f) else { continue };
            fuf.union(4 * t + f, 4 * g.tet + g.perm.apply(f), false);
            for k in (0..4).filter(|&k| k != f) {
                vuf.union(4 * t + k, 4 * g.tet + g.perm.apply(k), false);
            }
            for e in face_edges(f) {
                let (image, reversed) = g.perm.apply_edge(e);
                euf.union(6 * t + e, 6 * g.tet + image, reversed);
            }
        }
    }

    // Class ids are assigned in order of first appearance.
    fn relabel(roots: impl Iterator<Item = usize>, len: usize) -> (Vec<usize>, usize) {
        let mut id = vec![usize::MAX; len];
        let mut out = Vec::new();
        let mut count = 0;
        for r in roots {
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            out.push(id[r]);
        }
        (out, count)
    }

    let vroots: Vec<usize> = (0..4 * n).map(|x| vuf.find(x).0).collect();
    let (vids, nv) = relabel(vroots.into_iter(), 4 * n);
    let froots: Vec<usize> = (0..4 * n).map(|x| fuf.find(x).0).collect();
    let (fids, nf) = relabel(froots.into_iter(), 4 * n);
    let efind: Vec<(usize, bool)> = (0..6 * n).map(|x| euf.find(x)).collect();
    let (eids, ne) = relabel(efind.iter().map(|&(r, _)| r), 6 * n);

    let mut vertex_of = vec![[0; 4]; n];
    let mut vertices = vec![VertexClass { corners: Vec::new() }; nv];
    for t in 0..n {
        for k in 0..4 {
            let id = vids[4 * t + k];
            vertex_of[t][k] = id;
            vertices[id].corners.push((t, k));
        }
    }

    let mut edge_of = vec![[0; 6]; n];
    let mut edge_reversed = vec![[false; 6]; n];
    let mut edges: Vec<Option<EdgeClass>> = vec![None; ne];
    let mut first_parity = vec![false; ne];
    for t in 0..n {
        for e in 0..6 {
            let (root, parity) = efind[6 * t + e];
            let id = eids[6 * t + e];
            edge_of[t][e] = id;
            let class = edges[id].get_or_insert_with(|| {
                first_parity[id] = parity;
                let [u, v] = EDGE_VERTICES[e];
                EdgeClass {
                    embeddings: Vec::new(),
                    ends: [vertex_of[t][u], vertex_of[t][v]],
                    valid: !euf.conflict[root],
                }
            });
            class.embeddings.push((t, e));
            edge_reversed[t][e] = parity ^ first_parity[id];
        }
    }
    let edges = edges.into_iter().map(|e| e.expect("every edge class has an embedding")).collect();

    let mut triangle_of = vec![[0; 4]; n];
    let mut triangles: Vec<Option<TriangleClass>> = vec![None; nf];
    for t in 0..n {
        for f in 0..4 {
            let id = fids[4 * t + f];
            triangle_of[t][f] = id;
            triangles[id]
                .get_or_insert_with(|| TriangleClass {
                    embeddings: Vec::new(),
                    edges: face_edges(f).map(|e| edge_of[t][e]),
                })
                .embeddings
                .push((t, f));
        }
    }
    let triangles = triangles.into_iter().map(|f| f.expect("every triangle class has an embedding")).collect();

    Skeleton { n, vertex_of, edge_of, edge_reversed, triangle_of, vertices, edges, triangles }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub closed: bool,
    pub valid_edges: bool,
    pub vertex_links_are_spheres: bool,
    pub messages: Vec<String>,
}

impl ValidityReport {
    pub fn is_closed_manifold(&self) -> bool {
        self.closed && self.valid_edges && self.vertex_links_are_spheres
    }
}

/// Checks that the skeleton underlies a closed 3-manifold: every face glued,
/// no edge identified with its own reversal, and every vertex link a sphere.
pub fn validate_closed_3manifold(skel: &Skeleton) -> ValidityReport {
    let mut messages = Vec::new();

    let boundary: Vec<usize> =
        (0..skel.num_triangles()).filter(|&f| skel.triangles[f].embeddings.len() < 2).collect();
    let closed = boundary.is_empty();
    if !closed {
        messages.push(format!("{} boundary triangle(s), first is triangle {}", boundary.len(), boundary[0]));
    }

    let invalid: Vec<usize> = (0..skel.num_edges()).filter(|&e| !skel.edges[e].valid).collect();
    let valid_edges = invalid.is_empty();
    for e in &invalid {
        messages.push(format!("edge {e} is identified with itself in reverse"));
    }

    // Link of vertex class w: one triangle per corner, one link edge per
    // pair of glued corner sides, one link vertex per edge end at w.
    let mut link_vertices = vec![0i64; skel.num_vertices()];
    for e in &skel.edges {
        link_vertices[e.ends[0]] += 1;
        link_vertices[e.ends[1]] += 1;
    }
    let mut vertex_links_are_spheres = closed;
    if closed {
        for (w, class) in skel.vertices.iter().enumerate() {
            let faces = class.corners.len() as i64;
            let edges = 3 * faces / 2;
            let chi = link_vertices[w] - edges + faces;
            if chi != 2 {
                vertex_links_are_spheres = false;
                messages.push(format!("vertex {w} link has Euler characteristic {chi}"));
            }
        }
    } else {
        messages.push("vertex links not checked on a triangulation with boundary".into());
    }

    ValidityReport { closed, valid_edges, vertex_links_are_spheres, messages }
}

#[cfg(test)]
/// Local vertex pair of a local edge, oriented by the class orientation.
pub(crate) fn oriented_edge(skel: &Skeleton, tet: usize, e: usize) -> [usize; 2] {
    let [u, v] = EDGE_VERTICES[e];
    if skel.edge_reversed(tet, e) {
        [v, u]
    } else {
        [u, v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{Perm4, Triangulation};

    #[test]
    fn single_unglued_tetrahedron() {
        let s = build_skeleton(&Triangulation::new(1));
        assert_eq!((s.num_vertices(), s.num_edges(), s.num_triangles()), (4, 6, 4));
        let report = validate_closed_3manifold(&s);
        assert!(!report.closed);
        assert!(report.valid_edges);
        assert!(!report.is_closed_manifold());
    }

    /// Brute force over the six gluings of face 0 onto face 1 of a single
    /// tetrahedron: those that send edge 23 onto itself reversed must be
    /// flagged invalid, and only those.
    #[test]
    fn reversed_edge_identification_is_invalid() {
        let mut found = 0;
        for &p in Perm4::all().iter().filter(|p| p.apply(0) == 1) {
            let mut t = Triangulation::new(1);
            t.join(0, 0, 0, p).unwrap();
            let s = build_skeleton(&t);
            let report = validate_closed_3manifold(&s);
            // Edge 23 lies in both faces 0 and 1.
            let reverses_23 = p.apply(2) == 3 && p.apply(3) == 2;
            let class = s.tet_edges(0)[5];
            assert_eq!(!s.edges[class].valid, reverses_23, "perm {p}");
            if reverses_23 {
                assert!(!report.valid_edges);
                found += 1;
            }
        }
        assert_eq!(found, 1);
    }

    #[test]
    fn orientation_bookkeeping_is_consistent() {
        let mut t = Triangulation::new(2);
        t.join(0, 0, 1, Perm4::new([1, 0, 2, 3]).unwrap()).unwrap();
        let s = build_skeleton(&t);
        for (id, class) in s.edges.iter().enumerate() {
            for &(tet, e) in &class.embeddings {
                assert_eq!(s.tet_edges(tet)[e], id);
                let [u, v] = oriented_edge(&s, tet, e);
                assert_eq!([s.vertex_of(tet, u), s.vertex_of(tet, v)], class.ends);
            }
        }
    }
}
