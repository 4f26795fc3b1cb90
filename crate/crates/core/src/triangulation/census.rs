//! Exhaustive enumeration of small closed triangulations up to combinatorial
//! isomorphism.
//!
//! Gluing tables are built by repeatedly gluing the lowest free face. A face
//! glued to a tetrahedron not yet reached uses the identity permutation and
//! opens the next index, which removes relabelings of fresh tetrahedra from
//! the search. Survivors are reduced to a canonical form and deduplicated.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{build_skeleton, validate_closed_3manifold, Gluing, Perm4, Triangulation};
use crate::error::{Error, Result};
use crate::homology::betti_z2;

pub const MAX_CENSUS_TETS: usize = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CensusFilter {
    pub one_vertex: bool,
    pub z2_homology_sphere: bool,
    /// Keep only triangulations with this first Betti number over Z₂.
    pub betti1: Option<usize>,
}

impl CensusFilter {
    fn accepts(&self, tri: &Triangulation) -> bool {
        let skel = build_skeleton(tri);
        if self.one_vertex && skel.num_vertices() != 1 {
            return false;
        }
        let b1 = betti_z2(&skel, 1);
        if self.z2_homology_sphere && b1 != 0 {
            return false;
        }
        self.betti1.is_none_or(|b| b == b1)
    }
}

/// Every connected closed 3-manifold triangulation with 1..=`max_tets`
/// tetrahedra, one per isomorphism class, ordered by size then canonical key.
pub fn enumerate_census(max_tets: usize, filter: &CensusFilter) -> Result<Vec<Triangulation>> {
    if max_tets > MAX_CENSUS_TETS {
        return Err(Error::CensusTooLarge { requested: max_tets, max: MAX_CENSUS_TETS });
    }
    let mut out = Vec::new();
    for n in 1..=max_tets {
        out.extend(census_of_size(n).into_iter().filter(|t| filter.accepts(t)));
    }
    Ok(out)
}

fn census_of_size(n: usize) -> Vec<Triangulation> {
    // Split on the first gluing: face (0,0) to each possible partner.
    let mut starts = Vec::new();
    for face in 1..4 {
        for &p in Perm4::all().iter().filter(|p| p.apply(0) == face) {
            starts.push((0, p));
        }
    }
    if n > 1 {
        starts.push((1, Perm4::IDENTITY));
    }

    let found: Vec<BTreeMap<Vec<u16>, Triangulation>> = starts
        .into_par_iter()
        .map(|(target, perm)| {
            let mut tri = Triangulation::new(n);
            tri.join(0, 0, target, perm).expect("fresh faces");
            let mut found = BTreeMap::new();
            extend(&mut tri, if target == 1 { 2 } else { 1 }, &mut found);
            found
        })
        .collect();

    let mut merged = BTreeMap::new();
    for map in found {
        merged.extend(map);
    }
    merged.into_values().collect()
}

fn extend(tri: &mut Triangulation, opened: usize, found: &mut BTreeMap<Vec<u16>, Triangulation>) {
    let n = tri.size();
    let free = (0..opened).flat_map(|t| (0..4).map(move |f| (t, f))).find(|&(t, f)| tri.gluing(t, f).is_none());
    let Some((t, f)) = free else {
        if opened == n {
            accept(tri, found);
        }
        return;
    };
    if !edges_still_valid(tri) {
        return;
    }

    for t2 in t..opened {
        for f2 in 0..4 {
            if (t2, f2) <= (t, f) || tri.gluing(t2, f2).is_some() {
                continue;
            }
            for &p in Perm4::all().iter().filter(|p| p.apply(f) == f2) {
                tri.join(t, f, t2, p).expect("both faces free");
                extend(tri, opened, found);
                tri.unjoin(t, f);
            }
        }
    }
    if opened < n {
        tri.join(t, f, opened, Perm4::IDENTITY).expect("fresh tetrahedron");
        extend(tri, opened + 1, found);
        tri.unjoin(t, f);
    }
}

fn edges_still_valid(tri: &Triangulation) -> bool {
    build_skeleton(tri).edges.iter().all(|e| e.valid)
}

fn accept(tri: &Triangulation, found: &mut BTreeMap<Vec<u16>, Triangulation>) {
    let skel = build_skeleton(tri);
    if !validate_closed_3manifold(&skel).is_closed_manifold() {
        return;
    }
    let (key, canon) = canonical_form(tri);
    found.entry(key).or_insert(canon);
}

/// Canonical key of a connected triangulation: the lexicographically least
/// encoding over all relabelings reachable by breadth-first traversal from
/// every (starting tetrahedron, starting vertex permutation).
pub fn canonical_key(tri: &Triangulation) -> Vec<u16> {
    canonical_form(tri).0
}

/// The canonical key together with the relabeled triangulation it encodes.
pub fn canonical_form(tri: &Triangulation) -> (Vec<u16>, Triangulation) {
    let n = tri.size();
    let mut best: Option<(Vec<u16>, Vec<usize>, Vec<Perm4>)> = None;
    for start in 0..n {
        for &p in Perm4::all() {
            let (key, order, maps) = relabel_from(tri, start, p);
            if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
                best = Some((key, order, maps));
            }
        }
    }
    let Some((key, order, maps)) = best else {
        return (Vec::new(), tri.clone());
    };
    let mut new_index = vec![0; n];
    for (i, &old) in order.iter().enumerate() {
        new_index[old] = i;
    }
    let mut gluings = vec![[None; 4]; n];
    for (i, &old) in order.iter().enumerate() {
        let m = maps[old];
        for face in 0..4 {
            if let Some(g) = tri.gluing(old, face) {
                let perm = maps[g.tet].compose(g.perm).compose(m.inverse());
                gluings[i][m.apply(face)] = Some(Gluing { tet: new_index[g.tet], perm });
            }
        }
    }
    (key, Triangulation::from_gluings(gluings).expect("relabeling preserves involution"))
}

/// Breadth-first relabeling. `maps[old]` sends old local vertices to new ones.
fn relabel_from(tri: &Triangulation, start: usize, p: Perm4) -> (Vec<u16>, Vec<usize>, Vec<Perm4>) {
    let n = tri.size();
    let mut maps = vec![Perm4::IDENTITY; n];
    let mut seen = vec![false; n];
    let mut order = vec![start];
    seen[start] = true;
    maps[start] = p;
    let mut key = Vec::with_capacity(8 * n);
    let mut head = 0;
    while head < order.len() {
        let old = order[head];
        head += 1;
        let m = maps[old];
        let inv = m.inverse();
        for new_face in 0..4 {
            let face = inv.apply(new_face);
            match tri.gluing(old, face) {
                None => key.extend([u16::MAX, u16::MAX]),
                Some(g) => {
                    if !seen[g.tet] {
                        seen[g.tet] = true;
                        // Chosen so the relabeled gluing is the identity.
                        maps[g.tet] = m.compose(g.perm.inverse());
                        order.push(g.tet);
                    }
                    let idx = order.iter().position(|&x| x == g.tet).unwrap();
                    let perm = maps[g.tet].compose(g.perm).compose(inv);
                    key.extend([idx as u16, perm.index() as u16]);
                }
            }
        }
    }
    // Unreached tetrahedra (disconnected input) keep their original order.
    for t in 0..n {
        if !seen[t] {
            order.push(t);
        }
    }
    (key, order, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{parse_triangulation, serialise_triangulation};

    #[test]
    fn canonical_key_is_relabeling_invariant() {
        let census = enumerate_census(2, &CensusFilter::default()).unwrap();
        for tri in &census {
            let key = canonical_key(tri);
            // Swap tetrahedra and permute vertices of tet 0.
            let n = tri.size();
            let swap: Vec<usize> = (0..n).rev().collect();
            let p = Perm4::new([2, 0, 3, 1]).unwrap();
            let maps: Vec<Perm4> = (0..n).map(|t| if t == 0 { p } else { Perm4::IDENTITY }).collect();
            let mut g = vec![[None; 4]; n];
            for t in 0..n {
                for f in 0..4 {
                    if let Some(gl) = tri.gluing(t, f) {
                        let perm = maps[gl.tet].compose(gl.perm).compose(maps[t].inverse());
                        g[swap[t]][maps[t].apply(f)] = Some(Gluing { tet: swap[gl.tet], perm });
                    }
                }
            }
            let relabeled = Triangulation::from_gluings(g).unwrap();
            assert_eq!(canonical_key(&relabeled), key);
        }
    }

    #[test]
    fn census_is_duplicate_free_and_stable() {
        let a = enumerate_census(2, &CensusFilter::default()).unwrap();
        let b = enumerate_census(2, &CensusFilter::default()).unwrap();
        assert_eq!(a, b);
        let mut keys: Vec<_> = a.iter().map(canonical_key).collect();
        let len = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), len);
        for t in &a {
            assert_eq!(parse_triangulation(&serialise_triangulation(t)).unwrap(), *t);
            assert_eq!(canonical_form(t).1, *t);
        }
    }

    #[test]
    fn resource_guard() {
        assert!(matches!(
            enumerate_census(4, &CensusFilter::default()),
            Err(Error::CensusTooLarge { requested: 4, .. })
        ));
    }
}
