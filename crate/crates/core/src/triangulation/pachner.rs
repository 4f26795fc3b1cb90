//! The bistellar 2-3 move.

use super::{build_skeleton, Gluing, Perm4, Triangulation};
use crate::error::{Error, Result};

/// Vertex names used while rebuilding: the two apexes and the three
/// triangle vertices, the latter named by their local index in `t`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Name {
    ApexT,
    ApexU,
    Tri(usize),
}

/// Replaces the two distinct tetrahedra meeting along `triangle` by three
/// tetrahedra around the new edge joining their apexes.
///
/// The untouched tetrahedra keep their relative order and come first; the
/// three new tetrahedra are appended.
pub fn pachner_23(tri: &Triangulation, triangle: usize) -> Result<Triangulation> {
    let skel = build_skeleton(tri);
    let class = skel
        .triangles
        .get(triangle)
        .ok_or(Error::MoveUndefined { triangle, reason: "no such triangle" })?;
    if class.embeddings.len() < 2 {
        return Err(Error::MoveUndefined { triangle, reason: "triangle lies in only one tetrahedron" });
    }
    let (t, f) = class.embeddings[0];
    let g = tri.gluing(t, f).expect("internal triangle is glued");
    let u = g.tet;
    if u == t {
        return Err(Error::MoveUndefined { triangle, reason: "both sides are the same tetrahedron" });
    }
    let sigma = g.perm;
    let apex_u = sigma.apply(f);
    let tri_verts: Vec<usize> = (0..4).filter(|&k| k != f).collect();

    // New tetrahedron k omits triangle vertex tri_verts[k]; local labels are
    // apex of t, apex of u, then the two remaining triangle vertices.
    let new_names: Vec<[Name; 4]> = (0..3)
        .map(|k| {
            let rest: Vec<usize> = tri_verts.iter().copied().filter(|&x| x != tri_verts[k]).collect();
            [Name::ApexT, Name::ApexU, Name::Tri(rest[0]), Name::Tri(rest[1])]
        })
        .collect();

    let name_in_t = |k: usize| if k == f { Name::ApexT } else { Name::Tri(k) };
    let name_in_u = |k: usize| {
        if k == apex_u {
            Name::ApexU
        } else {
            Name::Tri(sigma.inverse().apply(k))
        }
    };

    // For a face of t or u other than the shared one: the new tetrahedron
    // carrying it and the vertex map from old local labels to new ones.
    let remap = |old: usize, face: usize| -> (usize, Perm4) {
        let name_of = |k: usize| if old == t { name_in_t(k) } else { name_in_u(k) };
        let missing = match name_of(face) {
            Name::Tri(x) => x,
            _ => unreachable!("shared face is never remapped"),
        };
        let k = tri_verts.iter().position(|&x| x == missing).unwrap();
        let names = &new_names[k];
        let mut images = [0u8; 4];
        for (local, image) in images.iter_mut().enumerate() {
            let name = if local == face {
                // Vertex opposite the face maps to the apex missing from it.
                if old == t {
                    Name::ApexU
                } else {
                    Name::ApexT
                }
            } else {
                name_of(local)
            };
            *image = names.iter().position(|&x| x == name).unwrap() as u8;
        }
        (k, Perm4::new(images).expect("names are distinct"))
    };

    let n = tri.size();
    let kept: Vec<usize> = (0..n).filter(|&x| x != t && x != u).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &x) in kept.iter().enumerate() {
        index[x] = i;
    }
    let base = kept.len();
    let mut gluings: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; base + 3];

    // Resolves an old destination (tet, face, perm-into-tet) to the new table.
    let resolve = |dest: usize, dest_face: usize, perm: Perm4| -> Gluing {
        if dest == t || dest == u {
            let (k, map) = remap(dest, dest_face);
            Gluing { tet: base + k, perm: map.compose(perm) }
        } else {
            Gluing { tet: index[dest], perm }
        }
    };

    for (i, &x) in kept.iter().enumerate() {
        for face in 0..4 {
            if let Some(old) = tri.gluing(x, face) {
                gluings[i][face] = Some(resolve(old.tet, old.perm.apply(face), old.perm));
            }
        }
    }

    for old in [t, u] {
        let shared = if old == t { f } else { apex_u };
        for face in (0..4).filter(|&x| x != shared) {
            let (k, map) = remap(old, face);
            let new_face = map.apply(face);
            gluings[base + k][new_face] = tri.gluing(old, face).map(|g| {
                let dest_face = g.perm.apply(face);
                let resolved = resolve(g.tet, dest_face, g.perm);
                Gluing { tet: resolved.tet, perm: resolved.perm.compose(map.inverse()) }
            });
        }
    }

    // Internal faces: new tetrahedron k, face opposite local vertex 2 or 3,
    // meets the new tetrahedron that omits that vertex.
    for k in 0..3 {
        for local in [2usize, 3] {
            let Name::Tri(omitted) = new_names[k][local] else { unreachable!() };
            let other = tri_verts.iter().position(|&x| x == omitted).unwrap();
            let mut images = [0u8; 4];
            for (l, image) in images.iter_mut().enumerate() {
                let name = if l == local { Name::Tri(tri_verts[k]) } else { new_names[k][l] };
                *image = new_names[other].iter().position(|&x| x == name).unwrap() as u8;
            }
            gluings[base + k][local] = Some(Gluing { tet: base + other, perm: Perm4::new(images).unwrap() });
        }
    }

    Triangulation::from_gluings(gluings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{enumerate_census, validate_closed_3manifold, CensusFilter};

    #[test]
    fn two_to_three_preserves_validity_and_counts() {
        let census = enumerate_census(2, &CensusFilter::default()).unwrap();
        let mut moved = 0;
        for tri in &census {
            let skel = build_skeleton(tri);
            for f in 0..skel.num_triangles() {
                let Ok(after) = pachner_23(tri, f) else { continue };
                moved += 1;
                assert_eq!(after.size(), tri.size() + 1);
                let s2 = build_skeleton(&after);
                assert!(validate_closed_3manifold(&s2).is_closed_manifold());
                assert_eq!(s2.num_vertices(), skel.num_vertices());
                assert_eq!(s2.num_edges(), skel.num_edges() + 1);
            }
        }
        assert!(moved > 0);
    }

    #[test]
    fn rejects_boundary_and_self_adjacent_triangles() {
        let t = Triangulation::new(1);
        assert!(matches!(pachner_23(&t, 0), Err(Error::MoveUndefined { .. })));
        let t = crate::triangulation::fixtures::one_tet(crate::triangulation::fixtures::SPHERE_TWO_VERTEX);
        assert!(matches!(pachner_23(&t, 0), Err(Error::MoveUndefined { .. })));
    }
}
