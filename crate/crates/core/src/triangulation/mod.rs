//! Generalised triangulations: `n` abstract tetrahedra whose faces are glued
//! in pairs by vertex permutations.
//!
//! Face `f` of a tetrahedron is the face opposite local vertex `f`. A gluing
//! `(t', σ)` on face `f` of `t` sends local vertex `k` of `t` to local vertex
//! `σ(k)` of `t'`, and hence face `f` of `t` onto face `σ(f)` of `t'`.

mod census;
mod io;
mod pachner;
mod perm;
mod skeleton;

pub use census::{canonical_key, canonical_form, enumerate_census, CensusFilter, MAX_CENSUS_TETS};
pub use io::{parse_triangulation, serialise_triangulation};
pub use pachner::pachner_23;
pub use perm::{edge_index, face_edges, Perm4, EDGE_VERTICES};
pub use skeleton::{
    build_skeleton, validate_closed_3manifold, EdgeClass, Skeleton, TriangleClass, ValidityReport,
    VertexClass,
};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gluing {
    pub tet: usize,
    pub perm: Perm4,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    gluings: Vec<[Option<Gluing>; 4]>,
}

impl Triangulation {
    /// `n` tetrahedra with no gluings.
    pub fn new(n: usize) -> Self {
        Triangulation { gluings: vec![[None; 4]; n] }
    }

    /// Builds a triangulation from a full gluing table, checking that it is
    /// involutive.
    pub fn from_gluings(gluings: Vec<[Option<Gluing>; 4]>) -> Result<Self> {
        let tri = Triangulation { gluings };
        tri.check()?;
        Ok(tri)
    }

    fn check(&self) -> Result<()> {
        let n = self.size();
        for (t, faces) in self.gluings.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                let Some(g) = g else { continue };
                if g.tet >= n {
                    return Err(Error::TetOutOfRange { index: g.tet, n });
                }
                let back_face = g.perm.apply(f);
                if g.tet == t && back_face == f {
                    return Err(Error::SelfGluedFace { tet: t, face: f });
                }
                match self.gluings[g.tet][back_face] {
                    Some(back) if back.tet == t && back.perm == g.perm.inverse() => {}
                    _ => return Err(Error::NonInvolutive { tet: t, face: f }),
                }
            }
        }
        Ok(())
    }

    /// Glues face `face` of `tet` to `target` via `perm`, together with the
    /// inverse gluing.
    pub fn join(&mut self, tet: usize, face: usize, target: usize, perm: Perm4) -> Result<()> {
        let n = self.size();
        for idx in [tet, target] {
            if idx >= n {
                return Err(Error::TetOutOfRange { index: idx, n });
            }
        }
        let back_face = perm.apply(face);
        if tet == target && back_face == face {
            return Err(Error::SelfGluedFace { tet, face });
        }
        if self.gluings[tet][face].is_some() || self.gluings[target][back_face].is_some() {
            return Err(Error::NonInvolutive { tet, face });
        }
        self.gluings[tet][face] = Some(Gluing { tet: target, perm });
        self.gluings[target][back_face] = Some(Gluing { tet, perm: perm.inverse() });
        Ok(())
    }

    /// Removes the gluing on the given face and its partner.
    pub fn unjoin(&mut self, tet: usize, face: usize) {
        if let Some(g) = self.gluings[tet][face].take() {
            self.gluings[g.tet][g.perm.apply(face)] = None;
        }
    }

    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluing(&self, tet: usize, face: usize) -> Option<Gluing> {
        self.gluings[tet][face]
    }

    pub fn gluings(&self) -> &[[Option<Gluing>; 4]] {
        &self.gluings
    }

    pub fn is_closed(&self) -> bool {
        self.gluings.iter().all(|faces| faces.iter().all(Option::is_some))
    }

    /// Isomorphic copy: tetrahedron t becomes `tets[t]` and its local
    /// vertex k becomes `verts[t].apply(k)`.
    pub fn relabel(&self, tets: &[usize], verts: &[Perm4]) -> Triangulation {
        let n = self.size();
        assert!(tets.len() == n && verts.len() == n);
        let mut out = Triangulation::new(n);
        for (t, faces) in self.gluings.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                let Some(g) = g else { continue };
                let perm = verts[g.tet].compose(g.perm).compose(verts[t].inverse());
                out.gluings[tets[t]][verts[t].apply(f)] = Some(Gluing { tet: tets[g.tet], perm });
            }
        }
        out
    }

    /// Connectivity of the dual graph.
    pub fn is_connected(&self) -> bool {
        let n = self.size();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for g in self.gluings[t].iter().flatten() {
                if !seen[g.tet] {
                    seen[g.tet] = true;
                    stack.push(g.tet);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_is_involutive() {
        let mut t = Triangulation::new(2);
        let p = Perm4::new([1, 2, 3, 0]).unwrap();
        t.join(0, 2, 1, p).unwrap();
        assert_eq!(t.gluing(1, p.apply(2)), Some(Gluing { tet: 0, perm: p.inverse() }));
        assert!(Triangulation::from_gluings(t.gluings().to_vec()).is_ok());
        t.unjoin(1, p.apply(2));
        assert_eq!(t.gluing(0, 2), None);
    }

    #[test]
    fn rejects_self_glued_face() {
        let mut t = Triangulation::new(1);
        let p = Perm4::new([0, 2, 1, 3]).unwrap();
        assert_eq!(t.join(0, 0, 0, p), Err(Error::SelfGluedFace { tet: 0, face: 0 }));
    }

    #[test]
    fn detects_non_involutive_table() {
        let mut g = vec![[None; 4]; 2];
        g[0][0] = Some(Gluing { tet: 1, perm: Perm4::IDENTITY });
        assert_eq!(
            Triangulation::from_gluings(g),
            Err(Error::NonInvolutive { tet: 0, face: 0 })
        );
    }

    #[test]
    fn relabel_preserves_the_isomorphism_class() {
        let census = enumerate_census(2, &CensusFilter::default()).unwrap();
        let all = Perm4::all();
        for (k, t) in census.iter().enumerate() {
            let n = t.size();
            let tets: Vec<usize> = (0..n).rev().collect();
            let verts: Vec<Perm4> = (0..n).map(|i| all[(7 * i + 5 * k + 3) % 24]).collect();
            let u = t.relabel(&tets, &verts);
            assert!(Triangulation::from_gluings(u.gluings().to_vec()).is_ok());
            assert_eq!(canonical_key(&u), canonical_key(t));
        }
    }
}
