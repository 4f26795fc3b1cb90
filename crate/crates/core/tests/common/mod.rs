#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use tv_core::colourings::checked_skeleton;
use tv_core::triangulation::{Perm4, Triangulation};

/// A random closed triangulation with `n` tetrahedra, or None if the
/// random gluing is not a closed connected 3-manifold.
pub fn random_triangulation(rng: &mut impl Rng, n: usize) -> Option<Triangulation> {
    let mut faces: Vec<(usize, usize)> = (0..n).flat_map(|t| (0..4).map(move |f| (t, f))).collect();
    faces.shuffle(rng);
    let mut tri = Triangulation::new(n);
    for pair in faces.chunks(2) {
        let [(t, f), (u, g)] = [pair[0], pair[1]];
        let perms: Vec<Perm4> = Perm4::all().iter().copied().filter(|p| p.apply(f) == g).collect();
        let perm = perms[rng.gen_range(0..perms.len())];
        tri.join(t, f, u, perm).ok()?;
    }
    checked_skeleton(&tri).ok()?;
    Some(tri)
}

/// `count` random closed triangulations with `n` tetrahedra.
pub fn random_sample(rng: &mut impl Rng, n: usize, count: usize) -> Vec<Triangulation> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(t) = random_triangulation(rng, n) {
            out.push(t);
        }
    }
    out
}
