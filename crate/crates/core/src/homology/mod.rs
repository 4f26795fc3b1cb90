//! Z₂ chain and cochain complexes of a skeleton, plus integral H₁.

mod cohomology;
mod gf2;
mod integral;

pub use cohomology::{cocycle_space_1, cohomology_class, is_cocycle, reduce_colouring, CocycleSpace};
pub use gf2::{BitVec, Gf2Matrix};
pub use integral::{h1_integral, IntegralH1};

pub(crate) use gf2::SpanTracker;

use crate::triangulation::Skeleton;

/// Boundary map ∂_p over GF(2): one column per p-face class, one row per
/// (p−1)-face class, entries counted with multiplicity.
pub fn boundary_matrix_z2(skel: &Skeleton, p: usize) -> Gf2Matrix {
    match p {
        1 => {
            let mut m = Gf2Matrix::zeros(skel.num_vertices(), skel.num_edges());
            for (e, class) in skel.edges.iter().enumerate() {
                for w in class.ends {
                    m.flip(w, e);
                }
            }
            m
        }
        2 => {
            let mut m = Gf2Matrix::zeros(skel.num_edges(), skel.num_triangles());
            for (f, class) in skel.triangles.iter().enumerate() {
                for e in class.edges {
                    m.flip(e, f);
                }
            }
            m
        }
        3 => {
            let mut m = Gf2Matrix::zeros(skel.num_triangles(), skel.num_tets());
            for t in 0..skel.num_tets() {
                for f in 0..4 {
                    m.flip(skel.triangle_of(t, f), t);
                }
            }
            m
        }
        _ => panic!("boundary_matrix_z2: dimension {p} outside 1..=3"),
    }
}

fn chain_dim(skel: &Skeleton, p: usize) -> usize {
    match p {
        0 => skel.num_vertices(),
        1 => skel.num_edges(),
        2 => skel.num_triangles(),
        3 => skel.num_tets(),
        _ => 0,
    }
}

fn boundary_rank(skel: &Skeleton, p: usize) -> usize {
    if (1..=3).contains(&p) {
        boundary_matrix_z2(skel, p).rank()
    } else {
        0
    }
}

/// dim ker ∂_p − rank ∂_{p+1} over GF(2).
pub fn betti_z2(skel: &Skeleton, p: usize) -> usize {
    let kernel = chain_dim(skel, p) - boundary_rank(skel, p);
    kernel - boundary_rank(skel, p + 1)
}
