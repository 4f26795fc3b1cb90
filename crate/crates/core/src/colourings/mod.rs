//! Admissible colourings, their weights, and the Turaev-Viro state sums.

mod enumerate;
mod weights;

pub use enumerate::{
    count_admissible, enumerate_admissible, greedy_edge_order, EnumerationStats, Enumerator, Filter,
};
pub use weights::{
    canonical_tet_colours, edge_weight, tetrahedron_weight, triangle_weight, WeightSystem, TET_QUADS,
    TET_TRIANGLES,
};

use serde::Serialize;

use crate::cyclotomic::{CycElement, FieldContext};
use crate::error::{Error, Result};
use crate::homology::BitVec;
use crate::triangulation::{build_skeleton, validate_closed_3manifold, Skeleton, Triangulation};

use enumerate::LeafFilter;

/// Edge colouring stored as doubled colours, indexed by edge class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Colouring {
    pub doubled: Vec<u32>,
}

impl Colouring {
    pub fn zero(num_edges: usize) -> Self {
        Colouring { doubled: vec![0; num_edges] }
    }

    pub fn is_integer(&self) -> bool {
        self.doubled.iter().all(|d| d % 2 == 0)
    }
}

/// Parity, triangle inequalities and the upper bound, on doubled colours.
pub fn admissible_triple(r: u32, a: u32, b: u32, c: u32) -> bool {
    let s = a + b + c;
    s.is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b && s <= 2 * (r - 2)
}

pub fn is_admissible(skel: &Skeleton, r: u32, theta: &Colouring) -> bool {
    theta.doubled.len() == skel.num_edges()
        && theta.doubled.iter().all(|&d| d <= r - 2)
        && skel.triangles.iter().all(|f| {
            let [a, b, c] = f.edges.map(|e| theta.doubled[e]);
            admissible_triple(r, a, b, c)
        })
}

/// Skeleton of a triangulation that must be a closed 3-manifold.
pub fn checked_skeleton(tri: &Triangulation) -> Result<Skeleton> {
    let skel = build_skeleton(tri);
    let report = validate_closed_3manifold(&skel);
    if !report.is_closed_manifold() {
        return Err(Error::InvalidTriangulation(report.messages.join("; ")));
    }
    if !tri.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(skel)
}

/// |𝔗|_θ for one admissible colouring.
pub fn colouring_weight(skel: &Skeleton, weights: &WeightSystem, theta: &Colouring) -> Result<CycElement> {
    if !is_admissible(skel, weights.ctx().r(), theta) {
        return Err(Error::NotAdmissible { r: weights.ctx().r() });
    }
    weights.colouring_weight(skel, &theta.doubled)
}

/// Σ |𝔗|_θ over the admissible colourings passing `filter`, with stats.
pub fn state_sum(skel: &Skeleton, weights: &WeightSystem, filter: &Filter) -> Result<(CycElement, EnumerationStats)> {
    let en = Enumerator::new(skel, weights.ctx().r());
    let leaf = LeafFilter::new(skel, filter)?;
    let ctx = weights.ctx();
    let ((sum, count), mut stats) = en.fold(
        *filter == Filter::IntegerOnly,
        || (ctx.zero(), 0u64),
        |(mut acc, n), theta| {
            if !leaf.accepts(theta) {
                return (acc, n);
            }
            acc += &weights.colouring_weight(skel, theta).expect("enumerated colourings are admissible");
            (acc, n + 1)
        },
        |(a, n), (b, m)| (&a + &b, n + m),
    );
    stats.admissible_count = count;
    Ok((sum, stats))
}

/// TV_{r,q}(𝔗) together with enumeration statistics.
#[derive(Clone, Debug, Serialize)]
pub struct StateSum {
    pub value: CycElement,
    pub stats: EnumerationStats,
}

pub fn tv_with_stats(tri: &Triangulation, r: u32, q: u32) -> Result<StateSum> {
    let ctx = FieldContext::new(r, q)?;
    let skel = checked_skeleton(tri)?;
    let (value, stats) = state_sum(&skel, &WeightSystem::new(ctx), &Filter::All)?;
    Ok(StateSum { value, stats })
}

/// TV_{r,q}(𝔗) by naive enumeration.
pub fn tv(tri: &Triangulation, r: u32, q: u32) -> Result<CycElement> {
    Ok(tv_with_stats(tri, r, q)?.value)
}

/// TV_{r,q}(𝔗, [α]) for the class with the given coordinates.
pub fn tv_at_class(tri: &Triangulation, r: u32, q: u32, class: &BitVec) -> Result<CycElement> {
    let ctx = FieldContext::new(r, q)?;
    let skel = checked_skeleton(tri)?;
    Ok(state_sum(&skel, &WeightSystem::new(ctx), &Filter::Class(class.clone()))?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{enumerate_census, CensusFilter};

    #[test]
    fn admissible_triples() {
        assert!(admissible_triple(5, 3, 2, 1));
        assert!(!admissible_triple(5, 0, 0, 1));
        let mut r4 = Vec::new();
        for a in 0..=2 {
            for b in a..=2 {
                for c in b..=2 {
                    if admissible_triple(4, a, b, c) {
                        r4.push([a, b, c]);
                    }
                }
            }
        }
        assert_eq!(r4, vec![[0, 0, 0], [0, 1, 1], [0, 2, 2], [1, 1, 2]]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let census = enumerate_census(2, &CensusFilter::default()).unwrap();
        for tri in census.iter().take(12) {
            let skel = build_skeleton(tri);
            for r in 3..=5 {
                let (found, stats) = enumerate_admissible(&skel, r, &Filter::All).unwrap();
                let e = skel.num_edges() as u32;
                let mut brute = Vec::new();
                for code in 0..(r - 1).pow(e) {
                    let mut x = code;
                    let doubled: Vec<u32> = (0..e)
                        .map(|_| {
                            let d = x % (r - 1);
                            x /= r - 1;
                            d
                        })
                        .collect();
                    let c = Colouring { doubled };
                    if is_admissible(&skel, r, &c) {
                        brute.push(c);
                    }
                }
                let mut sorted = found.clone();
                sorted.sort();
                brute.sort();
                assert_eq!(sorted, brute);
                assert_eq!(stats.admissible_count as usize, found.len());
                assert!(stats.admissible_count <= stats.nodes_visited);
                assert!(found.contains(&Colouring::zero(skel.num_edges())));
                let par = count_admissible(&skel, r, &Filter::All).unwrap();
                assert_eq!(par, stats);
            }
        }
    }

    #[test]
    fn zero_colouring_weight_is_vertex_power() {
        for tri in enumerate_census(1, &CensusFilter::default()).unwrap() {
            let skel = build_skeleton(&tri);
            let ws = WeightSystem::new(FieldContext::new(4, 1).unwrap());
            let w = colouring_weight(&skel, &ws, &Colouring::zero(skel.num_edges())).unwrap();
            assert_eq!(w, ws.ctx().pow(ws.vertex(), skel.num_vertices() as u32));
        }
    }
}
