use super::{boundary_matrix_z2, BitVec, SpanTracker};
use crate::colourings::Colouring;
use crate::error::{Error, Result};
use crate::triangulation::Skeleton;

/// The space of Z₂ 1-cocycles with a basis whose first `coboundary_dim`
/// vectors span the coboundaries.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    basis: Vec<BitVec>,
    coboundary_dim: usize,
    tracker: SpanTracker,
}

impl CocycleSpace {
    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coboundary_dim(&self) -> usize {
        self.coboundary_dim
    }

    /// β₁ over Z₂, the number of trailing basis vectors.
    pub fn betti1(&self) -> usize {
        self.basis.len() - self.coboundary_dim
    }

    /// Coordinates of the class of `c` in H¹, read off the trailing
    /// coefficients. Fails if `c` is not a cocycle.
    pub fn class_of(&self, skel: &Skeleton, c: &BitVec) -> Result<BitVec> {
        if let Some(triangle) = first_violated_triangle(skel, c) {
            return Err(Error::NotCocycle { triangle });
        }
        let coords = self.tracker.coordinates(c).expect("cocycles lie in the span of the basis");
        Ok(BitVec::from_bools((self.coboundary_dim..self.basis.len()).map(|i| coords.get(i))))
    }

    /// Combination of basis vectors with the given coefficients.
    pub fn combine(&self, coeffs: &BitVec) -> BitVec {
        let len = self.basis.first().map_or(0, BitVec::len);
        let mut v = BitVec::zeros(len);
        for i in coeffs.ones() {
            v.xor_assign(&self.basis[i]);
        }
        v
    }

    /// All 2^dim cocycles, ordered by the binary value of their coefficients.
    pub fn all_cocycles(&self, num_edges: usize) -> Vec<BitVec> {
        let d = self.dim();
        assert!(d < 32, "cocycle space too large to list");
        (0u64..1 << d)
            .map(|mask| {
                let mut v = BitVec::zeros(num_edges);
                for (i, b) in self.basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v.xor_assign(b);
                    }
                }
                v
            })
            .collect()
    }
}

fn first_violated_triangle(skel: &Skeleton, c: &BitVec) -> Option<usize> {
    skel.triangles
        .iter()
        .position(|f| f.edges.iter().filter(|&&e| c.get(e)).count() % 2 == 1)
}

/// The cocycle condition: an even number of 1s on every triangle, counted
/// with multiplicity.
pub fn is_cocycle(skel: &Skeleton, c: &BitVec) -> bool {
    first_violated_triangle(skel, c).is_none()
}

/// Basis of ker δ² with the coboundaries first.
pub fn cocycle_space_1(skel: &Skeleton) -> Result<CocycleSpace> {
    let e = skel.num_edges();
    let mut tracker = SpanTracker::new(e);
    let mut basis = Vec::new();

    // δ of each vertex: its incidence row in ∂₁.
    let d1 = boundary_matrix_z2(skel, 1);
    for w in 0..skel.num_vertices() {
        if tracker.insert(d1.row(w)) {
            basis.push(d1.row(w).clone());
        }
    }
    let coboundary_dim = basis.len();
    if coboundary_dim + 1 != skel.num_vertices() {
        return Err(Error::Disconnected);
    }

    // δ² is the transpose of ∂₂.
    let delta2 = boundary_matrix_z2(skel, 2).transpose();
    for v in delta2.kernel() {
        if tracker.insert(&v) {
            basis.push(v);
        }
    }
    Ok(CocycleSpace { basis, coboundary_dim, tracker })
}

/// Bit e is set iff θ(e) is a half-integer, i.e. the doubled colour is odd.
pub fn reduce_colouring(skel: &Skeleton, theta: &Colouring) -> Result<BitVec> {
    let c = BitVec::from_bools(theta.doubled.iter().map(|d| d % 2 == 1));
    for f in &skel.triangles {
        let [a, b, x] = f.edges.map(|e| theta.doubled[e]);
        if (a + b + x) % 2 == 1 {
            return Err(Error::NotAdmissibleTriple(a, b, x));
        }
    }
    Ok(c)
}

/// Class coordinates of a cocycle, building the cocycle space on the fly.
pub fn cohomology_class(skel: &Skeleton, c: &BitVec) -> Result<BitVec> {
    cocycle_space_1(skel)?.class_of(skel, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::betti_z2;
    use crate::triangulation::{build_skeleton, enumerate_census, CensusFilter};

    #[test]
    fn dimensions_and_class_laws_on_census() {
        for tri in enumerate_census(2, &CensusFilter::default()).unwrap() {
            let s = build_skeleton(&tri);
            let space = cocycle_space_1(&s).unwrap();
            let b1 = betti_z2(&s, 1);
            assert_eq!(space.dim(), s.num_vertices() - 1 + b1);
            assert_eq!(space.coboundary_dim(), s.num_vertices() - 1);
            for (i, v) in space.basis().iter().enumerate() {
                assert!(is_cocycle(&s, v));
                let class = space.class_of(&s, v).unwrap();
                if i < space.coboundary_dim() {
                    assert!(class.is_zero());
                } else {
                    let unit = i - space.coboundary_dim();
                    assert_eq!(class.ones().collect::<Vec<_>>(), vec![unit]);
                }
            }
            // Adding a coboundary leaves the class unchanged.
            for c in space.all_cocycles(s.num_edges()) {
                let base = space.class_of(&s, &c).unwrap();
                for cob in &space.basis()[..space.coboundary_dim()] {
                    let mut shifted = c.clone();
                    shifted.xor_assign(cob);
                    assert_eq!(space.class_of(&s, &shifted).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let census = enumerate_census(1, &CensusFilter::default()).unwrap();
        let s = build_skeleton(&census[0]);
        let space = cocycle_space_1(&s).unwrap();
        // A single edge is a cocycle only if no triangle contains it an odd number of times.
        for e in 0..s.num_edges() {
            let mut c = BitVec::zeros(s.num_edges());
            c.set(e, true);
            assert_eq!(space.class_of(&s, &c).is_ok(), is_cocycle(&s, &c));
        }
    }

    #[test]
    fn zero_colouring_reduces_to_zero() {
        let census = enumerate_census(1, &CensusFilter::default()).unwrap();
        let s = build_skeleton(&census[0]);
        let zero = Colouring { doubled: vec![0; s.num_edges()] };
        assert!(reduce_colouring(&s, &zero).unwrap().is_zero());
    }
}
