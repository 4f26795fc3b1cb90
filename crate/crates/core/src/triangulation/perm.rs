use std::fmt;

use crate::error::{Error, Result};

/// Local edges of a tetrahedron, indexed 0..6 as 01, 02, 03, 12, 13, 23.
pub const EDGE_VERTICES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Index of the local edge joining vertices `u` and `v`.
pub fn edge_index(u: usize, v: usize) -> usize {
    debug_assert!(u != v && u < 4 && v < 4);
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

/// The three local edges of face `f` (the face opposite vertex `f`), in
/// increasing index order.
pub fn face_edges(f: usize) -> [usize; 3] {
    match f {
        0 => [3, 4, 5],
        1 => [1, 2, 5],
        2 => [0, 2, 4],
        _ => [0, 1, 3],
    }
}

/// A permutation of the four vertices of a tetrahedron.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &x in &images {
            if x > 3 || seen[x as usize] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x as usize] = true;
        }
        Ok(Perm4(images))
    }

    /// All 24 permutations in lexicographic order of their image arrays.
    pub fn all() -> &'static [Perm4; 24] {
        static ALL: std::sync::OnceLock<[Perm4; 24]> = std::sync::OnceLock::new();
        ALL.get_or_init(|| {
            let mut out = [Perm4::IDENTITY; 24];
            let mut k = 0;
            for a in 0..4u8 {
                for b in 0..4u8 {
                    for c in 0..4u8 {
                        let Some(d) = 6u8.checked_sub(a + b + c) else { continue };
                        if d <= 3 && a != b && a != c && b != c && d != a && d != b && d != c {
                            out[k] = Perm4([a, b, c, d]);
                            k += 1;
                        }
                    }
                }
            }
            out
        })
    }

    /// Position of this permutation in [`Perm4::all`].
    pub fn index(self) -> usize {
        Perm4::all().binary_search(&self).expect("valid permutation")
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    #[inline]
    pub fn apply(self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn inverse(self) -> Perm4 {
        let mut inv = [0u8; 4];
        for (k, &x) in self.0.iter().enumerate() {
            inv[x as usize] = k as u8;
        }
        Perm4(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm4) -> Perm4 {
        Perm4([
            self.0[other.0[0] as usize],
            self.0[other.0[1] as usize],
            self.0[other.0[2] as usize],
            self.0[other.0[3] as usize],
        ])
    }

    /// Image of local edge `e` under the permutation, and whether the edge's
    /// increasing vertex order is reversed.
    pub fn apply_edge(self, e: usize) -> (usize, bool) {
        let [u, v] = EDGE_VERTICES[e];
        let (pu, pv) = (self.apply(u), self.apply(v));
        (edge_index(pu, pv), pu > pv)
    }

    pub fn is_even(self) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm4({self})")
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_four_distinct() {
        let all = Perm4::all();
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, p) in all.iter().enumerate() {
            assert_eq!(p.index(), i);
            assert_eq!(p.compose(p.inverse()), Perm4::IDENTITY);
            assert_eq!(p.inverse().compose(*p), Perm4::IDENTITY);
        }
        assert_eq!(all.iter().filter(|p| p.is_even()).count(), 12);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm4::new([0, 0, 1, 2]).is_err());
        assert!(Perm4::new([0, 1, 2, 4]).is_err());
        assert!(Perm4::new([3, 2, 1, 0]).is_ok());
    }

    #[test]
    fn composition_is_associative() {
        let all = Perm4::all();
        for a in all.iter().step_by(5) {
            for b in all.iter().step_by(3) {
                for c in all.iter().step_by(7) {
                    assert_eq!(a.compose(*b).compose(*c), a.compose(b.compose(*c)));
                }
            }
        }
    }

    #[test]
    fn face_edges_avoid_the_opposite_vertex() {
        for f in 0..4 {
            let edges = face_edges(f);
            for e in edges {
                assert!(!EDGE_VERTICES[e].contains(&f));
            }
        }
        for e in 0..6 {
            let [u, v] = EDGE_VERTICES[e];
            assert_eq!(edge_index(u, v), e);
            assert_eq!(edge_index(v, u), e);
        }
    }
}
