//! Intersection symbols of coloured tetrahedra and their decomposition into
//! vertex-link loops plus parallel copies of one balanced loop.
//!
//! With local vertices a, b, c, d = 0, 1, 2, 3, the first row of a symbol
//! holds the doubled colours of edges (ab, bc, ca) and the second row those
//! of the opposite edges (cd, ad, bd).

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::colourings::{admissible_triple, Colouring, TET_TRIANGLES};
use crate::cyclotomic::{CycElement, FieldContext};
use crate::error::{Error, Result};
use crate::triangulation::Skeleton;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntersectionSymbol(pub [[u32; 3]; 2]);

/// Vertex-loop symbols for a, b, c, d.
pub const VERTEX_LOOPS: [[[u32; 3]; 2]; 4] = [
    [[1, 0, 1], [0, 1, 0]],
    [[1, 1, 0], [0, 0, 1]],
    [[0, 1, 1], [1, 0, 0]],
    [[0, 0, 0], [1, 1, 1]],
];

impl IntersectionSymbol {
    /// From tetrahedron colours in the order of edges 01, 02, 03, 12, 13, 23.
    pub fn from_tet_colours(c: [u32; 6]) -> Self {
        IntersectionSymbol([[c[0], c[3], c[1]], [c[5], c[2], c[4]]])
    }

    pub fn to_tet_colours(self) -> [u32; 6] {
        let [r1, r2] = self.0;
        [r1[0], r1[2], r2[1], r1[1], r2[2], r2[0]]
    }

    /// Parity and triangle inequalities on all four faces.
    pub fn is_balanced(self) -> bool {
        let c = self.to_tet_colours();
        TET_TRIANGLES.iter().all(|t| {
            let [x, y, z] = t.map(|k| c[k]);
            (x + y + z) % 2 == 0 && x <= y + z && y <= x + z && z <= x + y
        })
    }

    /// Admissible for r: balanced and every face sum at most 2(r−2).
    pub fn is_admissible(self, r: u32) -> bool {
        let c = self.to_tet_colours();
        TET_TRIANGLES.iter().all(|t| {
            let [x, y, z] = t.map(|k| c[k]);
            admissible_triple(r, x, y, z)
        })
    }

    pub fn max_entry(self) -> u32 {
        self.0.iter().flatten().copied().max().unwrap()
    }
}

impl fmt::Display for IntersectionSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.0;
        write!(f, "[[{},{},{}],[{},{},{}]]", a[0], a[1], a[2], b[0], b[1], b[2])
    }
}

/// Corner counts of the unique normal arc system in a triangle with doubled
/// edge colours φ: entry k counts the arcs cutting off the corner opposite
/// edge k, which is (φ_i + φ_j − φ_k)/2.
pub fn normal_arc_counts(phi: [u32; 3]) -> Result<[u32; 3]> {
    let [a, b, c] = phi;
    if (a + b + c) % 2 == 1 || a > b + c || b > a + c || c > a + b {
        return Err(Error::NotAdmissibleTriple(a, b, c));
    }
    Ok([(b + c - a) / 2, (a + c - b) / 2, (a + b - c) / 2])
}

pub fn intersection_symbol(skel: &Skeleton, theta: &Colouring, tet: usize) -> IntersectionSymbol {
    IntersectionSymbol::from_tet_colours(skel.tet_edges(tet).map(|e| theta.doubled[e]))
}

/// `rotation` selects which column carries i + j: 0 for (i, j, i+j),
/// 1 for (i+j, i, j), 2 for (j, i+j, i).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LoopDecomposition {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub p: u32,
    pub i: u32,
    pub j: u32,
    pub rotation: u8,
}

/// One row of the balanced loop symbol.
pub fn balanced_row(i: u32, j: u32, rotation: u8) -> [u32; 3] {
    match rotation {
        0 => [i, j, i + j],
        1 => [i + j, i, j],
        2 => [j, i + j, i],
        _ => panic!("rotation must be 0, 1 or 2"),
    }
}

impl LoopDecomposition {
    pub fn reconstruct(&self) -> IntersectionSymbol {
        let mut m = [[0u32; 3]; 2];
        for (count, loop_) in [self.a, self.b, self.c, self.d].into_iter().zip(VERTEX_LOOPS) {
            for row in 0..2 {
                for col in 0..3 {
                    m[row][col] += count * loop_[row][col];
                }
            }
        }
        let bal = balanced_row(self.i, self.j, self.rotation);
        for row in &mut m {
            for col in 0..3 {
                row[col] += self.p * bal[col];
            }
        }
        IntersectionSymbol(m)
    }

    /// X = p(i+j) + a + b + c + d.
    pub fn x(&self) -> u32 {
        self.p * (self.i + self.j) + self.a + self.b + self.c + self.d
    }

    /// y = min(a, b, c, d).
    pub fn y(&self) -> u32 {
        self.a.min(self.b).min(self.c).min(self.d)
    }
}

/// Candidate decomposition with the balanced part in the given rotation.
fn try_rotation(s: IntersectionSymbol, rotation: u8) -> Option<LoopDecomposition> {
    let [r1, r2] = s.0.map(|row| row.map(i64::from));
    let diff = [r1[0] - r2[0], r1[1] - r2[1], r1[2] - r2[2]];
    // a−d, b−d, c−d from the row differences.
    let (ad2, bd2, cd2) = (diff[0] + diff[2], diff[0] + diff[1], diff[1] + diff[2]);
    if ad2 % 2 != 0 || bd2 % 2 != 0 || cd2 % 2 != 0 {
        return None;
    }
    let (ad, bd, cd) = (ad2 / 2, bd2 / 2, cd2 / 2);
    // The balance condition fixes one vertex count, hence d.
    let d = match rotation {
        0 => {
            let twice_b = r1[0] + r1[1] - r1[2];
            (twice_b % 2 == 0).then(|| twice_b / 2 - bd)?
        }
        1 => {
            let twice_c = r1[1] + r1[2] - r1[0];
            (twice_c % 2 == 0).then(|| twice_c / 2 - cd)?
        }
        _ => {
            let twice_a = r1[0] + r1[2] - r1[1];
            (twice_a % 2 == 0).then(|| twice_a / 2 - ad)?
        }
    };
    let (a, b, c) = (ad + d, bd + d, cd + d);
    if a < 0 || b < 0 || c < 0 || d < 0 {
        return None;
    }
    let res1 = [r1[0] - a - b, r1[1] - b - c, r1[2] - a - c];
    let res2 = [r2[0] - c - d, r2[1] - a - d, r2[2] - b - d];
    if res1 != res2 || res1.iter().any(|&x| x < 0) {
        return None;
    }
    let (u, v) = match rotation {
        0 => (res1[0], res1[1]),
        1 => (res1[1], res1[2]),
        _ => (res1[2], res1[0]),
    };
    let p = u.gcd(&v);
    let (i, j) = if p == 0 { (0, 0) } else { (u / p, v / p) };
    let dec = LoopDecomposition {
        a: a as u32,
        b: b as u32,
        c: c as u32,
        d: d as u32,
        p: p as u32,
        i: i as u32,
        j: j as u32,
        rotation: if p == 0 { 0 } else { rotation },
    };
    (dec.reconstruct() == s).then_some(dec)
}

/// The loop decomposition of a balanced symbol. Among rotations describing
/// the same loop system the smallest one is returned.
pub fn decompose_symbol(s: IntersectionSymbol) -> Result<LoopDecomposition> {
    let candidates: Vec<LoopDecomposition> = (0..3).filter_map(|rot| try_rotation(s, rot)).collect();
    let Some(&first) = candidates.first() else {
        return Err(Error::NoDecomposition(s.0));
    };
    // Different rotations may encode the same loops, e.g. (1,0,1) as (i,j,i+j)
    // and as (i+j,i,j); anything else would contradict uniqueness.
    for other in &candidates[1..] {
        let same_vertex_loops = (other.a, other.b, other.c, other.d, other.p) == (first.a, first.b, first.c, first.d, first.p);
        if !same_vertex_loops {
            return Err(Error::AmbiguousDecomposition(s.0));
        }
    }
    Ok(first)
}

/// (−1)^X Σ_{0≤z≤y} (−1)^z [X−z+1]! / ([a−z]![b−z]![c−z]![d−z]![pi+z]![pj+z]![z]!).
pub fn tet_weight_loop(ctx: &FieldContext, dec: &LoopDecomposition) -> CycElement {
    let x = dec.x();
    let y = dec.y();
    let mut sum = ctx.zero();
    for z in 0..=y {
        let Some(top) = ctx.factorial_ref(x - z + 1) else { continue };
        let inv = |k: u32| ctx.inv_factorial_ref(k).expect("denominator argument below r");
        let dens = [dec.a - z, dec.b - z, dec.c - z, dec.d - z, dec.p * dec.i + z, dec.p * dec.j + z, z].map(inv);
        let term = ctx.product(std::iter::once(top).chain(dens));
        if (x + z) % 2 == 1 {
            sum = &sum - &term;
        } else {
            sum += &term;
        }
    }
    sum
}

/// The single-term form valid when y = 0:
/// (−1)^X [X+1]! / ([a]![b]![c]![d]![pi]![pj]!).
pub fn tet_weight_loop_y0(ctx: &FieldContext, dec: &LoopDecomposition) -> Option<CycElement> {
    if dec.y() != 0 {
        return None;
    }
    let x = dec.x();
    let Some(top) = ctx.factorial_ref(x + 1) else { return Some(ctx.zero()) };
    let dens = [dec.a, dec.b, dec.c, dec.d, dec.p * dec.i, dec.p * dec.j]
        .map(|k| ctx.inv_factorial_ref(k).expect("argument below r"));
    let w = ctx.product(std::iter::once(top).chain(dens));
    Some(if x % 2 == 1 { -w } else { w })
}

/// Every admissible symbol for r, in lexicographic order.
pub fn admissible_symbols(r: u32) -> Vec<IntersectionSymbol> {
    symbols_with_max(r - 2).into_iter().filter(|s| s.is_admissible(r)).collect()
}

/// Every balanced symbol with entries at most `max`.
pub fn symbols_with_max(max: u32) -> Vec<IntersectionSymbol> {
    let base = max + 1;
    let mut out = Vec::new();
    for code in 0..base.pow(6) {
        let mut x = code;
        let mut c = [0u32; 6];
        for slot in c.iter_mut().rev() {
            *slot = x % base;
            x /= base;
        }
        let s = IntersectionSymbol([[c[0], c[1], c[2]], [c[3], c[4], c[5]]]);
        if s.is_balanced() {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::tetrahedron_weight;

    fn sym(m: [[u32; 3]; 2]) -> IntersectionSymbol {
        IntersectionSymbol(m)
    }

    #[test]
    fn worked_examples() {
        let d = decompose_symbol(sym([[0, 0, 0], [1, 1, 1]])).unwrap();
        assert_eq!((d.a, d.b, d.c, d.d, d.p), (0, 0, 0, 1, 0));
        let d = decompose_symbol(sym([[1, 1, 2], [1, 1, 2]])).unwrap();
        assert_eq!((d.a, d.b, d.c, d.d, d.p, d.i, d.j), (0, 0, 0, 0, 1, 1, 1));
        let d = decompose_symbol(sym([[2, 1, 1], [0, 1, 1]])).unwrap();
        assert_eq!((d.a, d.b, d.c, d.d, d.p), (1, 1, 0, 0, 0));
        let d = decompose_symbol(sym([[0, 1, 1], [0, 1, 1]])).unwrap();
        assert_eq!((d.p, d.i, d.j, d.rotation), (1, 0, 1, 0));
    }

    #[test]
    fn rotation_ties_pick_the_smallest() {
        let d = decompose_symbol(sym([[1, 0, 1], [1, 0, 1]])).unwrap();
        assert_eq!((d.p, d.i, d.j, d.rotation), (1, 1, 0, 0));
        assert!(try_rotation(sym([[1, 0, 1], [1, 0, 1]]), 1).is_some());
    }

    #[test]
    fn tet_colour_round_trip() {
        let c = [1, 2, 3, 4, 5, 6];
        assert_eq!(IntersectionSymbol::from_tet_colours(c).to_tet_colours(), c);
        // The a-loop crosses the three edges at vertex 0.
        assert_eq!(IntersectionSymbol(VERTEX_LOOPS[0]).to_tet_colours(), [1, 1, 1, 0, 0, 0]);
        assert_eq!(IntersectionSymbol(VERTEX_LOOPS[3]).to_tet_colours(), [0, 0, 1, 0, 1, 1]);
    }

    #[test]
    fn arc_counts() {
        assert_eq!(normal_arc_counts([0, 0, 0]).unwrap(), [0, 0, 0]);
        assert_eq!(normal_arc_counts([1, 1, 0]).unwrap(), [0, 0, 1]);
        assert_eq!(normal_arc_counts([2, 2, 2]).unwrap(), [1, 1, 1]);
        assert!(normal_arc_counts([0, 0, 1]).is_err());
    }

    #[test]
    fn single_vertex_loop_weight_carries_the_sign() {
        let ctx = FieldContext::new(5, 1).unwrap();
        let d = decompose_symbol(IntersectionSymbol(VERTEX_LOOPS[0])).unwrap();
        let expected = -ctx.quantum_integer(2);
        assert_eq!(tet_weight_loop(&ctx, &d), expected);
        assert_eq!(tet_weight_loop_y0(&ctx, &d).unwrap(), expected);
        assert_eq!(tetrahedron_weight(&ctx, [1, 1, 1, 0, 0, 0]).unwrap(), expected);
    }

    #[test]
    fn zero_decomposition_has_weight_one() {
        let ctx = FieldContext::new(3, 1).unwrap();
        let d = decompose_symbol(sym([[0; 3]; 2])).unwrap();
        assert_eq!(tet_weight_loop(&ctx, &d), ctx.one());
    }
}
