//! Vertex, edge, triangle and tetrahedron weights. Colours are doubled.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::admissible_triple;
use crate::cyclotomic::{CycElement, FieldContext};
use crate::error::{Error, Result};
use crate::triangulation::{edge_index, Perm4, Skeleton, EDGE_VERTICES};

/// (−1)^{2i}·[2i+1] for an edge of colour i.
pub fn edge_weight(ctx: &FieldContext, doubled: u32) -> CycElement {
    let w = ctx.quantum_integer(doubled + 1);
    if doubled % 2 == 1 {
        -w
    } else {
        w
    }
}

/// (−1)^{i+j+k}·[i+j−k]![i+k−j]![j+k−i]!/[i+j+k+1]!.
pub fn triangle_weight(ctx: &FieldContext, a: u32, b: u32, c: u32) -> Result<CycElement> {
    if !admissible_triple(ctx.r(), a, b, c) {
        return Err(Error::NotAdmissibleTriple(a, b, c));
    }
    let s = (a + b + c) / 2;
    let parts = [s - c, s - b, s - a].map(|x| ctx.factorial_ref(x).expect("argument below r").clone());
    let denom = ctx.inv_factorial_ref(s + 1).expect("s + 1 ≤ r − 1");
    let w = ctx.product(parts.iter().chain([denom]));
    Ok(if s % 2 == 1 { -w } else { w })
}

/// The four triangles of a tetrahedron in the i₀..i₅ labelling.
pub const TET_TRIANGLES: [[usize; 3]; 4] = [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]];
/// The three quads, each omitting a pair of opposite edges.
pub const TET_QUADS: [[usize; 4]; 3] = [[0, 1, 4, 5], [0, 2, 3, 5], [1, 2, 3, 4]];

/// Σ_{z⁻ ≤ z ≤ z⁺} (−1)^z [z+1]!/(τ(z)κ(z)) for doubled colours i₀..i₅.
pub fn tetrahedron_weight(ctx: &FieldContext, colours: [u32; 6]) -> Result<CycElement> {
    for t in TET_TRIANGLES {
        let [a, b, c] = t.map(|k| colours[k]);
        if !admissible_triple(ctx.r(), a, b, c) {
            return Err(Error::NotAdmissibleTriple(a, b, c));
        }
    }
    let tri = TET_TRIANGLES.map(|t| t.iter().map(|&k| colours[k]).sum::<u32>() / 2);
    let quad = TET_QUADS.map(|q| q.iter().map(|&k| colours[k]).sum::<u32>() / 2);
    let lo = *tri.iter().max().unwrap();
    let hi = *quad.iter().min().unwrap();
    let mut sum = ctx.zero();
    for z in lo..=hi {
        // [z+1]! vanishes from r on, and then so does the term.
        let Some(top) = ctx.factorial_ref(z + 1) else { break };
        let inv = |x: u32| ctx.inv_factorial_ref(x).expect("denominator argument below r");
        let factors = tri.iter().map(|&t| inv(z - t)).chain(quad.iter().map(|&q| inv(q - z)));
        let term = ctx.product(std::iter::once(top).chain(factors));
        if z % 2 == 1 {
            sum = &sum - &term;
        } else {
            sum += &term;
        }
    }
    Ok(sum)
}

/// Edge permutations induced by the 24 vertex permutations.
fn edge_symmetries() -> &'static [[usize; 6]] {
    static SYMS: OnceLock<Vec<[usize; 6]>> = OnceLock::new();
    SYMS.get_or_init(|| {
        Perm4::all()
            .iter()
            .map(|p| EDGE_VERTICES.map(|[u, v]| edge_index(p.apply(u), p.apply(v))))
            .collect()
    })
}

/// Lexicographically least relabelling of a 6-tuple of edge colours under
/// the symmetries of the tetrahedron.
pub fn canonical_tet_colours(colours: [u32; 6]) -> [u32; 6] {
    edge_symmetries()
        .iter()
        .map(|sigma| {
            let mut out = [0; 6];
            for e in 0..6 {
                out[sigma[e]] = colours[e];
            }
            out
        })
        .min()
        .unwrap()
}

/// Cached weights for one field context.
pub struct WeightSystem {
    ctx: FieldContext,
    vertex: CycElement,
    edges: Vec<CycElement>,
    triangles: HashMap<[u32; 3], CycElement>,
    tets: RwLock<HashMap<[u32; 6], CycElement>>,
}

impl WeightSystem {
    pub fn new(ctx: FieldContext) -> Self {
        let r = ctx.r();
        let edges = (0..=r - 2).map(|d| edge_weight(&ctx, d)).collect();
        let mut triangles = HashMap::new();
        for a in 0..=r - 2 {
            for b in a..=r - 2 {
                for c in b..=r - 2 {
                    if admissible_triple(r, a, b, c) {
                        triangles.insert([a, b, c], triangle_weight(&ctx, a, b, c).unwrap());
                    }
                }
            }
        }
        let vertex = ctx.vertex_weight();
        WeightSystem { ctx, vertex, edges, triangles, tets: RwLock::new(HashMap::new()) }
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn vertex(&self) -> &CycElement {
        &self.vertex
    }

    pub fn edge(&self, doubled: u32) -> &CycElement {
        &self.edges[doubled as usize]
    }

    pub fn triangle(&self, a: u32, b: u32, c: u32) -> Result<&CycElement> {
        let mut key = [a, b, c];
        key.sort_unstable();
        self.triangles.get(&key).ok_or(Error::NotAdmissibleTriple(a, b, c))
    }

    pub fn tetrahedron(&self, colours: [u32; 6]) -> Result<CycElement> {
        let key = canonical_tet_colours(colours);
        if let Some(w) = self.tets.read().unwrap().get(&key) {
            return Ok(w.clone());
        }
        let w = tetrahedron_weight(&self.ctx, key)?;
        self.tets.write().unwrap().insert(key, w.clone());
        Ok(w)
    }

    /// |𝔗|_θ: the product of all vertex, edge, triangle and tetrahedron weights.
    pub fn colouring_weight(&self, skel: &Skeleton, theta: &[u32]) -> Result<CycElement> {
        let ctx = &self.ctx;
        let mut acc = ctx.pow(&self.vertex, skel.num_vertices() as u32);
        for &d in theta {
            if d != 0 {
                acc = ctx.mul(&acc, self.edge(d));
            }
        }
        for f in &skel.triangles {
            let [a, b, c] = f.edges.map(|e| theta[e]);
            if (a, b, c) != (0, 0, 0) {
                acc = ctx.mul(&acc, self.triangle(a, b, c)?);
            }
        }
        for t in 0..skel.num_tets() {
            let colours = skel.tet_edges(t).map(|e| theta[e]);
            if colours != [0; 6] {
                acc = ctx.mul(&acc, &self.tetrahedron(colours)?);
            }
        }
        Ok(acc)
    }
}
