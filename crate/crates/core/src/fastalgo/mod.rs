//! Structure-sensitive algorithms: Adm(𝔗,4) from Adm(𝔗,3), the odd-r
//! computation through the trivial cohomology class, and colouring bounds.

mod bounds;

pub use bounds::{bounds, BoundReport};

use rayon::prelude::*;
use serde::Serialize;

use crate::colourings::{
    admissible_triple, checked_skeleton, greedy_edge_order, state_sum, Colouring, EnumerationStats, Filter,
    WeightSystem,
};
use crate::cyclotomic::{CycElement, FieldContext};
use crate::error::{Error, Result};
use crate::homology::{cocycle_space_1, BitVec};
use crate::triangulation::{Skeleton, Triangulation};

/// Adm(𝔗,3) as doubled colourings, one per 1-cocycle.
pub fn adm3(skel: &Skeleton) -> Result<Vec<BitVec>> {
    Ok(cocycle_space_1(skel)?.all_cocycles(skel.num_edges()))
}

/// Adm(𝔗,3) listed with the edges each colouring sends to 0.
#[derive(Clone, Debug, Serialize)]
pub struct Adm3Certificate {
    /// Doubled colourings, each entry 0 or 1.
    pub colourings: Vec<Vec<u32>>,
    pub kernels: Vec<Vec<usize>>,
}

pub fn adm3_certificate(skel: &Skeleton) -> Result<Adm3Certificate> {
    let cocycles = adm3(skel)?;
    let e = skel.num_edges();
    Ok(Adm3Certificate {
        colourings: cocycles.iter().map(|c| (0..e).map(|k| c.get(k) as u32).collect()).collect(),
        kernels: cocycles.iter().map(|c| (0..e).filter(|&k| !c.get(k)).collect()).collect(),
    })
}

/// Colourings extending a nonzero θ ∈ Adm(𝔗,3): edges outside ker θ get
/// 1/2, edges of ker θ get 0 or 1. Returns doubled colourings in order.
fn extend_cocycle(skel: &Skeleton, order: &[usize], theta: &BitVec) -> (Vec<Colouring>, EnumerationStats) {
    let kernel: Vec<usize> = order.iter().copied().filter(|&e| !theta.get(e)).collect();
    let mut position = vec![usize::MAX; skel.num_edges()];
    for (i, &e) in kernel.iter().enumerate() {
        position[e] = i;
    }
    let mut checks: Vec<Vec<[usize; 3]>> = vec![Vec::new(); kernel.len()];
    let mut stats = EnumerationStats::default();
    let mut colours: Vec<u32> = (0..skel.num_edges()).map(|e| theta.get(e) as u32).collect();
    for f in &skel.triangles {
        match f.edges.iter().filter(|&&e| position[e] != usize::MAX).map(|&e| position[e]).max() {
            Some(last) => checks[last].push(f.edges),
            None => {
                // No kernel edge: the colours are already fixed.
                let [a, b, c] = f.edges.map(|e| colours[e]);
                if !admissible_triple(4, a, b, c) {
                    return (Vec::new(), stats);
                }
            }
        }
    }

    let mut out = Vec::new();
    fn walk(
        depth: usize,
        kernel: &[usize],
        checks: &[Vec<[usize; 3]>],
        colours: &mut Vec<u32>,
        stats: &mut EnumerationStats,
        out: &mut Vec<Colouring>,
    ) {
        if depth == kernel.len() {
            out.push(Colouring { doubled: colours.clone() });
            return;
        }
        let e = kernel[depth];
        for c in [0, 2] {
            stats.nodes_visited += 1;
            if depth + 1 == kernel.len() {
                stats.candidates += 1;
            }
            colours[e] = c;
            if checks[depth].iter().all(|&[a, b, x]| admissible_triple(4, colours[a], colours[b], colours[x])) {
                walk(depth + 1, kernel, checks, colours, stats, out);
            }
        }
        colours[e] = 0;
    }
    if kernel.is_empty() {
        stats.candidates += 1;
    }
    walk(0, &kernel, &checks, &mut colours, &mut stats, &mut out);
    stats.admissible_count = out.len() as u64;
    (out, stats)
}

/// Adm(𝔗,4) built from Adm(𝔗,3), sorted, with search statistics. Doubled
/// Adm(𝔗,3) colourings count as one node and one candidate each.
pub fn adm4_structured(tri: &Triangulation) -> Result<(Vec<Colouring>, EnumerationStats)> {
    let skel = checked_skeleton(tri)?;
    adm4_structured_skeleton(&skel)
}

pub fn adm4_structured_skeleton(skel: &Skeleton) -> Result<(Vec<Colouring>, EnumerationStats)> {
    let cocycles = adm3(skel)?;
    let order = greedy_edge_order(skel);
    let parts: Vec<(Vec<Colouring>, EnumerationStats)> = cocycles
        .par_iter()
        .filter(|c| !c.is_zero())
        .map(|c| extend_cocycle(skel, &order, c))
        .collect();
    let mut out = Vec::new();
    let mut stats = EnumerationStats::default();
    for (cols, s) in parts {
        out.extend(cols);
        stats += s;
    }
    for c in &cocycles {
        out.push(Colouring { doubled: (0..skel.num_edges()).map(|e| 2 * c.get(e) as u32).collect() });
        stats.nodes_visited += 1;
        stats.candidates += 1;
    }
    out.sort();
    stats.admissible_count = out.len() as u64;
    Ok((out, stats))
}

/// TV_{4,q} summed over the structured Adm(𝔗,4).
pub fn tv4_structured(tri: &Triangulation, q: u32) -> Result<(CycElement, EnumerationStats)> {
    let ctx = FieldContext::new(4, q)?;
    let skel = checked_skeleton(tri)?;
    let (cols, stats) = adm4_structured_skeleton(&skel)?;
    let weights = WeightSystem::new(ctx);
    let sum = cols
        .par_iter()
        .map(|c| weights.colouring_weight(&skel, &c.doubled).expect("structured colourings are admissible"))
        .reduce(|| weights.ctx().zero(), |a, b| &a + &b);
    Ok((sum, stats))
}

/// TV_{3,1} by summing over the 1-cocycles; the value is rational.
pub fn tv3_by_cocycles(skel: &Skeleton) -> Result<CycElement> {
    let weights = WeightSystem::new(FieldContext::new(3, 1)?);
    let mut sum = weights.ctx().zero();
    for c in adm3(skel)? {
        let doubled: Vec<u32> = (0..skel.num_edges()).map(|e| c.get(e) as u32).collect();
        sum += &weights.colouring_weight(skel, &doubled)?;
    }
    Ok(sum)
}

/// TV_{r,1} for odd r on a 1-vertex triangulation, as TV_{3,1}(𝔗)/TV_{3,1}(S³)
/// times the invariant at the trivial class, the latter from integer
/// colourings only. TV_{3,1}(S³) is the r = 3 vertex weight, 1/2.
pub fn tv_odd_fast(tri: &Triangulation, r: u32) -> Result<(CycElement, EnumerationStats)> {
    if r.is_multiple_of(2) || r < 3 {
        return Err(Error::Unsupported(format!("odd-r algorithm needs odd r >= 3, got {r}")));
    }
    let skel = checked_skeleton(tri)?;
    if skel.num_vertices() != 1 {
        return Err(Error::Unsupported(format!(
            "odd-r algorithm needs a 1-vertex triangulation, got {} vertices",
            skel.num_vertices()
        )));
    }
    let tv3 = tv3_by_cocycles(&skel)?.as_rational().expect("TV_{3,1} is rational");
    let sphere = FieldContext::new(3, 1)?.vertex_weight().as_rational().expect("rational at r = 3");
    let factor = tv3 / sphere;
    let weights = WeightSystem::new(FieldContext::new(r, 1)?);
    let (trivial_class, stats) = state_sum(&skel, &weights, &Filter::IntegerOnly)?;
    Ok((trivial_class.scale(&factor), stats))
}
