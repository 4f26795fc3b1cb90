//! Backtracking over edge colourings with triangle-level pruning.
//!
//! Edges are assigned in a static greedy order; each triangle is checked
//! exactly once, at the depth where its last edge receives a colour.

use rayon::prelude::*;
use serde::Serialize;

use super::{admissible_triple, Colouring};
use crate::error::{Error, Result};
use crate::homology::{cocycle_space_1, BitVec, CocycleSpace};
use crate::triangulation::Skeleton;

/// Which admissible colourings to emit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    /// Integer colours only, i.e. even doubled colours.
    IntegerOnly,
    /// Colourings whose reduction lies in the given cohomology class.
    Class(BitVec),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationStats {
    /// Every (edge, colour) assignment tried, pruned ones included.
    pub nodes_visited: u64,
    /// Complete colourings tested, i.e. assignments of the last edge.
    pub candidates: u64,
    /// Colourings emitted.
    pub admissible_count: u64,
}

impl std::ops::AddAssign for EnumerationStats {
    fn add_assign(&mut self, o: Self) {
        self.nodes_visited += o.nodes_visited;
        self.candidates += o.candidates;
        self.admissible_count += o.admissible_count;
    }
}

/// Static search plan for one skeleton and one r.
#[derive(Clone, Debug)]
pub struct Enumerator {
    r: u32,
    num_edges: usize,
    order: Vec<usize>,
    /// Triangles (as edge-class triples) completed at each depth.
    checks: Vec<Vec<[usize; 3]>>,
}

/// Greedy order: repeatedly take the edge completing the most triangles,
/// then the one touching the most partially assigned triangles.
pub fn greedy_edge_order(skel: &Skeleton) -> Vec<usize> {
    let e = skel.num_edges();
    let mut assigned = vec![false; e];
    let mut order = Vec::with_capacity(e);
    for _ in 0..e {
        let score = |cand: usize| {
            let mut completes = 0;
            let mut touches = 0;
            for f in &skel.triangles {
                if !f.edges.contains(&cand) {
                    continue;
                }
                if f.edges.iter().all(|&x| x == cand || assigned[x]) {
                    completes += 1;
                } else if f.edges.iter().any(|&x| assigned[x]) {
                    touches += 1;
                }
            }
            (completes, touches)
        };
        let best = (0..e)
            .filter(|&x| !assigned[x])
            .max_by(|&a, &b| score(a).cmp(&score(b)).then(b.cmp(&a)))
            .expect("unassigned edge remains");
        assigned[best] = true;
        order.push(best);
    }
    order
}

impl Enumerator {
    pub fn new(skel: &Skeleton, r: u32) -> Self {
        Self::with_order(skel, r, greedy_edge_order(skel))
    }

    /// Uses the given edge order, which must be a permutation of the edges.
    pub fn with_order(skel: &Skeleton, r: u32, order: Vec<usize>) -> Self {
        assert!(r >= 3);
        let mut position = vec![usize::MAX; skel.num_edges()];
        for (i, &e) in order.iter().enumerate() {
            position[e] = i;
        }
        assert!(position.iter().all(|&p| p != usize::MAX), "order must cover every edge");
        let mut checks = vec![Vec::new(); order.len()];
        for f in &skel.triangles {
            let last = f.edges.iter().map(|&x| position[x]).max().expect("triangle has edges");
            checks[last].push(f.edges);
        }
        Enumerator { r, num_edges: skel.num_edges(), order, checks }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    fn colours(&self, integer_only: bool) -> impl Iterator<Item = u32> + Clone {
        (0..=self.r - 2).step_by(if integer_only { 2 } else { 1 })
    }

    /// Depth-first search from `depth` with the edges before it already
    /// coloured. Calls `leaf` at `stop` with the current colouring.
    fn explore(
        &self,
        depth: usize,
        stop: usize,
        integer_only: bool,
        theta: &mut Vec<u32>,
        stats: &mut EnumerationStats,
        leaf: &mut dyn FnMut(&[u32]),
    ) {
        if depth == stop {
            leaf(theta);
            return;
        }
        let e = self.order[depth];
        for c in self.colours(integer_only) {
            stats.nodes_visited += 1;
            if depth + 1 == self.num_edges {
                stats.candidates += 1;
            }
            theta[e] = c;
            let ok = self.checks[depth]
                .iter()
                .all(|&[a, b, x]| admissible_triple(self.r, theta[a], theta[b], theta[x]));
            if ok {
                self.explore(depth + 1, stop, integer_only, theta, stats, leaf);
            }
        }
        theta[e] = 0;
    }

    /// Sequential enumeration; `visit` receives colourings in lexicographic
    /// order of the edge order.
    pub fn for_each(&self, integer_only: bool, mut visit: impl FnMut(&[u32])) -> EnumerationStats {
        let mut stats = EnumerationStats::default();
        let mut theta = vec![0; self.num_edges];
        let mut count = 0;
        self.explore(0, self.num_edges, integer_only, &mut theta, &mut stats, &mut |t| {
            count += 1;
            visit(t)
        });
        stats.admissible_count = count;
        stats
    }

    /// Parallel fold over admissible colourings. The search is split on
    /// prefixes of the edge order; per-prefix results are combined in
    /// prefix order, so the outcome does not depend on the thread count.
    pub fn fold<T, F, R>(&self, integer_only: bool, init: impl Fn() -> T + Sync, fold: F, reduce: R) -> (T, EnumerationStats)
    where
        T: Send,
        F: Fn(T, &[u32]) -> T + Sync,
        R: Fn(T, T) -> T + Sync,
    {
        let split = self.num_edges.min(2);
        let mut stats = EnumerationStats::default();
        let mut prefixes = Vec::new();
        let mut theta = vec![0; self.num_edges];
        self.explore(0, split, integer_only, &mut theta, &mut stats, &mut |t| prefixes.push(t.to_vec()));

        let parts: Vec<(T, EnumerationStats)> = prefixes
            .into_par_iter()
            .map(|mut theta| {
                let mut s = EnumerationStats::default();
                let mut acc = Some(init());
                let mut count = 0;
                self.explore(split, self.num_edges, integer_only, &mut theta, &mut s, &mut |t| {
                    count += 1;
                    acc = Some(fold(acc.take().unwrap(), t));
                });
                s.admissible_count = count;
                (acc.unwrap(), s)
            })
            .collect();

        let mut total = init();
        for (part, s) in parts {
            total = reduce(total, part);
            stats += s;
        }
        (total, stats)
    }
}

/// Applies a filter at the leaves of the search.
pub(crate) struct LeafFilter<'a> {
    skel: &'a Skeleton,
    class: Option<(CocycleSpace, BitVec)>,
}

impl<'a> LeafFilter<'a> {
    pub fn new(skel: &'a Skeleton, filter: &Filter) -> Result<Self> {
        let class = match filter {
            Filter::Class(coords) => {
                let space = cocycle_space_1(skel)?;
                if coords.len() != space.betti1() {
                    return Err(Error::ClassLength { got: coords.len(), expected: space.betti1() });
                }
                Some((space, coords.clone()))
            }
            _ => None,
        };
        Ok(LeafFilter { skel, class })
    }

    pub fn accepts(&self, theta: &[u32]) -> bool {
        match &self.class {
            None => true,
            Some((space, coords)) => {
                let c = BitVec::from_bools(theta.iter().map(|d| d % 2 == 1));
                space.class_of(self.skel, &c).expect("admissible colourings reduce to cocycles") == *coords
            }
        }
    }
}

/// Every admissible colouring passing `filter`, in lexicographic order of
/// the greedy edge order, together with search statistics.
pub fn enumerate_admissible(skel: &Skeleton, r: u32, filter: &Filter) -> Result<(Vec<Colouring>, EnumerationStats)> {
    let en = Enumerator::new(skel, r);
    let leaf = LeafFilter::new(skel, filter)?;
    let mut out = Vec::new();
    let mut stats = en.for_each(*filter == Filter::IntegerOnly, |t| {
        if leaf.accepts(t) {
            out.push(Colouring { doubled: t.to_vec() });
        }
    });
    stats.admissible_count = out.len() as u64;
    Ok((out, stats))
}

/// Count and statistics only, computed in parallel.
pub fn count_admissible(skel: &Skeleton, r: u32, filter: &Filter) -> Result<EnumerationStats> {
    let en = Enumerator::new(skel, r);
    let leaf = LeafFilter::new(skel, filter)?;
    let (count, mut stats) = en.fold(
        *filter == Filter::IntegerOnly,
        || 0u64,
        |n, t| n + leaf.accepts(t) as u64,
        |a, b| a + b,
    );
    stats.admissible_count = count;
    Ok(stats)
}
