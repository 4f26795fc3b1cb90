//! Upper bounds on |Adm(𝔗,r)| and how close the actual count comes.

use serde::Serialize;

use super::adm3;
use crate::colourings::{checked_skeleton, count_admissible, EnumerationStats, Filter};
use crate::error::Result;
use crate::homology::betti_z2;
use crate::triangulation::Triangulation;

/// A bound together with whether the actual count attains it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u128,
    pub sharp: bool,
}

/// Bounds on |Adm(𝔗,r)|. Optional bounds are absent where they do not
/// apply: `eq_long` and `eq_short` need r = 4; `hom_sphere_bound` and
/// `small_r` need a 1-vertex Z₂-homology sphere, the latter r ∈ {5,6,7}.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReport {
    pub r: u32,
    pub tetrahedra: usize,
    pub vertices: usize,
    pub betti1: usize,
    pub adm3: u64,
    pub naive: Bound,
    pub eq_long: Option<Bound>,
    pub eq_short: Option<Bound>,
    pub hom_sphere_bound: Option<Bound>,
    pub small_r: Option<Bound>,
    pub actual: u64,
    pub nodes: EnumerationStats,
}

impl BoundReport {
    /// Every applicable bound, by name.
    pub fn applicable(&self) -> Vec<(&'static str, Bound)> {
        let mut out = vec![("naive", self.naive)];
        let optional = [
            ("eqLong", self.eq_long),
            ("eqShort", self.eq_short),
            ("homSphereBound", self.hom_sphere_bound),
            ("smallR", self.small_r),
        ];
        out.extend(optional.into_iter().filter_map(|(n, b)| b.map(|b| (n, b))));
        out
    }

    pub fn all_respected(&self) -> bool {
        self.applicable().iter().all(|(_, b)| self.actual as u128 <= b.value)
    }
}

pub fn bounds(tri: &Triangulation, r: u32) -> Result<BoundReport> {
    crate::cyclotomic::FieldContext::new(r, 1)?;
    let skel = checked_skeleton(tri)?;
    let n = skel.num_tets() as u32;
    let v = skel.num_vertices() as u32;
    let b1 = betti_z2(&skel, 1);
    let cocycles = adm3(&skel)?;
    let stats = count_admissible(&skel, r, &Filter::All)?;
    let actual = stats.admissible_count;
    let bound = |value: u128| Bound { value, sharp: actual as u128 == value };

    let (eq_long, eq_short) = if r == 4 {
        let long: u128 = cocycles
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| 1u128 << (skel.num_edges() - c.count_ones()))
            .sum::<u128>()
            + (1u128 << (v as usize + b1 - 1));
        let short = (cocycles.len() as u128 - 1) * ((1u128 << (n + v - 1)) + 1) + 1;
        (Some(bound(long)), Some(bound(short)))
    } else {
        (None, None)
    };

    let z2hs = v == 1 && b1 == 0;
    let hom_sphere_bound = z2hs.then(|| bound((r as u128 / 2).pow(n + 1)));
    let small_r = match r {
        5 if z2hs => Some(bound(2u128.pow(n) + 1)),
        6 | 7 if z2hs => Some(bound(3u128.pow(n) + 1)),
        _ => None,
    };

    Ok(BoundReport {
        r,
        tetrahedra: n as usize,
        vertices: v as usize,
        betti1: b1,
        adm3: cocycles.len() as u64,
        naive: bound((r as u128 - 1).pow(n + v)),
        eq_long,
        eq_short,
        hom_sphere_bound,
        small_r,
        actual,
        nodes: stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{enumerate_census, CensusFilter};

    #[test]
    fn bounds_hold_on_census() {
        for tri in enumerate_census(2, &CensusFilter::default()).unwrap() {
            for r in 3..=7 {
                let rep = bounds(&tri, r).unwrap();
                assert!(rep.all_respected(), "{rep:?}");
                assert_eq!(rep.eq_long.is_some(), r == 4);
                if let (Some(long), Some(short)) = (rep.eq_long, rep.eq_short) {
                    if rep.adm3 > 1 {
                        assert!(long.value <= short.value, "{rep:?}");
                    }
                }
            }
        }
    }
}
