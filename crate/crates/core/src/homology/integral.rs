use num_integer::Integer;
use serde::Serialize;

use crate::triangulation::{edge_index, Skeleton};

/// H₁(𝔗; Z) ≅ Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k with t₁ | t₂ | … | t_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralH1 {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl IntegralH1 {
    pub fn is_sphere(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Dimension of H₁ with Z₂ coefficients predicted by universal coefficients.
    pub fn z2_dimension(&self) -> usize {
        self.rank + self.torsion.iter().filter(|&&t| t % 2 == 0).count()
    }
}

impl std::fmt::Display for IntegralH1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

type Matrix = Vec<Vec<i128>>;

fn signed_d1(skel: &Skeleton) -> Matrix {
    let mut m = vec![vec![0i128; skel.num_edges()]; skel.num_vertices()];
    for (e, class) in skel.edges.iter().enumerate() {
        m[class.ends[1]][e] += 1;
        m[class.ends[0]][e] -= 1;
    }
    m
}

fn signed_d2(skel: &Skeleton) -> Matrix {
    let mut m = vec![vec![0i128; skel.num_triangles()]; skel.num_edges()];
    for (f, class) in skel.triangles.iter().enumerate() {
        let (t, face) = class.embeddings[0];
        let v: Vec<usize> = (0..4).filter(|&k| k != face).collect();
        for (u, w, sign) in [(v[1], v[2], 1), (v[0], v[2], -1), (v[0], v[1], 1)] {
            let e = edge_index(u, w);
            let s = if skel.edge_reversed(t, e) { -sign } else { sign };
            m[skel.tet_edges(t)[e]][f] += s;
        }
    }
    m
}

/// Nonzero diagonal of a Smith normal form, normalised to a divisibility chain.
fn smith_diagonal(mut a: Matrix) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t];
        let mut clean = true;
        for i in t + 1..rows {
            let q = Integer::div_floor(&a[i][t], &p);
            if q != 0 {
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = Integer::div_floor(&a[t][j], &p);
            if q != 0 {
                for row in a.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if clean {
            diag.push(p.abs());
            t += 1;
        }
    }
    // Turn an arbitrary diagonal into invariant factors.
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// H₁ over the integers from the Smith normal forms of the signed boundary maps.
pub fn h1_integral(skel: &Skeleton) -> IntegralH1 {
    let rank_d1 = smith_diagonal(signed_d1(skel)).len();
    let d2 = smith_diagonal(signed_d2(skel));
    let rank = skel.num_edges() - rank_d1 - d2.len();
    let torsion = d2.into_iter().filter(|&d| d > 1).map(|d| d as u64).collect();
    IntegralH1 { rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::betti_z2;
    use crate::triangulation::{build_skeleton, enumerate_census, CensusFilter};

    #[test]
    fn smith_of_small_matrices() {
        assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_diagonal(vec![vec![4, 6]]), vec![2]);
        assert_eq!(smith_diagonal(vec![vec![0, 0]]), Vec::<i128>::new());
    }

    #[test]
    fn consistent_with_z2_betti_numbers() {
        let census = enumerate_census(2, &CensusFilter::default()).unwrap();
        let mut spheres = 0;
        for tri in &census {
            let s = build_skeleton(tri);
            let h = h1_integral(&s);
            assert_eq!(h.z2_dimension(), betti_z2(&s, 1), "{h}");
            // The product of the two signed boundary maps vanishes.
            let (d1, d2) = (signed_d1(&s), signed_d2(&s));
            for row in &d1 {
                for f in 0..s.num_triangles() {
                    let dot: i128 = row.iter().zip(&d2).map(|(a, col)| a * col[f]).sum();
                    assert_eq!(dot, 0);
                }
            }
            spheres += h.is_sphere() as usize;
        }
        assert!(spheres > 0);
    }
}
