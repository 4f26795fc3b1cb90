use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use tv_core::colourings::{
    count_admissible, enumerate_admissible, is_admissible, state_sum, tv, tv_at_class, Colouring, Filter,
    WeightSystem,
};
use tv_core::cyclotomic::FieldContext;
use tv_core::fastalgo::{adm3_certificate, adm4_structured, bounds};
use tv_core::homology::{cocycle_space_1, is_cocycle, reduce_colouring, BitVec};
use tv_core::loopcoords::{balanced_row, decompose_symbol, IntersectionSymbol, VERTEX_LOOPS};
use tv_core::triangulation::{
    build_skeleton, canonical_key, enumerate_census, parse_triangulation, serialise_triangulation, CensusFilter,
    Perm4, Triangulation,
};

mod common;

fn census() -> Vec<Triangulation> {
    enumerate_census(2, &CensusFilter::default()).unwrap()
}

/// All coordinate vectors of length `len`.
fn all_classes(len: usize) -> Vec<BitVec> {
    (0..1u32 << len).map(|m| BitVec::from_bools((0..len).map(|k| m >> k & 1 == 1))).collect()
}

#[test]
fn class_sums_add_up_to_the_invariant() {
    for t in census() {
        let skel = build_skeleton(&t);
        let b1 = cocycle_space_1(&skel).unwrap().betti1();
        for (r, q) in [(3, 1), (4, 1), (5, 1), (5, 3), (6, 1)] {
            let ctx = FieldContext::new(r, q).unwrap();
            let total = all_classes(b1)
                .iter()
                .fold(ctx.zero(), |acc, c| &acc + &tv_at_class(&t, r, q, c).unwrap());
            assert_eq!(total, tv(&t, r, q).unwrap(), "r={r} q={q}");
        }
    }
}

#[test]
fn admissible_colourings_reduce_to_cocycles() {
    for t in census() {
        let skel = build_skeleton(&t);
        for r in 3..=6 {
            for c in enumerate_admissible(&skel, r, &Filter::All).unwrap().0 {
                assert!(is_cocycle(&skel, &reduce_colouring(&skel, &c).unwrap()));
            }
        }
    }
}

#[test]
fn adm3_certificate_has_the_predicted_size() {
    for t in census() {
        let skel = build_skeleton(&t);
        let cert = adm3_certificate(&skel).unwrap();
        let b1 = cocycle_space_1(&skel).unwrap().betti1();
        assert_eq!(cert.colourings.len(), 1 << (skel.num_vertices() + b1 - 1));
        for (c, ker) in cert.colourings.iter().zip(&cert.kernels) {
            assert!(is_admissible(&skel, 3, &Colouring { doubled: c.clone() }));
            assert_eq!(ker.len(), c.iter().filter(|&&x| x == 0).count());
        }
    }
}

#[test]
fn structured_adm4_on_random_three_tetrahedra() {
    let sample = common::random_sample(&mut StdRng::seed_from_u64(41), 3, 40);
    for t in &sample {
        let skel = build_skeleton(t);
        let (mut naive, _) = enumerate_admissible(&skel, 4, &Filter::All).unwrap();
        naive.sort();
        let (fast, stats) = adm4_structured(t).unwrap();
        assert_eq!(fast, naive);
        let long = bounds(t, 4).unwrap().eq_long.unwrap().value;
        assert!(stats.candidates as u128 <= long);
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let t = &census()[7];
    let skel = build_skeleton(t);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let ws = WeightSystem::new(FieldContext::new(6, 1).unwrap());
            state_sum(&skel, &ws, &Filter::All).unwrap()
        })
    };
    let one = run(1);
    for threads in [2, 5] {
        assert_eq!(run(threads), one);
    }
}

#[test]
fn integer_only_never_visits_more_nodes() {
    for t in census() {
        let skel = build_skeleton(&t);
        for r in 3..=7 {
            let full = count_admissible(&skel, r, &Filter::All).unwrap();
            let int = count_admissible(&skel, r, &Filter::IntegerOnly).unwrap();
            assert!(int.nodes_visited <= full.nodes_visited);
            assert!(int.admissible_count <= full.admissible_count);
        }
    }
}

fn relabelling() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0..21usize, Just((0..2).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(0..24usize, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariant_under_relabelling((index, order, perms) in relabelling(), r in 3u32..=6) {
        let census = census();
        let t = &census[index];
        let n = t.size();
        let tets: Vec<usize> = if n == 2 { order } else { vec![0] };
        let verts: Vec<Perm4> = perms[..n].iter().map(|&k| Perm4::all()[k]).collect();
        let u = t.relabel(&tets, &verts);
        prop_assert_eq!(canonical_key(&u), canonical_key(t));
        prop_assert_eq!(tv(&u, r, 1).unwrap(), tv(t, r, 1).unwrap());
        prop_assert_eq!(
            count_admissible(&build_skeleton(&u), r, &Filter::All).unwrap().admissible_count,
            count_admissible(&build_skeleton(t), r, &Filter::All).unwrap().admissible_count
        );
    }

    #[test]
    fn gluing_tables_round_trip(index in 0..21usize) {
        let t = &census()[index];
        let text = serialise_triangulation(t);
        prop_assert_eq!(&parse_triangulation(&text).unwrap(), t);
    }

    #[test]
    fn decomposition_recovers_loop_counts(
        counts in proptest::array::uniform4(0u32..6),
        p in 0u32..4,
        i in 0u32..4,
        j in 0u32..4,
        rotation in 0u8..3,
    ) {
        let (i, j) = if p == 0 { (0, 0) } else { (i, j) };
        prop_assume!(p == 0 || num_integer::gcd(i, j) == 1);
        let mut m = [[0u32; 3]; 2];
        for (count, l) in counts.into_iter().zip(VERTEX_LOOPS) {
            for row in 0..2 {
                for col in 0..3 {
                    m[row][col] += count * l[row][col];
                }
            }
        }
        let bal = balanced_row(i, j, rotation);
        for row in &mut m {
            for col in 0..3 {
                row[col] += p * bal[col];
            }
        }
        let s = IntersectionSymbol(m);
        prop_assert!(s.is_balanced());
        let dec = decompose_symbol(s).unwrap();
        prop_assert_eq!(dec.reconstruct(), s);
        prop_assert_eq!([dec.a, dec.b, dec.c, dec.d], counts);
        prop_assert_eq!(dec.p, p);
    }
}
