//! Cross-checks between independent computations on one input.

use std::collections::BTreeSet;

use tv_core::colourings::{
    checked_skeleton, enumerate_admissible, tetrahedron_weight, tv, tv_at_class, Filter,
};
use tv_core::cyclotomic::FieldContext;
use tv_core::fastalgo::{adm3, adm4_structured, bounds, tv4_structured, tv_odd_fast};
use tv_core::homology::{cocycle_space_1, is_cocycle, reduce_colouring, BitVec};
use tv_core::loopcoords::{decompose_symbol, intersection_symbol, tet_weight_loop, IntersectionSymbol};

use crate::{load, Failure, VerifyArgs};

struct Report {
    failures: usize,
}

impl Report {
    fn check(&mut self, name: &str, result: Result<String, String>) {
        match result {
            Ok(detail) => println!("ok    {name}: {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }

    fn skip(&self, name: &str, why: &str) {
        println!("skip  {name}: {why}");
    }
}

pub fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    let tri = load(&a.input)?;
    let (r, q) = (a.input.r, a.q);
    let ctx = FieldContext::new(r, q)?;
    let skel = checked_skeleton(&tri)?;
    let mut rep = Report { failures: 0 };

    let naive = tv(&tri, r, q)?;
    println!("TV_{{{r},{q}}} = {naive}");

    if r == 4 {
        let (fast, _) = tv4_structured(&tri, q)?;
        rep.check("tv4 algorithm", if fast == naive { Ok("equals naive sum".into()) } else { Err(format!("got {fast}")) });
        let (mut plain, _) = enumerate_admissible(&skel, 4, &Filter::All)?;
        plain.sort();
        let (structured, _) = adm4_structured(&tri)?;
        rep.check(
            "structured Adm(T,4)",
            if structured == plain {
                Ok(format!("{} colourings, same set as naive", plain.len()))
            } else {
                Err(format!("{} structured vs {} naive colourings", structured.len(), plain.len()))
            },
        );
    } else {
        rep.skip("tv4 algorithm", "r != 4");
    }

    if r % 2 == 1 && q == 1 && skel.num_vertices() == 1 {
        let (fast, _) = tv_odd_fast(&tri, r)?;
        rep.check("odd-r algorithm", if fast == naive { Ok("equals naive sum".into()) } else { Err(format!("got {fast}")) });
    } else {
        rep.skip("odd-r algorithm", "needs odd r, q = 1 and a one-vertex triangulation");
    }

    let space = cocycle_space_1(&skel)?;
    let b1 = space.betti1();
    let mut total = ctx.zero();
    for m in 0..1u64 << b1 {
        let class = BitVec::from_bools((0..b1).map(|k| m >> k & 1 == 1));
        total += &tv_at_class(&tri, r, q, &class)?;
    }
    rep.check(
        "class sum",
        if total == naive { Ok(format!("{} classes sum to the invariant", 1u64 << b1)) } else { Err(format!("sum is {total}")) },
    );

    let cocycles = adm3(&skel)?.len() as u64;
    let three = enumerate_admissible(&skel, 3, &Filter::All)?.0.len() as u64;
    let want = 1u64 << (skel.num_vertices() + b1 - 1);
    rep.check(
        "|Adm(T,3)|",
        if cocycles == want && three == want {
            Ok(format!("{want} = 2^(v + b1 - 1)"))
        } else {
            Err(format!("{three} colourings, {cocycles} cocycles, expected {want}"))
        },
    );

    let (colourings, _) = enumerate_admissible(&skel, r, &Filter::All)?;
    let bad = colourings
        .iter()
        .filter(|c| !reduce_colouring(&skel, c).is_ok_and(|z| is_cocycle(&skel, &z)))
        .count();
    rep.check(
        "cocycle reductions",
        if bad == 0 { Ok(format!("{} colourings reduce to cocycles", colourings.len())) } else { Err(format!("{bad} do not")) },
    );

    let symbols: BTreeSet<IntersectionSymbol> = colourings
        .iter()
        .flat_map(|c| (0..skel.num_tets()).map(|t| intersection_symbol(&skel, c, t)))
        .collect();
    let mut symbol_failures = 0;
    for &s in &symbols {
        let direct = tetrahedron_weight(&ctx, s.to_tet_colours())?;
        match decompose_symbol(s) {
            Ok(dec) => {
                let same = dec.reconstruct() == s && tet_weight_loop(&ctx, &dec) == direct;
                symbol_failures += !same as usize;
                println!(
                    "      {s} = {}a + {}b + {}c + {}d + {}*({},{}) rot {}: weight {}",
                    dec.a,
                    dec.b,
                    dec.c,
                    dec.d,
                    dec.p,
                    dec.i,
                    dec.j,
                    dec.rotation,
                    if same { "matches" } else { "DIFFERS" }
                );
            }
            Err(e) => {
                symbol_failures += 1;
                println!("      {s}: {e}");
            }
        }
    }
    rep.check(
        "loop coordinates",
        if symbol_failures == 0 {
            Ok(format!("{} distinct symbols decompose and weigh correctly", symbols.len()))
        } else {
            Err(format!("{symbol_failures} of {} symbols fail", symbols.len()))
        },
    );

    let b = bounds(&tri, r)?;
    rep.check(
        "bounds",
        if b.all_respected() { Ok(format!("{} admissible within every bound", b.actual)) } else { Err(format!("{b:?}")) },
    );

    if rep.failures > 0 {
        return Err(Failure::Verification(rep.failures));
    }
    println!("all checks passed");
    Ok(())
}
