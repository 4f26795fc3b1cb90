mod verify;

pub use verify::verify;

use std::io::{BufWriter, Write};
use std::time::Instant;

use serde::Serialize;

use tv_core::colourings::{checked_skeleton, state_sum, tv_with_stats, Enumerator, Filter, WeightSystem};
use tv_core::cyclotomic::{CycElement, FieldContext};
use tv_core::fastalgo::{tv4_structured, tv_odd_fast};
use tv_core::homology::{betti_z2, h1_integral, BitVec};
use tv_core::triangulation::{build_skeleton, enumerate_census, serialise_triangulation, CensusFilter};
use tv_core::EnumerationStats;

use crate::output::{colour, print_json, Counts};
use crate::{load, Algorithm, BoundsArgs, CensusArgs, ComputeArgs, EnumerateArgs, Failure};

fn parse_class(bits: &str) -> Result<BitVec, Failure> {
    if !bits.chars().all(|c| c == '0' || c == '1') {
        return Err(Failure::Usage(format!("--class expects a string of 0s and 1s, got {bits:?}")));
    }
    Ok(BitVec::from_bools(bits.chars().map(|c| c == '1')))
}

/// The algorithm `auto` resolves to, with a note when a faster one was
/// ruled out.
fn resolve(requested: Algorithm, r: u32, q: u32, vertices: usize) -> Algorithm {
    if requested != Algorithm::Auto {
        return requested;
    }
    if r == 4 {
        Algorithm::Tv4
    } else if r % 2 == 1 && q == 1 && vertices == 1 {
        Algorithm::OddFast
    } else {
        if r % 2 == 1 {
            eprintln!(
                "tv: note: the odd-r algorithm needs a one-vertex triangulation and q = 1 \
                 (crushing is not implemented); using the naive sum"
            );
        }
        Algorithm::Naive
    }
}

fn algorithm_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Auto => "auto",
        Algorithm::Naive => "naive",
        Algorithm::Tv4 => "tv4",
        Algorithm::OddFast => "odd-fast",
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ResultDocument {
    input: String,
    r: u32,
    q: u32,
    algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<String>,
    /// Coefficients in the basis 1, x, x², … with x = e^{iπ/r}.
    exact: CycElement,
    approx: String,
    counts: Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<f64>,
}

pub fn compute(a: &ComputeArgs) -> Result<(), Failure> {
    let tri = load(&a.input)?;
    let (r, q) = (a.input.r, a.q);
    let ctx = FieldContext::new(r, q)?;
    let skel = checked_skeleton(&tri)?;
    let start = Instant::now();

    let (algorithm, value, stats): (Algorithm, CycElement, EnumerationStats) = match &a.class {
        Some(bits) => {
            if !matches!(a.algorithm, Algorithm::Auto | Algorithm::Naive) {
                return Err(Failure::Usage("--class is only supported by the naive algorithm".into()));
            }
            let class = parse_class(bits)?;
            let (v, s) = state_sum(&skel, &WeightSystem::new(ctx.clone()), &Filter::Class(class))?;
            (Algorithm::Naive, v, s)
        }
        None => match resolve(a.algorithm, r, q, skel.num_vertices()) {
            Algorithm::Tv4 => {
                if r != 4 {
                    return Err(Failure::Usage(format!("the tv4 algorithm needs r = 4, got r = {r}")));
                }
                let (v, s) = tv4_structured(&tri, q)?;
                (Algorithm::Tv4, v, s)
            }
            Algorithm::OddFast => {
                if q != 1 {
                    return Err(Failure::Usage(format!("the odd-fast algorithm needs q = 1, got q = {q}")));
                }
                let (v, s) = tv_odd_fast(&tri, r)?;
                (Algorithm::OddFast, v, s)
            }
            _ => {
                let res = tv_with_stats(&tri, r, q)?;
                (Algorithm::Naive, res.value, res.stats)
            }
        },
    };
    let elapsed = start.elapsed();

    let doc = ResultDocument {
        input: a.input.file.display().to_string(),
        r,
        q,
        algorithm: algorithm_name(algorithm),
        class: a.class.clone(),
        approx: ctx.numeric_eval(&value).format(a.digits),
        exact: value,
        counts: stats.into(),
        wall_time_ms: a.timing.then_some(elapsed.as_secs_f64() * 1e3),
    };
    if a.json {
        print_json(&doc);
        return Ok(());
    }
    println!("input: {}", doc.input);
    println!("algorithm: {}", doc.algorithm);
    if let Some(c) = &doc.class {
        println!("class: {c}");
    }
    println!("TV_{{{r},{q}}} = {}    (x = exp(i pi/{r}))", doc.exact);
    println!("approx: {}", doc.approx);
    println!(
        "admissible: {}, nodes visited: {}, candidates: {}",
        doc.counts.admissible, doc.counts.nodes_visited, doc.counts.candidates
    );
    if let Some(ms) = doc.wall_time_ms {
        println!("wall time: {ms:.3} ms");
    }
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EnumerationDocument {
    r: u32,
    integer_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    colourings: Option<Vec<Vec<String>>>,
    counts: Counts,
}

pub fn enumerate(a: &EnumerateArgs) -> Result<(), Failure> {
    let tri = load(&a.input)?;
    let r = a.input.r;
    if r < 3 {
        return Err(Failure::Usage(format!("r must be at least 3, got {r}")));
    }
    let skel = checked_skeleton(&tri)?;
    let en = Enumerator::new(&skel, r);
    let render = |t: &[u32]| t.iter().map(|&d| colour(d)).collect::<Vec<_>>();

    if a.json {
        let mut list = Vec::new();
        let stats = en.for_each(a.integer_only, |t| {
            if !a.count_only {
                list.push(render(t));
            }
        });
        let doc = EnumerationDocument {
            r,
            integer_only: a.integer_only,
            colourings: (!a.count_only).then_some(list),
            counts: stats.into(),
        };
        print_json(&doc);
        return Ok(());
    }

    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut io_error = None;
    let stats = en.for_each(a.integer_only, |t| {
        if !a.count_only && io_error.is_none() {
            if let Err(e) = writeln!(out, "{}", render(t).join(" ")) {
                io_error = Some(e);
            }
        }
    });
    if let Some(e) = io_error {
        return Err(Failure::Runtime(e.to_string()));
    }
    writeln!(
        out,
        "# admissible: {}, nodes visited: {}, candidates: {}",
        stats.admissible_count, stats.nodes_visited, stats.candidates
    )
    .map_err(|e| Failure::Runtime(e.to_string()))?;
    Ok(())
}

pub fn bounds(a: &BoundsArgs) -> Result<(), Failure> {
    let tri = load(&a.input)?;
    let rep = tv_core::fastalgo::bounds(&tri, a.input.r)?;
    if a.json {
        print_json(&rep);
        return Ok(());
    }
    println!(
        "r = {}, tetrahedra = {}, vertices = {}, b1 = {}, |Adm(T,3)| = {}",
        rep.r, rep.tetrahedra, rep.vertices, rep.betti1, rep.adm3
    );
    println!("actual: {}", rep.actual);
    for (name, b) in rep.applicable() {
        println!("{name:<15} {:>12}{}", b.value, if b.sharp { "  sharp" } else { "" });
    }
    println!(
        "nodes visited: {}, candidates: {}",
        rep.nodes.nodes_visited, rep.nodes.candidates
    );
    Ok(())
}

pub fn census(a: &CensusArgs) -> Result<(), Failure> {
    let filter = CensusFilter { one_vertex: a.one_vertex, z2_homology_sphere: a.z2hs, betti1: None };
    let tris = enumerate_census(a.tets, &filter)?;
    std::fs::create_dir_all(&a.out).map_err(|e| Failure::Runtime(format!("{}: {e}", a.out.display())))?;
    let mut index = vec![0usize; a.tets + 1];
    for t in &tris {
        let n = t.size();
        let path = a.out.join(format!("n{n}_{:03}.tri", index[n]));
        index[n] += 1;
        std::fs::write(&path, serialise_triangulation(t))
            .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
        let skel = build_skeleton(t);
        println!(
            "{}\ttets={n} vertices={} b1={} H1={}",
            path.display(),
            skel.num_vertices(),
            betti_z2(&skel, 1),
            h1_integral(&skel)
        );
    }
    println!("# {} triangulations written to {}", tris.len(), a.out.display());
    Ok(())
}
