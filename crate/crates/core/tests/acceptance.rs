//! Acceptance suite. Runs every exit criterion and prints one line each:
//!
//! ```text
//! cargo test -p msp-core --test acceptance
//! ```
//!
//! Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use msp_core::uniqueness::followup_count;
use msp_core::{
    brute_force_vertex_cover, construct_witness, enumerate_all, extract_cover, is_unique,
    naive_score, reduce, rho1, rho2, score, score_pairs_excluding_perfect, verify, Code, Graph,
    MspInstance, Palette, Score, ScoredGuess, SolveMode, SolveOutcome, Solver, Variant,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 0x4d53_5021;

/// Every YES answer seen anywhere in the run, and how many of them verified.
static YES_ANSWERS: AtomicUsize = AtomicUsize::new(0);
static VERIFIED_YES: AtomicUsize = AtomicUsize::new(0);

fn record(instance: &MspInstance, outcome: &SolveOutcome) {
    if let Some(w) = &outcome.witness {
        YES_ANSWERS.fetch_add(1, Ordering::Relaxed);
        if verify(instance, w).unwrap_or(false) {
            VERIFIED_YES.fetch_add(1, Ordering::Relaxed);
        }
    }
}

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn tested_graphs() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(common::all_labeled_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    graphs.extend((0..200).map(|_| common::random_graph(&mut rng, 7)));
    graphs
}

#[derive(Default)]
struct RoundTrip {
    pairs: usize,
    standard_disagreements: usize,
    compact_pairs: usize,
    compact_disagreements: usize,
    variant_disagreements: usize,
    bad_extractions: usize,
    size_violations: usize,
}

impl RoundTrip {
    fn merge(mut self, o: RoundTrip) -> RoundTrip {
        self.pairs += o.pairs;
        self.standard_disagreements += o.standard_disagreements;
        self.compact_pairs += o.compact_pairs;
        self.compact_disagreements += o.compact_disagreements;
        self.variant_disagreements += o.variant_disagreements;
        self.bad_extractions += o.bad_extractions;
        self.size_violations += o.size_violations;
        self
    }
}

fn round_trip(graph: &Graph) -> RoundTrip {
    let solver = Solver::new(SolveMode::Backtrack);
    let (v, e) = (graph.vertex_count(), graph.edge_count());
    let mut stats = RoundTrip::default();
    for n in 1..=v {
        let expected = brute_force_vertex_cover(graph, n).unwrap();
        stats.pairs += 1;

        let mut run = |variant: Variant, len: usize| -> Option<bool> {
            let art = reduce(graph, n, variant).ok()?;
            let inst = &art.instance;
            if inst.kappa() as usize != v + e + 2
                || inst.length() != len
                || inst.guesses().len() != e + 3
            {
                stats.size_violations += 1;
            }
            let outcome = solver.solve(inst).unwrap();
            record(inst, &outcome);
            if let Some(w) = &outcome.witness {
                match extract_cover(&art, w) {
                    Ok(c) if c.len() == n && graph.is_vertex_cover(&c) => {}
                    _ => stats.bad_extractions += 1,
                }
            }
            Some(outcome.is_satisfiable())
        };

        let standard = run(Variant::Standard, 3 + 2 * v + e).expect("standard always applies");
        if standard != expected {
            stats.standard_disagreements += 1;
        }
        if let Some(compact) = run(Variant::Compact, 3 + v + e) {
            stats.compact_pairs += 1;
            if compact != expected {
                stats.compact_disagreements += 1;
            }
            if compact != standard {
                stats.variant_disagreements += 1;
            }
        }
    }
    stats
}

fn scorer_agreement() -> Verdict {
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    for kappa in 1..=3 {
        let palette = Palette::new(kappa).unwrap();
        for len in 1..=4 {
            let codes = common::all_codes(kappa, len);
            for x in &codes {
                for y in &codes {
                    checked += 1;
                    if score(x, y, &palette).unwrap() != naive_score(x, y, &palette).unwrap() {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let palette = Palette::new(10).unwrap();
    for _ in 0..10_000 {
        let x = common::random_code(&mut rng, 10, 10);
        let y = common::random_code(&mut rng, 10, 10);
        checked += 1;
        if score(&x, &y, &palette).unwrap() != naive_score(&x, &y, &palette).unwrap() {
            mismatches += 1;
        }
    }
    verdict(
        mismatches == 0,
        format!("{checked} pairs compared, {mismatches} mismatches"),
    )
}

fn metric_violations(x: &Code, y: &Code, z: &Code) -> usize {
    let d1 = |a: &Code, b: &Code| rho1(a, b).unwrap();
    let d2 = |a: &Code, b: &Code| rho2(&a.multiset(), &b.multiset()).unwrap();
    let mut bad = 0;
    for (d, same) in [
        (&d1 as &dyn Fn(&Code, &Code) -> usize, x == y),
        (&d2, x.multiset() == y.multiset()),
    ] {
        if d(x, x) != 0 {
            bad += 1;
        }
        if (d(x, y) == 0) != same {
            bad += 1;
        }
        if d(x, y) != d(y, x) {
            bad += 1;
        }
        if d(x, z) > d(x, y) + d(y, z) {
            bad += 1;
        }
    }
    bad
}

fn metric_laws() -> Verdict {
    let mut triples = 0usize;
    let mut violations = 0usize;
    for kappa in 1..=3 {
        for len in 1..=3 {
            let codes = common::all_codes(kappa, len);
            for x in &codes {
                for y in &codes {
                    for z in &codes {
                        triples += 1;
                        violations += metric_violations(x, y, z);
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for _ in 0..10_000 {
        let [x, y, z] = [(); 3].map(|_| common::random_code(&mut rng, 8, 8));
        triples += 1;
        violations += metric_violations(&x, &y, &z);
    }
    verdict(
        violations == 0,
        format!("{triples} triples, {violations} violations"),
    )
}

fn uniqueness_agreement() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let instances: Vec<MspInstance> = (0..500)
        .map(|_| common::random_instance(&mut rng, 3, 3, 2))
        .collect();
    let mut disagreements = 0;
    let mut bound_violations = 0;
    let mut unique_count = 0;
    let solver = Solver::new(SolveMode::Backtrack);
    for inst in &instances {
        let report = is_unique(inst).unwrap();
        record(inst, &solver.solve(inst).unwrap());
        let oracle = enumerate_all(inst, 2, SolveMode::Exhaustive).unwrap();
        if report.unique != (oracle.codes.len() == 1) {
            disagreements += 1;
        }
        if report.satisfiable != !oracle.codes.is_empty() {
            disagreements += 1;
        }
        let max = followup_count(inst.length());
        if report.followups_tried > max || (report.followups_tried == max) != report.unique {
            bound_violations += 1;
        }
        unique_count += usize::from(report.unique);
    }
    let bad_counts = (1..=50)
        .filter(|&len| {
            let pairs = score_pairs_excluding_perfect(len).unwrap();
            pairs.len() != len * (len + 3) / 2 || pairs.contains(&Score::new(len, 0))
        })
        .count();
    verdict(
        disagreements == 0 && bound_violations == 0 && bad_counts == 0,
        format!(
            "500 instances ({unique_count} unique), {disagreements} oracle disagreements, \
             {bound_violations} follow-up bound violations, {bad_counts} bad pair counts for len 1..=50"
        ),
    )
}

fn min_time(reps: usize, mut f: impl FnMut()) -> Duration {
    (0..reps)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .min()
        .unwrap()
}

fn polynomial_verification() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let check = |g: &Graph, cover: &BTreeSet<usize>| {
        let art = reduce(g, cover.len(), Variant::Standard).unwrap();
        let w = construct_witness(&art, cover).unwrap();
        (art, w)
    };

    let (g, cover) = common::planted_cover_graph(&mut rng, 200, 1000, 50);
    let (art, w) = check(&g, &cover);
    let mut valid = true;
    let headline = min_time(3, || valid &= verify(&art.instance, &w).unwrap());

    // (instance size = guesses * length, seconds)
    let mut points = Vec::new();
    for v in [50, 100, 200, 400] {
        let (g, cover) = common::planted_cover_graph(&mut rng, v, 5 * v, v / 4);
        let (art, w) = check(&g, &cover);
        let size = (art.instance.guesses().len() * art.instance.length()) as f64;
        let t = min_time(5, || valid &= verify(&art.instance, &w).unwrap());
        points.push((size, t.as_secs_f64().max(1e-9)));
    }
    // Least-squares slope of log(time) against log(size).
    let logs: Vec<(f64, f64)> = points.iter().map(|&(s, t)| (s.ln(), t.ln())).collect();
    let n = logs.len() as f64;
    let (mx, my) = (
        logs.iter().map(|p| p.0).sum::<f64>() / n,
        logs.iter().map(|p| p.1).sum::<f64>() / n,
    );
    let slope = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / logs.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    let (s0, t0) = points[0];
    let within_quadratic = points
        .iter()
        .all(|&(s, t)| t / t0 <= 2.0 * (s / s0).powi(2));

    verdict(
        valid && headline < Duration::from_secs(1) && slope <= 2.0 && within_quadratic,
        format!(
            "|V|=200 |E|=1000 n=50 verify in {:.3} ms; fitted exponent {slope:.2} over |V| in {{50,100,200,400}}",
            headline.as_secs_f64() * 1e3
        ),
    )
}

fn impossible_scores() -> Verdict {
    let mut instances = 0;
    let mut exceptions = 0;
    for kappa in 1..=3 {
        for len in 1..=4 {
            for g in common::all_codes(kappa, len) {
                let inst = MspInstance::new(
                    Palette::new(kappa).unwrap(),
                    len,
                    vec![ScoredGuess::new(g, Score::new(len - 1, 1))],
                )
                .unwrap();
                let outcome = Solver::new(SolveMode::Exhaustive).solve(&inst).unwrap();
                record(&inst, &outcome);
                instances += 1;
                if outcome.is_satisfiable() {
                    exceptions += 1;
                }
            }
        }
    }
    verdict(
        exceptions == 0,
        format!("{instances} single-guess instances, {exceptions} satisfiable"),
    )
}

fn main() {
    let started = Instant::now();
    let mut results: Vec<(&str, &str, Verdict)> = Vec::new();

    let graphs = tested_graphs();
    let t = Instant::now();
    let rt = graphs
        .par_iter()
        .map(round_trip)
        .reduce(RoundTrip::default, RoundTrip::merge);
    let rt_time = t.elapsed().as_secs_f64();

    results.push((
        "AC1",
        "reduction round-trip",
        verdict(
            rt.standard_disagreements == 0 && rt.bad_extractions == 0,
            format!(
                "{} graphs, {} (G,n) pairs, {} disagreements, {} bad extractions, {rt_time:.1}s",
                graphs.len(),
                rt.pairs,
                rt.standard_disagreements,
                rt.bad_extractions
            ),
        ),
    ));
    results.push((
        "AC2",
        "compact variant agreement",
        verdict(
            rt.compact_disagreements == 0 && rt.variant_disagreements == 0,
            format!(
                "{} (G,n) pairs, {} disagreements with brute force, {} with standard",
                rt.compact_pairs, rt.compact_disagreements, rt.variant_disagreements
            ),
        ),
    ));
    results.push((
        "AC3",
        "reduction size formulas",
        verdict(
            rt.size_violations == 0,
            format!(
                "{} instances checked, {} violations",
                rt.pairs + rt.compact_pairs,
                rt.size_violations
            ),
        ),
    ));
    results.push(("AC4", "scorer correctness", scorer_agreement()));
    results.push(("AC5", "metric laws", metric_laws()));
    results.push(("AC7", "uniqueness oracle agreement", uniqueness_agreement()));
    results.push(("AC8", "polynomial verification", polynomial_verification()));
    results.push(("AC9", "emergent score impossibility", impossible_scores()));

    let yes = YES_ANSWERS.load(Ordering::Relaxed);
    let ok = VERIFIED_YES.load(Ordering::Relaxed);
    results.push((
        "AC6",
        "witness soundness",
        verdict(yes == ok, format!("{ok}/{yes} YES witnesses verify")),
    ));
    results.sort_by_key(|r| r.0);

    let mut failed = 0;
    for (id, name, v) in &results {
        println!(
            "{} {id} {name}: {}",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        failed += usize::from(!v.pass);
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        results.len() - failed,
        results.len(),
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
