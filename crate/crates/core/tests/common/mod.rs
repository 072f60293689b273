#![allow(dead_code)]

use std::collections::BTreeSet;

use msp_core::{Code, Color, Graph, MspInstance, Palette, Score, ScoredGuess};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every simple graph on vertices `1..=v`, one per subset of the vertex pairs.
pub fn all_labeled_graphs(v: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=v)
        .flat_map(|a| (a + 1..=v).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(v, edges).unwrap()
        })
        .collect()
}

/// Random simple graph with `1..=max_v` vertices, a random edge density, and
/// shuffled edge order/orientation.
pub fn random_graph(rng: &mut impl Rng, max_v: usize) -> Graph {
    let v = rng.gen_range(1..=max_v);
    let p: f64 = rng.gen();
    let mut edges: Vec<(usize, usize)> = (1..=v)
        .flat_map(|a| (a + 1..=v).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect::<Vec<_>>();
    edges.shuffle(rng);
    for e in edges.iter_mut() {
        if rng.gen_bool(0.5) {
            *e = (e.1, e.0);
        }
    }
    Graph::new(v, edges).unwrap()
}

/// Graph on `v` vertices with about `e` edges, every edge touching a planted
/// cover of `n` vertices. Returns the graph and the planted cover.
pub fn planted_cover_graph(
    rng: &mut impl Rng,
    v: usize,
    e: usize,
    n: usize,
) -> (Graph, BTreeSet<usize>) {
    let mut vertices: Vec<usize> = (1..=v).collect();
    vertices.shuffle(rng);
    let cover: BTreeSet<usize> = vertices[..n].iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    while edges.len() < e {
        let a = vertices[rng.gen_range(0..n)];
        let b = rng.gen_range(1..=v);
        if a != b && seen.insert((a.min(b), a.max(b))) {
            edges.push((a, b));
        }
    }
    (Graph::new(v, edges).unwrap(), cover)
}

pub fn random_code(rng: &mut impl Rng, kappa: u32, len: usize) -> Code {
    Code::new((0..len).map(|_| rng.gen_range(1..=kappa)).collect()).unwrap()
}

/// Every code of length `len` over `1..=kappa`, in lexicographic order.
pub fn all_codes(kappa: u32, len: usize) -> Vec<Code> {
    let mut out = vec![Vec::<Color>::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=kappa).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|p| Code::new(p).unwrap()).collect()
}

/// A random declared score with `black + white <= len`.
pub fn random_score(rng: &mut impl Rng, len: usize) -> Score {
    let black = rng.gen_range(0..=len);
    let white = rng.gen_range(0..=len - black);
    Score::new(black, white)
}

/// Random instance with `kappa in 1..=max_kappa`, `len in 1..=max_len`, up to
/// `max_guesses` guesses. Half of the time the scores are taken from a hidden
/// code so that satisfiable instances are common.
pub fn random_instance(
    rng: &mut impl Rng,
    max_kappa: u32,
    max_len: usize,
    max_guesses: usize,
) -> MspInstance {
    let kappa = rng.gen_range(1..=max_kappa);
    let len = rng.gen_range(1..=max_len);
    let palette = Palette::new(kappa).unwrap();
    let hidden = rng.gen_bool(0.5).then(|| random_code(rng, kappa, len));
    let count = rng.gen_range(0..=max_guesses);
    let guesses = (0..count)
        .map(|_| {
            let guess = random_code(rng, kappa, len);
            let declared = match &hidden {
                Some(h) => msp_core::score(&guess, h, &palette).unwrap(),
                None => random_score(rng, len),
            };
            ScoredGuess::new(guess, declared)
        })
        .collect();
    MspInstance::new(palette, len, guesses).unwrap()
}
