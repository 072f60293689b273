//! Polynomial reduction from vertex cover to Mastermind satisfiability.
//!
//! Every vertex and every edge becomes a color, plus two control colors:
//! `Y` (fills the first three pegs and pads) and `N` (banned). For a graph
//! `G = (V, E)` and cover size `n` the instance has
//! `kappa = |V| + |E| + 2` and, in order, the guesses
//!
//! 1. `(N, ..., N)` scored `(0, 0)`;
//! 2. `(Y, Y, Y, N, ..., N)` scored `(3, 0)`;
//! 3. for the i-th edge `(a, b)`: `(e_i, a, b, N, ..., N)` scored `(0, 2)`;
//! 4. `(Y, Y, Y, v_1, ..., v_|V|, N, ..., N)` scored `(3, n)`.
//!
//! Codes are laid out as `[3 control | vertex region | edge region]`. The
//! standard layout has a vertex region of `2|V|` pegs (the first `|V|` are
//! always `Y`, so no cover vertex can collide with its slot in guess 4); the
//! compact layout keeps only `|V|` pegs and places the cover vertices by a
//! cyclic shift so that none sits on its own guess-4 slot.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{MspInstance, ScoredGuess};
use crate::score::{Code, Color, Palette, Score};
use crate::solver::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// Code length `3 + 2|V| + |E|`.
    #[default]
    Standard,
    /// Code length `3 + |V| + |E|`; needs `n != |V|` or `n > 1`.
    Compact,
}

/// Integer encoding of the reduction's colors: vertices `1..=|V|`, edges
/// `|V|+1..=|V|+|E|` in input order, then `Y`, then `N = kappa`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorMap {
    vertices: usize,
    edges: usize,
}

impl ColorMap {
    pub fn for_graph(graph: &Graph) -> Self {
        ColorMap {
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
        }
    }

    /// Color of vertex `v` (1-based).
    pub fn vertex_color(&self, v: usize) -> Color {
        debug_assert!((1..=self.vertices).contains(&v));
        v as Color
    }

    /// Color of the i-th edge (1-based).
    pub fn edge_color(&self, i: usize) -> Color {
        debug_assert!((1..=self.edges).contains(&i));
        (self.vertices + i) as Color
    }

    pub fn yes_color(&self) -> Color {
        (self.vertices + self.edges + 1) as Color
    }

    pub fn no_color(&self) -> Color {
        (self.vertices + self.edges + 2) as Color
    }

    pub fn kappa(&self) -> u32 {
        self.no_color()
    }

    /// The vertex a color stands for, if any.
    pub fn vertex_of(&self, color: Color) -> Option<usize> {
        let c = color as usize;
        (1..=self.vertices).contains(&c).then_some(c)
    }
}

/// A reduced instance plus everything needed to map witnesses back and forth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub instance: MspInstance,
    pub colors: ColorMap,
    pub source: Graph,
    pub cover_size: usize,
    pub variant: Variant,
}

impl ReductionArtifact {
    /// Index (0-based) of the first peg of the region holding cover vertices.
    fn cover_region_start(&self) -> usize {
        match self.variant {
            Variant::Standard => 3 + self.source.vertex_count(),
            Variant::Compact => 3,
        }
    }

    fn edge_region_start(&self) -> usize {
        self.cover_region_start() + self.source.vertex_count()
    }
}

/// Code length of the reduced instance.
pub fn reduced_length(graph: &Graph, variant: Variant) -> usize {
    let v = graph.vertex_count();
    let vertex_region = match variant {
        Variant::Standard => 2 * v,
        Variant::Compact => v,
    };
    3 + vertex_region + graph.edge_count()
}

/// Builds the MSP instance that is satisfiable iff `graph` has an `n`-vertex cover.
pub fn reduce(graph: &Graph, n: usize, variant: Variant) -> Result<ReductionArtifact> {
    let v = graph.vertex_count();
    if n == 0 || n > v {
        return Err(Error::invalid(format!("cover size {n} outside 1..={v}")));
    }
    if variant == Variant::Compact && n == v && n == 1 {
        return Err(Error::Precondition(
            "compact reduction requires n != |V| or n > 1 (no cover vertex can avoid its own slot)"
                .into(),
        ));
    }

    let colors = ColorMap::for_graph(graph);
    let len = reduced_length(graph, variant);
    let (y, no) = (colors.yes_color(), colors.no_color());
    let mut guesses = Vec::with_capacity(graph.edge_count() + 3);
    let mut push = |pegs: Vec<Color>, black, white| {
        let code = Code::new(pegs).expect("reduction colors are nonzero");
        guesses.push(ScoredGuess::new(code, Score::new(black, white)));
    };

    push(vec![no; len], 0, 0);

    let mut control = vec![no; len];
    control[..3].fill(y);
    push(control, 3, 0);

    for (i, &(a, b)) in graph.edges().iter().enumerate() {
        let mut pegs = vec![no; len];
        pegs[0] = colors.edge_color(i + 1);
        pegs[1] = colors.vertex_color(a);
        pegs[2] = colors.vertex_color(b);
        push(pegs, 0, 2);
    }

    let mut selector = vec![no; len];
    selector[..3].fill(y);
    for vertex in graph.vertices() {
        selector[2 + vertex] = colors.vertex_color(vertex);
    }
    push(selector, 3, n);

    let instance = MspInstance::new(Palette::new(colors.kappa())?, len, guesses)?;
    Ok(ReductionArtifact {
        instance,
        colors,
        source: graph.clone(),
        cover_size: n,
        variant,
    })
}

/// Maps a verified witness back to the set of vertices whose colors it uses.
pub fn extract_cover(artifact: &ReductionArtifact, witness: &Code) -> Result<BTreeSet<usize>> {
    if !verify(&artifact.instance, witness)? {
        return Err(Error::invalid(
            "witness does not satisfy the reduced instance",
        ));
    }
    let cover: BTreeSet<usize> = witness
        .pegs()
        .iter()
        .filter_map(|&c| artifact.colors.vertex_of(c))
        .collect();
    debug_assert_eq!(cover.len(), artifact.cover_size);
    debug_assert!(artifact.source.is_vertex_cover(&cover));
    Ok(cover)
}

/// Builds a witness for the reduced instance from an `n`-vertex cover.
pub fn construct_witness(artifact: &ReductionArtifact, cover: &BTreeSet<usize>) -> Result<Code> {
    let graph = &artifact.source;
    let v = graph.vertex_count();
    if cover.len() != artifact.cover_size {
        return Err(Error::invalid(format!(
            "cover has {} vertices, reduction expects {}",
            cover.len(),
            artifact.cover_size
        )));
    }
    if let Some(bad) = cover.iter().find(|&&u| u == 0 || u > v) {
        return Err(Error::invalid(format!("vertex {bad} outside 1..={v}")));
    }
    if let Some((a, b)) = graph
        .edges()
        .iter()
        .find(|(a, b)| !cover.contains(a) && !cover.contains(b))
    {
        return Err(Error::invalid(format!("edge ({a},{b}) is not covered")));
    }

    let colors = &artifact.colors;
    let mut pegs = vec![colors.yes_color(); artifact.instance.length()];

    let region = artifact.cover_region_start();
    let members: Vec<usize> = cover.iter().copied().collect();
    match artifact.variant {
        Variant::Standard => {
            for (offset, &u) in members.iter().enumerate() {
                pegs[region + offset] = colors.vertex_color(u);
            }
        }
        Variant::Compact => {
            // Peg region + s - 1 is vertex s's slot in guess 4; rotate each
            // member onto the next member's slot.
            let n = members.len();
            for (j, &u) in members.iter().enumerate() {
                let slot = if n > 1 {
                    members[(j + 1) % n]
                } else {
                    u % v + 1
                };
                pegs[region + slot - 1] = colors.vertex_color(u);
            }
        }
    }

    let single = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, (a, b))| cover.contains(a) != cover.contains(b));
    for (offset, (i, _)) in single.enumerate() {
        pegs[artifact.edge_region_start() + offset] = colors.edge_color(i + 1);
    }

    Ok(Code::new(pegs).expect("reduction colors are nonzero"))
}
