use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

/// Largest vertex count the brute-force cover search accepts.
pub const BRUTE_FORCE_VERTEX_CAP: usize = 20;

/// A simple undirected graph on vertices `1..=vertex_count`.
///
/// Edges keep their input order and orientation; that order fixes the edge
/// color numbering in the reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            let in_range = |v: usize| (1..=vertex_count).contains(&v);
            if !in_range(a) || !in_range(b) {
                return Err(Error::invalid(format!(
                    "edge {} ({a},{b}) has an endpoint outside 1..={vertex_count}",
                    i + 1
                )));
            }
            if a == b {
                return Err(Error::invalid(format!(
                    "edge {} is a self-loop on {a}",
                    i + 1
                )));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::invalid(format!(
                    "edge {} ({a},{b}) is a duplicate",
                    i + 1
                )));
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.vertex_count
    }

    pub fn is_vertex_cover(&self, cover: &BTreeSet<usize>) -> bool {
        self.edges
            .iter()
            .all(|(a, b)| cover.contains(a) || cover.contains(b))
    }

    /// Every vertex cover of exactly `n` vertices, found by subset enumeration.
    /// Covers come out in increasing bitmask order.
    pub fn vertex_covers_of_size(&self, n: usize) -> Result<Vec<BTreeSet<usize>>> {
        self.check_brute_force(n)?;
        let masks: Vec<u32> = self
            .edges
            .iter()
            .map(|&(a, b)| (1u32 << (a - 1)) | (1u32 << (b - 1)))
            .collect();
        let covers = (0u32..1 << self.vertex_count)
            .filter(|subset| subset.count_ones() as usize == n)
            .filter(|subset| masks.iter().all(|m| m & subset != 0))
            .map(|subset| {
                self.vertices()
                    .filter(|v| subset & (1 << (v - 1)) != 0)
                    .collect()
            })
            .collect();
        Ok(covers)
    }

    fn check_brute_force(&self, n: usize) -> Result<()> {
        if self.vertex_count > BRUTE_FORCE_VERTEX_CAP {
            return Err(Error::ResourceLimit(format!(
                "brute-force cover search is capped at {BRUTE_FORCE_VERTEX_CAP} vertices, graph has {}",
                self.vertex_count
            )));
        }
        if n == 0 || n > self.vertex_count {
            return Err(Error::invalid(format!(
                "cover size {n} outside 1..={}",
                self.vertex_count
            )));
        }
        Ok(())
    }
}

/// Does `graph` have a vertex cover of exactly `n` vertices? Exhaustive.
pub fn brute_force_vertex_cover(graph: &Graph, n: usize) -> Result<bool> {
    graph.check_brute_force(n)?;
    let masks: Vec<u32> = graph
        .edges
        .iter()
        .map(|&(a, b)| (1u32 << (a - 1)) | (1u32 << (b - 1)))
        .collect();
    Ok((0u32..1 << graph.vertex_count)
        .filter(|subset| subset.count_ones() as usize == n)
        .any(|subset| masks.iter().all(|m| m & subset != 0)))
}
