//! Depth-first search over positions `1..=len` in order, trying colors in
//! ascending order, so the first solution reached is the lexicographically
//! smallest one.
//!
//! Pruning at every node, all forced by the score definition:
//!
//! * black counts: a guess may never exceed its declared black count, and the
//!   open positions whose guess peg is still placeable must be able to make it
//!   up. Once a guess's black count is met, its peg is removed from every open
//!   position; when the open matching positions are exactly enough, they are
//!   forced.
//! * color totals: `sum_j min(guess_j, code_j)` only grows as pegs are placed.
//!   Once a guess reaches its declared total, every color that would raise it
//!   is banned everywhere (a `w = 0` guess therefore bans all its colors up
//!   front). The total must also stay reachable from the colors still
//!   available in open positions.
//! * swaps (optional): for positions `i < j`, if exchanging the pegs at `i`
//!   and `j` provably leaves every score unchanged and would make the code
//!   smaller, the current code is not the lexicographically smallest solution
//!   and is skipped. The smallest solution is never skipped, so first-solution
//!   search stays exact; full enumeration must run without this rule.
//!
//! Subtrees that produced no solution are remembered by a canonical state key
//! (depth, black counts, color counts capped at the largest count any guess
//! uses, pending swap exclusions). Every later check depends only on that key,
//! so a repeated key can be skipped.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::instance::MspInstance;
use crate::score::Color;

#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchConfig {
    pub symmetry: bool,
    pub memo_limit: usize,
}

#[derive(Debug, Clone, Copy, Default)]
struct Flow {
    found: bool,
    stop: bool,
}

pub(crate) struct Search {
    kappa: usize,
    len: usize,
    /// Guess pegs as 0-based color indices.
    guess_pegs: Vec<Vec<usize>>,
    guess_counts: Vec<Vec<usize>>,
    count_cap: Vec<usize>,
    target_black: Vec<usize>,
    target_total: Vec<usize>,
    /// `blockers[i * len + j]` for `i < j`: colors that make a swap of
    /// positions `i` and `j` score-visible. Empty when symmetry is off.
    blockers: Vec<FixedBitSet>,
    symmetry: bool,
    failed: HashSet<Box<[usize]>>,
    memo_limit: usize,
    assignment: Vec<usize>,
    black: Vec<usize>,
    counts: Vec<usize>,
    total: Vec<usize>,
}

impl Search {
    pub fn new(instance: &MspInstance, config: SearchConfig) -> Self {
        let kappa = instance.kappa() as usize;
        let len = instance.length();
        let guesses = instance.guesses();

        let guess_pegs: Vec<Vec<usize>> = guesses
            .iter()
            .map(|g| g.guess.pegs().iter().map(|&c| c as usize - 1).collect())
            .collect();
        let guess_counts: Vec<Vec<usize>> = guess_pegs
            .iter()
            .map(|pegs| {
                let mut counts = vec![0; kappa];
                for &c in pegs {
                    counts[c] += 1;
                }
                counts
            })
            .collect();
        let mut count_cap = vec![0; kappa];
        for counts in &guess_counts {
            for (cap, &n) in count_cap.iter_mut().zip(counts) {
                *cap = (*cap).max(n);
            }
        }

        let mut blockers = Vec::new();
        if config.symmetry {
            blockers = vec![FixedBitSet::with_capacity(kappa); len * len];
            for i in 0..len {
                for j in i + 1..len {
                    let set = &mut blockers[i * len + j];
                    for pegs in &guess_pegs {
                        if pegs[i] != pegs[j] {
                            set.insert(pegs[i]);
                            set.insert(pegs[j]);
                        }
                    }
                }
            }
        }

        Search {
            kappa,
            len,
            target_black: guesses.iter().map(|g| g.declared.black).collect(),
            target_total: guesses.iter().map(|g| g.declared.total()).collect(),
            black: vec![0; guesses.len()],
            total: vec![0; guesses.len()],
            counts: vec![0; kappa],
            assignment: Vec::with_capacity(len),
            guess_pegs,
            guess_counts,
            count_cap,
            blockers,
            symmetry: config.symmetry,
            failed: HashSet::new(),
            memo_limit: config.memo_limit,
        }
    }

    /// Lexicographically smallest solution whose leading pegs equal `prefix`.
    pub fn first_with_prefix(&mut self, prefix: &[Color]) -> Option<Vec<Color>> {
        let mut out = None;
        self.run(prefix, &mut |code| {
            out = Some(code.to_vec());
            true
        });
        out
    }

    pub fn first(&mut self) -> Option<Vec<Color>> {
        self.first_with_prefix(&[])
    }

    /// Feeds solutions in lexicographic order to `sink` until it returns `true`.
    pub fn for_each(&mut self, sink: &mut dyn FnMut(&[Color]) -> bool) {
        self.run(&[], sink)
    }

    fn run(&mut self, prefix: &[Color], sink: &mut dyn FnMut(&[Color]) -> bool) {
        debug_assert!(self.assignment.is_empty());
        let mut excl = vec![FixedBitSet::with_capacity(self.kappa); self.len];
        let mut placed = 0;
        let mut ok = prefix.len() <= self.len;
        for &color in prefix.iter().take(self.len) {
            let c = color as usize;
            if color == 0 || c > self.kappa || excl[0].contains(c - 1) {
                ok = false;
                break;
            }
            self.assign(c - 1);
            placed += 1;
            if self.overflows() {
                ok = false;
                break;
            }
            excl = self.child_exclusions(placed - 1, c - 1, &excl);
        }

        if ok {
            let mut emit = |code: &[usize]| {
                let colors: Vec<Color> = code.iter().map(|&c| c as Color + 1).collect();
                sink(&colors)
            };
            self.descend(placed, &excl, &mut emit);
        }

        while placed > 0 {
            self.unassign();
            placed -= 1;
        }
    }

    fn assign(&mut self, c: usize) {
        let pos = self.assignment.len();
        for k in 0..self.guess_pegs.len() {
            if self.guess_pegs[k][pos] == c {
                self.black[k] += 1;
            }
            if self.counts[c] < self.guess_counts[k][c] {
                self.total[k] += 1;
            }
        }
        self.counts[c] += 1;
        self.assignment.push(c);
    }

    fn unassign(&mut self) {
        let c = self.assignment.pop().expect("unassign on empty assignment");
        let pos = self.assignment.len();
        self.counts[c] -= 1;
        for k in 0..self.guess_pegs.len() {
            if self.guess_pegs[k][pos] == c {
                self.black[k] -= 1;
            }
            if self.counts[c] < self.guess_counts[k][c] {
                self.total[k] -= 1;
            }
        }
    }

    fn overflows(&self) -> bool {
        (0..self.guess_pegs.len())
            .any(|k| self.black[k] > self.target_black[k] || self.total[k] > self.target_total[k])
    }

    /// Exclusions for positions after `pos` once `pos` holds `c`.
    /// `excl` is indexed from `pos`; the result is indexed from `pos + 1`.
    fn child_exclusions(&self, pos: usize, c: usize, excl: &[FixedBitSet]) -> Vec<FixedBitSet> {
        let mut child: Vec<FixedBitSet> = excl[1..].to_vec();
        if !self.symmetry || c == 0 {
            return child;
        }
        for (offset, set) in child.iter_mut().enumerate() {
            let j = pos + 1 + offset;
            let blocked = &self.blockers[pos * self.len + j];
            if blocked.contains(c) {
                continue;
            }
            for smaller in 0..c {
                if !blocked.contains(smaller) {
                    set.insert(smaller);
                }
            }
        }
        child
    }

    fn state_key(&self, depth: usize, excl: &[FixedBitSet]) -> Box<[usize]> {
        let mut key = Vec::with_capacity(1 + self.black.len() + self.kappa + excl.len());
        key.push(depth);
        key.extend_from_slice(&self.black);
        key.extend(
            self.counts
                .iter()
                .zip(&self.count_cap)
                .map(|(&n, &cap)| n.min(cap)),
        );
        if self.symmetry {
            for set in excl {
                key.extend_from_slice(set.as_slice());
            }
        }
        key.into_boxed_slice()
    }

    /// Domains for open positions `depth..len`, or `None` if the node is dead.
    fn propagate(&self, depth: usize, excl: &[FixedBitSet]) -> Option<Vec<FixedBitSet>> {
        let guesses = self.guess_pegs.len();
        let mut banned = FixedBitSet::with_capacity(self.kappa);
        for k in 0..guesses {
            if self.black[k] > self.target_black[k] || self.total[k] > self.target_total[k] {
                return None;
            }
            if self.total[k] == self.target_total[k] {
                for c in 0..self.kappa {
                    if self.counts[c] < self.guess_counts[k][c] {
                        banned.insert(c);
                    }
                }
            }
        }

        let mut domains: Vec<FixedBitSet> = (depth..self.len)
            .map(|pos| {
                let mut dom = FixedBitSet::with_capacity(self.kappa);
                dom.insert_range(..);
                dom.difference_with(&banned);
                dom.difference_with(&excl[pos - depth]);
                for k in 0..guesses {
                    if self.black[k] == self.target_black[k] {
                        dom.remove(self.guess_pegs[k][pos]);
                    }
                }
                dom
            })
            .collect();

        loop {
            let mut changed = false;
            for k in 0..guesses {
                let need = self.target_black[k] - self.black[k];
                if need == 0 {
                    continue;
                }
                let pegs = &self.guess_pegs[k];
                let possible = (depth..self.len)
                    .filter(|&pos| domains[pos - depth].contains(pegs[pos]))
                    .count();
                if possible < need {
                    return None;
                }
                if possible == need {
                    for pos in depth..self.len {
                        let dom = &mut domains[pos - depth];
                        if dom.contains(pegs[pos]) && dom.count_ones(..) > 1 {
                            dom.clear();
                            dom.insert(pegs[pos]);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }

        let mut available = FixedBitSet::with_capacity(self.kappa);
        for dom in &domains {
            if dom.is_clear() {
                return None;
            }
            available.union_with(dom);
        }

        let open = self.len - depth;
        for k in 0..guesses {
            let need = self.target_total[k] - self.total[k];
            if need == 0 {
                continue;
            }
            let gap: usize = available
                .ones()
                .map(|c| self.guess_counts[k][c].saturating_sub(self.counts[c]))
                .sum();
            if gap.min(open) < need {
                return None;
            }
        }

        Some(domains)
    }

    fn descend(
        &mut self,
        depth: usize,
        excl: &[FixedBitSet],
        sink: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Flow {
        if depth == self.len {
            let exact = self.black == self.target_black && self.total == self.target_total;
            if !exact {
                return Flow::default();
            }
            return Flow {
                found: true,
                stop: sink(&self.assignment),
            };
        }

        let key = self.state_key(depth, excl);
        if self.failed.contains(&key) {
            return Flow::default();
        }

        let mut flow = Flow::default();
        if let Some(domains) = self.propagate(depth, excl) {
            for c in domains[0].ones() {
                self.assign(c);
                if !self.overflows() {
                    let child = self.child_exclusions(depth, c, excl);
                    let sub = self.descend(depth + 1, &child, sink);
                    flow.found |= sub.found;
                    flow.stop = sub.stop;
                }
                self.unassign();
                if flow.stop {
                    return flow;
                }
            }
        }

        if !flow.found && self.failed.len() < self.memo_limit {
            self.failed.insert(key);
        }
        flow
    }
}
