//! Deciding, witnessing, enumerating and verifying MSP instances.

mod search;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instance::MspInstance;
use crate::score::{score_unchecked, Code, Color};

use search::{Search, SearchConfig};

/// Largest `kappa^length` the exhaustive engine will walk by default.
pub const DEFAULT_EXHAUSTIVE_CAP: u128 = 100_000_000;

const DEFAULT_MEMO_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SolveMode {
    /// Walk every code in lexicographic order.
    Exhaustive,
    /// Position-ordered depth-first search with score-derived pruning.
    #[default]
    Backtrack,
}

impl std::str::FromStr for SolveMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SolveMode::Exhaustive),
            "backtrack" => Ok(SolveMode::Backtrack),
            other => Err(Error::invalid(format!("unknown solve mode `{other}`"))),
        }
    }
}

/// Result of a decision query. A witness is present iff the instance is satisfiable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub witness: Option<Code>,
}

impl SolveOutcome {
    pub fn is_satisfiable(&self) -> bool {
        self.witness.is_some()
    }
}

/// Solutions in lexicographic order, cut at the requested cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub codes: Vec<Code>,
    pub truncated: bool,
}

/// Solver configuration. Both modes return the lexicographically smallest
/// witness, so their outcomes are identical, not merely equisatisfiable.
#[derive(Debug, Clone, Copy)]
pub struct Solver {
    mode: SolveMode,
    exhaustive_cap: u128,
    parallel: bool,
    memo_limit: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new(SolveMode::default())
    }
}

impl Solver {
    pub fn new(mode: SolveMode) -> Self {
        Solver {
            mode,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            parallel: false,
            memo_limit: DEFAULT_MEMO_LIMIT,
        }
    }

    pub fn with_exhaustive_cap(mut self, cap: u128) -> Self {
        self.exhaustive_cap = cap;
        self
    }

    /// Split the backtracking search over the first peg's colors across the
    /// rayon pool. The reported witness is still the smallest one.
    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn mode(&self) -> SolveMode {
        self.mode
    }

    pub fn solve(&self, instance: &MspInstance) -> Result<SolveOutcome> {
        let witness = match self.mode {
            SolveMode::Exhaustive => {
                self.check_cap(instance)?;
                let mut first = None;
                exhaustive_walk(instance, |pegs| {
                    first = Some(pegs.to_vec());
                    true
                });
                first
            }
            SolveMode::Backtrack if self.parallel => self.parallel_first(instance),
            SolveMode::Backtrack => Search::new(instance, self.search_config(true)).first(),
        };
        Ok(SolveOutcome {
            witness: witness.map(|pegs| Code::new(pegs).expect("solver emits valid colors")),
        })
    }

    /// All solutions in lexicographic order, at most `cap` of them.
    pub fn enumerate(&self, instance: &MspInstance, cap: usize) -> Result<Enumeration> {
        if cap == 0 {
            return Err(Error::invalid("enumeration cap must be positive"));
        }
        let mut codes = Vec::new();
        let mut truncated = false;
        let mut collect = |pegs: &[Color]| {
            if codes.len() == cap {
                truncated = true;
                return true;
            }
            codes.push(Code::new(pegs.to_vec()).expect("solver emits valid colors"));
            false
        };
        match self.mode {
            SolveMode::Exhaustive => {
                self.check_cap(instance)?;
                exhaustive_walk(instance, collect);
            }
            SolveMode::Backtrack => {
                // Swap pruning only preserves the smallest solution, so it is off here.
                Search::new(instance, self.search_config(false)).for_each(&mut collect);
            }
        }
        Ok(Enumeration { codes, truncated })
    }

    fn search_config(&self, symmetry: bool) -> SearchConfig {
        SearchConfig {
            symmetry,
            memo_limit: self.memo_limit,
        }
    }

    fn check_cap(&self, instance: &MspInstance) -> Result<()> {
        match instance.search_space() {
            Some(n) if n <= self.exhaustive_cap => Ok(()),
            space => Err(Error::ResourceLimit(format!(
                "exhaustive search over {} candidates exceeds cap {}",
                space.map_or_else(
                    || format!("{}^{}", instance.kappa(), instance.length()),
                    |n| n.to_string()
                ),
                self.exhaustive_cap
            ))),
        }
    }

    fn parallel_first(&self, instance: &MspInstance) -> Option<Vec<Color>> {
        let config = self.search_config(true);
        let branches: Vec<Option<Vec<Color>>> = instance
            .palette()
            .colors()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|first| Search::new(instance, config).first_with_prefix(&[first]))
            .collect();
        // Branches are in ascending first-peg order; the earliest hit is the minimum.
        branches.into_iter().flatten().next()
    }
}

/// Visits every code in lexicographic order, passing verifying ones to
/// `visit` until it returns `true`.
fn exhaustive_walk(instance: &MspInstance, mut visit: impl FnMut(&[Color]) -> bool) {
    let kappa = instance.kappa();
    let kappa_len = kappa as usize;
    let mut pegs = vec![1 as Color; instance.length()];
    loop {
        let ok = instance
            .guesses()
            .iter()
            .all(|g| score_unchecked(g.guess.pegs(), &pegs, kappa_len) == g.declared);
        if ok && visit(&pegs) {
            return;
        }
        // odometer: last position varies fastest
        let mut pos = pegs.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if pegs[pos] < kappa {
                pegs[pos] += 1;
                break;
            }
            pegs[pos] = 1;
        }
    }
}

/// True iff `candidate` receives the declared score from every guess.
/// Runs in `O(#guesses * (length + kappa))`.
pub fn verify(instance: &MspInstance, candidate: &Code) -> Result<bool> {
    instance.check_candidate(candidate)?;
    let kappa = instance.kappa() as usize;
    Ok(instance
        .guesses()
        .iter()
        .all(|g| score_unchecked(g.guess.pegs(), candidate.pegs(), kappa) == g.declared))
}

pub fn solve(instance: &MspInstance, mode: SolveMode) -> Result<SolveOutcome> {
    Solver::new(mode).solve(instance)
}

pub fn enumerate_all(instance: &MspInstance, cap: usize, mode: SolveMode) -> Result<Enumeration> {
    Solver::new(mode).enumerate(instance, cap)
}
