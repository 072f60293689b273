//! Solution uniqueness from a solve primitive alone.
//!
//! Find a witness `s`, then for every score pair `p != (len, 0)` ask whether
//! the instance extended by the guess `s -> p` is satisfiable. A solution of
//! any such follow-up differs from `s` (it scores `p`, not perfect, against
//! `s`), and any second solution satisfies the follow-up for its own score.
//! So `s` is unique iff every follow-up is unsatisfiable. There are
//! `len (len + 3) / 2` pairs to try.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instance::{MspInstance, ScoredGuess};
use crate::score::{Code, Score};
use crate::solver::Solver;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessReport {
    pub satisfiable: bool,
    pub unique: bool,
    pub witness: Option<Code>,
    /// Follow-up instances solved before the answer was settled.
    pub followups_tried: usize,
}

/// Number of follow-up score pairs for code length `len`.
pub fn followup_count(len: usize) -> usize {
    len * (len + 3) / 2
}

/// All `(black, white)` with `black < len` and `black + white <= len`, in
/// lexicographic order. Game-impossible pairs such as `(len - 1, 1)` are kept.
pub fn score_pairs_excluding_perfect(len: usize) -> Result<Vec<Score>> {
    if len == 0 {
        return Err(Error::invalid("code length must be at least 1"));
    }
    Ok((0..len)
        .flat_map(|black| (0..=len - black).map(move |white| Score::new(black, white)))
        .collect())
}

pub fn is_unique(instance: &MspInstance) -> Result<UniquenessReport> {
    is_unique_with(instance, &Solver::default())
}

/// Sequential check with early exit at the first satisfiable follow-up.
pub fn is_unique_with(instance: &MspInstance, solver: &Solver) -> Result<UniquenessReport> {
    let Some(witness) = solver.solve(instance)?.witness else {
        return Ok(unsat_report());
    };
    let mut tried = 0;
    for pair in score_pairs_excluding_perfect(instance.length())? {
        tried += 1;
        if solver
            .solve(&followup(instance, &witness, pair)?)?
            .is_satisfiable()
        {
            return Ok(report(witness, false, tried));
        }
    }
    Ok(report(witness, true, tried))
}

/// Runs follow-ups concurrently; the report equals the sequential one.
pub fn is_unique_parallel(instance: &MspInstance, solver: &Solver) -> Result<UniquenessReport> {
    let Some(witness) = solver.solve(instance)?.witness else {
        return Ok(unsat_report());
    };
    let pairs = score_pairs_excluding_perfect(instance.length())?;
    let answers: Vec<bool> = pairs
        .par_iter()
        .map(|&pair| {
            Ok(solver
                .solve(&followup(instance, &witness, pair)?)?
                .is_satisfiable())
        })
        .collect::<Result<_>>()?;
    Ok(match answers.iter().position(|&sat| sat) {
        Some(i) => report(witness, false, i + 1),
        None => report(witness, true, answers.len()),
    })
}

fn followup(instance: &MspInstance, witness: &Code, pair: Score) -> Result<MspInstance> {
    instance
        .clone()
        .with_guess(ScoredGuess::new(witness.clone(), pair))
}

fn unsat_report() -> UniquenessReport {
    UniquenessReport {
        satisfiable: false,
        unique: false,
        witness: None,
        followups_tried: 0,
    }
}

fn report(witness: Code, unique: bool, tried: usize) -> UniquenessReport {
    UniquenessReport {
        satisfiable: true,
        unique,
        witness: Some(witness),
        followups_tried: tried,
    }
}
