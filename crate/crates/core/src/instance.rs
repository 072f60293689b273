use crate::error::{Error, Result};
use crate::score::{Code, Color, Palette, Score};

/// A guess together with the score it is declared to receive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoredGuess {
    pub guess: Code,
    pub declared: Score,
}

impl ScoredGuess {
    pub fn new(guess: Code, declared: Score) -> Self {
        ScoredGuess { guess, declared }
    }
}

/// A Mastermind satisfiability instance: palette, code length and scored guesses.
///
/// Duplicate or mutually conflicting guesses are allowed; they make the
/// instance unsatisfiable rather than malformed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MspInstance {
    palette: Palette,
    length: usize,
    guesses: Vec<ScoredGuess>,
}

impl MspInstance {
    pub fn new(palette: Palette, length: usize, guesses: Vec<ScoredGuess>) -> Result<Self> {
        if length == 0 {
            return Err(Error::invalid("code length must be at least 1"));
        }
        let instance = MspInstance {
            palette,
            length,
            guesses: Vec::with_capacity(guesses.len()),
        };
        guesses
            .into_iter()
            .try_fold(instance, |inst, g| inst.with_guess(g))
    }

    /// Convenience constructor from raw pegs and `(black, white)` pairs.
    pub fn from_raw(
        kappa: u32,
        length: usize,
        guesses: &[(&[Color], (usize, usize))],
    ) -> Result<Self> {
        let guesses = guesses
            .iter()
            .map(|(pegs, (b, w))| {
                Ok(ScoredGuess::new(
                    Code::new(pegs.to_vec())?,
                    Score::new(*b, *w),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        MspInstance::new(Palette::new(kappa)?, length, guesses)
    }

    pub fn palette(&self) -> Palette {
        self.palette
    }

    pub fn kappa(&self) -> u32 {
        self.palette.kappa()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn guesses(&self) -> &[ScoredGuess] {
        &self.guesses
    }

    /// Returns this instance with one more scored guess appended.
    pub fn with_guess(mut self, guess: ScoredGuess) -> Result<Self> {
        self.push_guess(guess)?;
        Ok(self)
    }

    pub fn push_guess(&mut self, guess: ScoredGuess) -> Result<()> {
        let idx = self.guesses.len() + 1;
        if guess.guess.len() != self.length {
            return Err(Error::invalid(format!(
                "guess {idx} has {} pegs, expected {}",
                guess.guess.len(),
                self.length
            )));
        }
        guess
            .guess
            .check_palette(&self.palette)
            .map_err(|e| Error::invalid(format!("guess {idx}: {e}")))?;
        if guess.declared.total() > self.length {
            return Err(Error::invalid(format!(
                "guess {idx} declares {} pegs, more than length {}",
                guess.declared.total(),
                self.length
            )));
        }
        self.guesses.push(guess);
        Ok(())
    }

    /// Fails unless `candidate` is a well-formed code for this instance.
    pub fn check_candidate(&self, candidate: &Code) -> Result<()> {
        if candidate.len() != self.length {
            return Err(Error::invalid(format!(
                "candidate has {} pegs, expected {}",
                candidate.len(),
                self.length
            )));
        }
        candidate.check_palette(&self.palette)
    }

    /// Size of the search space, `kappa^length`, or `None` on overflow.
    pub fn search_space(&self) -> Option<u128> {
        let exp = u32::try_from(self.length).ok()?;
        u128::from(self.kappa()).checked_pow(exp)
    }
}
