//! Codes, palettes and the Mastermind score.
//!
//! A score between two codes `x` and `y` of equal length is the pair
//! `(black, white)`: `black` counts positions where the pegs agree, and
//! `white = w - black` where `w` sums, over every color, the smaller of the
//! two occurrence counts. Two residual distances fall out of the score:
//! `rho1 = len - black` on codes and `rho2 = len - w` on color multisets.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A peg color. Valid colors are `1..=kappa`; `0` never names a color.
pub type Color = u32;

/// The set of available colors `1..=kappa`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Palette {
    kappa: u32,
}

impl Palette {
    pub fn new(kappa: u32) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::invalid("palette needs at least one color"));
        }
        Ok(Palette { kappa })
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn contains(&self, color: Color) -> bool {
        (1..=self.kappa).contains(&color)
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        1..=self.kappa
    }
}

/// An ordered row of pegs; used both for guesses and for candidate solutions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code(Vec<Color>);

impl Code {
    pub fn new(pegs: Vec<Color>) -> Result<Self> {
        if pegs.is_empty() {
            return Err(Error::invalid("a code needs at least one peg"));
        }
        if let Some(pos) = pegs.iter().position(|&c| c == 0) {
            return Err(Error::invalid(format!(
                "peg {} has color 0, which is reserved",
                pos + 1
            )));
        }
        Ok(Code(pegs))
    }

    pub fn pegs(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_pegs(self) -> Vec<Color> {
        self.0
    }

    /// Fails unless every peg lies in `palette`.
    pub fn check_palette(&self, palette: &Palette) -> Result<()> {
        match self.0.iter().position(|&c| !palette.contains(c)) {
            None => Ok(()),
            Some(pos) => Err(Error::invalid(format!(
                "peg {} has color {} outside 1..={}",
                pos + 1,
                self.0[pos],
                palette.kappa()
            ))),
        }
    }

    /// Order-forgetting projection onto the color multiset.
    pub fn multiset(&self) -> ColorMultiset {
        ColorMultiset::from_pegs(&self.0)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Black and white peg counts. `white` is the color-only surplus `w - black`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Score {
    pub black: usize,
    pub white: usize,
}

impl Score {
    pub const fn new(black: usize, white: usize) -> Self {
        Score { black, white }
    }

    /// Total color matches irrespective of position (`black + white`).
    pub const fn total(&self) -> usize {
        self.black + self.white
    }

    pub fn is_perfect(&self, len: usize) -> bool {
        self.black == len && self.white == 0
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.black, self.white)
    }
}

/// A code with its order forgotten: color -> occurrence count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColorMultiset {
    counts: BTreeMap<Color, usize>,
    size: usize,
}

impl ColorMultiset {
    pub fn from_pegs(pegs: &[Color]) -> Self {
        let mut counts = BTreeMap::new();
        for &c in pegs {
            *counts.entry(c).or_insert(0) += 1;
        }
        ColorMultiset {
            counts,
            size: pegs.len(),
        }
    }

    pub fn count(&self, color: Color) -> usize {
        self.counts.get(&color).copied().unwrap_or(0)
    }

    /// Number of elements, counted with multiplicity.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn iter(&self) -> impl Iterator<Item = (Color, usize)> + '_ {
        self.counts.iter().map(|(&c, &n)| (c, n))
    }

    /// `sum_j min(count_self(j), count_other(j))`.
    pub fn common(&self, other: &ColorMultiset) -> usize {
        self.counts
            .iter()
            .map(|(c, &n)| n.min(other.count(*c)))
            .sum()
    }
}

fn check_pair(x: &Code, y: &Code, palette: &Palette) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::invalid(format!(
            "code lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    x.check_palette(palette)?;
    y.check_palette(palette)
}

/// Mastermind score of `x` against `y`, using one counting pass per code.
pub fn score(x: &Code, y: &Code, palette: &Palette) -> Result<Score> {
    check_pair(x, y, palette)?;
    Ok(score_unchecked(
        x.pegs(),
        y.pegs(),
        palette.kappa() as usize,
    ))
}

/// Counting-array score; pegs must already be known to lie in `1..=kappa`.
pub(crate) fn score_unchecked(x: &[Color], y: &[Color], kappa: usize) -> Score {
    let mut balance = vec![0i64; kappa + 1];
    let mut black = 0;
    for (&a, &b) in x.iter().zip(y) {
        if a == b {
            black += 1;
        }
        balance[a as usize] += 1;
        balance[b as usize] -= 1;
    }
    // sum_j min(cx, cy) = (|x| + |y| - sum_j |cx - cy|) / 2
    let imbalance: i64 = balance.iter().map(|v| v.abs()).sum();
    let total = (2 * x.len() - imbalance as usize) / 2;
    Score::new(black, total - black)
}

/// Literal transcription of the score definition. Quadratic-ish and slow;
/// kept only as an independent oracle for [`score`].
#[allow(clippy::needless_range_loop)]
pub fn naive_score(x: &Code, y: &Code, palette: &Palette) -> Result<Score> {
    check_pair(x, y, palette)?;
    let (x, y) = (x.pegs(), y.pegs());
    let len = x.len();

    let mut black = 0;
    for i in 0..len {
        if x[i] == y[i] {
            black += 1;
        }
    }

    let mut total = 0;
    for j in 1..=palette.kappa() {
        let mut in_x = 0;
        for i in 0..len {
            if x[i] == j {
                in_x += 1;
            }
        }
        let mut in_y = 0;
        for i in 0..len {
            if y[i] == j {
                in_y += 1;
            }
        }
        total += in_x.min(in_y);
    }

    Ok(Score::new(black, total - black))
}

/// Positional mismatch distance: `len - black`.
pub fn rho1(x: &Code, y: &Code) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::invalid(format!(
            "code lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    let black = x
        .pegs()
        .iter()
        .zip(y.pegs())
        .filter(|(a, b)| a == b)
        .count();
    Ok(x.len() - black)
}

/// Multiset distance: `len - w`. Half the symmetric-difference size.
pub fn rho2(x: &ColorMultiset, y: &ColorMultiset) -> Result<usize> {
    if x.size() != y.size() {
        return Err(Error::invalid(format!(
            "multiset sizes differ: {} vs {}",
            x.size(),
            y.size()
        )));
    }
    Ok(x.size() - x.common(y))
}
