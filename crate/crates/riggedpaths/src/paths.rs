//! Level-restricted lattice words and their energy grading.
//!
//! A word `w_1 .. w_L` over `{0, 1}` is a lattice word when every prefix
//! holds at least as many zeros as ones. Its height profile
//! `h_j = #zeros - #ones` in the prefix of length `j` is then a walk that
//! starts at 0 and never dips below the floor; the level bound caps it from
//! above. Balanced words (`h_L = 0`) form the vacuum sector.
//!
//! The energy of a word is
//!
//! ```text
//! H(w) = sum_{j=1}^{L-1} j * theta(w_{j+1} - w_j),    theta(z) = [z <= 0],
//! ```
//!
//! minimised on the alternating word `0101..`, whose energy is
//! `(L/2)(L/2 - 1)`. Subtracting that minimum gives the normalised energy
//! `E`, the exponent used by [`bosonic_polynomial`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::QPolynomial;

/// Word over `{0, 1}` in which every prefix holds at least as many zeros as
/// ones. Balance is not required; see [`LatticeWord::is_vacuum`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LatticeWord {
    letters: Vec<u8>,
}

impl LatticeWord {
    /// Validates the alphabet and the prefix (ballot) condition.
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        let mut height = 0i64;
        for (i, &letter) in letters.iter().enumerate() {
            match letter {
                0 => height += 1,
                1 => height -= 1,
                other => {
                    return Err(Error::BadLetter {
                        position: i + 1,
                        letter: other,
                    })
                }
            }
            if height < 0 {
                return Err(Error::NotLatticeWord(i + 1));
            }
        }
        Ok(LatticeWord { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Height profile `h_0 = 0, h_1, .., h_L`.
    pub fn heights(&self) -> HeightSequence {
        let mut heights = Vec::with_capacity(self.letters.len() + 1);
        let mut h = 0usize;
        heights.push(h);
        for &letter in &self.letters {
            h = if letter == 0 { h + 1 } else { h - 1 };
            heights.push(h);
        }
        HeightSequence(heights)
    }

    /// Largest prefix height.
    pub fn max_height(&self) -> usize {
        let mut h = 0usize;
        let mut max = 0;
        for &letter in &self.letters {
            h = if letter == 0 { h + 1 } else { h - 1 };
            max = max.max(h);
        }
        max
    }

    /// True when zeros and ones balance (`h_L = 0`).
    pub fn is_vacuum(&self) -> bool {
        self.letters.iter().filter(|&&b| b == 0).count() * 2 == self.letters.len()
    }

    /// Errors unless every height stays at or below `level`.
    pub fn check_level(&self, level: usize) -> Result<()> {
        let mut h = 0usize;
        for (i, &letter) in self.letters.iter().enumerate() {
            h = if letter == 0 { h + 1 } else { h - 1 };
            if h > level {
                return Err(Error::HeightExceedsLevel {
                    position: i + 1,
                    height: h,
                    level,
                });
            }
        }
        Ok(())
    }

    /// Energy `H(w) = sum_j j * theta(w_{j+1} - w_j)` with `theta(z) = [z <= 0]`.
    ///
    /// A descent or a plateau at position `j` contributes `j`; only strict
    /// ascents (a `0` followed by a `1`) contribute nothing.
    pub fn energy_h(&self) -> u64 {
        let mut total = 0u64;
        for j in 1..self.letters.len() {
            if self.letters[j] <= self.letters[j - 1] {
                total += j as u64;
            }
        }
        total
    }

    /// Normalised energy `E = H - (L/2)(L/2 - 1)`. Vacuum words only.
    pub fn energy_e(&self) -> Result<u64> {
        if !self.is_vacuum() {
            return Err(Error::NotVacuum);
        }
        let half = (self.letters.len() / 2) as u64;
        let ground = half * half.saturating_sub(1);
        Ok(self.energy_h() - ground)
    }

    /// Reverse the word and swap the letters: `w'_i = 1 - w_{L+1-i}`.
    ///
    /// On vacuum words this is the evacuation involution seen at the word
    /// level (a two-row rectangle evacuates by rotating 180 degrees).  The
    /// result of reversing an unbalanced word is not a lattice word, so the
    /// operation is restricted to vacuum input.
    pub fn reverse_complement(&self) -> Result<LatticeWord> {
        if !self.is_vacuum() {
            return Err(Error::NotVacuum);
        }
        let letters = self.letters.iter().rev().map(|&b| 1 - b).collect();
        LatticeWord::new(letters)
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &letter in &self.letters {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for LatticeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .bytes()
            .enumerate()
            .map(|(i, b)| match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                other => Err(Error::BadLetter {
                    position: i + 1,
                    letter: other,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        LatticeWord::new(letters)
    }
}

impl From<LatticeWord> for String {
    fn from(word: LatticeWord) -> String {
        word.to_string()
    }
}

impl TryFrom<String> for LatticeWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Walk `h_0 = 0, h_1, .., h_L` with unit steps that never dips below 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HeightSequence(Vec<usize>);

impl HeightSequence {
    /// Validates start at 0 and steps of exactly +1 or -1.
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.first() != Some(&0) {
            return Err(Error::BadHeightProfile);
        }
        for (i, pair) in heights.windows(2).enumerate() {
            let step = pair[1] as i64 - pair[0] as i64;
            if step != 1 && step != -1 {
                return Err(Error::BadHeightStep(i + 1));
            }
        }
        Ok(HeightSequence(heights))
    }

    pub fn heights(&self) -> &[usize] {
        &self.0
    }

    /// Number of word letters, one fewer than the profile length.
    pub fn word_len(&self) -> usize {
        self.0.len() - 1
    }
}

/// Reads the word back off a height profile: an up-step is a `0`, a
/// down-step a `1`.
pub fn word_from_heights(heights: &HeightSequence) -> LatticeWord {
    let letters = heights
        .heights()
        .windows(2)
        .map(|pair| u8::from(pair[1] < pair[0]))
        .collect();
    // Steps from 0 staying nonnegative give the ballot condition for free.
    LatticeWord::new(letters).expect("a valid height profile yields a lattice word")
}

/// The alternating minimal-energy word `0101..01` of the given even length.
pub fn ground_word(length: usize) -> Result<LatticeWord> {
    if length % 2 != 0 {
        return Err(Error::OddLength(length));
    }
    let letters = (0..length).map(|i| (i % 2) as u8).collect();
    Ok(LatticeWord::new(letters).expect("alternating word is a lattice word"))
}

/// All vacuum words of the given even length with heights at most `level`,
/// in lexicographic order (`0 < 1`).
pub fn enumerate_paths(level: usize, length: usize) -> Vec<LatticeWord> {
    assert!(level >= 1, "level must be positive");
    assert!(length % 2 == 0, "vacuum words have even length");
    let mut out = Vec::new();
    let mut letters = Vec::with_capacity(length);
    descend(&mut letters, 0, level, length, &mut out);
    out
}

fn descend(
    letters: &mut Vec<u8>,
    height: usize,
    level: usize,
    length: usize,
    out: &mut Vec<LatticeWord>,
) {
    let remaining = length - letters.len();
    if height > remaining {
        return; // cannot come back down to the floor in time
    }
    if remaining == 0 {
        out.push(LatticeWord {
            letters: letters.clone(),
        });
        return;
    }
    if height < level {
        letters.push(0);
        descend(letters, height + 1, level, length, out);
        letters.pop();
    }
    if height > 0 {
        letters.push(1);
        descend(letters, height - 1, level, length, out);
        letters.pop();
    }
}

/// Generating function of normalised energy over all vacuum words of the
/// given length and level: the coefficient of `q^E` counts paths of energy
/// `E`.
pub fn bosonic_polynomial(level: usize, length: usize) -> QPolynomial {
    let mut tally = QPolynomial::zero();
    for word in enumerate_paths(level, length) {
        let e = word.energy_e().expect("enumerated words are vacuum words");
        tally
            .add_term(1, e as usize)
            .expect("path counts stay far below i64");
    }
    tally
}
