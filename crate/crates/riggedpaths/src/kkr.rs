//! The bijection between lattice words and rigged configurations, in both
//! directions.
//!
//! **Insertion** scans the word left to right. A `0` only advances the size.
//! A `1` looks at the special strings: a string of length `i` is special
//! when its block's largest rigging meets the vacancy `P_i` computed at the
//! current size. With `i*` the largest special length (0 when none), the
//! letter lengthens one special string of length `i*` (or starts a fresh
//! string when `i* = 0`) and the advanced size then fixes the new rigging as
//! the fresh vacancy of the longer string, which is the largest value still
//! admissible.
//!
//! **Ramification** inverts this from the right end of the word: now the
//! *smallest* special length `i_*` loses a cell (the shortened string's
//! rigging snaps to its new vacancy), producing a `1`; if nothing is special
//! the letter is a `0` and only the size drops.
//!
//! Vacancies are recomputed from shape and size at every step, and the
//! incremental laws they would satisfy are kept as debug assertions, as is
//! admissibility of every intermediate state.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::LatticeWord;
use crate::rigged::{RiggedConfiguration, RiggedRow, StringContent};

/// One step of either scan: the letter consumed, the special length acted
/// on (`None` for a `0` letter), the new length of the affected string
/// (`Some(0)` when a string vanishes), the rigging assigned, and the
/// vacancy vector after the step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub position: usize,
    pub letter: u8,
    pub special_length: Option<usize>,
    pub row_length: Option<usize>,
    pub rigging: Option<u64>,
    pub vacancies: Vec<i64>,
}

struct Scan {
    level: usize,
    size: usize,
    rows: Vec<RiggedRow>,
}

impl Scan {
    fn content(&self) -> StringContent {
        let mut m = vec![0usize; self.level];
        for row in &self.rows {
            m[row.length - 1] += 1;
        }
        StringContent::new(m)
    }

    fn vacancies(&self) -> Vec<i64> {
        self.content().vacancies(self.size)
    }

    /// Largest rigging within the block of the given length, if occupied.
    fn block_max(&self, length: usize) -> Option<u64> {
        self.rows
            .iter()
            .filter(|row| row.length == length)
            .map(|row| row.rigging)
            .max()
    }

    fn assert_admissible(&self) {
        let vacancies = self.vacancies();
        debug_assert!(
            vacancies.iter().all(|&p| p >= 0),
            "negative vacancy mid-scan"
        );
        debug_assert!(
            self.rows
                .iter()
                .all(|row| row.rigging as i64 <= vacancies[row.length - 1]),
            "rigging above its vacancy mid-scan"
        );
    }
}

/// Builds the rigged configuration of a lattice word whose heights stay
/// within `level`.
pub fn kkr_insert(word: &LatticeWord, level: usize) -> Result<RiggedConfiguration> {
    insert_inner(word, level, None)
}

/// As [`kkr_insert`], also returning the step log.
pub fn kkr_insert_traced(
    word: &LatticeWord,
    level: usize,
) -> Result<(RiggedConfiguration, Vec<TraceStep>)> {
    let mut trace = Vec::with_capacity(word.len());
    let config = insert_inner(word, level, Some(&mut trace))?;
    Ok((config, trace))
}

fn insert_inner(
    word: &LatticeWord,
    level: usize,
    mut trace: Option<&mut Vec<TraceStep>>,
) -> Result<RiggedConfiguration> {
    word.check_level(level)?;
    let mut scan = Scan {
        level,
        size: 0,
        rows: Vec::new(),
    };
    for (index, &letter) in word.letters().iter().enumerate() {
        let position = index + 1;
        let before = scan.vacancies();
        let mut special_length = None;
        let mut row_length = None;
        let mut rigging = None;
        if letter == 0 {
            scan.size += 1;
        } else {
            // Largest special length: block maximum rigging meets vacancy.
            let i_star = (1..=level)
                .filter(|&j| scan.block_max(j) == Some(before[j - 1] as u64))
                .max()
                .unwrap_or(0);
            assert!(
                i_star < level,
                "a level-bounded word never lengthens a full string"
            );
            special_length = Some(i_star);
            let row = if i_star == 0 {
                scan.rows.push(RiggedRow {
                    length: 0,
                    rigging: 0,
                });
                scan.rows.len() - 1
            } else {
                scan.rows
                    .iter()
                    .position(|row| {
                        row.length == i_star && row.rigging == before[i_star - 1] as u64
                    })
                    .expect("a special block holds a row at its vacancy")
            };
            scan.rows[row].length = i_star + 1;
            scan.size += 1;
            // The advanced size fixes the rigging: the fresh vacancy of the
            // lengthened string, the largest admissible value.
            let after = scan.vacancies();
            let assigned = after[i_star];
            assert!(assigned >= 0, "assigned rigging must be admissible");
            scan.rows[row].rigging = assigned as u64;
            row_length = Some(i_star + 1);
            rigging = Some(assigned as u64);
        }
        let after = scan.vacancies();
        incremental_vacancy_law(&before, &after, letter, special_length);
        scan.assert_admissible();
        if let Some(log) = trace.as_deref_mut() {
            log.push(TraceStep {
                position,
                letter,
                special_length,
                row_length,
                rigging,
                vacancies: after,
            });
        }
    }
    RiggedConfiguration::new(level, word.len(), scan.rows)
}

/// Reads the lattice word back off an admissible configuration.
pub fn kkr_ramify(config: &RiggedConfiguration) -> Result<LatticeWord> {
    ramify_inner(config, None)
}

/// As [`kkr_ramify`], also returning the step log (positions descending).
pub fn kkr_ramify_traced(
    config: &RiggedConfiguration,
) -> Result<(LatticeWord, Vec<TraceStep>)> {
    let mut trace = Vec::with_capacity(config.size());
    let word = ramify_inner(config, Some(&mut trace))?;
    Ok((word, trace))
}

fn ramify_inner(
    config: &RiggedConfiguration,
    mut trace: Option<&mut Vec<TraceStep>>,
) -> Result<LatticeWord> {
    if !config.is_admissible() {
        return Err(Error::Inadmissible(
            "only admissible configurations ramify to words",
        ));
    }
    let level = config.level();
    let mut scan = Scan {
        level,
        size: config.size(),
        rows: config.rows().to_vec(),
    };
    let mut reversed = Vec::with_capacity(scan.size);
    for position in (1..=config.size()).rev() {
        let before = scan.vacancies();
        // Smallest special length this time.
        let i_star = (1..=level)
            .filter(|&j| scan.block_max(j) == Some(before[j - 1] as u64))
            .min();
        let mut row_length = None;
        let mut rigging = None;
        let letter = match i_star {
            None => {
                scan.size -= 1;
                0
            }
            Some(i) => {
                let row = scan
                    .rows
                    .iter()
                    .position(|row| row.length == i && row.rigging == before[i - 1] as u64)
                    .expect("a special block holds a row at its vacancy");
                scan.size -= 1;
                if i == 1 {
                    scan.rows.swap_remove(row);
                    row_length = Some(0);
                } else {
                    scan.rows[row].length = i - 1;
                    let after = scan.vacancies();
                    let snapped = after[i - 2];
                    assert!(snapped >= 0, "snapped rigging must be admissible");
                    scan.rows[row].rigging = snapped as u64;
                    row_length = Some(i - 1);
                    rigging = Some(snapped as u64);
                }
                1
            }
        };
        let after = scan.vacancies();
        decremental_vacancy_law(&before, &after, letter, i_star);
        scan.assert_admissible();
        if let Some(log) = trace.as_deref_mut() {
            log.push(TraceStep {
                position,
                letter,
                special_length: i_star,
                row_length,
                rigging,
                vacancies: after,
            });
        }
        reversed.push(letter);
    }
    assert!(scan.rows.is_empty(), "all cells consumed by the scan");
    reversed.reverse();
    Ok(LatticeWord::new(reversed).expect("ramification yields a lattice word"))
}

/// Insertion moves vacancies by +1 at or below the acted length and by -1
/// above it (every vacancy grows on a `0` letter).
fn incremental_vacancy_law(
    before: &[i64],
    after: &[i64],
    letter: u8,
    special_length: Option<usize>,
) {
    if cfg!(debug_assertions) {
        let pivot = match (letter, special_length) {
            (0, _) => usize::MAX,
            (_, Some(i)) => i,
            _ => unreachable!(),
        };
        for (index, (&b, &a)) in before.iter().zip(after).enumerate() {
            let expected = if index + 1 > pivot { b - 1 } else { b + 1 };
            debug_assert_eq!(a, expected, "vacancy law fails at length {}", index + 1);
        }
    }
}

/// Ramification moves vacancies by -1 below the acted length and by +1 at
/// or above it (every vacancy shrinks on a `0` letter).
fn decremental_vacancy_law(
    before: &[i64],
    after: &[i64],
    letter: u8,
    special_length: Option<usize>,
) {
    if cfg!(debug_assertions) {
        let pivot = match (letter, special_length) {
            (0, _) => usize::MAX,
            (_, Some(i)) => i,
            _ => unreachable!(),
        };
        for (index, (&b, &a)) in before.iter().zip(after).enumerate() {
            let expected = if index + 1 >= pivot { b + 1 } else { b - 1 };
            debug_assert_eq!(a, expected, "vacancy law fails at length {}", index + 1);
        }
    }
}

/// The word that ramifies out of the all-zero rigging: ascending blocks
/// `0^j 1^j` over the strings, then trailing zeros up to the size.
pub fn minimal_word(content: &StringContent, size: usize) -> Result<LatticeWord> {
    if !content.is_admissible(size) {
        return Err(Error::Inadmissible("content has a negative vacancy"));
    }
    let mut letters = Vec::with_capacity(size);
    for j in 1..=content.level() {
        for _ in 0..content.multiplicity(j) {
            letters.extend(std::iter::repeat(0u8).take(j));
            letters.extend(std::iter::repeat(1u8).take(j));
        }
    }
    letters.resize(size, 0);
    Ok(LatticeWord::new(letters).expect("block concatenation is a lattice word"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_paths;
    use crate::rigged::{enumerate_contents, enumerate_rcs, maximal_rc, minimal_rc};

    fn word(s: &str) -> LatticeWord {
        s.parse().unwrap()
    }

    fn rc(level: usize, size: usize, rows: &[(usize, u64)]) -> RiggedConfiguration {
        RiggedConfiguration::new(
            level,
            size,
            rows.iter()
                .map(|&(length, rigging)| RiggedRow { length, rigging })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn insertion_frozen_examples() {
        assert_eq!(kkr_insert(&word("0011"), 2).unwrap(), rc(2, 4, &[(2, 0)]));
        assert_eq!(
            kkr_insert(&word("0101"), 2).unwrap(),
            rc(2, 4, &[(1, 0), (1, 0)])
        );
        assert_eq!(
            kkr_insert(&word("001011"), 2).unwrap(),
            rc(2, 6, &[(2, 0), (1, 1)])
        );
        assert_eq!(kkr_insert(&word(""), 1).unwrap(), RiggedConfiguration::empty(1, 0));
        // Unbalanced words insert too; the shape then has fewer cells.
        assert_eq!(kkr_insert(&word("001"), 2).unwrap(), rc(2, 3, &[(1, 1)]));
    }

    #[test]
    fn insertion_rigging_history() {
        // The single string of 0011 is born with rigging 1, which the
        // fourth letter lowers to 0.
        let (_, trace) = kkr_insert_traced(&word("0011"), 2).unwrap();
        assert_eq!(trace.len(), 4);
        assert_eq!(trace[0].letter, 0);
        assert_eq!(trace[0].vacancies, [1, 1]);
        assert_eq!(trace[2].letter, 1);
        assert_eq!(trace[2].special_length, Some(0));
        assert_eq!(trace[2].row_length, Some(1));
        assert_eq!(trace[2].rigging, Some(1));
        assert_eq!(trace[3].special_length, Some(1));
        assert_eq!(trace[3].row_length, Some(2));
        assert_eq!(trace[3].rigging, Some(0));
        assert_eq!(trace[3].vacancies, [2, 0]);
    }

    #[test]
    fn ramification_frozen_examples() {
        assert_eq!(kkr_ramify(&rc(2, 4, &[(2, 0)])).unwrap(), word("0011"));
        assert_eq!(
            kkr_ramify(&rc(2, 4, &[(1, 0), (1, 0)])).unwrap(),
            word("0101")
        );
        assert_eq!(
            kkr_ramify(&rc(2, 6, &[(2, 0), (1, 0)])).unwrap(),
            word("010011")
        );
        assert_eq!(
            kkr_ramify(&rc(2, 6, &[(2, 0), (1, 2)])).unwrap(),
            word("001101")
        );
        // No strings means no 1 letters: the all-zero word.
        assert_eq!(
            kkr_ramify(&RiggedConfiguration::empty(3, 4)).unwrap(),
            word("0000")
        );
    }

    #[test]
    fn ramification_rejects_inadmissible_input() {
        let too_big = rc(2, 4, &[(2, 3)]);
        assert!(!too_big.is_admissible());
        assert!(matches!(kkr_ramify(&too_big), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn insertion_rejects_tall_words() {
        assert!(matches!(
            kkr_insert(&word("0011"), 1),
            Err(Error::HeightExceedsLevel { .. })
        ));
    }

    #[test]
    fn round_trips_both_ways() {
        for level in 1..=3usize {
            for length in (0..=10usize).step_by(2) {
                for w in enumerate_paths(level, length) {
                    let config = kkr_insert(&w, level).unwrap();
                    assert!(config.is_admissible());
                    assert_eq!(kkr_ramify(&config).unwrap(), w, "word {w}");
                }
                for config in enumerate_rcs(level, length) {
                    let w = kkr_ramify(&config).unwrap();
                    assert!(w.is_vacuum());
                    assert!(w.check_level(level).is_ok());
                    assert_eq!(kkr_insert(&w, level).unwrap(), config);
                }
            }
        }
        // Unbalanced words round-trip as well.
        for s in ["0", "001", "00101", "000110"] {
            let w = word(s);
            let config = kkr_insert(&w, 3).unwrap();
            assert_eq!(kkr_ramify(&config).unwrap(), w);
        }
    }

    #[test]
    fn string_lengths_match_word_heights() {
        // The longest string of the configuration is the peak height of the
        // word, and total cells count the ones.
        for level in 1..=4usize {
            for length in (2..=10usize).step_by(2) {
                for w in enumerate_paths(level, length) {
                    let config = kkr_insert(&w, level).unwrap();
                    let longest = config.rows().first().map_or(0, |row| row.length);
                    assert_eq!(longest, w.max_height(), "word {w}");
                    assert_eq!(config.cells(), length / 2);
                }
            }
        }
    }

    // The scan carries the charge statistic: c(T_w) = c(content, L) + sum of
    // riggings. Energy instead matches the momentum of the configuration
    // built from the reverse complement (the evacuated word); pairing the
    // *same* word's energy with its own configuration's momentum is wrong,
    // and the second test pins a counterexample so the orientation cannot
    // silently flip.

    #[test]
    fn scan_transports_charge_and_evacuated_energy() {
        use crate::rigged::rc_charge;
        use crate::tableaux::tableau_from_word;
        for level in 1..=3usize {
            for length in (0..=10usize).step_by(2) {
                for w in enumerate_paths(level, length) {
                    let config = kkr_insert(&w, level).unwrap();
                    let riggings: u64 =
                        config.rows().iter().map(|row| row.rigging).sum();
                    let charge = tableau_from_word(w.letters()).unwrap().charge();
                    assert_eq!(
                        charge as i64,
                        rc_charge(&config.content(), length) + riggings as i64,
                        "charge transport failed for {w}"
                    );
                    let twin = kkr_insert(&w.reverse_complement().unwrap(), level).unwrap();
                    assert_eq!(
                        twin.momentum().unwrap(),
                        w.energy_e().unwrap(),
                        "energy transport failed for {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn energy_pairs_with_the_evacuated_configuration_not_the_direct_one() {
        let low = word("001101");
        let high = word("010011");
        assert_eq!(low.energy_e().unwrap(), 2);
        assert_eq!(high.energy_e().unwrap(), 4);
        // Direct insertion sends the low-energy word to the maximal
        // configuration and vice versa; the momenta land crosswise.
        assert_eq!(kkr_insert(&low, 2).unwrap(), rc(2, 6, &[(2, 0), (1, 2)]));
        assert_eq!(kkr_insert(&high, 2).unwrap(), rc(2, 6, &[(2, 0), (1, 0)]));
        assert_eq!(kkr_insert(&low, 2).unwrap().momentum().unwrap(), 4);
        assert_eq!(kkr_insert(&high, 2).unwrap().momentum().unwrap(), 2);
    }

    #[test]
    fn minimal_words_frozen_and_consistent() {
        assert_eq!(
            minimal_word(&StringContent::new(vec![0, 1]), 4).unwrap(),
            word("0011")
        );
        assert_eq!(
            minimal_word(&StringContent::new(vec![2, 0]), 4).unwrap(),
            word("0101")
        );
        assert_eq!(
            minimal_word(&StringContent::new(vec![1, 1]), 6).unwrap(),
            word("010011")
        );
        // Non-vacuum contents pad with trailing zeros.
        assert_eq!(
            minimal_word(&StringContent::new(vec![0, 1]), 6).unwrap(),
            word("001100")
        );
        for level in 1..=3usize {
            for size in 0..=9usize {
                for cells in 0..=size / 2 {
                    for content in enumerate_contents(level, cells) {
                        if !content.is_admissible(size) {
                            continue;
                        }
                        let minimal = minimal_rc(&content, size).unwrap();
                        assert_eq!(
                            kkr_ramify(&minimal).unwrap(),
                            minimal_word(&content, size).unwrap(),
                            "m={:?} size={size}",
                            content.multiplicities()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn extreme_words_are_reverse_complements() {
        for level in 1..=3usize {
            for length in (2..=10usize).step_by(2) {
                for content in enumerate_contents(level, length / 2) {
                    if !content.is_admissible(length) {
                        continue;
                    }
                    let low = kkr_ramify(&minimal_rc(&content, length).unwrap()).unwrap();
                    let high = kkr_ramify(&maximal_rc(&content, length).unwrap()).unwrap();
                    let flipped: Vec<u8> =
                        low.letters().iter().rev().map(|&b| 1 - b).collect();
                    assert_eq!(
                        high.letters(),
                        flipped,
                        "m={:?} L={length}",
                        content.multiplicities()
                    );
                }
            }
        }
    }

    #[test]
    fn ramification_trace_shape() {
        let (w, trace) = kkr_ramify_traced(&rc(2, 4, &[(2, 0)])).unwrap();
        assert_eq!(w, word("0011"));
        let positions: Vec<usize> = trace.iter().map(|step| step.position).collect();
        assert_eq!(positions, [4, 3, 2, 1]);
        assert_eq!(trace[0].letter, 1);
        assert_eq!(trace[0].special_length, Some(2));
        assert_eq!(trace[0].row_length, Some(1));
        assert_eq!(trace[0].rigging, Some(1));
        assert_eq!(trace[1].row_length, Some(0));
        assert!(trace.iter().all(|step| step.vacancies.iter().all(|&p| p >= 0)));
    }
}
