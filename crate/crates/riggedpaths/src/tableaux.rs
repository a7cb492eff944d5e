//! Standard Young tableaux with the Thomas statistic `p`, charge, and the
//! evacuation involution.
//!
//! A lattice word `w_1 .. w_L` over `{0, .., r-1}` encodes a standard
//! tableau: entry `j` goes to row `w_j + 1`, so prefix letter counts are the
//! partial shapes and the ballot condition is exactly standardness. Two-row
//! tableaux correspond to the 0/1 words of [`crate::paths`]; the maps here
//! accept any number of rows.
//!
//! Statistics:
//!
//! * `p(T)` sums the entries `i` whose successor `i + 1` sits in a strictly
//!   later column;
//! * `charge(T)` sums the indices of the reading word (rows read right to
//!   left, top to bottom): entry 1 has index 0, and the index grows by one
//!   exactly when the next entry sits to the *left* of the current one;
//! * evacuation is the Schützenberger involution, realised literally by
//!   sliding out the top-left entry and recording a frozen sentinel in the
//!   freed cell, `n` times.
//!
//! `charge(T) = p(evacuation(T))`, which the tests lean on as a cross-check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Standard Young tableau: a partition-shaped filling by `1..n`, strictly
/// increasing along rows and down columns. The empty tableau is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        for pair in rows.windows(2) {
            if pair[1].len() > pair[0].len() {
                return Err(Error::NotStandard("row lengths must weakly decrease"));
            }
        }
        if rows.iter().any(|row| row.is_empty()) {
            return Err(Error::NotStandard("empty rows are not allowed"));
        }
        let n: usize = rows.iter().map(|row| row.len()).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &entry in row {
                if entry == 0 || entry > n || seen[entry] {
                    return Err(Error::NotStandard("entries must be exactly 1..n"));
                }
                seen[entry] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|pair| pair[0] >= pair[1]) {
                return Err(Error::NotStandard("rows must increase strictly"));
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r - 1][c] >= rows[r][c] {
                    return Err(Error::NotStandard("columns must increase strictly"));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row lengths, weakly decreasing.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|row| row.len()).collect()
    }

    /// Number of entries.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|row| row.len()).sum()
    }

    /// `(row, column)` of each entry, zero-based, indexed by entry - 1.
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut positions = vec![(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &entry) in row.iter().enumerate() {
                positions[entry - 1] = (r, c);
            }
        }
        positions
    }

    /// Thomas statistic: the sum of all `i` whose successor `i + 1` lies in
    /// a strictly greater column.
    pub fn thomas_p(&self) -> u64 {
        let positions = self.positions();
        let mut total = 0u64;
        for i in 1..self.size() {
            if positions[i].1 > positions[i - 1].1 {
                total += i as u64;
            }
        }
        total
    }

    /// Reading word: each row right to left, rows top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// Charge: sum of reading-word indices. Entry 1 has index 0; the index
    /// of `r + 1` equals that of `r` when `r + 1` occurs further right in
    /// the reading word, and one more otherwise.
    pub fn charge(&self) -> u64 {
        let reading = self.reading_word();
        let n = reading.len();
        let mut place = vec![0usize; n + 1];
        for (pos, &entry) in reading.iter().enumerate() {
            place[entry] = pos;
        }
        let mut total = 0u64;
        let mut index = 0u64;
        for entry in 1..n {
            if place[entry + 1] < place[entry] {
                index += 1;
            }
            total += index;
        }
        total
    }

    /// Schützenberger evacuation. Repeatedly deletes the top-left entry,
    /// slides the hole to a corner by always pulling in the smaller of the
    /// neighbours below and to the right, and freezes a decreasing sentinel
    /// in the freed corner. The frozen cells assemble the evacuated tableau.
    ///
    /// An involution; moreover `charge = thomas_p . evacuation`.
    pub fn evacuation(&self) -> StandardTableau {
        let n = self.size();
        let mut grid: Vec<Vec<usize>> = self.rows.clone();
        let mut frozen: Vec<Vec<bool>> = self
            .rows
            .iter()
            .map(|row| vec![false; row.len()])
            .collect();
        for sentinel in (1..=n).rev() {
            // The active entry at (0,0) is the smallest; delete it and let
            // the hole fall through the active region.
            let (mut r, mut c) = (0, 0);
            loop {
                let below = (grid.get(r + 1))
                    .and_then(|row| row.get(c))
                    .filter(|_| !frozen[r + 1][c])
                    .copied();
                let right = (grid[r].get(c + 1))
                    .filter(|_| !frozen[r][c + 1])
                    .copied();
                match (below, right) {
                    (None, None) => break,
                    (Some(_), None) => {
                        grid[r][c] = grid[r + 1][c];
                        r += 1;
                    }
                    (None, Some(_)) => {
                        grid[r][c] = grid[r][c + 1];
                        c += 1;
                    }
                    (Some(b), Some(x)) => {
                        if b < x {
                            grid[r][c] = grid[r + 1][c];
                            r += 1;
                        } else {
                            grid[r][c] = grid[r][c + 1];
                            c += 1;
                        }
                    }
                }
            }
            grid[r][c] = sentinel;
            frozen[r][c] = true;
        }
        StandardTableau { rows: grid }
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(tableau: StandardTableau) -> Self {
        tableau.rows
    }
}

/// Builds the standard tableau of a lattice word over `{0, .., r-1}`:
/// entry `j` goes to row `w_j + 1`. Errors where a prefix letter count
/// overtakes the count of the previous letter.
pub fn tableau_from_word(word: &[u8]) -> Result<StandardTableau> {
    let height = word.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); height];
    for (j, &letter) in word.iter().enumerate() {
        let r = letter as usize;
        if r > 0 && rows[r - 1].len() <= rows[r].len() {
            return Err(Error::NotLatticeWord(j + 1));
        }
        rows[r].push(j + 1);
    }
    // Rows fill left to right with growing entries and the ballot condition
    // keeps row lengths ordered, so the filling is standard by construction.
    debug_assert!(StandardTableau::new(rows.clone()).is_ok());
    Ok(StandardTableau { rows })
}

/// Inverse of [`tableau_from_word`]: letter `j` is the row of entry `j`,
/// zero-based.
pub fn word_from_tableau(tableau: &StandardTableau) -> Vec<u8> {
    let mut word = vec![0u8; tableau.size()];
    for (r, row) in tableau.rows().iter().enumerate() {
        for &entry in row {
            word[entry - 1] = r as u8;
        }
    }
    word
}

/// All standard tableaux of the given shape, in lexicographic order of
/// their lattice words.
pub fn enumerate_tableaux(shape: &[usize]) -> Vec<StandardTableau> {
    assert!(
        shape.windows(2).all(|pair| pair[0] >= pair[1]),
        "shape parts must weakly decrease"
    );
    let n: usize = shape.iter().sum();
    let mut filled = vec![0usize; shape.len()];
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fn place(
        entry: usize,
        n: usize,
        shape: &[usize],
        filled: &mut [usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if entry > n {
            let rows = rows.iter().filter(|row| !row.is_empty()).cloned().collect();
            out.push(StandardTableau { rows });
            return;
        }
        for r in 0..shape.len() {
            let addable = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if addable {
                rows[r].push(entry);
                filled[r] += 1;
                place(entry + 1, n, shape, filled, rows, out);
                filled[r] -= 1;
                rows[r].pop();
            }
        }
    }
    place(1, n, shape, &mut filled, &mut rows, &mut out);
    out
}

/// All partitions of `n` (weakly decreasing parts), largest part first.
pub fn shapes_of_size(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn extend(remaining: usize, cap: usize, parts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(parts.clone());
            return;
        }
        for part in (1..=cap.min(remaining)).rev() {
            parts.push(part);
            extend(remaining - part, part, parts, out);
            parts.pop();
        }
    }
    extend(n, n, &mut parts, &mut out);
    out
}
