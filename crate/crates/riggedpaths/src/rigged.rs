//! Rigged configurations: partitions whose rows carry integer labels
//! bounded by vacancy numbers.
//!
//! A configuration of level `l` and size `L` is a partition `nu` with parts
//! of length at most `l` (the strings), each part carrying a rigging
//! `J >= 0`. With `m_j` strings of length `j` and the cumulative counts
//! `Q_j = sum_i min(i, j) m_i`, the vacancy numbers are
//!
//! ```text
//! P_j = L - 2 Q_j,    1 <= j <= l.
//! ```
//!
//! Admissibility asks `P_j >= 0` for every `j` and `0 <= J <= P_{nu_i}` for
//! every string. Vacancies are always recomputed from the shape and the
//! size; nothing stores them incrementally, so bookkeeping identities
//! reduce to assertions.
//!
//! In the vacuum sector (`2 |nu| = L`) each configuration carries a
//! quasi-particle momentum: a quadratic form in the vacancies plus the
//! rigging sum. The per-content charge constant [`rc_charge`] grades the
//! fermionic side of the tableau identities; [`rc_charge_quadratic`] is the
//! same constant in Cartan-form, used as a cross-check.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

/// Multiplicity vector of string lengths: `m[j - 1]` strings of length `j`,
/// for `j = 1 ..= level`. The level is the vector length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringContent {
    m: Vec<usize>,
}

impl StringContent {
    pub fn new(multiplicities: Vec<usize>) -> Self {
        StringContent { m: multiplicities }
    }

    /// Content of a partition with parts bounded by `level`.
    pub fn from_partition(parts: &[usize], level: usize) -> Result<Self> {
        let mut m = vec![0usize; level];
        for &part in parts {
            if part == 0 || part > level {
                return Err(Error::RowExceedsLevel {
                    length: part,
                    level,
                });
            }
            m[part - 1] += 1;
        }
        Ok(StringContent { m })
    }

    pub fn level(&self) -> usize {
        self.m.len()
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.m
    }

    /// Strings of length `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.m.get(j - 1).copied().unwrap_or(0)
    }

    /// Total number of cells `sum_j j * m_j`.
    pub fn cells(&self) -> usize {
        self.m.iter().enumerate().map(|(i, &m)| (i + 1) * m).sum()
    }

    /// Partition parts, longest first.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::new();
        for j in (1..=self.level()).rev() {
            parts.extend(std::iter::repeat(j).take(self.multiplicity(j)));
        }
        parts
    }

    /// Cumulative counts `Q_j = sum_i min(i, j) m_i`.
    pub fn q_numbers(&self) -> Vec<usize> {
        (1..=self.level())
            .map(|j| {
                self.m
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (i + 1).min(j) * m)
                    .sum()
            })
            .collect()
    }

    /// Vacancy numbers `P_j = size - 2 Q_j`, possibly negative.
    pub fn vacancies(&self, size: usize) -> Vec<i64> {
        self.q_numbers()
            .iter()
            .map(|&qj| size as i64 - 2 * qj as i64)
            .collect()
    }

    /// True when every vacancy is nonnegative at this size.
    pub fn is_admissible(&self, size: usize) -> bool {
        self.vacancies(size).iter().all(|&p| p >= 0)
    }
}

/// All contents of the given level with `cells` total cells (partitions of
/// `cells` into parts at most `level`), ascending lexicographically by
/// multiplicity vector.
pub fn enumerate_contents(level: usize, cells: usize) -> Vec<StringContent> {
    let mut out = Vec::new();
    let mut m = vec![0usize; level];
    fn fill(j: usize, remaining: usize, m: &mut Vec<usize>, out: &mut Vec<StringContent>) {
        if j == 0 {
            if remaining == 0 {
                out.push(StringContent::new(m.clone()));
            }
            return;
        }
        // Longest strings chosen first so that lower indices are freer.
        for count in 0..=remaining / j {
            m[j - 1] = count;
            fill(j - 1, remaining - count * j, m, out);
        }
        m[j - 1] = 0;
    }
    if level == 0 {
        if cells == 0 {
            out.push(StringContent::new(Vec::new()));
        }
        return out;
    }
    fill(level, cells, &mut m, &mut out);
    out.sort();
    out
}

/// Charge constant of a content at the given size,
/// `( L(L-1) - L Q_1 - sum_j m_j P_j ) / 2`, an exact integer.
pub fn rc_charge(content: &StringContent, size: usize) -> i64 {
    let l = size as i64;
    let q1 = content.q_numbers().first().copied().unwrap_or(0) as i64;
    let vacancies = content.vacancies(size);
    let mixed: i64 = content
        .m
        .iter()
        .zip(&vacancies)
        .map(|(&m, &p)| m as i64 * p)
        .sum();
    let doubled = l * (l - 1) - l * q1 - mixed;
    debug_assert_eq!(doubled % 2, 0, "charge constant is an exact integer");
    doubled / 2
}

/// The same charge constant in Cartan form,
/// `L(L-1)/2 - L^2/4 + (1/4) sum_{i,j} P_i C_ij P_j`, valid in the vacuum
/// sector only (it needs the top vacancy to vanish).
pub fn rc_charge_quadratic(content: &StringContent, size: usize) -> i64 {
    assert_eq!(size % 2, 0, "Cartan form lives in the vacuum sector");
    assert_eq!(
        2 * content.cells(),
        size,
        "Cartan form lives in the vacuum sector"
    );
    let vacancies = content.vacancies(size);
    if let Some(&top) = vacancies.last() {
        assert_eq!(top, 0, "top vacancy vanishes in the vacuum sector");
    }
    let l = size as i64;
    let quadratic = cartan_quadratic(&vacancies);
    debug_assert_eq!(quadratic % 4, 0);
    l * (l - 1) / 2 - l * l / 4 + quadratic / 4
}

/// `sum_{i,j=1}^{l-1} P_i C_ij P_j` for the tridiagonal Cartan matrix
/// (2 on the diagonal, -1 off it). The range stops one short of the level:
/// the top vacancy vanishes in the vacuum sector, so longer ranges agree.
fn cartan_quadratic(vacancies: &[i64]) -> i64 {
    let inner = vacancies.len().saturating_sub(1);
    let mut total = 0i64;
    for i in 0..inner {
        total += 2 * vacancies[i] * vacancies[i];
        if i + 1 < inner {
            total -= 2 * vacancies[i] * vacancies[i + 1];
        }
    }
    total
}

/// Half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One string: a length and its rigging.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RiggedRow {
    pub length: usize,
    pub rigging: u64,
}

/// Rigged configuration of a fixed level and size. Rows are kept in
/// canonical order: length descending, riggings ascending within a block of
/// equal lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Deserialize)]
#[serde(try_from = "RiggedConfigurationWire")]
pub struct RiggedConfiguration {
    level: usize,
    size: usize,
    rows: Vec<RiggedRow>,
}

/// Wire shape for serde: named fields in the order size, level, rows.
#[derive(Deserialize)]
struct RiggedConfigurationWire {
    size: usize,
    level: usize,
    rows: Vec<RiggedRow>,
}

impl RiggedConfiguration {
    /// Structural validation: every row length within `1 ..= level` and no
    /// more cells than the size supports. Rows are sorted into canonical
    /// order. Admissibility is a separate, weaker-failure question; see
    /// [`RiggedConfiguration::is_admissible`].
    pub fn new(level: usize, size: usize, rows: Vec<RiggedRow>) -> Result<Self> {
        for row in &rows {
            if row.length == 0 || row.length > level {
                return Err(Error::RowExceedsLevel {
                    length: row.length,
                    level,
                });
            }
        }
        let cells: usize = rows.iter().map(|row| row.length).sum();
        if cells > size {
            return Err(Error::TooManyCells { cells, size });
        }
        let mut rows = rows;
        rows.sort_by(|a, b| b.length.cmp(&a.length).then(a.rigging.cmp(&b.rigging)));
        Ok(RiggedConfiguration { level, size, rows })
    }

    pub fn empty(level: usize, size: usize) -> Self {
        RiggedConfiguration {
            level,
            size,
            rows: Vec::new(),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> &[RiggedRow] {
        &self.rows
    }

    pub fn cells(&self) -> usize {
        self.rows.iter().map(|row| row.length).sum()
    }

    pub fn content(&self) -> StringContent {
        let mut m = vec![0usize; self.level];
        for row in &self.rows {
            m[row.length - 1] += 1;
        }
        StringContent::new(m)
    }

    pub fn vacancies(&self) -> Vec<i64> {
        self.content().vacancies(self.size)
    }

    /// Every vacancy nonnegative and every rigging within its bound.
    pub fn is_admissible(&self) -> bool {
        let vacancies = self.vacancies();
        if vacancies.iter().any(|&p| p < 0) {
            return false;
        }
        self.rows
            .iter()
            .all(|row| row.rigging as i64 <= vacancies[row.length - 1])
    }

    /// True when the cells account for exactly half the size.
    pub fn is_vacuum(&self) -> bool {
        2 * self.cells() == self.size
    }

    /// Quasi-particle momentum: a quarter of the Cartan quadratic form in
    /// the vacancies plus the rigging sum. Vacuum sector only.
    pub fn momentum(&self) -> Result<u64> {
        if !self.is_admissible() {
            return Err(Error::Inadmissible("momentum needs an admissible input"));
        }
        if !self.is_vacuum() {
            return Err(Error::NotVacuum);
        }
        let vacancies = self.vacancies();
        if let Some(&top) = vacancies.last() {
            assert_eq!(top, 0, "top vacancy vanishes in the vacuum sector");
        }
        let quadratic = cartan_quadratic(&vacancies);
        assert!(quadratic >= 0 && quadratic % 4 == 0);
        let riggings: u64 = self.rows.iter().map(|row| row.rigging).sum();
        Ok(quadratic as u64 / 4 + riggings)
    }

    /// Half-integer labels `I_{j,mu} = J_{j,mu} + mu - (P_j + m_j + 1)/2`,
    /// block by block in canonical row order. Labels within one block are
    /// pairwise distinct because riggings there weakly increase.
    pub fn takahashi(&self) -> Result<Vec<HalfInt>> {
        if !self.is_admissible() {
            return Err(Error::Inadmissible("labels need an admissible input"));
        }
        let vacancies = self.vacancies();
        let content = self.content();
        let mut out = Vec::with_capacity(self.rows.len());
        let mut index_in_block = 0usize;
        let mut block_length = usize::MAX;
        for row in &self.rows {
            if row.length != block_length {
                block_length = row.length;
                index_in_block = 0;
            }
            index_in_block += 1;
            let p = vacancies[row.length - 1];
            let m = content.multiplicity(row.length) as i64;
            let twice = 2 * row.rigging as i64 + 2 * index_in_block as i64 - (p + m + 1);
            out.push(HalfInt::from_twice(twice));
        }
        Ok(out)
    }

    /// Rigging flip: every rigging `J` in a block becomes `P_j - J`. An
    /// involution exchanging minimal and maximal configurations.
    pub fn sigma(&self) -> Result<Self> {
        if !self.is_admissible() {
            return Err(Error::Inadmissible("flip needs an admissible input"));
        }
        let vacancies = self.vacancies();
        let rows = self
            .rows
            .iter()
            .map(|row| RiggedRow {
                length: row.length,
                rigging: (vacancies[row.length - 1] - row.rigging as i64) as u64,
            })
            .collect();
        RiggedConfiguration::new(self.level, self.size, rows)
    }
}

impl Serialize for RiggedConfiguration {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("RiggedConfiguration", 3)?;
        state.serialize_field("size", &self.size)?;
        state.serialize_field("level", &self.level)?;
        state.serialize_field("rows", &self.rows)?;
        state.end()
    }
}

impl TryFrom<RiggedConfigurationWire> for RiggedConfiguration {
    type Error = Error;

    fn try_from(wire: RiggedConfigurationWire) -> Result<Self> {
        RiggedConfiguration::new(wire.level, wire.size, wire.rows)
    }
}

impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        let vacancies = self.vacancies();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for _ in 0..row.length {
                write!(f, "[]")?;
            }
            write!(f, " {} (of {})", row.rigging, vacancies[row.length - 1])?;
        }
        Ok(())
    }
}

/// All riggings zero.
pub fn minimal_rc(content: &StringContent, size: usize) -> Result<RiggedConfiguration> {
    if !content.is_admissible(size) {
        return Err(Error::Inadmissible("content has a negative vacancy"));
    }
    let rows = content
        .parts()
        .into_iter()
        .map(|length| RiggedRow { length, rigging: 0 })
        .collect();
    RiggedConfiguration::new(content.level(), size, rows)
}

/// Every rigging at its vacancy bound.
pub fn maximal_rc(content: &StringContent, size: usize) -> Result<RiggedConfiguration> {
    if !content.is_admissible(size) {
        return Err(Error::Inadmissible("content has a negative vacancy"));
    }
    let vacancies = content.vacancies(size);
    let rows = content
        .parts()
        .into_iter()
        .map(|length| RiggedRow {
            length,
            rigging: vacancies[length - 1] as u64,
        })
        .collect();
    RiggedConfiguration::new(content.level(), size, rows)
}

/// All admissible vacuum configurations of the given level and even size:
/// contents ascending by multiplicity vector, riggings in lexicographic
/// order block by block (weakly increasing within a block).
pub fn enumerate_rcs(level: usize, length: usize) -> Vec<RiggedConfiguration> {
    assert!(length % 2 == 0, "vacuum configurations have even size");
    let mut out = Vec::new();
    for content in enumerate_contents(level, length / 2) {
        if !content.is_admissible(length) {
            continue;
        }
        let vacancies = content.vacancies(length);
        // Per-block choices: weakly increasing tuples bounded by the
        // vacancy, enumerated lexicographically.
        let block_choices: Vec<Vec<Vec<u64>>> = (1..=level)
            .map(|j| block_riggings(content.multiplicity(j), vacancies[j - 1] as u64))
            .collect();
        let mut chosen: Vec<usize> = Vec::new();
        product(&block_choices, &mut chosen, &mut |choice| {
            let mut rows = Vec::new();
            for (index, &pick) in choice.iter().enumerate() {
                let length = index + 1;
                for &rigging in &block_choices[index][pick] {
                    rows.push(RiggedRow { length, rigging });
                }
            }
            out.push(
                RiggedConfiguration::new(level, length, rows)
                    .expect("enumerated rows are structurally valid"),
            );
        });
    }
    out
}

/// Weakly increasing `count`-tuples over `0 ..= bound`, lexicographic.
fn block_riggings(count: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(count);
    fn grow(count: usize, bound: u64, floor: u64, tuple: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if tuple.len() == count {
            out.push(tuple.clone());
            return;
        }
        for value in floor..=bound {
            tuple.push(value);
            grow(count, bound, value, tuple, out);
            tuple.pop();
        }
    }
    grow(count, bound, 0, &mut tuple, &mut out);
    out
}

/// Walks the cartesian product of index choices in lexicographic order.
fn product(choices: &[Vec<Vec<u64>>], chosen: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if chosen.len() == choices.len() {
        emit(chosen);
        return;
    }
    for pick in 0..choices[chosen.len()].len() {
        chosen.push(pick);
        product(choices, chosen, emit);
        chosen.pop();
    }
}

/// Closed-form count of admissible vacuum configurations: the sum over
/// contents of products of ordinary binomials `C(P_j + m_j, m_j)`.
pub fn rc_count_formula(level: usize, length: usize) -> u64 {
    assert!(length % 2 == 0, "vacuum configurations have even size");
    let mut total = 0u64;
    for content in enumerate_contents(level, length / 2) {
        if !content.is_admissible(length) {
            continue;
        }
        let vacancies = content.vacancies(length);
        let mut product = 1u64;
        for j in 1..=level {
            let m = content.multiplicity(j) as u64;
            let p = vacancies[j - 1] as u64;
            product *= choose(p + m, m);
        }
        total += product;
    }
    total
}

fn choose(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}
