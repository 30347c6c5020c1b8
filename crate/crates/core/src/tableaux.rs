//! Columns, straight shapes, ribbons, and tuples of tableaux.
//!
//! Rows are stored bottom-to-top and the reading word lists rows in storage
//! order, each left-to-right.  Semistandardness is uniform across shapes:
//! every row weakly increases left-to-right, and every cell strictly exceeds
//! the cell directly above it.  In a ribbon, consecutive rows overlap in one
//! column — each row starts in the column where the row below it ends — so
//! the only vertical comparison is between the last cell of a row and the
//! first cell of the row above.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::omp::{DescentData, Letter, Weight};

// ---------------------------------------------------------------------------
// shapes
// ---------------------------------------------------------------------------

/// A ribbon: row lengths bottom-to-top, every length positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RibbonShape {
    rows: Vec<usize>,
}

impl RibbonShape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::BadShape("a ribbon needs at least one row".to_string()));
        }
        if rows.iter().any(|&w| w == 0) {
            return Err(Error::BadShape("ribbon rows must be nonempty".to_string()));
        }
        Ok(Self { rows })
    }

    /// Row lengths, bottom-to-top.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn column_count(&self) -> usize {
        self.size() - (self.row_count() - 1)
    }

    /// Leftmost column (0-based) of storage row `j`.
    pub fn row_start(&self, j: usize) -> usize {
        self.rows[..j].iter().map(|w| w - 1).sum()
    }

    /// Heights of the columns left-to-right; adjacent columns share a row.
    pub fn column_heights(&self) -> Vec<usize> {
        let cols = self.column_count();
        let mut heights = vec![0usize; cols];
        for j in 0..self.row_count() {
            let start = self.row_start(j);
            for c in start..start + self.rows[j] {
                heights[c] += 1;
            }
        }
        heights
    }

    /// Rebuilds the ribbon whose columns have the given heights, adjacent
    /// columns sharing exactly one row (each column starts at the top row of
    /// the previous one).
    pub fn from_column_heights(heights: &[usize]) -> Result<Self> {
        if heights.is_empty() {
            return Err(Error::BadShape("a ribbon needs at least one column".to_string()));
        }
        if heights.iter().any(|&h| h == 0) {
            return Err(Error::BadShape("ribbon columns must be nonempty".to_string()));
        }
        let mut bottom = 0usize; // bottom row of the current column
        let mut tops = Vec::with_capacity(heights.len());
        let mut bottoms = Vec::with_capacity(heights.len());
        for &h in heights {
            bottoms.push(bottom);
            tops.push(bottom + h - 1);
            bottom += h - 1;
        }
        let row_count = *tops.last().unwrap() + 1;
        let mut rows = vec![0usize; row_count];
        for (c, &h) in heights.iter().enumerate() {
            for j in bottoms[c]..bottoms[c] + h {
                rows[j] += 1;
            }
        }
        Self::new(rows)
    }
}

/// The shapes a [`Tableau`] can have.  A column may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    Column { length: usize },
    /// `partition` is weakly decreasing with positive parts.
    Straight { partition: Vec<usize> },
    Ribbon(RibbonShape),
}

impl Shape {
    pub fn ribbon(rows: Vec<usize>) -> Result<Self> {
        Ok(Self::Ribbon(RibbonShape::new(rows)?))
    }

    pub fn straight(partition: Vec<usize>) -> Result<Self> {
        if partition.iter().any(|&p| p == 0) {
            return Err(Error::BadShape("straight-shape rows must be nonempty".to_string()));
        }
        if !partition.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::BadShape(format!(
                "straight shape {partition:?} is not weakly decreasing"
            )));
        }
        Ok(Self::Straight { partition })
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Shape::Column { .. } => Ok(()),
            Shape::Straight { partition } => Self::straight(partition.clone()).map(drop),
            Shape::Ribbon(r) => RibbonShape::new(r.rows.clone()).map(drop),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Shape::Column { length } => *length,
            Shape::Straight { partition } => partition.iter().sum(),
            Shape::Ribbon(r) => r.size(),
        }
    }

    /// Row lengths in storage order (bottom-to-top).
    pub fn storage_rows(&self) -> Vec<usize> {
        match self {
            Shape::Column { length } => vec![1; *length],
            Shape::Straight { partition } => partition.iter().rev().copied().collect(),
            Shape::Ribbon(r) => r.rows.clone(),
        }
    }

    /// Leftmost column of storage row `j`.
    fn row_start(&self, j: usize) -> usize {
        match self {
            Shape::Column { .. } | Shape::Straight { .. } => 0,
            Shape::Ribbon(r) => r.row_start(j),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Column { length } => write!(f, "column[{length}]"),
            Shape::Straight { partition } => {
                write!(f, "straight(")?;
                for (i, p) in partition.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            Shape::Ribbon(r) => {
                write!(f, "ribbon(")?;
                for (i, p) in r.rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Tableau
// ---------------------------------------------------------------------------

/// A filling of a [`Shape`], stored as rows bottom-to-top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Shape,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    /// Validates the shape, the fit of the rows, and semistandardness.
    pub fn new(shape: Shape, rows: Vec<Vec<Letter>>) -> Result<Self> {
        shape.validate()?;
        let widths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if widths != shape.storage_rows() {
            return Err(Error::BadShape(format!(
                "rows of widths {widths:?} do not fill {shape}"
            )));
        }
        let t = Self { shape, rows };
        t.check_semistandard()?;
        Ok(t)
    }

    /// A column tableau from its entries top-to-bottom (strictly increasing).
    pub fn column(entries_top_to_bottom: &[Letter]) -> Result<Self> {
        let rows = entries_top_to_bottom.iter().rev().map(|&x| vec![x]).collect();
        Self::new(Shape::Column { length: entries_top_to_bottom.len() }, rows)
    }

    /// A ribbon tableau from rows given bottom-to-top.
    pub fn ribbon(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let shape = Shape::ribbon(rows.iter().map(Vec::len).collect())?;
        Self::new(shape, rows)
    }

    /// A straight-shape tableau from rows given top-to-bottom, longest first.
    pub fn straight(rows_top_to_bottom: Vec<Vec<Letter>>) -> Result<Self> {
        let shape = Shape::straight(rows_top_to_bottom.iter().map(Vec::len).collect())?;
        let rows = rows_top_to_bottom.into_iter().rev().collect();
        Self::new(shape, rows)
    }

    fn check_semistandard(&self) -> Result<()> {
        for (j, row) in self.rows.iter().enumerate() {
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return Err(Error::NotSemistandard(format!(
                    "storage row {j} is not weakly increasing"
                )));
            }
            if row.iter().any(|&x| x == 0) {
                return Err(Error::NotSemistandard(format!("storage row {j} contains 0")));
            }
            if j == 0 {
                continue;
            }
            let below = &self.rows[j - 1];
            match &self.shape {
                Shape::Column { .. } => {
                    if below[0] <= row[0] {
                        return Err(Error::NotSemistandard(format!(
                            "column entries {} and {} do not decrease upward",
                            below[0], row[0]
                        )));
                    }
                }
                Shape::Straight { .. } => {
                    // lower rows are at most as wide; compare aligned cells
                    for c in 0..below.len().min(row.len()) {
                        if below[c] <= row[c] {
                            return Err(Error::NotSemistandard(format!(
                                "cells {} and {} in column {c} do not decrease upward",
                                below[c], row[c]
                            )));
                        }
                    }
                }
                Shape::Ribbon(_) => {
                    // the single shared column: last of the lower row,
                    // first of the upper row
                    if *below.last().unwrap() <= row[0] {
                        return Err(Error::NotSemistandard(format!(
                            "overlap cells {} and {} do not decrease upward",
                            below.last().unwrap(),
                            row[0]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Rows bottom-to-top.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn max_letter(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Entries of a column tableau, top-to-bottom (strictly increasing).
    pub fn column_entries(&self) -> Vec<Letter> {
        debug_assert!(matches!(self.shape, Shape::Column { .. }));
        self.rows.iter().rev().map(|r| r[0]).collect()
    }

    /// Rows bottom-to-top, each left-to-right.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Rebuilds a tableau of the given shape from its reading word.
    pub fn from_reading_word(shape: Shape, word: &[Letter]) -> Result<Self> {
        shape.validate()?;
        if word.len() != shape.size() {
            return Err(Error::BadShape(format!(
                "word of length {} does not fill {shape}",
                word.len()
            )));
        }
        let mut rows = Vec::new();
        let mut at = 0;
        for w in shape.storage_rows() {
            rows.push(word[at..at + w].to_vec());
            at += w;
        }
        Self::new(shape, rows)
    }

    /// Whether the entries are exactly `1..=size`, each once.
    pub fn is_standard(&self) -> bool {
        let mut entries = self.reading_word();
        entries.sort_unstable();
        entries.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn weight(&self, r: Letter) -> Result<Weight> {
        let max = self.max_letter();
        if max > r {
            return Err(Error::AlphabetTooSmall { bound: r, letter: max });
        }
        let mut v = vec![0usize; r as usize];
        for &x in self.rows.iter().flatten() {
            v[x as usize - 1] += 1;
        }
        Ok(Weight(v))
    }
}

impl fmt::Display for Tableau {
    /// Draws the grid top row first, indenting ribbon rows to their columns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let cell = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for j in (0..self.rows.len()).rev() {
            let indent = self.shape.row_start(j) * (cell + 1);
            write!(f, "{:indent$}", "")?;
            for (c, x) in self.rows[j].iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x:>cell$}")?;
            }
            if j > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawTableau { shape: self.shape.clone(), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTableau::deserialize(d)?;
        Self::new(raw.shape, raw.rows).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    shape: Shape,
    rows: Vec<Vec<Letter>>,
}

// ---------------------------------------------------------------------------
// TableauTuple
// ---------------------------------------------------------------------------

/// A sequence of column tableaux followed by one ribbon tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableauTuple {
    columns: Vec<Tableau>,
    ribbon: Tableau,
}

impl TableauTuple {
    pub fn new(columns: Vec<Tableau>, ribbon: Tableau) -> Result<Self> {
        for t in &columns {
            if !matches!(t.shape(), Shape::Column { .. }) {
                return Err(Error::BadShape(format!("{} is not a column", t.shape())));
            }
        }
        if !matches!(ribbon.shape(), Shape::Ribbon(_)) {
            return Err(Error::BadShape(format!("{} is not a ribbon", ribbon.shape())));
        }
        Ok(Self { columns, ribbon })
    }

    pub fn columns(&self) -> &[Tableau] {
        &self.columns
    }

    pub fn ribbon(&self) -> &Tableau {
        &self.ribbon
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(Tableau::size).collect()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Tableau::size).sum::<usize>() + self.ribbon.size()
    }

    pub fn max_letter(&self) -> Letter {
        self.columns
            .iter()
            .map(Tableau::max_letter)
            .max()
            .unwrap_or(0)
            .max(self.ribbon.max_letter())
    }

    /// Concatenated reading words of the columns, then of the ribbon.
    pub fn reading_word(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.size());
        for t in &self.columns {
            w.extend(t.reading_word());
        }
        w.extend(self.ribbon.reading_word());
        w
    }

    /// Rebuilds a tuple of the same shapes from a new reading word.
    pub fn with_reading_word(&self, word: &[Letter]) -> Result<Self> {
        if word.len() != self.size() {
            return Err(Error::BadShape(format!(
                "word of length {} does not fill a tuple of {} cells",
                word.len(),
                self.size()
            )));
        }
        let mut at = 0;
        let mut columns = Vec::with_capacity(self.columns.len());
        for t in &self.columns {
            let len = t.size();
            columns.push(Tableau::from_reading_word(t.shape().clone(), &word[at..at + len])?);
            at += len;
        }
        let ribbon = Tableau::from_reading_word(self.ribbon.shape().clone(), &word[at..])?;
        Self::new(columns, ribbon)
    }

    pub fn weight(&self, r: Letter) -> Result<Weight> {
        let max = self.max_letter();
        if max > r {
            return Err(Error::AlphabetTooSmall { bound: r, letter: max });
        }
        let mut v = vec![0usize; r as usize];
        for x in self.reading_word() {
            v[x as usize - 1] += 1;
        }
        Ok(Weight(v))
    }
}

impl fmt::Display for TableauTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, t) in self.columns.iter().enumerate() {
            writeln!(f, "column {}:", j + 1)?;
            writeln!(f, "{t}")?;
        }
        writeln!(f, "ribbon:")?;
        write!(f, "{}", self.ribbon)
    }
}

impl Serialize for TableauTuple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawTuple { columns: self.columns.clone(), ribbon: self.ribbon.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TableauTuple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTuple::deserialize(d)?;
        Self::new(raw.columns, raw.ribbon).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RawTuple {
    columns: Vec<Tableau>,
    ribbon: Tableau,
}

// ---------------------------------------------------------------------------
// the shape attached to descent data
// ---------------------------------------------------------------------------

/// Column lengths and the ribbon shape determined by descent data: with
/// position gaps `d` and block gaps `i` (both of length `count + 1`), the
/// ribbon rows are `d[0] - i[0]` single cells topped by rows of lengths
/// `i[0], …, i[count]`, and column `j` (1-based) has `d[t] - i[t]` cells for
/// `t = count + 1 - j`.  Fails when any of those differences is negative.
pub fn shape_from_descents(dd: &DescentData) -> Result<(Vec<usize>, RibbonShape)> {
    let d = dd.position_gaps();
    let i = dd.block_gaps();
    let count = dd.descent_count();
    for t in 0..=count {
        if d[t] < i[t] {
            return Err(Error::BadDescentData(format!(
                "gap {} holds {} positions but {} blocks",
                t + 1,
                d[t],
                i[t]
            )));
        }
    }
    let mut rows = vec![1usize; d[0] - i[0]];
    rows.extend_from_slice(&i);
    let ribbon = RibbonShape::new(rows)?;
    let column_lengths: Vec<usize> = (1..=count).map(|j| d[count + 1 - j] - i[count + 1 - j]).collect();
    Ok((column_lengths, ribbon))
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// All semistandard fillings with entries in `1..=r`, in lexicographic order
/// of the reading word.
pub fn enumerate_ssyt(shape: &Shape, r: Letter) -> Vec<Tableau> {
    enumerate_fillings(shape, r, false)
}

/// All standard fillings (entries exactly `1..=size`), in lexicographic order
/// of the reading word.
pub fn enumerate_syt(shape: &Shape) -> Vec<Tableau> {
    enumerate_fillings(shape, shape.size() as Letter, true)
}

fn enumerate_fillings(shape: &Shape, r: Letter, distinct: bool) -> Vec<Tableau> {
    shape.validate().expect("enumeration needs a valid shape");
    let widths = shape.storage_rows();
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    let mut used = vec![false; r as usize + 1];
    let mut out = Vec::new();
    fill_cells(shape, &widths, r, distinct, &mut used, &mut rows, &mut out);
    out
}

/// Depth-first fill in storage order, trying candidate entries ascending.
fn fill_cells(
    shape: &Shape,
    widths: &[usize],
    r: Letter,
    distinct: bool,
    used: &mut [bool],
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<Tableau>,
) {
    let row_full = rows.last().map_or(true, |row| row.len() == widths[rows.len() - 1]);
    if row_full {
        if rows.len() == widths.len() {
            out.push(
                Tableau::new(shape.clone(), rows.clone())
                    .expect("the search only builds valid fillings"),
            );
        } else {
            rows.push(Vec::new());
            fill_cells(shape, widths, r, distinct, used, rows, out);
            rows.pop();
        }
        return;
    }
    let j = rows.len() - 1;
    let in_row = rows[j].len();
    let low = if in_row > 0 { rows[j][in_row - 1] } else { 1 };
    let high = below_value(shape, rows, j, in_row).map_or(r, |b| (b - 1).min(r));
    for x in low..=high {
        if distinct && used[x as usize] {
            continue;
        }
        used[x as usize] = true;
        rows[j].push(x);
        fill_cells(shape, widths, r, distinct, used, rows, out);
        rows[j].pop();
        used[x as usize] = false;
    }
}

/// The entry directly below cell `(j, c)` when one exists; every candidate
/// for the cell must stay strictly below it.
fn below_value(shape: &Shape, rows: &[Vec<Letter>], j: usize, c: usize) -> Option<Letter> {
    if j == 0 {
        return None;
    }
    let below = &rows[j - 1];
    match shape {
        Shape::Column { .. } => Some(below[0]),
        Shape::Straight { .. } => below.get(c).copied(),
        Shape::Ribbon(_) => {
            if c == 0 {
                Some(*below.last().unwrap())
            } else {
                None
            }
        }
    }
}

/// `(descent count, descent sum)` of a standard tableau: `i` is a descent
/// when `i + 1` sits in a row strictly below `i` in the displayed tableau,
/// that is, in a strictly earlier storage row.
pub fn syt_des_maj(t: &Tableau) -> (usize, usize) {
    assert!(t.is_standard(), "descents of entries need a standard filling");
    let n = t.size();
    let mut row_of = vec![0usize; n + 1];
    for (j, row) in t.rows().iter().enumerate() {
        for &x in row {
            row_of[x as usize] = j;
        }
    }
    let mut count = 0;
    let mut sum = 0;
    for i in 1..n {
        if row_of[i + 1] < row_of[i] {
            count += 1;
            sum += i;
        }
    }
    (count, sum)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omp::OrderedMultisetPartition;

    fn example_ribbon() -> Tableau {
        Tableau::ribbon(vec![
            vec![5],
            vec![4],
            vec![2],
            vec![1, 4],
            vec![3, 4],
            vec![2],
            vec![1, 2],
        ])
        .unwrap()
    }

    #[test]
    fn ribbon_geometry() {
        let shape = RibbonShape::new(vec![1, 1, 1, 2, 2, 1, 2]).unwrap();
        assert_eq!(shape.size(), 10);
        assert_eq!(shape.column_count(), 4);
        let starts: Vec<usize> = (0..7).map(|j| shape.row_start(j)).collect();
        assert_eq!(starts, vec![0, 0, 0, 0, 1, 2, 2]);
        assert_eq!(shape.column_heights(), vec![4, 2, 3, 1]);
        assert_eq!(RibbonShape::from_column_heights(&[4, 2, 3, 1]).unwrap(), shape);
        assert!(RibbonShape::new(vec![1, 0, 2]).is_err());
        assert!(RibbonShape::new(vec![]).is_err());
    }

    #[test]
    fn column_heights_round_trip() {
        for rows in [vec![1], vec![3, 1, 2], vec![2, 2, 2], vec![1, 1, 1, 1]] {
            let shape = RibbonShape::new(rows).unwrap();
            assert_eq!(
                RibbonShape::from_column_heights(&shape.column_heights()).unwrap(),
                shape
            );
        }
    }

    #[test]
    fn semistandard_checks() {
        // the ribbon used throughout: valid as given
        let t = example_ribbon();
        assert_eq!(t.size(), 10);
        assert_eq!(t.reading_word(), vec![5, 4, 2, 1, 4, 3, 4, 2, 1, 2]);
        // breaking the overlap (below must exceed above) fails
        assert!(Tableau::ribbon(vec![vec![2], vec![2]]).is_err());
        assert!(Tableau::ribbon(vec![vec![1, 3], vec![3, 4]]).is_err());
        assert!(Tableau::ribbon(vec![vec![3, 1]]).is_err());
        // columns decrease upward in storage = increase downward on display
        assert!(Tableau::column(&[1, 5]).is_ok());
        assert!(Tableau::column(&[5, 1]).is_err());
        assert!(Tableau::column(&[2, 2]).is_err());
        assert!(Tableau::column(&[]).unwrap().is_empty());
        // straight shapes: rows weakly increase, columns strictly increase
        // downward
        assert!(Tableau::straight(vec![vec![1, 1], vec![2]]).is_ok());
        assert!(Tableau::straight(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::straight(vec![vec![2, 1], vec![3]]).is_err());
    }

    #[test]
    fn reading_word_round_trip() {
        let t = example_ribbon();
        let back = Tableau::from_reading_word(t.shape().clone(), &t.reading_word()).unwrap();
        assert_eq!(back, t);
        let c = Tableau::column(&[1, 3]).unwrap();
        assert_eq!(c.reading_word(), vec![3, 1]);
        assert_eq!(c.column_entries(), vec![1, 3]);
        let s = Tableau::straight(vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(s.reading_word(), vec![2, 1, 2]);
        assert_eq!(
            Tableau::from_reading_word(s.shape().clone(), &[2, 1, 2]).unwrap(),
            s
        );
        assert!(Tableau::from_reading_word(s.shape().clone(), &[1, 2, 2]).is_err());
    }

    #[test]
    fn tuple_reading_word_and_rebuild() {
        let tuple = TableauTuple::new(
            vec![
                Tableau::column(&[1, 5]).unwrap(),
                Tableau::column(&[1, 3]).unwrap(),
                Tableau::column(&[6]).unwrap(),
            ],
            example_ribbon(),
        )
        .unwrap();
        assert_eq!(
            tuple.reading_word(),
            vec![5, 1, 3, 1, 6, 5, 4, 2, 1, 4, 3, 4, 2, 1, 2]
        );
        assert_eq!(tuple.column_lengths(), vec![2, 2, 1]);
        let same = tuple.with_reading_word(&tuple.reading_word()).unwrap();
        assert_eq!(same, tuple);
        let mut w = tuple.reading_word();
        w.swap(0, 1); // column becomes increasing in reading order: invalid
        assert!(tuple.with_reading_word(&w).is_err());
    }

    #[test]
    fn shapes_from_descent_data() {
        let dd = |s: &str| {
            s.parse::<OrderedMultisetPartition>()
                .unwrap()
                .minimaj_order()
                .descent_data()
        };
        let (cols, ribbon) = shape_from_descents(&dd("124|45|3|461|231|1|25")).unwrap();
        assert_eq!(cols, vec![2, 2, 1]);
        assert_eq!(ribbon.rows(), &[1, 1, 1, 2, 2, 1, 2]);
        let (cols, ribbon) = shape_from_descents(&dd("157|24|56|468|13|123")).unwrap();
        assert_eq!(cols, vec![3, 0, 2, 3]);
        assert_eq!(ribbon.rows(), &[1, 1, 2, 1, 1, 1]);
        // no descents: no columns, the ribbon holds everything — two single
        // cells (the non-heads) under a row of width k
        let (cols, ribbon) = shape_from_descents(&dd("1|123")).unwrap();
        assert!(cols.is_empty());
        assert_eq!(ribbon.rows(), &[1, 1, 2]);
        assert_eq!(ribbon.size(), 4);
        // a syntactic key with more descent blocks than positions in a gap
        let bad = DescentData::new(4, 4, vec![1], vec![3]).unwrap();
        assert!(shape_from_descents(&bad).is_err());
    }

    #[test]
    fn shape_accounts_for_every_letter() {
        for p in crate::omp::enumerate_partitions(5, 3, 3) {
            let ddata = p.minimaj_order().descent_data();
            let (cols, ribbon) = shape_from_descents(&ddata).unwrap();
            let a = ribbon.rows().iter().filter(|&&w| w == 1).count();
            assert_eq!(
                cols.iter().sum::<usize>() + ribbon.size(),
                p.n(),
                "{p}"
            );
            assert!(ribbon.size() >= p.k(), "{p} {a}");
        }
    }

    #[test]
    fn ssyt_enumeration_counts() {
        // a single column of length 2 with letters ≤ 3: choose 2 of 3
        assert_eq!(enumerate_ssyt(&Shape::Column { length: 2 }, 3).len(), 3);
        // the empty column has exactly one filling
        assert_eq!(enumerate_ssyt(&Shape::Column { length: 0 }, 3).len(), 1);
        // straight shape (2,1): 2 fillings with 2 letters, 8 with 3
        let s21 = Shape::straight(vec![2, 1]).unwrap();
        assert_eq!(enumerate_ssyt(&s21, 2).len(), 2);
        assert_eq!(enumerate_ssyt(&s21, 3).len(), 8);
        // a two-cell ribbon row vs column with 2 letters
        assert_eq!(enumerate_ssyt(&Shape::ribbon(vec![2]).unwrap(), 2).len(), 3);
        assert_eq!(enumerate_ssyt(&Shape::ribbon(vec![1, 1]).unwrap(), 2).len(), 1);
        for t in enumerate_ssyt(&s21, 3) {
            assert_eq!(t.weight(3).unwrap().total(), 3);
        }
    }

    #[test]
    fn syt_enumeration_and_statistics() {
        let s21 = Shape::straight(vec![2, 1]).unwrap();
        let tableaux = enumerate_syt(&s21);
        assert_eq!(tableaux.len(), 2);
        let mut stats: Vec<(usize, usize)> = tableaux.iter().map(syt_des_maj).collect();
        stats.sort_unstable();
        assert_eq!(stats, vec![(1, 1), (1, 2)]);
        // a vertical strip of 3 cells: one tableau, descents everywhere
        let col3 = Shape::straight(vec![1, 1, 1]).unwrap();
        let tableaux = enumerate_syt(&col3);
        assert_eq!(tableaux.len(), 1);
        assert_eq!(syt_des_maj(&tableaux[0]), (2, 3));
        // a horizontal strip: one tableau, no descents
        let row3 = Shape::straight(vec![3]).unwrap();
        assert_eq!(syt_des_maj(&enumerate_syt(&row3)[0]), (0, 0));
        // hook (2,1,1): 3 standard tableaux
        assert_eq!(enumerate_syt(&Shape::straight(vec![2, 1, 1]).unwrap()).len(), 3);
    }

    #[test]
    fn standard_detection() {
        let t = Tableau::straight(vec![vec![1, 2], vec![3]]).unwrap();
        assert!(t.is_standard());
        let t = Tableau::straight(vec![vec![1, 1], vec![2]]).unwrap();
        assert!(!t.is_standard());
    }

    #[test]
    fn display_grids() {
        let t = Tableau::straight(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.to_string(), "1 2\n3");
        let r = Tableau::ribbon(vec![vec![2], vec![1, 3]]).unwrap();
        assert_eq!(r.to_string(), "1 3\n2");
        assert_eq!(Tableau::column(&[]).unwrap().to_string(), "∅");
    }

    #[test]
    fn serde_round_trips() {
        let t = example_ribbon();
        let js = serde_json::to_string(&t).unwrap();
        assert!(js.contains("\"kind\":\"ribbon\""));
        assert_eq!(serde_json::from_str::<Tableau>(&js).unwrap(), t);
        let bad = js.replace("[1,4]", "[4,1]");
        assert!(serde_json::from_str::<Tableau>(&bad).is_err());
        let tuple = TableauTuple::new(vec![Tableau::column(&[2]).unwrap()], example_ribbon()).unwrap();
        let js = serde_json::to_string(&tuple).unwrap();
        assert_eq!(serde_json::from_str::<TableauTuple>(&js).unwrap(), tuple);
    }
}
