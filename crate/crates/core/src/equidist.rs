//! The column-reading map between tableau tuples and weak partitions, the
//! block-shift operators on those partitions, and the composite bijection
//! that carries the rotation statistic onto the major index.
//!
//! Reading a tuple column by column (bottom to top) yields a weak partition
//! in major-index order.  The left shift repairs its empty blocks and
//! end-of-block descents to produce a genuine partition; the right shift
//! undoes this.  Conjugating the tableau map with the reading map and the
//! left shift exchanges the two statistics exactly.

use serde::{Deserialize, Serialize};

use crate::bijection::{from_tableaux, to_tableaux};
use crate::error::{Error, Result};
use crate::omp::{Letter, OrderedMultisetPartition, WeakOrderedMultisetPartition};
use crate::tableaux::{RibbonShape, Shape, Tableau, TableauTuple};

// ---------------------------------------------------------------------------
// the reading map and its inverse
// ---------------------------------------------------------------------------

/// Reads each column of the tuple (the single-column factors left to right,
/// then the ribbon's columns left to right) bottom to top as one block.
/// Empty columns become empty blocks; every nonempty block word is strictly
/// decreasing, so the result is in major-index order by construction.
pub fn read_tuple(tt: &TableauTuple) -> WeakOrderedMultisetPartition {
    let mut blocks: Vec<Vec<Letter>> = tt.columns().iter().map(Tableau::column_entries).collect();
    let ribbon = tt.ribbon();
    let Shape::Ribbon(shape) = ribbon.shape() else {
        unreachable!("tuple ribbons always carry ribbon shapes");
    };
    let rows = ribbon.rows();
    for c in 0..shape.column_count() {
        let mut cells = Vec::new();
        for (j, row) in rows.iter().enumerate() {
            let start = shape.row_start(j);
            if c >= start && c < start + row.len() {
                cells.push(row[c - start]);
            }
        }
        blocks.push(cells);
    }
    WeakOrderedMultisetPartition::from_blocks(blocks)
        .expect("tableau columns carry distinct letters")
}

/// Concatenated word of the blocks in decreasing order, with each letter's
/// 1-based block index.
fn flat_major_word(blocks: &[Vec<Letter>]) -> Vec<(Letter, usize)> {
    let mut out = Vec::new();
    for (j0, b) in blocks.iter().enumerate() {
        for &x in b.iter().rev() {
            out.push((x, j0 + 1));
        }
    }
    out
}

/// 1-based indices of blocks whose last letter strictly exceeds the next
/// letter of the word (a descent at the end of the block).
fn end_descent_blocks(blocks: &[Vec<Letter>]) -> Vec<usize> {
    let word = flat_major_word(blocks);
    let mut out = Vec::new();
    for t in 0..word.len().saturating_sub(1) {
        let (x, bx) = word[t];
        let (y, by) = word[t + 1];
        if x > y && by > bx {
            out.push(bx);
        }
    }
    out
}

/// The image test for the reading map: the rightmost block that is empty or
/// ends in a descent must have at least `k` letters strictly after it.
fn check_read_image(wp: &WeakOrderedMultisetPartition) -> Result<()> {
    let blocks = wp.blocks();
    let k = blocks.len();
    let mut offending: Vec<usize> = blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.is_empty())
        .map(|(j, _)| j + 1)
        .collect();
    offending.extend(end_descent_blocks(blocks));
    let Some(&p) = offending.iter().max() else {
        return Ok(());
    };
    let after: usize = blocks[p..].iter().map(Vec::len).sum();
    if after < k {
        return Err(Error::NotInReadImage(format!(
            "block {p} is empty or ends in a descent, with only {after} of the required {k} letters after it"
        )));
    }
    Ok(())
}

/// Rebuilds the tuple from a weak partition in the image of the reading
/// map: the suffix of blocks holding the last `k` letters becomes the
/// ribbon's columns and the earlier blocks the single-column factors.
pub fn read_inverse(wp: &WeakOrderedMultisetPartition) -> Result<TableauTuple> {
    check_read_image(wp)?;
    let blocks = wp.blocks();
    let k = blocks.len();
    // smallest 1-based s such that blocks s..=k hold at least k letters;
    // the image test above forces n >= k, so the scan always succeeds
    let mut held = 0usize;
    let mut s = 1;
    for j in (1..=k).rev() {
        held += blocks[j - 1].len();
        if held >= k {
            s = j;
            break;
        }
    }
    let region = &blocks[s - 1..];
    let heights: Vec<usize> = region.iter().map(Vec::len).collect();
    let shape = RibbonShape::from_column_heights(&heights)
        .expect("the image test leaves no empty block in the ribbon region");
    let mut rows: Vec<Vec<Letter>> = shape.rows().iter().map(|&w| vec![0; w]).collect();
    let mut bottom = 0usize;
    for (c, block) in region.iter().enumerate() {
        if c > 0 {
            bottom += heights[c - 1] - 1;
        }
        // bottom-to-top cells are the block word in decreasing order
        for (t, &x) in block.iter().rev().enumerate() {
            let row = bottom + t;
            rows[row][c - shape.row_start(row)] = x;
        }
    }
    let ribbon =
        Tableau::ribbon(rows).expect("the image test makes the rebuilt ribbon semistandard");
    let columns = blocks[..s - 1]
        .iter()
        .map(|b| Tableau::column(b).expect("blocks are strictly increasing"))
        .collect();
    Ok(TableauTuple::new(columns, ribbon).expect("rebuilt parts form a valid tuple"))
}

// ---------------------------------------------------------------------------
// shift operators
// ---------------------------------------------------------------------------

/// Why a block was scheduled for a shift step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftReason {
    EmptyBlock,
    EndDescent,
}

/// One step of a shift: the 1-based stopping block, the letters moved (in
/// word order), why the block was scheduled, and the major index afterwards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftStep {
    pub block_index: usize,
    pub moved: Vec<Letter>,
    pub reason: ShiftReason,
    pub maj_after: usize,
}

/// A full shift run: every intermediate state (starting with the input) and
/// the step that produced each successive state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftTrace {
    pub states: Vec<WeakOrderedMultisetPartition>,
    pub steps: Vec<ShiftStep>,
}

fn insert_letter(block: &mut Vec<Letter>, x: Letter) {
    match block.binary_search(&x) {
        Ok(_) => panic!("a shift step would duplicate letter {x} within a block"),
        Err(i) => block.insert(i, x),
    }
}

fn remove_letter(block: &mut Vec<Letter>, x: Letter) {
    let i = block
        .binary_search(&x)
        .expect("a moved letter is present in its source block");
    block.remove(i);
}

fn snapshot(blocks: &[Vec<Letter>]) -> WeakOrderedMultisetPartition {
    WeakOrderedMultisetPartition::from_blocks(blocks.to_vec())
        .expect("shift states keep blocks valid")
}

/// The left shift: processes the blocks that are empty or end in a descent
/// from right to left; for stopping block `p` it moves every letter from
/// just after the block through the `p`-th descent of the remaining word one
/// block to the left.  Defined exactly on the image of the reading map
/// composed with the tableau bijection; the result has no empty blocks.
pub fn l_shift(wp: &WeakOrderedMultisetPartition) -> Result<(OrderedMultisetPartition, ShiftTrace)> {
    check_read_image(wp)?;
    let mut current: Vec<Vec<Letter>> = wp.blocks().to_vec();
    let mut offending: Vec<(usize, ShiftReason)> = current
        .iter()
        .enumerate()
        .filter(|(_, b)| b.is_empty())
        .map(|(j, _)| (j + 1, ShiftReason::EmptyBlock))
        .collect();
    offending.extend(
        end_descent_blocks(&current)
            .into_iter()
            .map(|j| (j, ShiftReason::EndDescent)),
    );
    offending.sort_unstable_by(|a, b| b.0.cmp(&a.0));

    let mut trace = ShiftTrace { states: vec![wp.clone()], steps: Vec::new() };
    for (p, reason) in offending {
        let word = flat_major_word(&current);
        let start = word
            .iter()
            .position(|&(_, b)| b > p)
            .expect("letters follow every stopping block in the image");
        let mut endpos = None;
        let mut descents = 0usize;
        for t in start..word.len().saturating_sub(1) {
            if word[t].0 > word[t + 1].0 {
                descents += 1;
                if descents == p {
                    endpos = Some(t);
                    break;
                }
            }
        }
        let Some(endpos) = endpos else {
            return Err(Error::NotInReadImage(format!(
                "fewer than {p} descents follow block {p}"
            )));
        };
        let moved = word[start..=endpos].to_vec();
        for &(x, b) in &moved {
            remove_letter(&mut current[b - 1], x);
        }
        for &(x, b) in &moved {
            insert_letter(&mut current[b - 2], x);
        }
        let state = snapshot(&current);
        trace.steps.push(ShiftStep {
            block_index: p,
            moved: moved.iter().map(|&(x, _)| x).collect(),
            reason,
            maj_after: state.major_index(),
        });
        trace.states.push(state);
    }
    let out = snapshot(&current)
        .to_partition()
        .expect("the left shift leaves no block empty");
    Ok((out, trace))
}

/// The right shift: processes the blocks that end in a descent from left to
/// right; for stopping block `q` it moves the `q` letters ending at that
/// block's last letter one block to the right, possibly creating empty
/// blocks.  Inverse to the left shift.
pub fn r_shift(p: &OrderedMultisetPartition) -> (WeakOrderedMultisetPartition, ShiftTrace) {
    let mut current: Vec<Vec<Letter>> = p.blocks().to_vec();
    let stops = end_descent_blocks(&current);
    let mut trace = ShiftTrace {
        states: vec![p.clone().into()],
        steps: Vec::new(),
    };
    let k = current.len();
    for q in stops {
        let word = flat_major_word(&current);
        let last = word
            .iter()
            .rposition(|&(_, b)| b == q)
            .expect("a stopping block never empties before its turn");
        assert!(last + 1 >= q, "at least q letters end at the stopping block");
        let moved = word[last + 1 - q..=last].to_vec();
        for &(x, b) in &moved {
            assert!(b < k, "letters never shift past the final block");
            remove_letter(&mut current[b - 1], x);
        }
        for &(x, b) in &moved {
            insert_letter(&mut current[b], x);
        }
        let state = snapshot(&current);
        trace.steps.push(ShiftStep {
            block_index: q,
            moved: moved.iter().map(|&(x, _)| x).collect(),
            reason: ShiftReason::EndDescent,
            maj_after: state.major_index(),
        });
        trace.states.push(state);
    }
    (snapshot(&current), trace)
}

// ---------------------------------------------------------------------------
// the composite bijection
// ---------------------------------------------------------------------------

/// Sends a partition to one with the same weight whose major index equals
/// the input's rotation statistic, returning the shift trace as well.
pub fn minimaj_to_maj_with_trace(p: &OrderedMultisetPartition) -> (OrderedMultisetPartition, ShiftTrace) {
    let (_, tuple) = to_tableaux(p);
    let wp = read_tuple(&tuple);
    l_shift(&wp).expect("reading a tuple from the tableau map lands in the shift domain")
}

/// See [`minimaj_to_maj_with_trace`]; drops the trace.
pub fn minimaj_to_maj(p: &OrderedMultisetPartition) -> OrderedMultisetPartition {
    minimaj_to_maj_with_trace(p).0
}

/// Inverse of [`minimaj_to_maj`]: right shift, un-read, un-map.
pub fn maj_to_minimaj_with_trace(p: &OrderedMultisetPartition) -> (OrderedMultisetPartition, ShiftTrace) {
    let (wp, trace) = r_shift(p);
    let tuple = read_inverse(&wp).expect("the right shift lands in the reading image");
    let out = from_tableaux(&tuple).expect("the rebuilt tuple satisfies the key constraints");
    (out, trace)
}

/// See [`maj_to_minimaj_with_trace`]; drops the trace.
pub fn maj_to_minimaj(p: &OrderedMultisetPartition) -> OrderedMultisetPartition {
    maj_to_minimaj_with_trace(p).0
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::omp::enumerate_partitions;

    fn omp(s: &str) -> OrderedMultisetPartition {
        s.parse().unwrap()
    }

    fn weak(s: &str) -> WeakOrderedMultisetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn reading_the_worked_example() {
        let (_, tuple) = to_tableaux(&omp("1|56|4|3712|21|1|34"));
        let wp = read_tuple(&tuple);
        assert_eq!(wp, weak("41|21|7|∅|61|54321|3"));
        assert_eq!(wp.major_index(), 28);
        // the inverse reassembles the same tuple
        assert_eq!(read_inverse(&wp).unwrap(), tuple);
    }

    #[test]
    fn reading_the_second_example() {
        let (_, tuple) = to_tableaux(&omp("124|45|3|461|231|1|25"));
        let wp = read_tuple(&tuple);
        assert_eq!(wp, weak("51|31|6|5421|43|421|2"));
        assert_eq!(read_inverse(&wp).unwrap(), tuple);
    }

    #[test]
    fn reading_a_single_cell() {
        let (_, tuple) = to_tableaux(&omp("3"));
        assert_eq!(read_tuple(&tuple), weak("3"));
    }

    #[test]
    fn image_test_rejections() {
        // an end-of-block descent too close to the end
        assert!(matches!(
            read_inverse(&weak("432|1")),
            Err(Error::NotInReadImage(_))
        ));
        // an empty final block
        assert!(matches!(
            read_inverse(&weak("21|3|∅")),
            Err(Error::NotInReadImage(_))
        ));
        // the same inputs are rejected by the left shift
        assert!(l_shift(&weak("432|1")).is_err());
    }

    #[test]
    fn read_inverse_small_golden() {
        let tuple = read_inverse(&weak("1|32")).unwrap();
        assert_eq!(tuple.columns().len(), 1);
        assert_eq!(tuple.columns()[0].column_entries(), vec![1]);
        assert_eq!(tuple.ribbon().rows(), &[vec![3], vec![2]]);
        assert_eq!(read_tuple(&tuple), weak("1|32"));
    }

    #[test]
    fn left_shift_worked_example() {
        let (out, trace) = l_shift(&weak("41|21|7|∅|61|54321|3")).unwrap();
        assert_eq!(out, omp("41|21|761|54|3|21|3"));
        assert_eq!(out.major_index(), 22);
        assert_eq!(trace.states.len(), 3);
        assert_eq!(trace.states[1], weak("41|21|7|61|543|21|3"));
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(trace.steps[0].block_index, 4);
        assert_eq!(trace.steps[0].moved, vec![6, 1, 5, 4, 3]);
        assert_eq!(trace.steps[0].reason, ShiftReason::EmptyBlock);
        assert_eq!(trace.steps[0].maj_after, 25);
        assert_eq!(trace.steps[1].block_index, 3);
        assert_eq!(trace.steps[1].moved, vec![6, 1, 5, 4]);
        assert_eq!(trace.steps[1].reason, ShiftReason::EndDescent);
        assert_eq!(trace.steps[1].maj_after, 22);
    }

    #[test]
    fn right_shift_worked_example() {
        let (out, trace) = r_shift(&omp("41|21|761|54|3|21|3"));
        assert_eq!(out, weak("41|21|7|∅|61|54321|3"));
        assert_eq!(trace.states[1], weak("41|21|7|61|543|21|3"));
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(trace.steps[0].block_index, 4);
        assert_eq!(trace.steps[0].moved, vec![6, 1, 5, 4]);
        assert_eq!(trace.steps[0].maj_after, 25);
        assert_eq!(trace.steps[1].block_index, 5);
        assert_eq!(trace.steps[1].moved, vec![6, 1, 5, 4, 3]);
        assert_eq!(trace.steps[1].maj_after, 28);
    }

    #[test]
    fn shifts_can_be_trivial() {
        let wp = read_tuple(&to_tableaux(&omp("1|123")).1);
        let (out, trace) = l_shift(&wp).unwrap();
        assert_eq!(out, omp("123|1"));
        assert!(trace.steps.is_empty());
        let (back, trace) = r_shift(&out);
        assert_eq!(back, wp);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn statistic_exchange_worked_example() {
        let p = omp("1|56|4|3712|21|1|34");
        assert_eq!(p.minimaj(), 22);
        let (image, trace) = minimaj_to_maj_with_trace(&p);
        assert_eq!(image, omp("41|21|761|54|3|21|3"));
        assert_eq!(image.major_index(), 22);
        let majors: Vec<usize> = trace.states.iter().map(|s| s.major_index()).collect();
        assert_eq!(majors, vec![28, 25, 22]);
        assert_eq!(maj_to_minimaj(&image), p);
    }

    #[test]
    fn trivial_statistic_exchange() {
        let p = omp("1|123");
        assert_eq!(p.minimaj(), 0);
        let image = minimaj_to_maj(&p);
        assert_eq!(image.major_index(), 0);
    }

    #[test]
    fn exchange_is_a_statistic_preserving_bijection_small() {
        for (n, k, r) in [(4, 2, 3), (5, 3, 3), (4, 3, 2)] {
            let all = enumerate_partitions(n, k, r);
            let mut seen = std::collections::BTreeSet::new();
            let mut by_minimaj: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
            let mut by_major: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
            for p in &all {
                let w = p.weight(r).unwrap().0;
                *by_minimaj.entry((w.clone(), p.minimaj())).or_default() += 1;
                *by_major.entry((w, p.major_index())).or_default() += 1;

                let (image, trace) = minimaj_to_maj_with_trace(p);
                assert_eq!(image.major_index(), p.minimaj(), "{p}");
                assert_eq!(image.weight(r).unwrap(), p.weight(r).unwrap(), "{p}");
                assert_eq!(maj_to_minimaj(&image), *p, "{p}");
                assert!(seen.insert(image.clone()), "duplicate image for {p}");

                // per-step drop: one less than the block index for an empty
                // block, the block index itself for an end descent
                for (i, step) in trace.steps.iter().enumerate() {
                    let before = trace.states[i].major_index();
                    let expected = match step.reason {
                        ShiftReason::EmptyBlock => before - step.block_index + 1,
                        ShiftReason::EndDescent => before - step.block_index,
                    };
                    assert_eq!(step.maj_after, expected, "{p} step {i}");
                }

                // the reading image ends with the block heads, in order
                let tuple = to_tableaux(p).1;
                let wp = read_tuple(&tuple);
                let word: Vec<Letter> = flat_major_word(wp.blocks())
                    .into_iter()
                    .map(|(x, _)| x)
                    .collect();
                let heads = p.minimaj_order().heads();
                assert_eq!(word[word.len() - k..].to_vec(), heads, "{p}");

                // the shifts invert each other on both sides
                let (back, _) = l_shift(&r_shift(&image).0).unwrap();
                assert_eq!(back, image, "{p}");
                assert_eq!(r_shift(&l_shift(&wp).unwrap().0).0, wp, "{p}");
            }
            assert_eq!(seen.len(), all.len());
            assert_eq!(by_minimaj, by_major, "histograms differ at n={n} k={k} r={r}");
        }
    }
}
