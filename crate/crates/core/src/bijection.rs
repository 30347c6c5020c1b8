//! The weight-preserving bijection between partitions and tableau tuples.
//!
//! A partition in minimaj order breaks at its descents into windows of
//! weakly increasing letters.  The non-head letters of the first window fill
//! the single-cell bottom rows of a ribbon and the heads fill its upper rows
//! (one row per window); the non-head letters of each later window fill one
//! column tableau, later windows first.  For fixed descent data the map is a
//! bijection onto *all* tuples of the attached shapes, and the inverse
//! recovers each block by cutting the columns at the heads they straddle.

use crate::error::{Error, Result};
use crate::omp::{DescentData, Letter, OrderedMultisetPartition};
use crate::tableaux::{shape_from_descents, Shape, Tableau, TableauTuple};

/// Maps a partition to its descent data and tableau tuple.
pub fn to_tableaux(p: &OrderedMultisetPartition) -> (DescentData, TableauTuple) {
    let view = p.minimaj_order();
    let dd = view.descent_data();
    let (column_lengths, ribbon_shape) =
        shape_from_descents(&dd).expect("a partition's descent data is consistent");

    // letters in word order, flagged as head (first of a block) or not
    let mut letters: Vec<(Letter, bool)> = Vec::new();
    for b in view.blocks() {
        for (t, &x) in b.iter().enumerate() {
            letters.push((x, t == 0));
        }
    }

    // non-head letters of each window between consecutive descents
    let mut windows: Vec<Vec<Letter>> = Vec::new();
    let mut at = 0;
    for g in dd.position_gaps() {
        let w = letters[at..at + g]
            .iter()
            .filter(|&&(_, is_head)| !is_head)
            .map(|&(x, _)| x)
            .collect();
        windows.push(w);
        at += g;
    }

    let count = dd.descent_count();
    // column j (0-based) takes the non-heads of window count - j
    let columns: Vec<Tableau> = (0..count)
        .map(|j| {
            let entries = &windows[count - j];
            debug_assert_eq!(entries.len(), column_lengths[j]);
            Tableau::column(entries).expect("window non-heads increase strictly")
        })
        .collect();

    // ribbon: the first window's non-heads as single cells (largest lowest),
    // then one row of heads per window
    let mut rows: Vec<Vec<Letter>> = windows[0].iter().rev().map(|&x| vec![x]).collect();
    let heads = view.heads();
    let mut prev = 0;
    for e in dd.block_prefix_totals() {
        rows.push(heads[prev..e].to_vec());
        prev = e;
    }
    let ribbon = Tableau::new(Shape::Ribbon(ribbon_shape), rows)
        .expect("the filled ribbon is semistandard");

    let tuple = TableauTuple::new(columns, ribbon).expect("the factors have the right kinds");
    (dd, tuple)
}

/// Reads the descent data off a tuple's shapes alone: the ribbon's
/// single-cell prefix and upper row lengths give the gap structure, and the
/// column lengths give the remaining position gaps.
pub fn key_from_tuple(tuple: &TableauTuple) -> Result<DescentData> {
    let count = tuple.columns().len();
    let ribbon_rows: Vec<usize> = tuple.ribbon().rows().iter().map(Vec::len).collect();
    let m = ribbon_rows.len();
    if m < count + 1 {
        return Err(Error::BadShape(format!(
            "a ribbon of {m} rows cannot pair with {count} columns"
        )));
    }
    let a = m - (count + 1);
    if ribbon_rows[..a].iter().any(|&w| w != 1) {
        return Err(Error::BadShape(format!(
            "the bottom {a} ribbon rows must be single cells"
        )));
    }
    let block_gaps = &ribbon_rows[a..];
    let column_lengths = tuple.column_lengths();
    let mut position_gaps = Vec::with_capacity(count + 1);
    position_gaps.push(a + block_gaps[0]);
    for t in 1..=count {
        position_gaps.push(column_lengths[count - t] + block_gaps[t]);
    }
    let n: usize = position_gaps.iter().sum();
    let k: usize = block_gaps.iter().sum();
    let mut positions = Vec::with_capacity(count);
    let mut indices = Vec::with_capacity(count);
    let (mut dp, mut ip) = (0, 0);
    for t in 0..count {
        dp += position_gaps[t];
        ip += block_gaps[t];
        positions.push(dp);
        indices.push(ip);
    }
    DescentData::new(n, k, positions, indices)
}

/// Inverse map: rebuilds the partition whose image is the given tuple.
pub fn from_tableaux(tuple: &TableauTuple) -> Result<OrderedMultisetPartition> {
    let key = key_from_tuple(tuple)?;
    let count = key.descent_count();
    let k = key.k();
    let eta = key.block_prefix_totals();

    let ribbon_rows = tuple.ribbon().rows();
    let a = ribbon_rows.len() - (count + 1);
    let mut heads: Vec<Letter> = Vec::with_capacity(k);
    for row in &ribbon_rows[a..] {
        heads.extend(row.iter().copied());
    }
    let spine: Vec<Letter> = ribbon_rows[..a].iter().rev().map(|r| r[0]).collect();

    // letters each block receives beyond its head, 1-based
    let mut extra: Vec<Vec<Letter>> = vec![Vec::new(); k + 1];
    let head = |i: usize| heads[i - 1];

    // Distributes the letters of one column over the blocks `lo..=hi`:
    // an element in `(head(i), head(i+1)]` joins block `i`, anything at most
    // `head(lo + 1)` joins block `lo`, anything above `head(hi)` joins
    // block `hi`.
    let cut = |entries: &[Letter], lo: usize, hi: usize, extra: &mut Vec<Vec<Letter>>| {
        for &x in entries {
            let target = (lo..=hi)
                .rev()
                .find(|&i| i > lo && head(i) < x)
                .unwrap_or(lo);
            extra[target].push(x);
        }
    };

    // first window: blocks 1..=eta[0], with no block below to receive a tail
    cut(&spine, 1, eta[0], &mut extra);

    // window j + 1 spans blocks eta[j]..=eta[j+1]; its lowest letters are the
    // tail of the block the descent lies in
    for j in 0..count {
        let column = tuple.columns()[count - 1 - j].column_entries();
        cut(&column, eta[j], eta[j + 1], &mut extra);
    }

    let blocks: Vec<Vec<Letter>> = (1..=k)
        .map(|i| {
            let mut b = vec![head(i)];
            b.extend(&extra[i]);
            b
        })
        .collect();
    OrderedMultisetPartition::from_blocks(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omp(s: &str) -> OrderedMultisetPartition {
        s.parse().unwrap()
    }

    fn letters(word: &str) -> Vec<Letter> {
        word.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    #[test]
    fn forward_map_first_example() {
        let p = omp("124|45|3|461|231|1|25");
        let (key, tuple) = to_tableaux(&p);
        assert_eq!(key.positions(), &[5, 8, 11]);
        assert_eq!(key.block_indices(), &[2, 4, 5]);
        assert_eq!(tuple.column_lengths(), vec![2, 2, 1]);
        assert_eq!(tuple.columns()[0].column_entries(), vec![1, 5]);
        assert_eq!(tuple.columns()[1].column_entries(), vec![1, 3]);
        assert_eq!(tuple.columns()[2].column_entries(), vec![6]);
        assert_eq!(
            tuple.ribbon().rows(),
            &[
                vec![5],
                vec![4],
                vec![2],
                vec![1, 4],
                vec![3, 4],
                vec![2],
                vec![1, 2]
            ]
        );
        assert_eq!(tuple.reading_word(), letters("513165421434212"));
        assert_eq!(p.weight(6).unwrap(), tuple.weight(6).unwrap());
    }

    #[test]
    fn forward_map_second_example() {
        let p = omp("1|56|4|3712|21|1|34");
        let (key, tuple) = to_tableaux(&p);
        assert_eq!(key.positions(), &[3, 4, 6, 9]);
        assert_eq!(key.block_indices(), &[2, 3, 4, 5]);
        assert_eq!(key.minimaj(), 22);
        assert_eq!(tuple.column_lengths(), vec![2, 2, 1, 0]);
        assert_eq!(tuple.columns()[0].column_entries(), vec![1, 4]);
        assert_eq!(tuple.columns()[1].column_entries(), vec![1, 2]);
        assert_eq!(tuple.columns()[2].column_entries(), vec![7]);
        assert!(tuple.columns()[3].is_empty());
        assert_eq!(
            tuple.ribbon().rows(),
            &[vec![6], vec![1, 5], vec![4], vec![3], vec![2], vec![1, 3]]
        );
    }

    #[test]
    fn key_recovered_from_shapes() {
        for s in ["124|45|3|461|231|1|25", "1|56|4|3712|21|1|34", "1|123", "2|13"] {
            let p = omp(s);
            let (key, tuple) = to_tableaux(&p);
            assert_eq!(key_from_tuple(&tuple).unwrap(), key, "{s}");
        }
    }

    #[test]
    fn inverse_map_on_examples() {
        for s in ["124|45|3|461|231|1|25", "1|56|4|3712|21|1|34", "1|123", "2|13", "123"] {
            let p = omp(s);
            let (_, tuple) = to_tableaux(&p);
            assert_eq!(from_tableaux(&tuple).unwrap(), p, "{s}");
        }
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for (n, k, r) in [(4, 2, 3), (5, 3, 3), (6, 2, 4)] {
            for p in crate::omp::enumerate_partitions(n, k, r) {
                let (key, tuple) = to_tableaux(&p);
                assert_eq!(key.minimaj(), p.minimaj(), "{p}");
                assert_eq!(p.weight(r).unwrap(), tuple.weight(r).unwrap(), "{p}");
                assert_eq!(from_tableaux(&tuple).unwrap(), p, "{p}");
            }
        }
    }

    #[test]
    fn inverse_accepts_any_semistandard_filling() {
        // replace the entries of the worked tuple and invert
        let (key, tuple) = to_tableaux(&omp("124|45|3|461|231|1|25"));
        let retry = tuple
            .with_reading_word(&letters("613275421434212"))
            .unwrap();
        let p = from_tableaux(&retry).unwrap();
        let (key2, tuple2) = to_tableaux(&p);
        assert_eq!(key2, key);
        assert_eq!(tuple2, retry);
    }

    #[test]
    fn key_errors_on_impossible_shapes() {
        // ribbon too short for the number of columns
        let tuple = TableauTuple::new(
            vec![Tableau::column(&[1]).unwrap(), Tableau::column(&[2]).unwrap()],
            Tableau::ribbon(vec![vec![2], vec![1, 3]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(key_from_tuple(&tuple), Err(Error::BadShape(_))));
        // bottom rows of the ribbon must be single cells
        let tuple = TableauTuple::new(
            vec![],
            Tableau::ribbon(vec![vec![1, 2], vec![1]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(key_from_tuple(&tuple), Err(Error::BadShape(_))));
    }
}
