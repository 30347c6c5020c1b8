//! Ordered multiset partitions and their two statistics.
//!
//! An ordered multiset partition is a sequence of nonempty finite sets of
//! positive integers ("blocks").  `n` counts letters with multiplicity, `k`
//! counts blocks.  Blocks are stored canonically as strictly increasing
//! vectors; the two statistics are computed on two different per-block
//! orderings of the same underlying sets:
//!
//! * [`OrderedMultisetPartition::minimaj_order`] rotates each block so the
//!   concatenated word minimizes the major index; summing the descent
//!   positions of that word gives `minimaj`.
//! * [`WeakOrderedMultisetPartition::major_index`] sorts each block in
//!   decreasing order and sums block-relative indices at descents.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Letters are positive integers.
pub type Letter = u32;

// ---------------------------------------------------------------------------
// text form
// ---------------------------------------------------------------------------

/// Renders blocks separated by `|`.  Letters are comma-separated; when every
/// letter is a single digit the commas are dropped ("157|24").  An empty
/// block renders as `∅`.  If the comma form is needed but no comma would
/// appear (all blocks singletons), a trailing comma is added to the first
/// nonempty block so the parser can tell "12" (letters 1,2) from "12," (the
/// letter twelve).
/// Renders block words with `|` separators in the same convention that
/// [`OrderedMultisetPartition`] parses: compact digit runs while every
/// letter stays below ten, comma-separated letters otherwise, `∅` for an
/// empty block.  Blocks are rendered in the order given.
pub fn render_blocks(blocks: &[Vec<Letter>]) -> String {
    let compact = blocks.iter().flatten().all(|&x| x <= 9);
    let mut pieces: Vec<String> = blocks
        .iter()
        .map(|b| {
            if b.is_empty() {
                "∅".to_string()
            } else if compact {
                b.iter().map(|x| x.to_string()).collect()
            } else {
                b.iter().map(|x| x.to_string()).join(",")
            }
        })
        .collect();
    if !compact && !pieces.iter().any(|p| p.contains(',')) {
        if let Some(first) = pieces.iter_mut().find(|p| *p != "∅") {
            first.push(',');
        }
    }
    pieces.join("|")
}

/// Parses the text form produced by [`render_blocks`].  Empty blocks are
/// returned as empty vectors; callers that forbid them reject afterwards.
fn parse_blocks(text: &str) -> Result<Vec<Vec<Letter>>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let comma_form = text.contains(',');
    let mut blocks = Vec::new();
    for (idx0, raw) in text.split('|').enumerate() {
        let index = idx0 + 1;
        let raw = raw.trim();
        let mut letters: Vec<Letter> = Vec::new();
        if raw.is_empty() || raw == "∅" {
            // empty block
        } else if comma_form {
            let mut tokens: Vec<&str> = raw.split(',').map(str::trim).collect();
            if tokens.len() > 1 && tokens.last() == Some(&"") {
                tokens.pop(); // allow one trailing comma (singleton marker)
            }
            for tok in tokens {
                let x: Letter = tok
                    .parse()
                    .ok()
                    .filter(|&x| x > 0)
                    .ok_or_else(|| Error::BadLetter { index, text: tok.to_string() })?;
                letters.push(x);
            }
        } else {
            for ch in raw.chars() {
                let x = ch
                    .to_digit(10)
                    .filter(|&x| x > 0)
                    .ok_or_else(|| Error::BadLetter { index, text: ch.to_string() })?;
                letters.push(x);
            }
        }
        letters.sort_unstable();
        for pair in letters.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::RepeatedLetter { index, letter: pair[0] });
            }
        }
        blocks.push(letters);
    }
    Ok(blocks)
}

fn check_blocks(blocks: &[Vec<Letter>], allow_empty: bool) -> Result<()> {
    for (idx0, b) in blocks.iter().enumerate() {
        let index = idx0 + 1;
        if b.is_empty() && !allow_empty {
            return Err(Error::EmptyBlock { index });
        }
        for &x in b {
            if x == 0 {
                return Err(Error::BadLetter { index, text: "0".to_string() });
            }
        }
        for pair in b.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::RepeatedLetter { index, letter: pair[0] });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// OrderedMultisetPartition
// ---------------------------------------------------------------------------

/// A sequence of nonempty sets of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedMultisetPartition {
    blocks: Vec<Vec<Letter>>, // each strictly increasing and nonempty
}

impl OrderedMultisetPartition {
    /// Builds a partition from blocks given in any order; rejects empty
    /// blocks, zero letters and repeats within a block.
    pub fn from_blocks(blocks: Vec<Vec<Letter>>) -> Result<Self> {
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        check_blocks(&blocks, false)?;
        if blocks.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { blocks })
    }

    /// Number of letters, counted with multiplicity.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Number of blocks.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in canonical (increasing) form.
    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }

    pub fn max_letter(&self) -> Letter {
        self.blocks.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each letter that occurs.
    pub fn letter_multiplicities(&self) -> BTreeMap<Letter, usize> {
        let mut m = BTreeMap::new();
        for &x in self.blocks.iter().flatten() {
            *m.entry(x).or_insert(0) += 1;
        }
        m
    }

    /// Dense weight vector of length `r`; errors when a letter exceeds `r`.
    pub fn weight(&self, r: Letter) -> Result<Weight> {
        let max = self.max_letter();
        if max > r {
            return Err(Error::AlphabetTooSmall { bound: r, letter: max });
        }
        let mut v = vec![0usize; r as usize];
        for &x in self.blocks.iter().flatten() {
            v[x as usize - 1] += 1;
        }
        Ok(Weight(v))
    }

    /// Reorders each block by the right-to-left rotation rule: the last block
    /// is sorted increasingly, and each earlier block is sorted and then
    /// rotated so that its largest letter not exceeding the next block's
    /// first letter comes last (no rotation when no such letter exists).
    pub fn minimaj_order(&self) -> MinimajView {
        let k = self.k();
        let mut ordered: Vec<Vec<Letter>> = vec![Vec::new(); k];
        ordered[k - 1] = self.blocks[k - 1].clone();
        for i in (0..k - 1).rev() {
            let next_head = ordered[i + 1][0];
            let b = &self.blocks[i];
            match b.iter().rposition(|&x| x <= next_head) {
                None => ordered[i] = b.clone(),
                Some(j) => {
                    let mut w = b[j + 1..].to_vec();
                    w.extend_from_slice(&b[..=j]);
                    ordered[i] = w;
                }
            }
        }
        MinimajView::from_ordered(ordered)
    }

    /// Sum of the descent positions of the minimaj-ordered word.
    pub fn minimaj(&self) -> usize {
        let view = self.minimaj_order();
        let word = view.word();
        (1..word.len()).filter(|&p| word[p - 1] > word[p]).sum()
    }

    /// Minimum major index over every way to order each block; the slow
    /// reference computation for `minimaj`.
    pub fn minimaj_brute_force(&self) -> usize {
        let per_block: Vec<Vec<Vec<Letter>>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().permutations(b.len()).collect())
            .collect();
        per_block
            .into_iter()
            .multi_cartesian_product()
            .map(|orderings| {
                let word: Vec<Letter> = orderings.into_iter().flatten().collect();
                (1..word.len()).filter(|&p| word[p - 1] > word[p]).sum()
            })
            .min()
            .expect("a partition has at least one ordering")
    }

    /// Each block sorted decreasingly.
    pub fn major_index_order(&self) -> Vec<Vec<Letter>> {
        major_index_view(&self.blocks)
    }

    pub fn major_index(&self) -> usize {
        extended_major_index(&self.major_index_order())
    }

    pub fn to_weak(&self) -> WeakOrderedMultisetPartition {
        WeakOrderedMultisetPartition { blocks: self.blocks.clone() }
    }
}

impl fmt::Display for OrderedMultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_blocks(&self.blocks))
    }
}

impl FromStr for OrderedMultisetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        check_blocks(&blocks, false)?;
        Ok(Self { blocks })
    }
}

impl Serialize for OrderedMultisetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPartition { blocks: self.blocks.clone(), n: self.n(), k: self.k() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrderedMultisetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPartition::deserialize(d)?;
        let p = Self::from_blocks(raw.blocks.clone()).map_err(D::Error::custom)?;
        raw.check(p.n(), p.k()).map_err(D::Error::custom)?;
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    blocks: Vec<Vec<Letter>>,
    n: usize,
    k: usize,
}

impl RawPartition {
    fn check(&self, n: usize, k: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::WrongLetterCount { declared: self.n, actual: n });
        }
        if self.k != k {
            return Err(Error::WrongBlockCount { declared: self.k, actual: k });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// WeakOrderedMultisetPartition
// ---------------------------------------------------------------------------

/// Like [`OrderedMultisetPartition`] but empty blocks are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakOrderedMultisetPartition {
    blocks: Vec<Vec<Letter>>, // each strictly increasing, possibly empty
}

impl WeakOrderedMultisetPartition {
    pub fn from_blocks(blocks: Vec<Vec<Letter>>) -> Result<Self> {
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        check_blocks(&blocks, true)?;
        if blocks.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { blocks })
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }

    /// Each block sorted decreasingly (empty blocks stay empty).
    pub fn major_index_order(&self) -> Vec<Vec<Letter>> {
        major_index_view(&self.blocks)
    }

    /// Extended major index: with blocks in decreasing order, the last letter
    /// of block `j` carries index `j` and every other letter of block `j`
    /// carries `j - 1`; sum the indices at descents of the concatenated word.
    pub fn major_index(&self) -> usize {
        extended_major_index(&self.major_index_order())
    }

    pub fn weight(&self, r: Letter) -> Result<Weight> {
        let max = self.blocks.iter().flatten().copied().max().unwrap_or(0);
        if max > r {
            return Err(Error::AlphabetTooSmall { bound: r, letter: max });
        }
        let mut v = vec![0usize; r as usize];
        for &x in self.blocks.iter().flatten() {
            v[x as usize - 1] += 1;
        }
        Ok(Weight(v))
    }

    /// Fails when any block is empty.
    pub fn to_partition(&self) -> Result<OrderedMultisetPartition> {
        check_blocks(&self.blocks, false)?;
        Ok(OrderedMultisetPartition { blocks: self.blocks.clone() })
    }
}

impl From<OrderedMultisetPartition> for WeakOrderedMultisetPartition {
    fn from(p: OrderedMultisetPartition) -> Self {
        Self { blocks: p.blocks }
    }
}

impl fmt::Display for WeakOrderedMultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_blocks(&self.blocks))
    }
}

impl FromStr for WeakOrderedMultisetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        Ok(Self { blocks })
    }
}

impl Serialize for WeakOrderedMultisetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPartition { blocks: self.blocks.clone(), n: self.n(), k: self.k() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeakOrderedMultisetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPartition::deserialize(d)?;
        let p = Self::from_blocks(raw.blocks.clone()).map_err(D::Error::custom)?;
        raw.check(p.n(), p.k()).map_err(D::Error::custom)?;
        Ok(p)
    }
}

fn major_index_view(blocks: &[Vec<Letter>]) -> Vec<Vec<Letter>> {
    blocks
        .iter()
        .map(|b| b.iter().rev().copied().collect())
        .collect()
}

pub(crate) fn extended_major_index(view: &[Vec<Letter>]) -> usize {
    let mut word = Vec::new();
    let mut index = Vec::new();
    for (j0, b) in view.iter().enumerate() {
        for (t, &x) in b.iter().enumerate() {
            word.push(x);
            index.push(if t + 1 == b.len() { j0 + 1 } else { j0 });
        }
    }
    (1..word.len())
        .filter(|&p| word[p - 1] > word[p])
        .map(|p| index[p - 1])
        .sum()
}

/// Major index by the running count of completed blocks: `v_0 = 0`,
/// `v_j = v_{j-1} + 1` exactly when position `j` ends its block, and the
/// statistic is the sum of `v_j` over descent positions `j`.  Agrees with
/// [`OrderedMultisetPartition::major_index`]; kept as an independent route.
pub fn major_index_by_recursion(p: &OrderedMultisetPartition) -> usize {
    let view = p.major_index_order();
    let mut word = Vec::new();
    let mut v_at = Vec::new();
    let mut v = 0usize;
    for b in &view {
        for (t, &x) in b.iter().enumerate() {
            if t + 1 == b.len() {
                v += 1;
            }
            word.push(x);
            v_at.push(v);
        }
    }
    (1..word.len())
        .filter(|&p| word[p - 1] > word[p])
        .map(|p| v_at[p - 1])
        .sum()
}

// ---------------------------------------------------------------------------
// MinimajView
// ---------------------------------------------------------------------------

/// One block of a [`MinimajView`], split as `head · upper · tail`:
/// `upper` letters strictly exceed `head`, and `tail` letters never exceed
/// the following block's head.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockParts {
    pub head: Letter,
    pub upper: Vec<Letter>,
    pub tail: Vec<Letter>,
}

/// A partition with every block in minimaj order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimajView {
    blocks: Vec<Vec<Letter>>,
    parts: Vec<BlockParts>,
}

impl MinimajView {
    fn from_ordered(ordered: Vec<Vec<Letter>>) -> Self {
        let k = ordered.len();
        let mut parts = Vec::with_capacity(k);
        for i in 0..k {
            let w = &ordered[i];
            let head = w[0];
            let inner_descent = (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]);
            let (upper, tail) = match inner_descent {
                Some(p) => (w[1..=p].to_vec(), w[p + 1..].to_vec()),
                None if i + 1 == k => (w[1..].to_vec(), Vec::new()),
                None => {
                    let next_head = ordered[i + 1][0];
                    if *w.last().unwrap() <= next_head {
                        (Vec::new(), w[1..].to_vec())
                    } else {
                        (w[1..].to_vec(), Vec::new())
                    }
                }
            };
            parts.push(BlockParts { head, upper, tail });
        }
        Self { blocks: ordered, parts }
    }

    /// Blocks as ordered words.
    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }

    pub fn parts(&self) -> &[BlockParts] {
        &self.parts
    }

    /// First letter of each block.
    pub fn heads(&self) -> Vec<Letter> {
        self.parts.iter().map(|p| p.head).collect()
    }

    /// The concatenated word.
    pub fn word(&self) -> Vec<Letter> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// Forgets the ordering.
    pub fn to_partition(&self) -> OrderedMultisetPartition {
        OrderedMultisetPartition::from_blocks(self.blocks.clone())
            .expect("an ordered view stores valid blocks")
    }

    /// Descent positions of the word together with the block each descent
    /// letter lies in.
    pub fn descent_data(&self) -> DescentData {
        let mut word = Vec::new();
        let mut block_of = Vec::new();
        for (i0, b) in self.blocks.iter().enumerate() {
            for &x in b {
                word.push(x);
                block_of.push(i0 + 1);
            }
        }
        let mut positions = Vec::new();
        let mut indices = Vec::new();
        for p in 1..word.len() {
            if word[p - 1] > word[p] {
                positions.push(p);
                indices.push(block_of[p - 1]);
            }
        }
        DescentData::new(word.len(), self.blocks.len(), positions, indices)
            .expect("descents of an ordered word form valid descent data")
    }

    /// Checks the structural facts the ordering guarantees: each block
    /// factors as `head · upper · tail` with both runs increasing, the last
    /// block has an empty tail, and every other block satisfies either
    /// `head < tail <= next head` with no `upper`, or
    /// `tail <= next head < head < upper`.
    pub fn validate(&self) -> Result<()> {
        let k = self.blocks.len();
        let fail = |i: usize, msg: &str| -> Result<()> {
            Err(Error::BadDescentData(format!("block {}: {}", i + 1, msg)))
        };
        for i in 0..k {
            let BlockParts { head, upper, tail } = &self.parts[i];
            let mut rebuilt = vec![*head];
            rebuilt.extend(upper);
            rebuilt.extend(tail);
            if rebuilt != self.blocks[i] {
                return fail(i, "parts do not concatenate to the block");
            }
            if !upper.windows(2).all(|w| w[0] < w[1]) || !tail.windows(2).all(|w| w[0] < w[1]) {
                return fail(i, "runs are not increasing");
            }
            if upper.first().is_some_and(|&u| u <= *head) {
                return fail(i, "upper run does not exceed the head");
            }
            if i + 1 == k {
                if !tail.is_empty() {
                    return fail(i, "last block has a tail");
                }
            } else {
                let next_head = self.parts[i + 1].head;
                if tail.last().is_some_and(|&t| t > next_head) {
                    return fail(i, "tail exceeds the next head");
                }
                let rising = upper.is_empty() && tail.iter().all(|&t| t > *head);
                let wrapped = tail.iter().all(|&t| t < *head)
                    && (upper.is_empty() && tail.is_empty() || next_head < *head);
                if !(rising || wrapped) {
                    return fail(i, "neither a rising block nor a wrapped block");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MinimajView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_blocks(&self.blocks))
    }
}

// ---------------------------------------------------------------------------
// DescentData
// ---------------------------------------------------------------------------

/// Descent positions `D ⊆ {1..n-1}` of a minimaj word together with the
/// block indices `I ⊆ {1..k-1}` holding those descents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentData {
    n: usize,
    k: usize,
    positions: Vec<usize>,
    block_indices: Vec<usize>,
}

impl DescentData {
    pub fn new(n: usize, k: usize, positions: Vec<usize>, block_indices: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::BadDescentData(msg));
        if n == 0 || k == 0 {
            return bad("n and k must be positive".to_string());
        }
        if positions.len() != block_indices.len() {
            return bad(format!(
                "{} descent positions but {} descent blocks",
                positions.len(),
                block_indices.len()
            ));
        }
        if !positions.windows(2).all(|w| w[0] < w[1]) {
            return bad("descent positions must be strictly increasing".to_string());
        }
        if !block_indices.windows(2).all(|w| w[0] < w[1]) {
            return bad("descent blocks must be strictly increasing".to_string());
        }
        if positions.iter().any(|&p| p == 0 || p >= n) {
            return bad(format!("descent positions must lie in 1..={}", n - 1));
        }
        if block_indices.iter().any(|&i| i == 0 || i >= k) {
            return bad(format!("descent blocks must lie in 1..={}", k.saturating_sub(1)));
        }
        Ok(Self { n, k, positions, block_indices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of descents.
    pub fn descent_count(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn block_indices(&self) -> &[usize] {
        &self.block_indices
    }

    /// Gaps between descent positions: `count + 1` values summing to `n`.
    pub fn position_gaps(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.positions.len() + 1);
        let mut prev = 0;
        for &p in &self.positions {
            out.push(p - prev);
            prev = p;
        }
        out.push(self.n - prev);
        out
    }

    /// Gaps between descent blocks: `count + 1` values summing to `k`.
    pub fn block_gaps(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.block_indices.len() + 1);
        let mut prev = 0;
        for &i in &self.block_indices {
            out.push(i - prev);
            prev = i;
        }
        out.push(self.k - prev);
        out
    }

    /// Running totals of [`DescentData::block_gaps`]; the last entry is `k`.
    pub fn block_prefix_totals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0;
        for g in self.block_gaps() {
            acc += g;
            out.push(acc);
        }
        out
    }

    /// Sum of the descent positions.
    pub fn minimaj(&self) -> usize {
        self.positions.iter().sum()
    }
}

impl Serialize for DescentData {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawDescentData {
            n: self.n,
            k: self.k,
            descents: self.positions.clone(),
            descent_blocks: self.block_indices.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DescentData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDescentData::deserialize(d)?;
        Self::new(raw.n, raw.k, raw.descents, raw.descent_blocks).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RawDescentData {
    n: usize,
    k: usize,
    descents: Vec<usize>,
    descent_blocks: Vec<usize>,
}

// ---------------------------------------------------------------------------
// Weight
// ---------------------------------------------------------------------------

/// Dense letter-multiplicity vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn components(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Components sorted decreasingly with zeros dropped.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Whether the vector is already weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|x| x.to_string()).join(","))
    }
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// Compositions of `n` into `parts` nonnegative entries, each at most `max`,
/// in ascending lexicographic order.
fn compositions_bounded(n: usize, parts: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn rec(n: usize, parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = n.saturating_sub((parts - 1) * max);
        for v in lo..=max.min(n) {
            cur.push(v);
            rec(n - v, parts - 1, max, cur, out);
            cur.pop();
        }
    }
    rec(n, parts, max, &mut cur, &mut out);
    out
}

/// All partitions with `n` letters from `{1..r}` in `k` blocks, ordered by
/// (dense weight, blocks) ascending.
pub fn enumerate_partitions(n: usize, k: usize, r: Letter) -> Vec<OrderedMultisetPartition> {
    let mut out = Vec::new();
    if n == 0 || k == 0 || k > n || n > k * r as usize {
        return out;
    }
    for weight in compositions_bounded(n, r as usize, k) {
        let mut batch: Vec<Vec<Vec<Letter>>> = Vec::new();
        let mut blocks = vec![Vec::<Letter>::new(); k];
        distribute(0, &weight, &mut blocks, &mut batch);
        batch.sort();
        out.extend(batch.into_iter().map(|blocks| OrderedMultisetPartition { blocks }));
    }
    out
}

/// Places copies of letter `li + 1` into `count` distinct blocks, for every
/// letter, keeping only distributions that leave no block empty.
fn distribute(
    li: usize,
    weight: &[usize],
    blocks: &mut Vec<Vec<Letter>>,
    out: &mut Vec<Vec<Vec<Letter>>>,
) {
    let empties = blocks.iter().filter(|b| b.is_empty()).count();
    let remaining: usize = weight[li..].iter().sum();
    if remaining < empties {
        return; // cannot fill every block
    }
    if li == weight.len() {
        out.push(blocks.clone());
        return;
    }
    let k = blocks.len();
    let letter = (li + 1) as Letter;
    for choice in (0..k).combinations(weight[li]) {
        for &b in &choice {
            blocks[b].push(letter);
        }
        distribute(li + 1, weight, blocks, out);
        for &b in &choice {
            blocks[b].pop();
        }
    }
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn omp(s: &str) -> OrderedMultisetPartition {
        s.parse().unwrap()
    }

    fn weak(s: &str) -> WeakOrderedMultisetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_render_round_trip() {
        let p = omp("157|24|56|468|13|123");
        assert_eq!(p.n(), 15);
        assert_eq!(p.k(), 6);
        assert_eq!(p.to_string(), "157|24|56|468|13|123");
        // element order inside a block is irrelevant
        assert_eq!(omp("571|42|65|864|31|321"), p);
        // comma form
        let q = omp("3,12|7");
        assert_eq!(q.blocks(), &[vec![3, 12], vec![7]]);
        assert_eq!(q.to_string(), "3,12|7");
        assert_eq!(omp(&q.to_string()), q);
        // singleton big letters force a comma marker
        let r = OrderedMultisetPartition::from_blocks(vec![vec![12], vec![13]]).unwrap();
        assert_eq!(r.to_string(), "12,|13");
        assert_eq!(omp(&r.to_string()), r);
    }

    #[test]
    fn parse_errors_name_the_block() {
        assert!(matches!("1||2".parse::<OrderedMultisetPartition>(), Err(Error::EmptyBlock { index: 2 })));
        assert!(matches!("11|2".parse::<OrderedMultisetPartition>(), Err(Error::RepeatedLetter { index: 1, letter: 1 })));
        assert!(matches!("10|2".parse::<OrderedMultisetPartition>(), Err(Error::BadLetter { index: 1, .. })));
        assert!(matches!("1|a".parse::<OrderedMultisetPartition>(), Err(Error::BadLetter { index: 2, .. })));
        assert!(matches!("".parse::<OrderedMultisetPartition>(), Err(Error::EmptyInput)));
        // weak partitions accept empty blocks both ways
        assert_eq!(weak("1|∅|2").blocks()[1], Vec::<Letter>::new());
        assert_eq!(weak("1||2"), weak("1|∅|2"));
    }

    #[test]
    fn minimaj_order_rotates_blocks() {
        let v = omp("157|24|56|468|13|123").minimaj_order();
        assert_eq!(v.to_string(), "571|24|56|468|31|123");
        assert_eq!(omp("123").minimaj_order().to_string(), "123");
        assert_eq!(omp("2|13").minimaj_order().to_string(), "2|13");
        v.validate().unwrap();
    }

    #[test]
    fn block_parts_split_as_expected() {
        let v = omp("157|24|56|468|13|123").minimaj_order();
        let got: Vec<(Letter, Vec<Letter>, Vec<Letter>)> = v
            .parts()
            .iter()
            .map(|p| (p.head, p.upper.clone(), p.tail.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (5, vec![7], vec![1]),
                (2, vec![], vec![4]),
                (5, vec![6], vec![]),
                (4, vec![6, 8], vec![]),
                (3, vec![], vec![1]),
                (1, vec![2, 3], vec![]),
            ]
        );
        let single = omp("123").minimaj_order();
        assert_eq!(single.parts()[0], BlockParts { head: 1, upper: vec![2, 3], tail: vec![] });
    }

    #[test]
    fn descent_data_of_worked_example() {
        let dd = omp("157|24|56|468|13|123").minimaj_order().descent_data();
        assert_eq!(dd.positions(), &[2, 7, 10, 11]);
        assert_eq!(dd.block_indices(), &[1, 3, 4, 5]);
        assert_eq!(dd.position_gaps(), vec![2, 5, 3, 1, 4]);
        assert_eq!(dd.block_gaps(), vec![1, 2, 1, 1, 1]);
        assert_eq!(dd.block_prefix_totals(), vec![1, 3, 4, 5, 6]);
        assert_eq!(dd.minimaj(), 30);
    }

    #[test]
    fn descent_data_edge_cases() {
        let dd = omp("123").minimaj_order().descent_data();
        assert_eq!(dd.descent_count(), 0);
        assert_eq!(dd.position_gaps(), vec![3]);
        let dd = omp("2|13").minimaj_order().descent_data();
        assert_eq!(dd.positions(), &[1]);
        assert_eq!(dd.block_indices(), &[1]);
    }

    #[test]
    fn minimaj_values() {
        assert_eq!(omp("157|24|56|468|13|123").minimaj(), 30);
        assert_eq!(omp("1|123").minimaj(), 0);
        assert_eq!(omp("2|13").minimaj(), 1);
        assert_eq!(omp("1|56|4|3712|21|1|34").minimaj(), 22);
    }

    #[test]
    fn minimaj_matches_brute_force_on_examples() {
        for s in ["157|24|56|468|13|123", "1|123", "2|13", "124|45|3|461|231|1|25"] {
            let p = omp(s);
            assert_eq!(p.minimaj(), p.minimaj_brute_force(), "{s}");
        }
    }

    #[test]
    fn minimaj_matches_brute_force_exhaustively_small() {
        for p in enumerate_partitions(4, 2, 3) {
            assert_eq!(p.minimaj(), p.minimaj_brute_force(), "{p}");
        }
    }

    #[test]
    fn major_index_values() {
        let p = omp("157|24|56|468|13|123");
        assert_eq!(render_blocks(&p.major_index_order()), "751|42|65|864|31|321");
        assert_eq!(p.major_index(), 27);
        assert_eq!(major_index_by_recursion(&p), 27);
        assert_eq!(omp("1|2|3").major_index(), 0);
        assert_eq!(weak("41|21|7|∅|61|54321|3").major_index(), 28);
        assert_eq!(weak("41|21|7|61|543|21|3").major_index(), 25);
        assert_eq!(omp("41|21|761|54|3|21|3").major_index(), 22);
    }

    #[test]
    fn major_index_routes_agree() {
        for p in enumerate_partitions(5, 3, 3) {
            assert_eq!(p.major_index(), major_index_by_recursion(&p), "{p}");
        }
    }

    #[test]
    fn weight_vectors() {
        assert_eq!(omp("1|123").weight(3).unwrap(), Weight(vec![2, 1, 1]));
        assert_eq!(omp("23|23").weight(3).unwrap(), Weight(vec![0, 2, 2]));
        assert!(matches!(omp("1|123").weight(2), Err(Error::AlphabetTooSmall { bound: 2, letter: 3 })));
        assert_eq!(omp("1|123").letter_multiplicities(), BTreeMap::from([(1, 2), (2, 1), (3, 1)]));
    }

    #[test]
    fn enumerate_counts_and_order() {
        let all = enumerate_partitions(4, 2, 3);
        assert_eq!(all.len(), 15);
        // deterministic, duplicate free and valid
        let mut seen = std::collections::HashSet::new();
        for p in &all {
            assert_eq!(p.n(), 4);
            assert_eq!(p.k(), 2);
            assert!(p.max_letter() <= 3);
            assert!(seen.insert(p.clone()), "duplicate {p}");
            p.minimaj_order().validate().unwrap();
        }
        let keys: Vec<(Weight, Vec<Vec<Letter>>)> = all
            .iter()
            .map(|p| (p.weight(3).unwrap(), p.blocks().to_vec()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted, "output must be sorted by (weight, blocks)");

        assert!(enumerate_partitions(1, 2, 3).is_empty());
        assert_eq!(enumerate_partitions(3, 1, 3).len(), 1);
        assert_eq!(enumerate_partitions(3, 1, 3)[0].to_string(), "123");
    }

    #[test]
    fn serde_round_trip_and_validation() {
        let p = omp("157|24|56|468|13|123");
        let js = serde_json::to_string(&p).unwrap();
        assert!(js.contains("\"n\":15"));
        assert_eq!(serde_json::from_str::<OrderedMultisetPartition>(&js).unwrap(), p);
        let bad = r#"{"blocks":[[1],[2]],"n":3,"k":2}"#;
        assert!(serde_json::from_str::<OrderedMultisetPartition>(bad).is_err());
        let weak_js = serde_json::to_string(&weak("41|∅|3")).unwrap();
        assert_eq!(serde_json::from_str::<WeakOrderedMultisetPartition>(&weak_js).unwrap(), weak("41|∅|3"));
    }

    #[test]
    fn enumerate_parse_round_trip() {
        for p in enumerate_partitions(5, 2, 4) {
            assert_eq!(p.to_string().parse::<OrderedMultisetPartition>().unwrap(), p);
        }
    }
}
