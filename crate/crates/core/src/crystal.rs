//! Raising and lowering operators and the graph they generate.
//!
//! On words the operators follow the usual matching rule: reading left to
//! right, every `i + 1` opens a bracket and every `i` closes the nearest
//! open one; the lowering operator turns the rightmost unmatched `i` into
//! `i + 1`, the raising operator turns the leftmost unmatched `i + 1` into
//! `i`.  Tuples of tableaux inherit the operators through their reading
//! words, and partitions inherit them through the tableau bijection.  An
//! independent block-surgery formulation of the partition operator is kept
//! for cross-checking.

use std::collections::BTreeMap;

use crate::bijection::{from_tableaux, to_tableaux};
use crate::omp::{enumerate_partitions, Letter, OrderedMultisetPartition, Weight};
use crate::tableaux::TableauTuple;

/// Index of the rightmost `i` not preceded by an unmatched `i + 1`.
fn lower_position(word: &[Letter], i: Letter) -> Option<usize> {
    assert!(i >= 1, "operators are indexed from 1");
    let mut open = 0usize;
    let mut candidate = None;
    for (p, &x) in word.iter().enumerate() {
        if x == i + 1 {
            open += 1;
        } else if x == i {
            if open > 0 {
                open -= 1;
            } else {
                candidate = Some(p);
            }
        }
    }
    candidate
}

/// Index of the leftmost `i + 1` not followed by an unmatched `i`.
fn raise_position(word: &[Letter], i: Letter) -> Option<usize> {
    assert!(i >= 1, "operators are indexed from 1");
    let mut open = 0usize;
    let mut candidate = None;
    for (p, &x) in word.iter().enumerate().rev() {
        if x == i {
            open += 1;
        } else if x == i + 1 {
            if open > 0 {
                open -= 1;
            } else {
                candidate = Some(p);
            }
        }
    }
    candidate
}

/// Lowering operator on a word: one `i` becomes `i + 1`.
pub fn word_lower(word: &[Letter], i: Letter) -> Option<Vec<Letter>> {
    let p = lower_position(word, i)?;
    let mut w = word.to_vec();
    w[p] = i + 1;
    Some(w)
}

/// Raising operator on a word: one `i + 1` becomes `i`.
pub fn word_raise(word: &[Letter], i: Letter) -> Option<Vec<Letter>> {
    let p = raise_position(word, i)?;
    let mut w = word.to_vec();
    w[p] = i;
    Some(w)
}

/// Lowering operator on a tuple, acting through its reading word.
pub fn tuple_lower(tuple: &TableauTuple, i: Letter) -> Option<TableauTuple> {
    let w = word_lower(&tuple.reading_word(), i)?;
    Some(
        tuple
            .with_reading_word(&w)
            .expect("a lowering move keeps the tuple semistandard"),
    )
}

/// Raising operator on a tuple, acting through its reading word.
pub fn tuple_raise(tuple: &TableauTuple, i: Letter) -> Option<TableauTuple> {
    let w = word_raise(&tuple.reading_word(), i)?;
    Some(
        tuple
            .with_reading_word(&w)
            .expect("a raising move keeps the tuple semistandard"),
    )
}

/// Lowering operator on a partition, conjugated through the tableau
/// bijection; it preserves the descent data and so the minimaj statistic.
pub fn lower(p: &OrderedMultisetPartition, i: Letter) -> Option<OrderedMultisetPartition> {
    let (_, tuple) = to_tableaux(p);
    let moved = tuple_lower(&tuple, i)?;
    Some(from_tableaux(&moved).expect("a lowered tuple is still in the image"))
}

/// Raising operator on a partition, conjugated through the tableau bijection.
pub fn raise(p: &OrderedMultisetPartition, i: Letter) -> Option<OrderedMultisetPartition> {
    let (_, tuple) = to_tableaux(p);
    let moved = tuple_raise(&tuple, i)?;
    Some(from_tableaux(&moved).expect("a raised tuple is still in the image"))
}

/// Whether every raising operator `1..r` vanishes on `p`.
pub fn is_highest_weight(p: &OrderedMultisetPartition, r: Letter) -> bool {
    (1..r).all(|i| raise(p, i).is_none())
}

/// Lowering operator computed directly by block surgery, without passing
/// through tableaux.  The acting letter is found by the matching rule on the
/// word that lists all non-head letters in minimaj order reversed, then the
/// heads; that word equals the tableau tuple's reading word.  The chosen `i`
/// then moves as follows: a block-final non-head `i` whose next block is
/// headed by `i` leaves its block while `i + 1` joins that block — or, when
/// a run of singleton `{i}` blocks follows, the last block of the run, which
/// is what keeps the descent set intact; a head `i` whose own block contains
/// `i + 1` sends that `i + 1` to the previous block and becomes `i + 1`
/// itself; otherwise the letter is replaced in place.
pub fn lower_explicit(p: &OrderedMultisetPartition, i: Letter) -> Option<OrderedMultisetPartition> {
    assert!(i >= 1, "operators are indexed from 1");
    struct Occ {
        letter: Letter,
        block: usize, // 1-based
        is_head: bool,
        is_last: bool,
    }
    let view = p.minimaj_order();
    let k = view.blocks().len();
    let heads = view.heads();

    let mut occs: Vec<Occ> = Vec::new();
    for (b0, block) in view.blocks().iter().enumerate() {
        for (t, &x) in block.iter().enumerate().skip(1) {
            occs.push(Occ {
                letter: x,
                block: b0 + 1,
                is_head: false,
                is_last: t + 1 == block.len(),
            });
        }
    }
    occs.reverse();
    for (b0, &h) in heads.iter().enumerate() {
        occs.push(Occ { letter: h, block: b0 + 1, is_head: true, is_last: false });
    }

    let mut open = 0usize;
    let mut target: Option<&Occ> = None;
    for occ in &occs {
        if occ.letter == i + 1 {
            open += 1;
        } else if occ.letter == i {
            if open > 0 {
                open -= 1;
            } else {
                target = Some(occ);
            }
        }
    }
    let occ = target?;

    let mut blocks: Vec<Vec<Letter>> = p.blocks().to_vec();
    let j = occ.block;
    let remove = |b: &mut Vec<Letter>, x: Letter| {
        let at = b.iter().position(|&y| y == x).expect("letter present in its block");
        b.remove(at);
    };
    if occ.is_head && blocks[j - 1].contains(&(i + 1)) {
        // the head's own block already holds i + 1: hand that copy to the
        // previous block and promote the head
        assert!(j > 1, "a head can only defer to an earlier block");
        assert!(!blocks[j - 2].contains(&(i + 1)), "receiving block must lack i + 1");
        remove(&mut blocks[j - 1], i);
        blocks[j - 2].push(i + 1);
    } else if !occ.is_head && occ.is_last && j < k && heads[j] == i {
        // block-final letter meeting an equal head: the new i + 1 overtakes
        // every following singleton {i} block so the descent set survives
        let mut m = j + 1;
        while m < k && blocks[m - 1].len() == 1 && heads[m] == i {
            m += 1;
        }
        assert!(!blocks[m - 1].contains(&(i + 1)), "receiving block must lack i + 1");
        remove(&mut blocks[j - 1], i);
        blocks[m - 1].push(i + 1);
    } else {
        assert!(!blocks[j - 1].contains(&(i + 1)), "replacement must not collide");
        remove(&mut blocks[j - 1], i);
        blocks[j - 1].push(i + 1);
    }
    Some(
        OrderedMultisetPartition::from_blocks(blocks)
            .expect("block surgery keeps blocks valid"),
    )
}

// ---------------------------------------------------------------------------
// the graph
// ---------------------------------------------------------------------------

/// A lowering edge `from --operator--> to` between vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub operator: Letter,
}

/// A connected component; `source` is its unique vertex with no incoming
/// edge and `highest_weight` that vertex's weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub source: usize,
    pub highest_weight: Weight,
}

/// The full graph on all partitions with `n` letters at most `r` in `k`
/// blocks, with one edge per successful lowering move.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    r: Letter,
    vertices: Vec<OrderedMultisetPartition>,
    edges: Vec<CrystalEdge>,
    components: Vec<Component>,
}

pub fn crystal_graph(n: usize, k: usize, r: Letter) -> CrystalGraph {
    let vertices = enumerate_partitions(n, k, r);
    let index: BTreeMap<&OrderedMultisetPartition, usize> =
        vertices.iter().enumerate().map(|(v, p)| (p, v)).collect();

    let mut edges = Vec::new();
    for (v, p) in vertices.iter().enumerate() {
        for i in 1..r {
            if let Some(q) = lower(p, i) {
                let w = *index.get(&q).expect("lowering stays inside the vertex set");
                edges.push(CrystalEdge { from: v, to: w, operator: i });
            }
        }
    }

    // union-find over the edges
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for e in &edges {
        let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
        if a != b {
            parent[a] = b;
        }
    }

    let mut incoming = vec![0usize; vertices.len()];
    for e in &edges {
        incoming[e.to] += 1;
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..vertices.len() {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }
    let mut components: Vec<Component> = groups
        .into_values()
        .map(|members| {
            let sources: Vec<usize> =
                members.iter().copied().filter(|&v| incoming[v] == 0).collect();
            assert_eq!(sources.len(), 1, "every component has exactly one source");
            let source = sources[0];
            let highest_weight = vertices[source]
                .weight(r)
                .expect("vertices fit the alphabet bound");
            Component { vertices: members, source, highest_weight }
        })
        .collect();
    components.sort_by_key(|c| c.vertices[0]);

    CrystalGraph { r, vertices, edges, components }
}

impl CrystalGraph {
    pub fn r(&self) -> Letter {
        self.r
    }

    pub fn vertices(&self) -> &[OrderedMultisetPartition] {
        &self.vertices
    }

    pub fn edges(&self) -> &[CrystalEdge] {
        &self.edges
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn index_of(&self, p: &OrderedMultisetPartition) -> Option<usize> {
        self.vertices.iter().position(|q| q == p)
    }

    /// Graphviz rendering; vertices are labelled by their minimaj order and
    /// edges are coloured by operator index.
    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 6] = ["blue", "red", "forestgreen", "orange", "purple", "brown"];
        let mut out = String::new();
        out.push_str("digraph crystal {\n");
        out.push_str("  rankdir=TB;\n");
        out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
        for (v, p) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", v, p.minimaj_order()));
        }
        for e in &self.edges {
            let color = PALETTE[(e.operator as usize - 1) % PALETTE.len()];
            out.push_str(&format!(
                "  v{} -> v{} [label=\"{}\", color=\"{}\"];\n",
                e.from, e.to, e.operator, color
            ));
        }
        out.push_str("}\n");
        out
    }
}
