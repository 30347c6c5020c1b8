//! A named battery of exhaustive checks over small parameter ranges.
//!
//! Every public claim of the crate is revalidated here from first
//! principles: statistics against brute force, bijections against full
//! enumerations, operators against their inverses, and generating-function
//! identities coefficient by coefficient.  Each check reports how many cases
//! it covered and, on failure, a reproducible counterexample.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use itertools::Itertools;
use serde::Serialize;

use crate::bijection::{from_tableaux, key_from_tuple, to_tableaux};
use crate::crystal::{crystal_graph, is_highest_weight, lower, lower_explicit, raise};
use crate::equidist::{
    l_shift, maj_to_minimaj, minimaj_to_maj_with_trace, r_shift, read_inverse, read_tuple,
    ShiftReason,
};
use crate::omp::{
    enumerate_partitions, major_index_by_recursion, DescentData, Letter, OrderedMultisetPartition,
};
use crate::symfunc::{
    elementary, schur, to_schur_basis, val_crystal, val_direct, val_rhs_syt, SymPolynomial,
    TPolynomial,
};
use crate::tableaux::{enumerate_ssyt, shape_from_descents, Shape, TableauTuple};

/// Parameter bounds for the exhaustive checks: all `(n, k, r)` with
/// `1 <= n <= n_max`, `1 <= k <= min(n, k_max)` and `1 <= r <= r_max`.
#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub n_max: usize,
    pub k_max: Option<usize>,
    pub r_max: Letter,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { n_max: 6, k_max: None, r_max: 4 }
    }
}

impl CheckConfig {
    fn k_bound(&self, n: usize) -> usize {
        self.k_max.map_or(n, |k| k.min(n))
    }

    fn triples(&self) -> Vec<(usize, usize, Letter)> {
        let mut out = Vec::new();
        for n in 1..=self.n_max {
            for k in 1..=self.k_bound(n) {
                for r in 1..=self.r_max {
                    out.push((n, k, r));
                }
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        let k = match self.k_max {
            Some(k) => format!("k<=min(n,{k})"),
            None => "k<=n".to_string(),
        };
        format!("n<={}, {}, r<={}", self.n_max, k, self.r_max)
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub parameters: String,
    pub cases: usize,
    pub counterexample: Option<String>,
    pub millis: u128,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type CheckFn = fn(&CheckConfig) -> (usize, Option<String>);

const CHECKS: &[(&str, CheckFn)] = &[
    ("minimaj-brute-force", check_minimaj_brute_force),
    ("minimaj-order-structure", check_order_structure),
    ("serialization-round-trip", check_serialization),
    ("major-index-extension", check_major_extension),
    ("tableau-bijection-round-trip", check_bijection_round_trip),
    ("tableau-bijection-onto", check_bijection_onto),
    ("crystal-operator-inverses", check_crystal_inverses),
    ("crystal-explicit-rule", check_crystal_explicit),
    ("crystal-components", check_crystal_components),
    ("descent-class-products", check_descent_classes),
    ("statistic-exchange", check_statistic_exchange),
    ("statistic-histograms", check_histograms),
    ("val-schur-expansion", check_val_expansion),
    ("val-syt-formula", check_val_syt),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|&(name, _)| name).collect()
}

/// Runs every check under the given bounds.
pub fn run_all(config: &CheckConfig) -> Vec<CheckReport> {
    CHECKS
        .iter()
        .map(|&(name, f)| {
            let start = Instant::now();
            let (cases, counterexample) = f(config);
            CheckReport {
                name: name.to_string(),
                parameters: config.describe(),
                cases,
                counterexample,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect()
}

/// Runs one check by name.
pub fn run_named(config: &CheckConfig, name: &str) -> Option<CheckReport> {
    let &(name, f) = CHECKS.iter().find(|&&(n, _)| n == name)?;
    let start = Instant::now();
    let (cases, counterexample) = f(config);
    Some(CheckReport {
        name: name.to_string(),
        parameters: config.describe(),
        cases,
        counterexample,
        millis: start.elapsed().as_millis(),
    })
}

fn for_each_partition(
    config: &CheckConfig,
    mut f: impl FnMut(&OrderedMultisetPartition, Letter) -> Option<String>,
) -> (usize, Option<String>) {
    let mut cases = 0;
    for (n, k, r) in config.triples() {
        for p in enumerate_partitions(n, k, r) {
            cases += 1;
            if let Some(ce) = f(&p, r) {
                return (cases, Some(format!("({p}) with r={r}: {ce}")));
            }
        }
    }
    (cases, None)
}

fn check_minimaj_brute_force(config: &CheckConfig) -> (usize, Option<String>) {
    for_each_partition(config, |p, _| {
        let fast = p.minimaj();
        let slow = p.minimaj_brute_force();
        (fast != slow).then(|| format!("rotation rule gives {fast}, brute force {slow}"))
    })
}

fn check_order_structure(config: &CheckConfig) -> (usize, Option<String>) {
    for_each_partition(config, |p, _| {
        let view = p.minimaj_order();
        if let Err(e) = view.validate() {
            return Some(format!("order decomposition invalid: {e}"));
        }
        (view.to_partition() != *p).then(|| "order does not forget back to the input".to_string())
    })
}

fn check_serialization(config: &CheckConfig) -> (usize, Option<String>) {
    for_each_partition(config, |p, _| {
        let text = p.to_string();
        match text.parse::<OrderedMultisetPartition>() {
            Ok(q) if q == *p => {}
            Ok(q) => return Some(format!("text round trip changed {text} into {q}")),
            Err(e) => return Some(format!("text round trip failed on {text}: {e}")),
        }
        let json = serde_json::to_string(p).expect("serialization never fails");
        match serde_json::from_str::<OrderedMultisetPartition>(&json) {
            Ok(q) if q == *p => {}
            Ok(_) => return Some("json round trip changed the partition".to_string()),
            Err(e) => return Some(format!("json round trip failed: {e}")),
        }
        // the weak image of the right shift round-trips as well
        let (wp, _) = r_shift(p);
        match wp.to_string().parse::<crate::omp::WeakOrderedMultisetPartition>() {
            Ok(q) if q == wp => None,
            _ => Some(format!("weak text round trip failed on {wp}")),
        }
    })
}

fn check_major_extension(config: &CheckConfig) -> (usize, Option<String>) {
    for_each_partition(config, |p, _| {
        let direct = p.major_index();
        let recursive = major_index_by_recursion(p);
        (direct != recursive)
            .then(|| format!("index sum gives {direct}, recursion gives {recursive}"))
    })
}

fn check_bijection_round_trip(config: &CheckConfig) -> (usize, Option<String>) {
    for_each_partition(config, |p, r| {
        let (key, tuple) = to_tableaux(p);
        if key.minimaj() != p.minimaj() {
            return Some("key statistic differs from the partition statistic".to_string());
        }
        match key_from_tuple(&tuple) {
            Ok(k) if k == key => {}
            _ => return Some("shape data does not recover the key".to_string()),
        }
        if tuple.weight(r).ok() != p.weight(r).ok() {
            return Some("tuple weight differs from partition weight".to_string());
        }
        match from_tableaux(&tuple) {
            Ok(q) if q == *p => None,
            Ok(q) => Some(format!("inverse produced {q}")),
            Err(e) => Some(format!("inverse failed: {e}")),
        }
    })
}

fn check_bijection_onto(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    for (n, k, r) in config.triples() {
        let expected: BTreeSet<OrderedMultisetPartition> =
            enumerate_partitions(n, k, r).into_iter().collect();
        let mut produced = BTreeSet::new();
        for dj in 0..n.min(k) {
            for positions in (1..n).combinations(dj) {
                for indices in (1..k).combinations(dj) {
                    let Ok(key) = DescentData::new(n, k, positions.clone(), indices.clone())
                    else {
                        continue;
                    };
                    let Ok((column_lengths, ribbon)) = shape_from_descents(&key) else {
                        continue;
                    };
                    // fill every shape independently; the last factor is the ribbon
                    let mut pools: Vec<Vec<crate::tableaux::Tableau>> = column_lengths
                        .iter()
                        .map(|&c| enumerate_ssyt(&Shape::Column { length: c }, r))
                        .collect();
                    pools.push(enumerate_ssyt(&Shape::Ribbon(ribbon), r));
                    for mut choice in pools.into_iter().multi_cartesian_product() {
                        cases += 1;
                        let ribbon = choice.pop().expect("the ribbon factor is always present");
                        let tuple = TableauTuple::new(choice, ribbon)
                            .expect("enumerated fillings form valid tuples");
                        let p = match from_tableaux(&tuple) {
                            Ok(p) => p,
                            Err(e) => {
                                return (
                                    cases,
                                    Some(format!("tuple for key {key:?} fails to invert: {e}")),
                                )
                            }
                        };
                        let (key2, tuple2) = to_tableaux(&p);
                        if key2 != key || tuple2 != tuple {
                            return (
                                cases,
                                Some(format!("({p}) does not map back to its source tuple")),
                            );
                        }
                        if !produced.insert(p.clone()) {
                            return (cases, Some(format!("({p}) produced twice")));
                        }
                    }
                }
            }
        }
        if produced != expected {
            return (
                cases,
                Some(format!(
                    "images at n={n} k={k} r={r} cover {} of {} partitions",
                    produced.len(),
                    expected.len()
                )),
            );
        }
    }
    (cases, None)
}

fn check_crystal_inverses(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    for (n, k, r) in config.triples() {
        for p in enumerate_partitions(n, k, r) {
            for i in 1..r {
                cases += 1;
                if let Some(q) = lower(&p, i) {
                    if q.minimaj() != p.minimaj() {
                        return (cases, Some(format!("lowering ({p}) by {i} changes the statistic")));
                    }
                    if raise(&q, i).as_ref() != Some(&p) {
                        return (cases, Some(format!("raise does not undo lower on ({p}) at {i}")));
                    }
                }
                if let Some(q) = raise(&p, i) {
                    if lower(&q, i).as_ref() != Some(&p) {
                        return (cases, Some(format!("lower does not undo raise on ({p}) at {i}")));
                    }
                }
            }
        }
    }
    (cases, None)
}

fn check_crystal_explicit(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    for (n, k, r) in config.triples() {
        for p in enumerate_partitions(n, k, r) {
            for i in 1..r {
                cases += 1;
                if lower_explicit(&p, i) != lower(&p, i) {
                    return (
                        cases,
                        Some(format!("block surgery and conjugation differ on ({p}) at {i}")),
                    );
                }
            }
        }
    }
    (cases, None)
}

fn check_crystal_components(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    for (n, k, r) in config.triples() {
        let g = crystal_graph(n, k, r);
        let mut covered = 0usize;
        for c in g.components() {
            cases += 1;
            covered += c.vertices.len();
            let source = &g.vertices()[c.source];
            if !is_highest_weight(source, r) {
                return (cases, Some(format!("source ({source}) is not highest weight")));
            }
            if !c.highest_weight.is_partition() {
                return (
                    cases,
                    Some(format!("highest weight of ({source}) is not decreasing")),
                );
            }
            let mm = source.minimaj();
            let mut character = SymPolynomial::zero(r);
            for &v in &c.vertices {
                let p = &g.vertices()[v];
                if p.minimaj() != mm {
                    return (cases, Some(format!("statistic varies inside the component of ({source})")));
                }
                character.add_term(p.weight(r).expect("letters bounded by r").0, &TPolynomial::one());
            }
            let shape = Shape::straight(c.highest_weight.sorted_desc())
                .expect("a partition weight is a straight shape");
            if character != schur(&shape, r) {
                return (
                    cases,
                    Some(format!("component of ({source}) has a non-Schur character")),
                );
            }
        }
        if covered != g.vertices().len() {
            return (cases, Some(format!("components cover {covered} of {} vertices", g.vertices().len())));
        }
        // sources are exactly the vertices with no incoming edge
        let mut incoming = vec![0usize; g.vertices().len()];
        for e in g.edges() {
            incoming[e.to] += 1;
        }
        let sourceless = incoming.iter().filter(|&&d| d == 0).count();
        if sourceless != g.components().len() {
            return (
                cases,
                Some(format!(
                    "{sourceless} sourceless vertices across {} components at n={n} k={k} r={r}",
                    g.components().len()
                )),
            );
        }
    }
    (cases, None)
}

fn check_descent_classes(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    for (n, k, r) in config.triples() {
        let mut classes: BTreeMap<DescentData, SymPolynomial> = BTreeMap::new();
        for p in enumerate_partitions(n, k, r) {
            let key = p.minimaj_order().descent_data();
            let w = p.weight(r).expect("letters bounded by r");
            classes
                .entry(key)
                .or_insert_with(|| SymPolynomial::zero(r))
                .add_term(w.0, &TPolynomial::one());
        }
        for (key, lhs) in classes {
            cases += 1;
            let (column_lengths, ribbon) =
                shape_from_descents(&key).expect("realized keys have shapes");
            let mut rhs = schur(&Shape::Ribbon(ribbon), r);
            for c in column_lengths {
                rhs = &rhs * &elementary(c, r);
            }
            if lhs != rhs {
                return (
                    cases,
                    Some(format!("descent class {key:?} misses its product form")),
                );
            }
        }
    }
    (cases, None)
}

fn check_statistic_exchange(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    for (n, k, r) in config.triples() {
        let all = enumerate_partitions(n, k, r);
        let mut seen = BTreeSet::new();
        for p in &all {
            cases += 1;
            let (image, trace) = minimaj_to_maj_with_trace(p);
            if image.major_index() != p.minimaj() {
                return (cases, Some(format!("({p}) maps to ({image}) with the wrong index")));
            }
            if image.weight(r).ok() != p.weight(r).ok() {
                return (cases, Some(format!("({p}) changes weight under the exchange")));
            }
            if maj_to_minimaj(&image) != *p {
                return (cases, Some(format!("({p}) is not recovered from ({image})")));
            }
            if !seen.insert(image) {
                return (cases, Some(format!("({p}) collides with an earlier image")));
            }
            for (i, step) in trace.steps.iter().enumerate() {
                let before = trace.states[i].major_index();
                let expected = match step.reason {
                    ShiftReason::EmptyBlock => before + 1 - step.block_index,
                    ShiftReason::EndDescent => before - step.block_index,
                };
                if step.maj_after != expected {
                    return (
                        cases,
                        Some(format!("({p}) step {i} drops the index by the wrong amount")),
                    );
                }
            }
            // shifts invert each other on both sides of the exchange
            let wp = read_tuple(&to_tableaux(p).1);
            let shifted = l_shift(&wp).expect("reading images admit the left shift").0;
            if r_shift(&shifted).0 != wp {
                return (cases, Some(format!("right shift does not undo left shift for ({p})")));
            }
            if read_inverse(&wp).is_err() {
                return (cases, Some(format!("reading image of ({p}) rejected by the image test")));
            }
        }
        if seen.len() != all.len() {
            return (cases, Some(format!("exchange not onto at n={n} k={k} r={r}")));
        }
    }
    (cases, None)
}

fn check_histograms(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    for (n, k, r) in config.triples() {
        let mut by_rotation: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
        let mut by_major: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
        for p in enumerate_partitions(n, k, r) {
            cases += 1;
            let w = p.weight(r).expect("letters bounded by r").0;
            *by_rotation.entry((w.clone(), p.minimaj())).or_default() += 1;
            *by_major.entry((w, p.major_index())).or_default() += 1;
        }
        if by_rotation != by_major {
            return (
                cases,
                Some(format!("statistic histograms differ at n={n} k={k} r={r}")),
            );
        }
    }
    (cases, None)
}

fn check_val_expansion(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    for n in 1..=config.n_max {
        for blocks in 1..=config.k_bound(n) {
            for r in 1..=config.r_max {
                cases += 1;
                let direct = val_direct(n, blocks - 1, r);
                if !direct.is_zero() && !direct.is_symmetric() {
                    return (
                        cases,
                        Some(format!("direct sum not symmetric at n={n} blocks={blocks} r={r}")),
                    );
                }
                let expansion = match to_schur_basis(&direct) {
                    Ok(e) => e,
                    Err(e) => {
                        return (
                            cases,
                            Some(format!("expansion failed at n={n} blocks={blocks} r={r}: {e}")),
                        )
                    }
                };
                if !expansion.is_t_nonnegative() {
                    return (
                        cases,
                        Some(format!("negative coefficient at n={n} blocks={blocks} r={r}")),
                    );
                }
                if val_crystal(n, blocks - 1, r) != expansion {
                    return (
                        cases,
                        Some(format!(
                            "component reading disagrees with the expansion at n={n} blocks={blocks} r={r}"
                        )),
                    );
                }
            }
        }
    }
    (cases, None)
}

fn check_val_syt(config: &CheckConfig) -> (usize, Option<String>) {
    let mut cases = 0;
    // the closed form needs at least n letters, so this check pins r = n
    // and stays below the sizes where graph construction dominates
    for n in 1..=config.n_max.min(5) {
        let r = n as Letter;
        for blocks in 1..=config.k_bound(n) {
            cases += 1;
            let closed = match val_rhs_syt(n, blocks, r) {
                Ok(c) => c,
                Err(e) => return (cases, Some(format!("closed form failed at n={n} blocks={blocks}: {e}"))),
            };
            if closed != val_crystal(n, blocks - 1, r) {
                return (
                    cases,
                    Some(format!("closed form disagrees at n={n} blocks={blocks} r={r}")),
                );
            }
        }
    }
    (cases, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_at_reduced_size() {
        let config = CheckConfig { n_max: 4, k_max: None, r_max: 3 };
        let reports = run_all(&config);
        assert_eq!(reports.len(), CHECKS.len());
        for report in &reports {
            assert!(
                report.passed(),
                "{} failed: {:?}",
                report.name,
                report.counterexample
            );
            assert!(report.cases > 0, "{} checked nothing", report.name);
        }
    }

    #[test]
    fn named_lookup_and_listing() {
        assert!(check_names().contains(&"tableau-bijection-onto"));
        let config = CheckConfig { n_max: 2, k_max: None, r_max: 2 };
        let report = run_named(&config, "minimaj-brute-force").unwrap();
        assert!(report.passed());
        assert!(run_named(&config, "no-such-check").is_none());
    }

    #[test]
    fn trivial_bounds_pass() {
        let config = CheckConfig { n_max: 1, k_max: None, r_max: 2 };
        for report in run_all(&config) {
            assert!(report.passed(), "{}", report.name);
        }
    }
}
