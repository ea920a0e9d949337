//! Exhaustive generators for the four tree families, counting, and the two
//! partial orders.
//!
//! Generation is complete, duplicate-free and returned in lexicographic
//! order of the canonical text, so golden files are stable. Sizes are capped
//! by a configurable bound (default 8) to keep everything desk-scale.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::rotation::{edge_addrs, hyper_edge_at, vertex_leaf_map, NodePath, VertexAddr};
use crate::trees::{HyperEdge, HyperTree, ReducedTree};

/// Default cap on generation sizes.
pub const DEFAULT_BOUND: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeKind {
    Binary,
    Reduced,
    RootedTree,
    Hyper,
}

impl std::fmt::Display for TreeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TreeKind::Binary => "binary",
            TreeKind::Reduced => "reduced",
            TreeKind::RootedTree => "rootedtree",
            TreeKind::Hyper => "hyper",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    InternalVertices,
    Leaves,
    Edges,
    Vertices,
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Measure::InternalVertices => "internal",
            Measure::Leaves => "leaves",
            Measure::Edges => "edges",
            Measure::Vertices => "vertices",
        })
    }
}

/// A size class: one tree family cut at one value of one grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeKey {
    pub kind: TreeKind,
    pub measure: Measure,
    pub value: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("size {value} exceeds the generation bound {bound}")]
    BoundExceeded { value: usize, bound: usize },
    #[error("measure `{measure}` is not valid for kind `{kind}`")]
    InvalidMeasure { kind: TreeKind, measure: Measure },
    #[error("no tree of kind `{kind}` has {measure} = {value}")]
    EmptyClass {
        kind: TreeKind,
        measure: Measure,
        value: usize,
    },
}

/// A generated size class; binary and reduced classes hold reduced trees,
/// rooted-tree and hyper classes hold hypertrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Reduced(Vec<ReducedTree>),
    Hyper(Vec<HyperTree>),
}

impl Generated {
    pub fn len(&self) -> usize {
        match self {
            Generated::Reduced(v) => v.len(),
            Generated::Hyper(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn texts(&self) -> Vec<String> {
        match self {
            Generated::Reduced(v) => v.iter().map(|t| t.to_string()).collect(),
            Generated::Hyper(v) => v.iter().map(|t| t.to_string()).collect(),
        }
    }
}

// All ordered sequences of items drawn from `table` (table[w] = items of
// weight w >= 1) with weights summing to `total` and length >= `min_len`.
fn weighted_sequences<T: Clone>(table: &[Vec<T>], total: usize, min_len: usize) -> Vec<Vec<T>> {
    let max_w = table.len().saturating_sub(1);
    let mut by_total: Vec<Vec<Vec<T>>> = Vec::with_capacity(total + 1);
    by_total.push(vec![Vec::new()]);
    for t in 1..=total {
        let mut acc = Vec::new();
        for first in 1..=t.min(max_w) {
            for item in &table[first] {
                for rest in &by_total[t - first] {
                    let mut v = Vec::with_capacity(1 + rest.len());
                    v.push(item.clone());
                    v.extend(rest.iter().cloned());
                    acc.push(v);
                }
            }
        }
        by_total.push(acc);
    }
    by_total
        .pop()
        .unwrap()
        .into_iter()
        .filter(|s| s.len() >= min_len)
        .collect()
}

/// `table[n]` = all planar binary trees with n internal vertices, for
/// n <= max.
pub fn binary_by_internal_table(max: usize) -> Vec<Vec<ReducedTree>> {
    let mut table: Vec<Vec<ReducedTree>> = vec![vec![ReducedTree::Leaf]];
    for n in 1..=max {
        let mut trees = Vec::new();
        for i in 0..n {
            for l in &table[i] {
                for r in &table[n - 1 - i] {
                    trees.push(ReducedTree::Node {
                        children: vec![l.clone(), r.clone()],
                        tag: None,
                    });
                }
            }
        }
        table.push(trees);
    }
    table
}

/// `table[n]` = all planar reduced trees with n leaves, for 1 <= n <= max.
/// `table[0]` is empty.
pub fn reduced_by_leaves_table(max: usize) -> Vec<Vec<ReducedTree>> {
    let mut table: Vec<Vec<ReducedTree>> = vec![Vec::new()];
    if max == 0 {
        return table;
    }
    table.push(vec![ReducedTree::Leaf]);
    for n in 2..=max {
        let trees = weighted_sequences(&table, n, 2)
            .into_iter()
            .map(|children| ReducedTree::Node {
                children,
                tag: None,
            })
            .collect();
        table.push(trees);
    }
    table
}

/// `table[e]` = all planar rooted trees (all-binary-edge hypertrees) with e
/// edges, for e <= max.
pub fn rooted_by_edges_table(max: usize) -> Vec<Vec<HyperTree>> {
    let mut table: Vec<Vec<HyperTree>> = vec![vec![HyperTree::vertex()]];
    for e in 1..=max {
        // a branch with w-1 edges weighs w: its own edges plus the root edge
        let branch_table: Vec<Vec<HyperTree>> = std::iter::once(Vec::new())
            .chain(table.iter().take(e).cloned())
            .collect();
        let trees = weighted_sequences(&branch_table, e, 1)
            .into_iter()
            .map(|branches| HyperTree {
                edges: branches
                    .into_iter()
                    .map(|b| HyperEdge {
                        members: vec![b],
                        tag: None,
                    })
                    .collect(),
            })
            .collect();
        table.push(trees);
    }
    table
}

/// `table[n]` = all planar rooted hypertrees with n vertices, for
/// 1 <= n <= max. `table[0]` is empty.
pub fn hyper_by_vertices_table(max: usize) -> Vec<Vec<HyperTree>> {
    let mut table: Vec<Vec<HyperTree>> = vec![Vec::new()];
    if max == 0 {
        return table;
    }
    table.push(vec![HyperTree::vertex()]);
    for n in 2..=max {
        // an edge weighs the vertex total of its members
        let mut edge_table: Vec<Vec<HyperEdge>> = vec![Vec::new()];
        for w in 1..n {
            let edges = weighted_sequences(&table, w, 1)
                .into_iter()
                .map(|members| HyperEdge { members, tag: None })
                .collect();
            edge_table.push(edges);
        }
        let trees = weighted_sequences(&edge_table, n - 1, 1)
            .into_iter()
            .map(|edges| HyperTree { edges })
            .collect();
        table.push(trees);
    }
    table
}

fn key_to_class(key: &SizeKey) -> Result<(TreeKind, usize), EnumerateError> {
    let invalid = || EnumerateError::InvalidMeasure {
        kind: key.kind,
        measure: key.measure,
    };
    let empty = || EnumerateError::EmptyClass {
        kind: key.kind,
        measure: key.measure,
        value: key.value,
    };
    match (key.kind, key.measure) {
        (TreeKind::Binary, Measure::InternalVertices) => Ok((TreeKind::Binary, key.value)),
        (TreeKind::Binary, Measure::Leaves) => match key.value {
            0 => Err(empty()),
            n => Ok((TreeKind::Binary, n - 1)),
        },
        (TreeKind::Reduced, Measure::Leaves) => match key.value {
            0 => Err(empty()),
            n => Ok((TreeKind::Reduced, n)),
        },
        (TreeKind::RootedTree, Measure::Edges) => Ok((TreeKind::RootedTree, key.value)),
        (TreeKind::RootedTree, Measure::Vertices) => match key.value {
            0 => Err(empty()),
            n => Ok((TreeKind::RootedTree, n - 1)),
        },
        (TreeKind::Hyper, Measure::Vertices) => match key.value {
            0 => Err(empty()),
            n => Ok((TreeKind::Hyper, n)),
        },
        _ => Err(invalid()),
    }
}

/// Generates the complete size class for `key`, sorted lexicographically on
/// canonical text, using the default bound.
pub fn generate(key: &SizeKey) -> Result<Generated, EnumerateError> {
    generate_with_bound(key, DEFAULT_BOUND)
}

pub fn generate_with_bound(key: &SizeKey, bound: usize) -> Result<Generated, EnumerateError> {
    if key.value > bound {
        return Err(EnumerateError::BoundExceeded {
            value: key.value,
            bound,
        });
    }
    let (kind, size) = key_to_class(key)?;
    Ok(match kind {
        TreeKind::Binary => {
            let mut v = binary_by_internal_table(size).pop().unwrap();
            v.sort_by_key(|t| t.to_string());
            Generated::Reduced(v)
        }
        TreeKind::Reduced => {
            let mut v = reduced_by_leaves_table(size).pop().unwrap();
            v.sort_by_key(|t| t.to_string());
            Generated::Reduced(v)
        }
        TreeKind::RootedTree => {
            let mut v = rooted_by_edges_table(size).pop().unwrap();
            v.sort_by_key(|t| t.to_string());
            Generated::Hyper(v)
        }
        TreeKind::Hyper => {
            let mut v = hyper_by_vertices_table(size).pop().unwrap();
            v.sort_by_key(|t| t.to_string());
            Generated::Hyper(v)
        }
    })
}

/// `|generate(key)|` computed by convolution recurrences, without
/// materializing the trees.
pub fn count(key: &SizeKey) -> Result<u64, EnumerateError> {
    count_with_bound(key, DEFAULT_BOUND)
}

pub fn count_with_bound(key: &SizeKey, bound: usize) -> Result<u64, EnumerateError> {
    if key.value > bound {
        return Err(EnumerateError::BoundExceeded {
            value: key.value,
            bound,
        });
    }
    let (kind, size) = key_to_class(key)?;
    Ok(match kind {
        TreeKind::Binary | TreeKind::RootedTree => catalan(size),
        TreeKind::Reduced | TreeKind::Hyper => schroeder(size),
    })
}

// Catalan numbers: trees[n] = sum trees[i] * trees[n-1-i].
fn catalan(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

// Little Schroeder numbers by leaves: a tree with n >= 2 leaves is an
// ordered word of >= 2 smaller trees; f[m] counts nonempty words.
fn schroeder(n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = vec![0u64; n + 1];
    let mut f = vec![0u64; n + 1];
    r[1] = 1;
    f[0] = 1;
    if n >= 1 {
        f[1] = 1;
    }
    for m in 2..=n {
        r[m] = (1..m).map(|first| r[first] * f[m - first]).sum();
        f[m] = (1..=m).map(|first| r[first] * f[m - first]).sum();
    }
    r[n]
}

// Paths (as child paths to the lower endpoint) of all edges of t joining two
// internal vertices.
fn internal_edge_paths(t: &ReducedTree) -> Vec<NodePath> {
    fn walk(t: &ReducedTree, prefix: &mut NodePath, out: &mut Vec<NodePath>) {
        if let ReducedTree::Node { children, .. } = t {
            for (i, c) in children.iter().enumerate() {
                if matches!(c, ReducedTree::Node { .. }) {
                    prefix.push(i);
                    out.push(prefix.clone());
                    walk(c, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

// Contracts each edge in `cuts`, splicing the upper vertex's children into
// the lower vertex's child list in place.
fn contract_edges(t: &ReducedTree, cuts: &BTreeSet<NodePath>) -> ReducedTree {
    fn walk(t: &ReducedTree, cuts: &BTreeSet<NodePath>, prefix: &mut NodePath) -> ReducedTree {
        match t {
            ReducedTree::Leaf => ReducedTree::Leaf,
            ReducedTree::Node { children, tag } => {
                let mut out = Vec::new();
                for (i, c) in children.iter().enumerate() {
                    prefix.push(i);
                    let contracted = walk(c, cuts, prefix);
                    let glue = cuts.contains(prefix);
                    prefix.pop();
                    match contracted {
                        ReducedTree::Node { children: cs, .. } if glue => out.extend(cs),
                        other => out.push(other),
                    }
                }
                ReducedTree::Node {
                    children: out,
                    tag: tag.clone(),
                }
            }
        }
    }
    walk(t, cuts, &mut Vec::new())
}

/// `t1 <= t2` in the glueing order: `t1` arises from `t2` by contracting
/// some subset of edges between internal vertices. Comparable trees share
/// their leaf count.
pub fn leq_reduced(t1: &ReducedTree, t2: &ReducedTree) -> bool {
    if t1.leaf_count() != t2.leaf_count() {
        return false;
    }
    let edges = internal_edge_paths(t2);
    debug_assert!(edges.len() < 64);
    for mask in 0u64..(1 << edges.len()) {
        let cuts: BTreeSet<NodePath> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect();
        if contract_edges(t2, &cuts) == *t1 {
            return true;
        }
    }
    false
}

// Every edge of s as the set of canonical vertex labels it contains, the
// labels coming from the vertex/leaf correspondence.
fn labeled_edge_sets(s: &HyperTree) -> Vec<BTreeSet<usize>> {
    let vlm = vertex_leaf_map(s);
    edge_addrs(s)
        .into_iter()
        .map(|ea| {
            let mut set = BTreeSet::new();
            set.insert(vlm.leaf_of_vertex(&ea.vertex).expect("vertex is labeled"));
            let edge = hyper_edge_at(s, &ea).expect("edge address from traversal");
            for m in 0..edge.members.len() {
                let mut steps = ea.vertex.0.clone();
                steps.push((ea.index, m));
                set.insert(
                    vlm.leaf_of_vertex(&VertexAddr(steps))
                        .expect("vertex is labeled"),
                );
            }
            set
        })
        .collect()
}

/// `s1 <= s2` in the refinement order: on the canonical vertex labeling,
/// every edge of `s2` is contained in an edge of `s1`. Comparable hypertrees
/// share their vertex count, and the root always carries the top label.
pub fn leq_hyper(s1: &HyperTree, s2: &HyperTree) -> bool {
    if s1.vertex_count() != s2.vertex_count() {
        return false;
    }
    let e1 = labeled_edge_sets(s1);
    let e2 = labeled_edge_sets(s2);
    e2.iter().all(|e| e1.iter().any(|f| e.is_subset(f)))
}

/// The minimal and maximal elements of the size class under the matching
/// partial order.
pub fn minimal_maximal(key: &SizeKey) -> Result<(Generated, Generated), EnumerateError> {
    let generated = generate(key)?;
    Ok(match generated {
        Generated::Reduced(v) => {
            let (min, max) = extremes(&v, leq_reduced);
            (Generated::Reduced(min), Generated::Reduced(max))
        }
        Generated::Hyper(v) => {
            let (min, max) = extremes(&v, leq_hyper);
            (Generated::Hyper(min), Generated::Hyper(max))
        }
    })
}

fn extremes<T: Clone + PartialEq>(v: &[T], leq: impl Fn(&T, &T) -> bool) -> (Vec<T>, Vec<T>) {
    let minimal = v
        .iter()
        .filter(|x| !v.iter().any(|y| y != *x && leq(y, x)))
        .cloned()
        .collect();
    let maximal = v
        .iter()
        .filter(|x| !v.iter().any(|y| y != *x && leq(x, y)))
        .cloned()
        .collect();
    (minimal, maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_hyper, parse_reduced};

    fn rt(s: &str) -> ReducedTree {
        parse_reduced(s).unwrap()
    }

    fn ht(s: &str) -> HyperTree {
        parse_hyper(s).unwrap()
    }

    fn key(kind: TreeKind, measure: Measure, value: usize) -> SizeKey {
        SizeKey {
            kind,
            measure,
            value,
        }
    }

    #[test]
    fn binary_class_two_is_exactly_the_pair() {
        let g = generate(&key(TreeKind::Binary, Measure::InternalVertices, 2)).unwrap();
        assert_eq!(g.texts(), vec!["((| |) |)", "(| (| |))"]);
    }

    #[test]
    fn counts_match_generation() {
        for (kind, measure, values) in [
            (
                TreeKind::Binary,
                Measure::InternalVertices,
                vec![1u64, 1, 2, 5, 14, 42],
            ),
            (TreeKind::RootedTree, Measure::Edges, vec![1, 1, 2, 5, 14]),
        ] {
            for (n, want) in values.iter().enumerate() {
                let k = key(kind, measure, n);
                assert_eq!(count(&k).unwrap(), *want, "{kind} {n}");
                assert_eq!(generate(&k).unwrap().len() as u64, *want, "{kind} {n}");
            }
        }
        for (n, want) in [1u64, 1, 3, 11, 45, 197].iter().enumerate() {
            let k = key(TreeKind::Reduced, Measure::Leaves, n + 1);
            assert_eq!(count(&k).unwrap(), *want);
            assert_eq!(generate(&k).unwrap().len() as u64, *want);
            let k = key(TreeKind::Hyper, Measure::Vertices, n + 1);
            assert_eq!(count(&k).unwrap(), *want);
            assert_eq!(generate(&k).unwrap().len() as u64, *want);
        }
    }

    #[test]
    fn generation_is_sorted_and_duplicate_free() {
        for k in [
            key(TreeKind::Reduced, Measure::Leaves, 5),
            key(TreeKind::Hyper, Measure::Vertices, 5),
            key(TreeKind::Binary, Measure::Leaves, 5),
            key(TreeKind::RootedTree, Measure::Vertices, 5),
        ] {
            let texts = generate(&k).unwrap().texts();
            let mut sorted = texts.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(texts, sorted);
        }
    }

    #[test]
    fn bound_is_enforced() {
        let k = key(TreeKind::Reduced, Measure::Leaves, 9);
        assert_eq!(
            generate(&k),
            Err(EnumerateError::BoundExceeded { value: 9, bound: 8 })
        );
        assert!(generate_with_bound(&k, 9).is_ok());
    }

    #[test]
    fn invalid_measures_are_rejected() {
        assert!(matches!(
            generate(&key(TreeKind::Reduced, Measure::InternalVertices, 3)),
            Err(EnumerateError::InvalidMeasure { .. })
        ));
        assert!(matches!(
            generate(&key(TreeKind::Hyper, Measure::Edges, 3)),
            Err(EnumerateError::InvalidMeasure { .. })
        ));
    }

    #[test]
    fn leq_reduced_examples() {
        assert!(leq_reduced(&rt("(| | |)"), &rt("((| |) |)")));
        assert!(leq_reduced(&rt("(| | |)"), &rt("(| (| |))")));
        assert!(leq_reduced(&rt("(| | |)"), &rt("(| | |)")));
        assert!(!leq_reduced(&rt("((| |) |)"), &rt("(| (| |))")));
        assert!(!leq_reduced(&rt("(| (| |))"), &rt("((| |) |)")));
        // different leaf counts are incomparable
        assert!(!leq_reduced(&rt("(| |)"), &rt("((| |) |)")));
    }

    #[test]
    fn leq_hyper_examples() {
        assert!(leq_hyper(&ht("*[(* *)]"), &ht("*[((*[(*)]))]")));
        assert!(leq_hyper(&ht("*[(* *)]"), &ht("*[(*)(*)]")));
        assert!(leq_hyper(&ht("*[(* *)]"), &ht("*[(* *)]")));
        assert!(!leq_hyper(&ht("*[((*[(*)]))]"), &ht("*[(*)(*)]")));
        assert!(!leq_hyper(&ht("*[(*)(*)]"), &ht("*[((*[(*)]))]")));
    }

    #[test]
    fn minimal_and_maximal_elements() {
        let (min, max) = minimal_maximal(&key(TreeKind::Reduced, Measure::Leaves, 4)).unwrap();
        assert_eq!(min.texts(), vec!["(| | | |)"]);
        let max_texts = max.texts();
        assert_eq!(max_texts.len(), 5);
        for t in &max_texts {
            assert!(parse_reduced(t).unwrap().is_binary());
        }

        let (min, _) = minimal_maximal(&key(TreeKind::Hyper, Measure::Vertices, 3)).unwrap();
        assert_eq!(min.texts(), vec!["*[(* *)]"]);

        let (min, max) = minimal_maximal(&key(TreeKind::Reduced, Measure::Leaves, 2)).unwrap();
        assert_eq!(min.texts(), vec!["(| |)"]);
        assert_eq!(max.texts(), vec!["(| |)"]);
    }
}
