//! Core tree and hypertree data types.
//!
//! Two families of planar structures live here:
//!
//! * [`ReducedTree`]: a planar rooted tree in which every internal vertex
//!   has at least two ordered children. Planar binary trees are the sub-case
//!   where every internal vertex has exactly two children.
//! * [`HyperTree`]: a planar rooted hypertree, stored recursively as a root
//!   vertex carrying an ordered list of hyperedges, each hyperedge an ordered
//!   nonempty list of sub-hypertrees. Planar rooted trees are the sub-case
//!   where every hyperedge has exactly one member (cardinality two).
//!
//! All values are immutable after construction and compare structurally.
//! Forests are ordered words of non-unit trees; the empty word is the
//! algebra unit on either side.

use std::fmt;

use thiserror::Error;

/// Errors raised by tree constructors and kind checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("node needs at least 2 children, got {0}")]
    NodeArity(usize),
    #[error("hyperedge needs at least 1 member")]
    EmptyEdge,
    #[error("beta needs at least 2 arguments, got {0}")]
    BetaArity(usize),
    #[error("expected a planar rooted tree, found a hyperedge of cardinality {0}")]
    NotRootedTree(usize),
    #[error("tag `{tag}` not valid for arity {arity}")]
    TagArity { tag: String, arity: usize },
    #[error("vertex with {arity} children is untagged but a decoration scheme is active")]
    MissingTag { arity: usize },
}

/// A planar reduced tree: either a leaf, or an internal vertex with an
/// ordered list of at least two subtrees and an optional decoration tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReducedTree {
    Leaf,
    Node {
        children: Vec<ReducedTree>,
        tag: Option<String>,
    },
}

impl ReducedTree {
    pub fn is_leaf(&self) -> bool {
        matches!(self, ReducedTree::Leaf)
    }

    /// Number of leaves; the single edge `|` counts one.
    pub fn leaf_count(&self) -> usize {
        match self {
            ReducedTree::Leaf => 1,
            ReducedTree::Node { children, .. } => children.iter().map(Self::leaf_count).sum(),
        }
    }

    /// Number of internal vertices, the grading of the reduced side.
    pub fn grade(&self) -> usize {
        match self {
            ReducedTree::Leaf => 0,
            ReducedTree::Node { children, .. } => {
                1 + children.iter().map(Self::grade).sum::<usize>()
            }
        }
    }

    /// True when every internal vertex has exactly two children.
    pub fn is_binary(&self) -> bool {
        match self {
            ReducedTree::Leaf => true,
            ReducedTree::Node { children, .. } => {
                children.len() == 2 && children.iter().all(Self::is_binary)
            }
        }
    }

    /// Same shape with every decoration tag removed.
    pub fn strip_tags(&self) -> ReducedTree {
        match self {
            ReducedTree::Leaf => ReducedTree::Leaf,
            ReducedTree::Node { children, .. } => ReducedTree::Node {
                children: children.iter().map(Self::strip_tags).collect(),
                tag: None,
            },
        }
    }
}

/// Grafting on a new root: `vee([t1, ..., tn])` is the tree whose root has
/// the given subtrees as ordered branches. Requires n >= 2.
pub fn vee(children: Vec<ReducedTree>) -> Result<ReducedTree, TreeError> {
    vee_tagged(children, None)
}

/// Decorated grafting; the tag lands on the new internal vertex.
pub fn vee_tagged(
    children: Vec<ReducedTree>,
    tag: Option<String>,
) -> Result<ReducedTree, TreeError> {
    if children.len() < 2 {
        return Err(TreeError::NodeArity(children.len()));
    }
    Ok(ReducedTree::Node { children, tag })
}

/// A hyperedge: the ordered non-root vertices of the edge, each carrying its
/// whole sub-hypertree, plus an optional decoration tag. Member order is the
/// counterclockwise order around the edge starting after the edge's root, so
/// the edge's cardinality is `members.len() + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperEdge {
    pub members: Vec<HyperTree>,
    pub tag: Option<String>,
}

impl HyperEdge {
    pub fn new(members: Vec<HyperTree>, tag: Option<String>) -> Result<HyperEdge, TreeError> {
        if members.is_empty() {
            return Err(TreeError::EmptyEdge);
        }
        Ok(HyperEdge { members, tag })
    }

    /// Total number of vertices of the edge, its root included.
    pub fn cardinality(&self) -> usize {
        self.members.len() + 1
    }

    /// A binary edge is an ordinary tree edge.
    pub fn is_binary(&self) -> bool {
        self.members.len() == 1
    }
}

/// A planar rooted hypertree, denoted by its root vertex: the ordered list of
/// hyperedges rooted there, in planar left-to-right order. The empty list is
/// the single vertex `*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HyperTree {
    pub edges: Vec<HyperEdge>,
}

impl HyperTree {
    /// The single vertex.
    pub fn vertex() -> HyperTree {
        HyperTree { edges: Vec::new() }
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    /// Total number of vertices.
    pub fn vertex_count(&self) -> usize {
        1 + self
            .edges
            .iter()
            .flat_map(|e| e.members.iter())
            .map(Self::vertex_count)
            .sum::<usize>()
    }

    /// Total number of hyperedges, the grading of the hyper side.
    pub fn grade(&self) -> usize {
        self.edges
            .iter()
            .map(|e| 1 + e.members.iter().map(Self::grade).sum::<usize>())
            .sum()
    }

    /// True when every hyperedge is binary, i.e. the value is an ordinary
    /// planar rooted tree.
    pub fn is_rooted_tree(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.is_binary() && e.members.iter().all(Self::is_rooted_tree))
    }

    /// Same shape with every decoration tag removed.
    pub fn strip_tags(&self) -> HyperTree {
        HyperTree {
            edges: self
                .edges
                .iter()
                .map(|e| HyperEdge {
                    members: e.members.iter().map(Self::strip_tags).collect(),
                    tag: None,
                })
                .collect(),
        }
    }

    fn first_non_binary_cardinality(&self) -> Option<usize> {
        for e in &self.edges {
            if !e.is_binary() {
                return Some(e.cardinality());
            }
            for m in &e.members {
                if let Some(c) = m.first_non_binary_cardinality() {
                    return Some(c);
                }
            }
        }
        None
    }
}

fn require_rooted_tree(t: &HyperTree) -> Result<(), TreeError> {
    match t.first_non_binary_cardinality() {
        Some(c) => Err(TreeError::NotRootedTree(c)),
        None => Ok(()),
    }
}

/// Grafts a forest of planar rooted trees on a common new root, one binary
/// edge per input tree, in order. `bplus([])` is the single vertex.
pub fn bplus(forest: Vec<HyperTree>) -> Result<HyperTree, TreeError> {
    for t in &forest {
        require_rooted_tree(t)?;
    }
    Ok(HyperTree {
        edges: forest
            .into_iter()
            .map(|t| HyperEdge {
                members: vec![t],
                tag: None,
            })
            .collect(),
    })
}

/// The left Butcher product on planar rooted trees: `t` becomes the new
/// leftmost branch of `u`. Rejects genuine hypertree inputs; `beta` is the
/// hyperedge generalization.
pub fn butcher(t: &HyperTree, u: &HyperTree) -> Result<HyperTree, TreeError> {
    require_rooted_tree(t)?;
    require_rooted_tree(u)?;
    let mut edges = Vec::with_capacity(u.edges.len() + 1);
    edges.push(HyperEdge {
        members: vec![t.clone()],
        tag: None,
    });
    edges.extend(u.edges.iter().cloned());
    Ok(HyperTree { edges })
}

/// Collects the roots of `ts = [t1, ..., tn]` into one new edge: the last
/// argument keeps its root, which becomes the root of the whole result, and
/// the new edge is prepended to its edge list with members in reversed
/// argument order `[t(n-1), ..., t1]`. For n = 2 this is the Butcher product.
pub fn beta(ts: Vec<HyperTree>) -> Result<HyperTree, TreeError> {
    beta_tagged(ts, None)
}

/// `beta` with a decoration tag on the newly created edge.
pub fn beta_tagged(mut ts: Vec<HyperTree>, tag: Option<String>) -> Result<HyperTree, TreeError> {
    if ts.len() < 2 {
        return Err(TreeError::BetaArity(ts.len()));
    }
    let base = ts.pop().expect("nonempty");
    ts.reverse();
    let mut edges = Vec::with_capacity(base.edges.len() + 1);
    edges.push(HyperEdge { members: ts, tag });
    edges.extend(base.edges);
    Ok(HyperTree { edges })
}

/// Splits a non-vertex hypertree along the leftmost edge containing the
/// root: returns the arguments `[s1, ..., sn]` with `beta(parts) == s`, plus
/// that edge's tag. Inverse of [`beta_tagged`].
pub fn beta_decompose(s: &HyperTree) -> Option<(Vec<HyperTree>, Option<String>)> {
    let first = s.edges.first()?;
    let mut parts: Vec<HyperTree> = first.members.iter().rev().cloned().collect();
    parts.push(HyperTree {
        edges: s.edges[1..].to_vec(),
    });
    Some((parts, first.tag.clone()))
}

/// An ordered word of non-unit reduced trees. The empty word is the algebra
/// unit; unit trees are absorbed on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedForest(Vec<ReducedTree>);

/// An ordered word of non-unit hypertrees; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HyperForest(Vec<HyperTree>);

impl ReducedForest {
    pub fn unit() -> ReducedForest {
        ReducedForest(Vec::new())
    }

    pub fn from_trees<I: IntoIterator<Item = ReducedTree>>(trees: I) -> ReducedForest {
        ReducedForest(trees.into_iter().filter(|t| !t.is_leaf()).collect())
    }

    pub fn single(t: ReducedTree) -> ReducedForest {
        ReducedForest::from_trees([t])
    }

    pub fn trees(&self) -> &[ReducedTree] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word concatenation, the algebra product.
    pub fn concat(&self, other: &ReducedForest) -> ReducedForest {
        ReducedForest(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    pub fn grade(&self) -> usize {
        self.0.iter().map(ReducedTree::grade).sum()
    }

    pub fn leaf_count(&self) -> usize {
        self.0.iter().map(ReducedTree::leaf_count).sum()
    }
}

impl HyperForest {
    pub fn unit() -> HyperForest {
        HyperForest(Vec::new())
    }

    pub fn from_trees<I: IntoIterator<Item = HyperTree>>(trees: I) -> HyperForest {
        HyperForest(trees.into_iter().filter(|t| !t.is_vertex()).collect())
    }

    pub fn single(t: HyperTree) -> HyperForest {
        HyperForest::from_trees([t])
    }

    pub fn trees(&self) -> &[HyperTree] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &HyperForest) -> HyperForest {
        HyperForest(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    pub fn grade(&self) -> usize {
        self.0.iter().map(HyperTree::grade).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.iter().map(HyperTree::vertex_count).sum()
    }
}

/// A partitioned tag alphabet `I_2, I_3, ...`: each tag is valid for exactly
/// one arity, so the sets are disjoint by construction.
#[derive(Debug, Clone, Default)]
pub struct DecorationScheme {
    arity_of: std::collections::BTreeMap<String, usize>,
}

impl DecorationScheme {
    pub fn new() -> DecorationScheme {
        DecorationScheme::default()
    }

    /// Registers `tags` as the set valid for vertices with `arity` children
    /// (edges with `arity` vertices). A tag seen twice with different
    /// arities violates disjointness.
    pub fn with_arity<I, S>(mut self, arity: usize, tags: I) -> Result<DecorationScheme, TreeError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        for tag in tags {
            let tag = tag.into();
            if let Some(&prev) = self.arity_of.get(&tag) {
                if prev != arity {
                    return Err(TreeError::TagArity { tag, arity });
                }
            }
            self.arity_of.insert(tag, arity);
        }
        Ok(self)
    }

    pub fn arity_of(&self, tag: &str) -> Option<usize> {
        self.arity_of.get(tag).copied()
    }

    fn check_tag(&self, tag: &Option<String>, arity: usize) -> Result<(), TreeError> {
        match tag {
            None => Err(TreeError::MissingTag { arity }),
            Some(t) => match self.arity_of(t) {
                Some(a) if a == arity => Ok(()),
                _ => Err(TreeError::TagArity {
                    tag: t.clone(),
                    arity,
                }),
            },
        }
    }

    /// Every internal vertex with n children must carry a tag from `I_n`.
    pub fn check_reduced(&self, t: &ReducedTree) -> Result<(), TreeError> {
        if let ReducedTree::Node { children, tag } = t {
            self.check_tag(tag, children.len())?;
            for c in children {
                self.check_reduced(c)?;
            }
        }
        Ok(())
    }

    /// Every edge with n vertices must carry a tag from `I_n`.
    pub fn check_hyper(&self, s: &HyperTree) -> Result<(), TreeError> {
        for e in &s.edges {
            self.check_tag(&e.tag, e.cardinality())?;
            for m in &e.members {
                self.check_hyper(m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ReducedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_reduced(self))
    }
}

impl fmt::Display for HyperTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_hyper(self))
    }
}

impl fmt::Display for ReducedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_reduced_forest(self))
    }
}

impl fmt::Display for HyperForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_hyper_forest(self))
    }
}
