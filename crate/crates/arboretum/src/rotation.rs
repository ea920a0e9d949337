//! The rotation correspondence between reduced trees and hypertrees.
//!
//! `phi` sends a reduced tree to a hypertree by the recursion
//! `phi(vee(t1, ..., tn)) = beta(phi(t1), ..., phi(tn))`, with the single
//! leaf going to the single vertex. Restricted to binary trees this is the
//! classical rotation correspondence onto planar rooted trees, with `beta`
//! degenerating to the Butcher product. `phi_inv` recovers the tree by
//! splitting along the leftmost edge containing the root.
//!
//! The same recursion induces two correspondences that are exposed as
//! address maps: internal vertices of `t` match edges of `phi(t)` with the
//! same arity ([`omega`]), and vertices of `s` match leaves of `phi_inv(s)`
//! counted left to right, the root taking the rightmost leaf
//! ([`vertex_leaf_map`]).

use std::collections::BTreeMap;
use std::fmt;

use crate::trees::{
    beta_decompose, beta_tagged, DecorationScheme, HyperTree, ReducedTree, TreeError,
};

/// Root-to-node path in a reduced tree, as child indices.
pub type NodePath = Vec<usize>;

/// Root-to-vertex path in a hypertree: each step descends into edge
/// `edge_index` at the current vertex and lands on member `member_index`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexAddr(pub Vec<(usize, usize)>);

impl VertexAddr {
    pub fn root() -> VertexAddr {
        VertexAddr(Vec::new())
    }
}

impl fmt::Display for VertexAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let steps: Vec<String> = self.0.iter().map(|(e, m)| format!("{e}.{m}")).collect();
        f.write_str(&steps.join("/"))
    }
}

/// An edge in a hypertree: the address of the vertex it is rooted at, plus
/// its index in that vertex's edge list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeAddr {
    pub vertex: VertexAddr,
    pub index: usize,
}

impl fmt::Display for EdgeAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.vertex, self.index)
    }
}

/// The extended rotation correspondence. Decoration tags ride along: the tag
/// of an internal vertex lands on the edge it corresponds to.
pub fn phi(t: &ReducedTree) -> HyperTree {
    match t {
        ReducedTree::Leaf => HyperTree::vertex(),
        ReducedTree::Node { children, tag } => {
            let parts = children.iter().map(phi).collect();
            beta_tagged(parts, tag.clone()).expect("node arity >= 2")
        }
    }
}

/// Inverse of [`phi`]: splits along the leftmost edge containing the root,
/// reading the branch trees off the edge members in reverse member order.
pub fn phi_inv(s: &HyperTree) -> ReducedTree {
    match beta_decompose(s) {
        None => ReducedTree::Leaf,
        Some((parts, tag)) => ReducedTree::Node {
            children: parts.iter().map(phi_inv).collect(),
            tag,
        },
    }
}

/// [`phi`] on a decorated tree, after validating the decoration against the
/// scheme. The edge with n vertices inherits the tag of the matching n-ary
/// vertex.
pub fn phi_decorated(t: &ReducedTree, scheme: &DecorationScheme) -> Result<HyperTree, TreeError> {
    scheme.check_reduced(t)?;
    Ok(phi(t))
}

/// Inverse of [`phi_decorated`].
pub fn phi_inv_decorated(
    s: &HyperTree,
    scheme: &DecorationScheme,
) -> Result<ReducedTree, TreeError> {
    scheme.check_hyper(s)?;
    Ok(phi_inv(s))
}

/// The arity-preserving bijection between internal vertices of a reduced
/// tree and edges of its image under [`phi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexEdgeMap {
    pairs: Vec<(NodePath, EdgeAddr)>,
}

impl VertexEdgeMap {
    pub fn pairs(&self) -> &[(NodePath, EdgeAddr)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn edge_of_vertex(&self, path: &[usize]) -> Option<&EdgeAddr> {
        self.pairs.iter().find(|(p, _)| p == path).map(|(_, e)| e)
    }

    pub fn vertex_of_edge(&self, edge: &EdgeAddr) -> Option<&NodePath> {
        self.pairs.iter().find(|(_, e)| e == edge).map(|(p, _)| p)
    }
}

/// The bijection between vertices of a hypertree and leaves of its preimage
/// under [`phi`], leaves numbered 1..=n left to right. The root always takes
/// the rightmost leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLeafMap {
    leaf_to_vertex: Vec<VertexAddr>,
}

impl VertexLeafMap {
    pub fn len(&self) -> usize {
        self.leaf_to_vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaf_to_vertex.is_empty()
    }

    /// The vertex carrying leaf number `leaf` (1-based).
    pub fn vertex_of_leaf(&self, leaf: usize) -> Option<&VertexAddr> {
        if leaf == 0 {
            return None;
        }
        self.leaf_to_vertex.get(leaf - 1)
    }

    /// The leaf number of a vertex (1-based).
    pub fn leaf_of_vertex(&self, addr: &VertexAddr) -> Option<usize> {
        self.leaf_to_vertex.iter().position(|a| a == addr).map(|i| i + 1)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&VertexAddr, usize)> {
        self.leaf_to_vertex.iter().zip(1..)
    }
}

/// All internal-vertex paths of a reduced tree in depth-first preorder.
pub fn internal_vertex_paths(t: &ReducedTree) -> Vec<NodePath> {
    fn walk(t: &ReducedTree, prefix: &mut NodePath, out: &mut Vec<NodePath>) {
        if let ReducedTree::Node { children, .. } = t {
            out.push(prefix.clone());
            for (i, c) in children.iter().enumerate() {
                prefix.push(i);
                walk(c, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

/// All edge addresses of a hypertree in depth-first preorder: at each vertex
/// the edges left to right, each followed by its members' own edges.
pub fn edge_addrs(s: &HyperTree) -> Vec<EdgeAddr> {
    fn walk(s: &HyperTree, at: &VertexAddr, out: &mut Vec<EdgeAddr>) {
        for (j, e) in s.edges.iter().enumerate() {
            out.push(EdgeAddr {
                vertex: at.clone(),
                index: j,
            });
            for (m, member) in e.members.iter().enumerate() {
                let mut steps = at.0.clone();
                steps.push((j, m));
                walk(member, &VertexAddr(steps), out);
            }
        }
    }
    let mut out = Vec::new();
    walk(s, &VertexAddr::root(), &mut out);
    out
}

/// The subtree sitting at a node path.
pub fn reduced_subtree_at<'a>(t: &'a ReducedTree, path: &[usize]) -> Option<&'a ReducedTree> {
    let mut cur = t;
    for &i in path {
        match cur {
            ReducedTree::Node { children, .. } => cur = children.get(i)?,
            ReducedTree::Leaf => return None,
        }
    }
    Some(cur)
}

/// The sub-hypertree rooted at an addressed vertex.
pub fn hyper_subtree_at<'a>(s: &'a HyperTree, addr: &VertexAddr) -> Option<&'a HyperTree> {
    let mut cur = s;
    for &(e, m) in &addr.0 {
        cur = cur.edges.get(e)?.members.get(m)?;
    }
    Some(cur)
}

/// The edge at an address; its cardinality is `members.len() + 1`.
pub fn hyper_edge_at<'a>(s: &'a HyperTree, addr: &EdgeAddr) -> Option<&'a crate::trees::HyperEdge> {
    hyper_subtree_at(s, &addr.vertex)?.edges.get(addr.index)
}

/// The vertex/edge correspondence for `t` and `phi(t)`, pairs listed in
/// depth-first preorder of the internal vertices. Built by tagging each
/// internal vertex and reading where [`phi`] carries the tags, which is the
/// recursion itself: the vertex closest to the root goes to the leftmost
/// edge containing the root.
pub fn omega(t: &ReducedTree) -> VertexEdgeMap {
    fn tag_by_counter(t: &ReducedTree, next: &mut usize) -> ReducedTree {
        match t {
            ReducedTree::Leaf => ReducedTree::Leaf,
            ReducedTree::Node { children, .. } => {
                let tag = Some(format!("v{next}"));
                *next += 1;
                ReducedTree::Node {
                    children: children.iter().map(|c| tag_by_counter(c, next)).collect(),
                    tag,
                }
            }
        }
    }

    let paths = internal_vertex_paths(t);
    let tagged = tag_by_counter(t, &mut 0);
    let image = phi(&tagged);
    let mut edge_of: BTreeMap<String, EdgeAddr> = BTreeMap::new();
    for addr in edge_addrs(&image) {
        let edge = hyper_edge_at(&image, &addr).expect("address from traversal");
        if let Some(tag) = &edge.tag {
            edge_of.insert(tag.clone(), addr);
        }
    }
    let pairs = paths
        .into_iter()
        .enumerate()
        .map(|(k, p)| {
            let addr = edge_of
                .remove(&format!("v{k}"))
                .expect("every vertex tag appears on exactly one edge");
            (p, addr)
        })
        .collect();
    VertexEdgeMap { pairs }
}

/// The vertex/leaf correspondence for `s` and `phi_inv(s)`, following the
/// same split as [`phi_inv`]: branch blocks left to right, root last.
pub fn vertex_leaf_map(s: &HyperTree) -> VertexLeafMap {
    fn walk(s: &HyperTree) -> Vec<VertexAddr> {
        let Some((parts, _)) = beta_decompose(s) else {
            return vec![VertexAddr::root()];
        };
        let n = parts.len();
        let mut out = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            let sub = walk(part);
            if i + 1 < n {
                // branch i sits at member n-2-i of the new leftmost edge
                let member = n - 2 - i;
                for addr in sub {
                    let mut steps = Vec::with_capacity(addr.0.len() + 1);
                    steps.push((0, member));
                    steps.extend(addr.0);
                    out.push(VertexAddr(steps));
                }
            } else {
                // the last part keeps the root; its own root edges sit one
                // slot to the right of the split edge
                for addr in sub {
                    let mut steps = addr.0;
                    if let Some(first) = steps.first_mut() {
                        first.0 += 1;
                    }
                    out.push(VertexAddr(steps));
                }
            }
        }
        out
    }
    VertexLeafMap {
        leaf_to_vertex: walk(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_hyper, parse_reduced};
    use crate::trees::butcher;

    fn rt(s: &str) -> ReducedTree {
        parse_reduced(s).unwrap()
    }

    fn ht(s: &str) -> HyperTree {
        parse_hyper(s).unwrap()
    }

    #[test]
    fn phi_base_cases() {
        assert_eq!(phi(&rt("|")), ht("*"));
        assert_eq!(phi(&rt("(| |)")), ht("*[(*)]"));
        assert_eq!(phi(&rt("((| |) |)")), ht("*[((*[(*)]))]"));
        assert_eq!(phi(&rt("(| (| |))")), ht("*[(*)(*)]"));
        assert_eq!(phi(&rt("(| | |)")), ht("*[(* *)]"));
    }

    #[test]
    fn phi_inv_base_cases() {
        assert_eq!(phi_inv(&ht("*")), rt("|"));
        assert_eq!(phi_inv(&ht("*[(*)(*)]")), rt("(| (| |))"));
        assert_eq!(phi_inv(&ht("*[(* *)]")), rt("(| | |)"));
    }

    #[test]
    fn phi_round_trips_on_samples() {
        for s in [
            "|",
            "(| |)",
            "(| | | |)",
            "((| |) (| | |))",
            "(((| |) |) | (| |))",
        ] {
            let t = rt(s);
            assert_eq!(phi_inv(&phi(&t)), t);
        }
        for s in ["*", "*[(* * *)]", "*[(* (*[(*)]))(*)]", "*[((*[(* *)]) *)]"] {
            let h = ht(s);
            assert_eq!(phi(&phi_inv(&h)), h);
        }
    }

    #[test]
    fn phi_transports_gradings() {
        for s in ["(| |)", "(| | |)", "((| | |) (| |))", "((| |) | (| |))"] {
            let t = rt(s);
            let h = phi(&t);
            assert_eq!(h.grade(), t.grade());
            assert_eq!(h.vertex_count(), t.leaf_count());
        }
    }

    #[test]
    fn binary_restriction_agrees_with_butcher_recursion() {
        fn knuth(t: &ReducedTree) -> HyperTree {
            match t {
                ReducedTree::Leaf => HyperTree::vertex(),
                ReducedTree::Node { children, .. } => {
                    assert_eq!(children.len(), 2);
                    butcher(&knuth(&children[0]), &knuth(&children[1])).unwrap()
                }
            }
        }
        for s in ["|", "(| |)", "((| |) |)", "(| (| |))", "((| |) (| |))", "(((| |) |) (| |))"] {
            let t = rt(s);
            let h = phi(&t);
            assert_eq!(h, knuth(&t));
            assert!(h.is_rooted_tree());
        }
    }

    #[test]
    fn omega_on_the_y_tree() {
        let m = omega(&rt("(| |)"));
        assert_eq!(m.len(), 1);
        let edge = m.edge_of_vertex(&[]).unwrap();
        assert_eq!(edge.vertex, VertexAddr::root());
        assert_eq!(edge.index, 0);
    }

    #[test]
    fn omega_on_the_ladder() {
        // lower vertex goes to the bottom edge, upper vertex to the top edge
        let t = rt("((| |) |)");
        let m = omega(&t);
        assert_eq!(m.len(), 2);
        let bottom = m.edge_of_vertex(&[]).unwrap();
        assert_eq!((bottom.vertex.clone(), bottom.index), (VertexAddr::root(), 0));
        let top = m.edge_of_vertex(&[0]).unwrap();
        assert_eq!(
            (top.vertex.clone(), top.index),
            (VertexAddr(vec![(0, 0)]), 0)
        );
    }

    #[test]
    fn omega_preserves_arity() {
        for s in ["(| | |)", "((| |) (| | |))", "((| | | |) |)"] {
            let t = rt(s);
            let image = phi(&t);
            for (path, edge) in omega(&t).pairs() {
                let node = reduced_subtree_at(&t, path).unwrap();
                let arity = match node {
                    ReducedTree::Node { children, .. } => children.len(),
                    ReducedTree::Leaf => unreachable!("internal paths only"),
                };
                let e = hyper_edge_at(&image, edge).unwrap();
                assert_eq!(e.cardinality(), arity);
            }
        }
    }

    #[test]
    fn vertex_leaf_map_small_cases() {
        let m = vertex_leaf_map(&ht("*"));
        assert_eq!(m.len(), 1);
        assert_eq!(m.vertex_of_leaf(1), Some(&VertexAddr::root()));

        // the root takes the rightmost leaf
        let m = vertex_leaf_map(&ht("*[(*)]"));
        assert_eq!(m.len(), 2);
        assert_eq!(m.vertex_of_leaf(2), Some(&VertexAddr::root()));
        assert_eq!(m.vertex_of_leaf(1), Some(&VertexAddr(vec![(0, 0)])));
    }

    #[test]
    fn vertex_leaf_map_is_a_bijection() {
        for s in ["*[(* *)]", "*[(*)(*)]", "*[(* (*[(*)]))]", "*[((*[(* *)]) *)]"] {
            let h = ht(s);
            let m = vertex_leaf_map(&h);
            assert_eq!(m.len(), h.vertex_count());
            assert_eq!(m.vertex_of_leaf(m.len()), Some(&VertexAddr::root()));
            let mut seen = std::collections::BTreeSet::new();
            for (addr, _) in m.pairs() {
                assert!(hyper_subtree_at(&h, addr).is_some());
                assert!(seen.insert(addr.clone()));
            }
        }
    }

    #[test]
    fn decorated_rotation() {
        let scheme = DecorationScheme::new()
            .with_arity(2, ["a", "b"])
            .unwrap()
            .with_arity(3, ["c"])
            .unwrap();
        assert_eq!(
            phi_decorated(&rt("(| |)@a"), &scheme).unwrap(),
            ht("*[(*)@a]")
        );
        assert_eq!(
            phi_decorated(&rt("((| |)@a |)@b"), &scheme).unwrap(),
            ht("*[((*[(*)@a]))@b]")
        );
        assert_eq!(
            phi_inv_decorated(&ht("*[((*[(*)@a]))@b]"), &scheme).unwrap(),
            rt("((| |)@a |)@b")
        );
        // arity mismatch is rejected
        assert!(phi_decorated(&rt("(| | |)@a"), &scheme).is_err());
    }

    #[test]
    fn tags_commute_with_erasure() {
        for s in ["(| |)@a", "((| |)@b |)@a", "(| | |)@c", "((| |)@a (| |)@b)@a"] {
            let t = rt(s);
            assert_eq!(phi(&t).strip_tags(), phi(&t.strip_tags()));
        }
    }
}
