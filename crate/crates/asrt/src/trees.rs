//! Absolutely symmetric rooted trees and their two encodings.
//!
//! An a.s.r.t. is a rooted tree in which every node's children carry
//! pairwise-identical subtrees, so the whole tree is determined by its
//! level-multiplicity sequence `(m1, ..., md)`: every node at depth
//! `i - 1` has exactly `mi` children. [`AsrtTree`] stores that compact
//! sequence; [`RootedTree`] is an explicit ordered tree used by the
//! recognizer and by brute-force censuses.
//!
//! The bijection with composition vectors reverses the sequence: the last
//! component of the vector is the root's child count. Under it the edge
//! count of the tree equals `f` of the vector.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::factorization::DivisorSieve;
use crate::vectors::{self, CompositionVector};

/// Default ceiling on expanded node counts; level sequences are compact,
/// their expansions need not be.
pub const DEFAULT_NODE_CAP: u64 = 1_000_000;

/// An a.s.r.t. stored as its level-multiplicity sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AsrtTree {
    levels: Vec<u64>,
}

/// An ordered rooted tree; the child order encodes one planar realization.
#[derive(Debug, PartialEq, Eq)]
pub struct RootedTree {
    children: Vec<RootedTree>,
}

impl AsrtTree {
    /// Validates that the sequence is nonempty with every entry at least 1.
    pub fn new(levels: Vec<u64>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Domain("level sequence must be nonempty".into()));
        }
        if levels.contains(&0) {
            return Err(Error::Domain(
                "level multiplicities must be at least 1".into(),
            ));
        }
        Ok(AsrtTree { levels })
    }

    pub fn levels(&self) -> &[u64] {
        &self.levels
    }

    /// The tree corresponding to a composition vector: levels are the
    /// vector's components reversed, so the last component becomes the
    /// root's child count.
    pub fn from_vector(v: &CompositionVector) -> AsrtTree {
        let mut levels = v.components().to_vec();
        levels.reverse();
        AsrtTree { levels }
    }

    /// Inverse of [`AsrtTree::from_vector`].
    pub fn to_vector(&self) -> CompositionVector {
        let mut components = self.levels.clone();
        components.reverse();
        CompositionVector::new(components).expect("levels are nonempty and positive")
    }

    /// Exact number of edges: the sum of prefix products of the levels.
    /// Equals `f` of the corresponding vector.
    pub fn edge_count(&self) -> BigUint {
        let mut width = BigUint::from(1u32);
        let mut total = BigUint::from(0u32);
        for &m in &self.levels {
            width *= m;
            total += &width;
        }
        total
    }

    /// Node count if it stays within `cap`, else a capacity error.
    fn node_count_within(&self, cap: u64) -> Result<u64> {
        let mut width: u64 = 1;
        let mut total: u64 = 1;
        for &m in &self.levels {
            width = width
                .checked_mul(m)
                .ok_or_else(|| self.capacity_error(cap))?;
            total = total
                .checked_add(width)
                .ok_or_else(|| self.capacity_error(cap))?;
            if total > cap {
                return Err(self.capacity_error(cap));
            }
        }
        Ok(total)
    }

    fn capacity_error(&self, cap: u64) -> Error {
        Error::Capacity(format!(
            "expansion of level sequence {self} exceeds the {cap}-node cap"
        ))
    }

    /// Expands to an explicit [`RootedTree`] under the default node cap.
    pub fn expand(&self) -> Result<RootedTree> {
        self.expand_with_cap(DEFAULT_NODE_CAP)
    }

    /// Expands to an explicit tree with `1 + m1 + m1*m2 + ...` nodes,
    /// failing if that exceeds `cap`.
    pub fn expand_with_cap(&self, cap: u64) -> Result<RootedTree> {
        self.node_count_within(cap)?;
        let mut subtree = RootedTree::leaf();
        for &m in self.levels.iter().rev() {
            let m = m as usize;
            let mut children = Vec::with_capacity(m);
            for _ in 1..m {
                children.push(subtree.clone());
            }
            children.push(subtree);
            subtree = RootedTree { children };
        }
        Ok(subtree)
    }

    /// Canonical parenthesis encoding of the expansion; built level by
    /// level since identical siblings are already in sorted order.
    pub fn to_paren(&self) -> Result<String> {
        self.to_paren_with_cap(DEFAULT_NODE_CAP)
    }

    pub fn to_paren_with_cap(&self, cap: u64) -> Result<String> {
        self.node_count_within(cap)?;
        let mut s = String::from("()");
        for &m in self.levels.iter().rev() {
            let mut next = String::with_capacity(2 + s.len() * m as usize);
            next.push('(');
            for _ in 0..m {
                next.push_str(&s);
            }
            next.push(')');
            s = next;
        }
        Ok(s)
    }

    /// DOT digraph for the expansion, nodes numbered breadth-first from
    /// the root (`v0`). Byte-for-byte deterministic.
    pub fn to_dot(&self, name: &str) -> Result<String> {
        self.to_dot_with_cap(name, DEFAULT_NODE_CAP)
    }

    pub fn to_dot_with_cap(&self, name: &str, cap: u64) -> Result<String> {
        self.node_count_within(cap)?;
        let mut s = format!("digraph {name} {{\n");
        let mut offset: u64 = 0;
        let mut next_offset: u64 = 1;
        let mut width: u64 = 1;
        for &m in &self.levels {
            for j in 0..width {
                let parent = offset + j;
                for c in 0..m {
                    let child = next_offset + j * m + c;
                    s.push_str(&format!("  v{parent} -> v{child};\n"));
                }
            }
            offset = next_offset;
            width *= m;
            next_offset += width;
        }
        s.push_str("}\n");
        Ok(s)
    }
}

impl fmt::Display for AsrtTree {
    /// Levels joined by colons: `m1:m2:...:md`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.levels.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// All a.s.r.t. with `n` edges, one per vector of `f(A) = n`, in the
/// vectors' lexicographic order.
pub fn enumerate_trees(n: u64, sieve: &DivisorSieve) -> Result<Vec<AsrtTree>> {
    enumerate_trees_capped(n, sieve, usize::MAX)
}

pub fn enumerate_trees_capped(n: u64, sieve: &DivisorSieve, cap: usize) -> Result<Vec<AsrtTree>> {
    let vectors = vectors::enumerate_vectors_capped(n, sieve, cap)?;
    Ok(vectors.iter().map(AsrtTree::from_vector).collect())
}

impl RootedTree {
    pub fn leaf() -> RootedTree {
        RootedTree {
            children: Vec::new(),
        }
    }

    pub fn node(children: Vec<RootedTree>) -> RootedTree {
        RootedTree { children }
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        flatten(self).0.len()
    }
}

impl Clone for RootedTree {
    /// Structural clone, iterative so that deep chains cannot exhaust the
    /// call stack.
    fn clone(&self) -> RootedTree {
        let (nodes, ranges) = flatten(self);
        let mut clones: Vec<Option<RootedTree>> = (0..nodes.len()).map(|_| None).collect();
        for i in (0..nodes.len()).rev() {
            let (start, len) = ranges[i];
            let children: Vec<RootedTree> = clones[start..start + len]
                .iter_mut()
                .map(|slot| slot.take().expect("children built before parents"))
                .collect();
            clones[i] = Some(RootedTree { children });
        }
        clones[0].take().expect("root clone present")
    }
}

impl Drop for RootedTree {
    /// Iterative teardown; the derived drop would recurse to the tree's
    /// height.
    fn drop(&mut self) {
        let mut stack = std::mem::take(&mut self.children);
        while let Some(mut node) = stack.pop() {
            stack.append(&mut node.children);
        }
    }
}

/// Breadth-first flattening: nodes in BFS order plus, per node, the range
/// its children occupy in that order (children of any node are contiguous).
fn flatten(root: &RootedTree) -> (Vec<&RootedTree>, Vec<(usize, usize)>) {
    let mut nodes: Vec<&RootedTree> = vec![root];
    let mut ranges: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < nodes.len() {
        let node = nodes[i];
        ranges.push((nodes.len(), node.children.len()));
        for child in &node.children {
            nodes.push(child);
        }
        i += 1;
    }
    (nodes, ranges)
}

/// Computes every node's canonical form bottom-up and reports whether each
/// node's children all share one form.
fn forms_and_symmetry(root: &RootedTree) -> (String, bool) {
    let (nodes, ranges) = flatten(root);
    let mut forms: Vec<Option<String>> = (0..nodes.len()).map(|_| None).collect();
    let mut symmetric = true;
    for i in (0..nodes.len()).rev() {
        let (start, len) = ranges[i];
        let mut kids: Vec<String> = forms[start..start + len]
            .iter_mut()
            .map(|slot| slot.take().expect("children encoded before parents"))
            .collect();
        if len > 1 && !kids.iter().all(|k| *k == kids[0]) {
            symmetric = false;
        }
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        for k in &kids {
            s.push_str(k);
        }
        s.push(')');
        forms[i] = Some(s);
    }
    (forms[0].take().expect("root form present"), symmetric)
}

/// AHU-style canonical encoding: a leaf is `()`, an internal node wraps
/// its children's encodings sorted ascending as strings. Two rooted trees
/// are isomorphic exactly when their encodings are equal.
pub fn canonical_form(t: &RootedTree) -> String {
    forms_and_symmetry(t).0
}

/// Whether the tree is absolutely symmetric: at every node all children
/// subtrees are identical. Rejects the zero-edge tree, whose base case is
/// a single edge.
pub fn is_asrt(t: &RootedTree) -> Result<bool> {
    if t.children.is_empty() {
        return Err(Error::Domain(
            "the single-node tree has no edges; the recognizer starts at one edge".into(),
        ));
    }
    Ok(forms_and_symmetry(t).1)
}

/// Reads the level sequence back off an absolutely symmetric tree by
/// following first children; errors if the tree is not an a.s.r.t.
pub fn recover_levels(t: &RootedTree) -> Result<AsrtTree> {
    if !is_asrt(t)? {
        return Err(Error::Domain(
            "tree has differing sibling subtrees; no level sequence exists".into(),
        ));
    }
    let mut levels = Vec::new();
    let mut node = t;
    while !node.children.is_empty() {
        levels.push(node.children.len() as u64);
        node = &node.children[0];
    }
    let tree = AsrtTree { levels };
    debug_assert_eq!(
        tree.edge_count() + 1u32,
        BigUint::from(t.node_count()),
        "level sequence accounts for every node"
    );
    Ok(tree)
}
