//! Rooted trees: values, text formats, and canonical enumeration.
//!
//! Nodes are numbered `1..=n` with node 1 the root and every non-root node
//! pointing at a parent with a smaller index. Two text forms are understood:
//! a parent list `"n; p2 p3 ... pn"` and a level sequence `"1 2 3 2 ..."`
//! (root-first depth-first order, root at level 1).
//!
//! Isomorphism always means rooted-tree isomorphism with unordered children.
//! The canonical form of a tree is its maximal level sequence, obtained by
//! sorting children by the (recursively canonical) encodings of their
//! subtrees. Enumeration of all rooted trees on `n` nodes walks canonical
//! level sequences from the path down to the star with the classic
//! constant-amortized-time successor step, so every isomorphism class shows
//! up exactly once, in a fixed order.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A rooted tree on `n` nodes in parent-array form.
///
/// Immutable once built; cheap to clone and safe to share across workers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tree {
    /// `parents[i]` is the 1-based parent of node `i + 2`.
    parents: Vec<u32>,
}

impl Tree {
    /// Builds a tree from 1-based parent indices for nodes `2..=n`.
    pub fn from_parents(n: usize, parents: &[usize]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::Domain("a tree has at least one node"));
        }
        if parents.len() != n - 1 {
            return Err(Error::NodeCount {
                expected: n,
                got: parents.len() + 1,
            });
        }
        for (i, &p) in parents.iter().enumerate() {
            let child = i + 2;
            if p == 0 || p >= child {
                return Err(Error::InvalidParent { child, parent: p });
            }
        }
        Ok(Tree {
            parents: parents.iter().map(|&p| p as u32).collect(),
        })
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Tree> {
        if n < 2 {
            return Err(Error::Domain("a path needs at least 2 nodes"));
        }
        let parents: Vec<usize> = (1..n).collect();
        Tree::from_parents(n, &parents)
    }

    /// The star: root 1 with `n - 1` leaf children.
    pub fn star(n: usize) -> Result<Tree> {
        if n < 2 {
            return Err(Error::Domain("a star needs at least 2 nodes"));
        }
        let parents = vec![1usize; n - 1];
        Tree::from_parents(n, &parents)
    }

    /// Node count.
    pub fn n(&self) -> usize {
        self.parents.len() + 1
    }

    /// Parent of node `j` (1-based, `j >= 2`).
    pub fn parent(&self, j: usize) -> usize {
        debug_assert!(j >= 2 && j <= self.n());
        self.parents[j - 2] as usize
    }

    /// Children lists indexed by node (entry 0 unused).
    pub fn children(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut kids = vec![Vec::new(); n + 1];
        for j in 2..=n {
            kids[self.parent(j)].push(j);
        }
        kids
    }

    /// Depth of every node (root at depth 0), indexed by node (entry 0 unused).
    pub fn depths(&self) -> Vec<u32> {
        let n = self.n();
        let mut depth = vec![0u32; n + 1];
        for j in 2..=n {
            depth[j] = depth[self.parent(j)] + 1;
        }
        depth
    }

    /// Nodes without children, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        let n = self.n();
        let mut has_child = vec![false; n + 1];
        for j in 2..=n {
            has_child[self.parent(j)] = true;
        }
        (1..=n).filter(|&v| !has_child[v]).collect()
    }

    /// True iff every non-leaf node has exactly two children.
    pub fn is_binary(&self) -> bool {
        self.children()
            .iter()
            .skip(1)
            .all(|c| c.is_empty() || c.len() == 2)
    }

    /// True iff the tree is binary and every leaf sits at odd depth.
    pub fn is_completely_odd(&self) -> Result<bool> {
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        let depth = self.depths();
        Ok(self.leaves().iter().all(|&v| depth[v] % 2 == 1))
    }

    /// Parses either a parent list (`"5; 1 1 2 2"`) or a level sequence
    /// (`"1 2 3 3 2"`). Round-trips with [`Tree::serialize`].
    pub fn parse(text: &str) -> Result<Tree> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty input".to_string()));
        }
        if let Some((head, rest)) = text.split_once(';') {
            let n: usize = head
                .trim()
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad node count {head:?}")))?;
            let mut parents = Vec::new();
            for tok in rest.split_whitespace() {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad parent index {tok:?}")))?;
                parents.push(p);
            }
            Tree::from_parents(n, &parents)
        } else {
            let mut levels = Vec::new();
            for tok in text.split_whitespace() {
                let l: u32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad level {tok:?}")))?;
                levels.push(l);
            }
            Tree::from_level_sequence(&levels)
        }
    }

    /// Builds a tree from a root-first depth-first level sequence.
    ///
    /// The resulting node numbering is the depth-first preorder of the
    /// sequence itself, which also satisfies the parent-index invariant.
    pub fn from_level_sequence(levels: &[u32]) -> Result<Tree> {
        if levels.is_empty() || levels[0] != 1 {
            return Err(Error::Parse("level sequence must start with 1".to_string()));
        }
        let mut parents = Vec::with_capacity(levels.len().saturating_sub(1));
        for i in 1..levels.len() {
            let l = levels[i];
            if l < 2 || l > levels[i - 1] + 1 {
                return Err(Error::Parse(alloc::format!(
                    "level {l} cannot follow level {} at position {i}",
                    levels[i - 1]
                )));
            }
            // Parent is the nearest earlier node one level up.
            let p = (0..i).rev().find(|&j| levels[j] == l - 1).unwrap();
            parents.push(p + 1);
        }
        Tree::from_parents(levels.len(), &parents)
    }

    /// Parent-list text form, `"n; p2 p3 ... pn"`.
    pub fn serialize(&self) -> String {
        let mut out = alloc::format!("{};", self.n());
        for &p in &self.parents {
            out.push(' ');
            out.push_str(&p.to_string());
        }
        out
    }

    /// Canonical level sequence: root-first depth-first order with the
    /// children of every node sorted by descending subtree encoding.
    pub fn canonical_level_sequence(&self) -> Vec<u32> {
        let kids = self.children();
        // Bottom-up so each node can sort its children by their encodings.
        let n = self.n();
        let mut enc: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for v in (1..=n).rev() {
            let mut parts: Vec<Vec<u32>> = kids[v].iter().map(|&c| core::mem::take(&mut enc[c])).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let mut e = Vec::with_capacity(1 + parts.iter().map(Vec::len).sum::<usize>());
            e.push(1);
            for part in parts {
                e.extend(part.iter().map(|&l| l + 1));
            }
            enc[v] = e;
        }
        core::mem::take(&mut enc[1])
    }

    /// The canonical representative of this tree's isomorphism class,
    /// renumbered in breadth-first order from the root.
    pub fn canonicalized(&self) -> Tree {
        let seq = self.canonical_level_sequence();
        let dfs = Tree::from_level_sequence(&seq).expect("canonical sequence is valid");
        dfs.bfs_renumbered()
    }

    /// Parent-list form of [`Tree::canonicalized`]; equal strings mean
    /// isomorphic trees.
    pub fn canonical_string(&self) -> String {
        self.canonicalized().serialize()
    }

    /// Renumbers nodes in breadth-first order, visiting the children of each
    /// node by descending subtree encoding so the result is deterministic.
    fn bfs_renumbered(&self) -> Tree {
        let n = self.n();
        let kids = self.children();
        let mut enc: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for v in (1..=n).rev() {
            let mut parts: Vec<Vec<u32>> = kids[v].iter().map(|&c| enc[c].clone()).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let mut e = vec![1];
            for part in parts {
                e.extend(part.iter().map(|&l| l + 1));
            }
            enc[v] = e;
        }
        let mut order: Vec<Vec<usize>> = kids
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable_by(|&a, &b| enc[b].cmp(&enc[a]));
                c
            })
            .collect();
        let mut new_index = vec![0usize; n + 1];
        let mut queue = VecDeque::from([1usize]);
        let mut next = 0usize;
        let mut parents = vec![0usize; n + 1];
        while let Some(v) = queue.pop_front() {
            next += 1;
            new_index[v] = next;
            for c in core::mem::take(&mut order[v]) {
                parents[c] = v;
                queue.push_back(c);
            }
        }
        let mut new_parents = vec![0usize; n];
        for j in 2..=n {
            new_parents[new_index[j] - 1] = new_index[parents[j]];
        }
        Tree::from_parents(n, &new_parents[1..]).expect("BFS numbering keeps parents smaller")
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Iterator over one canonical representative per isomorphism class of
/// rooted trees on `n` nodes, from the path down to the star.
pub struct RootedTrees {
    levels: Vec<u32>,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

/// Enumerates all rooted trees on `n` nodes (`n >= 1`), one canonical
/// representative per isomorphism class, in a fixed deterministic order.
pub fn enumerate_rooted_trees(n: usize) -> RootedTrees {
    RootedTrees {
        levels: (1..=n as u32).collect(),
        state: if n == 0 { IterState::Done } else { IterState::Fresh },
    }
}

impl RootedTrees {
    /// Advances to the next canonical level sequence; `false` when exhausted.
    fn successor(&mut self) -> bool {
        let levels = &mut self.levels;
        let Some(p) = (0..levels.len()).rev().find(|&i| levels[i] > 2) else {
            return false;
        };
        let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).unwrap();
        for i in p..levels.len() {
            levels[i] = levels[i - (p - q)];
        }
        true
    }
}

impl Iterator for RootedTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => self.state = IterState::Running,
            IterState::Running => {
                if !self.successor() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        let dfs = Tree::from_level_sequence(&self.levels).expect("successor keeps sequences valid");
        Some(dfs.bfs_renumbered())
    }
}

/// Enumerates rooted trees on `n` nodes in which every non-leaf has exactly
/// two children, one canonical representative per isomorphism class.
///
/// `n` must be odd: a tree with `l` leaves and every internal node of
/// out-degree 2 has `2l - 1` nodes.
pub fn enumerate_binary_trees(n: usize) -> Result<impl Iterator<Item = Tree>> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::EvenNodeCount(n));
    }
    let leaves = (n + 1) / 2;
    let mut memo: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
    let encodings = binary_encodings(leaves, &mut memo).clone();
    Ok(encodings.into_iter().map(|seq| {
        Tree::from_level_sequence(&seq)
            .expect("binary encodings are valid")
            .bfs_renumbered()
    }))
}

/// Canonical level sequences of all binary trees with the given leaf count,
/// sorted in descending order.
fn binary_encodings<'a>(
    leaves: usize,
    memo: &'a mut BTreeMap<usize, Vec<Vec<u32>>>,
) -> &'a Vec<Vec<u32>> {
    if !memo.contains_key(&leaves) {
        let mut out: Vec<Vec<u32>> = Vec::new();
        if leaves == 1 {
            out.push(vec![1]);
        } else {
            // A deeper spine can outrank a larger subtree lexicographically,
            // so the first child is not always the one with more leaves;
            // every split is visited and the encoding filter below keeps
            // exactly one orientation of each unordered pair.
            for left in 1..leaves {
                let right = leaves - left;
                let lefts = binary_encodings(left, memo).clone();
                let rights = binary_encodings(right, memo).clone();
                for a in &lefts {
                    for b in &rights {
                        if a < b {
                            continue;
                        }
                        let mut seq = Vec::with_capacity(1 + a.len() + b.len());
                        seq.push(1);
                        seq.extend(a.iter().map(|&l| l + 1));
                        seq.extend(b.iter().map(|&l| l + 1));
                        out.push(seq);
                    }
                }
            }
            out.sort_unstable_by(|x, y| y.cmp(x));
        }
        memo.insert(leaves, out);
    }
    &memo[&leaves]
}
