//! Trees, caterpillars, degree sequences and rooted complete branches.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A finite tree on the vertices `0..vertex_count`.
///
/// Construction checks that the edge list spans a connected acyclic graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidTree("a tree needs at least one vertex".into()));
        }
        if edges.len() + 1 != vertex_count {
            return Err(Error::InvalidTree(format!(
                "{} vertices need {} edges, got {}",
                vertex_count,
                vertex_count - 1,
                edges.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidTree(format!(
                    "edge {u}-{v} refers to a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let tree = Tree { edges, adjacency };
        // n - 1 edges plus connectivity rules out cycles and repeated edges.
        if tree.bfs_order(0).len() != vertex_count {
            return Err(Error::InvalidTree("graph is not connected".into()));
        }
        Ok(tree)
    }

    pub fn single_vertex() -> Self {
        Tree {
            edges: Vec::new(),
            adjacency: vec![Vec::new()],
        }
    }

    /// Path `P_n` labelled `0 - 1 - ... - n-1`.
    pub fn path(vertex_count: usize) -> Result<Self> {
        let edges = (1..vertex_count).map(|v| (v - 1, v)).collect();
        Tree::new(vertex_count, edges)
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Tree::new(leaves + 1, edges).expect("stars are trees")
    }

    /// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
    pub fn from_prufer(vertex_count: usize, code: &[usize]) -> Result<Self> {
        if vertex_count < 2 {
            return if code.is_empty() && vertex_count == 1 {
                Ok(Tree::single_vertex())
            } else {
                Err(Error::InvalidTree("Prüfer codes need at least two vertices".into()))
            };
        }
        if code.len() + 2 != vertex_count || code.iter().any(|&c| c >= vertex_count) {
            return Err(Error::InvalidTree("malformed Prüfer code".into()));
        }
        let mut degree = vec![1usize; vertex_count];
        for &c in code {
            degree[c] += 1;
        }
        let mut edges = Vec::with_capacity(vertex_count - 1);
        for &c in code {
            let leaf = (0..vertex_count)
                .find(|&v| degree[v] == 1)
                .expect("a Prüfer step always has a leaf");
            edges.push((leaf, c));
            degree[leaf] = 0;
            degree[c] -= 1;
        }
        let rest: Vec<usize> = (0..vertex_count).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        Tree::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Non-increasing list of vertex degrees.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    /// Vertices in breadth-first order from `root`.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count()];
        let mut order = Vec::with_capacity(self.vertex_count());
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Parent of every vertex when the tree hangs from `root` (`usize::MAX` at the root).
    pub fn parents(&self, root: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.vertex_count()];
        for v in self.bfs_order(root) {
            for &w in &self.adjacency[v] {
                if w != parent[v] {
                    parent[w] = v;
                }
            }
        }
        parent
    }

    fn distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        for v in self.bfs_order(source) {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                }
            }
        }
        dist
    }

    /// Longest shortest path, by double breadth-first search.
    pub fn diameter(&self) -> usize {
        let first = self.distances(0);
        let far = (0..self.vertex_count()).max_by_key(|&v| first[v]).unwrap_or(0);
        self.distances(far).into_iter().max().unwrap_or(0)
    }

    /// Removes the edge `u v` and returns the two sides, rooted at `u` and `v`.
    pub fn split_edge(&self, u: usize, v: usize) -> Result<(RootedBranch, RootedBranch)> {
        if u >= self.vertex_count() || !self.adjacency[u].contains(&v) {
            return Err(Error::InvalidTree(format!("{u}-{v} is not an edge")));
        }
        let side_u = self.side_of(u, v);
        let side_v: Vec<bool> = side_u.iter().map(|&b| !b).collect();
        Ok((self.extract(&side_u, u), self.extract(&side_v, v)))
    }

    /// Membership mask of the component containing `u` once edge `u v` is cut.
    fn side_of(&self, u: usize, v: usize) -> Vec<bool> {
        let mut side = vec![false; self.vertex_count()];
        side[u] = true;
        let mut stack = vec![u];
        while let Some(a) = stack.pop() {
            for &b in &self.adjacency[a] {
                if !side[b] && !(a == u && b == v) {
                    side[b] = true;
                    stack.push(b);
                }
            }
        }
        side
    }

    /// The induced subtree on `keep` (which must be connected), relabelled in
    /// increasing order of original index, rooted at `root`.
    pub(crate) fn extract(&self, keep: &[bool], root: usize) -> RootedBranch {
        let mut relabel = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for v in 0..self.vertex_count() {
            if keep[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (relabel[a], relabel[b]))
            .collect();
        let tree = Tree::new(next, edges).expect("kept vertex set is connected");
        RootedBranch {
            tree,
            root: relabel[root],
        }
    }

    /// Every complete branch: both rooted sides of every edge.
    pub fn complete_branches(&self) -> Vec<RootedBranch> {
        let mut out = Vec::with_capacity(2 * self.edge_count());
        for &(u, v) in &self.edges {
            let (a, b) = self.split_edge(u, v).expect("edge of the tree");
            out.push(a);
            out.push(b);
        }
        out
    }

    /// The tree with vertices permuted: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let edges = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Tree::new(self.vertex_count(), edges)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges)
            .finish()
    }
}

/// A caterpillar stored by the total degree of each spine vertex, left to right.
///
/// The spine is the set of non-leaf vertices, so for a spine of length two or
/// more both end vertices carry at least one leaf. A spine of length one is a
/// star.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Caterpillar {
    spine: Vec<usize>,
}

impl Caterpillar {
    pub fn from_spine(spine: &[usize]) -> Result<Self> {
        match spine {
            [] => return Err(Error::InvalidSpine("spine is empty".into())),
            [0] => return Err(Error::InvalidSpine("a star needs at least one leaf".into())),
            [_] => {}
            _ => {
                if let Some(i) = spine.iter().position(|&b| b < 2) {
                    return Err(Error::InvalidSpine(format!(
                        "spine vertex {} has degree {} but needs at least 2",
                        i + 1,
                        spine[i]
                    )));
                }
            }
        }
        Ok(Caterpillar {
            spine: spine.to_vec(),
        })
    }

    pub fn star(leaves: usize) -> Self {
        Caterpillar::from_spine(&[leaves]).expect("a star with at least one leaf")
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    pub fn spine_len(&self) -> usize {
        self.spine.len()
    }

    fn spine_neighbors(&self, i: usize) -> usize {
        let m = self.spine.len();
        usize::from(i > 0) + usize::from(i + 1 < m)
    }

    /// Number of leaves on spine vertex `i` (0-based).
    pub fn leaf_count(&self, i: usize) -> usize {
        self.spine[i] - self.spine_neighbors(i)
    }

    pub fn leaf_counts(&self) -> Vec<usize> {
        (0..self.spine.len()).map(|i| self.leaf_count(i)).collect()
    }

    /// `m + Σ b_i - 2(m - 1)`.
    pub fn vertex_count(&self) -> usize {
        let m = self.spine.len();
        m + self.spine.iter().sum::<usize>() - 2 * (m - 1)
    }

    /// Spine vertices get labels `0..m` left to right, then the leaves of each
    /// spine vertex in spine order.
    pub fn to_tree(&self) -> Tree {
        let m = self.spine.len();
        let mut edges: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
        let mut next = m;
        for i in 0..m {
            for _ in 0..self.leaf_count(i) {
                edges.push((i, next));
                next += 1;
            }
        }
        Tree::new(next, edges).expect("caterpillar layout is a tree")
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees = self.spine.clone();
        degrees.extend(core::iter::repeat_n(1, self.vertex_count() - self.spine.len()));
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn reversed(&self) -> Self {
        let mut spine = self.spine.clone();
        spine.reverse();
        Caterpillar { spine }
    }

    /// Lexicographically smaller of the spine word and its reversal.
    pub fn canonical_form(&self) -> Self {
        let reversed = self.reversed();
        if reversed.spine < self.spine {
            reversed
        } else {
            self.clone()
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.spine.iter().le(self.spine.iter().rev())
    }

    /// Two caterpillars are isomorphic iff their spine words agree up to reversal.
    pub fn is_isomorphic(&self, other: &Caterpillar) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// `s + 1` for a spine of length `s >= 2`; a star has diameter 2.
    pub fn diameter(&self) -> usize {
        match self.spine.as_slice() {
            [1] => 1,
            [_] => 2,
            spine => spine.len() + 1,
        }
    }

    /// Cuts the spine edge `u_i u_{i+1}` (1-based, `1 <= i < m`) and returns the
    /// left branch rooted at `u_i` and the right branch rooted at `u_{i+1}`.
    pub fn split_at_spine_edge(&self, i: usize) -> Result<(RootedBranch, RootedBranch)> {
        let m = self.spine.len();
        if i == 0 || i >= m {
            return Err(Error::IndexOutOfRange { index: i, len: m });
        }
        self.to_tree().split_edge(i - 1, i)
    }
}

impl fmt::Display for Caterpillar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.spine)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Non-increasing list of vertex degrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts the entries into non-increasing order. Entries must be positive.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidSequence("degrees must be positive".into()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// A sequence of positive integers is the degree sequence of some tree
    /// iff it has at least two entries summing to `2(n - 1)`.
    pub fn is_tree_realizable(&self) -> bool {
        self.0.len() >= 2 && self.sum() == 2 * (self.0.len() - 1)
    }

    /// Drops every 1.
    pub fn reduce(&self) -> Result<ReducedDegreeSequence> {
        let degrees: Vec<usize> = self.0.iter().copied().filter(|&d| d >= 2).collect();
        if degrees.is_empty() {
            return Err(Error::EmptyResult);
        }
        Ok(ReducedDegreeSequence(degrees))
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// Degree sequence with the leaves removed: non-increasing, every entry at least 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ReducedDegreeSequence(Vec<usize>);

impl ReducedDegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidSequence(format!(
                "reduced degree sequences only contain entries >= 2, found {d}"
            )));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ReducedDegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of leaves of any tree with this reduced sequence: `Σ r_i - 2(m - 1)`.
    pub fn leaf_count(&self) -> usize {
        self.0.iter().sum::<usize>() - 2 * (self.0.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.0.len() + self.leaf_count()
    }

    /// Appends the leaves back as 1-entries.
    pub fn expand(&self) -> DegreeSequence {
        let mut degrees = self.0.clone();
        degrees.extend(core::iter::repeat_n(1, self.leaf_count()));
        DegreeSequence(degrees)
    }
}

impl fmt::Display for ReducedDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// A complete branch `B` of a tree, viewed as a rooted tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootedBranch {
    pub(crate) tree: Tree,
    pub(crate) root: usize,
}

impl RootedBranch {
    pub fn new(tree: Tree, root: usize) -> Result<Self> {
        if root >= tree.vertex_count() {
            return Err(Error::InvalidTree(format!("root {root} is not a vertex")));
        }
        Ok(RootedBranch { tree, root })
    }

    pub fn single_vertex() -> Self {
        RootedBranch {
            tree: Tree::single_vertex(),
            root: 0,
        }
    }

    /// Pseudo-leaf branch `[d]`: a root with `d - 1` leaves.
    pub fn pseudo_leaf(vertices: usize) -> Self {
        assert!(vertices >= 1, "a branch has at least one vertex");
        RootedBranch {
            tree: Tree::star(vertices - 1),
            root: 0,
        }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.tree.vertex_count()
    }

    /// `rd(B)`: the degree of the root inside the branch.
    pub fn root_degree(&self) -> usize {
        self.tree.degree(self.root)
    }

    pub fn is_leaf(&self) -> bool {
        self.tree.vertex_count() == 1
    }

    /// Root with at least one child, all of whose children are leaves.
    pub fn is_pseudo_leaf_branch(&self) -> bool {
        self.root_degree() >= 1 && self.tree.neighbors(self.root).iter().all(|&c| self.tree.degree(c) == 1)
    }

    /// Distance from the root to the farthest vertex.
    pub fn height(&self) -> usize {
        self.tree.distances(self.root).into_iter().max().unwrap_or(0)
    }

    /// The components of `B - r(B)`, each rooted at its neighbour of `r(B)`.
    pub fn children(&self) -> Vec<RootedBranch> {
        self.tree
            .neighbors(self.root)
            .iter()
            .map(|&c| {
                let side = self.tree.side_of(c, self.root);
                self.tree.extract(&side, c)
            })
            .collect()
    }

    /// The forest `B - r(B)` as a keep-mask over the branch's vertices.
    pub(crate) fn without_root_mask(&self) -> Vec<bool> {
        let mut keep = vec![true; self.tree.vertex_count()];
        keep[self.root] = false;
        keep
    }

    /// Parenthesis encoding that is equal for two branches iff they are
    /// isomorphic by a root-preserving map.
    pub fn canonical_code(&self) -> Vec<u8> {
        let order = self.tree.bfs_order(self.root);
        let parent = self.tree.parents(self.root);
        let mut codes: Vec<Vec<u8>> = vec![Vec::new(); self.tree.vertex_count()];
        for &v in order.iter().rev() {
            let mut children: Vec<Vec<u8>> = self
                .tree
                .neighbors(v)
                .iter()
                .filter(|&&w| w != parent[v])
                .map(|&w| core::mem::take(&mut codes[w]))
                .collect();
            children.sort_unstable();
            let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
            code.push(b'(');
            for c in children {
                code.extend(c);
            }
            code.push(b')');
            codes[v] = code;
        }
        core::mem::take(&mut codes[self.root])
    }

    pub fn is_root_isomorphic(&self, other: &RootedBranch) -> bool {
        self.vertex_count() == other.vertex_count() && self.canonical_code() == other.canonical_code()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_edges(t: &Tree) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = t.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        e.sort_unstable();
        e
    }

    #[test]
    fn spine_examples() {
        let c = Caterpillar::from_spine(&[4, 2, 3]).unwrap();
        assert_eq!(c.leaf_counts(), vec![3, 0, 2]);
        assert_eq!(c.vertex_count(), 8);
        let star = Caterpillar::from_spine(&[5]).unwrap();
        assert_eq!(star.vertex_count(), 6);
        let p4 = Caterpillar::from_spine(&[2, 2]).unwrap();
        assert_eq!(p4.leaf_counts(), vec![1, 1]);
        assert_eq!(p4.to_tree().degree_sequence().degrees(), &[2, 2, 1, 1]);
    }

    #[test]
    fn spine_rejections() {
        assert!(matches!(Caterpillar::from_spine(&[]), Err(Error::InvalidSpine(_))));
        assert!(matches!(Caterpillar::from_spine(&[0]), Err(Error::InvalidSpine(_))));
        assert!(matches!(Caterpillar::from_spine(&[1, 3]), Err(Error::InvalidSpine(_))));
        assert!(matches!(Caterpillar::from_spine(&[3, 1, 3]), Err(Error::InvalidSpine(_))));
    }

    #[test]
    fn tree_layout() {
        let star = Caterpillar::from_spine(&[3]).unwrap().to_tree();
        assert_eq!(sorted_edges(&star), vec![(0, 1), (0, 2), (0, 3)]);
        let p4 = Caterpillar::from_spine(&[2, 2]).unwrap().to_tree();
        assert_eq!(sorted_edges(&p4), vec![(0, 1), (0, 2), (1, 3)]);
        let t = Caterpillar::from_spine(&[4, 2, 3]).unwrap().to_tree();
        assert_eq!(t.vertex_count(), 8);
        assert_eq!(t.degree_sequence().degrees(), &[4, 3, 2, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn tree_validation() {
        assert!(Tree::new(3, vec![(0, 1), (1, 2)]).is_ok());
        assert!(Tree::new(3, vec![(0, 1)]).is_err());
        assert!(Tree::new(4, vec![(0, 1), (1, 0), (2, 3)]).is_err());
        assert!(Tree::new(3, vec![(0, 0), (1, 2)]).is_err());
        assert!(Tree::new(3, vec![(0, 1), (1, 5)]).is_err());
        assert!(Tree::new(0, vec![]).is_err());
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(Tree::path(4).unwrap().degree_sequence().degrees(), &[2, 2, 1, 1]);
        assert_eq!(Tree::star(4).degree_sequence().degrees(), &[4, 1, 1, 1, 1]);
    }

    #[test]
    fn reduce_and_expand() {
        let d = DegreeSequence::new(vec![4, 3, 2, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(d.reduce().unwrap().degrees(), &[4, 3, 2]);
        let p4 = DegreeSequence::new(vec![2, 2, 1, 1]).unwrap();
        assert_eq!(p4.reduce().unwrap().degrees(), &[2, 2]);
        let p2 = DegreeSequence::new(vec![1, 1]).unwrap();
        assert_eq!(p2.reduce(), Err(Error::EmptyResult));

        let r = ReducedDegreeSequence::new(vec![4, 3, 2]).unwrap();
        assert_eq!(r.expand().degrees(), &[4, 3, 2, 1, 1, 1, 1, 1]);
        let star = ReducedDegreeSequence::new(vec![5]).unwrap();
        assert_eq!(star.expand().degrees(), &[5, 1, 1, 1, 1, 1]);
        let r = ReducedDegreeSequence::new(vec![2, 2]).unwrap();
        assert_eq!(r.expand().degrees(), &[2, 2, 1, 1]);
    }

    #[test]
    fn canonical_forms() {
        let c = |s: &[usize]| Caterpillar::from_spine(s).unwrap();
        assert_eq!(c(&[3, 2, 4]).canonical_form(), c(&[3, 2, 4]));
        assert_eq!(c(&[4, 2, 3]).canonical_form(), c(&[3, 2, 4]));
        assert_eq!(c(&[3, 2, 3]).canonical_form(), c(&[3, 2, 3]));
        assert!(c(&[4, 2, 3]).is_isomorphic(&c(&[3, 2, 4])));
    }

    #[test]
    fn spine_splits() {
        let c = Caterpillar::from_spine(&[4, 2, 3]).unwrap();
        let (left, right) = c.split_at_spine_edge(1).unwrap();
        assert_eq!(left.vertex_count(), 4);
        assert!(left.is_pseudo_leaf_branch());
        assert_eq!(left.root_degree(), 3);
        assert_eq!(right.vertex_count(), 4);
        assert_eq!(right.root_degree(), 1);

        let (left, right) = c.split_at_spine_edge(2).unwrap();
        assert_eq!((left.vertex_count(), right.vertex_count()), (5, 3));

        let (a, b) = Caterpillar::from_spine(&[2, 2]).unwrap().split_at_spine_edge(1).unwrap();
        assert_eq!((a.vertex_count(), b.vertex_count()), (2, 2));
        assert_eq!(
            c.split_at_spine_edge(3),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        );
        assert!(c.split_at_spine_edge(0).is_err());
    }

    #[test]
    fn root_isomorphism() {
        // A path on three vertices rooted at an end versus at the middle.
        let p3 = Tree::path(3).unwrap();
        let end = RootedBranch::new(p3.clone(), 0).unwrap();
        let mid = RootedBranch::new(p3, 1).unwrap();
        assert!(!end.is_root_isomorphic(&mid));
        assert!(mid.is_root_isomorphic(&RootedBranch::pseudo_leaf(3)));
        assert_eq!(end.height(), 2);
        assert_eq!(mid.height(), 1);
    }

    #[test]
    fn prufer_decoding() {
        let t = Tree::from_prufer(5, &[3, 3, 3]).unwrap();
        assert_eq!(t.degree_sequence().degrees(), &[4, 1, 1, 1, 1]);
        let t = Tree::from_prufer(6, &[0, 1, 2, 3]).unwrap();
        assert_eq!(t.diameter(), 5);
    }
}
