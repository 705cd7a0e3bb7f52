//! Local moves on caterpillars: moving one leaf between spine vertices, and
//! re-hanging the part of the spine beyond a vertex onto an earlier one.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::{Caterpillar, Tree};
use crate::{Error, Result};

/// Moves one leaf from spine vertex `from` to spine vertex `to` (1-based).
///
/// An end vertex of the spine left with degree 1 becomes a leaf of its
/// neighbour, so the spine shrinks by one.
pub fn move_leaf(c: &Caterpillar, from: usize, to: usize) -> Result<Caterpillar> {
    let m = c.spine_len();
    for p in [from, to] {
        if p == 0 || p > m {
            return Err(Error::IndexOutOfRange { index: p, len: m });
        }
    }
    if from == to {
        return Err(Error::InvalidSpine("a leaf must move between distinct spine vertices".into()));
    }
    if c.leaf_count(from - 1) == 0 {
        return Err(Error::InvalidSpine(format!("spine vertex {from} has no leaf to move")));
    }
    let mut spine = c.spine().to_vec();
    spine[to - 1] += 1;
    spine[from - 1] -= 1;
    if spine[from - 1] == 1 {
        // Only an end vertex with a single leaf can drop to degree 1.
        spine.remove(from - 1);
    }
    Caterpillar::from_spine(&spine)
}

/// Detaches the complete branch `B'` to the right of `w = u_j` and reattaches
/// its root to `v = u_i` (1-based, `2 <= i < j <= m - 1`).
///
/// The result is a tree but in general not a caterpillar.
pub fn move_branch(c: &Caterpillar, i: usize, j: usize) -> Result<Tree> {
    let m = c.spine_len();
    if i < 2 || j <= i || j + 1 > m {
        return Err(Error::InvalidDecomposition(format!(
            "spine positions ({i}, {j}) on a spine of length {m}; need 2 <= i < j <= m - 1"
        )));
    }
    let t = c.to_tree();
    // Spine vertex u_s has label s - 1.
    let (w, root) = (j - 1, j);
    let edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .map(|&(a, b)| if (a, b) == (w, root) || (a, b) == (root, w) { (i - 1, root) } else { (a, b) })
        .collect();
    Tree::new(t.vertex_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{caterpillar_matching_poly, matching_poly};

    #[test]
    fn leaf_moves() {
        let c = Caterpillar::from_spine(&[3, 3, 3]).unwrap();
        assert_eq!(move_leaf(&c, 3, 1).unwrap().spine(), &[4, 3, 2]);
        assert_eq!(move_leaf(&c, 2, 1).unwrap().spine(), &[4, 2, 3]);
        let c = Caterpillar::from_spine(&[3, 2, 2]).unwrap();
        assert_eq!(move_leaf(&c, 3, 1).unwrap().spine(), &[4, 2]);
        assert!(move_leaf(&c, 2, 1).is_err());
        assert!(move_leaf(&c, 4, 1).is_err());
    }

    #[test]
    fn branch_move_preserves_order() {
        let c = Caterpillar::from_spine(&[3, 2, 2, 3]).unwrap();
        let g = move_branch(&c, 2, 3).unwrap();
        assert_eq!(g.vertex_count(), c.vertex_count());
        assert_eq!(g.degree(1), 3);
        assert!(matching_poly(&g).sum() < caterpillar_matching_poly(&c).sum());
        assert!(move_branch(&c, 1, 3).is_err());
    }
}
