//! The extremal caterpillar `S(D)` and its halves `C_L^k(D)`, `C_R^k(D)`.
//!
//! For a reduced degree sequence `d_1 >= ... >= d_n`, `S(D)` places the two
//! largest degrees at the spine ends and then alternates inwards: the next
//! pair of positions takes the two smallest remaining degrees, the pair after
//! that the two largest remaining, and so on. Read left to right the spine is
//!
//! ```text
//! d_1, d_n, d_3, d_{n-2}, ...   ...   d_{n-3}, d_4, d_{n-1}, d_2
//! ```
//!
//! The left half is the first `k = ⌈n/2⌉` spine vertices, the right half the
//! rest; each is a complete branch rooted at the vertex adjacent to the other
//! half.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::{Caterpillar, ReducedDegreeSequence, RootedBranch, Tree};
use crate::{Error, Result};

/// One half of `S(D)`: spine degrees listed from the outermost vertex to the
/// root. Degrees are the final degrees in `S(D)`; inside the half the root has
/// one neighbour fewer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfBranch {
    pub spine_degrees: Vec<usize>,
    /// Degree of the root inside the half. For the lone half of a star (one
    /// spine vertex, empty partner) nothing is joined and this is the full degree.
    pub root_degree_in_branch: usize,
}

impl HalfBranch {
    fn joined(spine_degrees: Vec<usize>) -> Self {
        let root_degree_in_branch = spine_degrees.last().map_or(0, |d| d - 1);
        HalfBranch {
            spine_degrees,
            root_degree_in_branch,
        }
    }

    pub fn empty() -> Self {
        HalfBranch {
            spine_degrees: Vec::new(),
            root_degree_in_branch: 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.spine_degrees.is_empty()
    }

    /// The half as a rooted complete branch. `None` for the empty half.
    pub fn to_branch(&self) -> Option<RootedBranch> {
        let t = self.spine_degrees.len();
        if t == 0 {
            return None;
        }
        let mut edges: Vec<(usize, usize)> = (1..t).map(|p| (p - 1, p)).collect();
        let mut next = t;
        for (p, &degree) in self.spine_degrees.iter().enumerate() {
            let spine_neighbors = usize::from(p > 0) + usize::from(p + 1 < t);
            let own = if p + 1 == t { self.root_degree_in_branch } else { degree };
            for _ in 0..own - spine_neighbors {
                edges.push((p, next));
                next += 1;
            }
        }
        let tree = Tree::new(next, edges).expect("half branch layout is a tree");
        Some(RootedBranch::new(tree, t - 1).expect("root is a spine vertex"))
    }
}

/// 1-based indices into `D` of the last two entries (root, then its outer
/// neighbour) of `C_L^k(D)` and `C_R^k(D)` for `n >= 5`, by `i = n mod 4`.
fn terminal_indices(n: usize) -> ([usize; 2], [usize; 2]) {
    let k = n.div_ceil(2);
    match n % 4 {
        1 => ([k, k + 2], [k + 1, k - 1]),
        3 => ([k + 1, k - 1], [k, k + 2]),
        2 => ([k, k + 3], [k + 1, k + 2]),
        _ => ([k + 2, k - 1], [k + 1, k]),
    }
}

/// Alternating indices into `D`: odd steps `odd_start, odd_start + 2, ...`,
/// even steps counting down from the bottom, continued until the case-table
/// terminal pair is reached.
fn alternate_until(n: usize, odd_start: usize, terminal: [usize; 2]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for p in 1..=n {
        // Odd steps walk down from the top of D, even steps up from the bottom.
        let index = if p % 2 == 1 {
            odd_start + p - 1
        } else {
            n + 3 - p - odd_start
        };
        out.push(index);
        if out.len() >= 2 && out[out.len() - 1] == terminal[0] && out[out.len() - 2] == terminal[1] {
            return Ok(out);
        }
    }
    Err(Error::InvalidSequence(format!(
        "alternation over {n} entries never reaches the terminal pair {terminal:?}"
    )))
}

/// `C_L^k(D)` and `C_R^k(D)`, following the case split on the length `n`.
pub fn build_halves(r: &ReducedDegreeSequence) -> Result<(HalfBranch, HalfBranch)> {
    let d = r.degrees();
    let n = d.len();
    let at = |i: usize| d[i - 1];
    let pick = |indices: &[usize]| -> Vec<usize> { indices.iter().map(|&i| at(i)).collect() };
    Ok(match n {
        0 => return Err(Error::EmptySequence),
        1 => (
            HalfBranch {
                spine_degrees: alloc::vec![at(1)],
                root_degree_in_branch: at(1),
            },
            HalfBranch::empty(),
        ),
        2 => (HalfBranch::joined(pick(&[1])), HalfBranch::joined(pick(&[2]))),
        3 => (HalfBranch::joined(pick(&[1, 3])), HalfBranch::joined(pick(&[2]))),
        4 => (HalfBranch::joined(pick(&[1, 4])), HalfBranch::joined(pick(&[2, 3]))),
        _ => {
            let (left_end, right_end) = terminal_indices(n);
            let left = alternate_until(n, 1, left_end)?;
            let right = alternate_until(n, 2, right_end)?;
            debug_assert_eq!(left.len(), n.div_ceil(2));
            debug_assert_eq!(left.len() + right.len(), n);
            (HalfBranch::joined(pick(&left)), HalfBranch::joined(pick(&right)))
        }
    })
}

/// Joins the roots of two halves by an edge.
pub fn join_halves(left: &HalfBranch, right: &HalfBranch) -> Result<Caterpillar> {
    let mut spine = left.spine_degrees.clone();
    spine.extend(right.spine_degrees.iter().rev());
    Caterpillar::from_spine(&spine)
}

/// 1-based index into `D` of the degree placed at spine position `position`
/// (1-based) of `S(D)` for a sequence of length `n`.
pub fn spine_index(n: usize, position: usize) -> usize {
    let k = n.div_ceil(2);
    if position <= k {
        if position % 2 == 1 {
            position
        } else {
            n - position + 2
        }
    } else {
        let from_right = n - position + 1;
        if from_right % 2 == 1 {
            from_right + 1
        } else {
            n - from_right + 1
        }
    }
}

/// The extremal caterpillar `S(D)`.
pub fn build_s(r: &ReducedDegreeSequence) -> Result<Caterpillar> {
    let d = r.degrees();
    let n = d.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let spine: Vec<usize> = (1..=n).map(|p| d[spine_index(n, p) - 1]).collect();
    Caterpillar::from_spine(&spine)
}

/// Reduced sequence `(n - m + 1, 2, ..., 2)` with `m - 2` twos: the minimiser
/// among caterpillars of order `n` and diameter `m`.
pub fn diameter_extremal_sequence(n: usize, diameter: usize) -> Result<ReducedDegreeSequence> {
    if diameter < 3 || diameter + 1 > n {
        return Err(Error::InvalidDiameter {
            diameter,
            vertices: n,
        });
    }
    let mut degrees = alloc::vec![n - diameter + 1];
    degrees.extend(core::iter::repeat_n(2, diameter - 2));
    ReducedDegreeSequence::new(degrees)
}

/// Reduced sequence `(d, ..., d, r)` with `k = ⌊(n-2)/(d-1)⌋` copies of `d`:
/// the minimiser among caterpillars of order `n` with maximum degree at most `d`.
///
/// `r = n - k(d-1) - 1` when `d - 1` does not divide `n - 2`, and no extra
/// entry otherwise. In the first case `2 <= r <= d - 1`, so the sequence is
/// always a valid reduced sequence. When `d >= n - 1` this is the star on `n`
/// vertices.
pub fn maxdeg_extremal_sequence(n: usize, max_degree: usize) -> Result<ReducedDegreeSequence> {
    if max_degree < 2 || n < 3 {
        return Err(Error::InvalidSequence(format!(
            "need max degree >= 2 and at least 3 vertices, got d = {max_degree}, n = {n}"
        )));
    }
    let k = (n - 2) / (max_degree - 1);
    let mut degrees = alloc::vec![max_degree; k];
    if !(n - 2).is_multiple_of(max_degree - 1) {
        degrees.push(n - k * (max_degree - 1) - 1);
    }
    ReducedDegreeSequence::new(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[usize]) -> ReducedDegreeSequence {
        ReducedDegreeSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn small_case_halves() {
        let (l, r) = build_halves(&seq(&[5, 3])).unwrap();
        assert_eq!((l.spine_degrees, r.spine_degrees), (vec![5], vec![3]));
        assert_eq!((l.root_degree_in_branch, r.root_degree_in_branch), (4, 2));
        let (l, r) = build_halves(&seq(&[4, 3, 2])).unwrap();
        assert_eq!((l.spine_degrees.clone(), r.spine_degrees.clone()), (vec![4, 2], vec![3]));
        assert_eq!(l.root_degree_in_branch, 1);
        let (l, r) = build_halves(&seq(&[6])).unwrap();
        assert_eq!(l.spine_degrees, vec![6]);
        assert!(r.is_empty());
    }

    #[test]
    fn figure_sequence_halves() {
        let (l, r) = build_halves(&seq(&[5, 5, 5, 4, 4, 4, 4, 3, 3, 3])).unwrap();
        assert_eq!(l.spine_degrees, vec![5, 3, 5, 3, 4]);
        assert_eq!(r.spine_degrees, vec![5, 3, 4, 4, 4]);
    }

    #[test]
    fn s_examples() {
        assert_eq!(build_s(&seq(&[7])).unwrap().spine(), &[7]);
        assert_eq!(build_s(&seq(&[4, 3, 2])).unwrap().spine(), &[4, 2, 3]);
        assert_eq!(
            build_s(&seq(&[5, 5, 5, 4, 4, 4, 4, 3, 3, 3])).unwrap().spine(),
            &[5, 3, 5, 3, 4, 4, 4, 4, 3, 5]
        );
        assert_eq!(build_s(&seq(&[5, 4, 3, 2, 2])).unwrap().spine(), &[5, 2, 3, 2, 4]);
    }

    #[test]
    fn halves_join_to_s() {
        for n in 1..=13 {
            let d: Vec<usize> = (0..n).map(|i| 20 - i).collect();
            let r = seq(&d);
            let (l, rh) = build_halves(&r).unwrap();
            assert_eq!(join_halves(&l, &rh).unwrap(), build_s(&r).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn half_branches_as_trees() {
        let (l, r) = build_halves(&seq(&[4, 3, 2])).unwrap();
        let left = l.to_branch().unwrap();
        assert_eq!(left.vertex_count(), 5);
        assert_eq!(left.root_degree(), 1);
        let right = r.to_branch().unwrap();
        assert!(right.is_pseudo_leaf_branch());
        assert_eq!(right.root_degree(), 2);
        assert!(HalfBranch::empty().to_branch().is_none());
    }

    #[test]
    fn corollary_sequences() {
        assert_eq!(diameter_extremal_sequence(6, 4).unwrap().degrees(), &[3, 2, 2]);
        assert_eq!(diameter_extremal_sequence(5, 4).unwrap().degrees(), &[2, 2, 2]);
        assert!(diameter_extremal_sequence(5, 5).is_err());
        assert!(diameter_extremal_sequence(5, 2).is_err());
        assert_eq!(maxdeg_extremal_sequence(8, 3).unwrap().degrees(), &[3, 3, 3]);
        assert_eq!(maxdeg_extremal_sequence(8, 4).unwrap().degrees(), &[4, 4]);
        assert_eq!(maxdeg_extremal_sequence(9, 3).unwrap().degrees(), &[3, 3, 3, 2]);
        assert_eq!(maxdeg_extremal_sequence(7, 2).unwrap().degrees(), &[2; 5]);
        assert_eq!(maxdeg_extremal_sequence(5, 5).unwrap().degrees(), &[4]);
    }
}
