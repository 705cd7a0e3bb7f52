//! Matching polynomial engine: recurrences, brute-force oracle, `M₀`, `τ`
//! and the caterpillar decomposition identity.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::graph::{Caterpillar, RootedBranch, Tree};
use crate::poly::MatchingPolynomial;
use crate::{Error, Rational, Result};

/// Edge-count limit for [`matching_poly_bruteforce`].
pub const BRUTE_FORCE_MAX_EDGES: usize = 25;

/// `M(T, x)` by the edge recurrence `M(G) = M(G - uv) + x M(G - {u, v})`.
///
/// The tree hangs from vertex 0 and every vertex absorbs its child subtrees
/// one edge at a time, tracking the pair `(M, M₀)` of all matchings and
/// matchings avoiding the current root. Cutting the edge to a child splits the
/// graph into two components, whose polynomials multiply.
pub fn matching_poly(t: &Tree) -> MatchingPolynomial {
    let keep = vec![true; t.vertex_count()];
    forest_matching_poly(t, &keep)
}

/// `M` of the subforest of `t` induced by `keep`: the product over components.
pub(crate) fn forest_matching_poly(t: &Tree, keep: &[bool]) -> MatchingPolynomial {
    let n = t.vertex_count();
    let mut state: Vec<Option<(MatchingPolynomial, MatchingPolynomial)>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut total = MatchingPolynomial::one();
    for root in 0..n {
        if !keep[root] || visited[root] {
            continue;
        }
        let (order, parent) = component_order(t, keep, root, &mut visited);
        for &v in order.iter().rev() {
            let mut all = MatchingPolynomial::one();
            let mut avoiding = MatchingPolynomial::one();
            for &c in t.neighbors(v) {
                if !keep[c] || c == parent[v] {
                    continue;
                }
                let (child_all, child_avoiding) = state[c].take().expect("children precede parents");
                all = &(&all * &child_all) + &(&avoiding * &child_avoiding).shift();
                avoiding = &avoiding * &child_all;
            }
            state[v] = Some((all, avoiding));
        }
        let (component, _) = state[root].take().expect("root processed last");
        total = &total * &component;
    }
    total
}

/// BFS order of the component of `root` inside `keep`, with parent pointers.
fn component_order(t: &Tree, keep: &[bool], root: usize, visited: &mut [bool]) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; t.vertex_count()];
    let mut order = vec![root];
    visited[root] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in t.neighbors(v) {
            if keep[w] && !visited[w] {
                visited[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    (order, parent)
}

/// `M(T, x)` by the vertex recurrence
/// `M(G) = M(G - v) + x Σ_{w ∈ N(v)} M(G - {v, w})` applied at every root,
/// with the component product rule for the pieces it leaves behind.
pub fn matching_poly_vertex_recurrence(t: &Tree) -> MatchingPolynomial {
    let n = t.vertex_count();
    let order = t.bfs_order(0);
    let parent = t.parents(0);
    // (M(T_v), M(T_v - v)) per vertex.
    let mut state: Vec<Option<(MatchingPolynomial, MatchingPolynomial)>> = vec![None; n];
    for &v in order.iter().rev() {
        let children: Vec<(MatchingPolynomial, MatchingPolynomial)> = t
            .neighbors(v)
            .iter()
            .filter(|&&c| c != parent[v])
            .map(|&c| state[c].take().expect("children precede parents"))
            .collect();
        let without_v = children.iter().fold(MatchingPolynomial::one(), |acc, (m, _)| &acc * m);
        let mut covering = MatchingPolynomial::zero();
        for (i, (_, child_without_root)) in children.iter().enumerate() {
            let others = children
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(child_without_root.clone(), |acc, (_, (m, _))| &acc * m);
            covering = &covering + &others;
        }
        state[v] = Some((&without_v + &covering.shift(), without_v));
    }
    state[0].take().expect("root processed").0
}

/// `M(C, x)` for a caterpillar by a left-to-right pass over the spine, tracking
/// whether the current spine vertex is still free or already matched.
pub fn caterpillar_matching_poly(c: &Caterpillar) -> MatchingPolynomial {
    let mut free = MatchingPolynomial::zero();
    let mut matched = MatchingPolynomial::zero();
    for (i, _) in c.spine().iter().enumerate() {
        let leaves = c.leaf_count(i);
        if i == 0 {
            free = MatchingPolynomial::one();
            matched = MatchingPolynomial::one().shift().scale(leaves);
        } else {
            let all = &free + &matched;
            // u_i matched to one of its leaves, or to the still-free u_{i-1}.
            let next_matched = &all.shift().scale(leaves) + &free.shift();
            free = all;
            matched = next_matched;
        }
    }
    &free + &matched
}

/// Ground truth by enumerating every edge subset and keeping the matchings.
pub fn matching_poly_bruteforce(t: &Tree) -> Result<MatchingPolynomial> {
    let edges = t.edges();
    if edges.len() > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "brute force enumerates 2^{} edge subsets; the limit is {} edges",
            edges.len(),
            BRUTE_FORCE_MAX_EDGES
        )));
    }
    let n = t.vertex_count();
    let mut counts = vec![0u64; n / 2 + 1];
    let mut covered = vec![false; n];
    'subsets: for mask in 0u32..(1u32 << edges.len()) {
        covered.iter_mut().for_each(|c| *c = false);
        for (e, &(u, v)) in edges.iter().enumerate() {
            if mask & (1 << e) != 0 {
                if covered[u] || covered[v] {
                    continue 'subsets;
                }
                covered[u] = true;
                covered[v] = true;
            }
        }
        counts[mask.count_ones() as usize] += 1;
    }
    Ok(MatchingPolynomial::from_u64(&counts))
}

/// Hosoya index `Z(T) = M(T, 1)`.
pub fn hosoya(t: &Tree) -> BigUint {
    matching_poly(t).sum()
}

/// `M(B, x)` of a rooted branch.
pub fn branch_matching_poly(b: &RootedBranch) -> MatchingPolynomial {
    matching_poly(b.tree())
}

/// `M₀(B, x)`: matchings of `B` that leave the root uncovered, i.e. `M(B - r(B), x)`.
pub fn m0_poly(b: &RootedBranch) -> MatchingPolynomial {
    forest_matching_poly(b.tree(), &b.without_root_mask())
}

/// `τ(B, x) = M₀(B, x) / M(B, x)`, exactly.
pub fn tau(b: &RootedBranch, x: &Rational) -> Rational {
    m0_poly(b).eval(x) / branch_matching_poly(b).eval(x)
}

/// `τ(B, x) = 1 / (1 + x Σ τ(B_i, x))` over the root subtrees `B_i`.
pub fn tau_recursive(b: &RootedBranch, x: &Rational) -> Rational {
    let t = b.tree();
    let order = t.bfs_order(b.root());
    let parent = t.parents(b.root());
    let mut value = vec![Rational::zero(); t.vertex_count()];
    for &v in order.iter().rev() {
        let children: Rational = t
            .neighbors(v)
            .iter()
            .filter(|&&c| c != parent[v])
            .map(|&c| value[c].clone())
            .sum();
        value[v] = (Rational::one() + x * children).recip();
    }
    value[b.root()].clone()
}

/// The pieces of a caterpillar `G` cut around two spine vertices `v = u_i`
/// and `w = u_j`: outer complete branches `B` (left of `v`) and `B'` (right of
/// `w`), the middle piece `H` between `v` and `w` without the leaves of `v`
/// and `w`, and the leaf counts `d` of `v` and `d'` of `w`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub d: usize,
    pub d_prime: usize,
    pub m_b: MatchingPolynomial,
    pub m0_b: MatchingPolynomial,
    pub m_b_prime: MatchingPolynomial,
    pub m0_b_prime: MatchingPolynomial,
    pub m_h: MatchingPolynomial,
    pub m_h_minus_v: MatchingPolynomial,
    pub m_h_minus_w: MatchingPolynomial,
    pub m_h_minus_vw: MatchingPolynomial,
}

impl Decomposition {
    /// Splits `c` at spine positions `i < j` (1-based). `B`, `B'` and `H` must
    /// all be non-empty, so `2 <= i < j <= m - 1`.
    pub fn new(c: &Caterpillar, i: usize, j: usize) -> Result<Self> {
        let m = c.spine_len();
        if i < 2 || j <= i || j + 1 > m {
            return Err(Error::InvalidDecomposition(format!(
                "spine positions ({i}, {j}) on a spine of length {m} leave an empty piece; need 2 <= i < j <= m - 1"
            )));
        }
        let t = c.to_tree();
        let n = t.vertex_count();
        // Spine vertex u_s has label s - 1; its leaves are the neighbours labelled >= m.
        let spine_position = |v: usize| -> usize {
            if v < m {
                v + 1
            } else {
                t.neighbors(v)[0] + 1
            }
        };
        let mask = |pred: &dyn Fn(usize) -> bool| -> Vec<bool> { (0..n).map(pred).collect() };
        let (v, w) = (i - 1, j - 1);
        let b = mask(&|x| spine_position(x) < i);
        let b_prime = mask(&|x| spine_position(x) > j);
        let mut b_root_removed = b.clone();
        b_root_removed[i - 2] = false;
        let mut b_prime_root_removed = b_prime.clone();
        b_prime_root_removed[j] = false;
        let h = mask(&|x| {
            let s = spine_position(x);
            (x < m && s >= i && s <= j) || (x >= m && s > i && s < j)
        });
        let without = |vertices: &[usize]| -> Vec<bool> {
            let mut keep = h.clone();
            for &x in vertices {
                keep[x] = false;
            }
            keep
        };
        Ok(Decomposition {
            d: c.leaf_count(v),
            d_prime: c.leaf_count(w),
            m_b: forest_matching_poly(&t, &b),
            m0_b: forest_matching_poly(&t, &b_root_removed),
            m_b_prime: forest_matching_poly(&t, &b_prime),
            m0_b_prime: forest_matching_poly(&t, &b_prime_root_removed),
            m_h: forest_matching_poly(&t, &h),
            m_h_minus_v: forest_matching_poly(&t, &without(&[v])),
            m_h_minus_w: forest_matching_poly(&t, &without(&[w])),
            m_h_minus_vw: forest_matching_poly(&t, &without(&[v, w])),
        })
    }

    /// `M(G, x)` assembled as
    /// `M(B) M(B') [M(H) + d d' x² M(H-{v,w}) + x² τ(B) τ(B') M(H-{v,w}) + M_v^w(G)]`,
    /// with `τ(B) M(B) = M₀(B)` so that every term stays a polynomial.
    pub fn assemble(&self) -> MatchingPolynomial {
        let outer = &self.m_b * &self.m_b_prime;
        let x2 = |p: &MatchingPolynomial| p.shift().shift();
        let mut bracket = &self.m_h + &x2(&self.m_h_minus_vw).scale(self.d * self.d_prime);
        bracket = &outer * &bracket;
        let tau_tau = x2(&(&(&self.m0_b * &self.m0_b_prime) * &self.m_h_minus_vw));
        &(&bracket + &tau_tau) + &self.m_v_w_scaled()
    }

    /// `M(B) M(B') M_v^w(G, x)` as a polynomial.
    pub fn m_v_w_scaled(&self) -> MatchingPolynomial {
        let outer = &self.m_b * &self.m_b_prime;
        let b_tau_prime = &self.m_b * &self.m0_b_prime; // M(B) M(B') τ(B')
        let tau_b_prime = &self.m0_b * &self.m_b_prime; // M(B) M(B') τ(B)
        let w_factor = &outer.scale(self.d_prime) + &b_tau_prime;
        let v_factor = &outer.scale(self.d) + &tau_b_prime;
        let linear = &(&w_factor * &self.m_h_minus_w) + &(&v_factor * &self.m_h_minus_v);
        let quadratic = &self.m_h_minus_vw * &(&b_tau_prime.scale(self.d) + &tau_b_prime.scale(self.d_prime));
        &linear.shift() + &quadratic.shift().shift()
    }

    pub fn tau_b(&self, x: &Rational) -> Rational {
        self.m0_b.eval(x) / self.m_b.eval(x)
    }

    pub fn tau_b_prime(&self, x: &Rational) -> Rational {
        self.m0_b_prime.eval(x) / self.m_b_prime.eval(x)
    }

    /// `M_v^w(G, x)` evaluated with exact `τ` values.
    pub fn m_v_w(&self, x: &Rational) -> Rational {
        let d = Rational::from_integer(BigInt::from(self.d));
        let d_prime = Rational::from_integer(BigInt::from(self.d_prime));
        let (tau, tau_prime) = (self.tau_b(x), self.tau_b_prime(x));
        let linear = (&d_prime + &tau_prime) * self.m_h_minus_w.eval(x) + (&d + &tau) * self.m_h_minus_v.eval(x);
        let quadratic = self.m_h_minus_vw.eval(x) * (&d * &tau_prime + &d_prime * &tau);
        x * linear + x * x * quadratic
    }

    /// The right-hand side of the decomposition identity at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let d = Rational::from_integer(BigInt::from(self.d));
        let d_prime = Rational::from_integer(BigInt::from(self.d_prime));
        let x2 = x * x;
        let h_vw = self.m_h_minus_vw.eval(x);
        let bracket = self.m_h.eval(x)
            + &d * &d_prime * &x2 * &h_vw
            + &x2 * self.tau_b(x) * self.tau_b_prime(x) * &h_vw
            + self.m_v_w(x);
        self.m_b.eval(x) * self.m_b_prime.eval(x) * bracket
    }
}

/// `M(C, x)` rebuilt from the decomposition at spine positions `i < j`.
pub fn decomposed_matching_poly(c: &Caterpillar, i: usize, j: usize) -> Result<MatchingPolynomial> {
    Ok(Decomposition::new(c, i, j)?.assemble())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(s: &[usize]) -> Caterpillar {
        Caterpillar::from_spine(s).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn stars_and_paths() {
        assert_eq!(matching_poly(&Tree::star(5)), MatchingPolynomial::from_u64(&[1, 5]));
        assert_eq!(matching_poly(&Tree::path(4).unwrap()), MatchingPolynomial::from_u64(&[1, 3, 1]));
        assert_eq!(matching_poly(&Tree::single_vertex()), MatchingPolynomial::one());
    }

    #[test]
    fn caterpillar_example() {
        let c = cat(&[4, 2, 3]);
        let expected = MatchingPolynomial::from_u64(&[1, 7, 11]);
        assert_eq!(matching_poly(&c.to_tree()), expected);
        assert_eq!(caterpillar_matching_poly(&c), expected);
        assert_eq!(matching_poly_vertex_recurrence(&c.to_tree()), expected);
        assert_eq!(hosoya(&c.to_tree()), BigUint::from(19u32));
    }

    #[test]
    fn brute_force_examples() {
        let edge = Tree::path(2).unwrap();
        assert_eq!(matching_poly_bruteforce(&edge).unwrap(), MatchingPolynomial::from_u64(&[1, 1]));
        let p5 = Tree::path(5).unwrap();
        assert_eq!(matching_poly_bruteforce(&p5).unwrap(), MatchingPolynomial::from_u64(&[1, 4, 3]));
        let c = cat(&[3, 4, 3]).to_tree();
        assert_eq!(matching_poly_bruteforce(&c).unwrap(), matching_poly(&c));
        assert!(matches!(
            matching_poly_bruteforce(&Tree::path(27).unwrap()),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn hosoya_examples() {
        assert_eq!(hosoya(&Tree::star(3)), BigUint::from(4u32));
        assert_eq!(hosoya(&Tree::path(4).unwrap()), BigUint::from(5u32));
    }

    #[test]
    fn m0_examples() {
        assert_eq!(m0_poly(&RootedBranch::single_vertex()), MatchingPolynomial::one());
        assert_eq!(m0_poly(&RootedBranch::pseudo_leaf(5)), MatchingPolynomial::one());
        let k2 = RootedBranch::new(Tree::path(2).unwrap(), 1).unwrap();
        assert_eq!(m0_poly(&k2), MatchingPolynomial::one());
    }

    #[test]
    fn tau_examples() {
        for x in [q(1, 4), q(1, 1), q(7, 3)] {
            assert_eq!(tau(&RootedBranch::single_vertex(), &x), q(1, 1));
            let d = 4;
            let expected = (Rational::one() + Rational::from_integer(BigInt::from(d - 1)) * &x).recip();
            assert_eq!(tau(&RootedBranch::pseudo_leaf(d), &x), expected);
        }
        let p3_end = RootedBranch::new(Tree::path(3).unwrap(), 0).unwrap();
        assert_eq!(tau(&p3_end, &q(1, 1)), q(2, 3));
        assert_eq!(tau_recursive(&p3_end, &q(1, 1)), q(2, 3));
    }

    #[test]
    fn decomposition_example() {
        let c = cat(&[4, 2, 2, 3]);
        let direct = matching_poly(&c.to_tree());
        assert_eq!(direct, MatchingPolynomial::from_u64(&[1, 8, 17, 6]));
        assert_eq!(decomposed_matching_poly(&c, 2, 3).unwrap(), direct);
        let parts = Decomposition::new(&c, 2, 3).unwrap();
        assert_eq!(parts.eval(&q(3, 5)), direct.eval(&q(3, 5)));
    }

    #[test]
    fn decomposition_rejects_empty_pieces() {
        let c = cat(&[4, 2, 2, 3]);
        assert!(matches!(decomposed_matching_poly(&c, 1, 3), Err(Error::InvalidDecomposition(_))));
        assert!(matches!(decomposed_matching_poly(&c, 2, 4), Err(Error::InvalidDecomposition(_))));
        assert!(matches!(decomposed_matching_poly(&c, 2, 2), Err(Error::InvalidDecomposition(_))));
        assert!(matches!(decomposed_matching_poly(&cat(&[3, 3]), 1, 2), Err(Error::InvalidDecomposition(_))));
    }
}
