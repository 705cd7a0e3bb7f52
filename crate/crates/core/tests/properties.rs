use catermin_core::enumerate::{caterpillar_count, enumerate_caterpillars};
use catermin_core::extremal::build_s;
use catermin_core::majorization::{chain_length, is_majorized, majorization_chain, Majorization};
use catermin_core::matching::{caterpillar_matching_poly, hosoya, matching_poly};
use catermin_core::{Caterpillar, DegreeSequence, Rational, ReducedDegreeSequence, Tree};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn spine_strategy(max_len: usize, max_degree: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2..=max_degree, 1..=max_len)
}

/// Tree degree sequences on `n` vertices: Prüfer codes give `1 + occurrences`.
fn tree_sequence(n: usize) -> impl Strategy<Value = DegreeSequence> {
    prop::collection::vec(0..n, n - 2).prop_map(move |code| {
        let mut d = vec![1; n];
        for v in code {
            d[v] += 1;
        }
        DegreeSequence::new(d).unwrap()
    })
}

proptest! {
    #[test]
    fn spine_round_trip(spine in spine_strategy(8, 7)) {
        let c = Caterpillar::from_spine(&spine).unwrap();
        let t = c.to_tree();
        prop_assert_eq!(t.vertex_count(), c.vertex_count());
        prop_assert_eq!(t.degree_sequence(), c.degree_sequence());
        let mut sorted = spine.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let reduced = c.degree_sequence().reduce().unwrap();
        prop_assert_eq!(reduced.degrees(), sorted.as_slice());
        prop_assert_eq!(caterpillar_matching_poly(&c), matching_poly(&t));
        prop_assert_eq!(c.diameter(), t.diameter());
    }

    #[test]
    fn canonical_form_is_reversal_invariant(spine in spine_strategy(8, 7)) {
        let c = Caterpillar::from_spine(&spine).unwrap();
        let canon = c.canonical_form();
        prop_assert_eq!(&canon, &c.reversed().canonical_form());
        prop_assert!(canon.is_canonical());
        prop_assert_eq!(canon.canonical_form(), canon.clone());
        prop_assert_eq!(caterpillar_matching_poly(&c), caterpillar_matching_poly(&c.reversed()));
    }

    #[test]
    fn spine_split_partitions_the_vertices(spine in spine_strategy(8, 6), at in 1usize..8) {
        let c = Caterpillar::from_spine(&spine).unwrap();
        prop_assume!(at < c.spine_len());
        let (left, right) = c.split_at_spine_edge(at).unwrap();
        prop_assert_eq!(left.vertex_count() + right.vertex_count(), c.vertex_count());
        // M(G) = M(L) M(R) + x M(L - r) M(R - r).
        let l = catermin_core::matching::branch_matching_poly(&left);
        let r = catermin_core::matching::branch_matching_poly(&right);
        let l0 = catermin_core::matching::m0_poly(&left);
        let r0 = catermin_core::matching::m0_poly(&right);
        prop_assert_eq!(&(&l * &r) + &(&l0 * &r0).shift(), caterpillar_matching_poly(&c));
    }

    #[test]
    fn rearrangement_inequality(a in 0i64..1000, b in 0i64..1000, c in 0i64..1000, d in 0i64..1000, den in 1i64..50) {
        let mut v = [a, b, c, d];
        let r = |x: i64| Rational::new(BigInt::from(x), BigInt::from(den));
        let (a1, b1) = (r(a.min(b)), r(a.max(b)));
        let (c1, d1) = (r(c.min(d)), r(c.max(d)));
        prop_assert!(&a1 * &c1 + &b1 * &d1 >= &a1 * &d1 + &b1 * &c1);
        v.sort_unstable();
        let [a, b, c, d] = v.map(r);
        prop_assert!(&a * &b + &c * &d >= &a * &c + &b * &d);
        prop_assert!(&a * &c + &b * &d >= &a * &d + &b * &c);
    }

    #[test]
    fn extremal_preserves_degrees(d in prop::collection::vec(2usize..=7, 1..=8)) {
        let r = ReducedDegreeSequence::new(d).unwrap();
        let s = build_s(&r).unwrap();
        prop_assert_eq!(s.degree_sequence().reduce().unwrap(), r.clone());
        prop_assert_eq!(s.vertex_count(), r.vertex_count());
    }

    #[test]
    fn majorization_chains_are_unit_steps((y, d) in (4usize..12).prop_flat_map(|n| (tree_sequence(n), tree_sequence(n)))) {
        let (y, d) = match is_majorized(&y, &d).unwrap() {
            Majorization::NotMajorized => match is_majorized(&d, &y).unwrap() {
                Majorization::NotMajorized => return Ok(()),
                _ => (d, y),
            },
            _ => (y, d),
        };
        let chain = majorization_chain(&y, &d).unwrap();
        prop_assert_eq!(chain.len() - 1, chain_length(&y, &d));
        prop_assert_eq!(chain.last().unwrap(), &d);
        for pair in chain.windows(2) {
            prop_assert_eq!(is_majorized(&pair[0], &pair[1]).unwrap(), Majorization::Strict);
            prop_assert_eq!(is_majorized(&pair[1], &d).unwrap().holds(), true);
            let changed: Vec<isize> = pair[0].degrees().iter().zip(pair[1].degrees())
                .map(|(a, b)| *b as isize - *a as isize)
                .filter(|delta| *delta != 0)
                .collect();
            prop_assert_eq!(changed, vec![1, -1]);
            prop_assert!(pair[1].is_tree_realizable());
        }
    }

    #[test]
    fn universe_size_matches_formula(d in prop::collection::vec(2usize..=5, 1..=7)) {
        let r = ReducedDegreeSequence::new(d).unwrap();
        prop_assert_eq!(caterpillar_count(&r), enumerate_caterpillars(&r).count() as u128);
    }
}

#[test]
fn path_hosoya_follows_fibonacci() {
    let mut previous = (BigUint::from(1u32), BigUint::from(2u32));
    assert_eq!(hosoya(&Tree::path(1).unwrap()), previous.0);
    assert_eq!(hosoya(&Tree::path(2).unwrap()), previous.1);
    for n in 3..=20 {
        let next = &previous.0 + &previous.1;
        assert_eq!(hosoya(&Tree::path(n).unwrap()), next);
        previous = (previous.1, next);
    }
}
