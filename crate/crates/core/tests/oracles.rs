use catermin_core::energy::{energy_coulson, energy_eigen, energy_from_roots, DEFAULT_QUADRATURE_STEPS};
use catermin_core::enumerate::{caterpillars_on, enumerate_reduced_sequences};
use catermin_core::extremal::{build_halves, build_s, join_halves};
use catermin_core::matching::{
    caterpillar_matching_poly, decomposed_matching_poly, matching_poly, matching_poly_bruteforce,
    matching_poly_vertex_recurrence, tau, tau_recursive,
};
use catermin_core::{Caterpillar, Rational, ReducedDegreeSequence, Tree};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn caterpillars_up_to(n: usize) -> Vec<Caterpillar> {
    let mut all = vec![Caterpillar::star(1)];
    for order in 3..=n {
        all.extend(caterpillars_on(order, order));
    }
    all
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Tree {
    let code: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    Tree::from_prufer(n, &code).unwrap()
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

#[test]
fn every_small_caterpillar_matches_brute_force() {
    let all = caterpillars_up_to(12);
    assert!(all.len() > 100);
    for c in &all {
        let t = c.to_tree();
        let expected = matching_poly_bruteforce(&t).unwrap();
        assert_eq!(matching_poly(&t), expected, "{c}");
        assert_eq!(caterpillar_matching_poly(c), expected, "{c}");
    }
}

#[test]
fn random_trees_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let t = random_tree(&mut rng, n);
        assert_eq!(matching_poly(&t), matching_poly_bruteforce(&t).unwrap());
    }
}

#[test]
fn vertex_and_edge_recurrences_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(1..=20);
        let t = random_tree(&mut rng, n);
        assert_eq!(matching_poly(&t), matching_poly_vertex_recurrence(&t));
    }
}

#[test]
fn decomposition_identity_on_small_caterpillars() {
    let mut checked = 0;
    for c in caterpillars_up_to(12) {
        let expected = caterpillar_matching_poly(&c);
        let m = c.spine_len();
        for i in 2..m {
            for j in i + 1..m {
                assert_eq!(decomposed_matching_poly(&c, i, j).unwrap(), expected, "{c} ({i}, {j})");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn tau_forms_agree_on_complete_branches() {
    let xs = [q(1, 4), q(1, 1), q(4, 1)];
    for c in caterpillars_up_to(9) {
        for b in c.to_tree().complete_branches() {
            for x in &xs {
                assert_eq!(tau(&b, x), tau_recursive(&b, x));
            }
        }
    }
}

/// Places the two largest remaining entries at the outer free positions
/// (larger on the left) on odd rounds and the two smallest (smaller on the
/// left) on even rounds.
fn greedy_s(d: &[usize]) -> Vec<usize> {
    let n = d.len();
    let mut remaining: Vec<usize> = d.to_vec();
    remaining.sort_unstable_by(|a, b| b.cmp(a));
    let mut spine = vec![0; n];
    let (mut lo, mut hi) = (0, n - 1);
    let mut round = 1;
    while lo < hi {
        if round % 2 == 1 {
            spine[lo] = remaining.remove(0);
            spine[hi] = remaining.remove(0);
        } else {
            spine[lo] = remaining.pop().unwrap();
            spine[hi] = remaining.pop().unwrap();
        }
        lo += 1;
        hi -= 1;
        round += 1;
    }
    if lo == hi {
        spine[lo] = remaining.pop().unwrap();
    }
    spine
}

#[test]
fn closed_form_matches_greedy_placement() {
    for n in 1..=14 {
        // Distinct entries make every index visible in the output.
        let d: Vec<usize> = (0..n).map(|i| 2 + 3 * (n - i)).collect();
        let r = ReducedDegreeSequence::new(d.clone()).unwrap();
        assert_eq!(build_s(&r).unwrap().spine(), greedy_s(&d).as_slice(), "n = {n}");
    }
    for r in enumerate_reduced_sequences(7, 5) {
        let s = build_s(&r).unwrap();
        assert_eq!(s.spine(), greedy_s(r.degrees()).as_slice());
        let (left, right) = build_halves(&r).unwrap();
        assert_eq!(join_halves(&left, &right).unwrap(), s);
    }
}

#[test]
fn energy_methods_agree_on_small_caterpillars() {
    for c in caterpillars_up_to(10) {
        let t = c.to_tree();
        let roots = energy_from_roots(&t);
        let coulson = energy_coulson(&t, DEFAULT_QUADRATURE_STEPS).unwrap();
        let eigen = energy_eigen(&t).unwrap();
        assert!((roots.value - coulson.value).abs() <= 1e-8, "{c}");
        assert!((roots.value - eigen.value).abs() <= 1e-8, "{c}");
    }
}

#[test]
fn energy_methods_agree_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(2..=25);
        let t = random_tree(&mut rng, n);
        let roots = energy_from_roots(&t);
        let eigen = energy_eigen(&t).unwrap();
        assert!((roots.value - eigen.value).abs() <= 1e-8);
    }
}
