//! Majorization of degree sequences and one-unit transfer chains.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::DegreeSequence;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Majorization {
    NotMajorized,
    /// Every prefix sum of `y` is at most that of `d`, and `y = d`.
    Weak,
    /// Majorized and `y != d`.
    Strict,
}

impl Majorization {
    pub fn holds(self) -> bool {
        self != Majorization::NotMajorized
    }
}

fn prefix_dominated(y: &[usize], d: &[usize]) -> bool {
    let mut sy = 0usize;
    let mut sd = 0usize;
    y.iter().zip(d).all(|(a, b)| {
        sy += a;
        sd += b;
        sy <= sd
    })
}

/// Whether `y ≼ d`: each prefix sum of `y` is at most the corresponding prefix sum of `d`.
pub fn is_majorized(y: &DegreeSequence, d: &DegreeSequence) -> Result<Majorization> {
    if y.len() != d.len() {
        return Err(Error::LengthMismatch(y.len(), d.len()));
    }
    Ok(if !prefix_dominated(y.degrees(), d.degrees()) {
        Majorization::NotMajorized
    } else if y == d {
        Majorization::Weak
    } else {
        Majorization::Strict
    })
}

fn check_comparable(y: &DegreeSequence, d: &DegreeSequence) -> Result<()> {
    if y.len() != d.len() {
        return Err(Error::NotComparable(format!("lengths {} and {}", y.len(), d.len())));
    }
    if y.sum() != d.sum() {
        return Err(Error::NotComparable(format!("sums {} and {}", y.sum(), d.sum())));
    }
    Ok(())
}

fn transfer(y: &[usize], to: usize, from: usize) -> Vec<usize> {
    let mut z = y.to_vec();
    z[to] += 1;
    z[from] -= 1;
    z
}

/// Moves one unit in `y` towards `d`: `y_l + 1` and `y_m - 1` with `l` the
/// first and `m` the last index where the sequences differ.
///
/// When that transfer would leave `d`'s majorization cone (possible once
/// `y` and `d` agree at some index strictly between `l` and `m` in prefix
/// sum), the unit is taken instead from the first index after `l` where `y`
/// exceeds `d`, moved to the end of its run of equal entries so the result
/// stays non-increasing. Either way `y ≺ Y₁ ≼ d` and `Σ|d - Y₁|` drops by 2.
pub fn majorization_step(y: &DegreeSequence, d: &DegreeSequence) -> Result<DegreeSequence> {
    if y.len() != d.len() {
        return Err(Error::LengthMismatch(y.len(), d.len()));
    }
    if is_majorized(y, d)? != Majorization::Strict || y.sum() != d.sum() {
        return Err(Error::NotStrict);
    }
    let (ys, ds) = (y.degrees(), d.degrees());
    let differing = |i: &usize| ys[*i] != ds[*i];
    let l = (0..ys.len()).find(differing).ok_or(Error::NotStrict)?;
    let m = (0..ys.len()).rev().find(differing).ok_or(Error::NotStrict)?;
    let z = transfer(ys, l, m);
    let z = if prefix_dominated(&z, ds) {
        z
    } else {
        let mut m = (l + 1..ys.len()).find(|&i| ys[i] > ds[i]).ok_or(Error::NotStrict)?;
        while m + 1 < ys.len() && ys[m + 1] == ys[m] {
            m += 1;
        }
        transfer(ys, l, m)
    };
    DegreeSequence::new(z)
}

/// `y = Y₀ ≺ Y₁ ≺ … ≺ Y_J = d` by repeated [`majorization_step`], with
/// `J = ½ Σ|d_i - y_i|`.
pub fn majorization_chain(y: &DegreeSequence, d: &DegreeSequence) -> Result<Vec<DegreeSequence>> {
    check_comparable(y, d)?;
    if !is_majorized(y, d)?.holds() {
        return Err(Error::NotComparable(format!("{:?} is not majorized by {:?}", y.degrees(), d.degrees())));
    }
    let mut chain = alloc::vec![y.clone()];
    while chain.last() != Some(d) {
        let next = majorization_step(chain.last().expect("chain is non-empty"), d)?;
        chain.push(next);
    }
    Ok(chain)
}

/// `½ Σ|d_i - y_i|`, the number of steps in the chain from `y` to `d`.
pub fn chain_length(y: &DegreeSequence, d: &DegreeSequence) -> usize {
    y.degrees()
        .iter()
        .zip(d.degrees())
        .map(|(a, b)| a.abs_diff(*b))
        .sum::<usize>()
        / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(d: &[usize]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn predicate() {
        let a = ds(&[3, 3, 3, 1, 1, 1, 1, 1]);
        let b = ds(&[4, 3, 2, 1, 1, 1, 1, 1]);
        assert_eq!(is_majorized(&a, &a).unwrap(), Majorization::Weak);
        assert_eq!(is_majorized(&a, &b).unwrap(), Majorization::Strict);
        assert_eq!(is_majorized(&b, &a).unwrap(), Majorization::NotMajorized);
        assert_eq!(is_majorized(&ds(&[4, 1, 1]), &ds(&[2, 2, 2])).unwrap(), Majorization::NotMajorized);
        assert_eq!(is_majorized(&ds(&[2, 1]), &ds(&[1, 1, 1])), Err(Error::LengthMismatch(2, 3)));
    }

    #[test]
    fn steps() {
        let b = ds(&[4, 3, 2, 1, 1, 1, 1, 1]);
        assert_eq!(majorization_step(&ds(&[3, 3, 3, 1, 1, 1, 1, 1]), &b).unwrap(), b);
        assert_eq!(majorization_step(&ds(&[3, 3, 2, 2, 1, 1, 1, 1]), &b).unwrap(), b);
        assert_eq!(majorization_step(&b, &b), Err(Error::NotStrict));
    }

    #[test]
    fn step_stays_below_target_when_last_index_overshoots() {
        let y = ds(&[4, 4, 2, 2, 1, 1, 1, 1, 1, 1]);
        let d = ds(&[5, 3, 3, 1, 1, 1, 1, 1, 1, 1]);
        let z = majorization_step(&y, &d).unwrap();
        assert_eq!(z.degrees(), &[5, 3, 2, 2, 1, 1, 1, 1, 1, 1]);
        let chain = majorization_chain(&y, &d).unwrap();
        assert_eq!(chain.len() - 1, chain_length(&y, &d));
    }

    #[test]
    fn chains() {
        let a = ds(&[3, 3, 3, 1, 1, 1, 1, 1]);
        let b = ds(&[4, 3, 2, 1, 1, 1, 1, 1]);
        assert_eq!(majorization_chain(&a, &a).unwrap(), vec![a.clone()]);
        assert_eq!(majorization_chain(&a, &b).unwrap(), vec![a.clone(), b.clone()]);
        let y = ds(&[2, 2, 2, 2, 1, 1, 1, 1]);
        let d = ds(&[4, 2, 2, 1, 1, 1, 1, 1]);
        assert!(matches!(majorization_chain(&y, &d), Err(Error::NotComparable(_))));
        assert!(matches!(majorization_chain(&b, &a), Err(Error::NotComparable(_))));
    }
}
