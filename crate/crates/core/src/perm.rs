//! Permutation parity.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Number of cycles (fixed points included) of a permutation of `0..n`.
///
/// Panics if `perm` is not a permutation.
pub fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
        assert_eq!(i, start, "not a permutation");
    }
    cycles
}

/// Sign of a permutation: even iff `n - cycles` is even.
pub fn sign(perm: &[usize]) -> Parity {
    Parity::of(perm.len() - cycle_count(perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn inversions(p: &[usize]) -> usize {
        let mut n = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn small_cases() {
        assert_eq!(sign(&[]), Parity::Even);
        assert_eq!(sign(&[0, 1, 2]), Parity::Even);
        assert_eq!(sign(&[1, 0, 2]), Parity::Odd);
        assert_eq!(sign(&[1, 2, 0]), Parity::Even);
        assert_eq!(cycle_count(&[1, 2, 0, 3]), 2);
    }

    proptest! {
        #[test]
        fn sign_matches_inversion_count(p in Just((0..9usize).collect::<Vec<_>>()).prop_shuffle()) {
            prop_assert_eq!(sign(&p), Parity::of(inversions(&p)));
        }
    }
}
