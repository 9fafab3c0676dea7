//! Affine weights and level-homogeneous affine characters.
//!
//! A weight is a finite vector in the `epsilon` basis plus a level (the
//! coefficient of the level-one fundamental weight) and a delta degree. A
//! character is a multiset of such weights at a single shared level; the
//! Demazure engine works entirely on this representation.

use num_bigint::BigInt;
use std::collections::BTreeMap;

/// A weight of the extended affine Cartan algebra: `v + level*P + delta*D`
/// where `v` lives in the span of `epsilon_1..epsilon_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub v: Vec<i64>,
    pub level: i64,
    pub delta: i64,
}

impl AffineWeight {
    pub fn zero(n: usize) -> Self {
        AffineWeight { v: vec![0; n], level: 0, delta: 0 }
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }
}

/// Multiplicities are exact machine integers wide enough for any character
/// this engine can feasibly materialize; additions are checked so overflow
/// is an error, never silent wraparound.
pub type Mult = i128;

/// A level-homogeneous character: finitely many `(finite weight, delta)`
/// pairs with nonzero integer multiplicity, all at the same level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineCharacter {
    n: usize,
    pub level: i64,
    terms: BTreeMap<(Vec<i64>, i64), Mult>,
}

impl AffineCharacter {
    /// The trivial character `e^0` at level zero.
    pub fn trivial(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((vec![0; n], 0), 1);
        AffineCharacter { n, level: 0, terms }
    }

    pub fn empty(n: usize, level: i64) -> Self {
        AffineCharacter { n, level, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<i64>, i64), &Mult)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = ((Vec<i64>, i64), Mult)> {
        self.terms.into_iter()
    }

    pub fn multiplicity(&self, v: &[i64], delta: i64) -> Mult {
        self.terms.get(&(v.to_vec(), delta)).copied().unwrap_or(0)
    }

    /// Shift every weight by `m` copies of the `j`-th fundamental weight
    /// `varpi_j` (adds `m` to the first `j` coordinates) and raise the level
    /// by `m`. This is tensoring with the one-dimensional `C_{m Lambda_j}`.
    pub fn tensor_fundamental(&self, j: usize, m: i64) -> AffineCharacter {
        assert!(j >= 1 && j <= self.n);
        let mut terms = BTreeMap::new();
        for ((v, d), &c) in self.terms.iter() {
            let mut w = v.clone();
            for entry in w.iter_mut().take(j) {
                *entry += m;
            }
            terms.insert((w, *d), c);
        }
        AffineCharacter { n: self.n, level: self.level + m, terms }
    }

    /// Total multiplicity (the dimension of the underlying space).
    pub fn total_multiplicity(&self) -> BigInt {
        let mut sum = BigInt::from(0);
        for &c in self.terms.values() {
            sum += BigInt::from(c);
        }
        sum
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }
}

impl AffineCharacter {
    /// Add `mult` at `(v, delta)`, dropping the entry if it cancels to zero.
    pub fn accumulate(&mut self, v: Vec<i64>, delta: i64, mult: Mult) {
        debug_assert_eq!(v.len(), self.n);
        if mult == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((v, delta)) {
            Entry::Vacant(e) => {
                e.insert(mult);
            }
            Entry::Occupied(mut e) => {
                let sum = e
                    .get()
                    .checked_add(mult)
                    .expect("character multiplicity overflow");
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_shifts_prefix_and_level() {
        let f = AffineCharacter::trivial(3);
        let g = f.tensor_fundamental(2, 2);
        assert_eq!(g.level, 2);
        assert_eq!(g.multiplicity(&[2, 2, 0], 0), 1);
        assert_eq!(g.num_terms(), 1);
    }

    #[test]
    fn accumulate_cancels() {
        let mut f = AffineCharacter::trivial(2);
        f.accumulate(vec![0, 0], 0, -1);
        assert_eq!(f.num_terms(), 0);
    }
}
