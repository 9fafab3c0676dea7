//! Root ideals, affine Demazure operators on characters, and the Catalan
//! character engine.
//!
//! The engine starts from the trivial character and alternates two moves,
//! once for each column `j = n, n-1, ..., 1`: tensor with a one-dimensional
//! weight `m_j Lambda_j` (where `m_j = lambda_j - lambda_{j+1}`), then apply
//! the Demazure operators along the cyclic interval `[j, h_j)` determined by
//! the root ideal. The result is a finite character whose delta degrees,
//! negated, become `q`-exponents, and whose Schur expansion gives the graded
//! multiplicities of the Catalan module for `(Psi, lambda)`.
//!
//! Conventions pinned here, once:
//! * `alpha_0` pairs as `p = level + v_n - v_1` (the level enters); the
//!   wrong sign or a missing level breaks the `n = 3` Kostka fixture.
//! * subtracting `alpha_0` adds one to `v_1`, subtracts one from `v_n`, and
//!   lowers the delta degree by one;
//! * delta degree `-d` maps to `q^{+d}` at extraction ([`QGRADE_SIGN`]).

use crate::affine::{AffineCharacter, AffineWeight, Mult};
use crate::bases::{schur_peel, SchurExpansion};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::QTPolynomial;
use crate::sym::SymPolynomial;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Sign convention for converting delta degrees to `q`-powers: a term in
/// delta degree `d` (always `<= 0` here) contributes at `q^(QGRADE_SIGN*d)`.
/// Fixed by matching the `n = 3` Kostka fixture; flip to `1` for the
/// opposite convention.
pub const QGRADE_SIGN: i64 = -1;

/// An upward-closed set of positive roots `alpha_{ij}`, `1 <= i < j <= n`.
///
/// Columns are prefixes: the pairs in column `j` are `(1,j)..(h_j,j)`, so the
/// whole ideal is the data of its weakly increasing column heights.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootIdeal {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl RootIdeal {
    /// The empty ideal of rank `n`.
    pub fn empty(n: usize) -> Self {
        RootIdeal { n, pairs: BTreeSet::new() }
    }

    /// The full set of positive roots of rank `n`.
    pub fn full(n: usize) -> Self {
        let mut pairs = BTreeSet::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                pairs.insert((i, j));
            }
        }
        RootIdeal { n, pairs }
    }

    /// Validate a pair set as a root ideal: each `(i,j)` in range with
    /// `i < j`, closed upward (smaller `i`, larger `j`).
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>, n: usize) -> Result<Self> {
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        for &(i, j) in &pairs {
            if i == 0 || j <= i || j > n {
                return Err(Error::ClosureViolation(i, j, i, j));
            }
            if i > 1 && !pairs.contains(&(i - 1, j)) {
                return Err(Error::ClosureViolation(i, j, i - 1, j));
            }
            if j < n && !pairs.contains(&(i, j + 1)) {
                return Err(Error::ClosureViolation(i, j, i, j + 1));
            }
        }
        Ok(RootIdeal { n, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// Column height `h_j`: the largest row index `l` with `(l, j)` in the
    /// ideal, or `0` for an empty column. Always `0 <= h_j < j`.
    pub fn h_col(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.n);
        (1..j).rev().find(|&l| self.pairs.contains(&(l, j))).unwrap_or(0)
    }

    /// All corners: pairs whose removal leaves a root ideal.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .copied()
            .filter(|&(i, j)| !self.pairs.contains(&(i + 1, j)) && !self.pairs.contains(&(i, j.wrapping_sub(1))))
            .collect()
    }

    /// Remove a corner, keeping validity.
    pub fn remove_corner(&self, corner: (usize, usize)) -> Result<RootIdeal> {
        if !self.corners().contains(&corner) {
            return Err(Error::NotACorner(corner.0, corner.1));
        }
        let mut pairs = self.pairs.clone();
        pairs.remove(&corner);
        RootIdeal::new(pairs, self.n)
    }

    /// Shallow means the column heights rise by at most one at each step;
    /// equivalently, a pair starting a row (nothing to its left) has nothing
    /// directly below it.
    pub fn is_shallow(&self) -> bool {
        (1..self.n).all(|j| self.h_col(j + 1) <= self.h_col(j) + 1)
    }

    /// ASCII staircase diagram: the strict upper triangle of the `n x n`
    /// grid, with ideal cells marked `#`, the rest `.`, and the diagonal `\`.
    pub fn render_diagram(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                let c = if j < i {
                    ' '
                } else if j == i {
                    '\\'
                } else if self.contains(i, j) {
                    '#'
                } else {
                    '.'
                };
                out.push(c);
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for RootIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootIdeal(n={}, {:?})", self.n, self.pairs)
    }
}

impl fmt::Display for RootIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs.iter().map(|&(i, j)| format!("{i},{j}")).collect();
        write!(f, "{}", pairs.join(";"))
    }
}

#[derive(Serialize, Deserialize)]
struct RootIdealJson {
    n: usize,
    pairs: Vec<[usize; 2]>,
}

impl Serialize for RootIdeal {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        RootIdealJson {
            n: self.n,
            pairs: self.pairs.iter().map(|&(i, j)| [i, j]).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RootIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RootIdealJson::deserialize(de)?;
        RootIdeal::new(raw.pairs.into_iter().map(|[i, j]| (i, j)), raw.n)
            .map_err(serde::de::Error::custom)
    }
}

/// An affine Dynkin index in `{0, ..., n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DemazureIndex(pub usize);

impl DemazureIndex {
    pub fn new(i: usize, n: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::ImproperInterval(i, i, n));
        }
        Ok(DemazureIndex(i))
    }
}

/// The root ideal `Psi[lambda, k]`: row `i` holds the pairs `(i, j)` with
/// `j > max(i, i + k - lambda_i)`. Exists iff these row starts are weakly
/// increasing, which holds in particular for every weakly decreasing
/// `lambda` (partitions padded with zeros).
pub fn psi_of(lambda: &[i64], k: usize, n: usize) -> Result<RootIdeal> {
    if lambda.len() != n {
        return Err(Error::InvalidWeight(lambda.to_vec(), n));
    }
    let o = |i: usize| -> i64 {
        let iv = i as i64;
        iv.max(iv + k as i64 - lambda[i - 1])
    };
    for i in 1..n {
        if o(i) > o(i + 1) {
            return Err(Error::NonexistentIdeal(lambda.to_vec(), k));
        }
    }
    let mut pairs = Vec::new();
    for i in 1..=n {
        let start = o(i);
        if start < n as i64 {
            for j in (start.max(i as i64) + 1).max(1) as usize..=n {
                if j > i {
                    pairs.push((i, j));
                }
            }
        }
    }
    RootIdeal::new(pairs, n)
}

/// `Psi[lambda, k]` for a partition, padded to `n` coordinates.
pub fn psi_of_partition(lambda: &Partition, k: usize, n: usize) -> Result<RootIdeal> {
    psi_of(&lambda.to_weight(n), k, n)
}

/// The simple affine reflection `s_i` acting on an affine weight. For
/// `1 <= i < n` it swaps adjacent coordinates; `s_0` uses the pairing
/// `p = level + v_n - v_1` and also shifts the delta degree. The level is
/// always preserved and each reflection is an involution.
pub fn affine_reflect(i: DemazureIndex, w: &AffineWeight) -> AffineWeight {
    let n = w.n();
    let mut out = w.clone();
    if i.0 == 0 {
        let p = w.level + w.v[n - 1] - w.v[0];
        out.v[0] += p;
        out.v[n - 1] -= p;
        out.delta -= p;
    } else {
        out.v.swap(i.0 - 1, i.0);
    }
    out
}

/// The isobaric Demazure operator `D_i` on characters, term by term. With
/// `p` the pairing of a weight against `alpha_i^vee`:
/// `p >= 0` contributes the string of `p + 1` weights stepping down by
/// `alpha_i`; `p = -1` contributes nothing; `p <= -2` contributes the
/// interior string stepping up, negated.
pub fn demazure_op(i: DemazureIndex, f: &AffineCharacter) -> AffineCharacter {
    let n = f.n();
    debug_assert!(i.0 < n);
    let mut out = AffineCharacter::empty(n, f.level);
    for ((v, d), &c) in f.terms() {
        let p: i64 = if i.0 == 0 {
            f.level + v[n - 1] - v[0]
        } else {
            v[i.0 - 1] - v[i.0]
        };
        let step = |w: &mut Vec<i64>, delta: &mut i64, dir: i64| {
            // dir = +1 subtracts alpha_i once, dir = -1 adds it
            if i.0 == 0 {
                w[0] += dir;
                w[n - 1] -= dir;
                *delta -= dir;
            } else {
                w[i.0 - 1] -= dir;
                w[i.0] += dir;
            }
        };
        if p >= 0 {
            let mut w = v.clone();
            let mut delta = *d;
            out.accumulate(w.clone(), delta, c);
            for _ in 0..p {
                step(&mut w, &mut delta, 1);
                out.accumulate(w.clone(), delta, c);
            }
        } else if p <= -2 {
            let mut w = v.clone();
            let mut delta = *d;
            for _ in 0..(-p - 1) {
                step(&mut w, &mut delta, -1);
                out.accumulate(w.clone(), delta, -c);
            }
        }
    }
    out
}

/// Index sequence of the closed cyclic interval `[i, j]`: `i, i+1, ..., j`
/// with indices mod `n`, a proper subset of the affine Dynkin indices.
pub fn cyclic_interval(i: usize, j: usize, n: usize) -> Result<Vec<usize>> {
    if i >= n || j >= n {
        return Err(Error::ImproperInterval(i, j, n));
    }
    let len = (j + n - i) % n + 1;
    if len == n {
        return Err(Error::ImproperInterval(i, j, n));
    }
    Ok((0..len).map(|s| (i + s) % n).collect())
}

/// Apply the Demazure operators along the closed cyclic interval `[i, j]`,
/// index `i` first.
pub fn demazure_cyclic(i: usize, j: usize, f: &AffineCharacter) -> Result<AffineCharacter> {
    let ops = cyclic_interval(i, j, f.n())?;
    let mut acc = f.clone();
    for idx in ops {
        acc = demazure_op(DemazureIndex(idx), &acc);
    }
    Ok(acc)
}

/// The half-open interval `[start, end) = [start, end-1]` used by the column
/// operators, with the convention that `start = end (mod n)` is empty.
/// Returns the operator index sequence.
pub fn half_open_interval(start: usize, end: usize, n: usize) -> Result<Vec<usize>> {
    let s = start % n;
    let e = end % n;
    if s == e {
        return Ok(Vec::new());
    }
    cyclic_interval(s, (e + n - 1) % n, n)
}

/// One column operator of the Catalan composition: tensor with
/// `m Lambda_j`, then apply the Demazure string along `[j, h_j(Psi))`.
pub fn catalan_column_op(
    psi: &RootIdeal,
    j: usize,
    m: i64,
    f: &AffineCharacter,
) -> Result<AffineCharacter> {
    let n = psi.n();
    let mut acc = f.tensor_fundamental(j, m);
    for idx in half_open_interval(j, psi.h_col(j), n)? {
        acc = demazure_op(DemazureIndex(idx), &acc);
    }
    Ok(acc)
}

fn check_par_n(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::TooLongPartition(lambda.clone(), n));
    }
    Ok(())
}

/// The raw affine character of the Catalan module for `(Psi, lambda)`:
/// the composition of the column operators for `j = n` down to `1` applied
/// to the trivial character.
pub fn catalan_affine_character(psi: &RootIdeal, lambda: &Partition) -> Result<AffineCharacter> {
    let n = psi.n();
    check_par_n(lambda, n)?;
    let mut acc = AffineCharacter::trivial(n);
    for j in (1..=n).rev() {
        let m = lambda.part(j - 1) as i64 - lambda.part(j) as i64;
        acc = catalan_column_op(psi, j, m, &acc)?;
    }
    Ok(acc)
}

/// Forget the level and convert delta degrees to `q`-powers, giving a
/// symmetric polynomial over `Z[q]`.
pub fn extract_finite_character(f: &AffineCharacter) -> SymPolynomial {
    let mut out = SymPolynomial::zero(f.n());
    for ((v, d), &c) in f.terms() {
        out.add_term(
            v.clone(),
            &QTPolynomial::monomial(mult_to_big(c), QGRADE_SIGN * d, 0),
        );
    }
    out
}

fn mult_to_big(c: Mult) -> num_bigint::BigInt {
    num_bigint::BigInt::from(c)
}

/// Graded multiplicities of the Catalan module: run the Demazure
/// composition, extract the finite character, and Schur-peel it.
///
/// `Psi = empty` gives a single Schur function; `Psi` full gives the
/// Hall-Littlewood column of Kostka polynomials; `Psi = Psi[lambda,k]`
/// gives the `k`-Schur expansion.
pub fn catalan_char(psi: &RootIdeal, lambda: &Partition) -> Result<SchurExpansion> {
    let aff = catalan_affine_character(psi, lambda)?;
    let finite = extract_finite_character(&aff);
    schur_peel(&finite)
}

/// Cyclic-interval reflection product applied to a weight: the reflections
/// `s_start, ..., s_(end-1)` of the half-open interval, first index first.
fn reflect_along(start: usize, end: usize, w: &AffineWeight) -> Result<AffineWeight> {
    let n = w.n();
    let mut acc = w.clone();
    for idx in half_open_interval(start, end, n)? {
        acc = affine_reflect(DemazureIndex(idx), &acc);
    }
    Ok(acc)
}

/// The chain of extremal weights `Lambda^(n+1), ..., Lambda^(1)` attached to
/// a shallow ideal: each step tensors `m_i Lambda_i` onto the previous
/// weight and reflects along `[i, h_i)`. The finite parts obey the
/// weight recurrences and the monotonicity constraints checked in the test
/// suite; the last weight's sorted finite part, conjugated, recovers the
/// `k`-conjugate when `Psi = Psi[lambda, k]`.
pub fn chain_weights(psi: &RootIdeal, lambda: &Partition) -> Result<Vec<AffineWeight>> {
    let n = psi.n();
    if !psi.is_shallow() {
        return Err(Error::NotShallow);
    }
    check_par_n(lambda, n)?;
    let mut out = vec![AffineWeight::zero(n)];
    let mut current = AffineWeight::zero(n);
    for i in (1..=n).rev() {
        let m = lambda.part(i - 1) as i64 - lambda.part(i) as i64;
        for entry in current.v.iter_mut().take(i) {
            *entry += m;
        }
        current.level += m;
        current = reflect_along(i, psi.h_col(i), &current)?;
        out.push(current.clone());
    }
    Ok(out)
}

/// Finite parts of the chain weights computed by the closed-form recurrences
/// (step cases split on `h_i = 0`); used to cross-check [`chain_weights`].
pub fn chain_weights_by_recurrence(psi: &RootIdeal, lambda: &Partition) -> Result<Vec<Vec<i64>>> {
    let n = psi.n();
    if !psi.is_shallow() {
        return Err(Error::NotShallow);
    }
    check_par_n(lambda, n)?;
    let m = |i: usize| -> i64 {
        if i > n {
            0
        } else {
            lambda.part(i - 1) as i64 - lambda.part(i) as i64
        }
    };
    let m_tail = |i: usize| -> i64 { (i..=n).map(m).sum() };
    let mut out = vec![vec![0i64; n]];
    let mut prev = vec![0i64; n];
    for i in (1..=n).rev() {
        let h = psi.h_col(i);
        let at = |j: usize| prev[j - 1]; // 1-based read of previous chain weight
        let mut next = vec![0i64; n];
        for j in 1..=n {
            next[j - 1] = if h > 0 {
                if j < h {
                    at(j + 1) + m(i)
                } else if j == h {
                    at(i) + m(i) + m_tail(i)
                } else if j < i {
                    at(j) + m(i)
                } else if j < n {
                    at(j + 1)
                } else {
                    at(1) - m_tail(i + 1)
                }
            } else if j < i {
                at(j) + m(i)
            } else if j < n {
                at(j + 1)
            } else {
                at(i) + m(i)
            };
        }
        out.push(next.clone());
        prev = next;
    }
    Ok(out)
}

/// Read the socle off the `k`-Schur character: the top `q`-degree of
/// `catalan_char(Psi[lambda,k], lambda)` is carried by a single Schur
/// function with coefficient one; returns that partition and the degree.
pub fn socle_partition(lambda: &Partition, k: usize, n: usize) -> Result<(Partition, usize)> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    if n <= lambda.size() {
        return Err(Error::NTooSmall { need: lambda.size() + 1, got: n });
    }
    let psi = psi_of_partition(lambda, k, n)?;
    let expansion = catalan_char(&psi, lambda)?;
    let mut top_degree = 0i64;
    for coeff in expansion.coeffs().values() {
        top_degree = top_degree.max(coeff.max_q_degree().unwrap_or(0));
    }
    let mut carriers: Vec<(&Partition, num_bigint::BigInt)> = Vec::new();
    for (mu, coeff) in expansion.coeffs() {
        let c = coeff.coeff(top_degree, 0);
        if !num_traits::Zero::is_zero(&c) {
            carriers.push((mu, c));
        }
    }
    if carriers.len() != 1 || carriers[0].1 != num_bigint::BigInt::from(1) {
        return Err(Error::NonterminatingResidual(carriers.len()));
    }
    Ok((carriers[0].0.clone(), top_degree as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn paper_psi() -> RootIdeal {
        RootIdeal::new(
            [(1, 3), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6), (3, 6)],
            6,
        )
        .unwrap()
    }

    #[test]
    fn validate_ideals() {
        assert!(RootIdeal::new([], 4).is_ok());
        assert_eq!(RootIdeal::full(3).len(), 3);
        assert!(paper_psi().is_shallow());
        // (2,5) without (1,5) violates closure
        assert!(RootIdeal::new([(2, 5), (2, 6), (1, 6)], 6).is_err());
        // (1,5) without (1,6) violates closure
        assert!(RootIdeal::new([(1, 5)], 6).is_err());
    }

    #[test]
    fn h_col_values() {
        let psi = paper_psi();
        let hs: Vec<usize> = (1..=6).map(|j| psi.h_col(j)).collect();
        assert_eq!(hs, vec![0, 0, 1, 1, 2, 3]);
        assert!((1..=4).all(|j| RootIdeal::empty(4).h_col(j) == 0));
        let full = RootIdeal::full(5);
        assert!((1..=5).all(|j| full.h_col(j) == j - 1));
    }

    #[test]
    fn corner_logic() {
        assert_eq!(RootIdeal::full(2).corners(), vec![(1, 2)]);
        let c = paper_psi().corners();
        assert!(c.contains(&(3, 6)) && c.contains(&(2, 5)) && c.contains(&(1, 3)));
        assert_eq!(
            RootIdeal::full(2).remove_corner((1, 2)).unwrap(),
            RootIdeal::empty(2)
        );
        assert!(paper_psi().remove_corner((1, 6)).is_err());
        // removing any corner keeps a valid shallow-or-not ideal
        for corner in paper_psi().corners() {
            paper_psi().remove_corner(corner).unwrap();
        }
    }

    #[test]
    fn shallowness() {
        assert!(RootIdeal::empty(3).is_shallow());
        assert!(RootIdeal::full(4).is_shallow());
        // columns (1,3),(1,4),(2,4): h = (0,0,1,2) -> shallow
        assert!(RootIdeal::new([(1, 3), (1, 4), (2, 4)], 4).unwrap().is_shallow());
        // h jumps by 2 at column 4: not shallow
        assert!(!RootIdeal::new([(1, 4), (2, 4)], 4).unwrap().is_shallow());
    }

    #[test]
    fn psi_of_fixtures() {
        let lam = p(&[6, 5, 5, 3, 1, 1]);
        assert_eq!(psi_of_partition(&lam, 7, 6).unwrap(), paper_psi());
        // k = 0 gives the full ideal for any partition
        for lam in crate::partition::enumerate_partitions(4) {
            assert_eq!(psi_of_partition(&lam, 0, 4).unwrap(), RootIdeal::full(4));
        }
        // zero weight with k >= n-1 gives the empty ideal
        assert_eq!(psi_of(&[0, 0, 0], 2, 3).unwrap(), RootIdeal::empty(3));
        // a weight whose row starts decrease has no ideal
        assert!(psi_of(&[0, 5], 2, 2).is_err());
    }

    #[test]
    fn psi_of_kbounded_is_shallow() {
        for m in 1..=6 {
            for k in 1..=m {
                for lam in crate::partition::enumerate_kbounded(m, k) {
                    let psi = psi_of_partition(&lam, k, m + 1).unwrap();
                    assert!(psi.is_shallow(), "Psi[{lam},{k}] not shallow");
                }
            }
        }
    }

    #[test]
    fn reflect_involution_and_level() {
        let w = AffineWeight { v: vec![3, -1, 4, 0], level: 2, delta: -5 };
        for i in 0..4 {
            let r = affine_reflect(DemazureIndex(i), &w);
            assert_eq!(r.level, w.level);
            assert_eq!(affine_reflect(DemazureIndex(i), &r), w);
        }
    }

    #[test]
    fn reflect_zero_fixture() {
        // i=0, level=1, v=(0,0), delta=0 -> v=(1,-1), delta=-1
        let w = AffineWeight { v: vec![0, 0], level: 1, delta: 0 };
        let r = affine_reflect(DemazureIndex(0), &w);
        assert_eq!(r.v, vec![1, -1]);
        assert_eq!(r.delta, -1);
        // level-0 zero weight fixed by everything
        let z = AffineWeight::zero(3);
        for i in 0..3 {
            assert_eq!(affine_reflect(DemazureIndex(i), &z), z);
        }
    }

    #[test]
    fn demazure_strings() {
        // e^0 is fixed by every operator
        let f = AffineCharacter::trivial(3);
        for i in 0..3 {
            assert_eq!(demazure_op(DemazureIndex(i), &f), f);
        }
        // n=2: e^{eps_1} -> e^{eps_1} + e^{eps_2} under D_1
        let mut g = AffineCharacter::empty(2, 0);
        g.accumulate(vec![1, 0], 0, 1);
        let dg = demazure_op(DemazureIndex(1), &g);
        assert_eq!(dg.multiplicity(&[1, 0], 0), 1);
        assert_eq!(dg.multiplicity(&[0, 1], 0), 1);
        assert_eq!(dg.num_terms(), 2);
        // p = -1 kills a term: e^{eps_2} has pairing -1 against alpha_1
        let mut h = AffineCharacter::empty(2, 0);
        h.accumulate(vec![0, 1], 0, 1);
        let dh = demazure_op(DemazureIndex(1), &h);
        assert_eq!(dh.num_terms(), 0);
        // p = -2 contributes the negated interior string
        let mut k = AffineCharacter::empty(2, 0);
        k.accumulate(vec![0, 2], 0, 1);
        let dk = demazure_op(DemazureIndex(1), &k);
        assert_eq!(dk.multiplicity(&[1, 1], 0), -1);
        assert_eq!(dk.num_terms(), 1);
    }

    #[test]
    fn cyclic_interval_shapes() {
        assert_eq!(cyclic_interval(1, 3, 5).unwrap(), vec![1, 2, 3]);
        assert_eq!(cyclic_interval(3, 0, 5).unwrap(), vec![3, 4, 0]);
        assert!(cyclic_interval(0, 4, 5).is_err()); // would be all of I_af
        assert_eq!(half_open_interval(2, 0, 5).unwrap(), vec![2, 3, 4]);
        assert_eq!(half_open_interval(5, 3, 5).unwrap(), vec![0, 1, 2]);
        assert!(half_open_interval(5, 0, 5).unwrap().is_empty());
        assert!(half_open_interval(1, 1, 5).unwrap().is_empty());
    }

    #[test]
    fn composition_associativity() {
        // composing [1,2] then [3,0] equals composing step by step
        let mut f = AffineCharacter::empty(4, 1);
        f.accumulate(vec![1, 0, 2, 0], -1, 1);
        f.accumulate(vec![0, 1, 1, 1], 0, 2);
        let ab = demazure_cyclic(3, 0, &demazure_cyclic(1, 2, &f).unwrap()).unwrap();
        let mut step = f.clone();
        for i in [1usize, 2, 3, 0] {
            step = demazure_op(DemazureIndex(i), &step);
        }
        assert_eq!(ab, step);
    }
}
