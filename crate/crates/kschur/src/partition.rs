//! Partition combinatorics: conjugation, hooks, cores, `k`-bounded sets,
//! `k`-conjugation, dominance, and the ribbon data behind the Pieri rule.
//!
//! Boxes of a partition live at coordinates `(x, y)` with `x` the column and
//! `y` the row, both 0-based, rows listed from the largest part down; `(x, y)`
//! is a box of `lambda` iff `x < lambda[y]`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A partition: weakly decreasing positive parts, trailing zeros stripped.
///
/// The ordering is graded (smaller size first) and within a grade descending
/// lexicographic, which refines dominance downward: if `lambda` dominates
/// `mu` then `lambda` sorts first. All enumeration and serialization order
/// comes from this.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from any part sequence; sorts descending and strips zeros, so
    /// the result is always canonical.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Build from parts that must already be weakly decreasing (zeros allowed
    /// and stripped). Rejects increasing sequences instead of sorting.
    pub fn from_decreasing(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ParseError(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Self::new(parts))
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.first_part() <= k
    }

    /// Containment of Young diagrams: `self[i] <= other[i]` for all `i`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// The conjugate partition `(lambda')_i = #{j : lambda_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.first_part());
        for i in 1..=self.first_part() {
            parts.push(self.parts.iter().filter(|&&p| p >= i).count());
        }
        Partition { parts }
    }

    /// Hook length of the box `(x, y)`: arm + leg + 1.
    pub fn hook(&self, x: usize, y: usize) -> Result<usize> {
        if x >= self.part(y) {
            return Err(Error::NotABox { shape: self.clone(), x, y });
        }
        let col_len = self.parts.iter().filter(|&&p| p > x).count();
        Ok(self.part(y) - x + col_len - y - 1)
    }

    /// True iff no box has hook length exactly `r`.
    pub fn is_r_core(&self, r: usize) -> bool {
        self.boxes().all(|(x, y)| self.hook(x, y).unwrap() != r)
    }

    /// Iterate over all boxes `(x, y)`.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len).map(move |x| (x, y)))
    }

    /// `n(lambda) = sum lambda_i (lambda_i - 1) / 2`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().map(|&p| p * (p.saturating_sub(1)) / 2).sum()
    }

    /// `m(lambda) = n(lambda')`, i.e. `sum (i-1) lambda_i`.
    pub fn m_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Dominance comparison at equal size: `self <= other` iff every partial
    /// sum of `self` is at most the matching partial sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.clone(), other.clone()));
        }
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict dominance comparability check returning an `Option<Ordering>`;
    /// `None` for incomparable or unequal sizes.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        if self == other {
            return Some(Ordering::Equal);
        }
        if self.dominance_leq(other).unwrap() {
            return Some(Ordering::Less);
        }
        if other.dominance_leq(self).unwrap() {
            return Some(Ordering::Greater);
        }
        None
    }

    /// All partitions obtained by removing one corner box, with the row the
    /// box was removed from.
    pub fn remove_one_box(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for y in 0..self.len() {
            if self.part(y) > self.part(y + 1) {
                let mut parts = self.parts.clone();
                parts[y] -= 1;
                out.push((Partition::new(parts), y));
            }
        }
        out
    }

    /// All partitions obtained by adding one box in a valid position.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for y in 0..=self.len() {
            let above = if y == 0 { usize::MAX } else { self.part(y - 1) };
            if self.part(y) < above {
                let mut parts = self.parts.clone();
                if y < parts.len() {
                    parts[y] += 1;
                } else {
                    parts.push(1);
                }
                out.push(Partition::new(parts));
            }
        }
        out
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn standard_tableaux_count(&self) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        let mut num = BigInt::from(1);
        for i in 1..=self.size() {
            num *= BigInt::from(i);
        }
        let mut den = BigInt::from(1);
        for (x, y) in self.boxes() {
            den *= BigInt::from(self.hook(x, y).unwrap());
        }
        num / den
    }

    /// The padded weight vector of length `n` (parts then zeros).
    pub fn to_weight(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.part(i) as i64).collect()
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(de)?;
        Partition::from_decreasing(parts).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Partition {
    /// Parses comma-separated parts, e.g. `6,5,5,3,1,1`. Empty string and
    /// `0` both denote the empty partition. Rejects increasing sequences.
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::ParseError(format!("{p:?}: {e}"))))
            .collect::<Result<_>>()?;
        Partition::from_decreasing(parts)
    }
}

/// The `(k+1)`-core/inner-shape pair attached to a `k`-bounded partition.
///
/// `core` has no hook of length `k+1`; a box of `core` lies in `inner` iff
/// its hook length exceeds `k+1`; and `core[i] - inner[i]` recovers the
/// original `k`-bounded partition row by row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorePair {
    pub core: Partition,
    pub inner: Partition,
    pub bound: usize,
}

impl CorePair {
    /// Check every defining invariant; used after construction and in tests.
    pub fn validate(&self) -> Result<()> {
        let k = self.bound;
        if !self.core.is_r_core(k + 1) {
            return Err(Error::NotACore(self.core.clone(), k + 1));
        }
        if !self.inner.contained_in(&self.core) {
            return Err(Error::ParseError(format!(
                "inner {} not contained in core {}",
                self.inner, self.core
            )));
        }
        for (x, y) in self.core.boxes() {
            let big = self.core.hook(x, y)? > k + 1;
            let in_inner = x < self.inner.part(y);
            if big != in_inner {
                return Err(Error::ParseError(format!(
                    "hook characterization fails at ({x},{y}) of {}",
                    self.core
                )));
            }
        }
        Ok(())
    }

    /// The `k`-bounded partition this pair encodes: row differences.
    pub fn k_bounded(&self) -> Partition {
        let parts = (0..self.core.len())
            .map(|i| self.core.part(i) - self.inner.part(i))
            .collect();
        Partition::new(parts)
    }
}

/// Ribbon data for one step of the Pieri rule: the skew of consecutive
/// `(k+1)`-cores decomposes into `c` ribbons of common height `h`, and each
/// marking contributes `spin = c(h-1) + N` with `N` the number of ribbons
/// strictly above the marked one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonData {
    /// Row of the box removed from the k-bounded partition.
    pub removed_row: usize,
    /// Number of ribbons in the core skew.
    pub ribbon_count: usize,
    /// Common height of all ribbons.
    pub common_height: usize,
    /// Spin values, one per marking, sorted ascending.
    pub spins: Vec<usize>,
}

/// All `k`-bounded partitions of `m`, descending lexicographic (which is
/// compatible with descending dominance within the grade).
pub fn enumerate_kbounded(m: usize, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(m, k, &mut current, &mut out);
    out
}

/// All partitions of `m` (no bound on the first part).
pub fn enumerate_partitions(m: usize) -> Vec<Partition> {
    enumerate_kbounded(m, m)
}

/// The unique `(k+1)`-core pair attached to a `k`-bounded partition.
///
/// Rows are placed bottom-up, each shifted right by the least amount that
/// keeps every hook in the placed row at most `k`; the shift of row `i` is
/// then the inner part `nu_i`. The output is checked against the full
/// `CorePair` invariant set, which pins it uniquely, so any construction
/// error would be caught here rather than propagate.
pub fn kbounded_to_core(lambda: &Partition, k: usize) -> Result<CorePair> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    let ell = lambda.len();
    let mut shifts = vec![0usize; ell];
    let mut rows = vec![0usize; ell]; // core row lengths, filled bottom-up
    for i in (0..ell).rev() {
        let mut s = if i + 1 < ell { shifts[i + 1] } else { 0 };
        loop {
            // Hook of the box (s, i) once row i has length lambda_i + s:
            // arm = lambda_i - 1, leg counts longer placed rows below. The
            // first unshifted box must have hook at most k, never k+1.
            let leg = (i + 1..ell).filter(|&j| rows[j] > s).count();
            if lambda.part(i) + leg <= k {
                break;
            }
            s += 1;
        }
        shifts[i] = s;
        rows[i] = lambda.part(i) + s;
    }
    let pair = CorePair {
        core: Partition::new(rows),
        inner: Partition::new(shifts),
        bound: k,
    };
    pair.validate()?;
    Ok(pair)
}

/// Inverse of [`kbounded_to_core`]: recover the `k`-bounded partition from a
/// `(k+1)`-core by counting, in each row, the boxes of hook length at most
/// `k+1`.
pub fn core_to_kbounded(gamma: &Partition, k: usize) -> Result<Partition> {
    if !gamma.is_r_core(k + 1) {
        return Err(Error::NotACore(gamma.clone(), k + 1));
    }
    let parts = (0..gamma.len())
        .map(|y| {
            (0..gamma.part(y))
                .filter(|&x| gamma.hook(x, y).unwrap() <= k + 1)
                .count()
        })
        .collect();
    Ok(Partition::new(parts))
}

/// `k`-conjugation: transpose the core pair. `(lambda^{omega_k})_i =
/// (core')_i - (inner')_i`.
pub fn omega_k(lambda: &Partition, k: usize) -> Result<Partition> {
    let pair = kbounded_to_core(lambda, k)?;
    let mu_c = pair.core.conjugate();
    let nu_c = pair.inner.conjugate();
    let parts = (0..mu_c.len()).map(|i| mu_c.part(i) - nu_c.part(i)).collect();
    Ok(Partition::new(parts))
}

/// `d_k(lambda) = |inner|`: the size of the inner shape of the core pair.
pub fn d_k(lambda: &Partition, k: usize) -> Result<usize> {
    Ok(kbounded_to_core(lambda, k)?.inner.size())
}

/// Decompose a skew set of boxes into edge-connected components, each of
/// which must be a ribbon (no 2x2 square). Returns components sorted by
/// their lowest row, bottom-to-top.
fn ribbon_components(cells: &[(usize, usize)]) -> Result<Vec<Vec<(usize, usize)>>> {
    use std::collections::BTreeSet;
    let cell_set: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut comps = Vec::new();
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some((x, y)) = stack.pop() {
            comp.push((x, y));
            let mut push = |c: (usize, usize)| {
                if cell_set.contains(&c) && seen.insert(c) {
                    stack.push(c);
                }
            };
            push((x + 1, y));
            push((x, y + 1));
            if x > 0 {
                push((x - 1, y));
            }
            if y > 0 {
                push((x, y - 1));
            }
        }
        for &(x, y) in &comp {
            if cell_set.contains(&(x + 1, y))
                && cell_set.contains(&(x, y + 1))
                && cell_set.contains(&(x + 1, y + 1))
            {
                return Err(Error::ParseError(format!(
                    "skew component contains a 2x2 square at ({x},{y})"
                )));
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    // Bottom-to-top: sort by the minimal row of each component. The spin
    // marking convention counts ribbons strictly above the marked one.
    comps.sort_by_key(|comp| comp.iter().map(|&(_, y)| y).min().unwrap());
    Ok(comps)
}

/// All Pieri predecessors of a `k`-bounded `lambda`: the `mu` obtained by
/// removing one box with `mu^{omega_k}` contained in `lambda^{omega_k}`,
/// each with the ribbon decomposition of `core(lambda)/core(mu)` and the
/// spin multiset over markings.
pub fn pieri_pairs(lambda: &Partition, k: usize) -> Result<Vec<(Partition, RibbonData)>> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    let lambda_core = kbounded_to_core(lambda, k)?.core;
    let lambda_omega = omega_k(lambda, k)?;
    let mut out = Vec::new();
    for (mu, removed_row) in lambda.remove_one_box() {
        let mu_omega = omega_k(&mu, k)?;
        if !mu_omega.contained_in(&lambda_omega) {
            continue;
        }
        let mu_core = kbounded_to_core(&mu, k)?.core;
        let cells: Vec<(usize, usize)> = lambda_core
            .boxes()
            .filter(|&(x, y)| x >= mu_core.part(y))
            .collect();
        let comps = ribbon_components(&cells)?;
        let c = comps.len();
        let heights: Vec<usize> = comps
            .iter()
            .map(|comp| {
                let ys: Vec<usize> = comp.iter().map(|&(_, y)| y).collect();
                ys.iter().max().unwrap() - ys.iter().min().unwrap() + 1
            })
            .collect();
        let h = heights[0];
        if heights.iter().any(|&hh| hh != h) {
            return Err(Error::ParseError(format!(
                "ribbons of unequal height in core skew for {lambda} -> {mu} at k={k}"
            )));
        }
        // Marking r on the ribbon with index r from the bottom leaves
        // N = c - 1 - r ribbons strictly above it.
        let spins: Vec<usize> = (0..c).map(|r| c * (h - 1) + (c - 1 - r)).collect();
        let mut spins_sorted = spins;
        spins_sorted.sort_unstable();
        out.push((
            mu,
            RibbonData {
                removed_row,
                ribbon_count: c,
                common_height: h,
                spins: spins_sorted,
            },
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugate_fixtures() {
        assert_eq!(p(&[6, 1, 1]).conjugate(), p(&[3, 1, 1, 1, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        assert_eq!(
            p(&[12, 6, 6, 3, 1, 1]).conjugate(),
            p(&[6, 4, 4, 3, 3, 3, 1, 1, 1, 1, 1, 1])
        );
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hook_fixtures() {
        assert_eq!(p(&[1]).hook(0, 0).unwrap(), 1);
        assert_eq!(p(&[2, 1]).hook(0, 0).unwrap(), 3);
        assert_eq!(p(&[2, 1]).hook(1, 0).unwrap(), 1);
        assert!(p(&[2, 1]).hook(1, 1).is_err());
    }

    #[test]
    fn hook_matches_brute_count() {
        // arm + leg + 1 counted directly on the diagram
        for lam in enumerate_partitions(7) {
            for (x, y) in lam.boxes() {
                let arm = lam.part(y) - x - 1;
                let leg = (y + 1..lam.len()).filter(|&j| lam.part(j) > x).count();
                assert_eq!(lam.hook(x, y).unwrap(), arm + leg + 1);
            }
        }
    }

    #[test]
    fn core_predicate() {
        assert!(Partition::empty().is_r_core(5));
        assert!(p(&[12, 6, 6, 3, 1, 1]).is_r_core(8));
        assert!(!p(&[2, 1]).is_r_core(3));
    }

    #[test]
    fn stats() {
        assert_eq!(p(&[1, 1, 1]).n_stat(), 0);
        assert_eq!(p(&[3]).n_stat(), 3);
        assert_eq!(p(&[2, 1]).m_stat(), 1);
        for lam in enumerate_partitions(6) {
            assert_eq!(lam.m_stat(), lam.conjugate().n_stat());
        }
    }

    #[test]
    fn dominance() {
        assert!(p(&[1, 1, 1]).dominance_leq(&p(&[3])).unwrap());
        assert!(p(&[2, 1]).dominance_leq(&p(&[2, 1])).unwrap());
        assert!(!p(&[3]).dominance_leq(&p(&[2, 1])).unwrap());
        assert!(p(&[3]).dominance_leq(&p(&[2, 1, 1])).is_err());
    }

    #[test]
    fn dominance_window_bounds_first_part() {
        // lambda >= mu with lambda k-bounded forces mu k-bounded
        for lam in enumerate_partitions(7) {
            for mu in enumerate_partitions(7) {
                if mu.dominance_leq(&lam).unwrap() {
                    assert!(mu.first_part() <= lam.first_part());
                }
            }
        }
    }

    #[test]
    fn kbounded_enumeration() {
        assert_eq!(enumerate_kbounded(3, 2), vec![p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_kbounded(3, 1), vec![p(&[1, 1, 1])]);
        assert_eq!(enumerate_kbounded(0, 4), vec![Partition::empty()]);
    }

    #[test]
    fn core_fixture_n7() {
        let lam = p(&[6, 5, 5, 3, 1, 1]);
        let pair = kbounded_to_core(&lam, 7).unwrap();
        assert_eq!(pair.core, p(&[12, 6, 6, 3, 1, 1]));
        assert_eq!(pair.inner, p(&[6, 1, 1]));
        assert_eq!(core_to_kbounded(&pair.core, 7).unwrap(), lam);
        assert_eq!(d_k(&lam, 7).unwrap(), 8);
        assert_eq!(
            omega_k(&lam, 7).unwrap(),
            p(&[3, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn core_small_cases() {
        let pair = kbounded_to_core(&Partition::empty(), 4).unwrap();
        assert_eq!(pair.core, Partition::empty());
        let pair = kbounded_to_core(&p(&[2, 1]), 3).unwrap();
        assert_eq!(pair.core, p(&[2, 1]));
        assert_eq!(pair.inner, Partition::empty());
        assert_eq!(core_to_kbounded(&p(&[2, 1]), 3).unwrap(), p(&[2, 1]));
        assert!(kbounded_to_core(&p(&[3, 3]), 2).is_err());
        assert!(core_to_kbounded(&p(&[2, 1]), 2).is_err());
    }

    #[test]
    fn omega_small_cases() {
        // |lambda| <= k collapses to plain conjugation with d = 0
        for m in 0..=5 {
            for lam in enumerate_partitions(m) {
                for k in m..=m + 2 {
                    if k == 0 {
                        continue;
                    }
                    assert_eq!(omega_k(&lam, k).unwrap(), lam.conjugate());
                    assert_eq!(d_k(&lam, k).unwrap(), 0);
                }
            }
        }
        assert_eq!(omega_k(&p(&[2, 1]), 2).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn omega_involution_sweep() {
        for m in 0..=8 {
            for k in 1..=m.max(1) {
                for lam in enumerate_kbounded(m, k) {
                    let w = omega_k(&lam, k).unwrap();
                    assert!(w.is_k_bounded(k), "omega of {lam} at k={k} not bounded");
                    assert_eq!(omega_k(&w, k).unwrap(), lam);
                    assert_eq!(d_k(&lam, k).unwrap(), d_k(&w, k).unwrap());
                    let pair = kbounded_to_core(&lam, k).unwrap();
                    assert_eq!(core_to_kbounded(&pair.core, k).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn pieri_single_box() {
        let pairs = pieri_pairs(&p(&[1]), 2).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0, Partition::empty());
        assert_eq!(pairs[0].1.spins, vec![0]);
        assert_eq!(pairs[0].1.ribbon_count, 1);
        assert_eq!(pairs[0].1.common_height, 1);
    }

    #[test]
    fn pieri_spin_range() {
        for m in 1..=6 {
            for k in 1..=m {
                for lam in enumerate_kbounded(m, k) {
                    for (_, rd) in pieri_pairs(&lam, k).unwrap() {
                        let c = rd.ribbon_count;
                        let h = rd.common_height;
                        assert_eq!(rd.spins.len(), c);
                        for &s in &rd.spins {
                            assert!(s >= c * (h - 1) && s <= c * h - 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_order_is_graded_and_dominance_compatible() {
        let list = enumerate_partitions(5);
        for i in 0..list.len() {
            for j in 0..list.len() {
                if list[i].dominance_cmp(&list[j]) == Some(Ordering::Greater) {
                    assert!(list[i] < list[j], "{} should sort before {}", list[i], list[j]);
                }
            }
        }
    }

    #[test]
    fn parse_and_json() {
        let lam: Partition = "6,5,5,3,1,1".parse().unwrap();
        assert_eq!(lam, p(&[6, 5, 5, 3, 1, 1]));
        assert!("1,2,3".parse::<Partition>().is_err());
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, "[6,5,5,3,1,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert_eq!(serde_json::from_str::<Partition>("[2,1]").unwrap(), p(&[2, 1]));
    }
}
