//! Sparse symmetric Laurent polynomials in `n` variables with
//! [`QTPolynomial`] coefficients.
//!
//! Exponent vectors may be negative: the straightening oracle produces
//! Laurent terms transiently. Everything is exact and canonically ordered.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::QTPolynomial;
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

/// A sparse polynomial in `x_1..x_n` over `Z[q^{\pm},t^{\pm}]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPolynomial {
    n: usize,
    terms: BTreeMap<Vec<i64>, QTPolynomial>,
}

impl SymPolynomial {
    pub fn zero(n: usize) -> Self {
        SymPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, vec![0; n], QTPolynomial::one())
    }

    pub fn monomial(n: usize, exps: Vec<i64>, coeff: QTPolynomial) -> Self {
        assert_eq!(exps.len(), n, "exponent vector length must equal n");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        SymPolynomial { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &QTPolynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> QTPolynomial {
        self.terms.get(exps).cloned().unwrap_or_else(QTPolynomial::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i64>, coeff: &QTPolynomial) {
        assert_eq!(exps.len(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &SymPolynomial) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::VariableCountMismatch(self.n, rhs.n));
        }
        for (e, c) in rhs.terms.iter() {
            self.add_term(e.clone(), c);
        }
        Ok(())
    }

    pub fn sub_assign(&mut self, rhs: &SymPolynomial) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::VariableCountMismatch(self.n, rhs.n));
        }
        for (e, c) in rhs.terms.iter() {
            self.add_term(e.clone(), &(-c));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &SymPolynomial) -> Result<SymPolynomial> {
        let mut out = self.clone();
        out.add_assign(rhs)?;
        Ok(out)
    }

    pub fn sub(&self, rhs: &SymPolynomial) -> Result<SymPolynomial> {
        let mut out = self.clone();
        out.sub_assign(rhs)?;
        Ok(out)
    }

    pub fn mul(&self, rhs: &SymPolynomial) -> Result<SymPolynomial> {
        if self.n != rhs.n {
            return Err(Error::VariableCountMismatch(self.n, rhs.n));
        }
        let mut out = SymPolynomial::zero(self.n);
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QTPolynomial) -> SymPolynomial {
        let mut out = SymPolynomial::zero(self.n);
        for (e, v) in self.terms.iter() {
            out.add_term(e.clone(), &(v * c));
        }
        out
    }

    /// Apply a permutation `w` of `{0..n-1}` to the variables: the exponent
    /// of `x_{w(i)}` in the image is the exponent of `x_i` in the source.
    pub fn permute(&self, w: &[usize]) -> SymPolynomial {
        assert_eq!(w.len(), self.n);
        let mut out = SymPolynomial::zero(self.n);
        for (e, c) in self.terms.iter() {
            let mut img = vec![0i64; self.n];
            for i in 0..self.n {
                img[w[i]] = e[i];
            }
            out.add_term(img, c);
        }
        out
    }

    /// Symmetry check: invariance under every adjacent transposition.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n.saturating_sub(1) {
            for (e, c) in self.terms.iter() {
                if e[i] != e[i + 1] {
                    let mut swapped = e.clone();
                    swapped.swap(i, i + 1);
                    if self.terms.get(&swapped) != Some(c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Total degree in `x` if homogeneous, error naming two degrees otherwise.
    pub fn homogeneous_degree(&self) -> Result<usize> {
        let mut deg: Option<i64> = None;
        for e in self.terms.keys() {
            let d: i64 = e.iter().sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::NotHomogeneous(d0.max(0) as usize, d.max(0) as usize))
                }
                _ => {}
            }
        }
        Ok(deg.unwrap_or(0).max(0) as usize)
    }

    /// Specialize `q = t = 1`, returning a map from exponent vector to the
    /// integer coefficient.
    pub fn eval_qt_one(&self) -> BTreeMap<Vec<i64>, BigInt> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.eval_one()))
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .collect()
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*x^{e:?}")?;
        }
        Ok(())
    }
}

/// The Schur polynomial `s_lambda(x_1..x_n)`, computed by enumerating
/// semistandard tableaux (weakly increasing rows, strictly increasing
/// columns) with entries in `1..=n` and summing their content monomials.
/// Validated elsewhere against the Demazure engine's empty-ideal output.
pub fn schur_monomials(lambda: &Partition, n: usize) -> Result<SymPolynomial> {
    if lambda.len() > n {
        return Err(Error::TooLongPartition(lambda.clone(), n));
    }
    if let Some(hit) = schur_cache_get(lambda, n) {
        return Ok(hit);
    }
    let mut out = SymPolynomial::zero(n);
    let rows = lambda.len();
    // row-by-row fill; `prev` holds the row above (entries must strictly
    // increase down each column)
    fn fill_row(
        lambda: &Partition,
        n: usize,
        y: usize,
        prev: &[usize],
        content: &mut Vec<i64>,
        out: &mut SymPolynomial,
    ) {
        if y == lambda.len() {
            out.add_term(content.clone(), &QTPolynomial::one());
            return;
        }
        let len = lambda.part(y);
        let mut row = vec![0usize; len];
        fn fill_cell(
            lambda: &Partition,
            n: usize,
            y: usize,
            x: usize,
            prev: &[usize],
            row: &mut Vec<usize>,
            content: &mut Vec<i64>,
            out: &mut SymPolynomial,
        ) {
            if x == row.len() {
                let row_copy = row.clone();
                fill_row(lambda, n, y + 1, &row_copy, content, out);
                return;
            }
            let lo = {
                let left = if x > 0 { row[x - 1] } else { 1 };
                let above = if x < prev.len() { prev[x] + 1 } else { 1 };
                left.max(above)
            };
            for v in lo..=n {
                row[x] = v;
                content[v - 1] += 1;
                fill_cell(lambda, n, y, x + 1, prev, row, content, out);
                content[v - 1] -= 1;
            }
        }
        fill_cell(lambda, n, y, 0, prev, &mut row, content, out);
    }
    let mut content = vec![0i64; n];
    if rows == 0 {
        out = SymPolynomial::one(n);
    } else {
        fill_row(lambda, n, 0, &[], &mut content, &mut out);
    }
    schur_cache_put(lambda, n, &out);
    Ok(out)
}

fn schur_cache() -> &'static RwLock<HashMap<(Partition, usize), SymPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, usize), SymPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn schur_cache_get(lambda: &Partition, n: usize) -> Option<SymPolynomial> {
    schur_cache()
        .read()
        .unwrap()
        .get(&(lambda.clone(), n))
        .cloned()
}

fn schur_cache_put(lambda: &Partition, n: usize, value: &SymPolynomial) {
    schur_cache()
        .write()
        .unwrap()
        .insert((lambda.clone(), n), value.clone());
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, e: &[i64]) -> SymPolynomial {
        SymPolynomial::monomial(n, e.to_vec(), QTPolynomial::one())
    }

    #[test]
    fn schur_basics() {
        let s1 = schur_monomials(&Partition::from([1]), 3).unwrap();
        let expect = {
            let mut f = x(3, &[1, 0, 0]);
            f.add_assign(&x(3, &[0, 1, 0])).unwrap();
            f.add_assign(&x(3, &[0, 0, 1])).unwrap();
            f
        };
        assert_eq!(s1, expect);

        let e3 = schur_monomials(&Partition::from([1, 1, 1]), 3).unwrap();
        assert_eq!(e3, x(3, &[1, 1, 1]));

        let s21 = schur_monomials(&Partition::from([2, 1]), 2).unwrap();
        let expect = {
            let mut f = x(2, &[2, 1]);
            f.add_assign(&x(2, &[1, 2])).unwrap();
            f
        };
        assert_eq!(s21, expect);

        assert!(schur_monomials(&Partition::from([1, 1, 1]), 2).is_err());
    }

    #[test]
    fn symmetry_checks() {
        let f = schur_monomials(&Partition::from([3, 1]), 3).unwrap();
        assert!(f.is_symmetric());
        assert!(!x(2, &[2, 1]).is_symmetric());
        let mut g = x(3, &[1, 0, 0]);
        g.add_assign(&x(3, &[0, 1, 0])).unwrap();
        g.add_assign(&x(3, &[0, 0, 1])).unwrap();
        assert!(g.is_symmetric());
    }

    #[test]
    fn permutation_action() {
        let f = x(3, &[2, 1, 0]);
        let id = f.permute(&[0, 1, 2]);
        assert_eq!(id, f);
        let g = f.permute(&[1, 0, 2]);
        assert_eq!(g, x(3, &[1, 2, 0]));
        let s = schur_monomials(&Partition::from([2, 1]), 3).unwrap();
        assert_eq!(s.permute(&[2, 0, 1]), s);
    }

    #[test]
    fn product_of_schurs_is_symmetric() {
        let a = schur_monomials(&Partition::from([2]), 3).unwrap();
        let b = schur_monomials(&Partition::from([1, 1]), 3).unwrap();
        let ab = a.mul(&b).unwrap();
        assert!(ab.is_symmetric());
        assert_eq!(ab.homogeneous_degree().unwrap(), 4);
    }

    #[test]
    fn dimension_counts() {
        // dim of the gl_n irrep = number of SSYT = value at x_i = 1
        let f = schur_monomials(&Partition::from([2, 1]), 3).unwrap();
        let total: BigInt = f.eval_qt_one().values().sum();
        assert_eq!(total, 8.into());
    }
}
