//! Schur-basis extraction, `k`-Schur basis change, Kostka polynomials,
//! products, coproducts, the Pieri skew operator, and positivity verdicts.
//!
//! Two triangular solves live here and they point in opposite directions:
//!
//! * [`schur_peel`] writes a symmetric polynomial in Schur polynomials by
//!   repeatedly removing the dominance-maximal monomial (a Schur polynomial
//!   is its leading monomial plus dominance-lower ones);
//! * [`kschur_expand`] writes a Schur expansion in `k`-Schur functions by
//!   eliminating dominance-minimal indices first (a `k`-Schur function is
//!   its leading Schur function plus dominance-higher ones).

use crate::demazure::{catalan_char, psi_of_partition, RootIdeal};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::QTPolynomial;
use crate::sym::{schur_monomials, SymPolynomial};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

/// A finite combination of Schur polynomials in `n` variables with
/// `Z[q^{\pm},t^{\pm}]` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    n: usize,
    coeffs: BTreeMap<Partition, QTPolynomial>,
}

impl SchurExpansion {
    pub fn zero(n: usize) -> Self {
        SchurExpansion { n, coeffs: BTreeMap::new() }
    }

    pub fn single(n: usize, lambda: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, QTPolynomial::one());
        SchurExpansion { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, QTPolynomial> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> QTPolynomial {
        self.coeffs.get(lambda).cloned().unwrap_or_else(QTPolynomial::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &QTPolynomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &SchurExpansion) {
        for (lam, c) in rhs.coeffs.iter() {
            self.add_term(lam.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, rhs: &SchurExpansion) {
        for (lam, c) in rhs.coeffs.iter() {
            self.add_term(lam.clone(), &(-c));
        }
    }

    pub fn scale(&self, c: &QTPolynomial) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.n);
        for (lam, v) in self.coeffs.iter() {
            out.add_term(lam.clone(), &(v * c));
        }
        out
    }

    /// Map every coefficient through `f`, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&QTPolynomial) -> QTPolynomial) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.n);
        for (lam, v) in self.coeffs.iter() {
            out.add_term(lam.clone(), &f(v));
        }
        out
    }

    /// Expand back into monomials: `sum coeffs[lambda] * s_lambda(x)`.
    pub fn to_monomials(&self) -> Result<SymPolynomial> {
        let mut out = SymPolynomial::zero(self.n);
        for (lam, c) in self.coeffs.iter() {
            out.add_assign(&schur_monomials(lam, self.n)?.scale(c))?;
        }
        Ok(out)
    }

    /// Common size of the index partitions; errors if mixed.
    pub fn homogeneous_size(&self) -> Result<usize> {
        let mut size: Option<usize> = None;
        for lam in self.coeffs.keys() {
            match size {
                None => size = Some(lam.size()),
                Some(s) if s != lam.size() => return Err(Error::NotHomogeneous(s, lam.size())),
                _ => {}
            }
        }
        Ok(size.unwrap_or(0))
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| c.is_nonnegative())
    }

    /// Maximal `q`-degree over all coefficients, `None` when empty.
    pub fn max_q_degree(&self) -> Option<i64> {
        self.coeffs.values().filter_map(|c| c.max_q_degree()).max()
    }

    /// Truncate every coefficient at `q^qmax`.
    pub fn truncate_q(&self, qmax: i64) -> SchurExpansion {
        self.map_coeffs(|c| c.truncate_q(qmax))
    }

    /// Render like `s[2,1] + q s[3]`; multi-term coefficients are
    /// parenthesized.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (lam, c) in self.coeffs.iter() {
            let body = format!("s{lam}");
            let piece = if c.is_one() {
                body
            } else if c.num_terms() == 1 {
                format!("{} {}", c.render(), body)
            } else {
                format!("({}) {}", c.render(), body)
            };
            parts.push(piece);
        }
        parts.join(" + ")
    }

    /// LaTeX rendering mirroring the tilde-Schur notation.
    pub fn render_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (lam, c) in self.coeffs.iter() {
            let sub = lam
                .parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let body = format!("\\tilde{{s}}_{{{sub}}}");
            let cs = latex_poly(c);
            let piece = if c.is_one() {
                body
            } else if c.num_terms() == 1 {
                format!("{cs}\\,{body}")
            } else {
                format!("({cs})\\,{body}")
            };
            parts.push(piece);
        }
        parts.join(" + ")
    }
}

/// Wrap multi-digit exponents in braces: `q^12` -> `q^{12}`.
fn latex_poly(c: &QTPolynomial) -> String {
    let src = c.render();
    let mut out = String::with_capacity(src.len());
    let mut chars = src.chars().peekable();
    while let Some(ch) = chars.next() {
        out.push(ch);
        if ch == '^' {
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit() || **d == '-') {
                digits.push(*d);
                chars.next();
            }
            out.push('{');
            out.push_str(&digits);
            out.push('}');
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ExpansionTermJson {
    partition: Partition,
    coeff: QTPolynomial,
}

#[derive(Serialize, Deserialize)]
struct SchurExpansionJson {
    n: usize,
    terms: Vec<ExpansionTermJson>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SchurExpansionJson {
            n: self.n,
            terms: self
                .coeffs
                .iter()
                .map(|(lam, c)| ExpansionTermJson { partition: lam.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = SchurExpansionJson::deserialize(de)?;
        let mut out = SchurExpansion::zero(raw.n);
        for term in raw.terms {
            out.add_term(term.partition, &term.coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A `k`-Schur expansion: coefficients on `k`-bounded partitions plus the
/// residual left over when the input is not in the span (empty on success).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSchurExpansion {
    pub k: usize,
    pub coeffs: BTreeMap<Partition, QTPolynomial>,
    pub residual: SchurExpansion,
}

impl KSchurExpansion {
    pub fn is_clean(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| c.is_nonnegative())
    }

    pub fn coeff(&self, lambda: &Partition) -> QTPolynomial {
        self.coeffs.get(lambda).cloned().unwrap_or_else(QTPolynomial::zero)
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let k = self.k;
        self.coeffs
            .iter()
            .map(|(lam, c)| {
                let body = format!("s^({k}){lam}");
                if c.is_one() {
                    body
                } else if c.num_terms() == 1 {
                    format!("{} {}", c.render(), body)
                } else {
                    format!("({}) {}", c.render(), body)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Number of semistandard tableaux of the given shape and content: the
/// weight multiplicity of `content` in the irreducible of highest weight
/// `shape`. Dynamic programming over horizontal strips, one content letter
/// at a time.
pub fn kostka_number(shape: &Partition, content: &Partition) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    use num_traits::Zero;
    if shape.size() != content.size() {
        return BigInt::zero();
    }
    if shape.is_empty() {
        return BigInt::from(1);
    }
    let rows = shape.len();
    let mut states: HashMap<Vec<usize>, BigInt> = HashMap::new();
    states.insert(vec![0; rows], BigInt::from(1));
    for step in 0..content.len() {
        let strip = content.part(step);
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (old, count) in states.iter() {
            // distribute `strip` boxes as a horizontal strip on top of `old`
            fn place(
                shape: &Partition,
                old: &[usize],
                row: usize,
                left: usize,
                acc: &mut Vec<usize>,
                count: &num_bigint::BigInt,
                next: &mut HashMap<Vec<usize>, num_bigint::BigInt>,
            ) {
                if row == old.len() {
                    if left == 0 {
                        let entry = next
                            .entry(acc.clone())
                            .or_insert_with(num_bigint::BigInt::zero);
                        *entry += count;
                    }
                    return;
                }
                // row bounds: stay within the shape, keep rows decreasing,
                // and avoid two strip boxes in one column (new length of
                // this row is capped by the previous length of the row
                // above)
                let cap = shape
                    .part(row)
                    .min(if row == 0 { usize::MAX } else { acc[row - 1] });
                let strip_cap = if row == 0 { usize::MAX } else { old[row - 1] };
                let hi = cap.min(strip_cap).min(old[row] + left);
                for new_len in old[row]..=hi {
                    acc.push(new_len);
                    place(shape, old, row + 1, left - (new_len - old[row]), acc, count, next);
                    acc.pop();
                }
            }
            let mut acc = Vec::with_capacity(rows);
            place(shape, old, 0, strip, &mut acc, count, &mut next);
        }
        states = next;
    }
    let target: Vec<usize> = (0..rows).map(|i| shape.part(i)).collect();
    states.remove(&target).unwrap_or_else(BigInt::zero)
}

/// Greedy unitriangular extraction of Schur coefficients from a symmetric
/// polynomial: repeatedly take the dominance-maximal exponent vector that is
/// a partition and subtract its coefficient times that Schur polynomial.
///
/// Since the input is symmetric it is determined by its dominant sector
/// (monomials with weakly decreasing exponents), and the dominant sector of
/// `s_lambda` is the row of Kostka numbers `K_{lambda,kappa}`, so the peel
/// runs entirely on partition-indexed coefficients.
pub fn schur_peel(f: &SymPolynomial) -> Result<SchurExpansion> {
    if !f.is_polynomial() {
        return Err(Error::NotPolynomial);
    }
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.n();
    // dominant sector, most dominant first (canonical order does this)
    let mut sector: BTreeMap<Partition, QTPolynomial> = BTreeMap::new();
    for (e, c) in f.terms() {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            sector.insert(Partition::new(e.iter().map(|&x| x as usize).collect()), c.clone());
        }
    }
    let mut out = SchurExpansion::zero(n);
    while let Some((lambda, c)) = sector.pop_first() {
        if c.is_zero() {
            continue;
        }
        out.add_term(lambda.clone(), &c);
        let mut touched = false;
        for (kappa, entry) in sector.iter_mut() {
            let k = kostka_number(&lambda, kappa);
            if !num_traits::Zero::is_zero(&k) {
                *entry -= &c.scale(&k);
                touched = true;
            }
        }
        let _ = touched;
    }
    Ok(out)
}

/// The Kostka polynomial `K_{lambda,mu}(q)`: the coefficient of `s_lambda`
/// in the Hall-Littlewood character of `mu`, computed by the Demazure engine
/// on the full root ideal. `n` defaults to `|mu| + 1` when `None`.
pub fn kostka(lambda: &Partition, mu: &Partition, n: Option<usize>) -> Result<QTPolynomial> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.clone(), mu.clone()));
    }
    let n = n.unwrap_or(mu.size() + 1).max(mu.len()).max(lambda.len()).max(1);
    let hl = catalan_char(&RootIdeal::full(n), mu)?;
    Ok(hl.coeff(lambda))
}

/// The `k`-Schur function of `lambda` as a Schur expansion: the Catalan
/// character for `Psi[lambda, k]`. Memoized; `n` defaults to `|lambda| + 1`.
pub fn kschur(lambda: &Partition, k: usize, n: Option<usize>) -> Result<SchurExpansion> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    let n = n.unwrap_or(lambda.size() + 1).max(lambda.len()).max(1);
    if let Some(hit) = kschur_cache().read().unwrap().get(&(lambda.clone(), k, n)) {
        return Ok(hit.clone());
    }
    let psi = psi_of_partition(lambda, k, n)?;
    let out = catalan_char(&psi, lambda)?;
    kschur_cache()
        .write()
        .unwrap()
        .insert((lambda.clone(), k, n), out.clone());
    Ok(out)
}

type KschurKey = (Partition, usize, usize);

fn kschur_cache() -> &'static RwLock<HashMap<KschurKey, SchurExpansion>> {
    static CACHE: OnceLock<RwLock<HashMap<KschurKey, SchurExpansion>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Expand a homogeneous Schur expansion in the `k`-Schur basis by
/// unitriangular elimination.
///
/// A `k`-Schur function is its index Schur function plus dominance-higher
/// terms, so elimination runs over dominance-minimal indices first: the
/// current coefficient at a minimal unprocessed index is exactly the basis
/// coefficient. Indices that are not `k`-bounded cannot be eliminated and
/// accumulate in the residual, which is empty exactly when the input lies in
/// the span. Coefficients may involve `t`; it rides along as a scalar.
pub fn kschur_expand(f: &SchurExpansion, k: usize) -> Result<KSchurExpansion> {
    let m = f.homogeneous_size()?;
    let n = f.n();
    let mut rest = f.clone();
    let mut coeffs = BTreeMap::new();
    let mut residual = SchurExpansion::zero(n);
    // Walk a fixed linear extension of dominance, minimal first. Every
    // subtraction only touches indices strictly later in the extension, so
    // each coefficient read here is final.
    let mut order = crate::partition::enumerate_partitions(m);
    order.reverse();
    for mu in order {
        let c = rest.coeff(&mu);
        if c.is_zero() {
            continue;
        }
        if !mu.is_k_bounded(k) || mu.len() > n {
            residual.add_term(mu.clone(), &c);
            rest.add_term(mu, &(-&c));
            continue;
        }
        let basis = kschur(&mu, k, Some(n))?;
        rest.sub_assign(&basis.scale(&c));
        debug_assert!(rest.coeff(&mu).is_zero());
        coeffs.insert(mu, c);
    }
    if !rest.is_zero() {
        return Err(Error::NonterminatingResidual(rest.coeffs().len()));
    }
    Ok(KSchurExpansion { k, coeffs, residual })
}

/// Branch a `k`-Schur function into the `(k+1)`-basis.
pub fn branch_k(lambda: &Partition, k: usize) -> Result<KSchurExpansion> {
    let f = kschur(lambda, k, None)?;
    kschur_expand(&f, k + 1)
}

/// Expand the product `s^(k)_lambda * s^(l)_mu` in the `(k+l)`-basis, using
/// `|lambda| + |mu| + 1` variables.
pub fn product_expand(
    lambda: &Partition,
    k: usize,
    mu: &Partition,
    l: usize,
) -> Result<KSchurExpansion> {
    let n = lambda.size() + mu.size() + 1;
    let a = kschur(lambda, k, Some(n))?.to_monomials()?;
    let b = kschur(mu, l, Some(n))?.to_monomials()?;
    let prod = schur_peel(&a.mul(&b)?)?;
    kschur_expand(&prod, k + l)
}

/// The Littlewood-Richardson coefficient: the multiplicity of `s_lambda` in
/// `s_mu * s_nu`, computed by product-peel.
pub fn lr_coeff(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<num_bigint::BigInt> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::SizeMismatch(
            Partition::new(vec![mu.size() + nu.size()]),
            Partition::new(vec![lambda.size()]),
        ));
    }
    let n = lambda.size().max(1);
    let a = schur_monomials(mu, n)?;
    let b = schur_monomials(nu, n)?;
    let exp = schur_peel(&a.mul(&b)?)?;
    Ok(exp.coeff(lambda).coeff(0, 0))
}

/// Expand `s^(k)_lambda(X+Y)` for the split `|lambda| = m1 + m2` into the
/// basis `s^(k)(X) (x) s^(k)(Y)` via Littlewood-Richardson coefficients and
/// a double unitriangular solve. Keys are `(mu, nu)` with `|mu| = m1`,
/// `|nu| = m2`.
pub fn coproduct_expand(
    lambda: &Partition,
    k: usize,
    m1: usize,
    m2: usize,
) -> Result<CoproductExpansion> {
    if m1 + m2 != lambda.size() {
        return Err(Error::InvalidSplit(m1, m2, lambda.size()));
    }
    let f = kschur(lambda, k, None)?;
    // s_nu(X+Y) = sum c^nu_{alpha,beta} s_alpha(X) s_beta(Y)
    let mut table: BTreeMap<(Partition, Partition), QTPolynomial> = BTreeMap::new();
    for (nu, c) in f.coeffs().iter() {
        for alpha in crate::partition::enumerate_partitions(m1) {
            for beta in crate::partition::enumerate_partitions(m2) {
                let lr = lr_coeff(&alpha, &beta, nu)?;
                if num_traits::Zero::is_zero(&lr) {
                    continue;
                }
                let add = c.scale(&lr);
                let entry = table
                    .entry((alpha.clone(), beta.clone()))
                    .or_insert_with(QTPolynomial::zero);
                *entry += &add;
                if entry.is_zero() {
                    table.remove(&(alpha.clone(), beta.clone()));
                }
            }
        }
    }
    // Double triangular solve along a fixed linear extension of the product
    // dominance order, minimal pairs first; subtractions only touch pairs
    // later in the extension.
    let mut coeffs = BTreeMap::new();
    let mut residual = BTreeMap::new();
    let mut order1 = crate::partition::enumerate_partitions(m1);
    order1.reverse();
    let mut order2 = crate::partition::enumerate_partitions(m2);
    order2.reverse();
    for mu in &order1 {
        for nu in &order2 {
            let Some(c) = table.get(&(mu.clone(), nu.clone())).cloned() else {
                continue;
            };
            if !mu.is_k_bounded(k) || !nu.is_k_bounded(k) {
                table.remove(&(mu.clone(), nu.clone()));
                residual.insert((mu.clone(), nu.clone()), c);
                continue;
            }
            let bx = kschur(mu, k, Some(m1.max(1) + 1))?;
            let by = kschur(nu, k, Some(m2.max(1) + 1))?;
            for (a, ca) in bx.coeffs().iter() {
                for (b, cb) in by.coeffs().iter() {
                    let sub = &(&c * ca) * cb;
                    use std::collections::btree_map::Entry;
                    match table.entry((a.clone(), b.clone())) {
                        Entry::Vacant(e) => {
                            if !sub.is_zero() {
                                e.insert(-&sub);
                            }
                        }
                        Entry::Occupied(mut e) => {
                            *e.get_mut() -= &sub;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
            debug_assert!(!table.contains_key(&(mu.clone(), nu.clone())));
            coeffs.insert((mu.clone(), nu.clone()), c);
        }
    }
    if !table.is_empty() {
        return Err(Error::NonterminatingResidual(table.len()));
    }
    Ok(CoproductExpansion { k, m1, m2, coeffs, residual })
}

/// Result of [`coproduct_expand`]: coefficients on pairs of `k`-bounded
/// partitions plus a residual table (empty on success).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductExpansion {
    pub k: usize,
    pub m1: usize,
    pub m2: usize,
    pub coeffs: BTreeMap<(Partition, Partition), QTPolynomial>,
    pub residual: BTreeMap<(Partition, Partition), QTPolynomial>,
}

impl CoproductExpansion {
    pub fn is_clean(&self) -> bool {
        self.residual.is_empty()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| c.is_nonnegative())
    }
}

/// The adjoint of multiplication by `e_1` on Schur expansions: send each
/// `s_lambda` to the sum of `s_mu` over single-box removals `lambda/mu`.
pub fn e1_skew(f: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero(f.n());
    for (lam, c) in f.coeffs().iter() {
        for (mu, _) in lam.remove_one_box() {
            out.add_term(mu, c);
        }
    }
    out
}

/// A printable positivity verdict; verdicts are data, not assertions, so a
/// counterexample survives to the report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerdictReport {
    pub claim: String,
    pub inputs: serde_json::Value,
    pub expansion: serde_json::Value,
    pub nonnegative: bool,
    pub witness: Option<String>,
}

impl VerdictReport {
    pub fn for_kschur_expansion(
        claim: impl Into<String>,
        inputs: serde_json::Value,
        exp: &KSchurExpansion,
    ) -> Self {
        let clean = exp.is_clean();
        let nonneg = exp.all_nonnegative();
        let witness = if !clean {
            Some(format!("residual: {}", exp.residual.render()))
        } else {
            exp.coeffs.iter().find_map(|(lam, c)| {
                c.first_negative_term()
                    .map(|((a, b), v)| format!("coefficient of {lam} has {v} q^{a} t^{b}"))
            })
        };
        VerdictReport {
            claim: claim.into(),
            inputs,
            expansion: serde_json::to_value(exp).unwrap_or(serde_json::Value::Null),
            nonnegative: clean && nonneg,
            witness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn peel_roundtrip() {
        let s21 = schur_monomials(&p(&[2, 1]), 3).unwrap();
        let exp = schur_peel(&s21).unwrap();
        assert_eq!(exp.coeffs().len(), 1);
        assert!(exp.coeff(&p(&[2, 1])).is_one());
        assert!(schur_peel(&SymPolynomial::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn peel_square_of_e1() {
        // (x1+x2)^2 = s_2 + s_{11}
        let e1 = schur_monomials(&p(&[1]), 2).unwrap();
        let sq = e1.mul(&e1).unwrap();
        let exp = schur_peel(&sq).unwrap();
        assert!(exp.coeff(&p(&[2])).is_one());
        assert!(exp.coeff(&p(&[1, 1])).is_one());
        assert_eq!(exp.coeffs().len(), 2);
    }

    #[test]
    fn peel_rejects_asymmetric() {
        let f = SymPolynomial::monomial(2, vec![2, 1], QTPolynomial::one());
        assert!(matches!(schur_peel(&f), Err(Error::NotSymmetric)));
    }

    #[test]
    fn classical_pieri() {
        // s_1 * s_1 = s_2 + s_{11} in two variables
        let s1 = schur_monomials(&p(&[1]), 2).unwrap();
        let exp = schur_peel(&s1.mul(&s1).unwrap()).unwrap();
        assert!(exp.coeff(&p(&[2])).is_one());
        assert!(exp.coeff(&p(&[1, 1])).is_one());
    }

    #[test]
    fn lr_fixtures() {
        use num_bigint::BigInt;
        assert_eq!(
            lr_coeff(&Partition::empty(), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), BigInt::from(1));
        assert_eq!(
            lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(),
            BigInt::from(2)
        );
        assert!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[3])).is_err());
    }

    #[test]
    fn lr_symmetry_and_positivity() {
        for mu in enumerate_partitions(2) {
            for nu in enumerate_partitions(3) {
                for lam in enumerate_partitions(5) {
                    let a = lr_coeff(&mu, &nu, &lam).unwrap();
                    let b = lr_coeff(&nu, &mu, &lam).unwrap();
                    assert_eq!(a, b);
                    assert!(a >= 0.into());
                }
            }
        }
    }

    #[test]
    fn e1_skew_fixtures() {
        let f = SchurExpansion::single(3, p(&[1]));
        let g = e1_skew(&f);
        assert!(g.coeff(&Partition::empty()).is_one());
        let f = SchurExpansion::single(3, p(&[2, 1]));
        let g = e1_skew(&f);
        assert!(g.coeff(&p(&[2])).is_one());
        assert!(g.coeff(&p(&[1, 1])).is_one());
        assert_eq!(g.coeffs().len(), 2);
    }

    #[test]
    fn expand_basis_vector() {
        let f = kschur(&p(&[2, 1]), 2, None).unwrap();
        let e = kschur_expand(&f, 2).unwrap();
        assert!(e.is_clean());
        assert_eq!(e.coeffs.len(), 1);
        assert!(e.coeff(&p(&[2, 1])).is_one());
    }

    #[test]
    fn expand_detects_outside_span() {
        // s_3 alone is not in the 2-bounded span
        let f = SchurExpansion::single(4, p(&[3]));
        let e = kschur_expand(&f, 2).unwrap();
        assert!(!e.is_clean());
        assert!(e.residual.coeff(&p(&[3])).is_one());
    }

    #[test]
    fn coproduct_trivial_split() {
        let exp = coproduct_expand(&p(&[2, 1]), 2, 3, 0).unwrap();
        assert!(exp.is_clean());
        assert_eq!(exp.coeffs.len(), 1);
        assert!(exp.coeffs[&(p(&[2, 1]), Partition::empty())].is_one());
    }

    #[test]
    fn coproduct_11_split() {
        // s^(1)_{11} = s_{11} + q s_2, so the cross block of the coproduct
        // is (1+q) s_1(X) s_1(Y): a single pair with coefficient 1 + q.
        let exp = coproduct_expand(&p(&[1, 1]), 1, 1, 1).unwrap();
        assert!(exp.is_clean());
        assert!(exp.all_nonnegative());
        assert_eq!(exp.coeffs.len(), 1);
        let expected = &QTPolynomial::one() + &QTPolynomial::q_power(1);
        assert_eq!(exp.coeffs[&(p(&[1]), p(&[1]))], expected);
    }
}
