//! Integer Laurent polynomials in the formal variables `q` and `t`.
//!
//! Coefficients are arbitrary-precision integers ([`BigInt`]); Kostka and
//! Macdonald coefficients outgrow machine words quickly, and nothing here is
//! ever allowed to round. The representation is a sorted sparse map from
//! `(q_exponent, t_exponent)` to a nonzero coefficient, so iteration order,
//! equality and serialization are all canonical.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A Laurent polynomial in `q` and `t` with `BigInt` coefficients.
///
/// Invariant: no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct QTPolynomial {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        QTPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// The monomial `c * q^a * t^b`. Zero `c` gives the zero polynomial.
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        QTPolynomial { terms }
    }

    pub fn q_power(a: i64) -> Self {
        Self::monomial(1, a, 0)
    }

    pub fn t_power(b: i64) -> Self {
        Self::monomial(1, 0, b)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// True iff every coefficient is positive (the polynomial lies in
    /// `Z>=0[q^{\pm},t^{\pm}]`).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// The first term with a negative coefficient, if any.
    pub fn first_negative_term(&self) -> Option<((i64, i64), BigInt)> {
        self.terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(k, c)| (*k, c.clone()))
    }

    /// True iff all exponents of both variables are nonnegative.
    pub fn has_nonnegative_exponents(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    /// True iff no `t` appears (pure polynomial in `q`).
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|&(_, b)| b == 0)
    }

    /// True iff the polynomial is `c * q^a` for a single term, returning `(c, a)`.
    pub fn as_pure_q_power(&self) -> Option<(BigInt, i64)> {
        if self.terms.len() == 1 {
            let (&(a, b), c) = self.terms.iter().next().unwrap();
            if b == 0 {
                return Some((c.clone(), a));
            }
        }
        None
    }

    pub fn max_q_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn min_q_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(a, _)| a).min()
    }

    pub fn max_t_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Discard all terms with `q`-exponent above `qmax`.
    pub fn truncate_q(&self, qmax: i64) -> Self {
        QTPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, _), _)| a <= qmax)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Evaluate at `q = 1, t = 1` (the total coefficient sum).
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute `q -> 0` (keep only terms with `q`-exponent zero).
    pub fn specialize_q_zero(&self) -> Self {
        QTPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, _), _)| a == 0)
                .map(|(&(_, b), v)| ((0, b), v.clone()))
                .collect(),
        }
    }

    /// Substitute `t -> 0` (keep only terms with `t`-exponent zero).
    pub fn specialize_t_zero(&self) -> Self {
        QTPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, b), _)| b == 0)
                .map(|(&(a, _), v)| ((a, 0), v.clone()))
                .collect(),
        }
    }

    /// Swap the two variables: `q <-> t`.
    pub fn swap_qt(&self) -> Self {
        QTPolynomial {
            terms: self.terms.iter().map(|(&(a, b), v)| ((b, a), v.clone())).collect(),
        }
    }

    /// Map `q^a -> q^{shift-a}` (degree reversal in `q`); `t` untouched.
    pub fn reverse_q(&self, shift: i64) -> Self {
        QTPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((shift - a, b), v.clone()))
                .collect(),
        }
    }

    /// Map `t^b -> t^{shift-b}` (degree reversal in `t`); `q` untouched.
    pub fn reverse_t(&self, shift: i64) -> Self {
        QTPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a, shift - b), v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTPolynomial {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Render with `^` for powers, e.g. `q + q^2`, `2qt^3`, `1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let vars = format!("{}{}", power(a, 'q'), power(b, 't'));
            if vars.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                }
                out.push_str(&vars);
            }
        }
        out
    }
}

fn power(e: i64, v: char) -> String {
    match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QT({})", self.render())
    }
}

impl AddAssign<&QTPolynomial> for QTPolynomial {
    fn add_assign(&mut self, rhs: &QTPolynomial) {
        for (&(a, b), c) in rhs.terms.iter() {
            self.add_term(a, b, c);
        }
    }
}

impl SubAssign<&QTPolynomial> for QTPolynomial {
    fn sub_assign(&mut self, rhs: &QTPolynomial) {
        for (&(a, b), c) in rhs.terms.iter() {
            self.add_term(a, b, &(-c));
        }
    }
}

impl Add for &QTPolynomial {
    type Output = QTPolynomial;
    fn add(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QTPolynomial {
    type Output = QTPolynomial;
    fn sub(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &QTPolynomial {
    type Output = QTPolynomial;
    fn neg(self) -> QTPolynomial {
        QTPolynomial {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Mul for &QTPolynomial {
    type Output = QTPolynomial;
    fn mul(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = QTPolynomial::zero();
        for (&(a1, b1), c1) in self.terms.iter() {
            for (&(a2, b2), c2) in rhs.terms.iter() {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}

/// One `c * q^a * t^b` term in the wire format: the coefficient travels as a
/// decimal string so arbitrary-precision values survive JSON round trips.
#[derive(Serialize, Deserialize)]
struct TermJson {
    q: i64,
    t: i64,
    c: String,
}

impl Serialize for QTPolynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| TermJson { q: a, t: b, c: c.to_string() })
            .collect();
        terms.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QTPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(de)?;
        let mut out = QTPolynomial::zero();
        for term in terms {
            let c: BigInt = term
                .c
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad integer: {}", term.c)))?;
            out.add_term(term.q, term.t, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverse() {
        let f = &QTPolynomial::monomial(3, 1, 2) + &QTPolynomial::q_power(4);
        assert!((&f - &f).is_zero());
        assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn binomial_square() {
        // (1 + q)^2 = 1 + 2q + q^2
        let f = &QTPolynomial::one() + &QTPolynomial::q_power(1);
        let sq = &f * &f;
        assert_eq!(sq.coeff(0, 0), 1.into());
        assert_eq!(sq.coeff(1, 0), 2.into());
        assert_eq!(sq.coeff(2, 0), 1.into());
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn render_forms() {
        assert_eq!(QTPolynomial::zero().render(), "0");
        assert_eq!(QTPolynomial::one().render(), "1");
        let f = &QTPolynomial::q_power(1) + &QTPolynomial::q_power(2);
        assert_eq!(f.render(), "q + q^2");
        let g = QTPolynomial::monomial(2, 1, 3);
        assert_eq!(g.render(), "2qt^3");
        let h = &QTPolynomial::one() - &QTPolynomial::monomial(1, 1, 1);
        assert_eq!(h.render(), "1 - qt");
    }

    #[test]
    fn reversal_and_swap() {
        // q^2 t under swap -> q t^2; reverse_q(3) of q^2 t -> q t.
        let f = QTPolynomial::monomial(1, 2, 1);
        assert_eq!(f.swap_qt(), QTPolynomial::monomial(1, 1, 2));
        assert_eq!(f.reverse_q(3), QTPolynomial::monomial(1, 1, 1));
    }

    #[test]
    fn json_roundtrip_bigint() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let f = QTPolynomial::monomial(big, 5, -2);
        let s = serde_json::to_string(&f).unwrap();
        let g: QTPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }
}
