//! Finite integer-linear combinations over an ordered basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// A finite formal sum of basis elements with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, BigInt>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> LinComb<B> {
        LinComb::default()
    }

    pub fn term(basis: B, coeff: impl Into<BigInt>) -> LinComb<B> {
        let mut lc = LinComb::zero();
        lc.add_term(basis, coeff.into());
        lc
    }

    pub fn basis(basis: B) -> LinComb<B> {
        LinComb::term(basis, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, basis: &B) -> BigInt {
        self.terms.get(basis).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (B, BigInt)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, basis: B, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(basis);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<B>) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &BigInt) -> LinComb<B> {
        if factor.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (b.clone(), c * factor))
                .collect(),
        }
    }

    /// Applies a basis map and recollects, merging coefficients.
    pub fn map_basis<C: Ord + Clone>(&self, f: impl Fn(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, f: impl Fn(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (fb, fc) in f(b).terms {
                out.add_term(fb, fc * c);
            }
        }
        out
    }
}

impl<B: Ord + Clone> FromIterator<(B, BigInt)> for LinComb<B> {
    fn from_iter<T: IntoIterator<Item = (B, BigInt)>>(iter: T) -> Self {
        let mut lc = LinComb::zero();
        for (b, c) in iter {
            lc.add_term(b, c);
        }
        lc
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self.add_assign(&rhs);
        self
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        for (b, c) in rhs.terms {
            self.add_term(b, -c);
        }
        self
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

/// An elementary tensor of two basis elements; the basis of tensor squares.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<B>(pub B, pub B);

impl<B: fmt::Display> fmt::Display for Tensor<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.0, self.1)
    }
}

/// Renders one line per term, `<coeff> * <basis>`, sorted by the basis text.
pub fn format_lines<B: Ord + fmt::Display>(lc: &LinComb<B>) -> Vec<String> {
    let mut lines: Vec<(String, String)> = lc
        .iter()
        .map(|(b, c)| (b.to_string(), c.to_string()))
        .collect();
    lines.sort_by(|a, b| a.0.cmp(&b.0));
    lines
        .into_iter()
        .map(|(b, c)| format!("{c} * {b}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_vanish() {
        let mut lc = LinComb::term("a", 2);
        lc.add_term("a", BigInt::from(-2));
        assert!(lc.is_zero());
        assert_eq!(lc.coeff(&"a"), BigInt::zero());
    }

    #[test]
    fn module_laws() {
        let a = LinComb::term("x", 1) + LinComb::term("y", 3);
        let b = LinComb::term("y", -3) + LinComb::term("z", 5);
        let s = a.clone() + b.clone();
        assert_eq!(s.coeff(&"x"), BigInt::from(1));
        assert_eq!(s.coeff(&"y"), BigInt::zero());
        assert_eq!(s.coeff(&"z"), BigInt::from(5));
        assert_eq!(a.clone() - a.clone(), LinComb::zero());
        assert_eq!(b.scale(&BigInt::from(2)).coeff(&"z"), BigInt::from(10));
        assert_eq!((-a.clone()).coeff(&"y"), BigInt::from(-3));
    }

    #[test]
    fn map_linear_multiplies_coefficients() {
        let lc = LinComb::term("a", 2);
        let out = lc.map_linear(|_| LinComb::term("b", 3) + LinComb::term("c", 1));
        assert_eq!(out.coeff(&"b"), BigInt::from(6));
        assert_eq!(out.coeff(&"c"), BigInt::from(2));
    }

    #[test]
    fn lines_are_sorted_by_basis_text() {
        let lc = LinComb::term("zz", 1) + LinComb::term("aa", -4);
        assert_eq!(format_lines(&lc), vec!["-4 * aa", "1 * zz"]);
    }
}
