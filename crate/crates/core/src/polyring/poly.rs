use std::cmp::Ordering;

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::order::TermOrder;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Coeff, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// A polynomial in canonical form: terms strictly descending under the order
/// it was built with, no zero coefficients, no repeated monomials.
///
/// The order is not stored. Every operation that has to compare monomials
/// takes the [`TermOrder`] explicitly, and mixing orders on one value is a
/// logic error.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn monomial(c: Coeff, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![Term::new(c, m)],
            }
        }
    }

    /// Sorts and combines arbitrary terms into canonical form.
    pub fn from_terms(mut terms: Vec<Term>, ord: &TermOrder) -> Self {
        terms.sort_by(|a, b| ord.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for term in terms {
            match out.last_mut() {
                Some(last) if last.mono == term.mono => {
                    last.coeff = &last.coeff + &term.coeff;
                }
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(term);
                }
            }
        }
        if out.last().is_some_and(|t| t.coeff.is_zero()) {
            out.pop();
        }
        Polynomial { terms: out }
    }

    /// Wraps terms that are already strictly descending and zero-free.
    pub fn from_sorted_terms(terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { terms }
    }

    /// Leading term and the remaining tail. Panics on zero.
    pub fn split_first(mut self) -> (Term, Self) {
        let head = self.terms.remove(0);
        (head, self)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial. Panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    /// Leading coefficient. Panics on zero.
    pub fn lc(&self) -> &Coeff {
        &self.terms[0].coeff
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.degree();
                self.terms.iter().all(|t| t.mono.degree() == d)
            }
        }
    }

    /// The degree-`d` homogeneous part `f_d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.mono.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Smallest `s` with `f_s != 0`.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    /// `f_s` for `s` the lowest degree present.
    pub fn lowest_form(&self) -> Result<Self> {
        let s = self.lowest_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(s))
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-&t.coeff, t.mono))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono))
                .collect(),
        }
    }

    /// `c * m * self`. Term orders are multiplicative, so no resort is needed.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.mul(m)))
                .collect(),
        }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn make_monic(&mut self) {
        if let Some(first) = self.terms.first() {
            if !first.coeff.is_one() {
                let inv = first.coeff.recip();
                for t in &mut self.terms {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
    }

    pub fn monic(mut self) -> Self {
        self.make_monic();
        self
    }

    pub fn add(&self, other: &Self, ord: &TermOrder) -> Self {
        self.combine(other, &Coeff::one(), &Monomial::one(), ord)
    }

    pub fn sub(&self, other: &Self, ord: &TermOrder) -> Self {
        self.combine(other, &-Coeff::one(), &Monomial::one(), ord)
    }

    /// `self - c * m * other`, the elementary reduction step.
    pub fn sub_mul_term(&self, c: &Coeff, m: &Monomial, other: &Self, ord: &TermOrder) -> Self {
        self.combine(other, &-c, m, ord)
    }

    /// Merge of `self + c * m * other`.
    fn combine(&self, other: &Self, c: &Coeff, m: &Monomial, ord: &TermOrder) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(tb)) => {
                    out.push(Term::new(&tb.coeff * c, tb.mono.mul(m)));
                    b.next();
                }
                (Some(ta), Some(tb)) => {
                    let mb = tb.mono.mul(m);
                    match ord.compare(&ta.mono, &mb) {
                        Ordering::Greater => out.push(a.next().unwrap().clone()),
                        Ordering::Less => {
                            out.push(Term::new(&tb.coeff * c, mb));
                            b.next();
                        }
                        Ordering::Equal => {
                            let sum = &ta.coeff + &(&tb.coeff * c);
                            if !sum.is_zero() {
                                out.push(Term::new(sum, mb));
                            }
                            a.next();
                            b.next();
                        }
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul(&self, other: &Self, ord: &TermOrder) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.len() == 1 {
            let t = &self.terms[0];
            return other.mul_term(&t.coeff, &t.mono);
        }
        if other.len() == 1 {
            let t = &other.terms[0];
            return self.mul_term(&t.coeff, &t.mono);
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term::new(&a.coeff * &b.coeff, a.mono.mul(&b.mono)));
            }
        }
        Self::from_terms(terms, ord)
    }

    /// Image under `t -> 1`.
    pub fn substitute_t_one(&self, ord: &TermOrder) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), t.mono.without_t()))
                .collect(),
            ord,
        )
    }

    /// Checks the canonical-form invariant against `ord`.
    pub fn is_canonical(&self, ord: &TermOrder) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| ord.compare(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }
}
