//! Exact polynomial arithmetic over `Q[t, z_ij : i + j <= n]`.
//!
//! [`Polynomial`] values are plain data; anything that depends on the term
//! order goes through a [`PolyRing`], which carries the group size `n` and the
//! active [`TermOrder`].

mod coeff;
mod matrix;
mod monomial;
mod order;
mod poly;

pub use coeff::Coeff;
pub use matrix::{MinorCache, PolyMatrix};
pub use monomial::{slot_z, z_slot, Monomial, Variable, SLOTS, T_SLOT};
pub use order::{TermOrder, TieBreak};
pub use poly::{Polynomial, Term};

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest group size whose `z` variables fit in a [`Monomial`].
pub const MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    n: usize,
    order: TermOrder,
}

impl PolyRing {
    pub fn new(n: usize, order: TermOrder) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::UnsupportedSize(n));
        }
        Ok(PolyRing { n, order })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// `n(n-1)/2`.
    pub fn num_z_vars(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// `t` followed by the `z` variables in reading order.
    pub fn variables(&self) -> Vec<Variable> {
        std::iter::once(Variable::T)
            .chain((0..self.num_z_vars()).map(|s| {
                let (i, j) = slot_z(s);
                Variable::Z(i, j)
            }))
            .collect()
    }

    pub fn slot(&self, v: Variable) -> usize {
        match v {
            Variable::T => T_SLOT,
            Variable::Z(i, j) => {
                assert!(i >= 1 && j >= 1 && i + j <= self.n, "z{i}{j} is not a variable for n={}", self.n);
                z_slot(i, j)
            }
        }
    }

    pub fn var(&self, v: Variable) -> Polynomial {
        Polynomial::monomial(Coeff::one(), Monomial::var(self.slot(v)))
    }

    pub fn z(&self, i: usize, j: usize) -> Polynomial {
        self.var(Variable::Z(i, j))
    }

    pub fn t(&self) -> Polynomial {
        self.var(Variable::T)
    }

    pub fn from_terms(&self, terms: Vec<Term>) -> Polynomial {
        Polynomial::from_terms(terms, &self.order)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        f.add(g, &self.order)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        f.sub(g, &self.order)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        f.mul(g, &self.order)
    }

    pub fn determinant(&self, m: &PolyMatrix) -> Result<Polynomial> {
        m.determinant(&self.order)
    }

    /// Sends `t` to 1.
    pub fn substitute_t(&self, f: &Polynomial) -> Polynomial {
        f.substitute_t_one(&self.order)
    }

    /// Resorts a polynomial built under another order.
    pub fn reorder(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms().to_vec())
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial(m)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        format_polynomial(f)
    }
}

/// `t` first, then `z` variables in reading order: `t*z21*z13`, `z11^2`.
pub fn format_monomial(m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut push = |name: String, e: u8| {
        if e == 1 {
            parts.push(name)
        } else {
            parts.push(format!("{name}^{e}"))
        }
    };
    if m.t_degree() > 0 {
        push("t".into(), m.t_degree() as u8);
    }
    for (slot, e) in m.support().filter(|&(s, _)| s != T_SLOT) {
        let (i, j) = slot_z(slot);
        push(format!("z{i}{j}"), e);
    }
    parts.join("*")
}

/// Terms in descending order joined by ` + ` / ` - `.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, term) in f.terms().iter().enumerate() {
        let negative = term.coeff.is_negative();
        let abs = if negative { -&term.coeff } else { term.coeff.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if term.mono.is_one() {
            let _ = write!(out, "{abs}");
        } else if abs.is_one() {
            out.push_str(&format_monomial(&term.mono));
        } else {
            let _ = write!(out, "{abs}*{}", format_monomial(&term.mono));
        }
    }
    out
}
