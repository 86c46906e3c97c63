use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::monomial::{Monomial, T_SLOT};

/// How monomials with equal `t`-degree are compared.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum TieBreak {
    #[default]
    Grevlex,
    Lex,
}

impl TieBreak {
    pub fn name(&self) -> &'static str {
        match self {
            TieBreak::Grevlex => "grevlex",
            TieBreak::Lex => "lex",
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TieBreak {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "grevlex" => Ok(TieBreak::Grevlex),
            "lex" => Ok(TieBreak::Lex),
            other => Err(format!("unknown tie-break '{other}' (expected grevlex or lex)")),
        }
    }
}

/// `t`-elimination order: larger `t`-exponent is larger, ties broken by
/// grevlex or lex on the `z` variables.
///
/// On homogeneous polynomials this puts the lowest `z`-degree part first.
/// The `z` variables are ranked by `listing` (highest first); the default
/// listing is slot order, i.e. `z11 > z12 > z21 > z13 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TermOrder {
    tie_break: TieBreak,
    listing: Option<Vec<usize>>,
}

impl TermOrder {
    pub fn new(tie_break: TieBreak) -> Self {
        TermOrder {
            tie_break,
            listing: None,
        }
    }

    pub fn grevlex() -> Self {
        Self::new(TieBreak::Grevlex)
    }

    pub fn lex() -> Self {
        Self::new(TieBreak::Lex)
    }

    /// A custom ranking of the `z` slots, highest first. `listing` must be a
    /// permutation of `0..listing.len()`.
    pub fn with_listing(tie_break: TieBreak, listing: Vec<usize>) -> Self {
        let mut sorted = listing.clone();
        sorted.sort_unstable();
        assert!(
            sorted.iter().enumerate().all(|(k, &s)| k == s) && listing.len() < T_SLOT,
            "variable listing must be a permutation of the z slots"
        );
        TermOrder {
            tie_break,
            listing: Some(listing),
        }
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie_break
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let t = a.t_degree().cmp(&b.t_degree());
        if t != Ordering::Equal {
            return t;
        }
        let (ea, eb) = (a.exponents(), b.exponents());
        match (self.tie_break, &self.listing) {
            (TieBreak::Grevlex, listing) => {
                let d = a.z_degree().cmp(&b.z_degree());
                if d != Ordering::Equal {
                    return d;
                }
                match listing {
                    None => {
                        for s in (0..T_SLOT).rev() {
                            if ea[s] != eb[s] {
                                return eb[s].cmp(&ea[s]);
                            }
                        }
                    }
                    Some(l) => {
                        for &s in l.iter().rev() {
                            if ea[s] != eb[s] {
                                return eb[s].cmp(&ea[s]);
                            }
                        }
                    }
                }
                Ordering::Equal
            }
            (TieBreak::Lex, None) => ea[..T_SLOT].cmp(&eb[..T_SLOT]),
            (TieBreak::Lex, Some(l)) => {
                for &s in l {
                    if ea[s] != eb[s] {
                        return ea[s].cmp(&eb[s]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomial::z_slot;
    use proptest::prelude::*;

    fn z(i: usize, j: usize) -> Monomial {
        Monomial::var(z_slot(i, j))
    }

    #[test]
    fn t_dominates() {
        let lhs = Monomial::t().mul(&z(2, 1)).mul(&z(1, 3));
        let rhs = z(3, 1).mul(&z(2, 2)).mul(&z(1, 3));
        for ord in [TermOrder::grevlex(), TermOrder::lex()] {
            assert_eq!(ord.compare(&lhs, &rhs), Ordering::Greater);
            assert_eq!(ord.compare(&rhs, &rhs), Ordering::Equal);
            // any t-power beats any z-monomial
            let big = Monomial::var_pow(0, 9);
            assert_eq!(ord.compare(&Monomial::t(), &big), Ordering::Greater);
        }
    }

    #[test]
    fn default_tie_breaks() {
        let g = TermOrder::grevlex();
        assert_eq!(g.compare(&z(1, 1), &z(1, 2)), Ordering::Greater);
        // grevlex: the monomial with the smaller exponent in the last differing slot wins
        let a = z(2, 1).mul(&z(1, 3));
        let b = z(1, 2).mul(&z(3, 1));
        assert_eq!(g.compare(&a, &b), Ordering::Greater);
        // lex: z12 outranks z21
        assert_eq!(TermOrder::lex().compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn custom_listing_reverses_ranking() {
        let ord = TermOrder::with_listing(TieBreak::Lex, (0..6).rev().collect());
        assert_eq!(ord.compare(&z(1, 1), &z(3, 1)), Ordering::Less);
        let ord = TermOrder::with_listing(TieBreak::Grevlex, (0..6).rev().collect());
        assert_eq!(ord.compare(&z(1, 1), &z(1, 2)), Ordering::Less);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        (prop::collection::vec(0u8..3, 6), 0u8..3).prop_map(|(mut e, t)| {
            e.resize(T_SLOT + 1, 0);
            e[T_SLOT] = t;
            Monomial::from_exponents(&e)
        })
    }

    fn orders() -> Vec<TermOrder> {
        vec![
            TermOrder::grevlex(),
            TermOrder::lex(),
            TermOrder::with_listing(TieBreak::Grevlex, vec![3, 1, 5, 0, 2, 4]),
            TermOrder::with_listing(TieBreak::Lex, vec![3, 1, 5, 0, 2, 4]),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn total_multiplicative_order(a in mono(), b in mono(), c in mono()) {
            for ord in orders() {
                let ab = ord.compare(&a, &b);
                prop_assert_eq!(ab, ord.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab == Ordering::Greater {
                    prop_assert_eq!(ord.compare(&a.mul(&c), &b.mul(&c)), Ordering::Greater);
                    if ord.compare(&b, &c) == Ordering::Greater {
                        prop_assert_eq!(ord.compare(&a, &c), Ordering::Greater);
                    }
                }
                prop_assert_ne!(ord.compare(&Monomial::one(), &a), Ordering::Greater);
            }
        }
    }
}
