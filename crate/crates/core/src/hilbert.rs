//! Hilbert series, dimension and degree of `S / I` for a monomial ideal `I`.
//!
//! With `HS(S/I) = N(q) / (1 - q)^nvars` and `N(q) = (1 - q)^c * Q(q)`,
//! `Q(1) != 0`, the quotient has Krull dimension `nvars - c` and degree `Q(1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{minimalize, MonomialIdeal};
use crate::polyring::{Monomial, SLOTS};

/// Generator counts at or below which the plain one-generator recursion is
/// used instead of pivoting on a variable.
const DIRECT_LIMIT: usize = 3;

/// Integer coefficients of `N(q)`, lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertNumerator(Vec<i64>);

impl HilbertNumerator {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DimDegree {
    pub dimension: usize,
    pub degree: u64,
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a - q^shift * b`, or `a + ...` when `sign` is positive.
fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize, sign: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] += sign * c;
    }
}

/// `1 - q^d`.
fn one_minus_q_pow(d: u32) -> Vec<i64> {
    let mut p = vec![0; d as usize + 1];
    p[0] = 1;
    p[d as usize] -= 1;
    p
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let mut seen = 0u32;
    for g in gens {
        if seen & g.mask() != 0 {
            return false;
        }
        seen |= g.mask();
    }
    true
}

/// Numerator of a minimal generating set.
fn numerator_of(gens: &[Monomial]) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if pairwise_coprime(gens) {
        return gens
            .iter()
            .fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_q_pow(g.degree())));
    }
    if gens.len() <= DIRECT_LIMIT {
        // N(J + <m>) = N(J) - q^deg(m) N(J : m)
        let (m, rest) = gens.split_last().unwrap();
        let mut out = numerator_of(rest);
        let colon = minimalize(rest.iter().map(|g| g.colon(m)).collect());
        poly_add_shifted(&mut out, &numerator_of(&colon), m.degree() as usize, -1);
        return out;
    }
    // N(I) = N(I + <x>) + q N(I : x) for the most frequent variable x
    let mut counts = [0usize; SLOTS];
    for g in gens {
        for (s, _) in g.support() {
            counts[s] += 1;
        }
    }
    let pivot = (0..SLOTS).max_by_key(|&s| (counts[s], std::cmp::Reverse(s))).unwrap();
    let x = Monomial::var(pivot);
    let without: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).copied().collect();
    let mut out = poly_mul(&numerator_of(&without), &[1, -1]);
    let colon = minimalize(gens.iter().map(|g| g.colon(&x)).collect());
    poly_add_shifted(&mut out, &numerator_of(&colon), 1, 1);
    out
}

/// Hilbert series numerator of `S / I` with `S` in `nvars` variables.
pub fn numerator(ideal: &MonomialIdeal) -> HilbertNumerator {
    HilbertNumerator(trim(numerator_of(ideal.gens())))
}

/// Krull dimension and degree of `S / I`.
///
/// For a zero-dimensional quotient the degree is the number of standard
/// monomials.
pub fn dim_degree(ideal: &MonomialIdeal) -> Result<DimDegree> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal(format!("{:?}", ideal.render())));
    }
    let mut q = numerator(ideal).0;
    let mut c = 0;
    while q.iter().sum::<i64>() == 0 {
        // divide by (1 - q): prefix sums, the last one is the zero remainder
        let mut acc = 0;
        let mut quotient = Vec::with_capacity(q.len() - 1);
        for &a in &q[..q.len() - 1] {
            acc += a;
            quotient.push(acc);
        }
        q = trim(quotient);
        c += 1;
    }
    let degree = q.iter().sum::<i64>();
    debug_assert!(degree > 0);
    Ok(DimDegree {
        dimension: ideal.nvars() - c,
        degree: degree as u64,
    })
}

/// Number of degree-`d` monomials in `nvars` variables outside `I`, by
/// direct enumeration.
pub fn standard_monomial_count(ideal: &MonomialIdeal, d: u32) -> u64 {
    fn rec(ideal: &MonomialIdeal, slot: usize, left: u32, cur: Monomial) -> u64 {
        if ideal.contains(&cur) {
            return 0;
        }
        if slot + 1 == ideal.nvars() {
            let full = cur.mul(&Monomial::var_pow(slot, left as u8));
            return u64::from(!ideal.contains(&full));
        }
        (0..=left)
            .map(|e| rec(ideal, slot + 1, left - e, cur.mul(&Monomial::var_pow(slot, e as u8))))
            .sum()
    }
    if ideal.nvars() == 0 {
        return u64::from(d == 0 && !ideal.is_unit());
    }
    rec(ideal, 0, d, Monomial::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::z_slot;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn z(i: usize, j: usize) -> Monomial {
        Monomial::var(z_slot(i, j))
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(numerator(&MonomialIdeal::empty(6)).coeffs(), &[1]);
        assert_eq!(numerator(&MonomialIdeal::new(vec![z(1, 1)], 6)).coeffs(), &[1, -1]);
        let i = MonomialIdeal::new(vec![z(1, 1), z(2, 1).mul(&z(1, 3))], 6);
        // (1 - q)(1 - q^2)
        assert_eq!(numerator(&i).coeffs(), &[1, -1, -1, 1]);
    }

    #[test]
    fn dim_degree_examples() {
        let i = MonomialIdeal::new(vec![z(1, 1), z(2, 1).mul(&z(1, 3))], 6);
        assert_eq!(dim_degree(&i).unwrap(), DimDegree { dimension: 4, degree: 2 });
        for nvars in [1, 6, 15] {
            assert_eq!(
                dim_degree(&MonomialIdeal::empty(nvars)).unwrap(),
                DimDegree { dimension: nvars, degree: 1 }
            );
        }
        let point = MonomialIdeal::new((0..15).map(Monomial::var).collect(), 15);
        assert_eq!(dim_degree(&point).unwrap(), DimDegree { dimension: 0, degree: 1 });
        let fat = MonomialIdeal::new(vec![Monomial::var_pow(0, 2), Monomial::var_pow(1, 3)], 2);
        assert_eq!(dim_degree(&fat).unwrap(), DimDegree { dimension: 0, degree: 6 });
        assert!(dim_degree(&MonomialIdeal::new(vec![Monomial::one()], 3)).is_err());
    }

    #[test]
    fn standard_monomial_count_examples() {
        assert_eq!(standard_monomial_count(&MonomialIdeal::empty(2), 3), 4);
        assert_eq!(standard_monomial_count(&MonomialIdeal::new(vec![Monomial::var(0)], 2), 2), 1);
        // {z11, z21 z13} in 6 variables: Hilbert polynomial 2 * d^3 / 3! + ...
        let i = MonomialIdeal::new(vec![z(1, 1), z(2, 1).mul(&z(1, 3))], 6);
        let counts: Vec<i64> = (0..=8).map(|d| standard_monomial_count(&i, d) as i64).collect();
        let mut diffs = counts.clone();
        for _ in 0..3 {
            diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        }
        assert!(diffs.iter().skip(2).all(|&x| x == 2), "{diffs:?}");
    }

    fn random_ideal(rng: &mut impl Rng) -> MonomialIdeal {
        let nvars = rng.gen_range(1..=6);
        let count = rng.gen_range(0..=5);
        let gens = (0..count)
            .map(|_| {
                let deg = rng.gen_range(1..=4);
                let mut m = Monomial::one();
                for _ in 0..deg {
                    m = m.mul(&Monomial::var(rng.gen_range(0..nvars)));
                }
                m
            })
            .collect();
        MonomialIdeal::new(gens, nvars)
    }

    #[test]
    fn numerator_is_order_independent() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let i = random_ideal(&mut rng);
            let base = numerator_of(i.gens());
            let mut gens = i.gens().to_vec();
            gens.shuffle(&mut rng);
            assert_eq!(trim(numerator_of(&gens)), trim(base));
        }
    }

    proptest! {
        #[test]
        fn disjoint_generators_multiply(exps in prop::collection::vec(1u8..4, 1..6)) {
            // one generator per variable, each a pure power
            let gens: Vec<Monomial> = exps.iter().enumerate().map(|(s, &e)| Monomial::var_pow(s, e)).collect();
            let ideal = MonomialIdeal::new(gens.clone(), exps.len() + 2);
            let expected = gens.iter().fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_q_pow(g.degree())));
            let num = numerator(&ideal);
            prop_assert_eq!(num.coeffs(), &trim(expected)[..]);
            let dd = dim_degree(&ideal).unwrap();
            prop_assert_eq!(dd.dimension, 2);
            prop_assert_eq!(dd.degree, exps.iter().map(|&e| e as u64).product::<u64>());
        }
    }

    #[test]
    fn dimension_full_iff_empty() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let i = random_ideal(&mut rng);
            let dd = dim_degree(&i).unwrap();
            assert!(dd.degree >= 1);
            assert_eq!(dd.dimension == i.nvars(), i.is_empty());
        }
    }
}
