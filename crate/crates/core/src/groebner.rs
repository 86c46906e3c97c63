//! Buchberger's algorithm over `Q`, reduced Gröbner bases and their
//! lead-term ideals.
//!
//! The engine processes work items (S-pairs and not-yet-reduced input
//! generators) by increasing degree, which on homogeneous input yields a
//! degree-truncated basis after every completed degree. Useless pairs are
//! discarded with the Gebauer–Möller update, which applies both the product
//! (coprime leading monomials) and the chain criterion.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyring::{format_monomial, Monomial, Polynomial, TermOrder, T_SLOT};

/// Upper bound on processed work items before giving up.
const ITERATION_CAP: usize = 5_000_000;

/// Order in which pending work items are taken.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    /// Smallest degree first, oldest first within a degree.
    #[default]
    Normal,
    /// Oldest first, regardless of degree.
    Fifo,
}

#[derive(Clone, Debug)]
enum Work {
    Pair(usize, usize),
    Input(Polynomial),
}

#[derive(Clone, Debug)]
struct Item {
    work: Work,
    degree: u32,
    lcm: Monomial,
    seq: u64,
}

/// Incremental Buchberger state.
pub struct Engine {
    ord: TermOrder,
    selection: Selection,
    /// Every element ever added; pairs refer to these by index.
    polys: Vec<Polynomial>,
    /// Indices into `polys` of the current (minimal) basis, in insertion order.
    active: Vec<usize>,
    queue: Vec<Item>,
    seq: u64,
    processed: usize,
}

impl Engine {
    pub fn new(ord: TermOrder, selection: Selection) -> Self {
        Engine {
            ord,
            selection,
            polys: Vec::new(),
            active: Vec::new(),
            queue: Vec::new(),
            seq: 0,
            processed: 0,
        }
    }

    fn next_seq(&mut self) -> u64 {
        self.seq += 1;
        self.seq
    }

    pub fn push_input(&mut self, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        let seq = self.next_seq();
        self.queue.push(Item {
            degree: p.degree(),
            lcm: *p.lm(),
            work: Work::Input(p),
            seq,
        });
    }

    /// Index into `queue` of the next item with degree at most `bound`.
    fn select(&self, bound: Option<u32>) -> Option<usize> {
        let eligible = self
            .queue
            .iter()
            .enumerate()
            .filter(|(_, it)| bound.is_none_or(|b| it.degree <= b));
        match self.selection {
            Selection::Normal => eligible.min_by_key(|(_, it)| (it.degree, it.seq)),
            Selection::Fifo => eligible.min_by_key(|(_, it)| it.seq),
        }
        .map(|(k, _)| k)
    }

    /// Processes every pending item of degree at most `bound` (all items when
    /// `None`), including the ones spawned along the way.
    pub fn complete_through(&mut self, bound: Option<u32>) -> Result<()> {
        while let Some(k) = self.select(bound) {
            self.processed += 1;
            if self.processed > ITERATION_CAP {
                return Err(Error::IterationCap(ITERATION_CAP));
            }
            let item = self.queue.swap_remove(k);
            let candidate = match item.work {
                Work::Input(p) => p,
                Work::Pair(i, j) => s_polynomial(&self.polys[i], &self.polys[j], &self.ord),
            };
            let h = self.reduce(&candidate);
            if !h.is_zero() {
                self.insert(h.monic());
            }
        }
        Ok(())
    }

    /// Full normal form with respect to the current basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let basis: Vec<&Polynomial> = self.active.iter().map(|&k| &self.polys[k]).collect();
        reduce_by(f, &basis, &self.ord)
    }

    /// Gebauer–Möller update for a new, fully reduced, monic element `h`.
    fn insert(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        let lh = *h.lm();
        self.polys.push(h);

        // candidate pairs (g, h), g active
        let cands: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, self.polys[g].lm().lcm(&lh)))
            .collect();
        let coprime = |g: usize| self.polys[g].lm().is_coprime(&lh);

        // chain criterion among the new pairs: drop (g, h) when another new
        // pair's lcm properly divides it; among equal lcms keep one, and
        // prefer the coprime one, which then vanishes with the product criterion
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            let (ga, la) = cands[a];
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let lb = cands[b].1;
                if lb.divides(&la) {
                    if lb != la {
                        keep[a] = false;
                        break;
                    }
                    // equal lcm: drop `a` unless it is the coprime one, or the
                    // earlier one when neither is
                    let (ca, cb) = (coprime(ga), coprime(cands[b].0));
                    if cb && !ca || (ca == cb && b < a) {
                        keep[a] = false;
                        break;
                    }
                }
            }
        }

        // chain criterion on old pairs
        let polys = &self.polys;
        self.queue.retain(|it| match it.work {
            Work::Input(_) => true,
            Work::Pair(i, j) => {
                !lh.divides(&it.lcm)
                    || polys[i].lm().lcm(&lh) == it.lcm
                    || polys[j].lm().lcm(&lh) == it.lcm
            }
        });

        // product criterion, then enqueue
        let mut new_items = Vec::new();
        for (k, &(g, lcm)) in cands.iter().enumerate() {
            if keep[k] && !coprime(g) {
                new_items.push((g, lcm));
            }
        }
        for (g, lcm) in new_items {
            let seq = self.next_seq();
            self.queue.push(Item {
                work: Work::Pair(g, hi),
                degree: lcm.degree(),
                lcm,
                seq,
            });
        }

        // elements whose leading monomial is now redundant leave the basis
        let polys = &self.polys;
        self.active.retain(|&g| !lh.divides(polys[g].lm()));
        self.active.push(hi);
    }

    pub fn pending(&self) -> usize {
        self.queue.len()
    }

    /// Finishes the computation and interreduces.
    pub fn finish(mut self) -> Result<GroebnerBasis> {
        self.complete_through(None)?;
        let minimal: Vec<Polynomial> = self.active.iter().map(|&k| self.polys[k].clone()).collect();
        Ok(GroebnerBasis::from_minimal(minimal, self.ord))
    }
}

/// Full reduction of `f` by `basis`: afterwards no term is divisible by a
/// leading monomial of `basis`. Divisors are tried in the order given.
fn reduce_by(f: &Polynomial, basis: &[&Polynomial], ord: &TermOrder) -> Polynomial {
    let mut rest = f.clone();
    let mut done: Vec<crate::polyring::Term> = Vec::new();
    while let Some(lt) = rest.leading_term() {
        let mono = lt.mono;
        match basis.iter().find(|g| g.lm().divides(&mono)) {
            Some(g) => {
                let q = g.lm().divide_into(&mono).unwrap();
                let c = if g.lc().is_one() {
                    lt.coeff.clone()
                } else {
                    &lt.coeff * &g.lc().recip()
                };
                rest = rest.sub_mul_term(&c, &q, g, ord);
            }
            None => {
                let (head, tail) = rest.split_first();
                done.push(head);
                rest = tail;
            }
        }
    }
    Polynomial::from_sorted_terms(done)
}

/// `normal_form` of `f` modulo `basis` under `ord`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &TermOrder) -> Polynomial {
    let refs: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    reduce_by(f, &refs, ord)
}

/// `lcm/LT(f) * f - lcm/LT(g) * g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Polynomial {
    let lcm = f.lm().lcm(g.lm());
    let mf = f.lm().divide_into(&lcm).unwrap();
    let mg = g.lm().divide_into(&lcm).unwrap();
    let left = f.mul_term(&f.lc().recip(), &mf);
    left.sub_mul_term(&g.lc().recip(), &mg, g, ord)
}

/// Reduced Gröbner basis with the default (normal) pair selection.
pub fn buchberger(gens: &[Polynomial], ord: &TermOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, ord, Selection::Normal)
}

pub fn buchberger_with(gens: &[Polynomial], ord: &TermOrder, selection: Selection) -> Result<GroebnerBasis> {
    let mut engine = Engine::new(ord.clone(), selection);
    for g in gens {
        engine.push_input(g.clone());
    }
    engine.finish()
}

/// A reduced Gröbner basis: monic elements, no leading monomial divides
/// another element's monomials except its own leading one. Sorted by
/// leading monomial, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    fn from_minimal(minimal: Vec<Polynomial>, ord: TermOrder) -> Self {
        let mut basis = Vec::with_capacity(minimal.len());
        for (k, g) in minimal.iter().enumerate() {
            let others: Vec<&Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, p)| p)
                .collect();
            let (head, tail) = g.clone().split_first();
            let reduced_tail = reduce_by(&tail, &others, &ord);
            let mut terms = vec![head];
            terms.extend(reduced_tail.terms().iter().cloned());
            basis.push(Polynomial::from_sorted_terms(terms).monic());
        }
        basis.sort_by(|a, b| ord.compare(b.lm(), a.lm()));
        GroebnerBasis { order: ord, basis }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.basis, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every pairwise S-polynomial reduces to zero.
    pub fn is_certified(&self) -> bool {
        (0..self.basis.len()).all(|i| {
            (i + 1..self.basis.len()).all(|j| {
                self.contains(&s_polynomial(&self.basis[i], &self.basis[j], &self.order))
            })
        })
    }

    /// Minimality and reducedness.
    pub fn is_reduced(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, g)| {
            g.lc().is_one()
                && self.basis.iter().enumerate().all(|(j, h)| {
                    i == j || g.terms().iter().all(|t| !h.lm().divides(&t.mono))
                })
        })
    }

    pub fn lead_term_ideal(&self) -> MonomialIdeal {
        lead_term_ideal(self)
    }
}

/// Lead-term ideal of a basis, over `nvars` z-variables plus `t`.
pub fn lead_term_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    let nvars = gb
        .basis
        .iter()
        .flat_map(|g| g.terms())
        .flat_map(|t| t.mono.support())
        .filter(|&(s, _)| s != T_SLOT)
        .map(|(s, _)| s + 1)
        .max()
        .unwrap_or(0);
    MonomialIdeal::new(gb.basis.iter().map(|g| *g.lm()).collect(), nvars)
}

/// Sets `t = 1` in every generator and re-minimalizes.
pub fn eliminate_t(ideal: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal::new(ideal.gens.iter().map(|m| m.without_t()).collect(), ideal.nvars)
}

/// Monomial ideal with a minimal generating set.
///
/// The ambient ring has the z-slots `0..nvars`; generators may additionally
/// involve `t`. Generators are kept sorted by degree, then by exponent vector
/// (descending), so equal ideals compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
    nvars: usize,
}

impl MonomialIdeal {
    pub fn new(gens: Vec<Monomial>, nvars: usize) -> Self {
        debug_assert!(gens
            .iter()
            .all(|m| m.support().all(|(s, _)| s < nvars || s == T_SLOT)));
        MonomialIdeal {
            gens: minimalize(gens),
            nvars,
        }
    }

    pub fn empty(nvars: usize) -> Self {
        MonomialIdeal { gens: Vec::new(), nvars }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn render(&self) -> Vec<String> {
        self.gens.iter().map(format_monomial).collect()
    }
}

/// Removes duplicates and multiples; canonical order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| match a.degree().cmp(&b.degree()) {
        Ordering::Equal => b.exponents().cmp(a.exponents()),
        other => other,
    });
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}
