//! The homogenized determinantal ideal of a Schubert variety in the chart
//! around `X_{w0}`.
//!
//! The chart is the generic matrix with `z_ij` strictly above the main
//! antidiagonal, `t` on it and zeros below. For every cell `(i, j)` all minors
//! of size `r_ij(w) + 1` of the top-left `i x j` block vanish on `Y_w`; those
//! minors (homogeneous, thanks to `t`) generate the ideal.

use std::collections::HashSet;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::groebner::Engine;
use crate::polyring::{MinorCache, PolyMatrix, PolyRing, Polynomial, TermOrder};

/// Nonzero, deduplicated generators of the ideal of `Y_w`, each scaled to
/// leading coefficient 1.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub w: Permutation,
    pub ring: PolyRing,
    pub gens: Vec<Polynomial>,
}

impl GeneratorSet {
    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Header line followed by one generator per line.
    pub fn render(&self) -> String {
        let mut out = format!("# w={} generators={}\n", self.w, self.gens.len());
        for g in &self.gens {
            out.push_str(&self.ring.format(g));
            out.push('\n');
        }
        out
    }
}

/// `z_ij` for `i + j <= n`, `t` for `i + j = n + 1`, 0 below.
pub fn generic_matrix(ring: &PolyRing) -> PolyMatrix {
    let n = ring.n();
    PolyMatrix::from_fn(n, n, |r, c| {
        let (i, j) = (r + 1, c + 1);
        match (i + j).cmp(&(n + 1)) {
            std::cmp::Ordering::Less => ring.z(i, j),
            std::cmp::Ordering::Equal => ring.t(),
            std::cmp::Ordering::Greater => Polynomial::zero(),
        }
    })
}

/// `k`-subsets of `0..m` as bitmasks, in lexicographic order of index tuples.
fn subsets(m: usize, k: usize) -> Vec<u64> {
    fn rec(m: usize, k: usize, start: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for x in start..=m - k {
            rec(m, k - 1, x + 1, acc | 1 << x, out);
        }
    }
    let mut out = Vec::new();
    if k <= m {
        rec(m, k, 0, 0, &mut out);
    }
    out
}

/// All minors prescribed by the rank matrix of `w`, cells in row-major
/// order, each cell's minors row-subset-major then column-subset, subsets
/// lexicographic. Zero minors are dropped and repeats (up to scalar) kept once.
pub fn generate(w: &Permutation, ord: &TermOrder) -> Result<GeneratorSet> {
    let ring = PolyRing::new(w.n(), ord.clone())?;
    let n = w.n();
    let matrix = generic_matrix(&ring);
    let rank = w.rank_matrix();
    let mut cache = MinorCache::new(&matrix);
    let mut visited = HashSet::new();
    let mut seen = HashSet::new();
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let k = rank.get(i, j) + 1;
            if k > i.min(j) {
                continue;
            }
            for rows in subsets(i, k) {
                for cols in subsets(j, k) {
                    if !visited.insert((rows, cols)) {
                        continue;
                    }
                    let minor = cache.minor(rows, cols, ord);
                    if minor.is_zero() {
                        continue;
                    }
                    let minor = minor.monic();
                    if seen.insert(minor.clone()) {
                        gens.push(minor);
                    }
                }
            }
        }
    }
    Ok(GeneratorSet {
        w: w.clone(),
        ring,
        gens,
    })
}

/// Drops generators lying in the ideal of the ones kept before them.
///
/// Generators are visited by increasing degree (stable within a degree) and a
/// degree-truncated Gröbner basis of the kept ones decides membership, so the
/// result is a minimal generating set. Requires homogeneous generators.
pub fn minimize_generators(g: &GeneratorSet) -> Result<GeneratorSet> {
    let ord = g.ring.order();
    let mut order: Vec<&Polynomial> = g.gens.iter().filter(|p| !p.is_zero()).collect();
    if order.iter().any(|p| !p.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    order.sort_by_key(|p| p.degree());
    let mut engine = Engine::new(ord.clone(), Default::default());
    let mut kept = Vec::new();
    for p in order {
        engine.complete_through(Some(p.degree()))?;
        if !engine.reduce(p).is_zero() {
            kept.push(p.clone().monic());
            engine.push_input(p.clone());
        }
    }
    Ok(GeneratorSet {
        w: g.w.clone(),
        ring: g.ring.clone(),
        gens: kept,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2), vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(subsets(3, 0), vec![0]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn generic_matrix_shape() {
        let ring = PolyRing::new(4, TermOrder::grevlex()).unwrap();
        let g = generic_matrix(&ring);
        let text: Vec<Vec<String>> = (0..4)
            .map(|i| (0..4).map(|j| ring.format(g.get(i, j))).collect())
            .collect();
        assert_eq!(
            text,
            vec![
                vec!["z11", "z12", "z13", "t"],
                vec!["z21", "z22", "t", "0"],
                vec!["z31", "t", "0", "0"],
                vec!["t", "0", "0", "0"],
            ]
        );
        let one = PolyRing::new(1, TermOrder::grevlex()).unwrap();
        assert_eq!(generic_matrix(&one).get(0, 0), &one.t());

        let five = PolyRing::new(5, TermOrder::grevlex()).unwrap();
        let g5 = generic_matrix(&five);
        assert_eq!(five.format(g5.get(0, 3)), "z14");
        assert_eq!(five.format(g5.get(3, 0)), "z41");
        assert_eq!(five.format(g5.get(0, 4)), "t");
        assert_eq!(five.format(g5.get(4, 0)), "t");
        assert!(g5.get(4, 4).is_zero());
    }

    #[test]
    fn generators_of_2143() {
        let ord = TermOrder::grevlex();
        let gs = generate(&p("2143"), &ord).unwrap();
        let r = &gs.ring;
        assert_eq!(gs.len(), 2);
        assert_eq!(gs.gens[0], r.z(1, 1));
        // the 3x3 minor with z32 = z23 = t and z33 = 0, scaled to lead coefficient 1
        let m = |a: &Polynomial, b: &Polynomial| r.mul(a, b);
        let t = r.t();
        let expected = r.sub(
            &r.add(
                &m(&t, &m(&r.z(1, 2), &r.z(3, 1))),
                &m(&t, &m(&r.z(2, 1), &r.z(1, 3))),
            ),
            &r.add(
                &m(&m(&t, &t), &r.z(1, 1)),
                &m(&r.z(3, 1), &m(&r.z(2, 2), &r.z(1, 3))),
            ),
        );
        assert_eq!(gs.gens[1], expected.clone().monic());
        assert_eq!(r.format(&gs.gens[1]), "t^2*z11 - t*z21*z13 - t*z12*z31 + z13*z22*z31");
        // t -> 1 recovers the unhomogenized generator up to sign
        let dehom = r.substitute_t(&gs.gens[1]);
        assert_eq!(r.format(&dehom.neg()), "-z13*z22*z31 + z21*z13 + z12*z31 - z11");
    }

    #[test]
    fn identity_and_longest() {
        let ord = TermOrder::grevlex();
        for n in 1..=6 {
            assert!(generate(&Permutation::identity(n), &ord).unwrap().is_empty());
            let gs = generate(&Permutation::longest(n), &ord).unwrap();
            let ring = &gs.ring;
            for i in 1..=n {
                for j in 1..=n {
                    if i + j <= n {
                        assert!(gs.gens.contains(&ring.z(i, j)), "z{i}{j} missing for n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn minors_are_homogeneous_of_their_size() {
        let ord = TermOrder::grevlex();
        for n in 4..=5 {
            let ring = PolyRing::new(n, ord.clone()).unwrap();
            let m = generic_matrix(&ring);
            let mut cache = MinorCache::new(&m);
            for k in 1..=n {
                for rows in subsets(n, k) {
                    for cols in subsets(n, k) {
                        let minor = cache.minor(rows, cols, &ord);
                        assert!(minor.is_zero() || (minor.is_homogeneous() && minor.degree() == k as u32));
                    }
                }
            }
            for w in enumerate(n) {
                for g in generate(&w, &ord).unwrap().gens {
                    assert!(g.is_homogeneous());
                    assert!(g.lc().is_one());
                }
            }
        }
    }

    #[test]
    fn minimize_examples() {
        let ord = TermOrder::grevlex();
        let w = p("2143");
        let ring = PolyRing::new(4, ord.clone()).unwrap();
        let z11 = ring.z(1, 1);
        let dup = GeneratorSet {
            w: w.clone(),
            ring: ring.clone(),
            gens: vec![z11.clone(), z11.clone()],
        };
        assert_eq!(minimize_generators(&dup).unwrap().gens, vec![z11.clone()]);
        let multiple = GeneratorSet {
            w: w.clone(),
            ring: ring.clone(),
            gens: vec![ring.mul(&z11, &ring.z(1, 2)), z11.clone()],
        };
        assert_eq!(minimize_generators(&multiple).unwrap().gens, vec![z11]);
        let gs = generate(&w, &ord).unwrap();
        assert_eq!(minimize_generators(&gs).unwrap().len(), 2);
    }

    #[test]
    fn minimize_shrinks_but_keeps_ideal() {
        let ord = TermOrder::grevlex();
        for w in ["14325", "21543", "13254"] {
            let gs = generate(&p(w), &ord).unwrap();
            let min = minimize_generators(&gs).unwrap();
            assert!(min.len() <= gs.len());
            let gb_full = crate::groebner::buchberger(&gs.gens, &ord).unwrap();
            let gb_min = crate::groebner::buchberger(&min.gens, &ord).unwrap();
            assert_eq!(gb_full.basis(), gb_min.basis());
        }
    }
}
