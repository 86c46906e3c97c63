//! End-to-end multiplicity computation, batch tables over `S_n` and
//! comparison with the reference tables.

mod cache;
mod record;
mod reference;

pub use cache::RecordCache;
pub use record::MultiplicityRecord;
pub use reference::{parse_tables, verify, verify_against, Check, ExpectedTable, VerificationReport};

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::combinatorics::{enumerate, Permutation, RankMatrix};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate_t, lead_term_ideal, GroebnerBasis, MonomialIdeal};
use crate::hilbert::{dim_degree, numerator, HilbertNumerator};
use crate::polyring::TermOrder;
use crate::schubert_ideal::{generate, GeneratorSet};

/// Every intermediate object of one computation.
#[derive(Clone, Debug)]
pub struct Trace {
    pub rank_matrix: RankMatrix,
    pub generators: GeneratorSet,
    pub basis: GroebnerBasis,
    /// Lead-term ideal, still involving `t`.
    pub initial: MonomialIdeal,
    /// Lead-term ideal after `t -> 1`; its quotient is the tangent cone's degeneration.
    pub eliminated: MonomialIdeal,
    pub numerator: HilbertNumerator,
}

pub fn multiplicity(w: &Permutation, ord: &TermOrder) -> Result<MultiplicityRecord> {
    multiplicity_with_trace(w, ord).map(|(rec, _)| rec)
}

/// Runs generate → Buchberger → lead terms → `t -> 1` and the Hilbert
/// numerator, with no consistency checks.
pub fn compute_trace(w: &Permutation, ord: &TermOrder) -> Result<Trace> {
    let n = w.n();
    let generators = generate(w, ord)?;
    let basis = buchberger(&generators.gens, ord)?;
    let nvars = n * (n - 1) / 2;
    let initial = MonomialIdeal::new(lead_term_ideal(&basis).gens().to_vec(), nvars);
    let eliminated = eliminate_t(&initial);
    Ok(Trace {
        rank_matrix: w.rank_matrix(),
        numerator: numerator(&eliminated),
        generators,
        basis,
        initial,
        eliminated,
    })
}

/// [`compute_trace`] followed by the degree, checked against the dimension
/// formula and the pattern criterion. Either mismatch is a hard error.
pub fn multiplicity_with_trace(w: &Permutation, ord: &TermOrder) -> Result<(MultiplicityRecord, Trace)> {
    let n = w.n();
    let nvars = n * (n - 1) / 2;
    let trace = compute_trace(w, ord)?;
    let eliminated = &trace.eliminated;
    if eliminated.is_unit() {
        return Err(Error::UnitIdeal(w.to_string()));
    }
    let dd = dim_degree(eliminated)?;
    let length = w.length();
    let expected_dim = nvars - length;
    if dd.dimension != expected_dim {
        return Err(Error::DimensionMismatch {
            w: w.to_string(),
            found: dd.dimension,
            expected: expected_dim,
        });
    }
    let smooth = w.is_pattern_smooth();
    if (dd.degree == 1) != smooth {
        return Err(Error::SmoothnessMismatch {
            w: w.to_string(),
            multiplicity: dd.degree,
            smooth,
        });
    }
    let record = MultiplicityRecord {
        n,
        w: w.clone(),
        length,
        dimension: expected_dim,
        multiplicity: dd.degree,
        pattern_smooth: smooth,
    };
    Ok((record, trace))
}

fn run_parallel<T, F>(jobs: usize, f: F) -> Result<T>
where
    T: Send,
    F: FnOnce() -> Result<T> + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(format!("thread pool: {e}")))?;
    pool.install(f)
}

/// One record per permutation of `S_n`, in lexicographic order of words,
/// computed on `jobs` worker threads.
pub fn table(n: usize, ord: &TermOrder, jobs: usize) -> Result<Vec<MultiplicityRecord>> {
    let perms: Vec<Permutation> = enumerate(n).collect();
    compute_all(&perms, ord, jobs)
}

fn compute_all(perms: &[Permutation], ord: &TermOrder, jobs: usize) -> Result<Vec<MultiplicityRecord>> {
    run_parallel(jobs, || {
        perms
            .par_iter()
            .with_max_len(1)
            .map(|w| multiplicity(w, ord))
            .collect()
    })
}

/// [`table`], reusing and extending `cache`.
pub fn table_cached(
    n: usize,
    ord: &TermOrder,
    jobs: usize,
    cache: &mut RecordCache,
) -> Result<Vec<MultiplicityRecord>> {
    let tie = ord.tie_break();
    let perms: Vec<Permutation> = enumerate(n).collect();
    let missing: Vec<Permutation> = perms
        .iter()
        .filter(|w| cache.get(n, &w.to_string(), tie).is_none())
        .cloned()
        .collect();
    let fresh = compute_all(&missing, ord, jobs)?;
    cache.append(&fresh, tie)?;
    Ok(perms
        .iter()
        .map(|w| cache.get(n, &w.to_string(), tie).cloned().expect("every word cached"))
        .collect())
}

/// Groups words by multiplicity, largest multiplicity first, words sorted.
pub fn group_by_multiplicity(records: &[MultiplicityRecord]) -> Vec<(u64, Vec<String>)> {
    let mut groups: BTreeMap<u64, Vec<String>> = BTreeMap::new();
    for r in records {
        groups.entry(r.multiplicity).or_default().push(r.w.to_string());
    }
    groups
        .into_iter()
        .rev()
        .map(|(m, mut ws)| {
            ws.sort();
            (m, ws)
        })
        .collect()
}

/// How often a symmetry of `S_n` preserves the computed multiplicity.
/// Exploratory only; nothing here is asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub name: &'static str,
    pub agreeing: usize,
    pub total: usize,
    /// Up to a handful of `(w, image, m(w), m(image))` counterexamples.
    pub counterexamples: Vec<(String, String, u64, u64)>,
}

pub fn symmetry_report(records: &[MultiplicityRecord]) -> Vec<SymmetryReport> {
    let by_word: BTreeMap<String, u64> = records.iter().map(|r| (r.w.to_string(), r.multiplicity)).collect();
    type Map = fn(&Permutation) -> Permutation;
    let maps: [(&'static str, Map); 3] = [
        ("inverse", |w| w.inverse()),
        ("w0 w w0", |w| {
            let w0 = Permutation::longest(w.n());
            w0.compose(w).and_then(|x| x.compose(&w0)).expect("same size")
        }),
        ("w0 w^-1 w0", |w| {
            let w0 = Permutation::longest(w.n());
            w0.compose(&w.inverse()).and_then(|x| x.compose(&w0)).expect("same size")
        }),
    ];
    maps.iter()
        .map(|(name, f)| {
            let mut agreeing = 0;
            let mut total = 0;
            let mut counterexamples = Vec::new();
            for r in records {
                let image = f(&r.w).to_string();
                if let Some(&m) = by_word.get(&image) {
                    total += 1;
                    if m == r.multiplicity {
                        agreeing += 1;
                    } else if counterexamples.len() < 5 {
                        counterexamples.push((r.w.to_string(), image, r.multiplicity, m));
                    }
                }
            }
            SymmetryReport {
                name,
                agreeing,
                total,
                counterexamples,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_trace() {
        let (rec, trace) = multiplicity_with_trace(&p("2143"), &TermOrder::grevlex()).unwrap();
        assert_eq!(rec.multiplicity, 2);
        assert_eq!(rec.dimension, 4);
        assert!(!rec.pattern_smooth);
        assert_eq!(
            trace.rank_matrix.rows(),
            vec![vec![0, 1, 1, 1], vec![1, 2, 2, 2], vec![1, 2, 2, 3], vec![1, 2, 3, 4]]
        );
        assert_eq!(trace.initial.render(), vec!["z11", "t*z21*z13"]);
        assert_eq!(trace.eliminated.render(), vec!["z11", "z21*z13"]);
        assert_eq!(trace.numerator.coeffs(), &[1, -1, -1, 1]);
    }

    #[test]
    fn identity_trace_is_trivial() {
        let (rec, trace) = multiplicity_with_trace(&Permutation::identity(5), &TermOrder::grevlex()).unwrap();
        assert_eq!(rec.multiplicity, 1);
        assert_eq!(rec.dimension, 10);
        assert!(trace.generators.is_empty() && trace.basis.is_empty());
        assert!(trace.initial.is_empty() && trace.eliminated.is_empty());
        assert_eq!(trace.numerator.coeffs(), &[1]);
    }

    #[test]
    fn known_values() {
        let ord = TermOrder::grevlex();
        assert_eq!(multiplicity(&p("14325"), &ord).unwrap().multiplicity, 5);
        assert_eq!(multiplicity(&Permutation::longest(6), &ord).unwrap().multiplicity, 1);
    }

    #[test]
    fn small_tables() {
        let ord = TermOrder::grevlex();
        let t2 = table(2, &ord, 2).unwrap();
        assert_eq!(t2.iter().map(|r| r.multiplicity).collect::<Vec<_>>(), vec![1, 1]);
        let t4 = table(4, &ord, 4).unwrap();
        let singular: Vec<String> = t4.iter().filter(|r| r.multiplicity > 1).map(|r| r.w.to_string()).collect();
        assert_eq!(singular, vec!["1324", "2143"]);
        assert_eq!(group_by_multiplicity(&t2), vec![(1, vec!["12".to_string(), "21".to_string()])]);
    }

    #[test]
    fn cached_table_matches_uncached() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let ord = TermOrder::grevlex();
        let plain = table(4, &ord, 2).unwrap();
        let mut cache = RecordCache::open(&path).unwrap();
        assert_eq!(table_cached(4, &ord, 2, &mut cache).unwrap(), plain);
        let mut reopened = RecordCache::open(&path).unwrap();
        assert_eq!(reopened.len(), 24);
        assert_eq!(table_cached(4, &ord, 1, &mut reopened).unwrap(), plain);
    }

    #[test]
    fn symmetry_report_runs() {
        let recs = table(4, &TermOrder::grevlex(), 2).unwrap();
        let reports = symmetry_report(&recs);
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.total == 24));
    }
}
