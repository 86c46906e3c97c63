//! Reference multiplicity tables for `n = 5` (complete) and `n = 6`
//! (classes of multiplicity >= 3 listed, classes 1 and 2 only counted).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::record::MultiplicityRecord;
use crate::combinatorics::enumerate;
use crate::error::{Error, Result};

const DATA: &str = include_str!("../../data/reference_tables.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedTable {
    pub n: usize,
    /// Multiplicity to lexicographically sorted words.
    pub classes: BTreeMap<u64, Vec<String>>,
    /// Whether every word of `S_n` appears in `classes`.
    pub complete: bool,
    /// Class sizes for classes whose members are not listed.
    pub aggregate_counts: BTreeMap<u64, usize>,
}

impl ExpectedTable {
    /// The embedded table for `n`, if there is one.
    pub fn for_n(n: usize) -> Option<ExpectedTable> {
        parse_tables(DATA)
            .expect("embedded reference tables parse")
            .into_iter()
            .find(|t| t.n == n)
    }
}

pub fn parse_tables(text: &str) -> Result<Vec<ExpectedTable>> {
    let mut tables: Vec<ExpectedTable> = Vec::new();
    let bad = |line: &str| Error::MalformedTable(line.to_string());
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(' ').ok_or_else(|| bad(line))?;
        match key {
            "n" => {
                let (n, kind) = rest.split_once(' ').ok_or_else(|| bad(line))?;
                tables.push(ExpectedTable {
                    n: n.parse().map_err(|_| bad(line))?,
                    classes: BTreeMap::new(),
                    complete: match kind {
                        "complete" => true,
                        "partial" => false,
                        _ => return Err(bad(line)),
                    },
                    aggregate_counts: BTreeMap::new(),
                });
            }
            "class" | "count" => {
                let table = tables.last_mut().ok_or_else(|| bad(line))?;
                let (m, body) = rest.split_once(':').ok_or_else(|| bad(line))?;
                let m: u64 = m.trim().parse().map_err(|_| bad(line))?;
                if key == "class" {
                    table
                        .classes
                        .entry(m)
                        .or_default()
                        .extend(body.split_whitespace().map(str::to_string));
                } else {
                    table
                        .aggregate_counts
                        .insert(m, body.trim().parse().map_err(|_| bad(line))?);
                }
            }
            _ => return Err(bad(line)),
        }
    }
    for t in &mut tables {
        for words in t.classes.values_mut() {
            words.sort();
        }
    }
    Ok(tables)
}

/// Outcome of comparing computed records against a reference table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "[{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "verify n={}: {}",
            self.n,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Compares `records` (which must cover all of `S_n` exactly once) with the
/// embedded table for `n`.
pub fn verify(n: usize, records: &[MultiplicityRecord]) -> Result<VerificationReport> {
    let expected = ExpectedTable::for_n(n)
        .ok_or_else(|| Error::IncompleteRecords(format!("no reference table for n={n}")))?;
    verify_against(&expected, records)
}

pub fn verify_against(expected: &ExpectedTable, records: &[MultiplicityRecord]) -> Result<VerificationReport> {
    let n = expected.n;
    let mut by_word: BTreeMap<String, u64> = BTreeMap::new();
    for r in records {
        if r.n != n {
            return Err(Error::IncompleteRecords(format!("record {} has n={}", r.w, r.n)));
        }
        if by_word.insert(r.w.to_string(), r.multiplicity).is_some() {
            return Err(Error::IncompleteRecords(format!("duplicate record for {}", r.w)));
        }
    }
    if let Some(missing) = enumerate(n).map(|w| w.to_string()).find(|w| !by_word.contains_key(w)) {
        return Err(Error::IncompleteRecords(format!("no record for {missing}")));
    }

    let mut computed: BTreeMap<u64, Vec<String>> = BTreeMap::new();
    for (w, &m) in &by_word {
        computed.entry(m).or_default().push(w.clone());
    }

    let mut checks = Vec::new();
    for (&m, words) in expected.classes.iter().rev() {
        let want: BTreeSet<&String> = words.iter().collect();
        let got: BTreeSet<&String> = computed.get(&m).map(|v| v.iter().collect()).unwrap_or_default();
        let missing: Vec<String> = want
            .difference(&got)
            .map(|w| format!("{w} (got {})", by_word[*w]))
            .collect();
        let extra: Vec<&&String> = got.difference(&want).collect();
        let mut detail = Vec::new();
        if !missing.is_empty() {
            detail.push(format!("missing {}", missing.join(", ")));
        }
        if !extra.is_empty() {
            let extra: Vec<&str> = extra.iter().map(|w| w.as_str()).collect();
            detail.push(format!("unexpected {}", extra.join(", ")));
        }
        checks.push(Check {
            name: format!("multiplicity {m}: {} words", words.len()),
            passed: detail.is_empty(),
            detail: detail.join("; "),
        });
    }
    for (&m, &count) in expected.aggregate_counts.iter().rev() {
        let got = computed.get(&m).map_or(0, Vec::len);
        checks.push(Check {
            name: format!("multiplicity {m}: count {count}"),
            passed: got == count,
            detail: if got == count { String::new() } else { format!("got {got}") },
        });
    }
    if !expected.complete {
        // every word must be accounted for by a listed or counted class
        let stray: Vec<String> = computed
            .iter()
            .filter(|(m, _)| !expected.classes.contains_key(m) && !expected.aggregate_counts.contains_key(m))
            .flat_map(|(m, ws)| ws.iter().map(move |w| format!("{w} ({m})")))
            .collect();
        checks.push(Check {
            name: "no multiplicities outside the table".into(),
            passed: stray.is_empty(),
            detail: stray.join(", "),
        });
    }
    Ok(VerificationReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Permutation;

    #[test]
    fn embedded_tables_are_consistent() {
        let five = ExpectedTable::for_n(5).unwrap();
        assert!(five.complete);
        assert_eq!(five.classes[&5], vec!["14325"]);
        assert_eq!(five.classes[&3].len(), 4);
        assert_eq!(five.classes[&2].len(), 27);
        assert_eq!(five.classes[&1].len(), 88);
        let six = ExpectedTable::for_n(6).unwrap();
        assert!(!six.complete);
        assert_eq!(six.classes[&14], vec!["154326"]);
        assert_eq!(six.aggregate_counts[&1], 366);
        assert_eq!(six.aggregate_counts[&2], 207);
        let listed: usize = six.classes.values().map(Vec::len).sum();
        assert_eq!(listed + 366 + 207, 720);
        for t in [five, six] {
            for words in t.classes.values() {
                assert!(words.windows(2).all(|w| w[0] < w[1]));
            }
        }
        assert!(ExpectedTable::for_n(4).is_none());
    }

    #[test]
    fn listed_singular_classes_contain_pattern() {
        for n in [5, 6] {
            let t = ExpectedTable::for_n(n).unwrap();
            for (&m, words) in &t.classes {
                for w in words {
                    let w: Permutation = w.parse().unwrap();
                    assert_eq!(w.is_pattern_smooth(), m == 1, "{w}");
                }
            }
        }
    }

    fn fake_records(t: &ExpectedTable) -> Vec<MultiplicityRecord> {
        let mut out = Vec::new();
        for (&m, words) in &t.classes {
            for w in words {
                let w: Permutation = w.parse().unwrap();
                out.push(MultiplicityRecord {
                    n: t.n,
                    length: w.length(),
                    dimension: t.n * (t.n - 1) / 2 - w.length(),
                    multiplicity: m,
                    pattern_smooth: m == 1,
                    w,
                });
            }
        }
        out
    }

    #[test]
    fn verify_detects_mutation_and_gaps() {
        let t = ExpectedTable::for_n(5).unwrap();
        let mut recs = fake_records(&t);
        assert!(verify(5, &recs).unwrap().passed());
        let k = recs.iter().position(|r| r.w.to_string() == "24153").unwrap();
        recs[k].multiplicity = 2;
        let report = verify(5, &recs).unwrap();
        assert!(!report.passed());
        assert!(report.to_string().contains("24153"));
        recs.pop();
        assert!(matches!(verify(5, &recs), Err(Error::IncompleteRecords(_))));
    }

    #[test]
    fn verify_partial_table_uses_counts() {
        let t = ExpectedTable::for_n(6).unwrap();
        let mut recs = fake_records(&t);
        let listed: BTreeSet<String> = recs.iter().map(|r| r.w.to_string()).collect();
        // fill in the unlisted words: smooth ones get 1, the rest 2
        for w in enumerate(6) {
            if !listed.contains(&w.to_string()) {
                let m = if w.is_pattern_smooth() { 1 } else { 2 };
                recs.push(MultiplicityRecord {
                    n: 6,
                    length: w.length(),
                    dimension: 15 - w.length(),
                    multiplicity: m,
                    pattern_smooth: m == 1,
                    w,
                });
            }
        }
        assert!(verify(6, &recs).unwrap().passed());
        let k = recs.iter().position(|r| r.multiplicity == 2).unwrap();
        recs[k].multiplicity = 1;
        assert!(!verify(6, &recs).unwrap().passed());
    }
}
