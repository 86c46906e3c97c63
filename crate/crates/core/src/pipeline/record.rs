use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// One computed row: `{"n":5,"w":"14325","length":3,"dimension":7,"multiplicity":5,"smooth":false}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplicityRecord {
    pub n: usize,
    pub w: Permutation,
    pub length: usize,
    /// `n(n-1)/2 - length`, the dimension of `Y_w`.
    pub dimension: usize,
    pub multiplicity: u64,
    #[serde(rename = "smooth")]
    pub pattern_smooth: bool,
}

impl MultiplicityRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json(line: &str) -> Result<Self> {
        let rec: Self =
            serde_json::from_str(line).map_err(|e| Error::MalformedRecord(format!("{e}: {line}")))?;
        if rec.w.n() != rec.n {
            return Err(Error::MalformedRecord(format!("n={} but w={}", rec.n, rec.w)));
        }
        Ok(rec)
    }

    pub const CSV_HEADER: &'static str = "n,w,length,dimension,multiplicity,smooth";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n, self.w, self.length, self.dimension, self.multiplicity, self.pattern_smooth
        )
    }

    pub fn from_csv(line: &str) -> Result<Self> {
        let bad = || Error::MalformedRecord(line.to_string());
        let fields: Vec<&str> = line.trim().split(',').collect();
        // words with n > 9 are themselves comma separated
        if fields.len() < 6 {
            return Err(bad());
        }
        let k = fields.len();
        let w: Permutation = fields[1..k - 4].join(",").parse().map_err(|_| bad())?;
        Ok(MultiplicityRecord {
            n: fields[0].parse().map_err(|_| bad())?,
            w,
            length: fields[k - 4].parse().map_err(|_| bad())?,
            dimension: fields[k - 3].parse().map_err(|_| bad())?,
            multiplicity: fields[k - 2].parse().map_err(|_| bad())?,
            pattern_smooth: fields[k - 1].parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for MultiplicityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}  length={} dimension={} multiplicity={} smooth={}",
            self.w, self.length, self.dimension, self.multiplicity, self.pattern_smooth
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_layout_is_fixed() {
        let rec = MultiplicityRecord {
            n: 5,
            w: "14325".parse().unwrap(),
            length: 3,
            dimension: 7,
            multiplicity: 5,
            pattern_smooth: false,
        };
        let line = rec.to_json();
        assert_eq!(
            line,
            r#"{"n":5,"w":"14325","length":3,"dimension":7,"multiplicity":5,"smooth":false}"#
        );
        assert_eq!(MultiplicityRecord::from_json(&line).unwrap(), rec);
        assert_eq!(rec.to_csv(), "5,14325,3,7,5,false");
        assert_eq!(MultiplicityRecord::from_csv(&rec.to_csv()).unwrap(), rec);
        assert!(MultiplicityRecord::from_json(r#"{"n":4,"w":"14325"}"#).is_err());
    }
}
