//! Branching tables `GL(n) ↓ H_π(n)` with dimension subscripts.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::branching::{branch_gl_to_hpi, group_brackets, FormalCharacter};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableId {
    /// `H_3(4)`.
    H3_4,
    /// `H_21(4)`.
    H21_4,
    /// `H_{1³}(3) = SL(3)`.
    H13_3,
    /// `H_{1³}(4)`, labels up to `{32}`.
    H13_4,
    /// `H_{1³}(4)`, the longer list of column-heavy labels.
    H13_4App,
}

impl TableId {
    pub const ALL: [TableId; 5] = [TableId::H3_4, TableId::H21_4, TableId::H13_3, TableId::H13_4, TableId::H13_4App];

    pub fn name(self) -> &'static str {
        match self {
            TableId::H3_4 => "h3_4",
            TableId::H21_4 => "h21_4",
            TableId::H13_3 => "h13_3",
            TableId::H13_4 => "h13_4",
            TableId::H13_4App => "h13_4_app",
        }
    }

    pub fn pi(self) -> Partition {
        match self {
            TableId::H3_4 => Partition::of(&[3]),
            TableId::H21_4 => Partition::of(&[2, 1]),
            _ => Partition::of(&[1, 1, 1]),
        }
    }

    pub fn n(self) -> u32 {
        match self {
            TableId::H13_3 => 3,
            _ => 4,
        }
    }

    /// Source labels in table order (lexicographic in the parts).
    pub fn labels(self) -> Vec<Partition> {
        let short = "0 1 11 111 1^4 2 21 211 2111 22 221 2211 222 2221 2^4 3 31 311 3111 32";
        let raw = match self {
            TableId::H13_3 | TableId::H13_4 => short,
            TableId::H3_4 => {
                "0 1 11 111 1^4 1^5 1^6 2 21 211 2111 21^4 22 221 2211 22111 3 31 311 3111 31^4 \
                 32 321 3211 32111 33 331 3311 33111 331^4 4 41 411 4111 41^4 42"
            }
            TableId::H21_4 => {
                "0 1 11 111 1^4 2 21 211 2111 21^4 21^5 22 221 2211 22111 221^4 2^21^5 2^21^6 \
                 3 31 311 31^3 31^4 31^5 32 321 3211 321^3 321^4 321^5 321^6 33"
            }
            TableId::H13_4App => {
                "0 1 11 111 1^4 1^5 1^6 1^7 2 21 211 2111 21^4 21^5 21^6 22 221 2211 221^3 \
                 221^4 221^5 221^6 2^3 2^31 2^31^2 2^31^3 2^4"
            }
        };
        raw.split_whitespace().map(|s| parse_label(s).expect("table labels are well formed")).collect()
    }

    /// The first `rows` rows (all of them when `rows` exceeds the table).
    pub fn rows(self, rows: usize) -> Vec<TableRow> {
        let (pi, n) = (self.pi(), self.n());
        self.labels()
            .into_iter()
            .take(rows)
            .map(|lambda| {
                let dim = lambda.dim_gl(n);
                let branched = branch_gl_to_hpi(&lambda, &pi).with_n(n);
                TableRow { lambda, dim, branched }
            })
            .collect()
    }

    pub fn header(self) -> String {
        let (open, close) = group_brackets(&self.pi());
        format!("{{λ}}_dim | {open}λ/M_{}{close}_dim", self.pi())
    }

    /// Header plus one `{λ}_dim | branching` line per row.
    pub fn render(self, rows: usize) -> String {
        let mut out = self.header();
        out.push('\n');
        for row in self.rows(rows) {
            writeln!(out, "{{{}}}_{} | {}", row.lambda.label(), row.dim, row.branched.to_table_form()).unwrap();
        }
        out
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::Parse(format!("unknown table `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub lambda: Partition,
    /// `dim {λ}` in `GL(n)`.
    pub dim: i64,
    /// `((λ/M_π))` with dimension subscripts.
    pub branched: FormalCharacter,
}

/// Reads the digit-string labels of the tables: each digit is a part and
/// `^k` repeats the preceding digit, so `2^21^3` is `[2,2,1,1,1]`.
pub fn parse_label(s: &str) -> Result<Partition> {
    if s == "0" {
        return Ok(Partition::empty());
    }
    let bad = || Error::Parse(format!("bad label `{s}`"));
    let mut parts = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        let d = c.to_digit(10).filter(|&d| d > 0).ok_or_else(bad)?;
        let mut reps = 1;
        if chars.peek() == Some(&'^') {
            chars.next();
            // one digit only: the next digit starts a new part
            reps = chars.next().and_then(|x| x.to_digit(10)).ok_or_else(bad)? as usize;
        }
        parts.extend(std::iter::repeat_n(d, reps));
    }
    Partition::new(parts).map_err(|_| bad())
}
