use std::io::{BufRead, Write};

use num_bigint::BigInt;
use serde::Deserialize;

use crate::arith::ArithFunction;
use crate::error::{Error, Result};
use crate::numtheory::{factorize, rat_normalize, Natural, PrimeSieve, Rational};

/// Values of a function on `1..=limit`. Index 0 is never read.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValueTable {
    values: Vec<Rational>,
}

impl ValueTable {
    /// Builds a table from values for `n = 1, 2, ...`.
    pub fn from_values(values: impl IntoIterator<Item = Rational>) -> Result<Self> {
        let mut v = vec![Rational::zero()];
        v.extend(values);
        if v.len() < 2 {
            return Err(Error::domain("a value table needs at least one entry"));
        }
        Ok(ValueTable { values: v })
    }

    pub fn from_fn(limit: usize, mut f: impl FnMut(usize) -> Rational) -> Result<Self> {
        Self::from_values((1..=limit).map(&mut f))
    }

    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        if n == 0 {
            None
        } else {
            self.values.get(n)
        }
    }

    /// Panics when `n` is 0 or beyond the limit.
    pub fn at(&self, n: usize) -> &Rational {
        self.get(n).unwrap_or_else(|| panic!("index {n} outside 1..={}", self.limit()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().enumerate().skip(1)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values[1..]
    }

    pub fn is_integral(&self) -> bool {
        self.values().iter().all(Rational::is_integer)
    }

    pub fn truncate(&self, limit: usize) -> Result<ValueTable> {
        self.require(limit)?;
        Ok(ValueTable {
            values: self.values[..=limit].to_vec(),
        })
    }

    pub(crate) fn require(&self, limit: usize) -> Result<()> {
        if self.limit() < limit {
            return Err(Error::domain(format!(
                "table covers 1..={} but 1..={limit} is required",
                self.limit()
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &ValueTable, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<ValueTable> {
        let limit = self.limit().min(other.limit());
        ValueTable::from_fn(limit, |n| op(self.at(n), other.at(n)))
    }

    /// Pointwise product over the common range.
    pub fn pointwise_mul(&self, other: &ValueTable) -> Result<ValueTable> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn pointwise_add(&self, other: &ValueTable) -> Result<ValueTable> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn scale(&self, c: &Rational) -> ValueTable {
        ValueTable {
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn write_tsv(&self, out: &mut impl Write) -> Result<()> {
        write_tsv_header(out)?;
        for (n, v) in self.iter() {
            write_tsv_row(out, n as u64, v)?;
        }
        Ok(())
    }

    pub fn write_jsonl(&self, out: &mut impl Write) -> Result<()> {
        for (n, v) in self.iter() {
            write_jsonl_row(out, n as u64, v)?;
        }
        Ok(())
    }

    /// Reads the TSV form. Rows must be `1, 2, ..., limit` in order.
    pub fn read_tsv(input: impl BufRead) -> Result<ValueTable> {
        let mut lines = input.lines();
        match lines.next().transpose()? {
            Some(h) if h.trim_end() == "n\tvalue" => {}
            other => return Err(Error::Table(format!("expected header `n\\tvalue`, got {other:?}"))),
        }
        let mut values = Vec::new();
        for (i, line) in lines.enumerate() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let (n, v) = line
                .split_once('\t')
                .ok_or_else(|| Error::Table(format!("row {}: missing tab", i + 1)))?;
            expect_index(n.parse().ok(), values.len() + 1)?;
            values.push(v.parse::<Rational>().map_err(|e| Error::Table(e.to_string()))?);
        }
        ValueTable::from_values(values)
    }

    /// Reads the JSON-lines form.
    pub fn read_jsonl(input: impl BufRead) -> Result<ValueTable> {
        #[derive(Deserialize)]
        struct Row {
            n: u64,
            num: String,
            den: String,
        }
        let mut values = Vec::new();
        for line in input.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let row: Row = serde_json::from_str(&line).map_err(|e| Error::Table(e.to_string()))?;
            expect_index(Some(row.n), values.len() + 1)?;
            let parse = |s: &str| s.parse::<BigInt>().map_err(|e| Error::Table(e.to_string()));
            values.push(rat_normalize(parse(&row.num)?, parse(&row.den)?)?);
        }
        ValueTable::from_values(values)
    }
}

fn expect_index(got: Option<u64>, want: usize) -> Result<()> {
    if got != Some(want as u64) {
        return Err(Error::Table(format!("expected row n={want}, got {got:?}")));
    }
    Ok(())
}

pub fn write_tsv_header(out: &mut impl Write) -> Result<()> {
    writeln!(out, "n\tvalue")?;
    Ok(())
}

pub fn write_tsv_row(out: &mut impl Write, n: u64, v: &Rational) -> Result<()> {
    writeln!(out, "{n}\t{v}")?;
    Ok(())
}

pub fn write_jsonl_row(out: &mut impl Write, n: u64, v: &Rational) -> Result<()> {
    writeln!(out, "{{\"n\": {n}, \"num\": \"{}\", \"den\": \"{}\"}}", v.numer(), v.denom())?;
    Ok(())
}

/// Evaluates `f` on `1..=limit`. Errors carry the offending `n`.
pub fn tabulate(f: &ArithFunction, limit: usize, sieve: &PrimeSieve) -> Result<ValueTable> {
    if limit == 0 {
        return Err(Error::domain("table limit must be at least 1"));
    }
    let mut values = Vec::with_capacity(limit);
    for n in 1..=limit as u64 {
        let n = Natural::try_from(n)?;
        let fact = factorize(&n, sieve);
        values.push(f.eval_factored(&fact, sieve)?);
    }
    ValueTable::from_values(values)
}
