use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Invalid(format!(
                "matrix must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows of anything convertible to `BigInt`.
    /// Ragged or empty input is rejected.
    pub fn from_rows<R, T>(rows: &[R]) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Clone + Into<BigInt>,
    {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Invalid(format!(
                    "ragged rows: row {} has {} entries, expected {cols}",
                    i + 1,
                    r.len()
                )));
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix::new(rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns<C, T>(columns: &[C]) -> Result<Self>
    where
        C: AsRef<[T]>,
        T: Clone + Into<BigInt>,
    {
        let cols = columns.len();
        let rows = columns.first().map(|c| c.as_ref().len()).unwrap_or(0);
        let mut m = IntMatrix::zeros_unchecked(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            let c = c.as_ref();
            if c.len() != rows {
                return Err(Error::Invalid("columns of unequal length".into()));
            }
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone().into();
            }
        }
        if rows == 0 || cols == 0 {
            return Err(Error::Invalid("empty column list".into()));
        }
        Ok(m)
    }

    pub(crate) fn zeros_unchecked(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros_unchecked(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub(crate) fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros_unchecked(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros_unchecked(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for an integer vector of length `cols`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Submatrix formed by the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros_unchecked(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m.data[i * cols.len() + jj] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros_unchecked(rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            m.data[ii * self.cols..(ii + 1) * self.cols].clone_from_slice(self.row(i));
        }
        m
    }

    pub fn negate_column(&mut self, j: usize) {
        for i in 0..self.rows {
            let e = self.entry_mut(i, j);
            *e = -std::mem::take(e);
        }
    }

    /// Entries as `i64` when every entry fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    /// Columns as `i64` vectors when every entry fits.
    pub fn to_i64_columns(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).to_i64()).collect())
            .collect()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Parses the text form: a header line `d n` followed by `d` rows of `n`
    /// integers. Blank lines and `#` comments are skipped.
    pub fn parse_text(text: &str) -> Result<IntMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty matrix file"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::parse(hline, format!("bad header: {e}")))?;
        let [d, n] = dims[..] else {
            return Err(Error::parse(hline, "header must be `rows cols`"));
        };
        let mut rows = Vec::with_capacity(d);
        for (ln, l) in lines.by_ref().take(d) {
            let row: Vec<BigInt> = l
                .split_whitespace()
                .map(|t| t.parse::<BigInt>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::parse(ln, format!("bad entry: {e}")))?;
            if row.len() != n {
                return Err(Error::parse(
                    ln,
                    format!("ragged row: {} entries, expected {n}", row.len()),
                ));
            }
            rows.push(row);
        }
        if rows.len() != d {
            return Err(Error::parse(
                hline,
                format!("expected {d} rows, found {}", rows.len()),
            ));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::parse(ln, "trailing data after matrix"));
        }
        IntMatrix::from_rows(&rows)
    }

    /// Parses `{"rows":d,"cols":n,"data":[[...],...]}`. Entries may be JSON
    /// integers or decimal strings.
    pub fn parse_json(text: &str) -> Result<IntMatrix> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        IntMatrix::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<IntMatrix> {
        let bad = |m: &str| Error::parse(1, m.to_string());
        let d = v["rows"].as_u64().ok_or_else(|| bad("missing `rows`"))? as usize;
        let n = v["cols"].as_u64().ok_or_else(|| bad("missing `cols`"))? as usize;
        let data = v["data"].as_array().ok_or_else(|| bad("missing `data`"))?;
        if data.len() != d {
            return Err(bad("`data` length differs from `rows`"));
        }
        let mut rows = Vec::with_capacity(d);
        for r in data {
            let r = r.as_array().ok_or_else(|| bad("rows must be arrays"))?;
            if r.len() != n {
                return Err(bad("ragged rows"));
            }
            let row = r
                .iter()
                .map(|x| match x {
                    Value::Number(num) => num
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or_else(|| bad("entries must be integers")),
                    Value::String(s) => s.parse::<BigInt>().map_err(|_| bad("bad integer string")),
                    _ => Err(bad("entries must be integers")),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        IntMatrix::from_rows(&rows)
    }

    /// Accepts either file form, choosing by the first non-blank character.
    pub fn parse(text: &str) -> Result<IntMatrix> {
        if text.trim_start().starts_with('{') {
            IntMatrix::parse_json(text)
        } else {
            IntMatrix::parse_text(text)
        }
    }

    pub fn to_json(&self) -> Value {
        let data: Vec<Value> = (0..self.rows)
            .map(|i| Value::Array(self.row(i).iter().map(bigint_json).collect()))
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "data": data })
    }
}

/// JSON number when the value fits in `i64`, decimal string otherwise.
pub fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
