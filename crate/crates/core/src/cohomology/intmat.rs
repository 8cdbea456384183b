//! Dense integer matrices with overflow-checked Smith normal form.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidTable("ragged integer matrix".into()));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn diag(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidTable("dimension mismatch in product".into()));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.checked_mul(other.get(k, j)).ok_or(Error::Overflow)?;
                    let s = out.get(i, j).checked_add(t).ok_or(Error::Overflow)?;
                    out.set(i, j, s);
                }
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j) == 0))
    }

    // row i += c · row j
    fn add_row(&mut self, i: usize, j: usize, c: i64) -> Result<()> {
        for k in 0..self.cols {
            let t = c.checked_mul(self.get(j, k)).ok_or(Error::Overflow)?;
            let s = self.get(i, k).checked_add(t).ok_or(Error::Overflow)?;
            self.set(i, k, s);
        }
        Ok(())
    }

    fn add_col(&mut self, i: usize, j: usize, c: i64) -> Result<()> {
        for k in 0..self.rows {
            let t = c.checked_mul(self.get(k, j)).ok_or(Error::Overflow)?;
            let s = self.get(k, i).checked_add(t).ok_or(Error::Overflow)?;
            self.set(k, i, s);
        }
        Ok(())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for k in 0..self.rows {
            self.data.swap(k * self.cols + i, k * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            self.data[i * self.cols + k] = -self.data[i * self.cols + k];
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", r.join(" "))?;
        }
        Ok(())
    }
}

/// `S = U · M · V` with `U`, `V` unimodular and `S` diagonal, `dᵢ | dᵢ₊₁`,
/// all entries non-negative.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.get(i, i)).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Result<Snf> {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);
    for t in 0..n {
        loop {
            // smallest non-zero entry in the remaining block
            let mut best: Option<(i64, usize, usize)> = None;
            for i in t..s.rows {
                for j in t..s.cols {
                    let x = s.get(i, j).abs();
                    if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                        best = Some((x, i, j));
                    }
                }
            }
            let Some((_, bi, bj)) = best else {
                return finish(s, u, v);
            };
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            v.swap_cols(t, bj);
            let piv = s.get(t, t);
            let mut clean = true;
            for i in t + 1..s.rows {
                let q = s.get(i, t).div_euclid(piv);
                if q != 0 {
                    s.add_row(i, t, -q)?;
                    u.add_row(i, t, -q)?;
                }
                clean &= s.get(i, t) == 0;
            }
            for j in t + 1..s.cols {
                let q = s.get(t, j).div_euclid(piv);
                if q != 0 {
                    s.add_col(j, t, -q)?;
                    v.add_col(j, t, -q)?;
                }
                clean &= s.get(t, j) == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold any offending row into row t
            let bad = (t + 1..s.rows).find(|&i| (t + 1..s.cols).any(|j| s.get(i, j) % piv != 0));
            match bad {
                Some(i) => {
                    s.add_row(t, i, 1)?;
                    u.add_row(t, i, 1)?;
                }
                None => break,
            }
        }
        if s.get(t, t) < 0 {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(s, u, v)
}

fn finish(s: IntMatrix, u: IntMatrix, v: IntMatrix) -> Result<Snf> {
    Ok(Snf { s, u, v })
}

/// Invariant factors of `ℤ^cols / rowspan(M)`, with `0` for each free summand
/// and the trivial factors `1` dropped.
pub fn cokernel_invariants(m: &IntMatrix) -> Result<Vec<i64>> {
    let d = smith_normal_form(m)?.diagonal();
    let mut out: Vec<i64> = d.into_iter().filter(|&x| x != 1).collect();
    out.extend(std::iter::repeat_n(0, m.cols.saturating_sub(m.rows)));
    // free summands last, after the torsion factors
    out.sort_by_key(|&x| if x == 0 { i64::MAX } else { x });
    Ok(out)
}
