use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{shape, Error, Result};

/// Dense row-major matrix over a single exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row-major entries, checking the length and that
    /// every entry lives in `field`.
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some((i, s)) = entries.iter().enumerate().find(|(_, s)| s.field() != field) {
            return Err(Error::FieldMismatch(format!(
                "entry {i} lives in {} but the matrix is over {field}",
                s.field()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows; the field is taken from the first entry.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|r| r.len() != cols) {
            return Err(shape(format!(
                "row {i} has length {} instead of {cols}",
                rows[i].len()
            )));
        }
        let n = rows.len();
        Self::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    /// Integer convenience constructor.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(shape(format!(
                    "column {j} has length {} instead of {rows}",
                    c.len()
                )));
            }
            for (i, v) in c.iter().enumerate() {
                if v.field() != field {
                    return Err(Error::FieldMismatch(format!("column {j} entry {i}")));
                }
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form, choosing the first nonzero entry of each
    /// column as pivot. Returns the reduced matrix and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pivot_entry = m.get(r, j);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let delta = &factor * pivot_entry;
                    m.entries[i * m.cols + j] -= &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(shape(format!(
                "{}x{} matrix has no inverse",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (reduced, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, reduced.get(i, n + j).clone());
            }
        }
        Ok(Some(inv))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn rank(m: &Matrix) -> usize {
    m.rref().1.len()
}

/// Basis of the right null space, one vector per free column, in column order.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let field = m.field();
    let (reduced, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); m.cols()];
            v[free] = field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(row, free);
            }
            v
        })
        .collect()
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows() {
        return Err(shape(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    if let Some(s) = b.iter().find(|s| s.field() != m.field()) {
        return Err(Error::FieldMismatch(format!(
            "right-hand side over {} for a matrix over {}",
            s.field(),
            m.field()
        )));
    }
    let field = m.field();
    let mut augmented = Matrix::zeros(field, m.rows(), m.cols() + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..m.cols() {
            augmented.set(i, j, m.get(i, j).clone());
        }
        augmented.set(i, m.cols(), bi.clone());
    }
    let (reduced, pivots) = augmented.rref();
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = reduced.get(row, m.cols()).clone();
    }
    Ok(Some(x))
}
