//! Dense exact matrices. All entries share the matrix's field; target sizes
//! are at most a few hundred, so everything is row-major and unblocked.

use crate::field::{Field, Scalar};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("fields of the operands differ")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
    field: Field,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>, field: Field) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            entries,
            field,
        }
    }

    pub fn zero(rows: usize, cols: usize, field: &Field) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(n: usize, field: &Field) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: &Field,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix::new(rows, cols, entries, field.clone())
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], field: &Field) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            for &v in row {
                entries.push(field.from_i64(v));
            }
        }
        Matrix::new(r, c, entries, field.clone())
    }

    /// Column vector.
    pub fn column(entries: Vec<Scalar>, field: &Field) -> Self {
        let rows = entries.len();
        Matrix::new(rows, 1, entries, field.clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows, &self.field)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, &self.field, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::Shape(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(Matrix::new(self.rows, self.cols, entries, self.field.clone()))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix::new(self.rows, self.cols, entries, self.field.clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zero(self.rows, other.cols, f);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let prod = f.mul(a, b);
                    let cur = out.at(i, j);
                    *out.at_mut(i, j) = f.add(cur, &prod);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; index pairing (a, b) -> a * other.rows + b on rows,
    /// and likewise on columns. This is the project-wide tensor convention.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        Matrix::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            f,
            |r, c| {
                let (r1, r2) = (r / other.rows, r % other.rows);
                let (c1, c2) = (c / other.cols, c % other.cols);
                f.mul(self.at(r1, c1), other.at(r2, c2))
            },
        )
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows {
            acc = f.add(&acc, self.at(i, i));
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows, &self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.rows != other.rows {
            return Err(MatrixError::Shape("hstack".into()));
        }
        Ok(Matrix::from_fn(
            self.rows,
            self.cols + other.cols,
            &self.field,
            |r, c| {
                if c < self.cols {
                    self.at(r, c).clone()
                } else {
                    other.at(r, c - self.cols).clone()
                }
            },
        ))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.cols != other.cols {
            return Err(MatrixError::Shape("vstack".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix::new(
            self.rows + other.rows,
            self.cols,
            entries,
            self.field.clone(),
        ))
    }

    pub fn from_columns(cols: &[Vec<Scalar>], field: &Field) -> Matrix {
        let nc = cols.len();
        let nr = if nc == 0 { 0 } else { cols[0].len() };
        Matrix::from_fn(nr, nc, field, |r, c| cols[c][r].clone())
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.field.format(self.at(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
