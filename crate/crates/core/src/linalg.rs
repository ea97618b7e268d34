//! Exact dense matrices over a finite field: products, reduced row echelon
//! form and null spaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Rows of coefficient encodings; all rows must have length `cols`.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<u64>]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols || row.iter().any(|&c| c >= field.order()) {
                return Err(Error::InvalidInput(format!("row {i} is malformed")));
            }
            m.data[i * cols..(i + 1) * cols].copy_from_slice(row);
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.element(self.data[i * self.cols + j]).expect("reduced entry")
    }

    pub(crate) fn set_raw(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        let f = &self.field;
        a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add_raw(acc, f.mul_raw(x, y)))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let t = other.transpose();
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                out.data[i * other.cols + j] = self.dot(self.row(i), t.row(j));
            }
        }
        Ok(out)
    }

    /// Whether `M M^T = 0`, stopping at the first nonzero entry.
    pub fn is_self_orthogonal(&self) -> bool {
        (0..self.rows).all(|i| (i..self.rows).all(|j| self.dot(self.row(i), self.row(j)) == 0))
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn rref(&self) -> Matrix {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| m.data[r * m.cols + col] != 0) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            let inv = f.inv_raw(m.data[pivot_row * m.cols + col]);
            for j in 0..m.cols {
                let idx = pivot_row * m.cols + j;
                m.data[idx] = f.mul_raw(m.data[idx], inv);
            }
            for r in 0..m.rows {
                let c = m.data[r * m.cols + col];
                if r == pivot_row || c == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let t = f.mul_raw(c, m.data[pivot_row * m.cols + j]);
                    let idx = r * m.cols + j;
                    m.data[idx] = f.sub_raw(m.data[idx], t);
                }
            }
            pivot_row += 1;
        }
        m.data.truncate(pivot_row * m.cols);
        m.rows = pivot_row;
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Basis (as rows) of `{v : M v = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let r = self.rref();
        let pivots: Vec<usize> = (0..r.rows)
            .map(|i| r.row(i).iter().position(|&v| v != 0).expect("nonzero rref row"))
            .collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.data[k * self.cols + fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                basis.data[k * self.cols + pc] = f.neg_raw(r.data[i * r.cols + fc]);
            }
        }
        basis
    }

    /// Whether the two matrices span the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.field == other.field && self.cols == other.cols && self.rref() == other.rref()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn rref_and_nullspace() {
        let f5 = make_field(5, 1).unwrap();
        let m = Matrix::from_rows(&f5, 3, &[vec![1, 2, 3], vec![2, 4, 1], vec![3, 1, 4]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rows(), m.rank());
        let ns = m.nullspace();
        assert_eq!(ns.rows() + m.rank(), 3);
        assert!(m.mul(&ns.transpose()).unwrap().is_zero());
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        let f9 = make_field(3, 2).unwrap();
        let id = Matrix::identity(&f9, 4);
        assert_eq!(id.nullspace().rows(), 0);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn self_orthogonality() {
        let f2 = make_field(2, 1).unwrap();
        let g = Matrix::from_rows(
            &f2,
            6,
            &[vec![1, 0, 0, 1, 0, 0], vec![0, 1, 0, 0, 1, 0], vec![0, 0, 1, 0, 0, 1]],
        )
        .unwrap();
        assert!(g.is_self_orthogonal());
        assert!(g.mul(&g.transpose()).unwrap().is_zero());
        let h = Matrix::from_rows(&f2, 2, &[vec![1, 0]]).unwrap();
        assert!(!h.is_self_orthogonal());
    }
}
