use std::fmt;
use std::ops::Mul;

use super::{FieldSpec, LinalgError, Scalar};

/// Dense row-major matrix of exact scalars.
///
/// Linear maps `V -> W` are stored as `dim W x dim V` matrices, so the image of
/// the `j`-th basis vector is column `j` and composition is the matrix product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

/// Outcome of `solve`: every `particular + kernel combination` solves the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Matrix,
    /// Basis of `{x : A x = 0}` as RREF rows.
    pub kernel: Matrix,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, data }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    context: "from_rows",
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, field, data })
    }

    /// Small integer matrices, mostly for tests and catalog tables.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn column_vector(field: FieldSpec, v: Vec<Scalar>) -> Self {
        Matrix { rows: v.len(), cols: 1, field, data: v }
    }

    pub fn row_vector(field: FieldSpec, v: Vec<Scalar>) -> Self {
        Matrix { rows: 1, cols: v.len(), field, data: v }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_shape(other, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_shape(other, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, other: &Matrix, context: &'static str) -> Result<(), LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch { context, expected: self.rows, found: other.rows });
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch { context, expected: self.cols, found: other.cols });
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                context: "mul",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector given as a slice.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: vector length");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    o.add_product(a, x);
                }
            }
        }
        out
    }

    /// Kronecker product under the index convention `idx(i, j) = i * dim2 + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack: row counts");
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack: column counts");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Reduced row-echelon form with zero rows dropped, plus pivot columns.
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
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * pv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
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
        self.rref().1.len()
    }

    /// Basis of the null space `{x : self * x = 0}` as RREF rows.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.field, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, self.field.one());
            for (row, &p) in pivots.iter().enumerate() {
                basis.set(k, p, -r.get(row, f));
            }
        }
        basis.rref().0
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }
}

/// Solves `a * x = b` exactly.
///
/// Returns `Ok(None)` for an inconsistent system. Free variables of the
/// particular solution are set to zero.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<Solution>, LinalgError> {
    if a.rows != b.rows {
        return Err(LinalgError::DimensionMismatch {
            context: "solve_linear",
            expected: a.rows,
            found: b.rows,
        });
    }
    let n = a.cols;
    let (r, pivots) = a.hstack(b).rref();
    if pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut particular = Matrix::zeros(a.field, n, b.cols);
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            particular.set(p, j, r.get(row, n + j).clone());
        }
    }
    Ok(Some(Solution {
        particular,
        kernel: a.kernel(),
    }))
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product dimensions")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn solve_identity() {
        let i2 = Matrix::identity(q(), 2);
        let sol = solve_linear(&i2, &i2).unwrap().unwrap();
        assert_eq!(sol.particular, i2);
        assert_eq!(sol.kernel.rows(), 0);
    }

    #[test]
    fn solve_zero_system() {
        let z = Matrix::zeros(q(), 2, 2);
        let sol = solve_linear(&z, &z).unwrap().unwrap();
        assert!(sol.particular.is_zero());
        assert_eq!(sol.kernel, Matrix::identity(q(), 2));
    }

    #[test]
    fn solve_rank_deficient() {
        // Hand elimination: x + y = 3 is the only constraint.
        let a = Matrix::from_ints(q(), &[&[1, 1], &[2, 2]]);
        let b = Matrix::from_ints(q(), &[&[3], &[6]]);
        let sol = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(sol.particular, Matrix::from_ints(q(), &[&[3], &[0]]));
        assert_eq!(sol.kernel, Matrix::from_ints(q(), &[&[1, -1]]));
        let inconsistent = Matrix::from_ints(q(), &[&[3], &[7]]);
        assert!(solve_linear(&a, &inconsistent).unwrap().is_none());
        assert!(solve_linear(&a, &Matrix::zeros(q(), 3, 1)).is_err());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Matrix::identity(q(), 2).kron(&Matrix::identity(q(), 3)), Matrix::identity(q(), 6));
        let two = Matrix::from_ints(q(), &[&[2]]);
        assert_eq!(two.kron(&Matrix::identity(q(), 2)), Matrix::from_ints(q(), &[&[2, 0], &[0, 2]]));
        let a = Matrix::from_ints(q(), &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(q(), &[&[0, 5], &[6, 7]]);
        assert_eq!(
            a.kron(&b),
            Matrix::from_ints(
                q(),
                &[&[0, 5, 0, 10], &[6, 7, 12, 14], &[0, 15, 0, 20], &[18, 21, 24, 28]]
            )
        );
    }

    #[test]
    fn inverse_and_rank() {
        let a = Matrix::from_ints(q(), &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(q(), 2));
        assert!(Matrix::from_ints(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::from_ints(q(), &[&[1, 2], &[2, 4]]).rank(), 1);
        let f3 = FieldSpec::prime(3).unwrap();
        // det = 3 vanishes mod 3
        assert!(Matrix::from_ints(f3, &[&[1, 1], &[1, 4]]).inverse().is_none());
    }
}
