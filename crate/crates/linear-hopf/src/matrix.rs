//! Dense exact matrices. Row-major; index `(i, j)` of a tensor square is `i·n + j`.

use crate::error::{HopfError, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

/// First coordinate where two equally shaped matrices differ.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: usize, cols: usize, v: &[i64]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix { rows, cols, data: v.iter().map(|&x| Scalar::from_int(x)).collect() }
    }

    pub fn column(v: Vec<Scalar>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn row(v: Vec<Scalar>) -> Self {
        Matrix { rows: 1, cols: v.len(), data: v }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, o: &Matrix) -> Result<Matrix> {
        self.same_shape(o)?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &Matrix) -> Result<Matrix> {
        self.same_shape(o)?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() })
    }

    fn same_shape(&self, o: &Matrix) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(HopfError::Shape(format!("{}×{} vs {}×{}", self.rows, self.cols, o.rows, o.cols)));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn first_difference(&self, o: &Matrix) -> Result<Option<Witness>> {
        self.same_shape(o)?;
        Ok(self.data.iter().zip(&o.data).position(|(a, b)| a != b).map(|k| Witness {
            row: k / self.cols,
            col: k % self.cols,
            lhs: self.data[k].clone(),
            rhs: o.data[k].clone(),
        }))
    }

    fn check_mul(&self, o: &Matrix) -> Result<()> {
        if self.cols != o.rows {
            return Err(HopfError::Shape(format!("product of {}×{} and {}×{}", self.rows, self.cols, o.rows, o.cols)));
        }
        Ok(())
    }

    fn row_times(&self, i: usize, o: &Matrix, out: &mut [Scalar]) {
        for k in 0..self.cols {
            let a = self.get(i, k);
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let b = o.get(k, j);
                if !b.is_zero() {
                    *slot = &*slot + &(a * b);
                }
            }
        }
    }

    /// `self · o`, one row at a time.
    pub fn mul_seq(&self, o: &Matrix) -> Result<Matrix> {
        self.check_mul(o)?;
        let mut out = Matrix::zeros(self.rows, o.cols);
        if o.cols > 0 {
            for (i, row) in out.data.chunks_mut(o.cols).enumerate() {
                self.row_times(i, o, row);
            }
        }
        Ok(out)
    }

    /// `self · o` with rows computed in parallel.
    #[cfg(feature = "parallel")]
    pub fn mul_par(&self, o: &Matrix) -> Result<Matrix> {
        use rayon::prelude::*;
        self.check_mul(o)?;
        let mut out = Matrix::zeros(self.rows, o.cols);
        if o.cols > 0 {
            out.data.par_chunks_mut(o.cols).enumerate().for_each(|(i, row)| self.row_times(i, o, row));
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        #[cfg(feature = "parallel")]
        {
            if self.rows * o.cols >= 4096 {
                return self.mul_par(o);
            }
        }
        self.mul_seq(o)
    }

    /// Kronecker product: `(a ⊗ b)[(i,k),(j,l)] = a[i,j]·b[k,l]`.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * o.rows + k) * c + j * o.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            let nz: Vec<usize> = (c..m.cols).filter(|&j| !m.get(r, j).is_zero()).collect();
            for &j in &nz {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            let pivot_row: Vec<(usize, Scalar)> = nz.iter().map(|&j| (j, m.get(r, j).clone())).collect();
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for (j, rj) in &pivot_row {
                    let x = m.get(i, *j) - &(&f * rj);
                    m.set(i, *j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of the kernel, as column vectors.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                Matrix::column(v)
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(HopfError::Shape(format!("inverse of a {}×{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(HopfError::Singular);
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Some solution of `self · x = b`, if one exists.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(HopfError::Shape("right-hand side".into()));
        }
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + b.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..b.cols {
                aug.set(i, n + j, b.get(i, j).clone());
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(n, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, n + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}
