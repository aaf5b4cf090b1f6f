//! Dense matrices over the rationals with the exact linear algebra the
//! invariant computations rely on: determinant, inverse, reduced row echelon
//! form, kernel, characteristic polynomial, Kronecker and exterior products.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::{rat, ExactError, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Dimension("ragged rows".to_string()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .expect("rectangular integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Rational> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Result<Rational, ExactError> {
        self.require_square()?;
        let mut t = Rational::zero();
        for i in 0..self.rows {
            t = t + self.get(i, i);
        }
        Ok(t)
    }

    fn require_square(&self) -> Result<(), ExactError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ExactError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::Dimension(format!(
                "matrix is {}x{} but vector has length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    if !self.get(i, j).is_zero() && !v[j].is_zero() {
                        acc = acc + self.get(i, j) * &v[j];
                    }
                }
                acc
            })
            .collect())
    }

    pub fn is_integer(&self) -> bool {
        self.data.iter().all(|v| v.denom().is_one())
    }

    pub fn is_skew_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.get(i, j) != -self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Gaussian elimination determinant.
    pub fn det(&self) -> Result<Rational, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return Ok(Rational::zero()),
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.get(pivot, j).clone();
                    let b = m.get(col, j).clone();
                    m.set(pivot, j, b);
                    m.set(col, j, a);
                }
                det = -det;
            }
            let p = m.get(col, col).clone();
            det = det * &p;
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &p;
                for j in col..n {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<RationalMatrix, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = RationalMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m.get(r, col).is_zero())
                .ok_or(ExactError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let a = m.get(pivot, j).clone();
                    m.set(pivot, j, m.get(col, j).clone());
                    m.set(col, j, a);
                    let b = inv.get(pivot, j).clone();
                    inv.set(pivot, j, inv.get(col, j).clone());
                    inv.set(col, j, b);
                }
            }
            let p = m.get(col, col).clone();
            for j in 0..n {
                m.set(col, j, m.get(col, j) / &p);
                inv.set(col, j, inv.get(col, j) / &p);
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..n {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                    let w = inv.get(r, j) - &(&factor * inv.get(col, j));
                    inv.set(r, j, w);
                }
            }
        }
        Ok(inv)
    }

    /// Reduced row echelon form and the list of pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for j in 0..m.cols {
                    let a = m.get(pivot, j).clone();
                    m.set(pivot, j, m.get(row, j).clone());
                    m.set(row, j, a);
                }
            }
            let p = m.get(row, col).clone();
            for j in 0..m.cols {
                m.set(row, j, m.get(row, j) / &p);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j) - &(&factor * m.get(row, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves self * x = rhs exactly. None when the system is inconsistent;
    /// free variables, if any, are set to zero.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Option<Vec<Rational>>, ExactError> {
        if rhs.len() != self.rows {
            return Err(ExactError::Dimension(format!(
                "{}x{} system with right side of length {}",
                self.rows,
                self.cols,
                rhs.len()
            )));
        }
        let mut aug = RationalMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Canonical kernel basis: one vector per free column, with a 1 in the
    /// free coordinate, ordered by free column index.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
    /// recurrence, monic of degree n.
    pub fn charpoly(&self) -> Result<UniPoly, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        if n == 0 {
            return Ok(UniPoly::new(coeffs));
        }
        let mut m = self.clone();
        for k in 1..=n {
            let c = -(m.trace()? / rat(k as i64));
            coeffs[n - k] = c.clone();
            if k < n {
                for i in 0..n {
                    let v = m.get(i, i) + &c;
                    m.set(i, i, v);
                }
                m = (self * &m).expect("square by construction");
            }
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Evaluates a polynomial at this matrix.
    pub fn eval_poly(&self, p: &UniPoly) -> Result<RationalMatrix, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut acc = RationalMatrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self)? + &RationalMatrix::identity(n).scale(c);
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Result<RationalMatrix, ExactError> {
        self.require_square()?;
        let mut acc = RationalMatrix::identity(self.rows);
        for _ in 0..e {
            acc = (&acc * self)?;
        }
        Ok(acc)
    }

    pub fn block_diag(blocks: &[RationalMatrix]) -> RationalMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = RationalMatrix::zeros(rows, cols);
        let mut ro = 0;
        let mut co = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// Kronecker product, row-major pair indexing: entry ((i,k),(j,l)) equals
    /// self[i][j] * other[k][l].
    pub fn kronecker(&self, other: &RationalMatrix) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j).is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            self.get(i, j) * other.get(k, l),
                        );
                    }
                }
            }
        }
        m
    }

    /// Induced map on the exterior square, basis e_i ^ e_j for i < j in
    /// lexicographic order; entries are the 2x2 minors.
    pub fn exterior_square(&self) -> Result<RationalMatrix, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut m = RationalMatrix::zeros(pairs.len(), pairs.len());
        for (r, &(i, j)) in pairs.iter().enumerate() {
            for (c, &(k, l)) in pairs.iter().enumerate() {
                let v = self.get(i, k) * self.get(j, l) - self.get(i, l) * self.get(j, k);
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    /// Companion matrix of a monic polynomial, columns mapping x^i to x^(i+1)
    /// reduced modulo p.
    pub fn companion(p: &UniPoly) -> Result<RationalMatrix, ExactError> {
        let n = p.degree().ok_or(ExactError::ZeroPolynomial)?;
        if !p.is_monic() {
            return Err(ExactError::InvalidParameter(
                "companion".to_string(),
                "polynomial must be monic".to_string(),
            ));
        }
        if n == 0 {
            return Ok(RationalMatrix::zeros(0, 0));
        }
        let mut m = RationalMatrix::zeros(n, n);
        for i in 1..n {
            m.set(i, i - 1, Rational::one());
        }
        for i in 0..n {
            m.set(i, n - 1, -p.coeff(i));
        }
        Ok(m)
    }

    /// Keeps the listed row/column indices, in order.
    pub fn principal_submatrix(&self, keep: &[usize]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &RationalMatrix {
    type Output = Result<RationalMatrix, ExactError>;
    fn mul(self, rhs: &RationalMatrix) -> Result<RationalMatrix, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut m = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k).is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if rhs.get(k, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) + &(self.get(i, k) * rhs.get(k, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }
}
