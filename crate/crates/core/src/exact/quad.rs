//! Arithmetic in the real quadratic field Q(sqrt k) and matrices over it.
//! Used for the square root change-of-basis witnesses; every trusted decision
//! downstream reduces to rational data, so this module stays small.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::{format_rational, int, is_square_free, ExactError, Rational};

/// a + b*sqrt(k) with k square-free. k = 1 is allowed for uniformity in the
/// witness constructions and collapses to the rational a + b on entry, so
/// elements with an irrational part always have k >= 2 or k < 0.
#[derive(Clone, Debug)]
pub struct QuadFieldElement {
    k: i64,
    a: Rational,
    b: Rational,
}

/// Rational elements compare equal whatever field they are tagged with.
impl PartialEq for QuadFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.k == other.k)
    }
}

impl Eq for QuadFieldElement {}

impl QuadFieldElement {
    pub fn new(a: Rational, b: Rational, k: i64) -> Result<Self, ExactError> {
        if k == 0 || !is_square_free(&int(k))? {
            return Err(ExactError::InvalidParameter(
                "QuadFieldElement".to_string(),
                format!("field parameter {k} must be square-free and nonzero"),
            ));
        }
        if k == 1 {
            return Ok(QuadFieldElement { k, a: a + b, b: Rational::zero() });
        }
        Ok(QuadFieldElement { k, a, b })
    }

    pub fn from_rational(a: Rational, k: i64) -> Result<Self, ExactError> {
        QuadFieldElement::new(a, Rational::zero(), k)
    }

    pub fn zero(k: i64) -> Result<Self, ExactError> {
        QuadFieldElement::from_rational(Rational::zero(), k)
    }

    pub fn one(k: i64) -> Result<Self, ExactError> {
        QuadFieldElement::from_rational(Rational::one(), k)
    }

    pub fn sqrt_k(k: i64) -> Result<Self, ExactError> {
        QuadFieldElement::new(Rational::zero(), Rational::one(), k)
    }

    pub fn field_parameter(&self) -> i64 {
        self.k
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt_coefficient(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> QuadFieldElement {
        QuadFieldElement { k: self.k, a: self.a.clone(), b: -&self.b }
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(int(self.k)) * &self.b * &self.b
    }

    /// The norm of a nonzero element is nonzero because sqrt k is irrational
    /// whenever b survives construction.
    pub fn inverse(&self) -> Result<QuadFieldElement, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(QuadFieldElement { k: self.k, a: &c.a / &n, b: &c.b / &n })
    }

    /// Sign as a real number, -1, 0, or +1. Defined for rational elements and
    /// for k > 0, where sqrt k means the positive root.
    pub fn sign(&self) -> Result<i8, ExactError> {
        if self.b.is_zero() {
            return Ok(if self.a.is_zero() {
                0
            } else if self.a.is_positive() {
                1
            } else {
                -1
            });
        }
        if self.k < 0 {
            return Err(ExactError::InvalidParameter(
                "sign".to_string(),
                "not a real number for negative field parameter".to_string(),
            ));
        }
        let sa = if self.a.is_positive() { 1i8 } else if self.a.is_zero() { 0 } else { -1 };
        let sb = if self.b.is_positive() { 1i8 } else { -1 };
        if sa == 0 || sa == sb {
            return Ok(sb);
        }
        // Opposite signs: |a| against |b| sqrt k, decided by the norm.
        let sn = if self.norm().is_positive() { 1i8 } else { -1 };
        Ok(sa * sn)
    }

    fn merge_k(&self, rhs: &QuadFieldElement) -> i64 {
        assert!(
            self.b.is_zero() || rhs.b.is_zero() || self.k == rhs.k,
            "mixed quadratic field parameters {} and {}",
            self.k,
            rhs.k
        );
        if self.b.is_zero() {
            rhs.k
        } else {
            self.k
        }
    }
}

impl Add for &QuadFieldElement {
    type Output = QuadFieldElement;
    fn add(self, rhs: &QuadFieldElement) -> QuadFieldElement {
        QuadFieldElement {
            k: self.merge_k(rhs),
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadFieldElement {
    type Output = QuadFieldElement;
    fn sub(self, rhs: &QuadFieldElement) -> QuadFieldElement {
        QuadFieldElement {
            k: self.merge_k(rhs),
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadFieldElement {
    type Output = QuadFieldElement;
    fn mul(self, rhs: &QuadFieldElement) -> QuadFieldElement {
        let k = self.merge_k(rhs);
        let kr = Rational::from_integer(int(k));
        QuadFieldElement {
            k,
            a: &self.a * &rhs.a + kr * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QuadFieldElement {
    type Output = QuadFieldElement;
    fn neg(self) -> QuadFieldElement {
        QuadFieldElement { k: self.k, a: -&self.a, b: -&self.b }
    }
}

impl fmt::Display for QuadFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let root = format!("sqrt({})", self.k);
        let b_abs = self.b.abs();
        let b_part = if b_abs.is_one() {
            root
        } else {
            format!("{}*{}", format_rational(&b_abs), root)
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                return write!(f, "-{b_part}");
            }
            return write!(f, "{b_part}");
        }
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {op} {b_part}", format_rational(&self.a))
    }
}

/// Conjugate and norm together, in that order.
pub fn quad_norm_and_conjugate(z: &QuadFieldElement) -> (QuadFieldElement, Rational) {
    (z.conjugate(), z.norm())
}

/// Rectangular matrix over Q(sqrt k) with a fixed field parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadMatrix {
    k: i64,
    rows: usize,
    cols: usize,
    entries: Vec<QuadFieldElement>,
}

impl QuadMatrix {
    pub fn from_rows(k: i64, rows: Vec<Vec<QuadFieldElement>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(ExactError::Dimension("ragged rows".to_string()));
            }
            for e in row {
                if !e.is_rational() && e.field_parameter() != k {
                    return Err(ExactError::Dimension(format!(
                        "entry lives in Q(sqrt {}) not Q(sqrt {k})",
                        e.field_parameter()
                    )));
                }
                entries.push(e.clone());
            }
        }
        Ok(QuadMatrix { k, rows: r, cols: c, entries })
    }

    pub fn from_rational_matrix(m: &RationalMatrix, k: i64) -> Result<Self, ExactError> {
        let mut entries = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                entries.push(QuadFieldElement::from_rational(m.get(i, j).clone(), k)?);
            }
        }
        Ok(QuadMatrix { k, rows: m.rows(), cols: m.cols(), entries })
    }

    pub fn identity(n: usize, k: i64) -> Result<Self, ExactError> {
        let zero = QuadFieldElement::zero(k)?;
        let one = QuadFieldElement::one(k)?;
        let mut m = QuadMatrix {
            k,
            rows: n,
            cols: n,
            entries: vec![zero; n * n],
        };
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field_parameter(&self) -> i64 {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadFieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QuadFieldElement) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<QuadFieldElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QuadMatrix {
        let mut out = self.clone();
        out.rows = self.cols;
        out.cols = self.rows;
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &QuadMatrix) -> Result<QuadMatrix, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let zero = QuadFieldElement::zero(self.k)?;
        let mut out = QuadMatrix {
            k: self.k,
            rows: self.rows,
            cols: rhs.cols,
            entries: vec![zero; self.rows * rhs.cols],
        };
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = QuadFieldElement::zero(self.k)?;
                for l in 0..self.cols {
                    acc = &acc + &(self.get(i, l) * rhs.get(l, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[QuadFieldElement]) -> Result<Vec<QuadFieldElement>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = QuadFieldElement::zero(self.k)?;
            for j in 0..self.cols {
                acc = &acc + &(self.get(i, j) * &v[j]);
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn det(&self) -> Result<QuadFieldElement, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = QuadFieldElement::one(self.k)?;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else {
                return QuadFieldElement::zero(self.k);
            };
            if p != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(col, j, b);
                    m.set(p, j, a);
                }
                det = -&det;
            }
            let pv = m.get(col, col).clone();
            det = &det * &pv;
            let inv = pv.inverse()?;
            for r in (col + 1)..n {
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<QuadMatrix, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = QuadMatrix::identity(n, self.k)?;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else {
                return Err(ExactError::Singular);
            };
            if p != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    m.set(col, j, m.get(p, j).clone());
                    m.set(p, j, a);
                    let a = inv.get(col, j).clone();
                    inv.set(col, j, inv.get(p, j).clone());
                    inv.set(p, j, a);
                }
            }
            let scale = m.get(col, col).inverse()?;
            for j in 0..n {
                m.set(col, j, &scale * m.get(col, j));
                inv.set(col, j, &scale * inv.get(col, j));
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..n {
                    let mv = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, mv);
                    let iv = inv.get(r, j) - &(&factor * inv.get(col, j));
                    inv.set(r, j, iv);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(|e| e.is_rational())
    }

    pub fn to_rational_matrix(&self) -> Option<RationalMatrix> {
        if !self.is_rational() {
            return None;
        }
        let rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).rational_part().clone()).collect())
            .collect();
        Some(RationalMatrix::from_rows(rows).expect("rectangular by construction"))
    }
}
