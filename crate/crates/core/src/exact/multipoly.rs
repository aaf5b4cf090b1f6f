//! Sparse multivariate polynomials over the rationals. Terms are kept in a
//! BTreeMap keyed by exponent vector under graded lexicographic order, so the
//! leading term and the printed form are deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::{format_rational, ExactError, Rational};

/// Exponent vector. Ordered by total degree first, then lexicographically,
/// so the maximum element of a term map is the graded lex leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: Rational) -> Self {
        let n = vars.len();
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; n]), c);
        }
        p
    }

    /// The i-th variable as a polynomial.
    pub fn var(vars: Vec<String>, i: usize) -> Self {
        let n = vars.len();
        assert!(i < n, "variable index out of range");
        let mut exps = vec![0; n];
        exps[i] = 1;
        let mut p = MultiPoly::zero(vars);
        p.terms.insert(Monomial(exps), Rational::one());
        p
    }

    pub fn from_terms(
        vars: Vec<String>,
        terms: Vec<(Vec<u32>, Rational)>,
    ) -> Result<Self, ExactError> {
        let n = vars.len();
        let mut p = MultiPoly::zero(vars);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(ExactError::Dimension(format!(
                    "exponent vector of length {} in a {}-variable polynomial",
                    exps.len(),
                    n
                )));
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector, zero when absent.
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length mismatch");
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Graded lex leading term.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree of the polynomial, None when zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Some(d) when every term has total degree exactly d. The zero
    /// polynomial is homogeneous of any degree; it reports None.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.total_degree());
        let first = degrees.next()?;
        if degrees.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.vars.clone(), Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, ExactError> {
        if point.len() != self.nvars() {
            return Err(ExactError::Dimension(format!(
                "evaluated {}-variable polynomial at a point of length {}",
                self.nvars(),
                point.len()
            )));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x;
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            p.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        p
    }

    /// Substitutes x_i by the i-th entry of A * (x_1, ..., x_n)^t, i.e.
    /// computes f(Ax). A must be square of the variable count.
    pub fn compose_linear(&self, a: &RationalMatrix) -> Result<MultiPoly, ExactError> {
        let n = self.nvars();
        if a.rows() != n || a.cols() != n {
            return Err(ExactError::Dimension(format!(
                "substitution matrix is {}x{} for {} variables",
                a.rows(),
                a.cols(),
                n
            )));
        }
        let images: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let mut row = MultiPoly::zero(self.vars.clone());
                for j in 0..n {
                    let c = a.get(i, j);
                    if !c.is_zero() {
                        row = &row + &MultiPoly::var(self.vars.clone(), j).scale(c);
                    }
                }
                row
            })
            .collect();
        let mut acc = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(self.vars.clone(), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &images[i];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Same terms over a different variable name list of equal length.
    pub fn rename_vars(&self, vars: Vec<String>) -> MultiPoly {
        assert_eq!(vars.len(), self.nvars());
        MultiPoly {
            vars,
            terms: self.terms.clone(),
        }
    }
}

fn check_same_vars(a: &MultiPoly, b: &MultiPoly) {
    assert_eq!(
        a.vars, b.vars,
        "polynomials over different variable lists"
    );
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        check_same_vars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        check_same_vars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        check_same_vars(self, rhs);
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let exps: Vec<u32> = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest term first.
        for (m, c) in self.terms.iter().rev() {
            let positive = c.is_positive();
            if first {
                if !positive {
                    write!(f, "-")?;
                }
                first = false;
            } else if positive {
                write!(f, " + ")?;
            } else {
                write!(f, " - ")?;
            }
            let a = c.abs();
            let constant_term = m.total_degree() == 0;
            if !a.is_one() || constant_term {
                write!(f, "{}", format_rational(&a))?;
                if !constant_term {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (name, &e) in self.vars.iter().zip(&m.0) {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
            Ok(())?;
        }
        Ok(())
    }
}

/// Standard variable names for small arities: x, y, z, w, then z1, z2, ...
pub fn form_variables(n: usize) -> Vec<String> {
    if n <= 4 {
        ["x", "y", "z", "w"][..n]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (1..=n).map(|i| format!("z{i}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn xy_vars() -> Vec<String> {
        form_variables(2)
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![1, 1]);
        let c = Monomial(vec![0, 2]);
        let d = Monomial(vec![1, 0]);
        assert!(a > b && b > c, "within a degree, lex on exponents");
        assert!(c > d, "degree dominates");
    }

    #[test]
    fn arithmetic_cancels_cleanly() {
        let x = MultiPoly::var(xy_vars(), 0);
        let y = MultiPoly::var(xy_vars(), 1);
        let p = &(&x * &x) - &(&y * &y);
        let q = &(&x - &y) * &(&x + &y);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn leading_term_and_display() {
        let x = MultiPoly::var(xy_vars(), 0);
        let y = MultiPoly::var(xy_vars(), 1);
        let p = &(&(&x * &x) - &(&x * &y).scale(&rat(3))) + &(&y * &y);
        let (m, c) = p.leading().unwrap();
        assert_eq!(m.0, vec![2, 0]);
        assert_eq!(*c, rat(1));
        assert_eq!(p.to_string(), "x^2 - 3*x*y + y^2");
        let q = &(&x * &(&y * &y)) - &MultiPoly::constant(xy_vars(), ratio(1, 2));
        assert_eq!(q.to_string(), "x*y^2 - 1/2");
    }

    #[test]
    fn eval_matches_expansion() {
        let x = MultiPoly::var(xy_vars(), 0);
        let y = MultiPoly::var(xy_vars(), 1);
        let p = &(&x * &x) - &(&y * &y).scale(&rat(2)); // x^2 - 2y^2
        assert_eq!(p.eval(&[rat(3), rat(2)]).unwrap(), rat(1));
        assert!(p.eval(&[rat(1)]).is_err());
    }

    #[test]
    fn partial_derivatives() {
        let vars = form_variables(2);
        let x = MultiPoly::var(vars.clone(), 0);
        let y = MultiPoly::var(vars.clone(), 1);
        let p = &x * &(&y * &y); // x y^2
        assert_eq!(p.partial_derivative(0), &y * &y);
        assert_eq!(p.partial_derivative(1), (&x * &y).scale(&rat(2)));
    }

    #[test]
    fn linear_substitution() {
        let x = MultiPoly::var(xy_vars(), 0);
        let y = MultiPoly::var(xy_vars(), 1);
        let p = &(&x * &x) - &(&y * &y); // x^2 - y^2
        let a = RationalMatrix::from_int_rows(&[vec![1, 0], vec![0, 2]]);
        let q = p.compose_linear(&a).unwrap();
        let expected = &(&x * &x) - &(&y * &y).scale(&rat(4));
        assert_eq!(q, expected);
    }

    #[test]
    fn form_variable_names() {
        assert_eq!(form_variables(2), vec!["x", "y"]);
        assert_eq!(form_variables(4), vec!["x", "y", "z", "w"]);
        assert_eq!(form_variables(5)[4], "z5");
    }
}
