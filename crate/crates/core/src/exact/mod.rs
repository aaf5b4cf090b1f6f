//! Arbitrary precision exact arithmetic: integers, rationals, quadratic field
//! elements, polynomials, matrices, and the number theoretic and root counting
//! routines the rest of the crate trusts.

pub mod factor;
pub mod matrix;
pub mod multipoly;
pub mod pell;
pub mod poly;
pub mod quad;
pub mod schur;
pub mod sturm;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

pub use factor::{factor_over_z, Factorization};
pub use matrix::RationalMatrix;
pub use multipoly::{form_variables, Monomial, MultiPoly};
pub use pell::pell_fundamental;
pub use poly::UniPoly;
pub use quad::{QuadFieldElement, QuadMatrix};
pub use schur::{
    circle_evidence, has_root_on_unit_circle, is_hyperbolic_poly, schur_cohn_inside_unit_disk,
    CircleEvidence,
};
pub use sturm::{sturm_real_root_count, Bound};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("zero polynomial has no well-defined root data")]
    ZeroPolynomial,
    #[error("polynomial has a root on the unit circle")]
    RootOnUnitCircle,
    #[error("degree {degree} exceeds the factorization bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("integer {0} resists trial division up to 10^6")]
    TrialDivisionExhausted(String),
    #[error("polynomial does not have integer coefficients")]
    NonIntegerCoefficients,
    #[error("{0} is not admissible here: {1}")]
    InvalidParameter(String, String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
}

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(int(n))
}

/// Builds n/d, reducing and normalizing the sign into the numerator.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(int(n), int(d))
}

/// Renders a rational as "p/q", or just "p" when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "p" or "p/q" with optional sign; the result is reduced and has a
/// positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let reject = || ExactError::Parse(s.to_string());
    match t.split_once('/') {
        None => t.parse::<Integer>().map(Rational::from_integer).map_err(|_| reject()),
        Some((num, den)) => {
            let n: Integer = num.trim().parse().map_err(|_| reject())?;
            let d: Integer = den.trim().parse().map_err(|_| reject())?;
            if d.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Floor square root for nonnegative input, exact root test included.
pub fn perfect_square_root(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

pub(crate) const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Splits n = k * q^2 with k square-free and q > 0, preserving the sign of n
/// in k. 0 maps to (0, 1). Factoring is by trial division up to 10^6; a
/// residual cofactor too large to certify square-free is reported as an error
/// instead of guessed at.
pub fn square_free_part(n: &Integer) -> Result<(Integer, Integer), ExactError> {
    if n.is_zero() {
        return Ok((Integer::zero(), Integer::one()));
    }
    let negative = n.is_negative();
    let mut m = n.abs();
    let mut k = Integer::one();
    let mut q = Integer::one();
    let mut p: u64 = 2;
    let mut small_residue = false;
    while p <= TRIAL_DIVISION_BOUND {
        let big_p = Integer::from(p);
        if &(&big_p * &big_p) > &m {
            // m has no factor below its square root left, so it is 1 or prime.
            small_residue = true;
            break;
        }
        let mut e = 0u32;
        while (&m % &big_p).is_zero() {
            m /= &big_p;
            e += 1;
        }
        if e > 0 {
            if e % 2 == 1 {
                k *= &big_p;
            }
            for _ in 0..(e / 2) {
                q *= &big_p;
            }
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if !m.is_one() {
        if small_residue {
            k *= &m;
        } else if let Some(r) = perfect_square_root(&m) {
            // q need not be square-free, so a full square folds in directly.
            q *= r;
        } else if m <= Integer::from(10u64).pow(12) {
            // No prime factor below 10^6 and not a square, so any repeated
            // prime p would force p^2 > 10^12 >= m. Square-free.
            k *= &m;
        } else {
            return Err(ExactError::TrialDivisionExhausted(m.to_string()));
        }
    }
    if negative {
        k = -k;
    }
    Ok((k, q))
}

/// True when k has no repeated prime factor. k = 0 counts as square-free by
/// the convention used for quadratic form classes.
pub fn is_square_free(k: &Integer) -> Result<bool, ExactError> {
    let (s, _) = square_free_part(k)?;
    Ok(&s == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_format_round_trip() {
        let cases = ["0", "5", "-5", "3/4", "-3/4", "22/7"];
        for c in cases {
            let r = parse_rational(c).unwrap();
            assert_eq!(format_rational(&r), c);
        }
        // Unreduced and oddly signed input normalizes.
        assert_eq!(format_rational(&parse_rational("4/8").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational(" -10/5 ").unwrap()), "-2");
    }

    #[test]
    fn rational_parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(matches!(parse_rational("1/0"), Err(ExactError::DivisionByZero)));
    }

    #[test]
    fn square_free_part_known_values() {
        let cases: [(i64, i64, i64); 8] = [
            (12, 3, 2),
            (45, 5, 3),
            (1, 1, 1),
            (0, 0, 1),
            (-12, -3, 2),
            (2, 2, 1),
            (49, 1, 7),
            (-49, -1, 7),
        ];
        for (n, k, q) in cases {
            let (got_k, got_q) = square_free_part(&int(n)).unwrap();
            assert_eq!((got_k, got_q), (int(k), int(q)), "n = {n}");
        }
    }

    #[test]
    fn square_free_part_matches_naive_scan() {
        // Independent check: largest square divisor by direct search.
        for n in -400i64..=400 {
            let (k, q) = square_free_part(&int(n)).unwrap();
            assert_eq!(&k * &q * &q, int(n));
            if n != 0 {
                let mut best = 1i64;
                let mut d = 1i64;
                while d * d <= n.abs() {
                    if n % (d * d) == 0 {
                        best = d;
                    }
                    d += 1;
                }
                assert_eq!(q, int(best), "n = {n}");
            }
        }
    }

    #[test]
    fn square_free_predicate() {
        assert!(is_square_free(&int(30)).unwrap());
        assert!(is_square_free(&int(-15)).unwrap());
        assert!(is_square_free(&int(0)).unwrap());
        assert!(!is_square_free(&int(18)).unwrap());
    }

    #[test]
    fn perfect_square_root_behaviour() {
        assert_eq!(perfect_square_root(&int(144)), Some(int(12)));
        assert_eq!(perfect_square_root(&int(145)), None);
        assert_eq!(perfect_square_root(&int(0)), Some(int(0)));
        assert_eq!(perfect_square_root(&int(-4)), None);
    }
}
