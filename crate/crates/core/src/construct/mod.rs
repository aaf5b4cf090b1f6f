//! Catalog of the nilpotent Lie algebras used throughout the crate, the
//! grammar for naming them, gradations, and the explicit constructions
//! built on top of them: graded sums, duals, square root witnesses, and
//! the Anosov automorphism families.

use thiserror::Error;

use crate::exact::{int, is_square_free, ExactError, Integer, Rational};
use crate::lie::{LieAlgebra, LieError};

use num_traits::{One, Zero};

mod automorphisms;
mod dual;
mod graded;
mod witness;

pub use automorphisms::{
    abelian_automorphism, direct_sum_automorphism, extend_on_derived, f3_induced_automorphism,
    g_automorphism, h1_anosov_automorphism, h1_base_automorphism, hk_automorphism, hk_balanced_n,
    lk_automorphism, nk_automorphism, LkOutcome,
};
pub use dual::{dual_transport, j_span, scheuneman_dual};
pub use graded::{graded_sum, GradedSum};
pub use witness::{sqrt_form_witness, SqrtFamily, SqrtFormWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("unknown catalog name '{0}'")]
    UnknownName(String),
    #[error("invalid parameter for {name}: {reason}")]
    Parameter { name: String, reason: String },
    #[error("weights do not grade the bracket: d({i}) + d({j}) != d({k})")]
    GradationViolation { i: usize, j: usize, k: usize },
    #[error("structure constants must be integers")]
    NotIntegral,
    #[error("matrix must have integer entries and determinant 1 or -1")]
    NotUnimodular,
    #[error("matrix must have distinct real eigenvalues, none equal to 1 or -1")]
    SpectrumNotRealHyperbolic,
    #[error("polynomial degree {0} is too small, need at least 2")]
    DegreeTooSmall(usize),
    #[error("the map z -> J_z is not injective, the dual is undefined")]
    DegenerateJSpan,
    #[error("{a}^2 - {k}*{b}^2 is not 1, not a Pell pair")]
    NotPellPair { k: i64, a: i64, b: i64 },
    #[error("n^2 = {nsq} does not exceed a + b*sqrt(k), the extension is not hyperbolic")]
    MarginTooSmall { nsq: i64 },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Positive weight per basis vector. A gradation requires every nonzero
/// structure constant c_ij^k to satisfy d(i) + d(j) = d(k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gradation(pub Vec<usize>);

impl Gradation {
    pub fn new(weights: Vec<usize>) -> Self {
        Gradation(weights)
    }

    pub fn weights(&self) -> &[usize] {
        &self.0
    }

    pub fn validate(&self, l: &LieAlgebra) -> Result<(), ConstructError> {
        if self.0.len() != l.dim() {
            return Err(ConstructError::Parameter {
                name: "gradation".to_string(),
                reason: format!("{} weights for dimension {}", self.0.len(), l.dim()),
            });
        }
        if self.0.iter().any(|&w| w == 0) {
            return Err(ConstructError::Parameter {
                name: "gradation".to_string(),
                reason: "weights must be positive".to_string(),
            });
        }
        for (i, j, coords) in l.bracket_entries() {
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() && self.0[i] + self.0[j] != self.0[k] {
                    return Err(ConstructError::GradationViolation {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                    });
                }
            }
        }
        Ok(())
    }
}

/// The gradation whose weight on each basis vector is its level in the
/// lower central series. This is a valid gradation for every catalog
/// entry, though not for every nilpotent algebra.
pub fn level_gradation(l: &LieAlgebra) -> Result<Gradation, ConstructError> {
    let g = Gradation(l.basis_vector_levels()?);
    g.validate(l)?;
    Ok(g)
}

/// Builds a catalog algebra from its name. Single entries are
/// `h3, h5, h7, ...` (Heisenberg), `f3`, `g`, `h`, `l4`, `h3h5`,
/// `n_k`, `h_k`, `l_k` with a literal integer in place of k, and
/// `abelian(n)`. Sums are written with `+`, as in `h3+h3+abelian(2)`;
/// summand bases are interleaved by level and renamed X/Z.
pub fn catalog(spec: &str) -> Result<LieAlgebra, ConstructError> {
    let parts: Vec<&str> = spec.split('+').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(ConstructError::UnknownName(spec.to_string()));
    }
    let mut alg = catalog_single(parts[0])?;
    for part in &parts[1..] {
        alg = alg.direct_sum(&catalog_single(part)?)?;
    }
    alg.validate()?;
    Ok(alg)
}

fn catalog_single(name: &str) -> Result<LieAlgebra, ConstructError> {
    match name {
        "f3" => return f3_algebra(),
        "g" => return g_algebra(),
        "h" => return h_algebra(),
        "l4" => return l4_algebra(),
        "h3h5" => {
            let a = heisenberg(1)?;
            let b = heisenberg(2)?;
            return Ok(a.direct_sum(&b)?);
        }
        _ => {}
    }
    if let Some(arg) = name.strip_prefix("abelian(").and_then(|r| r.strip_suffix(')')) {
        let n: usize = arg.parse().map_err(|_| ConstructError::UnknownName(name.to_string()))?;
        if n == 0 {
            return Err(ConstructError::Parameter {
                name: "abelian".to_string(),
                reason: "dimension must be positive".to_string(),
            });
        }
        let mut l = LieAlgebra::abelian(n);
        l.rename_by_level()?;
        return Ok(l);
    }
    if let Some(arg) = name.strip_prefix("n_") {
        let k = parse_param(name, arg)?;
        square_free_param("n_k", k, true)?;
        return nk_algebra(&int(k));
    }
    if let Some(arg) = name.strip_prefix("h_") {
        let k = parse_param(name, arg)?;
        square_free_param("h_k", k, false)?;
        return hk_algebra(&int(k));
    }
    if let Some(arg) = name.strip_prefix("l_") {
        let k = parse_param(name, arg)?;
        square_free_param("l_k", k, false)?;
        return lk_algebra(&int(k));
    }
    if let Some(arg) = name.strip_prefix('h') {
        if let Ok(n) = arg.parse::<usize>() {
            if n >= 3 && n % 2 == 1 {
                return heisenberg(n / 2);
            }
            return Err(ConstructError::Parameter {
                name: "heisenberg".to_string(),
                reason: format!("dimension {n} must be odd and at least 3"),
            });
        }
    }
    Err(ConstructError::UnknownName(name.to_string()))
}

fn parse_param(name: &str, arg: &str) -> Result<i64, ConstructError> {
    arg.parse().map_err(|_| ConstructError::UnknownName(name.to_string()))
}

fn square_free_param(name: &str, k: i64, allow_negative: bool) -> Result<(), ConstructError> {
    let bad = |reason: String| ConstructError::Parameter { name: name.to_string(), reason };
    if k == 0 || (!allow_negative && k < 0) {
        return Err(bad(format!("k = {k} is outside the parameter domain")));
    }
    if !is_square_free(&int(k))? {
        return Err(bad(format!("k = {k} must be square-free")));
    }
    Ok(())
}

/// Heisenberg algebra of dimension 2m + 1: m generator pairs sharing one
/// central direction.
fn heisenberg(m: usize) -> Result<LieAlgebra, ConstructError> {
    let n = 2 * m + 1;
    let mut l = LieAlgebra::abelian(n);
    for i in 0..m {
        l.add_bracket_term(2 * i, 2 * i + 1, n - 1, Rational::one());
    }
    l.rename_by_level()?;
    Ok(l)
}

/// Free 2-step algebra on three generators, type (3, 3).
fn f3_algebra() -> Result<LieAlgebra, ConstructError> {
    let mut l = LieAlgebra::abelian(6);
    l.add_bracket_term(0, 1, 3, Rational::one());
    l.add_bracket_term(0, 2, 4, Rational::one());
    l.add_bracket_term(1, 2, 5, Rational::one());
    l.rename_by_level()?;
    Ok(l)
}

/// Type (6, 2): two generator triples sharing a plane of center directions.
fn g_algebra() -> Result<LieAlgebra, ConstructError> {
    let mut l = LieAlgebra::abelian(8);
    l.add_bracket_term(0, 1, 6, Rational::one());
    l.add_bracket_term(0, 2, 7, Rational::one());
    l.add_bracket_term(3, 4, 6, Rational::one());
    l.add_bracket_term(3, 5, 7, Rational::one());
    l.rename_by_level()?;
    Ok(l)
}

/// Type (4, 4): the bracket pairs (X1, X2) against (X3, X4) into a
/// 4-dimensional center, one direction per pair.
fn h_algebra() -> Result<LieAlgebra, ConstructError> {
    let mut l = LieAlgebra::abelian(8);
    l.add_bracket_term(0, 2, 4, Rational::one());
    l.add_bracket_term(0, 3, 5, Rational::one());
    l.add_bracket_term(1, 2, 6, Rational::one());
    l.add_bracket_term(1, 3, 7, Rational::one());
    l.rename_by_level()?;
    Ok(l)
}

/// Filiform algebra of dimension 4, type (2, 1, 1).
fn l4_algebra() -> Result<LieAlgebra, ConstructError> {
    let mut l = LieAlgebra::abelian(4);
    l.add_bracket_term(0, 1, 2, Rational::one());
    l.add_bracket_term(0, 2, 3, Rational::one());
    l.rename_by_level()?;
    Ok(l)
}

pub(crate) fn nk_algebra(k: &Integer) -> Result<LieAlgebra, ConstructError> {
    let mut l = LieAlgebra::abelian(6);
    l.add_bracket_term(0, 2, 4, Rational::one());
    l.add_bracket_term(0, 3, 5, Rational::one());
    l.add_bracket_term(1, 2, 5, Rational::from_integer(k.clone()));
    l.add_bracket_term(1, 3, 4, Rational::one());
    l.rename_by_level()?;
    Ok(l)
}

pub(crate) fn hk_algebra(k: &Integer) -> Result<LieAlgebra, ConstructError> {
    let mut l = LieAlgebra::abelian(8);
    l.add_bracket_term(0, 1, 4, Rational::one());
    l.add_bracket_term(0, 2, 5, Rational::one());
    l.add_bracket_term(0, 3, 6, Rational::from_integer(k.clone()));
    l.add_bracket_term(1, 2, 6, -Rational::one());
    l.add_bracket_term(1, 3, 5, -Rational::one());
    l.add_bracket_term(2, 3, 7, Rational::one());
    l.rename_by_level()?;
    Ok(l)
}

pub(crate) fn lk_algebra(k: &Integer) -> Result<LieAlgebra, ConstructError> {
    let kq = Rational::from_integer(k.clone());
    let mut l = LieAlgebra::abelian(8);
    l.add_bracket_term(0, 2, 4, Rational::one());
    l.add_bracket_term(1, 2, 5, Rational::one());
    l.add_bracket_term(0, 3, 5, Rational::one());
    l.add_bracket_term(1, 3, 4, kq.clone());
    l.add_bracket_term(0, 4, 6, Rational::one());
    l.add_bracket_term(1, 5, 6, kq);
    l.add_bracket_term(0, 5, 7, Rational::one());
    l.add_bracket_term(1, 4, 7, Rational::one());
    l.rename_by_level()?;
    Ok(l)
}

/// One row of the machine-readable catalog index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameter: &'static str,
    pub type_tuple: &'static str,
    pub status: &'static str,
}

/// Index of the single catalog entries: name pattern, parameter domain,
/// type, and whether the family carries an Anosov automorphism.
pub fn catalog_index() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "h{2m+1}",
            parameter: "m >= 1, written h3, h5, h7, ...",
            type_tuple: "(2m, 1)",
            status: "not Anosov",
        },
        CatalogEntry {
            name: "f3",
            parameter: "",
            type_tuple: "(3,3)",
            status: "Anosov",
        },
        CatalogEntry {
            name: "g",
            parameter: "",
            type_tuple: "(6,2)",
            status: "Anosov",
        },
        CatalogEntry {
            name: "h",
            parameter: "",
            type_tuple: "(4,4)",
            status: "Anosov",
        },
        CatalogEntry {
            name: "l4",
            parameter: "",
            type_tuple: "(2,1,1)",
            status: "not Anosov",
        },
        CatalogEntry {
            name: "h3h5",
            parameter: "",
            type_tuple: "(6,2)",
            status: "not Anosov",
        },
        CatalogEntry {
            name: "n_k",
            parameter: "k square-free, nonzero",
            type_tuple: "(4,2)",
            status: "Anosov for k >= 2, not Anosov for k = 1 and k < 0",
        },
        CatalogEntry {
            name: "h_k",
            parameter: "k square-free, k >= 1",
            type_tuple: "(4,4)",
            status: "Anosov",
        },
        CatalogEntry {
            name: "l_k",
            parameter: "k square-free, k >= 1",
            type_tuple: "(4,2,2)",
            status: "Anosov for k >= 2, not Anosov for k = 1",
        },
        CatalogEntry {
            name: "abelian(n)",
            parameter: "n >= 1",
            type_tuple: "(n)",
            status: "Anosov for n >= 2",
        },
    ]
}
