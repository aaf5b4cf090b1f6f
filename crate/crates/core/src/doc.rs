//! Versioned JSON documents for algebras, matrices, constructions,
//! verification outcomes, and report bundles. Emission is canonical:
//! pretty printed, struct fields in declaration order, one trailing
//! newline. Bracket and basis indices inside documents are 1-based.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::anosov::AnosovCertificate;
use crate::exact::{format_rational, parse_rational, ExactError, RationalMatrix, UniPoly};
use crate::lie::{LieAlgebra, LieError};

pub const SCHEMA: &str = "anosov-lab/1";

#[derive(Debug, Error)]
pub enum DocError {
    #[error("unsupported schema '{0}', expected '{SCHEMA}'")]
    Schema(String),
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("bracket entry ({i}, {j}) is invalid: {reason}")]
    Bracket { i: usize, j: usize, reason: String },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn require_schema(schema: &str) -> Result<(), DocError> {
    if schema == SCHEMA {
        Ok(())
    } else {
        Err(DocError::Schema(schema.to_string()))
    }
}

/// Serializes any document in the canonical byte form.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize infallibly");
    s.push('\n');
    s
}

pub fn from_json_str<T: DeserializeOwned>(s: &str) -> Result<T, DocError> {
    serde_json::from_str(s).map_err(|e| DocError::Malformed(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTerm {
    pub k: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<BracketTerm>,
}

/// Structure constants of an algebra on a named basis. Entries carry
/// i < j only; antisymmetry is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub schema: String,
    pub dim: usize,
    pub names: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraDocument {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let brackets = l
            .bracket_entries()
            .into_iter()
            .map(|(i, j, coords)| BracketEntry {
                i: i + 1,
                j: j + 1,
                terms: coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| BracketTerm {
                        k: k + 1,
                        coeff: format_rational(c),
                    })
                    .collect(),
            })
            .collect();
        AlgebraDocument {
            schema: SCHEMA.to_string(),
            dim: l.dim(),
            names: l.names().to_vec(),
            brackets,
        }
    }

    /// Rebuilds and validates the algebra, including the Jacobi identity.
    pub fn to_algebra(&self) -> Result<LieAlgebra, DocError> {
        require_schema(&self.schema)?;
        if self.dim == 0 {
            return Err(DocError::Malformed("dimension must be positive".to_string()));
        }
        if self.names.len() != self.dim {
            return Err(DocError::Malformed(format!(
                "{} names for dimension {}",
                self.names.len(),
                self.dim
            )));
        }
        let mut l = LieAlgebra::abelian(self.dim);
        let mut seen = std::collections::BTreeSet::new();
        for entry in &self.brackets {
            let bad = |reason: String| DocError::Bracket {
                i: entry.i,
                j: entry.j,
                reason,
            };
            if entry.i == 0 || entry.j == 0 || entry.i >= entry.j || entry.j > self.dim {
                return Err(bad("need 1 <= i < j <= dim".to_string()));
            }
            if !seen.insert((entry.i, entry.j)) {
                return Err(bad("duplicate entry".to_string()));
            }
            for term in &entry.terms {
                if term.k == 0 || term.k > self.dim {
                    return Err(bad(format!("target index {} out of range", term.k)));
                }
                let c = parse_rational(&term.coeff)?;
                l.add_bracket_term(entry.i - 1, entry.j - 1, term.k - 1, c);
            }
        }
        l.set_names(self.names.clone())?;
        l.validate()?;
        Ok(l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub schema: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

fn matrix_entries(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(m.get(i, j))).collect())
        .collect()
}

impl MatrixDocument {
    pub fn from_matrix(m: &RationalMatrix) -> Self {
        MatrixDocument {
            schema: SCHEMA.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            entries: matrix_entries(m),
        }
    }

    pub fn to_matrix(&self) -> Result<RationalMatrix, DocError> {
        require_schema(&self.schema)?;
        if self.entries.len() != self.rows
            || self.entries.iter().any(|row| row.len() != self.cols)
        {
            return Err(DocError::Malformed(format!(
                "entry grid does not match the declared {}x{} shape",
                self.rows, self.cols
            )));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for row in &self.entries {
            let mut out = Vec::with_capacity(self.cols);
            for s in row {
                out.push(parse_rational(s)?);
            }
            rows.push(out);
        }
        Ok(RationalMatrix::from_rows(rows)?)
    }
}

/// A constructed automorphism family member: the algebra, the matrix, and
/// the parameters that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionDocument {
    pub schema: String,
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub algebra: AlgebraDocument,
    pub automorphism: MatrixDocument,
}

impl ConstructionDocument {
    pub fn new(
        name: &str,
        params: &[(&str, String)],
        algebra: &LieAlgebra,
        automorphism: &RationalMatrix,
    ) -> Self {
        ConstructionDocument {
            schema: SCHEMA.to_string(),
            name: name.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            algebra: AlgebraDocument::from_algebra(algebra),
            automorphism: MatrixDocument::from_matrix(automorphism),
        }
    }
}

fn poly_coeffs(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceDocument {
    pub value_at_one: String,
    pub value_at_minus_one: String,
    pub reversal_gcd_degree: usize,
    pub band_root_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDocument {
    /// Ascending coefficients of one irreducible factor.
    pub coeffs: Vec<String>,
    pub degree: usize,
    pub multiplicity: u32,
    pub is_unit: bool,
}

/// Serialized form of a positive verification outcome. Polynomials are
/// listed by ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub dim: usize,
    pub char_poly: Vec<String>,
    pub constant_term: String,
    pub signature: [usize; 2],
    pub semisimple: bool,
    pub evidence: EvidenceDocument,
    pub factors: Vec<FactorDocument>,
    pub block_char_polys: Vec<Vec<String>>,
    pub automorphism: Vec<Vec<String>>,
}

impl CertificateDocument {
    pub fn from_certificate(c: &AnosovCertificate) -> Self {
        let (p, q) = c.signature.parts();
        CertificateDocument {
            dim: c.dim,
            char_poly: poly_coeffs(&c.char_poly),
            constant_term: c.constant_term.to_string(),
            signature: [p, q],
            semisimple: c.semisimple,
            evidence: EvidenceDocument {
                value_at_one: format_rational(&c.evidence.value_at_one),
                value_at_minus_one: format_rational(&c.evidence.value_at_minus_one),
                reversal_gcd_degree: c.evidence.reversal_gcd_degree,
                band_root_count: c.evidence.band_root_count,
            },
            factors: c
                .factors
                .iter()
                .map(|f| FactorDocument {
                    coeffs: poly_coeffs(&f.poly),
                    degree: f.degree,
                    multiplicity: f.multiplicity,
                    is_unit: f.is_unit,
                })
                .collect(),
            block_char_polys: c.block_char_polys.iter().map(poly_coeffs).collect(),
            automorphism: matrix_entries(&c.automorphism),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub schema: String,
    pub verdict: String,
    pub failures: Vec<String>,
    pub certificate: Option<CertificateDocument>,
}

impl VerifyDocument {
    pub fn pass(c: &AnosovCertificate) -> Self {
        VerifyDocument {
            schema: SCHEMA.to_string(),
            verdict: "PASS".to_string(),
            failures: Vec::new(),
            certificate: Some(CertificateDocument::from_certificate(c)),
        }
    }

    pub fn fail(failures: Vec<String>) -> Self {
        VerifyDocument {
            schema: SCHEMA.to_string(),
            verdict: "FAIL".to_string(),
            failures,
            certificate: None,
        }
    }
}

/// One classification table row with its recomputed verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub name: String,
    pub dim: usize,
    #[serde(rename = "type")]
    pub type_tuple: String,
    pub pfaffian_form: Option<String>,
    pub expected: String,
    pub expected_signature: Option<String>,
    pub verdict: String,
    pub signature: Option<String>,
    pub detail: String,
    pub certificate: Option<CertificateDocument>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub schema: String,
    pub rows: Vec<ReportRow>,
}

impl ReportBundle {
    pub fn new(mut rows: Vec<ReportRow>) -> Self {
        rows.sort_by(|a, b| a.name.cmp(&b.name));
        ReportBundle {
            schema: SCHEMA.to_string(),
            rows,
        }
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agrees)
    }

    pub fn disagreements(&self) -> Vec<&ReportRow> {
        self.rows.iter().filter(|r| !r.agrees).collect()
    }
}
