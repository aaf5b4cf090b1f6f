//! Exact certification of Anosov automorphisms: bracket preservation,
//! unimodularity via the characteristic polynomial, hyperbolicity via the
//! reversal-gcd and unit circle root count, semisimplicity, signatures, and
//! the coarse admissibility gates on types, Pfaffian regions, and abelian
//! factors.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::factor::factor_has_unit_roots;
use crate::exact::{
    circle_evidence, factor_over_z, perfect_square_root, schur_cohn_inside_unit_disk,
    CircleEvidence, ExactError, Integer, Rational, RationalMatrix, UniPoly,
};
use crate::forms::{binary_quadratic_class, pfaffian_form, BinaryQuadraticClass, FormsError};
use crate::lie::{is_isomorphism, max_abelian_factor, AbelianSplit, LieAlgebra, LieError, TypeTuple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnosovError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("hyperbolicity evidence does not certify, signature undefined")]
    NotHyperbolic,
    #[error("block split is not preserved by the matrix")]
    BlockSplitNotInvariant,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Characteristic polynomial together with the root-on-unit-circle evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicityReport {
    pub char_poly: UniPoly,
    pub evidence: CircleEvidence,
}

impl HyperbolicityReport {
    /// No eigenvalue has absolute value 1.
    pub fn is_hyperbolic(&self) -> bool {
        !self.evidence.on_circle()
    }
}

pub fn hyperbolicity_report(a: &RationalMatrix) -> Result<HyperbolicityReport, AnosovError> {
    let p = a.charpoly()?;
    let evidence = circle_evidence(&p)?;
    Ok(HyperbolicityReport { char_poly: p, evidence })
}

pub fn is_hyperbolic(a: &RationalMatrix) -> Result<bool, AnosovError> {
    Ok(hyperbolicity_report(a)?.is_hyperbolic())
}

/// Unimodularity in the lattice sense: some basis makes the map integral
/// with determinant of absolute value 1, equivalently the characteristic
/// polynomial is integral with constant term of absolute value 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularityReport {
    pub char_poly: UniPoly,
    pub integer_coefficients: bool,
    pub constant_term: Rational,
}

impl UnimodularityReport {
    pub fn is_unimodular(&self) -> bool {
        self.integer_coefficients && self.constant_term.abs().is_one()
    }
}

pub fn unimodularity_report(a: &RationalMatrix) -> Result<UnimodularityReport, AnosovError> {
    let p = a.charpoly()?;
    Ok(UnimodularityReport {
        integer_coefficients: p.has_integer_coeffs(),
        constant_term: p.constant_term(),
        char_poly: p,
    })
}

pub fn is_unimodular(a: &RationalMatrix) -> Result<bool, AnosovError> {
    Ok(unimodularity_report(a)?.is_unimodular())
}

/// True when the invertible map preserves every bracket. A singular map is
/// not an automorphism; only a dimension mismatch is an error.
pub fn is_automorphism(l: &LieAlgebra, a: &RationalMatrix) -> Result<bool, AnosovError> {
    if !a.is_square() || a.rows() != l.dim() {
        return Err(AnosovError::Dimension(format!(
            "{}x{} map on a dimension {} algebra",
            a.rows(),
            a.cols(),
            l.dim()
        )));
    }
    if a.det()?.is_zero() {
        return Ok(false);
    }
    Ok(is_isomorphism(l, l, a)?)
}

/// Semisimple means the square-free part of the characteristic polynomial
/// already annihilates the matrix.
pub fn is_semisimple(a: &RationalMatrix) -> Result<bool, AnosovError> {
    let p = a.charpoly()?;
    let m = p.squarefree_part();
    let image = a.eval_poly(&m)?;
    Ok(image == RationalMatrix::zeros(a.rows(), a.cols()))
}

/// Unordered pair {dim E+, dim E-} of expanding and contracting dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    smaller: usize,
    larger: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        Signature {
            smaller: p.min(q),
            larger: p.max(q),
        }
    }

    pub fn parts(&self) -> (usize, usize) {
        (self.smaller, self.larger)
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.smaller, self.larger)
    }
}

/// Contracting dimension is the number of roots inside the unit disk, the
/// rest expand. Requires certified hyperbolicity.
pub fn signature(report: &HyperbolicityReport) -> Result<Signature, AnosovError> {
    if !report.is_hyperbolic() {
        return Err(AnosovError::NotHyperbolic);
    }
    let n = report.char_poly.degree().unwrap_or(0);
    let q = schur_cohn_inside_unit_disk(&report.char_poly)?;
    Ok(Signature::new(n - q, q))
}

/// One irreducible factor of a characteristic polynomial. Unit means monic
/// with constant term of absolute value 1, so all roots are algebraic units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport {
    pub poly: UniPoly,
    pub degree: usize,
    pub multiplicity: u32,
    pub is_unit: bool,
}

fn factor_table(p: &UniPoly) -> Result<Vec<FactorReport>, AnosovError> {
    let f = factor_over_z(p)?;
    Ok(f.factors
        .iter()
        .map(|(g, e)| FactorReport {
            poly: g.clone(),
            degree: g.degree().unwrap_or(0),
            multiplicity: *e,
            is_unit: factor_has_unit_roots(g),
        })
        .collect())
}

/// Per-block characteristic polynomials and irreducible factors for a map
/// that is block lower triangular with respect to consecutive index blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFactors {
    pub size: usize,
    pub char_poly: UniPoly,
    pub factors: Vec<FactorReport>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueUnitReport {
    pub blocks: Vec<BlockFactors>,
}

impl EigenvalueUnitReport {
    pub fn all_units(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.factors.iter().all(|f| f.is_unit))
    }

    pub fn min_factor_degree(&self) -> Option<usize> {
        self.blocks
            .iter()
            .flat_map(|b| b.factors.iter().map(|f| f.degree))
            .min()
    }
}

/// sizes partitions the index range into consecutive blocks; the trailing
/// spans must be invariant, i.e. every block above the diagonal is zero.
pub fn eigenvalue_unit_report(
    a: &RationalMatrix,
    sizes: &[usize],
) -> Result<EigenvalueUnitReport, AnosovError> {
    let n: usize = sizes.iter().sum();
    if !a.is_square() || a.rows() != n {
        return Err(AnosovError::Dimension(format!(
            "{}x{} matrix against blocks of total size {n}",
            a.rows(),
            a.cols()
        )));
    }
    let mut starts = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        starts.push(acc);
        acc += s;
    }
    for (bi, (&si, &ni)) in starts.iter().zip(sizes).enumerate() {
        for (&sj, &nj) in starts.iter().zip(sizes).skip(bi + 1) {
            for i in si..si + ni {
                for j in sj..sj + nj {
                    if !a.get(i, j).is_zero() {
                        return Err(AnosovError::BlockSplitNotInvariant);
                    }
                }
            }
        }
    }
    let mut blocks = Vec::with_capacity(sizes.len());
    for (&s, &sz) in starts.iter().zip(sizes) {
        let idx: Vec<usize> = (s..s + sz).collect();
        let sub = a.principal_submatrix(&idx);
        let p = sub.charpoly()?;
        blocks.push(BlockFactors {
            size: sz,
            char_poly: p.clone(),
            factors: factor_table(&p)?,
        });
    }
    Ok(EigenvalueUnitReport { blocks })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailedCheck {
    Automorphism,
    Unimodular,
    Hyperbolic,
}

impl std::fmt::Display for FailedCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FailedCheck::Automorphism => "automorphism",
            FailedCheck::Unimodular => "unimodular",
            FailedCheck::Hyperbolic => "hyperbolic",
        };
        write!(f, "{s}")
    }
}

/// Everything needed to recheck a positive verdict from scratch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnosovCertificate {
    pub dim: usize,
    pub automorphism: RationalMatrix,
    pub char_poly: UniPoly,
    pub constant_term: Integer,
    pub evidence: CircleEvidence,
    pub semisimple: bool,
    pub signature: Signature,
    /// Induced blocks on the lower central series quotients when the basis
    /// is ordered by level; empty otherwise.
    pub block_char_polys: Vec<UniPoly>,
    pub factors: Vec<FactorReport>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    Pass(Box<AnosovCertificate>),
    Fail(Vec<FailedCheck>),
}

impl VerifyOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, VerifyOutcome::Pass(_))
    }

    pub fn certificate(&self) -> Option<&AnosovCertificate> {
        match self {
            VerifyOutcome::Pass(c) => Some(c),
            VerifyOutcome::Fail(_) => None,
        }
    }
}

/// Block sizes of the level decomposition when the basis is sorted by
/// level, None otherwise.
fn level_block_sizes(l: &LieAlgebra) -> Result<Option<Vec<usize>>, AnosovError> {
    let levels = l.basis_vector_levels()?;
    if levels.windows(2).any(|w| w[0] > w[1]) {
        return Ok(None);
    }
    let mut sizes: Vec<usize> = Vec::new();
    let mut cur = 0usize;
    for &lv in &levels {
        if lv != cur {
            sizes.push(0);
            cur = lv;
        }
        *sizes.last_mut().unwrap() += 1;
    }
    Ok(Some(sizes))
}

/// Runs the three checks and either assembles a certificate or lists the
/// failures. Certificates carry the factor table and, when the basis is
/// level ordered, the induced block polynomials.
pub fn verify_anosov(l: &LieAlgebra, a: &RationalMatrix) -> Result<VerifyOutcome, AnosovError> {
    let mut failures = Vec::new();
    if !is_automorphism(l, a)? {
        failures.push(FailedCheck::Automorphism);
    }
    let uni = unimodularity_report(a)?;
    if !uni.is_unimodular() {
        failures.push(FailedCheck::Unimodular);
    }
    let hyp = HyperbolicityReport {
        evidence: circle_evidence(&uni.char_poly)?,
        char_poly: uni.char_poly.clone(),
    };
    if !hyp.is_hyperbolic() {
        failures.push(FailedCheck::Hyperbolic);
    }
    if !failures.is_empty() {
        return Ok(VerifyOutcome::Fail(failures));
    }
    let coeffs = uni
        .char_poly
        .integer_coeffs()
        .expect("unimodularity check guarantees integer coefficients");
    let constant_term = coeffs.first().cloned().unwrap_or_else(Integer::zero);
    let block_char_polys = match level_block_sizes(l)? {
        Some(sizes) => match eigenvalue_unit_report(a, &sizes) {
            Ok(r) => r.blocks.into_iter().map(|b| b.char_poly).collect(),
            Err(AnosovError::BlockSplitNotInvariant) => Vec::new(),
            Err(e) => return Err(e),
        },
        None => Vec::new(),
    };
    let certificate = AnosovCertificate {
        dim: l.dim(),
        automorphism: a.clone(),
        signature: signature(&hyp)?,
        semisimple: is_semisimple(a)?,
        factors: factor_table(&uni.char_poly)?,
        constant_term,
        evidence: hyp.evidence,
        char_poly: uni.char_poly,
        block_char_polys,
    };
    Ok(VerifyOutcome::Pass(Box::new(certificate)))
}

/// Recomputes every field of a certificate from the algebra and the matrix.
/// A certificate that does not reproduce itself is rejected.
pub fn revalidate_certificate(
    l: &LieAlgebra,
    cert: &AnosovCertificate,
) -> Result<bool, AnosovError> {
    match verify_anosov(l, &cert.automorphism)? {
        VerifyOutcome::Pass(fresh) => Ok(*fresh == *cert),
        VerifyOutcome::Fail(_) => Ok(false),
    }
}

/// Admissibility of a lower central series type for carrying an Anosov
/// automorphism. For r >= 2 the first quotient needs dimension 4, or 3
/// twice in a row, with every later quotient at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeGate {
    pub tuple: TypeTuple,
    pub admissible: bool,
    pub reason: String,
    /// Lower bound on the dimension of any algebra passing this gate with
    /// the same number of quotients.
    pub minimum_dimension: usize,
}

pub fn type_gate(t: &TypeTuple) -> TypeGate {
    let dims = t.dims();
    let r = dims.len();
    let minimum_dimension = if r <= 1 { 2 } else { 2 * r + 2 };
    let (admissible, reason) = if r == 0 {
        (false, "empty type".to_string())
    } else if r == 1 {
        if dims[0] >= 2 {
            (true, "abelian with dimension at least 2".to_string())
        } else {
            (false, "abelian of dimension 1 admits only the trivial lattice maps".to_string())
        }
    } else if dims[0] >= 4 && dims[1..].iter().all(|&n| n >= 2) {
        (
            true,
            "first quotient at least 4, later quotients at least 2".to_string(),
        )
    } else if dims[0] == 3 && dims[1] == 3 && dims[2..].iter().all(|&n| n >= 2) {
        (
            true,
            "first two quotients both 3, later quotients at least 2".to_string(),
        )
    } else if dims.iter().any(|&n| n == 1) {
        (false, "a quotient of dimension 1 forces an eigenvalue of absolute value 1".to_string())
    } else if dims[0] == 2 {
        (false, "first quotient of dimension 2 is too small".to_string())
    } else {
        (false, "first quotient 3 must be followed by another 3".to_string())
    };
    TypeGate {
        tuple: t.clone(),
        admissible,
        reason,
        minimum_dimension,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionVerdict {
    Obstructed,
    NotObstructed,
    Inapplicable,
}

/// Obstruction scan of the plane region cut out by a binary quadratic
/// Pfaffian form. Definite forms bound the region; class 1 leaves finitely
/// many unit values; other classes have a fundamental automorph generating
/// infinitely many solutions. The solution list is supporting data only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionReport {
    pub verdict: RegionVerdict,
    pub criterion: String,
    pub quadratic_class: Option<Integer>,
    pub bound: i64,
    /// Integer solutions of x^2 - k y^2 = 1 with both entries in the box.
    pub solutions: Vec<(i64, i64)>,
}

fn pell_box_solutions(k: &Integer, bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for y in -bound..=bound {
        let rhs = Integer::one() + k * Integer::from(y) * Integer::from(y);
        if rhs.is_negative() {
            continue;
        }
        if let Some(x) = perfect_square_root(&rhs) {
            if x > Integer::from(bound) {
                continue;
            }
            let x: i64 = x.try_into().expect("bounded by the box");
            if x == 0 {
                out.push((0, y));
            } else {
                out.push((-x, y));
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn region_obstructions(l: &LieAlgebra, bound: i64) -> Result<RegionReport, AnosovError> {
    let inapplicable = |criterion: &str| RegionReport {
        verdict: RegionVerdict::Inapplicable,
        criterion: criterion.to_string(),
        quadratic_class: None,
        bound,
        solutions: Vec::new(),
    };
    let f = match pfaffian_form(l) {
        Ok(f) => f,
        Err(FormsError::Lie(LieError::NotTwoStep(_))) => {
            return Ok(inapplicable("algebra is not 2-step"))
        }
        Err(e) => return Err(e.into()),
    };
    if f.nvars() != 2 || f.is_zero() || f.degree() != 2 {
        return Ok(inapplicable(
            "pfaffian form is not a nonzero binary quadratic",
        ));
    }
    let k = match binary_quadratic_class(&f)? {
        BinaryQuadraticClass::Equivalent(k) => k,
        BinaryQuadraticClass::Degenerate => unreachable!("nonzero form"),
    };
    let solutions = pell_box_solutions(&k, bound);
    let (verdict, criterion) = if k.is_negative() {
        (
            RegionVerdict::Obstructed,
            "definite form, the unit region is bounded".to_string(),
        )
    } else if k.abs().is_one() {
        (
            RegionVerdict::Obstructed,
            "unit values form a finite nonempty set".to_string(),
        )
    } else {
        (
            RegionVerdict::NotObstructed,
            "indefinite non-unit class, solutions recur under the fundamental automorph".to_string(),
        )
    };
    Ok(RegionReport {
        verdict,
        criterion,
        quadratic_class: Some(k),
        bound,
        solutions,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbelianFactorVerdict {
    /// No abelian factor, the reduction gives no information.
    Deferred,
    /// Exactly one abelian direction: never Anosov.
    NotAnosov,
    /// Factor of dimension at least 2: Anosov iff the reduced algebra is.
    Reduced,
}

pub struct AbelianFactorReport {
    pub split: AbelianSplit,
    pub verdict: AbelianFactorVerdict,
}

pub fn abfactor_reduce(l: &LieAlgebra) -> Result<AbelianFactorReport, AnosovError> {
    let split = max_abelian_factor(l)?;
    let verdict = match split.abelian_dim {
        0 => AbelianFactorVerdict::Deferred,
        1 => AbelianFactorVerdict::NotAnosov,
        _ => AbelianFactorVerdict::Reduced,
    };
    Ok(AbelianFactorReport { split, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::exact::ratio;

    fn mat(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows)
    }

    fn h3() -> LieAlgebra {
        let mut l = LieAlgebra::abelian(3);
        l.add_bracket_term(0, 1, 2, rat(1));
        l
    }

    fn f3() -> LieAlgebra {
        let mut l = LieAlgebra::abelian(6);
        l.add_bracket_term(0, 1, 3, rat(1));
        l.add_bracket_term(0, 2, 4, rat(1));
        l.add_bracket_term(1, 2, 5, rat(1));
        l
    }

    fn nk(k: i64) -> LieAlgebra {
        let mut l = LieAlgebra::abelian(6);
        l.add_bracket_term(0, 2, 4, rat(1));
        l.add_bracket_term(0, 3, 5, rat(1));
        l.add_bracket_term(1, 2, 5, rat(k));
        l.add_bracket_term(1, 3, 4, rat(1));
        l
    }

    #[test]
    fn unimodularity_reports() {
        let r = unimodularity_report(&mat(&[vec![2, 1], vec![1, 1]])).unwrap();
        assert!(r.is_unimodular());
        assert_eq!(r.constant_term, rat(1));

        let mut half = RationalMatrix::zeros(2, 2);
        half.set(0, 0, rat(2));
        half.set(1, 1, ratio(1, 3));
        let r = unimodularity_report(&half).unwrap();
        assert!(!r.integer_coefficients);
        assert!(!r.is_unimodular());

        let r = unimodularity_report(&mat(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert!(r.integer_coefficients);
        assert!(!r.is_unimodular(), "constant term 6");
    }

    #[test]
    fn hyperbolicity_reports() {
        assert!(is_hyperbolic(&mat(&[vec![2, 1], vec![1, 1]])).unwrap());
        assert!(!is_hyperbolic(&mat(&[vec![0, -1], vec![1, 0]])).unwrap());
        assert!(!is_hyperbolic(&mat(&[vec![1, 1], vec![0, 1]])).unwrap());
        // Companion of x^2 - 4x + 1: eigenvalues 2 +- sqrt(3).
        assert!(is_hyperbolic(&mat(&[vec![0, -1], vec![1, 4]])).unwrap());
        // Modulus different from 1 everywhere includes a zero eigenvalue.
        assert!(is_hyperbolic(&mat(&[vec![0, 0], vec![0, 2]])).unwrap());
        let r = hyperbolicity_report(&mat(&[vec![1, 1], vec![0, 1]])).unwrap();
        assert!(r.evidence.value_at_one.is_zero());
    }

    #[test]
    fn automorphism_checks() {
        assert!(is_automorphism(&f3(), &RationalMatrix::identity(6)).unwrap());
        let dilation = mat(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 4]]);
        assert!(is_automorphism(&h3(), &dilation).unwrap());
        let bad = mat(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 3]]);
        assert!(!is_automorphism(&h3(), &bad).unwrap());
        assert!(!is_automorphism(&h3(), &RationalMatrix::zeros(3, 3)).unwrap());
        assert!(is_automorphism(&h3(), &RationalMatrix::identity(4)).is_err());
    }

    #[test]
    fn semisimplicity() {
        assert!(is_semisimple(&mat(&[vec![2, 1], vec![1, 1]])).unwrap());
        assert!(is_semisimple(&RationalMatrix::identity(3)).unwrap());
        assert!(!is_semisimple(&mat(&[vec![1, 1], vec![0, 1]])).unwrap());
    }

    #[test]
    fn signatures() {
        let sig = |m: &RationalMatrix| signature(&hyperbolicity_report(m).unwrap()).unwrap();
        assert_eq!(sig(&mat(&[vec![2, 1], vec![1, 1]])), Signature::new(1, 1));
        let a = mat(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]);
        assert_eq!(sig(&a), Signature::new(3, 0));
        // Inverting swaps expanding and contracting dimensions; the
        // unordered pair is unchanged.
        let mut b = mat(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 1]]);
        b.set(2, 2, ratio(1, 5));
        assert_eq!(sig(&b), Signature::new(1, 2));
        assert_eq!(sig(&b.inverse().unwrap()), Signature::new(1, 2));
        assert_eq!(Signature::new(3, 3).to_string(), "{3,3}");
        assert_eq!(Signature::new(4, 2), Signature::new(2, 4));
        let not_hyp = hyperbolicity_report(&RationalMatrix::identity(2)).unwrap();
        assert_eq!(signature(&not_hyp), Err(AnosovError::NotHyperbolic));
    }

    #[test]
    fn verify_on_small_cases() {
        // Abelian plane with the Fibonacci-like map: all three checks pass.
        let plane = LieAlgebra::abelian(2);
        let a = mat(&[vec![2, 1], vec![1, 1]]);
        match verify_anosov(&plane, &a).unwrap() {
            VerifyOutcome::Pass(cert) => {
                assert_eq!(cert.dim, 2);
                assert_eq!(cert.signature, Signature::new(1, 1));
                assert!(cert.semisimple);
                assert_eq!(cert.constant_term, Integer::from(1));
                assert_eq!(cert.factors.len(), 1);
                assert!(cert.factors[0].is_unit);
                assert_eq!(cert.factors[0].degree, 2);
                assert_eq!(cert.block_char_polys.len(), 1);
                assert!(revalidate_certificate(&plane, &cert).unwrap());
            }
            other => panic!("expected a pass, got {other:?}"),
        }

        match verify_anosov(&f3(), &RationalMatrix::identity(6)).unwrap() {
            VerifyOutcome::Fail(list) => assert_eq!(list, vec![FailedCheck::Hyperbolic]),
            other => panic!("expected hyperbolicity failure, got {other:?}"),
        }

        let dilation = mat(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 4]]);
        match verify_anosov(&h3(), &dilation).unwrap() {
            VerifyOutcome::Fail(list) => assert_eq!(list, vec![FailedCheck::Unimodular]),
            other => panic!("expected unimodularity failure, got {other:?}"),
        }

        match verify_anosov(&plane, &RationalMatrix::zeros(2, 2)).unwrap() {
            VerifyOutcome::Fail(list) => {
                assert!(list.contains(&FailedCheck::Automorphism));
                assert!(list.contains(&FailedCheck::Unimodular));
            }
            other => panic!("expected failures, got {other:?}"),
        }
    }

    #[test]
    fn block_reports() {
        let b = mat(&[vec![2, 1], vec![1, 1]]);
        let r = eigenvalue_unit_report(&b, &[2]).unwrap();
        assert_eq!(r.blocks.len(), 1);
        assert!(r.all_units());
        assert_eq!(r.min_factor_degree(), Some(2));

        let d = mat(&[vec![2, 0], vec![0, 3]]);
        let r = eigenvalue_unit_report(&d, &[2]).unwrap();
        assert!(!r.all_units());
        assert_eq!(r.min_factor_degree(), Some(1));

        assert_eq!(
            eigenvalue_unit_report(&b, &[1, 1]),
            Err(AnosovError::BlockSplitNotInvariant)
        );

        let b2 = mat(&[vec![5, 3], vec![3, 2]]);
        let block = RationalMatrix::block_diag(&[b.clone(), b2]);
        let r = eigenvalue_unit_report(&block, &[2, 2]).unwrap();
        assert_eq!(r.blocks[0].char_poly, UniPoly::from_integers(&[1, -3, 1]));
        assert_eq!(r.blocks[1].char_poly, UniPoly::from_integers(&[1, -7, 1]));
        assert!(eigenvalue_unit_report(&block, &[2]).is_err());
    }

    #[test]
    fn type_gates() {
        let gate = |dims: &[usize]| type_gate(&TypeTuple(dims.to_vec()));
        assert!(gate(&[3, 3]).admissible);
        assert!(gate(&[4, 2]).admissible);
        assert!(gate(&[5, 2]).admissible);
        assert!(gate(&[3, 3, 2]).admissible);
        assert!(gate(&[4, 2, 2]).admissible);
        assert!(gate(&[6, 2]).admissible);
        assert!(gate(&[2]).admissible);
        assert!(!gate(&[3, 2]).admissible);
        assert!(!gate(&[2, 1]).admissible);
        assert!(!gate(&[4, 1]).admissible);
        assert!(!gate(&[2, 2]).admissible);
        assert!(!gate(&[3, 3, 1]).admissible);
        assert!(!gate(&[1]).admissible);
        assert_eq!(gate(&[3, 3]).minimum_dimension, 6);
        assert_eq!(gate(&[3, 3, 2]).minimum_dimension, 8);
        assert_eq!(gate(&[2]).minimum_dimension, 2);
    }

    #[test]
    fn region_reports() {
        let r = region_obstructions(&nk(1), 10_000).unwrap();
        assert_eq!(r.verdict, RegionVerdict::Obstructed);
        assert_eq!(r.quadratic_class, Some(Integer::from(1)));
        assert_eq!(r.solutions, vec![(-1, 0), (1, 0)]);

        let r = region_obstructions(&nk(2), 100).unwrap();
        assert_eq!(r.verdict, RegionVerdict::NotObstructed);
        assert!(r.solutions.contains(&(3, 2)));
        assert!(r.solutions.contains(&(17, 12)));
        assert!(r.solutions.contains(&(99, 70)));

        let r = region_obstructions(&nk(-1), 100).unwrap();
        assert_eq!(r.verdict, RegionVerdict::Obstructed);
        assert!(r.solutions.contains(&(0, -1)), "x^2 + y^2 = 1 circle points");

        // Zero Pfaffian form: criterion silent.
        let mut g = LieAlgebra::abelian(8);
        g.add_bracket_term(0, 1, 6, rat(1));
        g.add_bracket_term(0, 2, 7, rat(1));
        g.add_bracket_term(3, 4, 6, rat(1));
        g.add_bracket_term(3, 5, 7, rat(1));
        assert_eq!(
            region_obstructions(&g, 100).unwrap().verdict,
            RegionVerdict::Inapplicable
        );

        // One pairing variable only: not binary.
        assert_eq!(
            region_obstructions(&h3(), 100).unwrap().verdict,
            RegionVerdict::Inapplicable
        );

        // 3-step input: the criterion does not apply at all.
        let mut l4 = LieAlgebra::abelian(4);
        l4.add_bracket_term(0, 1, 2, rat(1));
        l4.add_bracket_term(0, 2, 3, rat(1));
        assert_eq!(
            region_obstructions(&l4, 100).unwrap().verdict,
            RegionVerdict::Inapplicable
        );
    }

    #[test]
    fn region_dichotomy_over_square_free_k() {
        for k in -30i64..=30 {
            if k == 0 || !crate::exact::is_square_free(&Integer::from(k)).unwrap() {
                continue;
            }
            let r = region_obstructions(&nk(k), 50).unwrap();
            let expect_obstructed = k < 0 || k == 1;
            assert_eq!(
                r.verdict == RegionVerdict::Obstructed,
                expect_obstructed,
                "k = {k}"
            );
        }
    }

    #[test]
    fn abelian_factor_rule() {
        let l = h3().direct_sum(&LieAlgebra::abelian(1)).unwrap();
        let r = abfactor_reduce(&l).unwrap();
        assert_eq!(r.verdict, AbelianFactorVerdict::NotAnosov);
        assert_eq!(r.split.abelian_dim, 1);

        let l = h3()
            .direct_sum(&h3())
            .unwrap()
            .direct_sum(&LieAlgebra::abelian(2))
            .unwrap();
        let r = abfactor_reduce(&l).unwrap();
        assert_eq!(r.verdict, AbelianFactorVerdict::Reduced);
        assert_eq!(r.split.reduced, h3().direct_sum(&h3()).unwrap());

        let r = abfactor_reduce(&f3()).unwrap();
        assert_eq!(r.verdict, AbelianFactorVerdict::Deferred);
    }
}
