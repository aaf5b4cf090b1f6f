//! Tensoring a graded algebra with Q[x]/(p) for a hyperbolic integer
//! polynomial p. The result carries an automorphism acting on each weight-d
//! block as multiplication by x^d, which is Anosov whenever the input data
//! satisfy the preconditions checked here.

use crate::exact::{
    sturm_real_root_count, Bound, Rational, RationalMatrix, UniPoly,
};
use crate::lie::LieAlgebra;

use num_traits::{One, Signed, Zero};

use super::{ConstructError, Gradation};

#[derive(Clone, Debug, PartialEq)]
pub struct GradedSum {
    pub algebra: LieAlgebra,
    pub automorphism: RationalMatrix,
    /// Description of basis vector i*s + t as "name*x^t" in terms of the
    /// input basis and the residue powers.
    pub basis: Vec<String>,
}

/// Coordinates of x^e mod p for e up to max_e inclusive, p monic.
fn power_table(p: &UniPoly, max_e: usize) -> Vec<Vec<Rational>> {
    let s = p.degree().expect("nonzero modulus");
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(max_e + 1);
    for e in 0..=max_e {
        if e < s {
            let mut v = vec![Rational::zero(); s];
            v[e] = Rational::one();
            table.push(v);
        } else {
            let prev = table[e - 1].clone();
            let mut v = vec![Rational::zero(); s];
            for i in 0..s - 1 {
                v[i + 1] = prev[i].clone();
            }
            let lead = prev[s - 1].clone();
            for (i, item) in v.iter_mut().enumerate() {
                *item = &*item - &(&lead * &p.coeff(i));
            }
            table.push(v);
        }
    }
    table
}

/// The spectrum condition on the base matrix: distinct real eigenvalues,
/// none equal to 1 or -1. Together with unimodularity this makes every
/// eigenvalue power off the unit circle.
fn spectrum_is_real_hyperbolic(p: &UniPoly) -> Result<bool, ConstructError> {
    let s = p.degree().expect("characteristic polynomial is monic");
    let sq = p.squarefree_part();
    if sq.degree() != Some(s) {
        return Ok(false);
    }
    if p.eval(&Rational::one()).is_zero() || p.eval(&(-Rational::one())).is_zero() {
        return Ok(false);
    }
    let real = sturm_real_root_count(&sq, &Bound::NegInf, &Bound::PosInf)
        .map_err(ConstructError::Exact)?;
    Ok(real == s)
}

/// Builds L tensor Q[x]/(p) with p the characteristic polynomial of b,
/// basis v_{i,t} = e_i * x^t ordered i-major, together with the
/// automorphism acting as the companion power C^{d_i} on block i.
pub fn graded_sum(
    l: &LieAlgebra,
    grad: &Gradation,
    b: &RationalMatrix,
) -> Result<GradedSum, ConstructError> {
    grad.validate(l)?;
    let entries = l.bracket_entries();
    for (_, _, coords) in &entries {
        if coords.iter().any(|c| !c.denom().is_one()) {
            return Err(ConstructError::NotIntegral);
        }
    }
    if !b.is_square() || !b.is_integer() {
        return Err(ConstructError::NotUnimodular);
    }
    let s = b.rows();
    if s < 2 {
        return Err(ConstructError::DegreeTooSmall(s));
    }
    let det = b.det()?;
    if !det.abs().is_one() {
        return Err(ConstructError::NotUnimodular);
    }
    let p = b.charpoly()?;
    if !spectrum_is_real_hyperbolic(&p)? {
        return Err(ConstructError::SpectrumNotRealHyperbolic);
    }

    let n = l.dim();
    let table = power_table(&p, 2 * s - 2);
    let mut algebra = LieAlgebra::abelian(n * s);
    for (i, j, coords) in &entries {
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for t in 0..s {
                for u in 0..s {
                    for (r, coeff) in table[t + u].iter().enumerate() {
                        if !coeff.is_zero() {
                            algebra.add_bracket_term(i * s + t, j * s + u, k * s + r, c * coeff);
                        }
                    }
                }
            }
        }
    }

    let c = RationalMatrix::companion(&p)?;
    let blocks: Vec<RationalMatrix> = grad
        .weights()
        .iter()
        .map(|&d| c.pow(d as u32))
        .collect::<Result<_, _>>()?;
    let automorphism = RationalMatrix::block_diag(&blocks);

    let mut basis = Vec::with_capacity(n * s);
    for i in 0..n {
        for t in 0..s {
            basis.push(format!("{}*x^{}", l.name(i), t));
        }
    }
    algebra.validate()?;
    algebra.rename_by_level()?;
    Ok(GradedSum { algebra, automorphism, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anosov::{verify_anosov, VerifyOutcome};
    use crate::construct::{catalog, level_gradation};
    use crate::exact::rat;
    use crate::forms::{binary_quadratic_class, pfaffian_form, BinaryQuadraticClass};

    fn mat(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows)
    }

    fn certified(l: &LieAlgebra, a: &RationalMatrix) -> crate::anosov::AnosovCertificate {
        match verify_anosov(l, a).unwrap() {
            VerifyOutcome::Pass(c) => *c,
            VerifyOutcome::Fail(f) => panic!("expected a certificate, failed {f:?}"),
        }
    }

    #[test]
    fn heisenberg_sum_doubles_to_type_4_2() {
        let h3 = catalog("h3").unwrap();
        let grad = level_gradation(&h3).unwrap();
        let b = mat(&[vec![2, 1], vec![1, 1]]);
        let out = graded_sum(&h3, &grad, &b).unwrap();
        assert_eq!(out.algebra.type_of().unwrap().to_string(), "(4,2)");
        assert_eq!(out.basis[1], "X1*x^1");
        assert_eq!(out.basis[4], "Z1*x^0");

        let cert = certified(&out.algebra, &out.automorphism);
        assert_eq!(cert.signature.parts(), (3, 3));

        let pf = pfaffian_form(&out.algebra).unwrap();
        assert_eq!(pf.poly().to_string(), "x^2 - 3*x*y + y^2");
        match binary_quadratic_class(&pf).unwrap() {
            BinaryQuadraticClass::Equivalent(k) => assert_eq!(k, crate::exact::int(5)),
            other => panic!("unexpected class {other:?}"),
        }
    }

    #[test]
    fn trace_four_base_lands_in_quadratic_class_three() {
        let h3 = catalog("h3").unwrap();
        let grad = level_gradation(&h3).unwrap();
        let b = mat(&[vec![2, 3], vec![1, 2]]);
        let out = graded_sum(&h3, &grad, &b).unwrap();
        let pf = pfaffian_form(&out.algebra).unwrap();
        match binary_quadratic_class(&pf).unwrap() {
            BinaryQuadraticClass::Equivalent(k) => assert_eq!(k, crate::exact::int(3)),
            other => panic!("unexpected class {other:?}"),
        }
        certified(&out.algebra, &out.automorphism);
    }

    #[test]
    fn filiform_input_keeps_its_step() {
        let l4 = catalog("l4").unwrap();
        let b = mat(&[vec![2, 1], vec![1, 1]]);
        for grad in [Gradation::new(vec![1, 1, 2, 3]), Gradation::new(vec![1, 2, 3, 4])] {
            let out = graded_sum(&l4, &grad, &b).unwrap();
            assert_eq!(out.algebra.dim(), 8);
            assert_eq!(out.algebra.nilpotency_class().unwrap(), 3);
            let cert = certified(&out.algebra, &out.automorphism);
            assert_eq!(cert.signature.parts(), (4, 4));
        }
    }

    #[test]
    fn automorphism_blocks_are_companion_powers() {
        let h3 = catalog("h3").unwrap();
        let grad = level_gradation(&h3).unwrap();
        let b = mat(&[vec![2, 1], vec![1, 1]]);
        let out = graded_sum(&h3, &grad, &b).unwrap();
        let c = RationalMatrix::companion(&b.charpoly().unwrap()).unwrap();
        let c2 = c.pow(2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(out.automorphism.get(i, j), c.get(i, j));
                assert_eq!(out.automorphism.get(4 + i, 4 + j), c2.get(i, j));
            }
        }
        assert!(out.automorphism.get(0, 2).is_zero());
    }

    #[test]
    fn preconditions_are_enforced() {
        let h3 = catalog("h3").unwrap();
        let grad = level_gradation(&h3).unwrap();
        assert_eq!(
            graded_sum(&h3, &grad, &mat(&[vec![3]])),
            Err(ConstructError::DegreeTooSmall(1))
        );
        assert_eq!(
            graded_sum(&h3, &grad, &mat(&[vec![2, 0], vec![0, 1]])),
            Err(ConstructError::NotUnimodular)
        );
        // Rotation: complex eigenvalues.
        assert_eq!(
            graded_sum(&h3, &grad, &mat(&[vec![0, -1], vec![1, 0]])),
            Err(ConstructError::SpectrumNotRealHyperbolic)
        );
        // Swap: eigenvalues 1 and -1.
        assert_eq!(
            graded_sum(&h3, &grad, &mat(&[vec![0, 1], vec![1, 0]])),
            Err(ConstructError::SpectrumNotRealHyperbolic)
        );
        // Determinant 4.
        assert_eq!(
            graded_sum(&h3, &grad, &mat(&[vec![2, 1], vec![0, 2]])),
            Err(ConstructError::NotUnimodular)
        );
        let b = mat(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(
            graded_sum(&h3, &Gradation::new(vec![1, 1, 1]), &b),
            Err(ConstructError::GradationViolation { i: 1, j: 2, k: 3 })
        );
        let mut half = LieAlgebra::abelian(3);
        half.add_bracket_term(0, 1, 2, rat(1) / rat(2));
        assert_eq!(
            graded_sum(&half, &Gradation::new(vec![1, 1, 2]), &b),
            Err(ConstructError::NotIntegral)
        );
    }

    #[test]
    fn unipotent_with_distinct_rows_is_still_rejected() {
        // Determinant 1, integer, but a double eigenvalue at 1.
        let h3 = catalog("h3").unwrap();
        let grad = level_gradation(&h3).unwrap();
        assert_eq!(
            graded_sum(&h3, &grad, &mat(&[vec![1, 1], vec![0, 1]])),
            Err(ConstructError::SpectrumNotRealHyperbolic)
        );
    }
}
