//! Exact location of polynomial roots relative to the unit circle. No
//! numerics anywhere: circle roots are detected through a reversal gcd and a
//! Chebyshev style substitution, and the inside count comes from a Moebius
//! transform to the half plane followed by a Cauchy index computation.

use num_traits::{Signed, Zero};

use super::poly::UniPoly;
use super::sturm::{sturm_real_root_count, Bound};
use super::{rat, ExactError, Rational};

/// Everything the circle-root decision looked at, kept for certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleEvidence {
    pub value_at_one: Rational,
    pub value_at_minus_one: Rational,
    pub reversal_gcd_degree: usize,
    /// Distinct real roots of the reduced factor inside the open interval
    /// (-2, 2); each corresponds to a conjugate pair on the unit circle.
    pub band_root_count: usize,
}

impl CircleEvidence {
    pub fn on_circle(&self) -> bool {
        self.value_at_one.is_zero()
            || self.value_at_minus_one.is_zero()
            || self.band_root_count > 0
    }
}

/// For a monic palindromic h of even degree 2m, returns the monic q with
/// h(x) = x^m q(x + 1/x). Uses the recurrence for x^j + x^(-j).
fn half_turn_transform(h: &UniPoly) -> Result<UniPoly, ExactError> {
    let d = h.degree().ok_or(ExactError::ZeroPolynomial)?;
    if d % 2 != 0 || h.coeffs() != h.reversal().coeffs() {
        // Cannot happen for gcd(p, reversal p) once roots at 1 and -1 are
        // excluded; kept as a hard check rather than an assumption.
        return Err(ExactError::InvalidParameter(
            "half_turn_transform".to_string(),
            "input must be palindromic of even degree".to_string(),
        ));
    }
    let m = d / 2;
    let t = UniPoly::x();
    let mut d_prev = UniPoly::constant(rat(2)); // x^0 + x^0
    let mut d_cur = t.clone(); // x + 1/x
    let mut q = UniPoly::constant(h.coeff(m));
    for j in 1..=m {
        q = &q + &d_cur.scale(&h.coeff(m + j));
        let next = &(&t * &d_cur) - &d_prev;
        d_prev = d_cur;
        d_cur = next;
    }
    Ok(q)
}

/// Decides whether p has a root of modulus exactly 1, with the intermediate
/// values preserved. Roots at the origin are irrelevant and ignored.
pub fn circle_evidence(p: &UniPoly) -> Result<CircleEvidence, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let p = p.shift_down(p.order_at_zero());
    let value_at_one = p.eval(&rat(1));
    let value_at_minus_one = p.eval(&rat(-1));
    let g = p.gcd(&p.reversal());
    let reversal_gcd_degree = g.degree().unwrap_or(0);
    let mut band_root_count = 0;
    if !value_at_one.is_zero() && !value_at_minus_one.is_zero() && reversal_gcd_degree > 0 {
        // Distinct roots of g are closed under z -> 1/z and avoid 1 and -1,
        // so its square-free part is palindromic of even degree. Unit circle
        // roots are exactly those with z + 1/z real in (-2, 2).
        let h = g.squarefree_part();
        let q = half_turn_transform(&h)?;
        band_root_count = sturm_real_root_count(
            &q,
            &Bound::Finite(rat(-2)),
            &Bound::Finite(rat(2)),
        )?;
    }
    Ok(CircleEvidence {
        value_at_one,
        value_at_minus_one,
        reversal_gcd_degree,
        band_root_count,
    })
}

pub fn has_root_on_unit_circle(p: &UniPoly) -> Result<bool, ExactError> {
    Ok(circle_evidence(p)?.on_circle())
}

/// True when no root of p has modulus exactly 1.
pub fn is_hyperbolic_poly(p: &UniPoly) -> Result<bool, ExactError> {
    Ok(!has_root_on_unit_circle(p)?)
}

/// Cauchy index of num/den over the whole real line, computed from the sign
/// variations of the Euclidean remainder chain. A shared factor of num and
/// den is harmless: the chain bottoms out at the gcd and computes the index
/// of the reduced fraction.
fn cauchy_index(num: &UniPoly, den: &UniPoly) -> isize {
    if num.is_zero() || den.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    // Subtracting the polynomial part changes the function by a polynomial,
    // which has no poles, so the index is unchanged; afterwards the fraction
    // is proper.
    let reduced = num.divrem(den).expect("nonzero denominator").1;
    let mut chain = vec![den.clone(), reduced];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    let variations = |neg: bool| -> isize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &chain {
            let s = match p.degree() {
                None => 0,
                Some(d) => {
                    let lead = if p.leading().unwrap().is_positive() { 1i8 } else { -1 };
                    if neg && d % 2 == 1 {
                        -lead
                    } else {
                        lead
                    }
                }
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    };
    variations(true) - variations(false)
}

/// Exact number of roots (with multiplicity) of modulus < 1. Errors when a
/// root lies exactly on the unit circle; it never returns a wrong count.
pub fn schur_cohn_inside_unit_disk(p: &UniPoly) -> Result<usize, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let at_zero = p.order_at_zero();
    let p = p.shift_down(at_zero);
    let n = p.degree().expect("nonzero after shift");
    if n == 0 {
        return Ok(at_zero);
    }
    if circle_evidence(&p)?.on_circle() {
        return Err(ExactError::RootOnUnitCircle);
    }
    // Moebius substitution z = (1+w)/(1-w): the open unit disk maps to the
    // half plane Re w < 0 and the circle to the imaginary axis, which is now
    // root free. f has exact degree n because its leading coefficient is
    // (-1)^n p(-1).
    let one_plus = UniPoly::from_integers(&[1, 1]);
    let one_minus = UniPoly::from_integers(&[1, -1]);
    let mut f = UniPoly::zero();
    for (i, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = &one_plus.pow(i as u32) * &one_minus.pow((n - i) as u32);
        f = &f + &term.scale(a);
    }
    debug_assert_eq!(f.degree(), Some(n));
    // Split f(i w) into real and imaginary parts along the axis.
    let mut p_even = Vec::new();
    let mut q_odd = Vec::new();
    for (j, b) in f.coeffs().iter().enumerate() {
        match j % 4 {
            0 => p_even.push((j, b.clone())),
            1 => q_odd.push((j, b.clone())),
            2 => p_even.push((j, -b)),
            3 => q_odd.push((j, -b)),
            _ => unreachable!(),
        }
    }
    let assemble = |pairs: &[(usize, Rational)]| -> UniPoly {
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (j, c) in pairs {
            coeffs[*j] = c.clone();
        }
        UniPoly::new(coeffs)
    };
    let re = assemble(&p_even);
    let im = assemble(&q_odd);
    // Right half plane root count via the Cauchy index, with the proper
    // orientation chosen by the parity of the degree.
    let k_rhp = if n % 2 == 0 {
        let i = cauchy_index(&im, &re);
        let num = n as isize + i;
        debug_assert!(num % 2 == 0);
        num / 2
    } else {
        let i = cauchy_index(&re, &im);
        let num = n as isize - i;
        debug_assert!(num % 2 == 0);
        num / 2
    };
    if k_rhp < 0 || k_rhp as usize > n {
        return Err(ExactError::InvalidParameter(
            "schur_cohn_inside_unit_disk".to_string(),
            "half plane count out of range".to_string(),
        ));
    }
    Ok(at_zero + (n - k_rhp as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn half_turn_transform_known() {
        // x^2 - 3x + 1 = x (t - 3) with t = x + 1/x.
        let h = UniPoly::from_integers(&[1, -3, 1]);
        assert_eq!(half_turn_transform(&h).unwrap(), UniPoly::from_integers(&[-3, 1]));
        // x^4 + 1? not palindromic-even against reversal? It is palindromic.
        let h2 = UniPoly::from_integers(&[1, 0, 0, 0, 1]);
        // x^4 + 1 = x^2 (t^2 - 2) with t = x + 1/x.
        assert_eq!(
            half_turn_transform(&h2).unwrap(),
            UniPoly::from_integers(&[-2, 0, 1])
        );
        assert!(half_turn_transform(&UniPoly::from_integers(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn cauchy_index_calibration() {
        // a / x with a > 0 jumps from -inf to +inf at 0.
        assert_eq!(cauchy_index(&UniPoly::from_integers(&[2]), &UniPoly::x()), 1);
        assert_eq!(cauchy_index(&UniPoly::from_integers(&[-2]), &UniPoly::x()), -1);
        // 3x / (2 - x^2).
        assert_eq!(
            cauchy_index(
                &UniPoly::from_integers(&[0, 3]),
                &UniPoly::from_integers(&[2, 0, -1])
            ),
            -2
        );
        // Shared non-real factor cancels: (2x^2+2) / (-x^3-x) behaves as -2/x.
        assert_eq!(
            cauchy_index(
                &UniPoly::from_integers(&[2, 0, 2]),
                &UniPoly::from_integers(&[0, -1, 0, -1])
            ),
            -1
        );
        assert_eq!(cauchy_index(&UniPoly::zero(), &UniPoly::x()), 0);
    }

    #[test]
    fn inside_counts_match_known_roots() {
        // Roots (3 +- sqrt 5)/2: one inside.
        assert_eq!(
            schur_cohn_inside_unit_disk(&UniPoly::from_integers(&[1, -3, 1])).unwrap(),
            1
        );
        // Roots 1 +- i, modulus sqrt 2: none inside.
        assert_eq!(
            schur_cohn_inside_unit_disk(&UniPoly::from_integers(&[2, -2, 1])).unwrap(),
            0
        );
        // Root 1/2.
        assert_eq!(
            schur_cohn_inside_unit_disk(&UniPoly::from_integers(&[-1, 2])).unwrap(),
            1
        );
        // Roots 2 and 1/2: reversal gcd is the whole polynomial, but no
        // circle roots; exactly one inside.
        assert_eq!(
            schur_cohn_inside_unit_disk(&UniPoly::from_integers(&[2, -5, 2])).unwrap(),
            1
        );
        // Roots at 0 are inside.
        assert_eq!(
            schur_cohn_inside_unit_disk(&UniPoly::from_integers(&[0, 0, 0, 1])).unwrap(),
            3
        );
        // Degree 4 mixed: (x^2 - 3x + 1)(2x - 1) has two inside.
        let p = &UniPoly::from_integers(&[1, -3, 1]) * &UniPoly::from_integers(&[-1, 2]);
        assert_eq!(schur_cohn_inside_unit_disk(&p).unwrap(), 2);
    }

    #[test]
    fn circle_roots_are_refused() {
        for coeffs in [
            vec![1i64, 0, 1],     // x^2 + 1
            vec![-1, 1],          // x - 1
            vec![1, 1],           // x + 1
            vec![4, 0, -5, 0, 1], // (x^2-1)(x^2-4)
            vec![1, -1, 1],       // primitive 6th roots of unity
        ] {
            let p = UniPoly::from_integers(&coeffs);
            assert!(
                matches!(
                    schur_cohn_inside_unit_disk(&p),
                    Err(ExactError::RootOnUnitCircle)
                ),
                "{p}"
            );
            assert!(!is_hyperbolic_poly(&p).unwrap(), "{p}");
        }
    }

    #[test]
    fn hyperbolicity_examples() {
        assert!(is_hyperbolic_poly(&UniPoly::from_integers(&[1, -3, 1])).unwrap());
        assert!(is_hyperbolic_poly(&UniPoly::from_integers(&[2, -2, 1])).unwrap());
        // (x - 1)^2 picked up by the endpoint check.
        let p = UniPoly::from_integers(&[-1, 1]).pow(2);
        assert!(!is_hyperbolic_poly(&p).unwrap());
        // Constant polynomials have no roots at all.
        assert!(is_hyperbolic_poly(&UniPoly::from_integers(&[7])).unwrap());
    }

    #[test]
    fn evidence_fields_are_recorded() {
        let p = UniPoly::from_integers(&[1, -3, 1]);
        let e = circle_evidence(&p).unwrap();
        assert_eq!(e.value_at_one, ratio(-1, 1));
        assert_eq!(e.value_at_minus_one, ratio(5, 1));
        assert_eq!(e.reversal_gcd_degree, 2);
        assert_eq!(e.band_root_count, 0);
        assert!(!e.on_circle());

        let c = UniPoly::from_integers(&[1, -1, 1]);
        let e = circle_evidence(&c).unwrap();
        assert_eq!(e.band_root_count, 1);
        assert!(e.on_circle());
    }

    #[test]
    fn counts_add_up_to_the_degree() {
        // With no circle roots, inside plus outside is the degree. The
        // outside count for p equals the inside count for the reversal when
        // the constant term is nonzero.
        for coeffs in [
            vec![1i64, -3, 1],
            vec![2, -2, 1],
            vec![2, -5, 2],
            vec![3, 1, 4, 1, 5],
            vec![-1, -1, 0, 1],
        ] {
            let p = UniPoly::from_integers(&coeffs);
            let inside = schur_cohn_inside_unit_disk(&p).unwrap();
            let outside = schur_cohn_inside_unit_disk(&p.reversal()).unwrap();
            assert_eq!(inside + outside, p.degree().unwrap(), "{p}");
        }
    }
}
