//! Factorization of integer polynomials into irreducible factors. Rational
//! roots are stripped first; what remains is attacked by evaluation and
//! interpolation, which is entirely adequate for the characteristic
//! polynomials this crate meets (degree at most 8 in practice, 12 by the
//! documented bound).

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use super::{ExactError, Integer, Rational, TRIAL_DIVISION_BOUND};

/// p = content * product of factor^multiplicity, factors primitive integer
/// polynomials with positive leading coefficient, irreducible over Q, sorted
/// by degree and then coefficient order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Rational,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| f.degree().unwrap_or(0) * *m as usize)
            .sum()
    }

    /// True when every root of every factor is an algebraic unit, i.e. each
    /// factor is monic with constant term 1 or -1.
    pub fn all_roots_are_units(&self) -> bool {
        self.factors.iter().all(|(f, _)| factor_has_unit_roots(f))
    }
}

/// Roots of a monic integer irreducible polynomial are algebraic units
/// exactly when the constant term is 1 or -1.
pub fn factor_has_unit_roots(f: &UniPoly) -> bool {
    f.is_monic() && f.constant_term().numer().abs().is_one()
}

fn cmp_factor(a: &UniPoly, b: &UniPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

const DEFAULT_DEGREE_BOUND: usize = 12;

fn degree_bound() -> usize {
    std::env::var("ANOSOV_MAX_FACTOR_DEGREE")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_DEGREE_BOUND)
}

/// Full prime factorization by trial division. n must be positive. A residual
/// cofactor above 10^12 cannot be certified prime and is reported as an error.
fn prime_factorization(n: &Integer) -> Result<Vec<(Integer, u32)>, ExactError> {
    debug_assert!(n.is_positive());
    let mut m = n.clone();
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p <= TRIAL_DIVISION_BOUND {
        let big_p = Integer::from(p);
        if &(&big_p * &big_p) > &m {
            break;
        }
        let mut e = 0u32;
        while (&m % &big_p).is_zero() {
            m /= &big_p;
            e += 1;
        }
        if e > 0 {
            out.push((big_p, e));
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if !m.is_one() {
        // No factor up to 10^6 was found, so any composite m would exceed
        // 10^12. Below that bound m is prime.
        if m > Integer::from(10u64).pow(12) {
            return Err(ExactError::TrialDivisionExhausted(m.to_string()));
        }
        out.push((m, 1));
    }
    Ok(out)
}

/// All positive divisors of |n|, ascending. n must be nonzero.
fn positive_divisors(n: &Integer) -> Result<Vec<Integer>, ExactError> {
    let primes = prime_factorization(&n.abs())?;
    let mut divs = vec![Integer::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pe = Integer::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Extracts all rational roots of a primitive integer polynomial, returning
/// the corresponding primitive linear factors and the remaining cofactor.
fn strip_rational_roots(p: &UniPoly) -> Result<(Vec<UniPoly>, UniPoly), ExactError> {
    let mut rem = p.clone();
    let mut found = Vec::new();
    let ord = rem.order_at_zero();
    for _ in 0..ord {
        found.push(UniPoly::x());
    }
    rem = rem.shift_down(ord);
    'outer: while rem.degree().map_or(false, |d| d >= 1) {
        let a0 = rem.constant_term().numer().clone();
        let an = rem.leading().unwrap().numer().clone();
        for num in positive_divisors(&a0)? {
            for den in positive_divisors(&an)? {
                if !num_integer::gcd(num.clone(), den.clone()).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Rational::new(&num * Integer::from(sign), den.clone());
                    if rem.eval(&cand).is_zero() {
                        // Primitive factor den*x - sign*num.
                        let lin = UniPoly::new(vec![
                            Rational::from_integer(-(&num * Integer::from(sign))),
                            Rational::from_integer(den.clone()),
                        ]);
                        let (q, r) = rem.divrem(&lin)?;
                        debug_assert!(r.is_zero());
                        // Keep the cofactor primitive with positive leading.
                        let (_, prim) = q.content_and_primitive();
                        rem = prim;
                        found.push(lin);
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    Ok((found, rem))
}

/// Searches for a degree d integer factor of the primitive polynomial p by
/// interpolating through divisors of the values of p at small integer points.
/// Assumes p has no factor of degree below d. Returns a factor with positive
/// leading coefficient, or None when p has no degree d factor.
fn find_factor_of_degree(p: &UniPoly, d: usize) -> Result<Option<UniPoly>, ExactError> {
    // Evaluate at a pool of small points and keep the d whose values have
    // the fewest divisors as free points; one more point is solved from the
    // leading coefficient instead of being enumerated.
    let mut pool: Vec<(Integer, Vec<Integer>)> = Vec::new();
    let mut x: i64 = 0;
    while pool.len() < d + 4 {
        let v = p.eval(&Rational::from_integer(Integer::from(x)));
        assert!(!v.is_zero(), "rational roots were stripped first");
        let divs = positive_divisors(v.numer())?;
        pool.push((Integer::from(x), divs));
        x = if x <= 0 { -x + 1 } else { -x };
    }
    pool.sort_by_key(|(_, divs)| divs.len());
    let points: Vec<(Integer, Vec<Integer>)> = pool[..=d].to_vec();
    // Lagrange data through the chosen points, computed once: basis
    // polynomials and the denominators prod_{j != i} (x_i - x_j), whose
    // reciprocals weight the values in the leading coefficient.
    let mut basis = Vec::with_capacity(d + 1);
    let mut denoms = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut b = UniPoly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            b = &b * &UniPoly::new(vec![Rational::from_integer(-xj), Rational::one()]);
            denom *= Rational::from_integer(&points[i].0 - xj);
        }
        basis.push(b.scale(&denom.recip()));
        denoms.push(denom);
    }
    let leads = positive_divisors(p.leading().unwrap().numer())?;
    let search = FactorSearch { p, d, points, basis, denoms, leads };
    search.run(&mut Vec::with_capacity(d + 1))
}

struct FactorSearch<'a> {
    p: &'a UniPoly,
    d: usize,
    /// d + 1 points; the last one is solved for, never enumerated.
    points: Vec<(Integer, Vec<Integer>)>,
    basis: Vec<UniPoly>,
    denoms: Vec<Rational>,
    /// Candidate leading coefficients: positive divisors of the input's.
    leads: Vec<Integer>,
}

impl FactorSearch<'_> {
    /// Depth first search over signed divisor assignments for the factor
    /// values. An integer polynomial satisfies (x_i - x_j) | (g(x_i) -
    /// g(x_j)), so incompatible partial assignments are cut before any
    /// interpolation happens.
    fn run(&self, chosen: &mut Vec<Integer>) -> Result<Option<UniPoly>, ExactError> {
        let i = chosen.len();
        if i == self.d {
            return self.close(chosen);
        }
        for div in &self.points[i].1 {
            for sign in [1i64, -1] {
                let v = Integer::from(sign) * div;
                if !self.compatible(chosen, i, &v) {
                    continue;
                }
                chosen.push(v);
                if let Some(g) = self.run(chosen)? {
                    return Ok(Some(g));
                }
                chosen.pop();
            }
        }
        Ok(None)
    }

    fn compatible(&self, chosen: &[Integer], i: usize, v: &Integer) -> bool {
        chosen.iter().enumerate().all(|(j, w)| {
            let dx = &self.points[i].0 - &self.points[j].0;
            ((v - w) % dx).is_zero()
        })
    }

    /// The leading coefficient of the interpolant is the weighted sum of
    /// the values, so fixing it determines the value at the last point.
    /// That value must be an integer dividing p there.
    fn close(&self, chosen: &mut Vec<Integer>) -> Result<Option<UniPoly>, ExactError> {
        let d = self.d;
        let p_last = self.points[d].1.last().expect("nonzero value").clone();
        for lead in &self.leads {
            let mut s = Rational::from_integer(lead.clone());
            for (v, den) in chosen.iter().zip(&self.denoms) {
                s -= Rational::from_integer(v.clone()) / den;
            }
            let v_rat = s * &self.denoms[d];
            if !v_rat.is_integer() {
                continue;
            }
            let v = v_rat.to_integer();
            if v.is_zero() || !(&p_last % &v).is_zero() || !self.compatible(chosen, d, &v) {
                continue;
            }
            chosen.push(v);
            let mut g = UniPoly::zero();
            for (v, b) in chosen.iter().zip(&self.basis) {
                g = &g + &b.scale(&Rational::from_integer(v.clone()));
            }
            chosen.pop();
            if g.degree() == Some(d) && g.has_integer_coeffs() {
                let (q, r) = self.p.divrem(&g)?;
                if r.is_zero() {
                    debug_assert!(q.has_integer_coeffs());
                    return Ok(Some(g));
                }
            }
        }
        Ok(None)
    }
}

/// Factors a primitive square-free integer polynomial into irreducibles.
fn factor_squarefree(p: &UniPoly) -> Result<Vec<UniPoly>, ExactError> {
    let (mut out, mut rem) = strip_rational_roots(p)?;
    let mut d = 2;
    while let Some(n) = rem.degree() {
        if n == 0 {
            debug_assert!(rem.leading().unwrap().is_one());
            return Ok(out);
        }
        if 2 * d > n {
            break;
        }
        match find_factor_of_degree(&rem, d)? {
            Some(g) => {
                let (q, r) = rem.divrem(&g)?;
                debug_assert!(r.is_zero());
                out.push(g);
                let (_, prim) = q.content_and_primitive();
                rem = prim;
            }
            None => d += 1,
        }
    }
    if rem.degree().map_or(false, |n| n >= 1) {
        out.push(rem);
    }
    Ok(out)
}

/// Square-free decomposition p = prod part_i ^ i with the parts pairwise
/// coprime and square-free.
fn squarefree_decomposition(p: &UniPoly) -> Vec<(UniPoly, u32)> {
    let g = p.gcd(&p.derivative());
    if g.degree().unwrap_or(0) == 0 {
        return vec![(p.clone(), 1)];
    }
    let mut c = p.divrem(&g).expect("gcd divides").0;
    let mut d = {
        let dp = p.derivative().divrem(&g).expect("gcd divides").0;
        &dp - &c.derivative()
    };
    let mut parts = Vec::new();
    let mut i = 1u32;
    while c.degree().map_or(false, |n| n >= 1) {
        let a = c.gcd(&d);
        if a.degree().unwrap_or(0) >= 1 {
            parts.push((a.clone(), i));
        }
        let c_next = c.divrem(&a).expect("gcd divides").0;
        let d_next = &d.divrem(&a).expect("gcd divides").0 - &c_next.derivative();
        c = c_next;
        d = d_next;
        i += 1;
    }
    parts
}

fn factor_with_bound(p: &UniPoly, bound: usize) -> Result<Factorization, ExactError> {
    let n = p.degree().ok_or(ExactError::ZeroPolynomial)?;
    if !p.has_integer_coeffs() {
        return Err(ExactError::NonIntegerCoefficients);
    }
    if n > bound {
        return Err(ExactError::DegreeBound { degree: n, bound });
    }
    let (content, prim) = p.content_and_primitive();
    if n == 0 {
        return Ok(Factorization { content, factors: Vec::new() });
    }
    let mut factors: Vec<(UniPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&prim) {
        let (_, part_prim) = part.content_and_primitive();
        for f in factor_squarefree(&part_prim)? {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| cmp_factor(a, b));
    Ok(Factorization { content, factors })
}

/// Factors a nonzero integer-coefficient polynomial into irreducibles over Q.
/// Degrees above 12 are refused unless ANOSOV_MAX_FACTOR_DEGREE raises the
/// bound.
pub fn factor_over_z(p: &UniPoly) -> Result<Factorization, ExactError> {
    factor_with_bound(p, degree_bound())
}
