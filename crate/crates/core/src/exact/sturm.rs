//! Exact real root counting with Sturm chains.

use num_traits::{Signed, Zero};

use super::poly::UniPoly;
use super::{ExactError, Rational};

/// Interval endpoint: a rational number or an infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// Sign of p at a bound; at infinities this is the sign of the leading term.
fn sign_at(p: &UniPoly, at: &Bound) -> i8 {
    let sign_of = |r: &Rational| -> i8 {
        if r.is_positive() {
            1
        } else if r.is_negative() {
            -1
        } else {
            0
        }
    };
    match p.degree() {
        None => 0,
        Some(d) => match at {
            Bound::Finite(x) => sign_of(&p.eval(x)),
            Bound::PosInf => sign_of(p.leading().unwrap()),
            Bound::NegInf => {
                let s = sign_of(p.leading().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        },
    }
}

/// Standard chain: p0 = p, p1 = p', then negated remainders down to the gcd.
fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            return chain;
        }
        chain.push(-&r);
    }
}

fn sign_variations(chain: &[UniPoly], at: &Bound) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign_at(p, at);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Multiplicities are discarded internally by dividing out gcd(p, p').
pub fn sturm_real_root_count(p: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if let (Bound::Finite(a), Bound::Finite(b)) = (lo, hi) {
        if a >= b {
            return Ok(0);
        }
    }
    if matches!(lo, Bound::PosInf) || matches!(hi, Bound::NegInf) {
        return Ok(0);
    }
    let q = p.squarefree_part();
    if q.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(&q);
    let mut count =
        sign_variations(&chain, lo) as isize - sign_variations(&chain, hi) as isize;
    // The chain counts roots in (lo, hi]; an open interval drops hi itself.
    if let Bound::Finite(b) = hi {
        if q.eval(b).is_zero() {
            count -= 1;
        }
    }
    debug_assert!(count >= 0);
    Ok(count as usize)
}

/// Distinct real roots over the whole line.
pub fn count_real_roots(p: &UniPoly) -> Result<usize, ExactError> {
    sturm_real_root_count(p, &Bound::NegInf, &Bound::PosInf)
}

/// True when every root of p (over the complex numbers) is real. Decided by
/// comparing the distinct-root count with the degree of the square-free part.
pub fn all_roots_real(p: &UniPoly) -> Result<bool, ExactError> {
    let q = p.squarefree_part();
    match q.degree() {
        None => Err(ExactError::ZeroPolynomial),
        Some(0) => Ok(true),
        Some(d) => Ok(count_real_roots(&q)? == d),
    }
}
