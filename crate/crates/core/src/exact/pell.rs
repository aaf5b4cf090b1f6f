//! Fundamental solutions of x^2 - k y^2 = 1 via the continued fraction
//! expansion of sqrt k.

use num_integer::Roots;
use num_traits::One;

use super::{int, is_square_free, ExactError, Integer};

/// Smallest solution (a, b) with a, b > 0 of a^2 - k b^2 = 1. Requires k >= 2
/// and square-free; squares admit no solution and the callers never need
/// non-square-free k.
pub fn pell_fundamental(k: i64) -> Result<(Integer, Integer), ExactError> {
    if k < 2 || !is_square_free(&int(k))? {
        return Err(ExactError::InvalidParameter(
            "pell_fundamental".to_string(),
            format!("k = {k} must be square-free and at least 2"),
        ));
    }
    let a0 = k.sqrt();
    // Continued fraction state for sqrt k: the partial quotients repeat with
    // the period of the expansion, and the convergent just before the period
    // ends (or one full second period for odd periods) solves the equation.
    // Rather than track the period we test each convergent directly.
    let mut m: i64 = 0;
    let mut d: i64 = 1;
    let mut a = a0;
    let (mut h_prev, mut h) = (Integer::one(), Integer::from(a0));
    let (mut q_prev, mut q) = (Integer::from(0), Integer::one());
    for _ in 0..20_000 {
        if &(&h * &h) - int(k) * &q * &q == Integer::one() {
            return Ok((h, q));
        }
        m = d * a - m;
        d = (k - m * m) / d;
        a = (a0 + m) / d;
        let h_next = int(a) * &h + &h_prev;
        let q_next = int(a) * &q + &q_prev;
        h_prev = h;
        h = h_next;
        q_prev = q;
        q = q_next;
    }
    unreachable!("continued fraction of a non-square surd must be periodic");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_fundamental_solutions() {
        let cases: [(i64, i64, i64); 6] = [
            (2, 3, 2),
            (3, 2, 1),
            (5, 9, 4),
            (6, 5, 2),
            (7, 8, 3),
            (10, 19, 6),
        ];
        for (k, a, b) in cases {
            assert_eq!(pell_fundamental(k).unwrap(), (int(a), int(b)), "k = {k}");
        }
    }

    #[test]
    fn large_period_case() {
        // k = 61 has a famously large fundamental solution.
        let (a, b) = pell_fundamental(61).unwrap();
        assert_eq!(a, int(1_766_319_049));
        assert_eq!(b, int(226_153_980));
        assert_eq!(&a * &a - int(61) * &b * &b, int(1));
    }

    #[test]
    fn matches_direct_search() {
        // Smallest b with 1 + k b^2 a perfect square, found by scanning.
        for k in 2i64..=50 {
            if !is_square_free(&int(k)).unwrap() {
                continue;
            }
            let (a, b) = pell_fundamental(k).unwrap();
            let mut bb = 1i64;
            let (scan_a, scan_b) = loop {
                let t = 1 + k * bb * bb;
                let r = t.sqrt();
                if r * r == t {
                    break (r, bb);
                }
                bb += 1;
            };
            assert_eq!((a, b), (int(scan_a), int(scan_b)), "k = {k}");
        }
    }

    #[test]
    fn inadmissible_inputs_are_rejected() {
        for k in [1i64, 0, -2, 4, 9, 12, 18] {
            assert!(
                matches!(pell_fundamental(k), Err(ExactError::InvalidParameter(..))),
                "k = {k}"
            );
        }
    }
}
