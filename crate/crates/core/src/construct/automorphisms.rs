//! Explicit automorphisms of the catalog algebras: the Pell driven
//! families on n_k, h_k, and l_k, the base change family behind h_1, the
//! Kronecker construction on g, induced maps on f3, and direct sums.

use num_traits::{One, Signed, Zero};

use crate::exact::{
    int, pell_fundamental, rat, Integer, QuadFieldElement, Rational, RationalMatrix, UniPoly,
};
use crate::lie::{merged_order, LieAlgebra};

use super::dual::{dual_transport, scheuneman_dual};
use super::witness::{sqrt_form_witness, SqrtFamily};
use super::{catalog, hk_algebra, lk_algebra, nk_algebra, square_free_param, ConstructError};

/// Extends a linear map on the complement of the derived algebra of a two
/// step algebra to the full algebra: the derived block is forced by
/// sending each bracket [e_i, e_j] to [A e_i, A e_j], and it is well
/// defined because the brackets span the derived algebra.
pub fn extend_on_derived(
    l: &LieAlgebra,
    a1: &RationalMatrix,
) -> Result<RationalMatrix, ConstructError> {
    let (v, z) = l.two_step_split()?;
    if a1.rows() != v || a1.cols() != v {
        return Err(ConstructError::Parameter {
            name: "extend_on_derived".to_string(),
            reason: format!(
                "block is {}x{}, the complement has dimension {v}",
                a1.rows(),
                a1.cols()
            ),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..v)
        .flat_map(|i| (i + 1..v).map(move |j| (i, j)))
        .collect();
    // Columns of w are the derived parts of the brackets [e_i, e_j], and
    // the matching columns of w_img are the derived parts of [A e_i, A e_j].
    let mut w = RationalMatrix::zeros(z, pairs.len());
    let mut w_img = RationalMatrix::zeros(z, pairs.len());
    for (c, &(i, j)) in pairs.iter().enumerate() {
        let b = l.bracket_of_basis(i, j);
        let pad = |col: usize| -> Vec<Rational> {
            (0..l.dim())
                .map(|r| if r < v { a1.get(r, col).clone() } else { Rational::zero() })
                .collect()
        };
        let img = l.bracket(&pad(i), &pad(j));
        for t in 0..z {
            w.set(t, c, b[v + t].clone());
            w_img.set(t, c, img[v + t].clone());
        }
    }
    let mut a2 = RationalMatrix::zeros(z, z);
    for t in 0..z {
        let mut rhs = vec![Rational::zero(); z];
        rhs[t] = Rational::one();
        let lambda = w.solve(&rhs)?.ok_or_else(|| ConstructError::Parameter {
            name: "extend_on_derived".to_string(),
            reason: "the brackets do not span the derived algebra".to_string(),
        })?;
        let col = w_img.mul_vec(&lambda)?;
        for r in 0..z {
            a2.set(r, t, col[r].clone());
        }
    }
    Ok(RationalMatrix::block_diag(&[a1.clone(), a2]))
}

/// Anosov automorphism of the abelian algebra of dimension n >= 2:
/// coordinate pairs carry [[2, 1], [1, 1]] and an odd dimension adds one
/// block with characteristic polynomial x^3 - x - 1, whose complex pair
/// lies strictly inside the unit circle.
pub fn abelian_automorphism(n: usize) -> Result<(LieAlgebra, RationalMatrix), ConstructError> {
    if n < 2 {
        return Err(ConstructError::Parameter {
            name: "abelian".to_string(),
            reason: format!("dimension {n} admits no hyperbolic unimodular map"),
        });
    }
    let pair = RationalMatrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
    let mut blocks = vec![pair; if n % 2 == 0 { n / 2 } else { (n - 3) / 2 }];
    if n % 2 == 1 {
        blocks.push(RationalMatrix::companion(&UniPoly::from_integers(&[-1, -1, 0, 1]))?);
    }
    Ok((LieAlgebra::abelian(n), RationalMatrix::block_diag(&blocks)))
}

/// Anosov automorphism of n_k from the fundamental solution (a, q) of
/// a^2 - k q^2 = 1: the generator pairs carry the solution itself and the
/// derived algebra carries the doubled solution (2a^2 - 1, 2aq).
pub fn nk_automorphism(k: i64) -> Result<(LieAlgebra, RationalMatrix), ConstructError> {
    square_free_param("n_k", k, false)?;
    if k < 2 {
        return Err(ConstructError::Parameter {
            name: "n_k".to_string(),
            reason: format!("k = {k} admits only the trivial Pell solution"),
        });
    }
    let (a, q) = pell_fundamental(k)?;
    let a2 = &(int(2) * &a * &a) - Integer::one();
    let q2 = int(2) * &a * &q;
    let alg = nk_algebra(&int(k))?;
    let mut m = RationalMatrix::zeros(6, 6);
    let mut put = |i: usize, j: usize, v: Integer| m.set(i, j, Rational::from_integer(v));
    put(0, 0, a.clone());
    put(1, 0, q.clone());
    put(0, 1, &q * int(k));
    put(1, 1, a.clone());
    put(2, 2, a.clone());
    put(3, 2, &q * int(k));
    put(2, 3, q.clone());
    put(3, 3, a);
    put(4, 4, a2.clone());
    put(5, 4, &q2 * int(k));
    put(4, 5, q2);
    put(5, 5, a2);
    Ok((alg, m))
}

/// Smallest shift n whose h_k automorphism has the balanced signature
/// {4,4}. One generator block keeps both eigenvalues beyond 1 until
/// 2n > 1 + a + b sqrt k; smaller hyperbolic shifts yield {3,5}. The
/// threshold also implies the hyperbolicity margin n^2 > a + b sqrt k.
pub fn hk_balanced_n(k: i64, a: i64, b: i64) -> Result<i64, ConstructError> {
    square_free_param("h_k", k, false)?;
    if &(int(a) * int(a)) - &(int(k) * int(b) * int(b)) != Integer::one() {
        return Err(ConstructError::NotPellPair { k, a, b });
    }
    // b sqrt k is irrational for b != 0, so the strict threshold is
    // 2n >= 2 + a + floor(b sqrt k).
    let f = (int(k) * int(b) * int(b)).sqrt();
    let n = &(&(int(a) + &f) + int(3)) / &int(2);
    i64::try_from(n).map_err(|_| ConstructError::Parameter {
        name: "h_k".to_string(),
        reason: format!("the balanced shift for the Pell pair ({a}, {b}) exceeds i64"),
    })
}

/// Anosov automorphism of h_k from a Pell pair a^2 - k b^2 = 1 and a
/// shift n with n^2 > a + b sqrt k. The generator block pairs the two
/// eigenvalue scales and the derived block is the forced extension.
pub fn hk_automorphism(
    k: i64,
    a: i64,
    b: i64,
    n: i64,
) -> Result<(LieAlgebra, RationalMatrix), ConstructError> {
    square_free_param("h_k", k, false)?;
    if &(int(a) * int(a)) - &(int(k) * int(b) * int(b)) != Integer::one() {
        return Err(ConstructError::NotPellPair { k, a, b });
    }
    let margin = QuadFieldElement::new(
        Rational::from_integer(&(int(n) * int(n)) - int(a)),
        Rational::from_integer(-int(b)),
        k,
    )?;
    if margin.sign()? <= 0 {
        return Err(ConstructError::MarginTooSmall { nsq: n.saturating_mul(n) });
    }
    let alg = hk_algebra(&int(k))?;
    let a1 = RationalMatrix::from_int_rows(&[
        vec![0, 0, b, -a],
        vec![0, 0, -a, k * b],
        vec![0, 1, 2 * n, 0],
        vec![1, 0, 0, 2 * n],
    ]);
    let full = extend_on_derived(&alg, &a1)?;
    Ok((alg, full))
}

/// Result of the l_k construction: the family covers every square-free
/// k >= 2, while l_1 admits no Anosov automorphism at all.
#[derive(Clone, Debug)]
pub enum LkOutcome {
    Automorphism {
        algebra: LieAlgebra,
        matrix: RationalMatrix,
    },
    NotAnosov {
        reason: String,
    },
}

/// Anosov automorphism of l_k for square-free k >= 2. The blocks
/// B, B, B^2, B^3 with B = [[a, a^2 - 1], [1, a]] act on l_{a^2 - 1},
/// and conjugating by the diagonal scaling that identifies l_{a^2 - 1}
/// with l_k keeps the matrix integral.
pub fn lk_automorphism(k: i64) -> Result<LkOutcome, ConstructError> {
    square_free_param("l_k", k, false)?;
    if k == 1 {
        return Ok(LkOutcome::NotAnosov {
            reason: "a^2 - b^2 = 1 has only the trivial integer solutions, so the \
                     block construction degenerates to a unipotent map and l_1 \
                     admits no Anosov automorphism"
                .to_string(),
        });
    }
    let (a, q) = pell_fundamental(k)?;
    let b = &(&a * &a) - Integer::one();
    let mut bm = RationalMatrix::zeros(2, 2);
    bm.set(0, 0, Rational::from_integer(a.clone()));
    bm.set(0, 1, Rational::from_integer(b.clone()));
    bm.set(1, 0, Rational::one());
    bm.set(1, 1, Rational::from_integer(a));
    let bm2 = (&bm * &bm)?;
    let bm3 = (&bm2 * &bm)?;
    let tilde = RationalMatrix::block_diag(&[bm.clone(), bm, bm2, bm3]);
    let mut d = RationalMatrix::zeros(8, 8);
    for i in 0..8 {
        let s = if i % 2 == 0 {
            Rational::one()
        } else {
            Rational::from_integer(q.clone())
        };
        d.set(i, i, s);
    }
    let matrix = (&(&d * &tilde)? * &d.inverse()?)?;
    let algebra = lk_algebra(&int(k))?;
    Ok(LkOutcome::Automorphism { algebra, matrix })
}

/// Anosov automorphism of the base change family behind h_1: for a >= 2
/// and m = a^2 - 1 the algebra pairs two Heisenberg like layers whose
/// Pfaffian form is m x^2 - y^2 - m z^2 + w^2, and the blocks
/// B, B^2, B^3, B with B = [[a, m], [1, a]] act on it.
pub fn h1_base_automorphism(a: i64) -> Result<(LieAlgebra, RationalMatrix), ConstructError> {
    if a < 2 {
        return Err(ConstructError::Parameter {
            name: "h1_base".to_string(),
            reason: format!("a = {a} gives m = a^2 - 1 without a hyperbolic block, need a >= 2"),
        });
    }
    let m = a * a - 1;
    let mut alg = LieAlgebra::abelian(8);
    for &(i, j, t, c) in &[
        (0, 2, 4, 1),
        (0, 2, 6, 1),
        (0, 3, 5, 1),
        (0, 3, 7, 1),
        (1, 2, 5, 1),
        (1, 2, 7, -1),
        (1, 3, 4, m),
        (1, 3, 6, -m),
    ] {
        alg.add_bracket_term(i, j, t, rat(c));
    }
    alg.rename_by_level()?;
    alg.validate()?;
    let b = RationalMatrix::from_int_rows(&[vec![a, m], vec![1, a]]);
    let b2 = (&b * &b)?;
    let b3 = (&b2 * &b)?;
    let full = RationalMatrix::block_diag(&[b.clone(), b2, b3, b]);
    Ok((alg, full))
}

fn place(dest: &mut RationalMatrix, idx: &[usize], small: &RationalMatrix) {
    for r in 0..small.rows() {
        for c in 0..small.cols() {
            dest.set(idx[r], idx[c], small.get(r, c).clone());
        }
    }
}

/// Anosov automorphism of g. The two bracket generators carry
/// B = [[2, 1], [1, 1]], their partners carry the Kronecker product of
/// the inverse transpose of B with C = B^2, and the center carries C.
pub fn g_automorphism() -> Result<(LieAlgebra, RationalMatrix), ConstructError> {
    let alg = catalog("g")?;
    let b = RationalMatrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
    let c = (&b * &b)?;
    let p = RationalMatrix::from_int_rows(&[vec![1, -1], vec![-1, 2]]);
    let kron = p.kronecker(&c);
    let mut a = RationalMatrix::zeros(8, 8);
    place(&mut a, &[0, 3], &b);
    place(&mut a, &[1, 2, 4, 5], &kron);
    place(&mut a, &[6, 7], &c);
    Ok((alg, a))
}

/// Automorphism of f3 induced by a linear map on the generators: the
/// center transforms by the exterior square. Any integer map with
/// determinant 1 or -1 gives an automorphism, hyperbolicity is left to
/// the verifier.
pub fn f3_induced_automorphism(
    a1: &RationalMatrix,
) -> Result<(LieAlgebra, RationalMatrix), ConstructError> {
    if a1.rows() != 3 || a1.cols() != 3 {
        return Err(ConstructError::Parameter {
            name: "f3".to_string(),
            reason: format!(
                "matrix is {}x{}, the generator space has dimension 3",
                a1.rows(),
                a1.cols()
            ),
        });
    }
    if !a1.is_integer() || a1.det()?.abs() != Rational::one() {
        return Err(ConstructError::NotUnimodular);
    }
    let full = RationalMatrix::block_diag(&[a1.clone(), a1.exterior_square()?]);
    Ok((catalog("f3")?, full))
}

/// Anosov automorphism of h_1, transported along the Scheuneman dual of
/// the rational isomorphism n_1 = h3 + h3: the dual map carries h_1 onto
/// h, where the blocks B, B^2, B kron B^2 act.
pub fn h1_anosov_automorphism() -> Result<(LieAlgebra, RationalMatrix), ConstructError> {
    let w = sqrt_form_witness(SqrtFamily::H3H3, 1)?;
    let p = w
        .basis
        .to_rational_matrix()
        .ok_or_else(|| ConstructError::Parameter {
            name: "h_1".to_string(),
            reason: "the k = 1 witness is not rational".to_string(),
        })?;
    let psi = dual_transport(&w.target, &w.ambient, &p)?;
    let h1 = scheuneman_dual(&w.target)?;
    let b = RationalMatrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
    let c = (&b * &b)?;
    let tilde = RationalMatrix::block_diag(&[b.clone(), c.clone(), b.kronecker(&c)]);
    let matrix = (&(&psi.inverse()? * &tilde)? * &psi)?;
    Ok((h1, matrix))
}

/// Automorphism of a direct sum acting as the given automorphisms on the
/// two summands, written in the interleaved basis of the sum.
pub fn direct_sum_automorphism(
    l1: &LieAlgebra,
    a1: &RationalMatrix,
    l2: &LieAlgebra,
    a2: &RationalMatrix,
) -> Result<(LieAlgebra, RationalMatrix), ConstructError> {
    if a1.rows() != l1.dim() || a1.cols() != l1.dim() || a2.rows() != l2.dim()
        || a2.cols() != l2.dim()
    {
        return Err(ConstructError::Parameter {
            name: "direct_sum".to_string(),
            reason: "each block must be square of the matching summand dimension".to_string(),
        });
    }
    let sum = l1.direct_sum(l2)?;
    let order = merged_order(&l1.basis_vector_levels()?, &l2.basis_vector_levels()?);
    let mut pos_a = vec![0usize; l1.dim()];
    let mut pos_b = vec![0usize; l2.dim()];
    for (new, &(side, idx)) in order.iter().enumerate() {
        if side == 0 {
            pos_a[idx] = new;
        } else {
            pos_b[idx] = new;
        }
    }
    let mut a = RationalMatrix::zeros(sum.dim(), sum.dim());
    for i in 0..l1.dim() {
        for j in 0..l1.dim() {
            a.set(pos_a[i], pos_a[j], a1.get(i, j).clone());
        }
    }
    for i in 0..l2.dim() {
        for j in 0..l2.dim() {
            a.set(pos_b[i], pos_b[j], a2.get(i, j).clone());
        }
    }
    Ok((sum, a))
}
