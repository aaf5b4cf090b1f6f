//! The 2-step dual. The bracket of a 2-step algebra spans a subspace of
//! the skew pairings on the generator space; the dual algebra is built
//! from a canonical basis of the orthogonal complement of that span, so
//! types (n, k) and (n, n(n-1)/2 - k) are exchanged. Isomorphisms
//! transport to isomorphisms of the duals through the inverse transpose
//! on generators.

use num_integer::Integer as IntegerGcd;
use num_traits::{One, Signed, Zero};

use crate::exact::{Integer, Rational, RationalMatrix};
use crate::lie::{is_isomorphism, LieAlgebra, Subspace};

use super::ConstructError;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn unit(len: usize, idx: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[idx] = Rational::one();
    v
}

/// One row per derived basis vector: the structure constants over the
/// strictly upper triangular pairs i < j in lexicographic order.
fn span_matrix(l: &LieAlgebra) -> Result<(usize, RationalMatrix), ConstructError> {
    let (n1, n2) = l.two_step_split()?;
    let ps = pairs(n1);
    let mut m = RationalMatrix::zeros(n2, ps.len());
    for (col, &(i, j)) in ps.iter().enumerate() {
        let coords = l.bracket_of_basis(i, j);
        for k in 0..n2 {
            m.set(k, col, coords[n1 + k].clone());
        }
    }
    Ok((n1, m))
}

/// The span of the bracket pairings inside the pair coordinate space of
/// dimension n1(n1-1)/2.
pub fn j_span(l: &LieAlgebra) -> Result<Subspace, ConstructError> {
    let (_, m) = span_matrix(l)?;
    let rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i)).collect();
    Ok(Subspace::from_vectors(m.cols(), &rows))
}

/// Scales a nonzero rational vector to coprime integers with a positive
/// leading entry.
fn primitive_integer_scale(row: &[Rational]) -> Vec<Rational> {
    let mut denom_lcm = Integer::one();
    for c in row {
        if !c.is_zero() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
    }
    let factor = Rational::from_integer(denom_lcm);
    let scaled: Vec<Integer> = row.iter().map(|c| (c * &factor).to_integer()).collect();
    let mut g = Integer::zero();
    for v in &scaled {
        g = g.gcd(v);
    }
    if g.is_zero() {
        return row.to_vec();
    }
    if let Some(first) = scaled.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            g = -g;
        }
    }
    scaled.iter().map(|v| Rational::from_integer(v / &g)).collect()
}

/// Reduced echelon basis of the span of the vectors, each row scaled to
/// primitive integers.
fn canonical_rows(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RationalMatrix::from_rows(vectors.to_vec()).expect("rows of equal length");
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| primitive_integer_scale(&r.row(i))).collect()
}

/// The dual of a 2-step algebra: same generators, derived directions
/// replaced by a canonical basis of the complement of the bracket span.
pub fn scheuneman_dual(l: &LieAlgebra) -> Result<LieAlgebra, ConstructError> {
    let (n1, m) = span_matrix(l)?;
    let n2 = m.rows();
    if m.rank() != n2 {
        return Err(ConstructError::DegenerateJSpan);
    }
    let complement = canonical_rows(&m.nullspace());
    let ps = pairs(n1);
    let mut dual = LieAlgebra::abelian(n1 + complement.len());
    for (z, row) in complement.iter().enumerate() {
        for (col, &(i, j)) in ps.iter().enumerate() {
            if !row[col].is_zero() {
                dual.add_bracket_term(i, j, n1 + z, row[col].clone());
            }
        }
    }
    dual.rename_by_level()?;
    Ok(dual)
}

/// Carries an isomorphism l1 -> l2 to an isomorphism of the duals. The
/// generator block is the inverse transpose of the generator block of a;
/// the derived block is solved from the congruence action on the dual
/// pairings.
pub fn dual_transport(
    l1: &LieAlgebra,
    l2: &LieAlgebra,
    a: &RationalMatrix,
) -> Result<RationalMatrix, ConstructError> {
    let reject = |reason: &str| ConstructError::Parameter {
        name: "dual_transport".to_string(),
        reason: reason.to_string(),
    };
    if !is_isomorphism(l1, l2, a)? {
        return Err(reject("the map is not an isomorphism"));
    }
    let (v, _) = l1.two_step_split()?;
    let d1 = scheuneman_dual(l1)?;
    let d2 = scheuneman_dual(l2)?;
    let (_, m1) = d1.two_step_split()?;
    let (_, m2) = d2.two_step_split()?;

    let mut av = RationalMatrix::zeros(v, v);
    for i in 0..v {
        for j in 0..v {
            av.set(i, j, a.get(i, j).clone());
        }
    }
    let av_inv = av.inverse()?;
    let psi_v = av_inv.transpose();

    let ps = pairs(v);
    let mut span_cols = RationalMatrix::zeros(ps.len(), m1);
    for col in 0..m1 {
        let jz = d1.jz_matrix(&unit(m1, col))?;
        for (r, &(i, j)) in ps.iter().enumerate() {
            span_cols.set(r, col, jz.get(i, j).clone());
        }
    }
    let mut psi_z = RationalMatrix::zeros(m2, m1);
    for row in 0..m2 {
        let s = d2.jz_matrix(&unit(m2, row))?;
        let t = (&(&av_inv * &s)? * &psi_v)?;
        let rhs: Vec<Rational> = ps.iter().map(|&(i, j)| t.get(i, j).clone()).collect();
        let coords = span_cols
            .solve(&rhs)?
            .ok_or_else(|| reject("the transported pairing leaves the dual span"))?;
        for (col, c) in coords.into_iter().enumerate() {
            psi_z.set(row, col, c);
        }
    }
    let psi = RationalMatrix::block_diag(&[psi_v, psi_z]);
    if !is_isomorphism(&d1, &d2, &psi)? {
        return Err(reject("the transported map fails the isomorphism check"));
    }
    Ok(psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog;
    use crate::exact::rat;

    #[test]
    fn dual_of_a_heisenberg_pair_is_h() {
        let pair = catalog("h3+h3").unwrap();
        let dual = scheuneman_dual(&pair).unwrap();
        assert_eq!(dual, catalog("h").unwrap());
        assert_eq!(scheuneman_dual(&dual).unwrap(), pair);
    }

    #[test]
    fn dual_of_nk_is_hk_with_the_same_parameter() {
        for k in [1i64, 2, 5] {
            let nk = catalog(&format!("n_{k}")).unwrap();
            let dual = scheuneman_dual(&nk).unwrap();
            assert_eq!(dual, catalog(&format!("h_{k}")).unwrap(), "k = {k}");
            assert_eq!(scheuneman_dual(&dual).unwrap(), nk, "double dual, k = {k}");
        }
    }

    #[test]
    fn dual_exchanges_the_type_components() {
        let g = catalog("g").unwrap();
        let dual = scheuneman_dual(&g).unwrap();
        assert_eq!(dual.type_of().unwrap().to_string(), "(6,13)");
        assert_eq!(scheuneman_dual(&dual).unwrap(), g);
    }

    #[test]
    fn full_span_dualizes_to_abelian() {
        let f3 = catalog("f3").unwrap();
        assert_eq!(scheuneman_dual(&f3).unwrap(), crate::lie::LieAlgebra::abelian(3));
        let h3 = catalog("h3").unwrap();
        assert_eq!(scheuneman_dual(&h3).unwrap(), crate::lie::LieAlgebra::abelian(2));
    }

    #[test]
    fn j_span_survives_the_double_dual() {
        for spec in ["h3+h3", "n_2", "n_3", "g", "h_2"] {
            let l = catalog(spec).unwrap();
            let double = scheuneman_dual(&scheuneman_dual(&l).unwrap()).unwrap();
            assert_eq!(j_span(&l).unwrap(), j_span(&double).unwrap(), "{spec}");
        }
    }

    #[test]
    fn transport_of_the_identity_is_the_identity() {
        let pair = catalog("h3+h3").unwrap();
        let psi = dual_transport(&pair, &pair, &RationalMatrix::identity(6)).unwrap();
        assert_eq!(psi, RationalMatrix::identity(8));
    }

    #[test]
    fn transport_of_a_summand_swap_is_an_isomorphism_of_h() {
        let pair = catalog("h3+h3").unwrap();
        let mut p = RationalMatrix::zeros(6, 6);
        for (from, to) in [(0, 2), (1, 3), (2, 0), (3, 1), (4, 5), (5, 4)] {
            p.set(to, from, rat(1));
        }
        assert!(is_isomorphism(&pair, &pair, &p).unwrap());
        let psi = dual_transport(&pair, &pair, &p).unwrap();
        let h = catalog("h").unwrap();
        assert!(is_isomorphism(&h, &h, &psi).unwrap());
        assert!(!psi.get(0, 2).is_zero());
    }

    #[test]
    fn transport_rejects_maps_that_are_not_isomorphisms() {
        let n2 = catalog("n_2").unwrap();
        let pair = catalog("h3+h3").unwrap();
        assert!(matches!(
            dual_transport(&n2, &pair, &RationalMatrix::identity(6)),
            Err(ConstructError::Parameter { .. })
        ));
    }

    #[test]
    fn primitive_scaling_clears_denominators() {
        let row = vec![rat(0), rat(1) / rat(3), rat(-2), rat(0), rat(4) / rat(3)];
        assert_eq!(
            primitive_integer_scale(&row),
            vec![rat(0), rat(1), rat(-6), rat(0), rat(4)]
        );
        let neg = vec![rat(0), rat(-2), rat(4)];
        assert_eq!(primitive_integer_scale(&neg), vec![rat(0), rat(1), rat(-2)]);
    }
}
