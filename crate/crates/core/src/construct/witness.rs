//! Square root change-of-basis witnesses: explicit bases of a catalog
//! algebra tensored with Q(sqrt k) whose brackets close with rational
//! structure constants equal to a parametrized catalog target. For k = 1
//! the field collapses and the witness is an ordinary rational
//! isomorphism.

use num_traits::Zero;

use crate::exact::{int, is_square_free, rat, QuadFieldElement, QuadMatrix};
use crate::lie::LieAlgebra;

use super::{catalog, hk_algebra, lk_algebra, nk_algebra, ConstructError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqrtFamily {
    /// h3 + h3 carried onto n_k.
    H3H3,
    /// h carried onto h_k.
    H,
    /// l4 + l4 carried onto l_k.
    L4L4,
}

pub struct SqrtFormWitness {
    pub family: SqrtFamily,
    pub k: i64,
    pub ambient: LieAlgebra,
    pub target: LieAlgebra,
    /// Columns are the witness vectors in ambient coordinates.
    pub basis: QuadMatrix,
}

/// Column entries (row, rational part, sqrt coefficient).
type ColumnSpec = Vec<(usize, i64, i64)>;

fn witness_matrix(k: i64, dim: usize, cols: &[ColumnSpec]) -> Result<QuadMatrix, ConstructError> {
    let mut rows = vec![vec![QuadFieldElement::zero(k)?; dim]; dim];
    for (c, entries) in cols.iter().enumerate() {
        for &(r, a, b) in entries {
            rows[r][c] = QuadFieldElement::new(rat(a), rat(b), k)?;
        }
    }
    Ok(QuadMatrix::from_rows(k, rows)?)
}

fn quad_bracket(
    l: &LieAlgebra,
    k: i64,
    u: &[QuadFieldElement],
    v: &[QuadFieldElement],
) -> Result<Vec<QuadFieldElement>, ConstructError> {
    let mut out = vec![QuadFieldElement::zero(k)?; l.dim()];
    for (i, j, coords) in l.bracket_entries() {
        let f = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
        if f.is_zero() {
            continue;
        }
        for (t, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let term = &f * &QuadFieldElement::from_rational(c.clone(), k)?;
                out[t] = &out[t] + &term;
            }
        }
    }
    Ok(out)
}

impl SqrtFormWitness {
    /// Checks that the witness brackets close with the rational structure
    /// constants of the target.
    pub fn verify(&self) -> Result<(), ConstructError> {
        let closure_error = |i: usize, j: usize| ConstructError::Parameter {
            name: "sqrt_form_witness".to_string(),
            reason: format!("bracket closure fails at ({i}, {j})"),
        };
        let inv = self.basis.inverse()?;
        let n = self.ambient.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let br = quad_bracket(
                    &self.ambient,
                    self.k,
                    &self.basis.column(i),
                    &self.basis.column(j),
                )?;
                let coords = inv.mul_vec(&br)?;
                let expected = self.target.bracket_of_basis(i, j);
                for (t, c) in coords.iter().enumerate() {
                    match c.as_rational() {
                        Some(r) if r == expected[t] => {}
                        _ => return Err(closure_error(i + 1, j + 1)),
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds and verifies the witness for a family and a positive square-free
/// parameter.
pub fn sqrt_form_witness(family: SqrtFamily, k: i64) -> Result<SqrtFormWitness, ConstructError> {
    let bad = |reason: String| ConstructError::Parameter {
        name: "sqrt_form_witness".to_string(),
        reason,
    };
    if k < 1 {
        return Err(bad(format!("k = {k} must be positive")));
    }
    if !is_square_free(&int(k))? {
        return Err(bad(format!("k = {k} must be square-free")));
    }
    let (ambient, target, cols): (LieAlgebra, LieAlgebra, Vec<ColumnSpec>) = match family {
        SqrtFamily::H3H3 => (
            catalog("h3+h3")?,
            nk_algebra(&int(k))?,
            vec![
                vec![(0, 1, 0), (2, 1, 0)],
                vec![(0, 0, 1), (2, 0, -1)],
                vec![(1, 0, 1), (3, 0, 1)],
                vec![(1, 1, 0), (3, -1, 0)],
                vec![(4, 0, 1), (5, 0, 1)],
                vec![(4, 1, 0), (5, -1, 0)],
            ],
        ),
        SqrtFamily::H => (
            catalog("h")?,
            hk_algebra(&int(k))?,
            vec![
                vec![(0, 0, 1), (2, 0, -1)],
                vec![(0, 1, 0), (2, 1, 0)],
                vec![(1, 1, 0), (3, 1, 0)],
                vec![(1, 0, 1), (3, 0, -1)],
                vec![(4, 0, 2)],
                vec![(5, 0, 1), (6, 0, 1)],
                vec![(5, -1, 0), (6, 1, 0)],
                vec![(7, 0, -2)],
            ],
        ),
        SqrtFamily::L4L4 => (
            catalog("l4+l4")?,
            lk_algebra(&int(k))?,
            vec![
                vec![(0, 1, 0), (2, 1, 0)],
                vec![(0, 0, 1), (2, 0, -1)],
                vec![(1, 1, 0), (3, 1, 0)],
                vec![(1, 0, 1), (3, 0, -1)],
                vec![(4, 1, 0), (5, 1, 0)],
                vec![(4, 0, 1), (5, 0, -1)],
                vec![(6, 1, 0), (7, 1, 0)],
                vec![(6, 0, 1), (7, 0, -1)],
            ],
        ),
    };
    let basis = witness_matrix(k, ambient.dim(), &cols)?;
    let witness = SqrtFormWitness { family, k, ambient, target, basis };
    witness.verify()?;
    Ok(witness)
}
