//! Subspaces of Q^n held in reduced row echelon form, which is a canonical
//! representation: equal subspaces have identical stored bases.

use num_traits::Zero;

use crate::exact::{RationalMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Rows are basis vectors in reduced echelon form; no zero rows.
    basis: RationalMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: RationalMatrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: RationalMatrix::identity(ambient) }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length mismatch");
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = RationalMatrix::from_rows(vectors.to_vec()).expect("rectangular");
        let (r, pivots) = m.rref();
        let kept: Vec<Vec<Rational>> = (0..pivots.len()).map(|i| r.row(i)).collect();
        let basis = if kept.is_empty() {
            RationalMatrix::zeros(0, ambient)
        } else {
            RationalMatrix::from_rows(kept).expect("rectangular")
        };
        Subspace { ambient, basis }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate_span(ambient: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<Rational>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = num_traits::One::one();
                v
            })
            .collect();
        Subspace::from_vectors(ambient, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.basis.rows()).map(|i| self.basis.row(i)).collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        for row in 0..self.basis.rows() {
            // Echelon rows have leading 1 at their pivot column.
            let pivot = (0..self.ambient)
                .find(|&c| !self.basis.get(row, c).is_zero())
                .expect("no zero rows stored");
            if w[pivot].is_zero() {
                continue;
            }
            let f = w[pivot].clone();
            for c in 0..self.ambient {
                let t = &f * self.basis.get(row, c);
                w[c] = &w[c] - &t;
            }
        }
        w.iter().all(|c| c.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Subspace::from_vectors(self.ambient, &vectors)
    }

    /// Intersection, via the kernel of the concatenated basis matrix: a
    /// kernel vector (c, d) encodes one vector c*A = d*B of the overlap.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let p = self.dim();
        let q = other.dim();
        if p == 0 || q == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut m = RationalMatrix::zeros(self.ambient, p + q);
        for j in 0..p {
            for i in 0..self.ambient {
                m.set(i, j, self.basis.get(j, i).clone());
            }
        }
        for j in 0..q {
            for i in 0..self.ambient {
                m.set(i, p + j, -other.basis.get(j, i));
            }
        }
        let mut vectors = Vec::new();
        for null in m.nullspace() {
            let mut v = vec![Rational::zero(); self.ambient];
            for j in 0..p {
                for i in 0..self.ambient {
                    let t = &null[j] * self.basis.get(j, i);
                    v[i] = &v[i] + &t;
                }
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.ambient, &vectors)
    }

    /// Coordinates of v in the stored echelon basis, or None when v is
    /// outside the span.
    pub fn coordinates_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        let mut coords = vec![Rational::zero(); self.basis.rows()];
        for row in 0..self.basis.rows() {
            let pivot = (0..self.ambient)
                .find(|&c| !self.basis.get(row, c).is_zero())
                .expect("no zero rows stored");
            if w[pivot].is_zero() {
                continue;
            }
            let f = w[pivot].clone();
            for c in 0..self.ambient {
                let t = &f * self.basis.get(row, c);
                w[c] = &w[c] - &t;
            }
            coords[row] = f;
        }
        if w.iter().all(|c| c.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}
