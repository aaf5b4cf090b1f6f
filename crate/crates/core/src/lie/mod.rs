//! Rational nilpotent Lie algebras presented by structure constants, with
//! the characteristic subspaces and decompositions everything else is built
//! on: lower central series, type, center, derived algebra, maximal abelian
//! factor, the skew J maps of 2-step algebras, direct sums, and base change.

pub mod subspace;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{format_rational, ExactError, Rational, RationalMatrix};
pub use subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    /// Indices are 1-based to match the presentation format.
    #[error("jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        /// Nonzero coordinates of the Jacobiator, 1-based index and value.
        coordinates: Vec<(usize, Rational)>,
    },
    #[error("lower central series stabilizes at dimension {0} without reaching zero")]
    NotNilpotent(usize),
    #[error("not 2-step in the required basis split: {0}")]
    NotTwoStep(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular, not a change of basis")]
    SingularBasis,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Dimensions of the lower central series quotients, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTuple(pub Vec<usize>);

impl TypeTuple {
    /// Number of entries, i.e. the nilpotency step.
    pub fn step(&self) -> usize {
        self.0.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for TypeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Formats a coordinate vector as a combination of named basis vectors.
pub fn format_linear_combination(coords: &[Rational], names: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
            out.push('*');
        }
        out.push_str(&names[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A finite dimensional Lie algebra over Q given by structure constants on a
/// fixed basis. Brackets are stored for index pairs i < j only; antisymmetry
/// is implicit and zero brackets are not stored.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

/// Base names are presentation only; equality is structural.
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }
}

impl Eq for LieAlgebra {}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        let names = (1..=dim).map(|i| format!("e{i}")).collect();
        LieAlgebra { dim, names, brackets: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn set_names(&mut self, names: Vec<String>) -> Result<(), LieError> {
        if names.len() != self.dim {
            return Err(LieError::Dimension(format!(
                "{} names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        self.names = names;
        Ok(())
    }

    /// Stored bracket table as (i, j, coordinates) with i < j, sorted.
    pub fn bracket_entries(&self) -> Vec<(usize, usize, Vec<Rational>)> {
        self.brackets.iter().map(|(&(i, j), c)| (i, j, c.clone())).collect()
    }

    /// Adds c * e_k to [e_i, e_j], flipping the sign when i > j.
    pub fn add_bracket_term(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        assert!(i < self.dim && j < self.dim && k < self.dim, "index out of range");
        assert!(i != j, "bracket of a basis vector with itself");
        if c.is_zero() {
            return;
        }
        let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        let entry = self
            .brackets
            .entry((a, b))
            .or_insert_with(|| vec![Rational::zero(); self.dim]);
        entry[k] = &entry[k] + &c;
        if entry.iter().all(|v| v.is_zero()) {
            self.brackets.remove(&(a, b));
        }
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, coords: Vec<Rational>) {
        assert!(i < self.dim && j < self.dim, "index out of range");
        assert!(i != j, "bracket of a basis vector with itself");
        assert_eq!(coords.len(), self.dim, "coordinate length mismatch");
        let (a, b, coords) = if i < j {
            (i, j, coords)
        } else {
            (j, i, coords.iter().map(|c| -c).collect())
        };
        if coords.iter().all(|c| c.is_zero()) {
            self.brackets.remove(&(a, b));
        } else {
            self.brackets.insert((a, b), coords);
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_of_basis(i, j)[k].clone()
    }

    pub fn bracket_of_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        if i == j {
            return vec![Rational::zero(); self.dim];
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        match self.brackets.get(&(a, b)) {
            None => vec![Rational::zero(); self.dim],
            Some(c) if i < j => c.clone(),
            Some(c) => c.iter().map(|v| -v).collect(),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim, "vector length mismatch");
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), coords) in &self.brackets {
            let f = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
            if f.is_zero() {
                continue;
            }
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    out[k] = &out[k] + &(&f * c);
                }
            }
        }
        out
    }

    fn standard_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// Checks the Jacobi identity on every basis triple and nilpotency of
    /// the lower central series.
    pub fn validate(&self) -> Result<(), LieError> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bij = self.bracket_of_basis(i, j);
                for k in (j + 1)..self.dim {
                    let bjk = self.bracket_of_basis(j, k);
                    let bki = self.bracket_of_basis(k, i);
                    let ek = self.standard_vector(k);
                    let ei = self.standard_vector(i);
                    let ej = self.standard_vector(j);
                    let mut total = self.bracket(&bij, &ek);
                    for (t, v) in self.bracket(&bjk, &ei).into_iter().enumerate() {
                        total[t] = &total[t] + &v;
                    }
                    for (t, v) in self.bracket(&bki, &ej).into_iter().enumerate() {
                        total[t] = &total[t] + &v;
                    }
                    if total.iter().any(|c| !c.is_zero()) {
                        let coordinates = total
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(t, c)| (t + 1, c))
                            .collect();
                        return Err(LieError::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            coordinates,
                        });
                    }
                }
            }
        }
        let series = self.lower_central_series();
        let last = series.last().expect("series never empty");
        if !last.is_zero() {
            return Err(LieError::NotNilpotent(last.dim()));
        }
        Ok(())
    }

    /// C^0 = g, C^{i+1} = [g, C^i], until zero or stabilization. The final
    /// entry is zero exactly when the algebra is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let cur = series.last().unwrap();
            if cur.is_zero() {
                break;
            }
            let mut gens = Vec::new();
            for a in 0..self.dim {
                let ea = self.standard_vector(a);
                for w in cur.basis_vectors() {
                    gens.push(self.bracket(&ea, &w));
                }
            }
            let next = Subspace::from_vectors(self.dim, &gens);
            if next.dim() == cur.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let mut gens = Vec::new();
        for coords in self.brackets.values() {
            gens.push(coords.clone());
        }
        Subspace::from_vectors(self.dim, &gens)
    }

    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::zero(0);
        }
        // Stack all adjoint maps; the center is the common kernel.
        let mut m = RationalMatrix::zeros(self.dim * self.dim, self.dim);
        for a in 0..self.dim {
            for j in 0..self.dim {
                let col = self.bracket_of_basis(a, j);
                for (k, c) in col.into_iter().enumerate() {
                    m.set(a * self.dim + k, j, c);
                }
            }
        }
        Subspace::from_vectors(self.dim, &m.nullspace())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn nilpotency_class(&self) -> Result<usize, LieError> {
        let series = self.lower_central_series();
        let last = series.last().unwrap();
        if !last.is_zero() {
            return Err(LieError::NotNilpotent(last.dim()));
        }
        Ok(series.len() - 1)
    }

    /// (n_1, ..., n_r) with n_i the dimension drop at step i of the lower
    /// central series.
    pub fn type_of(&self) -> Result<TypeTuple, LieError> {
        let series = self.lower_central_series();
        let last = series.last().unwrap();
        if !last.is_zero() {
            return Err(LieError::NotNilpotent(last.dim()));
        }
        let dims: Vec<usize> = series.iter().map(|s| s.dim()).collect();
        Ok(TypeTuple(dims.windows(2).map(|w| w[0] - w[1]).collect()))
    }

    pub fn characteristic_subspaces(&self) -> CharacteristicSubspaces {
        let center = self.center();
        let derived = self.derived_subalgebra();
        let center_meet_derived = center.intersect(&derived);
        CharacteristicSubspaces {
            center,
            derived,
            center_meet_derived,
            series: self.lower_central_series(),
        }
    }

    /// For at most 2-step algebras whose derived algebra is exactly the span
    /// of the last basis vectors: returns (n1, n2) with n1 + n2 = dim.
    pub fn two_step_split(&self) -> Result<(usize, usize), LieError> {
        let class = self.nilpotency_class()?;
        if class > 2 {
            return Err(LieError::NotTwoStep(format!("nilpotency class is {class}")));
        }
        let derived = self.derived_subalgebra();
        let n2 = derived.dim();
        let n1 = self.dim - n2;
        let trailing: Vec<usize> = (n1..self.dim).collect();
        if derived != Subspace::coordinate_span(self.dim, &trailing) {
            return Err(LieError::NotTwoStep(
                "derived algebra is not the span of the trailing basis vectors".to_string(),
            ));
        }
        Ok((n1, n2))
    }

    /// The skew matrix of the map x -> [x, .] paired against z, on the
    /// complement V of the derived algebra: entry (i, j) with i < j is
    /// minus the z-component of [X_i, X_j].
    pub fn jz_matrix(&self, z: &[Rational]) -> Result<RationalMatrix, LieError> {
        let (n1, n2) = self.two_step_split()?;
        if z.len() != n2 {
            return Err(LieError::Dimension(format!(
                "z has length {}, derived algebra has dimension {n2}",
                z.len()
            )));
        }
        let mut m = RationalMatrix::zeros(n1, n1);
        for (&(i, j), coords) in &self.brackets {
            debug_assert!(j < n1, "brackets live on the complement");
            let mut s = Rational::zero();
            for k in 0..n2 {
                s = &s + &(&coords[n1 + k] * &z[k]);
            }
            if s.is_zero() {
                continue;
            }
            m.set(i, j, -&s);
            m.set(j, i, s);
        }
        Ok(m)
    }

    /// Levels of the basis vectors: vector v has level l when v lies in
    /// C^{l-1} but not C^l.
    pub fn basis_vector_levels(&self) -> Result<Vec<usize>, LieError> {
        let series = self.lower_central_series();
        if !series.last().unwrap().is_zero() {
            return Err(LieError::NotNilpotent(series.last().unwrap().dim()));
        }
        let mut levels = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let v = self.standard_vector(i);
            let count = series.iter().filter(|s| s.contains(&v)).count();
            levels.push(count);
        }
        Ok(levels)
    }

    /// Renames the basis X1, X2, ... for level 1 vectors and Z1, Z2, ... for
    /// the rest, in basis order.
    pub fn rename_by_level(&mut self) -> Result<(), LieError> {
        let levels = self.basis_vector_levels()?;
        let mut x = 0;
        let mut z = 0;
        let names = levels
            .iter()
            .map(|&l| {
                if l == 1 {
                    x += 1;
                    format!("X{x}")
                } else {
                    z += 1;
                    format!("Z{z}")
                }
            })
            .collect();
        self.names = names;
        Ok(())
    }

    /// Direct sum with basis vectors interleaved by level: all level 1
    /// vectors of both summands first, then level 2, and so on, preserving
    /// order within each summand. The result is renamed X/Z by level.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra, LieError> {
        let la = self.basis_vector_levels()?;
        let lb = other.basis_vector_levels()?;
        let order = merged_order(&la, &lb);
        let n = self.dim + other.dim;
        let mut pos_a = vec![0usize; self.dim];
        let mut pos_b = vec![0usize; other.dim];
        for (new, &(side, idx)) in order.iter().enumerate() {
            if side == 0 {
                pos_a[idx] = new;
            } else {
                pos_b[idx] = new;
            }
        }
        let mut out = LieAlgebra::abelian(n);
        for (&(i, j), coords) in &self.brackets {
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    out.add_bracket_term(pos_a[i], pos_a[j], pos_a[k], c.clone());
                }
            }
        }
        for (&(i, j), coords) in &other.brackets {
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    out.add_bracket_term(pos_b[i], pos_b[j], pos_b[k], c.clone());
                }
            }
        }
        out.rename_by_level()?;
        Ok(out)
    }

    /// Structure constants in the basis whose vectors are the columns of p,
    /// expressed in the old coordinates.
    pub fn change_basis(&self, p: &RationalMatrix) -> Result<LieAlgebra, LieError> {
        if !p.is_square() || p.rows() != self.dim {
            return Err(LieError::Dimension(format!(
                "{}x{} base change for dimension {}",
                p.rows(),
                p.cols(),
                self.dim
            )));
        }
        let p_inv = p.inverse().map_err(|_| LieError::SingularBasis)?;
        let mut out = LieAlgebra::abelian(self.dim);
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let br = self.bracket(&p.column(i), &p.column(j));
                let coords = p_inv.mul_vec(&br)?;
                out.set_bracket(i, j, coords);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dimension {}", self.dim)?;
        for (&(i, j), coords) in &self.brackets {
            writeln!(
                f,
                "[{}, {}] = {}",
                self.names[i],
                self.names[j],
                format_linear_combination(coords, &self.names)
            )?;
        }
        Ok(())
    }
}

pub struct CharacteristicSubspaces {
    pub center: Subspace,
    pub derived: Subspace,
    pub center_meet_derived: Subspace,
    pub series: Vec<Subspace>,
}

/// Interleaves two level sequences: level 1 of side 0, level 1 of side 1,
/// level 2 of side 0, and so on.
pub(crate) fn merged_order(la: &[usize], lb: &[usize]) -> Vec<(usize, usize)> {
    let max = la.iter().chain(lb.iter()).copied().max().unwrap_or(0);
    let mut order = Vec::with_capacity(la.len() + lb.len());
    for level in 1..=max {
        for (i, &l) in la.iter().enumerate() {
            if l == level {
                order.push((0, i));
            }
        }
        for (i, &l) in lb.iter().enumerate() {
            if l == level {
                order.push((1, i));
            }
        }
    }
    order
}

/// True when the invertible matrix a carries the brackets of l1 to those of
/// l2, i.e. a[x, y] = [ax, ay] on all basis pairs. Singular a is an error,
/// not a false.
pub fn is_isomorphism(
    l1: &LieAlgebra,
    l2: &LieAlgebra,
    a: &RationalMatrix,
) -> Result<bool, LieError> {
    let n = l1.dim();
    if l2.dim() != n || !a.is_square() || a.rows() != n {
        return Err(LieError::Dimension(format!(
            "algebras of dimension {} and {}, map {}x{}",
            n,
            l2.dim(),
            a.rows(),
            a.cols()
        )));
    }
    if a.det()?.is_zero() {
        return Err(LieError::SingularBasis);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = a.mul_vec(&l1.bracket_of_basis(i, j))?;
            let rhs = l2.bracket(&a.column(i), &a.column(j));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The 2-step shortcut for the same decision: a must keep the derived
/// algebra inside the derived algebra, and on the complement the skew
/// matrices must satisfy A1^t J'_{e_k} A1 = J_{A2 row k} for every basis
/// vector e_k of the target derived algebra. Agrees with is_isomorphism
/// whenever both apply.
pub fn two_step_isomorphism_check(
    l1: &LieAlgebra,
    l2: &LieAlgebra,
    a: &RationalMatrix,
) -> Result<bool, LieError> {
    let n = l1.dim();
    if l2.dim() != n || !a.is_square() || a.rows() != n {
        return Err(LieError::Dimension(format!(
            "algebras of dimension {} and {}, map {}x{}",
            n,
            l2.dim(),
            a.rows(),
            a.cols()
        )));
    }
    let (v1, _) = l1.two_step_split()?;
    let (v2, z2) = l2.two_step_split()?;
    if a.det()?.is_zero() {
        return Err(LieError::SingularBasis);
    }
    // Images of derived basis vectors must have no complement component.
    for i in 0..v2 {
        for j in v1..n {
            if !a.get(i, j).is_zero() {
                return Ok(false);
            }
        }
    }
    let a1 = {
        let mut m = RationalMatrix::zeros(v2, v1);
        for i in 0..v2 {
            for j in 0..v1 {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        m
    };
    let a1t = a1.transpose();
    for k in 0..z2 {
        let mut ek = vec![Rational::zero(); z2];
        ek[k] = Rational::one();
        let jz2m = l2.jz_matrix(&ek)?;
        let lhs = (&(&a1t * &jz2m)? * &a1)?;
        let a2_row: Vec<Rational> =
            (v1..n).map(|j| a.get(v2 + k, j).clone()).collect();
        let rhs = l1.jz_matrix(&a2_row)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The decomposition L = reduced + abelian factor of maximal dimension.
pub struct AbelianSplit {
    pub abelian_dim: usize,
    pub reduced: LieAlgebra,
    /// The abelian factor inside L: a complement of center-meet-derived in
    /// the center.
    pub complement: Subspace,
    /// Columns express the basis of direct_sum(reduced, abelian) in the
    /// coordinates of L; an explicit isomorphism witness.
    pub base_change: RationalMatrix,
}

/// Splits off the largest abelian direct factor. The reduced algebra keeps
/// a deterministic basis: greedily chosen standard basis vectors outside the
/// span of derived algebra and factor, followed by the echelon basis of the
/// derived algebra.
pub fn max_abelian_factor(l: &LieAlgebra) -> Result<AbelianSplit, LieError> {
    let n = l.dim();
    let center = l.center();
    let derived = l.derived_subalgebra();
    let mut acc = derived.clone();
    let mut a_vectors: Vec<Vec<Rational>> = Vec::new();
    for zv in center.basis_vectors() {
        let cand = acc.sum(&Subspace::from_vectors(n, &[zv.clone()]));
        if cand.dim() > acc.dim() {
            acc = cand;
            a_vectors.push(zv);
        }
    }
    let m = a_vectors.len();
    let mut w_added: Vec<Vec<Rational>> = Vec::new();
    let mut span = acc;
    for i in 0..n {
        if span.dim() == n {
            break;
        }
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        let cand = span.sum(&Subspace::from_vectors(n, &[e.clone()]));
        if cand.dim() > span.dim() {
            span = cand;
            w_added.push(e);
        }
    }
    let mut w_basis = w_added;
    w_basis.extend(derived.basis_vectors());
    let nd = w_basis.len();
    debug_assert_eq!(nd + m, n);
    let mut c_mat = RationalMatrix::zeros(n, nd);
    for (j, v) in w_basis.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            c_mat.set(i, j, x.clone());
        }
    }
    let mut reduced = LieAlgebra::abelian(nd);
    for p in 0..nd {
        for q in (p + 1)..nd {
            let br = l.bracket(&w_basis[p], &w_basis[q]);
            if br.iter().all(|c| c.is_zero()) {
                continue;
            }
            let coords = c_mat
                .solve(&br)?
                .expect("brackets lie in the derived algebra, inside the span");
            reduced.set_bracket(p, q, coords);
        }
    }
    reduced.rename_by_level()?;
    let levels_r = reduced.basis_vector_levels()?;
    let order = merged_order(&levels_r, &vec![1usize; m]);
    let mut base_change = RationalMatrix::zeros(n, n);
    for (new, &(side, idx)) in order.iter().enumerate() {
        let v = if side == 0 { &w_basis[idx] } else { &a_vectors[idx] };
        for (i, x) in v.iter().enumerate() {
            base_change.set(i, new, x.clone());
        }
    }
    Ok(AbelianSplit {
        abelian_dim: m,
        reduced,
        complement: Subspace::from_vectors(n, &a_vectors),
        base_change,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

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

    fn l4() -> LieAlgebra {
        let mut l = LieAlgebra::abelian(4);
        l.add_bracket_term(0, 1, 2, rat(1));
        l.add_bracket_term(0, 2, 3, rat(1));
        l
    }

    fn six_dim_g() -> LieAlgebra {
        // Generators e0..e5, center e6, e7.
        let mut l = LieAlgebra::abelian(8);
        l.add_bracket_term(0, 1, 6, rat(1));
        l.add_bracket_term(0, 2, 7, rat(1));
        l.add_bracket_term(3, 4, 6, rat(1));
        l.add_bracket_term(3, 5, 7, rat(1));
        l
    }

    #[test]
    fn bracket_storage_and_antisymmetry() {
        let l = h3();
        assert_eq!(l.bracket_of_basis(0, 1), vec![rat(0), rat(0), rat(1)]);
        assert_eq!(l.bracket_of_basis(1, 0), vec![rat(0), rat(0), rat(-1)]);
        assert_eq!(l.bracket_of_basis(1, 1), vec![rat(0); 3]);
        assert_eq!(l.structure_constant(0, 1, 2), rat(1));
        let u = vec![rat(1), rat(2), rat(0)];
        let v = vec![rat(3), rat(4), rat(0)];
        // [u, v] = (1*4 - 2*3) Z = -2 Z.
        assert_eq!(l.bracket(&u, &v), vec![rat(0), rat(0), rat(-2)]);
        let mut m = h3();
        m.add_bracket_term(1, 0, 2, rat(1));
        assert_eq!(m.bracket_of_basis(0, 1), vec![rat(0); 3]);
        assert_eq!(m.bracket_entries().len(), 0);
    }

    #[test]
    fn validate_catches_bad_structures() {
        assert!(h3().validate().is_ok());
        assert!(f3().validate().is_ok());
        assert!(LieAlgebra::abelian(5).validate().is_ok());
        // Extra bracket making the algebra non-nilpotent.
        let mut bad = h3();
        bad.add_bracket_term(0, 2, 1, rat(1));
        assert!(matches!(bad.validate(), Err(LieError::NotNilpotent(_))));
        // A genuine Jacobi failure.
        let mut jac = LieAlgebra::abelian(3);
        jac.add_bracket_term(0, 1, 2, rat(1));
        jac.add_bracket_term(0, 2, 0, rat(1));
        match jac.validate() {
            Err(LieError::JacobiViolation { i: 1, j: 2, k: 3, coordinates }) => {
                assert!(!coordinates.is_empty());
            }
            other => panic!("expected a jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn series_types_and_classes() {
        assert_eq!(h3().type_of().unwrap(), TypeTuple(vec![2, 1]));
        assert_eq!(f3().type_of().unwrap(), TypeTuple(vec![3, 3]));
        assert_eq!(l4().type_of().unwrap(), TypeTuple(vec![2, 1, 1]));
        assert_eq!(six_dim_g().type_of().unwrap(), TypeTuple(vec![6, 2]));
        assert_eq!(LieAlgebra::abelian(4).type_of().unwrap(), TypeTuple(vec![4]));
        assert_eq!(h3().nilpotency_class().unwrap(), 2);
        assert_eq!(l4().nilpotency_class().unwrap(), 3);
        assert_eq!(LieAlgebra::abelian(2).nilpotency_class().unwrap(), 1);
        assert_eq!(f3().type_of().unwrap().to_string(), "(3,3)");
    }

    #[test]
    fn characteristic_subspaces_of_known_algebras() {
        let h = h3().characteristic_subspaces();
        assert_eq!(h.center.dim(), 1);
        assert_eq!(h.center, h.derived);
        let g = six_dim_g().characteristic_subspaces();
        assert_eq!(g.center, Subspace::coordinate_span(8, &[6, 7]));
        assert_eq!(g.derived, g.center);
        assert_eq!(g.center_meet_derived.dim(), 2);
        let f = f3().characteristic_subspaces();
        assert_eq!(f.derived.dim(), 3);
        assert_eq!(f.center_meet_derived.dim(), 3);
        // l4 has a center not containing the whole derived algebra.
        let l = l4().characteristic_subspaces();
        assert_eq!(l.center.dim(), 1);
        assert_eq!(l.derived.dim(), 2);
        assert_eq!(l.center_meet_derived.dim(), 1);
        assert_eq!(l.series.len(), 4);
    }

    #[test]
    fn direct_sums_interleave_by_level() {
        let s = h3().direct_sum(&h3()).unwrap();
        assert_eq!(s.type_of().unwrap(), TypeTuple(vec![4, 2]));
        assert_eq!(s.bracket_of_basis(0, 1)[4], rat(1));
        assert_eq!(s.bracket_of_basis(2, 3)[5], rat(1));
        assert_eq!(s.names(), &["X1", "X2", "X3", "X4", "Z1", "Z2"]);
        let ll = l4().direct_sum(&l4()).unwrap();
        assert_eq!(ll.type_of().unwrap(), TypeTuple(vec![4, 2, 2]));
        // Summand A occupies positions 0, 1, 4, 6; summand B 2, 3, 5, 7.
        assert_eq!(ll.bracket_of_basis(0, 1)[4], rat(1));
        assert_eq!(ll.bracket_of_basis(0, 4)[6], rat(1));
        assert_eq!(ll.bracket_of_basis(2, 3)[5], rat(1));
        assert_eq!(ll.bracket_of_basis(2, 5)[7], rat(1));
        assert_eq!(ll.names(), &["X1", "X2", "X3", "X4", "Z1", "Z2", "Z3", "Z4"]);
        let with_abelian = h3().direct_sum(&LieAlgebra::abelian(2)).unwrap();
        assert_eq!(with_abelian.type_of().unwrap(), TypeTuple(vec![4, 1]));
        assert_eq!(with_abelian.bracket_of_basis(0, 1)[4], rat(1));
    }

    #[test]
    fn jz_matrices() {
        let s = h3().direct_sum(&h3()).unwrap();
        let m = s.jz_matrix(&[rat(1), rat(0)]).unwrap();
        let want = RationalMatrix::from_int_rows(&[
            vec![0, -1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
        ]);
        assert_eq!(m, want);
        let zero = s.jz_matrix(&[rat(0), rat(0)]).unwrap();
        assert_eq!(zero, RationalMatrix::zeros(4, 4));
        // Linearity and skewness on a sample.
        let z1 = [rat(3), rat(-2)];
        let m1 = s.jz_matrix(&z1).unwrap();
        assert!(m1.is_skew_symmetric());
        let ma = s.jz_matrix(&[rat(1), rat(0)]).unwrap();
        let mb = s.jz_matrix(&[rat(0), rat(1)]).unwrap();
        let lin = &ma.scale(&rat(3)) + &mb.scale(&rat(-2));
        assert_eq!(m1, lin);
        assert!(l4().jz_matrix(&[rat(1)]).is_err());
        assert!(s.jz_matrix(&[rat(1)]).is_err());
    }

    #[test]
    fn isomorphism_checks() {
        let s = h3().direct_sum(&h3()).unwrap();
        let id = RationalMatrix::identity(6);
        assert!(is_isomorphism(&s, &s, &id).unwrap());
        assert!(two_step_isomorphism_check(&s, &s, &id).unwrap());
        // Swap the two copies.
        let mut swap = RationalMatrix::zeros(6, 6);
        for (from, to) in [(0, 2), (1, 3), (2, 0), (3, 1), (4, 5), (5, 4)] {
            swap.set(to, from, rat(1));
        }
        assert!(is_isomorphism(&s, &s, &swap).unwrap());
        assert!(two_step_isomorphism_check(&s, &s, &swap).unwrap());
        // Flip one center direction only: breaks the second copy.
        let mut flip = RationalMatrix::identity(6);
        flip.set(5, 5, rat(-1));
        assert!(!is_isomorphism(&s, &s, &flip).unwrap());
        assert!(!two_step_isomorphism_check(&s, &s, &flip).unwrap());
        // Derived algebra leaking into the complement.
        let mut leak = RationalMatrix::identity(6);
        leak.set(0, 4, rat(1));
        assert!(!is_isomorphism(&s, &s, &leak).unwrap());
        assert!(!two_step_isomorphism_check(&s, &s, &leak).unwrap());
        // Singular map errors in both routes.
        let sing = RationalMatrix::zeros(6, 6);
        assert!(matches!(is_isomorphism(&s, &s, &sing), Err(LieError::SingularBasis)));
        assert!(matches!(
            two_step_isomorphism_check(&s, &s, &sing),
            Err(LieError::SingularBasis)
        ));
    }

    #[test]
    fn change_basis_round_trip() {
        let f = f3();
        let p = RationalMatrix::from_int_rows(&[
            vec![1, 1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 1, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 2],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
        ]);
        let moved = f.change_basis(&p).unwrap();
        assert_ne!(moved, f);
        let back = moved.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, f);
        assert!(is_isomorphism(&moved, &f, &p).unwrap());
        assert!(f.change_basis(&RationalMatrix::zeros(6, 6)).is_err());
    }

    #[test]
    fn abelian_factor_extraction() {
        let l = h3()
            .direct_sum(&h3())
            .unwrap()
            .direct_sum(&LieAlgebra::abelian(2))
            .unwrap();
        let split = max_abelian_factor(&l).unwrap();
        assert_eq!(split.abelian_dim, 2);
        assert_eq!(split.reduced, h3().direct_sum(&h3()).unwrap());
        let rebuilt = split
            .reduced
            .direct_sum(&LieAlgebra::abelian(2))
            .unwrap();
        assert!(is_isomorphism(&rebuilt, &l, &split.base_change).unwrap());

        let f = f3();
        let split = max_abelian_factor(&f).unwrap();
        assert_eq!(split.abelian_dim, 0);
        assert_eq!(split.reduced, f);
        assert!(is_isomorphism(&f, &f, &split.base_change).unwrap());

        let q5 = LieAlgebra::abelian(5);
        let split = max_abelian_factor(&q5).unwrap();
        assert_eq!(split.abelian_dim, 5);
        assert_eq!(split.reduced.dim(), 0);

        // A 3-step example: l4 + line.
        let l = l4().direct_sum(&LieAlgebra::abelian(1)).unwrap();
        let split = max_abelian_factor(&l).unwrap();
        assert_eq!(split.abelian_dim, 1);
        assert_eq!(split.reduced, l4());
        let rebuilt = split.reduced.direct_sum(&LieAlgebra::abelian(1)).unwrap();
        assert!(is_isomorphism(&rebuilt, &l, &split.base_change).unwrap());
    }

    #[test]
    fn level_bookkeeping() {
        assert_eq!(l4().basis_vector_levels().unwrap(), vec![1, 1, 2, 3]);
        assert_eq!(h3().basis_vector_levels().unwrap(), vec![1, 1, 2]);
        let mut l = l4();
        l.rename_by_level().unwrap();
        assert_eq!(l.names(), &["X1", "X2", "Z1", "Z2"]);
    }

    #[test]
    fn linear_combination_formatting() {
        let names: Vec<String> = ["Z1", "Z2", "Z3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            format_linear_combination(&[rat(1), rat(-2), rat(0)], &names),
            "Z1 - 2*Z2"
        );
        assert_eq!(format_linear_combination(&[rat(0), rat(0), rat(0)], &names), "0");
        assert_eq!(format_linear_combination(&[rat(-1), rat(0), rat(1)], &names), "-Z1 + Z3");
    }

    #[test]
    fn display_lists_brackets() {
        let mut l = h3();
        l.set_names(vec!["X1".into(), "X2".into(), "Z1".into()]).unwrap();
        let text = l.to_string();
        assert!(text.contains("dimension 3"));
        assert!(text.contains("[X1, X2] = Z1"));
    }
}
