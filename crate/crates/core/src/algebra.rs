//! Finite-dimensional associative unital algebras given by structure constants, and tensor
//! products balanced over a subalgebra realized as explicit quotient spaces.

use std::ops::Deref;

use thiserror::Error;

use crate::linalg::{kernel, Matrix, QuotientSpace, Subspace};
use crate::scalar::{vector, Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("algebra dimension must be positive")]
    ZeroDimension,
    #[error("product is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails at basis element {0}")]
    NotUnital(usize),
    #[error("subspace is not a unital subalgebra: {0}")]
    NotSubalgebra(String),
}

/// Coordinates of an algebra element in the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element(pub Vec<Scalar>);

impl Element {
    pub fn zero(field: Field, n: usize) -> Element {
        Element(vector::zeros(field, n))
    }

    pub fn basis(field: Field, n: usize, k: usize) -> Element {
        Element(vector::unit(field, n, k))
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.0
    }
}

impl Deref for Element {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl From<Vec<Scalar>> for Element {
    fn from(v: Vec<Scalar>) -> Element {
        Element(v)
    }
}

/// Structure constants `c[i][j][k]` with `basis_i · basis_j = Σ_k c[i][j][k] basis_k`, plus a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTable {
    field: Field,
    n: usize,
    constants: Vec<Scalar>,
    /// Nonzero structure constants of each basis product, indexed by `i * n + j`.
    terms: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
}

impl ProductTable {
    /// Validates associativity and the unit law on all basis elements.
    pub fn new(field: Field, n: usize, constants: Vec<Scalar>, unit: Vec<Scalar>) -> Result<ProductTable, AlgebraError> {
        let table = ProductTable::new_unchecked(field, n, constants, unit)?;
        table.validate()?;
        Ok(table)
    }

    /// Builds the table checking only shapes.
    pub fn new_unchecked(field: Field, n: usize, constants: Vec<Scalar>, unit: Vec<Scalar>) -> Result<ProductTable, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if constants.len() != n * n * n {
            return Err(AlgebraError::DimensionMismatch { expected: n * n * n, got: constants.len() });
        }
        if unit.len() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, got: unit.len() });
        }
        let terms = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter(|&k| !constants[ij * n + k].is_zero())
                    .map(|k| (k, constants[ij * n + k].clone()))
                    .collect()
            })
            .collect();
        Ok(ProductTable { field, n, constants, terms, unit })
    }

    /// Builds a table from a rule giving each basis product as a coordinate vector.
    pub fn from_fn(
        field: Field,
        n: usize,
        unit: Vec<Scalar>,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<ProductTable, AlgebraError> {
        let mut constants = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                if v.len() != n {
                    return Err(AlgebraError::DimensionMismatch { expected: n, got: v.len() });
                }
                constants.extend(v);
            }
        }
        ProductTable::new(field, n, constants, unit)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.n;
        for i in 0..n {
            let ei = vector::unit(self.field, n, i);
            if self.multiply(&self.unit, &ei) != ei || self.multiply(&ei, &self.unit) != ei {
                return Err(AlgebraError::NotUnital(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.multiply_by_basis(&ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.basis_times(i, &jk);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.constants
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.n + j) * self.n + k]
    }

    pub fn terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.terms[i * self.n + j]
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.n, "left factor has wrong dimension");
        assert_eq!(y.len(), self.n, "right factor has wrong dimension");
        let mut out = vector::zeros(self.field, self.n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coef = xi * yj;
                for (k, c) in &self.terms[i * self.n + j] {
                    out[*k].add_product(&coef, c);
                }
            }
        }
        out
    }

    /// Dimension-checked product of elements.
    pub fn try_multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Element, AlgebraError> {
        for v in [x, y] {
            if v.len() != self.n {
                return Err(AlgebraError::DimensionMismatch { expected: self.n, got: v.len() });
            }
        }
        Ok(Element(self.multiply(x, y)))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.n);
        for (k, c) in &self.terms[i * self.n + j] {
            out[*k] = c.clone();
        }
        out
    }

    /// `x · basis_j`.
    pub fn multiply_by_basis(&self, x: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in &self.terms[i * self.n + j] {
                out[*k].add_product(xi, c);
            }
        }
        out
    }

    /// `basis_i · y`.
    pub fn basis_times(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.n);
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, c) in &self.terms[i * self.n + j] {
                out[*k].add_product(yj, c);
            }
        }
        out
    }

    /// Matrix of `y ↦ x · y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.n).map(|j| self.multiply_by_basis(x, j)).collect();
        Matrix::from_columns(self.field, self.n, &cols)
    }

    /// Matrix of `y ↦ y · x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.n).map(|i| self.basis_times(i, x)).collect();
        Matrix::from_columns(self.field, self.n, &cols)
    }

    /// The opposite product `x ·op y = y · x`.
    pub fn opposite(&self) -> ProductTable {
        let n = self.n;
        let mut constants = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    constants.push(self.constant(j, i, k).clone());
                }
            }
        }
        ProductTable::new_unchecked(self.field, n, constants, self.unit.clone()).expect("same shape")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.terms(i, j) == self.terms(j, i)))
    }

    /// Elements commuting with every element of `s`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.n;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for g in s.basis() {
            let comm_cols: Vec<Vec<Scalar>> =
                (0..n).map(|j| vector::sub(&self.multiply_by_basis(g, j), &self.basis_times(j, g))).collect();
            // comm_cols[j] = g·e_j − e_j·g; stack the n rows of this linear map.
            let m = Matrix::from_columns(self.field, n, &comm_cols);
            rows.extend(m.row_vectors());
        }
        if rows.is_empty() {
            return Subspace::full(self.field, n);
        }
        kernel(&Matrix::from_rows(self.field, n, rows))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.field, self.n))
    }

    /// Checks that `s` is closed under the product and contains the unit.
    pub fn check_subalgebra(&self, s: &Subspace) -> Result<(), AlgebraError> {
        if !s.contains(&self.unit) {
            return Err(AlgebraError::NotSubalgebra("does not contain the unit".into()));
        }
        for x in s.basis() {
            for y in s.basis() {
                if !s.contains(&self.multiply(x, y)) {
                    return Err(AlgebraError::NotSubalgebra("not closed under the product".into()));
                }
            }
        }
        Ok(())
    }
}

/// Tensors in `field^left ⊗ field^right`, stored densely with index `p * right + q`.
pub fn outer(left: &[Scalar], right: &[Scalar]) -> Vec<Scalar> {
    let field = left.first().or(right.first()).map(Scalar::field).unwrap_or(Field::Rational);
    let mut out = vector::zeros(field, left.len() * right.len());
    for (p, x) in left.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (q, y) in right.iter().enumerate() {
            if !y.is_zero() {
                out[p * right.len() + q] = x * y;
            }
        }
    }
    out
}

/// The tensor product `M ⊗_X N` of a right `X`-module and a left `X`-module, presented as the
/// quotient of `M ⊗_k N` by `(m◁x) ⊗ n − m ⊗ (x▷n)` over a basis of `X`.
#[derive(Clone, Debug, PartialEq)]
pub struct RelativeTensor {
    left_dim: usize,
    right_dim: usize,
    quotient: QuotientSpace,
}

impl RelativeTensor {
    /// `right_actions[x]` is the matrix of `m ↦ m◁x` on the left factor, `left_actions[x]` the
    /// matrix of `n ↦ x▷n` on the right factor, for each basis element `x` of `X`.
    pub fn new(field: Field, left_dim: usize, right_dim: usize, right_actions: &[Matrix], left_actions: &[Matrix]) -> RelativeTensor {
        assert_eq!(right_actions.len(), left_actions.len(), "one action pair per basis element of X");
        let mut generators = Vec::new();
        for (rho, lam) in right_actions.iter().zip(left_actions) {
            let rho_cols = rho.columns();
            let lam_cols = lam.columns();
            for (p, rp) in rho_cols.iter().enumerate() {
                for (q, lq) in lam_cols.iter().enumerate() {
                    let mut g = outer(rp, &vector::unit(field, right_dim, q));
                    let other = outer(&vector::unit(field, left_dim, p), lq);
                    for (a, b) in g.iter_mut().zip(&other) {
                        if !b.is_zero() {
                            *a -= b;
                        }
                    }
                    if !vector::is_zero(&g) {
                        generators.push(g);
                    }
                }
            }
        }
        let relations = Subspace::span(field, left_dim * right_dim, generators);
        RelativeTensor { left_dim, right_dim, quotient: QuotientSpace::new(relations) }
    }

    /// `A ⊗_X A` where `X` acts on both factors by multiplication in `table`.
    pub fn over_subalgebra(table: &ProductTable, x: &Subspace) -> Result<RelativeTensor, AlgebraError> {
        table.check_subalgebra(x)?;
        let rights: Vec<Matrix> = x.basis().iter().map(|b| table.right_mul_matrix(b)).collect();
        let lefts: Vec<Matrix> = x.basis().iter().map(|b| table.left_mul_matrix(b)).collect();
        Ok(RelativeTensor::new(table.field(), table.dim(), table.dim(), &rights, &lefts))
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn field(&self) -> Field {
        self.quotient.field()
    }

    /// Class of a representative tensor.
    pub fn project(&self, tensor: &[Scalar]) -> Vec<Scalar> {
        self.quotient.project(tensor)
    }

    /// Class of `m ⊗ n`.
    pub fn class_of(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        self.project(&outer(m, n))
    }

    /// Deterministic representative of a class.
    pub fn lift(&self, class: &[Scalar]) -> Vec<Scalar> {
        self.quotient.lift(class)
    }

    /// Accumulates the class of `coef · (basis_p ⊗ basis_q)` into `acc`.
    pub fn add_basis_class(&self, acc: &mut [Scalar], p: usize, q: usize, coef: &Scalar) {
        self.quotient.project_basis_into(acc, p * self.right_dim + q, coef);
    }

    /// Accumulates the class of `coef · (m ⊗ n)` into `acc`.
    pub fn add_pair_class(&self, acc: &mut [Scalar], m: &[Scalar], n: &[Scalar], coef: &Scalar) {
        for (p, x) in m.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = coef * x;
            for (q, y) in n.iter().enumerate() {
                if !y.is_zero() {
                    let c = &cx * y;
                    self.add_basis_class(acc, p, q, &c);
                }
            }
        }
    }

    pub fn zero_class(&self) -> Vec<Scalar> {
        vector::zeros(self.field(), self.dim())
    }

    /// A basis of the relation span, as representative tensors projecting to zero.
    pub fn relation_basis(&self) -> &[Vec<Scalar>] {
        self.quotient.relations().basis()
    }

    /// Splits a representative tensor into its nonzero `(p, q, coefficient)` terms.
    pub fn terms(&self, tensor: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
        tensor
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (idx / self.right_dim, idx % self.right_dim, c.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// M_2 with its usual product, basis e11, e12, e21, e22.
    pub(crate) fn matrix_algebra() -> ProductTable {
        let f = Field::Rational;
        let unit = vec![f.one(), f.zero(), f.zero(), f.one()];
        ProductTable::from_fn(f, 4, unit, |a, b| {
            let (j, k, l, m) = (a / 2, a % 2, b / 2, b % 2);
            let mut v = vector::zeros(f, 4);
            if k == l {
                v[j * 2 + m] = f.one();
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn matrix_products() {
        let t = matrix_algebra();
        assert_eq!(t.basis_product(1, 2), vector::unit(Field::Rational, 4, 0));
        assert!(!t.is_commutative());
        assert_eq!(t.center().dim(), 1);
        assert!(t.center().contains(t.unit()));
    }

    #[test]
    fn rejects_non_associative_and_non_unital() {
        let f = Field::Rational;
        // Basis {1, x} with x·x = 1 + x is associative (commutative, generated by x);
        // break associativity by making 1·x = 0.
        let consts = vec![f.one(), f.zero(), f.zero(), f.zero(), f.zero(), f.one(), f.one(), f.one()];
        let err = ProductTable::new(f, 2, consts, vec![f.one(), f.zero()]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotUnital(_)));
        assert_eq!(ProductTable::new(f, 0, vec![], vec![]).unwrap_err(), AlgebraError::ZeroDimension);
    }

    #[test]
    fn diagonal_centralizer_in_m2() {
        let t = matrix_algebra();
        let f = Field::Rational;
        let diag = Subspace::span(f, 4, vec![vector::unit(f, 4, 0), vector::unit(f, 4, 3)]);
        let c = t.centralizer(&diag);
        assert_eq!(c, diag);
        let unit_span = Subspace::span(f, 4, vec![t.unit().to_vec()]);
        assert_eq!(t.centralizer(&unit_span).dim(), 4);
    }

    #[test]
    fn tensor_over_unit_span_is_full_square() {
        let t = matrix_algebra();
        let unit_span = Subspace::span(Field::Rational, 4, vec![t.unit().to_vec()]);
        let rt = RelativeTensor::over_subalgebra(&t, &unit_span).unwrap();
        assert_eq!(rt.dim(), 16);
    }

    #[test]
    fn tensor_over_diagonal_has_dimension_eight() {
        let t = matrix_algebra();
        let f = Field::Rational;
        let diag = Subspace::span(f, 4, vec![vector::unit(f, 4, 0), vector::unit(f, 4, 3)]);
        let rt = RelativeTensor::over_subalgebra(&t, &diag).unwrap();
        assert_eq!(rt.dim(), 8);
        // Middle linearity: e12·e22 ⊗ e21 ~ e12 ⊗ e22·e21.
        let e = |k| vector::unit(f, 4, k);
        assert_eq!(rt.class_of(&t.multiply(&e(1), &e(3)), &e(2)), rt.class_of(&e(1), &t.multiply(&e(3), &e(2))));
    }
}
