//! Dense exact linear algebra: matrices, reduced row echelon forms, subspaces and quotients.
//!
//! Every elimination uses the leftmost available pivot and the first row carrying it, so
//! results are reproducible bit for bit. Reduced row echelon form is canonical for a
//! subspace, which makes [`Subspace`] values comparable by plain equality.

use std::fmt;

use crate::scalar::{vector, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for k in 0..n {
            m.data[k * n + k] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { field, rows: r, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.data[i * columns.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = vector::zeros(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                o.add_product(&self.data[r * self.cols + c], x);
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let cols: Vec<Vec<Scalar>> = (0..other.cols).map(|c| self.mul_vec(&other.column(c))).collect();
        Matrix::from_columns(self.field, self.rows, &cols)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| {
                let x = self.get(r, c);
                if r == c { x.is_one() } else { x.is_zero() }
            }))
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.field, self.cols, self.row_vectors()).dim()
    }

    /// Matrix inverse, `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let rhs = Matrix::identity(self.field, n);
        let cols = solve_many(self, &rhs);
        let cols: Option<Vec<Vec<Scalar>>> = cols.into_iter().collect();
        let inv = Matrix::from_columns(self.field, n, &cols?);
        if self.mul(&inv).is_identity() { Some(inv) } else { None }
    }

    /// Flattens the matrix row-major; used to compare endomorphisms as vectors.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", vector::render(self.row(r)))?;
        }
        Ok(())
    }
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
struct Echelon {
    field: Field,
    ambient: usize,
    /// Rows with pivot entry 1 and zeros in every other pivot column.
    rows: Vec<Vec<Scalar>>,
    /// `pivot_row[c]` is the row whose pivot is column `c`.
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    fn new(field: Field, ambient: usize) -> Echelon {
        Echelon { field, ambient, rows: Vec::new(), pivot_row: vec![None; ambient] }
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for c in 0..self.ambient {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let coef = v[c].clone();
                let row = &self.rows[r];
                for (k, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        let p = &coef * x;
                        v[k] -= &p;
                    }
                }
            }
        }
    }

    /// Inserts `v`; returns whether the rank grew.
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        let Some(p) = vector::leading(&v) else { return false };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let coef = row[p].clone();
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let prod = &coef * x;
                    row[k] -= &prod;
                }
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    fn into_subspace(self) -> Subspace {
        let mut order: Vec<(usize, usize)> = self
            .pivot_row
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c, r)))
            .collect();
        order.sort();
        let mut rows = self.rows;
        let basis: Vec<Vec<Scalar>> = order.iter().map(|&(_, r)| std::mem::take(&mut rows[r])).collect();
        let pivots = order.iter().map(|&(c, _)| c).collect();
        Subspace { field: self.field, ambient: self.ambient, basis, pivots }
    }
}

/// A linear subspace of `field^ambient`, stored by its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Subspace {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
            if !vector::is_zero(&v) {
                ech.insert(v);
            }
        }
        ech.into_subspace()
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, std::iter::empty())
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, (0..ambient).map(|k| vector::unit(field, ambient, k)))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction by the basis; zero exactly when `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let coef = out[p].clone();
            for (k, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    let prod = &coef * x;
                    out[k] -= &prod;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given basis coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.ambient);
        for (c, row) in coords.iter().zip(&self.basis) {
            vector::axpy(&mut out, c, row);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.field, self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
        let mut cols: Vec<Vec<Scalar>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| vector::scale(&self.field.from_i64(-1), w)));
        if cols.is_empty() {
            return Subspace::zero(self.field, self.ambient);
        }
        let m = Matrix::from_columns(self.field, self.ambient, &cols);
        let ker = kernel(&m);
        let d = self.dim();
        Subspace::span(
            self.field,
            self.ambient,
            ker.basis().iter().map(|k| self.combine(&k[..d])),
        )
    }

    /// Image of the subspace under a linear map given as a matrix.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        Subspace::span(self.field, map.rows(), self.basis.iter().map(|v| map.mul_vec(v)))
    }
}

/// Solves `coeffs * x = rhs`, returning the solution with zero free variables, or `None`.
pub fn solve_linear(coeffs: &Matrix, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(coeffs.rows(), rhs.len(), "rhs length must equal row count");
    let rhs_m = Matrix::from_columns(coeffs.field(), rhs.len(), &[rhs.to_vec()]);
    solve_many(coeffs, &rhs_m).pop().expect("one column")
}

/// Solves `coeffs * x = rhs[:, j]` for every column `j` with one elimination.
pub fn solve_many(coeffs: &Matrix, rhs: &Matrix) -> Vec<Option<Vec<Scalar>>> {
    assert_eq!(coeffs.rows(), rhs.rows(), "rhs row count must equal coefficient row count");
    let n = coeffs.cols();
    let k = rhs.cols();
    let field = coeffs.field();
    let mut ech = Echelon::new(field, n + k);
    for r in 0..coeffs.rows() {
        let mut row = coeffs.row(r).to_vec();
        row.extend_from_slice(rhs.row(r));
        if !vector::is_zero(&row) {
            ech.insert(row);
        }
    }
    let space = ech.into_subspace();
    (0..k)
        .map(|j| {
            // Inconsistent iff some basis row has its pivot in this rhs column with zero
            // coefficient part. Pivots in other rhs columns mean the row constrains only rhs
            // entries; such rows must vanish in column j.
            let mut x = vector::zeros(field, n);
            for (row, &p) in space.basis().iter().zip(space.pivots()) {
                if p < n {
                    x[p] = row[n + j].clone();
                } else if !row[n + j].is_zero() {
                    return None;
                }
            }
            Some(x)
        })
        .collect()
}

/// Null space of `coeffs`, as a canonical subspace.
pub fn kernel(coeffs: &Matrix) -> Subspace {
    let n = coeffs.cols();
    let field = coeffs.field();
    let rowspace = Subspace::span(field, n, coeffs.row_vectors());
    let mut is_pivot = vec![false; n];
    for &p in rowspace.pivots() {
        is_pivot[p] = true;
    }
    let minus_one = field.from_i64(-1);
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = vector::unit(field, n, f);
        for (row, &p) in rowspace.basis().iter().zip(rowspace.pivots()) {
            if !row[f].is_zero() {
                v[p] = &minus_one * &row[f];
            }
        }
        v
    });
    Subspace::span(field, n, vectors)
}

/// The quotient `field^ambient / relations`, with the non-pivot coordinates of the relation
/// RREF serving as quotient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    /// Ambient indices of the quotient coordinates, increasing.
    free: Vec<usize>,
    /// For each ambient index, its image as sparse quotient coordinates.
    images: Vec<Vec<(usize, Scalar)>>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> QuotientSpace {
        let ambient = relations.ambient();
        let field = relations.field();
        let mut slot = vec![None; ambient];
        let mut pivot_row = vec![None; ambient];
        for (r, &p) in relations.pivots().iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        let free: Vec<usize> = (0..ambient).filter(|&c| pivot_row[c].is_none()).collect();
        for (q, &c) in free.iter().enumerate() {
            slot[c] = Some(q);
        }
        let minus_one = field.from_i64(-1);
        let images = (0..ambient)
            .map(|c| match pivot_row[c] {
                None => vec![(slot[c].expect("free column"), field.one())],
                Some(r) => relations.basis()[r]
                    .iter()
                    .enumerate()
                    .filter(|(k, x)| !x.is_zero() && *k != c)
                    .map(|(k, x)| (slot[k].expect("RREF rows vanish on other pivots"), &minus_one * x))
                    .collect(),
            })
            .collect();
        QuotientSpace { relations, free, images }
    }

    pub fn ambient(&self) -> usize {
        self.relations.ambient()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.relations.field()
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field(), self.dim());
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in &self.images[c] {
                out[*q].add_product(x, y);
            }
        }
        out
    }

    /// Adds `coef` times the image of ambient basis vector `c` into `acc`.
    pub fn project_basis_into(&self, acc: &mut [Scalar], c: usize, coef: &Scalar) {
        for (q, y) in &self.images[c] {
            acc[*q].add_product(coef, y);
        }
    }

    pub fn lift(&self, w: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field(), self.ambient());
        for (x, &c) in w.iter().zip(&self.free) {
            out[c] = x.clone();
        }
        out
    }

    pub fn projection_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.ambient()).map(|c| self.project(&vector::unit(self.field(), self.ambient(), c))).collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    pub fn section_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|q| self.lift(&vector::unit(self.field(), self.dim(), q))).collect();
        Matrix::from_columns(self.field(), self.ambient(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rational.from_i64(v)
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(Field::Rational, cols, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn solve_trivial_systems() {
        assert_eq!(solve_linear(&m(&[&[2]]), &[q(4)]), Some(vec![q(2)]));
        assert_eq!(solve_linear(&m(&[&[1, 1], &[0, 0]]), &[q(3), q(1)]), None);
        // Free variables are zero in the returned solution.
        assert_eq!(solve_linear(&m(&[&[1, 1]]), &[q(3)]), Some(vec![q(3), q(0)]));
    }

    #[test]
    fn kernel_extremes() {
        assert_eq!(kernel(&Matrix::identity(Field::Rational, 3)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(Field::Rational, 2, 3)).dim(), 3);
        let k = kernel(&m(&[&[1, 2, 3]]));
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(m(&[&[1, 2, 3]]).mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn quotient_of_plane_by_antidiagonal() {
        let rel = Subspace::span(Field::Rational, 2, vec![vec![q(1), q(-1)]]);
        let quo = QuotientSpace::new(rel);
        assert_eq!(quo.dim(), 1);
        assert_eq!(quo.project(&[q(2), q(5)]), vec![q(7)]);
        assert_eq!(quo.project(&quo.lift(&[q(3)])), vec![q(3)]);
        let ident = QuotientSpace::new(Subspace::zero(Field::Rational, 3));
        assert!(ident.projection_matrix().is_identity());
    }

    #[test]
    fn intersections_and_inverse() {
        let f = Field::Rational;
        let a = Subspace::span(f, 3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let b = Subspace::span(f, 3, vec![vec![q(1), q(1), q(1)], vec![q(0), q(1), q(0)]]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[q(0), q(1), q(0)]));
        let mat = m(&[&[2, 1], &[1, 1]]);
        assert!(mat.mul(&mat.inverse().unwrap()).is_identity());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
