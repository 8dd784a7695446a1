//! Double algebras: one space carrying a vertical product `∘` (unit `e`) and a horizontal
//! product `⋆` (unit `i`) tied together by the eight compatibility axioms A1–A8.

mod lemmas;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, ProductTable};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{vector, Field, Scalar};

pub use lemmas::{BaseRestriction, IntegralSpace};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DoubleError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("vertical and horizontal products have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("vertical and horizontal products live over different fields")]
    FieldMismatch,
    #[error("not a double algebra: {0}")]
    Axioms(AxiomReport),
    #[error("{0} is not in the base ideal {1}")]
    NotInBase(String, Corner),
}

/// Which of the two products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Product {
    Vertical,
    Horizontal,
}

impl Product {
    pub fn other(self) -> Product {
        match self {
            Product::Vertical => Product::Horizontal,
            Product::Horizontal => Product::Vertical,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Product::Vertical => "∘",
            Product::Horizontal => "⋆",
        }
    }
}

/// The four corners of the square picture; each names a base map and its image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Corner {
    Left,
    Right,
    Bottom,
    Top,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::Left, Corner::Right, Corner::Bottom, Corner::Top];

    pub fn symbol(self) -> &'static str {
        match self {
            Corner::Left => "L",
            Corner::Right => "R",
            Corner::Bottom => "B",
            Corner::Top => "T",
        }
    }

    /// The product in which the base ideal is a unital subalgebra and the base map a bimodule map.
    pub fn product(self) -> Product {
        match self {
            Corner::Left | Corner::Right => Product::Vertical,
            Corner::Bottom | Corner::Top => Product::Horizontal,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5, Axiom::A6, Axiom::A7, Axiom::A8];

    /// The axiom this one becomes after applying a symmetry to the double algebra.
    pub fn under(self, s: Symmetry) -> Axiom {
        use Axiom::*;
        let perm = match s {
            Symmetry::Dual => [A3, A4, A1, A2, A7, A8, A5, A6],
            Symmetry::Op => [A2, A1, A8, A7, A6, A5, A4, A3],
            Symmetry::Coop => [A6, A5, A4, A3, A2, A1, A8, A7],
        };
        perm[self as usize]
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", *self as usize + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomWitness {
    pub a: usize,
    pub b: usize,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    /// First failing basis pair in lexicographic order, if any.
    pub witness: Option<AxiomWitness>,
    /// Whether the unit form and the base-map form of the axiom gave identical values.
    pub forms_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.witness.is_none())
    }

    pub fn failing(&self) -> Vec<Axiom> {
        self.outcomes.iter().filter(|o| o.witness.is_some()).map(|o| o.axiom).collect()
    }

    pub fn first_failure(&self) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.witness.is_some())
    }

    pub fn forms_agree(&self) -> bool {
        self.outcomes.iter().all(|o| o.forms_agree)
    }

    pub fn outcome(&self, axiom: Axiom) -> &AxiomOutcome {
        &self.outcomes[axiom as usize]
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure() {
            None => write!(f, "all axioms hold"),
            Some(o) => {
                let w = o.witness.as_ref().expect("failure has witness");
                write!(f, "{} fails at basis pair ({}, {})", o.axiom, w.a, w.b)
            }
        }
    }
}

/// The three generating symmetries of the square picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Symmetry {
    /// Exchange the two products together with their units.
    Dual,
    /// Replace the vertical product by its opposite.
    Op,
    /// Replace the horizontal product by its opposite.
    Coop,
}

/// A base homomorphism together with its image.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseMap {
    pub corner: Corner,
    /// Column `j` holds the coordinates of the image of basis element `j`.
    pub matrix: Matrix,
    pub image: Subspace,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DoubleAlgebra {
    field: Field,
    n: usize,
    vertical: ProductTable,
    horizontal: ProductTable,
    labels: Vec<String>,
    base: Vec<BaseMap>,
}

fn base_matrices(vertical: &ProductTable, horizontal: &ProductTable) -> [Matrix; 4] {
    [
        horizontal.right_mul_matrix(vertical.unit()),
        horizontal.left_mul_matrix(vertical.unit()),
        vertical.right_mul_matrix(horizontal.unit()),
        vertical.left_mul_matrix(horizontal.unit()),
    ]
}

/// Evaluates A1–A8 on all basis pairs, in both the unit form and the base-map form.
pub fn check_axioms(vertical: &ProductTable, horizontal: &ProductTable) -> Result<AxiomReport, DoubleError> {
    if vertical.dim() != horizontal.dim() {
        return Err(DoubleError::DimensionMismatch(vertical.dim(), horizontal.dim()));
    }
    if vertical.field() != horizontal.field() {
        return Err(DoubleError::FieldMismatch);
    }
    let field = vertical.field();
    let n = vertical.dim();
    let e = vertical.unit();
    let i = horizontal.unit();
    let v = |x: &[Scalar], y: &[Scalar]| vertical.multiply(x, y);
    let h = |x: &[Scalar], y: &[Scalar]| horizontal.multiply(x, y);
    let [pl, pr, pb, pt] = base_matrices(vertical, horizontal);
    let phi = |m: &Matrix, x: &[Scalar]| m.mul_vec(x);

    let mut witnesses: Vec<Option<AxiomWitness>> = vec![None; 8];
    let mut agree = [true; 8];
    for ai in 0..n {
        let a = vector::unit(field, n, ai);
        for bi in 0..n {
            let b = vector::unit(field, n, bi);
            // Unit form, exactly as the axioms are usually written.
            let unit_form: [(Vec<Scalar>, Vec<Scalar>); 8] = [
                (v(&h(&a, e), &b), h(&v(&h(&a, e), i), &b)),
                (v(&a, &h(&b, e)), h(&v(i, &h(&b, e)), &a)),
                (h(&v(&a, i), &b), v(&h(&v(&a, i), e), &b)),
                (h(&a, &v(&b, i)), v(&h(e, &v(&b, i)), &a)),
                (v(&a, &h(e, &b)), h(&a, &v(i, &h(e, &b)))),
                (v(&h(e, &a), &b), h(&b, &v(&h(e, &a), i))),
                (h(&a, &v(i, &b)), v(&a, &h(e, &v(i, &b)))),
                (h(&v(i, &a), &b), v(&b, &h(&v(i, &a), e))),
            ];
            // Base-map form.
            let phi_form: [(Vec<Scalar>, Vec<Scalar>); 8] = [
                (v(&phi(&pl, &a), &b), h(&phi(&pb, &phi(&pl, &a)), &b)),
                (v(&a, &phi(&pl, &b)), h(&phi(&pt, &phi(&pl, &b)), &a)),
                (h(&phi(&pb, &a), &b), v(&phi(&pl, &phi(&pb, &a)), &b)),
                (h(&a, &phi(&pb, &b)), v(&phi(&pr, &phi(&pb, &b)), &a)),
                (v(&a, &phi(&pr, &b)), h(&a, &phi(&pt, &phi(&pr, &b)))),
                (v(&phi(&pr, &a), &b), h(&b, &phi(&pb, &phi(&pr, &a)))),
                (h(&a, &phi(&pt, &b)), v(&a, &phi(&pr, &phi(&pt, &b)))),
                (h(&phi(&pt, &a), &b), v(&b, &phi(&pl, &phi(&pt, &a)))),
            ];
            for k in 0..8 {
                let (l1, r1) = &unit_form[k];
                let (l2, r2) = &phi_form[k];
                if l1 != l2 || r1 != r2 {
                    agree[k] = false;
                }
                if l1 != r1 && witnesses[k].is_none() {
                    witnesses[k] = Some(AxiomWitness {
                        a: ai,
                        b: bi,
                        lhs: l1.iter().map(|x| x.to_string()).collect(),
                        rhs: r1.iter().map(|x| x.to_string()).collect(),
                    });
                }
            }
        }
    }
    let outcomes = Axiom::ALL
        .iter()
        .zip(witnesses)
        .zip(agree)
        .map(|((&axiom, witness), forms_agree)| AxiomOutcome { axiom, witness, forms_agree })
        .collect();
    Ok(AxiomReport { outcomes })
}

impl DoubleAlgebra {
    /// Validates the axioms; fails with the full report otherwise.
    pub fn new(vertical: ProductTable, horizontal: ProductTable) -> Result<DoubleAlgebra, DoubleError> {
        let report = check_axioms(&vertical, &horizontal)?;
        if !report.passed() {
            return Err(DoubleError::Axioms(report));
        }
        DoubleAlgebra::new_unchecked(vertical, horizontal)
    }

    /// Diagnostic constructor: checks shapes only, so failing axioms can be inspected.
    pub fn new_unchecked(vertical: ProductTable, horizontal: ProductTable) -> Result<DoubleAlgebra, DoubleError> {
        if vertical.dim() != horizontal.dim() {
            return Err(DoubleError::DimensionMismatch(vertical.dim(), horizontal.dim()));
        }
        if vertical.field() != horizontal.field() {
            return Err(DoubleError::FieldMismatch);
        }
        let n = vertical.dim();
        let field = vertical.field();
        let base = Corner::ALL
            .iter()
            .zip(base_matrices(&vertical, &horizontal))
            .map(|(&corner, matrix)| {
                let image = Subspace::span(field, n, matrix.columns());
                BaseMap { corner, matrix, image }
            })
            .collect();
        let labels = (0..n).map(|k| format!("x{k}")).collect();
        Ok(DoubleAlgebra { field, n, vertical, horizontal, labels, base })
    }

    /// Attaches human-readable names for the basis elements.
    pub fn with_labels(mut self, labels: Vec<String>) -> DoubleAlgebra {
        assert_eq!(labels.len(), self.n, "one label per basis element");
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vertical(&self) -> &ProductTable {
        &self.vertical
    }

    pub fn horizontal(&self) -> &ProductTable {
        &self.horizontal
    }

    pub fn table(&self, p: Product) -> &ProductTable {
        match p {
            Product::Vertical => &self.vertical,
            Product::Horizontal => &self.horizontal,
        }
    }

    pub fn mul(&self, p: Product, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.table(p).multiply(x, y)
    }

    /// `x ∘ y`.
    pub fn vmul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.vertical.multiply(x, y)
    }

    /// `x ⋆ y`.
    pub fn hmul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.horizontal.multiply(x, y)
    }

    /// The vertical unit.
    pub fn e(&self) -> &[Scalar] {
        self.vertical.unit()
    }

    /// The horizontal unit.
    pub fn i(&self) -> &[Scalar] {
        self.horizontal.unit()
    }

    pub fn unit(&self, p: Product) -> &[Scalar] {
        self.table(p).unit()
    }

    pub fn basis_vector(&self, k: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.n, k)
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vector::zeros(self.field, self.n)
    }

    pub fn base_map(&self, c: Corner) -> &BaseMap {
        &self.base[c.index()]
    }

    pub fn phi_matrix(&self, c: Corner) -> &Matrix {
        &self.base[c.index()].matrix
    }

    pub fn base_ideal(&self, c: Corner) -> &Subspace {
        &self.base[c.index()].image
    }

    /// Applies the base map of a corner.
    pub fn phi(&self, c: Corner, x: &[Scalar]) -> Vec<Scalar> {
        self.phi_matrix(c).mul_vec(x)
    }

    /// Applies a chain of base maps, rightmost first: `phis(&[X, Y], a) = Φ_X(Φ_Y(a))`.
    pub fn phis(&self, chain: &[Corner], x: &[Scalar]) -> Vec<Scalar> {
        chain.iter().rev().fold(x.to_vec(), |acc, &c| self.phi(c, &acc))
    }

    /// Matrix of a chain of base maps, rightmost applied first.
    pub fn phis_matrix(&self, chain: &[Corner]) -> Matrix {
        chain.iter().fold(Matrix::identity(self.field, self.n), |acc, &c| acc.mul(self.phi_matrix(c)))
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(&self.vertical, &self.horizontal).expect("shapes validated at construction")
    }

    pub fn symmetry(&self, s: Symmetry) -> DoubleAlgebra {
        let (v, h) = match s {
            Symmetry::Dual => (self.horizontal.clone(), self.vertical.clone()),
            Symmetry::Op => (self.vertical.opposite(), self.horizontal.clone()),
            Symmetry::Coop => (self.vertical.clone(), self.horizontal.opposite()),
        };
        DoubleAlgebra::new_unchecked(v, h).expect("same shapes").with_labels(self.labels.clone())
    }

    /// Stacked matrix of `x ↦ (Φ_c(x · b))_b` (left) or `y ↦ (Φ_c(a · y))_a` (right), where `·`
    /// is the corner's product. Full column rank means the form is nondegenerate on that side.
    pub fn form_matrix(&self, c: Corner, left: bool) -> Matrix {
        let table = self.table(c.product());
        let n = self.n;
        let mut rows = Vec::with_capacity(n * n);
        for other in 0..n {
            let cols: Vec<Vec<Scalar>> = (0..n)
                .map(|k| {
                    let prod = if left { table.basis_product(k, other) } else { table.basis_product(other, k) };
                    self.phi(c, &prod)
                })
                .collect();
            rows.extend(Matrix::from_columns(self.field, n, &cols).row_vectors());
        }
        Matrix::from_rows(self.field, n, rows)
    }

    /// Whether the base-ideal-valued form `Φ_c(_ · _)` is nondegenerate on both sides.
    pub fn form_nondegenerate(&self, c: Corner) -> bool {
        self.form_matrix(c, true).rank() == self.n && self.form_matrix(c, false).rank() == self.n
    }

    pub fn render(&self, v: &[Scalar]) -> String {
        vector::render_named(v, &self.labels)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::families::{commutative_double, matrix_double};

    #[test]
    fn matrix_double_passes_and_has_expected_base_maps() {
        let d = matrix_double(2).unwrap();
        assert!(d.check_axioms().passed());
        // Φ_B(e11) = e11 + e12 and Φ_L(i) = e.
        let f = d.field();
        let e11 = d.basis_vector(0);
        assert_eq!(d.phi(Corner::Bottom, &e11), vec![f.one(), f.one(), f.zero(), f.zero()]);
        assert_eq!(d.phi(Corner::Left, d.i()), d.e().to_vec());
    }

    #[test]
    fn noncommutative_m2_is_rejected_with_a_witness() {
        let m2 = matrix_double(2).unwrap().vertical().clone();
        let report = check_axioms(&m2, &m2).unwrap();
        // With both products equal, A1 collapses to a∘b = a∘b; A2 becomes a∘b = b∘a.
        assert!(report.outcome(Axiom::A1).witness.is_none());
        let first = report.first_failure().unwrap();
        assert_eq!(first.axiom, Axiom::A2);
        let w = first.witness.as_ref().unwrap();
        assert_eq!((w.a, w.b), (0, 1));
        assert!(report.forms_agree());
        assert!(commutative_double(m2).is_err());
    }

    #[test]
    fn symmetries_are_involutive_and_preserve_axioms() {
        let d = matrix_double(2).unwrap();
        assert_eq!(d.symmetry(Symmetry::Dual).symmetry(Symmetry::Dual), d);
        for s in [Symmetry::Dual, Symmetry::Op, Symmetry::Coop] {
            assert!(d.symmetry(s).check_axioms().passed());
        }
        assert_eq!(d.symmetry(Symmetry::Dual).vertical(), d.horizontal());
    }

    #[test]
    fn axiom_permutations_are_involutions() {
        for s in [Symmetry::Dual, Symmetry::Op, Symmetry::Coop] {
            for a in Axiom::ALL {
                assert_eq!(a.under(s).under(s), a);
            }
        }
    }
}
