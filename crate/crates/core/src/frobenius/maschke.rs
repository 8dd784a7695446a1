use serde::Serialize;

use crate::double::{Corner, DoubleAlgebra, Symmetry};
use crate::linalg::{kernel, solve_linear, Matrix, Subspace};
use crate::report::Report;
use crate::scalar::{vector, Scalar};

use super::tensor_square;

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

/// Solutions (or their absence) for the Maschke-type conditions on the vertical unit `i`.
///
/// Every field holds an explicit witness when the condition holds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaschkeConditions {
    /// `w ∈ B` with `i∘w = i`: the inclusion of `B` splits.
    pub bottom_split_mono: Option<String>,
    /// `w` with `w∘i = i` and `k∘w = 0` whenever `k∘i = 0`: `Φ_B` splits.
    pub bottom_split_epi: Option<String>,
    /// Separating idempotent of `L ⊂ V`, in quotient coordinates of `A ⊗_L A`.
    pub left_separable: Option<Vec<String>>,
    /// `j` with `i∘j∘i = i`.
    pub regular: Option<String>,
    pub right_separable: Option<Vec<String>>,
    pub top_split_epi: Option<String>,
    pub top_split_mono: Option<String>,
    /// `Φ_LΦ_B(i∘j)`, which equals `e` whenever `j` exists.
    pub normalized_integral: Option<String>,
    pub normalized_integral_is_unit: bool,
    /// Whether some `r ∈ Cnt_V(L)` satisfies `r⋆e = e`.
    pub split: bool,
}

impl MaschkeConditions {
    /// The seven decided conditions, in order.
    pub fn decided(&self) -> [(&'static str, bool); 7] {
        [
            ("B ⊂ A split mono", self.bottom_split_mono.is_some()),
            ("Φ_B split epi", self.bottom_split_epi.is_some()),
            ("L ⊂ V separable", self.left_separable.is_some()),
            ("i regular", self.regular.is_some()),
            ("R ⊂ V separable", self.right_separable.is_some()),
            ("Φ_T split epi", self.top_split_epi.is_some()),
            ("T ⊂ A split mono", self.top_split_mono.is_some()),
        ]
    }

    pub fn all_agree(&self) -> bool {
        let flags = self.decided();
        flags.iter().all(|(_, b)| *b == flags[0].1)
    }
}

/// Maschke diagnostics for `i` in `V` and, via the dual algebra, for `e` in `H`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaschkeReport {
    pub vertical: MaschkeConditions,
    pub horizontal: MaschkeConditions,
}

impl MaschkeReport {
    pub fn new(d: &DoubleAlgebra) -> MaschkeReport {
        MaschkeReport { vertical: conditions(d), horizontal: conditions(&d.symmetry(Symmetry::Dual)) }
    }

    pub fn report(&self) -> Report {
        let mut rep = Report::new("maschke");
        for (side, unit, c) in [("V", "i", &self.vertical), ("H", "e", &self.horizontal)] {
            for (name, value) in c.decided() {
                rep.fact(format!("{side}: {name}"), value.to_string());
            }
            if let Some(j) = &c.regular {
                rep.fact(format!("{side}: regularity witness j"), j.clone());
                rep.check(format!("{side}: normalized integral Φ_LΦ_B({unit}·j) is the unit"), c.normalized_integral_is_unit);
            }
            rep.fact(format!("{side}: split"), c.split.to_string());
            rep.check_with(
                format!("{side}: all Maschke conditions agree"),
                c.all_agree(),
                c.decided().iter().map(|(n, b)| format!("{n}={b}")).collect::<Vec<_>>().join(", "),
            );
        }
        rep
    }
}

/// Solves `Σ c_k f(b_k) = target` over a basis `b_k` and returns `Σ c_k b_k`.
fn solve_in_span(
    d: &DoubleAlgebra,
    basis: &[Vec<Scalar>],
    rows: usize,
    f: impl Fn(&[Scalar]) -> Vec<Scalar>,
    target: &[Scalar],
) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return vector::is_zero(target).then(|| d.zero());
    }
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| f(b)).collect();
    let coeffs = solve_linear(&Matrix::from_columns(d.field(), rows, &cols), target)?;
    Some(basis.iter().zip(&coeffs).fold(d.zero(), |acc, (b, c)| vector::add(&acc, &vector::scale(c, b))))
}

fn full_basis(d: &DoubleAlgebra) -> Vec<Vec<Scalar>> {
    (0..d.dim()).map(|k| d.basis_vector(k)).collect()
}

/// `j` with `i∘j∘i = i`, searched first among multiples of `e`, then in `L ∩ R`, then in `L`,
/// then in all of `A`.
pub fn regularity_witness(d: &DoubleAlgebra) -> Option<Vec<Scalar>> {
    let i = d.i();
    let sandwich = |j: &[Scalar]| d.vmul(&d.vmul(i, j), i);
    let spaces = [
        Subspace::span(d.field(), d.dim(), [d.e().to_vec()]),
        d.base_ideal(L).intersect(d.base_ideal(R)),
        d.base_ideal(L).clone(),
        Subspace::full(d.field(), d.dim()),
    ];
    spaces.iter().find_map(|s| solve_in_span(d, s.basis(), d.dim(), sandwich, i))
}

/// The split-epi condition: `w` with `w·i = i` (or `i·w = i`) annihilated by the matching annihilator of `i`.
fn split_epi(d: &DoubleAlgebra, left: bool) -> Option<Vec<Scalar>> {
    let n = d.dim();
    let i = d.i();
    let v = d.vertical();
    // ann_l(i) = {k : k∘i = 0}, ann_r(i) = {k : i∘k = 0}
    let ann = if left { kernel(&v.right_mul_matrix(i)) } else { kernel(&v.left_mul_matrix(i)) };
    let rows = n * (1 + ann.dim());
    let f = |w: &[Scalar]| {
        let mut out = if left { d.vmul(w, i) } else { d.vmul(i, w) };
        for k in ann.basis() {
            out.extend(if left { d.vmul(k, w) } else { d.vmul(w, k) });
        }
        out
    };
    let mut target = i.to_vec();
    target.extend(vector::zeros(d.field(), n * ann.dim()));
    solve_in_span(d, &full_basis(d), rows, f, &target)
}

/// A separating idempotent `w ∈ A ⊗_X A` (balanced through `∘`): `μ(w) = e` and `a∘w = w∘a`.
pub fn separating_idempotent(d: &DoubleAlgebra, c: Corner) -> Option<Vec<Scalar>> {
    assert!(matches!(c, L | R), "separability is decided for L and R");
    let n = d.dim();
    let f = d.field();
    let tensor = tensor_square(d, c);
    let m = tensor.dim();
    let section = tensor.quotient().section_matrix();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|k| d.basis_vector(k)).collect();
    // Rows: μ (n of them), then the commutator with each basis element (m each).
    let mut columns = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let mut col = d.vmul(&basis[p], &basis[q]);
            for a in &basis {
                let mut comm = tensor.class_of(&d.vmul(a, &basis[p]), &basis[q]);
                let right = tensor.class_of(&basis[p], &d.vmul(&basis[q], a));
                vector::axpy(&mut comm, &f.from_i64(-1), &right);
                col.extend(comm);
            }
            columns.push(col);
        }
    }
    let system = Matrix::from_columns(f, n + n * m, &columns).mul(&section);
    let mut target = d.e().to_vec();
    target.extend(vector::zeros(f, n * m));
    solve_linear(&system, &target)
}

/// Whether some `r` in the centralizer of `L` in `V` satisfies `r⋆e = e`.
fn split_extension(d: &DoubleAlgebra) -> bool {
    let cnt = d.vertical().centralizer(d.base_ideal(L));
    let e = d.e();
    solve_in_span(d, cnt.basis(), d.dim(), |r| d.hmul(r, e), e).is_some()
}

fn conditions(d: &DoubleAlgebra) -> MaschkeConditions {
    let i = d.i();
    let render = |v: Vec<Scalar>| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let labelled = |v: Vec<Scalar>| d.render(&v);
    let bottom_split_mono = solve_in_span(d, d.base_ideal(B).basis(), d.dim(), |w| d.vmul(i, w), i);
    let top_split_mono = solve_in_span(d, d.base_ideal(T).basis(), d.dim(), |w| d.vmul(w, i), i);
    let regular = regularity_witness(d);
    let normalized = regular.as_ref().map(|j| d.phis(&[L, B], &d.vmul(i, j)));
    MaschkeConditions {
        bottom_split_mono: bottom_split_mono.map(labelled),
        bottom_split_epi: split_epi(d, true).map(labelled),
        left_separable: separating_idempotent(d, L).map(render),
        regular: regular.map(labelled),
        right_separable: separating_idempotent(d, R).map(render),
        top_split_epi: split_epi(d, false).map(labelled),
        top_split_mono: top_split_mono.map(labelled),
        normalized_integral_is_unit: normalized.as_deref() == Some(d.e()),
        normalized_integral: normalized.map(labelled),
        split: split_extension(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hopf_group_double, matrix_double, Group};
    use crate::scalar::Field;

    #[test]
    fn matrix_unit_is_regular_with_scaled_identity() {
        for n in 2..=3 {
            let d = matrix_double(n).unwrap();
            let j = regularity_witness(&d).unwrap();
            assert_eq!(j, vector::scale(&d.field().fraction(1, n as i64), d.e()));
            let rep = MaschkeReport::new(&d);
            assert!(rep.vertical.all_agree() && rep.vertical.regular.is_some());
            assert!(rep.report().passed(), "{}", rep.report());
        }
    }

    #[test]
    fn group_regularity_depends_on_characteristic() {
        let q = hopf_group_double(&Group::cyclic(2), Field::Rational).unwrap();
        let j = regularity_witness(&q).unwrap();
        assert_eq!(j, vector::scale(&q.field().fraction(1, 2), q.e()));
        assert!(MaschkeReport::new(&q).report().passed());

        let f2 = hopf_group_double(&Group::cyclic(2), Field::prime(2).unwrap()).unwrap();
        let rep = MaschkeReport::new(&f2);
        assert!(rep.vertical.decided().iter().all(|(_, b)| !b), "{:?}", rep.vertical);
        assert!(rep.report().passed());
    }

    #[test]
    fn symmetric_group_regular_over_rationals() {
        let d = hopf_group_double(&Group::symmetric3(), Field::Rational).unwrap();
        let j = regularity_witness(&d).unwrap();
        assert_eq!(j, vector::scale(&d.field().fraction(1, 6), d.e()));
        let rep = MaschkeReport::new(&d);
        assert!(rep.report().passed(), "{}", rep.report());
    }
}
