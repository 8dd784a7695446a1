use crate::algebra::ProductTable;
use crate::antipode::solve_antipode;
use crate::double::{Corner, DoubleAlgebra};
use crate::frobenius::{pairs_of, Frobenius, Pairs};
use crate::linalg::Subspace;
use crate::report::Report;
use crate::scalar::Scalar;

use super::{factorwise_product, takeuchi_subspace, StructureError};

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

/// The Takeuchi product `A ×_B A` as a double algebra, with the subspace it lives on.
#[derive(Clone, Debug)]
pub struct TakeuchiDouble {
    pub algebra: DoubleAlgebra,
    /// Basis of `A ×_B A` in quotient coordinates of `A ⊗_B A`.
    pub subspace: Subspace,
    /// Comparison of the explicit base-map formulas with the generic ones.
    pub report: Report,
}

struct Carrier<'a> {
    fr: &'a Frobenius,
    subspace: Subspace,
    reps: Vec<Pairs>,
}

impl Carrier<'_> {
    fn coordinates(&self, class: &[Scalar], what: &'static str) -> Result<Vec<Scalar>, StructureError> {
        self.subspace.coordinates(class).ok_or(StructureError::NotClosed(what))
    }

    fn class(&self, pairs: &[(Vec<Scalar>, Vec<Scalar>)]) -> Vec<Scalar> {
        self.fr.class_of_pairs(B, pairs)
    }

    /// `(a₁ ⊗ a₂) ⋆ (a₁' ⊗ a₂') = a₁ ⋆ Φ_B(a₂ ⋆ a₁') ⊗ a₂'`
    fn horizontal(&self, x: &Pairs, y: &Pairs) -> Vec<Scalar> {
        let d = self.fr.algebra();
        let mut out = Vec::with_capacity(x.len() * y.len());
        for (a1, a2) in x {
            for (b1, b2) in y {
                out.push((d.hmul(a1, &d.phi(B, &d.hmul(a2, b1))), b2.clone()));
            }
        }
        self.class(&out)
    }
}

pub fn takeuchi_double(fr: &Frobenius) -> Result<TakeuchiDouble, StructureError> {
    let d = fr.algebra();
    if solve_antipode(d)?.is_none() {
        return Err(StructureError::NoAntipode);
    }
    let n = d.dim();
    let field = d.field();
    let t = fr.tensor(B);
    let subspace = takeuchi_subspace(fr, B);
    let m = subspace.dim();
    let reps: Vec<Pairs> = subspace.basis().iter().map(|w| pairs_of(&t.lift(w), n)).collect();
    let carrier = Carrier { fr, subspace, reps };

    let mut vconst = Vec::with_capacity(m * m * m);
    let mut hconst = Vec::with_capacity(m * m * m);
    for x in &carrier.reps {
        for y in &carrier.reps {
            vconst.extend(carrier.coordinates(&factorwise_product(fr, B, x, y), "∘")?);
            hconst.extend(carrier.coordinates(&carrier.horizontal(x, y), "⋆")?);
        }
    }
    let vunit = carrier.coordinates(&t.class_of(d.e(), d.e()), "e ⊗ e")?;
    let hunit = carrier.coordinates(&fr.dual_basis(B).class, "u_k ⊗ v_k")?;
    let vertical = ProductTable::new(field, m, vconst, vunit)?;
    let horizontal = ProductTable::new(field, m, hconst, hunit)?;
    let algebra = DoubleAlgebra::new(vertical, horizontal)
        .map_err(|e| StructureError::Takeuchi(Box::new(e)))?
        .with_labels((1..=m).map(|k| format!("w{k}")).collect());

    let mut report = Report::new("takeuchi");
    report.fact("dim A×_B A", m.to_string());
    let ub = &fr.dual_basis(B).pairs;
    let e = d.e().to_vec();
    for c in Corner::ALL {
        let mut ok = true;
        for (j, x) in carrier.reps.iter().enumerate() {
            let image: Pairs = match c {
                L => x.iter().map(|(a1, a2)| (d.hmul(a1, &d.phis(&[B, L], a2)), e.clone())).collect(),
                R => x.iter().map(|(a1, a2)| (e.clone(), d.hmul(&d.phis(&[B, R], a1), a2))).collect(),
                B => x.iter().flat_map(|(a1, a2)| ub.iter().map(move |(u, v)| (d.vmul(a1, u), d.vmul(a2, v)))).collect(),
                T => x.iter().flat_map(|(a1, a2)| ub.iter().map(move |(u, v)| (d.vmul(u, a1), d.vmul(v, a2)))).collect(),
            };
            let coords = carrier.coordinates(&carrier.class(&image), "β")?;
            ok &= coords == algebra.phi_matrix(c).column(j);
        }
        report.check(format!("β_{c} matches the generic Φ_{c}"), ok);
    }
    // β_L(A ×_B A) = Cnt_V(R) × e and β_R(A ×_B A) = e × Cnt_V(L).
    for (c, cnt_of, left) in [(L, R, true), (R, L, false)] {
        let cnt = d.vertical().centralizer(d.base_ideal(cnt_of));
        let mut span = Vec::new();
        for x in cnt.basis() {
            let class = if left { t.class_of(x, &e) } else { t.class_of(&e, x) };
            span.push(carrier.coordinates(&class, "Cnt")?);
        }
        let expected = Subspace::span(field, m, span);
        report.check(format!("β_{c}(A×_B A) is the image of Cnt_V({cnt_of})"), &expected == algebra.base_ideal(c));
    }
    Ok(TakeuchiDouble { algebra, subspace: carrier.subspace, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{commutative_double, groupoid_double, hopf_group_double, matrix_double, split_algebra, Group, Groupoid};
    use crate::scalar::Field;

    #[test]
    fn trivial_takeuchi_is_trivial() {
        let d = commutative_double(split_algebra(Field::Rational, 1).unwrap()).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        let td = takeuchi_double(&fr).unwrap();
        assert_eq!(td.algebra.dim(), 1);
    }

    /// `A ×_B A` of a groupoid double is spanned by pairs of arrows with equal source and target.
    fn parallel_pairs(g: &Groupoid) -> usize {
        (0..g.arrows())
            .flat_map(|a| (0..g.arrows()).map(move |b| (a, b)))
            .filter(|&(a, b)| g.source(a) == g.source(b) && g.target(a) == g.target(b))
            .count()
    }

    #[test]
    fn takeuchi_of_groups_and_matrices_validate() {
        let z2 = hopf_group_double(&Group::cyclic(2), Field::Rational).unwrap();
        let td = takeuchi_double(&Frobenius::new(&z2).unwrap()).unwrap();
        assert!(td.algebra.check_axioms().passed());
        assert!(td.report.passed(), "{}", td.report);
        assert_eq!(td.algebra.dim(), 4);

        let m2 = matrix_double(2).unwrap();
        let td = takeuchi_double(&Frobenius::new(&m2).unwrap()).unwrap();
        assert!(td.algebra.check_axioms().passed());
        assert!(td.report.passed(), "{}", td.report);
        assert_eq!(td.algebra.dim(), parallel_pairs(&Groupoid::pair(2)));
    }

    #[test]
    fn takeuchi_dimension_of_groupoids() {
        let g = Groupoid::pair(2).disjoint_union(&Groupoid::from_group(&Group::cyclic(3)));
        let d = groupoid_double(&g, Field::Rational).unwrap();
        let td = takeuchi_double(&Frobenius::new(&d).unwrap()).unwrap();
        assert_eq!(td.algebra.dim(), parallel_pairs(&g));
        assert!(td.algebra.check_axioms().passed());
        assert!(td.report.passed(), "{}", td.report);
    }
}
