//! Randomised invariants over groupoid doubles, symmetries, linear algebra and instance files.

use double_algebra::algebra::ProductTable;
use double_algebra::antipode::solve_antipode;
use double_algebra::cli::InstanceFile;
use double_algebra::double::{Axiom, Corner, DoubleAlgebra, Symmetry};
use double_algebra::families::{groupoid_double, hopf_group_double, Group, Groupoid};
use double_algebra::frobenius::Frobenius;
use double_algebra::linalg::Matrix;
use double_algebra::scalar::{vector, Field, Scalar};
use double_algebra::structure::check_distributivity;
use proptest::prelude::*;

const SYMMETRIES: [Symmetry; 3] = [Symmetry::Dual, Symmetry::Op, Symmetry::Coop];

fn q() -> Field {
    Field::Rational
}

/// One connected component: a pair groupoid or a cyclic group.
fn component() -> impl Strategy<Value = Groupoid> {
    prop_oneof![
        (1usize..=2).prop_map(Groupoid::pair),
        (1usize..=3).prop_map(|n| Groupoid::from_group(&Group::cyclic(n))),
    ]
}

/// Disjoint unions of at most three small components.
fn groupoid() -> impl Strategy<Value = Groupoid> {
    prop::collection::vec(component(), 1..=3).prop_map(|parts| {
        parts.iter().skip(1).fold(parts[0].clone(), |acc, g| acc.disjoint_union(g))
    })
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(2).unwrap()), Just(Field::prime(3).unwrap()), Just(Field::prime(5).unwrap())]
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q().fraction(n, d))
}

fn element(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(small_rational(), n)
}

/// A groupoid double with one structure constant of `∘` shifted by `delta`.
fn perturbed(g: &Groupoid, slot: usize, delta: i64) -> DoubleAlgebra {
    let d = groupoid_double(g, q()).unwrap();
    let v = d.vertical();
    let mut constants = v.constants().to_vec();
    let k = slot % constants.len();
    constants[k] = constants[k].clone() + q().from_i64(delta);
    let vertical = ProductTable::new_unchecked(q(), d.dim(), constants, v.unit().to_vec()).unwrap();
    DoubleAlgebra::new_unchecked(vertical, d.horizontal().clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groupoid_doubles_satisfy_the_axioms(g in groupoid(), f in field()) {
        let d = groupoid_double(&g, f).unwrap();
        let rep = d.check_axioms();
        prop_assert!(rep.passed(), "{}", rep);
        prop_assert!(rep.forms_agree());
        prop_assert!(d.check_base_lemmas().passed());
    }

    #[test]
    fn groupoid_antipode_is_inversion(g in groupoid()) {
        let d = groupoid_double(&g, q()).unwrap();
        let s = solve_antipode(&d).unwrap().expect("groupoid doubles have an antipode");
        prop_assert_eq!(s.matrix, g.inversion_matrix(q()));
    }

    #[test]
    fn groupoid_doubles_are_distributive_frobenius(g in groupoid()) {
        let d = groupoid_double(&g, q()).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        prop_assert!(check_distributivity(&fr).distributive());
        for k in 1..=8 {
            prop_assert!(fr.galois_identity_holds(k), "G{} fails", k);
        }
    }

    #[test]
    fn base_ideals_are_corner_subalgebras(g in groupoid(), seed in element(16)) {
        let d = groupoid_double(&g, q()).unwrap();
        let x: Vec<Scalar> = seed.iter().cycle().take(d.dim()).cloned().collect();
        for c in Corner::ALL {
            let image = d.phi(c, &x);
            prop_assert!(d.base_ideal(c).contains(&image));
            prop_assert!(d.table(c.product()).check_subalgebra(d.base_ideal(c)).is_ok(), "base ideal {} is not closed", c);
        }
    }

    #[test]
    fn symmetries_permute_axiom_verdicts(g in groupoid(), slot in 0usize..4096, delta in 1i64..=2) {
        let d = perturbed(&g, slot, delta);
        let rep = d.check_axioms();
        for s in SYMMETRIES {
            let image = d.symmetry(s).check_axioms();
            for a in Axiom::ALL {
                prop_assert_eq!(
                    rep.outcome(a).witness.is_some(),
                    image.outcome(a.under(s)).witness.is_some(),
                    "{} under {:?}", a, s
                );
            }
        }
    }

    #[test]
    fn symmetries_are_involutions(g in groupoid()) {
        let d = groupoid_double(&g, q()).unwrap();
        for s in SYMMETRIES {
            let back = d.symmetry(s).symmetry(s);
            prop_assert_eq!(back.vertical(), d.vertical());
            prop_assert_eq!(back.horizontal(), d.horizontal());
            prop_assert!(d.symmetry(s).check_axioms().passed());
        }
    }

    #[test]
    fn instance_files_round_trip(g in groupoid(), f in field()) {
        let d = groupoid_double(&g, f).unwrap();
        let text = InstanceFile::from_algebra(&d).to_json();
        let file = InstanceFile::parse(&text).unwrap();
        prop_assert_eq!(file.to_json(), text);
        let back = file.to_algebra(None).unwrap();
        prop_assert_eq!(back.vertical(), d.vertical());
        prop_assert_eq!(back.horizontal(), d.horizontal());
        prop_assert_eq!(back.labels(), d.labels());
    }

    #[test]
    fn matrix_inverse_is_two_sided(entries in element(9)) {
        let m = Matrix::from_rows(q(), 3, entries.chunks(3).map(<[Scalar]>::to_vec).collect());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn scalars_render_and_parse(num in -50i64..=50, den in prop::sample::select(vec![1i64, 7, 11, 13]), f in field()) {
        let s = f.fraction(num, den);
        prop_assert_eq!(f.parse(&s.to_string()).unwrap(), s.clone());
        if !s.is_zero() {
            let inv = s.inv().unwrap();
            prop_assert!((s * inv).is_one());
        }
    }

    #[test]
    fn cyclic_hopf_doubles_index_is_the_order(n in 1usize..=4) {
        let d = hopf_group_double(&Group::cyclic(n), q()).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        let ind = &fr.index_elements()[0];
        prop_assert_eq!(&ind.from_dual_basis, &vector::scale(&q().from_i64(n as i64), d.e()));
    }
}
