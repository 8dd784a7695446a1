//! Distributivity, multiplicative comultiplications, Takeuchi products, Hopf algebroids,
//! pairings and Frobenius integrals.

mod hopf;
mod pairing;
mod takeuchi;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::antipode::AntipodeError;
use crate::double::{Corner, DoubleAlgebra, DoubleError};
use crate::frobenius::{takeuchi_legs, Frobenius, FrobeniusError, GaloisPair, Pairs};
use crate::linalg::{kernel, Matrix, Subspace};
use crate::report::Report;
use crate::scalar::{vector, Scalar};

pub use hopf::{extract_hopf_algebroids, frobenius_integrals, hgd_round_trip, Bialgebroid, HopfAlgebroids, IntegralCheck, IntegralSample};
pub use pairing::{pairings, right_dual_laws, Pairing, PairingKind};
pub use takeuchi::{takeuchi_double, TakeuchiDouble};

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StructureError {
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Antipode(#[from] AntipodeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the Takeuchi product is not a double algebra: {0}")]
    Takeuchi(Box<DoubleError>),
    #[error("no antipode exists")]
    NoAntipode,
    #[error("the double algebra is not distributive")]
    NotDistributive,
    #[error("{0} is not closed in the Takeuchi subspace")]
    NotClosed(&'static str),
}

/// One of the four distributive laws, named after the comultiplication it uses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributiveLaw {
    pub corner: Corner,
    pub holds: bool,
    /// First failing basis triple `(a, a', a'')`.
    pub witness: Option<[usize; 3]>,
    /// Whether a second representative of the dual basis gives the same verdict.
    pub representative_independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributivityReport {
    pub laws: Vec<DistributiveLaw>,
}

impl DistributivityReport {
    pub fn distributive(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }
}

/// Corner order of the laws (DB), (DL), (DT), (DR).
pub const DISTRIBUTIVE_CORNERS: [Corner; 4] = [B, L, T, R];

/// Evaluates one law at a basis triple with the chosen dual-basis representative.
/// With `·` the corner's product and `*` the other one:
/// B, L: `a * (a'·a'') = Σ (a₁ * a')·(a₂ * a'')`; T, R: `(a'·a'') * a = Σ (a' * a₁)·(a'' * a₂)`.
fn law_holds(fr: &Frobenius, c: Corner, legs: &Pairs, a: &[Scalar], a1: &[Scalar], a2: &[Scalar]) -> bool {
    let d = fr.algebra();
    let outer = c.product();
    let inner = outer.other();
    let left_legs = matches!(c, B | L);
    let lhs = if left_legs { d.mul(inner, a, &d.mul(outer, a1, a2)) } else { d.mul(inner, &d.mul(outer, a1, a2), a) };
    let rhs = legs.iter().fold(d.zero(), |acc, (p, q)| {
        let term = if left_legs {
            d.mul(outer, &d.mul(inner, p, a1), &d.mul(inner, q, a2))
        } else {
            d.mul(outer, &d.mul(inner, a1, p), &d.mul(inner, a2, q))
        };
        vector::add(&acc, &term)
    });
    lhs == rhs
}

fn first_failure(fr: &Frobenius, c: Corner, alternate: bool) -> Option<[usize; 3]> {
    let d = fr.algebra();
    let n = d.dim();
    for a in 0..n {
        let av = d.basis_vector(a);
        let legs = fr.delta_pairs(c, &av, alternate);
        for a1 in 0..n {
            let a1v = d.basis_vector(a1);
            for a2 in 0..n {
                if !law_holds(fr, c, &legs, &av, &a1v, &d.basis_vector(a2)) {
                    return Some([a, a1, a2]);
                }
            }
        }
    }
    None
}

pub fn check_distributivity(fr: &Frobenius) -> DistributivityReport {
    let laws = DISTRIBUTIVE_CORNERS
        .iter()
        .map(|&c| {
            let witness = first_failure(fr, c, false);
            let representative_independent = fr.dual_basis(c).alternate.is_none() || first_failure(fr, c, true).is_none() == witness.is_none();
            DistributiveLaw { corner: c, holds: witness.is_none(), witness, representative_independent }
        })
        .collect();
    DistributivityReport { laws }
}

/// The Takeuchi subspace `A ×_c A` of `A ⊗_c A`, in quotient coordinates.
pub fn takeuchi_subspace(fr: &Frobenius, c: Corner) -> Subspace {
    let d = fr.algebra();
    let n = d.dim();
    let t = fr.tensor(c);
    let other = c.product().other();
    let (first, second, from_left) = takeuchi_legs(c);
    let mut blocks: Vec<Vec<Vec<Scalar>>> = Vec::new();
    for b in d.base_ideal(c).basis() {
        let f1 = d.phi(first, b);
        let f2 = d.phi(second, b);
        let cols: Vec<Vec<Scalar>> = (0..n * n)
            .map(|pq| {
                let (p, q) = (d.basis_vector(pq / n), d.basis_vector(pq % n));
                let (l1, r2) = if from_left {
                    (t.class_of(&d.mul(other, &f1, &p), &q), t.class_of(&p, &d.mul(other, &f2, &q)))
                } else {
                    (t.class_of(&d.mul(other, &p, &f1), &q), t.class_of(&p, &d.mul(other, &q, &f2)))
                };
                vector::sub(&l1, &r2)
            })
            .collect();
        blocks.push(cols);
    }
    let section = t.quotient().section_matrix();
    let rows: Vec<Vec<Scalar>> = blocks
        .iter()
        .flat_map(|cols| Matrix::from_columns(d.field(), t.dim(), cols).mul(&section).row_vectors())
        .collect();
    if rows.is_empty() {
        return Subspace::full(d.field(), t.dim());
    }
    kernel(&Matrix::from_rows(d.field(), t.dim(), rows))
}

/// Class of `Σ (p·p') ⊗ (q·q')` over two representatives, with `·` the product other than the corner's.
pub fn factorwise_product(fr: &Frobenius, c: Corner, x: &Pairs, y: &Pairs) -> Vec<Scalar> {
    let d = fr.algebra();
    let p = c.product().other();
    let mut prod = Vec::with_capacity(x.len() * y.len());
    for (a, b) in x {
        for (a2, b2) in y {
            prod.push((d.mul(p, a, a2), d.mul(p, b, b2)));
        }
    }
    fr.class_of_pairs(c, &prod)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicativity {
    pub corner: Corner,
    pub takeuchi_dim: usize,
    pub lands_in_takeuchi: bool,
    pub multiplicative: bool,
    pub unit_idempotent: bool,
}

pub fn comultiplication_multiplicativity(fr: &Frobenius, c: Corner) -> Multiplicativity {
    let d = fr.algebra();
    let n = d.dim();
    let x = takeuchi_subspace(fr, c);
    let p = c.product().other();
    let lands_in_takeuchi = (0..n).all(|k| x.contains(&fr.delta(c, &d.basis_vector(k))));
    let legs: Vec<Pairs> = (0..n).map(|k| fr.delta_pairs(c, &d.basis_vector(k), false)).collect();
    let multiplicative = (0..n).all(|j| {
        (0..n).all(|k| {
            let prod = d.mul(p, &d.basis_vector(j), &d.basis_vector(k));
            fr.delta(c, &prod) == factorwise_product(fr, c, &legs[j], &legs[k])
        })
    });
    let unit = d.unit(p).to_vec();
    let du = fr.delta_pairs(c, &unit, false);
    let unit_idempotent = factorwise_product(fr, c, &du, &du) == fr.delta(c, &unit);
    Multiplicativity { corner: c, takeuchi_dim: x.dim(), lands_in_takeuchi, multiplicative, unit_idempotent }
}

/// Distributivity, multiplicativity of the comultiplications, and the equivalences between them.
pub fn distributive_report(fr: &Frobenius, antipode_exists: bool) -> (Report, DistributivityReport) {
    let mut rep = Report::new("distributive");
    let dist = check_distributivity(fr);
    let names = ["DB", "DL", "DT", "DR"];
    for (law, name) in dist.laws.iter().zip(names) {
        let detail = match law.witness {
            Some([a, a1, a2]) => {
                let l = fr.algebra().labels();
                format!("fails at ({}, {}, {})", l[a], l[a1], l[a2])
            }
            None => "holds".to_string(),
        };
        rep.fact(name.to_string(), detail);
        rep.check(format!("{name} does not depend on the dual-basis representative"), law.representative_independent);
    }
    let mut all_mult = true;
    for c in DISTRIBUTIVE_CORNERS {
        let m = comultiplication_multiplicativity(fr, c);
        rep.fact(format!("dim A×_{c}A"), m.takeuchi_dim.to_string());
        rep.check(format!("Δ_{c} lands in A×_{c}A"), m.lands_in_takeuchi);
        rep.check(format!("Δ_{c}(unit) is idempotent"), m.unit_idempotent);
        rep.fact(format!("Δ_{c} multiplicative"), m.multiplicative.to_string());
        all_mult &= m.multiplicative;
    }
    let distributive = dist.distributive();
    rep.fact("distributive", distributive.to_string());
    rep.check("distributive iff antipode and multiplicative comultiplications", distributive == (antipode_exists && all_mult));
    if distributive {
        rep.check("distributive implies an antipode", antipode_exists);
        let galois = GaloisPair::ALL.iter().all(|&p| fr.galois_pair_invertible(p));
        rep.check("distributive implies invertible Galois maps", galois);
    }
    (rep, dist)
}

pub(crate) fn basis_of(d: &DoubleAlgebra) -> Vec<Vec<Scalar>> {
    (0..d.dim()).map(|k| d.basis_vector(k)).collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{commutative_double, dual_numbers, hopf_group_double, matrix_double, Group};
    use crate::scalar::Field;

    #[test]
    fn matrix_and_groups_are_distributive() {
        for d in [matrix_double(2).unwrap(), hopf_group_double(&Group::symmetric3(), Field::Rational).unwrap()] {
            let fr = Frobenius::new(&d).unwrap();
            let (rep, dist) = distributive_report(&fr, true);
            assert!(dist.distributive());
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn group_delta_b_is_multiplicative() {
        let d = hopf_group_double(&Group::cyclic(3), Field::Rational).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        let m = comultiplication_multiplicativity(&fr, B);
        assert!(m.multiplicative && m.lands_in_takeuchi && m.unit_idempotent);
    }

    #[test]
    fn dual_numbers_are_not_frobenius_or_report_consistently() {
        let d = commutative_double(dual_numbers(Field::Rational).unwrap()).unwrap();
        if let Ok(fr) = Frobenius::new(&d) {
            let s = crate::antipode::solve_antipode(&d).ok().flatten().is_some();
            let (rep, _) = distributive_report(&fr, s);
            assert!(rep.passed(), "{rep}");
        }
    }
}
