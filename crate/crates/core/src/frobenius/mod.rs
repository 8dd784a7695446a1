//! Frobenius structure of the four base maps: dual bases, comultiplications, Nakayama
//! automorphisms, Galois maps, index elements and the Maschke-type conditions.

mod galois;
mod maschke;

use thiserror::Error;

use crate::algebra::RelativeTensor;
use crate::double::{Corner, DoubleAlgebra};
use crate::linalg::{solve_linear, Matrix, Subspace};
use crate::report::Report;
use crate::scalar::{vector, Scalar};

pub use galois::{GaloisMap, GaloisPair, IndexElement};
pub use maschke::{regularity_witness, separating_idempotent, MaschkeConditions, MaschkeReport};

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrobeniusError {
    #[error("Φ_{0} is not a Frobenius homomorphism")]
    NotFrobenius(Corner),
}

/// A finite sum `Σ_j x_j ⊗ y_j`, stored as explicit pairs.
pub type Pairs = Vec<(Vec<Scalar>, Vec<Scalar>)>;

/// The tensor square `A ⊗_X A` where the base ideal `X` acts through the corner's product.
pub fn tensor_square(d: &DoubleAlgebra, c: Corner) -> RelativeTensor {
    RelativeTensor::over_subalgebra(d.table(c.product()), d.base_ideal(c)).expect("base ideals are unital subalgebras")
}

/// Splits a representative of `A ⊗_k A` (row-major `n × n` coefficients) into pairs `e_p ⊗ row_p`.
pub fn pairs_of(representative: &[Scalar], n: usize) -> Pairs {
    let field = representative[0].field();
    (0..n)
        .filter_map(|p| {
            let row = representative[p * n..(p + 1) * n].to_vec();
            (!vector::is_zero(&row)).then(|| (vector::unit(field, n, p), row))
        })
        .collect()
}

/// The dual basis of a Frobenius base map, as a representative in `A ⊗_k A`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBasis {
    pub corner: Corner,
    pub tensor: RelativeTensor,
    pub representative: Vec<Scalar>,
    pub pairs: Pairs,
    /// The class in `A ⊗_X A`.
    pub class: Vec<Scalar>,
    /// A second representative of the same class, when the relation space is nonzero.
    pub alternate: Option<Pairs>,
}

impl DualBasis {
    /// The representative to use: the primary one, or the alternate if requested and available.
    pub fn pairs(&self, alternate: bool) -> &Pairs {
        match (&self.alternate, alternate) {
            (Some(alt), true) => alt,
            _ => &self.pairs,
        }
    }
}

/// Solves the two dual-basis identities `Σ Φ(a·x_j)·y_j = a = Σ x_j·Φ(y_j·a)` for a
/// representative in `A ⊗_k A`, where `·` is the corner's product.
pub fn solve_dual_basis(d: &DoubleAlgebra, c: Corner) -> Option<DualBasis> {
    let n = d.dim();
    let f = d.field();
    let table = d.table(c.product());
    // phi_prod[a][p] = Φ(e_a · e_p)
    let phi_prod: Vec<Vec<Vec<Scalar>>> =
        (0..n).map(|a| (0..n).map(|p| d.phi(c, &table.basis_product(a, p))).collect()).collect();
    let mut columns = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let mut col = Vec::with_capacity(2 * n * n);
            for row in &phi_prod {
                col.extend(table.multiply_by_basis(&row[p], q));
            }
            for entry in &phi_prod[q] {
                col.extend(table.basis_times(p, entry));
            }
            columns.push(col);
        }
    }
    let coeffs = Matrix::from_columns(f, 2 * n * n, &columns);
    let mut rhs = Vec::with_capacity(2 * n * n);
    for _ in 0..2 {
        for a in 0..n {
            rhs.extend(vector::unit(f, n, a));
        }
    }
    let representative = solve_linear(&coeffs, &rhs)?;
    let tensor = tensor_square(d, c);
    let class = tensor.project(&representative);
    let pairs = pairs_of(&representative, n);
    let alternate = tensor.relation_basis().first().map(|r| pairs_of(&vector::add(&representative, r), n));
    let basis = DualBasis { corner: c, tensor, representative, pairs, class, alternate };
    is_central(d, &basis).then_some(basis)
}

/// `class(a·x_j ⊗ y_j) = class(x_j ⊗ y_j·a)` for all basis `a`.
fn is_central(d: &DoubleAlgebra, basis: &DualBasis) -> bool {
    let p = basis.corner.product();
    (0..d.dim()).all(|k| {
        let a = d.basis_vector(k);
        let mut left = basis.tensor.zero_class();
        let mut right = basis.tensor.zero_class();
        let one = d.field().one();
        for (x, y) in &basis.pairs {
            basis.tensor.add_pair_class(&mut left, &d.mul(p, &a, x), y, &one);
            basis.tensor.add_pair_class(&mut right, x, &d.mul(p, y, &a), &one);
        }
        left == right
    })
}

/// The Takeuchi constraint on `A ⊗_c A`: the base maps inserted into the first and second legs,
/// and whether they multiply from the left (through the product other than the corner's).
pub fn takeuchi_legs(c: Corner) -> (Corner, Corner, bool) {
    match c {
        B => (R, L, false),
        T => (R, L, true),
        L => (T, B, false),
        R => (T, B, true),
    }
}

/// A Frobenius double algebra: the algebra together with the dual bases of all four base maps.
#[derive(Clone, Debug)]
pub struct Frobenius {
    algebra: DoubleAlgebra,
    bases: Vec<DualBasis>,
}

impl Frobenius {
    pub fn new(d: &DoubleAlgebra) -> Result<Frobenius, FrobeniusError> {
        let bases = Corner::ALL
            .iter()
            .map(|&c| solve_dual_basis(d, c).ok_or(FrobeniusError::NotFrobenius(c)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Frobenius { algebra: d.clone(), bases })
    }

    pub fn algebra(&self) -> &DoubleAlgebra {
        &self.algebra
    }

    pub fn dual_basis(&self, c: Corner) -> &DualBasis {
        &self.bases[Corner::ALL.iter().position(|&x| x == c).expect("corner")]
    }

    pub fn tensor(&self, c: Corner) -> &RelativeTensor {
        &self.dual_basis(c).tensor
    }

    /// Representative pairs of `Δ_c(a) = a·x_j ⊗ y_j`.
    pub fn delta_pairs(&self, c: Corner, a: &[Scalar], alternate: bool) -> Pairs {
        let d = &self.algebra;
        let p = c.product();
        self.dual_basis(c).pairs(alternate).iter().map(|(x, y)| (d.mul(p, a, x), y.clone())).collect()
    }

    /// `Δ_c(a)` in quotient coordinates of `A ⊗_c A`.
    pub fn delta(&self, c: Corner, a: &[Scalar]) -> Vec<Scalar> {
        self.class_of_pairs(c, &self.delta_pairs(c, a, false))
    }

    pub fn class_of_pairs(&self, c: Corner, pairs: &[(Vec<Scalar>, Vec<Scalar>)]) -> Vec<Scalar> {
        let t = self.tensor(c);
        let mut acc = t.zero_class();
        let one = self.algebra.field().one();
        for (x, y) in pairs {
            t.add_pair_class(&mut acc, x, y, &one);
        }
        acc
    }

    /// Matrix of `Δ_c`, columns indexed by the basis of `A`.
    pub fn comultiplication_matrix(&self, c: Corner) -> Matrix {
        let d = &self.algebra;
        let cols: Vec<Vec<Scalar>> = (0..d.dim()).map(|k| self.delta(c, &d.basis_vector(k))).collect();
        Matrix::from_columns(d.field(), self.tensor(c).dim(), &cols)
    }

    /// The Nakayama automorphism `ν(x) = Σ Φ(x_j·x)·y_j` on a basis of the centralizer of the
    /// base ideal; returns the centralizer and the images of its basis.
    pub fn nakayama(&self, c: Corner) -> (Subspace, Vec<Vec<Scalar>>) {
        let d = &self.algebra;
        let p = c.product();
        let cnt = d.table(p).centralizer(d.base_ideal(c));
        let images = cnt.basis().iter().map(|x| self.nakayama_apply(c, x)).collect();
        (cnt, images)
    }

    pub fn nakayama_apply(&self, c: Corner, x: &[Scalar]) -> Vec<Scalar> {
        let d = &self.algebra;
        let p = c.product();
        let mut out = d.zero();
        for (xj, yj) in &self.dual_basis(c).pairs {
            let coeff = d.phi(c, &d.mul(p, xj, x));
            out = vector::add(&out, &d.mul(p, &coeff, yj));
        }
        out
    }

    /// Sum of `x_j · y_j` over the dual basis.
    pub fn index(&self, c: Corner) -> Vec<Scalar> {
        let d = &self.algebra;
        let p = c.product();
        self.dual_basis(c).pairs.iter().fold(d.zero(), |acc, (x, y)| vector::add(&acc, &d.mul(p, x, y)))
    }

    /// Coassociativity of `Δ_c`, tested through the injective evaluation
    /// `p ⊗ q ⊗ r ↦ (m ↦ class(p ⊗ q·Φ(r·m)))` into maps `A → A ⊗_c A`.
    fn coassociative(&self, c: Corner, alternate: bool) -> bool {
        let d = &self.algebra;
        let prod = c.product();
        let t = self.tensor(c);
        let one = d.field().one();
        let dual = self.dual_basis(c).pairs(alternate);
        for k in 0..d.dim() {
            let a = d.basis_vector(k);
            let first = self.delta_pairs(c, &a, alternate);
            for m in 0..d.dim() {
                let mv = d.basis_vector(m);
                let mut lhs = t.zero_class();
                let mut rhs = t.zero_class();
                // (Δ ⊗ id)Δ(a) = Σ Δ(a·x_j) ⊗ y_j
                for (ax, y) in &first {
                    let w = d.phi(c, &d.mul(prod, y, &mv));
                    for (xk, yk) in dual {
                        t.add_pair_class(&mut lhs, &d.mul(prod, ax, xk), &d.mul(prod, yk, &w), &one);
                    }
                }
                // (id ⊗ Δ)Δ(a) = Σ a·x_j ⊗ Δ(y_j)
                for (ax, y) in &first {
                    for (xk, yk) in dual {
                        let w = d.phi(c, &d.mul(prod, yk, &mv));
                        t.add_pair_class(&mut rhs, ax, &d.mul(prod, &d.mul(prod, y, xk), &w), &one);
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The cross counit identities, e.g. `Φ_B(a∘Φ_LΦ_B(a')) = Φ_B(a∘a') = Φ_B(a∘Φ_RΦ_B(a'))`.
    fn cross_counit(&self, c: Corner) -> bool {
        let d = &self.algebra;
        let other = c.product().other();
        let (left_first, proj) = match c {
            B => (false, [L, R]),
            T => (true, [L, R]),
            L => (false, [B, T]),
            R => (true, [B, T]),
        };
        let n = d.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let a = d.basis_vector(i);
                let a2 = d.basis_vector(j);
                let eval = |x: &[Scalar]| {
                    let prod = if left_first { d.mul(other, x, &a) } else { d.mul(other, &a, x) };
                    d.phi(c, &prod)
                };
                let mid = eval(&a2);
                proj.iter().all(|&p| eval(&d.phis(&[p, c], &a2)) == mid)
            })
        })
    }

    /// `Σ Φ(a·x_j)·y_j = a` and `Σ (a·x_j)·Φ(y_j) = a` applied to the representative of `Δ(a)`.
    fn leg_counits(&self, c: Corner) -> bool {
        let d = &self.algebra;
        let p = c.product();
        (0..d.dim()).all(|k| {
            let a = d.basis_vector(k);
            let pairs = self.delta_pairs(c, &a, false);
            let left = pairs.iter().fold(d.zero(), |acc, (x, y)| vector::add(&acc, &d.mul(p, &d.phi(c, x), y)));
            let right = pairs.iter().fold(d.zero(), |acc, (x, y)| vector::add(&acc, &d.mul(p, x, &d.phi(c, y))));
            left == a && right == a
        })
    }

    fn unit_preserving(&self, c: Corner) -> bool {
        let d = &self.algebra;
        let u = d.unit(c.product().other()).to_vec();
        self.delta(c, &u) == self.tensor(c).class_of(&u, &u)
    }

    /// The Takeuchi condition on `Δ_c(a)` for all basis `a` and a basis of the base ideal.
    pub fn takeuchi(&self, c: Corner, alternate: bool) -> bool {
        let d = &self.algebra;
        let t = self.tensor(c);
        let other = c.product().other();
        let one = d.field().one();
        let (first, second, from_left) = takeuchi_legs(c);
        d.base_ideal(c).basis().iter().all(|b| {
            let f1 = d.phi(first, b);
            let f2 = d.phi(second, b);
            (0..d.dim()).all(|k| {
                let pairs = self.delta_pairs(c, &d.basis_vector(k), alternate);
                let mut lhs = t.zero_class();
                let mut rhs = t.zero_class();
                for (p, q) in &pairs {
                    if from_left {
                        t.add_pair_class(&mut lhs, &d.mul(other, &f1, p), q, &one);
                        t.add_pair_class(&mut rhs, p, &d.mul(other, &f2, q), &one);
                    } else {
                        t.add_pair_class(&mut lhs, &d.mul(other, p, &f1), q, &one);
                        t.add_pair_class(&mut rhs, p, &d.mul(other, q, &f2), &one);
                    }
                }
                lhs == rhs
            })
        })
    }

    /// Checks the dual bases, Nakayama maps and the almost-bialgebroid properties of each `Δ`.
    pub fn report(&self) -> Report {
        let d = &self.algebra;
        let mut rep = Report::new("frobenius");
        for c in Corner::ALL {
            let db = self.dual_basis(c);
            rep.check_with(format!("Φ_{c} has a dual basis"), true, format!("dim A⊗_{c}A = {}", db.tensor.dim()));
            rep.check(format!("dual basis of Φ_{c} is central"), is_central(d, db));

            let (cnt, images) = self.nakayama(c);
            let p = c.product();
            let twist = cnt.basis().iter().zip(&images).all(|(x, nx)| {
                (0..d.dim()).all(|k| {
                    let a = d.basis_vector(k);
                    d.phi(c, &d.mul(p, &a, x)) == d.phi(c, &d.mul(p, nx, &a))
                })
            });
            rep.check(format!("ν_{c} twists Φ_{c}"), twist);
            let shuffle = cnt.basis().iter().zip(&images).all(|(x, nx)| {
                let lhs: Pairs = db.pairs.iter().map(|(xj, yj)| (d.mul(p, xj, x), yj.clone())).collect();
                let rhs: Pairs = db.pairs.iter().map(|(xj, yj)| (xj.clone(), d.mul(p, nx, yj))).collect();
                self.class_of_pairs(c, &lhs) == self.class_of_pairs(c, &rhs)
            });
            rep.check(format!("ν_{c} shuffles the dual basis"), shuffle);
            let composite = d.nakayama_on_base(c);
            let domain = match c {
                L => R,
                R => L,
                B => T,
                T => B,
            };
            let agrees = d.base_ideal(domain).basis().iter().all(|x| self.nakayama_apply(c, x) == composite.mul_vec(x));
            rep.check(format!("ν_{c} on {domain} is the four-fold base composite"), agrees);

            rep.check(format!("Δ_{c} is coassociative"), self.coassociative(c, false));
            rep.check(format!("Δ_{c} is counital"), self.leg_counits(c) && self.cross_counit(c));
            rep.check(format!("Δ_{c} preserves the unit"), self.unit_preserving(c));
            rep.check(format!("Δ_{c} has the Takeuchi property"), self.takeuchi(c, false));
            if db.alternate.is_some() {
                let same = (0..d.dim()).all(|k| {
                    let a = d.basis_vector(k);
                    self.class_of_pairs(c, &self.delta_pairs(c, &a, true)) == self.delta(c, &a)
                });
                rep.check(
                    format!("Δ_{c} and its Takeuchi property do not depend on the representative"),
                    same && self.takeuchi(c, true) && self.coassociative(c, true),
                );
            }
        }
        rep.check("Φ_B(e) = i", d.phi(B, d.e()) == d.i());
        rep
    }
}

/// Frobenius report that also covers algebras where some corner has no dual basis.
pub fn frobenius_report(d: &DoubleAlgebra) -> (Report, Option<Frobenius>) {
    match Frobenius::new(d) {
        Ok(fr) => (fr.report(), Some(fr)),
        Err(_) => {
            let mut rep = Report::new("frobenius");
            for c in Corner::ALL {
                rep.check(format!("Φ_{c} has a dual basis"), solve_dual_basis(d, c).is_some());
            }
            (rep, None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hopf_group_double, matrix_double, Group};
    use crate::scalar::Field;

    #[test]
    fn matrix_dual_bases_match_expected_classes() {
        let d = matrix_double(2).unwrap();
        let n = 2;
        let fr = Frobenius::new(&d).unwrap();
        let f = d.field();
        let expected_l: Vec<Scalar> = {
            let mut v = vector::zeros(f, 16);
            for j in 0..n {
                for k in 0..n {
                    v[(j * n + k) * 4 + (k * n + j)] = f.one();
                }
            }
            v
        };
        assert_eq!(fr.tensor(L).project(&expected_l), fr.dual_basis(L).class);
        let expected_b: Vec<Scalar> = {
            let mut v = vector::zeros(f, 16);
            for a in 0..4 {
                v[a * 4 + a] = f.one();
            }
            v
        };
        assert_eq!(fr.tensor(B).project(&expected_b), fr.dual_basis(B).class);
        assert_eq!(fr.tensor(B).dim(), 8);
        assert_eq!(fr.tensor(L).dim(), 8);
        let rep = fr.report();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn matrix_delta_b_of_e11() {
        // With the dual basis Σ e_a ⊗ e_a, e11 ⋆ e_a vanishes unless a = 11.
        let d = matrix_double(2).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        let e11 = d.basis_vector(0);
        let e12 = d.basis_vector(1);
        let t = fr.tensor(B);
        assert_eq!(fr.delta(B, &e11), t.class_of(&e11, &e11));
        assert!(!vector::is_zero(&t.class_of(&e12, &e12)));
    }

    #[test]
    fn group_comultiplication_is_grouplike() {
        let d = hopf_group_double(&Group::symmetric3(), Field::Rational).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        for g in 0..6 {
            let gv = d.basis_vector(g);
            assert_eq!(fr.delta(B, &gv), fr.tensor(B).class_of(&gv, &gv));
        }
        let (cnt, images) = fr.nakayama(B);
        assert_eq!(cnt.basis(), images.as_slice());
        assert!(fr.report().passed());
    }
}
