use crate::algebra::ProductTable;
use crate::double::{Corner, DoubleAlgebra};
use crate::frobenius::Frobenius;
use crate::linalg::{solve_linear, Matrix};
use crate::report::Report;
use crate::scalar::{vector, Field, Scalar};
use crate::structure::check_distributivity;

use super::{FamilyError, Group, Groupoid};

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::WeakHopf(msg.into())
}

/// A finite weak Hopf algebra with a nondegenerate left integral `i` and a functional `λ` dual to it.
///
/// `coproduct` is `p² × p`; entry `(j·p + k, a)` is the coefficient of `b_j ⊗ b_k` in `Δ(b_a)`.
#[derive(Clone, Debug)]
pub struct WeakHopfData {
    algebra: ProductTable,
    coproduct: Matrix,
    counit: Vec<Scalar>,
    antipode: Matrix,
    antipode_inverse: Matrix,
    lambda: Vec<Scalar>,
    integral: Vec<Scalar>,
}

impl WeakHopfData {
    /// Validates the data: multiplicative coassociative counital `Δ`, the antipode identities
    /// `a₁S(a₂) = π_L(a)` and `S(a₁)a₂ = π_R(a)`, an invertible `S`, and `λ ⇀ i = 1`.
    pub fn new(
        algebra: ProductTable,
        coproduct: Matrix,
        counit: Vec<Scalar>,
        antipode: Matrix,
        lambda: Vec<Scalar>,
        integral: Vec<Scalar>,
    ) -> Result<WeakHopfData, FamilyError> {
        let p = algebra.dim();
        if coproduct.rows() != p * p || coproduct.cols() != p {
            return Err(invalid(format!("Δ must be a {}×{p} matrix", p * p)));
        }
        if counit.len() != p || lambda.len() != p || integral.len() != p || antipode.rows() != p || antipode.cols() != p {
            return Err(invalid(format!("ε, λ, i and S must have dimension {p}")));
        }
        let antipode_inverse = antipode.inverse().ok_or_else(|| invalid("S is not invertible"))?;
        let w = WeakHopfData { algebra, coproduct, counit, antipode, antipode_inverse, lambda, integral };
        let field = w.field();
        for a in 0..p {
            let ba = vector::unit(field, p, a);
            let da = w.delta(&ba);
            let left_counit = w.contract_left(&da, &w.counit);
            let right_counit = w.contract_right(&da, &w.counit);
            if left_counit != ba || right_counit != ba {
                return Err(invalid(format!("ε is not a counit at b{a}")));
            }
            if w.delta_left_leg(&da) != w.delta_right_leg(&da) {
                return Err(invalid(format!("Δ is not coassociative at b{a}")));
            }
            for b in 0..p {
                let bb = vector::unit(field, p, b);
                if w.delta(&w.mul(&ba, &bb)) != w.tensor_mul(&da, &w.delta(&bb)) {
                    return Err(invalid(format!("Δ is not multiplicative at (b{a}, b{b})")));
                }
            }
            let lhs = w.sum_terms(&da, |x, y| w.mul(x, &w.antipode.mul_vec(y)));
            if lhs != w.pi_left(&ba) {
                return Err(invalid(format!("a₁S(a₂) ≠ π_L(a) at b{a}")));
            }
            let rhs = w.sum_terms(&da, |x, y| w.mul(&w.antipode.mul_vec(x), y));
            if rhs != w.pi_right(&ba) {
                return Err(invalid(format!("S(a₁)a₂ ≠ π_R(a) at b{a}")));
            }
        }
        if w.hit(&w.lambda, &w.integral) != w.one() {
            return Err(invalid("λ ⇀ i ≠ 1"));
        }
        Ok(w)
    }

    /// The groupoid algebra: `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`, `λ` the indicator of identities, `i = Σ g`.
    pub fn groupoid(g: &Groupoid, field: Field) -> Result<WeakHopfData, FamilyError> {
        let p = g.arrows();
        let algebra = ProductTable::from_fn(field, p, identities_sum(g, field), |a, b| match g.compose(a, b) {
            Some(c) => vector::unit(field, p, c),
            None => vector::zeros(field, p),
        })?;
        let diagonal: Vec<Vec<Scalar>> = (0..p).map(|a| vector::unit(field, p * p, a * p + a)).collect();
        let coproduct = Matrix::from_columns(field, p * p, &diagonal);
        WeakHopfData::new(
            algebra,
            coproduct,
            vec![field.one(); p],
            g.inversion_matrix(field),
            identities_sum(g, field),
            vec![field.one(); p],
        )
    }

    /// The group algebra as a Hopf algebra.
    pub fn group(g: &Group, field: Field) -> Result<WeakHopfData, FamilyError> {
        WeakHopfData::groupoid(&Groupoid::from_group(g), field)
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &ProductTable {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    fn one(&self) -> Vec<Scalar> {
        self.algebra.unit().to_vec()
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.multiply(x, y)
    }

    fn eval(&self, f: &[Scalar], x: &[Scalar]) -> Scalar {
        f.iter().zip(x).fold(self.field().zero(), |mut acc, (a, b)| {
            acc.add_product(a, b);
            acc
        })
    }

    fn delta(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.coproduct.mul_vec(a)
    }

    /// Nonzero terms `(j, k, c)` of an element of `W ⊗ W`.
    fn terms<'a>(&self, t: &'a [Scalar]) -> impl Iterator<Item = (usize, usize, &'a Scalar)> + 'a {
        let p = self.dim();
        t.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(jk, c)| (jk / p, jk % p, c))
    }

    /// `Σ c · f(b_j, b_k)` over the terms of `t`.
    fn sum_terms(&self, t: &[Scalar], f: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>) -> Vec<Scalar> {
        let p = self.dim();
        let field = self.field();
        let mut acc = vector::zeros(field, p);
        for (j, k, c) in self.terms(t) {
            vector::axpy(&mut acc, c, &f(&vector::unit(field, p, j), &vector::unit(field, p, k)));
        }
        acc
    }

    /// `(f ⊗ id)(t)`
    fn contract_left(&self, t: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        self.sum_terms(t, |x, y| vector::scale(&self.eval(f, x), y))
    }

    /// `(id ⊗ f)(t)`
    fn contract_right(&self, t: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        self.sum_terms(t, |x, y| vector::scale(&self.eval(f, y), x))
    }

    /// `(Δ ⊗ id)(t)` in `W⊗³` coordinates.
    fn delta_left_leg(&self, t: &[Scalar]) -> Vec<Scalar> {
        let p = self.dim();
        let mut out = vector::zeros(self.field(), p * p * p);
        for (j, k, c) in self.terms(t) {
            let dj = self.coproduct.column(j);
            for (a, b, c2) in self.terms(&dj) {
                out[(a * p + b) * p + k].add_product(c, c2);
            }
        }
        out
    }

    /// `(id ⊗ Δ)(t)` in `W⊗³` coordinates.
    fn delta_right_leg(&self, t: &[Scalar]) -> Vec<Scalar> {
        let p = self.dim();
        let mut out = vector::zeros(self.field(), p * p * p);
        for (j, k, c) in self.terms(t) {
            let dk = self.coproduct.column(k);
            for (a, b, c2) in self.terms(&dk) {
                out[(j * p + a) * p + b].add_product(c, c2);
            }
        }
        out
    }

    /// Factorwise product in `W ⊗ W`.
    fn tensor_mul(&self, s: &[Scalar], t: &[Scalar]) -> Vec<Scalar> {
        let p = self.dim();
        let mut out = vector::zeros(self.field(), p * p);
        for (j, k, c) in self.terms(s) {
            for (j2, k2, c2) in self.terms(t) {
                let cc = c * c2;
                let left = self.algebra.basis_product(j, j2);
                let right = self.algebra.basis_product(k, k2);
                for (x, cx) in left.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    for (y, cy) in right.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out[x * p + y].add_product(&cc, &(cx * cy));
                    }
                }
            }
        }
        out
    }

    /// `f ⇀ a = a₁ f(a₂)`
    fn hit(&self, f: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.contract_right(&self.delta(a), f)
    }

    /// `a ↼ f = f(a₁) a₂`
    fn hit_right(&self, a: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        self.contract_left(&self.delta(a), f)
    }

    /// `π_L(a) = ε(1₁a) 1₂`
    fn pi_left(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.sum_terms(&self.delta(&self.one()), |x, y| vector::scale(&self.eval(&self.counit, &self.mul(x, a)), y))
    }

    /// `π_R(a) = 1₁ ε(a1₂)`
    fn pi_right(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.sum_terms(&self.delta(&self.one()), |x, y| vector::scale(&self.eval(&self.counit, &self.mul(a, y)), x))
    }

    /// The functional `x ↦ f(S x)`.
    fn pull_back(&self, f: &[Scalar], s: &Matrix) -> Vec<Scalar> {
        s.transpose().mul_vec(f)
    }

    /// The convolution inverse of a functional, if any.
    fn convolution_inverse(&self, f: &[Scalar]) -> Option<Vec<Scalar>> {
        let p = self.dim();
        let rows: Vec<Vec<Scalar>> = (0..p)
            .map(|a| {
                let da = self.coproduct.column(a);
                let mut row = vector::zeros(self.field(), p);
                for (j, k, c) in self.terms(&da) {
                    row[k].add_product(c, &f[j]);
                }
                row
            })
            .collect();
        let g = solve_linear(&Matrix::from_rows(self.field(), p, rows), &self.counit)?;
        let back: Vec<Scalar> = (0..p)
            .map(|a| {
                let da = self.coproduct.column(a);
                self.terms(&da).fold(self.field().zero(), |mut acc, (j, k, c)| {
                    acc.add_product(c, &(&g[j] * &f[k]));
                    acc
                })
            })
            .collect();
        (back == self.counit).then_some(g)
    }

    /// `a ⋆ a' = λ(S⁻¹(a'₁) a) a'₂`
    fn star(&self, a: &[Scalar], a2: &[Scalar]) -> Vec<Scalar> {
        self.sum_terms(&self.delta(a2), |x, y| vector::scale(&self.eval(&self.lambda, &self.mul(&self.antipode_inverse.mul_vec(x), a)), y))
    }
}

fn identities_sum(g: &Groupoid, field: Field) -> Vec<Scalar> {
    let p = g.arrows();
    (0..g.objects()).fold(vector::zeros(field, p), |acc, x| vector::add(&acc, &vector::unit(field, p, g.identity(x))))
}

/// The double algebra of a weak Hopf algebra, with the comparison of the explicit formulas.
#[derive(Clone, Debug)]
pub struct WhaDouble {
    pub algebra: DoubleAlgebra,
    pub report: Report,
}

/// `⟨W, ·, 1, ⋆, i⟩` with `a ⋆ a' = λ(S⁻¹(a'₁) a) a'₂`.
pub fn wha_double(w: &WeakHopfData) -> Result<WhaDouble, FamilyError> {
    let field = w.field();
    let p = w.dim();
    let horizontal = ProductTable::from_fn(field, p, w.integral.clone(), |a, b| {
        w.star(&vector::unit(field, p, a), &vector::unit(field, p, b))
    })?;
    let d = DoubleAlgebra::new(w.algebra.clone(), horizontal)?;
    let basis: Vec<Vec<Scalar>> = (0..p).map(|k| vector::unit(field, p, k)).collect();
    let mut rep = Report::new("weak Hopf");

    let rho = w.pull_back(&w.lambda, &w.antipode_inverse);
    let sigma: Vec<Scalar> = basis.iter().map(|x| w.eval(&w.lambda, &w.mul(&w.integral, x))).collect();
    rep.fact("σ = ε", (sigma == w.counit).to_string());
    let sigma_inv = w.convolution_inverse(&sigma);
    rep.check("σ = λ ↼ i is convolution invertible", sigma_inv.is_some());
    let sigma_twist = sigma_inv.map(|s| w.pull_back(&s, &w.antipode));

    let oracle = |c: Corner, a: &[Scalar]| -> Option<Vec<Scalar>> {
        Some(match c {
            L => w.hit(&w.lambda, a),
            R => w.hit_right(a, &rho),
            B => w.mul(&w.pi_left(a), &w.integral),
            T => w.mul(&w.integral, &w.pi_right(&w.hit_right(a, sigma_twist.as_ref()?))),
        })
    };
    for (c, formula) in [(L, "λ ⇀ a"), (R, "a ↼ λS⁻¹"), (B, "π_L(a) i"), (T, "i π_R(a ↼ Ŝ(σ⁻¹))")] {
        rep.check(format!("Φ_{c}(a) = {formula}"), basis.iter().all(|a| oracle(c, a).as_ref() == Some(&d.phi(c, a))));
    }
    rep.check("a ⋆ 1 = Φ_L(a)", basis.iter().all(|a| d.hmul(a, d.e()) == d.phi(L, a)));

    let di = w.delta(&w.integral);
    let pairs_b: Vec<(Vec<Scalar>, Vec<Scalar>)> =
        w.terms(&di).map(|(j, k, c)| (vector::scale(c, &basis[j]), basis[k].clone())).collect();
    let pairs_l: Vec<(Vec<Scalar>, Vec<Scalar>)> =
        w.terms(&di).map(|(j, k, c)| (vector::scale(c, &basis[k]), w.antipode_inverse.mul_vec(&basis[j]))).collect();
    let sum = |terms: Vec<Vec<Scalar>>| terms.iter().fold(d.zero(), |acc, t| vector::add(&acc, t));
    let dual_b = basis.iter().all(|a| {
        sum(pairs_b.iter().map(|(u, v)| d.hmul(&d.phi(B, &d.hmul(a, u)), v)).collect()) == *a
            && sum(pairs_b.iter().map(|(u, v)| d.hmul(u, &d.phi(B, &d.hmul(v, a)))).collect()) == *a
    });
    rep.check("i₁ ⊗ i₂ is a dual basis for Φ_B", dual_b);
    let dual_l = basis.iter().all(|a| {
        sum(pairs_l.iter().map(|(x, y)| d.vmul(&d.phi(L, &d.vmul(a, x)), y)).collect()) == *a
            && sum(pairs_l.iter().map(|(x, y)| d.vmul(x, &d.phi(L, &d.vmul(y, a)))).collect()) == *a
    });
    rep.check("i₂ ⊗ S⁻¹(i₁) is a dual basis for Φ_L", dual_l);

    let generic = Frobenius::new(&d).map(|fr| check_distributivity(&fr).distributive());
    rep.check("distributive Frobenius double algebra", generic == Ok(true));
    Ok(WhaDouble { algebra: d, report: rep })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{groupoid_double, hopf_group_double};

    #[test]
    fn pair_groupoid_matches_groupoid_double() {
        let g = Groupoid::pair(2);
        let w = wha_double(&WeakHopfData::groupoid(&g, Field::Rational).unwrap()).unwrap();
        assert!(w.report.passed(), "{}", w.report);
        let d = groupoid_double(&g, Field::Rational).unwrap();
        assert_eq!(w.algebra.vertical(), d.vertical());
        assert_eq!(w.algebra.horizontal(), d.horizontal());
    }

    #[test]
    fn cyclic_group_matches_hopf_group_double() {
        for group in [Group::cyclic(2), Group::symmetric3()] {
            let w = wha_double(&WeakHopfData::group(&group, Field::Rational).unwrap()).unwrap();
            assert!(w.report.passed(), "{}", w.report);
            let d = hopf_group_double(&group, Field::Rational).unwrap();
            assert_eq!(w.algebra.vertical(), d.vertical());
            assert_eq!(w.algebra.horizontal(), d.horizontal());
        }
    }

    #[test]
    fn broken_integral_is_rejected() {
        let g = Groupoid::pair(2);
        let good = WeakHopfData::groupoid(&g, Field::Rational).unwrap();
        let f = Field::Rational;
        let bad = WeakHopfData::new(good.algebra.clone(), good.coproduct.clone(), good.counit.clone(), good.antipode.clone(), good.lambda.clone(), vector::scale(&f.from_i64(2), &good.integral));
        assert_eq!(bad.unwrap_err(), invalid("λ ⇀ i ≠ 1"));
    }
}
