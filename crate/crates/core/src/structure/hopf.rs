use serde::Serialize;

use crate::antipode::{solve_antipode, AntipodeMap};
use crate::double::{Corner, DoubleAlgebra, IntegralSpace, Product, Symmetry};
use crate::frobenius::{Frobenius, Pairs};
use crate::report::Report;
use crate::scalar::{vector, Scalar};

use super::{basis_of, check_distributivity, comultiplication_multiplicativity, StructureError};

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

/// A bialgebroid 6-tuple `⟨total, base, source, target, Δ, counit⟩` living inside a double algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bialgebroid {
    pub name: &'static str,
    /// Product of the total algebra; the base carries the other one.
    pub total: Product,
    pub base: Corner,
    pub source: Corner,
    pub target: Corner,
    pub comultiplication: Corner,
    pub counit: Corner,
    pub left: bool,
}

impl Bialgebroid {
    pub const VERTICAL_LEFT: Bialgebroid = Bialgebroid::new("V_B", Product::Vertical, B, L, R, true);
    pub const VERTICAL_RIGHT: Bialgebroid = Bialgebroid::new("V_T", Product::Vertical, T, R, L, false);
    pub const HORIZONTAL_LEFT: Bialgebroid = Bialgebroid::new("H_L", Product::Horizontal, L, B, T, true);
    pub const HORIZONTAL_RIGHT: Bialgebroid = Bialgebroid::new("H_R", Product::Horizontal, R, T, B, false);

    const fn new(name: &'static str, total: Product, base: Corner, source: Corner, target: Corner, left: bool) -> Bialgebroid {
        Bialgebroid { name, total, base, source, target, comultiplication: base, counit: base, left }
    }

    /// Source and target maps, counit, the Takeuchi property and multiplicativity of `Δ`.
    pub fn check(&self, fr: &Frobenius) -> Report {
        let d = fr.algebra();
        let mut rep = Report::new(self.name);
        let bp = self.base.product();
        let tp = self.total;
        let base = d.base_ideal(self.base).basis();
        let s = |b: &[Scalar]| d.phi(self.source, b);
        let t = |b: &[Scalar]| d.phi(self.target, b);
        let mut hom = true;
        let mut anti = true;
        let mut commute = true;
        for b in base {
            for b2 in base {
                let prod = d.mul(bp, b, b2);
                hom &= s(&prod) == d.mul(tp, &s(b), &s(b2));
                anti &= t(&prod) == d.mul(tp, &t(b2), &t(b));
                commute &= d.mul(tp, &s(b), &t(b2)) == d.mul(tp, &t(b2), &s(b));
            }
        }
        let base_unit = d.unit(bp);
        let total_unit = d.unit(tp);
        rep.check(format!("source Φ_{} is multiplicative on {}", self.source, self.base), hom);
        rep.check(format!("target Φ_{} is anti-multiplicative on {}", self.target, self.base), anti);
        rep.check("source and target images commute", commute);
        rep.check("source and target are unital", s(base_unit) == total_unit && t(base_unit) == total_unit);
        rep.check(format!("counit Φ_{} is unital", self.counit), d.phi(self.counit, total_unit) == base_unit);

        let c = self.comultiplication;
        let counit_ok = basis_of(d).iter().all(|a| {
            let pairs = fr.delta_pairs(c, a, false);
            let left = pairs.iter().fold(d.zero(), |acc, (x, y)| vector::add(&acc, &d.mul(bp, &d.phi(c, x), y)));
            let right = pairs.iter().fold(d.zero(), |acc, (x, y)| vector::add(&acc, &d.mul(bp, x, &d.phi(c, y))));
            &left == a && &right == a
        });
        rep.check(format!("Φ_{c} is a counit for Δ_{c}"), counit_ok);
        rep.check(format!("Δ_{c} has the Takeuchi property"), fr.takeuchi(c, false));
        let m = comultiplication_multiplicativity(fr, c);
        rep.check(format!("Δ_{c} is multiplicative into A×_{c}A"), m.lands_in_takeuchi && m.multiplicative);
        rep
    }
}

/// `(V_B, S, V_T)` and `(H_L, S⁻¹, H_R)` with the checks that make them Hopf algebroids.
#[derive(Clone, Debug)]
pub struct HopfAlgebroids {
    pub vertical: [Bialgebroid; 2],
    pub horizontal: [Bialgebroid; 2],
    pub antipode: AntipodeMap,
    pub report: Report,
}

fn sum_pairs(d: &DoubleAlgebra, pairs: &Pairs, f: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>) -> Vec<Scalar> {
    pairs.iter().fold(d.zero(), |acc, (x, y)| vector::add(&acc, &f(x, y)))
}

/// The two antipode axioms of the left bialgebroid `V_B`, checked in `A ⊗_B A` for every basis element.
fn antipode_axioms(fr: &Frobenius, s: &AntipodeMap) -> (bool, bool) {
    let d = fr.algebra();
    let ub = &fr.dual_basis(B).pairs;
    let t = fr.tensor(B);
    let e = d.e();
    let mut first = true;
    let mut second = true;
    for a in basis_of(d) {
        let mut lhs: Pairs = Vec::with_capacity(ub.len() * ub.len());
        let mut lhs2: Pairs = Vec::with_capacity(ub.len() * ub.len());
        for (uj, vj) in ub {
            let sa = s.apply(&d.hmul(&a, uj));
            let sinv = s.apply_inverse(&d.hmul(vj, &a));
            for (uk, vk) in ub {
                lhs.push((d.vmul(&d.hmul(&sa, uk), vj), vk.clone()));
                lhs2.push((d.hmul(&sinv, uk), d.vmul(vk, uj)));
            }
        }
        first &= fr.class_of_pairs(B, &lhs) == t.class_of(e, &s.apply(&a));
        second &= fr.class_of_pairs(B, &lhs2) == t.class_of(&s.apply_inverse(&a), e);
    }
    (first, second)
}

/// Checks that the right bialgebroid is the image of the left one under `S`.
fn antipode_images(fr: &Frobenius, s: &AntipodeMap) -> Report {
    let d = fr.algebra();
    let mut rep = Report::new("S-images");
    let image = d.base_ideal(B).image_under(&s.matrix);
    rep.check("S(B) = T", &image == d.base_ideal(T));
    let base = d.base_ideal(B).basis();
    rep.check("S·t_L = s_L on B", base.iter().all(|b| s.apply(&d.phi(R, b)) == d.phi(L, b)));
    rep.check("S·Φ_L = Φ_R·S on B", base.iter().all(|b| s.apply(&d.phi(L, b)) == d.phi(R, &s.apply(b))));
    rep.check("S·Φ_R = Φ_L·S on B", base.iter().all(|b| s.apply(&d.phi(R, b)) == d.phi(L, &s.apply(b))));
    let all = basis_of(d);
    rep.check("Φ_T·S = S·Φ_B", all.iter().all(|a| d.phi(T, &s.apply(a)) == s.apply(&d.phi(B, a))));
    let ub = &fr.dual_basis(B).pairs;
    let coproduct = all.iter().all(|a| {
        let twisted: Pairs = ub.iter().map(|(u, v)| (s.apply(v), s.apply(&d.hmul(a, u)))).collect();
        fr.delta(T, &s.apply(a)) == fr.class_of_pairs(T, &twisted)
    });
    rep.check("Δ_T·S = (S⊗S)·Δ_B^op", coproduct);
    rep
}

/// Whether `x` is invertible inside the base ideal `c`.
fn invertible_in(d: &DoubleAlgebra, x: &[Scalar], c: Corner) -> bool {
    matches!(d.invertibility_in_base(x, c), Ok(Some(_)))
}

/// Antipode axioms and `S`-images for the vertical side of `fr`; the horizontal side is the
/// same computation on the dual algebra.
fn vertical_side(fr: &Frobenius, s: &AntipodeMap, prefix: &str, rep: &mut Report) {
    let d = fr.algebra();
    let (first, second) = antipode_axioms(fr, s);
    rep.check(format!("{prefix}: S(a₍₁₎)₍₁₎∘a₍₂₎ ⊗ S(a₍₁₎)₍₂₎ = e ⊗ S(a)"), first);
    rep.check(format!("{prefix}: S⁻¹(a₍₂₎)₍₁₎ ⊗ S⁻¹(a₍₂₎)₍₂₎∘a₍₁₎ = S⁻¹(a) ⊗ e"), second);
    rep.absorb(prefix, antipode_images(fr, s));
    let i = d.i();
    let integral = d.integral_space(B).space.contains(i) && d.integral_space(T).space.contains(i);
    rep.check(format!("{prefix}: horizontal unit lies in both integral spaces"), integral);
    rep.check(format!("{prefix}: horizontal unit is ⋆-invertible in B and T"), invertible_in(d, i, B) && invertible_in(d, i, T));
}

pub fn extract_hopf_algebroids(fr: &Frobenius) -> Result<HopfAlgebroids, StructureError> {
    let d = fr.algebra();
    if !check_distributivity(fr).distributive() {
        return Err(StructureError::NotDistributive);
    }
    let s = solve_antipode(d)?.ok_or(StructureError::NoAntipode)?;
    let mut report = Report::new("hopf");
    let vertical = [Bialgebroid::VERTICAL_LEFT, Bialgebroid::VERTICAL_RIGHT];
    let horizontal = [Bialgebroid::HORIZONTAL_LEFT, Bialgebroid::HORIZONTAL_RIGHT];
    for b in vertical.iter().chain(&horizontal) {
        report.absorb(b.name, b.check(fr));
    }
    vertical_side(fr, &s, "V", &mut report);

    let dual = d.symmetry(Symmetry::Dual);
    let dual_fr = Frobenius::new(&dual)?;
    let dual_s = solve_antipode(&dual)?.ok_or(StructureError::NoAntipode)?;
    report.check("H: the dual algebra has B = L", dual.base_ideal(B) == d.base_ideal(L));
    report.check("H: the antipode of the dual is S⁻¹", dual_s.matrix == s.inverse);
    vertical_side(&dual_fr, &dual_s, "H", &mut report);
    Ok(HopfAlgebroids { vertical, horizontal, antipode: s, report })
}

/// An element of a base ideal tested as a Frobenius integral, with its dual integral.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralSample {
    pub corner: Corner,
    pub element: Vec<Scalar>,
    pub inverse: Option<Vec<Scalar>>,
    /// `Φ_R(t⁻¹)` for `t ∈ T` and `Φ_L(b⁻¹)` for `b ∈ B`.
    pub dual: Option<Vec<Scalar>>,
    /// Whether the dual integral maps back to the element.
    pub round_trip: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct IntegralCheck {
    pub spaces: Vec<IntegralSpace>,
    pub samples: Vec<IntegralSample>,
    pub report: Report,
}

fn inverse_in(d: &DoubleAlgebra, x: &[Scalar], c: Corner) -> Option<Vec<Scalar>> {
    d.invertibility_in_base(x, c).ok().flatten()
}

/// Candidate integrals in `c`: the horizontal unit, the base basis and the base images of the basis.
fn candidates(d: &DoubleAlgebra, c: Corner) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = vec![d.i().to_vec()];
    out.extend(d.base_ideal(c).basis().iter().cloned());
    out.extend(basis_of(d).iter().map(|a| d.phi(c, a)));
    let mut seen = Vec::new();
    out.retain(|x| {
        let fresh = !vector::is_zero(x) && !seen.contains(x);
        if fresh {
            seen.push(x.clone());
        }
        fresh
    });
    out
}

/// Integral spaces versus base ideals, and the duality `T_⋆ ↔ R_∘`, `B_⋆ ↔ L_∘` on sampled elements.
pub fn frobenius_integrals(fr: &Frobenius) -> Result<IntegralCheck, StructureError> {
    let d = fr.algebra();
    let antipode = solve_antipode(d)?.is_some();
    let mut report = Report::new("integrals");
    let spaces: Vec<IntegralSpace> = Corner::ALL.iter().map(|&c| d.integral_space(c)).collect();
    for sp in &spaces {
        report.check(format!("I_{} = {}", sp.index, sp.base), sp.equals_base);
    }
    let e = d.e();
    report.check("e is ∘-invertible in L with inverse e", inverse_in(d, e, L).as_deref() == Some(e));

    let mut samples = Vec::new();
    for (c, dual_corner, back) in [(T, R, T), (B, L, B)] {
        for x in candidates(d, c) {
            let inverse = inverse_in(d, &x, c);
            let dual = antipode.then(|| inverse.as_ref().map(|v| d.phi(dual_corner, v))).flatten();
            let round_trip = dual.as_ref().map(|r| inverse_in(d, r, dual_corner).map(|ri| d.phi(back, &ri)) == Some(x.clone()));
            samples.push(IntegralSample { corner: c, element: x, inverse, dual, round_trip });
        }
    }
    for c in [T, B] {
        let of_c: Vec<&IntegralSample> = samples.iter().filter(|s| s.corner == c).collect();
        let invertible = of_c.iter().filter(|s| s.inverse.is_some()).count();
        report.fact(format!("{c}_⋆ samples"), format!("{invertible}/{}", of_c.len()));
        if let Some(first) = of_c.iter().find(|s| s.inverse.is_some()) {
            report.fact(format!("{c}_⋆ witness"), d.render(&first.element));
        }
        if antipode {
            let ok = of_c.iter().all(|s| s.round_trip.unwrap_or(true));
            let name = if c == T { "t ↦ Φ_R(t⁻¹) ↦ Φ_T(r⁻¹) is the identity" } else { "b ↦ Φ_L(b⁻¹) ↦ Φ_B(l⁻¹) is the identity" };
            report.check(name, ok);
        }
    }
    Ok(IntegralCheck { spaces, samples, report })
}

/// Rebuilds `⋆` from the vertical Hopf algebroid data `(∘, Δ_B, Δ_T, S, Φ_L)` in two ways.
pub fn hgd_round_trip(fr: &Frobenius) -> Result<Report, StructureError> {
    let d = fr.algebra();
    if !check_distributivity(fr).distributive() {
        return Err(StructureError::NotDistributive);
    }
    let s = solve_antipode(d)?.ok_or(StructureError::NoAntipode)?;
    let ub = &fr.dual_basis(B).pairs;
    let ut = &fr.dual_basis(T).pairs;
    let basis = basis_of(d);
    let mut first = true;
    let mut second = true;
    for a in &basis {
        for a2 in &basis {
            let star = d.hmul(a, a2);
            // a⋆a' = a'⁽²⁾ ∘ s_Lφ(S⁻¹(a'⁽¹⁾) ∘ a)
            let f1 = sum_pairs(d, ut, |u, v| d.vmul(v, &d.phi(L, &d.vmul(&s.apply_inverse(&d.hmul(a2, u)), a))));
            // a⋆a' = t_Lφ(a₍₂₎ ∘ S(a')) ∘ a₍₁₎
            let sa2 = s.apply(a2);
            let f2 = sum_pairs(d, ub, |u, v| d.vmul(&d.phis(&[R, B, L], &d.vmul(v, &sa2)), &d.hmul(a, u)));
            first &= f1 == star;
            second &= f2 == star;
        }
    }
    let mut rep = Report::new("round trip");
    let entries = basis.len() * basis.len();
    rep.check_with("a⋆a' = a'⁽²⁾∘s_Lφ(S⁻¹(a'⁽¹⁾)∘a)", first, format!("{entries} entries"));
    rep.check_with("a⋆a' = t_Lφ(a₍₂₎∘S(a'))∘a₍₁₎", second, format!("{entries} entries"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hopf_group_double, matrix_double, Group, Groupoid, groupoid_double};
    use crate::scalar::Field;

    fn distributive_instances() -> Vec<DoubleAlgebra> {
        vec![
            hopf_group_double(&Group::cyclic(2), Field::Rational).unwrap(),
            matrix_double(2).unwrap(),
            hopf_group_double(&Group::symmetric3(), Field::Rational).unwrap(),
            groupoid_double(&Groupoid::pair(2).disjoint_union(&Groupoid::from_group(&Group::cyclic(2))), Field::Rational).unwrap(),
        ]
    }

    #[test]
    fn extraction_verifies_both_hopf_algebroids() {
        for d in distributive_instances() {
            let fr = Frobenius::new(&d).unwrap();
            let h = extract_hopf_algebroids(&fr).unwrap();
            assert!(h.report.passed(), "{}", h.report);
        }
    }

    #[test]
    fn round_trip_rebuilds_the_horizontal_product() {
        for d in distributive_instances() {
            let fr = Frobenius::new(&d).unwrap();
            let rep = hgd_round_trip(&fr).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn group_unit_is_its_own_integral_inverse() {
        let d = hopf_group_double(&Group::cyclic(2), Field::Rational).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        let check = frobenius_integrals(&fr).unwrap();
        assert!(check.report.passed(), "{}", check.report);
        let first = &check.samples[0];
        assert_eq!(first.element, d.i());
        assert_eq!(first.inverse.as_deref(), Some(d.i()));
    }

    #[test]
    fn matrix_integrals_round_trip() {
        let d = matrix_double(2).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        let check = frobenius_integrals(&fr).unwrap();
        assert!(check.report.passed(), "{}", check.report);
        let first = &check.samples[0];
        assert!(first.inverse.is_some() && first.round_trip == Some(true));
    }
}
