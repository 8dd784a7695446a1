use serde::Serialize;

use crate::antipode::{solve_antipode, AntipodeMap};
use crate::double::{Corner, DoubleAlgebra, Symmetry};
use crate::frobenius::Frobenius;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::{vector, Scalar};

use super::{basis_of, StructureError};

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

/// The four base-ideal valued pairings between the vertical and horizontal algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairingKind {
    /// `⟨h, v⟩ = Φ_LΦ_B(h⋆v)`
    LB,
    /// `⟨v, h⟩ = Φ_BΦ_L(v∘h)`
    BL,
    /// `⟨v, h⟩ = Φ_RΦ_T(v⋆h)`
    RT,
    /// `⟨h, v⟩ = Φ_TΦ_R(h∘v)`
    TR,
}

impl PairingKind {
    pub const ALL: [PairingKind; 4] = [PairingKind::LB, PairingKind::BL, PairingKind::RT, PairingKind::TR];

    pub fn name(self) -> &'static str {
        match self {
            PairingKind::LB => "LB",
            PairingKind::BL => "BL",
            PairingKind::RT => "RT",
            PairingKind::TR => "TR",
        }
    }

    /// The base ideal the pairing takes values in.
    pub fn values(self) -> Corner {
        match self {
            PairingKind::LB => L,
            PairingKind::BL => B,
            PairingKind::RT => R,
            PairingKind::TR => T,
        }
    }

    pub fn evaluate(self, d: &DoubleAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        match self {
            PairingKind::LB => d.phis(&[L, B], &d.hmul(x, y)),
            PairingKind::BL => d.phis(&[B, L], &d.vmul(x, y)),
            PairingKind::RT => d.phis(&[R, T], &d.hmul(x, y)),
            PairingKind::TR => d.phis(&[T, R], &d.vmul(x, y)),
        }
    }
}

/// A pairing with its Gram matrix; entry `[j][k]` holds `⟨b_j, b_k⟩` in coordinates of the value ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct Pairing {
    pub kind: PairingKind,
    pub gram: Vec<Vec<Vec<Scalar>>>,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
}

impl Pairing {
    pub fn new(d: &DoubleAlgebra, kind: PairingKind) -> Pairing {
        let n = d.dim();
        let basis = basis_of(d);
        let values: Vec<Vec<Vec<Scalar>>> =
            basis.iter().map(|x| basis.iter().map(|y| kind.evaluate(d, x, y)).collect()).collect();
        let ideal = d.base_ideal(kind.values());
        let gram = values
            .iter()
            .map(|row| row.iter().map(|v| ideal.coordinates(v).expect("pairing lands in its base ideal")).collect())
            .collect();
        // Column j of the left matrix stacks ⟨b_j, b_k⟩ over k; the right matrix swaps the roles.
        let stack = |left: bool| {
            let cols: Vec<Vec<Scalar>> = (0..n)
                .map(|j| (0..n).flat_map(|k| if left { values[j][k].clone() } else { values[k][j].clone() }).collect())
                .collect();
            Matrix::from_columns(d.field(), n * n, &cols).rank() == n
        };
        Pairing { kind, gram, left_nondegenerate: stack(true), right_nondegenerate: stack(false) }
    }
}

/// The seven pairing laws of the right dual of `V_B`, for `⟨v, h⟩ = Φ_BΦ_L(v∘h)`, evaluated on basis
/// elements and a basis of `B`.
pub fn right_dual_laws(fr: &Frobenius) -> [bool; 7] {
    let d = fr.algebra();
    let basis = basis_of(d);
    let base = d.base_ideal(B).basis();
    let p = |v: &[Scalar], h: &[Scalar]| d.phis(&[B, L], &d.vmul(v, h));
    let v = |x: &[Scalar], y: &[Scalar]| d.vmul(x, y);
    let h = |x: &[Scalar], y: &[Scalar]| d.hmul(x, y);
    let ub = &fr.dual_basis(B).pairs;
    let xl = &fr.dual_basis(L).pairs;
    let sum = |terms: Vec<Vec<Scalar>>| terms.iter().fold(d.zero(), |acc, t| vector::add(&acc, t));
    let mut ok = [true; 7];
    for a in &basis {
        for g in &basis {
            for g2 in &basis {
                // ⟨a, φψ⟩ = ⟨a₍₁₎·⟨a₍₂₎, φ⟩, ψ⟩
                ok[0] &= p(a, &h(g2, g)) == sum(ub.iter().map(|(u, w)| p(&h(&h(a, u), &p(w, g)), g2)).collect());
                // ⟨aa', ψ⟩ = ⟨a, ⟨a', ψ⁽¹⁾⟩·ψ⁽²⁾⟩
                ok[6] &= p(&v(a, g2), g) == sum(xl.iter().map(|(x, y)| p(a, &h(&p(g2, &v(g, x)), y))).collect());
            }
            for b in base {
                ok[1] &= p(a, &h(&d.phis(&[T, L], b), g)) == h(&p(a, g), b);
                ok[2] &= p(a, &h(b, g)) == p(&v(a, &d.phi(L, b)), g);
                ok[3] &= p(&v(&d.phi(L, b), a), g) == h(b, &p(a, g));
                ok[4] &= p(&v(&d.phi(R, b), a), g) == p(a, &h(g, &d.phis(&[T, L], b)));
                ok[5] &= p(&v(a, &d.phi(R, b)), g) == p(a, &h(g, b));
            }
        }
    }
    ok
}

/// Whether `⟨,⟩_BL` of `image` equals the pairing `target` of `d`, possibly with swapped arguments.
fn reproduces(d: &DoubleAlgebra, image: &DoubleAlgebra, target: PairingKind, swapped: bool) -> bool {
    let basis = basis_of(d);
    basis.iter().all(|x| {
        basis.iter().all(|y| {
            let ours = PairingKind::BL.evaluate(image, x, y);
            ours == if swapped { target.evaluate(d, y, x) } else { target.evaluate(d, x, y) }
        })
    })
}

/// The four pairings, their Gram matrices, the seven laws for each of them, and the antipode relations.
pub fn pairings(fr: &Frobenius) -> Result<(Vec<Pairing>, Report), StructureError> {
    let d = fr.algebra();
    let s = solve_antipode(d)?.ok_or(StructureError::NoAntipode)?;
    let mut rep = Report::new("pairings");
    let all: Vec<Pairing> = PairingKind::ALL.iter().map(|&k| Pairing::new(d, k)).collect();
    for p in &all {
        rep.check(format!("⟨,⟩_{} is nondegenerate on both sides", p.kind.name()), p.left_nondegenerate && p.right_nondegenerate);
    }
    // The laws are stated for ⟨,⟩_BL; images under the symmetries of the square carry them to the others.
    let images: [(&str, &[Symmetry], PairingKind, bool); 4] = [
        ("A", &[], PairingKind::BL, false),
        ("A^{op,coop}", &[Symmetry::Op, Symmetry::Coop], PairingKind::TR, true),
        ("A^D", &[Symmetry::Dual], PairingKind::LB, false),
        ("(A^D)^{op,coop}", &[Symmetry::Dual, Symmetry::Op, Symmetry::Coop], PairingKind::RT, true),
    ];
    for (name, syms, target, swapped) in images {
        let image = syms.iter().fold(d.clone(), |acc, &s| acc.symmetry(s));
        let image_fr = Frobenius::new(&image)?;
        let label = target.name();
        rep.check(format!("⟨,⟩_BL of {name} is ⟨,⟩_{label}"), reproduces(d, &image, target, swapped));
        for (row, ok) in right_dual_laws(&image_fr).iter().enumerate() {
            rep.check(format!("pairing law {} holds for ⟨,⟩_{label}", row + 1), *ok);
        }
    }
    let (lb, rt) = intertwining(d, &s);
    rep.check("S⟨h,v⟩_LB = ⟨S v, S h⟩_RT", lb);
    rep.check("S⟨v,h⟩_BL = ⟨S h, S v⟩_TR", rt);
    Ok((all, rep))
}

fn intertwining(d: &DoubleAlgebra, s: &AntipodeMap) -> (bool, bool) {
    let basis = basis_of(d);
    let mut first = true;
    let mut second = true;
    for x in &basis {
        for y in &basis {
            let (sx, sy) = (s.apply(x), s.apply(y));
            first &= s.apply(&PairingKind::LB.evaluate(d, x, y)) == PairingKind::RT.evaluate(d, &sy, &sx);
            second &= s.apply(&PairingKind::BL.evaluate(d, x, y)) == PairingKind::TR.evaluate(d, &sy, &sx);
        }
    }
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hopf_group_double, matrix_double, Group};
    use crate::scalar::Field;

    #[test]
    fn group_pairing_is_nondegenerate() {
        let d = hopf_group_double(&Group::cyclic(2), Field::Rational).unwrap();
        let p = Pairing::new(&d, PairingKind::LB);
        assert!(p.left_nondegenerate && p.right_nondegenerate);
        assert_eq!(p.gram.len(), 2);
        let fr = Frobenius::new(&d).unwrap();
        let (_, rep) = pairings(&fr).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn unit_chase() {
        let d = matrix_double(2).unwrap();
        assert_eq!(PairingKind::BL.evaluate(&d, d.i(), d.e()), d.i());
    }

    #[test]
    fn matrix_and_symmetric_group_satisfy_all_laws() {
        for d in [matrix_double(2).unwrap(), hopf_group_double(&Group::symmetric3(), Field::Rational).unwrap()] {
            let fr = Frobenius::new(&d).unwrap();
            let (all, rep) = pairings(&fr).unwrap();
            assert_eq!(all.len(), 4);
            assert!(rep.passed(), "{rep}");
        }
    }
}
