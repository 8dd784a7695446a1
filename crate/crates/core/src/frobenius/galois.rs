use serde::Serialize;

use super::Frobenius;
use crate::double::Corner;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::{vector, Scalar};

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

type Bilinear<'a> = dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar> + 'a;

/// The four neighbouring pairs of corners, each carrying two Galois maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GaloisPair {
    RightBottom,
    LeftTop,
    LeftBottom,
    RightTop,
}

impl GaloisPair {
    pub const ALL: [GaloisPair; 4] = [GaloisPair::RightBottom, GaloisPair::LeftTop, GaloisPair::LeftBottom, GaloisPair::RightTop];

    pub fn corners(self) -> (Corner, Corner) {
        match self {
            GaloisPair::RightBottom => (R, B),
            GaloisPair::LeftTop => (L, T),
            GaloisPair::LeftBottom => (L, B),
            GaloisPair::RightTop => (R, T),
        }
    }

    /// Indices (1-based) of the two identities equivalent to invertibility of this pair.
    pub fn identities(self) -> [usize; 2] {
        match self {
            GaloisPair::RightBottom => [1, 2],
            GaloisPair::LeftTop => [3, 4],
            GaloisPair::LeftBottom => [5, 6],
            GaloisPair::RightTop => [7, 8],
        }
    }
}

/// `Γ_XY: A ⊗_X A → A ⊗_Y A` as a matrix between quotient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GaloisMap {
    pub from: Corner,
    pub to: Corner,
    pub matrix: Matrix,
    /// Whether every relation generator of the source maps to zero.
    pub well_defined: bool,
}

/// Both expressions of an index element and where it is supposed to live.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexElement {
    pub corner: Corner,
    pub from_dual_basis: Vec<Scalar>,
    pub from_units: Vec<Scalar>,
    pub in_expected_space: bool,
}

impl Frobenius {
    /// The representative tensor of `Γ_{from,to}(a ⊗ a')` in `A ⊗_k A`.
    fn gamma_pairs(&self, from: Corner, to: Corner, a: &[Scalar], a2: &[Scalar]) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
        let d = self.algebra();
        let v = |x: &[Scalar], y: &[Scalar]| d.vmul(x, y);
        let h = |x: &[Scalar], y: &[Scalar]| d.hmul(x, y);
        self.dual_basis(to)
            .pairs
            .iter()
            .map(|(x, y)| match (from, to) {
                (R, B) => (h(a, x), v(y, a2)),
                (B, R) => (h(a, x), v(y, a2)),
                (L, T) => (v(a, x), h(y, a2)),
                (T, L) => (v(a, x), h(y, a2)),
                (L, B) => (v(x, a2), h(y, a)),
                (B, L) => (h(x, a2), v(y, a)),
                (R, T) => (h(a2, x), v(a, y)),
                (T, R) => (v(a2, x), h(a, y)),
                _ => panic!("Γ_{from}{to} is not a neighbour pair"),
            })
            .collect()
    }

    pub fn galois_map(&self, from: Corner, to: Corner) -> GaloisMap {
        let d = self.algebra();
        let n = d.dim();
        let src = self.tensor(from);
        let tgt = self.tensor(to);
        let one = d.field().one();
        // Matrix on A ⊗_k A, one column per basis pair.
        let mut cols = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                let mut acc = tgt.zero_class();
                for (x, y) in self.gamma_pairs(from, to, &d.basis_vector(p), &d.basis_vector(q)) {
                    tgt.add_pair_class(&mut acc, &x, &y, &one);
                }
                cols.push(acc);
            }
        }
        let full = Matrix::from_columns(d.field(), tgt.dim(), &cols);
        let well_defined = src.relation_basis().iter().all(|r| vector::is_zero(&full.mul_vec(r)));
        let matrix = full.mul(&src.quotient().section_matrix());
        GaloisMap { from, to, matrix, well_defined }
    }

    /// Left-hand side of the Galois identity number `k` (1-based) evaluated at `a`.
    pub fn galois_identity_lhs(&self, k: usize, a: &[Scalar]) -> Vec<Scalar> {
        let d = self.algebra();
        let sum = |c: Corner, f: &Bilinear| {
            self.dual_basis(c).pairs.iter().fold(d.zero(), |acc, (x, y)| vector::add(&acc, &f(x, y)))
        };
        match k {
            1 => sum(B, &|u, v| d.hmul(u, &d.vmul(v, a))),
            2 => sum(R, &|x, y| d.vmul(&d.hmul(a, x), y)),
            3 => sum(T, &|u, v| d.hmul(&d.vmul(a, u), v)),
            4 => sum(L, &|x, y| d.vmul(x, &d.hmul(y, a))),
            5 => sum(B, &|u, v| d.hmul(&d.vmul(u, a), v)),
            6 => sum(L, &|x, y| d.vmul(&d.hmul(x, a), y)),
            7 => sum(T, &|u, v| d.hmul(u, &d.vmul(a, v))),
            8 => sum(R, &|x, y| d.vmul(x, &d.hmul(a, y))),
            _ => panic!("there are eight Galois identities"),
        }
    }

    /// Right-hand side of the Galois identity number `k`: a two-fold base composite.
    pub fn galois_identity_rhs(&self, k: usize, a: &[Scalar]) -> Vec<Scalar> {
        let chain = match k {
            1 => [T, R],
            2 => [L, B],
            3 => [B, L],
            4 => [R, T],
            5 => [T, L],
            6 => [R, B],
            7 => [B, R],
            8 => [L, T],
            _ => panic!("there are eight Galois identities"),
        };
        self.algebra().phis(&chain, a)
    }

    pub fn galois_identity_holds(&self, k: usize) -> bool {
        let d = self.algebra();
        (0..d.dim()).all(|j| {
            let a = d.basis_vector(j);
            self.galois_identity_lhs(k, &a) == self.galois_identity_rhs(k, &a)
        })
    }

    /// Whether both composites of the pair's Galois maps are identities (and both maps are well defined).
    pub fn galois_pair_invertible(&self, pair: GaloisPair) -> bool {
        let (x, y) = pair.corners();
        let f = self.galois_map(x, y);
        let g = self.galois_map(y, x);
        f.well_defined && g.well_defined && g.matrix.mul(&f.matrix).is_identity() && f.matrix.mul(&g.matrix).is_identity()
    }

    /// Evaluates the eight identities and compares them with invertibility of the Galois maps.
    pub fn galois_report(&self) -> Report {
        let mut rep = Report::new("galois");
        let identities: Vec<bool> = (1..=8).map(|k| self.galois_identity_holds(k)).collect();
        for (k, ok) in identities.iter().enumerate() {
            rep.check(format!("G{} holds", k + 1), *ok);
        }
        let mut all_invertible = true;
        for pair in GaloisPair::ALL {
            let (x, y) = pair.corners();
            let f = self.galois_map(x, y);
            let g = self.galois_map(y, x);
            rep.check(format!("Γ_{x}{y} and Γ_{y}{x} are well defined"), f.well_defined && g.well_defined);
            let inv = self.galois_pair_invertible(pair);
            all_invertible &= inv;
            let [i1, i2] = pair.identities();
            rep.fact(format!("Γ_{x}{y} ∘ Γ_{y}{x} identities"), inv.to_string());
            rep.fact(format!("G{i1}, G{i2} hold"), (identities[i1 - 1] && identities[i2 - 1]).to_string());
        }
        let all_identities = identities.iter().all(|&b| b);
        rep.check_with(
            "identities hold iff all Galois maps invert each other",
            all_identities == all_invertible,
            format!("identities={all_identities} invertible={all_invertible}"),
        );
        rep
    }

    /// The index elements of the four base maps, computed from the dual bases and from units.
    pub fn index_elements(&self) -> Vec<IndexElement> {
        let d = self.algebra();
        let ii = d.vmul(d.i(), d.i());
        let ee = d.hmul(d.e(), d.e());
        let zv = d.vertical().center();
        let zh = d.horizontal().center();
        [(L, d.phi(R, &ii), R, &zv), (R, d.phi(L, &ii), L, &zv), (B, d.phi(T, &ee), T, &zh), (T, d.phi(B, &ee), B, &zh)]
            .into_iter()
            .map(|(c, from_units, home, center)| {
                let from_dual_basis = self.index(c);
                let space = d.base_ideal(home).intersect(center);
                IndexElement { corner: c, in_expected_space: space.contains(&from_dual_basis), from_dual_basis, from_units }
            })
            .collect()
    }

    pub fn index_report(&self) -> Report {
        let d = self.algebra();
        let mut rep = Report::new("index");
        for ix in self.index_elements() {
            let c = ix.corner;
            rep.check(format!("Ind Φ_{c} computed two ways agrees"), ix.from_dual_basis == ix.from_units);
            rep.check(format!("Ind Φ_{c} lies in its base ideal and the center"), ix.in_expected_space);
            rep.fact(format!("Ind Φ_{c}"), d.render(&ix.from_dual_basis));
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hopf_group_double, matrix_double, Group};
    use crate::scalar::Field;

    #[test]
    fn matrix_galois_maps_are_bijections() {
        let d = matrix_double(2).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        let g = fr.galois_map(R, B);
        assert!(g.well_defined);
        assert_eq!(g.matrix.rows(), 8);
        assert_eq!(g.matrix.rank(), 8);
        let rep = fr.galois_report();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn index_is_n_times_unit() {
        for n in 2..=3 {
            let d = matrix_double(n).unwrap();
            let fr = Frobenius::new(&d).unwrap();
            let ix = &fr.index_elements()[0];
            let expected = vector::scale(&d.field().from_i64(n as i64), d.e());
            assert_eq!(ix.from_dual_basis, expected);
            assert!(fr.index_report().passed());
        }
        let d = hopf_group_double(&Group::cyclic(2), Field::Rational).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        assert_eq!(fr.index_elements()[0].from_dual_basis, vector::scale(&d.field().from_i64(2), d.e()));
    }

    #[test]
    fn group_left_dual_basis_is_g_tensor_g_inverse() {
        let g = Group::symmetric3();
        let d = hopf_group_double(&g, Field::Rational).unwrap();
        let fr = Frobenius::new(&d).unwrap();
        let t = fr.tensor(L);
        let mut expected = t.zero_class();
        for k in 0..6 {
            t.add_pair_class(&mut expected, &d.basis_vector(k), &d.basis_vector(g.inverse(k)), &d.field().one());
        }
        assert_eq!(fr.dual_basis(L).class, expected);
        // Γ_RB(i ⊗ e) = u_k ⊗ v_k = Δ_B(i).
        let gm = fr.galois_map(R, B);
        let lhs = gm.matrix.mul_vec(&fr.tensor(R).class_of(d.i(), d.e()));
        assert_eq!(lhs, fr.dual_basis(B).class);
        assert_eq!(lhs, fr.delta(B, d.i()));
    }
}
