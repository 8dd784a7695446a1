//! Structural facts about the base maps: the three-fold composite identities, the restriction
//! isomorphisms between base ideals, integral spaces, Nakayama twists and base inverses.

use serde::Serialize;

use super::{Corner, DoubleAlgebra, DoubleError, Product};
use crate::linalg::{kernel, solve_linear, Matrix, Subspace};
use crate::report::Report;
use crate::scalar::Scalar;

use Corner::{Bottom as B, Left as L, Right as R, Top as T};

/// A base map restricted to one base ideal, compared against the isomorphism it should be.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseRestriction {
    pub map: Corner,
    pub domain: Corner,
    pub codomain: Corner,
    /// Whether the map reverses the order of products.
    pub anti: bool,
    pub bijective: bool,
    pub multiplicative: bool,
    pub inverse_ok: bool,
}

impl BaseRestriction {
    pub fn holds(&self) -> bool {
        self.bijective && self.multiplicative && self.inverse_ok
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralSpace {
    /// The subscript of the integral space; `I_R` is expected to coincide with `L` and so on.
    pub index: Corner,
    pub space: Subspace,
    pub base: Corner,
    /// `base ⊆ space ⊆ centralizer`.
    pub sandwich: bool,
    pub equals_base: bool,
}

impl Corner {
    /// The base ideal that the integral space with this subscript sandwiches.
    fn integral_partner(self) -> Corner {
        match self {
            R => L,
            L => R,
            T => B,
            B => T,
        }
    }
}

impl DoubleAlgebra {
    fn sub_basis(&self, c: Corner) -> Vec<Vec<Scalar>> {
        self.base_ideal(c).basis().to_vec()
    }

    fn all_basis(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|k| self.basis_vector(k)).collect()
    }

    /// Restriction of `Φ_map` to `domain`, expected to be an (anti-)isomorphism onto `codomain`
    /// with inverse `Φ_domain` restricted to `codomain`.
    pub fn base_restriction(&self, map: Corner, domain: Corner, codomain: Corner, anti: bool) -> BaseRestriction {
        let dom = self.base_ideal(domain);
        let cod = self.base_ideal(codomain);
        let image = dom.image_under(self.phi_matrix(map));
        let bijective = image == *cod && dom.dim() == cod.dim();
        let pd = domain.product();
        let pc = codomain.product();
        let basis = dom.basis();
        let mut multiplicative = true;
        for x in basis {
            for y in basis {
                let lhs = self.phi(map, &self.mul(pd, x, y));
                let (fx, fy) = (self.phi(map, x), self.phi(map, y));
                let rhs = if anti { self.mul(pc, &fy, &fx) } else { self.mul(pc, &fx, &fy) };
                if lhs != rhs {
                    multiplicative = false;
                }
            }
        }
        let inverse_ok = basis.iter().all(|x| self.phis(&[domain, map], x) == *x)
            && cod.basis().iter().all(|y| self.phis(&[map, domain], y) == *y);
        BaseRestriction { map, domain, codomain, anti, bijective, multiplicative, inverse_ok }
    }

    /// The four restriction isomorphisms between neighbouring base ideals.
    pub fn base_restrictions(&self) -> Vec<BaseRestriction> {
        vec![
            self.base_restriction(L, B, L, false),
            self.base_restriction(B, R, B, true),
            self.base_restriction(R, T, R, false),
            self.base_restriction(T, L, T, true),
        ]
    }

    /// The integral space `I_index`, computed as a kernel over all basis elements.
    pub fn integral_space(&self, index: Corner) -> IntegralSpace {
        let n = self.dim();
        let f = self.field();
        // For each basis a, d_a = a - projection(a); the integral space is where the
        // corresponding one-sided multiplication by d_a vanishes.
        let (table, proj, right): (_, &[Corner], bool) = match index {
            R => (self.horizontal(), &[B, R][..], true),
            L => (self.horizontal(), &[B, L][..], false),
            T => (self.vertical(), &[L, T][..], true),
            B => (self.vertical(), &[L, B][..], false),
        };
        let mut rows = Vec::with_capacity(n * n);
        for a in self.all_basis() {
            let d = crate::scalar::vector::sub(&a, &self.phis(proj, &a));
            let m = if right { table.right_mul_matrix(&d) } else { table.left_mul_matrix(&d) };
            rows.extend(m.row_vectors());
        }
        let space = kernel(&Matrix::from_rows(f, n, rows));
        let base = index.integral_partner();
        let centralizer = match base.product() {
            Product::Vertical => self.vertical().centralizer(self.base_ideal(index)),
            Product::Horizontal => self.horizontal().centralizer(self.base_ideal(index)),
        };
        let sandwich = self.base_ideal(base).is_subspace_of(&space) && space.is_subspace_of(&centralizer);
        let equals_base = space == *self.base_ideal(base);
        IntegralSpace { index, space, base, sandwich, equals_base }
    }

    /// The Nakayama twist restricted to a base ideal: `ν_L` acts on `R`, `ν_R` on `L`,
    /// `ν_B` on `T` and `ν_T` on `B`.
    pub fn nakayama_on_base(&self, c: Corner) -> Matrix {
        let chain: [Corner; 4] = match c {
            L => [R, B, L, T],
            R => [L, B, R, T],
            B => [T, L, B, R],
            T => [B, L, T, R],
        };
        self.phis_matrix(&chain)
    }

    /// Checks `Φ_c(a · x) = Φ_c(ν_c(x) · a)` for all basis `a` and a basis of the twisted ideal.
    pub fn nakayama_on_base_holds(&self, c: Corner) -> bool {
        let domain = match c {
            L => R,
            R => L,
            B => T,
            T => B,
        };
        let nu = self.nakayama_on_base(c);
        let p = c.product();
        self.base_ideal(domain).basis().iter().all(|x| {
            let nx = nu.mul_vec(x);
            self.all_basis().iter().all(|a| self.phi(c, &self.mul(p, a, x)) == self.phi(c, &self.mul(p, &nx, a)))
        })
    }

    /// Two-sided inverse of `x` in the ambient algebra of the corner (∘ for L/R, ⋆ for B/T).
    /// Errors if `x` is outside the base ideal.
    pub fn invertibility_in_base(&self, x: &[Scalar], c: Corner) -> Result<Option<Vec<Scalar>>, DoubleError> {
        if !self.base_ideal(c).contains(x) {
            return Err(DoubleError::NotInBase(self.render(x), c));
        }
        let table = self.table(c.product());
        let unit = table.unit();
        let Some(v) = solve_linear(&table.left_mul_matrix(x), unit) else {
            return Ok(None);
        };
        if table.multiply(&v, x) != unit {
            return Ok(None);
        }
        Ok(Some(v))
    }

    /// The two expressions for the inverse inside the base ideal, given an ambient inverse `v`.
    pub fn base_inverse_formulas(&self, c: Corner, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let (p, q) = match c {
            R => (T, B),
            L => (T, B),
            B => (R, L),
            T => (R, L),
        };
        (self.phis(&[c, p], v), self.phis(&[c, q], v))
    }

    /// Verifies the structural lemmas about base maps and base ideals.
    pub fn check_base_lemmas(&self) -> Report {
        let mut rep = Report::new("base");
        let v = self.vertical();
        let h = self.horizontal();
        let n = self.dim();

        for c in Corner::ALL {
            let table = self.table(c.product());
            let ok = table.check_subalgebra(self.base_ideal(c)).is_ok();
            rep.check(format!("{c} is a unital subalgebra for {}", c.product().symbol()), ok);
        }
        // L, R are one-sided ideals of H; B, T of V.
        let ideal = |c: Corner, table: &crate::algebra::ProductTable, left: bool| {
            let s = self.base_ideal(c);
            s.basis().iter().all(|x| {
                (0..n).all(|k| {
                    let y = if left { table.basis_times(k, x) } else { table.multiply_by_basis(x, k) };
                    s.contains(&y)
                })
            })
        };
        rep.check("L is a left ideal of H", ideal(L, h, true));
        rep.check("R is a right ideal of H", ideal(R, h, false));
        rep.check("B is a left ideal of V", ideal(B, v, true));
        rep.check("T is a right ideal of V", ideal(T, v, false));

        for c in Corner::ALL {
            let p = c.product();
            let base = self.sub_basis(c);
            let ok = base.iter().all(|x| {
                self.all_basis().iter().all(|a| {
                    let fa = self.phi(c, a);
                    self.phi(c, &self.mul(p, x, a)) == self.mul(p, x, &fa)
                        && self.phi(c, &self.mul(p, a, x)) == self.mul(p, &fa, x)
                })
            });
            rep.check(format!("Φ_{c} is a {c}-bimodule map"), ok);
        }

        for (x, y) in [(L, B), (B, L), (B, R), (R, B), (R, T), (T, R), (T, L), (L, T)] {
            let lhs = self.phis_matrix(&[x, y, x]);
            rep.check(format!("Φ_{x}Φ_{y}Φ_{x} = Φ_{x}"), lhs == *self.phi_matrix(x));
        }
        for (x, y) in [(L, R), (B, T)] {
            rep.check(format!("Φ_{x}Φ_{y} = Φ_{y}Φ_{x}"), self.phis_matrix(&[x, y]) == self.phis_matrix(&[y, x]));
        }

        for r in self.base_restrictions() {
            let target = if r.anti { format!("{}^op", r.codomain) } else { r.codomain.to_string() };
            rep.check_with(
                format!("Φ_{}|_{}: {} → {} is an isomorphism", r.map, r.domain, r.domain, target),
                r.holds(),
                format!("bijective={} multiplicative={} inverse={}", r.bijective, r.multiplicative, r.inverse_ok),
            );
        }

        let commute = |a: Corner, b: Corner, p: Product| {
            self.base_ideal(a).basis().iter().all(|x| {
                self.base_ideal(b).basis().iter().all(|y| self.mul(p, x, y) == self.mul(p, y, x))
            })
        };
        rep.check("L and R commute in V", commute(L, R, Product::Vertical));
        rep.check("B and T commute in H", commute(B, T, Product::Horizontal));

        let zv = v.center();
        let zh = h.center();
        let bt = self.base_ideal(B).intersect(self.base_ideal(T));
        let lr = self.base_ideal(L).intersect(self.base_ideal(R));
        let center_isos = [
            ("L∩Z(V) ≅ B∩T", B, self.base_ideal(L).intersect(&zv), bt.clone(), Product::Vertical),
            ("R∩Z(V) ≅ B∩T", T, self.base_ideal(R).intersect(&zv), bt.clone(), Product::Vertical),
            ("B∩Z(H) ≅ L∩R", L, self.base_ideal(B).intersect(&zh), lr.clone(), Product::Horizontal),
            ("T∩Z(H) ≅ L∩R", R, self.base_ideal(T).intersect(&zh), lr.clone(), Product::Horizontal),
            ("L∩R∩Z(V) ≅ B∩T∩Z(H)", B, lr.intersect(&zv), bt.intersect(&zh), Product::Vertical),
        ];
        for (name, map, dom, cod, p) in center_isos {
            let ok = self.restricted_iso(map, &dom, &cod, p);
            rep.check_with(name, ok, format!("via Φ_{map}, dim {}", dom.dim()));
        }

        let f = self.field();
        rep.fact("dim L", self.base_ideal(L).dim().to_string());
        rep.fact("dim R", self.base_ideal(R).dim().to_string());
        rep.fact("dim B", self.base_ideal(B).dim().to_string());
        rep.fact("dim T", self.base_ideal(T).dim().to_string());
        let connected = bt == Subspace::span(f, n, [self.i().to_vec()]);
        let coconnected = lr == Subspace::span(f, n, [self.e().to_vec()]);
        rep.fact("connected", connected.to_string());
        rep.fact("coconnected", coconnected.to_string());

        let nondegenerate = Corner::ALL.iter().all(|&c| self.form_nondegenerate(c));
        rep.fact("base forms nondegenerate", nondegenerate.to_string());
        for c in [R, L, T, B] {
            let ispace = self.integral_space(c);
            rep.check(format!("{} ⊆ I_{c} ⊆ centralizer of {c}", ispace.base), ispace.sandwich);
            if nondegenerate {
                rep.check(format!("I_{c} = {}", ispace.base), ispace.equals_base);
            }
        }

        for c in Corner::ALL {
            rep.check(format!("Nakayama twist ν_{c} on the base"), self.nakayama_on_base_holds(c));
        }

        for c in Corner::ALL {
            let mut samples = self.sub_basis(c);
            samples.push(self.unit(c.product()).to_vec());
            let mut ok = true;
            for x in &samples {
                let inv = self.invertibility_in_base(x, c).expect("sample lies in the base ideal");
                if let Some(v) = inv {
                    let (p, q) = self.base_inverse_formulas(c, &v);
                    ok &= self.base_ideal(c).contains(&v) && p == v && q == v;
                }
            }
            rep.check(format!("inverses of elements of {c} lie in {c}"), ok);
        }
        rep
    }

    fn restricted_iso(&self, map: Corner, dom: &Subspace, cod: &Subspace, p: Product) -> bool {
        if dom.dim() != cod.dim() || dom.image_under(self.phi_matrix(map)) != *cod {
            return false;
        }
        let q = p.other();
        dom.basis().iter().all(|x| {
            dom.basis().iter().all(|y| {
                self.phi(map, &self.mul(p, x, y)) == self.mul(q, &self.phi(map, x), &self.phi(map, y))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hopf_group_double, matrix_double, Group};

    #[test]
    fn matrix_double_base_lemmas_hold() {
        let d = matrix_double(2).unwrap();
        let rep = d.check_base_lemmas();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.facts.iter().find(|f| f.0 == "connected").unwrap().1, "true");
        let ir = d.integral_space(R);
        assert_eq!(ir.space, *d.base_ideal(L));
        assert_eq!(ir.space.dim(), 2);
    }

    #[test]
    fn e_is_its_own_inverse_and_phi_b_of_e11_is_not_invertible() {
        let d = matrix_double(2).unwrap();
        assert_eq!(d.invertibility_in_base(d.e(), R).unwrap(), Some(d.e().to_vec()));
        let x = d.phi(B, &d.basis_vector(0));
        assert_eq!(d.invertibility_in_base(&x, B).unwrap(), None);
        assert!(d.invertibility_in_base(&d.basis_vector(1), L).is_err());
    }

    #[test]
    fn group_double_is_biconnected() {
        let d = hopf_group_double(&Group::cyclic(2), crate::scalar::Field::Rational).unwrap();
        let rep = d.check_base_lemmas();
        assert!(rep.passed(), "{rep}");
        for c in [L, R, B, T] {
            assert_eq!(d.base_ideal(c).dim(), 1);
        }
        // i is its own ⋆-inverse in B.
        assert_eq!(d.invertibility_in_base(d.i(), B).unwrap(), Some(d.i().to_vec()));
    }
}
