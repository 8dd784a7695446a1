use super::FamilyError;
use crate::algebra::ProductTable;
use crate::double::DoubleAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{vector, Field, Scalar};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl Group {
    /// `table[g * order + h]` is the index of `gh`.
    pub fn from_table(order: usize, table: Vec<usize>, labels: Vec<String>) -> Result<Group, FamilyError> {
        if order == 0 {
            return Err(FamilyError::Group("empty group".into()));
        }
        if table.len() != order * order || table.iter().any(|&x| x >= order) {
            return Err(FamilyError::Group("table must have order² entries below the order".into()));
        }
        if labels.len() != order {
            return Err(FamilyError::Group("one label per element".into()));
        }
        let m = |g: usize, h: usize| table[g * order + h];
        let identity = (0..order)
            .find(|&u| (0..order).all(|g| m(u, g) == g && m(g, u) == g))
            .ok_or_else(|| FamilyError::Group("no identity element".into()))?;
        for g in 0..order {
            for h in 0..order {
                for k in 0..order {
                    if m(m(g, h), k) != m(g, m(h, k)) {
                        return Err(FamilyError::Group(format!("not associative at ({g}, {h}, {k})")));
                    }
                }
            }
        }
        let inverse = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| m(g, h) == identity && m(h, g) == identity)
                    .ok_or_else(|| FamilyError::Group(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Group { order, table, identity, inverse, labels })
    }

    pub fn cyclic(n: usize) -> Group {
        let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        let labels = (0..n).map(|k| if k == 0 { "1".to_string() } else { format!("g{k}") }).collect();
        Group::from_table(n, table, labels).expect("cyclic group table is valid")
    }

    pub fn trivial() -> Group {
        Group::cyclic(1)
    }

    /// The symmetric group on three letters, elements in lexicographic order of their images.
    pub fn symmetric3() -> Group {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let mut table = Vec::with_capacity(36);
        for p in &perms {
            for q in &perms {
                // (pq)(x) = p(q(x))
                table.push(index([p[q[0]], p[q[1]], p[q[2]]]));
            }
        }
        let labels = perms.iter().map(|p| format!("[{}{}{}]", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
        Group::from_table(6, table, labels).expect("S3 table is valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}

/// A finite groupoid; arrow `g` goes from `source[g]` to `target[g]` and `gh` is defined
/// when `source[g] == target[h]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    objects: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    compose: Vec<Option<usize>>,
    identities: Vec<usize>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl Groupoid {
    /// `compose(g, h)` is consulted only for composable pairs.
    pub fn new(
        objects: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        labels: Vec<String>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Groupoid, FamilyError> {
        let n = source.len();
        let bad = |m: String| FamilyError::Groupoid(m);
        if n == 0 || target.len() != n || labels.len() != n {
            return Err(bad("arrow data must be nonempty and of equal length".into()));
        }
        if source.iter().chain(&target).any(|&x| x >= objects) {
            return Err(bad("endpoint out of range".into()));
        }
        let mut table = vec![None; n * n];
        for g in 0..n {
            for h in 0..n {
                if source[g] == target[h] {
                    let gh = compose(g, h);
                    if gh >= n || source[gh] != source[h] || target[gh] != target[g] {
                        return Err(bad(format!("composite of {g} and {h} has wrong endpoints")));
                    }
                    table[g * n + h] = Some(gh);
                }
            }
        }
        let c = |g: usize, h: usize| table[g * n + h];
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if let (Some(gh), Some(hk)) = (c(g, h), c(h, k)) {
                        if c(gh, k) != c(g, hk) {
                            return Err(bad(format!("not associative at ({g}, {h}, {k})")));
                        }
                    }
                }
            }
        }
        let identities = (0..objects)
            .map(|x| {
                (0..n)
                    .find(|&u| {
                        source[u] == x
                            && target[u] == x
                            && (0..n).all(|g| (target[g] != x || c(u, g) == Some(g)) && (source[g] != x || c(g, u) == Some(g)))
                    })
                    .ok_or_else(|| bad(format!("object {x} has no identity")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| c(g, h) == Some(identities[target[g]]) && c(h, g) == Some(identities[source[g]]))
                    .ok_or_else(|| bad(format!("arrow {g} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Groupoid { objects, source, target, compose: table, identities, inverse, labels })
    }

    pub fn from_group(g: &Group) -> Groupoid {
        let n = g.order();
        Groupoid::new(1, vec![0; n], vec![0; n], g.labels().to_vec(), |a, b| g.mul(a, b)).expect("groups are groupoids")
    }

    /// The pair groupoid on `n` objects; arrow `(j, k)` (index `j * n + k`) goes from `k` to `j`.
    pub fn pair(n: usize) -> Groupoid {
        let arrows = n * n;
        let source = (0..arrows).map(|a| a % n).collect();
        let target = (0..arrows).map(|a| a / n).collect();
        let labels = (0..arrows).map(|a| format!("({},{})", a / n + 1, a % n + 1)).collect();
        Groupoid::new(n, source, target, labels, |g, h| (g / n) * n + h % n).expect("pair groupoid is valid")
    }

    pub fn disjoint_union(&self, other: &Groupoid) -> Groupoid {
        let n1 = self.arrows();
        let source = self.source.iter().copied().chain(other.source.iter().map(|&x| x + self.objects)).collect();
        let target = self.target.iter().copied().chain(other.target.iter().map(|&x| x + self.objects)).collect();
        let labels = self.labels.iter().cloned().chain(other.labels.iter().map(|l| format!("{l}'"))).collect();
        Groupoid::new(self.objects + other.objects, source, target, labels, |g, h| {
            if g < n1 {
                self.compose(g, h).expect("composable")
            } else {
                other.compose(g - n1, h - n1).expect("composable") + n1
            }
        })
        .expect("disjoint union of groupoids is a groupoid")
    }

    pub fn arrows(&self) -> usize {
        self.source.len()
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn source(&self, g: usize) -> usize {
        self.source[g]
    }

    pub fn target(&self, g: usize) -> usize {
        self.target[g]
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose[g * self.arrows() + h]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The inversion map `g ↦ g⁻¹` as a matrix; the expected antipode of the groupoid double algebra.
    pub fn inversion_matrix(&self, field: Field) -> Matrix {
        let n = self.arrows();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|g| vector::unit(field, n, self.inverse(g))).collect();
        Matrix::from_columns(field, n, &cols)
    }

    /// `Φ_B(g) = Σ {g' : t(g') = t(g)}` as a matrix.
    pub fn bottom_map_oracle(&self, field: Field) -> Matrix {
        self.endpoint_sum(field, |g, h| self.target(g) == self.target(h))
    }

    /// `Φ_T(g) = Σ {g' : s(g') = s(g)}` as a matrix.
    pub fn top_map_oracle(&self, field: Field) -> Matrix {
        self.endpoint_sum(field, |g, h| self.source(g) == self.source(h))
    }

    fn endpoint_sum(&self, field: Field, related: impl Fn(usize, usize) -> bool) -> Matrix {
        let n = self.arrows();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|g| (0..n).map(|h| if related(g, h) { field.one() } else { field.zero() }).collect())
            .collect();
        Matrix::from_columns(field, n, &cols)
    }
}

/// Arrows as basis, `∘` the composition (zero when not composable), `⋆` the diagonal product.
pub fn groupoid_double(g: &Groupoid, field: Field) -> Result<DoubleAlgebra, FamilyError> {
    let n = g.arrows();
    let mut e = vector::zeros(field, n);
    for x in 0..g.objects() {
        e[g.identity(x)] = field.one();
    }
    let vertical = ProductTable::from_fn(field, n, e, |a, b| match g.compose(a, b) {
        Some(c) => vector::unit(field, n, c),
        None => vector::zeros(field, n),
    })?;
    let horizontal = ProductTable::from_fn(field, n, vec![field.one(); n], |a, b| {
        if a == b {
            vector::unit(field, n, a)
        } else {
            vector::zeros(field, n)
        }
    })?;
    Ok(DoubleAlgebra::new(vertical, horizontal)?.with_labels(g.labels().to_vec()))
}

/// The group algebra with `⋆` the convolution `a ⋆ a' = a_(1) λ(S⁻¹(a') a_(2))`, where
/// `λ` is the coefficient of the identity and `Δg = g ⊗ g`.
pub fn hopf_group_double(g: &Group, field: Field) -> Result<DoubleAlgebra, FamilyError> {
    let n = g.order();
    let vertical = ProductTable::from_fn(field, n, vector::unit(field, n, g.identity()), |a, b| {
        vector::unit(field, n, g.mul(a, b))
    })?;
    let lambda = |x: usize| if x == g.identity() { field.one() } else { field.zero() };
    let horizontal = ProductTable::from_fn(field, n, vec![field.one(); n], |a, b| {
        // Δa = a ⊗ a and S⁻¹(b) = b⁻¹ on group elements.
        let coef = lambda(g.mul(g.inverse(b), a));
        vector::scale(&coef, &vector::unit(field, n, a))
    })?;
    Ok(DoubleAlgebra::new(vertical, horizontal)?.with_labels(g.labels().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::Corner;
    use crate::families::matrix_double;

    #[test]
    fn pair_groupoid_matches_matrix_double() {
        for n in 1..=3 {
            let g = groupoid_double(&Groupoid::pair(n), Field::Rational).unwrap();
            let m = matrix_double(n).unwrap();
            assert_eq!(g.vertical(), m.vertical());
            assert_eq!(g.horizontal(), m.horizontal());
        }
    }

    #[test]
    fn z2_top_map_is_one_plus_g() {
        let f = Field::Rational;
        let d = groupoid_double(&Groupoid::from_group(&Group::cyclic(2)), f).unwrap();
        for k in 0..2 {
            assert_eq!(d.phi(Corner::Top, &d.basis_vector(k)), vec![f.one(), f.one()]);
        }
    }

    #[test]
    fn disjoint_union_bottom_map() {
        let f = Field::Rational;
        let g = Groupoid::from_group(&Group::cyclic(2)).disjoint_union(&Groupoid::from_group(&Group::trivial()));
        let d = groupoid_double(&g, f).unwrap();
        assert_eq!(d.phi(Corner::Bottom, &d.basis_vector(1)), vec![f.one(), f.one(), f.zero()]);
        assert_eq!(*d.phi_matrix(Corner::Bottom), g.bottom_map_oracle(f));
        assert_eq!(*d.phi_matrix(Corner::Top), g.top_map_oracle(f));
    }

    #[test]
    fn group_horizontal_product_is_diagonal() {
        let f = Field::Rational;
        let d = hopf_group_double(&Group::cyclic(2), f).unwrap();
        assert_eq!(d.hmul(&d.basis_vector(1), &d.basis_vector(1)), d.basis_vector(1));
        assert_eq!(d.hmul(&d.basis_vector(0), &d.basis_vector(1)), d.zero());
        assert!(hopf_group_double(&Group::symmetric3(), f).is_ok());
        assert!(hopf_group_double(&Group::cyclic(2), Field::prime(2).unwrap()).is_ok());
    }
}
