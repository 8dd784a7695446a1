use std::collections::BTreeMap;

use super::FamilyError;
use crate::algebra::ProductTable;
use crate::double::{check_axioms, AxiomReport, DoubleAlgebra};
use crate::scalar::{vector, Field};

/// A finite double category given by explicit composition tables on its 2-cells.
///
/// Horizontal 1-cells, vertical 1-cells and 0-cells are themselves 2-cells (identity cells).
/// `c ∘ d` is defined when `top(c) == bottom(d)`; `c ⋆ d` when `right(c) == left(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCategory {
    labels: Vec<String>,
    bottom: Vec<usize>,
    top: Vec<usize>,
    left: Vec<usize>,
    right: Vec<usize>,
    vcomp: Vec<Option<usize>>,
    hcomp: Vec<Option<usize>>,
    horizontal_cells: Vec<usize>,
    vertical_cells: Vec<usize>,
    objects: Vec<usize>,
}

/// Result of building the algebra of a double category: the axiom verdict next to the
/// independent groupoid criterion.
#[derive(Clone, Debug)]
pub struct DoubleCategoryOutcome {
    pub axioms: AxiomReport,
    pub groupoids: bool,
    /// Labels of 1-cells without a two-sided inverse.
    pub non_invertible: Vec<String>,
    pub algebra: Option<DoubleAlgebra>,
}

impl DoubleCategory {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        labels: Vec<String>,
        bottom: Vec<usize>,
        top: Vec<usize>,
        left: Vec<usize>,
        right: Vec<usize>,
        vcomp: Vec<Option<usize>>,
        hcomp: Vec<Option<usize>>,
    ) -> Result<DoubleCategory, FamilyError> {
        let n = labels.len();
        let bad = |m: String| FamilyError::DoubleCategory(m);
        if n == 0 || [bottom.len(), top.len(), left.len(), right.len()].iter().any(|&l| l != n) {
            return Err(bad("boundary maps must have one entry per cell".into()));
        }
        if vcomp.len() != n * n || hcomp.len() != n * n {
            return Err(bad("composition tables must have cells² entries".into()));
        }
        if bottom.iter().chain(&top).chain(&left).chain(&right).any(|&x| x >= n)
            || vcomp.iter().chain(&hcomp).flatten().any(|&x| x >= n)
        {
            return Err(bad("cell index out of range".into()));
        }
        let horizontal_cells: Vec<usize> = (0..n).filter(|&c| bottom[c] == c && top[c] == c).collect();
        let vertical_cells: Vec<usize> = (0..n).filter(|&c| left[c] == c && right[c] == c).collect();
        let objects: Vec<usize> = horizontal_cells.iter().copied().filter(|c| vertical_cells.contains(c)).collect();
        for c in 0..n {
            for (name, m) in [("bottom", &bottom), ("top", &top)] {
                if !horizontal_cells.contains(&m[c]) {
                    return Err(bad(format!("{name} of {} is not a horizontal 1-cell", labels[c])));
                }
            }
            for (name, m) in [("left", &left), ("right", &right)] {
                if !vertical_cells.contains(&m[c]) {
                    return Err(bad(format!("{name} of {} is not a vertical 1-cell", labels[c])));
                }
            }
        }
        let dc = DoubleCategory { labels, bottom, top, left, right, vcomp, hcomp, horizontal_cells, vertical_cells, objects };
        dc.validate()?;
        Ok(dc)
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let n = self.cells();
        let bad = |m: String| FamilyError::DoubleCategory(m);
        for c in 0..n {
            for d in 0..n {
                if self.vcomp(c, d).is_some() != (self.top[c] == self.bottom[d]) {
                    return Err(bad(format!("vertical composability of ({c}, {d}) disagrees with boundaries")));
                }
                if self.hcomp(c, d).is_some() != (self.right[c] == self.left[d]) {
                    return Err(bad(format!("horizontal composability of ({c}, {d}) disagrees with boundaries")));
                }
                if let Some(x) = self.vcomp(c, d) {
                    let ok = self.bottom[x] == self.bottom[c]
                        && self.top[x] == self.top[d]
                        && Some(self.left[x]) == self.vcomp(self.left[c], self.left[d])
                        && Some(self.right[x]) == self.vcomp(self.right[c], self.right[d]);
                    if !ok {
                        return Err(bad(format!("vertical composite of ({c}, {d}) has wrong boundary")));
                    }
                }
                if let Some(x) = self.hcomp(c, d) {
                    let ok = self.left[x] == self.left[c]
                        && self.right[x] == self.right[d]
                        && Some(self.bottom[x]) == self.hcomp(self.bottom[c], self.bottom[d])
                        && Some(self.top[x]) == self.hcomp(self.top[c], self.top[d]);
                    if !ok {
                        return Err(bad(format!("horizontal composite of ({c}, {d}) has wrong boundary")));
                    }
                }
            }
            if self.vcomp(self.bottom[c], c) != Some(c) || self.vcomp(c, self.top[c]) != Some(c) {
                return Err(bad(format!("horizontal 1-cells are not vertical identities at {c}")));
            }
            if self.hcomp(self.left[c], c) != Some(c) || self.hcomp(c, self.right[c]) != Some(c) {
                return Err(bad(format!("vertical 1-cells are not horizontal identities at {c}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for (name, comp) in [("vertical", &self.vcomp), ("horizontal", &self.hcomp)] {
                        let m = |x: usize, y: usize| comp[x * n + y];
                        let lhs = m(a, b).and_then(|ab| m(ab, c));
                        let rhs = m(b, c).and_then(|bc| m(a, bc));
                        if lhs != rhs {
                            return Err(bad(format!("{name} composition not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        }
        // Interchange: (a ⋆ b) ∘ (c ⋆ d) = (a ∘ c) ⋆ (b ∘ d) whenever both sides are defined.
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.hcomp(a, b) else { continue };
                for c in 0..n {
                    let Some(ac) = self.vcomp(a, c) else { continue };
                    for d in 0..n {
                        let (Some(cd), Some(bd)) = (self.hcomp(c, d), self.vcomp(b, d)) else { continue };
                        if self.vcomp(ab, cd) != self.hcomp(ac, bd) {
                            return Err(bad(format!("interchange fails at ({a}, {b}, {c}, {d})")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Squares whose corners are points of a set, with horizontal edges drawn from one
    /// preorder and vertical edges from another. Both relations must be reflexive and transitive.
    pub fn from_preorders(points: usize, horizontal: &[(usize, usize)], vertical: &[(usize, usize)]) -> Result<DoubleCategory, FamilyError> {
        let h: Vec<(usize, usize)> = horizontal.to_vec();
        let v: Vec<(usize, usize)> = vertical.to_vec();
        for x in 0..points {
            if !h.contains(&(x, x)) || !v.contains(&(x, x)) {
                return Err(FamilyError::DoubleCategory("relations must be reflexive".into()));
            }
        }
        // A square is (bottom-left, bottom-right, top-left, top-right).
        let mut squares = Vec::new();
        for &(bl, br) in &h {
            for &(tl, tr) in &h {
                if v.contains(&(bl, tl)) && v.contains(&(br, tr)) {
                    squares.push((bl, br, tl, tr));
                }
            }
        }
        squares.sort_unstable();
        let index: BTreeMap<(usize, usize, usize, usize), usize> = squares.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let n = squares.len();
        let find = |s| index.get(&s).copied();
        let missing = || FamilyError::DoubleCategory("relations must be transitive".into());
        let mut bottom = Vec::with_capacity(n);
        let mut top = Vec::with_capacity(n);
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for &(bl, br, tl, tr) in &squares {
            bottom.push(find((bl, br, bl, br)).ok_or_else(missing)?);
            top.push(find((tl, tr, tl, tr)).ok_or_else(missing)?);
            left.push(find((bl, bl, tl, tl)).ok_or_else(missing)?);
            right.push(find((br, br, tr, tr)).ok_or_else(missing)?);
        }
        let mut vcomp = vec![None; n * n];
        let mut hcomp = vec![None; n * n];
        for (a, &(bl, br, tl, tr)) in squares.iter().enumerate() {
            for (b, &(bl2, br2, tl2, tr2)) in squares.iter().enumerate() {
                if (tl, tr) == (bl2, br2) {
                    vcomp[a * n + b] = Some(find((bl, br, tl2, tr2)).ok_or_else(missing)?);
                }
                if (br, tr) == (bl2, tl2) {
                    hcomp[a * n + b] = Some(find((bl, br2, tl, tr2)).ok_or_else(missing)?);
                }
            }
        }
        let labels = squares.iter().map(|&(a, b, c, d)| format!("[{a}{b}|{c}{d}]")).collect();
        DoubleCategory::new(labels, bottom, top, left, right, vcomp, hcomp)
    }

    /// One 0-cell and nothing else.
    pub fn trivial() -> DoubleCategory {
        DoubleCategory::from_preorders(1, &[(0, 0)], &[(0, 0)]).expect("trivial double category")
    }

    pub fn cells(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vcomp(&self, c: usize, d: usize) -> Option<usize> {
        self.vcomp[c * self.cells() + d]
    }

    pub fn hcomp(&self, c: usize, d: usize) -> Option<usize> {
        self.hcomp[c * self.cells() + d]
    }

    pub fn horizontal_cells(&self) -> &[usize] {
        &self.horizontal_cells
    }

    pub fn vertical_cells(&self) -> &[usize] {
        &self.vertical_cells
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    /// 1-cells lacking a two-sided inverse in their category.
    pub fn non_invertible_one_cells(&self) -> Vec<usize> {
        let invertible = |x: usize, cells: &[usize], comp: &dyn Fn(usize, usize) -> Option<usize>| {
            cells.iter().any(|&y| {
                matches!(comp(x, y), Some(z) if self.objects.contains(&z)) && matches!(comp(y, x), Some(z) if self.objects.contains(&z))
            })
        };
        let h = |x, y| self.hcomp(x, y);
        let v = |x, y| self.vcomp(x, y);
        let mut out: Vec<usize> = self.horizontal_cells.iter().copied().filter(|&x| !invertible(x, &self.horizontal_cells, &h)).collect();
        out.extend(self.vertical_cells.iter().copied().filter(|&x| !invertible(x, &self.vertical_cells, &v)));
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// The algebra spanned by 2-cells, with uncomposable products set to zero.
pub fn double_category_double(dc: &DoubleCategory, field: Field) -> Result<DoubleCategoryOutcome, FamilyError> {
    let n = dc.cells();
    let mut e = vector::zeros(field, n);
    for &h in dc.horizontal_cells() {
        e[h] = field.one();
    }
    let mut i = vector::zeros(field, n);
    for &v in dc.vertical_cells() {
        i[v] = field.one();
    }
    let basis_or_zero = |x: Option<usize>| match x {
        Some(c) => vector::unit(field, n, c),
        None => vector::zeros(field, n),
    };
    let vertical = ProductTable::from_fn(field, n, e, |a, b| basis_or_zero(dc.vcomp(a, b)))?;
    let horizontal = ProductTable::from_fn(field, n, i, |a, b| basis_or_zero(dc.hcomp(a, b)))?;
    let axioms = check_axioms(&vertical, &horizontal)?;
    let non_invertible: Vec<String> = dc.non_invertible_one_cells().into_iter().map(|c| dc.labels()[c].clone()).collect();
    let algebra = if axioms.passed() {
        Some(DoubleAlgebra::new(vertical, horizontal)?.with_labels(dc.labels().to_vec()))
    } else {
        None
    };
    Ok(DoubleCategoryOutcome { axioms, groupoids: non_invertible.is_empty(), non_invertible, algebra })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOTAL: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];
    const ORDER: [(usize, usize); 3] = [(0, 0), (0, 1), (1, 1)];

    #[test]
    fn commuting_squares_in_pair_groupoid_form_a_double_algebra() {
        let dc = DoubleCategory::from_preorders(2, &TOTAL, &TOTAL).unwrap();
        assert_eq!(dc.cells(), 16);
        let out = double_category_double(&dc, Field::Rational).unwrap();
        assert!(out.groupoids);
        assert!(out.axioms.passed());
    }

    #[test]
    fn deleting_a_horizontal_inverse_is_rejected() {
        let dc = DoubleCategory::from_preorders(2, &ORDER, &TOTAL).unwrap();
        let out = double_category_double(&dc, Field::Rational).unwrap();
        assert!(!out.groupoids);
        assert!(!out.axioms.passed());
        assert!(out.algebra.is_none());
        assert_eq!(out.non_invertible, vec!["[01|01]".to_string()]);
    }

    #[test]
    fn trivial_double_category_is_one_dimensional() {
        let out = double_category_double(&DoubleCategory::trivial(), Field::Rational).unwrap();
        assert_eq!(out.algebra.unwrap().dim(), 1);
    }
}
