use crate::algebra::{AlgebraError, ProductTable};
use crate::double::{DoubleAlgebra, DoubleError};
use crate::scalar::{vector, Field, Scalar};

/// Uses a single algebra for both products; this is a double algebra exactly when it is commutative.
pub fn commutative_double(table: ProductTable) -> Result<DoubleAlgebra, DoubleError> {
    DoubleAlgebra::new(table.clone(), table)
}

/// The full matrix algebra `M_n` on the basis `e_jk` (index `j * n + k`).
pub fn matrix_algebra(field: Field, n: usize) -> Result<ProductTable, AlgebraError> {
    let dim = n * n;
    let mut unit = vector::zeros(field, dim);
    for j in 0..n {
        unit[j * n + j] = field.one();
    }
    ProductTable::from_fn(field, dim, unit, |a, b| {
        let (j, k) = (a / n, a % n);
        let (l, m) = (b / n, b % n);
        if k == l {
            vector::unit(field, dim, j * n + m)
        } else {
            vector::zeros(field, dim)
        }
    })
}

/// `k[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers(field: Field) -> Result<ProductTable, AlgebraError> {
    ProductTable::from_fn(field, 2, vector::unit(field, 2, 0), |a, b| match a + b {
        0 => vector::unit(field, 2, 0),
        1 => vector::unit(field, 2, 1),
        _ => vector::zeros(field, 2),
    })
}

/// `k × … × k` (`copies` factors) on the basis of minimal idempotents.
pub fn split_algebra(field: Field, copies: usize) -> Result<ProductTable, AlgebraError> {
    let unit = vec![field.one(); copies];
    ProductTable::from_fn(field, copies, unit, |a, b| {
        if a == b {
            vector::unit(field, copies, a)
        } else {
            vector::zeros(field, copies)
        }
    })
}

pub fn matrix_labels(n: usize) -> Vec<String> {
    (0..n * n).map(|a| format!("e{}{}", a / n + 1, a % n + 1)).collect()
}

/// `M_n` with `∘` the matrix product and `⋆` the entrywise product.
pub fn matrix_double(n: usize) -> Result<DoubleAlgebra, DoubleError> {
    matrix_double_over(Field::Rational, n)
}

pub fn matrix_double_over(field: Field, n: usize) -> Result<DoubleAlgebra, DoubleError> {
    let vertical = matrix_algebra(field, n)?;
    let dim = n * n;
    let horizontal = ProductTable::from_fn(field, dim, vec![field.one(); dim], |a, b| {
        if a == b {
            vector::unit(field, dim, a)
        } else {
            vector::zeros(field, dim)
        }
    })?;
    Ok(DoubleAlgebra::new(vertical, horizontal)?.with_labels(matrix_labels(n)))
}

/// The transpose permutation `e_jk ↦ e_kj`, the expected antipode of the matrix double algebra.
pub fn matrix_transpose_oracle(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    (0..n * n).map(|a| vector::unit(field, n * n, (a % n) * n + a / n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_products_match_formulas() {
        let d = matrix_double(2).unwrap();
        let f = d.field();
        // e12 ∘ e21 = e11; e12 ⋆ e12 = e12; e12 ⋆ e21 = 0.
        assert_eq!(d.vmul(&d.basis_vector(1), &d.basis_vector(2)), d.basis_vector(0));
        assert_eq!(d.hmul(&d.basis_vector(1), &d.basis_vector(1)), d.basis_vector(1));
        assert_eq!(d.hmul(&d.basis_vector(1), &d.basis_vector(2)), vector::zeros(f, 4));
        assert_eq!(matrix_double(1).unwrap().dim(), 1);
    }

    #[test]
    fn commutative_examples() {
        assert!(commutative_double(dual_numbers(Field::Rational).unwrap()).is_ok());
        assert!(commutative_double(split_algebra(Field::Rational, 2).unwrap()).is_ok());
        let err = commutative_double(matrix_algebra(Field::Rational, 2).unwrap()).unwrap_err();
        match err {
            DoubleError::Axioms(rep) => {
                let w = rep.first_failure().unwrap();
                assert_eq!(w.axiom, crate::double::Axiom::A2);
            }
            other => panic!("unexpected {other}"),
        }
    }
}
