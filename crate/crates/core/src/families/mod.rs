//! Constructors for the standard example families, each returning a validated double algebra.

mod basic;
mod doublecat;
mod frobext;
mod groupoid;
mod wha;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::double::DoubleError;

pub use basic::{commutative_double, dual_numbers, matrix_algebra, matrix_double, matrix_double_over, matrix_labels, matrix_transpose_oracle, split_algebra};
pub use doublecat::{double_category_double, DoubleCategory, DoubleCategoryOutcome};
pub use frobext::{depth2_verify, extension_antipode_report, frobenius_extension_double, Depth2Basis, ExtensionDouble, FrobeniusExtension, Invariants};
pub use groupoid::{groupoid_double, hopf_group_double, Group, Groupoid};
pub use wha::{wha_double, WeakHopfData, WhaDouble};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("invalid group: {0}")]
    Group(String),
    #[error("invalid groupoid: {0}")]
    Groupoid(String),
    #[error("invalid double category: {0}")]
    DoubleCategory(String),
    #[error("invalid Frobenius extension: {0}")]
    Extension(String),
    #[error("invalid weak Hopf data: {0}")]
    WeakHopf(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Double(#[from] DoubleError),
}
