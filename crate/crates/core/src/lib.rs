pub mod algebra;
pub mod antipode;
pub mod cli;
pub mod double;
pub mod families;
pub mod frobenius;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod structure;
