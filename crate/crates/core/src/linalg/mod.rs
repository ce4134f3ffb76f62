//! Dense and sparse matrices over exact rings.

pub mod mat;
pub mod sparse;

pub use mat::Mat;
pub use sparse::SparseMat;
