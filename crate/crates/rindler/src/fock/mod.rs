//! Labeled truncated tensor-product bases and block-diagonal symmetric
//! operators: the linear-algebra substrate for the density matrices built in
//! [`crate::states`].

mod dense;
mod labels;
mod operator;

pub use dense::{Eigen, SymMatrix};
pub use labels::{
    AliceLabel, BasisVector, BobHelicity, BobLabel, StateFamily, TripartiteIndex,
};
pub use operator::{
    block_trace, hermitian_eigenvalues, partial_trace_alice, partial_trace_bob, Block,
    BlockDensityMatrix, BlockOperator, StateVector,
};

pub(crate) use operator::canonical_pair;
