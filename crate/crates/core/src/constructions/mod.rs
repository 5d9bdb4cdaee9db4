//! Self-orthogonal and self-dual codes built with the flip and ordered flip,
//! and the classification of two-dimensional self-dual codes with `ns = 4`.

mod build;
mod classify;
mod flip;

pub use build::{
    construct_cn, construct_co, construct_cort, construct_interleave, construct_padded_concat,
    extended_hamming_8_4, hamming_dual, is_hamming_self_dual, is_hamming_self_orthogonal,
};
pub use classify::{
    classification_completeness, classify_ns4, CompletenessReport, EquivalenceClass, Ns4Case,
    Ns4Classification, Ns4Entry, MAX_CLASSIFY_Q,
};
pub use flip::{flip_matrix, flip_transpose, flip_vector, hamming_inner, BlockGenerator};
