//! Invariant theory of the finite matrix groups that act on shape
//! enumerators: group closure, Molien series, the Reynolds operator,
//! invariant spaces by degree, algebraic independence, and explicit bases.

mod bases;
mod group;
mod molien;
mod reynolds;

pub use bases::{
    even_rows_auxiliary_quadratic, even_rows_basis, even_weight_basis, express_in_basis,
    known_bases, known_basis, self_dual_basis, stated_even_rows_quadratic, BasisEntry,
    BasisExpression, BasisTerm, InvariantKind, KnownBasis,
};
pub use group::{
    even_rows_group, even_weight_group, general_self_dual_group, group_closure, self_dual_group,
    sign_z1, sign_z1_z2, signed_t_group, t_group, MatrixGroup, QuadMatrix,
};
pub use molien::{closed_form_molien, degree1_count, molien_function, molien_series, MolienSeries};
pub use reynolds::{
    invariant_space_basis, is_invariant, jacobian_independent, reynolds, ReynoldsMode,
};

/// Named group lookup: `g1`, `g2`, `g3`.
pub fn named_group(name: &str) -> crate::Result<MatrixGroup> {
    match name {
        "g1" => self_dual_group(),
        "g2" => even_weight_group(),
        "g3" => even_rows_group(),
        other => Err(crate::Error::InvalidParameter(format!(
            "unknown group '{other}' (expected g1, g2 or g3)"
        ))),
    }
}
