//! NRT words, linear codes in canonical form, duals, and the isometry group.

mod code;
mod io;
mod isometry;
mod word;

pub use code::{all_codes, Codewords, NrtCode, ParityProfile};
pub use io::{parse_code, write_code};
pub use isometry::{codes_equivalent, isometry_group, triangular_group, IsometryIter, NrtIsometry};
pub use word::{row_weight, NrtWord, ShapeVector};

/// Size limits for exhaustive enumeration. Exceeding a limit is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_enum: u128,
    pub max_isometries: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_enum: 1 << 24,
            max_isometries: 10_000_000,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, needed: u128, cap: u128) -> crate::Result<()> {
    if needed > cap {
        Err(crate::Error::CapExceeded { what, needed, cap })
    } else {
        Ok(())
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_u128(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}
