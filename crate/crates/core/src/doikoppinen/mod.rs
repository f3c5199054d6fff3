//! Doi-Koppinen structures, their entwinings, and cleft (co)extensions.

mod cleft;
mod dual;
mod ingredient;
mod structure;

pub use cleft::*;
pub use dual::{dk_dual_module, dual_dk, dual_dk_morphism, dualize_ingredient, DualArrow};
pub use ingredient::{verify_dk_compat, DkKind, Ingredient};
pub use structure::{
    alt_dk_entwining, dk_entwining, koppinen_product, koppinen_smash, long_dimodule_check, verify_dk_morphism, DkStructure,
};
