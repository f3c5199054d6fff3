//! Entwining structures, the associated coring and smash ring, and entwined modules.

mod coring;
mod modules;
mod smash;
mod structure;

pub use coring::{build_coring, verify_coring, Coring};
pub use modules::{
    entwined_smash_roundtrip, entwined_to_smash, free_entwined_module, hom_entwined, hom_entwined_basis, smash_ring_of,
    smash_to_entwined, solve_maps, verify_entwined_module,
};
pub use smash::{build_smash, hom_to_vec, nu_iso, smash_product, star_l, vec_to_hom, verify_smash, NuIso, SmashRing};
pub(crate) use smash::basis_hom;
pub use structure::{verify_entwining_morphism, Entwining};
