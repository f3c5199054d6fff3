//! Algebras, coalgebras, bialgebras, Hopf algebras, modules, comodules,
//! convolution and measuring pairings.

mod algebra;
mod convolution;
mod module;
mod pairing;

pub use algebra::{
    default_labels, verify_antipode, verify_bialgebra_compat, Algebra, Coalgebra, Quad, StructureKind, StructurePresentation,
};
pub use convolution::{compute_antipode, convolution, convolution_inverse, convolution_unit, ConvolutionInverse};
pub use module::{Action, ActionEntry, Coaction, CoactionEntry, ModulePresentation, Side};
pub use pairing::{check_adjoint_pair, restrict_action, Harpoon, PairingPresentation, RationalPart};
