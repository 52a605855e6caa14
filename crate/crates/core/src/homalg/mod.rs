//! Homological algebra over graded quotient rings: finitely presented
//! modules, minimal presentations and resolutions, Hilbert series, and the
//! Hom/Tensor/Ext functors with the invariants derived from them (depth,
//! rank, type, Bass numbers).

pub mod fpmodule;
pub mod functors;
pub mod hilbert;
pub mod quotient;
pub mod resolution;
pub mod witness;

pub use fpmodule::{minimal_generator_indices, FPModule};
pub use functors::{
    annihilator, bass_numbers, cm_type, depth, depth_via_ext, ext_module, hom_module, is_faithful,
    rank, subquotient, tensor_module, HomModule,
};
pub use hilbert::HilbertSeries;
pub use quotient::QuotientRing;
pub use resolution::Resolution;
pub use witness::{ext_nonzero_witness, ExtWitness};
