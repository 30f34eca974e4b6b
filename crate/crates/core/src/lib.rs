//! The 60 rotations of the icosahedron and the 60 even permutations of five
//! points, built from three generators each and matched element by element.
//!
//! The crate works purely combinatorially on labelled points: permutations
//! are exact integer maps, the icosahedron is recovered as an orbit of one
//! face, and every claimed correspondence is checked exhaustively.
//!
//! ```
//! use icosa_a5::iso::Model;
//!
//! let model = Model::published().unwrap();
//! assert_eq!(model.rotations().order(), 60);
//! assert_eq!(model.a5().order(), 60);
//!
//! let d = model.rotations().generators().get("D").unwrap();
//! assert_eq!(model.iso.image(d).unwrap().to_string(), "(1,4,5)");
//! ```

pub mod error;
pub mod fixtures;
pub mod group;
pub mod icosa;
pub mod iso;
pub mod parse;
pub mod perm;
pub mod tables;
pub mod verify;

pub use error::{GroupError, IsoError, ModelError, ParseError, PermError};
pub use group::{GeneratorSet, Group, Relation, Word};
pub use icosa::{IcosaGraph, RotationClass, RotationKind};
pub use iso::{Correspondence, Homomorphism, Isomorphism, Model};
pub use perm::{CycleType, Domain, Label, Parity, Permutation};
pub use verify::{CheckEntry, CheckStatus, VerificationReport, Verifier};

// The guide's chapters, compiled and run as doctests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/icosahedron.md")]
    mod icosahedron {}
    #[doc = include_str!("../../../book/src/shared-vertex.md")]
    mod shared_vertex {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    mod isomorphism {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
