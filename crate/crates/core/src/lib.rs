//! Exact computations with finite EI categories and their category algebras:
//! composition-table validation, the order on isomorphism classes, the
//! Jacobson radical, representations as functors, and projective
//! resolutions with the chain-length cutoff for projective dimension.

pub mod algebra;
pub mod builtins;
pub mod category;
pub mod exactla;
pub mod homology;
pub mod io;
pub mod rep;

pub use algebra::{aut_invertibility, build_algebra, radical, CategoryAlgebra, RadicalData, RadicalMethod};
pub use category::{full_subcategory, validate_category, FiniteCategory, FullSubcategory, MorId, ObjId};
pub use exactla::{ExactMatrix, FieldSpec, Scalar, Subspace};
pub use homology::{findim_probe, global_dim, proj_dim, PdValue, PdVerdict, ProbeOptions, ProbeReport, Resolver, Strategy};
pub use rep::Representation;
