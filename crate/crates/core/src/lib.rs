//! Generalised Paley dessins: construction, operations and recognition.

pub mod affine;
pub mod arith;
pub mod classify;
pub mod dessin;
pub mod error;
pub mod field;
pub mod ops;
pub mod paley;

pub use affine::{AffineGroup, AffineMap, FiniteGroup, SemiaffineMap};
pub use dessin::{GroupTag, Perm, PermDessin, RegularDessin};
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use paley::PaleyParams;
