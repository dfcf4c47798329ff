//! Exact combinatorics of the multiplicity spaces in `Sp_2n ↓ Sp_2n-2`
//! branching.
//!
//! The multiplicity space `W^{λ/μ}` is nonzero iff `μ` double interlaces `λ⁺`,
//! and then it is the `L = SL₂ⁿ`-module `⊗ F^{r_i}` whose factors come from
//! the sorted merge of `μ` and `λ⁺`. This crate computes those modules, the
//! canonical line decomposition indexed by intermediate weights, the
//! order-type semigroup machinery, and an independent character-based check
//! of all of it.

pub mod charoracle;
pub mod decomp;
pub mod error;
pub mod gzbasis;
pub mod poly;
pub mod rearrange;
pub mod sl2;
pub mod sweep;
pub mod weights;

pub use decomp::{CubicSplit, FundamentalCoords, MegapeelCase, MegapeelResult};
pub use error::{Error, Result};
pub use gzbasis::{BasisElement, BasisRecord};
pub use poly::{LaurentPoly, MultiLaurentPoly};
pub use rearrange::{IndexMaps, Rearrangement};
pub use sl2::{LModule, Sl2Decomposition};
pub use weights::{DominantWeight, OrderType, Relation, SkewShape};
