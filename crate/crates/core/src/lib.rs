//! Exact computation with cohomological rank functions on polarized abelian
//! varieties: piecewise-polynomial rank-function families over algebraic
//! breakpoints, the Fourier–Mukai polynomial inversion calculus, a catalog of
//! constructible sheaf models, generic-vanishing classification, and the
//! β/s threshold invariants.

pub mod algreal;
pub mod error;
pub mod family;
pub mod modelfile;
pub mod models;
pub mod piecewise;
pub mod poly;
pub mod rat;
pub mod regularity;
pub mod report;
pub mod sample;
pub mod transform;
pub mod verify;

pub use algreal::{isolate_real_roots, is_real_rooted, sturm_count, AlgReal};
pub use error::{Error, Result};
pub use family::{CriticalPoint, RankFamily, Side, SmoothnessIndex, VanishingOrder};
pub use models::{builtin_catalog, Model, ModelSpec};
pub use piecewise::{PiecewisePoly, Segment};
pub use poly::Poly;
pub use rat::Rat;
pub use regularity::{
    beta_invariant, beta_s_consistency, classify, hacon_monotonicity_check, jump_consistency,
    max_critical_point, s_from_beta, RegularityClass, Threshold,
};
pub use report::Report;
pub use modelfile::{load_model, parse_model, serialize_model};
pub use sample::{export_samples, SampleTable};
pub use transform::{
    double_inversion_identity_check, germ_from_transform, invert_neg, invert_pos,
    mobius_ideal_to_evalbundle, mobius_piecewise, TransformGerm,
};
pub use verify::{run_verify, VerifyOutcome};
