//! Numerical toolkit for Orlicz and Lorentz function spaces.
//!
//! The crate computes the core functionals of rearrangement-invariant
//! analysis — distribution functions, non-increasing rearrangements, Young
//! conjugates, Orlicz modulars, Luxemburg and Lorentz norms — and classifies
//! embeddings between Orlicz and Lorentz spaces through integral, limit, and
//! modular-inequality conditions. A lab module replicates the level-set
//! Young-type inequality and the truncation machinery behind the
//! almost-compactness characterization.
//!
//! Functions are represented exactly: monotone objects as closed-form
//! piecewise segments with exact inversion, simple functions as value–weight
//! atoms. All integrals over step rearrangements are evaluated in closed
//! form; quadrature only enters where genuinely composite integrands appear,
//! and improper integrals are decided by dyadic block analysis with an
//! honest inconclusive state.

pub mod embedding;
pub mod error;
pub mod ext_real;
pub mod functionals;
pub mod lab;
pub mod monotone;
pub mod quadrature;
pub mod segment;
pub mod step_fn;
pub mod young;

pub use embedding::{
    classify_lorentz_into_orlicz, classify_orlicz_into_lorentz, condition_integral_a,
    condition_integral_dual, divergence_witness, dual_reduction_check, limit_condition,
    limit_condition_dual, modular_inequality_probe, sobolev_corollary, DecisionMode,
    EmbeddingReport, Evidence, Regime, SobolevSide, Verdict, VerdictState,
};
pub use error::OlError;
pub use ext_real::ExtReal;
pub use functionals::{
    lorentz_norm, lorentz_norm_forms, luxemburg_norm, orlicz_modular, orlicz_modular_forms,
};
pub use lab::{
    almost_compactness_profile, proof_decomposition, weak_lorentz_limit, young_type_sides,
    PowerWeight, TruncatedFamily,
};
pub use monotone::{Continuity, Direction, MonotoneFn, Piece};
pub use segment::Segment;
pub use step_fn::StepFn;
pub use young::{make_family, parse_young_dsl, Asymptotic, FamilySpec, YoungFn};
