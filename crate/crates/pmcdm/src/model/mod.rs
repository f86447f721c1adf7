//! Model mathematics: item response functions, copula transforms, mixture
//! weights and likelihood evaluation. Everything here is a pure function over
//! immutable values; sampling lives in [`crate::sampler`].

mod likelihood;
mod mixture;
mod probit;
mod response;
mod types;

pub use likelihood::{cdm_loglik_total, cdm_subject_loglik, log_sum_exp, pmcdm_loglik_total, pmcdm_subject_loglik};
pub use mixture::{marginal_item_prob, mixture_weight, rlcm_class_weight, rlcm_class_weights_all, QuadratureSpec};
pub use probit::{norm_cdf, probit, probit_inv, PROBIT_CLAMP};
pub use response::{
    gdina_effects_to_table, ideal_response_dina, monotonicity_check, table_to_gdina_effects, theta_dina,
    MonotonicityReport, MonotonicityViolation,
};
pub use types::{
    all_profiles, profile_from_index, profile_index, BinaryMatrix, ClassProportions, CopulaParams, DinaItemParams,
    GaussianScores, ItemParamTable, ItemTable, MasteryScores, ModelKind, ProfileMatrix, QMatrix, ResponseMatrix,
};
