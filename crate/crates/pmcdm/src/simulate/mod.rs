//! Synthetic data generation: built-in Q-matrix designs, the factorial
//! simulation conditions, per-model response generators and the
//! condition-grid driver.

mod condition;
mod generate;
mod grid;
mod qmatrices;

pub use condition::{simulation_item_table, MuVariant, SimulationCondition};
pub use generate::{
    binarize, draw_mastery_scores, generate_dataset, generate_responses_cdm, generate_responses_pmcdm,
    GeneratedDataset, Truth,
};
pub use grid::{full_grid, run_condition_grid, GridFitOutput, GridFitter, GridRow};
pub use qmatrices::{builtin_q, QVariant};
