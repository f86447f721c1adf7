//! Condition-grid driver: generate, fit, score and aggregate over
//! replications.

use crate::diagnostics::{amcr, arse, item_mae_rmse};
use crate::error::{Error, Result};
use crate::model::{ItemParamTable, MasteryScores, ModelKind, ProfileMatrix};
use crate::simulate::condition::{MuVariant, SimulationCondition};
use crate::simulate::generate::{binarize, generate_dataset, GeneratedDataset, Truth};
use crate::simulate::qmatrices::QVariant;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// What a fitter must hand back for metric computation.
#[derive(Debug, Clone)]
pub struct GridFitOutput {
    pub theta_hat: ItemParamTable,
    /// Estimated mastery scores: posterior means for partial-mastery fits,
    /// marginal attribute posteriors for classical fits.
    pub d_hat: MasteryScores,
    /// Binary profile estimates: rounded scores for partial-mastery fits,
    /// maximum a posteriori profiles for classical fits.
    pub alpha_hat: ProfileMatrix,
}

/// A model-fitting hook for the grid. Implementations must cover every kind
/// the grid is asked to fit.
pub trait GridFitter: Sync {
    fn fit(&self, kind: ModelKind, data: &GeneratedDataset) -> Result<GridFitOutput>;
}

/// Aggregated metrics for one (condition, fitted kind) pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridRow {
    pub condition: SimulationCondition,
    pub fitted: ModelKind,
    pub replications: usize,
    pub mae: f64,
    pub rmse: f64,
    pub amcr: f64,
    /// Mastery-score recovery error; only defined when the generating truth
    /// is partial.
    pub arse: Option<f64>,
}

fn metrics_for(
    data: &GeneratedDataset,
    fit: &GridFitOutput,
) -> Result<(f64, f64, f64, Option<f64>)> {
    let (mae, rmse) = item_mae_rmse(&data.item_table, &fit.theta_hat)?;
    let reference = data.reference_profiles();
    let amcr_value = amcr(&reference, &fit.alpha_hat)?;
    let arse_value = match &data.truth {
        Truth::Partial(d_true) => Some(arse(d_true, &fit.d_hat)?),
        Truth::Binary(_) => None,
    };
    Ok((mae, rmse, amcr_value, arse_value))
}

/// Run every condition: for each replication, generate a dataset, fit both
/// the generating kind and its counterpart, and average the recovery metrics
/// over replications. Cells run in parallel; each owns a derived seed, so
/// results do not depend on scheduling. Returns two rows per condition (one
/// per fitted kind) in a stable order.
pub fn run_condition_grid(conditions: &[SimulationCondition], fitter: &dyn GridFitter) -> Result<Vec<GridRow>> {
    let cells: Vec<(usize, usize)> = conditions
        .iter()
        .enumerate()
        .flat_map(|(c, cond)| (0..cond.replications).map(move |r| (c, r)))
        .collect();

    let cell_results: Vec<Result<(usize, Vec<(ModelKind, f64, f64, f64, Option<f64>)>)>> = cells
        .par_iter()
        .map(|&(c, rep)| {
            let cond = &conditions[c];
            let data = generate_dataset(cond, rep)
                .map_err(|e| Error::Data(format!("condition {} replication {rep}: {e}", cond.label())))?;
            let mut per_fit = Vec::with_capacity(2);
            for kind in [cond.model, cond.model.counterpart()] {
                let fit = fitter.fit(kind, &data).map_err(|e| {
                    Error::Data(format!(
                        "fitting {kind} on condition {} replication {rep}: {e}",
                        cond.label()
                    ))
                })?;
                let (mae, rmse, amcr_value, arse_value) = metrics_for(&data, &fit)?;
                per_fit.push((kind, mae, rmse, amcr_value, arse_value));
            }
            Ok((c, per_fit))
        })
        .collect();

    // Accumulate means per (condition, fitted kind), preserving order.
    let mut acc: Vec<Vec<(ModelKind, usize, f64, f64, f64, f64)>> = conditions
        .iter()
        .map(|cond| {
            vec![
                (cond.model, 0usize, 0.0, 0.0, 0.0, 0.0),
                (cond.model.counterpart(), 0usize, 0.0, 0.0, 0.0, 0.0),
            ]
        })
        .collect();
    for res in cell_results {
        let (c, per_fit) = res?;
        for (slot, (kind, mae, rmse, amcr_value, arse_value)) in per_fit.into_iter().enumerate() {
            let entry = &mut acc[c][slot];
            debug_assert_eq!(entry.0, kind);
            entry.1 += 1;
            entry.2 += mae;
            entry.3 += rmse;
            entry.4 += amcr_value;
            entry.5 += arse_value.unwrap_or(0.0);
        }
    }

    let mut rows = Vec::with_capacity(conditions.len() * 2);
    for (c, cond) in conditions.iter().enumerate() {
        for &(kind, n, mae, rmse, amcr_sum, arse_sum) in &acc[c] {
            let reps = n.max(1) as f64;
            rows.push(GridRow {
                condition: cond.clone(),
                fitted: kind,
                replications: n,
                mae: if n == 0 { 0.0 } else { mae / reps },
                rmse: if n == 0 { 0.0 } else { rmse / reps },
                amcr: if n == 0 { 0.0 } else { amcr_sum / reps },
                arse: if cond.model.is_partial_mastery() && n > 0 {
                    Some(arse_sum / reps)
                } else {
                    None
                },
            });
        }
    }
    Ok(rows)
}

/// The full factorial design: 4 kinds x K in {3,5} x 2 Q-variants x 2 means
/// x 2 correlations x 2 sample sizes (500/1000 for K = 3, 1000/2000 for
/// K = 5) — 128 conditions.
pub fn full_grid(replications: usize, seed: u64) -> Vec<SimulationCondition> {
    let mut out = Vec::with_capacity(128);
    let kinds = [ModelKind::Dina, ModelKind::PmDina, ModelKind::Gdina, ModelKind::PmGdina];
    for &model in &kinds {
        for &n_attrs in &[3usize, 5] {
            for &q_variant in &[QVariant::Complete, QVariant::Incomplete] {
                for &mu_variant in &[MuVariant::ConstantZero, MuVariant::Nonconstant] {
                    for &rho in &[0.0, 0.8] {
                        let sizes: [usize; 2] = if n_attrs == 3 { [500, 1000] } else { [1000, 2000] };
                        for &n_subjects in &sizes {
                            let idx = out.len() as u64;
                            out.push(SimulationCondition {
                                model,
                                n_attrs,
                                q_variant,
                                mu_variant,
                                rho,
                                n_subjects,
                                replications,
                                seed: crate::rngutil::derive_seed(seed, &[idx]),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}
