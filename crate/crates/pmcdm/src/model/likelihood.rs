//! Marginal log-likelihoods for classical and partial-mastery models.

use crate::error::{Error, Result};
use crate::model::mixture::marginal_item_prob;
use crate::model::probit::norm_cdf;
use crate::model::types::{profile_from_index, BinaryMatrix, ClassProportions, CopulaParams, ItemParamTable};
use crate::rngutil;

/// Numerically stable `log(sum(exp(x)))`.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    max + xs.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}

fn check_item_count(r: &[u8], table: &ItemParamTable) -> Result<()> {
    if r.len() != table.n_items() {
        return Err(Error::Dimension(format!(
            "response vector has {} items but the table has {}",
            r.len(),
            table.n_items()
        )));
    }
    Ok(())
}

/// Log marginal likelihood of one subject's responses under a classical CDM:
/// `log sum_alpha p_alpha prod_j theta^R (1-theta)^(1-R)`, evaluated in log
/// space with a max shift.
pub fn cdm_subject_loglik(r: &[u8], table: &ItemParamTable, p: &ClassProportions) -> Result<f64> {
    check_item_count(r, table)?;
    if p.n_attrs() != table.n_attrs() {
        return Err(Error::Dimension(format!(
            "class proportions cover {} attributes but the table has {}",
            p.n_attrs(),
            table.n_attrs()
        )));
    }
    let k = table.n_attrs();
    let mut terms = Vec::with_capacity(p.n_classes());
    for (class, &p_class) in p.as_slice().iter().enumerate() {
        let alpha = profile_from_index(class, k);
        let mut log_term = p_class.ln();
        for (j, &resp) in r.iter().enumerate() {
            let item = table.item(j);
            let theta = item.theta()[item.reduced_class(&alpha)];
            log_term += if resp == 1 { theta.ln() } else { (1.0 - theta).ln() };
        }
        terms.push(log_term);
    }
    Ok(log_sum_exp(&terms))
}

/// Total CDM log-likelihood over all subjects.
pub fn cdm_loglik_total(responses: &BinaryMatrix, table: &ItemParamTable, p: &ClassProportions) -> Result<f64> {
    let mut total = 0.0;
    for row in responses.rows() {
        total += cdm_subject_loglik(row, table, p)?;
    }
    Ok(total)
}

/// Per-draw log response probabilities shared by the partial-mastery
/// likelihood estimators: entry `[m][j]` holds `(ln theta_{j,d_m},
/// ln(1 - theta_{j,d_m}))` for the m-th copula draw.
fn draw_log_probs(
    table: &ItemParamTable,
    copula: &CopulaParams,
    mc_draws: usize,
    seed: u64,
) -> Result<Vec<Vec<(f64, f64)>>> {
    if mc_draws == 0 {
        return Err(Error::Parameter("the Monte Carlo estimator needs at least one draw".into()));
    }
    if copula.n_attrs() != table.n_attrs() {
        return Err(Error::Dimension(format!(
            "copula covers {} attributes but the table has {}",
            copula.n_attrs(),
            table.n_attrs()
        )));
    }
    let k = copula.n_attrs();
    let chol = copula.cholesky();
    let mut rng = rngutil::rng_seeded(seed);
    let mut out = Vec::with_capacity(mc_draws);
    let mut d = vec![0.0; k];
    for _ in 0..mc_draws {
        let x = rngutil::draw_mvn(copula.mu(), &chol, &mut rng);
        for kk in 0..k {
            d[kk] = norm_cdf(x[kk]);
        }
        let row = table
            .items()
            .iter()
            .map(|item| {
                let theta = marginal_item_prob(&d, item);
                (theta.ln(), (1.0 - theta).ln())
            })
            .collect();
        out.push(row);
    }
    Ok(out)
}

/// Log of the Monte Carlo estimate of one subject's marginal likelihood under
/// a partial-mastery model, averaging the conditional likelihood over
/// `mc_draws` copula draws. Deterministic given the seed.
pub fn pmcdm_subject_loglik(
    r: &[u8],
    table: &ItemParamTable,
    copula: &CopulaParams,
    mc_draws: usize,
    seed: u64,
) -> Result<f64> {
    check_item_count(r, table)?;
    let logs = draw_log_probs(table, copula, mc_draws, seed)?;
    Ok(subject_loglik_from_draws(r, &logs))
}

fn subject_loglik_from_draws(r: &[u8], logs: &[Vec<(f64, f64)>]) -> f64 {
    let per_draw: Vec<f64> = logs
        .iter()
        .map(|row| {
            r.iter()
                .zip(row)
                .map(|(&resp, &(lt, lc))| if resp == 1 { lt } else { lc })
                .sum()
        })
        .collect();
    log_sum_exp(&per_draw) - (per_draw.len() as f64).ln()
}

/// Total partial-mastery log-likelihood over all subjects. One seeded draw
/// set is shared across subjects, so the total is deterministic and costs a
/// single pass over draws.
pub fn pmcdm_loglik_total(
    responses: &BinaryMatrix,
    table: &ItemParamTable,
    copula: &CopulaParams,
    mc_draws: usize,
    seed: u64,
) -> Result<f64> {
    if responses.n_cols() != table.n_items() {
        return Err(Error::Dimension(format!(
            "responses have {} items but the table has {}",
            responses.n_cols(),
            table.n_items()
        )));
    }
    let logs = draw_log_probs(table, copula, mc_draws, seed)?;
    Ok(responses.rows().map(|r| subject_loglik_from_draws(r, &logs)).sum())
}
