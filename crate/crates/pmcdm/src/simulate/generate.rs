//! Synthetic data generation for classical and partial-mastery models.

use crate::error::Result;
use crate::model::{
    BinaryMatrix, CopulaParams, GaussianScores, ItemParamTable, MasteryScores, ModelKind, ProfileMatrix,
    ResponseMatrix,
};
use crate::rngutil;
use crate::simulate::condition::SimulationCondition;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Draw N mastery-score vectors from the copula: Gaussian-scale scores from
/// `N(mu, Sigma)` via the Cholesky factor, mapped through the standard-normal
/// CDF. Deterministic given the seed.
pub fn draw_mastery_scores(copula: &CopulaParams, n_subjects: usize, seed: u64) -> MasteryScores {
    let k = copula.n_attrs();
    let chol = copula.cholesky();
    let mut rng = rngutil::rng_seeded(seed);
    let mut data = Vec::with_capacity(n_subjects * k);
    for _ in 0..n_subjects {
        let x = rngutil::draw_mvn(copula.mu(), &chol, &mut rng);
        data.extend(x.iter());
    }
    GaussianScores::from_flat(data, n_subjects, k)
        .expect("generated scores have consistent dimensions")
        .to_mastery()
}

/// Round mastery scores to binary profiles; a score of exactly 0.5 rounds up.
pub fn binarize(d: &MasteryScores) -> ProfileMatrix {
    let data = d.as_slice().iter().map(|&v| u8::from(v >= 0.5)).collect();
    BinaryMatrix::from_flat(data, d.n_subjects(), d.n_attrs()).expect("binarized scores are 0/1")
}

/// Three-step partial-mastery generation: per subject and item, draw a
/// working profile with independent Bernoulli(d_ik) attributes, then the
/// response from the profile's table cell. Working profiles are transient.
pub fn generate_responses_pmcdm(d: &MasteryScores, table: &ItemParamTable, seed: u64) -> ResponseMatrix {
    let n = d.n_subjects();
    let k = d.n_attrs();
    let n_items = table.n_items();
    let mut rng = rngutil::rng_seeded(seed);
    let mut data = Vec::with_capacity(n * n_items);
    let mut alpha_star = vec![0u8; k];
    for i in 0..n {
        let scores = d.row(i);
        for j in 0..n_items {
            for kk in 0..k {
                alpha_star[kk] = u8::from(rng.random::<f64>() < scores[kk]);
            }
            let item = table.item(j);
            let theta = item.theta()[item.reduced_class(&alpha_star)];
            data.push(u8::from(rng.random::<f64>() < theta));
        }
    }
    BinaryMatrix::from_flat(data, n, n_items).expect("generated responses are 0/1")
}

/// Classical generation with one fixed profile per subject.
pub fn generate_responses_cdm(alpha: &ProfileMatrix, table: &ItemParamTable, seed: u64) -> ResponseMatrix {
    let n = alpha.n_rows();
    let n_items = table.n_items();
    let mut rng = rngutil::rng_seeded(seed);
    let mut data = Vec::with_capacity(n * n_items);
    for i in 0..n {
        let profile = alpha.row(i);
        for j in 0..n_items {
            let item = table.item(j);
            let theta = item.theta()[item.reduced_class(profile)];
            data.push(u8::from(rng.random::<f64>() < theta));
        }
    }
    BinaryMatrix::from_flat(data, n, n_items).expect("generated responses are 0/1")
}

/// Ground truth attached to a generated dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Truth {
    /// Partial-mastery kinds: the true continuous scores.
    Partial(MasteryScores),
    /// Classical kinds: the true binary profiles.
    Binary(ProfileMatrix),
}

/// One simulated dataset with its generating truth.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratedDataset {
    pub responses: ResponseMatrix,
    pub truth: Truth,
    pub item_table: ItemParamTable,
    pub condition: SimulationCondition,
    pub replication: usize,
}

impl GeneratedDataset {
    /// Binary reference profiles for misclassification metrics: the rounded
    /// scores for partial truth, the profiles themselves for binary truth.
    pub fn reference_profiles(&self) -> ProfileMatrix {
        match &self.truth {
            Truth::Partial(d) => binarize(d),
            Truth::Binary(a) => a.clone(),
        }
    }
}

/// Generate one replication of a condition. Scores are drawn from the
/// condition's copula; classical kinds round them to binary profiles before
/// response generation. Seeds are derived from (condition seed, replication),
/// so any cell regenerates identically in isolation.
pub fn generate_dataset(condition: &SimulationCondition, replication: usize) -> Result<GeneratedDataset> {
    condition.validate()?;
    let copula = condition.copula()?;
    let table = condition.item_table()?;
    let score_seed = rngutil::derive_seed(condition.seed, &[replication as u64, 0]);
    let resp_seed = rngutil::derive_seed(condition.seed, &[replication as u64, 1]);
    let d = draw_mastery_scores(&copula, condition.n_subjects, score_seed);
    let (responses, truth) = if condition.model.is_partial_mastery() {
        (generate_responses_pmcdm(&d, &table, resp_seed), Truth::Partial(d))
    } else {
        let alpha = binarize(&d);
        (generate_responses_cdm(&alpha, &table, resp_seed), Truth::Binary(alpha))
    };
    Ok(GeneratedDataset {
        responses,
        truth,
        item_table: table,
        condition: condition.clone(),
        replication,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{marginal_item_prob, QMatrix};
    use crate::simulate::condition::{simulation_item_table, MuVariant};
    use crate::simulate::qmatrices::QVariant;
    use nalgebra::{DMatrix, DVector};

    fn unit_copula(k: usize) -> CopulaParams {
        CopulaParams::new(DVector::zeros(k), DMatrix::identity(k, k)).unwrap()
    }

    fn equicorrelated(k: usize, rho: f64) -> CopulaParams {
        let sigma = DMatrix::from_fn(k, k, |i, j| if i == j { 1.0 } else { rho });
        CopulaParams::new(DVector::zeros(k), sigma).unwrap()
    }

    #[test]
    fn zero_mean_scores_center_at_half() {
        let n = 20_000;
        let d = draw_mastery_scores(&unit_copula(2), n, 7);
        for k in 0..2 {
            let mean: f64 = (0..n).map(|i| d.get(i, k)).sum::<f64>() / n as f64;
            // sd of d is ~0.29, so 3 s.e. ~ 0.0062.
            assert!((mean - 0.5).abs() < 0.0065, "attribute {k} mean = {mean}");
        }
    }

    #[test]
    fn gaussian_scale_correlation_matches_rho() {
        let n = 20_000;
        let d = draw_mastery_scores(&equicorrelated(2, 0.8), n, 3);
        let g = d.to_gaussian();
        let (mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for i in 0..n {
            let (x, y) = (g.get(i, 0), g.get(i, 1));
            sx += x;
            sy += y;
            sxx += x * x;
            syy += y * y;
            sxy += x * y;
        }
        let nf = n as f64;
        let cov = sxy / nf - sx / nf * sy / nf;
        let vx = sxx / nf - (sx / nf).powi(2);
        let vy = syy / nf - (sy / nf).powi(2);
        let corr = cov / (vx * vy).sqrt();
        assert!((corr - 0.8).abs() < 0.05, "correlation = {corr}");
    }

    #[test]
    fn draws_are_deterministic() {
        let a = draw_mastery_scores(&unit_copula(3), 50, 11);
        let b = draw_mastery_scores(&unit_copula(3), 50, 11);
        assert_eq!(a, b);
    }

    #[test]
    fn binarize_tie_rounds_up() {
        let d = MasteryScores::from_flat(vec![0.49, 0.5, 0.51], 1, 3).unwrap();
        assert_eq!(binarize(&d).row(0), &[0, 1, 1]);
    }

    #[test]
    fn binary_scores_generate_like_cdm() {
        // With binary d the working profiles are degenerate, so responses
        // follow the fixed-profile path exactly in distribution.
        let q = QMatrix::from_rows(vec![vec![1, 1]]).unwrap();
        let table = simulation_item_table(crate::model::ModelKind::Gdina, &q).unwrap();
        let d = MasteryScores::from_flat(vec![1.0, 0.0], 1, 2).unwrap();
        let n_trials = 20_000;
        let mut positives = 0usize;
        for trial in 0..n_trials {
            let r = generate_responses_pmcdm(&d, &table, trial as u64);
            positives += r.get(0, 0) as usize;
        }
        let rate = positives as f64 / n_trials as f64;
        // theta for reduced class (1, 0) is 0.5; 3 s.e. ~ 0.0106.
        assert!((rate - 0.5).abs() < 0.011, "rate = {rate}");
    }

    #[test]
    fn empirical_rate_matches_marginal_probability() {
        let q = QMatrix::from_rows(vec![vec![1, 1]]).unwrap();
        let table = simulation_item_table(crate::model::ModelKind::Gdina, &q).unwrap();
        let d = MasteryScores::from_flat(vec![0.25, 0.75], 1, 2).unwrap();
        let expected = marginal_item_prob(d.row(0), table.item(0));
        let n_trials = 40_000;
        let mut positives = 0usize;
        for trial in 0..n_trials {
            let r = generate_responses_pmcdm(&d, &table, 10_000 + trial as u64);
            positives += r.get(0, 0) as usize;
        }
        let rate = positives as f64 / n_trials as f64;
        let se = (expected * (1.0 - expected) / n_trials as f64).sqrt();
        assert!((rate - expected).abs() < 3.0 * se, "rate = {rate}, expected = {expected}");
    }

    #[test]
    fn cdm_generation_rates_at_profile_extremes() {
        let cond = SimulationCondition {
            model: crate::model::ModelKind::Dina,
            n_attrs: 3,
            q_variant: QVariant::Complete,
            mu_variant: MuVariant::ConstantZero,
            rho: 0.0,
            n_subjects: 4000,
            replications: 1,
            seed: 21,
        };
        let q = cond.q_matrix().unwrap();
        let table = cond.item_table().unwrap();
        let all_ones = BinaryMatrix::from_flat(vec![1; 4000 * 3], 4000, 3).unwrap();
        let r = generate_responses_cdm(&all_ones, &table, 5);
        let rate: f64 = r.rows().map(|row| row.iter().map(|&v| v as f64).sum::<f64>()).sum::<f64>()
            / (4000.0 * q.n_items() as f64);
        assert!((rate - 0.8).abs() < 0.01, "all-ones rate = {rate}");

        let all_zeros = BinaryMatrix::from_flat(vec![0; 4000 * 3], 4000, 3).unwrap();
        // An all-zero profile matrix is a valid profile matrix even though an
        // all-zero Q-matrix row is not.
        let r = generate_responses_cdm(&all_zeros, &table, 6);
        let rate: f64 = r.rows().map(|row| row.iter().map(|&v| v as f64).sum::<f64>()).sum::<f64>()
            / (4000.0 * q.n_items() as f64);
        assert!((rate - 0.2).abs() < 0.01, "all-zeros rate = {rate}");
    }

    #[test]
    fn generated_dataset_is_reproducible() {
        let cond = SimulationCondition {
            model: crate::model::ModelKind::PmDina,
            n_attrs: 3,
            q_variant: QVariant::Complete,
            mu_variant: MuVariant::ConstantZero,
            rho: 0.0,
            n_subjects: 30,
            replications: 2,
            seed: 9,
        };
        let a = generate_dataset(&cond, 1).unwrap();
        let b = generate_dataset(&cond, 1).unwrap();
        assert_eq!(a, b);
        let other = generate_dataset(&cond, 0).unwrap();
        assert_ne!(a.responses, other.responses);
    }
}
