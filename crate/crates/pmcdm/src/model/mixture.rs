//! Mixture weights over attribute profiles and the marginal response
//! probabilities they induce for partial-mastery subjects.

use crate::error::{Error, Result};
use crate::model::probit::norm_cdf;
use crate::model::types::{CopulaParams, ItemTable};
use crate::rngutil;

/// Weight of profile `alpha` under mastery scores `d`:
/// `prod_k d_k^alpha_k (1 - d_k)^(1 - alpha_k)`.
pub fn mixture_weight(d: &[f64], alpha: &[u8]) -> f64 {
    assert_eq!(d.len(), alpha.len(), "mastery scores and profile must have equal length");
    d.iter()
        .zip(alpha)
        .map(|(&dk, &ak)| if ak == 1 { dk } else { 1.0 - dk })
        .product()
}

/// Marginal positive-response probability for one item given mastery scores:
/// the table values averaged under the profile mixture. The sum runs over the
/// item's reduced classes only, which is exact because nonrequired attributes
/// do not change the table value and their weights marginalize to one.
pub fn marginal_item_prob(d: &[f64], item: &ItemTable) -> f64 {
    let required = item.required();
    let theta = item.theta();
    let mut total = 0.0;
    for (class, &t) in theta.iter().enumerate() {
        let mut w = 1.0;
        for (pos, &k) in required.iter().enumerate() {
            w *= if class >> pos & 1 == 1 { d[k] } else { 1.0 - d[k] };
        }
        total += t * w;
    }
    total
}

/// Integration rule for expectations over the copula distribution.
#[derive(Debug, Clone)]
pub enum QuadratureSpec {
    /// Seeded Monte Carlo average over copula draws.
    MonteCarlo { draws: usize, seed: u64 },
    /// Tensor-product grid on the Gaussian scale; only supported for K <= 2.
    Grid { points_per_dim: usize },
}

impl QuadratureSpec {
    /// Default rule: 100,000 Monte Carlo draws.
    pub fn default_mc(seed: u64) -> Self {
        QuadratureSpec::MonteCarlo { draws: 100_000, seed }
    }
}

/// Expectation of `prod_k d_k^(c_k) (1 - d_k)^(J - c_k)` over the copula,
/// where `c_k` counts how many of the `n_items` working profiles master
/// attribute `k`.
fn count_vector_weight(counts: &[usize], n_items: usize, copula: &CopulaParams, quad: &QuadratureSpec) -> Result<f64> {
    let k = copula.n_attrs();
    let integrand = |d: &[f64]| -> f64 {
        counts
            .iter()
            .enumerate()
            .map(|(kk, &c)| d[kk].powi(c as i32) * (1.0 - d[kk]).powi((n_items - c) as i32))
            .product()
    };
    match *quad {
        QuadratureSpec::MonteCarlo { draws, seed } => {
            if draws == 0 {
                return Err(Error::Parameter("Monte Carlo quadrature needs at least one draw".into()));
            }
            let chol = copula.cholesky();
            let mut rng = rngutil::rng_seeded(seed);
            let mut total = 0.0;
            let mut d = vec![0.0; k];
            for _ in 0..draws {
                let x = rngutil::draw_mvn(copula.mu(), &chol, &mut rng);
                for kk in 0..k {
                    d[kk] = norm_cdf(x[kk]);
                }
                total += integrand(&d);
            }
            Ok(total / draws as f64)
        }
        QuadratureSpec::Grid { points_per_dim } => {
            if k > 2 {
                return Err(Error::Size(format!(
                    "grid quadrature is only supported for K <= 2, got K = {k}"
                )));
            }
            if points_per_dim < 2 {
                return Err(Error::Parameter("grid quadrature needs at least two points".into()));
            }
            let mu = copula.mu();
            let sigma = copula.sigma();
            // Node range of +/- 8 marginal standard deviations.
            let axes: Vec<Vec<f64>> = (0..k)
                .map(|kk| {
                    let sd = sigma[(kk, kk)].sqrt();
                    let lo = mu[kk] - 8.0 * sd;
                    let hi = mu[kk] + 8.0 * sd;
                    let step = (hi - lo) / (points_per_dim - 1) as f64;
                    (0..points_per_dim).map(|i| lo + step * i as f64).collect()
                })
                .collect();
            let inv = copula
                .cholesky()
                .inverse();
            let det = copula.sigma().determinant();
            let norm_const = 1.0 / ((2.0 * std::f64::consts::PI).powi(k as i32) * det).sqrt();
            let density = |x: &[f64]| -> f64 {
                let mut quad_form = 0.0;
                for a in 0..k {
                    for b in 0..k {
                        quad_form += (x[a] - mu[a]) * inv[(a, b)] * (x[b] - mu[b]);
                    }
                }
                norm_const * (-0.5 * quad_form).exp()
            };
            // Trapezoid weights per axis.
            let axis_weight = |axis: &[f64], i: usize| -> f64 {
                let step = axis[1] - axis[0];
                if i == 0 || i == axis.len() - 1 {
                    0.5 * step
                } else {
                    step
                }
            };
            let mut total = 0.0;
            if k == 1 {
                let mut d = [0.0];
                for (i, &x) in axes[0].iter().enumerate() {
                    d[0] = norm_cdf(x);
                    total += integrand(&d) * density(&[x]) * axis_weight(&axes[0], i);
                }
            } else {
                let mut d = [0.0, 0.0];
                for (i, &x0) in axes[0].iter().enumerate() {
                    d[0] = norm_cdf(x0);
                    let w0 = axis_weight(&axes[0], i);
                    for (j, &x1) in axes[1].iter().enumerate() {
                        d[1] = norm_cdf(x1);
                        total += integrand(&d) * density(&[x0, x1]) * w0 * axis_weight(&axes[1], j);
                    }
                }
            }
            Ok(total)
        }
    }
}

/// Class weight of one working-profile assignment `A = (alpha*_1, ...,
/// alpha*_J)` in the latent class representation: the expectation over the
/// copula of the product of per-item mixture weights.
pub fn rlcm_class_weight(profiles: &[Vec<u8>], copula: &CopulaParams, quad: &QuadratureSpec) -> Result<f64> {
    let k = copula.n_attrs();
    if profiles.is_empty() {
        return Err(Error::Data("class weight needs at least one item profile".into()));
    }
    for (j, p) in profiles.iter().enumerate() {
        if p.len() != k {
            return Err(Error::Dimension(format!(
                "profile {} has length {}, expected {}",
                j + 1,
                p.len(),
                k
            )));
        }
    }
    let counts: Vec<usize> = (0..k)
        .map(|kk| profiles.iter().filter(|p| p[kk] == 1).count())
        .collect();
    count_vector_weight(&counts, profiles.len(), copula, quad)
}

/// All `2^(K*J)` class weights, indexed so that bit `j*K + k` of the class
/// index is `alpha*_jk`. Intended for small oracle computations; fails when
/// `K*J` exceeds `cap_bits`.
pub fn rlcm_class_weights_all(
    n_items: usize,
    copula: &CopulaParams,
    quad: &QuadratureSpec,
    cap_bits: u32,
) -> Result<Vec<f64>> {
    let k = copula.n_attrs();
    let bits = k * n_items;
    if bits as u32 > cap_bits {
        return Err(Error::Size(format!(
            "enumerating 2^{bits} working-profile classes exceeds the cap of 2^{cap_bits}"
        )));
    }
    // Weights depend on the assignment only through per-attribute mastery
    // counts, so integrate once per count vector and fan out.
    let mut by_counts = std::collections::HashMap::new();
    let mut out = Vec::with_capacity(1 << bits);
    for class in 0..(1usize << bits) {
        let counts: Vec<usize> = (0..k)
            .map(|kk| (0..n_items).filter(|j| class >> (j * k + kk) & 1 == 1).count())
            .collect();
        let w = match by_counts.get(&counts) {
            Some(&w) => w,
            None => {
                let w = count_vector_weight(&counts, n_items, copula, quad)?;
                by_counts.insert(counts.clone(), w);
                w
            }
        };
        out.push(w);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::types::{all_profiles, CopulaParams};
    use nalgebra::{DMatrix, DVector};

    fn unit_copula(k: usize) -> CopulaParams {
        CopulaParams::new(DVector::zeros(k), DMatrix::identity(k, k)).unwrap()
    }

    #[test]
    fn uniform_scores_weight_every_profile_equally() {
        for alpha in all_profiles(2) {
            assert!((mixture_weight(&[0.5, 0.5], &alpha) - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn degenerate_scores_concentrate_on_one_profile() {
        let d = [1.0, 1.0, 1.0];
        assert_eq!(mixture_weight(&d, &[1, 1, 1]), 1.0);
        assert_eq!(mixture_weight(&d, &[1, 0, 1]), 0.0);
    }

    #[test]
    fn weights_sum_to_one() {
        let d = [0.3, 0.71, 0.052];
        let total: f64 = all_profiles(3).map(|a| mixture_weight(&d, &a)).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn single_attribute_midpoint() {
        let item = ItemTable::new(vec![0], vec![0.2, 0.8]).unwrap();
        assert!((marginal_item_prob(&[0.5], &item) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn binary_scores_reduce_to_table_lookup_exactly() {
        let item = ItemTable::new(vec![0, 2], vec![0.2, 0.5, 0.5, 0.8]).unwrap();
        for alpha in all_profiles(3) {
            let d: Vec<f64> = alpha.iter().map(|&a| a as f64).collect();
            let expected = item.theta()[item.reduced_class(&alpha)];
            assert_eq!(marginal_item_prob(&d, &item), expected);
        }
    }

    #[test]
    fn two_attribute_hand_enumeration() {
        // theta = (0.2, 0.5, 0.5, 0.8), d = (0.25, 0.75):
        // 0.2*0.1875 + 0.5*0.0625 + 0.5*0.5625 + 0.8*0.1875 = 0.5
        let item = ItemTable::new(vec![0, 1], vec![0.2, 0.5, 0.5, 0.8]).unwrap();
        assert!((marginal_item_prob(&[0.25, 0.75], &item) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn class_weight_with_near_degenerate_copula() {
        // A tiny covariance pins d at Phi(mu); with mu = probit(0.3) the
        // single-item, single-attribute class weight for alpha* = 1 is 0.3.
        let mu = DVector::from_vec(vec![crate::model::probit::probit(0.3)]);
        let sigma = DMatrix::from_element(1, 1, 1e-12);
        let copula = CopulaParams::new(mu, sigma).unwrap();
        let w = rlcm_class_weight(&[vec![1]], &copula, &QuadratureSpec::Grid { points_per_dim: 201 }).unwrap();
        assert!((w - 0.3).abs() < 1e-3, "got {w}");
    }

    #[test]
    fn class_weights_total_one() {
        let copula = unit_copula(1);
        let weights = rlcm_class_weights_all(2, &copula, &QuadratureSpec::Grid { points_per_dim: 401 }, 20).unwrap();
        assert_eq!(weights.len(), 4);
        let total: f64 = weights.iter().sum();
        assert!((total - 1.0).abs() < 1e-6, "total = {total}");
    }

    #[test]
    fn grid_and_monte_carlo_agree() {
        let copula = unit_copula(1);
        let profiles = vec![vec![1], vec![0]];
        let grid = rlcm_class_weight(&profiles, &copula, &QuadratureSpec::Grid { points_per_dim: 401 }).unwrap();
        let mc = rlcm_class_weight(
            &profiles,
            &copula,
            &QuadratureSpec::MonteCarlo {
                draws: 1_000_000,
                seed: 11,
            },
        )
        .unwrap();
        assert!((grid - mc).abs() < 1e-3, "grid = {grid}, mc = {mc}");
    }

    #[test]
    fn size_cap_enforced() {
        let copula = unit_copula(2);
        let err = rlcm_class_weights_all(11, &copula, &QuadratureSpec::default_mc(1), 20).unwrap_err();
        assert!(matches!(err, Error::Size(_)));
    }

    #[test]
    fn grid_rejects_high_dimension() {
        let copula = unit_copula(3);
        let err = rlcm_class_weight(&[vec![1, 0, 1]], &copula, &QuadratureSpec::Grid { points_per_dim: 11 }).unwrap_err();
        assert!(matches!(err, Error::Size(_)));
    }
}
