//! Simulation conditions: the factorial design of model kind, attribute
//! count, Q-matrix variant, population mean/correlation and sample size.

use crate::error::{Error, Result};
use crate::model::{CopulaParams, ItemParamTable, ModelKind, QMatrix};
use crate::simulate::qmatrices::{builtin_q, QVariant};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Population mean of the Gaussian-scale scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MuVariant {
    /// All-zero mean: balanced mastery.
    ConstantZero,
    /// Spread means: (-1, 0, 1) for K = 3 and (-1, -0.5, 0, 0.5, 1) for
    /// K = 5, giving imbalanced attribute prevalence.
    Nonconstant,
}

impl fmt::Display for MuVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MuVariant::ConstantZero => "constant",
            MuVariant::Nonconstant => "nonconstant",
        })
    }
}

impl FromStr for MuVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "constant" | "constant-zero" | "zero" => Ok(MuVariant::ConstantZero),
            "nonconstant" | "non-constant" => Ok(MuVariant::Nonconstant),
            other => Err(Error::Parameter(format!(
                "unknown mean variant {other:?}; expected constant or nonconstant"
            ))),
        }
    }
}

/// One cell of the simulation design.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationCondition {
    pub model: ModelKind,
    pub n_attrs: usize,
    pub q_variant: QVariant,
    pub mu_variant: MuVariant,
    /// Common correlation of the equicorrelated covariance (0 or 0.8 in the
    /// standard design).
    pub rho: f64,
    pub n_subjects: usize,
    pub replications: usize,
    pub seed: u64,
}

impl SimulationCondition {
    pub fn validate(&self) -> Result<()> {
        if !matches!(self.n_attrs, 3 | 5) {
            return Err(Error::Parameter(format!(
                "built-in designs support K in {{3, 5}}, got {}",
                self.n_attrs
            )));
        }
        if !(0.0..1.0).contains(&self.rho) {
            return Err(Error::Parameter(format!(
                "correlation must lie in [0, 1), got {}",
                self.rho
            )));
        }
        if self.n_subjects == 0 {
            return Err(Error::Parameter("condition needs at least one subject".into()));
        }
        Ok(())
    }

    pub fn mu(&self) -> DVector<f64> {
        match self.mu_variant {
            MuVariant::ConstantZero => DVector::zeros(self.n_attrs),
            MuVariant::Nonconstant => match self.n_attrs {
                3 => DVector::from_vec(vec![-1.0, 0.0, 1.0]),
                5 => DVector::from_vec(vec![-1.0, -0.5, 0.0, 0.5, 1.0]),
                k => DVector::zeros(k),
            },
        }
    }

    /// Equicorrelated covariance with unit diagonal:
    /// `rho * 11' + (1 - rho) * I`.
    pub fn sigma(&self) -> DMatrix<f64> {
        let k = self.n_attrs;
        DMatrix::from_fn(k, k, |i, j| if i == j { 1.0 } else { self.rho })
    }

    pub fn copula(&self) -> Result<CopulaParams> {
        CopulaParams::new(self.mu(), self.sigma())
    }

    pub fn q_matrix(&self) -> Result<QMatrix> {
        builtin_q(self.n_attrs, self.q_variant)
    }

    /// True item parameter table of this condition's design.
    pub fn item_table(&self) -> Result<ItemParamTable> {
        simulation_item_table(self.model, &self.q_matrix()?)
    }

    /// Compact label used in result tables and file names.
    pub fn label(&self) -> String {
        format!(
            "{}-k{}-{}-mu_{}-rho{}-n{}",
            self.model, self.n_attrs, self.q_variant, self.mu_variant, self.rho, self.n_subjects
        )
    }
}

/// True item parameters of the standard designs. DINA-structured kinds use
/// guessing and slipping of 0.2 everywhere; GDINA-structured kinds spread the
/// probability evenly from 0.2 (no required attribute mastered) to 0.8 (all
/// mastered).
pub fn simulation_item_table(kind: ModelKind, q: &QMatrix) -> Result<ItemParamTable> {
    let theta: Vec<Vec<f64>> = (0..q.n_items())
        .map(|j| {
            let s = q.required_attrs(j).len();
            let cells = 1usize << s;
            if kind.is_dina_structured() {
                let mut t = vec![0.2; cells];
                t[cells - 1] = 0.8;
                Ok(t)
            } else {
                if s > 3 {
                    return Err(Error::Parameter(format!(
                        "the additive design covers items requiring at most 3 attributes; item {} requires {}",
                        j + 1,
                        s
                    )));
                }
                Ok((0..cells)
                    .map(|class| 0.2 + 0.6 * (class.count_ones() as f64) / s as f64)
                    .collect())
            }
        })
        .collect::<Result<_>>()?;
    ItemParamTable::from_q(q, theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_attribute_item_tables() {
        let q = builtin_q(3, QVariant::Complete).unwrap();
        let gdina = simulation_item_table(ModelKind::Gdina, &q).unwrap();
        assert_eq!(gdina.item(0).theta(), &[0.2, 0.8]);
    }

    #[test]
    fn two_attribute_additive_table() {
        let q = builtin_q(3, QVariant::Complete).unwrap();
        let gdina = simulation_item_table(ModelKind::PmGdina, &q).unwrap();
        // Item 10 requires two attributes.
        assert_eq!(gdina.item(9).theta(), &[0.2, 0.5, 0.5, 0.8]);
    }

    #[test]
    fn three_attribute_additive_table() {
        let q = builtin_q(3, QVariant::Complete).unwrap();
        let gdina = simulation_item_table(ModelKind::Gdina, &q).unwrap();
        // Item 18 requires all three; two mastered gives 0.6.
        let theta = gdina.item(17).theta();
        assert_eq!(theta.len(), 8);
        assert!((theta[0b011] - 0.6).abs() < 1e-15);
        assert!((theta[0b001] - 0.4).abs() < 1e-15);
        assert!((theta[0b111] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn dina_tables_are_two_level() {
        let q = builtin_q(5, QVariant::Incomplete).unwrap();
        let dina = simulation_item_table(ModelKind::Dina, &q).unwrap();
        for item in dina.items() {
            let full = item.full_class();
            for (a, &t) in item.theta().iter().enumerate() {
                let expected = if a == full { 0.8 } else { 0.2 };
                assert!((t - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn sigma_is_equicorrelated() {
        let cond = SimulationCondition {
            model: ModelKind::PmDina,
            n_attrs: 3,
            q_variant: QVariant::Complete,
            mu_variant: MuVariant::ConstantZero,
            rho: 0.8,
            n_subjects: 10,
            replications: 1,
            seed: 0,
        };
        let sigma = cond.sigma();
        assert_eq!(sigma[(0, 0)], 1.0);
        assert_eq!(sigma[(0, 1)], 0.8);
        assert!(cond.copula().is_ok());
    }

    #[test]
    fn nonconstant_means() {
        let mut cond = SimulationCondition {
            model: ModelKind::PmDina,
            n_attrs: 3,
            q_variant: QVariant::Complete,
            mu_variant: MuVariant::Nonconstant,
            rho: 0.0,
            n_subjects: 10,
            replications: 1,
            seed: 0,
        };
        assert_eq!(cond.mu().as_slice(), &[-1.0, 0.0, 1.0]);
        cond.n_attrs = 5;
        assert_eq!(cond.mu().as_slice(), &[-1.0, -0.5, 0.0, 0.5, 1.0]);
    }
}
