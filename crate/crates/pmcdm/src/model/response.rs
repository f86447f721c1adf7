//! Item response functions and table parameterizations.

use crate::error::{Error, Result};
use crate::model::types::ItemParamTable;

/// Error-free conjunctive response: 1 iff `alpha` dominates `q_row`
/// coordinatewise.
pub fn ideal_response_dina(alpha: &[u8], q_row: &[u8]) -> Result<u8> {
    if alpha.len() != q_row.len() {
        return Err(Error::Dimension(format!(
            "profile has length {} but q-vector has length {}",
            alpha.len(),
            q_row.len()
        )));
    }
    Ok(u8::from(alpha.iter().zip(q_row).all(|(&a, &q)| a >= q)))
}

/// DINA response probability `(1 - s)^xi * g^(1 - xi)`.
pub fn theta_dina(guess: f64, slip: f64, ideal: u8) -> f64 {
    if ideal == 1 {
        1.0 - slip
    } else {
        guess
    }
}

/// Expand effect coefficients into a reduced probability table.
///
/// `effects` is indexed by subsets of the item's required attributes using
/// the same bit convention as table classes: entry `t` is the interaction
/// effect of the attribute subset with bit mask `t` (`t = 0` is the
/// intercept). The table value at class `a` is the sum of effects over all
/// subsets of `a`. Fails if any resulting probability leaves `(0,1)`.
pub fn gdina_effects_to_table(effects: &[f64]) -> Result<Vec<f64>> {
    if effects.is_empty() || !effects.len().is_power_of_two() {
        return Err(Error::Dimension(format!(
            "effect vector has length {}; expected a power of two",
            effects.len()
        )));
    }
    let bits = effects.len().trailing_zeros();
    let mut table = effects.to_vec();
    for b in 0..bits {
        for mask in 0..table.len() {
            if mask & (1 << b) != 0 {
                table[mask] += table[mask ^ (1 << b)];
            }
        }
    }
    if let Some(idx) = table.iter().position(|t| !(*t > 0.0 && *t < 1.0)) {
        return Err(Error::Parameter(format!(
            "effects produce probability {} at class {}; values must lie in (0,1)",
            table[idx], idx
        )));
    }
    Ok(table)
}

/// Inverse of [`gdina_effects_to_table`]: recover effects from a table by
/// inclusion-exclusion over attribute subsets.
pub fn table_to_gdina_effects(table: &[f64]) -> Vec<f64> {
    let bits = table.len().trailing_zeros();
    let mut effects = table.to_vec();
    for b in 0..bits {
        for mask in 0..effects.len() {
            if mask & (1 << b) != 0 {
                effects[mask] -= effects[mask ^ (1 << b)];
            }
        }
    }
    effects
}

/// One monotonicity violation: a class pair ordered by mastery whose table
/// values are reversed.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityViolation {
    pub item: usize,
    /// Reduced class with strictly fewer mastered required attributes.
    pub lower_class: usize,
    /// Reduced class that dominates `lower_class` coordinatewise.
    pub upper_class: usize,
    pub lower_theta: f64,
    pub upper_theta: f64,
}

#[derive(Debug, Clone, Default)]
pub struct MonotonicityReport {
    pub violations: Vec<MonotonicityViolation>,
}

impl MonotonicityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every item's table for monotonicity: whenever reduced class `a`
/// dominates `a'` (masters a superset of required attributes), the table must
/// satisfy `theta[a] >= theta[a']`. Returns all violating pairs.
pub fn monotonicity_check(table: &ItemParamTable) -> MonotonicityReport {
    let mut violations = Vec::new();
    for (j, item) in table.items().iter().enumerate() {
        let theta = item.theta();
        for upper in 0..theta.len() {
            for lower in 0..theta.len() {
                if lower != upper && lower & upper == lower && theta[upper] < theta[lower] {
                    violations.push(MonotonicityViolation {
                        item: j,
                        lower_class: lower,
                        upper_class: upper,
                        lower_theta: theta[lower],
                        upper_theta: theta[upper],
                    });
                }
            }
        }
    }
    MonotonicityReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::types::{DinaItemParams, QMatrix};

    #[test]
    fn ideal_response_examples() {
        assert_eq!(ideal_response_dina(&[1, 1, 1], &[1, 0, 1]).unwrap(), 1);
        assert_eq!(ideal_response_dina(&[0, 1, 1], &[1, 0, 1]).unwrap(), 0);
        assert_eq!(ideal_response_dina(&[0, 1, 0], &[0, 1, 0]).unwrap(), 1);
        assert!(ideal_response_dina(&[1, 0], &[1, 0, 1]).is_err());
    }

    #[test]
    fn theta_dina_examples() {
        assert!((theta_dina(0.2, 0.2, 1) - 0.8).abs() < 1e-15);
        assert!((theta_dina(0.2, 0.2, 0) - 0.2).abs() < 1e-15);
        assert!((theta_dina(0.0, 0.0, 1) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn additive_effects_expand_to_expected_table() {
        // Intercept 0.2, two main effects of 0.3, no interaction.
        let table = gdina_effects_to_table(&[0.2, 0.3, 0.3, 0.0]).unwrap();
        assert_eq!(table, vec![0.2, 0.5, 0.5, 0.8]);
    }

    #[test]
    fn intercept_only_gives_constant_table() {
        let table = gdina_effects_to_table(&[0.4, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(table, vec![0.4; 4]);
    }

    #[test]
    fn inclusion_exclusion_recovers_interaction() {
        // beta_12 = 0.8 - 0.5 - 0.5 + 0.2 = 0.
        let effects = table_to_gdina_effects(&[0.2, 0.5, 0.5, 0.8]);
        assert!((effects[3] - 0.0).abs() < 1e-15);
        assert!((effects[0] - 0.2).abs() < 1e-15);
        assert!((effects[1] - 0.3).abs() < 1e-15);
    }

    #[test]
    fn effects_out_of_range_rejected() {
        assert!(gdina_effects_to_table(&[0.8, 0.3, 0.3, 0.0]).is_err());
    }

    #[test]
    fn dina_tables_are_monotone() {
        let q = QMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]).unwrap();
        let table = DinaItemParams::constant(2, 0.2, 0.2).unwrap().to_table(&q).unwrap();
        assert!(monotonicity_check(&table).is_clean());
    }

    #[test]
    fn additive_table_is_monotone() {
        let q = QMatrix::from_rows(vec![vec![1, 1]]).unwrap();
        let table = ItemParamTable::from_q(&q, vec![vec![0.2, 0.5, 0.5, 0.8]]).unwrap();
        assert!(monotonicity_check(&table).is_clean());
    }

    #[test]
    fn reversed_cell_is_flagged() {
        // A table where mastering the first attribute lowers the probability.
        let q = QMatrix::from_rows(vec![vec![1, 1]]).unwrap();
        let table = ItemParamTable::from_q(&q, vec![vec![0.70, 0.46, 0.80, 0.94]]).unwrap();
        let report = monotonicity_check(&table);
        assert!(!report.is_clean());
        let v = &report.violations[0];
        assert_eq!((v.item, v.lower_class, v.upper_class), (0, 0, 1));
        assert!((v.upper_theta - 0.46).abs() < 1e-15);
        assert!((v.lower_theta - 0.70).abs() < 1e-15);
    }
}
