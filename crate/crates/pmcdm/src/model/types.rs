//! Domain types shared across the crate.
//!
//! All types validate their invariants at construction and are immutable
//! afterwards, so they are safe to share across threads.

use crate::error::{Error, Result};
use crate::model::probit::{norm_cdf, probit};
use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The four supported model kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    Dina,
    Gdina,
    PmDina,
    PmGdina,
}

impl ModelKind {
    /// Partial-mastery kinds carry a Gaussian copula population model;
    /// the others carry categorical class proportions.
    pub fn is_partial_mastery(self) -> bool {
        matches!(self, ModelKind::PmDina | ModelKind::PmGdina)
    }

    /// DINA-structured kinds constrain each item's table to two levels
    /// (guessing / one minus slipping).
    pub fn is_dina_structured(self) -> bool {
        matches!(self, ModelKind::Dina | ModelKind::PmDina)
    }

    /// The classical counterpart of a partial-mastery kind and vice versa.
    pub fn counterpart(self) -> ModelKind {
        match self {
            ModelKind::Dina => ModelKind::PmDina,
            ModelKind::PmDina => ModelKind::Dina,
            ModelKind::Gdina => ModelKind::PmGdina,
            ModelKind::PmGdina => ModelKind::Gdina,
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModelKind::Dina => "dina",
            ModelKind::Gdina => "gdina",
            ModelKind::PmDina => "pm-dina",
            ModelKind::PmGdina => "pm-gdina",
        };
        f.write_str(s)
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dina" => Ok(ModelKind::Dina),
            "gdina" => Ok(ModelKind::Gdina),
            "pm-dina" | "pmdina" | "pm_dina" => Ok(ModelKind::PmDina),
            "pm-gdina" | "pmgdina" | "pm_gdina" => Ok(ModelKind::PmGdina),
            other => Err(Error::Parameter(format!(
                "unknown model kind {other:?}; expected dina, gdina, pm-dina or pm-gdina"
            ))),
        }
    }
}

/// J x K binary item-attribute requirement matrix. Row `j` lists the
/// attributes item `j` requires; every item must require at least one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMatrix {
    data: Vec<u8>,
    n_items: usize,
    n_attrs: usize,
}

impl QMatrix {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Data("Q-matrix has no rows".into()));
        }
        let n_attrs = rows[0].len();
        if n_attrs == 0 {
            return Err(Error::Data("Q-matrix has no columns".into()));
        }
        let mut data = Vec::with_capacity(rows.len() * n_attrs);
        for (j, row) in rows.iter().enumerate() {
            if row.len() != n_attrs {
                return Err(Error::Data(format!(
                    "Q-matrix row {} has {} columns, expected {}",
                    j + 1,
                    row.len(),
                    n_attrs
                )));
            }
            data.extend_from_slice(row);
        }
        Self::from_flat(data, rows.len(), n_attrs)
    }

    pub fn from_flat(data: Vec<u8>, n_items: usize, n_attrs: usize) -> Result<Self> {
        if n_items == 0 || n_attrs == 0 || data.len() != n_items * n_attrs {
            return Err(Error::Dimension(format!(
                "Q-matrix data of length {} does not match {} x {}",
                data.len(),
                n_items,
                n_attrs
            )));
        }
        for (idx, &v) in data.iter().enumerate() {
            if v > 1 {
                return Err(Error::Data(format!(
                    "Q-matrix entry at row {}, column {} is {}; entries must be 0 or 1",
                    idx / n_attrs + 1,
                    idx % n_attrs + 1,
                    v
                )));
            }
        }
        for j in 0..n_items {
            if data[j * n_attrs..(j + 1) * n_attrs].iter().all(|&v| v == 0) {
                return Err(Error::Data(format!(
                    "Q-matrix row {} is all zero; each item must require at least one attribute",
                    j + 1
                )));
            }
        }
        Ok(QMatrix {
            data,
            n_items,
            n_attrs,
        })
    }

    pub fn n_items(&self) -> usize {
        self.n_items
    }

    pub fn n_attrs(&self) -> usize {
        self.n_attrs
    }

    pub fn row(&self, j: usize) -> &[u8] {
        &self.data[j * self.n_attrs..(j + 1) * self.n_attrs]
    }

    /// Indices of the attributes item `j` requires, in ascending order.
    pub fn required_attrs(&self, j: usize) -> Vec<usize> {
        self.row(j)
            .iter()
            .enumerate()
            .filter_map(|(k, &q)| (q == 1).then_some(k))
            .collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks_exact(self.n_attrs)
    }
}

/// Dense 0/1 matrix. Used for response matrices (subjects x items) and
/// attribute profile matrices (subjects x attributes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryMatrix {
    data: Vec<u8>,
    n_rows: usize,
    n_cols: usize,
}

/// N x J observed binary responses.
pub type ResponseMatrix = BinaryMatrix;
/// N x K binary attribute profiles.
pub type ProfileMatrix = BinaryMatrix;

impl BinaryMatrix {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Data("binary matrix has no rows".into()));
        }
        let n_cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * n_cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::Data(format!(
                    "row {} has {} columns, expected {}",
                    i + 1,
                    row.len(),
                    n_cols
                )));
            }
            data.extend_from_slice(row);
        }
        Self::from_flat(data, rows.len(), n_cols)
    }

    pub fn from_flat(data: Vec<u8>, n_rows: usize, n_cols: usize) -> Result<Self> {
        if n_rows == 0 || n_cols == 0 || data.len() != n_rows * n_cols {
            return Err(Error::Dimension(format!(
                "binary matrix data of length {} does not match {} x {}",
                data.len(),
                n_rows,
                n_cols
            )));
        }
        if let Some(idx) = data.iter().position(|&v| v > 1) {
            return Err(Error::Data(format!(
                "entry at row {}, column {} is {}; entries must be 0 or 1",
                idx / n_cols + 1,
                idx % n_cols + 1,
                data[idx]
            )));
        }
        Ok(BinaryMatrix {
            data,
            n_rows,
            n_cols,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.n_cols + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks_exact(self.n_cols)
    }
}

/// N x K partial mastery scores, each entry in the closed interval `[0,1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MasteryScores {
    data: Vec<f64>,
    n_subjects: usize,
    n_attrs: usize,
}

impl MasteryScores {
    pub fn from_flat(data: Vec<f64>, n_subjects: usize, n_attrs: usize) -> Result<Self> {
        if n_subjects == 0 || n_attrs == 0 || data.len() != n_subjects * n_attrs {
            return Err(Error::Dimension(format!(
                "mastery score data of length {} does not match {} x {}",
                data.len(),
                n_subjects,
                n_attrs
            )));
        }
        if let Some(idx) = data.iter().position(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::Data(format!(
                "mastery score at row {}, column {} is {}; scores lie in [0,1]",
                idx / n_attrs + 1,
                idx % n_attrs + 1,
                data[idx]
            )));
        }
        Ok(MasteryScores {
            data,
            n_subjects,
            n_attrs,
        })
    }

    pub fn n_subjects(&self) -> usize {
        self.n_subjects
    }

    pub fn n_attrs(&self) -> usize {
        self.n_attrs
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.data[i * self.n_attrs + k]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n_attrs..(i + 1) * self.n_attrs]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.n_attrs)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Probit transform of every score (with boundary clamping).
    pub fn to_gaussian(&self) -> GaussianScores {
        GaussianScores {
            data: self.data.iter().map(|&d| probit(d)).collect(),
            n_subjects: self.n_subjects,
            n_attrs: self.n_attrs,
        }
    }
}

/// N x K scores on the Gaussian scale (unbounded probit transforms of
/// mastery scores).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianScores {
    data: Vec<f64>,
    n_subjects: usize,
    n_attrs: usize,
}

impl GaussianScores {
    pub fn from_flat(data: Vec<f64>, n_subjects: usize, n_attrs: usize) -> Result<Self> {
        if n_subjects == 0 || n_attrs == 0 || data.len() != n_subjects * n_attrs {
            return Err(Error::Dimension(format!(
                "gaussian score data of length {} does not match {} x {}",
                data.len(),
                n_subjects,
                n_attrs
            )));
        }
        Ok(GaussianScores {
            data,
            n_subjects,
            n_attrs,
        })
    }

    pub fn n_subjects(&self) -> usize {
        self.n_subjects
    }

    pub fn n_attrs(&self) -> usize {
        self.n_attrs
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.data[i * self.n_attrs + k]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n_attrs..(i + 1) * self.n_attrs]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Standard-normal CDF of every entry, back on the mastery scale.
    pub fn to_mastery(&self) -> MasteryScores {
        MasteryScores {
            data: self.data.iter().map(|&x| norm_cdf(x)).collect(),
            n_subjects: self.n_subjects,
            n_attrs: self.n_attrs,
        }
    }
}

/// Population model for the Gaussian-scale scores: mean vector and a
/// symmetric positive-definite covariance.
#[derive(Debug, Clone, PartialEq)]
pub struct CopulaParams {
    mu: DVector<f64>,
    sigma: DMatrix<f64>,
}

impl CopulaParams {
    pub fn new(mu: DVector<f64>, sigma: DMatrix<f64>) -> Result<Self> {
        let k = mu.len();
        if sigma.nrows() != k || sigma.ncols() != k {
            return Err(Error::Dimension(format!(
                "covariance is {}x{} but mean has length {}",
                sigma.nrows(),
                sigma.ncols(),
                k
            )));
        }
        for i in 0..k {
            for j in (i + 1)..k {
                if (sigma[(i, j)] - sigma[(j, i)]).abs() > 1e-10 {
                    return Err(Error::Parameter(format!(
                        "covariance is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if Cholesky::new(sigma.clone()).is_none() {
            return Err(Error::Parameter(
                "covariance is not positive definite (Cholesky factorization failed)".into(),
            ));
        }
        Ok(CopulaParams { mu, sigma })
    }

    pub fn n_attrs(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &DVector<f64> {
        &self.mu
    }

    pub fn sigma(&self) -> &DMatrix<f64> {
        &self.sigma
    }

    pub fn cholesky(&self) -> Cholesky<f64, Dyn> {
        // Positive definiteness was checked at construction.
        Cholesky::new(self.sigma.clone()).expect("covariance verified positive definite")
    }
}

/// One item's positive-response probabilities indexed by reduced attribute
/// class.
///
/// The reduced class of a profile `alpha` restricts it to the item's required
/// attributes; bit `pos` of the class index corresponds to `required[pos]`
/// (the first required attribute is the least significant bit). Profiles
/// agreeing on the required set share a table cell, which encodes the
/// assumption that nonrequired attributes do not change the response
/// probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ItemTable {
    required: Vec<usize>,
    theta: Vec<f64>,
}

impl ItemTable {
    pub fn new(required: Vec<usize>, theta: Vec<f64>) -> Result<Self> {
        if required.is_empty() {
            return Err(Error::Data("item requires no attributes".into()));
        }
        if theta.len() != 1 << required.len() {
            return Err(Error::Dimension(format!(
                "item with {} required attributes needs {} table cells, got {}",
                required.len(),
                1usize << required.len(),
                theta.len()
            )));
        }
        if let Some(idx) = theta.iter().position(|t| !(t.is_finite() && *t > 0.0 && *t < 1.0)) {
            return Err(Error::Parameter(format!(
                "table probability at class {} is {}; probabilities lie strictly in (0,1)",
                idx, theta[idx]
            )));
        }
        Ok(ItemTable { required, theta })
    }

    pub fn required(&self) -> &[usize] {
        &self.required
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn n_cells(&self) -> usize {
        self.theta.len()
    }

    /// Index of the class with every required attribute mastered.
    pub fn full_class(&self) -> usize {
        self.theta.len() - 1
    }

    /// Reduced class index of a full-length profile.
    pub fn reduced_class(&self, alpha: &[u8]) -> usize {
        self.required
            .iter()
            .enumerate()
            .map(|(pos, &k)| (alpha[k] as usize) << pos)
            .sum()
    }
}

/// Per-item response probability tables for a whole test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ItemParamTable {
    items: Vec<ItemTable>,
    n_attrs: usize,
}

impl ItemParamTable {
    pub fn new(items: Vec<ItemTable>, n_attrs: usize) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::Data("item parameter table has no items".into()));
        }
        for (j, item) in items.iter().enumerate() {
            if let Some(&k) = item.required().iter().find(|&&k| k >= n_attrs) {
                return Err(Error::Dimension(format!(
                    "item {} requires attribute {} but the test has {} attributes",
                    j + 1,
                    k + 1,
                    n_attrs
                )));
            }
        }
        Ok(ItemParamTable { items, n_attrs })
    }

    /// Build a table from a Q-matrix and per-item reduced theta vectors.
    pub fn from_q(q: &QMatrix, theta: Vec<Vec<f64>>) -> Result<Self> {
        if theta.len() != q.n_items() {
            return Err(Error::Dimension(format!(
                "{} theta vectors for {} items",
                theta.len(),
                q.n_items()
            )));
        }
        let items = theta
            .into_iter()
            .enumerate()
            .map(|(j, t)| ItemTable::new(q.required_attrs(j), t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(items, q.n_attrs())
    }

    pub fn n_items(&self) -> usize {
        self.items.len()
    }

    pub fn n_attrs(&self) -> usize {
        self.n_attrs
    }

    pub fn item(&self, j: usize) -> &ItemTable {
        &self.items[j]
    }

    pub fn items(&self) -> &[ItemTable] {
        &self.items
    }

    /// Total number of table cells across items.
    pub fn n_cells(&self) -> usize {
        self.items.iter().map(|i| i.n_cells()).sum()
    }

    /// Positive-response probability for item `j` under profile `alpha`.
    /// Any two profiles agreeing on the item's required set return the same
    /// value.
    pub fn theta(&self, j: usize, alpha: &[u8]) -> Result<f64> {
        let item = self
            .items
            .get(j)
            .ok_or_else(|| Error::Dimension(format!("item index {} out of range ({} items)", j, self.items.len())))?;
        if alpha.len() != self.n_attrs {
            return Err(Error::Dimension(format!(
                "profile has length {}, expected {}",
                alpha.len(),
                self.n_attrs
            )));
        }
        Ok(item.theta()[item.reduced_class(alpha)])
    }
}

/// Guessing and slipping parameters of a DINA-structured test, with the
/// identifiability constraint `1 - s_j > g_j` on every item.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DinaItemParams {
    guess: Vec<f64>,
    slip: Vec<f64>,
}

impl DinaItemParams {
    pub fn new(guess: Vec<f64>, slip: Vec<f64>) -> Result<Self> {
        if guess.len() != slip.len() || guess.is_empty() {
            return Err(Error::Dimension(format!(
                "{} guessing vs {} slipping parameters",
                guess.len(),
                slip.len()
            )));
        }
        for j in 0..guess.len() {
            let (g, s) = (guess[j], slip[j]);
            if !(g > 0.0 && g < 1.0 && s > 0.0 && s < 1.0) {
                return Err(Error::Parameter(format!(
                    "item {}: guessing {} and slipping {} must lie in (0,1)",
                    j + 1,
                    g,
                    s
                )));
            }
            if 1.0 - s <= g {
                return Err(Error::Parameter(format!(
                    "item {}: requires 1 - slipping > guessing, got 1 - {} <= {}",
                    j + 1,
                    s,
                    g
                )));
            }
        }
        Ok(DinaItemParams { guess, slip })
    }

    pub fn constant(n_items: usize, guess: f64, slip: f64) -> Result<Self> {
        Self::new(vec![guess; n_items], vec![slip; n_items])
    }

    pub fn n_items(&self) -> usize {
        self.guess.len()
    }

    pub fn guess(&self) -> &[f64] {
        &self.guess
    }

    pub fn slip(&self) -> &[f64] {
        &self.slip
    }

    /// Expand to the reduced-table form: the full class gets `1 - s_j`,
    /// every other class gets `g_j`.
    pub fn to_table(&self, q: &QMatrix) -> Result<ItemParamTable> {
        if q.n_items() != self.guess.len() {
            return Err(Error::Dimension(format!(
                "{} items in Q-matrix vs {} parameter pairs",
                q.n_items(),
                self.guess.len()
            )));
        }
        let theta = (0..q.n_items())
            .map(|j| {
                let cells = 1usize << q.required_attrs(j).len();
                let mut t = vec![self.guess[j]; cells];
                t[cells - 1] = 1.0 - self.slip[j];
                t
            })
            .collect();
        ItemParamTable::from_q(q, theta)
    }

    /// Recover (g, s) from a two-level table. Fails if any item's table is
    /// not DINA-structured.
    pub fn from_table(table: &ItemParamTable) -> Result<Self> {
        let mut guess = Vec::with_capacity(table.n_items());
        let mut slip = Vec::with_capacity(table.n_items());
        for (j, item) in table.items().iter().enumerate() {
            let full = item.full_class();
            let g = item.theta()[0];
            for (a, &t) in item.theta().iter().enumerate() {
                if a != full && (t - g).abs() > 1e-12 {
                    return Err(Error::Parameter(format!(
                        "item {} table is not DINA-structured: class {} differs from class 0",
                        j + 1,
                        a
                    )));
                }
            }
            guess.push(g);
            slip.push(1.0 - item.theta()[full]);
        }
        Self::new(guess, slip)
    }
}

/// Probability vector over all `2^K` attribute profiles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassProportions {
    p: Vec<f64>,
}

impl ClassProportions {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() || !p.len().is_power_of_two() {
            return Err(Error::Dimension(format!(
                "class proportion vector has length {}; expected a power of two",
                p.len()
            )));
        }
        if let Some(idx) = p.iter().position(|v| !(*v > 0.0 && *v < 1.0)) {
            return Err(Error::Parameter(format!(
                "class proportion {} is {}; proportions lie strictly in (0,1)",
                idx, p[idx]
            )));
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::Parameter(format!("class proportions sum to {total}, not 1")));
        }
        Ok(ClassProportions { p })
    }

    pub fn uniform(n_attrs: usize) -> Self {
        let n = 1usize << n_attrs;
        ClassProportions {
            p: vec![1.0 / n as f64; n],
        }
    }

    pub fn n_classes(&self) -> usize {
        self.p.len()
    }

    pub fn n_attrs(&self) -> usize {
        self.p.len().trailing_zeros() as usize
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.p
    }
}

/// Profile for class index `idx`: bit `k` of the index is attribute `k`.
pub fn profile_from_index(idx: usize, n_attrs: usize) -> Vec<u8> {
    (0..n_attrs).map(|k| ((idx >> k) & 1) as u8).collect()
}

/// Inverse of [`profile_from_index`].
pub fn profile_index(alpha: &[u8]) -> usize {
    alpha.iter().enumerate().map(|(k, &a)| (a as usize) << k).sum()
}

/// All `2^K` profiles in index order.
pub fn all_profiles(n_attrs: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1usize << n_attrs).map(move |idx| profile_from_index(idx, n_attrs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_matrix_rejects_all_zero_row() {
        let err = QMatrix::from_rows(vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::Data(_)));
        assert!(err.to_string().contains("row 2"));
    }

    #[test]
    fn q_matrix_rejects_non_binary() {
        let err = QMatrix::from_rows(vec![vec![1, 2]]).unwrap_err();
        assert!(err.to_string().contains("column 2"));
    }

    #[test]
    fn binary_matrix_reports_bad_cell() {
        let err = BinaryMatrix::from_flat(vec![0, 1, 3, 0], 2, 2).unwrap_err();
        assert!(err.to_string().contains("row 2, column 1"));
    }

    #[test]
    fn copula_requires_positive_definite() {
        let mu = DVector::zeros(2);
        let sigma = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(CopulaParams::new(mu, sigma).is_err());
    }

    #[test]
    fn copula_requires_symmetry() {
        let mu = DVector::zeros(2);
        let sigma = DMatrix::from_row_slice(2, 2, &[1.0, 0.3, 0.2, 1.0]);
        assert!(CopulaParams::new(mu, sigma).is_err());
    }

    #[test]
    fn reduced_class_ignores_nonrequired_attributes() {
        let item = ItemTable::new(vec![0, 2], vec![0.2, 0.5, 0.5, 0.8]).unwrap();
        assert_eq!(item.reduced_class(&[1, 0, 0]), 1);
        assert_eq!(item.reduced_class(&[1, 1, 0]), 1);
        assert_eq!(item.reduced_class(&[0, 1, 1]), 2);
        assert_eq!(item.reduced_class(&[1, 0, 1]), 3);
    }

    #[test]
    fn dina_identifiability_constraint_enforced() {
        assert!(DinaItemParams::new(vec![0.5], vec![0.5]).is_err());
        assert!(DinaItemParams::new(vec![0.2], vec![0.2]).is_ok());
    }

    #[test]
    fn dina_table_round_trip() {
        let q = QMatrix::from_rows(vec![vec![1, 0], vec![1, 1]]).unwrap();
        let params = DinaItemParams::constant(2, 0.2, 0.2).unwrap();
        let table = params.to_table(&q).unwrap();
        assert_eq!(table.item(1).theta(), &[0.2, 0.2, 0.2, 0.8]);
        let back = DinaItemParams::from_table(&table).unwrap();
        for j in 0..2 {
            assert!((back.guess()[j] - 0.2).abs() < 1e-12);
            assert!((back.slip()[j] - 0.2).abs() < 1e-12);
        }
    }

    #[test]
    fn class_proportions_must_sum_to_one() {
        assert!(ClassProportions::new(vec![0.5, 0.4]).is_err());
        assert!(ClassProportions::new(vec![0.5, 0.5]).is_ok());
    }

    #[test]
    fn profile_index_round_trip() {
        for idx in 0..8 {
            assert_eq!(profile_index(&profile_from_index(idx, 3)), idx);
        }
    }

    #[test]
    fn mastery_scores_validate_range() {
        assert!(MasteryScores::from_flat(vec![0.0, 1.0, 0.5, 1.1], 2, 2).is_err());
        let d = MasteryScores::from_flat(vec![0.0, 1.0, 0.5, 0.25], 2, 2).unwrap();
        assert_eq!(d.row(1), &[0.5, 0.25]);
    }
}
