//! Built-in 20-item Q-matrix designs for K = 3 and K = 5.
//!
//! The "complete" variants contain a K x K identity submatrix (every
//! attribute has a single-attribute item); the "incomplete" variants contain
//! none.

use crate::error::{Error, Result};
use crate::model::QMatrix;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QVariant {
    /// Contains a K x K identity submatrix.
    Complete,
    /// No single-attribute items.
    Incomplete,
}

impl fmt::Display for QVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QVariant::Complete => "complete",
            QVariant::Incomplete => "incomplete",
        })
    }
}

impl FromStr for QVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "complete" => Ok(QVariant::Complete),
            "incomplete" => Ok(QVariant::Incomplete),
            other => Err(Error::Parameter(format!(
                "unknown Q-matrix variant {other:?}; expected complete or incomplete"
            ))),
        }
    }
}

#[rustfmt::skip]
const Q3: [[u8; 3]; 20] = [
    [1, 0, 0], [0, 1, 0], [0, 0, 1],
    [1, 0, 0], [0, 1, 0], [0, 0, 1],
    [1, 0, 0], [0, 1, 0], [0, 0, 1],
    [1, 1, 0], [1, 0, 1], [0, 1, 1],
    [1, 1, 0], [1, 0, 1], [0, 1, 1],
    [1, 1, 0], [1, 0, 1],
    [1, 1, 1], [1, 1, 1], [1, 1, 1],
];

#[rustfmt::skip]
const Q3_PRIME: [[u8; 3]; 20] = [
    [0, 1, 1], [1, 0, 1], [1, 1, 0],
    [0, 1, 1], [1, 0, 1], [1, 1, 0],
    [0, 1, 1], [1, 0, 1], [1, 1, 0],
    [1, 1, 0], [1, 0, 1], [0, 1, 1],
    [1, 1, 0], [1, 0, 1], [0, 1, 1],
    [1, 1, 0], [1, 0, 1],
    [1, 1, 1], [1, 1, 1], [1, 1, 1],
];

#[rustfmt::skip]
const Q5: [[u8; 5]; 20] = [
    [1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1],
    [1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1], [1, 0, 0, 0, 1],
    [1, 1, 1, 0, 0], [0, 1, 1, 1, 0], [0, 0, 1, 1, 1], [1, 0, 0, 1, 1], [1, 1, 0, 0, 1],
];

#[rustfmt::skip]
const Q5_PRIME: [[u8; 5]; 20] = [
    [1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1], [1, 0, 0, 0, 1],
    [1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1], [1, 0, 0, 0, 1],
    [1, 1, 1, 0, 0], [0, 1, 1, 1, 0], [0, 0, 1, 1, 1], [1, 0, 0, 1, 1], [1, 1, 0, 0, 1],
    [1, 1, 1, 0, 0], [0, 1, 1, 1, 0], [0, 0, 1, 1, 1], [1, 0, 0, 1, 1], [1, 1, 0, 0, 1],
];

/// One of the four built-in 20-item designs. Supported attribute counts are
/// 3 and 5.
pub fn builtin_q(n_attrs: usize, variant: QVariant) -> Result<QMatrix> {
    let rows: Vec<Vec<u8>> = match (n_attrs, variant) {
        (3, QVariant::Complete) => Q3.iter().map(|r| r.to_vec()).collect(),
        (3, QVariant::Incomplete) => Q3_PRIME.iter().map(|r| r.to_vec()).collect(),
        (5, QVariant::Complete) => Q5.iter().map(|r| r.to_vec()).collect(),
        (5, QVariant::Incomplete) => Q5_PRIME.iter().map(|r| r.to_vec()).collect(),
        (k, _) => {
            return Err(Error::Parameter(format!(
                "no built-in Q-matrix for K = {k}; supported K are 3 and 5"
            )))
        }
    };
    QMatrix::from_rows(rows)
}
