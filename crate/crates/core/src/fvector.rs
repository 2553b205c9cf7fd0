use std::fmt;

use serde::{Deserialize, Serialize};

/// Face counts `(f_0, f_1, ..., f_d)` by dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        Self(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// `f_i`, zero beyond the top dimension.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Dimension of the complex, `None` for a complex without non-empty faces.
    pub fn dim(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Alternating sum `f_0 - f_1 + f_2 - ...`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl From<Vec<u64>> for FVector {
    fn from(v: Vec<u64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
