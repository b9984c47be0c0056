//! Tensor-product structure of a multipartite system and subsystem subsets.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest total dimension accepted for a state vector.
pub const MAX_TOTAL_DIM: usize = 1 << 20;

/// Ordered local dimensions (d_1, ..., d_N) of an N-partite system.
///
/// Subsystem indices are 1-based throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemShape {
    dims: Vec<usize>,
}

impl SystemShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidShape("no subsystems".into()));
        }
        let mut total: usize = 1;
        for (i, &d) in dims.iter().enumerate() {
            if d == 0 {
                return Err(Error::InvalidShape(format!("subsystem {} has dimension 0", i + 1)));
            }
            total = total
                .checked_mul(d)
                .filter(|&t| t <= MAX_TOTAL_DIM)
                .ok_or_else(|| {
                    Error::InvalidShape(format!("total dimension exceeds {MAX_TOTAL_DIM}"))
                })?;
        }
        Ok(SystemShape { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of subsystems N.
    pub fn subsystem_count(&self) -> usize {
        self.dims.len()
    }

    /// Product of all local dimensions.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Local dimension of the 1-based subsystem `index`.
    pub fn dim_of(&self, index: usize) -> usize {
        self.dims[index - 1]
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.dims.len() {
            return Err(Error::InvalidSubset(format!(
                "subsystem index {index} out of range 1..={}",
                self.dims.len()
            )));
        }
        Ok(())
    }

    /// Shape of the subsystems selected by `set`, in ascending index order.
    pub fn subshape(&self, set: &SubsystemSet) -> SystemShape {
        SystemShape {
            dims: set.ascending().iter().map(|&i| self.dim_of(i)).collect(),
        }
    }
}

/// A set of distinct 1-based subsystem indices.
///
/// The construction order is retained because it fixes which subsystem an
/// unfolding position refers to; the ascending form is the canonical key used
/// for reduced matrices and fingerprints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemSet {
    order: Vec<usize>,
    ascending: Vec<usize>,
}

impl SubsystemSet {
    pub fn new(indices: &[usize], shape: &SystemShape) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidSubset("empty subset".into()));
        }
        for &i in indices {
            shape.check_index(i)?;
        }
        let mut ascending = indices.to_vec();
        ascending.sort_unstable();
        if ascending.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset("duplicate subsystem index".into()));
        }
        Ok(SubsystemSet { order: indices.to_vec(), ascending })
    }

    pub fn pair(i: usize, j: usize, shape: &SystemShape) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidSubset(format!("pair indices must differ, got ({i},{i})")));
        }
        SubsystemSet::new(&[i, j], shape)
    }

    /// Indices in construction order; position x refers to `order()[x-1]`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Indices in ascending order (canonical form).
    pub fn ascending(&self) -> &[usize] {
        &self.ascending
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position (1-based) of `index` within the ascending form.
    pub fn ascending_position(&self, index: usize) -> Option<usize> {
        self.ascending.iter().position(|&i| i == index).map(|p| p + 1)
    }
}
