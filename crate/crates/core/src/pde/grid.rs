use crate::error::{domain, Error, Result};

/// Samples on the uniform grid `x_min + i dx`, `i = 0..n`, with `n` a power of two.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    x_min: f64,
    dx: f64,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(x_min: f64, dx: f64, values: Vec<f64>) -> Result<Self> {
        if !x_min.is_finite() || !(dx > 0.0) || !dx.is_finite() {
            return Err(domain(format!("invalid grid: x_min = {x_min}, dx = {dx}")));
        }
        if !values.len().is_power_of_two() {
            return Err(domain(format!(
                "grid size must be a power of two, got {}",
                values.len()
            )));
        }
        Ok(Self { x_min, dx, values })
    }

    pub fn from_fn(x_min: f64, dx: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = (0..n).map(|i| f(x_min + i as f64 * dx)).collect();
        Self::new(x_min, dx, values)
    }

    /// `n` points on `[-half_width, half_width)`.
    pub fn symmetric(half_width: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if !(half_width > 0.0) {
            return Err(domain(format!("half width must be positive, got {half_width}")));
        }
        Self::from_fn(-half_width, 2.0 * half_width / n as f64, n, f)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.n()).map(|i| self.x(i)).collect()
    }

    /// `dx * sum(values)`.
    pub fn mass(&self) -> f64 {
        self.dx * self.values.iter().sum::<f64>()
    }

    pub fn ensure_same_grid(&self, other: &GridFunction) -> Result<()> {
        if self.x_min == other.x_min && self.dx == other.dx && self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!(
                "({}, {}, {}) vs ({}, {}, {})",
                self.x_min,
                self.dx,
                self.n(),
                other.x_min,
                other.dx,
                other.n()
            )))
        }
    }

    pub(crate) fn with_values(&self, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), self.n());
        Self {
            x_min: self.x_min,
            dx: self.dx,
            values,
        }
    }
}
