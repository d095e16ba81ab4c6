//! Uniform B-spline basis on an extended knot vector.
//!
//! Each KAN edge expands its scalar input in this basis. The grid covers a
//! fixed domain with `grid_size` intervals; `order` extra knots are padded on
//! each side so inputs outside the domain are still evaluated (the basis decays
//! to zero instead of being clamped, which would kill gradients).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Knot grid shared by every edge of a KAN layer.
///
/// Knots are uniformly spaced with step `(hi - lo) / grid_size`, extended by
/// `order` knots past each end, giving `grid_size + order` basis functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GridParams", into = "GridParams")]
pub struct SplineGrid {
    lo: f64,
    hi: f64,
    grid_size: usize,
    order: usize,
    knots: Vec<f64>,
}

/// Serializable grid constants; knots are rebuilt on load.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridParams {
    pub domain_lo: f64,
    pub domain_hi: f64,
    pub grid_size: usize,
    pub spline_order: usize,
}

impl Default for GridParams {
    fn default() -> Self {
        GridParams {
            domain_lo: -1.0,
            domain_hi: 1.0,
            grid_size: 5,
            spline_order: 3,
        }
    }
}

impl TryFrom<GridParams> for SplineGrid {
    type Error = Error;
    fn try_from(p: GridParams) -> Result<Self> {
        SplineGrid::new(p.domain_lo, p.domain_hi, p.grid_size, p.spline_order)
    }
}

impl From<SplineGrid> for GridParams {
    fn from(g: SplineGrid) -> GridParams {
        GridParams {
            domain_lo: g.lo,
            domain_hi: g.hi,
            grid_size: g.grid_size,
            spline_order: g.order,
        }
    }
}

impl Default for SplineGrid {
    /// Domain [-1, 1], 5 intervals, cubic.
    fn default() -> Self {
        SplineGrid::new(-1.0, 1.0, 5, 3).expect("default grid is valid")
    }
}

impl SplineGrid {
    pub fn new(lo: f64, hi: f64, grid_size: usize, order: usize) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Config(format!("invalid spline domain [{lo}, {hi}]")));
        }
        if grid_size == 0 {
            return Err(Error::Config("grid_size must be positive".into()));
        }
        let h = (hi - lo) / grid_size as f64;
        let knots: Vec<f64> = (0..grid_size + 2 * order + 1)
            .map(|i| lo + (i as f64 - order as f64) * h)
            .collect();
        Ok(SplineGrid {
            lo,
            hi,
            grid_size,
            order,
            knots,
        })
    }

    pub fn from_params(p: GridParams) -> Result<Self> {
        SplineGrid::try_from(p)
    }

    pub fn params(&self) -> GridParams {
        GridParams {
            domain_lo: self.lo,
            domain_hi: self.hi,
            grid_size: self.grid_size,
            spline_order: self.order,
        }
    }

    pub fn domain_lo(&self) -> f64 {
        self.lo
    }

    pub fn domain_hi(&self) -> f64 {
        self.hi
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// Number of basis functions: grid_size + order.
    pub fn num_basis(&self) -> usize {
        self.grid_size + self.order
    }

    /// Evaluates all basis functions at `x` into `out` (length `num_basis`).
    ///
    /// Iterative Cox-de Boor: order-0 indicators on the extended knots, then
    /// `order` lifting steps. The final extended interval is right-closed so
    /// the domain endpoint is covered in the order-0 case.
    pub fn basis_row(&self, x: f64, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.num_basis());
        let k = self.order;
        let t = &self.knots;
        let n0 = self.grid_size + 2 * k; // number of order-0 indicators
        let mut work = vec![0.0; n0];
        self.fill_order0(x, &mut work);
        for r in 1..=k {
            self.lift(x, r, &mut work);
        }
        out.copy_from_slice(&work[..self.num_basis()]);
    }

    /// Basis values and their derivatives w.r.t. `x`, both length `num_basis`.
    pub fn basis_and_deriv_row(&self, x: f64, basis: &mut [f64], deriv: &mut [f64]) {
        debug_assert_eq!(basis.len(), self.num_basis());
        debug_assert_eq!(deriv.len(), self.num_basis());
        let k = self.order;
        if k == 0 {
            self.basis_row(x, basis);
            deriv.iter_mut().for_each(|d| *d = 0.0);
            return;
        }
        let t = &self.knots;
        let n0 = self.grid_size + 2 * k;
        let mut work = vec![0.0; n0];
        self.fill_order0(x, &mut work);
        for r in 1..k {
            self.lift(x, r, &mut work);
        }
        // work[0..num_basis+1] now holds the order k-1 values.
        let kf = k as f64;
        for j in 0..self.num_basis() {
            let left = work[j] / (t[j + k] - t[j]);
            let right = work[j + 1] / (t[j + k + 1] - t[j + 1]);
            deriv[j] = kf * (left - right);
        }
        self.lift(x, k, &mut work);
        basis.copy_from_slice(&work[..self.num_basis()]);
    }

    fn fill_order0(&self, x: f64, work: &mut [f64]) {
        let t = &self.knots;
        let last = work.len() - 1;
        for (j, w) in work.iter_mut().enumerate() {
            let in_interval = if j == last {
                t[j] <= x && x <= t[j + 1]
            } else {
                t[j] <= x && x < t[j + 1]
            };
            *w = if in_interval { 1.0 } else { 0.0 };
        }
    }

    /// One Cox-de Boor lifting step: after the call, `work[0..len-r]` holds the
    /// order-`r` values. Uniform knots keep every denominator nonzero.
    fn lift(&self, x: f64, r: usize, work: &mut [f64]) {
        let t = &self.knots;
        for j in 0..work.len() - r {
            let a = (x - t[j]) / (t[j + r] - t[j]) * work[j];
            let b = (t[j + r + 1] - x) / (t[j + r + 1] - t[j + 1]) * work[j + 1];
            work[j] = a + b;
        }
    }
}
