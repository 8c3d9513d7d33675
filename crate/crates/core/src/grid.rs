//! Uniform time grids.

use crate::error::{Error, Result};

/// Uniform grid `t_i = t0 + i*h`, `i = 0..=n_steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t0: f64,
    h: f64,
    n_steps: usize,
}

impl TimeGrid {
    pub fn new(t0: f64, h: f64, n_steps: usize) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() || !t0.is_finite() {
            return Err(Error::InvalidArgument("grid step must be positive and finite"));
        }
        if n_steps == 0 {
            return Err(Error::InvalidArgument("grid needs at least one step"));
        }
        Ok(Self { t0, h, n_steps })
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// Number of nodes, `n_steps + 1`.
    pub fn n_nodes(&self) -> usize {
        self.n_steps + 1
    }

    pub fn node(&self, i: usize) -> f64 {
        self.t0 + self.h * i as f64
    }

    /// Midpoint of the step from `t_i` to `t_{i+1}`.
    pub fn midpoint(&self, i: usize) -> f64 {
        self.t0 + self.h * (i as f64 + 0.5)
    }

    pub fn t_end(&self) -> f64 {
        self.node(self.n_steps)
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_nodes()).map(move |i| self.node(i))
    }

    /// Grid over the same span with every step halved.
    pub fn refined(&self) -> Self {
        Self {
            t0: self.t0,
            h: self.h / 2.0,
            n_steps: self.n_steps * 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_and_midpoints() {
        let g = TimeGrid::new(1.0, 0.25, 4).unwrap();
        assert_eq!(g.n_nodes(), 5);
        assert_eq!(g.node(0), 1.0);
        assert_eq!(g.node(4), 2.0);
        assert_eq!(g.midpoint(0), 1.125);
        assert_eq!(g.t_end(), 2.0);
    }

    #[test]
    fn rejects_degenerate() {
        assert!(TimeGrid::new(0.0, 0.0, 3).is_err());
        assert!(TimeGrid::new(0.0, -1.0, 3).is_err());
        assert!(TimeGrid::new(0.0, 0.1, 0).is_err());
        assert!(TimeGrid::new(f64::NAN, 0.1, 1).is_err());
    }

    #[test]
    fn refinement_shares_nodes() {
        let g = TimeGrid::new(0.0, 0.5, 3).unwrap();
        let f = g.refined();
        assert_eq!(f.n_steps(), 6);
        for i in 0..=g.n_steps() {
            assert_eq!(g.node(i), f.node(2 * i));
        }
    }
}
