// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{invalid, Error, Result};

/// Default cap on the number of points of a tensor grid.
pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

/// Gauss–Hermite rule for the standard normal density.
///
/// `Σ w_i f(x_i) = E[f(Z)]`, `Z ~ N(0, 1)`, exactly for polynomials of degree
/// at most `2n − 1`. Nodes are the eigenvalues of the Jacobi matrix of the
/// probabilists' Hermite recurrence `x He_k = He_{k+1} + k He_{k−1}` and the
/// weights are the squared first components of its unit eigenvectors
/// (Golub–Welsch).
#[derive(Debug, Clone, PartialEq)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermite {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("a quadrature rule needs at least one node"));
        }
        let mut jacobi = DMatrix::<f64>::zeros(n, n);
        for k in 1..n {
            let b = (k as f64).sqrt();
            jacobi[(k - 1, k)] = b;
            jacobi[(k, k - 1)] = b;
        }
        let eig = SymmetricEigen::new(jacobi);
        let mut pairs: Vec<(f64, f64)> =
            (0..n).map(|i| (eig.eigenvalues[i], eig.eigenvectors[(0, i)].powi(2))).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        // The exact rule is symmetric about 0; enforce it so odd moments vanish.
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            let j = n - 1 - i;
            nodes[i] = 0.5 * (pairs[i].0 - pairs[j].0);
            weights[i] = 0.5 * (pairs[i].1 + pairs[j].1);
        }
        let total: f64 = weights.iter().sum();
        weights.iter_mut().for_each(|w| *w /= total);
        Ok(Self { nodes, weights })
    }

    /// Shared, lazily computed rule with `n` nodes.
    pub fn cached(n: usize) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussHermite>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(rule) = cache.lock().expect("quadrature cache poisoned").get(&n) {
            return Ok(rule.clone());
        }
        let rule = Arc::new(Self::new(n)?);
        cache.lock().expect("quadrature cache poisoned").insert(n, rule.clone());
        Ok(rule)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `E[f(σ Z)]` for `Z ~ N(0, 1)`.
    pub fn integrate(&self, sigma: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(sigma * x)).sum()
    }
}

/// `E[f(σ Z)]` for `Z ~ N(0, I_dims)` on the tensor grid of `rule`.
///
/// Points are visited in a fixed odometer order (last coordinate fastest) and
/// summed sequentially, so results are reproducible bit for bit.
pub fn tensor_integrate(
    rule: &GaussHermite,
    sigma: f64,
    dims: usize,
    cap: u64,
    mut f: impl FnMut(&[f64]) -> f64,
) -> Result<f64> {
    let n = rule.len();
    let requested = (n as u128).checked_pow(dims as u32).unwrap_or(u128::MAX);
    if requested > cap as u128 {
        return Err(Error::NodeCap { requested, cap });
    }
    let mut idx = vec![0usize; dims];
    let mut point: Vec<f64> = vec![sigma * rule.nodes[0]; dims];
    let mut total = 0.0;
    loop {
        let w: f64 = idx.iter().map(|&i| rule.weights[i]).product();
        total += w * f(&point);
        let mut d = dims;
        loop {
            if d == 0 {
                return Ok(total);
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < n {
                point[d] = sigma * rule.nodes[idx[d]];
                break;
            }
            idx[d] = 0;
            point[d] = sigma * rule.nodes[0];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_normal_moments() {
        let rule = GaussHermite::new(3).unwrap();
        let m = |k: i32| rule.integrate(1.0, |x| x.powi(k));
        assert!((m(0) - 1.0).abs() < 1e-15);
        assert!(m(1).abs() < 1e-15);
        assert!((m(2) - 1.0).abs() < 1e-14);
        assert!((m(4) - 3.0).abs() < 1e-13);
        assert!(m(5).abs() < 1e-13);
    }

    #[test]
    fn three_point_rule_is_known() {
        // nodes 0, ±√3 with weights 2/3, 1/6
        let rule = GaussHermite::new(3).unwrap();
        assert!((rule.nodes()[2] - 3f64.sqrt()).abs() < 1e-14);
        assert!(rule.nodes()[1].abs() < 1e-15);
        assert!((rule.weights()[1] - 2.0 / 3.0).abs() < 1e-14);
        assert!((rule.weights()[0] - 1.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn scaled_fourth_moment() {
        // E[x^4] = 3 s^2 with s = 2
        let rule = GaussHermite::new(3).unwrap();
        let v = rule.integrate(2f64.sqrt(), |x| x.powi(4));
        assert!((v - 12.0).abs() < 1e-12);
    }

    #[test]
    fn tensor_grid_and_cap() {
        let rule = GaussHermite::new(4).unwrap();
        let v =
            tensor_integrate(&rule, 1.0, 3, DEFAULT_NODE_CAP, |p| p[0] * p[0] * p[1] * p[1] + p[2].powi(4)).unwrap();
        assert!((v - 4.0).abs() < 1e-12);
        let empty = tensor_integrate(&rule, 1.0, 0, DEFAULT_NODE_CAP, |_| 7.0).unwrap();
        assert_eq!(empty, 7.0);
        assert!(matches!(tensor_integrate(&rule, 1.0, 20, DEFAULT_NODE_CAP, |_| 0.0), Err(Error::NodeCap { .. })));
        assert!(GaussHermite::new(0).is_err());
    }

    #[test]
    fn large_rules_stay_accurate() {
        let rule = GaussHermite::new(120).unwrap();
        assert!((rule.integrate(1.0, |x| x.powi(10)) - 945.0).abs() < 1e-9);
        assert!((rule.integrate(1.0, f64::cos) - (-0.5f64).exp()).abs() < 1e-14);
    }
}
