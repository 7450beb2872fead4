// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use super::Polynomial;
use crate::rational::to_f64;

/// A polynomial compiled for repeated floating evaluation.
///
/// The representation is a nested Horner scheme: the outermost level is a
/// polynomial in the first active variable whose coefficients are
/// polynomials in the remaining ones, and so on.
#[derive(Debug, Clone)]
pub struct HornerEvaluator {
    vars: Vec<u32>,
    root: Node,
}

#[derive(Debug, Clone)]
enum Node {
    Const(f64),
    /// `Σ_k coeffs[k] · x_level^k`
    Level {
        level: usize,
        coeffs: Vec<Node>,
    },
}

impl HornerEvaluator {
    pub fn new(p: &Polynomial) -> Self {
        let vars: Vec<u32> = p.active_vars().into_iter().collect();
        let dense: Vec<(Vec<u32>, f64)> =
            p.terms().map(|(alpha, c)| (vars.iter().map(|&v| alpha.exponent(v)).collect(), to_f64(c))).collect();
        let root = build(&dense, 0, vars.len());
        Self { vars, root }
    }

    /// Active variables, in the order `eval` expects coordinates.
    pub fn vars(&self) -> &[u32] {
        &self.vars
    }

    pub fn eval(&self, coords: &[f64]) -> f64 {
        debug_assert_eq!(coords.len(), self.vars.len());
        eval_node(&self.root, coords)
    }
}

fn build(terms: &[(Vec<u32>, f64)], level: usize, depth: usize) -> Node {
    if level == depth {
        return Node::Const(terms.iter().map(|(_, c)| c).sum());
    }
    let max = terms.iter().map(|(e, _)| e[level]).max().unwrap_or(0) as usize;
    let mut groups: Vec<Vec<(Vec<u32>, f64)>> = vec![Vec::new(); max + 1];
    for t in terms {
        groups[t.0[level] as usize].push(t.clone());
    }
    let coeffs = groups.iter().map(|g| build(g, level + 1, depth)).collect();
    Node::Level { level, coeffs }
}

fn eval_node(node: &Node, coords: &[f64]) -> f64 {
    match node {
        Node::Const(c) => *c,
        Node::Level { level, coeffs } => {
            let x = coords[*level];
            coeffs.iter().rev().fold(0.0, |acc, c| acc * x + eval_node(c, coords))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_naive_sum() {
        let p: Polynomial = "3 x1^3 x2 - 1/2 x2^2 + x1 x3^4 - 7".parse().unwrap();
        let ev = HornerEvaluator::new(&p);
        assert_eq!(ev.vars(), &[1, 2, 3]);
        let (a, b, c) = (0.7_f64, -1.3_f64, 0.4_f64);
        let naive = 3.0 * a.powi(3) * b - 0.5 * b * b + a * c.powi(4) - 7.0;
        assert!((ev.eval(&[a, b, c]) - naive).abs() < 1e-13);
    }

    #[test]
    fn zero_and_constants() {
        assert_eq!(HornerEvaluator::new(&Polynomial::zero()).eval(&[]), 0.0);
        assert_eq!(HornerEvaluator::new(&"5/4".parse().unwrap()).eval(&[]), 1.25);
    }
}
