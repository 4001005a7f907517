//! One-dimensional Gauss-Lobatto quadrature and the nodal Lagrange basis.
//!
//! The nodes include both endpoints of `[-1, 1]`, so volume and face
//! quadrature share points and the nodal DG scheme collocates interior and
//! flux terms. An `n = d + 1` point rule is exact for polynomials up to
//! degree `2d - 1`.

use crate::error::{Error, Result};

/// Nodes, weights and differentiation matrix of the degree-`d` rule.
#[derive(Debug, Clone)]
pub struct GaussLobatto {
    degree: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// Barycentric weights of the nodes, used for off-node interpolation.
    bary: Vec<f64>,
    /// `deriv[i * n + j] = phi_i'(x_j)`, the derivative of the i-th Lagrange
    /// basis polynomial evaluated at node j.
    deriv: Vec<f64>,
}

/// Evaluates `(P_k(x), P_k'(x))` for the Legendre polynomial of degree `k`.
fn legendre(k: usize, x: f64) -> (f64, f64) {
    if k == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for j in 1..k {
        let jf = j as f64;
        let p_next = ((2.0 * jf + 1.0) * x * p - jf * p_prev) / (jf + 1.0);
        p_prev = p;
        p = p_next;
    }
    // (1 - x^2) P_k' = k (P_{k-1} - x P_k); endpoints are handled by callers.
    let dp = if (1.0 - x * x).abs() < 1e-14 {
        // P_k'(+-1) = (+-1)^{k-1} k (k+1) / 2
        let sign = if x > 0.0 { 1.0 } else { (-1.0f64).powi(k as i32 - 1) };
        sign * (k * (k + 1)) as f64 / 2.0
    } else {
        (k as f64) * (p_prev - x * p) / (1.0 - x * x)
    };
    (p, dp)
}

impl GaussLobatto {
    /// Builds the rule with `d + 1` nodes. Supported degrees are 1..=8.
    pub fn new(degree: usize) -> Result<Self> {
        if !(1..=8).contains(&degree) {
            return Err(Error::UnsupportedDegree(degree));
        }
        let n = degree + 1;
        let m = n - 1; // interior nodes are roots of P_m'
        let mut nodes = vec![0.0; n];
        nodes[0] = -1.0;
        nodes[n - 1] = 1.0;
        for k in 1..m {
            // Chebyshev-Lobatto starting guess, refined by Newton on P_m'.
            let mut x = -(std::f64::consts::PI * k as f64 / m as f64).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(m, x);
                // P_m'' from the Legendre ODE.
                let d2p = (2.0 * x * dp - (m * (m + 1)) as f64 * p) / (1.0 - x * x);
                let step = dp / d2p;
                x -= step;
                if step.abs() < 1e-15 {
                    break;
                }
            }
            nodes[k] = x;
        }
        // Symmetrize to kill the last rounding bit.
        for k in 0..n / 2 {
            let s = 0.5 * (nodes[n - 1 - k] - nodes[k]);
            nodes[k] = -s;
            nodes[n - 1 - k] = s;
        }
        let weights: Vec<f64> = nodes
            .iter()
            .map(|&x| {
                let (p, _) = legendre(m, x);
                2.0 / ((n * m) as f64 * p * p)
            })
            .collect();

        let mut bary = vec![1.0; n];
        for i in 0..n {
            for k in 0..n {
                if k != i {
                    bary[i] /= nodes[i] - nodes[k];
                }
            }
        }
        let mut deriv = vec![0.0; n * n];
        for j in 0..n {
            let mut diag = 0.0;
            for i in 0..n {
                if i != j {
                    let d = (bary[i] / bary[j]) / (nodes[j] - nodes[i]);
                    deriv[i * n + j] = d;
                    diag -= d;
                }
            }
            deriv[j * n + j] = diag;
        }
        Ok(Self { degree, nodes, weights, bary, deriv })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of nodes, `d + 1`.
    pub fn len(&self) -> usize {
        self.degree + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `phi_i'(x_j)`.
    pub fn basis_derivative(&self, i: usize, j: usize) -> f64 {
        self.deriv[i * self.len() + j]
    }

    /// Smallest gap between two adjacent nodes (located at the endpoints).
    pub fn min_gap(&self) -> f64 {
        let mut gap = f64::INFINITY;
        for k in 1..self.len() {
            gap = gap.min(self.nodes[k] - self.nodes[k - 1]);
        }
        gap
    }

    /// Values of all Lagrange basis polynomials at an arbitrary `x` in
    /// `[-1, 1]`, via the barycentric formula.
    pub fn basis_values(&self, x: f64) -> Vec<f64> {
        let n = self.len();
        for i in 0..n {
            if (x - self.nodes[i]).abs() < 1e-14 {
                let mut v = vec![0.0; n];
                v[i] = 1.0;
                return v;
            }
        }
        let terms: Vec<f64> = (0..n).map(|i| self.bary[i] / (x - self.nodes[i])).collect();
        let denom: f64 = terms.iter().sum();
        terms.iter().map(|t| t / denom).collect()
    }

    /// Integrates nodal values against the rule.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        values.iter().zip(&self.weights).map(|(v, w)| v * w).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_is_trapezoid_endpoints() {
        let q = GaussLobatto::new(1).unwrap();
        assert_eq!(q.nodes(), &[-1.0, 1.0]);
        assert_eq!(q.weights(), &[1.0, 1.0]);
    }

    #[test]
    fn degree_two_matches_exactness_conditions() {
        // Derived by solving the moment conditions for p <= 3 by hand:
        // nodes {-1, 0, 1}, weights {1/3, 4/3, 1/3}.
        let q = GaussLobatto::new(2).unwrap();
        for (a, b) in q.nodes().iter().zip(&[-1.0, 0.0, 1.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        for (a, b) in q.weights().iter().zip(&[1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn unsupported_degrees_are_rejected() {
        assert!(matches!(GaussLobatto::new(0), Err(Error::UnsupportedDegree(0))));
        assert!(matches!(GaussLobatto::new(9), Err(Error::UnsupportedDegree(9))));
    }

    #[test]
    fn nodes_sorted_with_endpoints_and_weights_sum_to_two() {
        for d in 1..=8 {
            let q = GaussLobatto::new(d).unwrap();
            assert_eq!(q.nodes()[0], -1.0);
            assert_eq!(q.nodes()[d], 1.0);
            for k in 1..=d {
                assert!(q.nodes()[k] > q.nodes()[k - 1]);
            }
            let total: f64 = q.weights().iter().sum();
            assert!((total - 2.0).abs() < 1e-13, "d={d}: weight sum {total}");
            assert!(q.weights().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn exact_for_monomials_up_to_2d_minus_1() {
        for d in 1..=8 {
            let q = GaussLobatto::new(d).unwrap();
            for p in 0..=(2 * d - 1) {
                let approx: f64 = q
                    .nodes()
                    .iter()
                    .zip(q.weights())
                    .map(|(x, w)| x.powi(p as i32) * w)
                    .sum();
                let exact = if p % 2 == 0 { 2.0 / (p as f64 + 1.0) } else { 0.0 };
                assert!(
                    (approx - exact).abs() < 1e-13,
                    "d={d} p={p}: {approx} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn interpolation_property_identity() {
        for d in [1, 3, 5, 8] {
            let q = GaussLobatto::new(d).unwrap();
            for j in 0..q.len() {
                let values = q.basis_values(q.nodes()[j]);
                for (i, v) in values.iter().enumerate() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((v - expect).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn derivative_matrix_differentiates_polynomials() {
        for d in 1..=8 {
            let q = GaussLobatto::new(d).unwrap();
            for p in 0..=d {
                for j in 0..q.len() {
                    let mut dp = 0.0;
                    for i in 0..q.len() {
                        dp += q.nodes()[i].powi(p as i32) * q.basis_derivative(i, j);
                    }
                    let exact = if p == 0 {
                        0.0
                    } else {
                        p as f64 * q.nodes()[j].powi(p as i32 - 1)
                    };
                    assert!((dp - exact).abs() < 1e-11, "d={d} p={p} j={j}: {dp} vs {exact}");
                }
            }
        }
    }

    #[test]
    fn off_node_interpolation_reproduces_polynomials() {
        let q = GaussLobatto::new(4).unwrap();
        let f = |x: f64| 1.5 - x + 0.25 * x.powi(3);
        let nodal: Vec<f64> = q.nodes().iter().map(|&x| f(x)).collect();
        for &x in &[-0.913, -0.3, 0.08, 0.77] {
            let basis = q.basis_values(x);
            let value: f64 = basis.iter().zip(&nodal).map(|(b, v)| b * v).sum();
            assert!((value - f(x)).abs() < 1e-13);
        }
    }
}
