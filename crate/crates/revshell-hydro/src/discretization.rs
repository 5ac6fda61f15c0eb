//! Discretization machinery of the method of discrete singularities:
//! Chebyshev collocation grids, endpoint-exponent weights reflecting the
//! corner behavior of the density, and interpolative quadrature that is
//! exact for the logarithmic kernel part.
//!
//! Densities on a segment are represented as g(t) = f(t) w(t), where f is
//! carried at the zeros of the second-kind Chebyshev polynomial and
//! w(t) = (1+t)^bl (1-t)^br encodes the known endpoint behavior: bounded at
//! junctions with interior angle up to pi, blowing up like dist^(pi/alpha - 1)
//! at re-entrant junctions, vanishing like r^m at the axis for harmonic m.

use crate::math::{self, SingularEnd};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DiscretizationError {
    #[error("chebyshev grid needs n >= 2, got {0}")]
    GridTooSmall(usize),
    #[error("junction angle {0} is outside (0, 2 pi]")]
    AngleOutOfRange(f64),
    #[error("internal edge (interior angle 2 pi) is hypersingular and unsupported")]
    InternalEdge,
    #[error("collocation point {0} is not a grid node")]
    NotAGridNode(f64),
    #[error("density weight is unbounded at t = {t} (endpoint exponent {exponent})")]
    UnboundedAtEndpoint { t: f64, exponent: f64 },
}

/// Zeros of U_{n-1}: t_k = cos(k pi / n), k = 1..n-1, strictly decreasing.
#[derive(Debug, Clone)]
pub struct ChebGrid {
    pub n: usize,
    pub nodes: Vec<f64>,
}

/// cheb grid with n - 1 interior nodes.
pub fn cheb_nodes(n: usize) -> Result<ChebGrid, DiscretizationError> {
    if n < 2 {
        return Err(DiscretizationError::GridTooSmall(n));
    }
    let nodes = (1..n).map(|k| (k as f64 * PI / n as f64).cos()).collect();
    Ok(ChebGrid { n, nodes })
}

impl ChebGrid {
    pub fn len(&self) -> usize {
        self.n - 1
    }

    pub fn is_empty(&self) -> bool {
        self.n < 2
    }

    /// Barycentric weights of the nodes (up to common scale).
    pub fn barycentric_weights(&self) -> Vec<f64> {
        (1..self.n)
            .map(|k| {
                let th = k as f64 * PI / self.n as f64;
                let s = th.sin();
                if k % 2 == 1 { s * s } else { -(s * s) }
            })
            .collect()
    }
}

/// Density endpoint exponent at a junction of interior angle `alpha`:
/// zero through flat junctions, pi/alpha - 1 in (-1/2, 0) past them.
pub fn corner_exponent(alpha: f64) -> Result<f64, DiscretizationError> {
    if !(alpha > 0.0 && alpha <= 2.0 * PI) {
        return Err(DiscretizationError::AngleOutOfRange(alpha));
    }
    if (alpha - 2.0 * PI).abs() < 1e-12 {
        return Err(DiscretizationError::InternalEdge);
    }
    if alpha <= PI {
        Ok(0.0)
    } else {
        Ok(PI / alpha - 1.0)
    }
}

/// Density endpoint exponent where the boundary meets the axis of
/// revolution: harmonic m vanishes like r^m; the axisymmetric harmonic is
/// even in r and stays bounded.
pub fn axis_exponent(m: usize) -> f64 {
    m as f64
}

/// Exponents of the density weight (1+t)^beta_left (1-t)^beta_right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointExponents {
    pub beta_left: f64,
    pub beta_right: f64,
}

impl EndpointExponents {
    pub fn new(beta_left: f64, beta_right: f64) -> Self {
        assert!(beta_left > -1.0 && beta_right > -1.0, "weight must stay integrable");
        Self { beta_left, beta_right }
    }

    /// The canonical half-weight sqrt(1 - t^2).
    pub fn canonical() -> Self {
        Self { beta_left: 0.5, beta_right: 0.5 }
    }

    pub fn weight(&self, t: f64) -> f64 {
        (1.0 + t).powf(self.beta_left) * (1.0 - t).powf(self.beta_right)
    }

    fn is_canonical(&self) -> bool {
        self.beta_left == 0.5 && self.beta_right == 0.5
    }
}

/// Collocation-node samples of the regularized density f on the pieces of a
/// boundary, with the weights that reconstruct g = f w.
#[derive(Debug, Clone)]
pub struct DensityField {
    pub m: usize,
    pub values: Vec<Vec<f64>>,
    pub exponents: Vec<EndpointExponents>,
}

impl DensityField {
    /// Reconstructed density g at parameter t of one piece.
    pub fn interpolate(
        &self,
        quad: &SegmentQuadrature,
        piece: usize,
        t: f64,
    ) -> Result<f64, DiscretizationError> {
        let e = self.exponents[piece];
        if t.abs() >= 1.0 {
            let beta = if t <= -1.0 { e.beta_left } else { e.beta_right };
            if beta < 0.0 {
                return Err(DiscretizationError::UnboundedAtEndpoint { t, exponent: beta });
            }
        }
        let f = quad.interpolate(&self.values[piece], t);
        Ok(f * e.weight(t))
    }
}

/// Quadrature data of one boundary piece: the grid, the weight exponents,
/// plain weighted quadrature over the nodes, and one log-kernel row per
/// collocation node.
#[derive(Debug, Clone)]
pub struct SegmentQuadrature {
    pub grid: ChebGrid,
    pub exponents: EndpointExponents,
    bary: Vec<f64>,
    /// lambda_k ~ int w(t) l_k(t) dt.
    pub smooth_weights: Vec<f64>,
    /// mu_k(t_j) ~ int ln(1/|t - t_j|) w(t) l_k(t) dt, one row per node j.
    log_rows: Vec<Vec<f64>>,
}

impl SegmentQuadrature {
    pub fn new(grid: ChebGrid, exponents: EndpointExponents) -> Self {
        let bary = grid.barycentric_weights();
        let smooth_weights = smooth_row(&grid, &bary, exponents);
        let log_rows = if exponents.is_canonical() {
            (0..grid.len()).map(|j| canonical_log_row(&grid, j)).collect()
        } else {
            (0..grid.len()).map(|j| panel_log_row(&grid, &bary, exponents, j)).collect()
        };
        Self { grid, exponents, bary, smooth_weights, log_rows }
    }

    /// Quadrature weights for int ln(1/|t - t0|) w(t) P(t) dt with t0 the
    /// j-th grid node.
    pub fn log_quadrature_row(&self, j: usize) -> &[f64] {
        &self.log_rows[j]
    }

    /// Same, addressed by node value.
    pub fn log_quadrature_row_at(&self, t0: f64) -> Result<&[f64], DiscretizationError> {
        let j = self
            .grid
            .nodes
            .iter()
            .position(|&t| (t - t0).abs() < 1e-13)
            .ok_or(DiscretizationError::NotAGridNode(t0))?;
        Ok(&self.log_rows[j])
    }

    /// Barycentric interpolation of node samples at t.
    pub fn interpolate(&self, values: &[f64], t: f64) -> f64 {
        debug_assert_eq!(values.len(), self.grid.len());
        let mut num = 0.0;
        let mut den = 0.0;
        for ((&tk, &wk), &fk) in self.grid.nodes.iter().zip(&self.bary).zip(values) {
            let d = t - tk;
            if d.abs() < 1e-15 {
                return fk;
            }
            let c = wk / d;
            num += c * fk;
            den += c;
        }
        num / den
    }

    /// Node-sample integration of w(t) f(t) phi(t) dt by graded panels, for
    /// integrands phi too sharp for the interpolative rule (near-boundary
    /// evaluation). `fvals` are node samples of f; phi is evaluated directly.
    pub fn integrate_near(&self, fvals: &[f64], phi: &dyn Fn(f64) -> f64, split_at: f64) -> f64 {
        let rule = math::gauss_legendre(24);
        let e = self.exponents;
        let mut f_left = |t: f64| self.interpolate(fvals, t) * e.weight(t) * phi(t);
        let split = split_at.clamp(-0.999_999, 0.999_999);
        let a = math::integrate_graded(&mut f_left, -1.0, split, SingularEnd::Left, &rule);
        let mut f_right = |t: f64| self.interpolate(fvals, t) * e.weight(t) * phi(t);
        let b = math::integrate_graded(&mut f_right, split, 1.0, SingularEnd::Right, &rule);
        a + b
    }
}

/// Interpolative weights for int w(t) P(t) dt via a Gauss-Jacobi rule with
/// the endpoint weight folded in.
fn smooth_row(grid: &ChebGrid, bary: &[f64], e: EndpointExponents) -> Vec<f64> {
    let npts = grid.n + 4;
    let (xs, ws) = math::gauss_jacobi(npts, e.beta_right, e.beta_left);
    accumulate_rows(grid, bary, &xs, &ws)
}

fn accumulate_rows(grid: &ChebGrid, bary: &[f64], xs: &[f64], ws: &[f64]) -> Vec<f64> {
    let nn = grid.len();
    let mut out = vec![0.0; nn];
    for (&x, &w) in xs.iter().zip(ws) {
        // all Lagrange basis values at x, via the barycentric identity
        let mut den = 0.0;
        let mut hit = None;
        for (k, (&tk, &bk)) in grid.nodes.iter().zip(bary).enumerate() {
            let d = x - tk;
            if d.abs() < 1e-15 {
                hit = Some(k);
                break;
            }
            den += bk / d;
        }
        match hit {
            Some(k) => out[k] += w,
            None => {
                for (k, (&tk, &bk)) in grid.nodes.iter().zip(bary).enumerate() {
                    out[k] += w * (bk / (x - tk)) / den;
                }
            }
        }
    }
    out
}

/// Log-kernel row in the canonical-weight case, in closed form through the
/// Chebyshev expansion of the logarithm.
fn canonical_log_row(grid: &ChebGrid, j: usize) -> Vec<f64> {
    let n = grid.n;
    let t0 = grid.nodes[j];
    // L_i(t0) = int ln(1/|t-t0|) sqrt(1-t^2) U_i(t) dt
    let li: Vec<f64> = (0..n - 1)
        .map(|i| {
            if i == 0 {
                0.5 * PI * 2f64.ln() - 0.25 * PI * math::cheb_t(2, t0)
            } else {
                0.5 * PI
                    * (math::cheb_t(i, t0) / i as f64
                        - math::cheb_t(i + 2, t0) / (i + 2) as f64)
            }
        })
        .collect();
    (1..n)
        .map(|k| {
            let thk = k as f64 * PI / n as f64;
            let mut acc = 0.0;
            for (i, &l) in li.iter().enumerate() {
                acc += ((i + 1) as f64 * thk).sin() * l;
            }
            (2.0 / n as f64) * thk.sin() * acc
        })
        .collect()
}

/// Log-kernel row for general endpoint weights by graded panel integration:
/// Gauss-Jacobi panels absorb the algebraic endpoint factors, geometric
/// grading handles the logarithm at the collocation node.
fn panel_log_row(grid: &ChebGrid, bary: &[f64], e: EndpointExponents, j: usize) -> Vec<f64> {
    let t0 = grid.nodes[j];
    let gl = math::gauss_legendre(20);
    let mut xs: Vec<f64> = Vec::new();
    let mut ws: Vec<f64> = Vec::new();

    // [-1, mid_l]: Jacobi weight (1+t)^bl folded in; rest of the integrand
    // smooth (the log point is one panel length away)
    let mid_l = 0.5 * (t0 - 1.0);
    if e.beta_left != 0.0 {
        let (gx, gw) = math::gauss_jacobi(40, 0.0, e.beta_left);
        let s = 0.5 * (mid_l + 1.0);
        for (&x, &w) in gx.iter().zip(&gw) {
            let t = -1.0 + s * (x + 1.0);
            xs.push(t);
            ws.push(w * s.powf(e.beta_left + 1.0) * (1.0 - t).powf(e.beta_right) * (1.0 / (t0 - t)).ln());
        }
    } else {
        push_gauss(&mut xs, &mut ws, &gl, -1.0, mid_l, |t| {
            (1.0 - t).powf(e.beta_right) * (1.0 / (t0 - t)).ln()
        });
    }
    // [mid_l, t0]: graded toward the log point
    push_graded(&mut xs, &mut ws, &gl, mid_l, t0, SingularEnd::Right, |t| {
        e.weight(t) * (1.0 / (t0 - t)).ln()
    });
    // [t0, mid_r]: graded away from the log point
    let mid_r = 0.5 * (t0 + 1.0);
    push_graded(&mut xs, &mut ws, &gl, t0, mid_r, SingularEnd::Left, |t| {
        e.weight(t) * (1.0 / (t - t0)).ln()
    });
    // [mid_r, 1]: Jacobi weight (1-t)^br folded in
    if e.beta_right != 0.0 {
        let (gx, gw) = math::gauss_jacobi(40, e.beta_right, 0.0);
        let s = 0.5 * (1.0 - mid_r);
        for (&x, &w) in gx.iter().zip(&gw) {
            let t = mid_r + s * (x + 1.0);
            xs.push(t);
            ws.push(w * s.powf(e.beta_right + 1.0) * (1.0 + t).powf(e.beta_left) * (1.0 / (t - t0)).ln());
        }
    } else {
        push_gauss(&mut xs, &mut ws, &gl, mid_r, 1.0, |t| {
            (1.0 + t).powf(e.beta_left) * (1.0 / (t - t0)).ln()
        });
    }

    accumulate_rows(grid, bary, &xs, &ws)
}

fn push_gauss(
    xs: &mut Vec<f64>,
    ws: &mut Vec<f64>,
    rule: &(Vec<f64>, Vec<f64>),
    a: f64,
    b: f64,
    extra: impl Fn(f64) -> f64,
) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    for (&x, &w) in rule.0.iter().zip(rule.1.iter()) {
        let t = c + h * x;
        xs.push(t);
        ws.push(w * h * extra(t));
    }
}

fn push_graded(
    xs: &mut Vec<f64>,
    ws: &mut Vec<f64>,
    rule: &(Vec<f64>, Vec<f64>),
    a: f64,
    b: f64,
    end: SingularEnd,
    extra: impl Fn(f64) -> f64,
) {
    // grading stops 2^-46 short of the singular point, see integrate_graded
    let levels = 46;
    let mut far = b - a;
    for _ in 0..levels {
        let near = far * 0.5;
        let (lo, hi) = match end {
            SingularEnd::Left => (a + near, a + far),
            SingularEnd::Right => (b - far, b - near),
        };
        push_gauss(xs, ws, rule, lo, hi, &extra);
        far = near;
    }
}
