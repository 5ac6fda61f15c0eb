//! Ring-source kernels for the azimuthal harmonics of the interior Laplace
//! problem in the meridian half-plane.
//!
//! G_m(M, M0) is the m-th azimuthal Fourier coefficient of the free-space
//! kernel 1/|x - y| taken over a ring through M0. In terms of Legendre
//! functions of the second kind of half-integer degree,
//!
//!   G_m = Q_{m-1/2}(chi) / (pi sqrt(r r0)),
//!   chi = (r^2 + r0^2 + (z - z0)^2) / (2 r r0).
//!
//! Near the diagonal G_m splits exactly into a logarithmic part with analytic
//! coefficient and a smooth remainder,
//!
//!   G_m = [P_{m-1/2}(chi) / (pi sqrt(r r0))] ln(1/rho) + H_m,
//!   H_m = [P_{m-1/2}(chi) ln(rho1) + R_m(chi)] / (pi sqrt(r r0)),
//!
//! where rho = |M - M0|, rho1 = |M - M1| with M1 the reflection of M0 across
//! the axis, and R_m analytic across the diagonal. The collocation assembly
//! consumes the same split applied to the normal derivative of G_m.

pub mod elliptic;
pub mod legendre;

use crate::geometry::{MeridianPoint, SurfaceFrame};
use legendre::Ladder;
use std::f64::consts::PI;
use thiserror::Error;

/// Radii below this fraction of the pair scale are treated as on-axis.
const AXIS_EPS: f64 = 1e-14;

#[derive(Debug, Error, PartialEq)]
pub enum KernelError {
    #[error("ring kernel total is singular at coincident points")]
    CoincidentPoints,
    #[error("kernel diagonal limit is undefined at a junction node")]
    NonSmoothDiagonal,
}

/// Value of G_m split into its logarithmic and smooth parts.
///
/// `total = log_coefficient * ln(1/sqrt(chord)) + smooth_part` identically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSplit {
    pub total: f64,
    pub log_coefficient: f64,
    pub smooth_part: f64,
}

/// Geometry of a (collocation, field) pair on the boundary.
#[derive(Debug, Clone, Copy)]
pub struct KernelPairGeometry {
    /// Frame at the collocation point M0.
    pub source: SurfaceFrame,
    /// Frame at the field point M'.
    pub field: SurfaceFrame,
    /// |M' - M0|.
    pub chord: f64,
    /// Angle between the outward normal of the chord M0->M' and +z.
    /// Meaningful only for chord > 0.
    pub theta0: f64,
}

impl KernelPairGeometry {
    pub fn new(source: SurfaceFrame, field: SurfaceFrame) -> Self {
        let dr = field.point.r - source.point.r;
        let dz = field.point.z - source.point.z;
        let chord = (dr * dr + dz * dz).sqrt();
        let theta0 = if chord > 0.0 {
            // chord normal by the same -90 degree rotation as surface normals
            let nr = dz / chord;
            let nz = -dr / chord;
            nr.atan2(nz)
        } else {
            0.0
        };
        Self { source, field, chord, theta0 }
    }
}

/// R_m(1): the smooth remainder of Q - P ln(1/k') at the diagonal.
pub(crate) fn smooth_remainder_at_one(m: usize) -> f64 {
    2.0 * 2f64.ln() - 2.0 * (1..=m).map(|j| 1.0 / (2.0 * j as f64 - 1.0)).sum::<f64>()
}

/// The geometric factor sin(theta - theta0)/|M' - M0| of the regularized
/// kernel, i.e. n(M0) . (M' - M0) / |M' - M0|^2. On a circle of radius R it
/// is constant and equals the half normal curvature; on a line it vanishes.
pub fn chord_normal_term(source: &SurfaceFrame, field: &MeridianPoint) -> f64 {
    let dr = field.r - source.point.r;
    let dz = field.z - source.point.z;
    let rho2 = dr * dr + dz * dz;
    (source.normal[0] * dr + source.normal[1] * dz) / rho2
}

/// G_m(M, M0) with its exact logarithmic split. Symmetric in (M, M0).
pub fn ring_green(m: usize, a: MeridianPoint, b: MeridianPoint) -> Result<KernelSplit, KernelError> {
    let scale = a.r.abs().max(b.r.abs()).max((a.z - b.z).abs());
    if a.dist(&b) == 0.0 {
        return Err(KernelError::CoincidentPoints);
    }
    if a.r.min(b.r) <= AXIS_EPS * scale.max(1.0) {
        // one point on the axis: the ring integral is elementary
        if m == 0 {
            let total = 1.0 / a.dist(&b);
            return Ok(KernelSplit { total, log_coefficient: 0.0, smooth_part: total });
        }
        return Ok(KernelSplit { total: 0.0, log_coefficient: 0.0, smooth_part: 0.0 });
    }
    let dz = a.z - b.z;
    let chord2 = (a.r - b.r).powi(2) + dz * dz;
    let rr = a.r * b.r;
    let chi_m1 = chord2 / (2.0 * rr);
    let lad = Ladder::new(chi_m1, m);
    let pref = 1.0 / (PI * rr.sqrt());
    let rho1 = ((a.r + b.r).powi(2) + dz * dz).sqrt();
    let total = pref * lad.q[m];
    let log_coefficient = 2.0 * pref * lad.p[m];
    let smooth_part = pref * (lad.p[m] * rho1.ln() + lad.smooth(m));
    Ok(KernelSplit { total, log_coefficient, smooth_part })
}

/// Everything the boundary-integral assembly needs for one pair: the kernel
/// and its collocation-side normal derivative, both split against ln(1/rho).
#[derive(Debug, Clone, Copy)]
pub(crate) struct PairEval {
    /// G_m.
    pub g_total: f64,
    /// Coefficient of ln(1/rho) in G_m.
    pub g_logcoef: f64,
    /// G_m minus its log part (finite at the diagonal).
    pub g_smooth: f64,
    /// dG_m/dn at the collocation point.
    pub dn_total: f64,
    /// Coefficient of ln(1/rho) in dG_m/dn.
    pub dn_logcoef: f64,
    /// dG_m/dn minus its log part; contains the chord term, which stays
    /// bounded on smooth segments.
    pub dn_smooth: f64,
}

/// Kernel data at a collocation frame `x0` against a field point `x1`,
/// both strictly off the axis and distinct.
pub(crate) fn pair_eval(m: usize, x0: &SurfaceFrame, x1: &MeridianPoint) -> PairEval {
    let r0 = x0.point.r;
    let z0 = x0.point.z;
    let r1 = x1.r;
    let z1 = x1.z;
    debug_assert!(r0 > 0.0 && r1 > 0.0);
    let dz = z0 - z1;
    let chord2 = (r0 - r1).powi(2) + dz * dz;
    let rr = r0 * r1;
    let chi_m1 = chord2 / (2.0 * rr);
    let lad = Ladder::new(chi_m1, m);
    let pref = 1.0 / (PI * rr.sqrt());
    let rho1 = ((r0 + r1).powi(2) + dz * dz).sqrt();
    let ln_rho = 0.5 * chord2.ln();

    let g_total = pref * lad.q[m];
    let g_logcoef = pref * lad.p[m];
    let g_smooth = pref * (lad.p[m] * rho1.ln() + lad.smooth(m));

    let (nr, nz) = (x0.normal[0], x0.normal[1]);
    let dchi_dr0 = (r0 * r0 - r1 * r1 - dz * dz) / (2.0 * r0 * r0 * r1);
    let dchi_dz0 = dz / rr;
    let dchi_dn = nr * dchi_dr0 + nz * dchi_dz0;

    let dn_total = pref * (-nr / (2.0 * r0) * lad.q[m] + lad.dq[m] * dchi_dn);
    let dn_logcoef = pref * (-nr / (2.0 * r0) * lad.p[m] + lad.dp[m] * dchi_dn);
    let dn_smooth = dn_total + dn_logcoef * ln_rho;

    PairEval { g_total, g_logcoef, g_smooth, dn_total, dn_logcoef, dn_smooth }
}

/// Diagonal (x1 -> x0) limits of the split quantities on a smooth segment
/// point; the curvature comes from the frame.
pub(crate) fn pair_eval_diagonal(m: usize, x0: &SurfaceFrame) -> PairEval {
    let r0 = x0.point.r;
    debug_assert!(r0 > 0.0);
    let nr = x0.normal[0];
    let rm1 = smooth_remainder_at_one(m);
    let g_logcoef = 1.0 / (PI * r0);
    let g_smooth = ((2.0 * r0).ln() + rm1) / (PI * r0);
    let dn_logcoef = -nr / (2.0 * PI * r0 * r0);
    let ds_diag = nr / (2.0 * PI * r0 * r0) * (1.0 - (2.0 * r0).ln() - rm1);
    let dn_smooth = x0.normal_curvature / (2.0 * PI * r0) + ds_diag;
    PairEval {
        g_total: f64::INFINITY,
        g_logcoef,
        g_smooth,
        dn_total: f64::INFINITY,
        dn_logcoef,
        dn_smooth,
    }
}

/// The regularized kernel of the second-kind boundary integral equation: the
/// normal-derivative kernel with its ln(1/rho) part removed. Bounded across
/// the diagonal on smooth segments, where it limits to the chord-curvature
/// term plus the continuous extension of the smooth derivative.
pub fn fredholm_kernel(m: usize, geom: &KernelPairGeometry) -> Result<f64, KernelError> {
    if geom.chord == 0.0 {
        let ts = geom.source.tangent;
        let tf = geom.field.tangent;
        if (ts[0] - tf[0]).abs() > 1e-12 || (ts[1] - tf[1]).abs() > 1e-12 {
            return Err(KernelError::NonSmoothDiagonal);
        }
        return Ok(pair_eval_diagonal(m, &geom.source).dn_smooth);
    }
    Ok(pair_eval(m, &geom.source, &geom.field.point).dn_smooth)
}

/// Normal derivative of the smooth kernel part H_m at the collocation point;
/// continuous across the diagonal on smooth segments.
pub fn smooth_part_normal_derivative(m: usize, geom: &KernelPairGeometry) -> Result<f64, KernelError> {
    if geom.chord == 0.0 {
        let ts = geom.source.tangent;
        let tf = geom.field.tangent;
        if (ts[0] - tf[0]).abs() > 1e-12 || (ts[1] - tf[1]).abs() > 1e-12 {
            return Err(KernelError::NonSmoothDiagonal);
        }
        let x0 = &geom.source;
        let rm1 = smooth_remainder_at_one(m);
        return Ok(x0.normal[0] / (2.0 * PI * x0.point.r.powi(2))
            * (1.0 - (2.0 * x0.point.r).ln() - rm1));
    }
    let pe = pair_eval(m, &geom.source, &geom.field.point);
    let ct = chord_normal_term(&geom.source, &geom.field.point);
    let c = pe.g_logcoef;
    Ok(pe.dn_smooth - c * ct)
}
