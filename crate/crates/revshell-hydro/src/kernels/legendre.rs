//! Legendre functions of half-integer degree on (1, inf), the radial part of
//! the ring-source kernel for each azimuthal harmonic.
//!
//! Q_{m-1/2}(chi) carries the field of a ring source; its logarithmic part at
//! chi -> 1 has coefficient P_{m-1/2}(chi), which is what makes an exact
//! kernel split possible. Seeds come from elliptic integrals; the ladder in m
//! is the usual three-term recurrence. P grows with m, so its forward ladder
//! is stable. Q decays, so the forward ladder loses digits away from the
//! diagonal; a Casoratian identity detects the loss and a backward (Miller)
//! ladder renormalized on Q_{-1/2} takes over.

use super::elliptic::{complete_elliptic, d_e_dm, d_k_dm};
use std::f64::consts::PI;

/// Per point-pair ladder of Legendre data for harmonics 0..=m_max.
///
/// Index j holds degree j - 1/2.
pub struct Ladder {
    pub q: Vec<f64>,
    pub p: Vec<f64>,
    pub dq: Vec<f64>,
    pub dp: Vec<f64>,
    /// ln(1/k') with k'^2 = (chi-1)/(chi+1); the log factor of the split.
    pub log_arg: f64,
    /// chi - 1, kept exactly as supplied.
    pub chi_m1: f64,
}

impl Ladder {
    /// Build the ladder at chi = 1 + chi_m1. Requires chi_m1 > 0.
    pub fn new(chi_m1: f64, m_max: usize) -> Ladder {
        assert!(chi_m1 > 0.0, "ladder undefined at the diagonal");
        let chi = 1.0 + chi_m1;
        let chi_p1 = 2.0 + chi_m1;
        let m = 2.0 / chi_p1; // k^2
        let mc = chi_m1 / chi_p1; // k'^2, exact
        let k = m.sqrt();
        let log_arg = -0.5 * mc.ln();

        let (ke, ee) = complete_elliptic(m, mc);
        let (kc, ec) = complete_elliptic(mc, m);

        let top = m_max + 1; // one extra level for the Casoratian check
        let mut q = vec![0.0; top + 1];
        let mut p = vec![0.0; top + 1];
        let mut dq = vec![0.0; top + 1];
        let mut dp = vec![0.0; top + 1];

        q[0] = k * ke;
        p[0] = (2.0 / PI) * k * kc;
        if top >= 1 {
            q[1] = k * (chi * ke - chi_p1 * ee);
            p[1] = (2.0 * k / PI) * (chi_p1 * ec - kc);
        }

        let dk_dchi = -0.5 * k / chi_p1;
        let dm_dchi = -2.0 / (chi_p1 * chi_p1);
        let dmc_dchi = 2.0 / (chi_p1 * chi_p1);
        let dke = d_k_dm(m, mc) * dm_dchi;
        let dee = d_e_dm(m, mc) * dm_dchi;
        let dkc = d_k_dm(mc, m) * dmc_dchi;
        let dec = d_e_dm(mc, m) * dmc_dchi;

        dq[0] = dk_dchi * ke + k * dke;
        dp[0] = (2.0 / PI) * (dk_dchi * kc + k * dkc);
        if top >= 1 {
            dq[1] = dk_dchi * (chi * ke - chi_p1 * ee) + k * (ke + chi * dke - ee - chi_p1 * dee);
            dp[1] = (2.0 / PI)
                * (dk_dchi * (chi_p1 * ec - kc) + k * (ec + chi_p1 * dec - dkc));
        }

        // forward ladders; P (and dP) are stable this way
        for j in 1..top {
            let jf = j as f64;
            let a = 4.0 * jf;
            let b = 2.0 * jf - 1.0;
            let c = 2.0 * jf + 1.0;
            q[j + 1] = (a * chi * q[j] - b * q[j - 1]) / c;
            p[j + 1] = (a * chi * p[j] - b * p[j - 1]) / c;
            dq[j + 1] = (a * (q[j] + chi * dq[j]) - b * dq[j - 1]) / c;
            dp[j + 1] = (a * (p[j] + chi * dp[j]) - b * dp[j - 1]) / c;
        }

        // Rounding in the seeds feeds the forward Q ladder a spurious
        // component along the growing solution P. The Casoratian identity
        // P_{j+1}Q_j - P_jQ_{j+1} = S0/(2j+1) bounds the true Q from below by
        // S_j/P_{j+1}, which turns the contamination ~eps P_j Q_0/P_0 into a
        // computable relative-loss estimate. Past ~1e-11 the backward ladder
        // takes over.
        if top >= 2 {
            let s0 = (p[1] * q[0] - p[0] * q[1]).abs();
            let j = top - 1;
            let loss = 2e-16 * p[j] * p[j + 1] * q[0] * (2.0 * j as f64 + 1.0) / (p[0] * s0);
            if loss > 1e-11 {
                backward_q(chi, chi_m1, &mut q, &mut dq);
            }
        }

        Ladder { q, p, dq, dp, log_arg, chi_m1 }
    }

    /// Smooth remainder R_m = Q_m - P_m * ln(1/k'); analytic across chi = 1.
    pub fn smooth(&self, m: usize) -> f64 {
        self.q[m] - self.p[m] * self.log_arg
    }
}

/// Miller backward recurrence for the decaying solution Q, normalized on the
/// elliptic-integral value of Q_{-1/2}. Derivatives are then recovered from
/// (chi^2-1) Q'_nu = nu (chi Q_nu - Q_{nu-1}), safe here because the backward
/// path only runs when chi is well away from 1.
fn backward_q(chi: f64, chi_m1: f64, q: &mut [f64], dq: &mut [f64]) {
    let top = q.len() - 1;
    let t = chi + (chi * chi - 1.0).sqrt();
    let pad = (20.8 / t.ln()).ceil().clamp(8.0, 400.0) as usize;
    let start = top + pad;
    let mut v_hi = 0.0f64;
    let mut v = 1e-280f64;
    let mut tail: Vec<f64> = vec![0.0; top + 1];
    for j in (1..=start).rev() {
        let jf = j as f64;
        let v_lo = (4.0 * jf * chi * v - (2.0 * jf + 1.0) * v_hi) / (2.0 * jf - 1.0);
        v_hi = v;
        v = v_lo;
        if j - 1 <= top {
            tail[j - 1] = v;
        }
        // prevent overflow of the growing trial solution
        if v.abs() > 1e260 {
            let s = 1e-260;
            v *= s;
            v_hi *= s;
            for t in tail.iter_mut() {
                *t *= s;
            }
        }
    }
    let scale = q[0] / tail[0];
    for j in 0..=top {
        q[j] = tail[j] * scale;
    }
    let denom = chi_m1 * (chi + 1.0);
    for j in 1..=top {
        let nu = j as f64 - 0.5;
        dq[j] = nu * (chi * q[j] - q[j - 1]) / denom;
    }
}
