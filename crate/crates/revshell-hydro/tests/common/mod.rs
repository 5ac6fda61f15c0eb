//! Shared oracles for the integration tests. Everything here is independent
//! of the library's own evaluation paths: plain quadrature of defining
//! integrals and series.

#![allow(dead_code)]

use revshell_hydro::geometry::MeridianPoint;

/// m-th azimuthal Fourier coefficient of 1/|x-y| over a ring, by periodic
/// trapezoid quadrature with doubling (spectrally convergent for separated
/// points).
pub fn ring_coefficient_brute(m: usize, a: MeridianPoint, b: MeridianPoint) -> f64 {
    let f = |psi: f64| {
        let d2 = a.r * a.r + b.r * b.r + (a.z - b.z).powi(2) - 2.0 * a.r * b.r * psi.cos();
        (m as f64 * psi).cos() / d2.sqrt()
    };
    let mut n = 64usize;
    let mut prev = f64::NAN;
    loop {
        let h = 2.0 * std::f64::consts::PI / n as f64;
        // compensated summation keeps the oscillatory cancellation floor at
        // ~eps * max|f| rather than sqrt(n) * eps * max|f|
        let mut acc = 0.0f64;
        let mut comp = 0.0f64;
        for i in 0..n {
            let y = f(i as f64 * h) - comp;
            let t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        }
        let val = acc * h / (2.0 * std::f64::consts::PI);
        if (val - prev).abs() <= 1e-13 * val.abs().max(1e-300) || n > (1 << 21) {
            return val;
        }
        prev = val;
        n *= 2;
    }
}

/// Modified Bessel function I_nu by power series (nu = 0 or 1); accurate to
/// machine precision for the moderate arguments used in the oracles.
pub fn bessel_i(nu: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = half.powi(nu as i32);
    for k in 1..=nu {
        term /= k as f64;
    }
    let mut sum = term;
    for k in 1..200 {
        let kf = k as f64;
        term *= half * half / (kf * (kf + nu as f64));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Adaptive Simpson integration, with optional splitting points supplied by
/// the caller (put them at singularities; endpoints of subintervals are never
/// evaluated exactly at integrable endpoint singularities thanks to the
/// epsilon inset).
pub fn adaptive_integral(f: &dyn Fn(f64) -> f64, a: f64, b: f64, splits: &[f64], tol: f64) -> f64 {
    let mut pts = vec![a];
    for &s in splits {
        if s > a && s < b {
            pts.push(s);
        }
    }
    pts.push(b);
    pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut total = 0.0;
    for w in pts.windows(2) {
        total += tanh_sinh(f, w[0], w[1], tol);
    }
    total
}

/// Tanh-sinh (double exponential) quadrature on [a, b]; handles integrable
/// endpoint singularities (log or algebraic) to near machine precision.
fn tanh_sinh(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h0 = 0.5 * (b - a);
    let mut prev = f64::NAN;
    for level in 2..=12 {
        let h = 1.0 / (1u64 << level) as f64 * 4.0;
        let kmax = (4.5 / h).ceil() as i64;
        let mut acc = 0.0;
        for k in -kmax..=kmax {
            let t = k as f64 * h;
            let sh = 0.5 * std::f64::consts::PI * t.sinh();
            let x = sh.tanh();
            let w = 0.5 * std::f64::consts::PI * t.cosh() / sh.cosh().powi(2);
            let xx = c + h0 * x;
            if xx > a && xx < b && w > 0.0 {
                let v = f(xx);
                if v.is_finite() {
                    acc += w * v;
                }
            }
        }
        let val = acc * h * h0;
        if (val - prev).abs() < tol * val.abs().max(1.0) {
            return val;
        }
        prev = val;
    }
    prev
}
