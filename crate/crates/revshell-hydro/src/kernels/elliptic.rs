//! Complete elliptic integrals by the arithmetic-geometric mean, together
//! with their logarithmic splits near the singular parameter limit.
//!
//! For parameter m = k^2 -> 1 the integrals behave like
//!   K(m) = a_K * ln(1/k') + b_K,   E(m) = a_E * ln(1/k') + b_E,
//! with k'^2 = 1 - m and the split coefficients known in closed form:
//!   a_K = (2/pi) K(1-m),   a_E = (2/pi) [K(1-m) - E(1-m)].
//! Both the totals and the split parts are needed to peel the logarithmic
//! singularity off the ring kernel exactly.

use std::f64::consts::PI;

/// K(m) and E(m) for parameter m (= modulus squared), with `mc = 1 - m`
/// passed separately so no precision is lost when m is close to 1.
pub fn complete_elliptic(m: f64, mc: f64) -> (f64, f64) {
    assert!(m >= 0.0 && mc > 0.0, "parameter out of range: m={m}, mc={mc}");
    let mut a = 1.0f64;
    let mut b = mc.sqrt();
    let mut c = m.sqrt();
    let mut sum = 0.5 * c * c; // 2^(n-1) c_n^2 accumulated, n = 0 term
    let mut pow2 = 1.0f64;
    for _ in 0..60 {
        let an = 0.5 * (a + b);
        let cn = 0.5 * (a - b);
        b = (a * b).sqrt();
        a = an;
        c = cn;
        pow2 *= 2.0;
        sum += 0.5 * pow2 * c * c;
        if c.abs() < 1e-17 * a {
            break;
        }
    }
    let k = PI / (2.0 * a);
    let e = k * (1.0 - sum);
    (k, e)
}

/// dK/dm. Uses the hypergeometric series for small m (the closed form has a
/// 0/0 there) and the exact expression otherwise.
pub fn d_k_dm(m: f64, mc: f64) -> f64 {
    if m < 0.05 {
        let mut aj = 1.0f64; // ((2j-1)!!/(2j)!!)^2
        let mut acc = 0.0;
        let mut mp = 1.0;
        for j in 1..40 {
            let jf = j as f64;
            aj *= ((2.0 * jf - 1.0) / (2.0 * jf)).powi(2);
            acc += jf * aj * mp;
            mp *= m;
            if aj * mp < 1e-18 {
                break;
            }
        }
        (PI / 2.0) * acc
    } else {
        let (k, e) = complete_elliptic(m, mc);
        (e - mc * k) / (2.0 * m * mc)
    }
}

/// dE/dm, same small-m treatment.
pub fn d_e_dm(m: f64, mc: f64) -> f64 {
    if m < 0.05 {
        let mut aj = 1.0f64;
        let mut acc = 0.0;
        let mut mp = 1.0;
        for j in 1..40 {
            let jf = j as f64;
            aj *= ((2.0 * jf - 1.0) / (2.0 * jf)).powi(2);
            acc += jf * aj * mp / (2.0 * jf - 1.0);
            mp *= m;
            if aj * mp < 1e-18 {
                break;
            }
        }
        -(PI / 2.0) * acc
    } else {
        let (k, e) = complete_elliptic(m, mc);
        (e - k) / (2.0 * m)
    }
}
