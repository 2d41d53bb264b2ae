//! Gamma, digamma, Riemann zeta and derived combinations, plus the immutable
//! constant cache feeding the high-temperature series.
//!
//! Zeta at real arguments is computed by tail-accelerated direct summation
//! (Euler-Maclaurin corrections through `B_16`); arguments left of the
//! critical strip are mapped through the functional equation
//! `zeta(s) = 2 (2 pi)^{s-1} Gamma(1-s) zeta(1-s) sin(pi s / 2)`, with the
//! trivial zeros at negative even integers returned exactly.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use crate::types::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Stirling-series coefficients B_{2j} / (2j (2j - 1)) for ln Gamma.
const LN_GAMMA_COEF: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// Digamma asymptotic coefficients B_{2j} / (2j).
const DIGAMMA_COEF: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Euler-Maclaurin coefficients B_{2j} / (2j)!.
const EM_COEF: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// sin(pi x) with argument reduction, exact zeros at integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// cos(pi x) with argument reduction.
pub(crate) fn cos_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let c = (PI * r).cos();
    if (n as i64) % 2 == 0 {
        c
    } else {
        -c
    }
}

/// ln Gamma(x) for x >= 10 by the Stirling series.
fn ln_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for c in LN_GAMMA_COEF {
        series += c * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + 0.5 * LN_2PI + series
}

/// ln Gamma(x) for x > 0, shifting into the Stirling regime.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Pole { arg: x });
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift += y.ln();
        y += 1.0;
    }
    Ok(ln_gamma_stirling(y) - shift)
}

/// Gamma function on the real line (poles at nonpositive integers).
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { arg: x });
    }
    if x < 0.5 {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return Ok(PI / (sin_pi(x) * gamma(1.0 - x)?));
    }
    let mut prod = 1.0;
    let mut y = x;
    while y < 10.0 {
        prod *= y;
        y += 1.0;
    }
    Ok(ln_gamma_stirling(y).exp() / prod)
}

/// Digamma function psi(x) (poles at nonpositive integers).
pub fn digamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { arg: x });
    }
    if x < 0.5 {
        // psi(1-z) = psi(z) + pi cot(pi z) with z = 1 - x.
        return Ok(digamma(1.0 - x)? - PI * cos_pi(x) / sin_pi(x));
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut series = 0.0;
    let mut p = inv2;
    for c in DIGAMMA_COEF {
        series += c * p;
        p *= inv2;
    }
    Ok(acc + y.ln() - 0.5 / y - series)
}

/// Euler-Maclaurin zeta for s away from the left half-line (s != 1).
/// Accurate to ~1e-15 relative for s >= -1; used for s >= 0.5 here.
fn zeta_em(s: f64) -> f64 {
    const N: usize = 32;
    let nf = N as f64;
    let mut sum = 0.0;
    for n in 1..N {
        sum += (n as f64).powf(-s);
    }
    sum += nf.powf(1.0 - s) / (s - 1.0);
    sum += 0.5 * nf.powf(-s);
    // Correction terms B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * N^{-s-2j+1}.
    let mut poch = s;
    let mut npow = nf.powf(-s - 1.0);
    let inv_n2 = 1.0 / (nf * nf);
    for (j, c) in EM_COEF.iter().enumerate() {
        sum += c * poch * npow;
        let m = s + (2 * j + 1) as f64;
        poch *= m * (m + 1.0);
        npow *= inv_n2;
    }
    sum
}

/// zeta'(s) for s >= 2 by the differentiated Euler-Maclaurin sum of
/// -sum ln(n) n^{-s}.
fn zeta_prime_em(s: f64) -> f64 {
    const N: usize = 32;
    let nf = N as f64;
    let ln_n = nf.ln();
    let mut sum = 0.0;
    for n in 2..N {
        let x = n as f64;
        sum += x.ln() * x.powf(-s);
    }
    // Integral of t^{-s} ln t from N to infinity.
    sum += nf.powf(1.0 - s) * (ln_n / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    sum += 0.5 * ln_n * nf.powf(-s);
    // g(t) = t^{-s} ln t, g^{(m)}(t) = t^{-s-m} (A_m ln t + C_m) with
    // A_{m+1} = -(s+m) A_m, C_{m+1} = -(s+m) C_m + A_m.
    let mut a = 1.0;
    let mut c = 0.0;
    let mut m = 0usize;
    for (j, em) in EM_COEF.iter().enumerate().take(5) {
        let target = 2 * j + 1;
        while m < target {
            let f = s + m as f64;
            let a_next = -f * a;
            c = -f * c + a;
            a = a_next;
            m += 1;
        }
        sum -= em * nf.powf(-s - target as f64) * (a * ln_n + c);
    }
    -sum
}

/// Riemann zeta at real s (pole at s = 1). Negative even integers return
/// exactly zero; other arguments left of 1/2 go through the functional
/// equation.
pub fn zeta(s: f64) -> Result<f64> {
    if s == 1.0 {
        return Err(Error::Pole { arg: s });
    }
    if s >= 0.5 {
        return Ok(zeta_em(s));
    }
    if s == s.floor() {
        // Integer arguments <= 0.
        if s == 0.0 {
            return Ok(-0.5);
        }
        let neg = -s as i64;
        if neg % 2 == 0 {
            return Ok(0.0);
        }
        // s = 1 - 2n: zeta(1-2n) = (-1)^n 2 Gamma(2n) zeta(2n) / (2 pi)^{2n}.
        let n = ((1.0 - s) / 2.0) as i32;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let mut fac = 1.0;
        for j in 1..(2 * n) {
            fac *= j as f64;
        }
        return Ok(sign * 2.0 * fac * zeta_em(2.0 * n as f64) / (2.0 * PI).powi(2 * n));
    }
    let g = gamma(1.0 - s)?;
    Ok(2.0 * (2.0 * PI).powf(s - 1.0) * g * zeta_em(1.0 - s) * sin_pi(0.5 * s))
}

/// Dirichlet eta function (alternating zeta); entire, eta(1) = ln 2.
pub fn eta(s: f64) -> f64 {
    let d = s - 1.0;
    if d.abs() < 1e-5 {
        // Taylor around the removable point: eta(1+d) = ln2 + (gamma ln2 - ln^2 2 / 2) d + ...
        return LN_2 + (EULER_GAMMA * LN_2 - 0.5 * LN_2 * LN_2) * d;
    }
    (1.0 - (2.0f64).powf(1.0 - s)) * zeta(s).expect("eta pole handled above")
}

/// zeta'(0) = -ln(2 pi)/2.
pub fn zeta_prime_at_zero() -> f64 {
    -0.5 * LN_2PI
}

/// The limit value `z^{n-1}/Gamma(n) * [gamma_E + psi(n) - ln(-z)]`
/// appearing when the order of the exponential polylog expansion approaches
/// a positive integer `n`. Real branch: requires z < 0.
pub fn robinson_limit(n: usize, z: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Pole { arg: 0.0 });
    }
    if z >= 0.0 {
        return Err(Error::OutOfDomain {
            what: "robinson_limit z",
            value: z,
            bound: 0.0,
        });
    }
    let mut fac = 1.0; // Gamma(n)
    let mut psi_n = -EULER_GAMMA; // psi(n)
    for j in 1..n {
        fac *= j as f64;
        psi_n += 1.0 / j as f64;
    }
    Ok(z.powi(n as i32 - 1) / fac * (EULER_GAMMA + psi_n - (-z).ln()))
}

/// Immutable table of the constants entering the high-temperature tails:
/// zeta at integer points, zeta'(2k), the combinations
/// `beta(x) = Gamma(x) zeta(x) (1 - 2^{-x})` and `b(x) = Gamma(x) zeta(x)`
/// with their logarithmic derivatives at even arguments, factorials and
/// integer digamma values.
///
/// Construction is deterministic, so the table is reproducible bit for bit
/// across runs of the same build. After construction it is never mutated;
/// sharing a reference between threads is safe.
#[derive(Clone, Debug)]
pub struct ConstantCache {
    k_max: usize,
    zeta_even: Vec<f64>,        // zeta(2k), k = 1..=k_max
    zeta_odd: Vec<f64>,         // zeta(2k+1)
    zeta_prime_even: Vec<f64>,  // zeta'(2k)
    beta_even: Vec<f64>,        // beta(2k)
    beta_odd: Vec<f64>,         // beta(2k+1)
    beta_logderiv_even: Vec<f64>, // beta'(2k)/beta(2k)
    b_even: Vec<f64>,           // b(2k)
    b_odd: Vec<f64>,            // b(2k+1)
    b_logderiv_even: Vec<f64>,  // b'(2k)/b(2k)
    factorials: Vec<f64>,       // n!, n = 0..=2k_max+4
    ln_factorials: Vec<f64>,
    digamma_int: Vec<f64>,      // psi(n), n = 1..=2k_max+4
}

/// Default table depth. Terms of the high-temperature series decay at least
/// geometrically with ratio ((lambda+|nu|)/(2 pi))^2, so 64 entries exceed
/// double-precision needs everywhere inside the convergence domain.
pub const K_MAX_DEFAULT: usize = 64;

impl Default for ConstantCache {
    fn default() -> Self {
        ConstantCache::new(K_MAX_DEFAULT)
    }
}

impl ConstantCache {
    pub fn new(k_max: usize) -> Self {
        assert!(k_max >= 1, "cache needs at least one entry");
        assert!(
            2 * k_max + 4 <= 170,
            "factorials beyond 170! overflow f64"
        );
        let top = 2 * k_max + 4;

        let mut factorials = Vec::with_capacity(top + 1);
        factorials.push(1.0);
        for n in 1..=top {
            let prev = factorials[n - 1];
            factorials.push(prev * n as f64);
        }
        let ln_factorials: Vec<f64> = factorials.iter().map(|f| f.ln()).collect();

        let mut digamma_int = Vec::with_capacity(top);
        let mut psi = -EULER_GAMMA;
        digamma_int.push(psi); // psi(1)
        for n in 1..top {
            psi += 1.0 / n as f64;
            digamma_int.push(psi);
        }

        let mut zeta_even = Vec::with_capacity(k_max);
        let mut zeta_odd = Vec::with_capacity(k_max);
        let mut zeta_prime_even = Vec::with_capacity(k_max);
        let mut beta_even = Vec::with_capacity(k_max);
        let mut beta_odd = Vec::with_capacity(k_max);
        let mut beta_logderiv_even = Vec::with_capacity(k_max);
        let mut b_even = Vec::with_capacity(k_max);
        let mut b_odd = Vec::with_capacity(k_max);
        let mut b_logderiv_even = Vec::with_capacity(k_max);

        for k in 1..=k_max {
            let ze = zeta_em(2.0 * k as f64);
            let zo = zeta_em((2 * k + 1) as f64);
            let zp = zeta_prime_em(2.0 * k as f64);
            let g_even = factorials[2 * k - 1]; // Gamma(2k)
            let g_odd = factorials[2 * k]; // Gamma(2k+1)
            let half_even = (2.0f64).powi(-2 * k as i32);
            let half_odd = (2.0f64).powi(-(2 * k as i32 + 1));
            zeta_even.push(ze);
            zeta_odd.push(zo);
            zeta_prime_even.push(zp);
            beta_even.push(g_even * ze * (1.0 - half_even));
            beta_odd.push(g_odd * zo * (1.0 - half_odd));
            b_even.push(g_even * ze);
            b_odd.push(g_odd * zo);
            let psi_2k = digamma_int[2 * k - 1];
            b_logderiv_even.push(psi_2k + zp / ze);
            beta_logderiv_even.push(psi_2k + zp / ze + LN_2 / (1.0 - half_even) - LN_2);
        }

        ConstantCache {
            k_max,
            zeta_even,
            zeta_odd,
            zeta_prime_even,
            beta_even,
            beta_odd,
            beta_logderiv_even,
            b_even,
            b_odd,
            b_logderiv_even,
            factorials,
            ln_factorials,
            digamma_int,
        }
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    fn check_k(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.k_max {
            Err(Error::CacheRange {
                index: k,
                max: self.k_max,
            })
        } else {
            Ok(k - 1)
        }
    }

    /// zeta(2k).
    pub fn zeta_even(&self, k: usize) -> Result<f64> {
        Ok(self.zeta_even[self.check_k(k)?])
    }

    /// zeta(2k+1).
    pub fn zeta_odd(&self, k: usize) -> Result<f64> {
        Ok(self.zeta_odd[self.check_k(k)?])
    }

    /// zeta'(2k).
    pub fn zeta_prime_even(&self, k: usize) -> Result<f64> {
        Ok(self.zeta_prime_even[self.check_k(k)?])
    }

    /// zeta'(-2n) = (-1)^n Gamma(2n+1) zeta(2n+1) / (2 (2 pi)^{2n}).
    pub fn zeta_prime_neg_even(&self, n: usize) -> Result<f64> {
        let idx = self.check_k(n)?;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * self.factorials[2 * n] * self.zeta_odd[idx] / (2.0 * (2.0 * PI).powi(2 * n as i32)))
    }

    /// beta(x) = Gamma(x) zeta(x) (1 - 2^{-x}) at integer x in 2..=2k_max+1.
    pub fn beta_fn(&self, x: usize) -> Result<f64> {
        if x % 2 == 0 {
            Ok(self.beta_even[self.check_k(x / 2)?])
        } else if x >= 3 {
            Ok(self.beta_odd[self.check_k((x - 1) / 2)?])
        } else {
            Err(Error::CacheRange {
                index: x,
                max: 2 * self.k_max + 1,
            })
        }
    }

    /// beta'(x)/beta(x); tabulated at even x only.
    pub fn beta_logderiv(&self, x: usize) -> Result<f64> {
        if x % 2 == 0 {
            Ok(self.beta_logderiv_even[self.check_k(x / 2)?])
        } else {
            Err(Error::CacheRange {
                index: x,
                max: 2 * self.k_max,
            })
        }
    }

    /// b(x) = Gamma(x) zeta(x) at integer x in 2..=2k_max+1.
    pub fn b_fn(&self, x: usize) -> Result<f64> {
        if x % 2 == 0 {
            Ok(self.b_even[self.check_k(x / 2)?])
        } else if x >= 3 {
            Ok(self.b_odd[self.check_k((x - 1) / 2)?])
        } else {
            Err(Error::CacheRange {
                index: x,
                max: 2 * self.k_max + 1,
            })
        }
    }

    /// b'(x)/b(x) = psi(x) + zeta'(x)/zeta(x); tabulated at even x only.
    pub fn b_logderiv(&self, x: usize) -> Result<f64> {
        if x % 2 == 0 {
            Ok(self.b_logderiv_even[self.check_k(x / 2)?])
        } else {
            Err(Error::CacheRange {
                index: x,
                max: 2 * self.k_max,
            })
        }
    }

    /// psi^{(l)}(1/2) = (-1)^{l+1} 2^{l+1} beta(l+1), l >= 1. At the even
    /// orders actually consumed by the Bernoulli-form pressure check this is
    /// -2^{l+1} beta(l+1); the alternating sign keeps odd orders consistent
    /// with psi^{(l)}(x) = (-1)^{l+1} Gamma(l+1) sum (x+n)^{-l-1}.
    pub fn polygamma_half(&self, l: usize) -> Result<f64> {
        if l == 0 {
            return Err(Error::CacheRange {
                index: 0,
                max: 2 * self.k_max,
            });
        }
        let sign = if l % 2 == 0 { -1.0 } else { 1.0 };
        Ok(sign * (2.0f64).powi(l as i32 + 1) * self.beta_fn(l + 1)?)
    }

    /// n! for n <= 2 k_max + 4.
    pub fn factorial(&self, n: usize) -> f64 {
        self.factorials[n]
    }

    /// ln n! for n <= 2 k_max + 4.
    pub fn ln_factorial(&self, n: usize) -> f64 {
        self.ln_factorials[n]
    }

    /// psi(n) at positive integers n <= 2 k_max + 4.
    pub fn digamma_int(&self, n: usize) -> f64 {
        self.digamma_int[n - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cache() -> ConstantCache {
        ConstantCache::new(64)
    }

    #[test]
    fn gamma_basic_values() {
        assert_relative_eq!(gamma(1.0).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(0.5).unwrap(), PI.sqrt(), max_relative = 1e-14);
        // Independent 25-digit evaluation, frozen.
        assert_relative_eq!(gamma(7.3).unwrap(), 1271.4236336639092731, max_relative = 1e-13);
        assert!(matches!(gamma(0.0), Err(Error::Pole { .. })));
        assert!(matches!(gamma(-3.0), Err(Error::Pole { .. })));
    }

    #[test]
    fn gamma_recurrence_and_reflection() {
        // Deterministic pseudo-random arguments (splitmix64).
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            (z ^ (z >> 31)) as f64 / u64::MAX as f64
        };
        for _ in 0..1000 {
            let x = 0.05 + 12.0 * next();
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
            // Reflection at a shifted non-integer point.
            let y = x - 6.5;
            let refl = gamma(y).unwrap() * gamma(1.0 - y).unwrap();
            assert_relative_eq!(refl, PI / sin_pi(y), max_relative = 1e-12);
            // psi recurrence.
            let pl = digamma(x + 1.0).unwrap();
            let pr = digamma(x).unwrap() + 1.0 / x;
            assert_relative_eq!(pl, pr, max_relative = 1e-12, epsilon = 1e-13);
        }
    }

    #[test]
    fn gamma_duplication() {
        for &x in &[0.3, 1.7, 2.9, 5.5, 8.25] {
            let lhs = gamma(2.0 * x).unwrap();
            let rhs = (2.0f64).powf(2.0 * x - 1.0) * gamma(x).unwrap() * gamma(x + 0.5).unwrap()
                / gamma(0.5).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        }
    }

    #[test]
    fn gamma_negative_shift_ratio() {
        // Gamma(-x-n)/Gamma(-x) = (-1)^n Gamma(x+1)/Gamma(x+n+1) at non-integer x.
        for &x in &[0.3, 1.45, 2.75] {
            for n in 1..5usize {
                let lhs = gamma(-x - n as f64).unwrap() / gamma(-x).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = sign * gamma(x + 1.0).unwrap() / gamma(x + n as f64 + 1.0).unwrap();
                assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn digamma_basic_values() {
        assert_relative_eq!(digamma(1.0).unwrap(), -EULER_GAMMA, max_relative = 1e-14);
        assert_relative_eq!(digamma(2.0).unwrap(), 1.0 - EULER_GAMMA, max_relative = 1e-14);
        assert_relative_eq!(
            digamma(0.5).unwrap(),
            -EULER_GAMMA - 2.0 * LN_2,
            max_relative = 1e-14
        );
        // psi(1-z) = psi(z) + pi cot(pi z)
        for &z in &[0.3, 0.75, 2.2] {
            let lhs = digamma(1.0 - z).unwrap();
            let rhs = digamma(z).unwrap() + PI * cos_pi(z) / sin_pi(z);
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        }
    }

    #[test]
    fn zeta_integer_points() {
        let c = cache();
        assert_relative_eq!(c.zeta_even(1).unwrap(), PI * PI / 6.0, max_relative = 1e-15);
        assert_relative_eq!(
            c.zeta_even(2).unwrap(),
            PI.powi(4) / 90.0,
            max_relative = 1e-15
        );
        // Euler-Maclaurin oracle values, frozen from a 25-digit evaluation.
        assert_relative_eq!(c.zeta_odd(1).unwrap(), 1.2020569031595942854, max_relative = 1e-15);
        assert_relative_eq!(c.zeta_odd(2).unwrap(), 1.0369277551433699263, max_relative = 1e-15);
        assert!(matches!(c.zeta_even(65), Err(Error::CacheRange { .. })));
    }

    #[test]
    fn zeta_functional_equation() {
        // zeta(0) = -1/2 and the trivial zeros are exact.
        assert_eq!(zeta(0.0).unwrap(), -0.5);
        assert_eq!(zeta(-2.0).unwrap(), 0.0);
        assert_eq!(zeta(-8.0).unwrap(), 0.0);
        // zeta(1-2k) = (-1)^k 2 Gamma(2k) zeta(2k) / (2 pi)^{2k}.
        let c = cache();
        for k in 1..20usize {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let want =
                sign * 2.0 * c.factorial(2 * k - 1) * c.zeta_even(k).unwrap() / (2.0 * PI).powi(2 * k as i32);
            assert_relative_eq!(zeta(1.0 - 2.0 * k as f64).unwrap(), want, max_relative = 1e-13);
        }
        // Frozen reference values off the integers.
        assert_relative_eq!(zeta(2.5).unwrap(), 1.3414872572509171798, max_relative = 1e-14);
        assert_relative_eq!(zeta(0.5).unwrap(), -1.4603545088095868129, max_relative = 1e-14);
        assert_relative_eq!(zeta(-0.5).unwrap(), -0.20788622497735456602, max_relative = 1e-13);
        assert_relative_eq!(zeta(-1.5).unwrap(), -0.02548520188983303595, max_relative = 1e-13);
    }

    #[test]
    fn zeta_prime_values() {
        let c = cache();
        // Frozen from a 25-digit evaluation of the differentiated sum.
        assert_relative_eq!(c.zeta_prime_even(1).unwrap(), -0.9375482543158437537, max_relative = 1e-13);
        assert_relative_eq!(c.zeta_prime_even(2).unwrap(), -0.068911265896125379849, max_relative = 1e-13);
        // zeta'(-2n) examples.
        let want1 = -c.zeta_odd(1).unwrap() / (4.0 * PI * PI);
        assert_relative_eq!(c.zeta_prime_neg_even(1).unwrap(), want1, max_relative = 1e-14);
        let want2 = c.factorial(4) * c.zeta_odd(2).unwrap() / (2.0 * (2.0 * PI).powi(4));
        assert_relative_eq!(c.zeta_prime_neg_even(2).unwrap(), want2, max_relative = 1e-14);
        for n in 1..10usize {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(c.zeta_prime_neg_even(n).unwrap().signum(), sign);
        }
    }

    /// Euler-transformed alternating sum of eta(s); converges even below
    /// the abscissa of convergence, independent of the library zeta path.
    fn eta_euler(s: f64) -> f64 {
        let m = 48;
        let mut partial = [0.0f64; 48];
        let mut sum = 0.0;
        for (k, p) in partial.iter_mut().enumerate() {
            let term = ((k + 1) as f64).powf(-s);
            sum += if k % 2 == 0 { term } else { -term };
            *p = sum;
        }
        let mut n = m;
        while n > 1 {
            for i in 0..n - 1 {
                partial[i] = 0.5 * (partial[i] + partial[i + 1]);
            }
            n -= 1;
        }
        partial[0]
    }

    #[test]
    fn zeta_prime_at_zero_value() {
        let v = zeta_prime_at_zero();
        assert_relative_eq!(v, -0.9189385332046727418, max_relative = 1e-15);
        assert_relative_eq!(-2.0 * v, LN_2PI, max_relative = 1e-15);
        // Central difference of the eta-series continuation
        // zeta(s) = eta(s) / (1 - 2^{1-s}) around 0.
        let h = 1e-5;
        let z = |s: f64| eta_euler(s) / (1.0 - (2.0f64).powf(1.0 - s));
        let fd = (z(h) - z(-h)) / (2.0 * h);
        assert_relative_eq!(v, fd, max_relative = 1e-8);
    }

    #[test]
    fn beta_b_values() {
        let c = cache();
        assert_relative_eq!(c.beta_fn(2).unwrap(), PI * PI / 8.0, max_relative = 1e-14);
        assert_relative_eq!(c.b_fn(2).unwrap(), PI * PI / 6.0, max_relative = 1e-14);
        for x in 2..=(2 * c.k_max() + 1) {
            let ratio = c.beta_fn(x).unwrap() / c.b_fn(x).unwrap();
            assert_relative_eq!(ratio, 1.0 - (2.0f64).powi(-(x as i32)), max_relative = 1e-14);
        }
        // beta(2k) against an independent recomputation from gamma() and zeta().
        for k in 1..=10usize {
            let x = 2.0 * k as f64;
            let indep = gamma(x).unwrap() * zeta(x).unwrap() * (1.0 - (2.0f64).powf(-x));
            assert_relative_eq!(c.beta_fn(2 * k).unwrap(), indep, max_relative = 2e-13);
        }
    }

    #[test]
    fn beta_monotonicity_invariants() {
        let c = cache();
        // zeta(2k) > 1 and strictly decreasing toward 1.
        let mut prev = f64::INFINITY;
        for k in 1..=c.k_max() {
            let z = c.zeta_even(k).unwrap();
            assert!(z > 1.0 || (k > 25 && z == 1.0));
            assert!(z < prev || z == 1.0);
            prev = z;
        }
    }

    #[test]
    fn polygamma_half_values() {
        let c = cache();
        // psi''(1/2) = -8 beta(3) = -14 zeta(3).
        assert_relative_eq!(
            c.polygamma_half(2).unwrap(),
            -14.0 * c.zeta_odd(1).unwrap(),
            max_relative = 1e-14
        );
        // psi'(1/2) = 4 beta(2) = pi^2/2 (trigamma is positive).
        assert_relative_eq!(c.polygamma_half(1).unwrap(), PI * PI / 2.0, max_relative = 1e-14);
        // Hurwitz-type sum oracle: psi^(l)(1/2) = (-1)^{l+1} Gamma(l+1) sum (1/2+n)^{-l-1},
        // summed smallest-first with an Euler-Maclaurin tail.
        for l in 1..=4usize {
            let p = l as i32 + 1;
            let mut s = 0.0;
            for n in (0..4096u32).rev() {
                s += (0.5 + n as f64).powi(-p);
            }
            let t = 4096.5f64;
            s += t.powi(1 - p) / l as f64 + 0.5 * t.powi(-p)
                + (l + 1) as f64 / 12.0 * t.powi(-p - 1);
            let sign = if l % 2 == 0 { -1.0 } else { 1.0 };
            let want = sign * c.factorial(l) * s;
            assert_relative_eq!(c.polygamma_half(l).unwrap(), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn robinson_limit_values() {
        assert_relative_eq!(robinson_limit(1, -1.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(robinson_limit(2, -1.0).unwrap(), -1.0, max_relative = 1e-14);
        // Matches the pre-limit bracket Gamma(1-s)(-z)^{s-1} + zeta(s-n+1)/Gamma(n) z^{n-1}
        // evaluated at s = n +- 1e-6.
        for n in 1..4usize {
            for &z in &[-0.5f64, -1.3] {
                let pre = |s: f64| {
                    gamma(1.0 - s).unwrap() * (-z).powf(s - 1.0)
                        + zeta(s - n as f64 + 1.0).unwrap() / gamma(n as f64).unwrap()
                            * z.powi(n as i32 - 1)
                };
                let approx_limit = 0.5 * (pre(n as f64 + 1e-6) + pre(n as f64 - 1e-6));
                assert_relative_eq!(
                    robinson_limit(n, z).unwrap(),
                    approx_limit,
                    max_relative = 1e-5,
                    epsilon = 1e-5
                );
            }
        }
        assert!(robinson_limit(1, 0.5).is_err());
    }

    #[test]
    fn cache_reproducible() {
        let a = ConstantCache::new(32);
        let b = ConstantCache::new(32);
        for k in 1..=32usize {
            assert_eq!(a.zeta_even(k).unwrap().to_bits(), b.zeta_even(k).unwrap().to_bits());
            assert_eq!(a.beta_fn(2 * k).unwrap().to_bits(), b.beta_fn(2 * k).unwrap().to_bits());
            assert_eq!(
                a.beta_logderiv(2 * k).unwrap().to_bits(),
                b.beta_logderiv(2 * k).unwrap().to_bits()
            );
        }
    }
}
