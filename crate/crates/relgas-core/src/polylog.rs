//! Polylogarithm evaluation: the direct power series, small-argument
//! expansions of `Li_s(e^z)` and `Li_s(-e^z)`, closed forms at negative even
//! order, order-derivatives at those points, and the large-argument
//! asymptotic series.
//!
//! Every expansion is used in a regime where all of its terms are real;
//! complex intermediates never appear. Tails whose coefficients involve
//! `Gamma(2k) zeta(2k)` are evaluated through term ratios, so no factorial
//! is ever formed past the constant cache and arbitrary term counts stay
//! inside f64 range.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::{LN_2, PI};

use crate::series::TermSum;
use crate::specfun::{self, ConstantCache, EULER_GAMMA, LN_2PI};
use crate::types::{Error, EvalFlags, EvalOutcome, Method, Result, SeriesConfig};

/// Fraction of a domain radius beyond which results carry the
/// degraded-accuracy flag.
const EDGE_FRACTION: f64 = 0.98;

fn edge_flags(z: f64, radius: f64) -> EvalFlags {
    EvalFlags {
        degraded_accuracy: z.abs() > EDGE_FRACTION * radius,
        slow_convergence: false,
    }
}

/// Direct power series `Li_s(z) = sum z^k / k^s`, `|z| < 1`.
pub fn li_direct(s: f64, z: f64, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    if z.abs() >= 1.0 {
        return Err(Error::Divergent { arg: z, radius: 1.0 });
    }
    if z == 0.0 {
        return Ok(EvalOutcome::exact(0.0, Method::Series));
    }
    let mut acc = TermSum::new(cfg);
    let mut zk = 1.0;
    for k in 1..=cfg.max_terms {
        zk *= z;
        if !acc.push(zk * (k as f64).powf(-s)) {
            break;
        }
    }
    let tail = acc.last_term.abs() * z.abs() / (1.0 - z.abs());
    Ok(EvalOutcome::new(acc.sum, Method::Series, acc.terms, tail)
        .with_flags(edge_flags(z, 1.0)))
}

/// `Li_s(e^z)` for non-integer order: the singular term
/// `Gamma(1-s) (-z)^{s-1}` plus `sum zeta(s-k) z^k / k!`. Real branch:
/// `z < 0`, `|z| <= 2 pi`.
pub fn li_exp_expansion(s: f64, z: f64, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    if s == s.floor() && s >= 1.0 {
        return Err(Error::Pole { arg: s });
    }
    if z >= 0.0 {
        return Err(Error::OutOfDomain {
            what: "li_exp_expansion z",
            value: z,
            bound: 0.0,
        });
    }
    if z.abs() > 2.0 * PI {
        return Err(Error::OutOfDomain {
            what: "li_exp_expansion |z|",
            value: z.abs(),
            bound: 2.0 * PI,
        });
    }
    let singular = specfun::gamma(1.0 - s)? * (-z).powf(s - 1.0);
    let mut acc = TermSum::with_initial(cfg, singular);

    // Head: zeta called directly while its argument stays right of -1/2.
    let mut zk = 1.0; // z^k / k!
    let mut k = 0usize;
    while s - k as f64 >= -0.5 {
        if !acc.push(specfun::zeta(s - k as f64)? * zk) {
            return Ok(finish_exp(acc, z, 2.0 * PI));
        }
        k += 1;
        zk *= z / k as f64;
    }

    // Tail through the functional equation, with the factorially growing
    // Gamma(1 + k - s) folded into the recurring factor
    // rho_k = Gamma(1 + k - s) z^k / ((2 pi)^k k!).
    let mut rho = specfun::gamma(1.0 + k as f64 - s)? * zk / (2.0 * PI).powi(k as i32);
    let front = 2.0 * (2.0 * PI).powf(s - 1.0);
    loop {
        let arg = 1.0 + k as f64 - s;
        let zref = if arg > 55.0 { 1.0 } else { specfun::zeta(arg)? };
        let term = front * zref * specfun::sin_pi(0.5 * (s - k as f64)) * rho;
        if !acc.push(term) {
            break;
        }
        rho *= arg * z / (2.0 * PI * (k + 1) as f64);
        k += 1;
    }
    Ok(finish_exp(acc, z, 2.0 * PI))
}

fn finish_exp(acc: TermSum, z: f64, radius: f64) -> EvalOutcome {
    let ratio = z.abs() / radius;
    let tail = acc.last_term.abs() / (1.0 - ratio).max(1e-3);
    EvalOutcome::new(acc.sum, Method::Series, acc.terms, tail).with_flags(edge_flags(z, radius))
}

/// `Li_n(e^z)` at positive integer order: the limit form with the
/// `[psi(n) + gamma_E - ln(-z)]` logarithmic term and the even-zeta tail.
/// Real branch: `z < 0`, `|z| <= 2 pi`.
pub fn li_exp_integer(
    n: usize,
    z: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if n == 0 {
        return Err(Error::Pole { arg: 0.0 });
    }
    if z >= 0.0 {
        return Err(Error::OutOfDomain {
            what: "li_exp_integer z",
            value: z,
            bound: 0.0,
        });
    }
    if z.abs() > 2.0 * PI {
        return Err(Error::OutOfDomain {
            what: "li_exp_integer |z|",
            value: z.abs(),
            bound: 2.0 * PI,
        });
    }
    let mut head = 0.0;
    let mut zk = 1.0;
    for k in 0..=n.saturating_sub(2) {
        if n - k >= 2 {
            head += specfun::zeta((n - k) as f64)? * zk;
            zk *= z / (k + 1) as f64;
        }
    }
    let fac_nm1 = cache.factorial(n - 1);
    let zn1 = z.powi(n as i32 - 1);
    head += zn1 / fac_nm1 * (cache.digamma_int(n) + EULER_GAMMA - (-z).ln());
    head -= zn1 * z / (2.0 * fac_nm1 * n as f64);

    // Tail: 2 z^{n-1} sum_k (-1)^k Gamma(2k) zeta(2k) / Gamma(2k+n) w^{2k},
    // w = z/(2 pi), via xi_k = Gamma(2k)/Gamma(2k+n) w^{2k}.
    let w = z / (2.0 * PI);
    let w2 = w * w;
    let mut acc = TermSum::with_initial(cfg, head);
    let mut xi = w2 / cache.factorial(n + 1); // Gamma(2)/Gamma(2+n) w^2
    let mut sign = -1.0;
    for k in 1..=cfg.max_terms {
        let zeta2k = if k <= cache.k_max() {
            cache.zeta_even(k)?
        } else {
            1.0
        };
        if !acc.push(2.0 * zn1 * sign * zeta2k * xi) {
            break;
        }
        let a = 2.0 * k as f64;
        xi *= a * (a + 1.0) / ((a + n as f64) * (a + n as f64 + 1.0)) * w2;
        sign = -sign;
    }
    Ok(finish_exp(acc, z, 2.0 * PI))
}

/// `Li_s(-e^z) = -sum eta(s-k) z^k / k!`, valid for all real orders
/// (integers included), `|z| < pi`.
pub fn li_minus_exp(s: f64, z: f64, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    if z.abs() >= PI {
        return Err(Error::OutOfDomain {
            what: "li_minus_exp |z|",
            value: z.abs(),
            bound: PI,
        });
    }
    let mut acc = TermSum::new(cfg);
    let mut zk = 1.0;
    let mut k = 0usize;
    while s - k as f64 >= -0.5 {
        if !acc.push(-specfun::eta(s - k as f64) * zk) {
            return Ok(finish_exp(acc, z, PI));
        }
        k += 1;
        zk *= z / k as f64;
    }

    // Tail: eta(s-k) = (1 - 2^{1+k-s}) zeta(s-k) through the functional
    // equation; tau and phi carry the two pieces without overflow.
    let g0 = specfun::gamma(1.0 + k as f64 - s)?;
    let mut tau = g0 * zk / (2.0 * PI).powi(k as i32);
    let mut phi = (2.0f64).powf(1.0 + k as f64 - s) * tau;
    let front = 2.0 * (2.0 * PI).powf(s - 1.0);
    loop {
        let arg = 1.0 + k as f64 - s;
        let zref = if arg > 55.0 { 1.0 } else { specfun::zeta(arg)? };
        let term = -front * zref * specfun::sin_pi(0.5 * (s - k as f64)) * (tau - phi);
        if !acc.push(term) {
            break;
        }
        let step = arg * z / (2.0 * PI * (k + 1) as f64);
        tau *= step;
        phi *= 2.0 * step;
        k += 1;
    }
    Ok(finish_exp(acc, z, PI))
}

/// `Li_n(-e^z)` at positive integer order, regrouped with the explicit
/// `ln 2` term and the even-zeta tail in powers of `z/pi`. Algebraically
/// identical to [`li_minus_exp`] at integer order.
pub fn li_minus_exp_integer(
    n: usize,
    z: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if n == 0 {
        return Err(Error::Pole { arg: 0.0 });
    }
    if z.abs() >= PI {
        return Err(Error::OutOfDomain {
            what: "li_minus_exp_integer |z|",
            value: z.abs(),
            bound: PI,
        });
    }
    let mut head = 0.0;
    let mut zk = 1.0;
    for k in 0..=n.saturating_sub(2) {
        if n - k >= 2 {
            head -= specfun::eta((n - k) as f64) * zk;
            zk *= z / (k + 1) as f64;
        }
    }
    let fac_nm1 = cache.factorial(n - 1);
    let zn1 = z.powi(n as i32 - 1);
    head -= zn1 * LN_2 / fac_nm1;
    head -= zn1 * z / (2.0 * fac_nm1 * n as f64);

    let v = z / PI;
    let v2 = v * v;
    let mut acc = TermSum::with_initial(cfg, head);
    let mut xi = v2 / cache.factorial(n + 1);
    let mut sign = -1.0;
    for k in 1..=cfg.max_terms {
        let coef = if k <= cache.k_max() {
            cache.zeta_even(k)? * (1.0 - (2.0f64).powi(-2 * k as i32))
        } else {
            1.0
        };
        if !acc.push(2.0 * zn1 * sign * coef * xi) {
            break;
        }
        let a = 2.0 * k as f64;
        xi *= a * (a + 1.0) / ((a + n as f64) * (a + n as f64 + 1.0)) * v2;
        sign = -sign;
    }
    Ok(finish_exp(acc, z, PI))
}

/// Shared tail sum_{k=m+1} (-1)^k [Gamma(2k)/Gamma(2k-2m)] coef(k) w^{2k-2m-1}
/// with chi_k carried by a term-ratio recurrence.
fn neg_even_tail<F>(
    m: usize,
    w: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
    acc: &mut TermSum,
    front: f64,
    mut coef: F,
) -> Result<()>
where
    F: FnMut(usize) -> Result<f64>,
{
    let w2 = w * w;
    // chi_{m+1} = Gamma(2m+2)/Gamma(2) w.
    let mut chi = cache.factorial(2 * m + 1) * w;
    let mut sign = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 };
    for k in (m + 1)..=(m + cfg.max_terms) {
        if !acc.push(front * sign * coef(k)? * chi) {
            break;
        }
        let a = 2.0 * k as f64;
        let b = (2 * (k - m)) as f64;
        chi *= a * (a + 1.0) / (b * (b + 1.0)) * w2;
        sign = -sign;
    }
    Ok(())
}

/// `Li_{-2m}(e^z)`: pole term `-Gamma(2m+1)/z^{2m+1}`, the `m = 0` constant
/// `-1/2`, and the odd-power tail in `z/(2 pi)`. Requires `0 < |z| < 2 pi`.
pub fn li_neg_even_exp(
    m: usize,
    z: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if z == 0.0 {
        return Err(Error::Pole { arg: 0.0 });
    }
    if z.abs() >= 2.0 * PI {
        return Err(Error::OutOfDomain {
            what: "li_neg_even_exp |z|",
            value: z.abs(),
            bound: 2.0 * PI,
        });
    }
    let mut head = -cache.factorial(2 * m) / z.powi(2 * m as i32 + 1);
    if m == 0 {
        head -= 0.5;
    }
    let mut acc = TermSum::with_initial(cfg, head);
    let front = 2.0 / (2.0 * PI).powi(2 * m as i32 + 1);
    let cmax = cache.k_max();
    neg_even_tail(m, z / (2.0 * PI), cache, cfg, &mut acc, front, |k| {
        if k <= cmax {
            cache.zeta_even(k)
        } else {
            Ok(1.0)
        }
    })?;
    Ok(finish_exp(acc, z, 2.0 * PI))
}

/// `Li_{-2m}(-e^z)`: the `m = 0` constant `-1/2` plus the odd-power tail in
/// `z/pi`; `|z| < pi`.
pub fn li_neg_even_minus_exp(
    m: usize,
    z: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if z.abs() >= PI {
        return Err(Error::OutOfDomain {
            what: "li_neg_even_minus_exp |z|",
            value: z.abs(),
            bound: PI,
        });
    }
    let head = if m == 0 { -0.5 } else { 0.0 };
    let mut acc = TermSum::with_initial(cfg, head);
    let front = 2.0 / PI.powi(2 * m as i32 + 1);
    let cmax = cache.k_max();
    neg_even_tail(m, z / PI, cache, cfg, &mut acc, front, |k| {
        if k <= cmax {
            Ok(cache.zeta_even(k)? * (1.0 - (2.0f64).powi(-2 * k as i32)))
        } else {
            Ok(1.0)
        }
    })?;
    Ok(finish_exp(acc, z, PI))
}

/// Order-derivative `d Li_s(e^z) / ds` at `s = -2m`. Real branch requires
/// `z < 0` (a `ln(-z)` accompanies the pole term); `|z| < 2 pi`.
pub fn dli_ds_neg_even_exp(
    m: usize,
    z: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if z >= 0.0 {
        return Err(Error::OutOfDomain {
            what: "dli_ds_neg_even_exp z",
            value: z,
            bound: 0.0,
        });
    }
    if z.abs() >= 2.0 * PI {
        return Err(Error::OutOfDomain {
            what: "dli_ds_neg_even_exp |z|",
            value: z.abs(),
            bound: 2.0 * PI,
        });
    }
    let zpow = z.powi(2 * m as i32 + 1);
    let gam = cache.factorial(2 * m);
    let mut head = cache.digamma_int(2 * m + 1) * gam / zpow - gam * (-z).ln() / zpow;
    if m == 0 {
        head -= 0.5 * LN_2PI;
    }
    let mut acc = TermSum::with_initial(cfg, head);

    // Even-zeta sum weighted by psi(2k) + zeta'(2k)/zeta(2k) - ln(2 pi).
    let front_a = -2.0 / (2.0 * PI).powi(2 * m as i32 + 1);
    let cmax = cache.k_max();
    neg_even_tail(m, z / (2.0 * PI), cache, cfg, &mut acc, front_a, |k| {
        if k <= cmax {
            Ok(cache.zeta_even(k)? * (cache.b_logderiv(2 * k)? - LN_2PI))
        } else {
            Ok(specfun::digamma(2.0 * k as f64)? - LN_2PI)
        }
    })?;

    // Odd-zeta sum: (1/(2 (2pi)^{2m})) sum_{k>=m+d} (-1)^k
    //   Gamma(2k+1) zeta(2k+1) / (2k-2m)! w^{2k-2m}.
    let w = z / (2.0 * PI);
    odd_zeta_sum(m, w, 0.5 / (2.0 * PI).powi(2 * m as i32), 1.0, cache, cfg, &mut acc)?;
    Ok(finish_exp(acc, z, 2.0 * PI))
}

/// Order-derivative `d Li_s(-e^z) / ds` at `s = -2m`; `|z| < pi`.
pub fn dli_ds_neg_even_minus_exp(
    m: usize,
    z: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if z.abs() >= PI {
        return Err(Error::OutOfDomain {
            what: "dli_ds_neg_even_minus_exp |z|",
            value: z.abs(),
            bound: PI,
        });
    }
    let head = if m == 0 { -0.5 * (PI / 2.0).ln() } else { 0.0 };
    let mut acc = TermSum::with_initial(cfg, head);
    let v = z / PI;
    let cmax = cache.k_max();

    // Odd-zeta sum with the (1 - 2^{-2k-1}) weights.
    odd_zeta_sum(
        m,
        v,
        1.0 / PI.powi(2 * m as i32),
        -1.0, // marker: use the eta-type (1 - 2^{-2k-1}) weight
        cache,
        cfg,
        &mut acc,
    )?;

    // Even-zeta sum weighted by psi(2k) + zeta'(2k)/zeta(2k) - ln(2 pi),
    // with the (1 - 2^{-2k}) factors.
    let front_a = -2.0 / PI.powi(2 * m as i32 + 1);
    neg_even_tail(m, v, cache, cfg, &mut acc, front_a, |k| {
        if k <= cmax {
            Ok(cache.zeta_even(k)?
                * (1.0 - (2.0f64).powi(-2 * k as i32))
                * (cache.b_logderiv(2 * k)? - LN_2PI))
        } else {
            Ok(specfun::digamma(2.0 * k as f64)? - LN_2PI)
        }
    })?;

    // Plain even-zeta sum carrying the -2 ln2 / pi^{2m+1} front factor.
    let front_c = -2.0 * LN_2 / PI.powi(2 * m as i32 + 1);
    neg_even_tail(m, v, cache, cfg, &mut acc, front_c, |k| {
        if k <= cmax {
            cache.zeta_even(k)
        } else {
            Ok(1.0)
        }
    })?;
    Ok(finish_exp(acc, z, PI))
}

/// Odd-zeta tail shared by the two order-derivative expansions:
/// `front * sum_{k = m + [m=0]} (-1)^k Gamma(2k+1) zeta(2k+1) weight(k)
///  / Gamma(2k-2m+1) * w^{2k-2m}`.
/// `weight_kind >= 0` means weight 1, `< 0` means `(1 - 2^{-2k-1})`.
fn odd_zeta_sum(
    m: usize,
    w: f64,
    front: f64,
    weight_kind: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
    acc: &mut TermSum,
) -> Result<()> {
    let w2 = w * w;
    let k0 = if m == 0 { 1 } else { m };
    // omega_{k0} = Gamma(2 k0 + 1)/Gamma(2 k0 - 2m + 1) w^{2 k0 - 2m}.
    let mut omega = cache.factorial(2 * k0) / cache.factorial(2 * (k0 - m))
        * w.powi(2 * (k0 - m) as i32);
    let mut sign = if k0 % 2 == 0 { 1.0 } else { -1.0 };
    for k in k0..=(k0 + cfg.max_terms) {
        let zo = if k <= cache.k_max() {
            cache.zeta_odd(k)?
        } else {
            1.0
        };
        let weight = if weight_kind < 0.0 {
            1.0 - (2.0f64).powi(-(2 * k as i32) - 1)
        } else {
            1.0
        };
        if !acc.push(front * sign * zo * weight * omega) {
            break;
        }
        let a = (2 * k + 1) as f64;
        let b = (2 * (k - m) + 1) as f64;
        omega *= a * (a + 1.0) / (b * (b + 1.0)) * w2;
        sign = -sign;
    }
    Ok(())
}

/// Asymptotic expansion of `Li_s(-e^z)` for large positive `z`:
/// `-2 sum_n eta(2n) z^{s-2n} / Gamma(s+1-2n)`, truncated at the smallest
/// term. For integer `s` the series terminates and is exact. The error
/// estimate is the magnitude of the first omitted term; the
/// degraded-accuracy flag is set when that exceeds the requested tolerance.
pub fn li_asymptotic(
    s: f64,
    z: f64,
    cache: &ConstantCache,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if z <= 0.0 {
        return Err(Error::OutOfDomain {
            what: "li_asymptotic z",
            value: z,
            bound: 0.0,
        });
    }
    // 1/Gamma(s+1-2n) by downward recurrence; reaches exact zero when the
    // argument hits a nonpositive integer, which terminates integer orders.
    let mut recip = if (s + 1.0) == (s + 1.0).floor() && s + 1.0 <= 0.0 {
        0.0
    } else {
        1.0 / specfun::gamma(s + 1.0)?
    };
    let mut zpow = z.powf(s);
    let inv_z2 = 1.0 / (z * z);
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    let mut omitted = 0.0;
    let mut terms = 0usize;
    for n in 0..cfg.max_terms {
        let eta_2n = if n == 0 {
            0.5
        } else if n <= cache.k_max() {
            cache.zeta_even(n)? * (1.0 - (2.0f64).powi(1 - 2 * n as i32))
        } else {
            1.0
        };
        let term = -2.0 * eta_2n * zpow * recip;
        if term.abs() > prev {
            omitted = term.abs();
            break;
        }
        sum += term;
        terms += 1;
        if term != 0.0 {
            prev = term.abs();
        }
        if recip == 0.0 {
            // Terminated exactly (integer order).
            omitted = 0.0;
            break;
        }
        if term.abs() < cfg.rtol * sum.abs() {
            omitted = term.abs();
            break;
        }
        recip *= (s - 2.0 * n as f64) * (s - 2.0 * n as f64 - 1.0);
        zpow *= inv_z2;
    }
    let flags = EvalFlags {
        degraded_accuracy: omitted > cfg.rtol * sum.abs(),
        slow_convergence: false,
    };
    Ok(EvalOutcome::new(sum, Method::Asymptotic, terms, omitted).with_flags(flags))
}

/// `Li_s(e^x)` for `x < 0`, choosing between the direct series and the
/// small-argument expansion. Orders used here are non-integer.
pub(crate) fn li_pos_exp_auto(
    s: f64,
    x: f64,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if x <= -0.4 {
        li_direct(s, x.exp(), cfg)
    } else {
        li_exp_expansion(s, x, cfg)
    }
}

/// `Li_s(-e^x)` for `x < 0`.
pub(crate) fn li_neg_exp_auto(s: f64, x: f64, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    if x <= -0.4 {
        li_direct(s, -x.exp(), cfg)
    } else {
        li_minus_exp(s, x, cfg)
    }
}
