//! Quadrature kernels: adaptive Gauss–Kronrod integration, Fourier-cosine
//! transforms of slowly decaying integrands with half-period tail averaging,
//! and polynomial extrapolation of regulator sequences.

use crate::error::{CoreError, Result};

/// Tolerances and limits shared by the quadrature routines.
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    /// Relative tolerance on the accumulated value.
    pub rel_tol: f64,
    /// Absolute tolerance floor; 0 disables it.
    pub abs_tol: f64,
    /// Maximum number of adaptive subdivisions per call.
    pub max_intervals: usize,
    /// Number of trailing half-period partial sums averaged for the
    /// oscillatory tail estimate.
    pub tail_half_periods: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-10,
            abs_tol: 0.0,
            max_intervals: 4000,
            tail_half_periods: 8,
        }
    }
}

/// Value and error estimate of a quadrature.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
}

// 21-point Gauss–Kronrod pair: 10-point Gauss nodes embedded in 21 Kronrod
// nodes (positive abscissae; the rule is symmetric).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// One 21-point Gauss–Kronrod panel; returns (kronrod value, error estimate,
/// integral of |f|).
fn qk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut res_gauss = 0.0;
    let mut res_kronrod = f_center * WGK[10];
    let mut res_abs = res_kronrod.abs();

    let mut fv = [0.0_f64; 21];
    fv[10] = f_center;

    for j in 0..10 {
        let absc = half * XGK[j];
        let f1 = f(center - absc);
        let f2 = f(center + absc);
        fv[j] = f1;
        fv[20 - j] = f2;
        let fsum = f1 + f2;
        res_kronrod += WGK[j] * fsum;
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * fsum;
        }
    }

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[20 - j] - mean).abs());
    }

    let value = res_kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    let mut err = ((res_kronrod - res_gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err, res_abs)
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// Adaptive Gauss–Kronrod integration of `f` over [a, b].
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    integrate_with_breakpoints(f, &[a, b], cfg)
}

/// Adaptive integration over a partition given by `points` (must be sorted);
/// seeding panels at known structure (peaks, regulator scales) keeps the
/// subdivision honest for sharply localized integrands.
pub fn integrate_with_breakpoints<F: Fn(f64) -> f64>(
    f: &F,
    points: &[f64],
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if points.len() < 2 {
        return Err(CoreError::Quadrature(
            "need at least two partition points".into(),
        ));
    }
    let mut segs: Vec<Segment> = Vec::with_capacity(cfg.max_intervals.min(64));
    for w in points.windows(2) {
        if w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater) {
            return Err(CoreError::Quadrature(format!(
                "partition points must be strictly increasing, got {} then {}",
                w[0], w[1]
            )));
        }
        let (v, e, _) = qk21(f, w[0], w[1]);
        segs.push(Segment {
            a: w[0],
            b: w[1],
            value: v,
            error: e,
        });
    }

    loop {
        let total: f64 = segs.iter().map(|s| s.value).sum();
        let err: f64 = segs.iter().map(|s| s.error).sum();
        let tol = cfg.abs_tol.max(cfg.rel_tol * total.abs());
        if err <= tol || err <= 50.0 * f64::EPSILON * total.abs() {
            return Ok(QuadResult {
                value: total,
                abs_error: err,
            });
        }
        if segs.len() >= cfg.max_intervals {
            return Err(CoreError::Quadrature(format!(
                "error {err:.3e} above tolerance {tol:.3e} after {} subdivisions",
                segs.len()
            )));
        }
        let worst = segs
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| x.error.total_cmp(&y.error))
            .map(|(i, _)| i)
            .unwrap();
        let s = segs[worst];
        let mid = 0.5 * (s.a + s.b);
        if mid <= s.a || mid >= s.b {
            // interval at floating-point resolution; accept its estimate
            return Ok(QuadResult {
                value: total,
                abs_error: err,
            });
        }
        let (v1, e1, _) = qk21(f, s.a, mid);
        let (v2, e2, _) = qk21(f, mid, s.b);
        segs[worst] = Segment {
            a: s.a,
            b: mid,
            value: v1,
            error: e1,
        };
        segs.push(Segment {
            a: mid,
            b: s.b,
            value: v2,
            error: e2,
        });
    }
}

/// ∫₀^∞ f(u) cos(ωu) du for smooth f with a decaying (possibly only ~u⁻²)
/// envelope.  Panels are locked to the zeros of cos(ωu); the divergent-free
/// tail beyond the truncation point is estimated by iterated averaging of
/// the trailing half-period partial sums (Euler-style acceleration of the
/// alternating chunk series).
pub fn cosine_transform_decaying<F: Fn(f64) -> f64>(
    f: &F,
    omega: f64,
    u_max: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(CoreError::Domain(format!(
            "cosine transform requires omega > 0, got {omega}"
        )));
    }
    if !(u_max > 0.0 && u_max.is_finite()) {
        return Err(CoreError::Domain(format!(
            "truncation point must be positive and finite, got {u_max}"
        )));
    }
    let half_period = std::f64::consts::PI / omega;
    let m = cfg.tail_half_periods.max(4);
    // enough half-periods to cover u_max, and enough to average over
    let n_half = ((u_max / half_period).ceil() as usize).max(2 * m);

    let g = |u: f64| f(u) * (omega * u).cos();
    let zero = |k: usize| (k as f64 + 0.5) * half_period;

    let panel_cfg = QuadConfig {
        rel_tol: cfg.rel_tol,
        abs_tol: cfg.abs_tol / (n_half as f64 + 1.0),
        max_intervals: cfg.max_intervals,
        tail_half_periods: cfg.tail_half_periods,
    };

    let mut partial = 0.0;
    let mut err_sum = 0.0;
    let mut trailing: Vec<f64> = Vec::with_capacity(m);
    for k in 0..n_half {
        let (lo, hi) = if k == 0 {
            (0.0, zero(0))
        } else {
            (zero(k - 1), zero(k))
        };
        let r = integrate(&g, lo, hi, &panel_cfg)?;
        partial += r.value;
        err_sum += r.abs_error;
        if k + m >= n_half {
            trailing.push(partial);
        }
    }

    // iterated means of the trailing partial sums
    let mut level = trailing;
    let mut prev_top = level[level.len() - 1];
    while level.len() > 1 {
        prev_top = level[level.len() - 1];
        level = level.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    let value = level[0];
    let tail_err = (value - prev_top).abs();

    Ok(QuadResult {
        value,
        abs_error: err_sum + tail_err,
    })
}

/// ∫_start^∞ f for integrands that eventually decay fast: accumulates octave
/// segments [W, 2W] until two consecutive octaves contribute below
/// `abs_floor`.  Returns the total together with the per-octave
/// contributions (the Cauchy-tail record).
pub fn integrate_octaves_to_negligible<F: Fn(f64) -> f64>(
    f: &F,
    start: f64,
    abs_floor: f64,
    cfg: &QuadConfig,
) -> Result<(QuadResult, Vec<f64>)> {
    if !(start > 0.0 && start.is_finite()) {
        return Err(CoreError::Domain(format!(
            "octave integration requires start > 0, got {start}"
        )));
    }
    let mut total = 0.0;
    let mut err = 0.0;
    let mut contributions = Vec::new();
    let mut lo = start;
    let mut quiet = 0;
    for _ in 0..64 {
        let hi = 2.0 * lo;
        let r = integrate(f, lo, hi, cfg)?;
        total += r.value;
        err += r.abs_error;
        contributions.push(r.value);
        if r.value.abs() < abs_floor {
            quiet += 1;
            if quiet >= 2 {
                return Ok((
                    QuadResult {
                        value: total,
                        abs_error: err,
                    },
                    contributions,
                ));
            }
        } else {
            quiet = 0;
        }
        lo = hi;
    }
    Err(CoreError::Quadrature(format!(
        "tail not negligible after 64 octaves from {start}"
    )))
}

/// Neville polynomial extrapolation of samples (h_i, v_i) to h = 0.
/// Returns the extrapolated value and the difference between the last two
/// tableau stages as an error indicator.
pub fn extrapolate_to_zero(samples: &[(f64, f64)]) -> Result<(f64, f64)> {
    let n = samples.len();
    if n < 2 {
        return Err(CoreError::NonConvergence(
            "need at least two samples to extrapolate".into(),
        ));
    }
    let h: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let mut col: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let mut last_stage_top = col[0];
    for j in 1..n {
        last_stage_top = col[0];
        for i in 0..n - j {
            col[i] = (h[i] * col[i + 1] - h[i + j] * col[i]) / (h[i] - h[i + j]);
        }
    }
    let change = (col[0] - last_stage_top).abs();
    Ok((col[0], change))
}
