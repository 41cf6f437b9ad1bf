//! Distortion analytics: empirical distortion of an approximate distance
//! against the exact one over a finite sample set, conversion of
//! upper/lower bound families into distortion values with slope
//! verification, and closed-form theoretical distortion formulas for the
//! six approximation algorithms.

// Input guards are written as negated comparisons (`!(x > 0.0)`) on
// purpose: they reject NaN along with out-of-range values, where the
// un-negated form would wave NaN through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Relative tolerance for the slope monotonicity checks in
/// [`bound_to_distortion`]. Successive slope values accumulate only a few
/// ulps of rounding noise (~1e-16 per evaluation, 256 grid points), while a
/// genuine monotonicity violation in a polynomial bound family shows up at
/// polynomial order; 1e-9 separates the two by many orders of magnitude.
pub const SLOPE_RTOL: f64 = 1e-9;

/// Absolute tolerance companion to [`SLOPE_RTOL`], guarding slope values
/// near zero where a relative tolerance vanishes.
pub const SLOPE_ATOL: f64 = 1e-12;

/// Relative tolerance for checking that a verification grid starts at θ.
pub const GRID_START_RTOL: f64 = 1e-12;

// The absolute guard must sit well below the relative one so it only
// matters near zero.
const _: () = assert!(SLOPE_ATOL < SLOPE_RTOL && GRID_START_RTOL < SLOPE_RTOL);

/// The six approximation algorithms, in the conventional reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    BarYossef,
    Sokolov,
    Charikar,
    Andoni09,
    Andoni10,
    Batu,
}

impl Algorithm {
    /// All six algorithms in reporting order.
    pub const ALL: [Algorithm; 6] = [
        Algorithm::BarYossef,
        Algorithm::Sokolov,
        Algorithm::Charikar,
        Algorithm::Andoni09,
        Algorithm::Andoni10,
        Algorithm::Batu,
    ];

    /// Stable lowercase identifier used in CSV output and CLI flags.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BarYossef => "baryossef",
            Algorithm::Sokolov => "sokolov",
            Algorithm::Charikar => "charikar",
            Algorithm::Andoni09 => "andoni09",
            Algorithm::Andoni10 => "andoni10",
            Algorithm::Batu => "batu",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown algorithm {s:?}")))
    }
}

/// One pair's exact distance and approximate distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioSample {
    exact: f64,
    approx: f64,
}

impl RatioSample {
    /// Builds a sample; both values must be finite and non-negative.
    pub fn new(exact: f64, approx: f64) -> Result<Self> {
        if !exact.is_finite() || !approx.is_finite() || exact < 0.0 || approx < 0.0 {
            return Err(Error::InvalidInput(format!(
                "ratio sample values must be finite and non-negative, got ({exact}, {approx})"
            )));
        }
        Ok(RatioSample { exact, approx })
    }

    pub fn exact(&self) -> f64 {
        self.exact
    }

    pub fn approx(&self) -> f64 {
        self.approx
    }

    /// `approx / exact`, defined only when the exact distance is positive.
    pub fn ratio(&self) -> Option<f64> {
        (self.exact > 0.0).then(|| self.approx / self.exact)
    }
}

/// Empirical distortion of an approximate distance over a sample set.
///
/// `k` is the smallest K ≥ 1 such that some scale K′ puts every pair's
/// exact value within `exact ≤ K′·approx ≤ K·exact`; `k_prime` is that
/// optimal scale, `1 / min_ratio`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistortionReport {
    pub k: f64,
    pub k_prime: f64,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub theta: f64,
    pub n_used: usize,
    pub n_excluded: usize,
}

/// Computes the empirical distortion of `samples` over the sub-population
/// with exact distance at least `theta`.
///
/// Within that population, ratios `approx/exact` are collected; the
/// distortion is `max_ratio / min_ratio` and the optimal scale constant is
/// `1 / min_ratio`. A pair with positive exact distance but zero
/// approximation (or the reverse) admits no finite scale, so the distortion
/// is unbounded. Pairs with both values zero are counted as used but
/// impose no constraint; when only such pairs remain the report is the
/// neutral one (`k = 1`). Errors when no sample survives the threshold.
pub fn empirical_distortion(samples: &[RatioSample], theta: f64) -> Result<DistortionReport> {
    let used: Vec<&RatioSample> = samples.iter().filter(|s| s.exact >= theta).collect();
    if used.is_empty() {
        return Err(Error::NoSamples { theta });
    }
    let n_used = used.len();
    let n_excluded = samples.len() - n_used;

    let mut min_ratio = f64::INFINITY;
    let mut max_ratio = f64::NEG_INFINITY;
    let mut constrained = false;
    for s in &used {
        // Extended ratio: a vanishing side forces the corresponding
        // extreme; a (0, 0) pair constrains nothing.
        let ratio = if s.exact > 0.0 {
            s.approx / s.exact
        } else if s.approx > 0.0 {
            f64::INFINITY
        } else {
            continue;
        };
        constrained = true;
        min_ratio = min_ratio.min(ratio);
        max_ratio = max_ratio.max(ratio);
    }

    if !constrained {
        return Ok(DistortionReport {
            k: 1.0,
            k_prime: 1.0,
            min_ratio: 1.0,
            max_ratio: 1.0,
            theta,
            n_used,
            n_excluded,
        });
    }
    let k = if min_ratio == 0.0 || max_ratio.is_infinite() {
        f64::INFINITY
    } else {
        max_ratio / min_ratio
    };
    let k_prime = if min_ratio == 0.0 {
        f64::INFINITY
    } else {
        1.0 / min_ratio
    };
    Ok(DistortionReport {
        k,
        k_prime,
        min_ratio,
        max_ratio,
        theta,
        n_used,
        n_excluded,
    })
}

/// Outcome of converting a bound family into a distortion value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundCheck {
    /// Both slope checks passed; `k = u(θ)/l(θ)` (infinite when `l(θ) ≤ 0`).
    Verified { k: f64 },
    /// A slope check failed at grid point `d`; `upper` names the offending
    /// family (`true` for `u(d)/d` increasing, `false` for `l(d)/d`
    /// decreasing).
    SlopeViolation { d: f64, upper: bool },
}

/// Converts an upper/lower bound family `l(d) ≤ d̃ ≤ u(d)` into the
/// distortion `u(θ)/l(θ)`, after verifying on `grid` that `u(d)/d` is
/// non-increasing and `l(d)/d` is non-decreasing (the conversion is valid
/// only under those slope conditions, so they are checked, not assumed).
///
/// `grid` must be non-empty, non-decreasing, and start at `theta`
/// (within [`GRID_START_RTOL`]); slope comparisons use [`SLOPE_RTOL`] and
/// [`SLOPE_ATOL`]. A failed check reports the offending point instead of a
/// value; `l(θ) ≤ 0` verifies with an unbounded distortion.
pub fn bound_to_distortion(
    u: impl Fn(f64) -> f64,
    l: impl Fn(f64) -> f64,
    theta: f64,
    grid: &[f64],
) -> Result<BoundCheck> {
    if !(theta > 0.0) {
        return Err(Error::InvalidInput(format!(
            "theta must be positive, got {theta}"
        )));
    }
    let Some(&first) = grid.first() else {
        return Err(Error::InvalidInput("empty verification grid".into()));
    };
    if (first - theta).abs() > GRID_START_RTOL * theta.abs() {
        return Err(Error::InvalidInput(format!(
            "grid must start at theta = {theta}, starts at {first}"
        )));
    }
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidInput("grid must be non-decreasing".into()));
    }

    let mut prev_upper = u(grid[0]) / grid[0];
    let mut prev_lower = l(grid[0]) / grid[0];
    for &d in &grid[1..] {
        let upper = u(d) / d;
        let lower = l(d) / d;
        if upper > prev_upper * (1.0 + SLOPE_RTOL) + SLOPE_ATOL {
            return Ok(BoundCheck::SlopeViolation { d, upper: true });
        }
        if lower < prev_lower * (1.0 - SLOPE_RTOL) - SLOPE_ATOL {
            return Ok(BoundCheck::SlopeViolation { d, upper: false });
        }
        prev_upper = upper;
        prev_lower = lower;
    }

    let l_theta = l(theta);
    let k = if l_theta <= 0.0 {
        f64::INFINITY
    } else {
        u(theta) / l_theta
    };
    Ok(BoundCheck::Verified { k })
}

/// `count` log-spaced values from `from` to `to`, inclusive; both endpoints
/// are emitted exactly. Requires `0 < from ≤ to` and `count ≥ 1`.
pub fn log_spaced(from: f64, to: f64, count: usize) -> Result<Vec<f64>> {
    if !(from > 0.0) || !(to >= from) || count == 0 {
        return Err(Error::InvalidInput(format!(
            "log_spaced requires 0 < from <= to and count >= 1, got ({from}, {to}, {count})"
        )));
    }
    if count == 1 {
        return Ok(vec![from]);
    }
    let ratio = to / from;
    let mut out = Vec::with_capacity(count);
    out.push(from);
    for i in 1..count - 1 {
        out.push(from * ratio.powf(i as f64 / (count - 1) as f64));
    }
    out.push(to);
    Ok(out)
}

/// The q-gram L1 bound family for length-`n` strings:
/// `u(d) = 2(dn)^{2/3}`, `l(d) = 4d/13`.
pub fn baryossef_bounds(n: f64) -> (impl Fn(f64) -> f64, impl Fn(f64) -> f64) {
    (
        move |d: f64| 2.0 * (d * n).cbrt().powi(2),
        |d: f64| 4.0 * d / 13.0,
    )
}

/// The padded, length-normalized q-gram bound family for length-`n`
/// strings: `u(d) = 2(dn + 2)/n`, `l(d) = 2(d − 5)/n`. The lower bound is
/// positive only for `d > 5`, which is why this family's distortion is
/// unbounded at thresholds ≤ 5.
pub fn sokolov_bounds(n: f64) -> (impl Fn(f64) -> f64, impl Fn(f64) -> f64) {
    (
        move |d: f64| 2.0 * (d * n + 2.0) / n,
        move |d: f64| 2.0 * (d - 5.0) / n,
    )
}

/// Minimum `i ≥ 0` such that applying the base-`base` logarithm `i` times
/// to `x` yields a value ≤ 1; 0 whenever `x ≤ 1`.
///
/// Bases 2 and 10 use the dedicated exact library routines so that
/// power-of-base inputs land on exact integers (`lg* 65536 = 4` requires
/// `lg 65536 = 16` exactly, which the change-of-base formula does not
/// give).
///
/// # Panics
///
/// When `base ≤ 1`, or when the iteration provably fails to descend (which
/// can only happen for bases below e^(1/e) ≈ 1.4447, where the iterated
/// logarithm is undefined for large inputs).
pub fn iterated_log(base: f64, x: f64) -> u32 {
    assert!(base > 1.0, "iterated_log requires base > 1, got {base}");
    let log = |v: f64| -> f64 {
        if base == 2.0 {
            v.log2()
        } else if base == 10.0 {
            v.log10()
        } else {
            v.ln() / base.ln()
        }
    };
    let mut x = x;
    let mut i = 0;
    while x > 1.0 {
        let next = log(x);
        assert!(
            next < x,
            "iterated logarithm does not descend at {x} for base {base}"
        );
        x = next;
        i += 1;
    }
    i
}

/// Which of the two reported Batu regimes a theory value refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BatuRegime {
    /// One alphabet reduction (`j = 1`).
    Single,
    /// The large-`j` limit, with the reduced bit width at its fixed point.
    Limit,
}

impl fmt::Display for BatuRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BatuRegime::Single => f.write_str("1"),
            BatuRegime::Limit => f.write_str("limit"),
        }
    }
}

/// Theoretical distortion `(13 / (2θ^{1/3})) · n^{2/3}`; unbounded at
/// θ = 0.
pub fn baryossef_theory(n: f64, theta: f64) -> f64 {
    if theta <= 0.0 {
        return f64::INFINITY;
    }
    13.0 * n.cbrt().powi(2) / (2.0 * theta.cbrt())
}

/// Theoretical distortion `(nθ + 2) / (θ − 5)`; unbounded for θ ≤ 5.
pub fn sokolov_theory(n: f64, theta: f64) -> f64 {
    if theta <= 5.0 {
        return f64::INFINITY;
    }
    (n * theta + 2.0) / (theta - 5.0)
}

/// Theoretical distortion `48n(1 + ln n) / max{1, θ}`.
pub fn charikar_theory(n: f64, theta: f64) -> f64 {
    48.0 * n * (1.0 + n.ln()) / theta.max(1.0)
}

/// Theoretical distortion `3400n`.
pub fn andoni09_theory(n: f64) -> f64 {
    3400.0 * n
}

/// Theoretical distortion `12 · lg n`.
pub fn andoni10_theory(n: f64) -> f64 {
    12.0 * n.log2()
}

/// Single-reduction (`j = 1`) distortion
/// `(2c − 1) · [4c + (8(2c − 3)k)^{c−1}] / c` for block parameter `c` and
/// symbol bit width `k`.
pub fn batu_theory_single(c: f64, k: f64) -> f64 {
    (2.0 * c - 1.0) * (4.0 * c + (8.0 * (2.0 * c - 3.0) * k).powf(c - 1.0)) / c
}

/// Large-`j` limit distortion
/// `4(2c − 1)(lg((2c − 3)·k*) + 1 + (c − 1)²/c)`, where
/// `k* = max{k, 4(c − 1)²}` is the fixed point the reduced bit width
/// descends to: once the width falls to `4(c − 1)²` further reductions
/// cannot shrink it, so the limit formula evaluates there whenever the
/// starting width is already below the fixed point.
pub fn batu_theory_limit(c: f64, k: f64) -> f64 {
    let k_star = k.max(4.0 * (c - 1.0).powi(2));
    4.0 * (2.0 * c - 1.0) * (((2.0 * c - 3.0) * k_star).log2() + 1.0 + (c - 1.0).powi(2) / c)
}

/// Length-driven choice of the Batu block parameter:
/// `max{(lg lg n) / (lg lg lg n), 2}`, evaluated in real arithmetic. For
/// `n ≤ 16` the triple logarithm is degenerate (zero, negative, or blowing
/// up) and the rule pins `c = 2`; on `[16, 65536]` the ratio stays ≤ 2 so
/// the maximum clamps to exactly 2.
pub fn batu_c_rule(n: f64) -> f64 {
    if n <= 16.0 {
        return 2.0;
    }
    let llg = n.log2().log2();
    (llg / llg.log2()).max(2.0)
}

/// A theoretical-distortion query: one algorithm with exactly the
/// parameters its formula consumes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TheoryQuery {
    BarYossef { n: f64, theta: f64 },
    Sokolov { n: f64, theta: f64 },
    Charikar { n: f64, theta: f64 },
    Andoni09 { n: f64 },
    Andoni10 { n: f64 },
    /// `c = None` applies the length-driven rule [`batu_c_rule`].
    Batu {
        n: f64,
        k: f64,
        c: Option<f64>,
        regime: BatuRegime,
    },
}

/// One evaluated theoretical distortion; parameter fields are present
/// exactly when the algorithm's formula uses them.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoryPoint {
    pub algorithm: Algorithm,
    pub n: f64,
    pub theta: Option<f64>,
    pub k: Option<f64>,
    pub c: Option<f64>,
    pub j: Option<BatuRegime>,
    pub value: f64,
}

/// Evaluates one theoretical distortion. Requires `n ≥ 2`, `0 ≤ θ ≤ n`
/// for the θ-dependent formulas, `k ≥ 1` and `c ≥ 2` for Batu.
pub fn theory_distortion(query: &TheoryQuery) -> Result<TheoryPoint> {
    let n = match *query {
        TheoryQuery::BarYossef { n, .. }
        | TheoryQuery::Sokolov { n, .. }
        | TheoryQuery::Charikar { n, .. }
        | TheoryQuery::Andoni09 { n }
        | TheoryQuery::Andoni10 { n }
        | TheoryQuery::Batu { n, .. } => n,
    };
    if !(n >= 2.0) {
        return Err(Error::InvalidInput(format!("n must be at least 2, got {n}")));
    }
    let check_theta = |theta: f64| -> Result<f64> {
        if !(0.0..=n).contains(&theta) {
            return Err(Error::InvalidInput(format!(
                "theta must lie in [0, n] = [0, {n}], got {theta}"
            )));
        }
        Ok(theta)
    };
    let point = match *query {
        TheoryQuery::BarYossef { n, theta } => {
            let theta = check_theta(theta)?;
            TheoryPoint {
                algorithm: Algorithm::BarYossef,
                n,
                theta: Some(theta),
                k: None,
                c: None,
                j: None,
                value: baryossef_theory(n, theta),
            }
        }
        TheoryQuery::Sokolov { n, theta } => {
            let theta = check_theta(theta)?;
            TheoryPoint {
                algorithm: Algorithm::Sokolov,
                n,
                theta: Some(theta),
                k: None,
                c: None,
                j: None,
                value: sokolov_theory(n, theta),
            }
        }
        TheoryQuery::Charikar { n, theta } => {
            let theta = check_theta(theta)?;
            TheoryPoint {
                algorithm: Algorithm::Charikar,
                n,
                theta: Some(theta),
                k: None,
                c: None,
                j: None,
                value: charikar_theory(n, theta),
            }
        }
        TheoryQuery::Andoni09 { n } => TheoryPoint {
            algorithm: Algorithm::Andoni09,
            n,
            theta: None,
            k: None,
            c: None,
            j: None,
            value: andoni09_theory(n),
        },
        TheoryQuery::Andoni10 { n } => TheoryPoint {
            algorithm: Algorithm::Andoni10,
            n,
            theta: None,
            k: None,
            c: None,
            j: None,
            value: andoni10_theory(n),
        },
        TheoryQuery::Batu { n, k, c, regime } => {
            if !(k >= 1.0) {
                return Err(Error::InvalidInput(format!(
                    "bit width k must be at least 1, got {k}"
                )));
            }
            let c = c.unwrap_or_else(|| batu_c_rule(n));
            if !(c >= 2.0) {
                return Err(Error::InvalidInput(format!(
                    "block parameter c must be at least 2, got {c}"
                )));
            }
            let value = match regime {
                BatuRegime::Single => batu_theory_single(c, k),
                BatuRegime::Limit => batu_theory_limit(c, k),
            };
            TheoryPoint {
                algorithm: Algorithm::Batu,
                n,
                theta: None,
                k: Some(k),
                c: Some(c),
                j: Some(regime),
                value,
            }
        }
    };
    Ok(point)
}

/// Threshold convention for a curve sweep: a fixed θ, or θ = n per grid
/// point (the convention used for the θ-dependent rows of the reference
/// charts).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThetaRule {
    Fixed(f64),
    EqualN,
}

/// Block-parameter convention for the Batu row of a curve sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CRule {
    Fixed(f64),
    /// Apply [`batu_c_rule`] per grid point.
    LengthRule,
}

/// A theoretical-distortion curve sweep over a length grid.
#[derive(Debug, Clone)]
pub struct CurveSpec {
    pub n_grid: Vec<f64>,
    pub theta_rule: ThetaRule,
    pub k: f64,
    pub c_rule: CRule,
    pub regime: BatuRegime,
}

/// Evaluates all six curves over the grid, six points per grid value in
/// reporting order. The grid must be non-empty and increasing.
pub fn theory_curves(spec: &CurveSpec) -> Result<Vec<TheoryPoint>> {
    if spec.n_grid.is_empty() {
        return Err(Error::InvalidInput("empty length grid".into()));
    }
    if spec.n_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput(
            "length grid must be strictly increasing".into(),
        ));
    }
    let mut out = Vec::with_capacity(spec.n_grid.len() * Algorithm::ALL.len());
    for &n in &spec.n_grid {
        let theta = match spec.theta_rule {
            ThetaRule::Fixed(t) => t,
            ThetaRule::EqualN => n,
        };
        let c = match spec.c_rule {
            CRule::Fixed(c) => Some(c),
            CRule::LengthRule => None,
        };
        for algorithm in Algorithm::ALL {
            let query = match algorithm {
                Algorithm::BarYossef => TheoryQuery::BarYossef { n, theta },
                Algorithm::Sokolov => TheoryQuery::Sokolov { n, theta },
                Algorithm::Charikar => TheoryQuery::Charikar { n, theta },
                Algorithm::Andoni09 => TheoryQuery::Andoni09 { n },
                Algorithm::Andoni10 => TheoryQuery::Andoni10 { n },
                Algorithm::Batu => TheoryQuery::Batu {
                    n,
                    k: spec.k,
                    c,
                    regime: spec.regime,
                },
            };
            out.push(theory_distortion(&query)?);
        }
    }
    Ok(out)
}
