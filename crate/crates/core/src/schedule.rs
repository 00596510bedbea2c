//! Diffusion forms and prediction-type conversions.
//!
//! A schedule is the coefficient pair `(alpha_t, sigma_t)` of the forward
//! interpolation `x_t = alpha_t * x0 + sigma_t * eps`, together with the
//! log-SNR `lambda_t = ln(alpha_t / sigma_t)` and its inverse `t_of_lambda`.
//! Four forms are implemented:
//!
//! | kind          | alpha_t                 | sigma_t            | default range      |
//! |---------------|-------------------------|--------------------|--------------------|
//! | flow-matching | `1 - t`                 | `t`                | `[1e-4, 1 - 1e-4]` |
//! | VP (DDPM)     | `exp(-I(t)/2)`          | `sqrt(1 - a_t^2)`  | `[1e-4, 1 - 1e-4]` |
//! | Sub-VP        | `exp(-I(t)/2)`          | `1 - a_t^2`        | `[1e-4, 1 - 1e-4]` |
//! | EDM           | `1`                     | `t`                | `[0.002, 80]`      |
//!
//! with `I(t) = beta_min * t + (beta_max - beta_min) * t^2 / 2` and VP/Sub-VP
//! defaults `beta_min = 0.1`, `beta_max = 20`. The clip range keeps `alpha`
//! and `sigma` strictly positive so `lambda` stays finite; `lambda` is
//! strictly decreasing in `t` on the clipped range for all four forms.
//! The VP/Sub-VP constants are conventional choices, not canonical ones; see
//! the crate README.

use crate::error::{Error, Result};

/// Default time clip for the `[0, 1]`-parameterized schedules.
pub const DEFAULT_T_CLIP: f64 = 1e-4;
/// Default VP / Sub-VP noise-rate endpoints.
pub const DEFAULT_BETA_MIN: f64 = 0.1;
pub const DEFAULT_BETA_MAX: f64 = 20.0;
/// Default EDM time range (time doubles as the noise level).
pub const EDM_T_MIN: f64 = 0.002;
pub const EDM_T_MAX: f64 = 80.0;

/// Absolute slack for range checks; inputs this close to a clip bound are
/// clamped onto it instead of rejected, so closed-form/bisection inverses
/// that land a rounding error outside the range stay usable.
const RANGE_SLACK: f64 = 1e-9;

/// The diffusion form family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScheduleKind {
    FlowMatching,
    Vp,
    SubVp,
    Edm,
}

impl ScheduleKind {
    pub fn name(&self) -> &'static str {
        match self {
            ScheduleKind::FlowMatching => "flow-matching",
            ScheduleKind::Vp => "vp",
            ScheduleKind::SubVp => "sub-vp",
            ScheduleKind::Edm => "edm",
        }
    }

    /// Parse a schedule kind (accepts a few aliases: `fm`, `ddpm`, `subvp`).
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "flow-matching" | "flowmatching" | "fm" | "rf" => Ok(ScheduleKind::FlowMatching),
            "vp" | "ddpm" => Ok(ScheduleKind::Vp),
            "sub-vp" | "subvp" => Ok(ScheduleKind::SubVp),
            "edm" => Ok(ScheduleKind::Edm),
            other => Err(Error::Usage(format!("unknown schedule kind `{other}`"))),
        }
    }

    /// All four schedule kinds, in documentation order.
    pub fn all() -> [ScheduleKind; 4] {
        [
            ScheduleKind::FlowMatching,
            ScheduleKind::Edm,
            ScheduleKind::Vp,
            ScheduleKind::SubVp,
        ]
    }
}

/// An immutable diffusion schedule. Values are safe to share across threads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Schedule {
    kind: ScheduleKind,
    beta_min: f64,
    beta_max: f64,
    t_min: f64,
    t_max: f64,
}

impl Schedule {
    /// Flow-matching: `alpha = 1 - t`, `sigma = t`.
    pub fn flow_matching() -> Schedule {
        Schedule {
            kind: ScheduleKind::FlowMatching,
            beta_min: 0.0,
            beta_max: 0.0,
            t_min: DEFAULT_T_CLIP,
            t_max: 1.0 - DEFAULT_T_CLIP,
        }
    }

    /// Continuous VP (DDPM) with the default noise-rate endpoints.
    pub fn vp() -> Schedule {
        Schedule::vp_with(DEFAULT_BETA_MIN, DEFAULT_BETA_MAX)
    }

    /// Continuous VP with explicit `beta(t) = beta_min + t (beta_max - beta_min)`.
    pub fn vp_with(beta_min: f64, beta_max: f64) -> Schedule {
        Schedule {
            kind: ScheduleKind::Vp,
            beta_min,
            beta_max,
            t_min: DEFAULT_T_CLIP,
            t_max: 1.0 - DEFAULT_T_CLIP,
        }
    }

    /// Sub-VP: same `alpha` as VP, `sigma = 1 - alpha^2`.
    pub fn sub_vp() -> Schedule {
        Schedule::sub_vp_with(DEFAULT_BETA_MIN, DEFAULT_BETA_MAX)
    }

    pub fn sub_vp_with(beta_min: f64, beta_max: f64) -> Schedule {
        Schedule {
            kind: ScheduleKind::SubVp,
            beta_min,
            beta_max,
            t_min: DEFAULT_T_CLIP,
            t_max: 1.0 - DEFAULT_T_CLIP,
        }
    }

    /// EDM: `alpha = 1`, `sigma = t`, `t` in `[0.002, 80]`.
    pub fn edm() -> Schedule {
        Schedule {
            kind: ScheduleKind::Edm,
            beta_min: 0.0,
            beta_max: 0.0,
            t_min: EDM_T_MIN,
            t_max: EDM_T_MAX,
        }
    }

    /// A schedule of `kind` with default parameters.
    pub fn of_kind(kind: ScheduleKind) -> Schedule {
        match kind {
            ScheduleKind::FlowMatching => Schedule::flow_matching(),
            ScheduleKind::Vp => Schedule::vp(),
            ScheduleKind::SubVp => Schedule::sub_vp(),
            ScheduleKind::Edm => Schedule::edm(),
        }
    }

    /// Replace the time clip range.
    pub fn clipped(mut self, t_min: f64, t_max: f64) -> Result<Schedule> {
        if !(t_min.is_finite() && t_max.is_finite()) || t_min <= 0.0 || t_min >= t_max {
            return Err(Error::Usage(format!(
                "invalid clip range [{t_min}, {t_max}]: need 0 < t_min < t_max"
            )));
        }
        if self.kind != ScheduleKind::Edm && t_max >= 1.0 {
            return Err(Error::Usage(format!(
                "t_max = {t_max} must stay below 1 for the {} schedule",
                self.kind.name()
            )));
        }
        self.t_min = t_min;
        self.t_max = t_max;
        Ok(self)
    }

    /// Build a schedule from flat `key=value` config text. Recognized keys:
    /// `kind` (required), `beta_min`, `beta_max`, `t_min`, `t_max`. Blank
    /// lines and `#` comments are ignored.
    pub fn from_config(text: &str) -> Result<Schedule> {
        let mut kind = None;
        let mut beta_min = None;
        let mut beta_max = None;
        let mut t_min = None;
        let mut t_max = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Usage(format!("config line {}: expected key=value, got `{line}`", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            let parse_num = |v: &str| -> Result<f64> {
                v.parse::<f64>()
                    .map_err(|_| Error::Usage(format!("config key `{key}`: `{v}` is not a number")))
            };
            match key {
                "kind" => kind = Some(ScheduleKind::parse(value)?),
                "beta_min" => beta_min = Some(parse_num(value)?),
                "beta_max" => beta_max = Some(parse_num(value)?),
                "t_min" => t_min = Some(parse_num(value)?),
                "t_max" => t_max = Some(parse_num(value)?),
                other => return Err(Error::Usage(format!("unknown schedule config key `{other}`"))),
            }
        }
        let kind = kind.ok_or_else(|| Error::Usage("schedule config is missing `kind`".into()))?;
        let mut schedule = Schedule::of_kind(kind);
        if matches!(kind, ScheduleKind::Vp | ScheduleKind::SubVp) {
            if let Some(b) = beta_min {
                schedule.beta_min = b;
            }
            if let Some(b) = beta_max {
                schedule.beta_max = b;
            }
            if schedule.beta_min <= 0.0 || schedule.beta_max <= schedule.beta_min {
                return Err(Error::Usage(format!(
                    "need 0 < beta_min < beta_max, got ({}, {})",
                    schedule.beta_min, schedule.beta_max
                )));
            }
        } else if beta_min.is_some() || beta_max.is_some() {
            return Err(Error::Usage(format!(
                "beta_min/beta_max do not apply to the {} schedule",
                kind.name()
            )));
        }
        if t_min.is_some() || t_max.is_some() {
            schedule = schedule.clipped(
                t_min.unwrap_or(schedule.t_min),
                t_max.unwrap_or(schedule.t_max),
            )?;
        }
        Ok(schedule)
    }

    /// A compact one-line identifier, e.g. `vp;beta_min=0.1;beta_max=20;t_min=0.0001;t_max=0.9999`.
    pub fn id(&self) -> String {
        match self.kind {
            ScheduleKind::Vp | ScheduleKind::SubVp => format!(
                "{};beta_min={};beta_max={};t_min={};t_max={}",
                self.kind.name(),
                self.beta_min,
                self.beta_max,
                self.t_min,
                self.t_max
            ),
            _ => format!("{};t_min={};t_max={}", self.kind.name(), self.t_min, self.t_max),
        }
    }

    pub fn kind(&self) -> ScheduleKind {
        self.kind
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// Validate `t` against the clip range, clamping away sub-`RANGE_SLACK`
    /// excursions produced by inverse maps.
    pub fn check_time(&self, t: f64) -> Result<f64> {
        if !t.is_finite() {
            return Err(Error::Domain(format!("time {t} is not finite")));
        }
        let slack = RANGE_SLACK * self.t_max.abs().max(1.0);
        if t < self.t_min - slack || t > self.t_max + slack {
            return Err(Error::Domain(format!(
                "time {t} outside schedule range [{}, {}]",
                self.t_min, self.t_max
            )));
        }
        Ok(t.clamp(self.t_min, self.t_max))
    }

    /// `I(t) = integral of beta` for the VP family.
    fn beta_integral(&self, t: f64) -> f64 {
        self.beta_min * t + 0.5 * (self.beta_max - self.beta_min) * t * t
    }

    /// The coefficient pair `(alpha_t, sigma_t)`; both finite and positive on
    /// the clipped range. Out-of-range `t` is a domain error.
    pub fn alpha_sigma(&self, t: f64) -> Result<(f64, f64)> {
        let t = self.check_time(t)?;
        Ok(match self.kind {
            ScheduleKind::FlowMatching => (1.0 - t, t),
            ScheduleKind::Edm => (1.0, t),
            ScheduleKind::Vp => {
                let integral = self.beta_integral(t);
                let alpha = (-0.5 * integral).exp();
                // sigma^2 = 1 - alpha^2 = -expm1(-I), stable for small t.
                let sigma = (-(-integral).exp_m1()).sqrt();
                (alpha, sigma)
            }
            ScheduleKind::SubVp => {
                let integral = self.beta_integral(t);
                let alpha = (-0.5 * integral).exp();
                let sigma = -(-integral).exp_m1();
                (alpha, sigma)
            }
        })
    }

    /// Log-SNR `lambda_t = ln(alpha_t / sigma_t)`, strictly decreasing in `t`.
    pub fn lambda(&self, t: f64) -> Result<f64> {
        let (alpha, sigma) = self.alpha_sigma(t)?;
        Ok((alpha / sigma).ln())
    }

    /// Attainable log-SNR interval `(lambda(t_max), lambda(t_min))`.
    pub fn lambda_range(&self) -> (f64, f64) {
        let lo = self.lambda(self.t_max).expect("t_max in range");
        let hi = self.lambda(self.t_min).expect("t_min in range");
        (lo, hi)
    }

    /// Inverse of [`Schedule::lambda`]. Closed form for flow-matching and
    /// EDM; 80-round bisection (well below 1e-12) for VP and Sub-VP.
    pub fn t_of_lambda(&self, lam: f64) -> Result<f64> {
        if !lam.is_finite() {
            return Err(Error::Domain(format!("log-SNR {lam} is not finite")));
        }
        let (lo, hi) = self.lambda_range();
        let slack = RANGE_SLACK * hi.abs().max(lo.abs()).max(1.0);
        if lam < lo - slack || lam > hi + slack {
            return Err(Error::Domain(format!(
                "log-SNR {lam} outside attainable range [{lo}, {hi}]"
            )));
        }
        let lam = lam.clamp(lo, hi);
        let t = match self.kind {
            // lambda = ln((1-t)/t)  =>  t = 1 / (1 + e^lambda).
            ScheduleKind::FlowMatching => 1.0 / (1.0 + lam.exp()),
            // lambda = -ln t  =>  t = e^(-lambda).
            ScheduleKind::Edm => (-lam).exp(),
            ScheduleKind::Vp | ScheduleKind::SubVp => {
                let mut a = self.t_min;
                let mut b = self.t_max;
                // lambda is decreasing: lambda(a) >= lam >= lambda(b).
                for _ in 0..80 {
                    let mid = 0.5 * (a + b);
                    if self.lambda(mid)? > lam {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                0.5 * (a + b)
            }
        };
        Ok(t.clamp(self.t_min, self.t_max))
    }

    /// Noise-to-signal ratio `sigma_t / alpha_t = exp(-lambda_t)`.
    pub fn nsr(&self, t: f64) -> Result<f64> {
        let (alpha, sigma) = self.alpha_sigma(t)?;
        Ok(sigma / alpha)
    }

    /// The forward interpolation `alpha_t * x0 + sigma_t * eps`.
    pub fn forward_diffuse(&self, x0: &[f64], eps: &[f64], t: f64) -> Result<Vec<f64>> {
        assert_eq!(x0.len(), eps.len(), "x0 and eps dimensions differ");
        let (alpha, sigma) = self.alpha_sigma(t)?;
        Ok(x0
            .iter()
            .zip(eps.iter())
            .map(|(&x, &e)| alpha * x + sigma * e)
            .collect())
    }
}

/// What a model output (or conversion thereof) represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PredictionKind {
    /// The noise `eps`.
    Epsilon,
    /// The clean sample `x0`.
    X0,
    /// The velocity `v = x0 - eps`.
    V,
}

impl PredictionKind {
    pub fn name(&self) -> &'static str {
        match self {
            PredictionKind::Epsilon => "epsilon",
            PredictionKind::X0 => "x0",
            PredictionKind::V => "v",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "epsilon" | "eps" => Ok(PredictionKind::Epsilon),
            "x0" => Ok(PredictionKind::X0),
            "v" => Ok(PredictionKind::V),
            other => Err(Error::Usage(format!("unknown prediction kind `{other}`"))),
        }
    }
}

/// A model prediction tagged with its kind.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub kind: PredictionKind,
    pub value: Vec<f64>,
}

impl Prediction {
    pub fn new(kind: PredictionKind, value: Vec<f64>) -> Prediction {
        Prediction { kind, value }
    }
}

/// Re-parameterize a prediction at a fixed state `(x_t, t)`:
///
/// ```text
/// x0 = (x_t - sigma * eps) / alpha        v = x0 - eps
/// eps = (x_t - alpha * x0) / sigma        eps = (x_t - alpha * v) / (alpha + sigma)
/// ```
///
/// Converting to the prediction's own kind is the identity. All routes go
/// through the epsilon form, so any two-hop conversion matches the direct one
/// to rounding error.
pub fn convert_prediction(
    pred: &Prediction,
    target: PredictionKind,
    x_t: &[f64],
    t: f64,
    schedule: &Schedule,
) -> Result<Prediction> {
    assert_eq!(pred.value.len(), x_t.len(), "prediction and state dimensions differ");
    if pred.kind == target {
        return Ok(pred.clone());
    }
    let (alpha, sigma) = schedule.alpha_sigma(t)?;
    let eps: Vec<f64> = match pred.kind {
        PredictionKind::Epsilon => pred.value.clone(),
        PredictionKind::X0 => x_t
            .iter()
            .zip(&pred.value)
            .map(|(&x, &x0)| (x - alpha * x0) / sigma)
            .collect(),
        PredictionKind::V => x_t
            .iter()
            .zip(&pred.value)
            .map(|(&x, &v)| (x - alpha * v) / (alpha + sigma))
            .collect(),
    };
    let value = match target {
        PredictionKind::Epsilon => eps,
        PredictionKind::X0 => x_t
            .iter()
            .zip(&eps)
            .map(|(&x, &e)| (x - sigma * e) / alpha)
            .collect(),
        PredictionKind::V => x_t
            .iter()
            .zip(&eps)
            .map(|(&x, &e)| (x - (alpha + sigma) * e) / alpha)
            .collect(),
    };
    Ok(Prediction::new(target, value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn flow_matching_alpha_sigma() {
        let s = Schedule::flow_matching();
        let (a, sg) = s.alpha_sigma(0.5).unwrap();
        assert_eq!((a, sg), (0.5, 0.5));
        assert_close(s.lambda(0.5).unwrap(), 0.0, 1e-15);
    }

    #[test]
    fn edm_alpha_sigma() {
        let s = Schedule::edm();
        assert_eq!(s.alpha_sigma(2.0).unwrap(), (1.0, 2.0));
        assert_close(s.lambda(1.0).unwrap(), 0.0, 1e-15);
    }

    #[test]
    fn vp_alpha_sigma_reference_values() {
        // alpha = exp(-t^2 (bmax - bmin)/4 - t bmin / 2), sigma = sqrt(1 - alpha^2),
        // evaluated at 40-digit precision for (bmin, bmax, t) = (0.1, 20, 0.5).
        let s = Schedule::vp();
        let (a, sg) = s.alpha_sigma(0.5).unwrap();
        assert_close(a, 0.28118288079675237585, 1e-15);
        assert_close(sg, 0.95965420206803624666, 1e-15);
        assert_close(s.lambda(0.5).unwrap(), -1.2275677344107872734, 1e-13);
    }

    #[test]
    fn sub_vp_sigma_is_one_minus_alpha_squared() {
        let s = Schedule::sub_vp();
        let (a, sg) = s.alpha_sigma(0.5).unwrap();
        assert_close(a, 0.28118288079675237585, 1e-15);
        assert_close(sg, 0.92093618754683934399, 1e-15);
        assert_close(sg, 1.0 - a * a, 1e-15);
    }

    #[test]
    fn boundary_limits() {
        for s in [Schedule::flow_matching(), Schedule::vp(), Schedule::sub_vp()] {
            let (a, sg) = s.alpha_sigma(s.t_min()).unwrap();
            assert!(a > 0.99, "{}: alpha(t_min) = {a}", s.kind().name());
            assert!(sg < 0.01, "{}: sigma(t_min) = {sg}", s.kind().name());
        }
        let edm = Schedule::edm();
        let (a, sg) = edm.alpha_sigma(edm.t_min()).unwrap();
        assert_eq!(a, 1.0);
        assert_eq!(sg, EDM_T_MIN);
    }

    #[test]
    fn out_of_range_time_is_domain_error() {
        let s = Schedule::vp();
        assert!(matches!(s.alpha_sigma(-0.5), Err(Error::Domain(_))));
        assert!(matches!(s.alpha_sigma(1.5), Err(Error::Domain(_))));
        assert!(matches!(s.alpha_sigma(f64::NAN), Err(Error::Domain(_))));
        // Within slack of a bound: clamped, not rejected.
        assert!(s.alpha_sigma(s.t_max() + 1e-13).is_ok());
    }

    #[test]
    fn lambda_out_of_range_is_domain_error() {
        let s = Schedule::flow_matching();
        let (lo, hi) = s.lambda_range();
        assert!(matches!(s.t_of_lambda(hi + 1.0), Err(Error::Domain(_))));
        assert!(matches!(s.t_of_lambda(lo - 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn t_of_lambda_roundtrip_all_schedules() {
        for kind in ScheduleKind::all() {
            let s = Schedule::of_kind(kind);
            for i in 0..=200 {
                let t = s.t_min() + (s.t_max() - s.t_min()) * i as f64 / 200.0;
                let back = s.t_of_lambda(s.lambda(t).unwrap()).unwrap();
                let scale = s.t_max().max(1.0);
                assert!(
                    (back - t).abs() <= 1e-10 * scale,
                    "{}: roundtrip {t} -> {back}",
                    kind.name()
                );
            }
        }
    }

    #[test]
    fn lambda_strictly_decreasing() {
        for kind in ScheduleKind::all() {
            let s = Schedule::of_kind(kind);
            let mut prev = f64::INFINITY;
            for i in 0..=500 {
                let t = s.t_min() + (s.t_max() - s.t_min()) * i as f64 / 500.0;
                let lam = s.lambda(t).unwrap();
                assert!(lam < prev, "{}: lambda not decreasing at t = {t}", kind.name());
                prev = lam;
            }
        }
    }

    #[test]
    fn forward_diffuse_examples() {
        let fm = Schedule::flow_matching();
        let x = fm.forward_diffuse(&[0.0, 1.0], &[1.0, 1.0], 0.5).unwrap();
        assert_eq!(x, vec![0.5, 1.0]);

        let vp = Schedule::vp();
        let x = vp.forward_diffuse(&[0.0, 1.0], &[1.0, 1.0], 0.5).unwrap();
        assert_close(x[0], 0.95965420206803624666, 1e-15);
        assert_close(x[1], 1.2408370828647886225, 1e-15);

        // eps = 0 near t_min recovers x0 for the [0,1]-ranged schedules.
        for s in [Schedule::flow_matching(), Schedule::vp(), Schedule::sub_vp()] {
            let x = s.forward_diffuse(&[2.0, -3.0], &[0.0, 0.0], s.t_min()).unwrap();
            assert_close(x[0], 2.0, 1e-2);
            assert_close(x[1], -3.0, 1e-2);
        }
    }

    #[test]
    fn convert_prediction_examples() {
        let fm = Schedule::flow_matching();
        // eps -> x0 at t = 0.5 with x_t = [0.5]: x0 = (0.5 - 0.5 * 1) / 0.5 = 0.
        let pred = Prediction::new(PredictionKind::Epsilon, vec![1.0]);
        let x0 = convert_prediction(&pred, PredictionKind::X0, &[0.5], 0.5, &fm).unwrap();
        assert_eq!(x0.value, vec![0.0]);

        // v = x0 - eps, independent of schedule once (x_t, t) matches.
        let x0_true = [0.0, 1.0];
        let eps_true = [1.0, 1.0];
        let x_t = fm.forward_diffuse(&x0_true, &eps_true, 0.25).unwrap();
        let v = convert_prediction(
            &Prediction::new(PredictionKind::Epsilon, eps_true.to_vec()),
            PredictionKind::V,
            &x_t,
            0.25,
            &fm,
        )
        .unwrap();
        assert_close(v.value[0], -1.0, 1e-12);
        assert_close(v.value[1], 0.0, 1e-12);
    }

    #[test]
    fn convert_prediction_vp_roundtrip() {
        let vp = Schedule::vp();
        let x0 = [0.0, 1.0];
        let eps = [1.0, 1.0];
        let x_t = vp.forward_diffuse(&x0, &eps, 0.5).unwrap();
        let back = convert_prediction(
            &Prediction::new(PredictionKind::Epsilon, eps.to_vec()),
            PredictionKind::X0,
            &x_t,
            0.5,
            &vp,
        )
        .unwrap();
        assert_close(back.value[0], 0.0, 1e-12);
        assert_close(back.value[1], 1.0, 1e-12);
    }

    #[test]
    fn convert_same_kind_is_identity() {
        let s = Schedule::vp();
        let pred = Prediction::new(PredictionKind::V, vec![0.25, -0.75]);
        let same = convert_prediction(&pred, PredictionKind::V, &[1.0, 2.0], 0.3, &s).unwrap();
        assert_eq!(same, pred);
    }

    #[test]
    fn config_text_roundtrip() {
        let s = Schedule::from_config("kind=vp\nbeta_min=0.2\nbeta_max=10\nt_min=1e-3\nt_max=0.99\n")
            .unwrap();
        assert_eq!(s.kind(), ScheduleKind::Vp);
        assert_eq!(s.t_min(), 1e-3);
        assert_eq!(s.t_max(), 0.99);
        assert!(Schedule::from_config("kind=edm\n").is_ok());
        assert!(Schedule::from_config("kind=edm\nbeta_min=1\n").is_err());
        assert!(Schedule::from_config("beta_min=1\n").is_err());
        assert!(Schedule::from_config("kind=vp\nnope=1\n").is_err());
    }
}
