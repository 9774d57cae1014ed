//! Coincidence search for arbitrary coefficients.
//!
//! For coefficients `c_j` and target angles `φ_j`, a coincidence is a time
//! `t` where every `c_j·t` is close to `φ_j` modulo π. Distances are taken on
//! the circle of circumference π because `e^{-iπP} = -I` for the Pauli-like
//! terms used here, so a full π is the identity up to global phase.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::phase::distance_mod_pi;
use crate::{Error, Result};

const REFINE_ITERATIONS: usize = 100;
const MAX_CONVERGENT_DEPTH: usize = 40;

/// Worst and per-term circular distances between achieved and target phases.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseError {
    pub max: f64,
    pub residuals: Vec<f64>,
}

/// `residual_j = dist_π(c_j·t, φ_j)`; the error is the largest residual.
pub fn phase_error(coefficients: &[f64], targets: &[f64], t: f64) -> PhaseError {
    let residuals: Vec<f64> = coefficients
        .iter()
        .zip(targets)
        .map(|(&c, &phi)| distance_mod_pi(c * t, phi))
        .collect();
    let max = residuals.iter().copied().fold(0.0, f64::max);
    PhaseError { max, residuals }
}

fn max_error(coefficients: &[f64], targets: &[f64], t: f64) -> f64 {
    coefficients
        .iter()
        .zip(targets)
        .map(|(&c, &phi)| distance_mod_pi(c * t, phi))
        .fold(0.0, f64::max)
}

/// A grid search over `t ∈ [0, t_max]` with step `resolution`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoincidenceProblem {
    pub coefficients: Vec<f64>,
    /// Target phase of each term, in `[0, π)`.
    pub targets: Vec<f64>,
    /// Largest acceptable residual, radians.
    pub tolerance: f64,
    pub t_max: f64,
    pub resolution: f64,
}

impl CoincidenceProblem {
    pub fn new(
        coefficients: Vec<f64>,
        targets: Vec<f64>,
        tolerance: f64,
        t_max: f64,
        resolution: f64,
    ) -> Result<Self> {
        let p = Self {
            coefficients,
            targets,
            tolerance,
            t_max,
            resolution,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(Error::InvalidProblem(msg));
        if self.coefficients.is_empty() {
            return bad("empty coefficient list".into());
        }
        if self.coefficients.len() != self.targets.len() {
            return bad(format!(
                "{} coefficients but {} targets",
                self.coefficients.len(),
                self.targets.len()
            ));
        }
        if let Some(c) = self
            .coefficients
            .iter()
            .find(|c| !(c.is_finite() && **c > 0.0))
        {
            return bad(format!("coefficient {c} is not positive and finite"));
        }
        if let Some(t) = self.targets.iter().find(|t| !(**t >= 0.0 && **t < PI)) {
            return bad(format!("target {t} is outside [0, π)"));
        }
        if !(self.tolerance > 0.0 && self.tolerance < FRAC_PI_2) {
            return bad(format!("tolerance {} is outside (0, π/2)", self.tolerance));
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return bad(format!("t_max {} is not positive and finite", self.t_max));
        }
        let limit = PI / (2.0 * self.max_coefficient());
        if !(self.resolution > 0.0 && self.resolution < limit) {
            return bad(format!(
                "resolution {} must be positive and below π/(2·max coefficient) = {limit}",
                self.resolution
            ));
        }
        if self.t_max / self.resolution > 1e12 {
            return bad("grid has more than 1e12 points".into());
        }
        Ok(())
    }

    fn max_coefficient(&self) -> f64 {
        self.coefficients.iter().copied().fold(0.0, f64::max)
    }
}

/// Best time found and how good it is.
#[derive(Debug, Clone, PartialEq)]
pub struct CoincidenceResult {
    pub time: f64,
    pub error: f64,
    pub residuals: Vec<f64>,
    /// `error <= tolerance`.
    pub converged: bool,
}

/// Scans `t = 0, r, 2r, …, ≤ t_max` and refines promising grid points by
/// ternary search on the max-residual objective within `±r`.
///
/// The objective is Lipschitz with constant `L = max c_j`, so refinement
/// around a grid point cannot gain more than `L·r`; only local grid minima
/// within that margin of the best grid value are refined. The refinement
/// window of a point does not depend on `t_max` (it may reach up to `r`
/// past it), which keeps the best error nonincreasing as `t_max` grows.
/// Ties go to the earliest time.
pub fn scan_coincidence(problem: &CoincidenceProblem) -> Result<CoincidenceResult> {
    problem.validate()?;
    let (coeffs, targets) = (&problem.coefficients[..], &problem.targets[..]);
    let r = problem.resolution;
    let slack = problem.max_coefficient() * r;
    let steps = libm::floor(problem.t_max / r) as u64;
    let f = |k: u64| max_error(coeffs, targets, k as f64 * r);

    let mut best = (0u64, f(0));
    let mut candidates: Vec<(u64, f64)> = Vec::new();
    let mut prev = f64::INFINITY;
    let mut cur = best.1;
    for k in 0..=steps {
        let next = f(k + 1);
        if cur < best.1 {
            best = (k, cur);
        }
        if cur <= prev && cur < next && cur <= best.1 + slack {
            candidates.push((k, cur));
            if candidates.len() > 4096 {
                candidates.retain(|&(_, v)| v <= best.1 + slack);
            }
        }
        prev = cur;
        cur = next;
    }
    if !candidates.iter().any(|&(k, _)| k == best.0) {
        candidates.push(best);
    }

    let mut found = (best.0 as f64 * r, best.1);
    for &(k, v) in candidates.iter().filter(|&&(_, v)| v <= best.1 + slack) {
        let t0 = k as f64 * r;
        let (t, e) = refine(coeffs, targets, t0, v, r);
        if e < found.1 || (e == found.1 && t < found.0) {
            found = (t, e);
        }
    }

    let pe = phase_error(coeffs, targets, found.0);
    Ok(CoincidenceResult {
        time: found.0,
        error: pe.max,
        residuals: pe.residuals,
        converged: pe.max <= problem.tolerance,
    })
}

/// Ternary search of the max-residual objective on `[t0 - r, t0 + r] ∩ [0, ∞)`,
/// returning the best point evaluated (never worse than `t0`).
fn refine(coeffs: &[f64], targets: &[f64], t0: f64, v0: f64, r: f64) -> (f64, f64) {
    let mut best = (t0, v0);
    let (mut lo, mut hi) = ((t0 - r).max(0.0), t0 + r);
    for _ in 0..REFINE_ITERATIONS {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        let (f1, f2) = (
            max_error(coeffs, targets, m1),
            max_error(coeffs, targets, m2),
        );
        for (t, v) in [(m1, f1), (m2, f2)] {
            if v < best.1 || (v == best.1 && t < best.0) {
                best = (t, v);
            }
        }
        if f1 <= f2 {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    best
}

/// A convergent `p/q` of a coefficient ratio and the time it suggests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergentCandidate {
    pub p: u64,
    pub q: u64,
    /// `q·π / ratio_den`: the denominator coefficient's term lands on a
    /// multiple of π exactly.
    pub time: f64,
    /// Phase error of the pair `(ratio_den, ratio_num)` at `time` against
    /// targets `(0, 0)`.
    pub error: f64,
}

/// Candidate coincidence times for two coefficients from the continued
/// fraction convergents `p/q` of `ratio_num / ratio_den`.
///
/// At `t = qπ/ratio_den` the first term has phase `qπ ≡ 0` and the second
/// has `(ratio_num/ratio_den)·qπ ≈ pπ ≡ 0`, off by `π·|q·x - p|`, which the
/// convergents make successively smaller. The expansion stops early when the
/// ratio is (numerically) rational or the integers overflow.
pub fn convergent_times(
    ratio_num: f64,
    ratio_den: f64,
    depth: usize,
) -> Result<Vec<ConvergentCandidate>> {
    if !(ratio_num > 0.0 && ratio_num.is_finite() && ratio_den > 0.0 && ratio_den.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "ratio terms must be positive and finite, got {ratio_num}/{ratio_den}"
        )));
    }
    if depth > MAX_CONVERGENT_DEPTH {
        return Err(Error::InvalidArgument(format!(
            "depth {depth} exceeds {MAX_CONVERGENT_DEPTH}"
        )));
    }
    let coeffs = [ratio_den, ratio_num];
    let x = ratio_num / ratio_den;

    let mut out = Vec::with_capacity(depth);
    // p_{-1}/q_{-1} = 1/0, p_{-2}/q_{-2} = 0/1.
    let (mut p_prev, mut q_prev, mut p, mut q) = (0u64, 1u64, 1u64, 0u64);
    let mut rest = x;
    for _ in 0..depth {
        let a = libm::floor(rest);
        if a > u64::MAX as f64 {
            break;
        }
        let a_int = a as u64;
        let next = a_int
            .checked_mul(p)
            .and_then(|v| v.checked_add(p_prev))
            .zip(a_int.checked_mul(q).and_then(|v| v.checked_add(q_prev)));
        let Some((p_next, q_next)) = next else { break };
        (p_prev, q_prev, p, q) = (p, q, p_next, q_next);
        if q > 0 {
            let time = q as f64 * PI / ratio_den;
            let error = phase_error(&coeffs, &[0.0, 0.0], time).max;
            out.push(ConvergentCandidate { p, q, time, error });
        }
        let frac = rest - a;
        if frac <= 1e-12 * rest.max(1.0) {
            break;
        }
        rest = 1.0 / frac;
    }
    Ok(out)
}
