//! Evolution times and exact phase reduction.
//!
//! The compiled schedules use durations such as `2^45 · π`. Stored as a plain
//! float time, such a value is off from the intended multiple of π by
//! `2^45 · (π - fl(π)) ≈ 4e-3`, which is larger than the residuals the scheme
//! is meant to control. Durations are therefore kept in units of π
//! ("half turns"), where every compiled duration is an exact dyadic rational,
//! and phases `coefficient · duration` are reduced modulo 2π before π is
//! multiplied back in.

use core::f64::consts::PI;

use crate::{Error, Result};

/// A duration of evolution, stored as a multiple of π.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct EvolutionTime {
    half_turns: f64,
}

impl EvolutionTime {
    pub const ZERO: Self = Self { half_turns: 0.0 };

    /// Duration `half_turns · π`.
    pub fn from_half_turns(half_turns: f64) -> Result<Self> {
        if !half_turns.is_finite() {
            return Err(Error::NonFinite("evolution time"));
        }
        Ok(Self { half_turns })
    }

    /// Duration given in ordinary time units.
    pub fn from_time(t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::NonFinite("evolution time"));
        }
        Ok(Self { half_turns: t / PI })
    }

    pub fn half_turns(self) -> f64 {
        self.half_turns
    }

    /// Duration in ordinary time units.
    pub fn time(self) -> f64 {
        self.half_turns * PI
    }

    pub fn is_negative(self) -> bool {
        self.half_turns < 0.0
    }

    pub fn is_zero(self) -> bool {
        self.half_turns == 0.0
    }
}

impl core::ops::Add for EvolutionTime {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            half_turns: self.half_turns + rhs.half_turns,
        }
    }
}

/// `coefficient · time` reduced into `[-π, π)`.
///
/// The product is formed exactly as an unevaluated sum `hi + lo` and `hi` is
/// reduced modulo 2 (in units of π) with the exact IEEE remainder, so the
/// only rounding left is the final multiplication by π.
pub fn reduced_angle(coefficient: f64, time: EvolutionTime) -> f64 {
    reduce_half_turns(coefficient, time.half_turns) * PI
}

/// `coefficient · half_turns` modulo 2, as a value in `[-1, 1)`.
pub fn reduce_half_turns(coefficient: f64, half_turns: f64) -> f64 {
    let hi = coefficient * half_turns;
    let lo = libm::fma(coefficient, half_turns, -hi);
    let r = (hi % 2.0) + (lo % 2.0);
    let r = r - 2.0 * libm::round(r / 2.0);
    if r >= 1.0 {
        r - 2.0
    } else {
        r
    }
}

/// Circular distance between two angles on a circle of circumference π.
pub fn distance_mod_pi(angle: f64, target: f64) -> f64 {
    let mut d = (angle - target) % PI;
    if d < 0.0 {
        d += PI;
    }
    d.min(PI - d)
}
