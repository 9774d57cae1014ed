use alloc::format;
use alloc::vec::Vec;

use crate::hamiltonians::{HamiltonianSpec, Which};
use crate::{Error, Result};

/// Largest magnitude of a binary exponent used for coefficients and
/// durations; keeps every value a normal `f64`.
const MAX_EXPONENT: u32 = 1000;

/// Qubit count and coefficient base of the constructive scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompilerConfig {
    n: usize,
    base: u64,
    log2_base: u32,
}

impl CompilerConfig {
    /// `base` must be `2^k` with `k ≥ 4`: then `B·π/8`, `B·3π/4` and
    /// `B·π/2` are all whole multiples of π.
    pub fn new(n: usize, base: u64) -> Result<Self> {
        if !base.is_power_of_two() || base < 16 {
            return Err(Error::InvalidBase(base));
        }
        if n == 0 {
            return Err(Error::InvalidConfig("need at least one qubit".into()));
        }
        let log2_base = base.trailing_zeros();
        let span = (2 * n as u64 - 1) * u64::from(log2_base);
        if span > u64::from(MAX_EXPONENT) {
            return Err(Error::InvalidConfig(format!(
                "n = {n} with base {base} needs durations of 2^{span}, beyond f64 range"
            )));
        }
        Ok(Self { n, base, log2_base })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn log2_base(&self) -> u32 {
        self.log2_base
    }

    /// `B^power` for any integer power, exact.
    pub fn base_pow(&self, power: i64) -> f64 {
        pow2(power * i64::from(self.log2_base))
    }

    pub(crate) fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit == 0 || qubit > self.n {
            return Err(Error::QubitOutOfRange { qubit, n: self.n });
        }
        Ok(())
    }

    /// Terms of `which`, each with its strength exponent `e` (coefficient
    /// `B^{-e}`), strongest first.
    pub fn terms(&self, which: Which) -> Vec<Term> {
        match which {
            Which::H1 => (1..=self.n).map(Term::A).collect(),
            Which::H2 => (1..=self.n)
                .flat_map(|m| {
                    let b = Term::B(m);
                    let c = (m < self.n).then_some(Term::C(m));
                    core::iter::once(b).chain(c)
                })
                .collect(),
        }
    }
}

/// A single term of `H1` or `H2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    /// `a_m (X_m + Z_m)/√2`
    A(usize),
    /// `b_m Z_m`
    B(usize),
    /// `c_m Z_m Z_{m+1}`
    C(usize),
}

impl Term {
    /// Strength exponent: the standard coefficient is `B^{-exponent}`.
    pub fn exponent(self) -> i64 {
        match self {
            Term::A(m) => m as i64 - 1,
            Term::B(m) => 2 * m as i64 - 2,
            Term::C(m) => 2 * m as i64 - 1,
        }
    }

    /// Coefficient of this term in `spec`.
    pub fn coefficient(self, spec: &HamiltonianSpec) -> f64 {
        match self {
            Term::A(m) => spec.a()[m - 1],
            Term::B(m) => spec.b()[m - 1],
            Term::C(m) => spec.c()[m - 1],
        }
    }
}

/// `2^e`, exact for `|e| ≤ 1022`.
pub(crate) fn pow2(e: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

/// `a_m = B^{-(m-1)}`, `b_m = B^{-(2m-2)}`, `c_m = B^{-(2m-1)}`.
pub fn standard_coefficients(config: &CompilerConfig) -> HamiltonianSpec {
    let coeffs = |which| -> Vec<f64> {
        config
            .terms(which)
            .into_iter()
            .map(|t: Term| config.base_pow(-t.exponent()))
            .collect()
    };
    let a = coeffs(Which::H1);
    let h2 = config.terms(Which::H2);
    let b = h2
        .iter()
        .filter(|t| matches!(t, Term::B(_)))
        .map(|t| config.base_pow(-t.exponent()))
        .collect();
    let c = h2
        .iter()
        .filter(|t| matches!(t, Term::C(_)))
        .map(|t| config.base_pow(-t.exponent()))
        .collect();
    HamiltonianSpec::new(config.n, a, b, c)
        .expect("standard coefficients are positive and well-sized")
}
