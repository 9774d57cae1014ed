//! The two switchable Hamiltonians and their exact evolutions.
//!
//! All terms of `H1` commute with one another, as do all terms of `H2`, so
//! `e^{-iH t}` factorizes into one small unitary per term and is never
//! formed densely during simulation.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;

use num_traits::One;

use crate::phase::{reduced_angle, EvolutionTime};
use crate::qcore::gates::{self, hadamard_axis_rotation, z_rotation, zz_phases};
use crate::qcore::{CMatrix, Mat2, StateVector, C64};
use crate::{Error, Result, DEFAULT_MAX_DENSE_N};

/// Which of the two Hamiltonians is switched on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    /// `Σ a_m (X_m + Z_m)/√2`.
    H1,
    /// `Σ b_m Z_m + Σ c_m Z_m Z_{m+1}`.
    H2,
}

/// Coefficients of `H1` (`a`, one per qubit) and `H2` (`b` per qubit, `c`
/// per nearest-neighbour pair).
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    n: usize,
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
}

impl HamiltonianSpec {
    pub fn new(n: usize, a: Vec<f64>, b: Vec<f64>, c: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("need at least one qubit".into()));
        }
        for (name, values, len) in [("a", &a, n), ("b", &b, n), ("c", &c, n - 1)] {
            if values.len() != len {
                return Err(Error::InvalidSpec(format!(
                    "`{name}` has {} entries, expected {len}",
                    values.len()
                )));
            }
            if let Some(i) = values.iter().position(|&x| !(x.is_finite() && x > 0.0)) {
                return Err(Error::InvalidSpec(format!(
                    "`{name}[{i}]` = {} is not a positive finite number",
                    values[i]
                )));
            }
        }
        Ok(Self { n, a, b, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }
}

/// `e^{-iHt}` as a product of commuting factors: one 2×2 unitary per qubit
/// and one diagonal two-qubit factor per neighbouring pair `(m, m+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizedEvolution {
    pub single_qubit_factors: Vec<Mat2>,
    /// Diagonals ordered `00, 01, 10, 11`; all ones for `H1`.
    pub pair_factors: Vec<[C64; 4]>,
    diagonal: bool,
}

impl FactorizedEvolution {
    pub fn n(&self) -> usize {
        self.single_qubit_factors.len()
    }

    /// Whether every factor is diagonal in the computational basis.
    pub fn is_diagonal(&self) -> bool {
        self.diagonal
    }

    /// Applies every factor to `state`.
    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        if state.n() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: state.n(),
            });
        }
        for (i, f) in self.single_qubit_factors.iter().enumerate() {
            if self.diagonal {
                state.apply_single_qubit_diagonal_unchecked(i + 1, &[f[0][0], f[1][1]]);
            } else {
                state.apply_single_qubit_unchecked(i + 1, f);
            }
        }
        if self.diagonal {
            for (i, p) in self.pair_factors.iter().enumerate() {
                state.apply_two_qubit_diagonal_unchecked(i + 1, i + 2, p);
            }
        }
        Ok(())
    }

    /// The full `2^n × 2^n` operator, assembled by Kronecker products.
    pub fn to_dense(&self) -> Result<CMatrix> {
        let n = self.n();
        if n > DEFAULT_MAX_DENSE_N {
            return Err(Error::TooLarge {
                n,
                max: DEFAULT_MAX_DENSE_N,
            });
        }
        let mut out = CMatrix::identity(1);
        for f in &self.single_qubit_factors {
            out = out.kron(&CMatrix::from_mat2(f));
        }
        for (i, p) in self.pair_factors.iter().enumerate() {
            let pair = CMatrix::from_diagonal(p);
            let left = CMatrix::identity(1 << i);
            let right = CMatrix::identity(1 << (n - i - 2));
            out = left.kron(&pair).kron(&right).matmul(&out);
        }
        Ok(out)
    }
}

/// `e^{-i H1 t}`: qubit `m` gets `cos(a_m t) I - i sin(a_m t) (X+Z)/√2`.
pub fn evolve_h1(spec: &HamiltonianSpec, t: EvolutionTime) -> FactorizedEvolution {
    FactorizedEvolution {
        single_qubit_factors: spec
            .a
            .iter()
            .map(|&a| hadamard_axis_rotation(reduced_angle(a, t)))
            .collect(),
        pair_factors: (1..spec.n).map(|_| [C64::one(); 4]).collect(),
        diagonal: false,
    }
}

/// `e^{-i H2 t}`: qubit `m` gets `diag(e^{-i b_m t}, e^{i b_m t})` and pair
/// `(m, m+1)` gets `diag(e^{-i c_m t}, e^{i c_m t}, e^{i c_m t}, e^{-i c_m t})`.
pub fn evolve_h2(spec: &HamiltonianSpec, t: EvolutionTime) -> FactorizedEvolution {
    FactorizedEvolution {
        single_qubit_factors: spec
            .b
            .iter()
            .map(|&b| z_rotation(reduced_angle(b, t)))
            .collect(),
        pair_factors: spec
            .c
            .iter()
            .map(|&c| zz_phases(reduced_angle(c, t)))
            .collect(),
        diagonal: true,
    }
}

pub fn evolve(spec: &HamiltonianSpec, which: Which, t: EvolutionTime) -> FactorizedEvolution {
    match which {
        Which::H1 => evolve_h1(spec, t),
        Which::H2 => evolve_h2(spec, t),
    }
}

/// `2^n × 2^n` matrix of `op` acting on `qubit` of `n`.
fn embed(n: usize, qubit: usize, op: &CMatrix) -> CMatrix {
    CMatrix::identity(1 << (qubit - 1))
        .kron(op)
        .kron(&CMatrix::identity(1 << (n - qubit)))
}

fn check_dense(spec: &HamiltonianSpec) -> Result<()> {
    if spec.n > DEFAULT_MAX_DENSE_N {
        return Err(Error::TooLarge {
            n: spec.n,
            max: DEFAULT_MAX_DENSE_N,
        });
    }
    Ok(())
}

/// Dense `H1 = Σ a_m (X_m + Z_m)/√2` as a sum of Kronecker products.
pub fn dense_h1(spec: &HamiltonianSpec) -> Result<CMatrix> {
    check_dense(spec)?;
    let n = spec.n;
    let x_plus_z = CMatrix::from_mat2(&gates::PAULI_X)
        .add(&CMatrix::from_mat2(&gates::PAULI_Z))
        .scale(C64::new(FRAC_1_SQRT_2, 0.0));
    let mut h = CMatrix::zeros(1 << n);
    for (m, &a) in spec.a.iter().enumerate() {
        h = h.add(&embed(n, m + 1, &x_plus_z).scale(C64::new(a, 0.0)));
    }
    Ok(h)
}

/// Dense `H2 = Σ b_m Z_m + Σ c_m Z_m Z_{m+1}` as a sum of Kronecker products.
pub fn dense_h2(spec: &HamiltonianSpec) -> Result<CMatrix> {
    check_dense(spec)?;
    let n = spec.n;
    let z = CMatrix::from_mat2(&gates::PAULI_Z);
    let mut h = CMatrix::zeros(1 << n);
    for (m, &b) in spec.b.iter().enumerate() {
        h = h.add(&embed(n, m + 1, &z).scale(C64::new(b, 0.0)));
    }
    let zz = z.kron(&z);
    for (m, &c) in spec.c.iter().enumerate() {
        let term = CMatrix::identity(1 << m)
            .kron(&zz)
            .kron(&CMatrix::identity(1 << (n - m - 2)));
        h = h.add(&term.scale(C64::new(c, 0.0)));
    }
    Ok(h)
}
