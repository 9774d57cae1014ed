use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::gates::mat2_unitarity_deviation;
use super::{Mat2, C64, PHASE_TOL, UNITARY_TOL};
use crate::{Error, Result};

/// Pure state of `n` qubits: `2^n` amplitudes, qubit 1 being the most
/// significant bit of the basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<C64>,
}

impl StateVector {
    /// `|0…0⟩`.
    pub fn zero_state(n: usize) -> Self {
        Self::basis_state(n, 0)
    }

    /// Computational basis state `|index⟩`.
    pub fn basis_state(n: usize, index: usize) -> Self {
        let mut amplitudes = vec![C64::zero(); 1 << n];
        amplitudes[index] = C64::one();
        Self { n, amplitudes }
    }

    /// Wraps amplitudes after normalizing them; rejects a wrong length or a
    /// zero vector.
    pub fn from_amplitudes(n: usize, mut amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: amplitudes.len(),
            });
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>();
        let norm = libm::sqrt(norm);
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::InvalidArgument(
                "state has zero or non-finite norm".into(),
            ));
        }
        for a in &mut amplitudes {
            *a /= norm;
        }
        Ok(Self { n, amplitudes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        self.check_same_n(other.n)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|⟨self|other⟩|`, equal to 1 exactly when the states agree up to a
    /// global phase.
    pub fn overlap(&self, other: &Self) -> Result<f64> {
        Ok(self.inner(other)?.norm())
    }

    fn check_same_n(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: n,
            });
        }
        Ok(())
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit == 0 || qubit > self.n {
            return Err(Error::QubitOutOfRange { qubit, n: self.n });
        }
        Ok(())
    }

    fn bit(&self, qubit: usize) -> usize {
        1 << (self.n - qubit)
    }

    /// Applies a 2×2 unitary to `qubit` (1-based).
    pub fn apply_single_qubit(&mut self, qubit: usize, gate: &Mat2) -> Result<()> {
        self.check_qubit(qubit)?;
        let deviation = mat2_unitarity_deviation(gate);
        if !(deviation <= UNITARY_TOL) {
            return Err(Error::NotUnitary { deviation });
        }
        self.apply_single_qubit_unchecked(qubit, gate);
        Ok(())
    }

    pub(crate) fn apply_single_qubit_unchecked(&mut self, qubit: usize, gate: &Mat2) {
        let stride = self.bit(qubit);
        let [[g00, g01], [g10, g11]] = *gate;
        for block in self.amplitudes.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a0, a1) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x0, x1) = (*a0, *a1);
                *a0 = g00 * x0 + g01 * x1;
                *a1 = g10 * x0 + g11 * x1;
            }
        }
    }

    /// Multiplies each amplitude by the phase selected by the bits of
    /// `(q1, q2)`; `phases` is ordered `00, 01, 10, 11`.
    pub fn apply_two_qubit_diagonal(
        &mut self,
        q1: usize,
        q2: usize,
        phases: &[C64; 4],
    ) -> Result<()> {
        self.check_qubit(q1)?;
        self.check_qubit(q2)?;
        if q1 == q2 {
            return Err(Error::CoincidentQubits(q1));
        }
        for (index, p) in phases.iter().enumerate() {
            let modulus = p.norm();
            if !((modulus - 1.0).abs() <= PHASE_TOL) {
                return Err(Error::NotUnitPhase { index, modulus });
            }
        }
        self.apply_two_qubit_diagonal_unchecked(q1, q2, phases);
        Ok(())
    }

    pub(crate) fn apply_two_qubit_diagonal_unchecked(
        &mut self,
        q1: usize,
        q2: usize,
        phases: &[C64; 4],
    ) {
        let (m1, m2) = (self.bit(q1), self.bit(q2));
        for (i, a) in self.amplitudes.iter_mut().enumerate() {
            let sel = (usize::from(i & m1 != 0) << 1) | usize::from(i & m2 != 0);
            *a *= phases[sel];
        }
    }

    /// Multiplies each amplitude by `phases[0]` or `phases[1]` depending on
    /// the bit of `qubit`.
    pub(crate) fn apply_single_qubit_diagonal_unchecked(
        &mut self,
        qubit: usize,
        phases: &[C64; 2],
    ) {
        let m = self.bit(qubit);
        for (i, a) in self.amplitudes.iter_mut().enumerate() {
            *a *= phases[usize::from(i & m != 0)];
        }
    }

    /// Ideal CNOT: flips `target` on basis states where `control` is 1.
    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<()> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::CoincidentQubits(control));
        }
        let (mc, mt) = (self.bit(control), self.bit(target));
        for i in 0..self.amplitudes.len() {
            if i & mc != 0 && i & mt == 0 {
                self.amplitudes.swap(i, i | mt);
            }
        }
        Ok(())
    }
}
