//! Bang-bang schedules and their exact execution.
//!
//! Segment `k` of a [`Schedule`] runs after segment `k - 1`; the operator of
//! the whole schedule is `U_K ··· U_2 U_1`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::hamiltonians::{evolve, HamiltonianSpec, Which};
use crate::phase::EvolutionTime;
use crate::qcore::{CMatrix, DenseUnitary, StateVector, UNITARY_TOL};
use crate::{Error, Result, DEFAULT_MAX_DENSE_N};

/// One constant-control interval: `hamiltonian` switched on for `duration`.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub hamiltonian: Which,
    pub duration: EvolutionTime,
    pub label: Option<String>,
}

impl Segment {
    pub fn new(hamiltonian: Which, duration: EvolutionTime) -> Self {
        Self {
            hamiltonian,
            duration,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// Ordered switching segments. At most one Hamiltonian is on at a time.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Schedule {
    pub segments: Vec<Segment>,
}

impl Schedule {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_segments(segments: Vec<Segment>) -> Self {
        Self { segments }
    }

    pub fn single(hamiltonian: Which, duration: EvolutionTime) -> Self {
        Self {
            segments: alloc::vec![Segment::new(hamiltonian, duration)],
        }
    }

    pub fn push(&mut self, segment: Segment) {
        self.segments.push(segment);
    }

    /// Appends `other`, which runs after `self`.
    pub fn extend(&mut self, other: Schedule) {
        self.segments.extend(other.segments);
    }

    pub fn then(mut self, other: Schedule) -> Self {
        self.extend(other);
        self
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Sum of all durations.
    pub fn total_duration(&self) -> EvolutionTime {
        self.segments
            .iter()
            .fold(EvolutionTime::ZERO, |acc, s| acc + s.duration)
    }

    /// Labels every segment that has none yet.
    pub fn label_all(&mut self, label: &str) {
        for s in &mut self.segments {
            if s.label.is_none() {
                s.label = Some(label.into());
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (index, s) in self.segments.iter().enumerate() {
            if s.duration.is_negative() {
                return Err(Error::NegativeDuration {
                    index,
                    value: s.duration.time(),
                });
            }
        }
        Ok(())
    }

    /// Drops zero-length segments and merges neighbours that switch on the
    /// same Hamiltonian. Labels of merged segments are joined with `"; "`.
    pub fn normalize(&self) -> Result<Schedule> {
        self.validate()?;
        let mut out: Vec<Segment> = Vec::with_capacity(self.segments.len());
        for s in self.segments.iter().filter(|s| !s.duration.is_zero()) {
            match out.last_mut() {
                Some(last) if last.hamiltonian == s.hamiltonian => {
                    last.duration = last.duration + s.duration;
                    last.label = merge_labels(last.label.take(), s.label.as_deref());
                }
                _ => out.push(s.clone()),
            }
        }
        Ok(Schedule { segments: out })
    }

    /// Whether the schedule has no zero-length segments and strictly
    /// alternates between the two Hamiltonians.
    pub fn is_normalized(&self) -> bool {
        self.segments.iter().all(|s| !s.duration.is_zero())
            && self
                .segments
                .windows(2)
                .all(|w| w[0].hamiltonian != w[1].hamiltonian)
    }
}

fn merge_labels(a: Option<String>, b: Option<&str>) -> Option<String> {
    match (a, b) {
        (None, None) => None,
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b.into()),
        (Some(mut a), Some(b)) => {
            if !a.split("; ").any(|part| part == b) {
                a.push_str("; ");
                a.push_str(b);
            }
            Some(a)
        }
    }
}

/// Runs `schedule` on `state` in place.
pub fn run_schedule(
    spec: &HamiltonianSpec,
    schedule: &Schedule,
    state: &mut StateVector,
) -> Result<()> {
    if state.n() != spec.n() {
        return Err(Error::DimensionMismatch {
            expected: spec.n(),
            found: state.n(),
        });
    }
    schedule.validate()?;
    for s in &schedule.segments {
        if s.duration.is_zero() {
            continue;
        }
        evolve(spec, s.hamiltonian, s.duration).apply(state)?;
    }
    Ok(())
}

/// Dense operator of `schedule`, built column by column from basis states.
pub fn schedule_unitary(spec: &HamiltonianSpec, schedule: &Schedule) -> Result<DenseUnitary> {
    schedule_unitary_capped(spec, schedule, DEFAULT_MAX_DENSE_N)
}

/// [`schedule_unitary`] with a caller-chosen cap on `n`.
pub fn schedule_unitary_capped(
    spec: &HamiltonianSpec,
    schedule: &Schedule,
    max_n: usize,
) -> Result<DenseUnitary> {
    let n = spec.n();
    if n > max_n {
        return Err(Error::TooLarge { n, max: max_n });
    }
    schedule.validate()?;
    let evolutions: Vec<_> = schedule
        .segments
        .iter()
        .filter(|s| !s.duration.is_zero())
        .map(|s| evolve(spec, s.hamiltonian, s.duration))
        .collect();
    let dim = 1usize << n;
    let mut matrix = CMatrix::zeros(dim);
    for col in 0..dim {
        let mut state = StateVector::basis_state(n, col);
        for evo in &evolutions {
            evo.apply(&mut state)?;
        }
        matrix.set_column(col, state.amplitudes());
    }
    let deviation = matrix.unitarity_deviation();
    if !(deviation <= UNITARY_TOL * 10.0) {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(DenseUnitary::new_unchecked(n, matrix))
}
