//! Fidelity/bound table over gate type × position × base.

use std::io::{Read, Write};

use hamweave_core::compiler::Primitive;
use hamweave_core::compiler::{
    circuit_unitary, compile_circuit, error_bound, primitive_bound, standard_coefficients,
};
use hamweave_core::qcore::{fidelity_phase_invariant, phase_invariant_distance};
use hamweave_core::simulator::schedule_unitary_capped;
use hamweave_core::{Circuit, CompilerConfig, Gate};
use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Slack allowed when comparing measured against analytic quantities.
pub const CHECK_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub gate: String,
    /// `"m"` for one-qubit gates, `"m-m'"` for pairs (control first).
    pub qubits: String,
    pub base: u64,
    pub n: usize,
    /// Total switching time of the compiled schedule.
    pub duration: f64,
    pub fidelity: f64,
    pub bound: f64,
    pub distance: f64,
}

enum Item {
    Primitive(Primitive),
    Cnot(usize, usize),
}

fn items(n: usize) -> Vec<(String, String, Item)> {
    let mut out = Vec::new();
    for m in 1..=n {
        out.push((
            "H".into(),
            m.to_string(),
            Item::Primitive(Primitive::Hadamard(m)),
        ));
    }
    for m in 1..=n {
        out.push(("T".into(), m.to_string(), Item::Primitive(Primitive::T(m))));
    }
    for m in 1..n {
        out.push((
            "ZZ".into(),
            format!("{m}-{}", m + 1),
            Item::Primitive(Primitive::Zz(m)),
        ));
    }
    for m in 1..n {
        out.push((
            "CNOT".into(),
            format!("{m}-{}", m + 1),
            Item::Cnot(m, m + 1),
        ));
        out.push((
            "CNOT".into(),
            format!("{}-{m}", m + 1),
            Item::Cnot(m + 1, m),
        ));
    }
    out
}

/// One row per gate and position for each base, grouped by base.
pub fn build_report(n: usize, bases: &[u64], max_dense_n: usize) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for &base in bases {
        let cfg = CompilerConfig::new(n, base)?;
        let spec = standard_coefficients(&cfg);
        for (gate, qubits, item) in items(n) {
            let (schedule, ideal, bound) = match item {
                Item::Primitive(p) => (
                    p.schedule(&cfg)?,
                    p.ideal_unitary(n)?,
                    primitive_bound(p, &cfg)?,
                ),
                Item::Cnot(control, target) => {
                    let circ = Circuit::new(n, vec![Gate::Cnot { control, target }])?;
                    (
                        compile_circuit(&circ, &cfg)?,
                        circuit_unitary(&circ, max_dense_n)?,
                        error_bound(&circ, &cfg)?.total,
                    )
                }
            };
            let u = schedule_unitary_capped(&spec, &schedule, max_dense_n)?;
            rows.push(ReportRow {
                gate,
                qubits,
                base,
                n,
                duration: schedule.total_duration().time(),
                fidelity: fidelity_phase_invariant(&u, &ideal)?,
                bound,
                distance: phase_invariant_distance(&u, &ideal)?,
            });
        }
    }
    Ok(rows)
}

/// Soundness (`distance ≤ bound`) per row and, per gate and position,
/// fidelity nondecreasing as the base grows. Returns one message per
/// violation.
pub fn check_report(rows: &[ReportRow]) -> Vec<String> {
    let mut problems = Vec::new();
    for r in rows {
        if !(r.distance <= r.bound + CHECK_TOL) {
            problems.push(format!(
                "{}({}) B={}: distance {} exceeds bound {}",
                r.gate, r.qubits, r.base, r.distance, r.bound
            ));
        }
        if !(0.0..=1.0).contains(&r.fidelity) {
            problems.push(format!(
                "{}({}) B={}: fidelity {} outside [0, 1]",
                r.gate, r.qubits, r.base, r.fidelity
            ));
        }
    }
    let mut keys: Vec<(&str, &str)> = rows
        .iter()
        .map(|r| (r.gate.as_str(), r.qubits.as_str()))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    for (gate, qubits) in keys {
        let mut series: Vec<&ReportRow> = rows
            .iter()
            .filter(|r| r.gate == gate && r.qubits == qubits)
            .collect();
        series.sort_by_key(|r| r.base);
        for w in series.windows(2) {
            if w[1].fidelity + CHECK_TOL < w[0].fidelity {
                problems.push(format!(
                    "{gate}({qubits}): fidelity drops from {} at B={} to {} at B={}",
                    w[0].fidelity, w[0].base, w[1].fidelity, w[1].base
                ));
            }
        }
    }
    problems
}

fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV with a header row; floats carry 17 significant digits so they parse
/// back to the same `f64`.
pub fn write_report<W: Write>(rows: &[ReportRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "gate", "qubits", "base", "n", "duration", "fidelity", "bound", "distance",
    ])?;
    for r in rows {
        w.write_record([
            r.gate.clone(),
            r.qubits.clone(),
            r.base.to_string(),
            r.n.to_string(),
            sig17(r.duration),
            sig17(r.fidelity),
            sig17(r.bound),
            sig17(r.distance),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_report<R: Read>(input: R) -> Result<Vec<ReportRow>> {
    let mut r = csv::Reader::from_reader(input);
    Ok(r.deserialize()
        .collect::<Result<Vec<ReportRow>, csv::Error>>()?)
}
