//! JSON file formats for specs, schedules, circuits and search problems.
//!
//! * spec: `{"n": 3, "a": [..], "b": [..], "c": [..]}`
//! * schedule: `{"segments": [{"h": 1, "t": 1.5707963267948966, "t_pi": 0.5, "label": "H(1)"}]}`.
//!   `t_pi` (duration in units of π) is authoritative; `t` is written for
//!   readability and only read when `t_pi` is absent.
//! * circuit: `{"n": 2, "gates": [{"g": "H", "q": 1}, {"g": "CNOT", "q": 1, "q2": 2}]}`,
//!   in time order.

use std::f64::consts::PI;
use std::fs;
use std::path::Path;

use hamweave_core::{
    Circuit, CoincidenceProblem, EvolutionTime, Gate, HamiltonianSpec, Schedule, Segment, Which,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub n: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
}

impl From<&HamiltonianSpec> for SpecFile {
    fn from(s: &HamiltonianSpec) -> Self {
        Self {
            n: s.n(),
            a: s.a().to_vec(),
            b: s.b().to_vec(),
            c: s.c().to_vec(),
        }
    }
}

impl TryFrom<SpecFile> for HamiltonianSpec {
    type Error = CliError;

    fn try_from(f: SpecFile) -> Result<Self> {
        Ok(HamiltonianSpec::new(f.n, f.a, f.b, f.c)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentFile {
    pub h: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_pi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleFile {
    pub segments: Vec<SegmentFile>,
}

impl From<&Schedule> for ScheduleFile {
    fn from(s: &Schedule) -> Self {
        let segments = s
            .segments
            .iter()
            .map(|seg| SegmentFile {
                h: match seg.hamiltonian {
                    Which::H1 => 1,
                    Which::H2 => 2,
                },
                t: Some(seg.duration.time()),
                t_pi: Some(seg.duration.half_turns()),
                label: seg.label.clone(),
            })
            .collect();
        Self { segments }
    }
}

impl TryFrom<ScheduleFile> for Schedule {
    type Error = CliError;

    fn try_from(f: ScheduleFile) -> Result<Self> {
        let mut out = Schedule::new();
        for (i, seg) in f.segments.into_iter().enumerate() {
            let ctx = || format!("segment {i}");
            let which = match seg.h {
                1 => Which::H1,
                2 => Which::H2,
                other => {
                    return Err(CliError::parse(
                        ctx(),
                        format!("h must be 1 or 2, got {other}"),
                    ))
                }
            };
            let duration = match (seg.t_pi, seg.t) {
                (Some(tp), _) => EvolutionTime::from_half_turns(tp)?,
                (None, Some(t)) => EvolutionTime::from_half_turns(t / PI)?,
                (None, None) => return Err(CliError::parse(ctx(), "needs `t_pi` or `t`")),
            };
            let mut s = Segment::new(which, duration);
            s.label = seg.label;
            out.push(s);
        }
        out.validate()?;
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateFile {
    pub g: String,
    pub q: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q2: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitFile {
    pub n: usize,
    pub gates: Vec<GateFile>,
}

impl From<&Circuit> for CircuitFile {
    fn from(c: &Circuit) -> Self {
        let gates = c
            .gates()
            .iter()
            .map(|g| match *g {
                Gate::H(q) => GateFile {
                    g: "H".into(),
                    q,
                    q2: None,
                },
                Gate::T(q) => GateFile {
                    g: "T".into(),
                    q,
                    q2: None,
                },
                Gate::Cnot { control, target } => GateFile {
                    g: "CNOT".into(),
                    q: control,
                    q2: Some(target),
                },
            })
            .collect();
        Self { n: c.n(), gates }
    }
}

impl TryFrom<CircuitFile> for Circuit {
    type Error = CliError;

    fn try_from(f: CircuitFile) -> Result<Self> {
        let gates = f
            .gates
            .into_iter()
            .enumerate()
            .map(|(i, g)| {
                let ctx = || format!("gate {i}");
                match (g.g.to_ascii_uppercase().as_str(), g.q2) {
                    ("H", None) => Ok(Gate::H(g.q)),
                    ("T", None) => Ok(Gate::T(g.q)),
                    ("CNOT" | "CX", Some(t)) => Ok(Gate::Cnot {
                        control: g.q,
                        target: t,
                    }),
                    ("CNOT" | "CX", None) => {
                        Err(CliError::parse(ctx(), "CNOT needs `q2` (target)"))
                    }
                    ("H" | "T", Some(_)) => {
                        Err(CliError::parse(ctx(), format!("{} takes no `q2`", g.g)))
                    }
                    (name, _) => Err(CliError::parse(ctx(), format!("unknown gate `{name}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Circuit::new(f.n, gates)?)
    }
}

/// Coincidence problem file; mirrors [`CoincidenceProblem`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub coefficients: Vec<f64>,
    pub targets: Vec<f64>,
    pub tolerance: f64,
    pub t_max: f64,
    pub resolution: f64,
}

impl TryFrom<ProblemFile> for CoincidenceProblem {
    type Error = CliError;

    fn try_from(f: ProblemFile) -> Result<Self> {
        Ok(CoincidenceProblem::new(
            f.coefficients,
            f.targets,
            f.tolerance,
            f.t_max,
            f.resolution,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResultFile {
    pub time: f64,
    pub error: f64,
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub tolerance: f64,
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    // serde_json errors carry line and column.
    serde_json::from_str(&text).map_err(|e| CliError::parse(path.display().to_string(), e))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn read_spec(path: &Path) -> Result<HamiltonianSpec> {
    read_json::<SpecFile>(path)?.try_into()
}

pub fn read_schedule(path: &Path) -> Result<Schedule> {
    read_json::<ScheduleFile>(path)?.try_into()
}

pub fn read_circuit(path: &Path) -> Result<Circuit> {
    read_json::<CircuitFile>(path)?.try_into()
}
