use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hamweave_core::compiler::{circuit_unitary, compile_circuit, standard_coefficients};
use hamweave_core::qcore::{fidelity_phase_invariant, phase_invariant_distance};
use hamweave_core::search::scan_coincidence;
use hamweave_core::simulator::{run_schedule, schedule_unitary_capped};
use hamweave_core::{CoincidenceProblem, CompilerConfig, StateVector, C64, DEFAULT_MAX_DENSE_N};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{CliError, Result};
use crate::expr::{eval, eval_list};
use crate::formats::{
    read_circuit, read_json, read_schedule, read_spec, to_json, write_text, ProblemFile,
    ScheduleFile, SearchResultFile, SpecFile,
};
use crate::report::{build_report, check_report, write_report};

/// Environment variable overriding the largest `n` for dense unitaries.
pub const MAX_DENSE_ENV: &str = "HAMWEAVE_MAX_DENSE_N";

#[derive(Debug, Parser)]
#[command(
    name = "hamweave",
    version,
    about = "Compile and simulate switched two-Hamiltonian control schedules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the standard power-of-two coefficient spec.
    Genspec {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 16)]
        base: u64,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compile a circuit file into a normalized schedule.
    Compile {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long, default_value_t = 16)]
        base: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a schedule on a state, or compare its unitary with a circuit.
    Simulate(SimulateArgs),
    /// Fidelity, bound and distance of every compiled gate, as CSV.
    Report {
        #[arg(long)]
        n: usize,
        /// Bases to compare, e.g. `--base 16,64,256`.
        #[arg(long = "base", value_delimiter = ',', default_values_t = [16u64, 64, 256])]
        bases: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a time where every coefficient's phase hits its target.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long)]
    pub schedule: PathBuf,
    /// Unitary mode: compare the schedule's unitary with this circuit's.
    #[arg(long, conflicts_with_all = ["initial", "seed"])]
    pub circuit: Option<PathBuf>,
    /// Initial basis state as a bitstring, qubit 1 first (default all zeros).
    #[arg(long, conflicts_with = "seed")]
    pub initial: Option<String>,
    /// Start from a random state drawn with this seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// CSV output (state amplitudes, or the fidelity row).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Problem JSON; flags given alongside override its fields.
    #[arg(long)]
    pub problem: Option<PathBuf>,
    /// Comma-separated expressions, e.g. `1,sqrt(5),e`.
    #[arg(long)]
    pub coeffs: Option<String>,
    /// Comma-separated target phases, e.g. `pi/2,0,0`.
    #[arg(long)]
    pub targets: Option<String>,
    #[arg(long)]
    pub tolerance: Option<String>,
    #[arg(long)]
    pub tmax: Option<String>,
    #[arg(long)]
    pub resolution: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn max_dense_n() -> Result<usize> {
    match std::env::var(MAX_DENSE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| CliError::parse(MAX_DENSE_ENV, format!("`{v}`: {e}"))),
        Err(_) => Ok(DEFAULT_MAX_DENSE_N),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_text(p, text),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(path, e))
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Genspec { n, base, out } => genspec(n, base, out.as_deref()),
        Command::Compile { circuit, base, out } => compile(&circuit, base, out.as_deref()),
        Command::Simulate(args) => simulate(&args),
        Command::Report { n, bases, out } => report(n, &bases, out.as_deref()),
        Command::Search(args) => search(&args),
    }
}

pub fn genspec(n: usize, base: u64, out: Option<&Path>) -> Result<()> {
    let cfg = CompilerConfig::new(n, base)?;
    emit(out, &to_json(&SpecFile::from(&standard_coefficients(&cfg))))
}

pub fn compile(circuit: &Path, base: u64, out: Option<&Path>) -> Result<()> {
    let circ = read_circuit(circuit)?;
    let cfg = CompilerConfig::new(circ.n(), base)?;
    let schedule = compile_circuit(&circ, &cfg)?;
    emit(out, &to_json(&ScheduleFile::from(&schedule)))?;
    let total = schedule.total_duration();
    // Keep stdout clean for the schedule when no file is given.
    let summary = format!(
        "segments: {}\ntotal duration: {} ({} π)\n",
        schedule.len(),
        total.time(),
        total.half_turns()
    );
    if out.is_some() {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    Ok(())
}

fn parse_bitstring(bits: &str, n: usize) -> Result<usize> {
    if bits.len() != n || !bits.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(CliError::parse(
            "--initial",
            format!("expected {n} binary digits, got `{bits}`"),
        ));
    }
    Ok(usize::from_str_radix(bits, 2).expect("checked binary digits"))
}

pub fn simulate(args: &SimulateArgs) -> Result<()> {
    let spec = read_spec(&args.spec)?;
    let schedule = read_schedule(&args.schedule)?;
    let n = spec.n();

    if let Some(path) = &args.circuit {
        let circ = read_circuit(path)?;
        if circ.n() != n {
            return Err(hamweave_core::Error::DimensionMismatch {
                expected: n,
                found: circ.n(),
            }
            .into());
        }
        let cap = max_dense_n()?;
        let u = schedule_unitary_capped(&spec, &schedule, cap)?;
        let ideal = circuit_unitary(&circ, cap)?;
        let f = fidelity_phase_invariant(&u, &ideal)?;
        let d = phase_invariant_distance(&u, &ideal)?;
        println!("fidelity: {f:.16e}\ndistance: {d:.16e}");
        if let Some(out) = &args.out {
            let mut w = csv::Writer::from_writer(create(out)?);
            w.write_record(["n", "fidelity", "distance"])?;
            w.write_record([n.to_string(), format!("{f:.16e}"), format!("{d:.16e}")])?;
            w.flush().map_err(|e| CliError::io(out, e))?;
        }
        return Ok(());
    }

    let mut state = match (&args.initial, args.seed) {
        (Some(bits), _) => StateVector::basis_state(n, parse_bitstring(bits, n)?),
        (None, Some(seed)) => {
            let mut rng = StdRng::seed_from_u64(seed);
            let amps = (0..1usize << n)
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            StateVector::from_amplitudes(n, amps)?
        }
        (None, None) => StateVector::zero_state(n),
    };
    run_schedule(&spec, &schedule, &mut state)?;

    let sink: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(create(p)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["index", "basis", "re", "im", "probability"])?;
    for (i, a) in state.amplitudes().iter().enumerate() {
        w.write_record([
            i.to_string(),
            format!("{i:0n$b}"),
            format!("{:.16e}", a.re),
            format!("{:.16e}", a.im),
            format!("{:.16e}", a.norm_sqr()),
        ])?;
    }
    w.flush().map_err(|e| CliError::io("<output>", e))?;
    Ok(())
}

pub fn report(n: usize, bases: &[u64], out: Option<&Path>) -> Result<()> {
    let rows = build_report(n, bases, max_dense_n()?)?;
    match out {
        Some(p) => write_report(&rows, create(p)?)?,
        None => write_report(&rows, io::stdout().lock())?,
    }
    let problems = check_report(&rows);
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Assertion(problems.len(), problems.join("\n")))
    }
}

fn problem_from_args(args: &SearchArgs) -> Result<CoincidenceProblem> {
    let mut file = match &args.problem {
        Some(p) => Some(read_json::<ProblemFile>(p)?),
        None => None,
    };
    let missing =
        |name: &str| CliError::parse("search", format!("--{name} is required without --problem"));
    let scalar = |flag: &Option<String>, from_file: Option<f64>, name: &str| -> Result<f64> {
        match flag {
            Some(s) => eval(s),
            None => from_file.ok_or_else(|| missing(name)),
        }
    };
    let list =
        |flag: &Option<String>, from_file: Option<Vec<f64>>, name: &str| -> Result<Vec<f64>> {
            match flag {
                Some(s) => eval_list(s),
                None => from_file.ok_or_else(|| missing(name)),
            }
        };
    let coefficients = list(
        &args.coeffs,
        file.as_mut().map(|f| std::mem::take(&mut f.coefficients)),
        "coeffs",
    )?;
    let targets = list(
        &args.targets,
        file.as_mut().map(|f| std::mem::take(&mut f.targets)),
        "targets",
    )?;
    let tolerance = scalar(
        &args.tolerance,
        file.as_ref().map(|f| f.tolerance),
        "tolerance",
    )?;
    let t_max = scalar(&args.tmax, file.as_ref().map(|f| f.t_max), "tmax")?;
    let resolution = match (&args.resolution, &file) {
        (Some(s), _) => eval(s)?,
        (None, Some(f)) => f.resolution,
        (None, None) => 1e-3,
    };
    Ok(CoincidenceProblem::new(
        coefficients,
        targets,
        tolerance,
        t_max,
        resolution,
    )?)
}

pub fn search(args: &SearchArgs) -> Result<()> {
    let problem = problem_from_args(args)?;
    let res = scan_coincidence(&problem)?;
    let file = SearchResultFile {
        time: res.time,
        error: res.error,
        residuals: res.residuals.clone(),
        converged: res.converged,
        tolerance: problem.tolerance,
    };
    emit(args.out.as_deref(), &to_json(&file))?;
    if res.converged {
        Ok(())
    } else {
        Err(CliError::NotConverged {
            error: res.error,
            tolerance: problem.tolerance,
        })
    }
}
