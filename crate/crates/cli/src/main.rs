//! Command-line driver: compile Pauli IR programs, generate benchmark
//! families, verify compiled circuits against the dense oracle and compare
//! pass configurations.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use paulic_core::bench::{self, GraphSpec, LatticeModel, LatticeSpec};
use paulic_core::circuit::Circuit;
use paulic_core::device::DeviceModel;
use paulic_core::parse::{emit_program, parse_program};
use paulic_core::pauli::Bindings;
use paulic_core::schedule::{do_schedule, gco_schedule, Schedule};
use paulic_core::synth_ft::{ft_synthesize, naive_synthesize, CompileOutput};
use paulic_core::synth_sc::{naive_route, sc_synthesize};
use paulic_core::verify::{check_equivalence, UNITARY_MAX_QUBITS};
use paulic_core::Program64;

#[derive(Parser)]
#[command(name = "paulic", about = "Block-wise compiler for Pauli simulation kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchedulePass {
    Gco,
    Do,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Ft,
    Sc,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a Pauli IR file to a gate-level circuit.
    Compile(CompileArgs),
    /// Benchmark program generators.
    Bench {
        #[command(subcommand)]
        command: BenchCommand,
    },
    /// Compile and check the circuit against the dense unitary oracle.
    Verify(VerifyArgs),
    /// Compare scheduling passes and block-wise compilation against the
    /// naive baseline.
    Compare(CompareArgs),
}

#[derive(Parser)]
struct CompileArgs {
    /// Input Pauli IR file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "do")]
    schedule: SchedulePass,
    #[arg(long, value_enum, default_value = "ft")]
    backend: Backend,
    /// Device JSON path or builtin name (sc backend only).
    #[arg(long)]
    device: Option<String>,
    /// Parameter bindings, `name=value`, repeatable.
    #[arg(long = "bind")]
    bindings: Vec<String>,
    /// QASM output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Pretty-print the stats instead of a JSON line.
    #[arg(long)]
    pretty: bool,
    /// Check the circuit against the dense oracle (skipped above 10 qubits).
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Generate a benchmark program.
    Gen(GenArgs),
}

#[derive(Parser)]
struct GenArgs {
    /// ising | heisenberg | rand | qaoa-reg | qaoa-rand
    #[arg(long)]
    family: String,
    /// Family parameters: lattice dims `30` or `6x5`; rand `n`; qaoa-reg
    /// `n,degree`; qaoa-rand `n,edge_prob`.
    #[arg(long)]
    params: String,
    /// Generator seed; the PAULI_SEED environment variable overrides the
    /// default of 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "do")]
    schedule: SchedulePass,
    #[arg(long, value_enum, default_value = "ft")]
    backend: Backend,
    #[arg(long)]
    device: Option<String>,
    #[arg(long = "bind")]
    bindings: Vec<String>,
}

#[derive(Parser)]
struct CompareArgs {
    #[arg(long)]
    input: PathBuf,
    /// Device for the superconducting cells.
    #[arg(long)]
    device: String,
    #[arg(long = "bind")]
    bindings: Vec<String>,
}

fn parse_bindings(args: &[String]) -> Result<Bindings<f64>> {
    let mut b = BTreeMap::new();
    for raw in args {
        let (name, value) =
            raw.split_once('=').with_context(|| format!("binding `{raw}` is not name=value"))?;
        let v: f64 = value.parse().with_context(|| format!("bad binding value in `{raw}`"))?;
        b.insert(name.to_string(), v);
    }
    Ok(b)
}

fn load_program(path: &PathBuf) -> Result<Program64> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_program(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_device(spec: &str) -> Result<DeviceModel<f64>> {
    if spec.contains('/') || spec.ends_with(".json") {
        let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        Ok(DeviceModel::from_json(&text)?)
    } else {
        Ok(DeviceModel::builtin(spec)?)
    }
}

fn run_schedule(p: &Program64, pass: SchedulePass) -> Schedule<f64> {
    match pass {
        SchedulePass::Gco => gco_schedule(p),
        SchedulePass::Do => do_schedule(p),
    }
}

fn stats_json(c: &Circuit<f64>) -> String {
    let counts = c.counts();
    format!(
        r#"{{"cnot":{},"single":{},"total":{},"depth":{}}}"#,
        counts.cnot,
        counts.single,
        counts.total,
        c.depth()
    )
}

fn compile_pipeline(
    p: &Program64,
    pass: SchedulePass,
    backend: Backend,
    device: Option<&DeviceModel<f64>>,
    bindings: &Bindings<f64>,
) -> Result<CompileOutput<f64>> {
    let sched = run_schedule(p, pass);
    match backend {
        Backend::Ft => Ok(ft_synthesize(&sched, bindings)?),
        Backend::Sc => {
            let d = device.context("--backend sc requires --device")?;
            Ok(sc_synthesize(&sched, d, bindings)?)
        }
    }
}

fn cmd_compile(args: &CompileArgs) -> Result<()> {
    let program = load_program(&args.input)?;
    let bindings = parse_bindings(&args.bindings)?;
    let device = match (&args.device, args.backend) {
        (Some(spec), _) => Some(load_device(spec)?),
        (None, Backend::Sc) => bail!("--backend sc requires --device"),
        (None, Backend::Ft) => None,
    };
    let out = compile_pipeline(&program, args.schedule, args.backend, device.as_ref(), &bindings)?;

    if args.verify {
        if out.circuit.n_qubits > UNITARY_MAX_QUBITS {
            eprintln!(
                "verify: skipped, {} qubits exceed the {UNITARY_MAX_QUBITS}-qubit oracle cap",
                out.circuit.n_qubits
            );
        } else {
            let dev =
                check_equivalence(&out.circuit, &out.emitted, out.circuit.qubit_map.as_deref())?;
            if dev > 1e-8 {
                bail!("verification failed: deviation {dev:.3e}");
            }
            eprintln!("verify: deviation {dev:.3e}");
        }
    }

    if let Some(path) = &args.out {
        fs::write(path, out.circuit.emit_qasm())
            .with_context(|| format!("writing {}", path.display()))?;
    }

    if args.pretty {
        let counts = out.circuit.counts();
        println!("cnot   {}", counts.cnot);
        println!("single {}", counts.single);
        println!("total  {}", counts.total);
        println!("depth  {}", out.circuit.depth());
        println!("swaps  {}", out.circuit.swap_count());
    } else {
        println!("{}", stats_json(&out.circuit));
    }
    Ok(())
}

fn parse_dims(text: &str) -> Result<Vec<usize>> {
    text.split('x')
        .map(|d| d.parse::<usize>().with_context(|| format!("bad dimension `{d}`")))
        .collect()
}

fn cmd_gen(args: &GenArgs) -> Result<()> {
    let seed = args
        .seed
        .or_else(|| std::env::var("PAULI_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(0);
    let program: Program64 = match args.family.as_str() {
        "ising" => bench::gen_lattice(&LatticeSpec {
            dims: parse_dims(&args.params)?,
            model: LatticeModel::Ising,
        })?,
        "heisenberg" => bench::gen_lattice(&LatticeSpec {
            dims: parse_dims(&args.params)?,
            model: LatticeModel::Heisenberg,
        })?,
        "rand" => bench::gen_random_hamiltonian(args.params.parse()?, seed)?,
        "qaoa-reg" => {
            let (n, d) = args.params.split_once(',').context("qaoa-reg needs `n,degree`")?;
            bench::gen_qaoa_maxcut(&GraphSpec::Regular {
                n: n.trim().parse()?,
                degree: d.trim().parse()?,
                seed,
            })?
        }
        "qaoa-rand" => {
            let (n, p) = args.params.split_once(',').context("qaoa-rand needs `n,edge_prob`")?;
            bench::gen_qaoa_maxcut(&GraphSpec::Random {
                n: n.trim().parse()?,
                edge_prob: p.trim().parse()?,
                seed,
            })?
        }
        other => bail!("unknown family `{other}`"),
    };
    let text = emit_program(&program);
    match &args.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<()> {
    let program = load_program(&args.input)?;
    if program.n_qubits > UNITARY_MAX_QUBITS {
        bail!(
            "program has {} qubits; the dense oracle is capped at {UNITARY_MAX_QUBITS}",
            program.n_qubits
        );
    }
    let bindings = parse_bindings(&args.bindings)?;
    let device = args.device.as_deref().map(load_device).transpose()?;
    let out = compile_pipeline(&program, args.schedule, args.backend, device.as_ref(), &bindings)?;
    let dev = check_equivalence(&out.circuit, &out.emitted, out.circuit.qubit_map.as_deref())?;
    println!("deviation {dev:.3e}");
    if dev > 1e-8 {
        bail!("deviation {dev:.3e} exceeds 1e-8");
    }
    Ok(())
}

struct Cell {
    name: &'static str,
    counts: paulic_core::circuit::Counts,
    depth: usize,
    swaps: usize,
}

fn cell(name: &'static str, c: &Circuit<f64>) -> Cell {
    Cell { name, counts: c.counts(), depth: c.depth(), swaps: c.swap_count() }
}

fn pct(new: usize, old: usize) -> String {
    if old == 0 {
        return if new == 0 { "+0.00%".into() } else { "n/a".into() };
    }
    format!("{:+.2}%", (new as f64 - old as f64) / old as f64 * 100.0)
}

fn cmd_compare(args: &CompareArgs) -> Result<()> {
    let program = load_program(&args.input)?;
    let bindings = parse_bindings(&args.bindings)?;
    let device = load_device(&args.device)?;

    let gco = gco_schedule(&program);
    let dos = do_schedule(&program);
    let gco_ft = ft_synthesize(&gco, &bindings)?.circuit;
    let do_ft = ft_synthesize(&dos, &bindings)?.circuit;
    let gco_sc = sc_synthesize(&gco, &device, &bindings)?.circuit;
    let do_sc = sc_synthesize(&dos, &device, &bindings)?.circuit;
    let gco_naive = naive_route(&naive_synthesize(&gco, &bindings)?.circuit, &device)?;
    let do_naive = naive_route(&naive_synthesize(&dos, &bindings)?.circuit, &device)?;

    let cells = [
        cell("gco+ft", &gco_ft),
        cell("do+ft", &do_ft),
        cell("gco+bc(sc)", &gco_sc),
        cell("do+bc(sc)", &do_sc),
        cell("gco+naive+route(sc)", &gco_naive),
        cell("do+naive+route(sc)", &do_naive),
    ];
    println!("{:<22}{:>9}{:>9}{:>9}{:>9}{:>9}", "config", "cnot", "single", "total", "depth", "swaps");
    for c in &cells {
        println!(
            "{:<22}{:>9}{:>9}{:>9}{:>9}{:>9}",
            c.name, c.counts.cnot, c.counts.single, c.counts.total, c.depth, c.swaps
        );
    }
    println!();
    println!(
        "do_vs_gco(ft)        cnot {} single {} total {} depth {}",
        pct(do_ft.counts().cnot, gco_ft.counts().cnot),
        pct(do_ft.counts().single, gco_ft.counts().single),
        pct(do_ft.counts().total, gco_ft.counts().total),
        pct(do_ft.depth(), gco_ft.depth()),
    );
    println!(
        "bc_vs_naive(sc,do)   cnot {} single {} total {} depth {} swaps {}",
        pct(do_sc.counts().cnot, do_naive.counts().cnot),
        pct(do_sc.counts().single, do_naive.counts().single),
        pct(do_sc.counts().total, do_naive.counts().total),
        pct(do_sc.depth(), do_naive.depth()),
        pct(do_sc.swap_count(), do_naive.swap_count()),
    );
    Ok(())
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compile(args) => cmd_compile(args),
        Command::Bench { command: BenchCommand::Gen(args) } => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Compare(args) => cmd_compare(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
