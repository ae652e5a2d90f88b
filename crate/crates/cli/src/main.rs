//! Command-line front end: equilibrium classification, cusp codimension
//! reports, unfolding transversality, focal values, simulation, phase
//! portraits, parameter sweeps and the verification suite.
//!
//! Exit codes: 0 success, 1 usage error, 2 mathematical precondition
//! violated, 3 verification failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use allee::algebra::Rational;
use allee::equilibria;
use allee::focal::{self, FocalReport, HopfPoint};
use allee::model::{Params, State};
use allee::normalform::{self, CuspReport};
use allee::simulate::{self, Tolerances, Window};
use allee::verify;

#[derive(Parser)]
#[command(
    name = "allee",
    about = "Bifurcation analysis of a Leslie-Gower predator-prey model with an additive Allee effect",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all equilibria at a parameter point.
    Classify(ClassifyArgs),
    /// Nilpotent-cusp codimension report on the cusp locus.
    Cusp(CuspArgs),
    /// Finite-difference transversality of the codimension-4 unfolding.
    Unfold(UnfoldArgs),
    /// Focal (Lyapunov) values at the center-type equilibrium.
    Focal(FocalArgs),
    /// Integrate one trajectory and emit CSV.
    Simulate(SimulateArgs),
    /// Integrate a seed grid and emit CSV plus an SVG portrait.
    Portrait(PortraitArgs),
    /// Classify over a one- or two-parameter grid and emit CSV.
    Sweep(SweepArgs),
    /// Run the verification suite (criteria 1-10).
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ModelFlags {
    /// Allee half-saturation offset as p/q
    #[arg(long)]
    alpha: Option<String>,
    /// Allee severity as p/q
    #[arg(long)]
    beta: Option<String>,
    /// Predation strength as p/q
    #[arg(long)]
    gamma: Option<String>,
    /// Predator growth rate as p/q
    #[arg(long)]
    delta: Option<String>,
    /// Alternative-food offset as p/q
    #[arg(long)]
    eta: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    model: ModelFlags,
    /// Build (alpha, beta, delta) from the cusp locus at the given (gamma, eta).
    #[arg(long)]
    from_cusp_locus: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CuspArgs {
    /// gamma as p/q
    #[arg(long)]
    gamma: String,
    /// eta as p/q; defaults to the codimension-4 value for this gamma
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct UnfoldArgs {
    /// gamma as p/q
    #[arg(long)]
    gamma: String,
    /// central-difference step as p/q
    #[arg(long)]
    step: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FocalArgs {
    #[command(flatten)]
    model: ModelFlags,
    /// Equilibrium abscissa z as p/q (alternative to --alpha/--beta)
    #[arg(long)]
    z: Option<String>,
    /// Highest focal order to compute (1..=5)
    #[arg(long, default_value_t = 4)]
    order: usize,
    /// Use the float lane instead of exact rationals
    #[arg(long)]
    float: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolverFlags {
    /// TOML config with [model], [solver], [output] sections
    #[arg(long)]
    config: Option<PathBuf>,
    /// Absolute tolerance
    #[arg(long)]
    abs_tol: Option<f64>,
    /// Relative tolerance
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Integration horizon
    #[arg(long)]
    horizon: Option<f64>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    model: ModelFlags,
    #[command(flatten)]
    solver: SolverFlags,
    /// Initial prey density
    #[arg(long)]
    x0: Option<f64>,
    /// Initial predator density
    #[arg(long)]
    y0: Option<f64>,
    /// CSV output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PortraitArgs {
    #[command(flatten)]
    model: ModelFlags,
    #[command(flatten)]
    solver: SolverFlags,
    /// Window as x0,x1,y0,y1
    #[arg(long)]
    window: Option<String>,
    /// Seed grid as NxM
    #[arg(long)]
    grid: Option<String>,
    /// Output directory for CSV files and the SVG
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelFlags,
    /// Swept parameter name (alpha|beta|gamma|delta|eta)
    #[arg(long)]
    param: String,
    /// Sweep range as start:end:count with p/q endpoints
    #[arg(long)]
    range: String,
    /// Second swept parameter (optional)
    #[arg(long)]
    param2: Option<String>,
    #[arg(long)]
    range2: Option<String>,
    /// CSV output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// RNG seed for the randomized regressions
    #[arg(long, default_value_t = 20260809)]
    seed: u64,
    /// Run a single criterion (1..=10)
    #[arg(long)]
    criterion: Option<usize>,
    #[arg(long)]
    json: bool,
}

/// Error carrying the intended process exit code.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: msg.into(),
        }
    }
    fn math(msg: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: msg.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Cusp(a) => cmd_cusp(a),
        Command::Unfold(a) => cmd_unfold(a),
        Command::Focal(a) => cmd_focal(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Portrait(a) => cmd_portrait(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn parse_rational(name: &str, s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s).map_err(|e| CliError::usage(format!("--{name}: {e}")))
}

fn parse_opt(name: &str, s: &Option<String>) -> Result<Option<Rational>, CliError> {
    s.as_deref().map(|v| parse_rational(name, v)).transpose()
}

#[derive(Default, Deserialize)]
struct ConfigFile {
    model: Option<ConfigModel>,
    solver: Option<ConfigSolver>,
    output: Option<ConfigOutput>,
}

#[derive(Deserialize)]
struct ConfigModel {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
    delta: Rational,
    eta: Rational,
}

#[derive(Default, Deserialize)]
struct ConfigSolver {
    abs_tol: Option<f64>,
    rel_tol: Option<f64>,
    horizon: Option<f64>,
    #[allow(dead_code)]
    seed: Option<u64>,
}

#[derive(Default, Deserialize)]
struct ConfigOutput {
    dir: Option<PathBuf>,
}

fn load_config(path: &Option<PathBuf>) -> Result<ConfigFile, CliError> {
    match path {
        None => Ok(ConfigFile::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::usage(format!("config {}: {e}", p.display())))?;
            toml::from_str(&text)
                .map_err(|e| CliError::usage(format!("config {}: {e}", p.display())))
        }
    }
}

/// Builds Params from flags, falling back to the config file.
fn resolve_params(flags: &ModelFlags, config: &ConfigFile) -> Result<Params, CliError> {
    let from_cfg = config.model.as_ref();
    let pick = |name: &str,
                flag: &Option<String>,
                cfg: Option<&Rational>|
     -> Result<Rational, CliError> {
        if let Some(v) = parse_opt(name, flag)? {
            Ok(v)
        } else if let Some(v) = cfg {
            Ok(v.clone())
        } else {
            Err(CliError::usage(format!(
                "missing --{name} (and no [model] section provides it)"
            )))
        }
    };
    Params::new(
        pick("alpha", &flags.alpha, from_cfg.map(|m| &m.alpha))?,
        pick("beta", &flags.beta, from_cfg.map(|m| &m.beta))?,
        pick("gamma", &flags.gamma, from_cfg.map(|m| &m.gamma))?,
        pick("delta", &flags.delta, from_cfg.map(|m| &m.delta))?,
        pick("eta", &flags.eta, from_cfg.map(|m| &m.eta))?,
    )
    .map_err(|e| CliError::math(e.to_string()))
}

fn quad_str(q: &allee::algebra::Quad) -> String {
    match q.as_rational() {
        Some(r) => r.to_string(),
        None => format!("{q} ~ {:.9}", q.to_f64()),
    }
}

fn params_json(p: &Params) -> serde_json::Value {
    json!({
        "alpha": p.alpha.to_string(),
        "beta": p.beta.to_string(),
        "gamma": p.gamma.to_string(),
        "delta": p.delta.to_string(),
        "eta": p.eta.to_string(),
    })
}

fn cmd_classify(a: ClassifyArgs) -> Result<ExitCode, CliError> {
    let params = if a.from_cusp_locus {
        let gamma = parse_opt("gamma", &a.model.gamma)?
            .ok_or_else(|| CliError::usage("--from-cusp-locus needs --gamma"))?;
        let eta = match parse_opt("eta", &a.model.eta)? {
            Some(e) => e,
            None => normalform::codim4_eta(&gamma),
        };
        normalform::cusp_locus(&gamma, &eta)
            .map_err(|e| CliError::math(e.to_string()))?
            .params()
    } else {
        resolve_params(&a.model, &ConfigFile::default())?
    };

    let reports: Vec<_> = equilibria::boundary_equilibria(&params)
        .into_iter()
        .chain(equilibria::positive_equilibria(&params))
        .collect();

    if a.json {
        let items: Vec<_> = reports
            .iter()
            .map(|e| {
                json!({
                    "label": e.label,
                    "x": quad_str(&e.x),
                    "y": quad_str(&e.y),
                    "kind": e.kind.to_string(),
                    "trace": quad_str(&e.trace),
                    "det": quad_str(&e.det),
                    "delta1": e.delta1.to_string(),
                    "delta2": e.delta2.to_string(),
                    "center_manifold_coeff":
                        e.center_manifold_coeff.as_ref().map(|c| c.to_string()),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "params": params_json(&params),
                "equilibria": items
            }))
            .unwrap()
        );
    } else {
        println!("parameters: {params}");
        println!(
            "discriminants: Delta1 = {}, Delta2 = {}",
            equilibria::delta1(&params),
            equilibria::delta2(&params)
        );
        for e in &reports {
            println!(
                "{:<3} at ({}, {}): {}",
                e.label,
                quad_str(&e.x),
                quad_str(&e.y),
                e.kind
            );
            println!(
                "    trace = {}, det = {}{}",
                quad_str(&e.trace),
                quad_str(&e.det),
                e.center_manifold_coeff
                    .as_ref()
                    .map(|c| format!(", center-manifold coefficient = {c}"))
                    .unwrap_or_default()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cusp_report_json(rep: &CuspReport) -> serde_json::Value {
    json!({
        "d20": rep.d20.to_string(),
        "d11": rep.d11.to_string(),
        "M": rep.m.as_ref().map(quad_str),
        "N": rep.n.as_ref().map(quad_str),
        "rho1": rep.rho1.as_ref().map(|v| v.to_string()),
        "rho2": rep.rho2.as_ref().map(|v| v.to_string()),
        "codim": rep.codim.to_string(),
    })
}

fn cmd_cusp(a: CuspArgs) -> Result<ExitCode, CliError> {
    let gamma = parse_rational("gamma", &a.gamma)?;
    let eta = match &a.eta {
        Some(e) => parse_rational("eta", e)?,
        None => normalform::codim4_eta(&gamma),
    };
    let locus = normalform::cusp_locus(&gamma, &eta).map_err(|e| CliError::math(e.to_string()))?;
    let params = locus.params();
    let closed =
        normalform::cusp_report_closed(&params).map_err(|e| CliError::math(e.to_string()))?;
    let chain =
        normalform::cusp_report_chain(&params).map_err(|e| CliError::math(e.to_string()))?;

    if a.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "locus": {
                    "gamma": locus.gamma.to_string(),
                    "eta": locus.eta.to_string(),
                    "alpha0": locus.alpha0.to_string(),
                    "beta0": locus.beta0.to_string(),
                    "delta0": locus.delta0.to_string(),
                    "eta0": locus.eta0.as_ref().map(|v| v.to_string()),
                },
                "closed_form": cusp_report_json(&closed),
                "chain": cusp_report_json(&chain),
            }))
            .unwrap()
        );
    } else {
        println!("cusp locus at gamma = {}, eta = {}:", locus.gamma, locus.eta);
        println!(
            "  alpha0 = {}\n  beta0  = {}\n  delta0 = {}\n  eta0   = {}",
            locus.alpha0,
            locus.beta0,
            locus.delta0,
            locus
                .eta0
                .as_ref()
                .map(|v| v.to_string())
                .unwrap_or_default()
        );
        let show = |tag: &str, rep: &CuspReport| {
            println!("{tag}:");
            println!("  d20 = {}", rep.d20);
            println!("  d11 = {}", rep.d11);
            if let (Some(m), Some(n)) = (&rep.m, &rep.n) {
                println!("  M   = {}", quad_str(m));
                println!("  N   = {}", quad_str(n));
            }
            if let (Some(r1), Some(r2)) = (&rep.rho1, &rep.rho2) {
                println!("  rho1 = {r1}\n  rho2 = {r2}");
            }
            println!("  codimension: {}", rep.codim);
        };
        show("closed form", &closed);
        show("mechanized chain", &chain);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_unfold(a: UnfoldArgs) -> Result<ExitCode, CliError> {
    let gamma = parse_rational("gamma", &a.gamma)?;
    let rep = match parse_opt("step", &a.step)? {
        Some(h) => normalform::unfolding_jacobian_with_step(&gamma, &h),
        None => normalform::unfolding_jacobian(&gamma),
    }
    .map_err(|e| CliError::math(e.to_string()))?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&rep).unwrap());
    } else {
        println!("unfolding transversality at gamma = {gamma}");
        println!("chi(0) = {:?}", rep.chi_at_zero);
        println!("jacobian (rows: unfolding coefficients; columns: parameter perturbations):");
        for row in &rep.jacobian {
            println!(
                "  [{:>12.6}, {:>12.6}, {:>12.6}, {:>12.6}]",
                row[0], row[1], row[2], row[3]
            );
        }
        println!(
            "det = {:.6e} (halved step: {:.6e}, relative change {:.3e})",
            rep.jac_det, rep.jac_det_halved, rep.relative_change
        );
        println!("nonsingular: {}", rep.nonsingular);
    }
    Ok(ExitCode::SUCCESS)
}

fn focal_report_json(h: &HopfPoint, rep: &FocalReport) -> serde_json::Value {
    json!({
        "z": h.z.to_string(),
        "alpha0": h.alpha0.to_string(),
        "beta0": h.beta0.to_string(),
        "L": rep.l.iter().map(quad_str).collect::<Vec<_>>(),
        "L_numerators": rep.lnum.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "L_numerators_float": rep.lnum.iter().map(|v| v.to_f64()).collect::<Vec<_>>(),
        "first_nonzero_order": rep.order,
    })
}

fn cmd_focal(a: FocalArgs) -> Result<ExitCode, CliError> {
    if a.order == 0 || a.order > 5 {
        return Err(CliError::usage("--order must be between 1 and 5"));
    }
    let gamma =
        parse_opt("gamma", &a.model.gamma)?.ok_or_else(|| CliError::usage("missing --gamma"))?;
    let delta =
        parse_opt("delta", &a.model.delta)?.ok_or_else(|| CliError::usage("missing --delta"))?;
    let eta = parse_opt("eta", &a.model.eta)?.ok_or_else(|| CliError::usage("missing --eta"))?;

    let points: Vec<HopfPoint> = if let Some(z) = parse_opt("z", &a.z)? {
        vec![HopfPoint::new(z, delta, gamma, eta).map_err(|e| CliError::math(e.to_string()))?]
    } else {
        let alpha = parse_opt("alpha", &a.model.alpha)?
            .ok_or_else(|| CliError::usage("need --z or --alpha/--beta"))?;
        let beta = parse_opt("beta", &a.model.beta)?
            .ok_or_else(|| CliError::usage("need --z or --alpha/--beta"))?;
        let p = Params::new(alpha, beta.clone(), gamma, delta, eta)
            .map_err(|e| CliError::math(e.to_string()))?;
        let hs = HopfPoint::from_params(&p).map_err(|e| CliError::math(e.to_string()))?;
        for h in &hs {
            if h.beta0 != beta {
                eprintln!(
                    "note: supplied beta = {} differs from the locus value {} at z = {}; \
                     focal values use the locus value",
                    beta, h.beta0, h.z
                );
            }
        }
        hs
    };

    let mut out_items = Vec::new();
    for h in &points {
        if a.float {
            let vals = focal::focal_numerators_f64(
                h.z.to_f64(),
                h.delta.to_f64(),
                h.gamma.to_f64(),
                h.eta.to_f64(),
                a.order,
            );
            if a.json {
                out_items.push(json!({
                    "z": h.z.to_string(),
                    "L_numerators_float": vals,
                }));
            } else {
                println!("z = {} (float lane)", h.z);
                for (i, v) in vals.iter().enumerate() {
                    println!("  L{}{} ~ {:+.9e}", i + 1, i + 1, v);
                }
            }
            continue;
        }
        let rep = focal_values(h, a.order).map_err(|e| CliError::math(e.to_string()))?;
        if a.json {
            out_items.push(focal_report_json(h, &rep));
        } else {
            println!(
                "Hopf point: z = {}, alpha0 = {}, beta0 = {}",
                h.z, h.alpha0, h.beta0
            );
            for (i, v) in rep.lnum.iter().enumerate() {
                println!("  L{}{} = {} ~ {:+.9e}", i + 1, i + 1, v, v.to_f64());
            }
            match rep.order {
                Some(k) => println!("first nonzero focal value: order {k}"),
                None => println!("all computed focal values vanish"),
            }
        }
    }
    if a.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "points": out_items })).unwrap()
        );
    }
    Ok(ExitCode::SUCCESS)
}

use allee::focal::focal_values;

fn solver_settings(flags: &SolverFlags, config: &ConfigFile) -> (Tolerances, f64) {
    let cfg = config.solver.as_ref();
    let abs = flags.abs_tol.or(cfg.and_then(|c| c.abs_tol)).unwrap_or(1e-10);
    let rel = flags.rel_tol.or(cfg.and_then(|c| c.rel_tol)).unwrap_or(1e-10);
    let horizon = flags.horizon.or(cfg.and_then(|c| c.horizon)).unwrap_or(100.0);
    (Tolerances { abs, rel }, horizon)
}

fn cmd_simulate(a: SimulateArgs) -> Result<ExitCode, CliError> {
    let config = load_config(&a.solver.config)?;
    let params = resolve_params(&a.model, &config)?;
    let (tol, horizon) = solver_settings(&a.solver, &config);
    let init = State::new(a.x0.unwrap_or(0.5), a.y0.unwrap_or(0.5));
    if init.x < 0.0 || init.y < 0.0 {
        return Err(CliError::math(
            "initial state must lie in the closed positive quadrant",
        ));
    }
    let traj = simulate::integrate(&params.to_f64(), init, horizon, tol)
        .map_err(|e| CliError::math(e.to_string()))?;
    let csv = simulate::output::trajectory_csv(&traj);
    match &a.out {
        Some(path) => {
            std::fs::write(path, &csv)
                .map_err(|e| CliError::usage(format!("write {}: {e}", path.display())))?;
            if a.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "samples": traj.samples.len(),
                        "final": {"t": traj.last().0, "x": traj.last().1.x, "y": traj.last().1.y},
                        "csv": path.display().to_string(),
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "integrated to t = {:.3}; {} samples written to {}",
                    traj.last().0,
                    traj.samples.len(),
                    path.display()
                );
            }
        }
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_window(s: &str) -> Result<Window, CliError> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::usage(format!("--window: {e}")))?;
    if parts.len() != 4 || parts[0] >= parts[1] || parts[2] >= parts[3] {
        return Err(CliError::usage("--window must be x0,x1,y0,y1 with x0<x1, y0<y1"));
    }
    Ok(Window {
        x0: parts[0],
        x1: parts[1],
        y0: parts[2],
        y1: parts[3],
    })
}

fn cmd_portrait(a: PortraitArgs) -> Result<ExitCode, CliError> {
    let config = load_config(&a.solver.config)?;
    let params = resolve_params(&a.model, &config)?;
    let (tol, horizon) = solver_settings(&a.solver, &config);
    let window = match &a.window {
        Some(w) => parse_window(w)?,
        None => Window {
            x0: 0.0,
            x1: 1.2,
            y0: 0.0,
            y1: 1.2,
        },
    };
    let grid = match &a.grid {
        Some(g) => {
            let (nx, ny) = g
                .split_once('x')
                .ok_or_else(|| CliError::usage("--grid must be NxM"))?;
            (
                nx.parse()
                    .map_err(|e| CliError::usage(format!("--grid: {e}")))?,
                ny.parse()
                    .map_err(|e| CliError::usage(format!("--grid: {e}")))?,
            )
        }
        None => (6, 6),
    };
    let out_dir = a
        .out
        .or(config.output.and_then(|o| o.dir))
        .unwrap_or_else(|| PathBuf::from("portrait_out"));

    let portrait = simulate::phase_portrait(&params, window, grid, horizon, tol);
    let files = simulate::output::write_portrait_csv(&portrait, &out_dir)
        .map_err(|e| CliError::usage(format!("write {}: {e}", out_dir.display())))?;
    let svg = simulate::output::portrait_svg(&portrait, 900, 700);
    let svg_path = out_dir.join("portrait.svg");
    std::fs::write(&svg_path, svg)
        .map_err(|e| CliError::usage(format!("write {}: {e}", svg_path.display())))?;

    if a.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "trajectories": portrait.trajectories.len(),
                "failures": portrait.failures.len(),
                "equilibria": portrait.equilibria,
                "files": files,
                "svg": svg_path.display().to_string(),
            }))
            .unwrap()
        );
    } else {
        println!(
            "portrait: {} trajectories ({} failures), {} equilibria; output in {}",
            portrait.trajectories.len(),
            portrait.failures.len(),
            portrait.equilibria.len(),
            out_dir.display()
        );
        for (x, y, label) in &portrait.equilibria {
            println!("  equilibrium at ({x:.6}, {y:.6}): {label}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(name: &str, s: &str) -> Result<Vec<Rational>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "--{name} must be start:end:count with p/q endpoints"
        )));
    }
    let start = parse_rational(name, parts[0])?;
    let end = parse_rational(name, parts[1])?;
    let count: usize = parts[2]
        .parse()
        .map_err(|e| CliError::usage(format!("--{name} count: {e}")))?;
    if count < 2 {
        return Err(CliError::usage(format!("--{name}: count must be at least 2")));
    }
    let span = &end - &start;
    Ok((0..count)
        .map(|k| &start + &(&span * &Rational::ratio(k as i64, count as i64 - 1)))
        .collect())
}

fn with_param(base: &Params, name: &str, v: &Rational) -> Result<Params, CliError> {
    let mut p = base.clone();
    match name {
        "alpha" => p.alpha = v.clone(),
        "beta" => p.beta = v.clone(),
        "gamma" => p.gamma = v.clone(),
        "delta" => p.delta = v.clone(),
        "eta" => p.eta = v.clone(),
        other => return Err(CliError::usage(format!("unknown parameter {other}"))),
    }
    Params::new(p.alpha, p.beta, p.gamma, p.delta, p.eta)
        .map_err(|e| CliError::math(e.to_string()))
}

fn cmd_sweep(a: SweepArgs) -> Result<ExitCode, CliError> {
    let base = resolve_params(&a.model, &ConfigFile::default())?;
    let values1 = parse_range(&a.param, &a.range)?;
    let values2 = match (&a.param2, &a.range2) {
        (Some(p2), Some(r2)) => Some((p2.clone(), parse_range(p2, r2)?)),
        (None, None) => None,
        _ => return Err(CliError::usage("--param2 and --range2 go together")),
    };

    let mut csv = String::from("param1,value1,param2,value2,positive_equilibria,kinds\n");
    let mut emit = |p: &Params, v1: &Rational, v2: Option<(&str, &Rational)>| {
        let reports = equilibria::positive_equilibria(p);
        let kinds: Vec<String> = reports.iter().map(|e| e.kind.to_string()).collect();
        csv.push_str(&format!(
            "{},{},{},{},{},\"{}\"\n",
            a.param,
            v1,
            v2.map(|(n, _)| n).unwrap_or(""),
            v2.map(|(_, v)| v.to_string()).unwrap_or_default(),
            reports.len(),
            kinds.join("; ")
        ));
    };
    for v1 in &values1 {
        let p1 = with_param(&base, &a.param, v1)?;
        match &values2 {
            None => emit(&p1, v1, None),
            Some((name2, vals2)) => {
                for v2 in vals2 {
                    let p2 = with_param(&p1, name2, v2)?;
                    emit(&p2, v1, Some((name2, v2)));
                }
            }
        }
    }
    match &a.out {
        Some(path) => std::fs::write(path, &csv)
            .map_err(|e| CliError::usage(format!("write {}: {e}", path.display())))?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, CliError> {
    let outcomes = match a.criterion {
        Some(k) => {
            if k == 0 || k > verify::CRITERIA_COUNT {
                return Err(CliError::usage("criterion must be 1..=10"));
            }
            vec![verify::run_criterion(k, a.seed)]
        }
        None => verify::run_all(a.seed),
    };
    if a.json {
        println!("{}", serde_json::to_string_pretty(&outcomes).unwrap());
    } else {
        for o in &outcomes {
            println!(
                "criterion {:>2} [{}] ... {} ({} ms)",
                o.index,
                o.name,
                if o.passed { "PASS" } else { "FAIL" },
                o.millis
            );
            for d in &o.details {
                println!("    {d}");
            }
        }
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        println!(
            "{} of {} criteria passed",
            outcomes.len() - failed,
            outcomes.len()
        );
    }
    if outcomes.iter().all(|o| o.passed) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(3))
    }
}
