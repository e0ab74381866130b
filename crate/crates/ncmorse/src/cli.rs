//! Command-line front end: spectra and wavefunctions as CSV, identity
//! audits as JSON.
//!
//! Output is deterministic: field order is fixed, every float is printed
//! with 17 significant digits (bit-faithful for doubles), and files are
//! written atomically (temp file, then rename).
//!
//! Exit codes: 0 success, 2 argument or parse error, 3 singular
//! deformation matrix, 4 a proven identity failed its audit, 5 the
//! eigensolver did not converge, 1 i/o failure.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::audit::{AssertionClass, IdentityChecker, IdentityReport, Verdict};
use crate::deformed::{self, DeformationMatrix, GEntry};
use crate::error::Error;
use crate::morse::MorseParams;
use crate::ncgeom;
use crate::repr::{self, Representation};
use crate::tensor2d;
use crate::wavefn::{grid_with_samples, BoundStateWave};

/// Formats a double with 17 significant digits, enough to round-trip.
pub fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Parser)]
#[command(
    name = "ncmorse",
    version,
    about = "Operator algebra and identity auditor for commutative and deformed 2D Morse oscillators"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Eigenvalues of the deformed two-oscillator Hamiltonian as CSV.
    Spectrum(SpectrumArgs),
    /// Run every identity audit and emit a JSON report.
    Audit(AuditArgs),
    /// Sample one bound-state wavefunction as CSV.
    Wavefn(WavefnArgs),
    /// Eigenvalue trajectories while one deformation entry sweeps a range.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Basis truncation per axis, as `N1,N2` or a single shared value.
    #[arg(long, default_value = "8,8")]
    dims: String,

    /// Representation parameter per axis, as `q1,q2` or a single value.
    #[arg(long, default_value = "1.5,1.5")]
    q: String,

    /// Deformation matrix `a,b;c,d`; entries are `re` or `re+-imi`.
    #[arg(long, default_value = "1,0;0,1")]
    g: String,

    /// Hamiltonian prefactor; defaults to hbar^2 alpha^2 / (2 mu).
    #[arg(long)]
    scale: Option<String>,

    /// Reduced mass.
    #[arg(long, default_value = "1")]
    mu: String,

    /// Action constant.
    #[arg(long, default_value = "1")]
    hbar: String,

    /// Potential range constant.
    #[arg(long, default_value = "1")]
    alpha: String,

    /// Potential depth; the default gives well parameter nu = 7.
    #[arg(long, default_value = "6.125")]
    v0: String,

    /// Relative tolerance of the identity audits.
    #[arg(long, default_value = "1e-10")]
    tol: String,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Output CSV path (`index,re,im`).
    #[arg(long, default_value = "spectrum.csv")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct AuditArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Noncommutativity parameter of the coordinate-bracket audit.
    #[arg(long, default_value = "0.5")]
    theta: String,

    /// Prefactor of the exponential coordinates in that audit.
    #[arg(long, default_value = "1")]
    v: String,

    /// Output JSON path.
    #[arg(long, default_value = "audit.json")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct WavefnArgs {
    /// Level index n.
    #[arg(long, default_value = "0")]
    n: String,

    /// Family parameter sigma > 0.
    #[arg(long, default_value = "3")]
    sigma: String,

    /// Well parameter nu > 0.
    #[arg(long, default_value = "7")]
    nu: String,

    /// Potential range constant.
    #[arg(long, default_value = "1")]
    alpha: String,

    /// Number of grid samples.
    #[arg(long, default_value = "4000")]
    samples: String,

    /// Output CSV path (`x,value`).
    #[arg(long, default_value = "wavefn.csv")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Which deformation entry to sweep: g11, g12, g21 or g22.
    #[arg(long, default_value = "g11")]
    entry: String,

    /// First swept value.
    #[arg(long, default_value = "0.5")]
    from: String,

    /// Last swept value.
    #[arg(long, default_value = "1.5")]
    to: String,

    /// Number of sweep points.
    #[arg(long, default_value = "21")]
    steps: String,

    /// Output CSV path (`step,g_entry,index,re,im`).
    #[arg(long, default_value = "sweep.csv")]
    out: PathBuf,
}

fn parse_f64(name: &str, text: &str) -> Result<f64, Error> {
    let value: f64 = text
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("--{name}: invalid number '{text}'")))?;
    if !value.is_finite() {
        return Err(Error::Parse(format!("--{name}: non-finite value '{text}'")));
    }
    Ok(value)
}

fn parse_usize(name: &str, text: &str) -> Result<usize, Error> {
    text.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("--{name}: invalid integer '{text}'")))
}

/// `a,b` pair of numbers; a single value is used for both positions.
fn parse_f64_pair(name: &str, text: &str) -> Result<(f64, f64), Error> {
    let parts: Vec<&str> = text.split(',').collect();
    match parts.as_slice() {
        [single] => {
            let v = parse_f64(name, single)?;
            Ok((v, v))
        }
        [first, second] => Ok((parse_f64(name, first)?, parse_f64(name, second)?)),
        _ => Err(Error::Parse(format!(
            "--{name}: expected one or two comma-separated values, got '{text}'"
        ))),
    }
}

fn parse_usize_pair(name: &str, text: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = text.split(',').collect();
    match parts.as_slice() {
        [single] => {
            let v = parse_usize(name, single)?;
            Ok((v, v))
        }
        [first, second] => Ok((parse_usize(name, first)?, parse_usize(name, second)?)),
        _ => Err(Error::Parse(format!(
            "--{name}: expected one or two comma-separated values, got '{text}'"
        ))),
    }
}

/// Validated common configuration shared by spectrum, audit and sweep.
struct CommonConfig {
    dims: (usize, usize),
    q: (f64, f64),
    g: DeformationMatrix,
    scale: f64,
    params: MorseParams,
    tol: f64,
}

impl CommonConfig {
    fn from_args(args: &CommonArgs) -> Result<Self, Error> {
        let dims = parse_usize_pair("dims", &args.dims)?;
        let q = parse_f64_pair("q", &args.q)?;
        let g = DeformationMatrix::parse(&args.g)?;
        let mu = parse_f64("mu", &args.mu)?;
        let hbar = parse_f64("hbar", &args.hbar)?;
        let alpha = parse_f64("alpha", &args.alpha)?;
        let v0 = parse_f64("v0", &args.v0)?;
        let params = MorseParams::new(v0, alpha, mu, hbar)?;
        let scale = match &args.scale {
            Some(text) => parse_f64("scale", text)?,
            None => params.energy_scale(),
        };
        let tol = parse_f64("tol", &args.tol)?;
        if tol <= 0.0 {
            return Err(Error::Parse(format!("--tol must be positive, got {tol}")));
        }
        Ok(Self {
            dims,
            q,
            g,
            scale,
            params,
            tol,
        })
    }

    fn representations(&self) -> Result<(Representation, Representation), Error> {
        Ok((
            Representation::new(self.dims.0, self.q.0)?,
            Representation::new(self.dims.1, self.q.1)?,
        ))
    }

    fn scale_echo(&self, args: &CommonArgs) -> String {
        match &args.scale {
            Some(text) => text.clone(),
            None => fmt_g17(self.scale),
        }
    }
}

/// Writes via a sibling temp file and rename so readers never observe a
/// partially written report.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Error> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn json_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Assembles the audit JSON document with a fixed field order.
fn render_audit_json(config: &[(&str, String)], reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    out.push_str("{\n  \"config\": {\n");
    for (i, (key, value)) in config.iter().enumerate() {
        let comma = if i + 1 == config.len() { "" } else { "," };
        out.push_str(&format!(
            "    \"{}\": \"{}\"{}\n",
            json_escape(key),
            json_escape(value),
            comma
        ));
    }
    out.push_str("  },\n  \"identities\": [\n");
    for (i, report) in reports.iter().enumerate() {
        let comma = if i + 1 == reports.len() { "" } else { "," };
        out.push_str(&format!(
            "    {{\"name\": \"{}\", \"paper_ref\": \"{}\", \"assertion_class\": \"{}\", \"residual\": {}, \"verdict\": \"{}\"}}{}\n",
            json_escape(&report.name),
            json_escape(&report.paper_ref),
            report.assertion_class.as_str(),
            fmt_g17(report.residual_norm),
            report.verdict.as_str(),
            comma
        ));
    }
    let proven_pass = reports
        .iter()
        .filter(|r| r.assertion_class == AssertionClass::Proven && r.verdict == Verdict::Pass)
        .count();
    let proven_fail = reports
        .iter()
        .filter(|r| r.assertion_class == AssertionClass::Proven && r.verdict == Verdict::Flagged)
        .count();
    let paper_claimed_flagged = reports
        .iter()
        .filter(|r| {
            r.assertion_class == AssertionClass::PaperClaimed && r.verdict == Verdict::Flagged
        })
        .count();
    out.push_str("  ],\n");
    out.push_str(&format!(
        "  \"summary\": {{\"proven_pass\": {proven_pass}, \"proven_fail\": {proven_fail}, \"paper_claimed_flagged\": {paper_claimed_flagged}}}\n"
    ));
    out.push_str("}\n");
    out
}

/// Every identity-report producer in the crate, in a fixed order.
fn collect_audit_reports(
    common: &CommonConfig,
    theta: f64,
    v: f64,
) -> Result<Vec<IdentityReport>, Error> {
    if common.dims.0 < 3 || common.dims.1 < 3 {
        return Err(Error::Parse(
            "audit needs --dims of at least 3,3 so margin-2 interiors are nonempty".into(),
        ));
    }
    let checker = IdentityChecker::new(common.tol);
    let (rep1, rep2) = common.representations()?;
    let mut reports = Vec::new();
    reports.extend(repr::algebra_reports(&rep1, &checker, " (axis 1)"));
    reports.extend(repr::algebra_reports(&rep2, &checker, " (axis 2)"));
    let gens = tensor2d::build_2d_generators(&rep1, &rep2);
    reports.extend(tensor2d::cross_slot_reports(&gens, &checker));
    reports.extend(tensor2d::slot_algebra_reports(&gens, &checker));
    reports.extend(tensor2d::hamiltonian_symmetry_reports(&gens, common.scale, &checker));
    reports.extend(tensor2d::h_ladder_commutator_audit(&gens, common.scale, &checker));
    reports.extend(tensor2d::casimir_reports(&gens, &checker));
    let ds = deformed::build_deformed(&gens, &common.g);
    reports.extend(deformed::deformed_commutator_audit(&ds, &checker));
    reports.extend(deformed::deformed_casimir_audit(&ds, &checker));
    reports.push(deformed::noncentrality_report(&ds, &checker));
    reports.extend(deformed::hamiltonian_expansion_reports(&ds, common.scale, &checker));
    reports.extend(deformed::identity_reduction_reports(&gens, common.scale, &checker));
    reports.extend(ncgeom::nc_coordinate_audit(theta, common.params.alpha(), v, &checker));
    reports.extend(ncgeom::yp_commutator_check(&rep1, &common.params, &checker));
    Ok(reports)
}

fn run_spectrum(args: &SpectrumArgs) -> Result<i32, Error> {
    let common = CommonConfig::from_args(&args.common)?;
    let (rep1, rep2) = common.representations()?;
    let gens = tensor2d::build_2d_generators(&rep1, &rep2);
    let ds = deformed::build_deformed(&gens, &common.g);
    let h = deformed::deformed_hamiltonian(&ds, common.scale);
    let spectrum = deformed::spectrum(&h)?;
    let mut csv = String::from("index,re,im\n");
    for (index, value) in spectrum.eigenvalues.iter().enumerate() {
        csv.push_str(&format!(
            "{index},{},{}\n",
            fmt_g17(value.re),
            fmt_g17(value.im)
        ));
    }
    write_atomic(&args.out, &csv)?;
    println!(
        "wrote {} ({} eigenvalues, max pair residual {})",
        args.out.display(),
        spectrum.eigenvalues.len(),
        fmt_g17(spectrum.max_residual)
    );
    Ok(0)
}

fn run_audit(args: &AuditArgs) -> Result<i32, Error> {
    let common = CommonConfig::from_args(&args.common)?;
    let theta = parse_f64("theta", &args.theta)?;
    let v = parse_f64("v", &args.v)?;
    let reports = collect_audit_reports(&common, theta, v)?;
    let config: Vec<(&str, String)> = vec![
        ("subcommand", "audit".to_string()),
        ("dims", args.common.dims.clone()),
        ("q", args.common.q.clone()),
        ("g", args.common.g.clone()),
        ("scale", common.scale_echo(&args.common)),
        ("mu", args.common.mu.clone()),
        ("hbar", args.common.hbar.clone()),
        ("alpha", args.common.alpha.clone()),
        ("v0", args.common.v0.clone()),
        ("theta", args.theta.clone()),
        ("v", args.v.clone()),
        ("tol", args.common.tol.clone()),
        ("out", args.out.display().to_string()),
    ];
    let json = render_audit_json(&config, &reports);
    write_atomic(&args.out, &json)?;
    let proven_fail = reports
        .iter()
        .filter(|r| r.assertion_class == AssertionClass::Proven && !r.passed())
        .count();
    let flagged = reports
        .iter()
        .filter(|r| r.assertion_class == AssertionClass::PaperClaimed && !r.passed())
        .count();
    println!(
        "wrote {} ({} identities, {} proven failures, {} flagged claims)",
        args.out.display(),
        reports.len(),
        proven_fail,
        flagged
    );
    Ok(if proven_fail > 0 { 4 } else { 0 })
}

fn run_wavefn(args: &WavefnArgs) -> Result<i32, Error> {
    let n = parse_usize("n", &args.n)?;
    let sigma = parse_f64("sigma", &args.sigma)?;
    let nu = parse_f64("nu", &args.nu)?;
    let alpha = parse_f64("alpha", &args.alpha)?;
    let samples = parse_usize("samples", &args.samples)?;
    let wave = BoundStateWave::from_scaled(n, sigma, nu, alpha)?;
    let xs = grid_with_samples(nu, alpha, samples)?;
    let mut csv = String::from("x,value\n");
    for &x in &xs {
        csv.push_str(&format!("{},{}\n", fmt_g17(x), fmt_g17(wave.eval(x))));
    }
    write_atomic(&args.out, &csv)?;
    println!("wrote {} ({} samples)", args.out.display(), xs.len());
    Ok(0)
}

fn run_sweep(args: &SweepArgs) -> Result<i32, Error> {
    let common = CommonConfig::from_args(&args.common)?;
    let entry = GEntry::parse(&args.entry)?;
    let from = parse_f64("from", &args.from)?;
    let to = parse_f64("to", &args.to)?;
    let steps = parse_usize("steps", &args.steps)?;
    if steps == 0 {
        return Err(Error::Parse("--steps must be at least 1".into()));
    }
    let (rep1, rep2) = common.representations()?;
    let gens = tensor2d::build_2d_generators(&rep1, &rep2);
    let mut csv = String::from("step,g_entry,index,re,im\n");
    for step in 0..steps {
        let fraction = if steps == 1 {
            0.0
        } else {
            step as f64 / (steps - 1) as f64
        };
        let value = from + (to - from) * fraction;
        let g = common
            .g
            .with_entry(entry, crate::op::C64::new(value, 0.0))?;
        let ds = deformed::build_deformed(&gens, &g);
        let h = deformed::deformed_hamiltonian(&ds, common.scale);
        let spectrum = deformed::spectrum(&h)?;
        for (index, eigenvalue) in spectrum.eigenvalues.iter().enumerate() {
            csv.push_str(&format!(
                "{step},{},{index},{},{}\n",
                fmt_g17(value),
                fmt_g17(eigenvalue.re),
                fmt_g17(eigenvalue.im)
            ));
        }
    }
    write_atomic(&args.out, &csv)?;
    println!("wrote {} ({} sweep points)", args.out.display(), steps);
    Ok(0)
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Parse(_)
        | Error::InvalidParameter(_)
        | Error::DimensionMismatch { .. }
        | Error::GridMismatch
        | Error::NotNilpotent { .. } => 2,
        Error::SingularDeformation { .. } => 3,
        Error::EigenNonConvergence { .. } => 5,
        Error::Io(_) => 1,
    }
}

fn execute(cmd: &Cmd) -> Result<i32, Error> {
    match cmd {
        Cmd::Spectrum(args) => run_spectrum(args),
        Cmd::Audit(args) => run_audit(args),
        Cmd::Wavefn(args) => run_wavefn(args),
        Cmd::Sweep(args) => run_sweep(args),
    }
}

/// Parses and runs one invocation; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    let mut argv: Vec<&str> = Vec::with_capacity(args.len() + 1);
    argv.push("ncmorse");
    argv.extend(args.iter().map(String::as_str));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            exit_code_for(&error)
        }
    }
}
