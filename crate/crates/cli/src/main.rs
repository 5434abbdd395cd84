use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plethy_core::arith::PrimeField;
use plethy_core::characters::{verify_qchar_identity, QcharReport};
use plethy_core::conjecture::{scan, ScanConfig, ScanRow, DEFAULT_DIM_CAP};
use plethy_core::dump::{records_to_csv, MatrixDump};
use plethy_core::phi::{phi_matrix, Check, PhiContext};
use serde::Serialize;

/// Exact certificates for the plethystic isomorphism
/// Sym^{N-1}E (x) Wedge^{N+1}Sym^{d+1}E -> Delta^{(2,1^{N-1})}Sym^d E.
#[derive(Parser)]
#[command(name = "plethy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the isomorphism and run every certificate check.
    Verify(VerifyArgs),
    /// Write the matrices and the F_Delta basis to files.
    Dump(DumpArgs),
    /// Check the q-character identities.
    Qchar(QcharArgs),
    /// Scan the hook generalisation over a grid.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingChoice {
    Rat,
    Fp,
    Polygamma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Single value or inclusive range a..b.
    #[arg(long = "N", value_parser = parse_range)]
    n: Range,
    #[arg(long, value_parser = parse_range)]
    d: Range,
    /// Run only this equivariance route (default: all three).
    #[arg(long)]
    ring: Option<RingChoice>,
    /// Primes for the F_p route.
    #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3, 5, 7])]
    p: Vec<u32>,
    /// Also report the unitriangular block on domain vectors of this Y-degree.
    #[arg(long)]
    block: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long = "N")]
    n: usize,
    #[arg(long)]
    d: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct QcharArgs {
    #[arg(long = "N", value_parser = parse_range)]
    n: Range,
    #[arg(long, value_parser = parse_range)]
    d: Range,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long = "M", value_parser = parse_range)]
    m: Range,
    #[arg(long = "N", value_parser = parse_range)]
    n: Range,
    #[arg(long, value_parser = parse_range)]
    d: Range,
    #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3])]
    p: Vec<u32>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long = "dim-cap", env = "PLETHY_DIM_CAP", default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Debug)]
struct Range(Vec<u32>);

fn parse_range(s: &str) -> Result<Range, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("`{t}` is not a nonnegative integer"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(Range((a..=b).collect()))
        }
        None => Ok(Range(vec![num(s)?])),
    }
}

/// Failure modes of a run, mapped to exit codes.
enum Failure {
    Usage(String),
    Math,
}

impl From<plethy_core::Error> for Failure {
    fn from(e: plethy_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serialises");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct BlockReport {
    weight: u32,
    sha256: String,
    matrix: MatrixDump,
}

#[derive(Serialize)]
struct VerifyResult {
    #[serde(rename = "N")]
    n: usize,
    d: u32,
    dim_domain: usize,
    dim_codomain: usize,
    triangular_sha256: String,
    duality_sign: Option<i64>,
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    block: Option<BlockReport>,
}

#[derive(Serialize)]
struct VerifyReport {
    passed: bool,
    results: Vec<VerifyResult>,
}

fn timed(label: &str, n: usize, d: u32, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let check = f();
    eprintln!("N={n} d={d} {label}: {:.3}s", start.elapsed().as_secs_f64());
    check
}

fn verify_one(ctx: &PhiContext, args: &VerifyArgs, fields: &[PrimeField]) -> VerifyResult {
    let (n, d) = (ctx.n(), ctx.d());
    let mut checks = Vec::new();
    for check in ctx.certificate() {
        checks.push(check);
    }
    let all = args.ring.is_none();
    if all || args.ring == Some(RingChoice::Rat) {
        checks.push(timed("lie", n, d, || ctx.verify_lie_equivariance()));
        checks.push(timed("duality", n, d, || ctx.verify_duality()));
    }
    if all || args.ring == Some(RingChoice::Polygamma) {
        checks.push(timed("polygamma", n, d, || {
            ctx.verify_group_equivariance_poly()
        }));
        checks.push(timed("gl2", n, d, || ctx.verify_gl2_scalar()));
    }
    if all || args.ring == Some(RingChoice::Fp) {
        for f in fields {
            checks.push(timed("fp", n, d, || ctx.verify_group_equivariance_fp(f)));
        }
    }
    let block = args.block.map(|w| {
        let matrix = ctx.weight_block(w);
        BlockReport {
            weight: w,
            sha256: matrix.sha256(),
            matrix,
        }
    });
    VerifyResult {
        n,
        d,
        dim_domain: ctx.dim(),
        dim_codomain: ctx.delta().dim(),
        triangular_sha256: ctx.triangular_dump().sha256(),
        duality_sign: ctx.duality_sign(),
        checks,
        block,
    }
}

fn primes(list: &[u32]) -> Result<Vec<PrimeField>, Failure> {
    list.iter()
        .map(|&p| Ok(PrimeField::new(p as u64)?))
        .collect()
}

fn positive(range: &Range, flag: &str) -> Result<(), Failure> {
    if range.0.contains(&0) {
        return Err(Failure::Usage(format!("{flag} must be at least 1")));
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    positive(&args.n, "--N")?;
    let fields = primes(&args.p)?;
    let mut results = Vec::new();
    for &n in &args.n.0 {
        for &d in &args.d.0 {
            let start = Instant::now();
            let ctx = match phi_matrix(n as usize, d) {
                Ok(ctx) => ctx,
                Err(e) => {
                    eprintln!("N={n} d={d}: construction failed: {e}");
                    results.push(VerifyResult {
                        n: n as usize,
                        d,
                        dim_domain: 0,
                        dim_codomain: 0,
                        triangular_sha256: String::new(),
                        duality_sign: None,
                        checks: vec![Check::fail("construction", e.to_string())],
                        block: None,
                    });
                    continue;
                }
            };
            eprintln!("N={n} d={d} build: {:.3}s", start.elapsed().as_secs_f64());
            results.push(verify_one(&ctx, args, &fields));
        }
    }
    let passed = results.iter().all(|r| r.checks.iter().all(|c| c.passed));
    if let Some(bad) = results
        .iter()
        .find_map(|r| r.checks.iter().find(|c| !c.passed).map(|c| (r, c)))
    {
        eprintln!(
            "FAILED N={} d={} {}: {}",
            bad.0.n, bad.0.d, bad.1.name, bad.1.detail
        );
    }
    emit(
        args.out.as_deref(),
        &json(&VerifyReport { passed, results }),
    )?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Math)
    }
}

fn cmd_dump(args: &DumpArgs) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(Failure::Usage("--N must be at least 1".into()));
    }
    let ctx = phi_matrix(args.n, args.d)?;
    fs::create_dir_all(&args.out)?;
    let stem = format!("N{}_d{}", args.n, args.d);
    for (name, dump) in [
        ("phi", ctx.phi_dump()),
        ("triangular", ctx.triangular_dump()),
    ] {
        let (ext, text) = match args.format {
            Format::Json => ("json", dump.to_json()),
            Format::Csv => ("csv", dump.to_csv()),
        };
        let path = args.out.join(format!("{name}_{stem}.{ext}"));
        fs::write(&path, text)?;
        eprintln!("wrote {}", path.display());
    }
    let path = args.out.join(format!("basis_{stem}.json"));
    fs::write(&path, json(&ctx.delta().basis_dump()))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn cmd_qchar(args: &QcharArgs) -> Result<(), Failure> {
    positive(&args.n, "--N")?;
    let reports: Vec<QcharReport> = args
        .n
        .0
        .iter()
        .flat_map(|&n| {
            args.d
                .0
                .iter()
                .map(move |&d| verify_qchar_identity(n as usize, d))
        })
        .collect();
    let text = match args.format {
        Format::Json => json(&reports),
        Format::Csv => records_to_csv(&reports),
    };
    emit(args.out.as_deref(), &text)?;
    match reports.iter().find(|r| !r.all_equal()) {
        None => Ok(()),
        Some(r) => {
            eprintln!("MISMATCH N={} d={}: {} vs {}", r.n, r.d, r.lhs, r.rhs);
            Err(Failure::Math)
        }
    }
}

fn cmd_scan(args: &ScanArgs) -> Result<(), Failure> {
    positive(&args.m, "--M")?;
    positive(&args.n, "--N")?;
    let config = ScanConfig {
        m: args.m.0.iter().map(|&x| x as usize).collect(),
        n: args.n.0.iter().map(|&x| x as usize).collect(),
        d: args.d.0.clone(),
        primes: args.p.clone(),
        workers: args.workers,
        dim_cap: args.dim_cap,
    };
    let start = Instant::now();
    let reports = scan(&config)?;
    eprintln!(
        "scanned {} tuples in {:.3}s",
        reports.len(),
        start.elapsed().as_secs_f64()
    );
    for r in &reports {
        if let Some(notice) = &r.notice {
            eprintln!("NOTICE M={} N={} d={}: {notice}", r.m, r.n, r.d);
        } else if !r.all_equal() {
            eprintln!(
                "POTENTIAL COUNTEREXAMPLE M={} N={} d={}: qchar_equal={} fingerprints {:?}",
                r.m,
                r.n,
                r.d,
                r.qchar_equal,
                r.fingerprints
                    .iter()
                    .map(|f| (f.p, f.equal))
                    .collect::<Vec<_>>()
            );
        }
    }
    let text = match args.format {
        Format::Json => json(&reports),
        Format::Csv => {
            let rows: Vec<ScanRow> = reports.iter().flat_map(|r| r.rows()).collect();
            records_to_csv(&rows)
        }
    };
    emit(args.out.as_deref(), &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Dump(a) => cmd_dump(a),
        Command::Qchar(a) => cmd_qchar(a),
        Command::Scan(a) => cmd_scan(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
