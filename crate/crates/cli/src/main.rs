//! `sl21`: surgery invariants, link data and property suites from the command line.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 inadmissible
//! coloring, 3 a verification check failed, 4 unsupported configuration.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sl21::algebra::{Algebra, AlgebraElement, AlgebraRef, Ctx};
use sl21::gcoalgebra::{integral, IntegralForm};
use sl21::invariant::three_manifold_invariant;
use sl21::scalars::Cyclo;
use sl21::tangles::{format_matrix, Coloring, LinkDiagram};
use sl21::verify::{run_suite, Suite};
use sl21::Error;

#[derive(Parser, Debug)]
#[command(name = "sl21", version, about = "Exact sl(2|1) link and 3-manifold invariants at odd roots of unity")]
struct Cli {
    /// Order of the root of unity (odd, at least 3).
    #[arg(long, global = true, default_value_t = 3)]
    ell: u32,
    /// Common denominator allowed in coloring entries.
    #[arg(long, global = true, default_value_t = 3)]
    denominator: u32,
    /// How scalars are printed.
    #[arg(long, global = true, value_enum, default_value_t = Format::Both)]
    format: Format,
    /// Digits after the decimal point in approximate output.
    #[arg(long, global = true, default_value_t = 10)]
    precision: usize,
    /// Worker threads for the verification suites (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The invariant J(M, omega) of the manifold obtained by surgery on a link.
    Invariant {
        /// Link file in the slice grammar or PD notation.
        link: PathBuf,
        /// Coloring file, one color `p/q p/q` per component (default: all zero).
        coloring: Option<PathBuf>,
    },
    /// Runs a property suite and reports the first counterexample on failure.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Components, linking matrix, writhes and the admissibility conditions.
    Linkinfo {
        link: PathBuf,
    },
    /// The normalization eta and the right integral of U_0 on the PBW basis.
    Integral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Exact,
    Decimal,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Hopf,
    Ribbon,
    Integral,
    Fourier,
    Kirby,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Hopf => vec![Suite::Hopf],
            SuiteArg::Ribbon => vec![Suite::Ribbon],
            SuiteArg::Integral => vec![Suite::Integral],
            SuiteArg::Fourier => vec![Suite::Fourier],
            SuiteArg::Kirby => vec![Suite::Kirby],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse { .. } | Error::OpenDiagram(_) => 1,
            Error::Inadmissible(_) => 2,
            _ => 4,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure { code: 1, msg: format!("{}: {e}", path.display()) })
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let f = Failure::from(e);
        Failure { code: f.code, msg: format!("{}: {}", path.display(), f.msg) }
    }
}

fn scalar(cli: &Cli, alg: &AlgebraRef, c: &Cyclo) -> String {
    let f = alg.field();
    let exact = f.format_exact(c);
    let approx = format!("approx {}", f.format_decimal(c, cli.precision));
    match cli.format {
        Format::Exact => exact,
        Format::Decimal => approx,
        Format::Both => format!("{exact}\n{approx}"),
    }
}

fn cmd_invariant(cli: &Cli, link: &Path, coloring: Option<&Path>) -> Result<String, Failure> {
    let alg = Algebra::new(cli.ell, cli.denominator)?;
    let l = LinkDiagram::parse(&read(link)?).map_err(in_file(link))?;
    let omega = match coloring {
        Some(p) => Coloring::parse(&read(p)?).map_err(in_file(p))?,
        None => Coloring::zero(l.n()),
    };
    for c in &omega.colors {
        c.check_field(alg.spec())?;
    }
    let report = l.validate_coloring(&omega);
    if !report.is_valid() {
        return Err(Failure { code: 2, msg: format!("inadmissible coloring: {report}") });
    }
    let form = IntegralForm::normalized(alg.field());
    let v = three_manifold_invariant(&alg, &l, &omega, &form)?;
    Ok(scalar(cli, &alg, &v) + "\n")
}

fn cmd_linkinfo(link: &Path) -> Result<String, Failure> {
    let l = LinkDiagram::parse(&read(link)?).map_err(in_file(link))?;
    let mut out = String::new();
    let writhes: Vec<String> = l.diagram().writhes().iter().map(|w| w.to_string()).collect();
    writeln!(out, "n={}", l.n()).unwrap();
    writeln!(out, "lk={}", format_matrix(l.lk())).unwrap();
    writeln!(out, "writhes=[{}]", writhes.join(",")).unwrap();
    writeln!(out, "crossings={}", l.diagram().crossings().len()).unwrap();
    writeln!(out, "admissible colorings (a_i in (Q/Z)^2):").unwrap();
    for c in l.admissibility_constraints() {
        writeln!(out, "  {c}").unwrap();
    }
    Ok(out)
}

fn cmd_verify(cli: &Cli, suite: SuiteArg) -> Result<String, Failure> {
    let mut out = String::new();
    let mut failed = vec![];
    for s in suite.suites() {
        let r = run_suite(s, cli.ell, cli.denominator)?;
        write!(out, "{r}").unwrap();
        if let Some(c) = r.first_failure() {
            failed.push(format!("{s}: {}", c.name));
        }
    }
    if failed.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure { code: 3, msg: format!("verification failed: {}", failed.join("; ")) })
    }
}

fn cmd_integral(cli: &Cli) -> Result<String, Failure> {
    let alg = Algebra::new(cli.ell, cli.denominator)?;
    let form = IntegralForm::normalized(alg.field());
    let mut out = String::new();
    writeln!(out, "eta =\n{}", indent(&scalar(cli, &alg, form.eta()))).unwrap();
    let basis = alg.quotient_basis();
    let mut nonzero = vec![];
    for (i, m) in basis.iter().enumerate() {
        let x = AlgebraElement::from_mono(&alg, Ctx::zero(), *m, Cyclo::one());
        let v = integral(&x, &form)?;
        if !v.is_zero() {
            nonzero.push((i, *m, v));
        }
    }
    writeln!(out, "lambda_0 on the PBW basis of U_0 ({} elements), nonzero entries: {}", basis.len(), nonzero.len())
        .unwrap();
    for (i, m, v) in nonzero {
        writeln!(out, "  [{i}] {m} =\n{}", indent(&scalar(cli, &alg, &v))).unwrap();
    }
    Ok(out)
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure { code: 4, msg: format!("thread pool: {e}") })?;
    }
    match &cli.command {
        Command::Invariant { link, coloring } => cmd_invariant(cli, link, coloring.as_deref()),
        Command::Verify { suite } => cmd_verify(cli, *suite),
        Command::Linkinfo { link } => cmd_linkinfo(link),
        Command::Integral => cmd_integral(cli),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
