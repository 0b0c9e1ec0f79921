use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use filtralab_cli::corpus::corpus_run;
use filtralab_cli::instance;
use filtralab_cli::model::{TaskKind, Theorem};
use filtralab_cli::report::{self, Format};
use filtralab_cli::run::{run_source, RunConfig, Selection};

#[derive(Parser)]
#[command(name = "filtralab", version, about = "Hilbert coefficients of monomial filtrations, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Upper end of table windows; also the reduction window W
    #[arg(long, global = true, value_name = "N")]
    window: Option<i64>,

    /// Ratliff-Rush stabilization bound (default: $FILTRALAB_KMAX or 32)
    #[arg(long, global = true, value_name = "K")]
    kmax: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,

    /// Worker threads for `corpus` (0: one per core)
    #[arg(long, global = true, value_name = "P", default_value_t = 0)]
    jobs: usize,

    /// Add a `timing` section to JSON output
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct Target {
    /// Instance file
    file: PathBuf,
    /// Ideal or filtration name; every declared one when omitted
    target: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert coefficients e_0..e_d, or the e_alpha table for several axes
    Coeffs(Target),
    /// Coefficient table e_alpha in the product binomial basis
    Mixed(Target),
    /// Hilbert function on a window
    Function(Target),
    /// chi(n) = P(n) - H(n) on a window
    Defect(Target),
    /// Postulation number n(F)
    Postulation(Target),
    /// Ratliff-Rush closure of F(n)
    Rr {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        n: i64,
    },
    /// Integral closure of I^n
    Intclosure {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        n: i64,
    },
    /// h1 and h2 of a dimension-2 filtration
    Cohomology(Target),
    /// Lengths of the g-torsion along one axis
    Torsion {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        axis: usize,
    },
    /// Reduction numbers of declared and automatic candidates
    Reduction {
        #[command(flatten)]
        target: Target,
        /// Restrict to one declared candidate
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Run one theorem checker
    Verify {
        /// northcott, huneke-ooishi, sally, nonneg, cohomology, itoh-e2, mgho, e2zero-multi, itoh-e3
        theorem: String,
        #[command(flatten)]
        target: Target,
    },
    /// Run the tasks and expectations listed in the file
    Run { file: PathBuf },
    /// Run every instance of a directory
    Corpus { dir: PathBuf },
    /// Print the file in canonical layout
    Fmt {
        file: PathBuf,
        /// Exit 1 when the file is not already canonical
        #[arg(long)]
        check: bool,
    },
}

fn kmax(flag: Option<usize>) -> Result<usize, String> {
    if let Some(k) = flag {
        return Ok(k);
    }
    match std::env::var("FILTRALAB_KMAX") {
        Ok(v) => v.trim().parse().map_err(|_| format!("FILTRALAB_KMAX: not a count: {v}")),
        Err(_) => Ok(RunConfig::default().kmax),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("filtralab: {msg}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    let opts = cli.opts;
    let cfg = RunConfig { window: opts.window, kmax: kmax(opts.kmax)?, ..RunConfig::default() };
    let format = match opts.format {
        OutFormat::Json => Format::Json,
        OutFormat::Csv => Format::Csv,
        OutFormat::Text => Format::Text,
    };
    let single = |t: Target, sel: Selection| -> Result<i32, String> {
        let text = fs::read_to_string(&t.file).map_err(|e| format!("{}: {e}", t.file.display()))?;
        let sel = Selection { target: t.target, ..sel };
        let r = run_source(&t.file.to_string_lossy(), &text, &cfg, &sel);
        print!("{}", report::render_instance(&r, format, opts.timing));
        if let Some(e) = &r.parse_error {
            eprintln!("filtralab: {}: {e}", t.file.display());
        }
        Ok(r.exit_code())
    };
    let of = |k: TaskKind| Selection { kind: Some(k), ..Selection::default() };
    match cli.command {
        Command::Coeffs(t) => single(t, of(TaskKind::Coeffs)),
        Command::Mixed(t) => single(t, of(TaskKind::Mixed)),
        Command::Function(t) => single(t, of(TaskKind::Function)),
        Command::Defect(t) => single(t, of(TaskKind::Defect)),
        Command::Postulation(t) => single(t, of(TaskKind::Postulation)),
        Command::Cohomology(t) => single(t, of(TaskKind::Cohomology)),
        Command::Rr { target, n } => single(target, Selection { n: Some(n), ..of(TaskKind::Rr) }),
        Command::Intclosure { target, n } => single(target, Selection { n: Some(n), ..of(TaskKind::IntClosure) }),
        Command::Torsion { target, axis } => {
            if axis == 0 {
                return Err("axes are numbered from 1".into());
            }
            single(target, Selection { axis: Some(axis - 1), ..of(TaskKind::Torsion) })
        }
        Command::Reduction { target, candidate } => single(target, Selection { candidate, ..of(TaskKind::Reduction) }),
        Command::Verify { theorem, target } => {
            let th = Theorem::parse(&theorem).ok_or_else(|| {
                let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
                format!("unknown theorem `{theorem}`; expected one of {}", names.join(", "))
            })?;
            single(target, of(TaskKind::Verify(th)))
        }
        Command::Run { file } => single(Target { file, target: None }, Selection::default()),
        Command::Corpus { dir } => {
            let reports = corpus_run(&dir, opts.jobs, &cfg).map_err(|e| format!("{}: {e}", dir.display()))?;
            print!("{}", report::render_corpus(&reports, format, opts.timing));
            Ok(filtralab_cli::run::exit_code(&reports))
        }
        Command::Fmt { file, check } => {
            let text = fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let parsed = instance::parse(&text).map_err(|e| format!("{}:{e}", file.display()))?;
            let canonical = instance::format(&parsed);
            if check {
                return Ok(if canonical == text { 0 } else { 1 });
            }
            print!("{canonical}");
            Ok(0)
        }
    }
}
