//! Command-line interface: argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use clw_core::clw;
use clw_core::parity::Bracket;
use clw_core::roots::{roots, weights_on, Rep};
use clw_core::star::StarContext;
use clw_core::verify::{self, Law};
use clw_core::{Error, Scalar, SuperSpace};

use crate::eval::eval_str;
use crate::table::{emit_roots, emit_table, Format};

/// Exit codes.
pub const OK: i32 = 0;
pub const VERIFY_FAILED: i32 = 1;
pub const USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "clw", version, about = "Exact Clifford-Weyl superalgebra calculator")]
struct Cli {
    #[command(flatten)]
    space: SpaceArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SpaceArgs {
    /// Witt space: `n,m` or `n,odd,m` for an extra even vector e0.
    #[arg(long, global = true, value_name = "n[,odd],m", conflicts_with_all = ["euclid", "space"])]
    witt: Option<String>,
    /// Orthonormal even part of dimension n0 and a symplectic odd part of
    /// dimension 2m: `n0,m`.
    #[arg(long, global = true, value_name = "n0,m", conflicts_with = "space")]
    euclid: Option<String>,
    /// Space descriptor file.
    #[arg(long, global = true, value_name = "FILE")]
    space: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate expressions, from `-e` or one per line of a script.
    Eval {
        #[arg(short = 'e', long = "expr", value_name = "EXPR")]
        exprs: Vec<String>,
        /// Script file, `-` for standard input. Blank lines and lines
        /// starting with `#` are skipped.
        #[arg(long, value_name = "FILE")]
        script: Option<PathBuf>,
    },
    /// Product `a*b`.
    Mul { a: String, b: String },
    /// Super bracket `[a,b]s`, or the Lie bracket with `--lie`.
    Bracket {
        a: String,
        b: String,
        #[arg(long)]
        lie: bool,
    },
    /// Inner product `<a,b>`.
    Inner { a: String, b: String },
    /// Star `a'`.
    Star { a: String },
    /// Hermitian form `(a|b)`.
    Herm { a: String, b: String },
    /// Element of order 2 acting on V as the given osp matrix. The file
    /// holds one comma-separated row per line.
    OspEmbed {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Matrix of `[X, ·]s` on V for an order-2 element.
    OspProject { x: String },
    /// Even and odd roots of osp(V) for a Witt space.
    Roots {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Weights of `ext:m`, `sym:m` or `clw:k` for a Witt space.
    Weights {
        #[arg(long, value_name = "REP")]
        rep: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run randomized verification suites.
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Largest term order of random elements.
        #[arg(long)]
        max_order: Option<usize>,
        /// Largest space dimensions `n0,n1`.
        #[arg(long, value_name = "n0,n1")]
        dims: Option<String>,
        #[arg(long, value_enum, default_value = "differential")]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Suite {
    Differential,
    Laws,
    Embeddings,
    Identities,
    All,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn pair(text: &str, what: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok((a, b)),
            _ => Err(usage(format!("bad {what} '{text}'"))),
        },
        _ => Err(usage(format!("bad {what} '{text}'"))),
    }
}

/// `n,m` or `n,odd,m`.
pub fn parse_witt(text: &str) -> Option<(usize, bool, usize)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [n, m] => Some((n.parse().ok()?, false, m.parse().ok()?)),
        [n, "odd", m] => Some((n.parse().ok()?, true, m.parse().ok()?)),
        _ => None,
    }
}

fn load_space(args: &SpaceArgs) -> Result<SuperSpace, Failure> {
    if let Some(w) = &args.witt {
        let (n, odd, m) = parse_witt(w).ok_or_else(|| usage(format!("bad --witt '{w}', expected n,m or n,odd,m")))?;
        return Ok(SuperSpace::witt(n, odd, m));
    }
    if let Some(e) = &args.euclid {
        let (n0, m) = pair(e, "--euclid")?;
        return Ok(SuperSpace::euclidean(n0, m));
    }
    if let Some(path) = &args.space {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok(SuperSpace::parse_descriptor(&text)?);
    }
    Err(usage("no space given: use --witt, --euclid or --space"))
}

fn elem(text: &str, space: &SuperSpace) -> Result<clw::ClwElem, Failure> {
    Ok(eval_str(text, space).map_err(|e| usage(format!("{text}: {e}")))?.into_elem(space))
}

fn read_matrix(path: &PathBuf) -> Result<Vec<Vec<Scalar>>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| Scalar::parse(cell.trim()).map_err(|e| usage(format!("{}:{}: {e}", path.display(), ln + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}

fn check(out: &mut dyn Write, suite: Suite, seed: u64, cases: usize, max_order: Option<usize>, dims: Option<(usize, usize)>) -> Result<(), Failure> {
    let laws: Vec<Law> = match suite {
        Suite::Differential => verify::differential(),
        Suite::Laws => verify::algebra_laws(),
        Suite::Embeddings => verify::embeddings(),
        Suite::Identities => verify::identities(),
        Suite::All => [verify::differential(), verify::algebra_laws(), verify::embeddings(), verify::identities()].concat(),
    };
    let mut failed = 0;
    for law in &laws {
        match verify::run(law, cases, seed, max_order, dims) {
            Ok(()) => writeln!(out, "PASS {}", law.name),
            Err(msg) => {
                failed += 1;
                writeln!(out, "FAIL {msg}")
            }
        }
        .map_err(|e| usage(e.to_string()))?;
    }
    if failed > 0 {
        return Err(Failure::Verify(format!("{failed} of {} checks failed", laws.len())));
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| usage(e.to_string());
    if let Command::Check { seed, cases, max_order, dims, suite } = cli.command {
        let dims = dims.map(|d| pair(&d, "--dims")).transpose()?;
        return check(out, suite, seed, cases, max_order, dims);
    }
    let space = load_space(&cli.space)?;
    let sp = &space;
    match cli.command {
        Command::Eval { exprs, script } => {
            let mut lines = exprs;
            if let Some(path) = script {
                let text = if path.as_os_str() == "-" {
                    std::io::read_to_string(std::io::stdin()).map_err(io)?
                } else {
                    std::fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?
                };
                lines.extend(text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from));
            }
            if lines.is_empty() {
                return Err(usage("nothing to evaluate: give -e EXPR or --script FILE"));
            }
            for line in lines {
                let v = eval_str(&line, sp).map_err(|e| usage(format!("{line}: {e}")))?;
                writeln!(out, "{}", v.to_text(sp)).map_err(io)?;
            }
        }
        Command::Mul { a, b } => {
            let v = clw::clw_mul(sp, &elem(&a, sp)?, &elem(&b, sp)?)?;
            writeln!(out, "{}", v.to_text(sp)).map_err(io)?;
        }
        Command::Bracket { a, b, lie } => {
            let (x, y) = (elem(&a, sp)?, elem(&b, sp)?);
            let v = match if lie { Bracket::Lie } else { Bracket::Super } {
                Bracket::Lie => clw::lie_bracket(sp, &x, &y)?,
                Bracket::Super => clw::super_bracket(sp, &x, &y)?,
            };
            writeln!(out, "{}", v.to_text(sp)).map_err(io)?;
        }
        Command::Inner { a, b } => {
            writeln!(out, "{}", clw::inner(sp, &elem(&a, sp)?, &elem(&b, sp)?)?).map_err(io)?;
        }
        Command::Star { a } => {
            let v = StarContext::new(sp)?.star_clw(&elem(&a, sp)?)?;
            writeln!(out, "{}", v.to_text(sp)).map_err(io)?;
        }
        Command::Herm { a, b } => {
            writeln!(out, "{}", StarContext::new(sp)?.hermitian(&elem(&a, sp)?, &elem(&b, sp)?)?).map_err(io)?;
        }
        Command::OspEmbed { matrix } => {
            let t = read_matrix(&matrix)?;
            writeln!(out, "{}", clw::osp_embed(sp, &t)?.to_text(sp)).map_err(io)?;
        }
        Command::OspProject { x } => {
            for row in clw::osp_project(sp, &elem(&x, sp)?)? {
                writeln!(out, "{}", row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")).map_err(io)?;
            }
        }
        Command::Roots { format } => {
            out.write_all(emit_roots(&roots(sp)?, format).as_bytes()).map_err(io)?;
        }
        Command::Weights { rep, format } => {
            let rep: Rep = rep.parse()?;
            out.write_all(emit_table(&weights_on(sp, rep)?, format).as_bytes()).map_err(io)?;
        }
        Command::Check { .. } => unreachable!("handled above"),
    }
    Ok(())
}

/// Run with the given arguments (program name first). Returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            USAGE
        }
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            VERIFY_FAILED
        }
    }
}

/// Convenience for tests: run and capture standard output and error.
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("clw").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}
