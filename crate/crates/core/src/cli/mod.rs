//! `corridor` command-line front end.
//!
//! Exit codes: 0 on success or match, 1 on a route mismatch or failed
//! b-file comparison, 2 on usage errors, bad parameters and I/O errors.

pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::bfile::BFile;
use crate::corridor::{self, DEFAULT_BINARY_CAP, DEFAULT_TERNARY_CAP};
use crate::error::Error;
use crate::km::{self, KmQuery, DEFAULT_KM_CAP};
use crate::pascal;
use crate::verify::{self, Bounds};

pub use output::{Format, OutputRecord, Route};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "corridor",
    version,
    about = "Exact corridor path counts via circular Pascal arrays"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Maximum path length accepted by the brute-force oracles.
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LayerArg {
    Sigma,
    P,
    Q,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Generator {
    Corridor,
    Infinite,
    Motzkin,
    KmDiag,
    RangeSeq,
}

#[derive(Debug, Args)]
struct NRange {
    /// Last path length (inclusive).
    #[arg(long)]
    n_max: usize,
    /// First path length.
    #[arg(long, default_value_t = 0)]
    n_min: usize,
}

impl NRange {
    fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One row of the circular Pascal array of order d.
    Row {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        y0: usize,
        #[arg(long, value_enum, default_value_t = LayerArg::Sigma)]
        layer: LayerArg,
    },
    /// Row ranges (max - min) for n in a range.
    RangeSeq {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        n: NRange,
        #[arg(long, default_value_t = 0)]
        y0: usize,
    },
    /// Two-choice corridor counts in a corridor of width m.
    Corridor {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        n: NRange,
        #[arg(long, default_value_t = 0)]
        y0: usize,
        #[arg(long, value_enum, default_value_t = Route::Operator)]
        route: Route,
    },
    /// Counts in the unbounded (one-wall) corridor.
    Infinite {
        #[command(flatten)]
        n: NRange,
        #[arg(long, default_value_t = 0)]
        y0: usize,
        #[arg(long, value_enum, default_value_t = Route::Operator)]
        route: Route,
    },
    /// Three-choice corridor counts in the order-d corridor.
    Motzkin {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        n: NRange,
        #[arg(long, default_value_t = 0)]
        y0: usize,
        #[arg(long, value_enum, default_value_t = Route::Operator)]
        route: Route,
    },
    /// Krattenthaler-Mohanty count D(a, b; s, t).
    Km {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        #[arg(long, value_enum, default_value_t = Route::ClosedForm)]
        route: Route,
    },
    /// Sums of D(a, b; 0, m) over a + b = n.
    KmDiag {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        n: NRange,
    },
    /// Dual-corridor state vector v_n over one period (k = 0..2d-1).
    State {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        y0: usize,
    },
    /// Cross-check independent routes over parameter grids.
    Verify(VerifyArgs),
    /// Compare a generated sequence against a local OEIS b-file.
    OeisCompare {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long, value_enum)]
        generator: Generator,
        /// Corridor width (corridor, km-diag).
        #[arg(long)]
        m: Option<usize>,
        /// Order (motzkin, range-seq).
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        y0: usize,
        /// Minimum number of overlapping terms required for a match.
        #[arg(long, default_value_t = 1)]
        min_terms: usize,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    two_choice: bool,
    #[arg(long)]
    km: bool,
    #[arg(long)]
    motzkin: bool,
    #[arg(long)]
    infinite: bool,
    #[arg(long)]
    pascal: bool,
    #[arg(long, default_value_t = 6)]
    m_max: usize,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    #[arg(long, default_value_t = 6)]
    d_max: usize,
    #[arg(long, default_value_t = -3, allow_negative_numbers = true)]
    s_min: i64,
    #[arg(long, default_value_t = 3)]
    t_max: i64,
    #[arg(long, default_value_t = 8)]
    ab_max: i64,
    #[arg(long, default_value_t = 3)]
    y0_max: usize,
}

/// Failure of a single command, mapped onto an exit code.
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Run with process arguments, writing to stdout/stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Run with explicit output streams. `args` includes the program name.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_MISMATCH
        }
    }
}

fn record(params: &[(&'static str, i64)], value: BigInt, route: Route) -> OutputRecord {
    OutputRecord {
        params: params.to_vec(),
        value,
        route,
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let binary_cap = cli.cap.unwrap_or(DEFAULT_BINARY_CAP);
    let ternary_cap = cli.cap.unwrap_or(DEFAULT_TERNARY_CAP);
    let records = match &cli.command {
        Command::Row { d, n, y0, layer } => {
            let row = match layer {
                LayerArg::Sigma => pascal::sigma_row(*d, *n, *y0)?,
                LayerArg::P => pascal::p_row(*d, *n, *y0)?,
                LayerArg::Q => pascal::q_row(*d, *n, *y0)?,
            };
            row.window()
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    record(
                        &[("d", *d as i64), ("n", *n as i64), ("y0", *y0 as i64), ("k", k as i64)],
                        v.clone(),
                        Route::Operator,
                    )
                })
                .collect()
        }
        Command::RangeSeq { d, n, y0 } => {
            let mut recs = Vec::new();
            for i in n.iter() {
                let ext = pascal::row_extrema(*d, i, *y0)?;
                recs.push(record(
                    &[("d", *d as i64), ("n", i as i64), ("y0", *y0 as i64)],
                    ext.range,
                    Route::Operator,
                ));
            }
            recs
        }
        Command::Corridor { m, n, y0, route } => {
            corridor_records(*m, n, *y0, *route, binary_cap)?
        }
        Command::Infinite { n, y0, route } => {
            let mut recs = Vec::new();
            for i in n.iter() {
                let value = match route {
                    Route::Operator => corridor::corridor_count(i + y0, i, *y0)?,
                    Route::ClosedForm => corridor::infinite_corridor_count(i, *y0),
                    Route::BruteForce => corridor::infinite_corridor_bruteforce(i, *y0, binary_cap)?,
                };
                recs.push(record(&[("n", i as i64), ("y0", *y0 as i64)], value, *route));
            }
            recs
        }
        Command::Motzkin { d, n, y0, route } => {
            let mut recs = Vec::new();
            for i in n.iter() {
                let value = match route {
                    Route::Operator => corridor::motzkin_corridor_count(*d, i, *y0)?,
                    Route::ClosedForm => {
                        if *y0 != 0 {
                            return Err(Failure::Usage(
                                "the closed form covers only --y0 0".into(),
                            ));
                        }
                        corridor::motzkin_count_closed_form(*d, i)?
                    }
                    Route::BruteForce => corridor::motzkin_bruteforce_capped(*d, i, *y0, ternary_cap)?,
                };
                recs.push(record(
                    &[("d", *d as i64), ("n", i as i64), ("y0", *y0 as i64)],
                    value,
                    *route,
                ));
            }
            recs
        }
        Command::Km { a, b, s, t, route } => {
            let q = KmQuery::new(*a, *b, *s, *t)?;
            let value = match route {
                Route::Operator => km::km_count_via_sigma(&q),
                Route::ClosedForm => km::km_count_formula(&q),
                Route::BruteForce => km::km_bruteforce_capped(&q, cli.cap.unwrap_or(DEFAULT_KM_CAP))?,
            };
            vec![record(&[("a", *a), ("b", *b), ("s", *s), ("t", *t)], value, *route)]
        }
        Command::KmDiag { m, n } => n
            .iter()
            .map(|i| {
                record(
                    &[("m", *m as i64), ("n", i as i64)],
                    km::km_diagonal_sum(i, *m),
                    Route::ClosedForm,
                )
            })
            .collect(),
        Command::State { d, n, y0 } => {
            let v = corridor::state_at(*d, *n, *y0)?;
            v.seq
                .window()
                .iter()
                .enumerate()
                .map(|(k, val)| {
                    record(
                        &[("d", *d as i64), ("n", *n as i64), ("y0", *y0 as i64), ("k", k as i64)],
                        val.clone(),
                        Route::Operator,
                    )
                })
                .collect()
        }
        Command::Verify(args) => return run_verify(args, cli.cap, out),
        Command::OeisCompare {
            bfile,
            generator,
            m,
            d,
            y0,
            min_terms,
        } => return run_oeis_compare(bfile, *generator, *m, *d, *y0, *min_terms, out),
    };
    output::write_records(out, cli.format, &records)?;
    Ok(())
}

fn corridor_records(
    m: usize,
    n: &NRange,
    y0: usize,
    route: Route,
    cap: usize,
) -> std::result::Result<Vec<OutputRecord>, Failure> {
    let mut recs = Vec::new();
    let values: Vec<BigInt> = match route {
        Route::Operator => n
            .iter()
            .map(|i| corridor::corridor_count(m, i, y0))
            .collect::<Result<_, _>>()?,
        Route::ClosedForm => {
            if y0 != 0 {
                return Err(Failure::Usage(
                    "the closed form (diagonal K-M sum) covers only --y0 0".into(),
                ));
            }
            n.iter().map(|i| km::km_diagonal_sum(i, m)).collect()
        }
        Route::BruteForce => n
            .iter()
            .map(|i| corridor::corridor_count_bruteforce_capped(m, i, y0, cap))
            .collect::<Result<_, _>>()?,
    };
    for (i, value) in n.iter().zip(values) {
        recs.push(record(
            &[("m", m as i64), ("n", i as i64), ("y0", y0 as i64)],
            value,
            route,
        ));
    }
    Ok(recs)
}

fn run_verify(args: &VerifyArgs, cap: Option<usize>, out: &mut dyn Write) -> CmdResult {
    let bounds = Bounds {
        m_max: args.m_max,
        n_max: args.n_max,
        d_max: args.d_max,
        s_min: args.s_min,
        t_max: args.t_max,
        ab_max: args.ab_max,
        y0_max: args.y0_max,
        binary_cap: cap.unwrap_or(DEFAULT_BINARY_CAP),
        ternary_cap: cap.unwrap_or(DEFAULT_TERNARY_CAP),
    };
    let any = args.two_choice || args.km || args.motzkin || args.infinite || args.pascal;
    let selected = |flag: bool| flag || !any;

    if args.s_min > 0 || args.t_max < 0 || args.ab_max < 0 {
        return Err(Failure::Usage("need --s-min <= 0, --t-max >= 0, --ab-max >= 0".into()));
    }
    let too_long = |what: &str, length: usize, cap: usize| {
        Failure::Usage(format!("{what}: length {length} exceeds enumeration cap {cap}"))
    };
    if (selected(args.two_choice) || selected(args.infinite)) && bounds.n_max > bounds.binary_cap {
        return Err(too_long("--n-max", bounds.n_max, bounds.binary_cap));
    }
    if selected(args.km) && 2 * bounds.ab_max as usize > bounds.binary_cap {
        return Err(too_long("2 * --ab-max", 2 * bounds.ab_max as usize, bounds.binary_cap));
    }
    if selected(args.motzkin) && bounds.n_max > bounds.ternary_cap {
        return Err(too_long("--n-max", bounds.n_max, bounds.ternary_cap));
    }

    type Check = fn(&Bounds) -> verify::Outcome;
    let checks: [(&str, bool, Check); 5] = [
        ("pascal", args.pascal, verify::pascal_identities),
        ("two-choice", args.two_choice, verify::two_choice),
        ("km", args.km, verify::km_routes),
        ("motzkin", args.motzkin, verify::motzkin),
        ("infinite", args.infinite, verify::infinite),
    ];
    for (name, flag, check) in checks {
        if !selected(flag) {
            continue;
        }
        match check(&bounds) {
            Ok(cases) => writeln!(out, "{name}: ok ({cases} cases)")?,
            Err(m) => return Err(Failure::Mismatch(m.to_string())),
        }
    }
    Ok(())
}

fn generate(
    generator: Generator,
    m: Option<usize>,
    d: Option<usize>,
    y0: usize,
    count: usize,
) -> std::result::Result<Vec<BigInt>, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("this generator needs {flag}")))
    };
    let terms = match generator {
        Generator::Corridor => corridor::corridor_count_sequence(need(m, "--m")?, count - 1, y0)?,
        Generator::Infinite => (0..count)
            .map(|n| corridor::infinite_corridor_count(n, y0))
            .collect(),
        Generator::Motzkin => {
            let d = need(d, "--d")?;
            (0..count)
                .map(|n| corridor::motzkin_corridor_count(d, n, y0))
                .collect::<Result<_, _>>()?
        }
        Generator::KmDiag => {
            let m = need(m, "--m")?;
            (0..count).map(|n| km::km_diagonal_sum(n, m)).collect()
        }
        Generator::RangeSeq => {
            let d = need(d, "--d")?;
            (0..count)
                .map(|n| pascal::row_extrema(d, n, y0).map(|e| e.range))
                .collect::<Result<_, _>>()?
        }
    };
    Ok(terms)
}

fn run_oeis_compare(
    path: &Path,
    generator: Generator,
    m: Option<usize>,
    d: Option<usize>,
    y0: usize,
    min_terms: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let bfile = BFile::read(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))??;
    let Some(max_index) = bfile.max_index() else {
        return Err(Failure::Usage(format!("{} has no data lines", path.display())));
    };
    // enough terms to cover every b-file index under the widest offset
    let count = (max_index + 3).max(1) as usize;
    let generated = generate(generator, m, d, y0, count)?;
    match bfile.align(&generated) {
        Some(a) if a.compared >= min_terms => {
            writeln!(out, "match offset={} terms={}", a.offset, a.compared)?;
            Ok(())
        }
        Some(a) => Err(Failure::Mismatch(format!(
            "match offset={} but only {} terms overlap (need {min_terms})",
            a.offset, a.compared
        ))),
        None => Err(Failure::Mismatch(format!(
            "no match against {} at any offset in -2..=2",
            path.display()
        ))),
    }
}
