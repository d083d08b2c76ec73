//! `arczeta` command-line interface.
//!
//! Exit codes: 0 success, 1 malformed input, 2 unsupported computation,
//! 3 a verification reported FAIL.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use arczeta_core::classify::{classify, BrieskornClass};
use arczeta_core::jets::{chi_beta, count_jets, zeta_direct, GermSpec, JetError, Variant};
use arczeta_core::ring::{ZetaSeries, DEFAULT_ORDER};
use arczeta_core::vpoly::{run_script, BetaScript};
use arczeta_core::zeta::{
    compare_invariants, dl_naive, dl_sign, ts_convolve, Comparison, Invariants, ResolutionDatum, ZetaError,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "arczeta", version, about = "Real motivic zeta functions of function germs")]
pub struct Cli {
    /// Truncation order of every series.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: u32,
    /// Which zeta function to compute.
    #[arg(long, global = true, value_enum, default_value_t = SignArg::Naive)]
    pub sign: SignArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Naive,
    Plus,
    Minus,
}

impl From<SignArg> for Variant {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Naive => Variant::Naive,
            SignArg::Plus => Variant::Plus,
            SignArg::Minus => Variant::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zeta function of a germ by direct decomposition of arc spaces.
    ZetaGerm {
        #[arg(long)]
        germ: String,
    },
    /// Zeta function from a resolution datum (JSON).
    ZetaRes {
        #[arg(long, value_name = "FILE")]
        datum: PathBuf,
    },
    /// Evaluate a script of virtual Poincaré polynomial definitions (JSON).
    Beta {
        #[arg(long, value_name = "FILE")]
        script: PathBuf,
    },
    /// Recover the exponents and signs of a two-variable Brieskorn germ.
    Classify {
        #[arg(long, conflicts_with = "series_file")]
        germ: Option<String>,
        /// Naive, plus and minus series, in this order.
        #[arg(long = "series-file", value_name = "FILE", num_args = 3)]
        series_file: Vec<PathBuf>,
    },
    /// Thom–Sebastiani convolution of the naive zetas of two same-sign germs.
    Ts {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Compare jet counts over finite fields with beta(chi_n) evaluated at q.
    Oracle {
        #[arg(long)]
        germ: String,
        #[arg(long = "n")]
        n: u32,
        #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
        q: Vec<u64>,
    },
    /// Look for a coefficient that tells two germs apart.
    Compare {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Compare the naive zeta functions only.
        #[arg(long)]
        naive_only: bool,
    },
}

/// Failure classes, mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Unsupported(anyhow::Error),
    Check(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Unsupported(_) => 2,
            Failure::Check(_) => 3,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<JetError> for Failure {
    fn from(e: JetError) -> Self {
        match e {
            JetError::Unsupported { .. } | JetError::TooLarge { .. } => Failure::Unsupported(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

impl From<ZetaError> for Failure {
    fn from(e: ZetaError) -> Self {
        match e {
            ZetaError::Jet(j) => j.into(),
            ZetaError::Unsupported(_) => Failure::Unsupported(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

fn parse_germ(s: &str) -> Result<GermSpec, Failure> {
    s.parse::<GermSpec>().map_err(Failure::from)
}

fn read(path: &Path) -> Result<String, Failure> {
    Ok(fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?)
}

/// Reads a series stored either as JSON or in the text form (which needs
/// the truncation order).
fn read_series(path: &Path, order: u32) -> Result<ZetaSeries, Failure> {
    let text = read(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(anyhow::Error::from)
    } else {
        ZetaSeries::parse_text(text.trim(), order).map_err(anyhow::Error::from)
    };
    Ok(parsed.with_context(|| format!("series file {}", path.display()))?)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn emit_series(z: &ZetaSeries, format: Format) -> String {
    match format {
        Format::Text => format!("{z}\n"),
        Format::Json => json(z),
    }
}

fn invariants(g: &GermSpec, order: u32, with_signs: bool) -> Result<Invariants, Failure> {
    let sign = |v| -> Result<Option<ZetaSeries>, Failure> {
        Ok(if with_signs { Some(zeta_direct(g, order, v)?) } else { None })
    };
    Ok(Invariants {
        naive: zeta_direct(g, order, Variant::Naive)?,
        plus: sign(Variant::Plus)?,
        minus: sign(Variant::Minus)?,
    })
}

fn render_class(c: &BrieskornClass, format: Format) -> String {
    match format {
        Format::Text => c.to_string(),
        Format::Json => json(c),
    }
}

#[derive(Serialize)]
struct OracleRow {
    q: u64,
    count: String,
    beta_at_q: String,
    pass: bool,
}

#[derive(Serialize)]
struct OracleReport {
    germ: String,
    n: u32,
    beta: String,
    rows: Vec<OracleRow>,
}

/// Runs a parsed command and returns the text to emit.
pub fn execute(cli: &Cli) -> Result<String, Failure> {
    let order = cli.order;
    let variant = Variant::from(cli.sign);
    match &cli.command {
        Command::ZetaGerm { germ } => {
            let g = parse_germ(germ)?;
            Ok(emit_series(&zeta_direct(&g, order, variant)?, cli.format))
        }
        Command::ZetaRes { datum } => {
            let r = ResolutionDatum::from_json(&read(datum)?)
                .map_err(|e| Failure::Input(anyhow!(e).context(format!("datum {}", datum.display()))))?;
            let z = match variant.sign() {
                None => dl_naive(&r, order)?,
                Some(s) => dl_sign(&r, s, order)?,
            };
            Ok(emit_series(&z, cli.format))
        }
        Command::Beta { script } => {
            let s = BetaScript::from_json(&read(script)?)
                .with_context(|| format!("script {}", script.display()))?;
            let values = run_script(&s).map_err(|e| Failure::Input(e.into()))?;
            Ok(match cli.format {
                Format::Text => values
                    .values
                    .iter()
                    .map(|(n, b)| format!("{n} = {b}\n"))
                    .collect(),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row<'a> {
                        name: &'a str,
                        beta: String,
                    }
                    let rows: Vec<Row> = values
                        .values
                        .iter()
                        .map(|(name, b)| Row { name, beta: b.to_string() })
                        .collect();
                    json(&rows)
                }
            })
        }
        Command::Classify { germ, series_file } => {
            let class = match (germ, series_file.as_slice()) {
                (Some(g), []) => {
                    let inv = invariants(&parse_germ(g)?, order, true)?;
                    classify(&inv.naive, inv.plus.as_ref().unwrap(), inv.minus.as_ref().unwrap())
                }
                (None, [z, zp, zm]) => classify(
                    &read_series(z, order)?,
                    &read_series(zp, order)?,
                    &read_series(zm, order)?,
                ),
                _ => return Err(Failure::Input(anyhow!("classify needs --germ or three --series-file inputs"))),
            };
            Ok(render_class(&class, cli.format))
        }
        Command::Ts { left, right } => {
            let zf = zeta_direct(&parse_germ(left)?, order, Variant::Naive)?;
            let zg = zeta_direct(&parse_germ(right)?, order, Variant::Naive)?;
            let out = ts_convolve(&zf, &zg)?;
            Ok(match cli.format {
                Format::Text => format!("{}\n# assumption: {}\n", out.series, out.assumption),
                Format::Json => json(&out),
            })
        }
        Command::Oracle { germ, n, q } => {
            let g = parse_germ(germ)?;
            let beta = chi_beta(&g, *n)?;
            let mut rows = Vec::new();
            for &field in q {
                let count = count_jets(&g, *n, field)?;
                let at_q = beta
                    .eval_int(field as i64)
                    .map_err(|e| Failure::Input(e.into()))?;
                rows.push(OracleRow {
                    q: field,
                    count: count.to_string(),
                    pass: at_q == count.into(),
                    beta_at_q: at_q.to_string(),
                });
            }
            let all = rows.iter().all(|r| r.pass);
            let report = OracleReport {
                germ: g.to_string(),
                n: *n,
                beta: beta.to_string(),
                rows,
            };
            let text = match cli.format {
                Format::Text => {
                    let mut s = format!("germ {} n = {}: beta(chi_n) = {}\n", report.germ, report.n, report.beta);
                    for r in &report.rows {
                        s += &format!(
                            "q = {}: count {} beta(q) {} {}\n",
                            r.q,
                            r.count,
                            r.beta_at_q,
                            if r.pass { "PASS" } else { "FAIL" }
                        );
                    }
                    s
                }
                Format::Json => json(&report),
            };
            if all {
                Ok(text)
            } else {
                Err(Failure::Check(text))
            }
        }
        Command::Compare {
            left,
            right,
            naive_only,
        } => {
            let l = invariants(&parse_germ(left)?, order, !naive_only)?;
            let r = invariants(&parse_germ(right)?, order, !naive_only)?;
            let c = compare_invariants(&l, &r);
            Ok(match cli.format {
                Format::Json => json(&c),
                Format::Text => match c {
                    Comparison::Distinguished {
                        series,
                        index,
                        left,
                        right,
                    } => format!(
                        "distinguished by the {} zeta function at T^{index}: {left} vs {right}\n",
                        match series {
                            Variant::Naive => "naive",
                            Variant::Plus => "plus",
                            Variant::Minus => "minus",
                        }
                    ),
                    Comparison::NotDistinguished { order } => {
                        format!("not distinguished up to order {order} (this does not prove equivalence)\n")
                    }
                },
            })
        }
    }
}

/// Full entry point: parses `argv` (including the program name), runs the
/// command and writes to `out`/`err`. Returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = execute(&cli);
    let (text, code) = match result {
        Ok(text) => (text, 0),
        Err(Failure::Check(text)) => (text, 3),
        Err(f) => {
            let e = match &f {
                Failure::Input(e) | Failure::Unsupported(e) => e,
                Failure::Check(_) => unreachable!(),
            };
            let _ = writeln!(err, "error: {e:#}");
            return f.code();
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}
