//! `cycpres`: classify, construct, verify and sweep groups of type M.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cycpres::classify::{fix_order, fixed_point_free, ClassifyError, ParamsM};
use cycpres::metastruct::{family_params, gnkl_analyze, Family, GnklParams};
use cycpres::oracle::verify::g_presentation;
use cycpres::oracle::{
    cross_verify, cyclic_group_order, fixed_coset_counts, group_order, shift_model_fix_order, todd_coxeter_with,
    verify_example_one, verify_family, verify_gnkl, CheckStatus, EnumOptions, VerificationReport, VerifyConfig,
    DEFAULT_ELEMENT_CAP, DEFAULT_MAX_COSETS,
};
use cycpres::par::Execution;
use cycpres::record::{Record, RecordOptions, DEFAULT_DIGIT_BUDGET};
use cycpres::sweep::{run_sweep, write_catalog, Format, Span, SweepSpec};
use cycpres::words::{e_presentation, shift_extension, type_m_word, CyclicPresentation};

#[derive(Parser)]
#[command(name = "cycpres", version, about = "Cyclically presented groups of type M")]
struct Cli {
    /// Coset table rows held at once by the enumerator.
    #[arg(long, global = true, env = "CYCPRES_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
    /// Largest group order given a regular representation.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    element_cap: usize,
    /// Output format; `verify` prints text unless this is given.
    #[arg(long, global = true, value_enum)]
    format: Option<OutFormat>,
    /// Run the oracles on each classified tuple.
    #[arg(long, global = true)]
    verify: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Process sweep tuples on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one tuple and print its record.
    Classify(Tuple),
    /// Print the word, presentations and optionally enumerated orders.
    Construct(ConstructArgs),
    /// Cross-check predictions against the oracles.
    Verify(VerifyArgs),
    /// Classify every valid tuple in a parameter grid.
    Sweep(SweepArgs),
    /// Parameters and metacyclic structure of a named family.
    Families(FamilyArgs),
    /// Fixed-point counts of every shift power, by formula and by oracle.
    Fixpoints(Tuple),
}

#[derive(Args, Clone, Copy)]
#[command(allow_negative_numbers = true)]
struct Tuple {
    #[arg(short = 'r')]
    r: i64,
    #[arg(short = 'n')]
    n: i64,
    #[arg(short = 's')]
    s: i64,
    #[arg(short = 'f')]
    f: i64,
    #[arg(short = 'A')]
    a: i64,
}

impl Tuple {
    fn params(&self) -> Result<ParamsM, ClassifyError> {
        ParamsM::new(self.r, self.n, self.s, self.f, self.a)
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ConstructArgs {
    #[command(flatten)]
    tuple: Tuple,
    /// Enumerate |E| and |G| under the coset cap.
    #[arg(long)]
    enumerate: bool,
    /// Print the coset table of `<t>` in E instead of JSON.
    #[arg(long)]
    dump_table: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Example1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    P,
    R,
    F,
    H,
    F4,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(short = 'r')]
    r: Option<i64>,
    #[arg(short = 'n')]
    n: Option<i64>,
    #[arg(short = 's')]
    s: Option<i64>,
    #[arg(short = 'k')]
    k: Option<i64>,
    #[arg(short = 'l')]
    l: Option<i64>,
    #[arg(long = "h")]
    h: Option<i64>,
    #[arg(short = 'f')]
    f: Option<i64>,
}

impl FamilyArgs {
    fn family(&self) -> Result<Family> {
        let need = |v: Option<i64>, name: &str| v.with_context(|| format!("family requires -{name}"));
        let (r, n) = (need(self.r, "r")?, need(self.n, "n")?);
        Ok(match self.family {
            FamilyName::P => Family::P {
                r,
                n,
                l: need(self.l, "l")?,
                s: need(self.s, "s")?,
                f: need(self.f, "f")?,
            },
            FamilyName::R => Family::R {
                r,
                n,
                k: need(self.k, "k")?,
                h: self.h.context("family requires --h")?,
            },
            FamilyName::F => Family::F { r, n, k: need(self.k, "k")? },
            FamilyName::H => Family::H { r, n, s: need(self.s, "s")? },
            FamilyName::F4 => Family::F4 {
                r,
                n,
                k: need(self.k, "k")?,
                s: need(self.s, "s")?,
            },
        })
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    #[arg(long, value_enum, conflicts_with_all = ["family", "gnkl"])]
    preset: Option<Preset>,
    #[arg(long, value_enum, conflicts_with = "gnkl")]
    family: Option<FamilyName>,
    /// Verify `G_n(x_0 x_k x_l)` from -n, -k, -l.
    #[arg(long)]
    gnkl: bool,
    #[arg(short = 'r')]
    r: Option<i64>,
    #[arg(short = 'n')]
    n: Option<i64>,
    #[arg(short = 's')]
    s: Option<i64>,
    #[arg(short = 'f')]
    f: Option<i64>,
    #[arg(short = 'A')]
    a: Option<i64>,
    #[arg(short = 'k')]
    k: Option<i64>,
    #[arg(short = 'l')]
    l: Option<i64>,
    #[arg(long = "h")]
    h: Option<i64>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SweepArgs {
    /// Range of n, as `lo..hi` (inclusive) or a single value.
    #[arg(long, allow_hyphen_values = true)]
    n: Span,
    #[arg(long, allow_hyphen_values = true)]
    r: Span,
    #[arg(long, allow_hyphen_values = true)]
    s: Span,
    /// Fixed f; every admissible residue when omitted.
    #[arg(short = 'f')]
    f: Option<i64>,
    /// Fixed A; every residue when omitted.
    #[arg(short = 'A')]
    a: Option<i64>,
    /// Digits of μ above which a record carries a warning.
    #[arg(long, default_value_t = DEFAULT_DIGIT_BUDGET)]
    digit_budget: usize,
}

/// Reported failures that map to a specific exit status.
#[derive(Debug)]
enum Exit {
    Invalid(ClassifyError),
    Failed,
    AllSkipped,
}

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exit::Invalid(e) => write!(f, "{e}"),
            Exit::Failed => f.write_str("verification failed"),
            Exit::AllSkipped => f.write_str("every oracle check hit a cap; raise --max-cosets or --element-cap"),
        }
    }
}

impl std::error::Error for Exit {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Exit>() {
                Some(Exit::Invalid(_)) => ExitCode::from(2),
                Some(Exit::Failed) => ExitCode::from(1),
                Some(Exit::AllSkipped) => ExitCode::from(3),
                None => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let cfg = VerifyConfig {
        max_cosets: cli.max_cosets,
        element_cap: cli.element_cap,
        ..VerifyConfig::default()
    };
    let mut out = output(cli.out.as_ref())?;
    match &cli.command {
        Command::Classify(t) => {
            let p = t.params().map_err(Exit::Invalid)?;
            let opts = RecordOptions {
                digit_budget: DEFAULT_DIGIT_BUDGET,
                verify: cli.verify.then_some(cfg),
            };
            let rec = Record::build(&p, &opts);
            match cli.format {
                Some(OutFormat::Csv) => write_catalog(&[rec], Format::Csv, &mut out)?,
                _ => write_json(&mut out, &rec)?,
            }
        }
        Command::Construct(c) => construct(c, &cfg, &mut out)?,
        Command::Verify(v) => {
            let report = verify(v, &cfg)?;
            match cli.format {
                Some(OutFormat::Json) => write_json(&mut out, &report)?,
                _ => writeln!(out, "{report}")?,
            }
            out.flush()?;
            if report.count(CheckStatus::Fail) > 0 {
                return Err(Exit::Failed.into());
            }
            if report.all_capped() {
                return Err(Exit::AllSkipped.into());
            }
        }
        Command::Sweep(a) => {
            let spec = SweepSpec {
                n: a.n,
                r: a.r,
                s: a.s,
                f: a.f,
                a: a.a,
                record: RecordOptions {
                    digit_budget: a.digit_budget,
                    verify: cli.verify.then_some(cfg),
                },
                execution: if cli.sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
            };
            let format = match cli.format {
                Some(OutFormat::Csv) => Format::Csv,
                _ => Format::Json,
            };
            write_catalog(&run_sweep(&spec), format, &mut out)?;
        }
        Command::Families(a) => {
            let st = family_params(&a.family()?)?;
            write_json(&mut out, &st)?;
        }
        Command::Fixpoints(t) => {
            let p = t.params().map_err(Exit::Invalid)?;
            fixpoints(&p, &cfg, cli.format, &mut out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct Construction {
    params: ParamsM,
    word: String,
    presentation_g: String,
    presentation_e: String,
    shift_extension: String,
    /// Enumerated orders; null when not requested or over the cap.
    order_e: Option<String>,
    order_g: Option<String>,
}

fn construct(c: &ConstructArgs, cfg: &VerifyConfig, out: &mut dyn Write) -> Result<()> {
    let p = c.tuple.params().map_err(Exit::Invalid)?;
    let e = e_presentation(p.r(), p.n(), p.s(), p.a());
    let opts = EnumOptions::with_max(cfg.max_cosets);
    if c.dump_table {
        let table = todd_coxeter_with(&e, &[cycpres::words::Word::gen(cycpres::words::T)], &opts)?;
        out.write_all(table.dump().as_bytes())?;
        return Ok(());
    }
    let cp = CyclicPresentation::new(p.n() as u32, type_m_word(&p))?;
    let (order_e, order_g) = if c.enumerate {
        (
            group_order(&e, &opts).map(|o| o.to_string()),
            cyclic_group_order(&cp, &opts).map(|o| o.to_string()),
        )
    } else {
        (None, None)
    };
    let construction = Construction {
        params: p,
        word: type_m_word(&p).to_string(),
        presentation_g: g_presentation(&p).to_string(),
        presentation_e: e.to_string(),
        shift_extension: shift_extension(&cp).to_string(),
        order_e,
        order_g,
    };
    write_json(out, &construction)
}

fn verify(v: &VerifyArgs, cfg: &VerifyConfig) -> Result<VerificationReport> {
    if v.preset == Some(Preset::Example1) {
        return Ok(verify_example_one(cfg));
    }
    if let Some(name) = v.family {
        let fam = FamilyArgs {
            family: name,
            r: v.r,
            n: v.n,
            s: v.s,
            k: v.k,
            l: v.l,
            h: v.h,
            f: v.f,
        };
        return Ok(verify_family(&fam.family()?, cfg));
    }
    if v.gnkl {
        let (Some(n), Some(k), Some(l)) = (v.n, v.k, v.l) else {
            bail!("--gnkl requires -n, -k and -l");
        };
        let q = GnklParams::new(n, k, l)?;
        gnkl_analyze(&q)?;
        return Ok(verify_gnkl(&q, cfg));
    }
    let (Some(r), Some(n), Some(s), Some(f), Some(a)) = (v.r, v.n, v.s, v.f, v.a) else {
        bail!("verify needs a tuple (-r -n -s -f -A), --family, --gnkl or --preset");
    };
    let p = ParamsM::new(r, n, s, f, a).map_err(Exit::Invalid)?;
    Ok(cross_verify(&p, cfg))
}

#[derive(Serialize)]
struct FixRow {
    j: i64,
    formula: String,
    fixed_point_free: bool,
    /// Null when the group is infinite or over the cap.
    fixed_cosets: Option<String>,
    /// Null outside `(r,s) = (n,A) = 1`, `μ ≠ 0`.
    shift_model: Option<String>,
}

fn fixpoints(p: &ParamsM, cfg: &VerifyConfig, format: Option<OutFormat>, out: &mut dyn Write) -> Result<()> {
    let counts = fixed_coset_counts(p, &EnumOptions::with_max(cfg.max_cosets)).ok();
    let mut rows = Vec::new();
    for j in 0..p.n() {
        rows.push(FixRow {
            j,
            formula: fix_order(p, j)?.to_string(),
            fixed_point_free: fixed_point_free(p, j)?,
            fixed_cosets: counts.as_ref().map(|c| c[j as usize].to_string()),
            shift_model: shift_model_fix_order(p, j).ok().map(|o| o.to_string()),
        });
    }
    match format {
        Some(OutFormat::Csv) => {
            writeln!(out, "j,formula,fixed_point_free,fixed_cosets,shift_model")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.j,
                    r.formula,
                    r.fixed_point_free,
                    r.fixed_cosets.as_deref().unwrap_or(""),
                    r.shift_model.as_deref().unwrap_or("")
                )?;
            }
            Ok(())
        }
        _ => write_json(out, &rows),
    }
}
