//! Command-line front end. Each verb parses its inputs, calls the library
//! and prints records; no mathematics happens here.
//!
//! Machine format prints one record per line as space-separated
//! `key=value` pairs. Lists are `;`-separated, matrices are `;`-separated
//! rows of `,`-separated entries, and absent values or empty lists print
//! as `-`.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::blocks::{block_partition, content};
use crate::bn::build_bn;
use crate::error::{Error, Result};
use crate::oracle::{regime_locus, SweepGrid};
use crate::params::{KappaInput, ParamScheme};
use crate::simples::simple_count;
use crate::structure::{
    block_structure, check_block_prediction, classify_kappa, classify_regime, determinant,
    hecke_dimension_audit, RegimeReport,
};

#[derive(Debug, Parser)]
#[command(
    name = "ariki-koike",
    version,
    about = "Simple modules and blocks of Ariki-Koike algebras"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count simple modules and list the labels with D^λ = 0.
    CountSimples(ParamArgs),
    /// Group Specht modules into blocks by residue content.
    Blocks(ParamArgs),
    /// Detect the almost-semisimple regime.
    Classify(ParamArgs),
    /// Decomposition, Cartan, Hom and KZ data of the exceptional block.
    BlockStructure(ParamArgs),
    /// Structure constants of the basic algebra B_n.
    BnAlgebra {
        #[arg(long)]
        n: usize,
    },
    /// Cross-check fast path, oracle and the regime condition set over a grid.
    Sweep {
        /// e.g. `m=1..3;n=2..4;e=0..9;shift=8`
        #[arg(long)]
        grid: Option<String>,
    },
    /// Compare the block-dimension sum with m^n n!.
    Audit(ParamArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: usize,
    /// `e=<int>;class=<c1,..>;shift=<s1,..>`
    #[arg(long, conflicts_with = "kappa")]
    pub scheme: Option<String>,
    /// `kappa00=<p/q>;kappa=<p1/q1,..>`
    #[arg(long)]
    pub kappa: Option<String>,
}

enum Resolved {
    Scheme(ParamScheme),
    Kappa(KappaInput, ParamScheme),
}

impl Resolved {
    fn scheme(&self) -> &ParamScheme {
        match self {
            Resolved::Scheme(s) | Resolved::Kappa(_, s) => s,
        }
    }
}

impl ParamArgs {
    fn resolve(&self) -> Result<Resolved> {
        if let Some(text) = &self.kappa {
            let k = KappaInput::parse_with(text, self.m, Some(self.n))?;
            let scheme = crate::params::scheme_from_kappa(&k);
            return Ok(Resolved::Kappa(k, scheme));
        }
        let scheme = match (&self.scheme, self.m) {
            (Some(text), _) => text.parse::<ParamScheme>()?,
            (None, Some(m)) if m >= 1 => ParamScheme::generic(m),
            _ => return Err(Error::InvalidInput("give --scheme, --kappa or --m".into())),
        };
        if let Some(m) = self.m {
            if m != scheme.m() {
                return Err(Error::InvalidInput(format!(
                    "--m {m} but the scheme has {} parameters",
                    scheme.m()
                )));
            }
        }
        Ok(Resolved::Scheme(scheme))
    }
}

struct Record(Vec<(&'static str, String)>);

impl Record {
    fn new(kind: &str) -> Self {
        Record(vec![("record", kind.to_string())])
    }

    fn put(mut self, key: &'static str, value: impl Display) -> Self {
        self.0.push((key, value.to_string()));
        self
    }
}

fn list<T: Display>(items: &[T]) -> String {
    if items.is_empty() {
        return "-".to_string();
    }
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn csv<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn matrix<T: Display>(rows: &[Vec<T>]) -> String {
    rows.iter().map(|r| csv(r)).collect::<Vec<_>>().join(";")
}

fn opt<T: Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn emit(out: &mut dyn Write, format: Format, records: &[Record]) -> std::io::Result<()> {
    match format {
        Format::Machine => {
            for rec in records {
                let line: Vec<String> = rec.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Format::Table => {
            for (idx, rec) in records.iter().enumerate() {
                if idx > 0 {
                    writeln!(out)?;
                }
                let width = rec.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &rec.0 {
                    writeln!(out, "{k:<width$}  {v}")?;
                }
            }
        }
    }
    Ok(())
}

fn regime_record(report: &RegimeReport, scheme: &ParamScheme) -> Record {
    Record::new("regime")
        .put("kind", report.kind)
        .put("m", report.m)
        .put("n", report.n)
        .put("scheme", scheme)
        .put("irreps", report.irreps)
        .put("simple_count", report.simple_count)
        .put("non_simple", list(&report.non_simple))
        .put("witness", opt(report.witness))
        .put("non_kleshchev", opt(report.non_kleshchev.as_ref()))
}

fn classify(params: &ParamArgs) -> Result<(RegimeReport, ParamScheme)> {
    match params.resolve()? {
        Resolved::Kappa(k, _) => {
            let (scheme, report) = classify_kappa(&k)?;
            Ok((report, scheme))
        }
        Resolved::Scheme(scheme) => Ok((classify_regime(&scheme, params.n)?, scheme)),
    }
}

fn execute(command: &Command) -> Result<(Vec<Record>, i32)> {
    let mut records = Vec::new();
    let mut status = 0;
    match command {
        Command::CountSimples(params) => {
            let resolved = params.resolve()?;
            let scheme = resolved.scheme();
            let (count, non_simple) = simple_count(scheme, params.n);
            records.push(
                Record::new("simples")
                    .put("m", scheme.m())
                    .put("n", params.n)
                    .put("scheme", scheme)
                    .put("irreps", count + non_simple.len())
                    .put("simple_count", count)
                    .put("non_simple", list(&non_simple)),
            );
        }
        Command::Blocks(params) => {
            let resolved = params.resolve()?;
            let scheme = resolved.scheme();
            let partition = block_partition(scheme, params.n)?;
            records.push(
                Record::new("blocks")
                    .put("m", scheme.m())
                    .put("n", params.n)
                    .put("scheme", scheme)
                    .put("count", partition.len())
                    .put("exceptional", opt(partition.exceptional_index)),
            );
            for (idx, block) in partition.blocks.iter().enumerate() {
                records.push(
                    Record::new("block")
                        .put("index", idx)
                        .put("size", block.len())
                        .put("content", content(scheme, &block[0]))
                        .put("members", list(block)),
                );
            }
        }
        Command::Classify(params) => {
            let (report, scheme) = classify(params)?;
            records.push(
                regime_record(&report, &scheme)
                    .put("r", opt(report.r))
                    .put("dim_L_chi", opt(report.dim_l_chi)),
            );
        }
        Command::BlockStructure(params) => {
            let (report, scheme) = classify(params)?;
            let bs = block_structure(&report, &scheme, params.n)?;
            check_block_prediction(&scheme, params.n, &bs)?;
            let cartan: Vec<Vec<i64>> = bs
                .cartan
                .iter()
                .map(|r| r.iter().map(|&x| x as i64).collect())
                .collect();
            records.push(regime_record(&report, &scheme));
            records.push(
                Record::new("block_structure")
                    .put("rank", bs.rank)
                    .put("specht_order", list(&bs.specht_order))
                    .put("simple_order", list(&bs.simple_order))
                    .put("decomposition", matrix(&bs.decomposition))
                    .put("cartan", matrix(&bs.cartan))
                    .put("det_cartan", determinant(&cartan))
                    .put("hom_dims", matrix(&bs.hom_dims))
                    .put("kz_dims", csv(&bs.kz_dims))
                    .put("pkz_multiplicities", csv(&bs.pkz_multiplicities))
                    .put("exterior_dims", csv(&bs.exterior_dims)),
            );
        }
        Command::BnAlgebra { n } => {
            if *n == 0 {
                return Err(Error::InvalidInput("B_n needs n >= 1".into()));
            }
            let alg = build_bn(*n);
            let labels: Vec<String> = alg.basis().iter().map(ToString::to_string).collect();
            records.push(
                Record::new("bn")
                    .put("n", n)
                    .put("dim", alg.dim())
                    .put("basis", csv(&labels))
                    .put("associative", alg.is_associative())
                    .put("radical_cube_zero", alg.radical_cube_is_zero()),
            );
            for a in 0..alg.dim() {
                for b in 0..alg.dim() {
                    let terms = alg.product(a, b);
                    if terms.is_empty() {
                        continue;
                    }
                    let result: Vec<String> = terms
                        .iter()
                        .map(|&(c, k)| {
                            if k == 1 {
                                labels[c].clone()
                            } else {
                                format!("{k}*{}", labels[c])
                            }
                        })
                        .collect();
                    records.push(
                        Record::new("product")
                            .put("left", &labels[a])
                            .put("right", &labels[b])
                            .put("result", result.join("+")),
                    );
                }
            }
        }
        Command::Sweep { grid } => {
            let grid: SweepGrid = match grid {
                Some(text) => text.parse()?,
                None => SweepGrid::default(),
            };
            let rows = regime_locus(&grid);
            let mut failures = [0usize; 3];
            for row in &rows {
                failures[0] += usize::from(!row.fast_agrees());
                failures[1] += usize::from(!row.characterisation_holds());
                failures[2] += usize::from(!row.ariki_agrees());
                records.push(
                    Record::new("point")
                        .put("m", row.scheme.m())
                        .put("n", row.n)
                        .put("scheme", &row.scheme)
                        .put("irreps", row.irreps)
                        .put("oracle_kind", row.oracle_kind)
                        .put("fast_kind", opt(row.fast_kind))
                        .put("simple_count", row.fast_count)
                        .put("conditions", row.conditions)
                        .put("ariki", row.ariki)
                        .put("agree", row.fast_agrees())
                        .put(
                            "error",
                            opt(row.fast_error.as_ref().map(|e| e.replace(' ', "_"))),
                        ),
                );
            }
            records.push(
                Record::new("summary")
                    .put("points", rows.len())
                    .put("disagreements", failures[0])
                    .put("condition_exceptions", failures[1])
                    .put("ariki_exceptions", failures[2]),
            );
            if failures.iter().any(|&f| f > 0) {
                status = 2;
            }
        }
        Command::Audit(params) => {
            let (report, scheme) = classify(params)?;
            let (total, expected) = hecke_dimension_audit(&report, &scheme, params.n)?;
            records.push(
                Record::new("audit")
                    .put("m", scheme.m())
                    .put("n", params.n)
                    .put("scheme", &scheme)
                    .put("total", total)
                    .put("expected", expected)
                    .put("passed", total == expected),
            );
            if total != expected {
                status = 2;
            }
        }
    }
    Ok((records, status))
}

/// Parses `args` (including the program name), runs the verb and returns
/// the exit status: 0 on success, 1 for invalid requests, 2 for internal
/// consistency failures.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                1
            };
        }
    };
    match execute(&cli.command) {
        Ok((records, status)) => {
            match emit(out, cli.format, &records) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    let _ = writeln!(err, "error: {e}");
                    return 1;
                }
                _ => {}
            }
            status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
