//! The `eppo` command line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{self, generate_fixture, Fixture};
use crate::criteria::{
    is_eppo_centralizer, is_eppo_commuting_pairs, is_eppo_exhaustive, is_eppo_sampled, is_eppo_sylow_centralizer,
    spectrum, spectrum_sampled, EppoVerdict, Spectrum, Status,
};
use crate::perm::format::write_group;
use crate::perm::Permutation;
use crate::records::{join, Records};
use crate::source::{self, LoadedGroup};
use crate::structure::{classify, Classification};
use crate::suite::{run_criterion, run_suite, SuiteConfig, SuiteReport};
use crate::{Error, Limits, Result};

#[derive(Parser, Debug)]
#[command(
    name = "eppo",
    version,
    about = "Decide, construct and classify groups whose element orders are all prime powers"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Largest group order that is enumerated element by element.
    #[arg(long = "threshold", global = true, default_value_t = Limits::default().enumeration, value_parser = clap::value_parser!(u64).range(1..))]
    pub enumeration_threshold: u64,
    /// Largest group order for the commuting-pairs predicate.
    #[arg(long = "pairwise-threshold", global = true, default_value_t = Limits::default().pairwise, value_parser = clap::value_parser!(u64).range(1..))]
    pub pairwise_threshold: u64,
    /// Random elements drawn for groups above the threshold; 0 refuses them.
    #[arg(long = "sample-n", global = true, default_value_t = 100_000)]
    pub sample_n: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl RunConfig {
    pub fn limits(&self) -> Limits {
        Limits { enumeration: self.enumeration_threshold, pairwise: self.pairwise_threshold }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every applicable EPPO predicate on one or more groups.
    Check {
        /// `file:<path>`, `catalog:<name>` or a constructor spec such as `metacyclic p=5 a=1 q=2 b=2`.
        #[arg(required = true, num_args = 1..)]
        source: Vec<String>,
    },
    /// Print the set of element orders.
    Spectrum {
        #[arg(required = true, num_args = 1..)]
        source: Vec<String>,
    },
    /// Decide EPPO status and the structural class.
    Classify {
        #[arg(required = true, num_args = 1..)]
        source: Vec<String>,
        /// Catalog fixture used to name simple groups.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        /// Skip the sampled checks.
        #[arg(long)]
        skip_sampled: bool,
        /// Catalog fixture to verify against instead of the bundled one.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Run only these criteria (determinism, 11, needs all of 1 to 10).
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<u8>,
    },
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// List the catalog with orders and degrees.
    List,
    /// Write generators of a catalog group in the group file format.
    Build {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify catalog orders and spectra.
    Verify {
        #[arg(long)]
        skip_sampled: bool,
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Regenerate the spectrum fixture by enumeration.
    Fixture {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command prints and how it exits.
struct Outcome {
    summary: Vec<String>,
    records: Records,
    /// 0 = EPPO or consistent, 1 = not EPPO or a failed check.
    code: u8,
}

impl Outcome {
    fn new() -> Self {
        Outcome { summary: Vec::new(), records: Records::new(), code: 0 }
    }
}

fn read_fixture(path: &Option<PathBuf>) -> Result<Fixture> {
    match path {
        None => Ok(Fixture::bundled()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|source| Error::Io { path: p.clone(), source })?;
            Ok(Fixture::parse(&text))
        }
    }
}

fn refuse_unsampled(g: &LoadedGroup, cfg: &RunConfig) -> Result<()> {
    if cfg.sample_n == 0 {
        return Err(Error::ThresholdExceeded { order: g.order(), threshold: cfg.enumeration_threshold });
    }
    Ok(())
}

fn above_threshold(g: &LoadedGroup, cfg: &RunConfig) -> bool {
    g.order() > cfg.enumeration_threshold
}

fn verdict_line(v: &EppoVerdict<String>) -> String {
    let mut s = format!("{:<18} {}", v.method.name(), v.status.name());
    if let Some(w) = &v.witness {
        if let Some(o) = w.composite_order() {
            s.push_str(&format!(" (element of order {o})"));
        } else {
            s.push_str(" (witness in records)");
        }
    }
    s
}

fn spectrum_line(s: &Spectrum<String>) -> String {
    let mode = if s.is_sampled() { " (sampled)" } else { "" };
    format!("spectrum {{{}}}{mode}", join(&s.orders))
}

fn check_one(label: &str, cfg: &RunConfig, out: &mut Outcome) -> Result<()> {
    let g = source::load(label)?;
    let limits = cfg.limits();
    let prefix = g.label.clone();
    out.records.push(format!("{prefix}.order"), g.order());
    out.summary.push(format!("{}: order {}", g.label, g.order()));
    let mut verdicts: Vec<EppoVerdict<String>> = Vec::new();
    let spec: Spectrum<String>;
    if above_threshold(&g, cfg) {
        refuse_unsampled(&g, cfg)?;
        let perm = g.perm()?;
        spec = g.describe_spectrum(spectrum_sampled(perm, cfg.sample_n, cfg.seed));
        verdicts.push(g.describe_verdict(is_eppo_sampled(perm, cfg.sample_n, cfg.seed)));
    } else {
        spec = match g.table_group() {
            Some(t) => spectrum(t, &limits)?.map(|e| e.to_string()),
            None => g.describe_spectrum(spectrum(g.perm()?, &limits)?),
        };
        verdicts.push(match g.table_group() {
            Some(t) => is_eppo_exhaustive(t, &limits)?.map(|e| e.to_string()),
            None => g.describe_verdict(is_eppo_exhaustive(g.perm()?, &limits)?),
        });
        let table = g.perm()?.table(&limits)?;
        if g.order() <= limits.pairwise {
            verdicts.push(g.describe_verdict(is_eppo_commuting_pairs(&table, &limits)?));
        }
        verdicts.push(g.describe_verdict(is_eppo_centralizer(&table)));
        verdicts.push(g.describe_verdict(is_eppo_sylow_centralizer(&table)));
    }
    out.summary.push(format!("  {}", spectrum_line(&spec)));
    spec.write(&mut out.records, &format!("{prefix}.spectrum"));
    for v in &verdicts {
        out.summary.push(format!("  {}", verdict_line(v)));
        v.write(&mut out.records, &format!("{prefix}.{}", v.method.name()));
    }
    let first = &verdicts[0];
    if verdicts.iter().any(|v| v.status != first.status) {
        return Err(Error::Precondition(format!("{}: predicates disagree", g.label)));
    }
    let verdict = match first.status {
        Status::Eppo => "EPPO",
        Status::SampledConsistent => "sampled-consistent (no composite order among the samples)",
        Status::NotEppo => "not EPPO",
    };
    out.summary.push(format!("  verdict: {verdict}"));
    out.records.push(format!("{prefix}.verdict"), first.status.name());
    if first.is_not_eppo() {
        out.code = 1;
    }
    Ok(())
}

fn spectrum_one(label: &str, cfg: &RunConfig, out: &mut Outcome) -> Result<()> {
    let g = source::load(label)?;
    let limits = cfg.limits();
    let spec = if above_threshold(&g, cfg) {
        refuse_unsampled(&g, cfg)?;
        g.describe_spectrum(spectrum_sampled(g.perm()?, cfg.sample_n, cfg.seed))
    } else {
        match g.table_group() {
            Some(t) => spectrum(t, &limits)?.map(|e| e.to_string()),
            None => g.describe_spectrum(spectrum(g.perm()?, &limits)?),
        }
    };
    out.summary.push(format!("{}: order {}, {}", g.label, g.order(), spectrum_line(&spec)));
    if spec.is_sampled() {
        out.summary.push(format!(
            "  sampled: {} random elements, seed {}; a subset of the true spectrum",
            cfg.sample_n, cfg.seed
        ));
    }
    out.records.push(format!("{}.order", g.label), g.order());
    spec.write(&mut out.records, &format!("{}.spectrum", g.label));
    if !spec.all_prime_power() {
        out.code = 1;
    }
    Ok(())
}

fn classify_one(label: &str, cfg: &RunConfig, fixture: &Fixture, out: &mut Outcome) -> Result<()> {
    let g = source::load(label)?;
    if above_threshold(&g, cfg) {
        refuse_unsampled(&g, cfg)?;
    }
    let record = classify(g.perm()?, &cfg.limits(), cfg.sample_n, cfg.seed, fixture)?;
    let detail = match &record.verdict {
        Classification::SimpleEppo { name } => format!(" {name}"),
        Classification::SolvableEppo { series, .. } => format!(" chief factors [{}]", join(&series.factors)),
        Classification::NotEppo { witness } => {
            witness.composite_order().map(|o| format!(" (element of order {o})")).unwrap_or_default()
        }
        Classification::SampledConsistent { candidate: Some(c) } => format!(" (order matches {c})"),
        _ => String::new(),
    };
    out.summary.push(format!("{}: {}{detail}", g.label, record.verdict.name()));
    let mut records = Records::new();
    record.write(&mut records, &g.label);
    // Witness elements of table groups read better as pairs.
    if let (Some(t), Classification::NotEppo { witness }) = (g.table_group(), &record.verdict) {
        let shown = witness.clone().map(|p: Permutation| t.element_of(&p).to_string());
        shown.write(&mut records, &format!("{}.witness", g.label));
    }
    out.records.extend(records);
    if matches!(record.verdict, Classification::NotEppo { .. }) {
        out.code = 1;
    }
    Ok(())
}

fn suite_config(cfg: &RunConfig, skip_sampled: bool, fixture: &Option<PathBuf>) -> Result<SuiteConfig> {
    Ok(SuiteConfig {
        limits: cfg.limits(),
        samples: cfg.sample_n,
        seed: cfg.seed,
        skip_sampled: skip_sampled || cfg.sample_n == 0,
        fixture: read_fixture(fixture)?,
    })
}

fn report_outcome(report: &SuiteReport, out: &mut Outcome) {
    out.summary.extend(report.criteria.iter().map(|c| c.to_string()));
    out.records = report.records();
    if let Some(first) = report.failed().next() {
        let names: Vec<String> = report.failed().map(|c| format!("{} ({})", c.id, c.name)).collect();
        out.summary.push(format!("FAILED: criterion {}", names.join(", criterion ")));
        for f in &first.failures {
            out.summary.push(format!("  {f}"));
        }
        out.code = 1;
    } else {
        out.summary.push(format!("all {} criteria passed (seed {})", report.criteria.len(), report.seed));
    }
}

fn verify(
    cfg: &RunConfig,
    skip_sampled: bool,
    fixture: &Option<PathBuf>,
    only: &[u8],
    out: &mut Outcome,
) -> Result<()> {
    let suite = suite_config(cfg, skip_sampled, fixture)?;
    let report = if only.is_empty() {
        let text = cfg.format == Format::Text;
        run_suite(&suite, |c| {
            if text {
                eprintln!("{c}");
            }
        })
    } else {
        let mut criteria = Vec::new();
        for &id in only {
            if id == 11 {
                let first: Vec<_> = (1..=10).filter_map(|i| run_criterion(i, &suite)).collect();
                criteria.push(crate::suite::determinism(&first, &suite));
            } else {
                criteria
                    .push(run_criterion(id, &suite).ok_or_else(|| Error::Precondition(format!("no criterion {id}")))?);
            }
        }
        SuiteReport { seed: suite.seed, samples: suite.samples, skip_sampled: suite.skip_sampled, criteria }
    };
    report_outcome(&report, out);
    Ok(())
}

fn catalog_command(cmd: &CatalogCommand, cfg: &RunConfig, out: &mut Outcome) -> Result<()> {
    match cmd {
        CatalogCommand::List => {
            for e in catalog::entries() {
                out.summary.push(format!("{:<10} order {:>9}  degree {:>5}", e.name, e.expected_order, e.degree));
                out.records.push(format!("{}.order", e.name), e.expected_order);
                out.records.push(format!("{}.degree", e.name), e.degree);
            }
        }
        CatalogCommand::Build { name, out: path } => {
            let entry = catalog::lookup(name)?;
            let text = write_group(&entry.build()?, Some(&entry.name));
            match path {
                Some(p) => {
                    fs::write(p, &text).map_err(|source| Error::Io { path: p.clone(), source })?;
                    out.summary.push(format!("wrote {} to {}", entry.name, p.display()));
                }
                None => {
                    print!("{text}");
                    return Ok(());
                }
            }
        }
        CatalogCommand::Verify { skip_sampled, fixture } => {
            let suite = suite_config(cfg, *skip_sampled, fixture)?;
            let c = run_criterion(1, &suite).expect("criterion 1");
            let report = SuiteReport {
                seed: suite.seed,
                samples: suite.samples,
                skip_sampled: suite.skip_sampled,
                criteria: vec![c],
            };
            report_outcome(&report, out);
        }
        CatalogCommand::Fixture { out: path } => {
            let text = generate_fixture(&cfg.limits())?;
            match path {
                Some(p) => fs::write(p, &text).map_err(|source| Error::Io { path: p.clone(), source })?,
                None => print!("{text}"),
            }
            return Ok(());
        }
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut Outcome) -> Result<()> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Check { source } => {
            for s in source::split_sources(source) {
                check_one(&s, cfg, out)?;
            }
        }
        Command::Spectrum { source } => {
            for s in source::split_sources(source) {
                spectrum_one(&s, cfg, out)?;
            }
        }
        Command::Classify { source, fixture } => {
            let fixture = read_fixture(fixture)?;
            for s in source::split_sources(source) {
                classify_one(&s, cfg, &fixture, out)?;
            }
        }
        Command::Verify { skip_sampled, fixture, criterion } => verify(cfg, *skip_sampled, fixture, criterion, out)?,
        Command::Catalog(cmd) => catalog_command(cmd, cfg, out)?,
    }
    Ok(())
}

/// Parses arguments, runs the command and maps the result to the exit code
/// contract: 0 EPPO / passed, 1 not EPPO / failed, 2 error.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = Outcome::new();
    let result = execute(&cli, &mut out);
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    if !out.records.is_empty() || !out.summary.is_empty() {
        let mut records = std::mem::take(&mut out.records);
        records.push("config.seed", cli.config.seed);
        records.push("config.sample_n", cli.config.sample_n);
        records.push("config.threshold", cli.config.enumeration_threshold);
        records.push("config.pairwise_threshold", cli.config.pairwise_threshold);
        let _ = match cli.config.format {
            Format::Text => {
                let mut text = out.summary.join("\n");
                text.push_str(&format!("\nseed: {}\n", cli.config.seed));
                w.write_all(text.as_bytes())
            }
            Format::Records => w.write_all(records.to_string().as_bytes()),
        };
    }
    match result {
        Ok(()) => ExitCode::from(out.code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
