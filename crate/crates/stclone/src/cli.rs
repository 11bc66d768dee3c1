//! The `stclone` command line: corpus ingestion, detection, reporting, and
//! the rating-study subcommands.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::corpus::{load_corpus, CorpusSpec, LanguageMap, LoadError, SourceFile};
use crate::detect::{detect, CorpusFile, DetectionConfig};
use crate::lang::LanguageId;
use crate::metrics::{compute_metrics, scatter_data, treemap_data, DetectionReport};
use crate::normalize::NormalizationOptions;
use crate::schema::{
    self, ClassRecord, ClonesFile, GroupSummaryRow, IccFile, LanguageRun, ReportFile,
    StudyPlanFile, VariableIcc, SCHEMA_VERSION,
};
use crate::select::{sample_study_set, ClassSummary, StrategyKind, StudyGroup};
use crate::stats::{aggregate_ratings, group_summary, icc3k, RatingSheet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNREADABLE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "stclone",
    version,
    about = "Type 1/2 clone detection for Structured Text and C/C++ with study tooling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect clones under one or more root directories.
    Detect(DetectArgs),
    /// Clone-study tooling over prior detect outputs.
    #[command(subcommand)]
    Study(StudyCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct DetectArgs {
    /// Root directory to scan (repeatable).
    #[arg(long = "root", required = true, value_name = "DIR")]
    roots: Vec<PathBuf>,
    /// Include glob over root-relative paths (repeatable; default all).
    #[arg(long, value_name = "GLOB")]
    include: Vec<String>,
    /// Exclude glob over root-relative paths (repeatable).
    #[arg(long, value_name = "GLOB")]
    exclude: Vec<String>,
    /// Normalization: none, identifier, literal, or identifier+literal.
    #[arg(long, default_value = "none", value_parser = parse_normalize)]
    normalize: NormalizationOptions,
    /// Minimum significant lines per clone.
    #[arg(long = "min-lines", default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    min_lines: u64,
    /// Allow overlapping clone blocks (default).
    #[arg(long = "allow-overlap", conflicts_with = "no_overlap")]
    allow_overlap: bool,
    /// Prune overlapping blocks within a file, longest first.
    #[arg(long = "no-overlap")]
    no_overlap: bool,
    /// Exclude punctuation-only lines (for example a lone `}`).
    #[arg(long = "ignore-punct-lines")]
    ignore_punct_lines: bool,
    /// Cap candidate seeds per repeated line text.
    #[arg(long = "seed-cap", value_name = "N")]
    seed_cap: Option<usize>,
    /// Stdout summary format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Artifact directory.
    #[arg(long = "out", default_value = "stclone-out", value_name = "DIR")]
    out: PathBuf,
    /// Fail on unreadable or non-UTF-8 files instead of skipping them.
    #[arg(long)]
    strict: bool,
    /// Extra extension mapping, e.g. `--language-map src=st` (repeatable).
    #[arg(long = "language-map", value_name = "EXT=LANG")]
    language_map: Vec<String>,
    /// Language for files whose extension is not mapped.
    #[arg(long = "language-default", value_name = "LANG")]
    language_default: Option<String>,
}

#[derive(Subcommand)]
enum StudyCommand {
    /// Assemble study groups from detect outputs.
    Sample(SampleArgs),
    /// Compute rating reliability (ICC) and group summaries.
    Icc(IccArgs),
}

#[derive(Args)]
struct SampleArgs {
    /// A clones.json produced by `detect` (repeatable, one per option).
    #[arg(long = "clones", required = true, value_name = "FILE")]
    clones: Vec<PathBuf>,
    /// Clones per group.
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Comma-separated strategies: random, lines, blocks, top-lines-desc.
    #[arg(long, default_value = "random,lines,blocks")]
    strategies: String,
    /// Seed for the random selection strategy.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Restrict the grid to these languages (comma-separated).
    #[arg(long, value_name = "LANGS")]
    languages: Option<String>,
    /// Restrict the grid to these options (comma-separated).
    #[arg(long, value_name = "OPTS")]
    options: Option<String>,
    /// Artifact directory.
    #[arg(long = "out", default_value = "stclone-out", value_name = "DIR")]
    out: PathBuf,
}

#[derive(Args)]
struct IccArgs {
    /// Ratings CSV with header clone_id,rater_id,variable,label.
    #[arg(long, value_name = "FILE")]
    ratings: PathBuf,
    /// studyplan.json for grouping summaries by (language, option, strategy).
    #[arg(long, value_name = "FILE")]
    plan: Option<PathBuf>,
    /// Significance level of the confidence interval.
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Artifact directory.
    #[arg(long = "out", default_value = "stclone-out", value_name = "DIR")]
    out: PathBuf,
}

fn parse_normalize(s: &str) -> Result<NormalizationOptions, String> {
    NormalizationOptions::parse(s)
        .ok_or_else(|| format!("expected none, identifier, literal, or identifier+literal, got {s:?}"))
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    init_thread_pool();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Detect(args) => run_detect(&args),
        Command::Study(StudyCommand::Sample(args)) => run_study_sample(&args),
        Command::Study(StudyCommand::Icc(args)) => run_study_icc(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}

/// `STCLONE_THREADS` caps worker parallelism.
fn init_thread_pool() {
    if let Ok(value) = std::env::var("STCLONE_THREADS") {
        if let Ok(threads) = value.trim().parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
        }
    }
}

fn write_artifact(dir: &Path, name: &str, bytes: &[u8]) -> Result<()> {
    fs::create_dir_all(dir)
        .with_context(|| format!("creating output directory {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn write_json<T: serde::Serialize>(dir: &Path, name: &str, value: &T) -> Result<()> {
    let mut json = serde_json::to_string_pretty(value)?;
    json.push('\n');
    write_artifact(dir, name, json.as_bytes())
}

fn run_detect(args: &DetectArgs) -> Result<i32> {
    let mut languages = LanguageMap::default();
    for spec in &args.language_map {
        match LanguageMap::parse_override(spec) {
            Ok((ext, lang)) => languages.set(&ext, lang),
            Err(message) => {
                eprintln!("error: --language-map {message}");
                return Ok(EXIT_USAGE);
            }
        }
    }
    if let Some(lang) = &args.language_default {
        match LanguageId::parse(lang) {
            Some(lang) => languages.default = Some(lang),
            None => {
                eprintln!("error: --language-default: unknown language {lang:?}");
                return Ok(EXIT_USAGE);
            }
        }
    }

    let spec = CorpusSpec {
        roots: args.roots.clone(),
        include: args.include.clone(),
        exclude: args.exclude.clone(),
        languages,
        strict: args.strict,
    };
    let outcome = match load_corpus(&spec) {
        Ok(outcome) => outcome,
        Err(e @ (LoadError::Root { .. } | LoadError::File { .. })) => {
            eprintln!("error: {e}");
            return Ok(EXIT_UNREADABLE);
        }
        Err(e @ LoadError::Pattern { .. }) => {
            eprintln!("error: {e}");
            return Ok(EXIT_USAGE);
        }
    };
    for warning in &outcome.warnings {
        eprintln!("warning: {warning}");
    }
    if outcome.files.is_empty() {
        eprintln!("warning: no eligible source files under the given roots");
    }

    let config = DetectionConfig {
        options: args.normalize,
        min_lines: args.min_lines as usize,
        allow_overlap: !args.no_overlap,
        ignore_punct_lines: args.ignore_punct_lines,
        seed_cap: args.seed_cap,
    };

    // Global file ids in path-sorted order; lexing is per-file parallel.
    let corpus: Vec<CorpusFile> = outcome
        .files
        .par_iter()
        .enumerate()
        .map(|(file_id, SourceFile { path, language, text })| {
            CorpusFile::from_source(file_id, path.clone(), *language, text, &config)
        })
        .collect();

    // Per-language partitions; fingerprints from different profiles are
    // never compared.
    let mut runs = Vec::new();
    let mut reports = Vec::new();
    let mut all_classes = Vec::new();
    for language in [LanguageId::Cpp, LanguageId::St] {
        let partition: Vec<CorpusFile> =
            corpus.iter().filter(|f| f.language == language).cloned().collect();
        if partition.is_empty() {
            continue;
        }
        let classes = detect(&partition, &config).unwrap_or_default();
        reports.push(compute_metrics(&classes, &partition, config.options));
        runs.push(LanguageRun {
            language,
            total_files: partition.len(),
            total_significant_lines: partition.iter().map(|f| f.lines.len()).sum(),
            classes: classes.iter().map(|c| ClassRecord::from_class(c, &partition)).collect(),
        });
        all_classes.extend(classes);
    }

    let clones = ClonesFile {
        schema_version: SCHEMA_VERSION,
        option: config.options.label().to_string(),
        min_lines: config.min_lines,
        allow_overlap: config.allow_overlap,
        ignore_punct_lines: config.ignore_punct_lines,
        runs,
    };
    let report = ReportFile { schema_version: SCHEMA_VERSION, reports: reports.clone() };
    write_json(&args.out, "clones.json", &clones)?;
    write_json(&args.out, "report.json", &report)?;
    write_artifact(
        &args.out,
        "scatter.csv",
        schema::scatter_csv(&scatter_data(&all_classes, &corpus)).as_bytes(),
    )?;
    write_artifact(
        &args.out,
        "treemap.csv",
        schema::treemap_csv(&treemap_data(&all_classes, &corpus)).as_bytes(),
    )?;

    print_summary(&reports, args.format)?;
    Ok(EXIT_OK)
}

fn print_summary(reports: &[DetectionReport], format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Text => {
            println!(
                "{:<8} {:<19} {:>17} {:>16} {:>17} {:>11} {:>16}",
                "Language",
                "Option",
                "Files with Clones",
                "Duplicated Lines",
                "Duplicated Blocks",
                "Total Files",
                "Total Sig. Lines"
            );
            for r in reports {
                let options =
                    NormalizationOptions::parse(&r.option).unwrap_or_default();
                println!(
                    "{:<8} {:<19} {:>17} {:>16} {:>17} {:>11} {:>16}",
                    r.language.display_name(),
                    options.display_label(),
                    r.files_with_clones,
                    r.duplicated_lines,
                    r.duplicated_blocks,
                    r.total_files,
                    r.total_significant_lines
                );
            }
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(reports)?),
        OutputFormat::Csv => {
            println!(
                "language,option,files_with_clones,duplicated_lines,duplicated_blocks,total_files,total_significant_lines"
            );
            for r in reports {
                println!(
                    "{},{},{},{},{},{},{}",
                    r.language,
                    r.option,
                    r.files_with_clones,
                    r.duplicated_lines,
                    r.duplicated_blocks,
                    r.total_files,
                    r.total_significant_lines
                );
            }
        }
    }
    Ok(())
}

fn parse_strategies(spec: &str) -> Result<Vec<StrategyKind>> {
    let mut strategies = Vec::new();
    for part in spec.split(',') {
        let kind = StrategyKind::parse(part)
            .ok_or_else(|| anyhow!("unknown strategy {part:?} in --strategies"))?;
        if !strategies.contains(&kind) {
            strategies.push(kind);
        }
    }
    if strategies.is_empty() {
        bail!("--strategies must name at least one strategy");
    }
    Ok(strategies)
}

fn run_study_sample(args: &SampleArgs) -> Result<i32> {
    let strategies = match parse_strategies(&args.strategies) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(EXIT_USAGE);
        }
    };

    let mut results: BTreeMap<(LanguageId, NormalizationOptions), Vec<ClassSummary>> =
        BTreeMap::new();
    for path in &args.clones {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let file: ClonesFile = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", path.display()))?;
        let options = NormalizationOptions::parse(&file.option)
            .ok_or_else(|| anyhow!("{}: unknown option {:?}", path.display(), file.option))?;
        for run in &file.runs {
            let cell = (run.language, options);
            let summaries: Vec<ClassSummary> =
                run.classes.iter().map(ClassRecord::to_summary).collect();
            if results.insert(cell, summaries).is_some() {
                bail!(
                    "duplicate detection input for cell ({}, {})",
                    run.language,
                    options.label()
                );
            }
        }
    }

    // An explicitly requested grid must be fully covered.
    let requested_languages: Option<Vec<LanguageId>> = args
        .languages
        .as_deref()
        .map(|spec| {
            spec.split(',')
                .map(|s| {
                    LanguageId::parse(s).ok_or_else(|| anyhow!("unknown language {s:?}"))
                })
                .collect()
        })
        .transpose()?;
    let requested_options: Option<Vec<NormalizationOptions>> = args
        .options
        .as_deref()
        .map(|spec| {
            spec.split(',')
                .map(|s| {
                    NormalizationOptions::parse(s).ok_or_else(|| anyhow!("unknown option {s:?}"))
                })
                .collect()
        })
        .transpose()?;
    if requested_languages.is_some() || requested_options.is_some() {
        let languages = requested_languages
            .unwrap_or_else(|| results.keys().map(|&(l, _)| l).collect());
        let options = requested_options
            .unwrap_or_else(|| results.keys().map(|&(_, o)| o).collect());
        let mut grid = BTreeMap::new();
        for &language in &languages {
            for &options in &options {
                match results.get(&(language, options)) {
                    Some(classes) => {
                        grid.insert((language, options), classes.clone());
                    }
                    None => bail!(
                        "missing detection for cell ({}, {}); run detect with --normalize {} first",
                        language,
                        options.label(),
                        options.label()
                    ),
                }
            }
        }
        results = grid;
    }

    let plan = sample_study_set(&results, &strategies, args.k as usize, args.seed);
    for warning in &plan.warnings {
        eprintln!(
            "warning: empty group for ({}, {}, {})",
            warning.language, warning.option, warning.strategy
        );
    }
    write_json(&args.out, "studyplan.json", &StudyPlanFile::from_plan(&plan))?;
    println!(
        "sampled {} clones into {} groups (k = {}, seed = {})",
        plan.total_entries(),
        plan.groups.len(),
        plan.k,
        plan.seed
    );
    for group in &plan.groups {
        println!(
            "  {} {} {}: {} clones",
            group.language,
            group.option,
            group.strategy,
            group.clone_ids.len()
        );
    }
    Ok(EXIT_OK)
}

/// Joins a rating's clone id (`language:option:class_id`) to its plan group.
fn group_of<'a>(plan: &'a StudyPlanFile, clone_id: &str) -> Option<&'a StudyGroup> {
    let mut parts = clone_id.splitn(3, ':');
    let language = LanguageId::parse(parts.next()?)?;
    let options = NormalizationOptions::parse(parts.next()?)?;
    let class_id: usize = parts.next()?.trim().parse().ok()?;
    plan.groups.iter().find(|g| {
        g.language == language
            && g.option == options.label()
            && g.clone_ids.contains(&class_id)
    })
}

fn run_study_icc(args: &IccArgs) -> Result<i32> {
    if !(args.alpha > 0.0 && args.alpha < 1.0) {
        eprintln!("error: --alpha must be in (0, 1)");
        return Ok(EXIT_USAGE);
    }
    let text = fs::read_to_string(&args.ratings)
        .with_context(|| format!("reading {}", args.ratings.display()))?;
    let sheet = RatingSheet::from_csv(&text)?;
    if sheet.variables().is_empty() {
        bail!("{}: no ratings found", args.ratings.display());
    }

    let plan: Option<StudyPlanFile> = match &args.plan {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Some(serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?)
        }
        None => None,
    };

    let mut variables = Vec::new();
    let mut group_rows: Vec<GroupSummaryRow> = Vec::new();
    for variable in sheet.variables() {
        let matrix = sheet.matrix(variable)?;
        let result = icc3k(&matrix, args.alpha)?;
        variables.push(VariableIcc { variable, result });

        let means = aggregate_ratings(&sheet, variable)?;
        let mut grouped: BTreeMap<(String, String, String), Vec<f64>> = BTreeMap::new();
        for (clone_id, mean) in &means {
            let key = match plan.as_ref().and_then(|p| group_of(p, clone_id)) {
                Some(group) => (
                    group.language.to_string(),
                    group.option.clone(),
                    group.strategy.to_string(),
                ),
                None if plan.is_some() => {
                    ("unassigned".to_string(), "unassigned".to_string(), "unassigned".to_string())
                }
                None => ("all".to_string(), "all".to_string(), "all".to_string()),
            };
            grouped.entry(key).or_default().push(*mean);
        }
        for ((language, option, strategy), values) in grouped {
            group_rows.push(GroupSummaryRow {
                language,
                option,
                strategy,
                variable,
                n: values.len(),
                summary: group_summary(&values)?,
            });
        }
    }

    let icc_file = IccFile {
        schema_version: SCHEMA_VERSION,
        alpha: args.alpha,
        subjects: sheet.subjects.len(),
        raters: sheet.raters.len(),
        variables: variables.clone(),
    };
    write_json(&args.out, "icc.json", &icc_file)?;
    write_artifact(&args.out, "icc.csv", schema::icc_csv(&variables).as_bytes())?;
    write_artifact(&args.out, "groups.csv", schema::groups_csv(&group_rows).as_bytes())?;

    println!(
        "{} subjects x {} raters, alpha = {}",
        sheet.subjects.len(),
        sheet.raters.len(),
        args.alpha
    );
    for v in &variables {
        println!(
            "  {:<12} ICC(3,k) = {:.3}  CI [{:.3}, {:.3}]  F({}, {}) = {}",
            v.variable.to_string(),
            v.result.icc,
            v.result.ci_lower,
            v.result.ci_upper,
            v.result.df1,
            v.result.df2,
            if v.result.f_value.is_finite() {
                format!("{:.3}", v.result.f_value)
            } else {
                "inf".to_string()
            }
        );
    }
    Ok(EXIT_OK)
}
