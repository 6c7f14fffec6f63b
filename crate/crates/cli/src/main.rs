//! `namegram`: extract → tag → report / eval / lint over JSONL files.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 data error.

mod config;

use std::fmt::Write as _;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use namegram::analysis::{self, GroupBy};
use namegram::dictionary::WordList;
use namegram::gold::{self, ColumnMapping, EvalResult, GoldEntry};
use namegram::ingest::TypeClassifier;
use namegram::ingest::{read_identifiers_jsonl, scan_corpus};
use namegram::lint::{lint_corpus, LintConfig, Rule};
use namegram::split::SplitOverrides;
use namegram::tagger::{
    annotate_all, detect_preambles, read_annotated_jsonl, Annotated, EnsembleTagger,
    ExternalTagger, HeuristicTagger, PreambleConfig, PreambleLexicon, StrengthTable, TagContext,
    Tagger, ADAPTER_ENV,
};
use namegram::{GrammarPattern, Identifier, Language, ScanConfig, Splitter};

use config::RunConfig;

#[derive(Parser)]
#[command(
    name = "namegram",
    version,
    about = "Grammar patterns of source-code identifiers"
)]
struct Cli {
    /// TOML run configuration; flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// More diagnostics on stderr (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a source tree and emit one identifier per line (JSONL).
    Extract(ExtractArgs),
    /// Split and tag identifiers from JSONL; emits annotated JSONL.
    Tag(TagArgs),
    /// Pattern frequencies and cross-tabulations from annotated JSONL.
    Report(ReportArgs),
    /// Score a tagger (or stored tool columns) against a gold CSV.
    Eval(EvalArgs),
    /// Naming lints over annotated JSONL.
    Lint(LintArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TaggerKind {
    Heuristic,
    External,
    Ensemble,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportKind {
    All,
    Frequencies,
    Distribution,
    LongTail,
    VerbBoolean,
    PluralCollection,
    Abbreviations,
}

#[derive(Args)]
struct OutArgs {
    /// Output file, written atomically; stdout when absent.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Lexical resources shared by the tagging and reporting stages.
#[derive(Args)]
struct LexiconArgs {
    /// Word list (one word per line) replacing the bundled dictionary.
    #[arg(long, value_name = "FILE")]
    dictionary: Option<PathBuf>,
    /// TOML preamble settings.
    #[arg(long, value_name = "FILE")]
    preamble_config: Option<PathBuf>,
    /// CSV of curated splits (`raw_name,tokens`).
    #[arg(long, value_name = "FILE")]
    overrides: Option<PathBuf>,
    /// Treat integer-typed names as boolean-like.
    #[arg(long)]
    loose_boolean: bool,
}

#[derive(Args)]
struct TaggerArgs {
    #[arg(long, value_enum)]
    tagger: Option<TaggerKind>,
    /// Command line of an external Penn tagger (run through `sh -c`).
    #[arg(long, env = ADAPTER_ENV, value_name = "CMD")]
    adapter_cmd: Option<String>,
    /// CSV strength table (`tagger,tag,weight`) for the ensemble.
    #[arg(long, value_name = "FILE")]
    strengths: Option<PathBuf>,
    /// Let the heuristic tag plural words anywhere as NPL, not only heads.
    #[arg(long)]
    interior_plurals: bool,
}

#[derive(Args)]
struct ExtractArgs {
    /// Root of the source tree.
    root: PathBuf,
    /// Comma-separated languages (c, cpp, java, csharp).
    #[arg(long, value_delimiter = ',')]
    languages: Option<Vec<Language>>,
    /// System label; defaults to the root directory name.
    #[arg(long)]
    system: Option<String>,
    /// Keep test files, classes and functions.
    #[arg(long)]
    include_tests: bool,
    /// Follow symbolic links while walking the tree.
    #[arg(long)]
    follow_links: bool,
    /// Treat integer-typed names as boolean-like.
    #[arg(long)]
    loose_boolean: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct TagArgs {
    /// Identifier JSONL; `-` for stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[command(flatten)]
    tagger: TaggerArgs,
    #[command(flatten)]
    lexicon: LexiconArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct ReportArgs {
    /// Annotated JSONL; `-` for stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    kind: ReportKind,
    /// all, category, language or category-language.
    #[arg(long, default_value = "category")]
    group_by: GroupBy,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[command(flatten)]
    lexicon: LexiconArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct EvalArgs {
    /// Gold CSV with curated splits and patterns.
    #[arg(long, value_name = "FILE")]
    gold: PathBuf,
    /// TOML column mapping for the gold CSV.
    #[arg(long, value_name = "FILE")]
    columns: Option<PathBuf>,
    /// Score a stored tool column instead of running a tagger; repeatable.
    #[arg(long, value_name = "COLUMN")]
    stored: Vec<String>,
    #[command(flatten)]
    tagger: TaggerArgs,
    #[command(flatten)]
    lexicon: LexiconArgs,
    /// Misannotated patterns listed per category.
    #[arg(long)]
    top_k: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Also write a strength table derived from the per-tag agreement.
    #[arg(long, value_name = "FILE")]
    emit_strengths: Option<PathBuf>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct LintArgs {
    /// Annotated JSONL; `-` for stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// TOML rule settings (`[rules.<name>]`).
    #[arg(long, value_name = "FILE")]
    rules: Option<PathBuf>,
    /// Disable a rule by name or short id (r1..r5); repeatable.
    #[arg(long, value_name = "RULE")]
    disable: Vec<Rule>,
    /// Re-enable a rule turned off in configuration; repeatable.
    #[arg(long, value_name = "RULE")]
    enable: Vec<Rule>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[command(flatten)]
    lexicon: LexiconArgs,
    #[command(flatten)]
    out: OutArgs,
}

/// A failed command and the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Data(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Data(_) => 2,
        }
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn data(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Data(e.into())
}

type Res<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .target(env_logger::Target::Stderr)
        .init();

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Usage(e) | Failure::Data(e)) = &f;
            eprintln!("namegram: {e:#}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Res<()> {
    let cfg = match &cli.config {
        Some(path) => RunConfig::load(path).map_err(Failure::Usage)?,
        None => RunConfig::default(),
    };
    match cli.command {
        Command::Extract(a) => cmd_extract(a, &cfg),
        Command::Tag(a) => cmd_tag(a, &cfg),
        Command::Report(a) => cmd_report(a, &cfg),
        Command::Eval(a) => cmd_eval(a, &cfg),
        Command::Lint(a) => cmd_lint(a, &cfg),
    }
}

// ---- startup checks and resource loading ----

fn require_file(path: &Path, what: &str) -> Res<()> {
    if path == Path::new("-") || path.is_file() {
        Ok(())
    } else {
        Err(usage(anyhow!("{what} {} does not exist", path.display())))
    }
}

fn require_out_dir(out: &OutArgs) -> Res<()> {
    let Some(path) = &out.out else { return Ok(()) };
    let dir = parent_dir(path);
    if dir.is_dir() {
        Ok(())
    } else {
        Err(usage(anyhow!(
            "output directory {} does not exist",
            dir.display()
        )))
    }
}

fn parent_dir(path: &Path) -> &Path {
    match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    }
}

fn read_input(path: &Path) -> Res<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(data)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| data(anyhow!("cannot read {}: {e}", path.display())))
    }
}

/// Write the whole payload at once: to stdout, or to a temporary file in
/// the target directory that is then renamed over the target.
fn emit(out: &OutArgs, payload: &str) -> Res<()> {
    match &out.out {
        Some(path) => {
            let mut tmp = tempfile::NamedTempFile::new_in(parent_dir(path)).map_err(usage)?;
            tmp.write_all(payload.as_bytes()).map_err(usage)?;
            tmp.as_file().sync_all().map_err(usage)?;
            tmp.persist(path)
                .map_err(|e| usage(anyhow!("cannot write {}: {}", path.display(), e.error)))?;
            Ok(())
        }
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            match w.write_all(payload.as_bytes()).and_then(|()| w.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(data(e)),
                _ => Ok(()),
            }
        }
    }
}

fn write_file_atomic(path: &Path, payload: &str) -> Res<()> {
    emit(
        &OutArgs {
            out: Some(path.to_path_buf()),
        },
        payload,
    )
}

/// Loaded lexical resources.
struct Lexicon {
    dictionary: WordList,
    preamble_config: PreambleConfig,
    splitter: Splitter,
    classifier: TypeClassifier,
}

impl Lexicon {
    fn load(args: &LexiconArgs, cfg: &RunConfig) -> Res<Self> {
        let dictionary = match args.dictionary.as_ref().or(cfg.dictionary.as_ref()) {
            Some(p) => {
                require_file(p, "dictionary")?;
                WordList::load(p).map_err(usage)?
            }
            None => WordList::bundled(),
        };
        let preamble_config = match args
            .preamble_config
            .as_ref()
            .or(cfg.preamble_config.as_ref())
        {
            Some(p) => {
                require_file(p, "preamble config")?;
                PreambleConfig::load(p).map_err(usage)?
            }
            None => PreambleConfig::default(),
        };
        let overrides = match args.overrides.as_ref().or(cfg.overrides.as_ref()) {
            Some(p) => {
                require_file(p, "split overrides")?;
                SplitOverrides::load(p).map_err(usage)?
            }
            None => SplitOverrides::new(),
        };
        Ok(Lexicon {
            dictionary,
            preamble_config,
            splitter: Splitter::new(overrides),
            classifier: TypeClassifier {
                loose_boolean: args.loose_boolean || cfg.loose_boolean.unwrap_or(false),
            },
        })
    }

    /// Preamble lexicon with per-system detection over `corpus`.
    fn preambles(&self, corpus: &[Identifier]) -> Res<PreambleLexicon> {
        detect_preambles(
            corpus,
            &self.splitter,
            &self.dictionary,
            &self.preamble_config,
        )
        .map_err(usage)
    }
}

fn load_strengths(args: &TaggerArgs, cfg: &RunConfig) -> Res<StrengthTable> {
    match args.strengths.as_ref().or(cfg.strengths.as_ref()) {
        Some(p) => {
            require_file(p, "strength table")?;
            StrengthTable::load(p).map_err(usage)
        }
        None => Ok(StrengthTable::seeded()),
    }
}

fn tagger_kind(args: &TaggerArgs, cfg: &RunConfig) -> TaggerKind {
    args.tagger.or(cfg.tagger).unwrap_or(TaggerKind::Heuristic)
}

/// Validate tagger options before any input is read.
fn check_tagger(args: &TaggerArgs, cfg: &RunConfig) -> Res<Option<StrengthTable>> {
    let kind = tagger_kind(args, cfg);
    if kind != TaggerKind::Heuristic && args.adapter_cmd.is_none() {
        return Err(usage(anyhow!(
            "the {kind:?} tagger needs --adapter-cmd or {ADAPTER_ENV}"
        )));
    }
    match kind {
        TaggerKind::Ensemble => load_strengths(args, cfg).map(Some),
        _ => Ok(None),
    }
}

fn build_tagger(
    args: &TaggerArgs,
    cfg: &RunConfig,
    preambles: PreambleLexicon,
    strengths: Option<StrengthTable>,
) -> Res<Box<dyn Tagger + Send>> {
    let heuristic = HeuristicTagger {
        preambles,
        interior_plurals: args.interior_plurals || cfg.interior_plurals.unwrap_or(false),
    };
    let spawn = || -> Res<ExternalTagger> {
        let cmd = args.adapter_cmd.as_deref().expect("checked at startup");
        ExternalTagger::spawn(cmd).map_err(data)
    };
    Ok(match tagger_kind(args, cfg) {
        TaggerKind::Heuristic => Box::new(heuristic),
        TaggerKind::External => Box::new(spawn()?),
        TaggerKind::Ensemble => Box::new(EnsembleTagger::new(
            vec![Box::new(heuristic), Box::new(spawn()?)],
            strengths.unwrap_or_else(StrengthTable::seeded),
        )),
    })
}

fn jsonl<T: Serialize>(rows: &[T]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(r).expect("rows serialize"));
        out.push('\n');
    }
    out
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn read_annotated(path: &Path) -> Res<Vec<Annotated>> {
    let text = read_input(path)?;
    read_annotated_jsonl(&text)
        .map_err(|(line, msg)| data(anyhow!("{}:{line}: {msg}", path.display())))
}

// ---- commands ----

fn cmd_extract(a: ExtractArgs, cfg: &RunConfig) -> Res<()> {
    if !a.root.is_dir() {
        return Err(usage(anyhow!(
            "scan root {} is not a directory",
            a.root.display()
        )));
    }
    require_out_dir(&a.out)?;
    let defaults = ScanConfig::default();
    let scan = ScanConfig {
        languages: a
            .languages
            .or_else(|| cfg.languages.clone())
            .unwrap_or(defaults.languages),
        system: a.system.or_else(|| cfg.system.clone()),
        loose_boolean: a.loose_boolean || cfg.loose_boolean.unwrap_or(defaults.loose_boolean),
        exclude_tests: !(a.include_tests || cfg.include_tests.unwrap_or(!defaults.exclude_tests)),
        follow_links: a.follow_links || cfg.follow_links.unwrap_or(defaults.follow_links),
    };
    if scan.languages.is_empty() {
        return Err(usage(anyhow!("no languages selected")));
    }
    let set = scan_corpus(&a.root, &scan).map_err(data)?;
    for w in &set.warnings {
        log::warn!("{}: {}", w.file, w.message);
    }
    log::info!("{} identifiers from {}", set.len(), a.root.display());
    emit(&a.out, &set.to_jsonl())
}

fn cmd_tag(a: TagArgs, cfg: &RunConfig) -> Res<()> {
    require_file(&a.input, "input")?;
    require_out_dir(&a.out)?;
    let lex = Lexicon::load(&a.lexicon, cfg)?;
    let strengths = check_tagger(&a.tagger, cfg)?;

    let text = read_input(&a.input)?;
    let idents = read_identifiers_jsonl(&text)
        .map_err(|(line, e)| data(anyhow!("{}:{line}: {e}", a.input.display())))?;
    let preambles = lex.preambles(&idents)?;
    let mut tagger = build_tagger(&a.tagger, cfg, preambles, strengths)?;
    let annotated =
        annotate_all(&idents, &lex.splitter, &lex.classifier, tagger.as_mut()).map_err(data)?;
    emit(&a.out, &jsonl(&annotated))
}

#[derive(Serialize)]
struct FullReport {
    frequencies: analysis::FrequencyReport,
    distribution: Vec<DistributionRow>,
    long_tail: analysis::LongTail,
    verb_boolean: analysis::CrossTab,
    plural_collection: analysis::CrossTab,
    abbreviations: analysis::AbbreviationReport,
}

#[derive(Serialize)]
struct DistributionRow {
    pattern: String,
    count: usize,
}

fn cmd_report(a: ReportArgs, cfg: &RunConfig) -> Res<()> {
    require_file(&a.input, "input")?;
    require_out_dir(&a.out)?;
    let format = a.format.or(cfg.format).unwrap_or(Format::Json);
    if format == Format::Text {
        return Err(usage(anyhow!("report supports --format json or csv")));
    }
    if format == Format::Csv && a.kind == ReportKind::All {
        return Err(usage(anyhow!("--format csv needs a single --kind")));
    }
    let lex = Lexicon::load(&a.lexicon, cfg)?;
    let annotated = read_annotated(&a.input)?;

    let series =
        || analysis::distribution(&analysis::pattern_frequencies(&annotated, GroupBy::All));
    let rows = |s: Vec<(String, usize)>| -> Vec<DistributionRow> {
        s.into_iter()
            .map(|(pattern, count)| DistributionRow { pattern, count })
            .collect()
    };
    let payload = match (a.kind, format) {
        (ReportKind::All, _) => {
            let s = series();
            pretty(&FullReport {
                frequencies: analysis::pattern_frequencies(&annotated, a.group_by),
                long_tail: analysis::long_tail(&s),
                distribution: rows(s),
                verb_boolean: analysis::verb_boolean_stats(&annotated, &lex.classifier),
                plural_collection: analysis::plural_collection_stats(&annotated, &lex.classifier),
                abbreviations: analysis::abbreviation_stats(&annotated, &lex.dictionary),
            })
        }
        (ReportKind::Frequencies, Format::Csv) => {
            analysis::pattern_frequencies(&annotated, a.group_by).to_csv()
        }
        (ReportKind::Frequencies, _) => {
            pretty(&analysis::pattern_frequencies(&annotated, a.group_by))
        }
        (ReportKind::Distribution, Format::Csv) => analysis::distribution_csv(&series()),
        (ReportKind::Distribution, _) => pretty(&rows(series())),
        (ReportKind::LongTail, Format::Csv) => {
            let t = analysis::long_tail(&series());
            format!(
                "unique_patterns,identifiers,singletons,at_least_five,top_decile_share\n{},{},{},{},{}\n",
                t.unique_patterns,
                t.identifiers,
                t.singletons,
                t.at_least_five,
                t.top_decile_share.map_or("N/A".to_string(), |v| format!("{v:.4}"))
            )
        }
        (ReportKind::LongTail, _) => pretty(&analysis::long_tail(&series())),
        (ReportKind::VerbBoolean, Format::Csv) => {
            analysis::verb_boolean_stats(&annotated, &lex.classifier).to_csv()
        }
        (ReportKind::VerbBoolean, _) => {
            pretty(&analysis::verb_boolean_stats(&annotated, &lex.classifier))
        }
        (ReportKind::PluralCollection, Format::Csv) => {
            analysis::plural_collection_stats(&annotated, &lex.classifier).to_csv()
        }
        (ReportKind::PluralCollection, _) => pretty(&analysis::plural_collection_stats(
            &annotated,
            &lex.classifier,
        )),
        (ReportKind::Abbreviations, Format::Csv) => {
            analysis::abbreviation_stats(&annotated, &lex.dictionary).to_csv()
        }
        (ReportKind::Abbreviations, _) => {
            pretty(&analysis::abbreviation_stats(&annotated, &lex.dictionary))
        }
    };
    emit(&a.out, &payload)
}

/// Tag the gold identifiers over their curated tokens.
fn tag_gold(
    gold: &[GoldEntry],
    lex: &Lexicon,
    tagger: &mut dyn Tagger,
) -> Res<Vec<GrammarPattern>> {
    gold.iter()
        .map(|g| {
            let ident = g.to_identifier();
            let ctx = TagContext::for_identifier(&ident, &lex.classifier);
            tagger
                .tag(&g.tokens, &ctx)
                .map_err(|e| data(anyhow!("gold row {}: {e}", g.row)))
        })
        .collect()
}

fn cmd_eval(a: EvalArgs, cfg: &RunConfig) -> Res<()> {
    require_file(&a.gold, "gold file")?;
    require_out_dir(&a.out)?;
    if let Some(p) = &a.emit_strengths {
        if !parent_dir(p).is_dir() {
            return Err(usage(anyhow!(
                "output directory {} does not exist",
                parent_dir(p).display()
            )));
        }
    }
    let format = a.format.or(cfg.format).unwrap_or(Format::Json);
    if format == Format::Text {
        return Err(usage(anyhow!("eval supports --format json or csv")));
    }
    let mapping = match a.columns.as_ref().or(cfg.columns.as_ref()) {
        Some(p) => {
            require_file(p, "column mapping")?;
            let text = std::fs::read_to_string(p).map_err(usage)?;
            ColumnMapping::from_toml_str(&text).map_err(usage)?
        }
        None => ColumnMapping::default(),
    };
    let lex = Lexicon::load(&a.lexicon, cfg)?;
    let strengths = if a.stored.is_empty() {
        check_tagger(&a.tagger, cfg)?
    } else {
        None
    };
    let top_k = a.top_k.or(cfg.top_k).unwrap_or(5);

    let gold = gold::load_gold(&a.gold, &mapping).map_err(data)?;
    let mut runs: Vec<(String, Vec<GrammarPattern>)> = Vec::new();
    if a.stored.is_empty() {
        let idents: Vec<Identifier> = gold.iter().map(GoldEntry::to_identifier).collect();
        let preambles = lex.preambles(&idents)?;
        let mut tagger = build_tagger(&a.tagger, cfg, preambles, strengths)?;
        let patterns = tag_gold(&gold, &lex, tagger.as_mut())?;
        runs.push((tagger.id().to_string(), patterns));
    } else {
        for column in &a.stored {
            let patterns = gold::stored_tool(&gold, column).map_err(data)?;
            runs.push((column.clone(), patterns));
        }
    }

    let mut results = Vec::with_capacity(runs.len());
    for (name, patterns) in &runs {
        let r =
            gold::evaluate(&gold, name, patterns, Some(&lex.dictionary), top_k).map_err(data)?;
        for m in &r.length_mismatches {
            log::warn!("{name}: length mismatch on `{m}`");
        }
        results.push(r);
    }

    if let Some(path) = &a.emit_strengths {
        let mut table = StrengthTable::empty();
        for r in &results {
            table.merge_agreement(
                &r.tool,
                r.per_tag
                    .iter()
                    .map(|t| (t.tag, t.human_count, t.tool_agree_count)),
            );
        }
        write_file_atomic(path, &table.to_csv())?;
    }

    let payload = match format {
        Format::Csv => eval_csv(&results),
        _ => pretty(&serde_json::json!({ "results": results })),
    };
    emit(&a.out, &payload)
}

/// Long-format metrics: `tool,metric,key,numerator,denominator,value`.
fn eval_csv(results: &[EvalResult]) -> String {
    let mut out = String::from("tool,metric,key,numerator,denominator,value\n");
    let mut row = |tool: &str, metric: &str, key: &str, r: gold::Ratio| {
        let value = r.value().map_or("N/A".to_string(), |v| format!("{v:.6}"));
        let _ = writeln!(
            out,
            "{tool},{metric},{key},{},{},{value}",
            r.numerator, r.denominator
        );
    };
    for r in results {
        row(&r.tool, "pattern_accuracy", "", r.pattern_accuracy);
        row(&r.tool, "word_accuracy", "", r.word_accuracy);
        for t in &r.per_tag {
            row(
                &r.tool,
                "tag_agreement",
                t.tag.as_str(),
                gold::Ratio::new(t.tool_agree_count, t.human_count),
            );
        }
        for (cat, b) in &r.by_category {
            row(
                &r.tool,
                "category_pattern_accuracy",
                cat.as_str(),
                b.pattern_accuracy,
            );
            row(
                &r.tool,
                "category_word_accuracy",
                cat.as_str(),
                b.word_accuracy,
            );
        }
        for (lang, b) in &r.by_language {
            row(
                &r.tool,
                "language_pattern_accuracy",
                lang.as_str(),
                b.pattern_accuracy,
            );
            row(
                &r.tool,
                "language_word_accuracy",
                lang.as_str(),
                b.word_accuracy,
            );
        }
        if let Some(c) = &r.by_token_class {
            row(&r.tool, "token_class_accuracy", "dictionary", c.dictionary);
            row(
                &r.tool,
                "token_class_accuracy",
                "abbreviation",
                c.abbreviation,
            );
            row(&r.tool, "token_class_accuracy", "digit", c.digit);
        }
    }
    out
}

fn cmd_lint(a: LintArgs, cfg: &RunConfig) -> Res<()> {
    require_file(&a.input, "input")?;
    require_out_dir(&a.out)?;
    let format = a.format.or(cfg.format).unwrap_or(Format::Text);
    let mut rules: LintConfig = match &a.rules {
        Some(p) => {
            require_file(p, "lint rules")?;
            LintConfig::load(p).map_err(usage)?
        }
        None => cfg.lint.clone().unwrap_or_default(),
    };
    for r in &a.enable {
        rules.set_enabled(*r, true);
    }
    for r in &a.disable {
        rules.set_enabled(*r, false);
    }
    let lex = Lexicon::load(&a.lexicon, cfg)?;
    let annotated = read_annotated(&a.input)?;
    let idents: Vec<Identifier> = annotated.iter().map(|x| x.identifier.clone()).collect();
    let preambles = lex.preambles(&idents)?;
    let report = lint_corpus(&annotated, &lex.classifier, &preambles, &rules).map_err(data)?;
    for (rule, n) in &report.summary {
        log::info!("{rule}: {n}");
    }
    let payload = match format {
        Format::Text => report.to_text(),
        Format::Json => pretty(&report),
        Format::Csv => {
            let mut out = String::from("file,line,name,category,rule,severity,pattern\n");
            for f in &report.findings {
                let sev = serde_json::to_value(f.severity).expect("severity serializes");
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    csv_field(&f.file),
                    f.line,
                    f.name,
                    f.category.as_str(),
                    f.rule.name(),
                    sev.as_str().unwrap_or_default(),
                    f.evidence.pattern
                );
            }
            out
        }
    };
    emit(&a.out, &payload)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
