use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chrono::{DateTime, Utc};
use clap::{Args, Parser, Subcommand, ValueEnum};

use slp_eval::harness::{
    evaluate, load_corpus, load_layout, load_scores, render_report, validate_submission, write_corpus,
    EvaluationConfig, LoadedManifest, Phase, PhaseRules, ReportFormat, SubmissionLog, DEFAULT_TOP_ERRORS,
};
use slp_eval::pose::{HandPoints, KeypointLayout};
use slp_eval::ranking::{build_ranking_report, render_ranking_table};
use slp_eval::synth::{mean_pose_baseline, perturb, synth_corpus, synth_sentence, BaselineVariant, SynthSpec};

#[derive(Parser)]
#[command(name = "slp-eval", version, about = "Sign language production evaluation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score predictions against references and write a metric report.
    Evaluate(EvaluateArgs),
    /// Check a submission's ids, pose files and phase quota.
    Validate(ValidateArgs),
    /// Pareto-rank entrants from one or more score files.
    Rank(RankArgs),
    /// Generate deterministic fixtures.
    #[command(subcommand)]
    Synth(SynthCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Structured,
    Table,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Structured => ReportFormat::Structured,
            FormatArg::Table => ReportFormat::Table,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HandsArg {
    All,
    Wrists,
}

#[derive(Clone, Copy, ValueEnum)]
enum PhaseArg {
    Dev,
    Test,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Static,
    PerFrame,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Prediction manifest (id, pose path).
    #[arg(long)]
    pred: Option<PathBuf>,
    /// Reference manifest (id, pose path, optional reference sentence).
    #[arg(long = "ref")]
    reference: Option<PathBuf>,
    /// Back-translated hypotheses, one `id<TAB>sentence` per line.
    #[arg(long)]
    hyp: Option<PathBuf>,
    /// Reference sentences; defaults to the reference manifest's third column.
    #[arg(long)]
    ref_text: Option<PathBuf>,
    /// Keypoint layout descriptor; the 178-point default is used otherwise.
    #[arg(long)]
    layout: Option<PathBuf>,
    #[arg(long)]
    no_normalize: bool,
    /// Hand keypoints used by Total Distance.
    #[arg(long, value_enum, default_value = "all")]
    hands: HandsArg,
    /// Command producing hypotheses from pose paths on stdin when --hyp is absent.
    #[arg(long)]
    translate_cmd: Option<String>,
    #[arg(long)]
    entrant: Option<String>,
    /// Timestamp recorded in the report verbatim.
    #[arg(long)]
    timestamp: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOP_ERRORS)]
    top_errors: usize,
    /// Report destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "structured")]
    format: FormatArg,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long)]
    pred: PathBuf,
    #[arg(long = "ref")]
    reference: PathBuf,
    #[arg(long, value_enum)]
    phase: PhaseArg,
    /// Submission history log; a missing file counts as no prior submissions.
    #[arg(long)]
    history: PathBuf,
    #[arg(long)]
    layout: Option<PathBuf>,
    /// Append the submission to the history when it is valid.
    #[arg(long)]
    record: bool,
    /// Submission time (RFC 3339); defaults to the current time.
    #[arg(long)]
    now: Option<String>,
    /// Write the validation report as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long, num_args = 1.., required = true)]
    scores: Vec<PathBuf>,
    /// Ranking report destination (JSON).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SynthCommand {
    /// Write a synthetic corpus: pose files, reference sentences and a manifest.
    Corpus(CorpusArgs),
    /// Write mean-pose baseline predictions for a reference manifest.
    Baseline(BaselineArgs),
    /// Write noisy copies of every sequence in a manifest.
    Perturb(PerturbArgs),
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long)]
    count: usize,
    #[arg(long, default_value_t = 32)]
    frames: usize,
    #[arg(long, default_value_t = 0.05)]
    amplitude: f64,
    #[arg(long, default_value_t = 1.5)]
    frequency: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    layout: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BaselineArgs {
    #[arg(long = "ref")]
    reference: PathBuf,
    #[arg(long, value_enum, default_value = "static")]
    variant: VariantArg,
    #[arg(long)]
    layout: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PerturbArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    sigma: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    layout: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Evaluate(args) => run_evaluate(args),
        Command::Validate(args) => run_validate(args),
        Command::Rank(args) => run_rank(args),
        Command::Synth(cmd) => run_synth(cmd),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run_evaluate(args: EvaluateArgs) -> Result<ExitCode> {
    let format = ReportFormat::from(args.format);
    let config = EvaluationConfig {
        pred_manifest: args.pred,
        ref_manifest: args.reference,
        hypotheses: args.hyp,
        reference_text: args.ref_text,
        layout: args.layout,
        normalize: !args.no_normalize,
        hands: match args.hands {
            HandsArg::All => HandPoints::All,
            HandsArg::Wrists => HandPoints::Wrists,
        },
        translate_command: args.translate_cmd,
        entrant: args.entrant,
        generated_at: args.timestamp,
        top_errors: args.top_errors,
        output: args.out.clone(),
        format,
    };
    let report = evaluate(&config)?;
    emit(args.out.as_deref(), &render_report(&report, format)?)?;
    Ok(ExitCode::SUCCESS)
}

fn run_validate(args: ValidateArgs) -> Result<ExitCode> {
    let layout = load_layout(args.layout.as_deref())?;
    let phase = match args.phase {
        PhaseArg::Dev => Phase::Development,
        PhaseArg::Test => Phase::Test,
    };
    let now: DateTime<Utc> = match &args.now {
        Some(s) => DateTime::parse_from_rfc3339(s)
            .with_context(|| format!("bad --now timestamp `{s}`"))?
            .with_timezone(&Utc),
        None => Utc::now(),
    };
    let history = SubmissionLog::load(&args.history)?;
    let report = validate_submission(&args.pred, &args.reference, &layout, &PhaseRules::for_phase(phase), &history, now)?;

    if let Some(out) = &args.out {
        let json = serde_json::to_string_pretty(&report)? + "\n";
        std::fs::write(out, json).with_context(|| format!("writing {}", out.display()))?;
    }
    if report.is_valid() {
        println!("valid: {} submission {}", phase, report.digest);
        if args.record {
            let mut log = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&args.history)
                .with_context(|| format!("opening {}", args.history.display()))?;
            log.write_all(report.record.to_line().as_bytes())?;
        }
        Ok(ExitCode::SUCCESS)
    } else {
        for v in &report.violations {
            println!("violation: {v}");
        }
        Ok(ExitCode::from(1))
    }
}

fn run_rank(args: RankArgs) -> Result<ExitCode> {
    let mut entries = Vec::new();
    for path in &args.scores {
        entries.extend(load_scores(path)?);
    }
    let report = build_ranking_report(&entries)?;
    if let Some(out) = &args.out {
        let json = serde_json::to_string_pretty(&report)? + "\n";
        std::fs::write(out, json).with_context(|| format!("writing {}", out.display()))?;
    }
    print!("{}", render_ranking_table(&report));
    Ok(ExitCode::SUCCESS)
}

fn run_synth(cmd: SynthCommand) -> Result<ExitCode> {
    match cmd {
        SynthCommand::Corpus(a) => {
            if a.count == 0 {
                bail!("--count must be at least 1");
            }
            let layout = load_layout(a.layout.as_deref())?;
            let spec = SynthSpec {
                frame_count: a.frames,
                amplitude: a.amplitude,
                frequency: a.frequency,
                seed: a.seed,
            };
            let seqs = synth_corpus::<f64>(a.count, &spec, &layout)?;
            let sentences: Vec<String> =
                (0..a.count as u64).map(|i| synth_sentence(a.seed.wrapping_add(i))).collect();
            let manifest = write_corpus(&a.out, &seqs, Some(&sentences))?;
            println!("{}", manifest.display());
        }
        SynthCommand::Baseline(a) => {
            let refs = load_manifest_corpus(&a.reference, a.layout.as_deref())?;
            let variant = match a.variant {
                VariantArg::Static => BaselineVariant::StaticMean,
                VariantArg::PerFrame => BaselineVariant::PerFrameMean,
            };
            let preds = mean_pose_baseline(&refs, variant)?;
            println!("{}", write_corpus(&a.out, &preds, None)?.display());
        }
        SynthCommand::Perturb(a) => {
            let seqs = load_manifest_corpus(&a.input, a.layout.as_deref())?;
            let noisy = seqs
                .iter()
                .enumerate()
                .map(|(i, s)| perturb(s, a.sigma, a.seed.wrapping_add(i as u64)))
                .collect::<Result<Vec<_>, _>>()?;
            println!("{}", write_corpus(&a.out, &noisy, None)?.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_manifest_corpus(path: &Path, layout: Option<&Path>) -> Result<Vec<slp_eval::PoseSequenceF64>> {
    let layout: KeypointLayout = load_layout(layout)?;
    let manifest = LoadedManifest::load(path)?;
    Ok(load_corpus(&manifest, &layout, false)?)
}
