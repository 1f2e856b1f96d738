use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use unicode_normalization::UnicodeNormalization;

use lzdist::dataset::{load_jsonl, read_csv_records, simulate_effort_dataset, write_jsonl, EditRecord};
use lzdist::distance::{compression_distance, compression_distance_with_context};
use lzdist::eval::{bench, evaluate, scenario_compare, write_bench_csv, EvalConfig, Normalization};
use lzdist::llm::{run_scenario_suite, ChatClient, ClientConfig, LlmError, PromptSet, QuestionJob};
use lzdist::lz77::{lz_factorize, Phrase};
use lzdist::text::SymbolText;
use lzdist::{Error, Result};

use crate::{Command, Global, EXIT_REMOTE};

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |e| Error::Io {
        path: path.to_owned(),
        source: e,
    }
}

fn read_text(path: &Path, nfc: bool) -> Result<String> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    Ok(if nfc { text.nfc().collect() } else { text })
}

fn normalize_record(r: &mut EditRecord) {
    r.source = r.source.nfc().collect();
    r.target = r.target.nfc().collect();
    if let Some(c) = &mut r.context {
        *c = c.nfc().collect();
    }
}

/// Loads JSONL, or CSV for `.csv` files. Any malformed line is an error.
fn load_dataset(path: &Path, nfc: bool) -> Result<Vec<EditRecord>> {
    let mut records = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        read_csv_records(path)?
    } else {
        let loaded = load_jsonl(path)?;
        if loaded.unknown_fields > 0 {
            log::warn!("{}: ignored {} unknown field(s)", path.display(), loaded.unknown_fields);
        }
        if !loaded.errors.is_empty() {
            let lines: Vec<String> = loaded.errors.iter().map(ToString::to_string).collect();
            return Err(Error::Validation(format!(
                "{}: {} malformed line(s): {}",
                path.display(),
                lines.len(),
                lines.join("; ")
            )));
        }
        loaded.records
    };
    if nfc {
        records.iter_mut().for_each(normalize_record);
    }
    Ok(records)
}

fn stdout_line(line: std::fmt::Arguments<'_>) -> Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{line}").map_err(io_err(Path::new("<stdout>")))
}

pub(crate) fn run(command: Command, global: Global) -> Result<ExitCode> {
    match command {
        Command::Dist {
            source,
            target,
            context,
            normalize,
        } => {
            let s = SymbolText::from(read_text(&source, global.nfc)?.as_str());
            let t_text = read_text(&target, global.nfc)?;
            let t = SymbolText::from(t_text.as_str());
            let r = match context {
                Some(k) => {
                    let k = SymbolText::from(read_text(&k, global.nfc)?.as_str());
                    compression_distance_with_context(&k, &s, &t)?
                }
                None => compression_distance(&s, &t)?,
            };
            match normalize {
                Normalization::None => stdout_line(format_args!(
                    "distance={} lz_source={} lz_concat={}",
                    r.value, r.lz_source, r.lz_concat
                ))?,
                Normalization::TargetLen => stdout_line(format_args!(
                    "distance={} lz_source={} lz_concat={} normalized={}",
                    r.value,
                    r.lz_source,
                    r.lz_concat,
                    r.value as f64 / t.len().max(1) as f64
                ))?,
            }
        }
        Command::Factorize { input } => {
            let text = SymbolText::from(read_text(&input, global.nfc)?.as_str());
            let f = lz_factorize(&text)?;
            let mut out = BufWriter::new(io::stdout().lock());
            let write = |out: &mut BufWriter<_>, line: String| writeln!(out, "{line}");
            let result: io::Result<()> = (|| {
                for p in f.phrases() {
                    match *p {
                        Phrase::Literal(b) => write(&mut out, format!("LIT {b}"))?,
                        Phrase::Copy { source, len } => write(&mut out, format!("CPY {source} {len}"))?,
                    }
                }
                write(&mut out, format!("COUNT {}", f.count()))?;
                out.flush()
            })();
            result.map_err(io_err(Path::new("<stdout>")))?;
        }
        Command::Eval {
            dataset,
            out,
            metrics,
            condition,
            knn_k,
            train_fraction,
            normalize,
        } => {
            let records = load_dataset(&dataset, global.nfc)?;
            let config = EvalConfig {
                metrics,
                conditions: condition,
                knn_k,
                train_fraction,
                seed: global.seed,
                normalization: normalize,
            };
            let report = evaluate(&records, &config)?;
            report.write_to(&out)?;
            let summary = out.join("summary.csv");
            let text = fs::read_to_string(&summary).map_err(io_err(&summary))?;
            stdout_line(format_args!("{}", text.trim_end()))?;
        }
        Command::Synth {
            questions,
            out,
            scenarios,
            prompts,
            concurrency,
            max_retries,
            timeout,
        } => {
            let mut config = ClientConfig::from_env().ok_or_else(|| {
                LlmError::Config(format!("set {} to the chat-completion base URL", lzdist::llm::ENV_API_BASE))
            })?;
            config.concurrency = concurrency;
            config.max_retries = max_retries;
            config.timeout_s = timeout;
            let client = ChatClient::new(config)?;
            let prompts = match prompts {
                Some(dir) => PromptSet::from_dir(dir)?,
                None => PromptSet::builtin(),
            };
            let jobs = read_questions(&questions)?;
            let runtime = tokio::runtime::Builder::new_multi_thread()
                .enable_all()
                .build()
                .map_err(io_err(Path::new("<runtime>")))?;
            let suite = runtime.block_on(run_scenario_suite(&jobs, &scenarios, &prompts, &client))?;
            write_jsonl(&suite.records, &out)?;
            for f in &suite.failures {
                let scenario = f.scenario.map(|s| format!(" ({})", s.scenario())).unwrap_or_default();
                eprintln!("failed: {}{scenario}: {}", f.job_id, f.error);
            }
            eprintln!("wrote {} record(s), {} failure(s)", suite.records.len(), suite.failures.len());
            if !suite.failures.is_empty() {
                return Ok(ExitCode::from(EXIT_REMOTE));
            }
        }
        Command::Simulate { n, sigma, out } => {
            let records = simulate_effort_dataset(n, sigma, global.seed)?;
            write_jsonl(&records, &out)?;
        }
        Command::Bench { sizes, reps, out } => {
            let rows = bench(&sizes, reps, global.seed)?;
            match out {
                Some(path) => {
                    let file = fs::File::create(&path).map_err(io_err(&path))?;
                    write_bench_csv(&rows, file)?;
                }
                None => write_bench_csv(&rows, io::stdout().lock())?,
            }
        }
        Command::ScenarioCompare {
            dataset,
            out,
            condition,
            normalize,
        } => {
            let records = load_dataset(&dataset, global.nfc)?;
            let cmp = scenario_compare(&records, condition, normalize)?;
            cmp.write_to(&out)?;
            for f in &cmp.fits {
                let pair = format!("normal-vs-{}", f.scenario);
                match f.fit {
                    Some(fit) => stdout_line(format_args!(
                        "{pair} slope={} intercept={} r2={} n={}",
                        fit.slope, fit.intercept, fit.r2, f.n
                    ))?,
                    None => stdout_line(format_args!("{pair} n={} (no fit)", f.n))?,
                }
            }
            if !cmp.unmatched.is_empty() {
                eprintln!("{} unmatched question(s), see unmatched.csv", cmp.unmatched.len());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_questions(path: &Path) -> Result<Vec<QuestionJob>> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l)
                .map_err(|e| Error::Validation(format!("{} line {}: {e}", path.display(), i + 1)))
        })
        .collect()
}
