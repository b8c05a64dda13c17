mod source;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use twoblock::analysis::{self, Transform};
use twoblock::catalog;
use twoblock::conjugacy::check_commute;
use twoblock::generation::{generate_prefix, iterate_morphism_literal, iterate_truncated};
use twoblock::wordeq::{enumerate_solutions, ParikhSystem, SearchBounds, WordEquationSystem, Q};
use twoblock::{Alphabet, GenerationScheme, Word};

use source::{load_block, load_morphism, load_rules, load_word, SchemeArgs};

/// Exit status 2: bad usage, unreadable input, or a failed operation.
#[derive(Debug)]
pub struct CliError(String);

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self(message.into())
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self(message.into())
    }
}

impl From<twoblock::Error> for CliError {
    fn from(e: twoblock::Error) -> Self {
        Self(e.to_string())
    }
}

const VERIFIED: ExitCode = ExitCode::SUCCESS;

fn failed() -> ExitCode {
    ExitCode::from(1)
}

#[derive(Parser)]
#[command(
    name = "twoblock",
    version,
    about = "Block substitutions, conjugated morphisms and their fixed points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coding {
    #[value(name = "01")]
    ZeroOne,
    #[value(name = "12")]
    OneTwo,
}

impl Coding {
    fn alphabet(self) -> Alphabet {
        match self {
            Coding::ZeroOne => Alphabet::binary(),
            Coding::OneTwo => Alphabet::runs(),
        }
    }

    fn apply(self, w: &Word) -> Result<Word, CliError> {
        w.recode(self.alphabet())
            .map_err(|_| CliError::usage("--coding applies to two-letter words only"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Analysis {
    Complexity,
    Quadratic,
    Invariance,
    Powers,
    Frequency,
    Periodicity,
    Recurrence,
    Language,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformArg {
    Reverse,
    Mirror,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog.
    List,
    /// Write a prefix of a fixed point, or a literal iterate.
    Generate {
        /// Catalog name or rule file.
        source: String,
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Number of symbols.
        #[arg(short = 'n')]
        length: Option<usize>,
        /// Apply the map (truncated for block maps) this many times to the seed.
        #[arg(long)]
        iterate: Option<usize>,
        #[arg(long, value_enum, default_value = "01")]
        coding: Coding,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Measure a prefix: TSV for complexity, JSON otherwise.
    Analyze {
        #[arg(value_enum)]
        which: Analysis,
        /// Catalog name, rule file, file holding a word, or a literal word.
        source: String,
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Prefix length for generated sources.
        #[arg(long, default_value_t = 1_000_000)]
        prefix: usize,
        /// Factor length bound (complexity, invariance, language) or factor length (recurrence).
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "reverse")]
        transform: TransformArg,
        #[arg(long, default_value_t = 2)]
        exponent: usize,
        #[arg(long, default_value_t = 10)]
        max_base: usize,
        /// For `powers`: report one shortest occurrence over all base lengths instead.
        #[arg(long)]
        any_base: bool,
        /// Word whose frequency is estimated; repeatable.
        #[arg(long = "word")]
        words: Vec<String>,
        #[arg(long)]
        max_preperiod: Option<usize>,
        #[arg(long)]
        max_period: Option<usize>,
        /// Second source for `language`.
        #[arg(long)]
        other: Option<String>,
        /// Seed for the second source.
        #[arg(long)]
        other_seed: Option<String>,
        /// Start run length for the second source.
        #[arg(long)]
        other_start: Option<char>,
        /// Constant for `quadratic`, as an integer or fraction.
        #[arg(short = 'c', default_value = "2")]
        c: String,
    },
    /// Check that a block substitution commutes with a morphism on generators.
    Commute {
        kappa: String,
        sigma: String,
        /// Comma-separated generator blocks; defaults to the domain of kappa.
        #[arg(long)]
        gens: Option<String>,
        #[arg(long, default_value = "01")]
        alphabet: String,
    },
    /// Enumerate bounded solutions of a word equation system.
    SolveEq {
        file: String,
        /// Length bound for the first unknown.
        #[arg(long)]
        max_len: usize,
        /// Length bound for the other unknowns (default 2 * max-len + k).
        #[arg(long)]
        max_other_len: Option<usize>,
    },
    /// Compare a generated sequence with a local OEIS b-file.
    OeisCheck {
        source: String,
        bfile: String,
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Index of the first term of the sequence.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        #[arg(long, value_enum, default_value = "01")]
        coding: Coding,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::List => {
            for entry in catalog::entries() {
                println!("{}\t{}\t{}", entry.name, entry.kind().as_str(), entry.description);
            }
            Ok(VERIFIED)
        }
        Command::Generate {
            source,
            scheme,
            length,
            iterate,
            coding,
            output,
        } => {
            let built = scheme.scheme(load_rules(&source, scheme.alphabet()?)?)?;
            let word = match (iterate, length) {
                (Some(times), n) => {
                    let mut w = literal_iterate(&built, times)?;
                    if let Some(n) = n {
                        if w.len() < n {
                            return Err(CliError::usage(format!(
                                "iterate has only {} symbols, fewer than -n {n}",
                                w.len()
                            )));
                        }
                        w.truncate(n);
                    }
                    w
                }
                (None, Some(n)) => generate_prefix(&built, n)?,
                (None, None) => return Err(CliError::usage("generate needs -n or --iterate")),
            };
            let text = format!("{}\n", coding.apply(&word)?);
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(VERIFIED)
        }
        Command::Analyze {
            which,
            source,
            scheme,
            prefix,
            n,
            transform,
            exponent,
            max_base,
            any_base,
            words,
            max_preperiod,
            max_period,
            other,
            other_seed,
            other_start,
            c,
        } => {
            let mut x = load_word(&source, prefix, &scheme)?;
            if x.len() > prefix {
                x.truncate(prefix);
            }
            let out = match which {
                Analysis::Complexity => analysis::subword_complexity(&x, n.unwrap_or(10))?.to_tsv(),
                Analysis::Quadratic => {
                    let c = parse_ratio(&c)?;
                    let profile = analysis::subword_complexity(&x, n.unwrap_or(14))?;
                    let check = analysis::quadratic_lower_check(&profile, c);
                    to_json(json!({
                        "prefix_length": x.len(),
                        "c": c.to_string(),
                        "values": profile.values,
                        "stabilized": profile.stabilized,
                        "holds": check.holds,
                        "first_violation": check.first_violation,
                        "holds_at_largest": check.holds_at_largest,
                    }))
                }
                Analysis::Invariance => {
                    let t = match transform {
                        TransformArg::Reverse => Transform::Reverse,
                        TransformArg::Mirror => Transform::Mirror,
                    };
                    let nmax = n.unwrap_or(6);
                    let violations = analysis::closure_report(&x, nmax, t)?;
                    to_json(json!({
                        "prefix_length": x.len(),
                        "transform": t,
                        "nmax": nmax,
                        "absent_in_prefix": violations,
                    }))
                }
                Analysis::Powers => {
                    if exponent < 2 {
                        return Err(CliError::usage("--exponent must be at least 2"));
                    }
                    if any_base {
                        let hit = analysis::first_power(&x, exponent);
                        print!(
                            "{}",
                            to_json(json!({
                                "prefix_length": x.len(),
                                "exponent": exponent,
                                "found": hit.is_some(),
                                "shortest": hit,
                            }))
                        );
                        return Ok(VERIFIED);
                    }
                    let hits = analysis::find_powers(&x, exponent, max_base);
                    to_json(json!({
                        "prefix_length": x.len(),
                        "exponent": exponent,
                        "max_base": max_base,
                        "count": hits.len(),
                        "occurrences": hits,
                    }))
                }
                Analysis::Frequency => {
                    if words.is_empty() {
                        return Err(CliError::usage("frequency needs at least one --word"));
                    }
                    let estimates = words
                        .iter()
                        .map(|w| {
                            let w = Word::parse(w, x.alphabet())
                                .map_err(|e| CliError::usage(format!("--word {w}: {e}")))?;
                            Ok(analysis::frequency(&x, &w)?)
                        })
                        .collect::<Result<Vec<_>, CliError>>()?;
                    to_json(json!({ "prefix_length": x.len(), "estimates": estimates }))
                }
                Analysis::Periodicity => {
                    let max_period = max_period.unwrap_or((x.len() / 3).min(1000));
                    let max_preperiod = max_preperiod.unwrap_or(x.len().saturating_sub(3 * max_period).min(1000));
                    let v = analysis::eventually_periodic_search(&x, max_preperiod, max_period)?;
                    to_json(json!({
                        "prefix_length": x.len(),
                        "max_preperiod": max_preperiod,
                        "max_period": max_period,
                        "found": v.found,
                        "preperiod": v.preperiod,
                        "period": v.period,
                    }))
                }
                Analysis::Recurrence => {
                    let report = analysis::recurrence_gap(&x, n.unwrap_or(3))?;
                    to_json(json!({ "prefix_length": x.len(), "report": report }))
                }
                Analysis::Language => {
                    let other = other.ok_or_else(|| CliError::usage("language needs --other"))?;
                    let other_scheme = SchemeArgs {
                        seed: other_seed,
                        start: other_start,
                        alphabet: scheme.alphabet.clone(),
                    };
                    let mut y = load_word(&other, prefix, &other_scheme)?;
                    if y.len() > prefix {
                        y.truncate(prefix);
                    }
                    let diffs = analysis::language_compare(&x, &y, n.unwrap_or(10))?;
                    to_json(json!({
                        "prefix_lengths": [x.len(), y.len()],
                        "comparisons": diffs,
                    }))
                }
            };
            print!("{out}");
            Ok(VERIFIED)
        }
        Command::Commute {
            kappa,
            sigma,
            gens,
            alphabet,
        } => {
            let alphabet = Alphabet::from_display(&alphabet)?;
            let kappa = load_block(&kappa, alphabet)?;
            let sigma = load_morphism(&sigma, alphabet)?;
            let generators = match gens {
                Some(list) => list
                    .split(',')
                    .map(|g| Word::parse(g.trim(), alphabet))
                    .collect::<Result<Vec<_>, _>>()?,
                None => kappa.domain(),
            };
            let report = check_commute(&kappa, &sigma, &generators)?;
            print!("{report}");
            Ok(if report.verdict { VERIFIED } else { failed() })
        }
        Command::SolveEq {
            file,
            max_len,
            max_other_len,
        } => {
            let text = source::read(&file)?;
            let sys = WordEquationSystem::parse(&text).map_err(|e| CliError::input(format!("{file}: {e}")))?;
            let mut bounds = SearchBounds::new(max_len);
            if let Some(m) = max_other_len {
                bounds = bounds.with_other_len(m);
            }
            let solutions = enumerate_solutions(&sys, bounds);
            let names: Vec<String> = sys.unknowns().iter().map(|u| u.name.to_string()).collect();
            let mut out = String::new();
            writeln!(out, "{}", sys.header()).unwrap();
            write!(out, "{sys}").unwrap();
            writeln!(out, "solutions with |{}| <= {}: {}", names[0], max_len, solutions.len()).unwrap();
            if !solutions.is_empty() {
                writeln!(out, "{}", names.join(",")).unwrap();
                for s in &solutions {
                    writeln!(out, "{s}").unwrap();
                }
            }
            writeln!(out, "parikh identities:").unwrap();
            write!(out, "{}", ParikhSystem::new(&sys)).unwrap();
            print!("{out}");
            Ok(VERIFIED)
        }
        Command::OeisCheck {
            source,
            bfile,
            scheme,
            offset,
            coding,
        } => oeis_check(&source, &bfile, &scheme, offset, coding),
    }
}

fn literal_iterate(scheme: &GenerationScheme, times: usize) -> Result<Word, CliError> {
    match scheme {
        GenerationScheme::TruncatedBlockIteration { substitution, seed } => {
            Ok(iterate_truncated(substitution, seed, times)?)
        }
        GenerationScheme::MorphismIteration { morphism, seed } => {
            let seed = Word::new(vec![*seed], morphism.alphabet())?;
            Ok(iterate_morphism_literal(morphism, &seed, times)?)
        }
        _ => Err(CliError::usage("--iterate needs a morphism or block substitution")),
    }
}

fn parse_ratio(text: &str) -> Result<Q, CliError> {
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    match (num.trim().parse::<i64>(), den.trim().parse::<i64>()) {
        (Ok(num), Ok(den)) if den != 0 => Ok(Q::new(num, den)),
        _ => Err(CliError::usage(format!("-c {text:?} is not an integer or fraction"))),
    }
}

fn to_json(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
    s.push('\n');
    s
}

/// Terms of a b-file: `index value` lines, `#` comments.
fn parse_bfile(text: &str) -> Result<Vec<(i64, i64)>, CliError> {
    let mut terms: Vec<(i64, i64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| CliError::input(format!("b-file line {}: {what}: {line:?}", i + 1));
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad("expected `index value`"));
        };
        let index: i64 = index.parse().map_err(|_| bad("bad index"))?;
        let value: i64 = value.parse().map_err(|_| bad("bad value"))?;
        if terms.last().is_some_and(|&(prev, _)| index <= prev) {
            return Err(bad("indices must increase"));
        }
        terms.push((index, value));
    }
    Ok(terms)
}

fn oeis_check(
    source: &str,
    bfile: &str,
    scheme: &SchemeArgs,
    offset: i64,
    coding: Coding,
) -> Result<ExitCode, CliError> {
    let terms = parse_bfile(&source::read(bfile)?)?;
    let Some(&(last, _)) = terms.last() else {
        eprintln!("warning: {bfile} has no terms; the match is vacuous");
        println!("match: 0 terms compared");
        return Ok(VERIFIED);
    };
    if let Some(&(first, _)) = terms.first().filter(|(i, _)| *i < offset) {
        return Err(CliError::input(format!(
            "b-file index {first} precedes offset {offset}"
        )));
    }
    let length = (last - offset + 1) as usize;
    let built = scheme.scheme(load_rules(source, scheme.alphabet()?)?)?;
    let word = coding.apply(&generate_prefix(&built, length)?)?;
    let digits: Vec<i64> = word
        .to_string()
        .chars()
        .map(|c| c.to_digit(10).map(i64::from))
        .collect::<Option<_>>()
        .ok_or_else(|| CliError::usage("sequence symbols must be digits"))?;
    for &(index, expected) in &terms {
        let got = digits[(index - offset) as usize];
        if got != expected {
            println!("mismatch at index {index}: b-file has {expected}, sequence has {got}");
            return Ok(failed());
        }
    }
    println!(
        "match: {} terms compared (indices {}..={})",
        terms.len(),
        terms[0].0,
        last
    );
    Ok(VERIFIED)
}
