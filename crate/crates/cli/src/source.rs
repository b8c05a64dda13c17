//! Resolving command-line arguments to rule sets, schemes and words.

use std::fs;
use std::path::Path;

use twoblock::catalog::{self, CatalogValue};
use twoblock::generation::generate_prefix;
use twoblock::{Alphabet, BlockSubstitution, GenerationScheme, Morphism, RuleSet, Symbol, Word};

use crate::CliError;

pub enum Rules {
    Morphism(Morphism),
    Block(BlockSubstitution),
    Scheme(GenerationScheme),
}

/// A catalog name, or a path to a rule file over `alphabet`.
pub fn load_rules(arg: &str, alphabet: Alphabet) -> Result<Rules, CliError> {
    if let Ok(entry) = catalog::lookup(arg) {
        return Ok(match entry.value {
            CatalogValue::Morphism(m) => Rules::Morphism(m),
            CatalogValue::Block(b) => Rules::Block(b),
            CatalogValue::Scheme(s) => Rules::Scheme(s),
        });
    }
    if Path::new(arg).is_file() {
        let text = read(arg)?;
        return Ok(
            match RuleSet::parse(&text, alphabet).map_err(|e| CliError::input(format!("{arg}: {e}")))? {
                RuleSet::Morphism(m) => Rules::Morphism(m),
                RuleSet::Block(b) => Rules::Block(b),
            },
        );
    }
    Err(CliError::usage(format!(
        "{arg:?} is neither a catalog name nor a readable file"
    )))
}

pub fn load_morphism(arg: &str, alphabet: Alphabet) -> Result<Morphism, CliError> {
    match load_rules(arg, alphabet)? {
        Rules::Morphism(m) => Ok(m),
        _ => Err(CliError::usage(format!("{arg:?} is not a morphism"))),
    }
}

pub fn load_block(arg: &str, alphabet: Alphabet) -> Result<BlockSubstitution, CliError> {
    match load_rules(arg, alphabet)? {
        Rules::Block(b) => Ok(b),
        _ => Err(CliError::usage(format!("{arg:?} is not a block substitution"))),
    }
}

pub fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))
}

/// Seed and start overrides shared by `generate`, `analyze` and `oeis-check`.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct SchemeArgs {
    /// Seed word (block iteration) or letter (morphism iteration).
    #[arg(long)]
    pub seed: Option<String>,
    /// First run length of a self-reading word: 1 or 2.
    #[arg(long)]
    pub start: Option<char>,
    /// Display characters for rule files and seeds.
    #[arg(long, default_value = "01")]
    pub alphabet: String,
}

impl SchemeArgs {
    pub fn alphabet(&self) -> Result<Alphabet, CliError> {
        Ok(Alphabet::from_display(&self.alphabet)?)
    }

    fn seed_word(&self, alphabet: Alphabet) -> Result<Option<Word>, CliError> {
        self.seed
            .as_deref()
            .map(|s| Word::parse(s, alphabet).map_err(|e| CliError::usage(format!("--seed: {e}"))))
            .transpose()
    }

    fn seed_letter(&self, alphabet: Alphabet) -> Result<Option<Symbol>, CliError> {
        match self.seed_word(alphabet)? {
            None => Ok(None),
            Some(w) if w.len() == 1 => Ok(w.get(0)),
            Some(w) => Err(CliError::usage(format!("morphism seed must be one letter, got {w}"))),
        }
    }

    /// The scheme for `rules`, with seed and start applied.
    pub fn scheme(&self, rules: Rules) -> Result<GenerationScheme, CliError> {
        match rules {
            Rules::Morphism(morphism) => {
                let seed = self
                    .seed_letter(morphism.alphabet())?
                    .ok_or_else(|| CliError::usage("a morphism needs --seed"))?;
                Ok(GenerationScheme::MorphismIteration { morphism, seed })
            }
            Rules::Block(substitution) => {
                let seed = self
                    .seed_word(substitution.alphabet())?
                    .ok_or_else(|| CliError::usage("a block substitution needs --seed"))?;
                Ok(GenerationScheme::TruncatedBlockIteration { substitution, seed })
            }
            Rules::Scheme(scheme) => self.override_scheme(scheme),
        }
    }

    fn override_scheme(&self, scheme: GenerationScheme) -> Result<GenerationScheme, CliError> {
        Ok(match scheme {
            GenerationScheme::MorphismIteration { morphism, seed } => {
                let seed = self.seed_letter(morphism.alphabet())?.unwrap_or(seed);
                GenerationScheme::MorphismIteration { morphism, seed }
            }
            GenerationScheme::TruncatedBlockIteration { substitution, seed } => {
                let seed = self.seed_word(substitution.alphabet())?.unwrap_or(seed);
                GenerationScheme::TruncatedBlockIteration { substitution, seed }
            }
            GenerationScheme::SelfReading { start } => {
                let start = match self.start {
                    None => start,
                    Some(c) => Alphabet::runs()
                        .symbol_of(c)
                        .ok_or_else(|| CliError::usage(format!("--start must be 1 or 2, got {c}")))?,
                };
                GenerationScheme::SelfReading { start }
            }
            other => other,
        })
    }
}

/// Parses a literal word: binary if it only uses 0 and 1, run coding if it only uses 1 and 2.
pub fn literal_word(text: &str) -> Result<Word, CliError> {
    let text = text.trim();
    Word::parse(text, Alphabet::binary())
        .or_else(|_| Word::parse(text, Alphabet::runs()))
        .map_err(|_| CliError::usage(format!("{text:?} is not a catalog name, file, or word over 01 or 12")))
}

/// A catalog name or rule file (generated to `length`), a file holding a word, or a literal word.
pub fn load_word(arg: &str, length: usize, scheme_args: &SchemeArgs) -> Result<Word, CliError> {
    if catalog::lookup(arg).is_ok() {
        let scheme = scheme_args.scheme(load_rules(arg, scheme_args.alphabet()?)?)?;
        return Ok(generate_prefix(&scheme, length)?);
    }
    if Path::new(arg).is_file() {
        let text = read(arg)?;
        if text.contains("->") {
            let scheme = scheme_args.scheme(load_rules(arg, scheme_args.alphabet()?)?)?;
            return Ok(generate_prefix(&scheme, length)?);
        }
        return literal_word(&text);
    }
    literal_word(arg)
}
