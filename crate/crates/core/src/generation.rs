//! Prefixes of fixed points.
//!
//! Block substitutions that are not block-stable cannot be iterated on whole
//! words, but the truncated map (drop the incomplete trailing block, then
//! substitute) can. Starting from a seed that is a proper prefix of its own
//! truncated image, the iterates form a prefix chain converging to a fixed
//! point. Recurrences and the self-reading Kolakoski construction are kept
//! here as independent producers for cross-checking.

use crate::error::{Error, Result};
use crate::substitution::{BlockSubstitution, Morphism};
use crate::word::{Alphabet, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recurrence {
    /// `t(2n) = t(n)`, `t(2n+1) = 1 - t(n)`, `t(0) = 0`.
    ThueMorse,
    /// `x(3n) = x(2n)`, `x(3n+1) = x(2n+1)`, `x(3n+2) = 1 - x(2n+1)`, `x(0) = x(1) = 0`.
    TmBlockFix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenerationScheme {
    MorphismIteration {
        morphism: Morphism,
        seed: Symbol,
    },
    TruncatedBlockIteration {
        substitution: BlockSubstitution,
        seed: Word,
    },
    Recurrence(Recurrence),
    /// Kolakoski-type self-reading word over [`Alphabet::runs`]; `start` is 0 for a
    /// leading run symbol `1` and 1 for `2`.
    SelfReading {
        start: Symbol,
    },
}

impl GenerationScheme {
    pub fn alphabet(&self) -> Alphabet {
        match self {
            Self::MorphismIteration { morphism, .. } => morphism.alphabet(),
            Self::TruncatedBlockIteration { substitution, .. } => substitution.alphabet(),
            Self::Recurrence(_) => Alphabet::binary(),
            Self::SelfReading { .. } => Alphabet::runs(),
        }
    }

    /// Checks the seed conditions that make iteration converge.
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::MorphismIteration { morphism, seed } => {
                if !morphism.alphabet().contains(*seed) {
                    return Err(Error::InvalidSeed(format!("letter {seed} outside the alphabet")));
                }
                if !morphism.is_prolongable_on(*seed) {
                    return Err(Error::InvalidSeed(format!(
                        "image of {} does not extend it",
                        morphism.alphabet().display(*seed)
                    )));
                }
                Ok(())
            }
            Self::TruncatedBlockIteration { substitution, seed } => {
                let image = substitution.apply_truncated(seed)?;
                if !image.starts_with(seed) {
                    return Err(Error::InvalidSeed(format!(
                        "{seed} is not a prefix of its image {image}"
                    )));
                }
                if image.len() == seed.len() {
                    return Err(Error::GenerationStalled { length: seed.len() });
                }
                Ok(())
            }
            Self::Recurrence(_) => Ok(()),
            Self::SelfReading { start } => {
                if *start > 1 {
                    return Err(Error::InvalidSeed(format!("start symbol {start} is not a run length")));
                }
                Ok(())
            }
        }
    }
}

/// Domain blocks whose image has the block itself as a proper prefix.
pub fn block_fixed_point_seeds(kappa: &BlockSubstitution) -> Vec<Word> {
    kappa
        .rules()
        .filter(|(block, image)| block.is_proper_prefix_of(image))
        .map(|(block, _)| block)
        .collect()
}

/// The length-`n` prefix of the fixed point described by `scheme`.
pub fn generate_prefix(scheme: &GenerationScheme, n: usize) -> Result<Word> {
    scheme.validate()?;
    match scheme {
        GenerationScheme::MorphismIteration { morphism, seed } => Ok(iterate_morphism(morphism, *seed, n)),
        GenerationScheme::TruncatedBlockIteration { substitution, seed } => {
            iterate_truncated_to_length(substitution, seed, n)
        }
        GenerationScheme::Recurrence(Recurrence::ThueMorse) => Ok(thue_morse(n)),
        GenerationScheme::Recurrence(Recurrence::TmBlockFix) => Ok(tm_blockfix_recurrence(n)),
        GenerationScheme::SelfReading { start } => Ok(kolakoski_selfread(n, *start)),
    }
}

fn iterate_morphism(m: &Morphism, seed: Symbol, n: usize) -> Word {
    // The fixed point x satisfies x = m(x), so x can be written while it is read.
    let mut buf = m.image(seed).symbols().to_vec();
    let mut read = 1;
    while buf.len() < n {
        let letter = buf[read];
        buf.extend_from_slice(m.image(letter).symbols());
        read += 1;
    }
    buf.truncate(n);
    Word::from_raw(buf, m.alphabet())
}

fn iterate_truncated_to_length(kappa: &BlockSubstitution, seed: &Word, n: usize) -> Result<Word> {
    let k = kappa.k();
    let aligned = seed.len() - seed.len() % k;
    let mut buf = Vec::with_capacity(n + 2 * k);
    kappa.apply_symbols(&seed.symbols()[..aligned], 0, &mut buf)?;
    // Invariant: buf == kappa(buf[..read]), with read a multiple of k.
    let mut read = aligned;
    while buf.len() < n {
        if read + k > buf.len() {
            return Err(Error::GenerationStalled { length: buf.len() });
        }
        let mut block = [0; 16];
        block[..k].copy_from_slice(&buf[read..read + k]);
        kappa.apply_symbols(&block[..k], read, &mut buf)?;
        read += k;
    }
    buf.truncate(n);
    Ok(Word::from_raw(buf, kappa.alphabet()))
}

/// `iterations` literal applications of the truncated map to `seed`.
pub fn iterate_truncated(kappa: &BlockSubstitution, seed: &Word, iterations: usize) -> Result<Word> {
    let mut w = seed.clone();
    for _ in 0..iterations {
        w = kappa.apply_truncated(&w)?;
    }
    Ok(w)
}

/// `iterations` literal applications of `m` to `seed`.
pub fn iterate_morphism_literal(m: &Morphism, seed: &Word, iterations: usize) -> Result<Word> {
    let mut w = seed.clone();
    for _ in 0..iterations {
        w = m.apply(&w)?;
    }
    Ok(w)
}

/// Shortest extension `s` of `block` (up to `max_len` symbols) such that the
/// truncated image of `s` has `s` as a proper prefix and keeps growing.
pub fn find_block_seed(kappa: &BlockSubstitution, block: &Word, max_len: usize) -> Option<Word> {
    let alphabet = kappa.alphabet();
    let mut layer = vec![block.clone()];
    while let Some(first) = layer.first() {
        if first.len() > max_len {
            break;
        }
        for s in &layer {
            let candidate = GenerationScheme::TruncatedBlockIteration {
                substitution: kappa.clone(),
                seed: s.clone(),
            };
            if candidate.validate().is_ok() {
                if let Ok(image) = kappa.apply_truncated(s) {
                    if matches!(kappa.apply_truncated(&image), Ok(next) if next.len() > image.len()) {
                        return Some(s.clone());
                    }
                }
            }
        }
        layer = layer
            .iter()
            .flat_map(|s| {
                (0..alphabet.size() as Symbol).map(move |c| {
                    let mut symbols = s.symbols().to_vec();
                    symbols.push(c);
                    Word::from_raw(symbols, alphabet)
                })
            })
            .collect();
    }
    None
}

/// Prefix of the Thue-Morse word computed from its index recurrence.
pub fn thue_morse(n: usize) -> Word {
    let mut t: Vec<Symbol> = Vec::with_capacity(n);
    for i in 0..n {
        let value = match i {
            0 => 0,
            _ if i % 2 == 0 => t[i / 2],
            _ => 1 - t[i / 2],
        };
        t.push(value);
    }
    Word::from_raw(t, Alphabet::binary())
}

/// Prefix of the Thue-Morse two-block fixed point starting with `00`,
/// computed from its index recurrence alone.
pub fn tm_blockfix_recurrence(n: usize) -> Word {
    let mut x: Vec<Symbol> = Vec::with_capacity(n);
    for i in 0..n {
        let (q, r) = (i / 3, i % 3);
        let value = match (i, r) {
            (0 | 1, _) => 0,
            (_, 0) => x[2 * q],
            (_, 1) => x[2 * q + 1],
            _ => 1 - x[2 * q + 1],
        };
        x.push(value);
    }
    Word::from_raw(x, Alphabet::binary())
}

/// Self-reading word over the run alphabet whose run lengths spell the word itself.
/// `start` is the first symbol: 0 renders as `1`, 1 renders as `2`.
pub fn kolakoski_selfread(n: usize, start: Symbol) -> Word {
    assert!(start <= 1, "start must be a run-alphabet symbol");
    let mut s: Vec<Symbol> = Vec::with_capacity(n + 2);
    let mut current = start;
    let mut read = 0;
    while s.len() < n {
        // Reading the position being written means reading the current symbol.
        let run = if read < s.len() { s[read] } else { current };
        for _ in 0..=run {
            s.push(current);
        }
        current = 1 - current;
        read += 1;
    }
    s.truncate(n);
    Word::from_raw(s, Alphabet::runs())
}

/// True iff `x` and its truncated image agree on their common prefix.
pub fn fixed_point_property_check(kappa: &BlockSubstitution, x: &Word) -> Result<bool> {
    let image = kappa.apply_truncated(x)?;
    let common = image.len().min(x.len());
    Ok(image.symbols()[..common] == x.symbols()[..common])
}
