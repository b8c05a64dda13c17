//! Finite words over small alphabets.
//!
//! Symbols are small integers `0..size`. An [`Alphabet`] carries a display
//! map so that the same symbols can be printed as `0/1` or as run lengths
//! `1/2`; recoding between the two never touches the symbols themselves.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Symbol = u8;

const MAX_ALPHABET: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    size: u8,
    display: [char; MAX_ALPHABET],
}

impl Alphabet {
    /// Builds an alphabet whose symbol `i` is rendered as the `i`-th char of `display`.
    pub fn from_display(display: &str) -> Result<Self> {
        let chars: Vec<char> = display.chars().collect();
        if chars.is_empty() || chars.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet);
        }
        let distinct: HashSet<char> = chars.iter().copied().collect();
        if distinct.len() != chars.len() {
            return Err(Error::InvalidAlphabet);
        }
        let mut map = ['\0'; MAX_ALPHABET];
        map[..chars.len()].copy_from_slice(&chars);
        Ok(Self {
            size: chars.len() as u8,
            display: map,
        })
    }

    /// `{0, 1}` rendered as `0` and `1`.
    pub fn binary() -> Self {
        Self {
            size: 2,
            display: ['0', '1', '\0', '\0'],
        }
    }

    /// The run-length alphabet: symbol 0 is a run of length 1, symbol 1 a run of length 2.
    pub fn runs() -> Self {
        Self {
            size: 2,
            display: ['1', '2', '\0', '\0'],
        }
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn is_binary(&self) -> bool {
        self.size == 2
    }

    pub fn display(&self, symbol: Symbol) -> char {
        self.display[symbol as usize]
    }

    pub fn symbol_of(&self, c: char) -> Option<Symbol> {
        self.display[..self.size()]
            .iter()
            .position(|&d| d == c)
            .map(|i| i as Symbol)
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        (symbol as usize) < self.size()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: String = self.display[..self.size()].iter().collect();
        write!(f, "Alphabet({shown})")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, alphabet: Alphabet) -> Result<Self> {
        if let Some(position) = symbols.iter().position(|&s| !alphabet.contains(s)) {
            return Err(Error::InvalidSymbol {
                position,
                found: char::from_digit(symbols[position] as u32, 10).unwrap_or('?'),
            });
        }
        Ok(Self { symbols, alphabet })
    }

    /// Caller guarantees every symbol is valid for `alphabet`.
    pub(crate) fn from_raw(symbols: Vec<Symbol>, alphabet: Alphabet) -> Self {
        debug_assert!(symbols.iter().all(|&s| alphabet.contains(s)));
        Self { symbols, alphabet }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            symbols: Vec::new(),
            alphabet,
        }
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let symbols = text
            .chars()
            .enumerate()
            .map(|(position, c)| alphabet.symbol_of(c).ok_or(Error::InvalidSymbol { position, found: c }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { symbols, alphabet })
    }

    /// Parses a word over the binary alphabet.
    pub fn binary(text: &str) -> Result<Self> {
        Self::parse(text, Alphabet::binary())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Symbol> {
        self.symbols.get(i).copied()
    }

    pub fn slice(&self, range: Range<usize>) -> Word {
        Word::from_raw(self.symbols[range].to_vec(), self.alphabet)
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.slice(0..n.min(self.len()))
    }

    pub fn truncate(&mut self, n: usize) {
        self.symbols.truncate(n);
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.symbols.starts_with(&other.symbols)
    }

    pub fn is_proper_prefix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && other.starts_with(self)
    }

    /// Length of the longest common prefix.
    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.symbols
            .iter()
            .zip(&other.symbols)
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word::from_raw(symbols, self.alphabet)
    }

    pub fn push_word(&mut self, other: &Word) {
        self.symbols.extend_from_slice(&other.symbols);
    }

    /// Same symbols, different display map. Sizes must agree.
    pub fn recode(&self, alphabet: Alphabet) -> Result<Word> {
        if alphabet.size() != self.alphabet.size() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.size(),
                found: alphabet.size(),
            });
        }
        Ok(Word::from_raw(self.symbols.clone(), alphabet))
    }

    /// Number of occurrences of `symbol`.
    pub fn count(&self, symbol: Symbol) -> usize {
        self.symbols.iter().filter(|&&s| s == symbol).count()
    }

    /// Letter counts indexed by symbol.
    pub fn parikh_vector(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet.size()];
        for &s in &self.symbols {
            counts[s as usize] += 1;
        }
        counts
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.symbols.iter().map(|&s| self.alphabet.display(s)).collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All distinct factors of one fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    n: usize,
    factors: BTreeSet<Word>,
}

impl FactorSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.factors.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.factors.iter()
    }
}

/// Replaces every symbol `s` of a binary word by `1 - s`.
pub fn mirror(w: &Word) -> Result<Word> {
    if !w.alphabet.is_binary() {
        return Err(Error::NonBinaryAlphabet);
    }
    Ok(Word::from_raw(w.symbols.iter().map(|&s| 1 - s).collect(), w.alphabet))
}

pub fn reverse(w: &Word) -> Word {
    Word::from_raw(w.symbols.iter().rev().copied().collect(), w.alphabet)
}

/// The set of distinct length-`n` factors of `w`.
pub fn factors(w: &Word, n: usize) -> FactorSet {
    let factors = if n > w.len() {
        BTreeSet::new()
    } else if n == 0 {
        BTreeSet::from([Word::empty(w.alphabet)])
    } else {
        let distinct: HashSet<&[Symbol]> = w.symbols.windows(n).collect();
        distinct
            .into_iter()
            .map(|f| Word::from_raw(f.to_vec(), w.alphabet))
            .collect()
    };
    FactorSet { n, factors }
}

/// Knuth-Morris-Pratt failure function: `fail[i]` is the length of the
/// longest proper border of `pattern[..=i]`.
pub(crate) fn failure_function(pattern: &[Symbol]) -> Vec<usize> {
    let mut fail = vec![0; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Start positions of all (possibly overlapping) occurrences of `needle`.
pub fn find_all(haystack: &Word, needle: &Word) -> Vec<usize> {
    let pattern = needle.symbols();
    let text = haystack.symbols();
    if pattern.is_empty() {
        return (0..=text.len()).collect();
    }
    let fail = failure_function(pattern);
    let mut hits = Vec::new();
    let mut k = 0;
    for (i, &c) in text.iter().enumerate() {
        while k > 0 && c != pattern[k] {
            k = fail[k - 1];
        }
        if c == pattern[k] {
            k += 1;
        }
        if k == pattern.len() {
            hits.push(i + 1 - k);
            k = fail[k - 1];
        }
    }
    hits
}

/// First occurrence of `needle` in `haystack`. The empty needle occurs at 0.
pub fn find(haystack: &Word, needle: &Word) -> Option<usize> {
    let pattern = needle.symbols();
    if pattern.is_empty() {
        return Some(0);
    }
    let fail = failure_function(pattern);
    let mut k = 0;
    for (i, &c) in haystack.symbols().iter().enumerate() {
        while k > 0 && c != pattern[k] {
            k = fail[k - 1];
        }
        if c == pattern[k] {
            k += 1;
        }
        if k == pattern.len() {
            return Some(i + 1 - k);
        }
    }
    None
}

/// Replaces each run length in `runs` by the run itself, alternating symbols
/// from `start`. Symbol 0 of the run alphabet is a run of length 1, symbol 1
/// a run of length 2; the output uses the same alphabet as `runs`.
pub fn run_length_expand(runs: &Word, start: Symbol) -> Result<Word> {
    if !runs.alphabet.is_binary() {
        return Err(Error::NonBinaryAlphabet);
    }
    if start > 1 {
        return Err(Error::InvalidSymbol {
            position: 0,
            found: char::from_digit(start as u32, 10).unwrap_or('?'),
        });
    }
    let mut out = Vec::with_capacity(runs.len() * 2);
    let mut current = start;
    for &r in runs.symbols() {
        for _ in 0..=r {
            out.push(current);
        }
        current = 1 - current;
    }
    Ok(Word::from_raw(out, runs.alphabet))
}

/// Reads off the run lengths of `w` as a word over [`Alphabet::runs`].
pub fn run_lengths(w: &Word) -> Result<Word> {
    let mut out = Vec::new();
    let mut i = 0;
    let s = w.symbols();
    while i < s.len() {
        let mut j = i + 1;
        while j < s.len() && s[j] == s[i] {
            j += 1;
        }
        if j - i > 2 {
            return Err(Error::RunTooLong { position: i });
        }
        out.push((j - i - 1) as Symbol);
        i = j;
    }
    Ok(Word::from_raw(out, Alphabet::runs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bin(s: &str) -> Word {
        Word::binary(s).unwrap()
    }

    fn runs(s: &str) -> Word {
        Word::parse(s, Alphabet::runs()).unwrap()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(bin("001110").symbols(), &[0, 0, 1, 1, 1, 0]);
        assert!(bin("").is_empty());
        assert_eq!(runs("21221").to_string(), "21221");
        assert_eq!(runs("21221").symbols(), &[1, 0, 1, 1, 0]);
        assert_eq!(
            Word::binary("01a1"),
            Err(Error::InvalidSymbol {
                position: 2,
                found: 'a'
            })
        );
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::from_display("").is_err());
        assert!(Alphabet::from_display("aa").is_err());
        assert!(Alphabet::from_display("abcde").is_err());
        let abc = Alphabet::from_display("abc").unwrap();
        assert_eq!(Word::parse("cab", abc).unwrap().symbols(), &[2, 0, 1]);
        assert!(Word::new(vec![0, 3], abc).is_err());
    }

    #[test]
    fn recoding_runs_as_bits() {
        let k = runs("221121");
        assert_eq!(k.recode(Alphabet::binary()).unwrap().to_string(), "110010");
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(mirror(&bin("0011101011")).unwrap(), bin("1100010100"));
        assert_eq!(mirror(&bin("")).unwrap(), bin(""));
        assert_eq!(mirror(&bin("01")).unwrap(), bin("10"));
        let abc = Alphabet::from_display("abc").unwrap();
        assert_eq!(mirror(&Word::parse("ab", abc).unwrap()), Err(Error::NonBinaryAlphabet));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse(&bin("001000")), bin("000100"));
        assert_eq!(reverse(&bin("010")), bin("010"));
        assert_eq!(reverse(&bin("")), bin(""));
    }

    #[test]
    fn factor_examples() {
        let f = factors(&bin("0011"), 2);
        let got: Vec<String> = f.iter().map(|w| w.to_string()).collect();
        assert_eq!(got, ["00", "01", "11"]);
        assert_eq!(factors(&bin("001110"), 1).len(), 2);
        let zero = factors(&bin("01"), 0);
        assert_eq!(zero.len(), 1);
        assert!(zero.contains(&bin("")));
        assert!(factors(&bin("01"), 3).is_empty());
    }

    #[test]
    fn find_examples() {
        assert_eq!(find(&bin("001110"), &bin("111")), Some(2));
        assert_eq!(find(&bin("000"), &bin("1")), None);
        assert_eq!(find(&bin("101"), &bin("")), Some(0));
        assert_eq!(find_all(&bin("0000"), &bin("00")), vec![0, 1, 2]);
    }

    #[test]
    fn run_length_examples() {
        let two = 1; // symbol for '2' in the run alphabet
        assert_eq!(
            run_length_expand(&runs("2122121221"), two).unwrap().to_string(),
            "2212211211211221"
        );
        assert_eq!(run_length_expand(&runs("1"), 0).unwrap().to_string(), "1");
        assert_eq!(run_length_expand(&runs("22"), two).unwrap().to_string(), "2211");

        assert_eq!(
            run_lengths(&runs("2212211211211221")).unwrap().to_string(),
            "2122121221"
        );
        assert_eq!(run_lengths(&runs("2211")).unwrap().to_string(), "22");
        assert_eq!(run_lengths(&runs("222")), Err(Error::RunTooLong { position: 0 }));
        assert_eq!(run_lengths(&bin("01000")), Err(Error::RunTooLong { position: 2 }));
    }

    fn binary_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..2, 0..max).prop_map(|v| Word::new(v, Alphabet::binary()).unwrap())
    }

    proptest! {
        #[test]
        fn reverse_and_mirror_are_involutions(w in binary_word(64)) {
            prop_assert_eq!(reverse(&reverse(&w)), w.clone());
            prop_assert_eq!(mirror(&mirror(&w).unwrap()).unwrap(), w);
        }

        #[test]
        fn factor_count_is_bounded(w in binary_word(64), n in 0usize..10) {
            prop_assume!(n <= w.len());
            let bound = 2usize.pow(n as u32).min(w.len() - n + 1);
            prop_assert!(factors(&w, n).len() <= bound);
        }

        #[test]
        fn run_lengths_inverts_expansion(
            r in prop::collection::vec(0u8..2, 0..40),
            start in 0u8..2,
        ) {
            let r = Word::new(r, Alphabet::runs()).unwrap();
            let expanded = run_length_expand(&r, start).unwrap();
            prop_assert_eq!(run_lengths(&expanded).unwrap(), r);
        }

        #[test]
        fn found_needle_is_a_factor(h in binary_word(64), n in binary_word(6)) {
            match find(&h, &n) {
                Some(i) => {
                    prop_assert_eq!(h.slice(i..i + n.len()), n.clone());
                    prop_assert!(factors(&h, n.len()).contains(&n));
                }
                None => prop_assert!(!factors(&h, n.len()).contains(&n)),
            }
        }
    }
}
