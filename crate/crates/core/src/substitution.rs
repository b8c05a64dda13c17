//! Morphisms and k-block substitutions.
//!
//! A [`BlockSubstitution`] is a partial map from length-`k` blocks to words,
//! acting on words whose length is a multiple of `k` by replacing aligned
//! blocks. Undefined blocks are reported as errors rather than filled in.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// A non-erasing endomorphism of `A*`.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of letter `i`.
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.size() {
            return Err(Error::AlphabetMismatch {
                expected: alphabet.size(),
                found: images.len(),
            });
        }
        for (letter, image) in images.iter().enumerate() {
            if image.alphabet().size() != alphabet.size() {
                return Err(Error::AlphabetMismatch {
                    expected: alphabet.size(),
                    found: image.alphabet().size(),
                });
            }
            if image.is_empty() {
                return Err(Error::ErasingImage {
                    letter: alphabet.display(letter as Symbol),
                });
            }
        }
        let images = images
            .into_iter()
            .map(|w| Word::from_raw(w.into_symbols(), alphabet))
            .collect();
        Ok(Self { alphabet, images })
    }

    /// Binary morphism from the textual images of 0 and 1.
    pub fn binary(zero: &str, one: &str) -> Result<Self> {
        Self::new(Alphabet::binary(), vec![Word::binary(zero)?, Word::binary(one)?])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn image(&self, letter: Symbol) -> &Word {
        &self.images[letter as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    fn check_alphabet(&self, w: &Word) -> Result<()> {
        if w.alphabet().size() != self.alphabet.size() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.size(),
                found: w.alphabet().size(),
            });
        }
        Ok(())
    }

    pub(crate) fn apply_symbols(&self, symbols: &[Symbol], out: &mut Vec<Symbol>) {
        for &s in symbols {
            out.extend_from_slice(self.images[s as usize].symbols());
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.check_alphabet(w)?;
        let mut out = Vec::with_capacity(w.len() * 2);
        self.apply_symbols(w.symbols(), &mut out);
        Ok(Word::from_raw(out, self.alphabet))
    }

    /// `self ∘ inner`: the letter `a` maps to `self(inner(a))`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        let images = inner.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>>>()?;
        Morphism::new(self.alphabet, images)
    }

    /// The `n`-fold iterate, `n >= 1`.
    pub fn power(&self, n: usize) -> Result<Morphism> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// True iff the image of `letter` starts with `letter` and is longer than one symbol,
    /// so that iteration from `letter` converges to a fixed point.
    pub fn is_prolongable_on(&self, letter: Symbol) -> bool {
        let image = self.image(letter);
        image.len() > 1 && image.symbols()[0] == letter
    }

    /// Whether the image lengths of 0 and 1 have the same parity.
    pub fn conjugation_admissible(&self) -> Result<bool> {
        if !self.alphabet.is_binary() {
            return Err(Error::NonBinaryAlphabet);
        }
        Ok(self.images[0].len() % 2 == self.images[1].len() % 2)
    }

    pub fn to_rule_text(&self) -> String {
        let mut out = String::new();
        for (letter, image) in self.images.iter().enumerate() {
            out.push_str(&format!("{} -> {}\n", self.alphabet.display(letter as Symbol), image));
        }
        out
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, w)| format!("{}->{}", self.alphabet.display(i as Symbol), w))
            .collect();
        write!(f, "Morphism({})", rules.join(", "))
    }
}

// Dense tables above this size are refused.
const MAX_TABLE: usize = 1 << 16;

/// A partial map from length-`k` blocks to words.
#[derive(Clone, PartialEq, Eq)]
pub struct BlockSubstitution {
    k: usize,
    alphabet: Alphabet,
    // Indexed by the big-endian code of the block, so iteration order is lexicographic.
    table: Vec<Option<Word>>,
}

impl BlockSubstitution {
    pub fn new(k: usize, alphabet: Alphabet, rules: impl IntoIterator<Item = (Word, Word)>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidBlockLength(k));
        }
        let slots = alphabet
            .size()
            .checked_pow(k as u32)
            .filter(|&n| n <= MAX_TABLE)
            .ok_or(Error::InvalidBlockLength(k))?;
        let mut table = vec![None; slots];
        for (block, image) in rules {
            if block.len() != k {
                return Err(Error::BlockLengthMismatch {
                    left: block.len(),
                    right: k,
                });
            }
            for w in [&block, &image] {
                if w.alphabet().size() != alphabet.size() {
                    return Err(Error::AlphabetMismatch {
                        expected: alphabet.size(),
                        found: w.alphabet().size(),
                    });
                }
            }
            let code = block_code(block.symbols(), alphabet.size());
            table[code] = Some(Word::from_raw(image.into_symbols(), alphabet));
        }
        if table.iter().all(Option::is_none) {
            return Err(Error::EmptyDomain);
        }
        Ok(Self { k, alphabet, table })
    }

    /// Binary block substitution from textual `(block, image)` pairs; `k` is
    /// taken from the first block.
    pub fn binary(rules: &[(&str, &str)]) -> Result<Self> {
        let k = rules.first().map_or(0, |(b, _)| b.chars().count());
        let parsed = rules
            .iter()
            .map(|(b, i)| Ok((Word::binary(b)?, Word::binary(i)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, Alphabet::binary(), parsed)
    }

    /// The map `B ↦ B` on `domain`.
    pub fn identity(k: usize, alphabet: Alphabet, domain: &[Word]) -> Result<Self> {
        Self::new(k, alphabet, domain.iter().map(|b| (b.clone(), b.clone())))
    }

    /// The block substitution `B ↦ m(B)` on `domain`.
    pub fn induced(m: &Morphism, k: usize, domain: &[Word]) -> Result<Self> {
        let rules = domain
            .iter()
            .map(|b| Ok((b.clone(), m.apply(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, m.alphabet(), rules)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn image(&self, block: &[Symbol]) -> Option<&Word> {
        if block.len() != self.k || block.iter().any(|&s| !self.alphabet.contains(s)) {
            return None;
        }
        self.table[block_code(block, self.alphabet.size())].as_ref()
    }

    pub fn contains_block(&self, block: &[Symbol]) -> bool {
        self.image(block).is_some()
    }

    /// Domain blocks in lexicographic order.
    pub fn domain(&self) -> Vec<Word> {
        self.rules().map(|(b, _)| b).collect()
    }

    /// `(block, image)` pairs in lexicographic block order.
    pub fn rules(&self) -> impl Iterator<Item = (Word, &Word)> + '_ {
        self.table
            .iter()
            .enumerate()
            .filter_map(move |(code, image)| image.as_ref().map(|w| (decode_block(code, self.k, self.alphabet), w)))
    }

    fn check_alphabet(&self, w: &Word) -> Result<()> {
        if w.alphabet().size() != self.alphabet.size() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.size(),
                found: w.alphabet().size(),
            });
        }
        Ok(())
    }

    /// Appends the images of the aligned blocks of `symbols` (whose length is
    /// a multiple of `k`); `offset` is only used for error positions.
    pub(crate) fn apply_symbols(&self, symbols: &[Symbol], offset: usize, out: &mut Vec<Symbol>) -> Result<()> {
        for (i, block) in symbols.chunks_exact(self.k).enumerate() {
            match self.table[block_code(block, self.alphabet.size())].as_ref() {
                Some(image) => out.extend_from_slice(image.symbols()),
                None => {
                    return Err(Error::BlockNotInDomain {
                        block: Word::from_raw(block.to_vec(), self.alphabet).to_string(),
                        position: offset + i * self.k,
                    })
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.check_alphabet(w)?;
        if !w.len().is_multiple_of(self.k) {
            return Err(Error::LengthNotDivisible {
                length: w.len(),
                k: self.k,
            });
        }
        let mut out = Vec::with_capacity(w.len() * 2);
        self.apply_symbols(w.symbols(), 0, &mut out)?;
        Ok(Word::from_raw(out, self.alphabet))
    }

    /// Applies the substitution after dropping the trailing `len mod k` symbols.
    pub fn apply_truncated(&self, w: &Word) -> Result<Word> {
        self.check_alphabet(w)?;
        if w.len() < self.k {
            return Err(Error::WordTooShort {
                length: w.len(),
                k: self.k,
            });
        }
        let usable = w.len() - w.len() % self.k;
        let mut out = Vec::with_capacity(usable * 2);
        self.apply_symbols(&w.symbols()[..usable], 0, &mut out)?;
        Ok(Word::from_raw(out, self.alphabet))
    }

    /// True iff every image length is a multiple of `k`.
    pub fn is_stable(&self) -> bool {
        self.rules().all(|(_, image)| image.len() % self.k == 0)
    }

    /// `outer ∘ inner`: each block `B` maps to `outer(inner(B))`.
    pub fn compose(outer: &BlockSubstitution, inner: &BlockSubstitution) -> Result<Self> {
        if outer.k != inner.k {
            return Err(Error::BlockLengthMismatch {
                left: outer.k,
                right: inner.k,
            });
        }
        if !inner.is_stable() {
            return Err(Error::NotStable);
        }
        let rules = inner
            .rules()
            .map(|(b, image)| Ok((b, outer.apply(image)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(inner.k, inner.alphabet, rules)
    }

    /// The `n`-fold composition with itself, `n >= 1`. Requires stability when `n > 1`.
    pub fn power(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = Self::compose(self, &acc)?;
        }
        Ok(acc)
    }

    pub fn to_rule_text(&self) -> String {
        self.rules().map(|(b, image)| format!("{b} -> {image}\n")).collect()
    }
}

impl fmt::Debug for BlockSubstitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self.rules().map(|(b, w)| format!("{b}->{w}")).collect();
        write!(f, "BlockSubstitution(k={}, {})", self.k, rules.join(", "))
    }
}

fn block_code(block: &[Symbol], base: usize) -> usize {
    block.iter().fold(0, |acc, &s| acc * base + s as usize)
}

fn decode_block(mut code: usize, k: usize, alphabet: Alphabet) -> Word {
    let base = alphabet.size();
    let mut symbols = vec![0; k];
    for slot in symbols.iter_mut().rev() {
        *slot = (code % base) as Symbol;
        code /= base;
    }
    Word::from_raw(symbols, alphabet)
}

/// A parsed rule file: single-letter patterns give a morphism, longer ones a
/// block substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleSet {
    Morphism(Morphism),
    Block(BlockSubstitution),
}

impl RuleSet {
    /// Parses lines of the form `pattern -> image`. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let mut rules = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("expected `pattern -> image`, got {line:?}"),
            })?;
            let parse = |s: &str| {
                Word::parse(s.trim(), alphabet).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })
            };
            let pattern = parse(lhs)?;
            if pattern.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "empty pattern".into(),
                });
            }
            rules.push((line_no, pattern, parse(rhs)?));
        }
        let Some((_, first, _)) = rules.first() else {
            return Err(Error::Parse {
                line: 0,
                message: "no rules".into(),
            });
        };
        let k = first.len();
        if let Some((line, p, _)) = rules.iter().find(|(_, p, _)| p.len() != k) {
            return Err(Error::Parse {
                line: *line,
                message: format!("pattern {p} has length {}, expected {k}", p.len()),
            });
        }
        if k == 1 {
            let mut images: Vec<Option<Word>> = vec![None; alphabet.size()];
            for (_, p, image) in rules {
                images[p.symbols()[0] as usize] = Some(image);
            }
            let images = images
                .into_iter()
                .enumerate()
                .map(|(letter, w)| {
                    w.ok_or_else(|| Error::Parse {
                        line: 0,
                        message: format!("no image for letter {}", alphabet.display(letter as Symbol)),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(RuleSet::Morphism(Morphism::new(alphabet, images)?))
        } else {
            let pairs = rules.into_iter().map(|(_, p, w)| (p, w));
            Ok(RuleSet::Block(BlockSubstitution::new(k, alphabet, pairs)?))
        }
    }

    pub fn to_rule_text(&self) -> String {
        match self {
            RuleSet::Morphism(m) => m.to_rule_text(),
            RuleSet::Block(b) => b.to_rule_text(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bin(s: &str) -> Word {
        Word::binary(s).unwrap()
    }

    fn pell() -> Morphism {
        Morphism::binary("001", "0").unwrap()
    }

    fn tau() -> Morphism {
        Morphism::binary("01", "10").unwrap()
    }

    fn fib() -> Morphism {
        Morphism::binary("01", "0").unwrap()
    }

    fn kappa_pell() -> BlockSubstitution {
        BlockSubstitution::binary(&[("00", "0010"), ("01", "001"), ("10", "010")]).unwrap()
    }

    fn kappa_k() -> BlockSubstitution {
        BlockSubstitution::binary(&[("00", "10"), ("01", "100"), ("10", "110"), ("11", "1100")]).unwrap()
    }

    fn kappa_tm() -> BlockSubstitution {
        BlockSubstitution::binary(&[("00", "001"), ("01", "010"), ("10", "101"), ("11", "110")]).unwrap()
    }

    fn all_pairs() -> Vec<Word> {
        ["00", "01", "10", "11"].iter().map(|s| bin(s)).collect()
    }

    #[test]
    fn morphism_application() {
        assert_eq!(pell().apply(&bin("010")).unwrap(), bin("0010001"));
        assert_eq!(tau().apply(&bin("01")).unwrap(), bin("0110"));
        assert_eq!(pell().apply(&bin("")).unwrap(), bin(""));
    }

    #[test]
    fn erasing_morphisms_are_rejected() {
        assert_eq!(Morphism::binary("01", ""), Err(Error::ErasingImage { letter: '1' }));
    }

    #[test]
    fn block_application() {
        assert_eq!(kappa_pell().apply(&bin("001001")).unwrap(), bin("0010010001"));
        assert_eq!(kappa_k().apply(&bin("1100")).unwrap(), bin("110010"));
        assert_eq!(
            kappa_pell().apply(&bin("0011")),
            Err(Error::BlockNotInDomain {
                block: "11".into(),
                position: 2
            })
        );
        assert_eq!(
            kappa_tm().apply(&bin("001")),
            Err(Error::LengthNotDivisible { length: 3, k: 2 })
        );
    }

    #[test]
    fn truncated_application() {
        let k = kappa_tm();
        assert_eq!(k.apply_truncated(&bin("001110")).unwrap(), bin("001110101"));
        assert_eq!(k.apply_truncated(&bin("001110101")).unwrap(), bin("001110101101"));
        assert_eq!(k.apply_truncated(&bin("0110")).unwrap(), k.apply(&bin("0110")).unwrap());
        assert_eq!(
            k.apply_truncated(&bin("0")),
            Err(Error::WordTooShort { length: 1, k: 2 })
        );
    }

    #[test]
    fn stability() {
        assert!(!kappa_k().is_stable());
        assert!(!kappa_pell().is_stable());
        let kappa_tau = BlockSubstitution::induced(&tau(), 2, &all_pairs()).unwrap();
        assert!(kappa_tau.is_stable());
        assert!(kappa_tau.rules().all(|(_, w)| w.len() == 4));
    }

    #[test]
    fn induced_substitutions() {
        let ex3 = Morphism::binary("01", "0111").unwrap();
        let k = BlockSubstitution::induced(&ex3, 2, &[bin("01"), bin("11")]).unwrap();
        assert_eq!(k.image(&[0, 1]).unwrap(), &bin("010111"));
        assert_eq!(k.image(&[1, 1]).unwrap(), &bin("01110111"));
        assert!(k.image(&[0, 0]).is_none());

        let ex2 = Morphism::binary("0001", "0").unwrap();
        let k3 = BlockSubstitution::induced(&ex2, 3, &[bin("000")]).unwrap();
        assert_eq!(k3.image(&[0, 0, 0]).unwrap(), &bin("000100010001"));

        let kt = BlockSubstitution::induced(&tau(), 2, &all_pairs()).unwrap();
        assert_eq!(kt.image(&[0, 0]).unwrap(), &bin("0101"));
    }

    #[test]
    fn morphism_powers() {
        let f3 = fib().power(3).unwrap();
        assert_eq!(f3.image(0), &bin("01001"));
        assert_eq!(f3.image(1), &bin("010"));
        let t2 = tau().power(2).unwrap();
        assert_eq!(t2.image(0), &bin("0110"));
        assert_eq!(t2.image(1), &bin("1001"));
        assert_eq!(pell().power(1).unwrap(), pell());
        assert_eq!(pell().power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn block_composition() {
        let kt = BlockSubstitution::induced(&tau(), 2, &all_pairs()).unwrap();
        let kt2 = BlockSubstitution::induced(&tau().power(2).unwrap(), 2, &all_pairs()).unwrap();
        let composed = BlockSubstitution::compose(&kt, &kt).unwrap();
        assert_eq!(composed.image(&[0, 0]).unwrap(), &bin("01100110"));
        assert_eq!(composed, kt2);

        let id = BlockSubstitution::identity(2, Alphabet::binary(), &all_pairs()).unwrap();
        assert_eq!(BlockSubstitution::compose(&id, &kt).unwrap(), kt);
        assert_eq!(BlockSubstitution::compose(&kt, &id).unwrap(), kt);

        assert_eq!(BlockSubstitution::compose(&kt, &kappa_pell()), Err(Error::NotStable));
    }

    #[test]
    fn induced_power_matches_power_of_induced() {
        // Composition powers of an induced stable map equal the map induced by the morphism power.
        for m in [tau(), Morphism::binary("001", "0").unwrap(), fib().power(3).unwrap()] {
            let k1 = BlockSubstitution::induced(&m, 2, &all_pairs()).unwrap();
            assert!(k1.is_stable());
            for n in 1..=3 {
                let lhs = k1.power(n).unwrap();
                let rhs = BlockSubstitution::induced(&m.power(n).unwrap(), 2, &all_pairs()).unwrap();
                assert_eq!(lhs, rhs, "n = {n}");
            }
        }
    }

    #[test]
    fn parity_admissibility() {
        assert!(!fib().conjugation_admissible().unwrap());
        assert!(fib().power(3).unwrap().conjugation_admissible().unwrap());
        assert!(tau().conjugation_admissible().unwrap());
        let s = Morphism::binary("0001", "0").unwrap();
        assert!(!s.conjugation_admissible().unwrap());
        assert!(s.power(3).unwrap().conjugation_admissible().unwrap());
        let abc = Alphabet::from_display("abc").unwrap();
        let m = Morphism::new(
            abc,
            vec![
                Word::parse("ab", abc).unwrap(),
                Word::parse("c", abc).unwrap(),
                Word::parse("a", abc).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(m.conjugation_admissible(), Err(Error::NonBinaryAlphabet));
    }

    #[test]
    fn rule_text_round_trip() {
        let text = "# Kolakoski\n00 -> 10\n01 -> 100\n\n10 -> 110\n11 -> 1100\n";
        let parsed = RuleSet::parse(text, Alphabet::binary()).unwrap();
        assert_eq!(parsed, RuleSet::Block(kappa_k()));
        assert_eq!(
            RuleSet::parse(&parsed.to_rule_text(), Alphabet::binary()).unwrap(),
            parsed
        );
        let m = RuleSet::parse("0 -> 001\n1 -> 0", Alphabet::binary()).unwrap();
        assert_eq!(m, RuleSet::Morphism(pell()));
    }

    #[test]
    fn rule_text_errors() {
        let err = RuleSet::parse("00 -> 1\n0 -> 1\n", Alphabet::binary()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = RuleSet::parse("00 => 1\n", Alphabet::binary()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = RuleSet::parse("0 -> 1\n", Alphabet::binary()).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = RuleSet::parse("02 -> 1\n", Alphabet::binary()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    fn word_of_blocks(max_blocks: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..2, 0..max_blocks * 2).prop_map(|mut v| {
            v.truncate(v.len() - v.len() % 2);
            Word::new(v, Alphabet::binary()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn morphism_is_a_homomorphism(
            u in prop::collection::vec(0u8..2, 0..30),
            v in prop::collection::vec(0u8..2, 0..30),
        ) {
            let u = Word::new(u, Alphabet::binary()).unwrap();
            let v = Word::new(v, Alphabet::binary()).unwrap();
            for m in [pell(), tau(), fib()] {
                let lhs = m.apply(&u.concat(&v)).unwrap();
                let rhs = m.apply(&u).unwrap().concat(&m.apply(&v).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn block_map_is_a_homomorphism_on_aligned_words(u in word_of_blocks(20), v in word_of_blocks(20)) {
            for k in [kappa_k(), kappa_tm()] {
                let lhs = k.apply(&u.concat(&v)).unwrap();
                let rhs = k.apply(&u).unwrap().concat(&k.apply(&v).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn truncation_is_prefix_coherent(v in prop::collection::vec(0u8..2, 2..60), cut in 0usize..60) {
            let v = Word::new(v, Alphabet::binary()).unwrap();
            let cut = cut.min(v.len());
            let cut = cut - cut % 2;
            let u = v.prefix(cut);
            for k in [kappa_k(), kappa_tm()] {
                let short = k.apply(&u).unwrap();
                let long = k.apply_truncated(&v).unwrap();
                prop_assert!(long.starts_with(&short));
            }
        }

        #[test]
        fn powers_add(a in 1usize..4, b in 1usize..4) {
            for m in [pell(), tau(), fib()] {
                let lhs = m.power(a + b).unwrap();
                let rhs = m.power(a).unwrap().compose(&m.power(b).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
