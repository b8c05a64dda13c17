//! Measurements on finite prefixes of infinite words.
//!
//! Every statement here is about the examined window only: a factor reported
//! absent is absent from the prefix, and a periodicity verdict covers the
//! prefix and the given bounds.

use std::collections::{HashMap, HashSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{find_all, mirror, reverse, Symbol, Word};

fn require_len(length: usize, needed: usize) -> Result<()> {
    if length < needed {
        return Err(Error::PrefixTooShort { length, needed });
    }
    Ok(())
}

fn bits_per_symbol(alphabet_size: usize) -> usize {
    match alphabet_size {
        0..=2 => 1,
        _ => 2,
    }
}

/// Number of distinct length-`n` factors of `symbols`.
pub(crate) fn count_distinct_factors(symbols: &[Symbol], n: usize, alphabet_size: usize) -> usize {
    if n == 0 {
        return 1;
    }
    if n > symbols.len() {
        return 0;
    }
    let bits = bits_per_symbol(alphabet_size) * n;
    if bits <= 24 {
        let mask = (1u64 << bits) - 1;
        let mut seen = vec![0u64; (1usize << bits).div_ceil(64)];
        let mut code = 0u64;
        let mut distinct = 0;
        let shift = bits_per_symbol(alphabet_size);
        for (i, &s) in symbols.iter().enumerate() {
            code = ((code << shift) | s as u64) & mask;
            if i + 1 >= n {
                let (word, bit) = ((code / 64) as usize, code % 64);
                if seen[word] & (1 << bit) == 0 {
                    seen[word] |= 1 << bit;
                    distinct += 1;
                }
            }
        }
        distinct
    } else if let Some(codes) = sorted_codes(symbols, n, alphabet_size) {
        codes.len()
    } else {
        symbols.windows(n).collect::<HashSet<_>>().len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityProfile {
    pub prefix_length: usize,
    /// `values[n - 1]` is `p(n)`.
    pub values: Vec<usize>,
    /// Whether `p(n)` is unchanged on the first half of the prefix.
    pub stabilized: Vec<bool>,
}

impl ComplexityProfile {
    /// A profile from known values, all marked stabilized.
    pub fn from_values(values: Vec<usize>) -> Self {
        Self {
            prefix_length: 0,
            stabilized: vec![true; values.len()],
            values,
        }
    }

    pub fn p(&self, n: usize) -> Option<usize> {
        n.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn nmax(&self) -> usize {
        self.values.len()
    }

    /// Tab-separated `n`, `p(n)`, `stabilized` rows under a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tp(n)\tstabilized\n");
        for (i, (p, s)) in self.values.iter().zip(&self.stabilized).enumerate() {
            out.push_str(&format!("{}\t{}\t{}\n", i + 1, p, s));
        }
        out
    }
}

/// `p(n)` for `n = 1..=nmax`.
pub fn subword_complexity(x: &Word, nmax: usize) -> Result<ComplexityProfile> {
    require_len(x.len(), 2 * nmax)?;
    let size = x.alphabet().size();
    let half = &x.symbols()[..x.len() / 2];
    let mut values = Vec::with_capacity(nmax);
    let mut stabilized = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        let full = count_distinct_factors(x.symbols(), n, size);
        values.push(full);
        stabilized.push(count_distinct_factors(half, n, size) == full);
    }
    Ok(ComplexityProfile {
        prefix_length: x.len(),
        values,
        stabilized,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadraticCheck {
    /// `p(n) >= c n^2` at every stabilized `n`.
    pub holds: bool,
    pub first_violation: Option<usize>,
    /// The inequality at the largest stabilized `n` alone.
    pub holds_at_largest: Option<bool>,
}

/// Tests `p(n) >= c n^2` on the stabilized entries of the profile.
pub fn quadratic_lower_check(profile: &ComplexityProfile, c: Ratio<i64>) -> QuadraticCheck {
    let verdicts: Vec<(usize, bool)> = profile
        .values
        .iter()
        .zip(&profile.stabilized)
        .enumerate()
        .filter(|(_, (_, &stable))| stable)
        .map(|(i, (&p, _))| {
            let n = (i + 1) as i64;
            (i + 1, Ratio::from_integer(p as i64) >= c * Ratio::from_integer(n * n))
        })
        .collect();
    let first_violation = verdicts.iter().find(|(_, ok)| !ok).map(|(n, _)| *n);
    QuadraticCheck {
        holds: first_violation.is_none(),
        first_violation,
        holds_at_largest: verdicts.last().map(|(_, ok)| *ok),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Transform {
    Reverse,
    Mirror,
}

impl Transform {
    pub fn apply(self, w: &Word) -> Result<Word> {
        match self {
            Transform::Reverse => Ok(reverse(w)),
            Transform::Mirror => mirror(w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureViolation {
    pub factor: Word,
    /// Absent from the examined prefix.
    pub transformed: Word,
    pub first_seen: usize,
}

/// Factors of length `1..=nmax` whose transform does not occur in `x`.
/// Reported by length, then by first occurrence.
pub fn closure_report(x: &Word, nmax: usize, transform: Transform) -> Result<Vec<ClosureViolation>> {
    require_len(x.len(), 2 * nmax)?;
    let alphabet = x.alphabet();
    let mut out = Vec::new();
    for n in 1..=nmax {
        let mut first: HashMap<&[Symbol], usize> = HashMap::new();
        for (i, f) in x.symbols().windows(n).enumerate() {
            first.entry(f).or_insert(i);
        }
        let mut found: Vec<(usize, &[Symbol])> = first.iter().map(|(f, &i)| (i, *f)).collect();
        found.sort_unstable();
        for (position, f) in found {
            let factor = Word::new(f.to_vec(), alphabet)?;
            let transformed = transform.apply(&factor)?;
            if !first.contains_key(transformed.symbols()) {
                out.push(ClosureViolation {
                    factor,
                    transformed,
                    first_seen: position,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerOccurrence {
    pub position: usize,
    pub base: Word,
}

/// Every `(position, u)` with `|u| <= max_base` such that `u^exponent` occurs at
/// `position`. Sorted by position, then base length.
pub fn find_powers(x: &Word, exponent: usize, max_base: usize) -> Vec<PowerOccurrence> {
    assert!(exponent >= 2, "exponent must be at least 2");
    let s = x.symbols();
    let mut hits = Vec::new();
    for len in 1..=max_base {
        if exponent * len > s.len() {
            break;
        }
        let need = (exponent - 1) * len;
        // Number of consecutive j >= i with s[j] == s[j + len].
        let mut run = 0usize;
        for i in (0..s.len() - len).rev() {
            run = if s[i] == s[i + len] { run + 1 } else { 0 };
            if run >= need {
                hits.push((i, len));
            }
        }
    }
    hits.sort_unstable();
    hits.into_iter()
        .map(|(position, len)| PowerOccurrence {
            position,
            base: x.slice(position..position + len),
        })
        .collect()
}

/// Some occurrence of `u^exponent` for any base length, or `None` if the word
/// has no such power. The reported base is the shortest possible; among
/// occurrences with that base length the leftmost is returned.
///
/// For each base length `L` only the positions `0, L, 2L, ...` are examined:
/// every occurrence of a power with period `L` covers one of them together with
/// the `(exponent - 1) L` symbols after it, so extending the match left and right
/// from those sample points finds it.
pub fn first_power(x: &Word, exponent: usize) -> Option<PowerOccurrence> {
    assert!(exponent >= 2, "exponent must be at least 2");
    let s = x.symbols();
    let n = s.len();
    for len in 1..=n / exponent {
        let need = (exponent - 1) * len;
        let mut q = 0;
        while q + len < n {
            let forward = (0..need.min(n - q - len))
                .take_while(|&t| s[q + t] == s[q + len + t])
                .count();
            let backward = (1..=need.min(q)).take_while(|&t| s[q - t] == s[q + len - t]).count();
            if forward + backward >= need {
                let position = q - backward;
                return Some(PowerOccurrence {
                    position,
                    base: x.slice(position..position + len),
                });
            }
            q += len;
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrequencyEstimate {
    pub word: Word,
    pub count: usize,
    pub window_length: usize,
    /// `count / (window_length - |word| + 1)`.
    pub estimate: f64,
}

pub fn frequency(x: &Word, w: &Word) -> Result<FrequencyEstimate> {
    require_len(x.len(), w.len())?;
    let count = find_all(x, w).len();
    let windows = x.len() - w.len() + 1;
    Ok(FrequencyEstimate {
        word: w.clone(),
        count,
        window_length: x.len(),
        estimate: count as f64 / windows as f64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicityVerdict {
    pub found: bool,
    pub preperiod: Option<usize>,
    pub period: Option<Word>,
}

/// Searches for the lexicographically least `(p, |w|)` with `p <= max_preperiod`,
/// `|w| <= max_period` such that `x[p..]` has period `|w|` across all of `x`.
pub fn eventually_periodic_search(x: &Word, max_preperiod: usize, max_period: usize) -> Result<PeriodicityVerdict> {
    require_len(x.len(), max_preperiod + 3 * max_period)?;
    let s = x.symbols();
    let mut best: Option<(usize, usize)> = None;
    for q in 1..=max_period {
        // The smallest p is one past the last mismatch s[j] != s[j + q].
        let p = (0..s.len() - q).rev().find(|&j| s[j] != s[j + q]).map_or(0, |j| j + 1);
        if p <= max_preperiod && best.is_none_or(|(bp, _)| p < bp) {
            best = Some((p, q));
        }
    }
    Ok(match best {
        Some((p, q)) => PeriodicityVerdict {
            found: true,
            preperiod: Some(p),
            period: Some(x.slice(p..p + q)),
        },
        None => PeriodicityVerdict {
            found: false,
            preperiod: None,
            period: None,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorGap {
    pub factor: Word,
    pub occurrences: usize,
    /// Largest distance between consecutive occurrences; `None` for a single occurrence.
    pub max_gap: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub n: usize,
    pub factors: Vec<FactorGap>,
    pub overall_max_gap: Option<usize>,
    /// Factors seen only once in the window.
    pub singletons: usize,
}

/// Gaps between consecutive occurrences of every length-`n` factor.
pub fn recurrence_gap(x: &Word, n: usize) -> Result<RecurrenceReport> {
    require_len(x.len(), 2 * n)?;
    // factor -> (last position, occurrences, max gap)
    let mut stats: HashMap<&[Symbol], (usize, usize, Option<usize>)> = HashMap::new();
    if n > 0 {
        for (i, f) in x.symbols().windows(n).enumerate() {
            stats
                .entry(f)
                .and_modify(|(last, count, gap)| {
                    let g = i - *last;
                    *gap = Some(gap.map_or(g, |old| old.max(g)));
                    *last = i;
                    *count += 1;
                })
                .or_insert((i, 1, None));
        }
    }
    let mut factors: Vec<FactorGap> = stats
        .into_iter()
        .map(|(f, (_, occurrences, max_gap))| FactorGap {
            factor: Word::new(f.to_vec(), x.alphabet()).expect("factor of a valid word"),
            occurrences,
            max_gap,
        })
        .collect();
    factors.sort_by(|a, b| a.factor.cmp(&b.factor));
    Ok(RecurrenceReport {
        n,
        overall_max_gap: factors.iter().filter_map(|f| f.max_gap).max(),
        singletons: factors.iter().filter(|f| f.max_gap.is_none()).count(),
        factors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LanguageDiff {
    pub n: usize,
    pub equal: bool,
    pub only_in_first: Vec<Word>,
    pub only_in_second: Vec<Word>,
}

/// Distinct length-`n` factors as packed codes, sorted; `None` when they do not fit in 64 bits.
fn sorted_codes(symbols: &[Symbol], n: usize, alphabet_size: usize) -> Option<Vec<u64>> {
    let shift = bits_per_symbol(alphabet_size);
    if n == 0 || n * shift > 64 {
        return None;
    }
    let mask = if n * shift == 64 {
        u64::MAX
    } else {
        (1u64 << (n * shift)) - 1
    };
    let mut codes = Vec::with_capacity(symbols.len().saturating_sub(n - 1));
    let mut code = 0u64;
    for (i, &s) in symbols.iter().enumerate() {
        code = ((code << shift) | s as u64) & mask;
        if i + 1 >= n {
            codes.push(code);
        }
    }
    codes.sort_unstable();
    codes.dedup();
    Some(codes)
}

fn decode(code: u64, n: usize, w: &Word) -> Word {
    let shift = bits_per_symbol(w.alphabet().size());
    let mask = (1u64 << shift) - 1;
    let symbols = (0..n).rev().map(|i| ((code >> (i * shift)) & mask) as Symbol).collect();
    Word::new(symbols, w.alphabet()).expect("factor of a valid word")
}

/// Factors of length `n` in `x` but not in `y`, sorted.
fn factor_difference(x: &Word, y: &Word, n: usize) -> (Vec<Word>, Vec<Word>) {
    let size = x.alphabet().size().max(y.alphabet().size());
    if let (Some(cx), Some(cy)) = (sorted_codes(x.symbols(), n, size), sorted_codes(y.symbols(), n, size)) {
        let only = |a: &[u64], b: &[u64], w: &Word| -> Vec<Word> {
            a.iter()
                .filter(|c| b.binary_search(c).is_err())
                .map(|&c| decode(c, n, w))
                .collect()
        };
        return (only(&cx, &cy, x), only(&cy, &cx, y));
    }
    let fx: HashSet<&[Symbol]> = x.symbols().windows(n).collect();
    let fy: HashSet<&[Symbol]> = y.symbols().windows(n).collect();
    let only = |a: &HashSet<&[Symbol]>, b: &HashSet<&[Symbol]>, w: &Word| {
        let mut out: Vec<Word> = a
            .difference(b)
            .map(|f| Word::new(f.to_vec(), w.alphabet()).expect("factor of a valid word"))
            .collect();
        out.sort();
        out
    };
    (only(&fx, &fy, x), only(&fy, &fx, y))
}

/// Compares the length-`n` factor sets of `x` and `y` for `n = 1..=nmax`.
pub fn language_compare(x: &Word, y: &Word, nmax: usize) -> Result<Vec<LanguageDiff>> {
    require_len(x.len(), 2 * nmax)?;
    require_len(y.len(), 2 * nmax)?;
    if x.alphabet().size() != y.alphabet().size() {
        return Err(Error::AlphabetMismatch {
            expected: x.alphabet().size(),
            found: y.alphabet().size(),
        });
    }
    Ok((1..=nmax)
        .map(|n| {
            let (only_in_first, only_in_second) = factor_difference(x, y, n);
            LanguageDiff {
                n,
                equal: only_in_first.is_empty() && only_in_second.is_empty(),
                only_in_first,
                only_in_second,
            }
        })
        .collect())
}
