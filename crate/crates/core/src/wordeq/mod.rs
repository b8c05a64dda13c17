//! Implicit word-equation systems.
//!
//! A block substitution `kappa` commutes with a morphism `sigma` on a set of
//! blocks exactly when the words `kappa(B)` satisfy the system obtained by
//! cutting each `sigma(B)` into aligned blocks: one unknown per block, and
//! `sigma(u_B) = u_{B1} u_{B2} ...` whenever `sigma(B) = B1 B2 ...`.

mod parikh;
mod search;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::substitution::{BlockSubstitution, Morphism};
use crate::word::{Alphabet, Symbol, Word};

pub use parikh::{GeneralSolution, LinearIdentity, ParikhSystem, ParikhVar, Q};
pub use search::{enumerate_solutions, SearchBounds};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unknown {
    pub name: char,
    /// The block whose image this unknown stands for.
    pub block: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordEquationSystem {
    sigma: Morphism,
    k: usize,
    unknowns: Vec<Unknown>,
    /// `equations[i]` lists the right-hand side of `sigma(u_i) = ...` as unknown indices.
    equations: Vec<Vec<usize>>,
}

/// Default unknown names: for binary 2-blocks `a, b, c, d` stand for
/// `00, 01, 10, 11`; otherwise names follow the given order.
fn default_names(k: usize, alphabet: Alphabet, blocks: &[Word]) -> Vec<char> {
    if k == 2 && alphabet.is_binary() {
        blocks
            .iter()
            .map(|b| (b'a' + 2 * b.symbols()[0] + b.symbols()[1]) as char)
            .collect()
    } else {
        (0..blocks.len()).map(|i| (b'a' + i as u8) as char).collect()
    }
}

impl WordEquationSystem {
    pub fn new(sigma: Morphism, k: usize, unknowns: Vec<Unknown>, equations: Vec<Vec<usize>>) -> Result<Self> {
        if unknowns.is_empty() {
            return Err(Error::InvalidSystem("no unknowns".into()));
        }
        if equations.len() != unknowns.len() {
            return Err(Error::InvalidSystem(format!(
                "{} equations for {} unknowns",
                equations.len(),
                unknowns.len()
            )));
        }
        for (i, u) in unknowns.iter().enumerate() {
            if u.block.len() != k {
                return Err(Error::BlockLengthMismatch {
                    left: u.block.len(),
                    right: k,
                });
            }
            if unknowns[..i].iter().any(|v| v.name == u.name || v.block == u.block) {
                return Err(Error::InvalidSystem(format!("duplicate unknown {}", u.name)));
            }
        }
        if equations.iter().flatten().any(|&r| r >= unknowns.len()) {
            return Err(Error::InvalidSystem("undeclared unknown on a right-hand side".into()));
        }
        Ok(Self {
            sigma,
            k,
            unknowns,
            equations,
        })
    }

    pub fn sigma(&self) -> &Morphism {
        &self.sigma
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn unknowns(&self) -> &[Unknown] {
        &self.unknowns
    }

    pub fn equations(&self) -> &[Vec<usize>] {
        &self.equations
    }

    pub fn blocks(&self) -> Vec<Word> {
        self.unknowns.iter().map(|u| u.block.clone()).collect()
    }

    pub fn index_of(&self, name: char) -> Option<usize> {
        self.unknowns.iter().position(|u| u.name == name)
    }

    /// Parses a system file:
    ///
    /// ```text
    /// sigma: 0->001, 1->0; k=2; blocks=00,01,10
    /// sigma(a)=acb
    /// sigma(b)=ac
    /// sigma(c)=ab
    /// ```
    ///
    /// Blocks may carry explicit names (`blocks=b:01,d:11`). When no equation
    /// lines are present the system is derived from `sigma`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "empty system file".into(),
        })?;
        let perr = |line: usize, message: String| Error::Parse { line, message };

        let mut sigma_rules: Option<Vec<(char, String)>> = None;
        let mut k = None;
        let mut block_specs: Option<Vec<(Option<char>, String)>> = None;
        for field in header.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            if let Some(rest) = field.strip_prefix("sigma:") {
                let rules = rest
                    .split(',')
                    .map(|r| {
                        let (l, img) = r
                            .split_once("->")
                            .ok_or_else(|| perr(header_line, format!("bad morphism rule {r:?}")))?;
                        let mut letters = l.trim().chars();
                        match (letters.next(), letters.next()) {
                            (Some(c), None) => Ok((c, img.trim().to_string())),
                            _ => Err(perr(header_line, format!("bad letter in rule {r:?}"))),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                sigma_rules = Some(rules);
            } else if let Some(rest) = field.strip_prefix("k=") {
                k = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|e| perr(header_line, format!("bad block length: {e}")))?,
                );
            } else if let Some(rest) = field.strip_prefix("blocks=") {
                let specs = rest
                    .split(',')
                    .map(str::trim)
                    .map(|b| match b.split_once(':') {
                        Some((n, blk)) => {
                            let mut cs = n.trim().chars();
                            match (cs.next(), cs.next()) {
                                (Some(c), None) => Ok((Some(c), blk.trim().to_string())),
                                _ => Err(perr(header_line, format!("bad unknown name in {b:?}"))),
                            }
                        }
                        None => Ok((None, b.to_string())),
                    })
                    .collect::<Result<Vec<_>>>()?;
                block_specs = Some(specs);
            } else {
                return Err(perr(header_line, format!("unknown header field {field:?}")));
            }
        }
        let sigma_rules = sigma_rules.ok_or_else(|| perr(header_line, "missing sigma".into()))?;
        let k = k.ok_or_else(|| perr(header_line, "missing k".into()))?;
        let block_specs = block_specs.ok_or_else(|| perr(header_line, "missing blocks".into()))?;

        let display: String = sigma_rules.iter().map(|(c, _)| *c).collect();
        let alphabet =
            Alphabet::from_display(&display).map_err(|e| perr(header_line, format!("sigma letters: {e}")))?;
        let wrap = |e: Error| perr(header_line, e.to_string());
        let mut images = vec![None; alphabet.size()];
        for (c, img) in &sigma_rules {
            let letter = alphabet.symbol_of(*c).expect("letter taken from the rules");
            images[letter as usize] = Some(Word::parse(img, alphabet).map_err(wrap)?);
        }
        let images: Vec<Word> = images.into_iter().map(|w| w.expect("one rule per letter")).collect();
        let sigma = Morphism::new(alphabet, images).map_err(wrap)?;

        let blocks = block_specs
            .iter()
            .map(|(_, b)| Word::parse(b, alphabet).map_err(wrap))
            .collect::<Result<Vec<_>>>()?;
        let mut names = default_names(k, alphabet, &blocks);
        for (slot, (explicit, _)) in names.iter_mut().zip(&block_specs) {
            if let Some(c) = explicit {
                *slot = *c;
            }
        }
        let unknowns: Vec<Unknown> = names
            .iter()
            .zip(&blocks)
            .map(|(&name, block)| Unknown {
                name,
                block: block.clone(),
            })
            .collect();

        let mut equations: Vec<Option<Vec<usize>>> = vec![None; unknowns.len()];
        let mut any_equation = false;
        for (line, l) in lines {
            any_equation = true;
            let (lhs, rhs) = l
                .split_once('=')
                .ok_or_else(|| perr(line, format!("expected `sigma(x)=...`, got {l:?}")))?;
            let name = lhs
                .trim()
                .strip_prefix("sigma(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|n| {
                    let mut cs = n.trim().chars();
                    match (cs.next(), cs.next()) {
                        (Some(c), None) => Some(c),
                        _ => None,
                    }
                })
                .ok_or_else(|| perr(line, format!("bad left-hand side {lhs:?}")))?;
            let idx = unknowns
                .iter()
                .position(|u| u.name == name)
                .ok_or_else(|| perr(line, format!("undeclared unknown {name:?}")))?;
            let rhs = rhs
                .trim()
                .chars()
                .map(|c| {
                    unknowns
                        .iter()
                        .position(|u| u.name == c)
                        .ok_or_else(|| perr(line, format!("undeclared unknown {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if equations[idx].replace(rhs).is_some() {
                return Err(perr(line, format!("second equation for {name}")));
            }
        }

        if !any_equation {
            let derived = derive_system(&sigma, k, &blocks)?;
            return WordEquationSystem::new(sigma, k, unknowns, derived.equations);
        }
        let equations = equations
            .into_iter()
            .zip(&unknowns)
            .map(|(e, u)| e.ok_or_else(|| Error::InvalidSystem(format!("no equation for {}", u.name))))
            .collect::<Result<Vec<_>>>()?;
        WordEquationSystem::new(sigma, k, unknowns, equations)
    }

    /// Whether the equations are the ones read off from `sigma` and the blocks.
    pub fn is_implicit(&self) -> bool {
        derive_system(&self.sigma, self.k, &self.blocks()).is_ok_and(|d| d.equations == self.equations)
    }

    pub fn header(&self) -> String {
        let rules: Vec<String> = self
            .sigma
            .images()
            .iter()
            .enumerate()
            .map(|(i, w)| format!("{}->{}", self.sigma.alphabet().display(i as Symbol), w))
            .collect();
        let blocks: Vec<String> = self
            .unknowns
            .iter()
            .map(|u| format!("{}:{}", u.name, u.block))
            .collect();
        format!("sigma: {}; k={}; blocks={}", rules.join(", "), self.k, blocks.join(","))
    }
}

impl fmt::Display for WordEquationSystem {
    /// One `sigma(x)=...` line per equation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (u, rhs) in self.unknowns.iter().zip(&self.equations) {
            let rhs: String = rhs.iter().map(|&r| self.unknowns[r].name).collect();
            writeln!(f, "sigma({})={}", u.name, rhs)?;
        }
        Ok(())
    }
}

/// Reads the system off `sigma`: the equation for the unknown of block `B`
/// lists the unknowns of the aligned blocks of `sigma(B)`.
pub fn derive_system(sigma: &Morphism, k: usize, blocks: &[Word]) -> Result<WordEquationSystem> {
    let mut equations = Vec::with_capacity(blocks.len());
    for block in blocks {
        let image = sigma.apply(block)?;
        if image.len() % k != 0 {
            return Err(Error::LengthNotDivisible { length: image.len(), k });
        }
        let rhs = image
            .symbols()
            .chunks_exact(k)
            .map(|chunk| {
                blocks
                    .iter()
                    .position(|b| b.symbols() == chunk)
                    .ok_or_else(|| Error::BlockNotInSet {
                        block: Word::new(chunk.to_vec(), sigma.alphabet())
                            .map(|w| w.to_string())
                            .unwrap_or_default(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        equations.push(rhs);
    }
    let names = default_names(k, sigma.alphabet(), blocks);
    let unknowns = names
        .into_iter()
        .zip(blocks)
        .map(|(name, block)| Unknown {
            name,
            block: block.clone(),
        })
        .collect();
    WordEquationSystem::new(sigma.clone(), k, unknowns, equations)
}

/// Values for the unknowns of a system, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Assignment {
    values: Vec<Word>,
}

impl Assignment {
    pub fn new(values: Vec<Word>) -> Result<Self> {
        if values.iter().any(Word::is_empty) {
            return Err(Error::InvalidSystem("assignment values must be nonempty".into()));
        }
        Ok(Self { values })
    }

    /// Parses comma-separated binary words.
    pub fn binary(text: &str) -> Result<Self> {
        Self::new(
            text.split(',')
                .map(|s| Word::binary(s.trim()))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn values(&self) -> &[Word] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &Word {
        &self.values[i]
    }

    /// The images under `kappa` of the system's blocks.
    pub fn from_block_substitution(sys: &WordEquationSystem, kappa: &BlockSubstitution) -> Result<Self> {
        let values = sys
            .unknowns
            .iter()
            .map(|u| {
                kappa
                    .image(u.block.symbols())
                    .cloned()
                    .ok_or_else(|| Error::BlockNotInDomain {
                        block: u.block.to_string(),
                        position: 0,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    /// The block substitution sending each unknown's block to its value.
    pub fn to_block_substitution(&self, sys: &WordEquationSystem) -> Result<BlockSubstitution> {
        BlockSubstitution::new(
            sys.k,
            sys.sigma.alphabet(),
            sys.unknowns
                .iter()
                .zip(&self.values)
                .map(|(u, v)| (u.block.clone(), v.clone())),
        )
    }

    fn total_len(&self) -> usize {
        self.values.iter().map(Word::len).sum()
    }

    /// Length-lexicographic order of the concatenated values, then by the tuple.
    pub(crate) fn order_key(&self) -> (usize, Vec<Symbol>, Vec<usize>) {
        let concat = self.values.iter().flat_map(|v| v.symbols().iter().copied()).collect();
        (self.total_len(), concat, self.values.iter().map(Word::len).collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(Word::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// True iff every equation holds literally.
pub fn check_solution(sys: &WordEquationSystem, a: &Assignment) -> bool {
    if a.values.len() != sys.unknowns.len() {
        return false;
    }
    sys.equations.iter().enumerate().all(|(i, rhs)| {
        let Ok(lhs) = sys.sigma.apply(&a.values[i]) else {
            return false;
        };
        let mut expected = Vec::with_capacity(lhs.len());
        for &r in rhs {
            expected.extend_from_slice(a.values[r].symbols());
        }
        lhs.symbols() == expected.as_slice()
    })
}

/// The assignment `B ↦ base(stable^n(B))`.
pub fn solution_family(
    sys: &WordEquationSystem,
    base: &BlockSubstitution,
    stable: &BlockSubstitution,
    n: usize,
) -> Result<Assignment> {
    if !stable.is_stable() {
        return Err(Error::NotStable);
    }
    let mut composed = base.clone();
    for _ in 0..n {
        composed = BlockSubstitution::compose(&composed, stable)?;
    }
    Assignment::from_block_substitution(sys, &composed)
}
