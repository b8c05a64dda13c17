//! Bounded depth-first search for solutions with prefix propagation.
//!
//! Each unknown is built letter by letter and then closed. After every step,
//! each equation compares the determined prefix of `sigma(u)` with the
//! determined prefix of its right-hand side (complete unknowns followed by
//! the partial word of the first open one); any disagreement prunes the
//! branch. When an equation's left side runs ahead of its right side, the
//! next letter of the first open right-hand unknown is forced unless that
//! unknown closes, so that unknown is branched on next.

use super::{check_solution, Assignment, WordEquationSystem};
use crate::word::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Maximal length of the first declared unknown.
    pub max_first_len: usize,
    /// Maximal length of every other unknown; defaults to `2 * max_first_len + k`.
    pub max_other_len: Option<usize>,
}

impl SearchBounds {
    pub fn new(max_first_len: usize) -> Self {
        Self {
            max_first_len,
            max_other_len: None,
        }
    }

    pub fn with_other_len(mut self, max_other_len: usize) -> Self {
        self.max_other_len = Some(max_other_len);
        self
    }

    fn cap(&self, unknown: usize, k: usize) -> usize {
        if unknown == 0 {
            self.max_first_len
        } else {
            self.max_other_len.unwrap_or(2 * self.max_first_len + k)
        }
    }
}

/// All solutions within `bounds`, in length-lexicographic order of the
/// concatenated values.
pub fn enumerate_solutions(sys: &WordEquationSystem, bounds: SearchBounds) -> Vec<Assignment> {
    let m = sys.unknowns().len();
    let alphabet = sys.sigma().alphabet();
    let mut state = State {
        sys,
        caps: (0..m).map(|i| bounds.cap(i, sys.k())).collect(),
        values: vec![Vec::new(); m],
        closed: vec![false; m],
        found: Vec::new(),
    };
    state.dfs();
    let mut found: Vec<Assignment> = state
        .found
        .into_iter()
        .map(|values| {
            Assignment::new(
                values
                    .into_iter()
                    .map(|v| Word::new(v, alphabet).expect("symbols from the alphabet"))
                    .collect(),
            )
            .expect("closed unknowns are nonempty")
        })
        .collect();
    found.sort_by_key(Assignment::order_key);
    found.dedup();
    found
}

enum Step {
    Conflict,
    /// The next letter of this unknown is forced unless it closes.
    Forced(usize, Symbol),
    Free,
}

struct State<'a> {
    sys: &'a WordEquationSystem,
    caps: Vec<usize>,
    values: Vec<Vec<Symbol>>,
    closed: Vec<bool>,
    found: Vec<Vec<Vec<Symbol>>>,
}

impl State<'_> {
    fn inspect(&self) -> Step {
        let sigma = self.sys.sigma();
        let mut forced = None;
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for (i, eq) in self.sys.equations().iter().enumerate() {
            lhs.clear();
            sigma.apply_symbols(&self.values[i], &mut lhs);
            rhs.clear();
            let mut first_open = None;
            for &r in eq {
                rhs.extend_from_slice(&self.values[r]);
                if !self.closed[r] {
                    first_open = Some(r);
                    break;
                }
            }
            let common = lhs.len().min(rhs.len());
            if lhs[..common] != rhs[..common] {
                return Step::Conflict;
            }
            match (self.closed[i], first_open) {
                (true, None) if lhs.len() != rhs.len() => return Step::Conflict,
                (false, None) if lhs.len() > rhs.len() => return Step::Conflict,
                (true, Some(_)) => {
                    let min_total: usize = eq
                        .iter()
                        .map(|&r| {
                            let len = self.values[r].len();
                            if self.closed[r] {
                                len
                            } else {
                                len.max(1)
                            }
                        })
                        .sum();
                    if min_total > lhs.len() {
                        return Step::Conflict;
                    }
                }
                _ => {}
            }
            if let Some(r) = first_open {
                if forced.is_none() && lhs.len() > rhs.len() {
                    forced = Some((r, lhs[rhs.len()]));
                }
            }
        }
        match forced {
            Some((r, letter)) => Step::Forced(r, letter),
            None => Step::Free,
        }
    }

    fn dfs(&mut self) {
        let (target, letters): (usize, Vec<Symbol>) = match self.inspect() {
            Step::Conflict => return,
            Step::Forced(r, letter) => (r, vec![letter]),
            Step::Free => match self.closed.iter().position(|c| !c) {
                Some(u) => (u, (0..self.sys.sigma().alphabet().size() as Symbol).collect()),
                None => {
                    let candidate = self.snapshot();
                    if check_solution(self.sys, &candidate) {
                        self.found.push(self.values.clone());
                    }
                    return;
                }
            },
        };

        if !self.values[target].is_empty() {
            self.closed[target] = true;
            self.dfs();
            self.closed[target] = false;
        }
        if self.values[target].len() < self.caps[target] {
            for letter in letters {
                self.values[target].push(letter);
                self.dfs();
                self.values[target].pop();
            }
        }
    }

    fn snapshot(&self) -> Assignment {
        let alphabet = self.sys.sigma().alphabet();
        Assignment::new(
            self.values
                .iter()
                .map(|v| Word::new(v.clone(), alphabet).expect("valid symbols"))
                .collect(),
        )
        .expect("closed unknowns are nonempty")
    }
}
