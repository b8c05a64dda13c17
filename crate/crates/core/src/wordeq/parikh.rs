//! Abelianization: letter counts turn each word equation into one linear
//! identity per letter.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use super::{Assignment, WordEquationSystem};
use crate::word::Symbol;

/// Exact rational arithmetic for Parikh systems.
pub type Q = Ratio<i64>;

/// The count `N_letter(unknown)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParikhVar {
    pub unknown: usize,
    pub letter: Symbol,
}

/// `sum_j N_j(u) * N_letter(sigma(j)) = sum_r N_letter(u_r)` for one equation
/// `sigma(u) = u_1 ... u_m` and one letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearIdentity {
    pub equation: usize,
    pub letter: Symbol,
    /// Left-hand terms `(coefficient, variable)` in letter order.
    pub lhs: Vec<(i64, ParikhVar)>,
    /// Right-hand terms in order of first appearance on the right-hand side.
    pub rhs: Vec<(i64, ParikhVar)>,
}

impl LinearIdentity {
    fn side_value(terms: &[(i64, ParikhVar)], counts: &[Vec<i64>]) -> i64 {
        terms
            .iter()
            .map(|(c, v)| c * counts[v.unknown][v.letter as usize])
            .sum()
    }

    pub fn holds(&self, counts: &[Vec<i64>]) -> bool {
        Self::side_value(&self.lhs, counts) == Self::side_value(&self.rhs, counts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParikhSystem {
    names: Vec<char>,
    alphabet_size: usize,
    identities: Vec<LinearIdentity>,
}

/// Dependent variables written as rational combinations of the free ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralSolution {
    pub free: Vec<ParikhVar>,
    /// `(dependent, coefficients)`; coefficients align with `free`.
    pub dependent: Vec<(ParikhVar, Vec<Q>)>,
}

impl GeneralSolution {
    /// Values of all dependent variables for integer free values.
    pub fn evaluate(&self, free_values: &[i64]) -> Vec<(ParikhVar, Q)> {
        self.dependent
            .iter()
            .map(|(v, coeffs)| {
                let value = coeffs
                    .iter()
                    .zip(free_values)
                    .map(|(c, &x)| *c * Q::from_integer(x))
                    .sum();
                (*v, value)
            })
            .collect()
    }
}

impl ParikhSystem {
    pub fn new(sys: &WordEquationSystem) -> Self {
        let sigma = sys.sigma();
        let size = sigma.alphabet().size();
        let image_counts: Vec<Vec<usize>> = sigma.images().iter().map(|w| w.parikh_vector()).collect();
        let mut identities = Vec::new();
        for (u, eq) in sys.equations().iter().enumerate() {
            for letter in 0..size as Symbol {
                let lhs = (0..size)
                    .filter_map(|j| {
                        let c = image_counts[j][letter as usize] as i64;
                        (c != 0).then_some((
                            c,
                            ParikhVar {
                                unknown: u,
                                letter: j as Symbol,
                            },
                        ))
                    })
                    .collect();
                let mut rhs: Vec<(i64, ParikhVar)> = Vec::new();
                for &r in eq {
                    let var = ParikhVar { unknown: r, letter };
                    match rhs.iter_mut().find(|(_, v)| *v == var) {
                        Some((c, _)) => *c += 1,
                        None => rhs.push((1, var)),
                    }
                }
                identities.push(LinearIdentity {
                    equation: u,
                    letter,
                    lhs,
                    rhs,
                });
            }
        }
        Self {
            names: sys.unknowns().iter().map(|u| u.name).collect(),
            alphabet_size: size,
            identities,
        }
    }

    pub fn identities(&self) -> &[LinearIdentity] {
        &self.identities
    }

    pub fn var(&self, name: char, letter: Symbol) -> Option<ParikhVar> {
        self.names
            .iter()
            .position(|&n| n == name)
            .map(|unknown| ParikhVar { unknown, letter })
    }

    fn num_vars(&self) -> usize {
        self.names.len() * self.alphabet_size
    }

    fn column(&self, v: ParikhVar) -> usize {
        v.unknown * self.alphabet_size + v.letter as usize
    }

    fn var_of_column(&self, col: usize) -> ParikhVar {
        ParikhVar {
            unknown: col / self.alphabet_size,
            letter: (col % self.alphabet_size) as Symbol,
        }
    }

    /// True iff `counts[u][letter]` satisfies every identity.
    pub fn holds(&self, counts: &[Vec<i64>]) -> bool {
        counts.len() == self.names.len()
            && counts.iter().all(|c| c.len() == self.alphabet_size)
            && self.identities.iter().all(|id| id.holds(counts))
    }

    /// True iff the letter counts of `a` satisfy every identity.
    pub fn check(&self, a: &Assignment) -> bool {
        let counts: Vec<Vec<i64>> = a
            .values()
            .iter()
            .map(|w| w.parikh_vector().into_iter().map(|c| c as i64).collect())
            .collect();
        self.holds(&counts)
    }

    /// Rows `lhs - rhs` of the homogeneous system.
    fn matrix(&self) -> Vec<Vec<Q>> {
        self.identities
            .iter()
            .map(|id| {
                let mut row = vec![Q::from_integer(0); self.num_vars()];
                for (c, v) in &id.lhs {
                    row[self.column(*v)] += Q::from_integer(*c);
                }
                for (c, v) in &id.rhs {
                    row[self.column(*v)] -= Q::from_integer(*c);
                }
                row
            })
            .collect()
    }

    /// Expresses every other variable through `free`, or `None` when the
    /// chosen variables do not parametrize the solution space.
    pub fn solve_in_terms_of(&self, free: &[ParikhVar]) -> Option<GeneralSolution> {
        let n = self.num_vars();
        let free_cols: Vec<usize> = free.iter().map(|v| self.column(*v)).collect();
        let dependent_cols: Vec<usize> = (0..n).filter(|c| !free_cols.contains(c)).collect();
        // Dependent columns first so that they become pivots when possible.
        let order: Vec<usize> = dependent_cols.iter().chain(&free_cols).copied().collect();
        let mut rows: Vec<Vec<Q>> = self
            .matrix()
            .into_iter()
            .map(|row| order.iter().map(|&c| row[c]).collect())
            .collect();
        let pivots = row_reduce(&mut rows);
        let d = dependent_cols.len();
        if pivots.len() != d || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let dependent = (0..d)
            .map(|i| {
                let coeffs = (0..free_cols.len()).map(|j| -rows[i][d + j]).collect();
                (self.var_of_column(dependent_cols[i]), coeffs)
            })
            .collect();
        Some(GeneralSolution {
            free: free.to_vec(),
            dependent,
        })
    }

    /// The unique solution extending `fixed`, if the fixed values determine one.
    pub fn complete(&self, fixed: &[(ParikhVar, i64)]) -> Option<Vec<Vec<Q>>> {
        let n = self.num_vars();
        let mut rows: Vec<Vec<Q>> = self
            .matrix()
            .into_iter()
            .map(|mut row| {
                row.push(Q::from_integer(0));
                row
            })
            .collect();
        for (v, value) in fixed {
            let mut row = vec![Q::from_integer(0); n + 1];
            row[self.column(*v)] = Q::from_integer(1);
            row[n] = Q::from_integer(*value);
            rows.push(row);
        }
        let pivots = row_reduce(&mut rows);
        if pivots.contains(&n) || pivots.len() != n {
            return None;
        }
        let mut out = vec![vec![Q::from_integer(0); self.alphabet_size]; self.names.len()];
        for (i, &p) in pivots.iter().enumerate() {
            let v = self.var_of_column(p);
            out[v.unknown][v.letter as usize] = rows[i][n];
        }
        Some(out)
    }

    fn term(&self, coeff: i64, v: ParikhVar) -> String {
        let var = format!("N{}({})", v.letter, self.names[v.unknown]);
        if coeff == 1 {
            var
        } else {
            format!("{coeff}{var}")
        }
    }
}

impl fmt::Display for ParikhSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for id in &self.identities {
            let side = |terms: &[(i64, ParikhVar)]| {
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms
                        .iter()
                        .map(|(c, v)| self.term(*c, *v))
                        .collect::<Vec<_>>()
                        .join("+")
                }
            };
            writeln!(f, "{} = {}", side(&id.lhs), side(&id.rhs))?;
        }
        Ok(())
    }
}

/// Gauss-Jordan elimination in place; returns the pivot column of each nonzero row.
fn row_reduce(rows: &mut [Vec<Q>]) -> Vec<usize> {
    let zero = Q::from_integer(0);
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != zero) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c];
        for x in rows[r].iter_mut() {
            *x /= lead;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != zero {
                let factor = row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= factor * *p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::super::tests::{ex2_system, ex3_system, pell_system};
    use super::super::{check_solution, enumerate_solutions, SearchBounds};
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    #[test]
    fn pell_identities() {
        let ps = ParikhSystem::new(&pell_system());
        let shown = ps.to_string();
        assert_eq!(shown.lines().count(), 6);
        assert_eq!(shown.lines().next().unwrap(), "2N0(a)+N1(a) = N0(a)+N0(c)+N0(b)");
        assert_eq!(shown.lines().last().unwrap(), "N0(c) = N1(a)+N1(b)");
    }

    #[test]
    fn pell_consequences() {
        let ps = ParikhSystem::new(&pell_system());
        for text in ["0010,001,010", "001001,0010,0001"] {
            let a = Assignment::binary(text).unwrap();
            assert!(ps.check(&a));
            assert_eq!(a.value(1).count(1), a.value(2).count(1));
            assert_eq!(a.value(0).len(), a.value(1).count(0) + a.value(2).count(0));
        }
        // N1(b) = N1(c) and |a| = N0(b) + N0(c) hold on every small integer solution.
        let mut solutions = 0;
        for code in 0..6i64.pow(6) {
            let digit = |i: u32| (code / 6i64.pow(i)) % 6;
            let counts = vec![
                vec![digit(0), digit(1)],
                vec![digit(2), digit(3)],
                vec![digit(4), digit(5)],
            ];
            if ps.holds(&counts) {
                solutions += 1;
                assert_eq!(counts[1][1], counts[2][1]);
                assert_eq!(counts[0][0] + counts[0][1], counts[1][0] + counts[2][0]);
            }
        }
        assert!(solutions > 1);
    }

    #[test]
    fn example_three_general_solution() {
        let ps = ParikhSystem::new(&ex3_system());
        let x = ps.var('b', 0).unwrap();
        let y = ps.var('d', 0).unwrap();
        let u = ps.var('b', 1).unwrap();
        let v = ps.var('d', 1).unwrap();
        let g = ps.solve_in_terms_of(&[x, y]).unwrap();
        assert_eq!(g.dependent, vec![(u, vec![q(1), q(1)]), (v, vec![q(2), q(1)])]);

        assert!(ps.holds(&[vec![6, 14], vec![8, 20]]));
        assert!(!ps.holds(&[vec![6, 14], vec![8, 19]]));

        let full = ps.complete(&[(x, 6), (u, 14)]).unwrap();
        assert_eq!(full[1], vec![q(8), q(20)]);
        assert_eq!(full[1][0] + full[1][1], q(28));

        // Brute-force the integer solutions with all counts below 15.
        for xs in 0..15i64 {
            for us in 0..15 {
                for ys in 0..15 {
                    for vs in 0..15 {
                        let ok = ps.holds(&[vec![xs, us], vec![ys, vs]]);
                        assert_eq!(ok, us == xs + ys && vs == 2 * xs + ys);
                    }
                }
            }
        }
    }

    #[test]
    fn underdetermined_completion_is_refused() {
        let ps = ParikhSystem::new(&ex3_system());
        assert!(ps.complete(&[(ps.var('b', 0).unwrap(), 6)]).is_none());
        let u = ps.var('b', 1).unwrap();
        let x = ps.var('b', 0).unwrap();
        let y = ps.var('d', 0).unwrap();
        // u = x + y, so {x, y, u} is not a valid free set.
        assert!(ps.solve_in_terms_of(&[x, y, u]).is_none());
    }

    #[test]
    fn literal_solutions_are_abelian_solutions() {
        for sys in [pell_system(), ex2_system(), ex3_system()] {
            let ps = ParikhSystem::new(&sys);
            for a in enumerate_solutions(&sys, SearchBounds::new(6)) {
                assert!(check_solution(&sys, &a));
                assert!(ps.check(&a), "{a}");
            }
        }
    }
}
