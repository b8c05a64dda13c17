//! Commutation of a block substitution with a morphism.
//!
//! `kappa` and `sigma` commute on the block monoid generated by a set of
//! blocks when `kappa(sigma(B)) = sigma(kappa(B))` for every generator `B`
//! and `sigma` maps generators to products of generators. The second
//! condition is what lets the finite check extend to the whole monoid, so it
//! is verified and reported instead of assumed.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generation::{fixed_point_property_check, generate_prefix, GenerationScheme};
use crate::substitution::{BlockSubstitution, Morphism};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Hypothesis {
    /// `kappa` and `sigma` commute on the generators, with closure.
    Commutation,
    /// `kappa(seed)` has `seed` as a proper prefix.
    SeedPrefix,
    /// `seed` is a prefix of a fixed point of `sigma`.
    SeedOnFixedPoint,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Commutation => "commutation",
            Hypothesis::SeedPrefix => "seed block is a proper prefix of its image",
            Hypothesis::SeedOnFixedPoint => "seed block is a prefix of the morphism's fixed point",
        })
    }
}

/// `kappa(sigma(B))` against `sigma(kappa(B))` for one generator `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorIdentity {
    pub block: Word,
    pub sigma_image: Word,
    pub lhs: Word,
    pub kappa_image: Word,
    pub rhs: Word,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    pub generators: Vec<Word>,
    pub identities: Vec<GeneratorIdentity>,
    /// Every aligned block of every `sigma(B)` is a generator, and every complete
    /// aligned block of every `kappa(B)` is in the domain of `kappa`.
    pub closed: bool,
    pub verdict: bool,
}

impl fmt::Display for CommutationReport {
    /// One line per generator:
    /// `k(s(B)) = k(s(B)-word) = LHS = s(k(B)-word) = s(k(B))`, with `!=` between
    /// the two sides when they differ.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for id in &self.identities {
            let (sign, flag) = if id.equal { ("=", "equal") } else { ("!=", "unequal") };
            if id.equal {
                writeln!(
                    f,
                    "kappa sigma({b}) = kappa({s}) = {l} {sign} sigma({k}) = sigma kappa({b})\t{flag}",
                    b = id.block,
                    s = id.sigma_image,
                    l = id.lhs,
                    k = id.kappa_image,
                )?;
            } else {
                writeln!(
                    f,
                    "kappa sigma({b}) = kappa({s}) = {l} {sign} {r} = sigma({k}) = sigma kappa({b})\t{flag}",
                    b = id.block,
                    s = id.sigma_image,
                    l = id.lhs,
                    r = id.rhs,
                    k = id.kappa_image,
                )?;
            }
        }
        writeln!(f, "closed: {}", if self.closed { "yes" } else { "no" })?;
        writeln!(
            f,
            "verdict: {}",
            if self.verdict { "commute" } else { "do not commute" }
        )
    }
}

/// Checks `kappa sigma = sigma kappa` on `generators`.
pub fn check_commute(kappa: &BlockSubstitution, sigma: &Morphism, generators: &[Word]) -> Result<CommutationReport> {
    let k = kappa.k();
    let mut identities = Vec::with_capacity(generators.len());
    let mut closed = true;
    for block in generators {
        if block.len() != k {
            return Err(Error::BlockLengthMismatch {
                left: block.len(),
                right: k,
            });
        }
        let sigma_image = sigma.apply(block)?;
        if sigma_image.len() % k != 0 {
            return Err(Error::LengthNotDivisible {
                length: sigma_image.len(),
                k,
            });
        }
        let kappa_image = kappa.apply(block)?;
        let lhs = kappa.apply(&sigma_image)?;
        let rhs = sigma.apply(&kappa_image)?;

        closed &= sigma_image
            .symbols()
            .chunks_exact(k)
            .all(|b| generators.iter().any(|g| g.symbols() == b));
        closed &= kappa_image.symbols().chunks_exact(k).all(|b| kappa.contains_block(b));

        identities.push(GeneratorIdentity {
            block: block.clone(),
            equal: lhs == rhs,
            sigma_image,
            lhs,
            kappa_image,
            rhs,
        });
    }
    let verdict = closed && identities.iter().all(|id| id.equal);
    Ok(CommutationReport {
        generators: generators.to_vec(),
        identities,
        closed,
        verdict,
    })
}

/// True iff `kappa(sigma^n(w)) = sigma^n(kappa(w))`.
pub fn check_commute_power(kappa: &BlockSubstitution, sigma: &Morphism, n: usize, w: &Word) -> Result<bool> {
    let power = sigma.power(n)?;
    let lhs = kappa.apply(&power.apply(w)?)?;
    let rhs = power.apply(&kappa.apply(w)?)?;
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub hypotheses: Vec<Hypothesis>,
    pub prefix_length: usize,
    /// Common prefix length of `x` and its truncated image under `kappa`.
    pub agreement_length: usize,
    /// Whether `x` satisfies the fixed-point property for `kappa` on the prefix.
    pub fixed_point: bool,
    /// Whether iterating `kappa` from the seed block reproduces `x`.
    pub kappa_iteration_agrees: bool,
    pub verdict: bool,
}

/// Confirms on a length-`n` prefix that the fixed point of `sigma` starting
/// with `seed_block` is also a fixed point of `kappa`.
pub fn theorem1_transfer(
    kappa: &BlockSubstitution,
    sigma: &Morphism,
    generators: &[Word],
    seed_block: &Word,
    n: usize,
) -> Result<TransferReport> {
    let report = check_commute(kappa, sigma, generators)?;
    if !report.verdict {
        return Err(Error::HypothesisFailed(Hypothesis::Commutation));
    }
    match kappa.image(seed_block.symbols()) {
        Some(image) if seed_block.is_proper_prefix_of(image) => {}
        _ => return Err(Error::HypothesisFailed(Hypothesis::SeedPrefix)),
    }
    let letter = seed_block
        .get(0)
        .ok_or(Error::HypothesisFailed(Hypothesis::SeedPrefix))?;
    let by_morphism = GenerationScheme::MorphismIteration {
        morphism: sigma.clone(),
        seed: letter,
    };
    let x = generate_prefix(&by_morphism, n.max(seed_block.len()))
        .map_err(|_| Error::HypothesisFailed(Hypothesis::SeedOnFixedPoint))?;
    if !x.starts_with(seed_block) {
        return Err(Error::HypothesisFailed(Hypothesis::SeedOnFixedPoint));
    }

    let image = kappa.apply_truncated(&x)?;
    let agreement_length = image.common_prefix_len(&x);
    let fixed_point = fixed_point_property_check(kappa, &x)?;
    let by_kappa = GenerationScheme::TruncatedBlockIteration {
        substitution: kappa.clone(),
        seed: seed_block.clone(),
    };
    let kappa_iteration_agrees = generate_prefix(&by_kappa, x.len()).is_ok_and(|y| y == x);
    Ok(TransferReport {
        hypotheses: vec![
            Hypothesis::Commutation,
            Hypothesis::SeedPrefix,
            Hypothesis::SeedOnFixedPoint,
        ],
        prefix_length: x.len(),
        agreement_length,
        fixed_point,
        kappa_iteration_agrees,
        verdict: fixed_point && kappa_iteration_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;
    use proptest::prelude::*;

    fn bin(s: &str) -> Word {
        Word::binary(s).unwrap()
    }

    fn blocks(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| bin(s)).collect()
    }

    fn pell() -> Morphism {
        Morphism::binary("001", "0").unwrap()
    }

    fn kappa_pell() -> BlockSubstitution {
        BlockSubstitution::binary(&[("00", "0010"), ("01", "001"), ("10", "010")]).unwrap()
    }

    fn kappa_tm() -> BlockSubstitution {
        BlockSubstitution::binary(&[("00", "001"), ("01", "010"), ("10", "101"), ("11", "110")]).unwrap()
    }

    fn tau() -> Morphism {
        Morphism::binary("01", "10").unwrap()
    }

    fn ex2_sigma() -> Morphism {
        Morphism::binary("0001", "0").unwrap()
    }

    fn ex2_kappa_prime() -> BlockSubstitution {
        BlockSubstitution::binary(&[("000", "00010"), ("001", "0001"), ("010", "0010"), ("100", "0010")]).unwrap()
    }

    #[test]
    fn pell_commutes_on_three_generators() {
        let r = check_commute(&kappa_pell(), &pell(), &blocks(&["00", "01", "10"])).unwrap();
        assert!(r.verdict && r.closed);
        let lhs: Vec<String> = r.identities.iter().map(|i| i.lhs.to_string()).collect();
        assert_eq!(lhs, ["0010010001", "0010010", "0010001"]);
        assert!(r.identities.iter().all(|i| i.lhs == i.rhs));
        assert_eq!(r.identities[0].sigma_image, bin("001001"));
        assert_eq!(r.identities[0].kappa_image, bin("0010"));
    }

    #[test]
    fn three_block_conjugate() {
        let r = check_commute(&ex2_kappa_prime(), &ex2_sigma(), &blocks(&["000", "001", "010", "100"])).unwrap();
        assert!(r.verdict);
    }

    #[test]
    fn thue_morse_pair_does_not_commute() {
        let r = check_commute(&kappa_tm(), &tau(), &kappa_tm().domain()).unwrap();
        assert!(!r.verdict);
        assert!(r.closed);
        assert_eq!(r.identities[0].lhs, bin("010010"));
        assert_eq!(r.identities[0].rhs, bin("010110"));
    }

    #[test]
    fn open_generator_sets_are_flagged() {
        // pi(00) = 001001 contains the block 01, which is left out here.
        let r = check_commute(&kappa_pell(), &pell(), &blocks(&["00", "10"])).unwrap();
        assert!(!r.closed);
        assert!(!r.verdict);
    }

    #[test]
    fn commutation_errors() {
        let odd = Morphism::binary("001", "01").unwrap();
        assert_eq!(
            check_commute(&kappa_tm(), &odd, &blocks(&["01"])),
            Err(Error::LengthNotDivisible { length: 5, k: 2 })
        );
        assert!(matches!(
            check_commute(&kappa_pell(), &pell(), &blocks(&["11"])),
            Err(Error::BlockNotInDomain { .. })
        ));
    }

    #[test]
    fn powers_commute() {
        assert!(check_commute_power(&kappa_pell(), &pell(), 2, &bin("00")).unwrap());
        assert!(check_commute_power(&kappa_pell(), &pell(), 1, &bin("0010")).unwrap());
        assert!(!check_commute_power(&kappa_tm(), &tau(), 1, &bin("00")).unwrap());
        for n in 1..=3 {
            for g in blocks(&["00", "01", "10"]) {
                assert!(check_commute_power(&kappa_pell(), &pell(), n, &g).unwrap());
            }
        }
    }

    #[test]
    fn transfer_for_pell() {
        let r = theorem1_transfer(&kappa_pell(), &pell(), &blocks(&["00", "01", "10"]), &bin("00"), 20_000).unwrap();
        assert!(r.verdict);
        assert_eq!(r.prefix_length, 20_000);
        assert!(r.kappa_iteration_agrees);
    }

    #[test]
    fn transfer_for_trivial_conjugate() {
        let sigma = Morphism::binary("01", "0111").unwrap();
        let gens = blocks(&["01", "11"]);
        let kappa = BlockSubstitution::induced(&sigma, 2, &gens).unwrap();
        let r = theorem1_transfer(&kappa, &sigma, &gens, &bin("01"), 10_000).unwrap();
        assert!(r.verdict);
    }

    #[test]
    fn transfer_hypothesis_failures() {
        assert_eq!(
            theorem1_transfer(&kappa_tm(), &tau(), &kappa_tm().domain(), &bin("00"), 100),
            Err(Error::HypothesisFailed(Hypothesis::Commutation))
        );
        assert_eq!(
            theorem1_transfer(&kappa_pell(), &pell(), &blocks(&["00", "01", "10"]), &bin("01"), 100),
            Err(Error::HypothesisFailed(Hypothesis::SeedPrefix))
        );
        // 0 -> 0 is not prolongable, so no fixed point of sigma starts with 01.
        let sigma = Morphism::binary("0", "101").unwrap();
        let gens = blocks(&["00", "01", "10", "11"]);
        let kappa = BlockSubstitution::induced(&sigma, 2, &gens).unwrap();
        assert_eq!(
            theorem1_transfer(&kappa, &sigma, &gens, &bin("01"), 100),
            Err(Error::HypothesisFailed(Hypothesis::SeedOnFixedPoint))
        );
    }

    fn pell_monoid_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::sample::select(vec!["00", "01", "10"]), 0..12)
            .prop_map(|parts| Word::binary(&parts.concat()).unwrap())
    }

    proptest! {
        #[test]
        fn closed_verdict_extends_to_the_monoid(w in pell_monoid_word()) {
            let lhs = kappa_pell().apply(&pell().apply(&w).unwrap()).unwrap();
            let rhs = pell().apply(&kappa_pell().apply(&w).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(w.alphabet(), Alphabet::binary());
        }
    }
}
