//! Named morphisms, block substitutions and sequences.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generation::{GenerationScheme, Recurrence};
use crate::substitution::{BlockSubstitution, Morphism};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Kind {
    Morphism,
    BlockSubstitution,
    GenerationScheme,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Morphism => "morphism",
            Kind::BlockSubstitution => "block substitution",
            Kind::GenerationScheme => "generation scheme",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogValue {
    Morphism(Morphism),
    Block(BlockSubstitution),
    Scheme(GenerationScheme),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedObject {
    pub name: &'static str,
    pub description: &'static str,
    pub value: CatalogValue,
}

impl NamedObject {
    pub fn kind(&self) -> Kind {
        match self.value {
            CatalogValue::Morphism(_) => Kind::Morphism,
            CatalogValue::Block(_) => Kind::BlockSubstitution,
            CatalogValue::Scheme(_) => Kind::GenerationScheme,
        }
    }
}

type Builder = fn() -> CatalogValue;

const ENTRIES: &[(&str, &str, Builder)] = &[
    (
        "kolakoski-kappa",
        "Oldenburger-Kolakoski two-block map on the 0/1 coding",
        || CatalogValue::Block(kolakoski_kappa()),
    ),
    (
        "tm-kappa",
        "two-block map whose fixed point x^(00) starts 001110",
        || CatalogValue::Block(tm_kappa()),
    ),
    ("tm-morphism", "Thue-Morse morphism 0->01, 1->10", || {
        CatalogValue::Morphism(tm_morphism())
    }),
    ("pell-morphism", "Pell morphism 0->001, 1->0", || {
        CatalogValue::Morphism(pell_morphism())
    }),
    ("pell-kappa", "two-block map conjugated with the Pell morphism", || {
        CatalogValue::Block(pell_kappa())
    }),
    ("pell-two-block", "two-block map induced by the Pell morphism", || {
        CatalogValue::Block(pell_two_block())
    }),
    ("ex2-sigma", "morphism 0->0001, 1->0", || {
        CatalogValue::Morphism(ex2_sigma())
    }),
    ("ex2-kappa-sigma", "three-block map induced by ex2-sigma", || {
        CatalogValue::Block(ex2_kappa_sigma())
    }),
    ("ex2-kappa-prime", "three-block map commuting with ex2-sigma", || {
        CatalogValue::Block(ex2_kappa_prime())
    }),
    ("ex3-sigma", "morphism 0->01, 1->0111", || {
        CatalogValue::Morphism(ex3_sigma())
    }),
    (
        "ex3-kappa-sigma",
        "two-block map on {01, 11} induced by ex3-sigma",
        || CatalogValue::Block(ex3_kappa_sigma()),
    ),
    ("fibonacci", "Fibonacci morphism 0->01, 1->0", || {
        CatalogValue::Morphism(fibonacci())
    }),
    (
        "tm-kappa-fixed-point",
        "fixed point x^(00) of tm-kappa from seed 001110",
        || {
            CatalogValue::Scheme(GenerationScheme::TruncatedBlockIteration {
                substitution: tm_kappa(),
                seed: bin("001110"),
            })
        },
    ),
    ("tm-blockfix-recurrence", "x^(00) from its index recurrence", || {
        CatalogValue::Scheme(GenerationScheme::Recurrence(Recurrence::TmBlockFix))
    }),
    (
        "kolakoski-fixed-point",
        "fixed point of kolakoski-kappa from block 11",
        || {
            CatalogValue::Scheme(GenerationScheme::TruncatedBlockIteration {
                substitution: kolakoski_kappa(),
                seed: bin("11"),
            })
        },
    ),
    (
        "kolakoski-selfread",
        "Kolakoski word read off its own run lengths, starting with 2",
        || CatalogValue::Scheme(GenerationScheme::SelfReading { start: 1 }),
    ),
    ("pell-word", "fixed point of the Pell morphism", || {
        CatalogValue::Scheme(GenerationScheme::MorphismIteration {
            morphism: pell_morphism(),
            seed: 0,
        })
    }),
    (
        "pell-kappa-fixed-point",
        "fixed point of pell-kappa from block 00",
        || {
            CatalogValue::Scheme(GenerationScheme::TruncatedBlockIteration {
                substitution: pell_kappa(),
                seed: bin("00"),
            })
        },
    ),
    (
        "thue-morse",
        "Thue-Morse word as the fixed point of tm-morphism",
        || {
            CatalogValue::Scheme(GenerationScheme::MorphismIteration {
                morphism: tm_morphism(),
                seed: 0,
            })
        },
    ),
    (
        "thue-morse-recurrence",
        "Thue-Morse word from t(2n)=t(n), t(2n+1)=1-t(n)",
        || CatalogValue::Scheme(GenerationScheme::Recurrence(Recurrence::ThueMorse)),
    ),
    ("fibonacci-word", "fixed point of the Fibonacci morphism", || {
        CatalogValue::Scheme(GenerationScheme::MorphismIteration {
            morphism: fibonacci(),
            seed: 0,
        })
    }),
];

fn bin(s: &str) -> Word {
    Word::binary(s).expect("catalog words are binary")
}

fn morphism(zero: &str, one: &str) -> Morphism {
    Morphism::binary(zero, one).expect("catalog morphisms are valid")
}

fn block(rules: &[(&str, &str)]) -> BlockSubstitution {
    BlockSubstitution::binary(rules).expect("catalog block substitutions are valid")
}

pub fn kolakoski_kappa() -> BlockSubstitution {
    block(&[("00", "10"), ("01", "100"), ("10", "110"), ("11", "1100")])
}

pub fn tm_kappa() -> BlockSubstitution {
    block(&[("00", "001"), ("01", "010"), ("10", "101"), ("11", "110")])
}

pub fn tm_morphism() -> Morphism {
    morphism("01", "10")
}

pub fn pell_morphism() -> Morphism {
    morphism("001", "0")
}

pub fn pell_kappa() -> BlockSubstitution {
    block(&[("00", "0010"), ("01", "001"), ("10", "010")])
}

pub fn pell_two_block() -> BlockSubstitution {
    block(&[("00", "001001"), ("01", "0010"), ("10", "0001")])
}

pub fn ex2_sigma() -> Morphism {
    morphism("0001", "0")
}

pub fn ex2_kappa_sigma() -> BlockSubstitution {
    block(&[
        ("000", "000100010001"),
        ("001", "000100010"),
        ("010", "000100001"),
        ("100", "000010001"),
    ])
}

pub fn ex2_kappa_prime() -> BlockSubstitution {
    block(&[("000", "00010"), ("001", "0001"), ("010", "0010"), ("100", "0010")])
}

pub fn ex3_sigma() -> Morphism {
    morphism("01", "0111")
}

pub fn ex3_kappa_sigma() -> BlockSubstitution {
    block(&[("01", "010111"), ("11", "01110111")])
}

pub fn fibonacci() -> Morphism {
    morphism("01", "0")
}

/// All registered names, in listing order.
pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|(name, _, _)| *name)
}

pub fn entries() -> Vec<NamedObject> {
    ENTRIES
        .iter()
        .map(|&(name, description, build)| NamedObject {
            name,
            description,
            value: build(),
        })
        .collect()
}

pub fn lookup(name: &str) -> Result<NamedObject> {
    ENTRIES
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|&(name, description, build)| NamedObject {
            name,
            description,
            value: build(),
        })
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn wrong_kind(name: &str, expected: Kind) -> Error {
    Error::WrongKind {
        name: name.to_string(),
        expected: expected.as_str(),
    }
}

pub fn lookup_morphism(name: &str) -> Result<Morphism> {
    match lookup(name)?.value {
        CatalogValue::Morphism(m) => Ok(m),
        _ => Err(wrong_kind(name, Kind::Morphism)),
    }
}

pub fn lookup_block(name: &str) -> Result<BlockSubstitution> {
    match lookup(name)?.value {
        CatalogValue::Block(b) => Ok(b),
        _ => Err(wrong_kind(name, Kind::BlockSubstitution)),
    }
}

pub fn lookup_scheme(name: &str) -> Result<GenerationScheme> {
    match lookup(name)?.value {
        CatalogValue::Scheme(s) => Ok(s),
        _ => Err(wrong_kind(name, Kind::GenerationScheme)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::generate_prefix;
    use crate::substitution::RuleSet;
    use crate::word::Alphabet;
    use std::collections::HashSet;

    #[test]
    fn names_are_unique_and_resolve() {
        let all: Vec<_> = names().collect();
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
        for name in all {
            assert_eq!(lookup(name).unwrap().name, name);
        }
        assert_eq!(lookup("nope").unwrap_err(), Error::UnknownName("nope".into()));
        assert!(matches!(lookup_morphism("tm-kappa"), Err(Error::WrongKind { .. })));
    }

    #[test]
    fn displayed_rules() {
        assert_eq!(
            kolakoski_kappa().to_rule_text(),
            "00 -> 10\n01 -> 100\n10 -> 110\n11 -> 1100\n"
        );
        assert_eq!(
            tm_kappa().to_rule_text(),
            "00 -> 001\n01 -> 010\n10 -> 101\n11 -> 110\n"
        );
        assert_eq!(pell_morphism().to_rule_text(), "0 -> 001\n1 -> 0\n");
        assert_eq!(pell_kappa().to_rule_text(), "00 -> 0010\n01 -> 001\n10 -> 010\n");
    }

    #[test]
    fn rule_files_round_trip() {
        for entry in entries() {
            let parsed = match &entry.value {
                CatalogValue::Morphism(m) => {
                    RuleSet::parse(&m.to_rule_text(), Alphabet::binary()).unwrap() == RuleSet::Morphism(m.clone())
                }
                CatalogValue::Block(b) => {
                    RuleSet::parse(&b.to_rule_text(), Alphabet::binary()).unwrap() == RuleSet::Block(b.clone())
                }
                CatalogValue::Scheme(_) => true,
            };
            assert!(parsed, "{}", entry.name);
        }
    }

    #[test]
    fn induced_maps_match_their_morphisms() {
        let k3 = BlockSubstitution::induced(&ex2_sigma(), 3, &ex2_kappa_sigma().domain()).unwrap();
        assert_eq!(k3, ex2_kappa_sigma());
        let k2 = BlockSubstitution::induced(&pell_morphism(), 2, &pell_two_block().domain()).unwrap();
        assert_eq!(k2, pell_two_block());
        let e3 = BlockSubstitution::induced(&ex3_sigma(), 2, &ex3_kappa_sigma().domain()).unwrap();
        assert_eq!(e3, ex3_kappa_sigma());
    }

    #[test]
    fn every_scheme_generates() {
        for entry in entries() {
            if let CatalogValue::Scheme(s) = &entry.value {
                assert_eq!(generate_prefix(s, 500).unwrap().len(), 500, "{}", entry.name);
            }
        }
    }
}
