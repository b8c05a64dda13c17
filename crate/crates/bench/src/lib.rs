//! Shared inputs for the criterion benchmarks.

use twoblock::catalog;
use twoblock::generation::generate_prefix;
use twoblock::Word;

/// Length-`n` prefix of a catalog sequence.
pub fn prefix(name: &str, n: usize) -> Word {
    let scheme = catalog::lookup_scheme(name).expect("registered scheme");
    generate_prefix(&scheme, n).expect("catalog schemes generate")
}
