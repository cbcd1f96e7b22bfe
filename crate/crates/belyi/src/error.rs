//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parameters outside the admissible window n >= 3, 1 <= k <= n-2.
    #[error("parameters out of range: need n >= 3 and 1 <= k <= n-2, got n={n}, k={k}")]
    Range { n: i64, k: i64 },

    /// The cover fails to be totally ramified over all three branch points.
    #[error(
        "ramification condition fails: gcd(n, k(k+1)) = {gcd} != 1 for n={n}, k={k}{}",
        if .n % 2 == 0 { " (k(k+1) is even, so even n always fails)" } else { "" }
    )]
    Ramification { n: u64, k: u64, gcd: u64 },

    /// An invariant index outside [1, n-1].
    #[error("index r={r} out of range [1, {max}]")]
    IndexRange { r: i64, max: u64 },

    /// A generator does not occur exactly once with each sign.
    #[error(
        "generator E_{index} must occur exactly once with each sign: \
         found {pos} positive and {neg} negative occurrences"
    )]
    Multiplicity { index: u64, pos: usize, neg: usize },

    /// The word has a nonzero exponent sum, so it has no class in the
    /// exterior square.
    #[error("word is not in the commutator subgroup: exponent sums {sums:?}")]
    NotACommutator { sums: Vec<i64> },

    /// Relabeling by j requires gcd(j, n) = 1.
    #[error("relabeling index j={j} is not invertible mod n={n}")]
    NotCoprime { j: u64, n: u64 },

    /// An inertia triple outside the supported family.
    #[error("unsupported inertia type ({a}, {b}, {c}) mod {n}: {reason}")]
    UnsupportedInertia {
        n: u64,
        a: u64,
        b: u64,
        c: u64,
        reason: &'static str,
    },

    /// A symbol combination still carries unreduced [A^r] terms.
    #[error("symbol combination is not reduced: [A^{r}] term remains")]
    Unreduced { r: u64 },

    /// A symbol combination with nonzero boundary has no homology class.
    #[error("symbol combination is not a cycle: boundary ({at_zero}, {at_one}, {at_infinity})")]
    NotACycle {
        at_zero: i64,
        at_one: i64,
        at_infinity: i64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
