//! Curve parameters and residue arithmetic.
//!
//! A pair (n, k) with n odd, 1 <= k <= n-2 and gcd(n, k(k+1)) = 1 determines
//! the curve v^n = u(1-u)^k together with the constants used everywhere else:
//! the inverse c of k+1 mod n, the genus, and the inertia type of the cyclic
//! cover of the line branched over 0, 1 and infinity.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Canonical representative of an integer mod n, kept in [0, n-1].
///
/// All index arithmetic in the crate goes through this type; the one
/// canonicalization point avoids sign and offset bugs when the same index is
/// written as, say, 7 or -3 or 12 mod 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Canonicalizes any integer mod `modulus`.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Residue {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn as_usize(&self) -> usize {
        self.value as usize
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check_same_modulus(&self, other: &Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in residue arithmetic"
        );
    }

    pub fn add(&self, other: Residue) -> Residue {
        self.check_same_modulus(&other);
        Residue {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, other: Residue) -> Residue {
        self.check_same_modulus(&other);
        Residue {
            value: (self.value + self.modulus - other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn mul(&self, other: Residue) -> Residue {
        self.check_same_modulus(&other);
        Residue {
            value: (self.value as u128 * other.value as u128 % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> Residue {
        Residue {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// Adds a plain integer offset, canonicalizing.
    pub fn offset(&self, delta: i64) -> Residue {
        Residue::new(self.value as i64 + delta, self.modulus)
    }

    /// Multiplicative inverse mod n, if gcd(value, n) = 1.
    pub fn inverse(&self) -> Option<Residue> {
        let (g, x, _) = ext_gcd(self.value as i64, self.modulus as i64);
        if g != 1 {
            return None;
        }
        Some(Residue::new(x, self.modulus))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Validated parameters of the curve v^n = u(1-u)^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveParams {
    n: u64,
    k: u64,
    c: u64,
    genus: u64,
    inertia: [Residue; 3],
}

impl CurveParams {
    /// Validates (n, k) and derives the remaining constants.
    ///
    /// Fails with `Error::Range` when n < 3 or k is outside [1, n-2], and
    /// with `Error::Ramification` when gcd(n, k(k+1)) != 1 (which in
    /// particular rejects every even n).
    pub fn new(n: i64, k: i64) -> Result<CurveParams> {
        if n < 3 || k < 1 || k > n - 2 {
            return Err(Error::Range { n, k });
        }
        let (n, k) = (n as u64, k as u64);
        // k and k+1 are coprime, so gcd(n, k(k+1)) = gcd(n, k) * gcd(n, k+1).
        let g = gcd(n, k) * gcd(n, k + 1);
        if g != 1 {
            return Err(Error::Ramification { n, k, gcd: g });
        }
        let c = Residue::new(k as i64 + 1, n)
            .inverse()
            .expect("k+1 is invertible once the gcd condition holds")
            .value();
        let inertia = [
            Residue::new(1, n),
            Residue::new(k as i64, n),
            Residue::new(-(k as i64 + 1), n),
        ];
        Ok(CurveParams {
            n,
            k,
            c,
            genus: (n - 1) / 2,
            inertia,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The inverse of k+1 mod n, normalized to [1, n-1].
    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Exponents of the inertia generators over 0, 1 and infinity:
    /// (1, k, -(k+1)) mod n.
    pub fn inertia(&self) -> [Residue; 3] {
        self.inertia
    }

    pub fn residue(&self, value: i64) -> Residue {
        Residue::new(value, self.n)
    }

    /// The set S = { j(k+1) mod n : 1 <= j <= c-1 }, of size exactly c-1.
    pub fn s_set(&self) -> BTreeSet<Residue> {
        let step = self.residue(self.k as i64 + 1);
        (1..self.c)
            .map(|j| step.mul(self.residue(j as i64)))
            .collect()
    }

    /// Exponent of the curve automorphism to which the order-n square-curve
    /// automorphism pair (i, j) descends: i + k*j mod n.
    pub fn fermat_auto_image(&self, i: Residue, j: Residue) -> Residue {
        i.add(self.residue(self.k as i64).mul(j))
    }

    /// All valid k for this n, in increasing order.
    pub fn all_valid_k(n: u64) -> Vec<CurveParams> {
        (1..=n.saturating_sub(2) as i64)
            .filter_map(|k| CurveParams::new(n as i64, k).ok())
            .collect()
    }

    /// Every valid pair with 3 <= n <= max_n, ordered by (n, k).
    pub fn all_valid_pairs(max_n: u64) -> Vec<CurveParams> {
        (3..=max_n).flat_map(CurveParams::all_valid_k).collect()
    }
}
