//! Modular-symbol model of the homology of the curve.
//!
//! The curve is a quotient of the upper half plane by the congruence
//! subgroup generated by A B^{-(k^{-1} mod n)}, A^n, B^n and the commutator
//! subgroup of the level-2 group, where A and B are the standard unipotent
//! generators. Right cosets are tracked through exponent sums alone (the
//! abelianized picture is all the coset arithmetic needs); the group of
//! modular symbols is free of rank n on the symbols `[A^r t]`, and cycles are
//! integer combinations with zero boundary.
//!
//! The symbol [A^0] of the identity is taken to be zero. That convention is
//! forced by the r = 1 step of the reduction recursion and makes every
//! computation here consistent; it is flagged rather than silently assumed.

use std::fmt;

use crate::error::{Error, Result};
use crate::homology::{fmt_signed_terms, H1Class};
use crate::params::{CurveParams, Residue};
use crate::words::Sign;

/// One of the two unipotent generators of the level-2 group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaGen {
    A,
    B,
}

/// A signed occurrence of A or B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaLetter {
    pub gen: GammaGen,
    pub sign: Sign,
}

impl fmt::Display for GammaLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.gen {
            GammaGen::A => "A",
            GammaGen::B => "B",
        };
        match self.sign {
            Sign::Pos => write!(f, "{name}"),
            Sign::Neg => write!(f, "{name}^-1"),
        }
    }
}

/// A free word in A, B and their inverses.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GammaWord {
    letters: Vec<GammaLetter>,
}

impl GammaWord {
    pub fn new() -> Self {
        GammaWord::default()
    }

    pub fn from_letters(letters: Vec<GammaLetter>) -> Self {
        GammaWord { letters }
    }

    /// A^e (negative exponents allowed).
    pub fn a_power(e: i64) -> Self {
        GammaWord::power(GammaGen::A, e)
    }

    /// B^e (negative exponents allowed).
    pub fn b_power(e: i64) -> Self {
        GammaWord::power(GammaGen::B, e)
    }

    fn power(gen: GammaGen, e: i64) -> Self {
        let sign = if e >= 0 { Sign::Pos } else { Sign::Neg };
        GammaWord {
            letters: (0..e.unsigned_abs())
                .map(|_| GammaLetter { gen, sign })
                .collect(),
        }
    }

    pub fn letters(&self) -> &[GammaLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &GammaWord) -> GammaWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GammaWord { letters }
    }

    pub fn inverse(&self) -> GammaWord {
        GammaWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| GammaLetter {
                    gen: l.gen,
                    sign: l.sign.flip(),
                })
                .collect(),
        }
    }

    /// w1 w2 w1^{-1} w2^{-1}.
    pub fn commutator(w1: &GammaWord, w2: &GammaWord) -> GammaWord {
        w1.concat(w2).concat(&w1.inverse()).concat(&w2.inverse())
    }

    /// Exponent sums (a, b) of A and B.
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut a = 0;
        let mut b = 0;
        for l in &self.letters {
            match l.gen {
                GammaGen::A => a += l.sign.as_i64(),
                GammaGen::B => b += l.sign.as_i64(),
            }
        }
        (a, b)
    }

    /// Product of the letter matrices, if it stays within word-sized
    /// integers. Only used for display and endpoint checks on short words.
    pub fn matrix(&self) -> Option<Mat2> {
        let mut m = Mat2::identity();
        for l in &self.letters {
            let base = match l.gen {
                GammaGen::A => Mat2::GEN_A,
                GammaGen::B => Mat2::GEN_B,
            };
            let factor = match l.sign {
                Sign::Pos => base,
                Sign::Neg => base.unipotent_inverse(),
            };
            m = m.mul_checked(&factor)?;
        }
        Some(m)
    }
}

impl fmt::Display for GammaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// 2x2 integer matrix, enough for the generator matrices and the endpoint
/// computations on the rational boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const GEN_A: Mat2 = Mat2([[1, 2], [0, 1]]);
    pub const GEN_B: Mat2 = Mat2([[1, 0], [2, 1]]);
    /// The geodesic symbol from 1 to 0.
    pub const TAU: Mat2 = Mat2([[0, -1], [1, -1]]);

    pub fn identity() -> Mat2 {
        Mat2([[1, 0], [0, 1]])
    }

    /// Inverse of a determinant-one matrix.
    pub fn unipotent_inverse(&self) -> Mat2 {
        let [[a, b], [c, d]] = self.0;
        debug_assert_eq!(a * d - b * c, 1);
        Mat2([[d, -b], [-c, a]])
    }

    pub fn mul_checked(&self, rhs: &Mat2) -> Option<Mat2> {
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let x = self.0[i][0].checked_mul(rhs.0[0][j])?;
                let y = self.0[i][1].checked_mul(rhs.0[1][j])?;
                *cell = x.checked_add(y)?;
            }
        }
        Some(Mat2(out))
    }

    /// Projective action on a point of the rational boundary, written as a
    /// primitive fraction (num, den); infinity is (1, 0).
    pub fn act(&self, point: (i64, i64)) -> (i64, i64) {
        let [[a, b], [c, d]] = self.0;
        normalize_fraction(a * point.0 + b * point.1, c * point.0 + d * point.1)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} {}; {} {}]",
            self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1]
        )
    }
}

fn normalize_fraction(mut p: i64, mut q: i64) -> (i64, i64) {
    assert!(p != 0 || q != 0);
    let g = crate::params::gcd(p.unsigned_abs(), q.unsigned_abs()) as i64;
    if g != 0 {
        p /= g;
        q /= g;
    }
    if q < 0 || (q == 0 && p < 0) {
        p = -p;
        q = -q;
    }
    (p, q)
}

/// The right coset of the curve subgroup containing a given word; cosets
/// are represented by powers of A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coset(pub Residue);

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A^{}", self.0)
    }
}

/// Which coset a word lands in: exponent sums (a, b) give the coset of
/// A^{a + k b}. Well defined because commutators and n-th powers of the
/// generators lie in the subgroup.
pub fn coset_of(p: &CurveParams, w: &GammaWord) -> Coset {
    let (a, b) = w.exponent_sums();
    let k = p.k() as i64;
    Coset(p.residue(a + k * b))
}

/// Integer combination of modular symbols, supported on the basis symbols
/// `[A^r t]` plus (until reduction) the symbols [A^r] of plain powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolCombination {
    n: u64,
    tau: Vec<i64>,
    plain: Vec<i64>,
}

impl SymbolCombination {
    pub fn zero(n: u64) -> Self {
        SymbolCombination {
            n,
            tau: vec![0; n as usize],
            plain: vec![0; n as usize],
        }
    }

    /// The basis symbol `[A^r t]`.
    pub fn tau_symbol(n: u64, r: Residue) -> Self {
        let mut s = SymbolCombination::zero(n);
        s.tau[r.as_usize()] += 1;
        s
    }

    /// The unreduced symbol [A^r]; r = 0 is the zero combination.
    pub fn plain_symbol(n: u64, r: Residue) -> Self {
        let mut s = SymbolCombination::zero(n);
        if !r.is_zero() {
            s.plain[r.as_usize()] += 1;
        }
        s
    }

    /// The homology basis element `[A^r t]` - `[t]`; r = 0 gives zero.
    pub fn rho(n: u64, r: Residue) -> Self {
        let mut s = SymbolCombination::zero(n);
        if !r.is_zero() {
            s.tau[r.as_usize()] += 1;
            s.tau[0] -= 1;
        }
        s
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn tau_coeff(&self, r: Residue) -> i64 {
        self.tau[r.as_usize()]
    }

    pub fn tau_coeffs(&self) -> &[i64] {
        &self.tau
    }

    pub fn plain_coeff(&self, r: Residue) -> i64 {
        self.plain[r.as_usize()]
    }

    pub fn is_reduced(&self) -> bool {
        self.plain.iter().all(|&c| c == 0)
    }

    fn first_unreduced(&self) -> Option<u64> {
        self.plain.iter().position(|&c| c != 0).map(|r| r as u64)
    }

    pub fn add(&self, other: &SymbolCombination) -> SymbolCombination {
        assert_eq!(self.n, other.n);
        SymbolCombination {
            n: self.n,
            tau: self
                .tau
                .iter()
                .zip(&other.tau)
                .map(|(a, b)| a + b)
                .collect(),
            plain: self
                .plain
                .iter()
                .zip(&other.plain)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> SymbolCombination {
        SymbolCombination {
            n: self.n,
            tau: self.tau.iter().map(|a| -a).collect(),
            plain: self.plain.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, other: &SymbolCombination) -> SymbolCombination {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: i64) -> SymbolCombination {
        SymbolCombination {
            n: self.n,
            tau: self.tau.iter().map(|a| s * a).collect(),
            plain: self.plain.iter().map(|a| s * a).collect(),
        }
    }

    /// Shifts every symbol index by one: `[A^r t]` -> [A^{r+1} t]. This is
    /// how the deck-group generator acts on reduced combinations.
    pub fn shift_indices(&self) -> SymbolCombination {
        assert!(self.is_reduced());
        let n = self.n as usize;
        let mut tau = vec![0i64; n];
        for (r, &c) in self.tau.iter().enumerate() {
            tau[(r + 1) % n] = c;
        }
        SymbolCombination {
            n: self.n,
            tau,
            plain: vec![0; n],
        }
    }
}

impl fmt::Display for SymbolCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau_terms = self
            .tau
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(r, &c)| {
                let sym = if r == 0 {
                    "[τ]".to_string()
                } else {
                    format!("[A^{r}τ]")
                };
                (c, sym)
            });
        let plain_terms = self
            .plain
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(r, &c)| (c, format!("[A^{r}]")));
        write!(
            f,
            "{}",
            fmt_signed_terms(tau_terms.chain(plain_terms), true)
        )
    }
}

/// Eliminates every plain [A^r] term through the recursion
/// [A^r] = [A^{r-1}] + [A^{r-1} t] - [A^{r-k} t], grounded at [A^0] = 0.
/// Linear and idempotent; the output is supported on the `[A^r t]` basis.
pub fn reduce_symbols(p: &CurveParams, s: &SymbolCombination) -> SymbolCombination {
    assert_eq!(s.n(), p.n());
    let n = p.n() as usize;
    let k = p.k() as i64;
    let mut tau = s.tau.clone();
    for r in 1..n {
        let coeff = s.plain[r];
        if coeff == 0 {
            continue;
        }
        for step in 1..=r as i64 {
            tau[(step - 1) as usize] += coeff;
            tau[(step - k).rem_euclid(p.n() as i64) as usize] -= coeff;
        }
    }
    SymbolCombination {
        n: p.n(),
        tau,
        plain: vec![0; n],
    }
}

/// Multiplicities on the three cusps (over 0, over 1, over infinity).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CuspDivisor {
    pub at_zero: i64,
    pub at_one: i64,
    pub at_infinity: i64,
}

impl CuspDivisor {
    pub fn is_zero(&self) -> bool {
        self.at_zero == 0 && self.at_one == 0 && self.at_infinity == 0
    }
}

/// Boundary of a reduced combination. Every `[A^r t]` runs from the cusp
/// over 1 to the cusp over 0 (total ramification collapses each fiber to a
/// single point), so it contributes +1 at zero and -1 at one. The cusp over
/// infinity is carried for schema stability; these symbols never reach it.
pub fn boundary(p: &CurveParams, s: &SymbolCombination) -> Result<CuspDivisor> {
    assert_eq!(s.n(), p.n());
    if let Some(r) = s.first_unreduced() {
        return Err(Error::Unreduced { r });
    }
    let sum: i64 = s.tau.iter().sum();
    Ok(CuspDivisor {
        at_zero: sum,
        at_one: -sum,
        at_infinity: 0,
    })
}

/// A reduced combination is a cycle exactly when its boundary vanishes,
/// i.e. when its coefficients sum to zero.
pub fn is_cycle(p: &CurveParams, s: &SymbolCombination) -> Result<bool> {
    Ok(boundary(p, s)?.is_zero())
}

/// Reads a cycle off in the homology basis: the coefficient of rho_r
/// becomes the coefficient of `[E_r]`.
pub fn rho_to_e(p: &CurveParams, s: &SymbolCombination) -> Result<H1Class> {
    if !is_cycle(p, s)? {
        let b = boundary(p, s)?;
        return Err(Error::NotACycle {
            at_zero: b.at_zero,
            at_one: b.at_one,
            at_infinity: b.at_infinity,
        });
    }
    let mut v = H1Class::zero(p.n());
    for r in 1..p.n() {
        v.add_term(p.residue(r as i64), s.tau[r as usize]);
    }
    Ok(v)
}
