//! Words in the free group on the loops E_0, ..., E_{n-1}.
//!
//! Composition is read left to right, matching path composition. E_0 is a
//! placeholder for the trivial loop: it is carried in words where the
//! bookkeeping wants it and killed before anything homological happens.
//!
//! Two independent evaluations of the class of a word in the exterior
//! square live here: the truncated power-series (Magnus) expansion, and the
//! commutator-collection rule driven by which letters sit between an
//! inverse pair. The closed-form element in `homology` is checked against
//! both.

use std::fmt;

use crate::error::{Error, Result};
use crate::homology::{H1Class, WedgeClass};
use crate::params::Residue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A single signed generator E_index or E_index^{-1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: Residue,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: Residue, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "E_{}", self.index),
            Sign::Neg => write!(f, "E_{}^-1", self.index),
        }
    }
}

/// A finite word over the signed generators, read left to right.
/// Reduced form is not required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    n: u64,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(n: u64) -> Self {
        Word {
            n,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(n: u64, letters: Vec<Letter>) -> Self {
        for l in &letters {
            assert_eq!(l.index.modulus(), n, "letter index has wrong modulus");
        }
        Word { n, letters }
    }

    /// Convenience constructor from (index, sign) pairs; indices are
    /// canonicalized mod n, negative exponent written as -1.
    pub fn parse(n: u64, entries: &[(i64, i64)]) -> Self {
        let letters = entries
            .iter()
            .map(|&(idx, s)| {
                Letter::new(
                    Residue::new(idx, n),
                    if s >= 0 { Sign::Pos } else { Sign::Neg },
                )
            })
            .collect();
        Word { n, letters }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        assert_eq!(letter.index.modulus(), self.n);
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { n: self.n, letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The unique reduced word with no adjacent x x^{-1}.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last().is_some_and(|top| top.cancels(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word {
            n: self.n,
            letters: stack,
        }
    }

    /// Deletes every E_0 letter (the trivial-loop placeholders).
    pub fn strip_placeholders(&self) -> Word {
        Word {
            n: self.n,
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|l| !l.index.is_zero())
                .collect(),
        }
    }

    /// Exponent sum of each generator, indexed 0..n-1.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.n as usize];
        for l in &self.letters {
            sums[l.index.as_usize()] += l.sign.as_i64();
        }
        sums
    }

    /// Image in H_1: exponent sums over `[E_1]`, ..., `[E_{n-1}]`, with the
    /// E_0 placeholders contributing nothing.
    pub fn abelianization(&self) -> H1Class {
        let mut v = H1Class::zero(self.n);
        for l in &self.letters {
            v.add_term(l.index, l.sign.as_i64());
        }
        v
    }

    fn occurrences(&self, index: Residue) -> (Vec<usize>, Vec<usize>) {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (t, l) in self.letters.iter().enumerate() {
            if l.index == index {
                match l.sign {
                    Sign::Pos => pos.push(t),
                    Sign::Neg => neg.push(t),
                }
            }
        }
        (pos, neg)
    }

    /// The letters strictly between E_i^{-1} and E_i after cyclically
    /// rotating the word so that E_i^{-1} comes first. Requires that E_i
    /// and E_i^{-1} each occur exactly once.
    pub fn between(&self, i: Residue) -> Result<Vec<Letter>> {
        assert_eq!(i.modulus(), self.n);
        let (pos, neg) = self.occurrences(i);
        if pos.len() != 1 || neg.len() != 1 {
            return Err(Error::Multiplicity {
                index: i.value(),
                pos: pos.len(),
                neg: neg.len(),
            });
        }
        let len = self.letters.len();
        let start = neg[0];
        let span = (pos[0] + len - start) % len;
        Ok((1..span)
            .map(|offset| self.letters[(start + offset) % len])
            .collect())
    }

    /// Renders as `E_1·E_4·E_3^-1` tokens.
    pub fn render(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Image of a word under the substitution E_i -> 1 + X_i,
/// E_i^{-1} -> 1 - X_i + X_i^2, truncated past total degree 2.
///
/// Generators are E_1, ..., E_{n-1}; E_0 letters must be stripped before
/// expanding. The quadratic part is stored row-major: entry (a, b) is the
/// coefficient of X_{a+1} X_{b+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTwoExpansion {
    n: u64,
    linear: Vec<i64>,
    quadratic: Vec<i64>,
}

impl DegreeTwoExpansion {
    pub fn of_word(w: &Word) -> Self {
        let n = w.n();
        let m = (n - 1) as usize;
        let mut linear = vec![0i64; m];
        let mut quadratic = vec![0i64; m * m];
        for l in &w.strip_placeholders().letters {
            let g = l.index.as_usize() - 1;
            let s = l.sign.as_i64();
            // Right-multiplying by (1 + s X_g + [s<0] X_g^2) appends one
            // column built from the current linear part.
            for (a, &la) in linear.iter().enumerate() {
                quadratic[a * m + g] += s * la;
            }
            if l.sign == Sign::Neg {
                quadratic[g * m + g] += 1;
            }
            linear[g] += s;
        }
        DegreeTwoExpansion {
            n,
            linear,
            quadratic,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn linear(&self) -> &[i64] {
        &self.linear
    }

    /// Coefficient of X_a X_b for a, b in [1, n-1].
    pub fn quadratic(&self, a: u64, b: u64) -> i64 {
        let m = (self.n - 1) as usize;
        self.quadratic[(a as usize - 1) * m + (b as usize - 1)]
    }

    pub fn is_antisymmetric(&self) -> bool {
        let m = (self.n - 1) as usize;
        (0..m).all(|a| (a..m).all(|b| self.quadratic[a * m + b] == -self.quadratic[b * m + a]))
    }
}

/// Class of a commutator-subgroup word in the exterior square, via the
/// degree-2 truncation of the power-series expansion.
///
/// The word must have zero exponent sum for every generator once the E_0
/// placeholders are removed; the quadratic part is then antisymmetric with
/// zero diagonal and descends to sum of a_{IJ} `[E_I]` ^ `[E_J]` over I < J.
pub fn magnus_class(w: &Word) -> Result<WedgeClass> {
    let expansion = DegreeTwoExpansion::of_word(w);
    if expansion.linear().iter().any(|&c| c != 0) {
        return Err(Error::NotACommutator {
            sums: expansion.linear().to_vec(),
        });
    }
    debug_assert!(expansion.is_antisymmetric());
    let n = w.n();
    let mut out = WedgeClass::zero(n);
    for i in 1..n {
        for j in i + 1..n {
            out.add_term(i, j, expansion.quadratic(i, j));
        }
    }
    Ok(out)
}

/// Class of a word in the exterior square by commutator collection.
///
/// Repeatedly: rotate so E_i^{-1} leads (a cyclic permutation, which does
/// not move the class), record -`[E_i]` ^ [E'] for every letter E' between
/// E_i^{-1} and E_i, then delete the pair — splitting off one commutator
/// factor per step. Requires every participating generator to occur
/// exactly once with each sign, which holds for the boundary word.
pub fn ordering_rule_class(w: &Word) -> Result<WedgeClass> {
    let n = w.n();
    let mut word = w.strip_placeholders();
    let mut out = WedgeClass::zero(n);
    while let Some(&first) = word.letters().first() {
        let i = first.index;
        let inner = word.between(i)?;
        for l in &inner {
            out.add_term(i.value(), l.index.value(), -l.sign.as_i64());
        }
        // Drop the E_i^{±1} pair; the survivors keep their cyclic order.
        let remaining = word
            .letters()
            .iter()
            .copied()
            .filter(|l| l.index != i)
            .collect();
        word = Word::from_letters(n, remaining);
    }
    Ok(out)
}
