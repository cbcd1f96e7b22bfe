//! The slit cover of the line and the lifted boundary loop.
//!
//! Cutting the sphere along `[0,1]`, `[1,infinity)` and a short slit at the
//! base point makes the degree-n cover a disjoint union of labeled sheets
//! R_0, ..., R_{n-1}. The inertia exponents dictate how edges over each
//! slit glue across sheets, and walking a loop around infinity through the
//! glued sheets produces the boundary word L constructively, one revolution
//! per sheet.

use std::fmt;

use crate::params::{CurveParams, Residue};
use crate::words::{Letter, Sign, Word};

/// The three kinds of cut edges: over `[0,1]`, over `[1,infinity)`, and over
/// the short slit at the base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Tau,
    Alpha,
    Xi,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 3] = [EdgeKind::Tau, EdgeKind::Alpha, EdgeKind::Xi];

    pub fn label(&self) -> &'static str {
        match self {
            EdgeKind::Tau => "tau",
            EdgeKind::Alpha => "alpha",
            EdgeKind::Xi => "xi",
        }
    }
}

/// For every sheet and edge kind, the sheet the labeled edge glues to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingTable {
    n: u64,
    tau: Vec<u64>,
    alpha: Vec<u64>,
    xi: Vec<u64>,
    /// Inverse of the tau permutation: tau_source[s] is the sheet whose
    /// tau edge glues into sheet s.
    tau_source: Vec<u64>,
}

impl GluingTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn target(&self, kind: EdgeKind, sheet: Residue) -> Residue {
        assert_eq!(sheet.modulus(), self.n);
        let t = match kind {
            EdgeKind::Tau => self.tau[sheet.as_usize()],
            EdgeKind::Alpha => self.alpha[sheet.as_usize()],
            EdgeKind::Xi => self.xi[sheet.as_usize()],
        };
        Residue::new(t as i64, self.n)
    }

    /// The sheet whose tau edge glues into `sheet`.
    pub fn tau_source(&self, sheet: Residue) -> Residue {
        Residue::new(self.tau_source[sheet.as_usize()] as i64, self.n)
    }

    pub fn is_bijection(&self, kind: EdgeKind) -> bool {
        let targets = match kind {
            EdgeKind::Tau => &self.tau,
            EdgeKind::Alpha => &self.alpha,
            EdgeKind::Xi => &self.xi,
        };
        let mut seen = vec![false; self.n as usize];
        for &t in targets {
            if seen[t as usize] {
                return false;
            }
            seen[t as usize] = true;
        }
        true
    }
}

/// Builds the gluing table from the inertia type alone: the tau edge of
/// sheet i glues into sheet i-1, the alpha edge into sheet i-(k+1), and the
/// xi edge back into sheet i (the short slit avoids the branch points).
pub fn gluing_table(p: &CurveParams) -> GluingTable {
    let n = p.n();
    let [at_zero, at_one, _] = p.inertia();
    let step_tau = at_zero.value() as i64;
    let step_alpha = (at_zero.value() + at_one.value()) as i64;
    let tau: Vec<u64> = (0..n)
        .map(|i| Residue::new(i as i64 - step_tau, n).value())
        .collect();
    let alpha = (0..n)
        .map(|i| Residue::new(i as i64 - step_alpha, n).value())
        .collect();
    let xi = (0..n).collect();
    let mut tau_source = vec![0u64; n as usize];
    for (i, &t) in tau.iter().enumerate() {
        tau_source[t as usize] = i as u64;
    }
    GluingTable {
        n,
        tau,
        alpha,
        xi,
        tau_source,
    }
}

/// One revolution of the lifted loop around infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Revolution {
    /// Sheet where the revolution begins.
    pub start: Residue,
    /// The two tau-edge letters the revolution contributes: E_{start+1}
    /// and E_start^{-1}.
    pub emitted: [Letter; 2],
    /// Sheet reached after crossing the slit over `[1, infinity)`.
    pub next: Residue,
}

/// A single traversed edge in the uncancelled path of a revolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedEdge {
    pub kind: EdgeKind,
    pub sheet: Residue,
    pub sign: Sign,
}

impl SignedEdge {
    fn cancels(&self, other: &SignedEdge) -> bool {
        self.kind == other.kind && self.sheet == other.sheet && self.sign != other.sign
    }
}

impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}_{}", self.kind.label(), self.sheet),
            Sign::Neg => write!(f, "{}_{}^-1", self.kind.label(), self.sheet),
        }
    }
}

/// The full record of lifting the loop around infinity: n revolutions, each
/// starting where the previous one ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalLog {
    n: u64,
    revolutions: Vec<Revolution>,
}

impl TraversalLog {
    pub fn revolutions(&self) -> &[Revolution] {
        &self.revolutions
    }

    /// The emitted word, E_0 placeholders included; length 2n.
    pub fn word(&self) -> Word {
        let letters = self
            .revolutions
            .iter()
            .flat_map(|r| r.emitted.iter().copied())
            .collect();
        Word::from_letters(self.n, letters)
    }

    /// The uncancelled edge path of the whole traversal. Each revolution
    /// contributes xi^{-1} . tau_{s+1} . tau_s^{-1} . alpha . alpha^{-1} .
    /// xi' — the alpha pair cancels within the revolution, and each
    /// trailing xi cancels against the next revolution's leading xi^{-1}
    /// (cyclically for the last one).
    pub fn edge_path(&self) -> Vec<SignedEdge> {
        let mut path = Vec::with_capacity(self.revolutions.len() * 6);
        for rev in &self.revolutions {
            path.push(SignedEdge {
                kind: EdgeKind::Xi,
                sheet: rev.start,
                sign: Sign::Neg,
            });
            for letter in rev.emitted {
                path.push(SignedEdge {
                    kind: EdgeKind::Tau,
                    sheet: letter.index,
                    sign: letter.sign,
                });
            }
            path.push(SignedEdge {
                kind: EdgeKind::Alpha,
                sheet: rev.start,
                sign: Sign::Pos,
            });
            path.push(SignedEdge {
                kind: EdgeKind::Alpha,
                sheet: rev.start,
                sign: Sign::Neg,
            });
            path.push(SignedEdge {
                kind: EdgeKind::Xi,
                sheet: rev.next,
                sign: Sign::Pos,
            });
        }
        path
    }

    /// Checks that cyclic free reduction of the uncancelled edge path
    /// leaves exactly the tau edges of the emitted word, reproducing the
    /// cancellation argument edge by edge.
    pub fn edge_cancellation_holds(&self) -> bool {
        let reduced = cyclic_free_reduce(self.edge_path());
        let expected: Vec<SignedEdge> = self
            .word()
            .letters()
            .iter()
            .map(|l| SignedEdge {
                kind: EdgeKind::Tau,
                sheet: l.index,
                sign: l.sign,
            })
            .collect();
        reduced == expected
    }

    /// Sheets in visiting order: start of each revolution.
    pub fn sheet_sequence(&self) -> Vec<u64> {
        self.revolutions.iter().map(|r| r.start.value()).collect()
    }
}

fn cyclic_free_reduce(edges: Vec<SignedEdge>) -> Vec<SignedEdge> {
    let mut stack: Vec<SignedEdge> = Vec::with_capacity(edges.len());
    for e in edges {
        if stack.last().is_some_and(|top| top.cancels(&e)) {
            stack.pop();
        } else {
            stack.push(e);
        }
    }
    let mut lo = 0;
    let mut hi = stack.len();
    while hi - lo >= 2 && stack[lo].cancels(&stack[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    stack[lo..hi].to_vec()
}

/// Simulates the n revolutions of the loop around infinity through the
/// glued sheets, starting on sheet R_0 at the lifted base point.
///
/// Each revolution on sheet s crosses the tau edge gluing into s (emitting
/// E_{s+1}), retraces the tau edge of s backwards (emitting E_s^{-1}), and
/// exits through the alpha edge onto sheet s-(k+1). The returned word is
/// the concatenation of all emitted letters, E_0 placeholders included.
pub fn lift_boundary_loop(p: &CurveParams) -> (TraversalLog, Word) {
    let n = p.n();
    let table = gluing_table(p);
    let mut sheet = p.residue(0);
    let mut revolutions = Vec::with_capacity(n as usize);
    for _ in 0..n {
        let upper = table.tau_source(sheet);
        let next = table.target(EdgeKind::Alpha, sheet);
        revolutions.push(Revolution {
            start: sheet,
            emitted: [Letter::new(upper, Sign::Pos), Letter::new(sheet, Sign::Neg)],
            next,
        });
        sheet = next;
    }
    debug_assert!(sheet.is_zero(), "n revolutions must return to sheet 0");
    let log = TraversalLog { n, revolutions };
    let word = log.word();
    (log, word)
}

/// The boundary word straight from the closed form: the j-th revolution
/// contributes E_{j(n-k-1)+1} . E_{j(n-k-1)}^{-1}. Kept independent of the
/// sheet simulation so the two can be checked against each other.
pub fn formula_word(p: &CurveParams) -> Word {
    let n = p.n();
    let step = n as i64 - p.k() as i64 - 1;
    let mut letters = Vec::with_capacity(2 * n as usize);
    for j in 0..n as i64 {
        let base = p.residue(j * step);
        letters.push(Letter::new(base.offset(1), Sign::Pos));
        letters.push(Letter::new(base, Sign::Neg));
    }
    Word::from_letters(n, letters)
}
