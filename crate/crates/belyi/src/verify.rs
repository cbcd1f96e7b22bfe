//! Cross-verification sweep: every property the crate promises, checked
//! for every valid (n, k) up to a bound.
//!
//! Each pair is independent, so the sweep is data-parallel; with the
//! `parallel` feature (on by default) pairs are distributed with rayon,
//! and without it the same checks run sequentially. Randomized checks are
//! seeded per pair, so reports are identical either way.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covering::{formula_word, lift_boundary_loop, TraversalLog};
use crate::homology::{
    closed_form_delta, difference_coefficient, eps_h1, eps_wedge, expand_t, fermat_image,
    general_inertia_delta, pfaffian_check, substitute, t_decomposition, H1Class, InertiaType,
    WedgeClass,
};
use crate::modsym::{
    boundary, coset_of, is_cycle, reduce_symbols, rho_to_e, GammaGen, GammaLetter, GammaWord, Mat2,
    SymbolCombination,
};
use crate::params::{gcd, CurveParams, Residue};
use crate::words::{magnus_class, ordering_rule_class, Letter, Sign, Word};

#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// Check every valid pair with 3 <= n <= max_n.
    pub max_n: u64,
    /// Random words per pair for the coset fuzz at small n.
    pub fuzz_words: usize,
    /// Bound below which the expensive exhaustive/fuzz checks run in full.
    pub fuzz_max_n: u64,
    /// Reduced fuzz volume for pairs above `fuzz_max_n`.
    pub light_fuzz_words: usize,
    /// Seed for all randomized checks; each pair derives its own stream.
    pub seed: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_n: 101,
            fuzz_words: 10_000,
            fuzz_max_n: 31,
            light_fuzz_words: 300,
            seed: 0xBE11,
        }
    }
}

/// A failed property, reported with the pair and a description.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub n: u64,
    pub k: u64,
    pub property: &'static str,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} k={} property={}: {}",
            self.n, self.k, self.property, self.detail
        )
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub max_n: u64,
    pub pairs_checked: usize,
    pub pairs_by_n: BTreeMap<u64, usize>,
    /// How many times each named property group ran.
    pub property_runs: BTreeMap<&'static str, usize>,
    /// Sign relating the relabeled (3,1,1) classifying element at n = 5 to
    /// the standard one; recorded whenever the sweep covers n = 5.
    pub substitution_sign: Option<i64>,
    pub failures: Vec<Counterexample>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.failures.first()
    }

    /// Summary table plus one line per recorded extra.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("   n  pairs  result\n");
        for (&n, &count) in &self.pairs_by_n {
            let status = if self.failures.iter().any(|f| f.n == n) {
                "FAIL"
            } else {
                "ok"
            };
            out.push_str(&format!("{n:>4}  {count:>5}  {status}\n"));
        }
        out.push_str(&format!(
            "checked {} pairs with 3 <= n <= {}\n",
            self.pairs_checked, self.max_n
        ));
        for (name, count) in &self.property_runs {
            out.push_str(&format!("  property {name}: {count} runs\n"));
        }
        if let Some(sign) = self.substitution_sign {
            out.push_str(&format!(
                "substitution remark at n=5: relabeling the (3,1,1) element by j=3 \
                 gives {sign} * delta(5,2) (sign {sign})\n"
            ));
        }
        if let Some(cx) = self.first_failure() {
            out.push_str(&format!("FIRST COUNTEREXAMPLE: {cx}\n"));
        }
        out
    }
}

struct PairOutcome {
    n: u64,
    runs: Vec<&'static str>,
    failure: Option<Counterexample>,
}

/// Runs the sweep, parallel when the `parallel` feature is enabled.
pub fn sweep(opts: &SweepOptions) -> SweepReport {
    #[cfg(feature = "parallel")]
    {
        sweep_parallel(opts)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(opts)
    }
}

/// Single-threaded sweep; the reference path the parallel one must match.
pub fn sweep_sequential(opts: &SweepOptions) -> SweepReport {
    let pairs = CurveParams::all_valid_pairs(opts.max_n);
    let outcomes: Vec<PairOutcome> = pairs.iter().map(|p| run_pair(p, opts)).collect();
    let orders: Vec<_> = distinct_n(&pairs)
        .into_iter()
        .map(|p| (p, check_eps_action(&p)))
        .collect();
    assemble(opts, outcomes, orders)
}

/// Rayon-parallel sweep over pairs.
#[cfg(feature = "parallel")]
pub fn sweep_parallel(opts: &SweepOptions) -> SweepReport {
    use rayon::prelude::*;
    let pairs = CurveParams::all_valid_pairs(opts.max_n);
    let outcomes: Vec<PairOutcome> = pairs.par_iter().map(|p| run_pair(p, opts)).collect();
    let orders: Vec<_> = distinct_n(&pairs)
        .into_par_iter()
        .map(|p| (p, check_eps_action(&p)))
        .collect();
    assemble(opts, outcomes, orders)
}

/// One representative pair per n (the action on homology depends only on n).
fn distinct_n(pairs: &[CurveParams]) -> Vec<CurveParams> {
    let mut out: Vec<CurveParams> = Vec::new();
    for p in pairs {
        if out.last().map(|q| q.n()) != Some(p.n()) {
            out.push(*p);
        }
    }
    out
}

fn assemble(
    opts: &SweepOptions,
    outcomes: Vec<PairOutcome>,
    orders: Vec<(CurveParams, Result<(), String>)>,
) -> SweepReport {
    let mut report = SweepReport {
        max_n: opts.max_n,
        pairs_checked: outcomes.len(),
        pairs_by_n: BTreeMap::new(),
        property_runs: BTreeMap::new(),
        substitution_sign: None,
        failures: Vec::new(),
    };
    for outcome in outcomes {
        *report.pairs_by_n.entry(outcome.n).or_insert(0) += 1;
        for name in outcome.runs {
            *report.property_runs.entry(name).or_insert(0) += 1;
        }
        if let Some(cx) = outcome.failure {
            report.failures.push(cx);
        }
    }
    for (p, res) in orders {
        *report.property_runs.entry("eps-order").or_insert(0) += 1;
        if let Err(detail) = res {
            report.failures.push(Counterexample {
                n: p.n(),
                k: p.k(),
                property: "eps-order",
                detail,
            });
        }
    }
    if opts.max_n >= 5 {
        *report
            .property_runs
            .entry("substitution-remark")
            .or_insert(0) += 1;
        match substitution_remark_sign() {
            Ok(sign) => report.substitution_sign = Some(sign),
            Err(detail) => report.failures.push(Counterexample {
                n: 5,
                k: 2,
                property: "substitution-remark",
                detail,
            }),
        }
    }
    report.failures.sort_by_key(|f| (f.n, f.k));
    report
}

fn run_pair(p: &CurveParams, opts: &SweepOptions) -> PairOutcome {
    let mut runs = Vec::new();
    let failure = run_pair_inner(p, opts, &mut runs).err();
    PairOutcome {
        n: p.n(),
        runs,
        failure,
    }
}

fn run_pair_inner(
    p: &CurveParams,
    opts: &SweepOptions,
    runs: &mut Vec<&'static str>,
) -> Result<(), Counterexample> {
    let cx = |property: &'static str, detail: String| Counterexample {
        n: p.n(),
        k: p.k(),
        property,
        detail,
    };
    let mut rng = pair_rng(opts.seed, p);

    check_params(p).map_err(|d| cx("params-invariants", d))?;
    runs.push("params-invariants");

    let (log, boundary_word) = lift_boundary_loop(p);
    check_word_shape(p, &log, &boundary_word).map_err(|d| cx("word-shape", d))?;
    runs.push("word-shape");

    check_between(p, &boundary_word).map_err(|d| cx("between-formula", d))?;
    runs.push("between-formula");

    let delta = closed_form_delta(p);
    check_three_routes(&boundary_word, &delta).map_err(|d| cx("three-route-delta", d))?;
    runs.push("three-route-delta");

    check_pfaffian(p, &delta).map_err(|d| cx("pfaffian-unimodular", d))?;
    runs.push("pfaffian-unimodular");

    check_t_decomposition(p, &delta).map_err(|d| cx("t-decomposition", d))?;
    runs.push("t-decomposition");

    check_eps_invariance(p, &delta).map_err(|d| cx("eps-invariance", d))?;
    runs.push("eps-invariance");

    let fuzz = if p.n() <= opts.fuzz_max_n {
        opts.fuzz_words
    } else {
        opts.light_fuzz_words
    };
    let exhaustive = p.n() <= opts.fuzz_max_n;
    modsym_suite(p, fuzz, exhaustive, &mut rng).map_err(|d| cx("modsym-suite", d))?;
    runs.push("modsym-suite");

    check_fermat_image(p, &mut rng).map_err(|d| cx("fermat-image", d))?;
    runs.push("fermat-image");

    check_general_inertia(p, &delta, &mut rng).map_err(|d| cx("general-inertia", d))?;
    runs.push("general-inertia");

    Ok(())
}

fn pair_rng(seed: u64, p: &CurveParams) -> ChaCha8Rng {
    let mixed = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(p.n().wrapping_mul(0x0100_0000_01b3))
        .wrapping_add(p.k());
    ChaCha8Rng::seed_from_u64(mixed)
}

fn check_params(p: &CurveParams) -> Result<(), String> {
    let n = p.n();
    if (p.c() * (p.k() + 1)) % n != 1 {
        return Err(format!("c = {} is not inverse to k+1", p.c()));
    }
    let s = p.s_set();
    if s.len() as u64 != p.c() - 1 {
        return Err(format!(
            "s_set has {} elements, expected {}",
            s.len(),
            p.c() - 1
        ));
    }
    let direct: std::collections::BTreeSet<Residue> = (1..p.c())
        .map(|j| p.residue((j * (p.k() + 1)) as i64))
        .collect();
    if s != direct {
        return Err("s_set disagrees with direct enumeration".into());
    }
    let inertia = p.inertia();
    let total: u64 = inertia.iter().map(|r| r.value()).sum();
    if !total.is_multiple_of(n) {
        return Err("inertia residues do not sum to 0".into());
    }
    if inertia.iter().any(|r| gcd(r.value(), n) != 1) {
        return Err("inertia residue shares a factor with n".into());
    }
    // deck action descends as expected on the generating automorphisms
    if p.fermat_auto_image(p.residue(1), p.residue(0)) != p.residue(1) {
        return Err("first automorphism does not descend to the deck generator".into());
    }
    let k_inv = p.residue(p.k() as i64).inverse().expect("k invertible");
    if !p.fermat_auto_image(p.residue(1), k_inv.neg()).is_zero() {
        return Err("subgroup generator does not act trivially".into());
    }
    Ok(())
}

fn check_word_shape(p: &CurveParams, log: &TraversalLog, word: &Word) -> Result<(), String> {
    let n = p.n();
    if word.len() as u64 != 2 * n {
        return Err(format!("word length {} != 2n", word.len()));
    }
    if word != &formula_word(p) {
        return Err("sheet simulation disagrees with the closed-form word".into());
    }
    if word.exponent_sums().iter().any(|&s| s != 0) {
        return Err("boundary word has nonzero exponent sums".into());
    }
    let mut pos = vec![0usize; n as usize];
    let mut neg = vec![0usize; n as usize];
    for l in word.letters() {
        match l.sign {
            Sign::Pos => pos[l.index.as_usize()] += 1,
            Sign::Neg => neg[l.index.as_usize()] += 1,
        }
    }
    if pos.iter().any(|&c| c != 1) || neg.iter().any(|&c| c != 1) {
        return Err("some generator does not occur exactly once with each sign".into());
    }
    if &word.free_reduce() != word {
        return Err("boundary word is not freely reduced".into());
    }
    if log.revolutions().len() as u64 != n {
        return Err("traversal does not have n revolutions".into());
    }
    let step = n as i64 - p.k() as i64 - 1;
    for (j, rev) in log.revolutions().iter().enumerate() {
        if rev.start != p.residue(j as i64 * step) {
            return Err(format!("revolution {j} starts on the wrong sheet"));
        }
        if rev.next != rev.start.offset(-(p.k() as i64 + 1)) {
            return Err(format!("revolution {j} lands on the wrong sheet"));
        }
    }
    if !log.revolutions()[0].start.is_zero()
        || !log.revolutions().last().expect("nonempty").next.is_zero()
    {
        return Err("traversal does not start and end on sheet 0".into());
    }
    let mut sheets = log.sheet_sequence();
    sheets.sort_unstable();
    if sheets != (0..n).collect::<Vec<_>>() {
        return Err("sheets are not visited exactly once".into());
    }
    if !log.edge_cancellation_holds() {
        return Err("edge-path cancellation does not reproduce the word".into());
    }
    Ok(())
}

fn check_between(p: &CurveParams, word: &Word) -> Result<(), String> {
    let n = p.n();
    let step = n as i64 - p.k() as i64 - 1;
    for i in 0..n as i64 {
        let got = word
            .between(p.residue(i))
            .map_err(|e| format!("between failed at i={i}: {e}"))?;
        let mut expected = Vec::new();
        for j in 1..p.c() as i64 {
            let base = p.residue(i + j * step);
            expected.push(Letter::new(base.offset(1), Sign::Pos));
            expected.push(Letter::new(base, Sign::Neg));
        }
        if got != expected {
            return Err(format!(
                "between sequence at i={i} disagrees with the formula"
            ));
        }
    }
    Ok(())
}

fn check_three_routes(word: &Word, delta: &WedgeClass) -> Result<(), String> {
    let magnus = magnus_class(word).map_err(|e| e.to_string())?;
    let ordering = ordering_rule_class(word).map_err(|e| e.to_string())?;
    if magnus != ordering {
        return Err("power-series and commutator-collection routes disagree".into());
    }
    let inverse_class = magnus_class(&word.inverse()).map_err(|e| e.to_string())?;
    if inverse_class != magnus.neg() {
        return Err("class of the inverse word is not the negated class".into());
    }
    if delta != &magnus.neg() {
        return Err("closed form disagrees with the negated word class".into());
    }
    Ok(())
}

fn check_pfaffian(p: &CurveParams, delta: &WedgeClass) -> Result<(), String> {
    let det = pfaffian_check(p, delta);
    if det != BigInt::from(1) {
        return Err(format!("Gram determinant is {det}, expected 1"));
    }
    Ok(())
}

fn check_t_decomposition(p: &CurveParams, delta: &WedgeClass) -> Result<(), String> {
    let n = p.n();
    let t = t_decomposition(p);
    if &t.recompose(p) != delta {
        return Err("t-coefficients do not recompose the classifying element".into());
    }
    // reflection rule for the difference coefficients
    for r in 1..n {
        if difference_coefficient(p, n - r) != -difference_coefficient(p, r) {
            return Err(format!(
                "difference coefficient at {r} breaks the reflection rule"
            ));
        }
    }
    // independent route through the member set: t_r = [r in S] - [r+1 in S]
    let s = p.s_set();
    for r in 1..=(n - 1) / 2 {
        let expected =
            s.contains(&p.residue(r as i64)) as i64 - s.contains(&p.residue(r as i64 + 1)) as i64;
        if t.t(r) != expected {
            return Err(format!("t_{r} disagrees with the member-set route"));
        }
    }
    Ok(())
}

fn check_eps_invariance(p: &CurveParams, delta: &WedgeClass) -> Result<(), String> {
    if &eps_wedge(p, delta) != delta {
        return Err("classifying element is not deck-invariant".into());
    }
    Ok(())
}

/// Per-n facts about the deck action: multiplicative order exactly n on
/// H_1, every T_r fixed, and the reflection T_{n-r} = -T_r. (These do not
/// depend on k, so they run once per level instead of once per pair.)
fn check_eps_action(p: &CurveParams) -> Result<(), String> {
    let n = p.n();
    let identity: Vec<H1Class> = (1..n)
        .map(|i| H1Class::basis(n, p.residue(i as i64)))
        .collect();
    let mut columns = identity.clone();
    for power in 1..=n {
        columns = columns.iter().map(|v| eps_h1(p, v)).collect();
        let is_identity = columns == identity;
        if power < n && is_identity {
            return Err(format!("deck action has order dividing {power} < n"));
        }
        if power == n && !is_identity {
            return Err("deck action to the n-th power is not the identity".into());
        }
    }
    for r in 1..n as i64 {
        let t = expand_t(p, r).map_err(|e| e.to_string())?;
        if eps_wedge(p, &t) != t {
            return Err(format!("T_{r} is not deck-invariant"));
        }
        let reflected = expand_t(p, n as i64 - r).map_err(|e| e.to_string())?;
        if reflected != t.neg() {
            return Err(format!("T_{{n-{r}}} != -T_{r}"));
        }
    }
    Ok(())
}

/// The modular-symbol checks for one pair: endpoint matrices, boundary and
/// cycle structure, the coset shift law, fuzzed coset invariance under the
/// subgroup generators, reduction linearity, and compatibility of the index
/// shift with the deck action on homology.
pub fn modsym_suite(
    p: &CurveParams,
    fuzz_words: usize,
    exhaustive: bool,
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    let n = p.n();

    // endpoints of the base geodesic: from 1 to 0
    if Mat2::TAU.act((0, 1)) != (1, 1) || Mat2::TAU.act((1, 0)) != (0, 1) {
        return Err("base symbol endpoints are wrong".into());
    }

    // boundary and the homology dictionary
    for r in 1..n {
        let rho = SymbolCombination::rho(n, p.residue(r as i64));
        if !boundary(p, &rho).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("rho_{r} has nonzero boundary"));
        }
        if rho_to_e(p, &rho).map_err(|e| e.to_string())? != H1Class::basis(n, p.residue(r as i64)) {
            return Err(format!("rho_{r} does not map to the basis class"));
        }
    }
    if is_cycle(p, &SymbolCombination::tau_symbol(n, p.residue(0))).map_err(|e| e.to_string())? {
        return Err("the base symbol must not be a cycle".into());
    }

    // reduction: linear, idempotent, and boundary-free on plain symbols
    for r in 0..n {
        let reduced = reduce_symbols(p, &SymbolCombination::plain_symbol(n, p.residue(r as i64)));
        if !reduced.is_reduced() {
            return Err("reduction left a plain symbol".into());
        }
        if reduced.tau_coeffs().iter().sum::<i64>() != 0 {
            return Err(format!("reduced [A^{r}] has nonzero coefficient sum"));
        }
    }
    for _ in 0..8 {
        let s1 = random_symbols(n, rng);
        let s2 = random_symbols(n, rng);
        let lhs = reduce_symbols(p, &s1.add(&s2));
        let rhs = reduce_symbols(p, &s1).add(&reduce_symbols(p, &s2));
        if lhs != rhs {
            return Err("reduction is not linear".into());
        }
        if reduce_symbols(p, &lhs) != lhs {
            return Err("reduction is not idempotent".into());
        }
    }

    // rank n-1: random cycles decompose uniquely over the rho basis
    for _ in 0..8 {
        let cycle = random_cycle(n, rng);
        let coords = rho_to_e(p, &cycle).map_err(|e| e.to_string())?;
        let mut rebuilt = SymbolCombination::zero(n);
        for r in 1..n {
            rebuilt =
                rebuilt.add(&SymbolCombination::rho(n, p.residue(r as i64)).scale(coords.coeff(r)));
        }
        if rebuilt != cycle {
            return Err("rho coordinates do not rebuild the cycle".into());
        }
    }

    // coset shift law
    let k_inv = p
        .residue(p.k() as i64)
        .inverse()
        .expect("k invertible")
        .value() as i64;
    let shift_instance = |r: i64, s: i64, m: i64| -> Result<(), String> {
        let base = coset_of(p, &GammaWord::a_power(r).concat(&GammaWord::b_power(s)));
        let shifted = coset_of(
            p,
            &GammaWord::a_power(r + m).concat(&GammaWord::b_power(s - m * k_inv)),
        );
        if base != shifted {
            return Err(format!("coset shift law fails at r={r} s={s} m={m}"));
        }
        Ok(())
    };
    if exhaustive {
        for r in 0..n as i64 {
            for s in 0..n as i64 {
                for m in 1..n as i64 {
                    shift_instance(r, s, m)?;
                }
            }
        }
    } else {
        for _ in 0..64 {
            let r = rng.gen_range(0..n as i64);
            let s = rng.gen_range(0..n as i64);
            let m = rng.gen_range(1..n as i64);
            shift_instance(r, s, m)?;
        }
    }

    // fuzz: appending any subgroup generator fixes the coset
    for _ in 0..fuzz_words {
        let w = random_gamma_word(rng, 24);
        let before = coset_of(p, &w);
        let generator = random_subgroup_generator(p, k_inv, rng);
        let after = coset_of(p, &w.concat(&generator));
        if before != after {
            return Err(format!(
                "coset changed after appending a subgroup generator to {w}"
            ));
        }
    }

    // index shift on cycles matches the deck action on homology
    if exhaustive {
        for r in 1..n {
            let rho = SymbolCombination::rho(n, p.residue(r as i64));
            let lhs = rho_to_e(p, &rho.shift_indices()).map_err(|e| e.to_string())?;
            let rhs = eps_h1(p, &rho_to_e(p, &rho).map_err(|e| e.to_string())?);
            if lhs != rhs {
                return Err(format!(
                    "index shift disagrees with the deck action at r={r}"
                ));
            }
        }
        for _ in 0..8 {
            let cycle = random_cycle(n, rng);
            let lhs = rho_to_e(p, &cycle.shift_indices()).map_err(|e| e.to_string())?;
            let rhs = eps_h1(p, &rho_to_e(p, &cycle).map_err(|e| e.to_string())?);
            if lhs != rhs {
                return Err("index shift disagrees with the deck action on a cycle".into());
            }
        }
    }

    Ok(())
}

fn check_fermat_image(p: &CurveParams, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = p.n();
    let instance = |i: i64, j: i64| -> Result<(), String> {
        let image = fermat_image(p, p.residue(i), p.residue(j));
        // independent route: abelianize E_{jk} E_{i+jk}^{-1} E_i
        let jk = p.residue(j * p.k() as i64);
        let word = Word::from_letters(
            n,
            vec![
                Letter::new(jk, Sign::Pos),
                Letter::new(jk.offset(i), Sign::Neg),
                Letter::new(p.residue(i), Sign::Pos),
            ],
        );
        if word.abelianization() != image {
            return Err(format!(
                "image of loop ({i}, {j}) disagrees with the word route"
            ));
        }
        Ok(())
    };
    if n <= 31 {
        for i in 0..n as i64 {
            for j in 0..n as i64 {
                instance(i, j)?;
            }
        }
    } else {
        for _ in 0..4 * n {
            instance(rng.gen_range(0..n as i64), rng.gen_range(0..n as i64))?;
        }
    }
    Ok(())
}

fn check_general_inertia(
    p: &CurveParams,
    delta: &WedgeClass,
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    let n = p.n();
    let standard =
        general_inertia_delta(p, &InertiaType::standard(p)).map_err(|e| e.to_string())?;
    if &standard != delta {
        return Err("standard inertia type does not give back the classifying element".into());
    }
    for _ in 0..3 {
        let j = random_coprime(n, rng);
        let t = InertiaType::new(
            n,
            j as i64,
            (j as i64) * p.k() as i64,
            -(j as i64) * (p.k() as i64 + 1),
        );
        let relabeled = general_inertia_delta(p, &t).map_err(|e| e.to_string())?;
        let back = substitute(p, &relabeled, p.residue(j as i64)).map_err(|e| e.to_string())?;
        if &back != delta {
            return Err(format!("relabeling by j={j} does not round-trip"));
        }
        if pfaffian_check(p, &relabeled) != BigInt::from(1) {
            return Err(format!("relabeled element for j={j} lost unimodularity"));
        }
    }
    // substitution is multiplicative in the relabeling index
    let j1 = random_coprime(n, rng);
    let j2 = random_coprime(n, rng);
    let once = substitute(p, delta, p.residue(j1 as i64)).map_err(|e| e.to_string())?;
    let twice = substitute(p, &once, p.residue(j2 as i64)).map_err(|e| e.to_string())?;
    let combined = substitute(p, delta, p.residue((j1 * j2) as i64)).map_err(|e| e.to_string())?;
    if twice != combined {
        return Err("substitution is not multiplicative".into());
    }
    Ok(())
}

/// Entry point for the per-pair modular-symbol suite with a fresh seeded
/// stream; used by the command-line `modsym --check`.
pub fn run_modsym_suite(p: &CurveParams, fuzz_words: usize, seed: u64) -> Result<(), String> {
    let mut rng = pair_rng(seed, p);
    modsym_suite(p, fuzz_words, true, &mut rng)
}

/// The recorded comparison at n = 5: relabeling the classifying element of
/// the (3, 1, 1) inertia type by j = 3 matches the standard element for
/// k = 2 up to a single overall sign, which is returned.
pub fn substitution_remark_sign() -> Result<i64, String> {
    let p = CurveParams::new(5, 2).map_err(|e| e.to_string())?;
    let mut element_311 = WedgeClass::zero(5);
    element_311.add_term(1, 2, -1);
    element_311.add_term(2, 3, -1);
    element_311.add_term(3, 4, -1);
    let relabeled = substitute(&p, &element_311, p.residue(3)).map_err(|e| e.to_string())?;
    let delta = closed_form_delta(&p);
    if relabeled == delta {
        Ok(1)
    } else if relabeled == delta.neg() {
        Ok(-1)
    } else {
        Err("relabeled element is not the standard one up to sign".into())
    }
}

fn random_symbols(n: u64, rng: &mut ChaCha8Rng) -> SymbolCombination {
    let mut s = SymbolCombination::zero(n);
    for _ in 0..rng.gen_range(1..6) {
        let r = Residue::new(rng.gen_range(0..n as i64), n);
        let coeff = rng.gen_range(-3i64..=3);
        if rng.gen_bool(0.5) {
            s = s.add(&SymbolCombination::tau_symbol(n, r).scale(coeff));
        } else {
            s = s.add(&SymbolCombination::plain_symbol(n, r).scale(coeff));
        }
    }
    s
}

fn random_cycle(n: u64, rng: &mut ChaCha8Rng) -> SymbolCombination {
    let mut s = SymbolCombination::zero(n);
    let mut total = 0i64;
    for r in 1..n {
        let coeff = rng.gen_range(-3i64..=3);
        total += coeff;
        s = s.add(&SymbolCombination::tau_symbol(n, Residue::new(r as i64, n)).scale(coeff));
    }
    s.add(&SymbolCombination::tau_symbol(n, Residue::new(0, n)).scale(-total))
}

fn random_gamma_word(rng: &mut ChaCha8Rng, max_len: usize) -> GammaWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| GammaLetter {
            gen: if rng.gen_bool(0.5) {
                GammaGen::A
            } else {
                GammaGen::B
            },
            sign: if rng.gen_bool(0.5) {
                Sign::Pos
            } else {
                Sign::Neg
            },
        })
        .collect();
    GammaWord::from_letters(letters)
}

/// One of the defining generators of the curve subgroup: A B^{-(k^{-1})},
/// A^n, B^n, or a commutator of random words.
fn random_subgroup_generator(p: &CurveParams, k_inv: i64, rng: &mut ChaCha8Rng) -> GammaWord {
    let n = p.n() as i64;
    match rng.gen_range(0..4) {
        0 => GammaWord::a_power(1).concat(&GammaWord::b_power(-k_inv)),
        1 => GammaWord::a_power(n),
        2 => GammaWord::b_power(n),
        _ => {
            let w1 = random_gamma_word(rng, 6);
            let w2 = random_gamma_word(rng, 6);
            GammaWord::commutator(&w1, &w2)
        }
    }
}

fn random_coprime(n: u64, rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let j = rng.gen_range(1..n);
        if gcd(j, n) == 1 {
            return j;
        }
    }
}
