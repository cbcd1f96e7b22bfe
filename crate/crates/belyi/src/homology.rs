//! Exact integer homology of the curve and its exterior square.
//!
//! H_1 is the free Z-module on the loop classes `[E_1]`, ..., `[E_{n-1}]`
//! (the class `[E_0]` is zero by convention), and the exterior square carries
//! the classifying element Delta. Everything here is exact integer
//! arithmetic; there is no floating point anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::params::{gcd, CurveParams, Residue};

/// Element of H_1 as an integer vector over the basis `[E_1]`, ..., `[E_{n-1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Class {
    n: u64,
    coeffs: Vec<i64>,
}

impl H1Class {
    pub fn zero(n: u64) -> Self {
        H1Class {
            n,
            coeffs: vec![0; (n - 1) as usize],
        }
    }

    /// The basis class `[E_index]`; index 0 gives the zero class.
    pub fn basis(n: u64, index: Residue) -> Self {
        let mut v = H1Class::zero(n);
        v.add_term(index, 1);
        v
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Adds coeff * `[E_index]`; index 0 contributes nothing.
    pub fn add_term(&mut self, index: Residue, coeff: i64) {
        assert_eq!(index.modulus(), self.n);
        if index.is_zero() {
            return;
        }
        self.coeffs[index.as_usize() - 1] += coeff;
    }

    /// Coefficient of `[E_i]` for i in [1, n-1].
    pub fn coeff(&self, i: u64) -> i64 {
        assert!(i >= 1 && i < self.n);
        self.coeffs[(i - 1) as usize]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &H1Class) -> H1Class {
        assert_eq!(self.n, other.n);
        H1Class {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> H1Class {
        H1Class {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, other: &H1Class) -> H1Class {
        self.add(&other.neg())
    }
}

impl fmt::Display for H1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, &c)| (c, format!("[E_{}]", idx + 1)));
        write!(f, "{}", fmt_signed_terms(terms, true))
    }
}

/// Sparse integer element of the exterior square of H_1, stored over the
/// basis `[E_I]` ^ `[E_J]` with I < J. Insertion reorders indices (with a sign
/// flip), drops diagonal terms and anything touching index 0, and never
/// stores a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeClass {
    n: u64,
    terms: BTreeMap<(u64, u64), i64>,
}

impl WedgeClass {
    pub fn zero(n: u64) -> Self {
        WedgeClass {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Adds coeff * `[E_i]` ^ `[E_j]`, canonicalizing the key.
    pub fn add_term(&mut self, i: u64, j: u64, coeff: i64) {
        assert!(i < self.n && j < self.n, "wedge index out of range");
        if coeff == 0 || i == j || i == 0 || j == 0 {
            return;
        }
        let (a, b, c) = if i < j { (i, j, coeff) } else { (j, i, -coeff) };
        let entry = self.terms.entry((a, b)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coeff(&self, i: u64, j: u64) -> i64 {
        if i < j {
            *self.terms.get(&(i, j)).unwrap_or(&0)
        } else if j < i {
            -*self.terms.get(&(j, i)).unwrap_or(&0)
        } else {
            0
        }
    }

    /// Terms in increasing (I, J) order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64, i64)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &WedgeClass) -> WedgeClass {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn neg(&self) -> WedgeClass {
        WedgeClass {
            n: self.n,
            terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &WedgeClass) -> WedgeClass {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: i64) -> WedgeClass {
        if s == 0 {
            return WedgeClass::zero(self.n);
        }
        WedgeClass {
            n: self.n,
            terms: self.terms.iter().map(|(&k, &c)| (k, s * c)).collect(),
        }
    }

    /// The wedge u ^ v of two H_1 vectors, expanded over the basis.
    pub fn of_pair(u: &H1Class, v: &H1Class) -> WedgeClass {
        assert_eq!(u.n(), v.n());
        let n = u.n();
        let support = |w: &H1Class| -> Vec<(u64, i64)> {
            (1..n)
                .filter_map(|a| {
                    let c = w.coeff(a);
                    (c != 0).then_some((a, c))
                })
                .collect()
        };
        let mut out = WedgeClass::zero(n);
        for &(a, ua) in &support(u) {
            for &(b, vb) in &support(v) {
                out.add_term(a, b, ua * vb);
            }
        }
        out
    }

    /// Single-line rendering with `\wedge`, no spaces, unit coefficients
    /// omitted.
    pub fn latex(&self) -> String {
        let terms = self
            .terms()
            .map(|(i, j, c)| (c, format!("[E_{i}]\\wedge[E_{j}]")));
        fmt_signed_terms(terms, false)
    }
}

impl fmt::Display for WedgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms()
            .map(|(i, j, c)| (c, format!("[E_{i}]∧[E_{j}]")));
        write!(f, "{}", fmt_signed_terms(terms, true))
    }
}

/// Renders a signed sum like `-T_1 + T_3 - T_4` (spaced) or `-T_1+T_3-T_4`.
/// Unit coefficients are omitted; an empty sum prints as `0`.
pub(crate) fn fmt_signed_terms<I>(terms: I, spaced: bool) -> String
where
    I: Iterator<Item = (i64, String)>,
{
    let mut out = String::new();
    for (coeff, symbol) in terms {
        debug_assert!(coeff != 0);
        let mag = coeff.unsigned_abs();
        if out.is_empty() {
            if coeff < 0 {
                out.push('-');
            }
        } else if spaced {
            out.push_str(if coeff < 0 { " - " } else { " + " });
        } else {
            out.push(if coeff < 0 { '-' } else { '+' });
        }
        if mag != 1 {
            out.push_str(&mag.to_string());
        }
        out.push_str(&symbol);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Coefficients of Delta over the invariant elements T_1, ..., T_{(n-1)/2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TDecomposition {
    n: u64,
    coeffs: Vec<i64>,
}

impl TDecomposition {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Coefficient of T_r, 1 <= r <= (n-1)/2.
    pub fn t(&self, r: u64) -> i64 {
        assert!(r >= 1 && r <= (self.n - 1) / 2);
        self.coeffs[(r - 1) as usize]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Re-expands the decomposition in the `[E_I]` ^ `[E_J]` basis.
    pub fn recompose(&self, p: &CurveParams) -> WedgeClass {
        let mut out = WedgeClass::zero(self.n);
        for (idx, &t) in self.coeffs.iter().enumerate() {
            if t != 0 {
                out = out.add(&expand_t(p, idx as i64 + 1).unwrap().scale(t));
            }
        }
        out
    }

    /// Rendering like `-T_1 + T_3 - T_4`.
    pub fn render(&self, spaced: bool) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, &c)| (c, format!("T_{}", idx + 1)));
        fmt_signed_terms(terms, spaced)
    }
}

impl fmt::Display for TDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))
    }
}

/// A triple of residues mod n describing how the deck group acts on
/// uniformizers at the three ramification points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InertiaType {
    pub components: [Residue; 3],
}

impl InertiaType {
    pub fn new(n: u64, a: i64, b: i64, c: i64) -> Self {
        InertiaType {
            components: [Residue::new(a, n), Residue::new(b, n), Residue::new(c, n)],
        }
    }

    /// The inertia type (1, k, -(k+1)) of the curve itself.
    pub fn standard(p: &CurveParams) -> Self {
        InertiaType {
            components: p.inertia(),
        }
    }
}

impl fmt::Display for InertiaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.components[0], self.components[1], self.components[2]
        )
    }
}

/// True when d = J - I is hit by some j(k+1) mod n with 1 <= j <= c-1,
/// i.e. when c*d mod n lands in [1, c-1].
fn plus_case(p: &CurveParams, d: u64) -> i64 {
    let m = (p.c() as u128 * d as u128 % p.n() as u128) as u64;
    ((1..p.c()).contains(&m)) as i64
}

/// True when d = J - I is hit by some j(k+1) - 1 mod n.
fn minus_case(p: &CurveParams, d: u64) -> i64 {
    let m = (p.c() as u128 * ((d + 1) % p.n()) as u128 % p.n() as u128) as u64;
    ((1..p.c()).contains(&m)) as i64
}

/// The coefficient of `[E_I]` ^ `[E_J]` in the classifying element as a
/// function of d = J - I alone: the number of j in [1, c-1] with
/// d = j(k+1) mod n minus the number with d = j(k+1) - 1 mod n. The two
/// cases are combined additively, so a difference hit by both (first
/// possible at n = 11) cancels to zero.
pub fn difference_coefficient(p: &CurveParams, d: u64) -> i64 {
    plus_case(p, d % p.n()) - minus_case(p, d % p.n())
}

/// The classifying element Delta in the `[E_I]` ^ `[E_J]` basis.
pub fn closed_form_delta(p: &CurveParams) -> WedgeClass {
    let n = p.n();
    let mut out = WedgeClass::zero(n);
    for d in 1..n - 1 {
        let coeff = difference_coefficient(p, d);
        if coeff == 0 {
            continue;
        }
        for i in 1..n - d {
            out.add_term(i, i + d, coeff);
        }
    }
    out
}

/// The invariant element T_r = sum_i `[E_i]` ^ [E_{i+r}], indices mod n and
/// `[E_0]` = 0. Accepts the full range 1 <= r <= n-1; the reflection
/// T_{n-r} = -T_r comes out of the index wraparound.
pub fn expand_t(p: &CurveParams, r: i64) -> Result<WedgeClass> {
    let n = p.n();
    if r < 1 || r as u64 > n - 1 {
        return Err(Error::IndexRange { r, max: n - 1 });
    }
    let r = r as u64;
    let mut out = WedgeClass::zero(n);
    for i in 0..n {
        out.add_term(i, (i + r) % n, 1);
    }
    Ok(out)
}

/// Coefficients t_r with Delta = sum_r t_r T_r over r in [1, (n-1)/2].
pub fn t_decomposition(p: &CurveParams) -> TDecomposition {
    let coeffs = (1..=(p.n() - 1) / 2)
        .map(|r| difference_coefficient(p, r))
        .collect();
    TDecomposition { n: p.n(), coeffs }
}

/// The deck-group generator acting on H_1: `[E_i]` maps to [E_{i+1}] - `[E_1]`,
/// with `[E_n]` = `[E_0]` = 0.
pub fn eps_h1(p: &CurveParams, v: &H1Class) -> H1Class {
    assert_eq!(v.n(), p.n());
    let n = p.n();
    let mut out = H1Class::zero(n);
    let mut total = 0;
    for i in 1..n {
        let c = v.coeff(i);
        total += c;
        if i + 1 < n {
            out.add_term(p.residue((i + 1) as i64), c);
        }
    }
    out.add_term(p.residue(1), -total);
    out
}

/// The deck-group generator acting on the exterior square, slotwise.
pub fn eps_wedge(p: &CurveParams, w: &WedgeClass) -> WedgeClass {
    assert_eq!(w.n(), p.n());
    let n = p.n();
    // image of each basis vector, computed once per distinct index
    let mut images: Vec<Option<H1Class>> = vec![None; n as usize];
    let mut out = WedgeClass::zero(n);
    for (i, j, c) in w.terms() {
        for idx in [i, j] {
            if images[idx as usize].is_none() {
                let basis = H1Class::basis(n, Residue::new(idx as i64, n));
                images[idx as usize] = Some(eps_h1(p, &basis));
            }
        }
        let u = images[i as usize].as_ref().expect("cached");
        let v = images[j as usize].as_ref().expect("cached");
        for (a, b, product) in WedgeClass::of_pair(u, v).terms() {
            out.add_term(a, b, c * product);
        }
    }
    out
}

/// Relabels basis indices i -> j*i mod n in both slots. Requires
/// gcd(j, n) = 1, so no index can land on 0.
pub fn substitute(p: &CurveParams, w: &WedgeClass, j: Residue) -> Result<WedgeClass> {
    assert_eq!(w.n(), p.n());
    let n = p.n();
    if gcd(j.value(), n) != 1 {
        return Err(Error::NotCoprime { j: j.value(), n });
    }
    let mut out = WedgeClass::zero(n);
    for (a, b, c) in w.terms() {
        let a2 = j.mul(p.residue(a as i64));
        let b2 = j.mul(p.residue(b as i64));
        out.add_term(a2.value(), b2.value(), c);
    }
    Ok(out)
}

/// Classifying element for a general inertia type (j, jk, -j(k+1)) with
/// gcd(j, n) = 1: the element whose relabeling by j is the standard Delta.
/// Defined up to overall sign; permutations of the three branch points are
/// not supported.
pub fn general_inertia_delta(p: &CurveParams, t: &InertiaType) -> Result<WedgeClass> {
    let n = p.n();
    let [a, b, c] = t.components;
    let unsupported = |reason| Error::UnsupportedInertia {
        n,
        a: a.value(),
        b: b.value(),
        c: c.value(),
        reason,
    };
    for comp in [a, b, c] {
        if comp.modulus() != n {
            return Err(unsupported("component has the wrong modulus"));
        }
        if gcd(comp.value(), n) != 1 {
            return Err(unsupported("component shares a factor with n"));
        }
    }
    if !a.add(b).add(c).is_zero() {
        return Err(unsupported("components do not sum to 0 mod n"));
    }
    let j = a;
    let j_inv = j.inverse().expect("checked coprime");
    let k = j_inv.mul(b).value();
    let base = CurveParams::new(n as i64, k as i64)
        .map_err(|_| unsupported("derived branching exponent is not admissible"))?;
    substitute(&base, &closed_form_delta(&base), j_inv)
}

/// Homology image of the square-curve loop indexed by (i, j):
/// [E_{jk}] - [E_{i+jk}] + `[E_i]`, indices mod n and `[E_0]` = 0.
pub fn fermat_image(p: &CurveParams, i: Residue, j: Residue) -> H1Class {
    let n = p.n();
    let jk = j.mul(p.residue(p.k() as i64));
    let mut out = H1Class::zero(n);
    out.add_term(jk, 1);
    out.add_term(i.add(jk), -1);
    out.add_term(i, 1);
    out
}

/// Determinant of the antisymmetric Gram matrix of a wedge class, computed
/// exactly over the integers (fraction-free elimination, with a big-integer
/// fallback if the word-sized pass overflows). The value is 1 exactly when
/// the class is a symplectic form in some Z-basis.
pub fn pfaffian_check(p: &CurveParams, w: &WedgeClass) -> BigInt {
    assert_eq!(w.n(), p.n());
    let m = (p.n() - 1) as usize;
    let mut mat = vec![vec![0i64; m]; m];
    for (i, j, c) in w.terms() {
        mat[(i - 1) as usize][(j - 1) as usize] = c;
        mat[(j - 1) as usize][(i - 1) as usize] = -c;
    }
    match det_bareiss_i64(mat.clone()) {
        Some(d) => BigInt::from(d),
        None => det_bareiss_bigint(mat),
    }
}

/// Fraction-free determinant with checked arithmetic. Returns None on
/// overflow so the caller can retry with big integers.
fn det_bareiss_i64(mut m: Vec<Vec<i64>>) -> Option<i64> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i64;
    let mut prev = 1i64;
    for col in 0..n - 1 {
        let pivot = match (col..n).find(|&r| m[r][col] != 0) {
            Some(r) => r,
            None => return Some(0),
        };
        if pivot != col {
            m.swap(pivot, col);
            sign = -sign;
        }
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = top[col].as_slice();
        let pivot_val = pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col];
            // A zero factor with matching pivots leaves the row untouched.
            if factor == 0 && pivot_val == prev {
                continue;
            }
            for c in col + 1..n {
                let a = pivot_val.checked_mul(row[c])?;
                let b = factor.checked_mul(pivot_row[c])?;
                let num = a.checked_sub(b)?;
                // Exact division is the Bareiss invariant; the pivots of
                // the matrices seen here are almost always ±1, so the
                // division rarely executes for real.
                row[c] = match prev {
                    1 => num,
                    -1 => num.checked_neg()?,
                    _ => num / prev,
                };
            }
            row[col] = 0;
        }
        prev = pivot_val;
    }
    m[n - 1][n - 1].checked_mul(sign)
}

fn det_bareiss_bigint(m0: Vec<Vec<i64>>) -> BigInt {
    let n = m0.len();
    let mut m: Vec<Vec<BigInt>> = m0
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    if n == 0 {
        return BigInt::from(1);
    }
    let zero = BigInt::from(0);
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for col in 0..n - 1 {
        let pivot = match (col..n).find(|&r| m[r][col] != zero) {
            Some(r) => r,
            None => return zero,
        };
        if pivot != col {
            m.swap(pivot, col);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                let v = (&m[col][col] * &m[r][c] - &m[r][col] * &m[col][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = zero.clone();
        }
        prev = m[col][col].clone();
    }
    m[n - 1][n - 1].clone() * sign
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: i64, k: i64) -> CurveParams {
        CurveParams::new(n, k).unwrap()
    }

    fn wedge(n: u64, terms: &[(u64, u64, i64)]) -> WedgeClass {
        let mut w = WedgeClass::zero(n);
        for &(i, j, c) in terms {
            w.add_term(i, j, c);
        }
        w
    }

    #[test]
    fn delta_5_1_matches_the_worked_example() {
        let expected = wedge(
            5,
            &[
                (1, 2, -1),
                (1, 3, 1),
                (1, 4, -1),
                (2, 3, -1),
                (2, 4, 1),
                (3, 4, -1),
            ],
        );
        assert_eq!(closed_form_delta(&params(5, 1)), expected);
    }

    #[test]
    fn delta_5_2_matches_the_worked_example() {
        let expected = wedge(5, &[(1, 3, -1), (1, 4, 1), (2, 4, -1)]);
        assert_eq!(closed_form_delta(&params(5, 2)), expected);
    }

    #[test]
    fn delta_3_1() {
        let expected = wedge(3, &[(1, 2, -1)]);
        assert_eq!(closed_form_delta(&params(3, 1)), expected);
    }

    #[test]
    fn expand_t_examples_n5() {
        let p = params(5, 1);
        assert_eq!(
            expand_t(&p, 1).unwrap(),
            wedge(5, &[(1, 2, 1), (2, 3, 1), (3, 4, 1)])
        );
        assert_eq!(
            expand_t(&p, 2).unwrap(),
            wedge(5, &[(1, 3, 1), (2, 4, 1), (1, 4, -1)])
        );
        assert_eq!(expand_t(&p, 4).unwrap(), expand_t(&p, 1).unwrap().neg());
        assert!(matches!(expand_t(&p, 0), Err(Error::IndexRange { .. })));
        assert!(matches!(expand_t(&p, 5), Err(Error::IndexRange { .. })));
    }

    #[test]
    fn t_decomposition_examples() {
        assert_eq!(t_decomposition(&params(5, 1)).coeffs(), &[-1, 1]);
        assert_eq!(t_decomposition(&params(11, 6)).coeffs(), &[-1, 0, 1, -1, 0]);
        assert_eq!(t_decomposition(&params(11, 7)).coeffs(), &[-1, 1, -1, 0, 1]);
        assert_eq!(
            t_decomposition(&params(11, 6)).render(true),
            "-T_1 + T_3 - T_4"
        );
    }

    #[test]
    fn t_decomposition_recomposes_delta() {
        for p in CurveParams::all_valid_pairs(31) {
            assert_eq!(
                t_decomposition(&p).recompose(&p),
                closed_form_delta(&p),
                "n={} k={}",
                p.n(),
                p.k()
            );
        }
    }

    #[test]
    fn eps_h1_examples() {
        let p = params(5, 1);
        let e = |i| H1Class::basis(5, p.residue(i));
        assert_eq!(eps_h1(&p, &e(1)), e(2).sub(&e(1)));
        assert_eq!(eps_h1(&p, &e(4)), e(1).neg());
    }

    #[test]
    fn eps_h1_has_order_n() {
        for p in CurveParams::all_valid_pairs(13) {
            let n = p.n();
            for i in 1..n {
                let start = H1Class::basis(n, p.residue(i as i64));
                let mut v = start.clone();
                for step in 1..=n {
                    v = eps_h1(&p, &v);
                    if step < n {
                        assert_ne!(v, start, "order divides {step} at n={n}");
                    }
                }
                assert_eq!(v, start);
            }
        }
    }

    #[test]
    fn eps_wedge_fixes_t_and_delta() {
        let p = params(5, 2);
        let t1 = expand_t(&p, 1).unwrap();
        assert_eq!(eps_wedge(&p, &t1), t1);
        let delta = closed_form_delta(&p);
        assert_eq!(eps_wedge(&p, &delta), delta);
        // bilinearity on a plain basis wedge
        let e = |i| H1Class::basis(5, p.residue(i));
        let lhs = eps_wedge(&p, &wedge(5, &[(1, 2, 1)]));
        let rhs = WedgeClass::of_pair(&e(2).sub(&e(1)), &e(3).sub(&e(1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_by_3_relates_the_two_n5_curves_up_to_sign() {
        // Classifying element for inertia (3, 1, 1) at n = 5, in its own basis.
        let p = params(5, 2);
        let delta_311 = wedge(5, &[(1, 2, -1), (2, 3, -1), (3, 4, -1)]);
        let relabeled = substitute(&p, &delta_311, p.residue(3)).unwrap();
        let delta_52 = closed_form_delta(&p);
        assert_eq!(relabeled, delta_52.neg());
        // round trip with the inverse relabeling
        let back = substitute(&p, &relabeled, p.residue(2)).unwrap();
        assert_eq!(back, delta_311);
        // identity relabeling
        assert_eq!(substitute(&p, &delta_52, p.residue(1)).unwrap(), delta_52);
        assert!(matches!(
            substitute(&params(9, 1), &WedgeClass::zero(9), Residue::new(3, 9)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn general_inertia_examples() {
        let p = params(5, 2);
        // (3, 1, 1): j = 3, k = 2; equals the recorded remark value up to sign.
        let got = general_inertia_delta(&p, &InertiaType::new(5, 3, 1, 1)).unwrap();
        let remark = wedge(5, &[(1, 2, -1), (2, 3, -1), (3, 4, -1)]);
        assert!(got == remark || got == remark.neg());
        // j = 1 returns the standard element exactly.
        let std = general_inertia_delta(&p, &InertiaType::standard(&p)).unwrap();
        assert_eq!(std, closed_form_delta(&p));
        // (2, 4, 4): j = 2, k = 2.
        let got = general_inertia_delta(&p, &InertiaType::new(5, 2, 4, 4)).unwrap();
        let expected = substitute(&p, &closed_form_delta(&p), p.residue(3)).unwrap();
        assert_eq!(got, expected);
        // a component sharing a factor with n is rejected
        let p9 = params(9, 1);
        assert!(matches!(
            general_inertia_delta(&p9, &InertiaType::new(9, 3, 2, 4)),
            Err(Error::UnsupportedInertia { .. })
        ));
        assert!(matches!(
            general_inertia_delta(&p, &InertiaType::new(5, 1, 1, 1)),
            Err(Error::UnsupportedInertia { .. })
        ));
    }

    #[test]
    fn fermat_image_examples() {
        let p = params(5, 2);
        let r = |v| p.residue(v);
        assert!(fermat_image(&p, r(0), r(0)).is_zero());
        let img = fermat_image(&p, r(1), r(1));
        let e = |i| H1Class::basis(5, r(i));
        assert_eq!(img, e(2).sub(&e(3)).add(&e(1)));
        assert!(fermat_image(&p, r(0), r(1)).is_zero());
    }

    #[test]
    fn pfaffian_examples() {
        let p1 = params(5, 1);
        assert_eq!(
            pfaffian_check(&p1, &closed_form_delta(&p1)),
            BigInt::from(1)
        );
        let p2 = params(5, 2);
        assert_eq!(
            pfaffian_check(&p2, &closed_form_delta(&p2)),
            BigInt::from(1)
        );
        assert_eq!(pfaffian_check(&p1, &WedgeClass::zero(5)), BigInt::from(0));
        // non-unimodular sanity value: det [[0, 2], [-2, 0]] = 4
        let p3 = params(3, 1);
        assert_eq!(
            pfaffian_check(&p3, &wedge(3, &[(1, 2, 2)])),
            BigInt::from(4)
        );
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn bigint_fallback_agrees_on_a_dense_matrix() {
        // 6x6 antisymmetric with growing entries; compare the two pipelines.
        let m = 6usize;
        let mut mat = vec![vec![0i64; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                let v = (i as i64 + 2) * (j as i64 + 7) % 13 - 6;
                mat[i][j] = v;
                mat[j][i] = -v;
            }
        }
        let fast = det_bareiss_i64(mat.clone()).unwrap();
        assert_eq!(det_bareiss_bigint(mat), BigInt::from(fast));
    }

    #[test]
    fn display_formats() {
        let p = params(5, 2);
        let delta = closed_form_delta(&p);
        assert_eq!(
            delta.to_string(),
            "-[E_1]∧[E_3] + [E_1]∧[E_4] - [E_2]∧[E_4]"
        );
        assert_eq!(
            delta.latex(),
            "-[E_1]\\wedge[E_3]+[E_1]\\wedge[E_4]-[E_2]\\wedge[E_4]"
        );
        assert_eq!(WedgeClass::zero(5).to_string(), "0");
        let mut h = H1Class::zero(5);
        h.add_term(p.residue(1), 3);
        h.add_term(p.residue(4), -1);
        assert_eq!(h.to_string(), "3[E_1] - [E_4]");
    }
}
