//! The symmetric algebra `∨V₁` over the alternating form `ω`: symmetric
//! product, the permanent inner product and the insertion operators.
//!
//! Basis monomials are dense exponent vectors. Inserting into `ξ^k` yields
//! the factor `k`; there are no `1/k!` normalizations.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exterior::Variant;
use crate::scalar::Scalar;
use crate::space::SuperSpace;
use crate::text;

/// Exponent vector over the odd basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn unit(dim: usize) -> Mono {
        Mono(vec![0; dim])
    }

    pub fn basis(dim: usize, i: usize) -> Mono {
        let mut m = Mono::unit(dim);
        m.0[i] = 1;
        m
    }

    /// Monomial of a word of basis indices, with repetition.
    pub fn from_word(dim: usize, word: &[usize]) -> Mono {
        let mut m = Mono::unit(dim);
        for &i in word {
            m.0[i] += 1;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Letters in increasing index order, each repeated by its exponent.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Mono)
    }
}

impl Ord for Mono {
    /// Lower orders first, then descending lexicographic on exponents, so
    /// `x1.x1` precedes `x1.x2` precedes `x2.x2`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymElem {
    dim: usize,
    terms: BTreeMap<Mono, Scalar>,
}

impl SymElem {
    pub fn zero(dim: usize) -> Self {
        SymElem { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: Scalar) -> Self {
        let mut x = SymElem::zero(dim);
        x.add_term(Mono::unit(dim), c);
        x
    }

    pub fn one(dim: usize) -> Self {
        SymElem::scalar(dim, Scalar::one())
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        SymElem::mono(Mono::basis(dim, i), Scalar::one())
    }

    pub fn mono(m: Mono, c: Scalar) -> Self {
        let mut x = SymElem::zero(m.0.len());
        x.add_term(m, c);
        x
    }

    pub fn word(dim: usize, idx: &[usize]) -> Self {
        SymElem::mono(Mono::from_word(dim, idx), Scalar::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
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

    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        assert_eq!(m.0.len(), self.dim, "monomial length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymElem) -> SymElem {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymElem) -> SymElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymElem {
        self.map_coeffs(|_, c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> SymElem {
        if s.is_zero() {
            return SymElem::zero(self.dim);
        }
        self.map_coeffs(|_, c| c * s)
    }

    fn map_coeffs(&self, f: impl Fn(&Mono, &Scalar) -> Scalar) -> SymElem {
        let mut out = SymElem::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(m, c));
        }
        out
    }

    pub fn grade(&self, k: usize) -> SymElem {
        let mut out = SymElem::zero(self.dim);
        for (m, c) in &self.terms {
            if m.order() == k {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// The common order of all terms; the zero element reports `Some(0)`.
    pub fn homogeneous_order(&self) -> Option<usize> {
        let mut orders = self.terms.keys().map(Mono::order);
        let first = orders.next().unwrap_or(0);
        orders.all(|k| k == first).then_some(first)
    }

    /// Order-`k` terms scaled by `(−1)^k`.
    pub fn parity_op(&self) -> SymElem {
        self.map_coeffs(|m, c| if m.order() % 2 == 1 { -c } else { c.clone() })
    }

    /// Parity of the order when all terms agree on it.
    pub fn parity(&self) -> Option<usize> {
        let mut ps = self.terms.keys().map(|m| m.order() % 2);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    /// Text form: `c*x1.x1.x2 + ...`, `1` for the unit monomial.
    pub fn to_text(&self, space: &SuperSpace) -> String {
        text::format_terms(self.terms.iter().map(|(m, c)| (c, mono_text(space, m))))
    }
}

pub(crate) fn mono_text(space: &SuperSpace, m: &Mono) -> String {
    let labels = space.odd_labels();
    m.word().iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join(".")
}

fn same_dim(x: &SymElem, y: &SymElem) -> Result<()> {
    if x.dim != y.dim {
        return Err(Error::SpaceMismatch(format!("symmetric dimensions {} and {}", x.dim, y.dim)));
    }
    Ok(())
}

fn check(space: &SuperSpace, x: &SymElem) -> Result<()> {
    space.check_dims(space.n0(), x.dim)
}

pub fn vee(x: &SymElem, y: &SymElem) -> Result<SymElem> {
    same_dim(x, y)?;
    let mut out = SymElem::zero(x.dim);
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            out.add_term(a.mul(b), ca * cb);
        }
    }
    Ok(out)
}

/// Permanent of the square matrix `ω(a_i, b_j)` over two letter words, by
/// dynamic programming over subsets of columns.
pub(crate) fn permanent(space: &SuperSpace, a: &[usize], b: &[usize]) -> Scalar {
    let k = a.len();
    if k != b.len() {
        return Scalar::zero();
    }
    if k == 0 {
        return Scalar::one();
    }
    let mut dp: Vec<Scalar> = vec![Scalar::zero(); 1 << k];
    dp[0] = Scalar::one();
    for mask in 0usize..(1 << k) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == k {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if mask & (1 << j) != 0 {
                continue;
            }
            let w = space.w(a[row], bj);
            if w.is_zero() {
                continue;
            }
            let t = &dp[mask] * w;
            dp[mask | (1 << j)] += &t;
        }
    }
    dp[(1 << k) - 1].clone()
}

/// Permanent inner product; distinct orders are orthogonal.
pub fn inner(space: &SuperSpace, x: &SymElem, y: &SymElem) -> Result<Scalar> {
    check(space, x)?;
    check(space, y)?;
    let mut acc = Scalar::zero();
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            if a.order() == b.order() {
                let p = permanent(space, &a.word(), &b.word());
                if !p.is_zero() {
                    acc += &(ca * cb * p);
                }
            }
        }
    }
    Ok(acc)
}

/// `out += coeff · i_{ξ_p}(ξ^α) = Σ_c α_c ω(ξ_p, ξ_c) ξ^{α − e_c}`.
fn insert_basis_into_mono(space: &SuperSpace, p: usize, m: &Mono, coeff: &Scalar, out: &mut SymElem) {
    for (c, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let w = space.w(p, c);
        if w.is_zero() {
            continue;
        }
        let mut rest = m.clone();
        rest.0[c] -= 1;
        out.add_term(rest, coeff * w.scale_int(e as i64));
    }
}

fn insert_basis(space: &SuperSpace, p: usize, y: &SymElem) -> SymElem {
    let mut out = SymElem::zero(y.dim);
    for (m, c) in &y.terms {
        insert_basis_into_mono(space, p, m, c, &mut out);
    }
    out
}

/// Iterated insertion of every letter of a monomial.
pub(crate) fn insert_mono(space: &SuperSpace, a: &Mono, y: &SymElem) -> SymElem {
    let mut cur = y.clone();
    for p in a.word() {
        if cur.is_zero() {
            break;
        }
        cur = insert_basis(space, p, &cur);
    }
    cur
}

fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k as i64).fold(1i64, |acc, i| acc * (n as i64 - i) / (i + 1))
}

/// All exponent vectors `γ ≤ α` with `|γ| = l`.
fn sub_monos(alpha: &Mono, l: usize) -> Vec<Mono> {
    fn go(alpha: &[u32], l: usize, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i == alpha.len() {
            if l == 0 {
                out.push(Mono(cur.clone()));
            }
            return;
        }
        let rest: usize = alpha[i + 1..].iter().map(|&e| e as usize).sum();
        for g in 0..=alpha[i].min(l as u32) {
            if l - g as usize > rest {
                continue;
            }
            cur.push(g);
            go(alpha, l - g as usize, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&alpha.0, l, 0, &mut Vec::with_capacity(alpha.0.len()), &mut out);
    out
}

/// `out += coeff · i⁽ˡ⁾_{ξ^α}(ξ^β)` by the closed double sum: pick `l` letters
/// of each side, pair them by all bijections (a permanent), and multiply the
/// leftovers. Choosing `γ` out of `α` counts `Π C(α_c, γ_c)` position sets.
pub(crate) fn graded_mono_into(space: &SuperSpace, alpha: &Mono, l: usize, beta: &Mono, coeff: &Scalar, out: &mut SymElem) {
    if l > alpha.order() || l > beta.order() {
        return;
    }
    let lefts = sub_monos(alpha, l);
    let rights = sub_monos(beta, l);
    for g in &lefts {
        let cg: i64 = alpha.0.iter().zip(&g.0).map(|(&a, &x)| binomial(a, x)).product();
        let gw = g.word();
        for d in &rights {
            let p = permanent(space, &gw, &d.word());
            if p.is_zero() {
                continue;
            }
            let cd: i64 = beta.0.iter().zip(&d.0).map(|(&b, &x)| binomial(b, x)).product();
            let key = alpha.div(g).expect("sub").mul(&beta.div(d).expect("sub"));
            out.add_term(key, coeff * p.scale_int(cg * cd));
        }
    }
}

/// Insertion of a vector: a degree −1 derivation.
pub fn insert_vec(space: &SuperSpace, v: &SymElem, y: &SymElem) -> Result<SymElem> {
    check(space, v)?;
    check(space, y)?;
    match v.homogeneous_order() {
        Some(1) => {}
        _ if v.is_zero() => return Ok(SymElem::zero(y.dim)),
        Some(k) => return Err(Error::WrongOrder { expected: 1, found: k }),
        None => return Err(Error::NotHomogeneous),
    }
    insert_multi(space, v, y)
}

/// Iterated insertion `i_η ξ`, extended bilinearly.
pub fn insert_multi(space: &SuperSpace, x: &SymElem, y: &SymElem) -> Result<SymElem> {
    check(space, x)?;
    check(space, y)?;
    let mut out = SymElem::zero(y.dim);
    for (a, c) in &x.terms {
        out = out.add(&insert_mono(space, a, y).scale(c));
    }
    Ok(out)
}

fn graded_elem(space: &SuperSpace, x: &SymElem, l: usize, y: &SymElem) -> SymElem {
    let mut out = SymElem::zero(y.dim);
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            graded_mono_into(space, a, l, b, &(ca * cb), &mut out);
        }
    }
    out
}

fn graded_precheck(space: &SuperSpace, x: &SymElem, l: usize, y: &SymElem) -> Result<bool> {
    check(space, x)?;
    check(space, y)?;
    if x.is_zero() {
        return Ok(false);
    }
    let k = x.homogeneous_order().ok_or(Error::NotHomogeneous)?;
    if l > k {
        return Err(Error::DepthOutOfRange { l, k });
    }
    Ok(true)
}

/// Graded insertion `i⁽ˡ⁾_η ξ` for homogeneous `η` of order `k ≥ l`.
pub fn insert_graded(space: &SuperSpace, x: &SymElem, l: usize, y: &SymElem) -> Result<SymElem> {
    if !graded_precheck(space, x, l, y)? {
        return Ok(SymElem::zero(y.dim));
    }
    Ok(graded_elem(space, x, l, y))
}

/// Graded insertion computed from its shuffle definition: for every choice
/// of `l` letter positions of `η`, the iterated insertion of those letters
/// times the product of the remaining ones. Independent of the closed sum
/// used by [`insert_graded`]; kept as a cross-check.
pub fn insert_graded_shuffle(space: &SuperSpace, x: &SymElem, l: usize, y: &SymElem) -> Result<SymElem> {
    if !graded_precheck(space, x, l, y)? {
        return Ok(SymElem::zero(y.dim));
    }
    let mut out = SymElem::zero(y.dim);
    for (a, c) in &x.terms {
        let word = a.word();
        let full = (1u64 << word.len()) - 1;
        for mask in crate::exterior::submasks_of_order(full, l) {
            let chosen: Vec<usize> = (0..word.len()).filter(|i| mask & (1 << i) != 0).map(|i| word[i]).collect();
            let rest: Vec<usize> = (0..word.len()).filter(|i| mask & (1 << i) == 0).map(|i| word[i]).collect();
            let inserted = insert_mono(space, &Mono::from_word(y.dim, &chosen), y);
            let term = vee(&inserted, &SymElem::word(y.dim, &rest))?;
            out = out.add(&term.scale(c));
        }
    }
    Ok(out)
}

/// `i_η ξ` ([`Variant::Plain`]) or `i'_η ξ` ([`Variant::Alt`]), distributed
/// over the terms of `η`.
pub fn insert_full(space: &SuperSpace, x: &SymElem, y: &SymElem, variant: Variant) -> Result<SymElem> {
    check(space, x)?;
    check(space, y)?;
    let mut out = SymElem::zero(y.dim);
    for (a, ca) in &x.terms {
        for l in 0..=a.order() {
            let c = if variant == Variant::Alt && l % 2 == 1 { -ca } else { ca.clone() };
            for (b, cb) in &y.terms {
                graded_mono_into(space, a, l, b, &(&c * cb), &mut out);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp() -> SuperSpace {
        SuperSpace::witt(0, false, 2)
    }

    // Symplectic basis of (0|4): x1 = ξ₁, x2 = ξ₂, x3 = ξ¹, x4 = ξ².
    fn w(idx: &[usize]) -> SymElem {
        SymElem::word(4, idx)
    }

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn monomial_order() {
        let mut v = vec![Mono(vec![0, 2]), Mono(vec![1, 1]), Mono(vec![0, 0]), Mono(vec![2, 0]), Mono(vec![0, 1])];
        v.sort();
        assert_eq!(v, vec![Mono(vec![0, 0]), Mono(vec![0, 1]), Mono(vec![2, 0]), Mono(vec![1, 1]), Mono(vec![0, 2])]);
        assert!(Mono(vec![1, 0]) < Mono(vec![0, 1]));
    }

    #[test]
    fn vee_examples() {
        assert_eq!(vee(&w(&[0]), &w(&[0])).unwrap(), SymElem::mono(Mono(vec![2, 0, 0, 0]), s(1)));
        assert_eq!(vee(&w(&[0]), &w(&[2])).unwrap(), vee(&w(&[2]), &w(&[0])).unwrap());
        assert_eq!(vee(&SymElem::one(4), &w(&[1, 3])).unwrap(), w(&[1, 3]));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(w(&[0]).parity_op(), w(&[0]).neg());
        assert_eq!(w(&[0, 1]).parity_op(), w(&[0, 1]));
        assert_eq!(SymElem::one(4).parity_op(), SymElem::one(4));
    }

    #[test]
    fn inner_examples() {
        let sp = sp();
        assert_eq!(inner(&sp, &w(&[0]), &w(&[2])).unwrap(), s(1));
        assert_eq!(inner(&sp, &w(&[2]), &w(&[0])).unwrap(), s(-1));
        assert_eq!(inner(&sp, &w(&[0, 0]), &w(&[2, 2])).unwrap(), s(2));
    }

    #[test]
    fn insert_examples() {
        let sp = sp();
        assert_eq!(insert_vec(&sp, &w(&[0]), &w(&[2])).unwrap(), SymElem::one(4));
        assert!(insert_vec(&sp, &w(&[0]), &w(&[0])).unwrap().is_zero());
        assert_eq!(insert_vec(&sp, &w(&[0]), &w(&[2, 2])).unwrap(), w(&[2]).scale(&s(2)));
        assert_eq!(insert_vec(&sp, &w(&[0, 0]), &w(&[2])), Err(Error::WrongOrder { expected: 1, found: 2 }));
        assert_eq!(insert_multi(&sp, &w(&[0, 0]), &w(&[2, 2])).unwrap(), SymElem::scalar(4, s(2)));
        assert!(insert_multi(&sp, &w(&[0, 1]), &w(&[2])).unwrap().is_zero());
        assert_eq!(insert_multi(&sp, &SymElem::one(4), &w(&[1, 3])).unwrap(), w(&[1, 3]));
    }

    #[test]
    fn graded_examples() {
        let sp = sp();
        assert_eq!(insert_graded(&sp, &w(&[0, 0]), 1, &w(&[2])).unwrap(), w(&[0]).scale(&s(2)));
        assert_eq!(insert_graded(&sp, &w(&[0]), 0, &w(&[1, 3])).unwrap(), w(&[0, 1, 3]));
        assert_eq!(insert_graded(&sp, &w(&[0]), 1, &w(&[2])).unwrap(), SymElem::one(4));
        assert_eq!(insert_graded(&sp, &w(&[0]), 2, &w(&[2])), Err(Error::DepthOutOfRange { l: 2, k: 1 }));
    }

    #[test]
    fn graded_routes_agree_on_a_dense_case() {
        let sp = sp();
        let x = w(&[0, 0, 2, 3]);
        let y = w(&[2, 2, 0, 1]).add(&w(&[3, 1]));
        for l in 0..=4 {
            assert_eq!(insert_graded(&sp, &x, l, &y).unwrap(), insert_graded_shuffle(&sp, &x, l, &y).unwrap(), "l={l}");
        }
    }

    #[test]
    fn full_examples() {
        let sp = sp();
        let one = SymElem::one(4);
        assert_eq!(insert_full(&sp, &w(&[0]), &w(&[2]), Variant::Plain).unwrap(), w(&[0, 2]).add(&one));
        assert_eq!(insert_full(&sp, &w(&[0]), &w(&[2]), Variant::Alt).unwrap(), w(&[0, 2]).sub(&one));
        let y = w(&[1, 3]).add(&w(&[0]));
        assert_eq!(insert_full(&sp, &one, &y, Variant::Plain).unwrap(), y);
    }

    #[test]
    fn text_form() {
        let sp = sp();
        assert_eq!(w(&[0, 0, 3]).sub(&SymElem::one(4)).to_text(&sp), "-1 + x1.x1.x2^");
    }
}
