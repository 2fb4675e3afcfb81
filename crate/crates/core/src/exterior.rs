//! The exterior algebra `ΛV₀`: wedge product, the Gram-determinant inner
//! product, the three involutions and the insertion operators.
//!
//! Basis words are bit-packed into a [`Blade`]; signs from reordering are
//! inversion counts.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::space::SuperSpace;
use crate::text;

/// A strictly increasing index word over the even basis, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Blade(pub u64);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    pub fn basis(i: usize) -> Blade {
        Blade(1 << i)
    }

    /// Sorted blade from indices; `None` on a repeated index.
    pub fn from_indices(idx: &[usize]) -> Option<Blade> {
        let mut bits = 0u64;
        for &i in idx {
            if bits & (1 << i) != 0 {
                return None;
            }
            bits |= 1 << i;
        }
        Some(Blade(bits))
    }

    pub fn order(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }
}

impl Ord for Blade {
    /// Shorter words first, then lexicographic on the index word.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `a ∧ b` on basis words: `None` if they share an index, else the sign
/// (`true` = negative) and the sorted word.
pub fn wedge_blades(a: Blade, b: Blade) -> Option<(bool, Blade)> {
    if a.0 & b.0 != 0 {
        return None;
    }
    let mut swaps = 0u32;
    for j in b.indices() {
        swaps += (a.0 >> j >> 1).count_ones();
    }
    Some((swaps % 2 == 1, Blade(a.0 | b.0)))
}

pub(crate) fn sign_scalar(negative: bool, c: &Scalar) -> Scalar {
    if negative {
        -c
    } else {
        c.clone()
    }
}

/// `(−1)^{k(k−1)/2}` is negative.
pub fn reversal_negative(k: usize) -> bool {
    (k * k.saturating_sub(1) / 2) % 2 == 1
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtElem {
    dim: usize,
    terms: BTreeMap<Blade, Scalar>,
}

impl ExtElem {
    pub fn zero(dim: usize) -> Self {
        ExtElem { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: Scalar) -> Self {
        let mut x = ExtElem::zero(dim);
        x.add_term(Blade::UNIT, c);
        x
    }

    pub fn one(dim: usize) -> Self {
        ExtElem::scalar(dim, Scalar::one())
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        ExtElem::blade(dim, Blade::basis(i), Scalar::one())
    }

    pub fn blade(dim: usize, b: Blade, c: Scalar) -> Self {
        assert!(b.max_index().is_none_or(|m| m < dim), "blade index out of range");
        let mut x = ExtElem::zero(dim);
        x.add_term(b, c);
        x
    }

    /// Wedge of basis vectors given by index, in the given order.
    pub fn word(dim: usize, idx: &[usize]) -> Self {
        idx.iter().fold(ExtElem::one(dim), |acc, &i| wedge(&acc, &ExtElem::basis(dim, i)).expect("same dim"))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: Blade) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
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

    pub fn add_term(&mut self, b: Blade, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
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

    pub fn add(&self, other: &ExtElem) -> ExtElem {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ExtElem) -> ExtElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExtElem {
        self.map_coeffs(|_, c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> ExtElem {
        if s.is_zero() {
            return ExtElem::zero(self.dim);
        }
        self.map_coeffs(|_, c| c * s)
    }

    fn map_coeffs(&self, f: impl Fn(Blade, &Scalar) -> Scalar) -> ExtElem {
        let mut out = ExtElem::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, f(*b, c));
        }
        out
    }

    /// Component of order `k`.
    pub fn grade(&self, k: usize) -> ExtElem {
        let mut out = ExtElem::zero(self.dim);
        for (b, c) in &self.terms {
            if b.order() == k {
                out.add_term(*b, c.clone());
            }
        }
        out
    }

    /// Nonzero homogeneous components, by increasing order.
    pub fn components(&self) -> Vec<(usize, ExtElem)> {
        let mut out: BTreeMap<usize, ExtElem> = BTreeMap::new();
        for (b, c) in &self.terms {
            out.entry(b.order()).or_insert_with(|| ExtElem::zero(self.dim)).add_term(*b, c.clone());
        }
        out.into_iter().collect()
    }

    /// The common order of all terms; the zero element reports `Some(0)`.
    pub fn homogeneous_order(&self) -> Option<usize> {
        let mut orders = self.terms.keys().map(|b| b.order());
        let first = orders.next().unwrap_or(0);
        orders.all(|k| k == first).then_some(first)
    }

    /// Parity of the order when all terms agree on it.
    pub fn parity(&self) -> Option<usize> {
        let mut ps = self.terms.keys().map(|b| b.order() % 2);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn involution(&self, which: Involution) -> ExtElem {
        self.map_coeffs(|b, c| {
            let k = b.order();
            let negative = match which {
                Involution::Prime => k % 2 == 1,
                Involution::Opp => reversal_negative(k),
                Involution::Bar => reversal_negative(k + 1),
            };
            sign_scalar(negative, c)
        })
    }

    pub fn prime(&self) -> ExtElem {
        self.involution(Involution::Prime)
    }

    pub fn opp(&self) -> ExtElem {
        self.involution(Involution::Opp)
    }

    pub fn bar(&self) -> ExtElem {
        self.involution(Involution::Bar)
    }

    /// Text form: `c*e1^e2 + ...`, `1` for the empty word.
    pub fn to_text(&self, space: &SuperSpace) -> String {
        text::format_terms(self.terms.iter().map(|(b, c)| (c, blade_text(space, *b))))
    }
}

pub(crate) fn blade_text(space: &SuperSpace, b: Blade) -> String {
    let labels = space.even_labels();
    b.indices().map(|i| labels[i].as_str()).collect::<Vec<_>>().join("^")
}

/// The involutions `x'`, `x^opp`, `x̄` scaling order-`k` terms by `(−1)^k`,
/// `(−1)^{k(k−1)/2}`, `(−1)^{k(k+1)/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    Prime,
    Opp,
    Bar,
}

/// Which summed insertion: `i_x = Σ_l i⁽ˡ⁾_x` or `i'_x = Σ_l (−1)^l i⁽ˡ⁾_x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Alt,
}

fn same_dim(x: &ExtElem, y: &ExtElem) -> Result<()> {
    if x.dim != y.dim {
        return Err(Error::SpaceMismatch(format!("exterior dimensions {} and {}", x.dim, y.dim)));
    }
    Ok(())
}

fn check(space: &SuperSpace, x: &ExtElem) -> Result<()> {
    space.check_dims(x.dim, space.n1())
}

pub fn wedge(x: &ExtElem, y: &ExtElem) -> Result<ExtElem> {
    same_dim(x, y)?;
    let mut out = ExtElem::zero(x.dim);
    for (a, ca) in &x.terms {
        wedge_blade_into(*a, ca, y, &mut out);
    }
    Ok(out)
}

/// `out += coeff · a ∧ y`.
fn wedge_blade_into(a: Blade, coeff: &Scalar, y: &ExtElem, out: &mut ExtElem) {
    for (b, cb) in &y.terms {
        if let Some((neg, w)) = wedge_blades(a, *b) {
            out.add_term(w, sign_scalar(neg, &(coeff * cb)));
        }
    }
}

/// `⟨a, b⟩ = det(⟨a_i, b_j⟩)` for basis words of equal order.
pub(crate) fn blade_inner(space: &SuperSpace, a: Blade, b: Blade) -> Scalar {
    if a.order() != b.order() {
        return Scalar::zero();
    }
    let ai: Vec<usize> = a.indices().collect();
    let bi: Vec<usize> = b.indices().collect();
    let m: linalg::Matrix = ai.iter().map(|&i| bi.iter().map(|&j| space.g(i, j).clone()).collect()).collect();
    linalg::det(&m)
}

/// Gram-determinant inner product; distinct orders are orthogonal.
pub fn inner(space: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<Scalar> {
    check(space, x)?;
    check(space, y)?;
    let mut acc = Scalar::zero();
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            if a.order() == b.order() {
                let g = blade_inner(space, *a, *b);
                if !g.is_zero() {
                    acc += &(ca * cb * g);
                }
            }
        }
    }
    Ok(acc)
}

/// `out += coeff · i_{e_p}(b)`: `Σ_j (−1)^{j+1} ⟨e_p, b_j⟩ b_1∧…b̂_j…∧b_k`.
fn insert_basis_into_blade(space: &SuperSpace, p: usize, b: Blade, coeff: &Scalar, out: &mut ExtElem) {
    for (pos, j) in b.indices().enumerate() {
        let g = space.g(p, j);
        if g.is_zero() {
            continue;
        }
        let rest = Blade(b.0 & !(1 << j));
        out.add_term(rest, sign_scalar(pos % 2 == 1, &(coeff * g)));
    }
}

fn insert_basis(space: &SuperSpace, p: usize, y: &ExtElem) -> ExtElem {
    let mut out = ExtElem::zero(y.dim);
    for (b, c) in &y.terms {
        insert_basis_into_blade(space, p, *b, c, &mut out);
    }
    out
}

/// `i_{a_1∧…∧a_k}(y) = i_{a_k} ∘ ⋯ ∘ i_{a_1}(y)` for a basis word.
pub(crate) fn insert_blade(space: &SuperSpace, a: Blade, y: &ExtElem) -> ExtElem {
    let mut cur = y.clone();
    for p in a.indices() {
        if cur.is_zero() {
            break;
        }
        cur = insert_basis(space, p, &cur);
    }
    cur
}

/// `i_{a_1} ∘ ⋯ ∘ i_{a_k}(y)`, the insertion of the reversed word.
pub(crate) fn insert_blade_rev(space: &SuperSpace, a: Blade, y: &ExtElem) -> ExtElem {
    let idx: Vec<usize> = a.indices().collect();
    let mut cur = y.clone();
    for &p in idx.iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = insert_basis(space, p, &cur);
    }
    cur
}

/// Graded insertion of a basis word: the signed sum over `(l, k−l)` shuffles
/// of `x_{σ(l+1)}∧…∧x_{σ(k)}` wedged onto the insertion of the first `l`
/// letters. The inner insertion applies the letters last-to-first, so that
/// the top term is `⟨x^opp, y⟩` and the Clifford product comes out right.
pub(crate) fn graded_blade(space: &SuperSpace, x: Blade, l: usize, y: &ExtElem) -> ExtElem {
    let mut out = ExtElem::zero(y.dim);
    if l > x.order() {
        return out;
    }
    for sub in submasks_of_order(x.0, l) {
        let a = Blade(sub);
        let rest = Blade(x.0 & !sub);
        let (neg, _) = wedge_blades(a, rest).expect("disjoint");
        let inserted = insert_blade_rev(space, a, y);
        if inserted.is_zero() {
            continue;
        }
        wedge_blade_into(rest, &sign_scalar(neg, &Scalar::one()), &inserted, &mut out);
    }
    out
}

/// All submasks of `mask` with exactly `k` bits.
pub(crate) fn submasks_of_order(mask: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = mask;
    loop {
        if s.count_ones() as usize == k {
            out.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
    out
}

/// Insertion of a vector: a degree −1 derivation.
pub fn insert_vec(space: &SuperSpace, v: &ExtElem, y: &ExtElem) -> Result<ExtElem> {
    check(space, v)?;
    check(space, y)?;
    match v.homogeneous_order() {
        Some(1) => {}
        _ if v.is_zero() => return Ok(ExtElem::zero(y.dim)),
        Some(k) => return Err(Error::WrongOrder { expected: 1, found: k }),
        None => return Err(Error::NotHomogeneous),
    }
    insert_multi(space, v, y)
}

/// Iterated insertion `i_x y`, extended bilinearly.
pub fn insert_multi(space: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<ExtElem> {
    check(space, x)?;
    check(space, y)?;
    let mut out = ExtElem::zero(y.dim);
    for (a, c) in &x.terms {
        out = out.add(&insert_blade(space, *a, y).scale(c));
    }
    Ok(out)
}

/// Graded insertion `i⁽ˡ⁾_x y` for homogeneous `x` of order `k ≥ l`.
pub fn insert_graded(space: &SuperSpace, x: &ExtElem, l: usize, y: &ExtElem) -> Result<ExtElem> {
    check(space, x)?;
    check(space, y)?;
    if x.is_zero() {
        return Ok(ExtElem::zero(y.dim));
    }
    let k = x.homogeneous_order().ok_or(Error::NotHomogeneous)?;
    if l > k {
        return Err(Error::DepthOutOfRange { l, k });
    }
    let mut out = ExtElem::zero(y.dim);
    for (a, c) in &x.terms {
        out = out.add(&graded_blade(space, *a, l, y).scale(c));
    }
    Ok(out)
}

/// `i_x y` (bold, [`Variant::Plain`]) or `i'_x y` ([`Variant::Alt`]),
/// distributed over the homogeneous components of `x`.
pub fn insert_full(space: &SuperSpace, x: &ExtElem, y: &ExtElem, variant: Variant) -> Result<ExtElem> {
    check(space, x)?;
    check(space, y)?;
    let mut out = ExtElem::zero(y.dim);
    for (a, c) in &x.terms {
        for l in 0..=a.order() {
            let neg = variant == Variant::Alt && l % 2 == 1;
            let term = graded_blade(space, *a, l, y);
            out = out.add(&term.scale(&sign_scalar(neg, c)));
        }
    }
    Ok(out)
}
