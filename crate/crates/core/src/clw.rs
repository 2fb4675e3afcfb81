//! The Clifford-Weyl superalgebra `CL(V₀) ⊗̂ WL(V₁)`: product, super
//! bracket, supersymmetric inner product, order filtration and the
//! `osp(V) ≅ CLW⁽²⁾(V)` correspondence.
//!
//! Sign conventions live in [`crate::parity`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::clifford;
use crate::error::{Error, Result};
use crate::exterior::{self, Blade, ExtElem};
use crate::linalg::{self, Matrix};
use crate::parity::{self, Bracket};
use crate::scalar::Scalar;
use crate::space::SuperSpace;
use crate::symmetric::{self, Mono, SymElem};
use crate::text;
use crate::weyl;

/// Basis element `e_a ⊗ ξ^α`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClwKey {
    pub ext: Blade,
    pub sym: Mono,
}

impl ClwKey {
    pub fn unit(n1: usize) -> ClwKey {
        ClwKey { ext: Blade::UNIT, sym: Mono::unit(n1) }
    }

    pub fn ext_order(&self) -> usize {
        self.ext.order()
    }

    pub fn sym_order(&self) -> usize {
        self.sym.order()
    }

    pub fn order(&self) -> usize {
        self.ext_order() + self.sym_order()
    }

    pub fn physical_parity(&self) -> usize {
        parity::physical(self.sym_order())
    }

    pub fn internal_parity(&self) -> usize {
        parity::internal(self.ext_order(), self.sym_order())
    }
}

impl Ord for ClwKey {
    /// Total order first, then the exterior word, then the monomial.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.ext.cmp(&other.ext)).then_with(|| self.sym.cmp(&other.sym))
    }
}

impl PartialOrd for ClwKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClwElem {
    n0: usize,
    n1: usize,
    terms: BTreeMap<ClwKey, Scalar>,
}

impl ClwElem {
    pub fn zero(n0: usize, n1: usize) -> Self {
        ClwElem { n0, n1, terms: BTreeMap::new() }
    }

    pub fn scalar(n0: usize, n1: usize, c: Scalar) -> Self {
        let mut x = ClwElem::zero(n0, n1);
        x.add_term(ClwKey::unit(n1), c);
        x
    }

    pub fn one(n0: usize, n1: usize) -> Self {
        ClwElem::scalar(n0, n1, Scalar::one())
    }

    pub fn term(n0: usize, key: ClwKey, c: Scalar) -> Self {
        let mut x = ClwElem::zero(n0, key.sym.0.len());
        x.add_term(key, c);
        x
    }

    /// Even basis vector `e_i ⊗ 1`.
    pub fn even_basis(n0: usize, n1: usize, i: usize) -> Self {
        ClwElem::from_ext(&ExtElem::basis(n0, i), n1)
    }

    /// Odd basis vector `1 ⊗ ξ_j`.
    pub fn odd_basis(n0: usize, n1: usize, j: usize) -> Self {
        ClwElem::from_sym(n0, &SymElem::basis(n1, j))
    }

    /// Basis vector `i` of `V = V₀ ⊕ V₁` in the block order.
    pub fn vector(n0: usize, n1: usize, i: usize) -> Self {
        if i < n0 {
            ClwElem::even_basis(n0, n1, i)
        } else {
            ClwElem::odd_basis(n0, n1, i - n0)
        }
    }

    pub fn from_ext(x: &ExtElem, n1: usize) -> Self {
        ClwElem::tensor(x, &SymElem::one(n1))
    }

    pub fn from_sym(n0: usize, y: &SymElem) -> Self {
        ClwElem::tensor(&ExtElem::one(n0), y)
    }

    /// `x ⊗ ξ`.
    pub fn tensor(x: &ExtElem, y: &SymElem) -> Self {
        let mut out = ClwElem::zero(x.dim(), y.dim());
        for (a, ca) in x.terms() {
            for (m, cm) in y.terms() {
                out.add_term(ClwKey { ext: *a, sym: m.clone() }, ca * cm);
            }
        }
        out
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ClwKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &ClwKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
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

    pub fn add_term(&mut self, key: ClwKey, c: Scalar) {
        assert_eq!(key.sym.0.len(), self.n1, "monomial length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add(&self, other: &ClwElem) -> ClwElem {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ClwElem) -> ClwElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ClwElem {
        self.map_coeffs(|_, c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> ClwElem {
        if s.is_zero() {
            return ClwElem::zero(self.n0, self.n1);
        }
        self.map_coeffs(|_, c| c * s)
    }

    pub(crate) fn map_coeffs(&self, f: impl Fn(&ClwKey, &Scalar) -> Scalar) -> ClwElem {
        let mut out = ClwElem::zero(self.n0, self.n1);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(k, c));
        }
        out
    }

    pub fn filter(&self, keep: impl Fn(&ClwKey) -> bool) -> ClwElem {
        let mut out = ClwElem::zero(self.n0, self.n1);
        for (k, c) in &self.terms {
            if keep(k) {
                out.add_term(k.clone(), c.clone());
            }
        }
        out
    }

    /// Nonzero physical-parity components.
    pub fn physical_parts(&self) -> Vec<(usize, ClwElem)> {
        (0..2).map(|p| (p, self.filter(|k| k.physical_parity() == p))).filter(|(_, e)| !e.is_zero()).collect()
    }

    /// Physical parity when all terms agree on it.
    pub fn physical_parity(&self) -> Option<usize> {
        let mut ps = self.terms.keys().map(ClwKey::physical_parity);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    /// The exterior factor when every term has the unit monomial.
    pub fn as_ext(&self) -> Option<ExtElem> {
        let mut out = ExtElem::zero(self.n0);
        for (k, c) in &self.terms {
            if !k.sym.is_unit() {
                return None;
            }
            out.add_term(k.ext, c.clone());
        }
        Some(out)
    }

    /// The symmetric factor when every term has the empty exterior word.
    pub fn as_sym(&self) -> Option<SymElem> {
        let mut out = SymElem::zero(self.n1);
        for (k, c) in &self.terms {
            if k.ext != Blade::UNIT {
                return None;
            }
            out.add_term(k.sym.clone(), c.clone());
        }
        Some(out)
    }

    /// The scalar when the element is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<Scalar> {
        let unit = ClwKey::unit(self.n1);
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&unit).cloned(),
            _ => None,
        }
    }

    /// Text form: `c*e1^e2 & x1.x1 + ...`.
    pub fn to_text(&self, space: &SuperSpace) -> String {
        text::format_terms(self.terms.iter().map(|(k, c)| (c, key_text(space, k))))
    }
}

pub fn key_text(space: &SuperSpace, k: &ClwKey) -> String {
    let e = exterior::blade_text(space, k.ext);
    let s = symmetric::mono_text(space, &k.sym);
    match (e.is_empty(), s.is_empty()) {
        (_, true) => e,
        (true, false) => s,
        (false, false) => format!("{e} & {s}"),
    }
}

fn check(space: &SuperSpace, x: &ClwElem) -> Result<()> {
    space.check_dims(x.n0, x.n1)
}

/// `(x⊗ξ)(y⊗η) = (−1)^{ε(ξ)ε(y)} (xy) ⊗ (ξη)` with `ε` the order parity in
/// each factor algebra.
pub fn clw_mul(space: &SuperSpace, x: &ClwElem, y: &ClwElem) -> Result<ClwElem> {
    check(space, x)?;
    check(space, y)?;
    let (n0, n1) = (x.n0, x.n1);
    let mut ext_cache: HashMap<(Blade, Blade), ExtElem> = HashMap::new();
    let mut sym_cache: HashMap<(Mono, Mono), SymElem> = HashMap::new();
    let mut out = ClwElem::zero(n0, n1);
    for (ka, ca) in &x.terms {
        for (kb, cb) in &y.terms {
            let ext = match ext_cache.get(&(ka.ext, kb.ext)) {
                Some(e) => e.clone(),
                None => {
                    let e = clifford::cl_mul(space, &ExtElem::blade(n0, ka.ext, Scalar::one()), &ExtElem::blade(n0, kb.ext, Scalar::one()))?;
                    ext_cache.insert((ka.ext, kb.ext), e.clone());
                    e
                }
            };
            let sym_key = (ka.sym.clone(), kb.sym.clone());
            let sym = match sym_cache.get(&sym_key) {
                Some(s) => s.clone(),
                None => {
                    let s = weyl::wl_mul(space, &SymElem::mono(ka.sym.clone(), Scalar::one()), &SymElem::mono(kb.sym.clone(), Scalar::one()))?;
                    sym_cache.insert(sym_key, s.clone());
                    s
                }
            };
            let mut c = ca * cb;
            if parity::tensor_product_negative(ka.sym_order(), kb.ext_order()) {
                c = -c;
            }
            for (e, ce) in ext.terms() {
                let ce = &c * ce;
                for (m, cm) in sym.terms() {
                    out.add_term(ClwKey { ext: *e, sym: m.clone() }, &ce * cm);
                }
            }
        }
    }
    Ok(out)
}

/// `[X, Y] = XY − YX`.
pub fn lie_bracket(space: &SuperSpace, x: &ClwElem, y: &ClwElem) -> Result<ClwElem> {
    Ok(clw_mul(space, x, y)?.sub(&clw_mul(space, y, x)?))
}

/// `[X, Y]ˢ = XY − (−1)^{ε(X)ε(Y)} YX` with physical parities, distributed
/// over parity components.
pub fn super_bracket(space: &SuperSpace, x: &ClwElem, y: &ClwElem) -> Result<ClwElem> {
    let mut out = clw_mul(space, x, y)?;
    for (px, xp) in x.physical_parts() {
        for (py, yp) in y.physical_parts() {
            let yx = clw_mul(space, &yp, &xp)?;
            out = if parity::koszul(px, py) { out.add(&yx) } else { out.sub(&yx) };
        }
    }
    Ok(out)
}

pub fn bracket(space: &SuperSpace, x: &ClwElem, y: &ClwElem, kind: Bracket) -> Result<ClwElem> {
    match kind {
        Bracket::Lie => lie_bracket(space, x, y),
        Bracket::Super => super_bracket(space, x, y),
    }
}

/// `⟨x⊗ξ, y⊗η⟩ = (−1)^{ε(ξ)ε(y)} ⟨x, y⟩_new ⟨ξ, η⟩`.
pub fn inner(space: &SuperSpace, x: &ClwElem, y: &ClwElem) -> Result<Scalar> {
    check(space, x)?;
    check(space, y)?;
    let mut acc = Scalar::zero();
    for (ka, ca) in &x.terms {
        for (kb, cb) in &y.terms {
            if ka.ext_order() != kb.ext_order() || ka.sym_order() != kb.sym_order() {
                continue;
            }
            let e = exterior::blade_inner(space, ka.ext, kb.ext);
            if e.is_zero() {
                continue;
            }
            let s = symmetric::permanent(space, &ka.sym.word(), &kb.sym.word());
            if s.is_zero() {
                continue;
            }
            let negative = exterior::reversal_negative(ka.ext_order()) ^ parity::inner_negative(ka.sym_order(), kb.ext_order());
            acc += &exterior::sign_scalar(negative, &(ca * cb * e * s));
        }
    }
    Ok(acc)
}

/// Decomposition of an element by total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderFiltration {
    pub parts: BTreeMap<usize, ClwElem>,
}

impl OrderFiltration {
    pub fn sum(&self, n0: usize, n1: usize) -> ClwElem {
        self.parts.values().fold(ClwElem::zero(n0, n1), |acc, p| acc.add(p))
    }
}

pub fn order_parts(x: &ClwElem) -> OrderFiltration {
    let mut parts: BTreeMap<usize, ClwElem> = BTreeMap::new();
    for (k, c) in &x.terms {
        parts.entry(k.order()).or_insert_with(|| ClwElem::zero(x.n0, x.n1)).add_term(k.clone(), c.clone());
    }
    OrderFiltration { parts }
}

pub fn order_project(x: &ClwElem, k: usize) -> ClwElem {
    x.filter(|key| key.order() == k)
}

/// Basis of `CLW⁽²⁾(V) = Λ²V₀ ⊕ ∨²V₁ ⊕ V₀⊗V₁`.
pub fn order_two_basis(n0: usize, n1: usize) -> Vec<ClwKey> {
    let mut out = Vec::new();
    for a in 0..n0 {
        for b in a + 1..n0 {
            out.push(ClwKey { ext: Blade((1 << a) | (1 << b)), sym: Mono::unit(n1) });
        }
    }
    for a in 0..n1 {
        for b in a..n1 {
            out.push(ClwKey { ext: Blade::UNIT, sym: Mono::from_word(n1, &[a, b]) });
        }
    }
    for a in 0..n0 {
        for b in 0..n1 {
            out.push(ClwKey { ext: Blade::basis(a), sym: Mono::basis(n1, b) });
        }
    }
    out
}

/// Parity of a block matrix on `V₀ ⊕ V₁`: `Some(0)` if only the diagonal
/// blocks are nonzero, `Some(1)` if only the off-diagonal ones, `None` if
/// mixed. The zero matrix is even.
pub fn block_parity(n0: usize, t: &Matrix) -> Option<usize> {
    let mut even = false;
    let mut odd = false;
    for (i, row) in t.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                if (i < n0) == (j < n0) {
                    even = true;
                } else {
                    odd = true;
                }
            }
        }
    }
    match (even, odd) {
        (true, true) => None,
        (_, true) => Some(1),
        _ => Some(0),
    }
}

/// Split a block matrix into its even and odd parts.
pub fn block_split(n0: usize, t: &Matrix) -> (Matrix, Matrix) {
    let mut even = t.clone();
    let mut odd = t.clone();
    for (i, row) in t.iter().enumerate() {
        for j in 0..row.len() {
            if (i < n0) == (j < n0) {
                odd[i][j] = Scalar::zero();
            } else {
                even[i][j] = Scalar::zero();
            }
        }
    }
    (even, odd)
}

/// Whether `⟨Tx, y⟩ + (−1)^{ε(T)ε(x)} ⟨x, Ty⟩ = 0` on all basis pairs, each
/// parity block checked on its own.
pub fn is_in_osp(space: &SuperSpace, t: &Matrix) -> bool {
    let (n0, n1) = (space.n0(), space.n1());
    let d = n0 + n1;
    if !linalg::is_square(t, d) {
        return false;
    }
    let b = space.super_form();
    let (even, odd) = block_split(n0, t);
    [(0usize, even), (1usize, odd)].iter().all(|(p, tp)| {
        let tb = linalg::matmul(&linalg::transpose(tp), &b);
        let bt = linalg::matmul(&b, tp);
        (0..d).all(|x| {
            let negative = parity::koszul(*p, usize::from(x >= n0));
            (0..d).all(|y| {
                let rhs = exterior::sign_scalar(negative, &bt[x][y]);
                (&tb[x][y] + &rhs).is_zero()
            })
        })
    })
}

fn matrix_on_vectors(n0: usize, n1: usize, f: impl Fn(usize) -> Result<ClwElem>) -> Result<Matrix> {
    let d = n0 + n1;
    let mut t = linalg::zeros(d, d);
    for j in 0..d {
        for (k, c) in f(j)?.terms() {
            let i = match (k.ext_order(), k.sym_order()) {
                (1, 0) => k.ext.indices().next().expect("order 1"),
                (0, 1) => n0 + k.sym.word()[0],
                _ => return Err(Error::Shape("image of a vector is not a vector".into())),
            };
            t[i][j] = c.clone();
        }
    }
    Ok(t)
}

/// Matrix of `ad(X)|_V = [X, ·]ˢ` for `X` in `CLW⁽²⁾(V)`.
pub fn osp_project(space: &SuperSpace, x: &ClwElem) -> Result<Matrix> {
    check(space, x)?;
    if x.terms().any(|(k, _)| k.order() != 2) {
        return Err(Error::WrongOrder { expected: 2, found: x.terms().map(|(k, _)| k.order()).find(|&o| o != 2).unwrap_or(0) });
    }
    let (n0, n1) = (space.n0(), space.n1());
    matrix_on_vectors(n0, n1, |j| super_bracket(space, x, &ClwElem::vector(n0, n1, j)))
}

/// The unique `X ∈ CLW⁽²⁾(V)` with `[X, z]ˢ = T(z)` for all `z ∈ V`.
pub fn osp_embed(space: &SuperSpace, t: &Matrix) -> Result<ClwElem> {
    let (n0, n1) = (space.n0(), space.n1());
    let d = n0 + n1;
    if !linalg::is_square(t, d) {
        return Err(Error::Shape(format!("expected a {d}×{d} matrix")));
    }
    if !space.is_nondegenerate() {
        return Err(Error::Degenerate("supersymmetric form"));
    }
    if !is_in_osp(space, t) {
        return Err(Error::NotInAlgebra("osp(V)"));
    }
    let basis = order_two_basis(n0, n1);
    let cols: Vec<Matrix> = basis
        .iter()
        .map(|k| osp_project(space, &ClwElem::term(n0, k.clone(), Scalar::one())))
        .collect::<Result<_>>()?;
    let mut a = linalg::zeros(d * d, basis.len());
    let mut rhs = vec![Scalar::zero(); d * d];
    for i in 0..d {
        for j in 0..d {
            for (u, col) in cols.iter().enumerate() {
                a[i * d + j][u] = col[i][j].clone();
            }
            rhs[i * d + j] = t[i][j].clone();
        }
    }
    clifford::solve_into(&a, &rhs, "osp(V)", |coeffs| {
        let mut x = ClwElem::zero(n0, n1);
        for (k, c) in basis.iter().zip(coeffs) {
            x.add_term(k.clone(), c);
        }
        x
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    // (2|2) with identity Gram and a symplectic plane: e1, e2; x1, x1^.
    fn sp() -> SuperSpace {
        SuperSpace::euclidean(2, 1)
    }

    fn v(i: usize) -> ClwElem {
        ClwElem::even_basis(2, 2, i)
    }

    fn xi(j: usize) -> ClwElem {
        ClwElem::odd_basis(2, 2, j)
    }

    fn mul(a: &ClwElem, b: &ClwElem) -> ClwElem {
        clw_mul(&sp(), a, b).unwrap()
    }

    #[test]
    fn product_examples() {
        let v1xi1 = ClwElem::tensor(&ExtElem::basis(2, 0), &SymElem::basis(2, 0));
        assert_eq!(mul(&v(0), &xi(0)), v1xi1);
        assert_eq!(mul(&xi(0), &v(0)), v1xi1.neg());
        let v1xi1u = ClwElem::tensor(&ExtElem::basis(2, 0), &SymElem::basis(2, 1));
        let expected = ClwElem::from_sym(2, &SymElem::word(2, &[0, 1])).neg().sub(&ClwElem::one(2, 2));
        assert_eq!(mul(&v1xi1, &v1xi1u), expected);
    }

    #[test]
    fn super_bracket_examples() {
        let sp = sp();
        let v12 = ClwElem::from_ext(&ExtElem::word(2, &[0, 1]), 2);
        assert_eq!(super_bracket(&sp, &v(0), &v(1)).unwrap(), v12.scale(&s(2)));
        // Odd vectors: the super bracket is the anticommutator, the
        // commutator carries the form.
        assert_eq!(super_bracket(&sp, &xi(0), &xi(1)).unwrap(), ClwElem::from_sym(2, &SymElem::word(2, &[0, 1])).scale(&s(2)));
        assert_eq!(lie_bracket(&sp, &xi(0), &xi(1)).unwrap(), ClwElem::scalar(2, 2, s(2)));
        assert!(super_bracket(&sp, &v12.add(&xi(0)), &ClwElem::one(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn inner_examples() {
        let sp = sp();
        assert_eq!(inner(&sp, &v(0), &v(0)).unwrap(), s(1));
        assert_eq!(inner(&sp, &xi(0), &xi(1)).unwrap(), s(1));
        assert_eq!(inner(&sp, &v(0), &xi(0)).unwrap(), s(0));
    }

    #[test]
    fn filtration_examples() {
        let x = ClwElem::tensor(&ExtElem::basis(2, 0), &SymElem::basis(2, 0));
        assert_eq!(order_parts(&x).parts.keys().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(order_parts(&ClwElem::one(2, 2)).parts.keys().copied().collect::<Vec<_>>(), vec![0]);
        let y = v(0).add(&ClwElem::from_sym(2, &SymElem::word(2, &[0, 0])));
        let f = order_parts(&y);
        assert_eq!(f.parts.keys().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(f.sum(2, 2), y);
        assert_eq!(order_project(&y, 1), v(0));
    }

    #[test]
    fn osp_embedding_examples() {
        let sp = SuperSpace::witt(1, false, 1);
        let h = ClwElem::from_ext(&ExtElem::word(2, &[0, 1]).scale(&Scalar::rational(1, 2)), 2);
        let t = osp_project(&sp, &h).unwrap();
        assert_eq!(osp_embed(&sp, &t).unwrap(), h);
        let k = ClwElem::from_sym(2, &SymElem::word(2, &[0, 1]).scale(&Scalar::rational(1, 2)));
        assert_eq!(osp_embed(&sp, &osp_project(&sp, &k).unwrap()).unwrap(), k);
        let odd = ClwElem::tensor(&ExtElem::basis(2, 0), &SymElem::basis(2, 0));
        let t = osp_project(&sp, &odd).unwrap();
        assert_eq!(block_parity(2, &t), Some(1));
        assert_eq!(osp_embed(&sp, &t).unwrap(), odd);
    }

    #[test]
    fn text_form() {
        let sp = sp();
        let x = ClwElem::tensor(&ExtElem::word(2, &[0, 1]), &SymElem::word(2, &[0, 0])).scale(&s(3)).add(&xi(1)).sub(&ClwElem::one(2, 2));
        assert_eq!(x.to_text(&sp), "-1 + x1^ + 3*e1^e2 & x1.x1");
    }
}
