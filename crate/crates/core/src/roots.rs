//! Cartan generators, weight tables and root systems of `osp(V)` inside
//! `CLW(V)` for a Witt/symplectic basis.
//!
//! Witt monomials are simultaneous eigenvectors of the Cartan generators,
//! so weights are read off one bracket per generator and monomial; every
//! reading is checked to be an exact eigen-relation.

use std::collections::BTreeMap;

use crate::clw::{super_bracket, ClwElem, ClwKey};
use crate::error::{Error, Result};
use crate::exterior::{Blade, ExtElem};
use crate::scalar::Scalar;
use crate::space::{SuperSpace, WeightVector, WittLayout};
use crate::symmetric::{Mono, SymElem};

/// `H_i = ½ e_i∧e_i*` and `K_j = ½ ξ_j∨ξ^j`.
#[derive(Clone, Debug)]
pub struct CartanBasis {
    pub h: Vec<ClwElem>,
    pub k: Vec<ClwElem>,
}

impl CartanBasis {
    pub fn generators(&self) -> impl Iterator<Item = &ClwElem> {
        self.h.iter().chain(&self.k)
    }

    pub fn labels(&self) -> Vec<String> {
        (1..=self.h.len()).map(|i| format!("H{i}")).chain((1..=self.k.len()).map(|j| format!("K{j}"))).collect()
    }
}

fn layout(space: &SuperSpace) -> Result<WittLayout> {
    space.witt_layout().ok_or(Error::NotWitt)
}

/// Cartan generators, with pairwise commutativity checked exactly.
pub fn cartan_basis(space: &SuperSpace) -> Result<CartanBasis> {
    let w = layout(space)?;
    let (n0, n1) = (space.n0(), space.n1());
    let half = Scalar::rational(1, 2);
    let h = (0..w.n).map(|i| ClwElem::from_ext(&ExtElem::word(n0, &[w.e(i), w.e_star(i)]).scale(&half), n1)).collect();
    let k = (0..w.m).map(|j| ClwElem::from_sym(n0, &SymElem::word(n1, &[w.xi_lower(j), w.xi_upper(j)]).scale(&half))).collect();
    let basis = CartanBasis { h, k };
    let gens: Vec<&ClwElem> = basis.generators().collect();
    for (a, x) in gens.iter().enumerate() {
        for y in &gens[a + 1..] {
            if !super_bracket(space, x, y)?.is_zero() {
                return Err(Error::NotEigenvector("Cartan generators do not commute".into()));
            }
        }
    }
    Ok(basis)
}

/// A representation space of `osp₀(V)` spanned by Witt monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rep {
    /// `ΛᵐV₀`.
    Ext(usize),
    /// `∨ᵐV₁`.
    Sym(usize),
    /// `CLW⁽ᵏ⁾(V)`.
    Clw(usize),
}

impl std::str::FromStr for Rep {
    type Err = Error;

    /// `ext:m`, `sym:m` or `clw:k`.
    fn from_str(s: &str) -> Result<Rep> {
        let bad = || Error::parse(1, format!("expected ext:m, sym:m or clw:k, found '{s}'"));
        let (tag, num) = s.split_once(':').ok_or_else(bad)?;
        let m: usize = num.trim().parse().map_err(|_| bad())?;
        match tag.trim() {
            "ext" => Ok(Rep::Ext(m)),
            "sym" => Ok(Rep::Sym(m)),
            "clw" => Ok(Rep::Clw(m)),
            _ => Err(bad()),
        }
    }
}

fn blades_of_order(n: usize, k: usize) -> Vec<Blade> {
    if k > n {
        return Vec::new();
    }
    let mut out: Vec<Blade> = crate::exterior::submasks_of_order(if n == 64 { u64::MAX } else { (1u64 << n) - 1 }, k).into_iter().map(Blade).collect();
    out.sort();
    out
}

fn monos_of_order(n: usize, k: usize) -> Vec<Mono> {
    fn go(n: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if cur.len() == n - 1 {
            cur.push(k as u32);
            out.push(Mono(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=k).rev() {
            cur.push(e as u32);
            go(n, k - e, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return if k == 0 { vec![Mono(Vec::new())] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// Basis keys of a representation, in key order.
pub fn rep_basis(space: &SuperSpace, rep: Rep) -> Vec<ClwKey> {
    let (n0, n1) = (space.n0(), space.n1());
    let mut out = Vec::new();
    let mut push = |r: usize, s: usize| {
        for b in blades_of_order(n0, r) {
            for m in monos_of_order(n1, s) {
                out.push(ClwKey { ext: b, sym: m });
            }
        }
    };
    match rep {
        Rep::Ext(m) => push(m, 0),
        Rep::Sym(m) => push(0, m),
        Rep::Clw(k) => {
            for r in 0..=k.min(n0) {
                push(r, k - r);
            }
        }
    }
    out.sort();
    out
}

/// Weight of a simultaneous eigenvector, or an error naming the failure.
pub fn weight_of(space: &SuperSpace, cartan: &CartanBasis, x: &ClwElem) -> Result<WeightVector> {
    let mut coords = Vec::new();
    for g in cartan.generators() {
        let y = super_bracket(space, g, x)?;
        let c = eigenvalue(x, &y).ok_or_else(|| Error::NotEigenvector(x.to_text(space)))?;
        coords.push(c.to_integer().ok_or_else(|| Error::NotEigenvector(format!("non-integral eigenvalue {c}")))?);
    }
    let n = cartan.h.len();
    Ok(WeightVector { h: coords[..n].to_vec(), k: coords[n..].to_vec() })
}

/// `c` with `y = c·x`, if any.
fn eigenvalue(x: &ClwElem, y: &ClwElem) -> Option<Scalar> {
    if y.is_zero() {
        return Some(Scalar::zero());
    }
    let (k, cx) = x.terms().next()?;
    let c = (&y.coeff(k)).checked_div(cx).ok()?;
    (x.scale(&c) == *y).then_some(c)
}

/// One weight with its eigenvectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEntry {
    pub weight: WeightVector,
    pub multiplicity: usize,
    pub eigenvectors: Vec<ClwElem>,
    /// Physical parity, for root tables and `CLW⁽ᵏ⁾` weights.
    pub parity: Option<usize>,
    /// Isotropy flag, for odd roots.
    pub isotropic: Option<bool>,
}

/// Weights sorted lexicographically descending, positive before negative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightTable {
    pub n: usize,
    pub m: usize,
    pub entries: Vec<WeightEntry>,
}

impl WeightTable {
    pub fn weights(&self) -> Vec<WeightVector> {
        self.entries.iter().map(|e| e.weight.clone()).collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.entries.iter().any(|e| &e.weight == w)
    }
}

fn tabulate(space: &SuperSpace, cartan: &CartanBasis, keys: &[ClwKey], with_parity: bool, keep_zero: bool) -> Result<WeightTable> {
    let (n0, _) = (space.n0(), space.n1());
    let mut groups: BTreeMap<(WeightVector, Option<usize>), Vec<ClwElem>> = BTreeMap::new();
    for key in keys {
        let x = ClwElem::term(n0, key.clone(), Scalar::one());
        let w = weight_of(space, cartan, &x)?;
        if !keep_zero && w.is_zero() {
            continue;
        }
        let p = with_parity.then(|| key.physical_parity());
        groups.entry((w, p)).or_default().push(x);
    }
    let entries = groups
        .into_iter()
        .rev()
        .map(|((weight, parity), eigenvectors)| WeightEntry { weight, multiplicity: eigenvectors.len(), eigenvectors, parity, isotropic: None })
        .collect();
    Ok(WeightTable { n: cartan.h.len(), m: cartan.k.len(), entries })
}

/// Complete weight table of a representation.
pub fn weights_on(space: &SuperSpace, rep: Rep) -> Result<WeightTable> {
    let cartan = cartan_basis(space)?;
    let keys = rep_basis(space, rep);
    tabulate(space, &cartan, &keys, matches!(rep, Rep::Clw(_)), true)
}

/// Even and odd roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub even: WeightTable,
    pub odd: WeightTable,
}

/// Even roots: nonzero weights on `Λ²V₀ ⊕ ∨²V₁`. Odd roots: weights on
/// `V₀⊗V₁`, isotropic unless twice the root is an even root.
pub fn roots(space: &SuperSpace) -> Result<RootSystem> {
    let cartan = cartan_basis(space)?;
    let (n0, n1) = (space.n0(), space.n1());
    let keys = rep_basis(space, Rep::Clw(2));
    let even_keys: Vec<ClwKey> = keys.iter().filter(|k| k.ext_order() != 1).cloned().collect();
    let odd_keys: Vec<ClwKey> = keys.iter().filter(|k| k.ext_order() == 1).cloned().collect();
    let mut even = tabulate(space, &cartan, &even_keys, false, false)?;
    let mut odd = tabulate(space, &cartan, &odd_keys, false, false)?;
    for e in &mut even.entries {
        e.parity = Some(0);
    }
    for e in &mut odd.entries {
        e.parity = Some(1);
        e.isotropic = Some(!even.contains(&e.weight.scaled(2)));
    }
    debug_assert!(n0 * n1 >= odd.total_multiplicity());
    Ok(RootSystem { even, odd })
}

/// [`roots`] restricted to spaces whose even part has odd dimension.
pub fn roots_odd_dim(space: &SuperSpace) -> Result<RootSystem> {
    if !layout(space)?.odd_extra {
        return Err(Error::EvenDimension);
    }
    roots(space)
}

/// Recheck every certificate: `[g, X]ˢ = weight(g)·X` for each generator.
/// Returns one line per failure.
pub fn verify_eigens(space: &SuperSpace, table: &WeightTable, cartan: &CartanBasis) -> Vec<String> {
    let mut failures = Vec::new();
    let labels = cartan.labels();
    for entry in &table.entries {
        let coords: Vec<i64> = entry.weight.coords().collect();
        for x in &entry.eigenvectors {
            for ((g, c), label) in cartan.generators().zip(&coords).zip(&labels) {
                match super_bracket(space, g, x) {
                    Ok(y) if y == x.scale(&Scalar::from(*c)) => {}
                    Ok(_) => failures.push(format!("{}: [{label}, X] is not {c}·X for X = {}", entry.weight, x.to_text(space))),
                    Err(e) => failures.push(format!("{}: {e}", entry.weight)),
                }
            }
        }
    }
    failures
}

/// The closed-form root lists for `osp(2n(+1)|2m)`: even roots
/// `±Hⁱ±Hʲ (i<j)`, `±Hⁱ` when the even part is odd-dimensional, `±Kⁱ±Kʲ
/// (i<j)`, `±2Kⁱ`; odd roots `±Hⁱ±Kʲ` and `±Kʲ` when the even part is
/// odd-dimensional. Independent of the bracket computation.
pub fn closed_form(n: usize, odd_extra: bool, m: usize) -> (Vec<WeightVector>, Vec<(WeightVector, bool)>) {
    let unit = |h: Option<(usize, i64)>, k: Option<(usize, i64)>| {
        let mut w = WeightVector::zero(n, m);
        if let Some((i, c)) = h {
            w.h[i] += c;
        }
        if let Some((j, c)) = k {
            w.k[j] += c;
        }
        w
    };
    let mut even = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                even.push(unit(Some((i, a)), None).add(&unit(Some((j, b)), None)));
            }
        }
        if odd_extra {
            even.push(unit(Some((i, 1)), None));
            even.push(unit(Some((i, -1)), None));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                even.push(unit(None, Some((i, a))).add(&unit(None, Some((j, b)))));
            }
        }
        even.push(unit(None, Some((i, 2))));
        even.push(unit(None, Some((i, -2))));
    }
    let mut odd = Vec::new();
    for i in 0..n {
        for j in 0..m {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                odd.push((unit(Some((i, a)), Some((j, b))), true));
            }
        }
    }
    if odd_extra {
        for j in 0..m {
            odd.push((unit(None, Some((j, 1))), false));
            odd.push((unit(None, Some((j, -1))), false));
        }
    }
    even.sort_by(|a, b| b.cmp(a));
    odd.sort_by(|a, b| b.0.cmp(&a.0));
    (even, odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(h: &[i64], k: &[i64]) -> WeightVector {
        WeightVector { h: h.to_vec(), k: k.to_vec() }
    }

    #[test]
    fn cartan_examples() {
        let c = cartan_basis(&SuperSpace::witt(1, false, 0)).unwrap();
        assert_eq!((c.h.len(), c.k.len()), (1, 0));
        let c = cartan_basis(&SuperSpace::witt(0, false, 1)).unwrap();
        assert_eq!((c.h.len(), c.k.len()), (0, 1));
        let c = cartan_basis(&SuperSpace::witt(1, false, 1)).unwrap();
        assert_eq!((c.h.len(), c.k.len()), (1, 1));
        assert_eq!(cartan_basis(&SuperSpace::euclidean(2, 0)).err(), Some(Error::NotWitt));
    }

    #[test]
    fn weight_examples() {
        let t = weights_on(&SuperSpace::witt(2, false, 0), Rep::Ext(1)).unwrap();
        assert_eq!(t.weights(), vec![wv(&[1, 0], &[]), wv(&[0, 1], &[]), wv(&[0, -1], &[]), wv(&[-1, 0], &[])]);
        assert!(t.entries.iter().all(|e| e.multiplicity == 1));
        let t = weights_on(&SuperSpace::witt(0, false, 2), Rep::Sym(1)).unwrap();
        assert_eq!(t.weights(), vec![wv(&[], &[1, 0]), wv(&[], &[0, 1]), wv(&[], &[0, -1]), wv(&[], &[-1, 0])]);
        let t = weights_on(&SuperSpace::witt(2, false, 0), Rep::Ext(2)).unwrap();
        let zero = t.entries.iter().find(|e| e.weight.is_zero()).unwrap();
        assert_eq!(zero.multiplicity, 2);
        assert_eq!(t.entries.len(), 5);
        assert_eq!(t.total_multiplicity(), 6);
    }

    #[test]
    fn root_examples() {
        let r = roots(&SuperSpace::witt(2, false, 0)).unwrap();
        assert_eq!(r.even.weights(), vec![wv(&[1, 1], &[]), wv(&[1, -1], &[]), wv(&[-1, 1], &[]), wv(&[-1, -1], &[])]);
        assert!(r.odd.entries.is_empty());
        let r = roots(&SuperSpace::witt(0, false, 2)).unwrap();
        assert_eq!(r.even.entries.len(), 8);
        let r = roots(&SuperSpace::witt(2, false, 2)).unwrap();
        assert_eq!((r.even.entries.len(), r.odd.entries.len()), (12, 16));
        assert!(r.odd.entries.iter().all(|e| e.isotropic == Some(true)));
    }

    #[test]
    fn odd_dimensional_roots() {
        let r = roots_odd_dim(&SuperSpace::witt(1, true, 0)).unwrap();
        assert_eq!(r.even.weights(), vec![wv(&[1], &[]), wv(&[-1], &[])]);
        let r = roots_odd_dim(&SuperSpace::witt(1, true, 1)).unwrap();
        let non_iso: Vec<_> = r.odd.entries.iter().filter(|e| e.isotropic == Some(false)).map(|e| e.weight.clone()).collect();
        assert_eq!(non_iso, vec![wv(&[0], &[1]), wv(&[0], &[-1])]);
        assert_eq!(r.odd.entries.len(), 6);
        let r = roots_odd_dim(&SuperSpace::witt(0, true, 1)).unwrap();
        assert_eq!(r.odd.weights(), vec![wv(&[], &[1]), wv(&[], &[-1])]);
        assert_eq!(roots_odd_dim(&SuperSpace::witt(1, false, 1)).err(), Some(Error::EvenDimension));
    }

    #[test]
    fn certificates_pass_and_a_perturbed_one_fails() {
        let sp = SuperSpace::witt(2, true, 1);
        let cartan = cartan_basis(&sp).unwrap();
        let mut t = weights_on(&sp, Rep::Ext(2)).unwrap();
        assert!(verify_eigens(&sp, &t, &cartan).is_empty());
        let other = ClwElem::even_basis(sp.n0(), sp.n1(), 0);
        let first = &mut t.entries[0];
        first.eigenvectors[0] = first.eigenvectors[0].add(&other);
        assert!(!verify_eigens(&sp, &t, &cartan).is_empty());
    }

    #[test]
    fn rep_tags_parse() {
        assert_eq!("ext:3".parse::<Rep>().unwrap(), Rep::Ext(3));
        assert_eq!("clw:2".parse::<Rep>().unwrap(), Rep::Clw(2));
        assert!("tensor:2".parse::<Rep>().is_err());
    }
}
