//! An independent product on `CLW(V)` by normal-order rewriting of free
//! words under the defining relations `xy + (−1)^{xy} yx = 2⟨x, y⟩`.
//!
//! Shares only scalars and forms with the insertion-formula products, so it
//! serves as the differential-test reference. Slow by design.

use std::collections::{BTreeMap, HashMap};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::clw::{ClwElem, ClwKey};
use crate::error::Result;
use crate::exterior::{Blade, ExtElem};
use crate::scalar::Scalar;
use crate::space::SuperSpace;
use crate::symmetric::{Mono, SymElem};

/// Generator index: `0..n0` are even basis vectors, `n0..n0+n1` odd ones.
pub type Letter = u16;
pub type Word = Vec<Letter>;

/// A linear combination of free words, not in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordElem {
    pub terms: BTreeMap<Word, Scalar>,
}

impl WordElem {
    pub fn word(w: Word) -> Self {
        let mut out = WordElem::default();
        out.add_word(w, Scalar::one());
        out
    }

    pub fn add_word(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Pairwise concatenation.
    pub fn concat(&self, other: &WordElem) -> WordElem {
        let mut out = WordElem::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_word(w, ca * cb);
            }
        }
        out
    }
}

/// Which out-of-order pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

/// Normalizer with memoized normal forms for one space.
pub struct Oracle<'a> {
    space: &'a SuperSpace,
    strategy: Strategy,
    rng: StdRng,
    normal: HashMap<Word, BTreeMap<Word, Scalar>>,
    canonical: HashMap<Word, ClwElem>,
}

impl<'a> Oracle<'a> {
    pub fn new(space: &'a SuperSpace) -> Self {
        Self::with_strategy(space, Strategy::Leftmost)
    }

    pub fn with_strategy(space: &'a SuperSpace, strategy: Strategy) -> Self {
        let seed = if let Strategy::Random(s) = strategy { s } else { 0 };
        Oracle { space, strategy, rng: StdRng::seed_from_u64(seed), normal: HashMap::new(), canonical: HashMap::new() }
    }

    fn odd(&self, a: Letter) -> bool {
        a as usize >= self.space.n0()
    }

    fn form(&self, a: Letter, b: Letter) -> Scalar {
        let n0 = self.space.n0();
        match (self.odd(a), self.odd(b)) {
            (false, false) => self.space.g(a as usize, b as usize).clone(),
            (true, true) => self.space.w(a as usize - n0, b as usize - n0).clone(),
            _ => Scalar::zero(),
        }
    }

    /// Canonical order: letters non-decreasing, even letters never repeated.
    fn out_of_order(&self, a: Letter, b: Letter) -> bool {
        a > b || (a == b && !self.odd(a))
    }

    /// Normal-ordered words: strictly increasing even letters followed by
    /// non-decreasing odd letters.
    pub fn normalize_word(&mut self, w: &[Letter]) -> BTreeMap<Word, Scalar> {
        if let Some(hit) = self.normal.get(w) {
            return hit.clone();
        }
        let spots: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| self.out_of_order(w[i], w[i + 1])).collect();
        let out = if spots.is_empty() {
            BTreeMap::from([(w.to_vec(), Scalar::one())])
        } else {
            let i = match self.strategy {
                Strategy::Leftmost => spots[0],
                Strategy::Rightmost => spots[spots.len() - 1],
                Strategy::Random(_) => spots[self.rng.gen_range(0..spots.len())],
            };
            let (b, a) = (w[i], w[i + 1]);
            let mut dropped = w[..i].to_vec();
            dropped.extend_from_slice(&w[i + 2..]);
            let mut acc = BTreeMap::new();
            if a == b {
                // Even square: aa = ⟨a, a⟩.
                accumulate(&mut acc, self.normalize_word(&dropped), &self.form(a, a));
            } else {
                // ba = −(−1)^{ab} ab + 2⟨b, a⟩.
                let mut swapped = w.to_vec();
                swapped.swap(i, i + 1);
                let sign = if self.odd(a) && self.odd(b) { Scalar::one() } else { -Scalar::one() };
                accumulate(&mut acc, self.normalize_word(&swapped), &sign);
                let f = self.form(b, a);
                if !f.is_zero() {
                    accumulate(&mut acc, self.normalize_word(&dropped), &f.scale_int(2));
                }
            }
            acc
        };
        self.normal.insert(w.to_vec(), out.clone());
        out
    }

    pub fn normalize(&mut self, x: &WordElem) -> BTreeMap<Word, Scalar> {
        let mut acc = BTreeMap::new();
        for (w, c) in &x.terms {
            let nf = self.normalize_word(w);
            accumulate(&mut acc, nf, c);
        }
        acc
    }

    fn key_of(&self, w: &[Letter]) -> ClwKey {
        let n0 = self.space.n0();
        let mut ext = 0u64;
        let mut sym = Mono::unit(self.space.n1());
        for &a in w {
            if self.odd(a) {
                sym.0[a as usize - n0] += 1;
            } else {
                ext |= 1 << a;
            }
        }
        ClwKey { ext: Blade(ext), sym }
    }

    /// Canonical element equal to a normal-ordered word, by peeling off the
    /// symmetrization of its key (which has the same leading word).
    fn canonical_of(&mut self, w: &[Letter]) -> ClwElem {
        if let Some(hit) = self.canonical.get(w) {
            return hit.clone();
        }
        let (n0, n1) = (self.space.n0(), self.space.n1());
        let key = self.key_of(w);
        let expansion = self.normalize(&expand_key(n0, &key));
        let mut out = ClwElem::term(n0, key, Scalar::one());
        for (u, c) in expansion {
            if u.as_slice() == w {
                debug_assert!(c.is_one(), "leading coefficient of a symmetrization is 1");
                continue;
            }
            debug_assert!(u.len() < w.len());
            out = out.sub(&self.canonical_of(&u).scale(&c));
        }
        debug_assert_eq!(out.n1(), n1);
        self.canonical.insert(w.to_vec(), out.clone());
        out
    }

    fn to_canonical(&mut self, nf: BTreeMap<Word, Scalar>) -> ClwElem {
        let mut out = ClwElem::zero(self.space.n0(), self.space.n1());
        for (w, c) in nf {
            out = out.add(&self.canonical_of(&w).scale(&c));
        }
        out
    }

    /// Normal form of a word combination, as a canonical element.
    pub fn rewrite_normalize(&mut self, x: &WordElem) -> ClwElem {
        let nf = self.normalize(x);
        self.to_canonical(nf)
    }

    pub fn mul(&mut self, x: &ClwElem, y: &ClwElem) -> Result<ClwElem> {
        self.space.check_dims(x.n0(), x.n1())?;
        self.space.check_dims(y.n0(), y.n1())?;
        let wx = expand(x);
        let wy = expand(y);
        Ok(self.rewrite_normalize(&wx.concat(&wy)))
    }

    pub fn mul_ext(&mut self, x: &ExtElem, y: &ExtElem) -> Result<ExtElem> {
        let n1 = self.space.n1();
        let z = self.mul(&ClwElem::from_ext(x, n1), &ClwElem::from_ext(y, n1))?;
        Ok(z.as_ext().expect("product of exterior elements stays exterior"))
    }

    pub fn mul_sym(&mut self, x: &SymElem, y: &SymElem) -> Result<SymElem> {
        let n0 = self.space.n0();
        let z = self.mul(&ClwElem::from_sym(n0, x), &ClwElem::from_sym(n0, y))?;
        Ok(z.as_sym().expect("product of symmetric elements stays symmetric"))
    }
}

fn accumulate(acc: &mut BTreeMap<Word, Scalar>, part: BTreeMap<Word, Scalar>, c: &Scalar) {
    for (w, v) in part {
        let slot = acc.entry(w.clone()).or_default();
        *slot += &(&v * c);
        if slot.is_zero() {
            acc.remove(&w);
        }
    }
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

fn permutations(items: &[Letter]) -> Vec<(Word, bool)> {
    if items.is_empty() {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for (mut tail, odd) in permutations(&rest) {
            tail.insert(0, first);
            out.push((tail, odd ^ (i % 2 == 1)));
        }
    }
    out
}

fn multiset_arrangements(counts: &mut [(Letter, u32)], len: usize, cur: &mut Word, out: &mut Vec<Word>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for i in 0..counts.len() {
        if counts[i].1 > 0 {
            counts[i].1 -= 1;
            cur.push(counts[i].0);
            multiset_arrangements(counts, len, cur, out);
            cur.pop();
            counts[i].1 += 1;
        }
    }
}

/// Antisymmetrized exterior letters followed by symmetrized odd letters,
/// each normalized by `1/k!`.
fn expand_key(n0: usize, key: &ClwKey) -> WordElem {
    let even: Word = key.ext.indices().map(|i| i as Letter).collect();
    let ext_words = permutations(&even);
    let ext_weight = Scalar::rational(1, factorial(even.len()));

    let mut counts: Vec<(Letter, u32)> = key.sym.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, &e)| ((n0 + j) as Letter, e)).collect();
    let k = key.sym.order();
    let repeats: i64 = counts.iter().map(|&(_, e)| factorial(e as usize)).product();
    let sym_weight = Scalar::rational(repeats, factorial(k));
    let mut sym_words = Vec::new();
    multiset_arrangements(&mut counts, k, &mut Vec::new(), &mut sym_words);

    let mut out = WordElem::default();
    let weight = &ext_weight * &sym_weight;
    for (ew, odd) in &ext_words {
        let c = if *odd { -weight.clone() } else { weight.clone() };
        for sw in &sym_words {
            let mut w = ew.clone();
            w.extend_from_slice(sw);
            out.add_word(w, c.clone());
        }
    }
    out
}

/// Word expansion of a canonical element.
pub fn expand(x: &ClwElem) -> WordElem {
    let mut out = WordElem::default();
    for (k, c) in x.terms() {
        for (w, v) in expand_key(x.n0(), k).terms {
            out.add_word(w, &v * c);
        }
    }
    out
}

/// Rewrite-normalize a word combination with the leftmost strategy.
pub fn rewrite_normalize(space: &SuperSpace, x: &WordElem) -> ClwElem {
    Oracle::new(space).rewrite_normalize(x)
}

/// Product by rewriting; one-shot, without a shared memo.
pub fn oracle_mul(space: &SuperSpace, x: &ClwElem, y: &ClwElem) -> Result<ClwElem> {
    Oracle::new(space).mul(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clw::clw_mul;

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn rewrite_examples() {
        let sp = SuperSpace::euclidean(2, 0);
        let v12 = ClwElem::from_ext(&ExtElem::word(2, &[0, 1]), 0);
        assert_eq!(rewrite_normalize(&sp, &WordElem::word(vec![1, 0])), v12.neg());
        assert_eq!(rewrite_normalize(&sp, &WordElem::word(vec![0, 0])), ClwElem::one(2, 0));
        // v₁v₂v₁v₂ = −v₁²v₂² = −1.
        assert_eq!(rewrite_normalize(&sp, &WordElem::word(vec![0, 1, 0, 1])), ClwElem::scalar(2, 0, s(-1)));

        // Letters 0, 1 are ξ₁, ξ¹ with ω(ξ₁, ξ¹) = 1.
        let sp = SuperSpace::witt(0, false, 1);
        let x = ClwElem::from_sym(0, &SymElem::word(2, &[0, 1]));
        assert_eq!(rewrite_normalize(&sp, &WordElem::word(vec![1, 0])), x.sub(&ClwElem::one(0, 2)));
    }

    #[test]
    fn product_examples() {
        let sp = SuperSpace::witt(0, false, 1);
        let lo = ClwElem::odd_basis(0, 2, 0);
        let hi = ClwElem::odd_basis(0, 2, 1);
        let expected = ClwElem::from_sym(0, &SymElem::word(2, &[0, 1])).add(&ClwElem::one(0, 2));
        assert_eq!(oracle_mul(&sp, &lo, &hi).unwrap(), expected);

        let sp = SuperSpace::euclidean(2, 1);
        let v1 = ClwElem::even_basis(2, 2, 0);
        let v2 = ClwElem::even_basis(2, 2, 1);
        assert_eq!(oracle_mul(&sp, &v1, &v2).unwrap(), clw_mul(&sp, &v1, &v2).unwrap());
        let y = v1.add(&ClwElem::odd_basis(2, 2, 1).scale(&s(3)));
        assert_eq!(oracle_mul(&sp, &ClwElem::one(2, 2), &y).unwrap(), y);
    }

    #[test]
    fn strategies_agree() {
        let sp = SuperSpace::witt(1, true, 1);
        let w = WordElem::word(vec![4, 2, 0, 3, 1, 0]);
        let a = Oracle::with_strategy(&sp, Strategy::Leftmost).rewrite_normalize(&w);
        let b = Oracle::with_strategy(&sp, Strategy::Rightmost).rewrite_normalize(&w);
        let c = Oracle::with_strategy(&sp, Strategy::Random(7)).rewrite_normalize(&w);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn expansion_round_trips() {
        let sp = SuperSpace::witt(1, false, 1);
        let x = ClwElem::tensor(&ExtElem::word(2, &[0, 1]), &SymElem::word(2, &[0, 0, 1]));
        assert_eq!(rewrite_normalize(&sp, &expand(&x)), x);
    }
}
