//! Seeded generators of spaces, elements and Lie-algebra members for
//! property tests and the `check` command.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::clw::{ClwElem, ClwKey};
use crate::exterior::{Blade, ExtElem};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;
use crate::space::SuperSpace;
use crate::symmetric::{Mono, SymElem};

fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=3);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Nonzero small Gaussian rational `p/q + i·r/s`.
pub fn gaussian<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let re = small_rational(rng);
        let im = if rng.gen_bool(0.5) { small_rational(rng) } else { BigRational::from_integer(BigInt::from(0)) };
        let c = Scalar::gaussian(re, im);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Nonzero scalar with all four components possibly populated.
pub fn scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let c = Scalar::new(small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
        if !c.is_zero() {
            return c;
        }
    }
}

fn small_int<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::from(rng.gen_range(-2i64..=2))
}

/// Random non-degenerate symmetric matrix with small integer entries.
pub fn gram<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let mut g = linalg::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = small_int(rng);
                g[i][j] = v.clone();
                g[j][i] = v;
            }
        }
        if !linalg::det(&g).is_zero() {
            return g;
        }
    }
}

/// Random non-degenerate alternating matrix of even size.
pub fn omega<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    assert!(n % 2 == 0, "alternating forms need an even size");
    loop {
        let mut w = linalg::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = small_int(rng);
                w[j][i] = -&v;
                w[i][j] = v;
            }
        }
        if !linalg::det(&w).is_zero() {
            return w;
        }
    }
}

/// Space of dimension `(n0 | 2m)` with random non-degenerate forms.
pub fn space_of<R: Rng>(rng: &mut R, n0: usize, m: usize) -> SuperSpace {
    SuperSpace::new(n0, 2 * m, gram(rng, n0), omega(rng, 2 * m), true).expect("random forms are non-degenerate")
}

/// Space with `n0 ≤ max_n0` and `n1 = 2m ≤ max_n1`.
pub fn space<R: Rng>(rng: &mut R, max_n0: usize, max_n1: usize) -> SuperSpace {
    let n0 = rng.gen_range(0..=max_n0);
    let m = rng.gen_range(0..=max_n1 / 2);
    space_of(rng, n0, m)
}

fn random_blade<R: Rng>(rng: &mut R, n: usize, k: usize) -> Blade {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    Blade::from_indices(&idx[..k]).expect("distinct indices")
}

fn random_mono<R: Rng>(rng: &mut R, n: usize, k: usize) -> Mono {
    let word: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
    Mono::from_word(n, &word)
}

/// Up to `terms` terms, each of a random order in `orders`.
pub fn ext<R: Rng>(rng: &mut R, n: usize, orders: &[usize], terms: usize) -> ExtElem {
    let mut x = ExtElem::zero(n);
    let orders: Vec<usize> = orders.iter().copied().filter(|&k| k <= n).collect();
    if orders.is_empty() {
        return x;
    }
    for _ in 0..terms {
        let k = *orders.choose(rng).expect("nonempty");
        x.add_term(random_blade(rng, n, k), gaussian(rng));
    }
    x
}

pub fn ext_upto<R: Rng>(rng: &mut R, n: usize, max_order: usize, terms: usize) -> ExtElem {
    ext(rng, n, &(0..=max_order).collect::<Vec<_>>(), terms)
}

pub fn sym<R: Rng>(rng: &mut R, n: usize, orders: &[usize], terms: usize) -> SymElem {
    let mut x = SymElem::zero(n);
    let orders: Vec<usize> = orders.iter().copied().filter(|&k| n > 0 || k == 0).collect();
    if orders.is_empty() {
        return x;
    }
    for _ in 0..terms {
        let k = *orders.choose(rng).expect("nonempty");
        x.add_term(random_mono(rng, n, k), gaussian(rng));
    }
    x
}

pub fn sym_upto<R: Rng>(rng: &mut R, n: usize, max_order: usize, terms: usize) -> SymElem {
    sym(rng, n, &(0..=max_order).collect::<Vec<_>>(), terms)
}

/// Terms with ext order `r` and sym order `s` drawn so that `r + s ≤ max_order`
/// and, when `parity` is given, `s ≡ parity (mod 2)`.
pub fn clw<R: Rng>(rng: &mut R, n0: usize, n1: usize, max_order: usize, terms: usize, parity: Option<usize>) -> ClwElem {
    let mut shapes = Vec::new();
    for r in 0..=max_order.min(n0) {
        for s in 0..=max_order - r {
            if (n1 > 0 || s == 0) && parity.map_or(true, |p| s % 2 == p) {
                shapes.push((r, s));
            }
        }
    }
    let mut x = ClwElem::zero(n0, n1);
    if shapes.is_empty() {
        return x;
    }
    for _ in 0..terms {
        let (r, s) = *shapes.choose(rng).expect("nonempty");
        let key = ClwKey { ext: random_blade(rng, n0, r), sym: random_mono(rng, n1, s) };
        x.add_term(key, gaussian(rng));
    }
    x
}

/// Random `T` with `TᵀG + GT = 0`: `T = G⁻¹A` for antisymmetric `A`.
pub fn o_member<R: Rng>(rng: &mut R, space: &SuperSpace) -> Matrix {
    let n = space.n0();
    let mut a = linalg::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = small_int(rng);
            a[j][i] = -&v;
            a[i][j] = v;
        }
    }
    linalg::matmul(&linalg::inverse(space.gram()).expect("non-degenerate"), &a)
}

/// Random `T` with `TᵀW + WT = 0`: `T = W⁻¹S` for symmetric `S`.
pub fn sp_member<R: Rng>(rng: &mut R, space: &SuperSpace) -> Matrix {
    let n = space.n1();
    let mut s = linalg::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = small_int(rng);
            s[i][j] = v.clone();
            s[j][i] = v;
        }
    }
    linalg::matmul(&linalg::inverse(space.omega()).expect("non-degenerate"), &s)
}

/// Random member of `osp(V)` on `V₀ ⊕ V₁`: block-diagonal even part from
/// `o` and `sp`, odd part `[[0, C], [W⁻¹CᵀG, 0]]` for random `C`.
pub fn osp_member<R: Rng>(rng: &mut R, space: &SuperSpace) -> Matrix {
    let (n0, n1) = (space.n0(), space.n1());
    let t0 = o_member(rng, space);
    let t1 = sp_member(rng, space);
    let c: Matrix = (0..n0).map(|_| (0..n1).map(|_| small_int(rng)).collect()).collect();
    let w_inv = linalg::inverse(space.omega()).expect("non-degenerate");
    let d = linalg::matmul(&linalg::matmul(&w_inv, &linalg::transpose(&c)), space.gram());
    let mut t = linalg::zeros(n0 + n1, n0 + n1);
    for i in 0..n0 {
        for j in 0..n0 {
            t[i][j] = t0[i][j].clone();
        }
        for j in 0..n1 {
            t[i][n0 + j] = c[i][j].clone();
        }
    }
    for i in 0..n1 {
        for j in 0..n0 {
            t[n0 + i][j] = d[i][j].clone();
        }
        for j in 0..n1 {
            t[n0 + i][n0 + j] = t1[i][j].clone();
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::is_in_o;
    use crate::clw::is_in_osp;
    use crate::weyl::is_in_sp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn members_satisfy_their_defining_conditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let sp = space(&mut rng, 4, 4);
            assert!(is_in_o(&sp, &o_member(&mut rng, &sp)));
            assert!(is_in_sp(&sp, &sp_member(&mut rng, &sp)));
            assert!(is_in_osp(&sp, &osp_member(&mut rng, &sp)));
        }
    }

    #[test]
    fn parity_filter_is_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = clw(&mut rng, 3, 4, 3, 6, Some(1));
        assert!(x.terms().all(|(k, _)| k.physical_parity() == 1));
    }
}
