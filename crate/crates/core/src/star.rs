//! Star structures induced on `ΛV₀`, `∨V₁` and `CLW(V)` by a star pairing
//! on the basis, and the Hermitian form `(X|Y)`.
//!
//! `(X|Y)` is linear in the first argument and conjugate-linear in the
//! second.

use crate::clw::{self, ClwElem, ClwKey};
use crate::error::{Error, Result};
use crate::exterior::{self, ExtElem};
use crate::parity;
use crate::scalar::Scalar;
use crate::space::{StarPairing, SuperSpace};
use crate::symmetric::{Mono, SymElem};

/// A space known to carry a compatible star pairing.
#[derive(Clone, Copy, Debug)]
pub struct StarContext<'a> {
    space: &'a SuperSpace,
    pairing: &'a StarPairing,
}

impl<'a> StarContext<'a> {
    /// Compatibility was checked when the pairing was attached.
    pub fn new(space: &'a SuperSpace) -> Result<Self> {
        let pairing = space.star().ok_or(Error::NoStarPairing)?;
        Ok(StarContext { space, pairing })
    }

    pub fn space(&self) -> &'a SuperSpace {
        self.space
    }

    /// `(x₁∧⋯∧x_k)* = x_k*∧⋯∧x₁*`, conjugate-linear.
    pub fn star_ext(&self, x: &ExtElem) -> Result<ExtElem> {
        self.space.check_dims(x.dim(), self.space.n1())?;
        let n = x.dim();
        let mut out = ExtElem::zero(n);
        for (b, c) in x.terms() {
            let mut coeff = c.conj();
            let mut images = Vec::with_capacity(b.order());
            for i in b.indices() {
                let (target, ci) = &self.pairing.even[i];
                coeff *= ci;
                images.push(*target);
            }
            images.reverse();
            let word = ExtElem::word(n, &images);
            out = out.add(&word.scale(&coeff));
        }
        Ok(out)
    }

    /// `(ξ₁∨⋯∨ξ_k)* = (−1)^{k(k−1)/2} ξ₁*∨⋯∨ξ_k*`, conjugate-linear.
    pub fn star_sym(&self, x: &SymElem) -> Result<SymElem> {
        self.space.check_dims(self.space.n0(), x.dim())?;
        let n = x.dim();
        let mut out = SymElem::zero(n);
        for (m, c) in x.terms() {
            let (mono, coeff) = self.star_mono(m, c);
            out.add_term(mono, coeff);
        }
        Ok(out)
    }

    fn star_mono(&self, m: &Mono, c: &Scalar) -> (Mono, Scalar) {
        let mut coeff = exterior::sign_scalar(exterior::reversal_negative(m.order()), &c.conj());
        let mut out = Mono::unit(m.0.len());
        for i in m.word() {
            let (target, ci) = &self.pairing.odd[i];
            coeff *= ci;
            out.0[*target] += 1;
        }
        (out, coeff)
    }

    /// `(x⊗ξ)* = (−1)^{ε(x)ε(ξ)} x*⊗ξ*`.
    pub fn star_clw(&self, x: &ClwElem) -> Result<ClwElem> {
        self.space.check_dims(x.n0(), x.n1())?;
        let (n0, n1) = (x.n0(), x.n1());
        let mut out = ClwElem::zero(n0, n1);
        for (k, c) in x.terms() {
            let ext = self.star_ext(&ExtElem::blade(n0, k.ext, Scalar::one()))?;
            let (mono, sc) = self.star_mono(&k.sym, &Scalar::one());
            let mut coeff = &c.conj() * &sc;
            if parity::star_negative(k.ext_order(), k.sym_order()) {
                coeff = -coeff;
            }
            for (b, cb) in ext.terms() {
                out.add_term(ClwKey { ext: *b, sym: mono.clone() }, &coeff * cb);
            }
        }
        Ok(out)
    }

    /// `(X|Y) = ⟨X, Y*⟩`, times `i` on the physically odd components.
    pub fn hermitian(&self, x: &ClwElem, y: &ClwElem) -> Result<Scalar> {
        let ys = self.star_clw(y)?;
        let mut acc = Scalar::zero();
        for (p, xp) in x.physical_parts() {
            let yp = ys.filter(|k| k.physical_parity() == p);
            let v = clw::inner(self.space, &xp, &yp)?;
            acc += &(if p == 1 { &v * &Scalar::i() } else { v });
        }
        Ok(acc)
    }

    /// `(x|y) = ⟨x, y*⟩` on the exterior algebra.
    pub fn hermitian_ext(&self, x: &ExtElem, y: &ExtElem) -> Result<Scalar> {
        exterior::inner(self.space, x, &self.star_ext(y)?)
    }

    /// `(ξ|η) = ⟨ξ, η*⟩`, times `i` on odd orders.
    pub fn hermitian_sym(&self, x: &SymElem, y: &SymElem) -> Result<Scalar> {
        let ys = self.star_sym(y)?;
        let mut acc = Scalar::zero();
        for (m, c) in x.terms() {
            let v = crate::symmetric::inner(self.space, &SymElem::mono(m.clone(), c.clone()), &ys)?;
            acc += &(if m.order() % 2 == 1 { &v * &Scalar::i() } else { v });
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn ext_examples() {
        let sp = SuperSpace::euclidean(2, 0);
        let st = StarContext::new(&sp).unwrap();
        let v1 = ExtElem::basis(2, 0);
        assert_eq!(st.star_ext(&v1).unwrap(), v1);
        let v12 = ExtElem::word(2, &[0, 1]);
        assert_eq!(st.star_ext(&v12).unwrap(), v12.neg());
        assert_eq!(st.star_ext(&v1.scale(&Scalar::i())).unwrap(), v1.scale(&-Scalar::i()));
    }

    #[test]
    fn sym_examples() {
        // x1 = ξ₁, x1^ = ξ¹ with ξ₁* = −i ξ¹.
        let sp = SuperSpace::witt(0, false, 1);
        let st = StarContext::new(&sp).unwrap();
        let minus_i = -Scalar::i();
        assert_eq!(st.star_sym(&SymElem::basis(2, 0)).unwrap(), SymElem::basis(2, 1).scale(&minus_i));
        // (−1)^{1} from the reversal sign times (−i)² = −1.
        assert_eq!(st.star_sym(&SymElem::word(2, &[0, 0])).unwrap(), SymElem::word(2, &[1, 1]));
        let c = Scalar::parse("2 + 3*i").unwrap();
        let x = SymElem::basis(2, 0).scale(&c);
        assert_eq!(st.star_sym(&x).unwrap(), st.star_sym(&SymElem::basis(2, 0)).unwrap().scale(&c.conj()));
    }

    #[test]
    fn clw_examples() {
        let sp = SuperSpace::euclidean(1, 1);
        let st = StarContext::new(&sp).unwrap();
        let v1 = ClwElem::even_basis(1, 2, 0);
        assert_eq!(st.star_clw(&v1).unwrap(), v1);
        let x = ClwElem::tensor(&ExtElem::basis(1, 0), &SymElem::basis(2, 0));
        let expected = ClwElem::tensor(&ExtElem::basis(1, 0), &SymElem::basis(2, 1)).scale(&Scalar::i());
        assert_eq!(st.star_clw(&x).unwrap(), expected);
        assert_eq!(st.star_clw(&ClwElem::one(1, 2)).unwrap(), ClwElem::one(1, 2));
    }

    #[test]
    fn hermitian_examples() {
        let sp = SuperSpace::euclidean(1, 1);
        let st = StarContext::new(&sp).unwrap();
        let v1 = ClwElem::even_basis(1, 2, 0);
        let xi = ClwElem::odd_basis(1, 2, 0);
        assert_eq!(st.hermitian(&v1, &v1).unwrap(), s(1));
        // ⟨ξ₁, ξ₁*⟩ = ⟨ξ₁, −i ξ¹⟩ = −i, and i·(−i) = 1.
        assert_eq!(st.hermitian(&xi, &xi).unwrap(), s(1));
        assert_eq!(st.hermitian(&v1, &xi).unwrap(), s(0));
    }

    #[test]
    fn missing_pairing_is_an_error() {
        let sp = SuperSpace::new(1, 0, vec![vec![s(1)]], vec![], true).unwrap();
        assert_eq!(StarContext::new(&sp).err(), Some(Error::NoStarPairing));
    }
}
