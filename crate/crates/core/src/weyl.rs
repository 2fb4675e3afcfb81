//! The Weyl algebra `WL(V₁)` carried by [`SymElem`]: the product
//! `ηφ = i_η(φ)`, brackets and the `sp(V) ≅ ∨²V` correspondence.

use crate::error::{Error, Result};
use crate::exterior::Variant;
use crate::linalg::{self, Matrix};
use crate::parity::Bracket;
use crate::scalar::Scalar;
use crate::space::SuperSpace;
use crate::symmetric::{self, Mono, SymElem};

fn check(space: &SuperSpace, x: &SymElem) -> Result<()> {
    space.check_dims(space.n0(), x.dim())
}

pub fn wl_mul(space: &SuperSpace, x: &SymElem, y: &SymElem) -> Result<SymElem> {
    symmetric::insert_full(space, x, y, Variant::Plain)
}

/// Nonzero even and odd components (parity = order mod 2).
pub fn parity_parts(x: &SymElem) -> Vec<(usize, SymElem)> {
    let mut even = SymElem::zero(x.dim());
    let mut odd = SymElem::zero(x.dim());
    for (m, c) in x.terms() {
        let target = if m.order() % 2 == 0 { &mut even } else { &mut odd };
        target.add_term(m.clone(), c.clone());
    }
    [(0, even), (1, odd)].into_iter().filter(|(_, e)| !e.is_zero()).collect()
}

/// Lie bracket, or the super bracket distributed over parity components.
pub fn wl_bracket(space: &SuperSpace, x: &SymElem, y: &SymElem, kind: Bracket) -> Result<SymElem> {
    let xy = wl_mul(space, x, y)?;
    match kind {
        Bracket::Lie => Ok(xy.sub(&wl_mul(space, y, x)?)),
        Bracket::Super => {
            let mut out = xy;
            for (px, xp) in parity_parts(x) {
                for (py, yp) in parity_parts(y) {
                    let yx = wl_mul(space, &yp, &xp)?;
                    let s = if px * py == 1 { Scalar::one() } else { -Scalar::one() };
                    out = out.add(&yx.scale(&s));
                }
            }
            Ok(out)
        }
    }
}

fn require_order(x: &SymElem, k: usize) -> Result<()> {
    match x.homogeneous_order() {
        _ if x.is_zero() => Ok(()),
        Some(o) if o == k => Ok(()),
        Some(o) => Err(Error::WrongOrder { expected: k, found: o }),
        None => Err(Error::NotHomogeneous),
    }
}

/// `ad(ξ)(η) = 2 i⁽¹⁾_ξ η` for `ξ` of order 2.
pub fn wl_ad(space: &SuperSpace, xi: &SymElem, eta: &SymElem) -> Result<SymElem> {
    require_order(xi, 2)?;
    if xi.is_zero() {
        check(space, eta)?;
        return Ok(SymElem::zero(eta.dim()));
    }
    Ok(symmetric::insert_graded(space, xi, 1, eta)?.scale(&Scalar::from(2)))
}

fn quadratic_basis(n: usize) -> Vec<Mono> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            out.push(Mono::from_word(n, &[a, b]));
        }
    }
    out
}

fn matrix_on_vectors(n: usize, f: impl Fn(usize) -> Result<SymElem>) -> Result<Matrix> {
    let mut t = linalg::zeros(n, n);
    for j in 0..n {
        for (m, c) in f(j)?.terms() {
            if m.order() != 1 {
                return Err(Error::Shape("image of a vector is not a vector".into()));
            }
            t[m.word()[0]][j] = c.clone();
        }
    }
    Ok(t)
}

/// Whether `ω(Tη, φ) + ω(η, Tφ) = 0`, i.e. `TᵀW + WT = 0`.
pub fn is_in_sp(space: &SuperSpace, t: &Matrix) -> bool {
    let n = space.n1();
    if !linalg::is_square(t, n) {
        return false;
    }
    let tw = linalg::matmul(&linalg::transpose(t), space.omega());
    let wt = linalg::matmul(space.omega(), t);
    (0..n).all(|i| (0..n).all(|j| (&tw[i][j] + &wt[i][j]).is_zero()))
}

/// The unique `ξ ∈ ∨²V` with `[ξ, η] = T(η)` for all `η`.
pub fn sp_embed(space: &SuperSpace, t: &Matrix) -> Result<SymElem> {
    let n = space.n1();
    if !linalg::is_square(t, n) {
        return Err(Error::Shape(format!("expected a {n}×{n} matrix")));
    }
    if !space.odd_nondegenerate() {
        return Err(Error::Degenerate("alternating form on the odd part"));
    }
    if !is_in_sp(space, t) {
        return Err(Error::NotInAlgebra("sp(V)"));
    }
    let basis = quadratic_basis(n);
    let cols: Vec<Matrix> = basis
        .iter()
        .map(|m| {
            let xi = SymElem::mono(m.clone(), Scalar::one());
            matrix_on_vectors(n, |j| wl_ad(space, &xi, &SymElem::basis(n, j)))
        })
        .collect::<Result<_>>()?;
    let mut a = linalg::zeros(n * n, basis.len());
    let mut rhs = vec![Scalar::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            for (u, col) in cols.iter().enumerate() {
                a[i * n + j][u] = col[i][j].clone();
            }
            rhs[i * n + j] = t[i][j].clone();
        }
    }
    crate::clifford::solve_into(&a, &rhs, "sp(V)", |coeffs| {
        let mut xi = SymElem::zero(n);
        for (m, c) in basis.iter().zip(coeffs) {
            xi.add_term(m.clone(), c);
        }
        xi
    })
}

/// Matrix of `ad(ξ)|_V` for `ξ` of order 2.
pub fn sp_project(space: &SuperSpace, xi: &SymElem) -> Result<Matrix> {
    check(space, xi)?;
    require_order(xi, 2)?;
    let n = space.n1();
    matrix_on_vectors(n, |j| wl_bracket(space, xi, &SymElem::basis(n, j), Bracket::Lie))
}

#[cfg(test)]
mod tests {
    use super::*;

    // (0|2): x1 = ξ₁, x1^ = ξ¹.
    fn sp() -> SuperSpace {
        SuperSpace::witt(0, false, 1)
    }

    fn w(idx: &[usize]) -> SymElem {
        SymElem::word(2, idx)
    }

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn product_examples() {
        let sp = sp();
        let one = SymElem::one(2);
        assert_eq!(wl_mul(&sp, &w(&[0]), &w(&[1])).unwrap(), w(&[0, 1]).add(&one));
        assert_eq!(wl_mul(&sp, &w(&[1]), &w(&[0])).unwrap(), w(&[0, 1]).sub(&one));
        assert_eq!(wl_mul(&sp, &w(&[0]), &w(&[0])).unwrap(), w(&[0, 0]));
    }

    #[test]
    fn bracket_examples() {
        let sp = sp();
        assert_eq!(wl_bracket(&sp, &w(&[0]), &w(&[1]), Bracket::Lie).unwrap(), SymElem::scalar(2, s(2)));
        let k1 = w(&[0, 1]).scale(&Scalar::rational(1, 2));
        assert_eq!(wl_bracket(&sp, &k1, &w(&[0]), Bracket::Lie).unwrap(), w(&[0]).neg());
        let x = w(&[0, 1, 1]).add(&w(&[1]));
        assert!(wl_bracket(&sp, &x, &x, Bracket::Lie).unwrap().is_zero());
        // Odd vectors: the super bracket is the anticommutator.
        assert_eq!(wl_bracket(&sp, &w(&[0]), &w(&[1]), Bracket::Super).unwrap(), w(&[0, 1]).scale(&s(2)));
    }

    #[test]
    fn sp_embedding_examples() {
        let sp = sp();
        let k1 = w(&[0, 1]).scale(&Scalar::rational(1, 2));
        let t = sp_project(&sp, &k1).unwrap();
        assert_eq!(t, vec![vec![s(-1), s(0)], vec![s(0), s(1)]]);
        assert_eq!(sp_embed(&sp, &t).unwrap(), k1);
        assert!(sp_embed(&sp, &linalg::zeros(2, 2)).unwrap().is_zero());
        assert_eq!(sp_embed(&sp, &linalg::identity(2)), Err(Error::NotInAlgebra("sp(V)")));
    }
}
