//! The Clifford algebra `CL(V₀)` carried by [`ExtElem`]: the product through
//! generalized insertions, brackets, the shifted inner product and the
//! `o(V) ≅ Λ²V` correspondence.

use crate::error::{Error, Result};
use crate::exterior::{self, graded_blade, Blade, ExtElem};
use crate::linalg::{self, Matrix, Solution};
use crate::parity::Bracket;
use crate::scalar::Scalar;
use crate::space::SuperSpace;

fn check(space: &SuperSpace, x: &ExtElem) -> Result<()> {
    space.check_dims(x.dim(), space.n1())
}

/// `xy = i_x(y)` for odd-order `x` and `i'_x(y)` for even-order `x`,
/// extended over the terms of `x`.
pub fn cl_mul(space: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<ExtElem> {
    check(space, x)?;
    check(space, y)?;
    let mut out = ExtElem::zero(y.dim());
    for (a, c) in x.terms() {
        let k = a.order();
        for l in 0..=k {
            // Even order uses the alternating sum.
            let negative = k % 2 == 0 && l % 2 == 1;
            let term = graded_blade(space, *a, l, y);
            if !term.is_zero() {
                out = out.add(&term.scale(&exterior::sign_scalar(negative, c)));
            }
        }
    }
    Ok(out)
}

/// Lie bracket, or the super bracket distributed over parity components
/// (parity = order mod 2).
pub fn cl_bracket(space: &SuperSpace, x: &ExtElem, y: &ExtElem, kind: Bracket) -> Result<ExtElem> {
    let xy = cl_mul(space, x, y)?;
    match kind {
        Bracket::Lie => Ok(xy.sub(&cl_mul(space, y, x)?)),
        Bracket::Super => {
            let mut out = xy;
            for px in parity_parts(x) {
                for py in parity_parts(y) {
                    let yx = cl_mul(space, &py.1, &px.1)?;
                    let s = if px.0 * py.0 == 1 { Scalar::one() } else { -Scalar::one() };
                    out = out.add(&yx.scale(&s));
                }
            }
            Ok(out)
        }
    }
}

/// Nonzero even and odd components.
pub fn parity_parts(x: &ExtElem) -> Vec<(usize, ExtElem)> {
    let mut even = ExtElem::zero(x.dim());
    let mut odd = ExtElem::zero(x.dim());
    for (b, c) in x.terms() {
        let target = if b.order() % 2 == 0 { &mut even } else { &mut odd };
        target.add_term(*b, c.clone());
    }
    [(0, even), (1, odd)].into_iter().filter(|(_, e)| !e.is_zero()).collect()
}

/// `⟨x, y⟩_new = ⟨x^opp, y⟩`.
pub fn cl_inner_new(space: &SuperSpace, x: &ExtElem, y: &ExtElem) -> Result<Scalar> {
    exterior::inner(space, &x.opp(), y)
}

fn require_order(x: &ExtElem, k: usize) -> Result<()> {
    match x.homogeneous_order() {
        _ if x.is_zero() => Ok(()),
        Some(o) if o == k => Ok(()),
        Some(o) => Err(Error::WrongOrder { expected: k, found: o }),
        None => Err(Error::NotHomogeneous),
    }
}

/// `ad(y)(x) = [y, x] = −2 i⁽¹⁾_y x` for `y` of order 2.
pub fn cl_ad(space: &SuperSpace, y: &ExtElem, x: &ExtElem) -> Result<ExtElem> {
    require_order(y, 2)?;
    if y.is_zero() {
        check(space, x)?;
        return Ok(ExtElem::zero(x.dim()));
    }
    Ok(exterior::insert_graded(space, y, 1, x)?.scale(&Scalar::from(-2)))
}

/// Order-2 basis words `e_a∧e_b`, `a < b`.
fn bivector_basis(n: usize) -> Vec<Blade> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push(Blade((1 << a) | (1 << b)));
        }
    }
    out
}

/// The matrix of an order-1-preserving map `v_j ↦ f(v_j)` in the convention
/// `T[i][j]` = coefficient of `v_i` in `T(v_j)`.
fn matrix_on_vectors(n: usize, f: impl Fn(usize) -> Result<ExtElem>) -> Result<Matrix> {
    let mut t = linalg::zeros(n, n);
    for j in 0..n {
        let img = f(j)?;
        for (b, c) in img.terms() {
            if b.order() != 1 {
                return Err(Error::Shape("image of a vector is not a vector".into()));
            }
            t[b.indices().next().expect("order 1")][j] = c.clone();
        }
    }
    Ok(t)
}

/// Whether `⟨Tv, w⟩ + ⟨v, Tw⟩ = 0`, i.e. `TᵀG + GT = 0`.
pub fn is_in_o(space: &SuperSpace, t: &Matrix) -> bool {
    let n = space.n0();
    if !linalg::is_square(t, n) {
        return false;
    }
    let tg = linalg::matmul(&linalg::transpose(t), space.gram());
    let gt = linalg::matmul(space.gram(), t);
    (0..n).all(|i| (0..n).all(|j| (&tg[i][j] + &gt[i][j]).is_zero()))
}

/// The unique `y ∈ Λ²V` with `[y, v] = T(v)` for all `v`.
pub fn o_embed(space: &SuperSpace, t: &Matrix) -> Result<ExtElem> {
    let n = space.n0();
    if !linalg::is_square(t, n) {
        return Err(Error::Shape(format!("expected a {n}×{n} matrix")));
    }
    if !space.even_nondegenerate() {
        return Err(Error::Degenerate("symmetric form on the even part"));
    }
    if !is_in_o(space, t) {
        return Err(Error::NotInAlgebra("o(V)"));
    }
    let basis = bivector_basis(n);
    // Column u holds ad(basis[u]) on every basis vector, flattened.
    let cols: Vec<Matrix> = basis
        .iter()
        .map(|b| {
            let y = ExtElem::blade(n, *b, Scalar::one());
            matrix_on_vectors(n, |j| cl_ad(space, &y, &ExtElem::basis(n, j)))
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
    solve_into(&a, &rhs, "o(V)", |coeffs| {
        let mut y = ExtElem::zero(n);
        for (b, c) in basis.iter().zip(coeffs) {
            y.add_term(*b, c);
        }
        y
    })
}

pub(crate) fn solve_into<T>(a: &Matrix, rhs: &[Scalar], algebra: &'static str, build: impl FnOnce(Vec<Scalar>) -> T) -> Result<T> {
    match linalg::solve(a, rhs) {
        Solution::Unique(x) => Ok(build(x)),
        Solution::Inconsistent => Err(Error::NotInAlgebra(algebra)),
        Solution::Underdetermined => Err(Error::Degenerate("embedding is not unique")),
    }
}

/// Matrix of `ad(y)|_V` for `y` of order 2.
pub fn o_project(space: &SuperSpace, y: &ExtElem) -> Result<Matrix> {
    check(space, y)?;
    require_order(y, 2)?;
    let n = space.n0();
    matrix_on_vectors(n, |j| cl_bracket(space, y, &ExtElem::basis(n, j), Bracket::Lie))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(sp: &SuperSpace, idx: &[usize]) -> ExtElem {
        ExtElem::word(sp.n0(), idx)
    }

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    #[test]
    fn product_examples() {
        let sp = SuperSpace::euclidean(3, 0);
        assert_eq!(cl_mul(&sp, &e(&sp, &[0]), &e(&sp, &[0])).unwrap(), ExtElem::one(3));
        assert_eq!(cl_mul(&sp, &e(&sp, &[0]), &e(&sp, &[1])).unwrap(), e(&sp, &[0, 1]));
        let v12 = e(&sp, &[0, 1]);
        assert_eq!(cl_mul(&sp, &v12, &v12).unwrap(), ExtElem::scalar(3, s(-1)));
    }

    #[test]
    fn bracket_examples() {
        let sp = SuperSpace::euclidean(2, 0);
        let v1 = e(&sp, &[0]);
        let v12 = e(&sp, &[0, 1]);
        assert_eq!(cl_bracket(&sp, &v1, &v12, Bracket::Super).unwrap(), e(&sp, &[1]).scale(&s(2)));
        assert_eq!(cl_bracket(&sp, &v1, &e(&sp, &[1]), Bracket::Lie).unwrap(), v12.scale(&s(2)));
        let x = v12.add(&v1);
        assert!(cl_bracket(&sp, &x, &x, Bracket::Lie).unwrap().is_zero());
    }

    #[test]
    fn inner_new_examples() {
        let sp = SuperSpace::euclidean(2, 0);
        assert_eq!(cl_inner_new(&sp, &e(&sp, &[0]), &e(&sp, &[0])).unwrap(), s(1));
        assert_eq!(cl_inner_new(&sp, &e(&sp, &[0, 1]), &e(&sp, &[0, 1])).unwrap(), s(-1));
        assert_eq!(cl_inner_new(&sp, &ExtElem::one(2), &ExtElem::one(2)).unwrap(), s(1));
    }

    #[test]
    fn ad_of_cartan_generator() {
        // e1 = 0, e1* = 1.
        let sp = SuperSpace::witt(1, false, 0);
        let h = e(&sp, &[0, 1]).scale(&Scalar::rational(1, 2));
        assert_eq!(cl_ad(&sp, &h, &e(&sp, &[0])).unwrap(), e(&sp, &[0]));
        assert_eq!(cl_ad(&sp, &h, &e(&sp, &[1])).unwrap(), e(&sp, &[1]).neg());
        assert!(cl_ad(&sp, &h, &ExtElem::one(2)).unwrap().is_zero());
        assert_eq!(cl_ad(&sp, &e(&sp, &[0]), &ExtElem::one(2)), Err(Error::WrongOrder { expected: 2, found: 1 }));
    }

    #[test]
    fn o_embedding_examples() {
        let sp = SuperSpace::witt(1, false, 0);
        let h = e(&sp, &[0, 1]).scale(&Scalar::rational(1, 2));
        let t = o_project(&sp, &h).unwrap();
        assert_eq!(t, vec![vec![s(1), s(0)], vec![s(0), s(-1)]]);
        assert_eq!(o_embed(&sp, &t).unwrap(), h);
        assert!(o_embed(&sp, &linalg::zeros(2, 2)).unwrap().is_zero());
        assert_eq!(o_embed(&sp, &linalg::identity(2)), Err(Error::NotInAlgebra("o(V)")));
    }
}
