//! The sign rules of the Clifford-Weyl superalgebra, in one place.
//!
//! A term `x ⊗ ξ` carries two parities:
//! - the internal parity `(ord x + ord ξ) mod 2` drives the graded tensor
//!   product sign when a symmetric factor passes an exterior one;
//! - the physical parity `ord ξ mod 2` is the superalgebra grading used by
//!   brackets, the inner product and the star.

/// Which commutator to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracket {
    /// `xy − yx`.
    Lie,
    /// `xy − (−1)^{p(x)p(y)} yx` for the grading at hand.
    Super,
}

/// `(−1)^{pq}` is negative.
pub fn koszul(p: usize, q: usize) -> bool {
    p % 2 == 1 && q % 2 == 1
}

/// Sign of `(x⊗ξ)(y⊗η) = ± (xy) ⊗ (ξη)`: negative when `ξ` and `y` are both
/// odd in their own algebras.
pub fn tensor_product_negative(sym_order_left: usize, ext_order_right: usize) -> bool {
    koszul(sym_order_left, ext_order_right)
}

/// Physical parity of a term with the given symmetric order.
pub fn physical(sym_order: usize) -> usize {
    sym_order % 2
}

/// Internal parity of a term.
pub fn internal(ext_order: usize, sym_order: usize) -> usize {
    (ext_order + sym_order) % 2
}

/// Sign in `(x⊗ξ)* = (−1)^{ε(x)ε(ξ)} x*⊗ξ*`.
pub fn star_negative(ext_order: usize, sym_order: usize) -> bool {
    koszul(ext_order, sym_order)
}

/// Sign in the inner product `⟨x⊗ξ, y⊗η⟩ = (−1)^{ε(ξ)ε(y)} ⟨x,y⟩_new ⟨ξ,η⟩`.
pub fn inner_negative(sym_order_left: usize, ext_order_right: usize) -> bool {
    koszul(sym_order_left, ext_order_right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert!(koszul(1, 3));
        assert!(!koszul(2, 1));
        assert!(tensor_product_negative(1, 1));
        assert_eq!(physical(3), 1);
        assert_eq!(internal(1, 1), 0);
        assert!(!star_negative(2, 1));
        assert!(inner_negative(1, 1));
    }
}
