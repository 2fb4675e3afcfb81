//! Insertion-formula products against the rewrite oracle.

use clw_core::clifford::cl_mul;
use clw_core::clw::clw_mul;
use clw_core::oracle::{Oracle, Strategy, WordElem};
use clw_core::random;
use clw_core::weyl::wl_mul;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn clw_product_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let sp = random::space(&mut rng, 4, 4);
        let mut oracle = Oracle::new(&sp);
        for _ in 0..5 {
            let x = random::clw(&mut rng, sp.n0(), sp.n1(), 3, 3, None);
            let y = random::clw(&mut rng, sp.n0(), sp.n1(), 3, 3, None);
            assert_eq!(clw_mul(&sp, &x, &y).unwrap(), oracle.mul(&x, &y).unwrap(), "x = {}, y = {}", x.to_text(&sp), y.to_text(&sp));
        }
    }
}

#[test]
fn clifford_product_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let n0 = rng.gen_range(1..=5);
        let sp = random::space_of(&mut rng, n0, 0);
        let mut oracle = Oracle::new(&sp);
        for _ in 0..5 {
            let x = random::ext_upto(&mut rng, sp.n0(), 4, 3);
            let y = random::ext_upto(&mut rng, sp.n0(), 4, 3);
            assert_eq!(cl_mul(&sp, &x, &y).unwrap(), oracle.mul_ext(&x, &y).unwrap());
        }
    }
}

#[test]
fn weyl_product_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let m = rng.gen_range(1..=2);
        let sp = random::space_of(&mut rng, 0, m);
        let mut oracle = Oracle::new(&sp);
        for _ in 0..5 {
            let x = random::sym_upto(&mut rng, sp.n1(), 4, 3);
            let y = random::sym_upto(&mut rng, sp.n1(), 4, 3);
            assert_eq!(wl_mul(&sp, &x, &y).unwrap(), oracle.mul_sym(&x, &y).unwrap());
        }
    }
}

#[test]
fn normal_form_is_independent_of_rewrite_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for case in 0..100 {
        let sp = random::space(&mut rng, 3, 4);
        let letters = sp.n0() + sp.n1();
        if letters == 0 {
            continue;
        }
        let len = rng.gen_range(0..=6);
        let w = WordElem::word((0..len).map(|_| rng.gen_range(0..letters) as u16).collect());
        let a = Oracle::with_strategy(&sp, Strategy::Leftmost).rewrite_normalize(&w);
        let b = Oracle::with_strategy(&sp, Strategy::Rightmost).rewrite_normalize(&w);
        let c = Oracle::with_strategy(&sp, Strategy::Random(case)).rewrite_normalize(&w);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}

#[test]
fn oracle_product_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..30 {
        let sp = random::space(&mut rng, 3, 2);
        let mut oracle = Oracle::new(&sp);
        let x = random::clw(&mut rng, sp.n0(), sp.n1(), 2, 2, None);
        let y = random::clw(&mut rng, sp.n0(), sp.n1(), 2, 2, None);
        let z = random::clw(&mut rng, sp.n0(), sp.n1(), 2, 2, None);
        let xy = oracle.mul(&x, &y).unwrap();
        let yz = oracle.mul(&y, &z).unwrap();
        assert_eq!(oracle.mul(&xy, &z).unwrap(), oracle.mul(&x, &yz).unwrap());
    }
}
