//! Associativity, unit, super-Jacobi and embedding round trips.

use clw_core::verify::{algebra_laws, embeddings, run};

#[test]
fn algebra_laws_hold() {
    for law in algebra_laws() {
        run(&law, 100, 7, None, None).unwrap();
    }
}

#[test]
fn embeddings_round_trip() {
    for law in embeddings() {
        run(&law, 50, 8, None, None).unwrap();
    }
}

#[test]
fn order_two_brackets_preserve_order() {
    use clw_core::clw::{order_project, super_bracket};
    use clw_core::random;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let sp = random::space(&mut rng, 3, 4);
        let x = order_project(&random::clw(&mut rng, sp.n0(), sp.n1(), 2, 3, None), 2);
        for k in 0..=3 {
            let y = order_project(&random::clw(&mut rng, sp.n0(), sp.n1(), k, 3, None), k);
            let b = super_bracket(&sp, &x, &y).unwrap();
            assert_eq!(order_project(&b, k), b);
        }
    }
}
