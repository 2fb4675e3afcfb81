//! Root and weight tables against closed forms and brute-force counts.

use std::collections::BTreeMap;

use clw_core::roots::{cartan_basis, closed_form, roots, verify_eigens, weights_on, Rep};
use clw_core::space::WeightVector;
use clw_core::SuperSpace;

#[test]
fn roots_match_closed_forms_with_certificates() {
    for n in 0..=3 {
        for m in 0..=3 {
            for odd in [false, true] {
                let sp = SuperSpace::witt(n, odd, m);
                let r = roots(&sp).unwrap();
                let (even, odd_roots) = closed_form(n, odd, m);
                assert_eq!(r.even.weights(), even, "even roots, n={n} odd={odd} m={m}");
                let got: Vec<_> = r.odd.entries.iter().map(|e| (e.weight.clone(), e.isotropic.unwrap())).collect();
                assert_eq!(got, odd_roots, "odd roots, n={n} odd={odd} m={m}");
                let cartan = cartan_basis(&sp).unwrap();
                assert!(verify_eigens(&sp, &r.even, &cartan).is_empty());
                assert!(verify_eigens(&sp, &r.odd, &cartan).is_empty());
            }
        }
    }
}

#[test]
fn root_dimensions_add_up() {
    for n in 0..=3 {
        for m in 0..=3 {
            let sp = SuperSpace::witt(n, false, m);
            let r = roots(&sp).unwrap();
            let (d0, d1) = (2 * n, 2 * m);
            assert_eq!(r.even.total_multiplicity() + n + m, d0 * (d0.max(1) - 1) / 2 + d1 * (d1 + 1) / 2);
            assert_eq!(r.odd.total_multiplicity(), d0 * d1);
            let neg: Vec<WeightVector> = r.even.weights().iter().map(|w| w.scaled(-1)).collect();
            assert!(neg.iter().all(|w| r.even.contains(w)));
        }
    }
}

/// Multiplicity of `Σ ±Hⁱ` over choices of `m` distinct signed basis
/// vectors `e_i`, `e_i*` (and `e₀` of weight zero).
fn ext_brute_force(n: usize, odd: bool, m: usize) -> BTreeMap<Vec<i64>, usize> {
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut w = vec![0; n];
            w[i] = s;
            vectors.push(w);
        }
    }
    if odd {
        vectors.push(vec![0; n]);
    }
    let mut out = BTreeMap::new();
    for mask in 0u32..1 << vectors.len() {
        if mask.count_ones() as usize != m {
            continue;
        }
        let mut w = vec![0; n];
        for (b, v) in vectors.iter().enumerate() {
            if mask >> b & 1 == 1 {
                for i in 0..n {
                    w[i] += v[i];
                }
            }
        }
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

#[test]
fn exterior_weight_multiplicities_match_enumeration() {
    for n in 0..=3 {
        for odd in [false, true] {
            for m in 0..=4 {
                let t = weights_on(&SuperSpace::witt(n, odd, 0), Rep::Ext(m)).unwrap();
                let got: BTreeMap<Vec<i64>, usize> = t.entries.iter().map(|e| (e.weight.h.clone(), e.multiplicity)).collect();
                assert_eq!(got, ext_brute_force(n, odd, m), "n={n} odd={odd} m={m}");
            }
        }
    }
}

#[test]
fn symmetric_weight_sets_follow_bound_and_parity() {
    for mm in 1..=3 {
        for order in 0..=4 {
            let t = weights_on(&SuperSpace::witt(0, false, mm), Rep::Sym(order)).unwrap();
            let mut expected = Vec::new();
            let range = -(order as i64)..=order as i64;
            let mut stack = vec![Vec::new()];
            while let Some(a) = stack.pop() {
                if a.len() == mm {
                    let s: i64 = a.iter().map(|x: &i64| x.abs()).sum();
                    if s <= order as i64 && (order as i64 - s) % 2 == 0 {
                        expected.push(WeightVector { h: vec![], k: a });
                    }
                    continue;
                }
                for x in range.clone() {
                    let mut b = a.clone();
                    b.push(x);
                    stack.push(b);
                }
            }
            expected.sort_by(|a, b| b.cmp(a));
            assert_eq!(t.weights(), expected, "m={mm} order={order}");
        }
    }
}
