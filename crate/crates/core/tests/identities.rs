//! The identity catalogue, each law on 200 random instances.

use clw_core::verify::{identities, run, Law};

const CASES: usize = 200;

fn law(name: &str) -> Law {
    identities().into_iter().find(|l| l.name == name).unwrap_or_else(|| panic!("no law named {name}"))
}

macro_rules! identity_tests {
    ($($name:ident),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                run(&law(stringify!($name)), CASES, 0x5eed, None, None).unwrap();
            }
        )*

        #[test]
        fn every_catalogue_entry_has_a_test() {
            let listed = [$(stringify!($name)),*];
            let missing: Vec<_> = identities().into_iter().map(|l| l.name).filter(|n| !listed.contains(n)).collect();
            assert!(missing.is_empty(), "untested laws: {missing:?}");
        }
    };
}

identity_tests![
    wedge_involutions_respect_products,
    vector_insertion_against_involutions,
    vector_insertion_is_adjoint_to_wedge,
    multi_insertion_composes_vector_insertions,
    multi_insertion_is_adjoint_to_wedge,
    equal_order_insertion_is_inner_product,
    symmetric_vector_insertion_adjoint,
    symmetric_multi_insertion_adjoint,
    equal_order_symmetric_insertion_is_pairing,
    clifford_product_involutions,
    vector_times_multivector,
    multivector_times_vector,
    clifford_vector_super_bracket_is_twice_insertion,
    graded_insertion_swaps_arguments,
    graded_insertion_by_wedge_with_vector,
    vector_insertion_after_graded_insertion,
    graded_insertion_into_wedge_with_vector,
    generalized_insertion_by_wedge_with_vector,
    vector_insertion_after_generalized_insertion,
    generalized_insertion_into_wedge_with_vector,
    generalized_insertion_symmetry_for_equal_parity,
    generalized_insertion_symmetry_for_mixed_parity,
    clifford_super_bracket_as_odd_graded_insertions,
    order_two_bracket_as_first_graded_insertion,
    order_two_bracket_is_wedge_derivation,
    graded_insertion_adjoint,
    generalized_insertion_adjoint,
    clifford_product_adjoints,
    clifford_bracket_adjoint,
    shifted_inner_product_is_cyclic,
    shifted_inner_product_is_bracket_invariant,
    weyl_vector_bracket_is_twice_insertion,
    weyl_vector_times_multivector,
    weyl_symmetrized_vector_product,
    symmetric_graded_insertion_by_vee_with_vector,
    symmetric_vector_insertion_after_graded_insertion,
    symmetric_graded_insertion_into_vee_with_vector,
    symmetric_generalized_insertion_sums,
    symmetric_vector_generalized_insertion_is_product,
    symmetric_generalized_insertion_by_vee_with_vector,
    symmetric_vector_insertion_after_generalized_insertion,
    symmetric_generalized_insertion_into_vee_with_vector,
    weyl_bracket_as_odd_graded_insertions,
    weyl_order_two_bracket_is_first_graded_insertion,
    symmetric_graded_insertion_adjoint,
    weyl_product_moves_across_inner_product,
    weyl_inner_product_is_associative,
    weyl_inner_product_is_super_invariant,
    clw_lie_bracket_of_simple_tensors_without_signs,
    clw_super_bracket_of_simple_tensors,
    clw_super_bracket_with_even_left_factors,
    clw_super_bracket_with_odd_left_factors,
    clw_inner_product_of_simple_tensors,
    clw_product_moves_across_inner_product,
    clw_inner_product_of_simple_products,
    clw_inner_product_is_super_invariant,
    stars_are_involutions,
    hermitian_form_is_sesquilinear,
    star_preserves_pairings,
    hermitian_form_on_vectors_under_star,
    exterior_star_reverses_wedge,
    clifford_star_negates_brackets,
    symmetric_star_of_vector_products,
    symmetric_star_reverses_vee_with_sign,
    weyl_star_negates_super_brackets,
    clw_star_of_simple_tensors,
    clw_hermitian_form_under_star,
    clw_hermitian_form_of_simple_tensors,
];
