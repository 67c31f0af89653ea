//! Statement-to-test traceability. Each in-scope statement appears once,
//! keyed by a short label, with the operation that realizes it and the test
//! that checks it. `TRACEABILITY.md` renders the same table.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceEntry {
    pub label: &'static str,
    pub statement: &'static str,
    pub operation: &'static str,
    pub test: &'static str,
}

const fn e(label: &'static str, statement: &'static str, operation: &'static str, test: &'static str) -> TraceEntry {
    TraceEntry {
        label,
        statement,
        operation,
        test,
    }
}

/// Labels of every in-scope statement, in table order.
pub const MANIFEST: [&str; 24] = [
    "unit-regular",
    "counit-regular",
    "morphisms-regular",
    "tensor-algebra-separable-iff-unit-split",
    "tensor-coalgebra-separable-iff-counit-split",
    "section-of-hom-map",
    "unit-summand-algebra-coalgebra",
    "unit-simple-iff-one-object",
    "fifteen-conditions",
    "associated-idempotent",
    "distinct-components-orthogonal",
    "subcategory-multiring",
    "lj-separable-frobenius",
    "rj-lax-colax",
    "corner-algebra-in-cj",
    "corner-inclusion-algebra-morphism",
    "support-theorem",
    "corner-unit-mono",
    "corner-separable",
    "lj-rj-frobenius-pair",
    "grothendieck-based-ring",
    "fusion-ring-iff-separable",
    "example-vec",
    "example-matrix-units",
];

pub fn trace_table() -> Vec<TraceEntry> {
    vec![
        e("unit-regular", "u_A : 1 -> A is regular for every algebra A", "functors::separability_verdict", "functors::tests::verdict_invariants"),
        e("counit-regular", "ε_C : C -> 1 is regular for every coalgebra C", "functors::coseparability_verdict", "functors::tests::coalgebra_examples"),
        e("morphisms-regular", "every morphism f has g with f g f = f", "morphcalc::weak_inverse", "morphcalc::tests::every_morphism_is_regular"),
        e(
            "tensor-algebra-separable-iff-unit-split",
            "- ⊗ A separable iff u_A split mono; naturally full iff split epi",
            "functors::separability_verdict",
            "functors::tests::verdict_examples",
        ),
        e(
            "tensor-coalgebra-separable-iff-counit-split",
            "- ⊗ C separable iff ε_C split epi",
            "functors::coseparability_verdict",
            "functors::tests::coalgebra_examples",
        ),
        e("section-of-hom-map", "a retraction of u_A yields P with P(f ⊗ A) = f, natural", "functors::section_of_hom", "functors::tests::section_is_natural"),
        e("unit-summand-algebra-coalgebra", "each 1_i is an algebra and a coalgebra", "internal::unit_summand_algebra", "internal::tests::unit_summand_coalgebra_is_dual_of_algebra"),
        e("unit-simple-iff-one-object", "1 simple iff End(1) has no nontrivial idempotent", "audit::run_audit", "audit::tests::conditions_agree_with_object_count"),
        e("fifteen-conditions", "the fifteen conditions are equivalent", "audit::run_audit", "acceptance::main_theorem"),
        e("associated-idempotent", "e_M idempotent and natural, identity iff separable", "functors::idempotent_e", "functors::tests::idempotent_is_idempotent_and_natural"),
        e("distinct-components-orthogonal", "Hom(X_ij, Y_kl) = 0 for (i, j) != (k, l)", "gvec::GradedMorphism::hom_basis", "gvec::tests::morphisms_between_distinct_components_vanish"),
        e("subcategory-multiring", "C_J is a multiring category with unit 1_J", "gvec::GradedObject::restrict", "audit::tests::subcategory_on_j_is_closed_under_tensor_kernels_and_duals"),
        e("lj-separable-frobenius", "L_J is separable Frobenius monoidal", "functors::lj_structure_checks", "functors::tests::lj_axioms_hold"),
        e("rj-lax-colax", "R_J is lax and colax monoidal", "functors::rj_structure_checks", "functors::tests::rj_axioms_hold"),
        e("corner-algebra-in-cj", "A_J is an algebra in C_J", "internal::restrict_to_j", "internal::tests::corner_at_support_satisfies_everything"),
        e("corner-inclusion-algebra-morphism", "i_{A_J} is an algebra morphism", "internal::corner_report", "internal::tests::corner_on_smaller_set_loses_only_the_unit_equation"),
        e("support-theorem", "components of A outside J x J vanish", "internal::support", "internal::tests::support_theorem_rejects_offending_carrier"),
        e("corner-unit-mono", "u_{A_J} is mono", "internal::corner_report", "internal::tests::support_examples"),
        e("corner-separable", "- ⊗ A_J separable on C_J", "functors::restricted_separability", "functors::tests::restricted_separability_examples"),
        e("lj-rj-frobenius-pair", "(L_J, R_J) is a Frobenius pair", "functors::frobenius_pair_check", "functors::tests::frobenius_pair_bijections"),
        e("grothendieck-based-ring", "Gr(C) is a based ring", "grothendieck::is_based_ring", "grothendieck::tests::constants_match_composition_and_involution_matches_inverse"),
        e("fusion-ring-iff-separable", "Gr(C) fusion iff every - ⊗ A separable", "grothendieck::fusion_iff_separable_check", "grothendieck::tests::fusion_iff_separable_on_fixtures"),
        e("example-vec", "Vec is fusion", "grothendieck::is_fusion_ring", "grothendieck::tests::trivial_group_is_the_integers"),
        e("example-matrix-units", "pair groupoid: matrix units, multifusion but not fusion", "grothendieck::grothendieck_ring", "grothendieck::tests::pair2_matrix_units"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn table_matches_manifest_exactly_once() {
        let t = trace_table();
        assert!(t.len() >= 20);
        let labels: Vec<&str> = t.iter().map(|e| e.label).collect();
        assert_eq!(labels, MANIFEST.to_vec());
        assert_eq!(labels.iter().collect::<BTreeSet<_>>().len(), labels.len());
    }

    fn source_of(module: &str) -> &'static str {
        match module {
            "audit" => include_str!("audit/tests.rs"),
            "functors" => include_str!("functors/tests.rs"),
            "gvec" => include_str!("gvec/tests.rs"),
            "internal" => include_str!("internal/tests.rs"),
            "morphcalc" => include_str!("morphcalc.rs"),
            "grothendieck" => include_str!("grothendieck.rs"),
            "acceptance" => include_str!("../tests/acceptance.rs"),
            other => panic!("no test source for {other}"),
        }
    }

    #[test]
    fn every_test_identifier_names_a_function() {
        for e in trace_table() {
            let module = e.test.split("::").next().unwrap();
            let name = e.test.rsplit("::").next().unwrap();
            assert!(source_of(module).contains(&format!("fn {name}(")), "{}", e.test);
        }
    }

    #[test]
    fn markdown_table_matches() {
        let md = include_str!("../TRACEABILITY.md");
        let rows: Vec<Vec<String>> = md
            .lines()
            .filter(|l| l.starts_with("| `"))
            .map(|l| l.trim_matches('|').split('|').map(|c| c.trim().trim_matches('`').to_string()).collect())
            .collect();
        let t = trace_table();
        assert_eq!(rows.len(), t.len());
        for (row, e) in rows.iter().zip(&t) {
            assert_eq!(row, &vec![e.label.to_string(), e.statement.to_string(), e.operation.to_string(), e.test.to_string()]);
        }
    }
}
