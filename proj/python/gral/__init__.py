"""Exact constructions and checks for group-graded algebras and partial actions."""

from ._gral import (
    Fixture,
    FiniteGroup,
    GradedAlgebra,
    GralError,
    PartialAction,
    check_pa_prp_equivalence,
    fixture,
    fixture_document,
    fixture_ids,
    fmat_dim,
    matrix_algebra,
    parse_document_objects,
    partial_smash_dim,
    random_graded_algebra,
    random_product_partial_action,
    skew_group_algebra,
    smash_algebra,
    smash_dim,
    verify_duality,
    verify_geq,
    verify_globalization_fixture,
    verify_moritaglob,
    verify_partialrep,
    verify_self_equivalence,
    verify_sg,
)

__all__ = [
    "Fixture",
    "FiniteGroup",
    "GradedAlgebra",
    "GralError",
    "PartialAction",
    "check_pa_prp_equivalence",
    "fixture",
    "fixture_document",
    "fixture_ids",
    "fmat_dim",
    "matrix_algebra",
    "parse_document_objects",
    "partial_smash_dim",
    "random_graded_algebra",
    "random_product_partial_action",
    "skew_group_algebra",
    "smash_algebra",
    "smash_dim",
    "verify_duality",
    "verify_geq",
    "verify_globalization_fixture",
    "verify_moritaglob",
    "verify_partialrep",
    "verify_self_equivalence",
    "verify_sg",
]
