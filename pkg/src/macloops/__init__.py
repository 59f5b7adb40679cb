"""Exact homology, cohomology rings and loop homology relations of moment-angle complexes Z_K."""

from .cellular import Cell, Chain, boundary, cells_of, homology_coordinates, is_cycle, parse_chain, zk_homology
from .generators import GeneratorDescriptor, enumerate_gptw_generators, generator_cycle_table, hurewicz_image
from .koszul import (CohomologyClass, KoszulElement, cohomology_basis, differential, evaluate, multiply,
                     parse_koszul, product_pairing_table, same_class, top_class)
from .loopalg import QuotientTensorAlgebra, TensorElement, format_expr, parse_expr
from .relations import (RelationTemplate, SolutionSet, build_hexagon_template, build_pentagon_relation,
                        instantiate, solve_coefficients, verify_zero)
from .simplicial import (NotFlagError, SimplicialComplex, connected_components, full_subcomplex,
                         hochster_cohomology, is_face, is_flag, polygon_boundary, reduced_betti)

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "Chain",
    "boundary",
    "cells_of",
    "homology_coordinates",
    "is_cycle",
    "parse_chain",
    "zk_homology",
    "GeneratorDescriptor",
    "enumerate_gptw_generators",
    "generator_cycle_table",
    "hurewicz_image",
    "CohomologyClass",
    "KoszulElement",
    "cohomology_basis",
    "differential",
    "evaluate",
    "multiply",
    "parse_koszul",
    "product_pairing_table",
    "same_class",
    "top_class",
    "QuotientTensorAlgebra",
    "TensorElement",
    "format_expr",
    "parse_expr",
    "RelationTemplate",
    "SolutionSet",
    "build_hexagon_template",
    "build_pentagon_relation",
    "instantiate",
    "solve_coefficients",
    "verify_zero",
    "NotFlagError",
    "SimplicialComplex",
    "connected_components",
    "full_subcomplex",
    "hochster_cohomology",
    "is_face",
    "is_flag",
    "polygon_boundary",
    "reduced_betti",
]
