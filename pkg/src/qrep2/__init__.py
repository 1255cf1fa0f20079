"""Explicit generator matrices for the two-parameter family of
irreducible representations of the deformed rank-2 algebra, built from
weight-diagram block primitives, with verification and an independent
highest-weight oracle."""

from .assembly import (BasisIndex, GeneratorSet, assemble, cartan_R,
                       enumerate_basis, load_json, perturbed, save_json,
                       save_matrix_market, to_manifest)
from .diagram import (Diagram, RepLabel, build_diagram, dimension,
                      multiplicity, strand_structure)
from .oracle import (GTPattern, InvariantComparison, gt_enumerate,
                     invariant_compare, pbw_construct)
from .primitive import (ABCoefficients, BoundaryColumns, ab_coefficients,
                        boundary_columns, gram_block, l_block, lambda_block,
                        q_line_element, solve_ab_numeric)
from .qnum import a1_element, norm_bracket, raw_bracket
from .verify import (Check, VerificationReport, check_columns_and_spectra,
                     check_defining_relations, check_irreducibility,
                     check_recursion, verify_representation)

__version__ = "0.1.0"

__all__ = [
    "ABCoefficients", "BasisIndex", "BoundaryColumns", "Check", "Diagram",
    "GTPattern", "GeneratorSet", "InvariantComparison", "RepLabel",
    "VerificationReport", "a1_element", "ab_coefficients", "assemble",
    "boundary_columns", "build_diagram", "cartan_R",
    "check_columns_and_spectra", "check_defining_relations",
    "check_irreducibility", "check_recursion", "dimension",
    "enumerate_basis", "gram_block", "gt_enumerate", "invariant_compare",
    "l_block", "lambda_block", "load_json", "multiplicity", "pbw_construct",
    "perturbed", "q_line_element", "raw_bracket", "save_json",
    "save_matrix_market", "solve_ab_numeric", "strand_structure",
    "to_manifest", "verify_representation",
]
