"""Generalized Mobius ladder graphs M(m,n).

Exact construction and distances, closed-form corner-landmark formulas,
an exact metric-dimension engine, dimension-claim verification over
parameter sweeps, and errata detection for the shipped reference tables.
"""

from .distances import DistanceMatrix, all_pairs_distances, single_source_distances
from .errors import (FixtureFormatError, HypothesisError, InvalidSpecError,
                     VertexRangeError)
from .formulas import (FormulaCase, FormulaValidationReport, Theorem,
                       validate_formulas)
from .ladder import (Ladder, LadderSpec, Vertex, all_vertices,
                     automorphism_rotate, build_ladder, dot_text,
                     edge_list_text, vertex_of_index, vertex_of_label)
from .resolver import (CollisionWitness, DimensionReport, Representation,
                       ResolvingCheck, greedy_upper_bound, is_resolving,
                       metric_dimension, representation)
from .tables import (ErrataReport, ReferenceTable, compare_fixture,
                     emit_table, load_fixture, matrix_to_csv,
                     parse_distance_csv, shipped_fixture_path)
from .theorems import (PossibilityCheck, SweepReport, TheoremClaim,
                       TheoremVerdict, check_possibilities,
                       check_possibilities_thm31, check_possibilities_thm32,
                       claim_for, run_sweep, verdict_for)

__version__ = "0.1.0"

__all__ = [
    "DistanceMatrix", "all_pairs_distances", "single_source_distances",
    "FixtureFormatError", "HypothesisError", "InvalidSpecError",
    "VertexRangeError",
    "FormulaCase", "FormulaValidationReport", "Theorem", "validate_formulas",
    "Ladder", "LadderSpec", "Vertex", "all_vertices", "automorphism_rotate",
    "build_ladder", "dot_text", "edge_list_text", "vertex_of_index",
    "vertex_of_label",
    "CollisionWitness", "DimensionReport", "Representation", "ResolvingCheck",
    "greedy_upper_bound", "is_resolving", "metric_dimension", "representation",
    "ErrataReport", "ReferenceTable", "compare_fixture", "emit_table",
    "load_fixture", "matrix_to_csv", "parse_distance_csv",
    "shipped_fixture_path",
    "PossibilityCheck", "SweepReport", "TheoremClaim", "TheoremVerdict",
    "check_possibilities", "check_possibilities_thm31",
    "check_possibilities_thm32", "claim_for", "run_sweep", "verdict_for",
    "__version__",
]
