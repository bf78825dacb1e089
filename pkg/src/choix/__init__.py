"""Inference engine for coherent choice functions on finite option sets.

Checks finite choice assessments for consistency and evaluates the
least committal coherent extension through linear-programming
feasibility tests over conjunctive and disjunctive generator sets.
"""

from .core import (
    Assessment,
    AssessmentPair,
    InputError,
    Options,
    ToleranceConfig,
    Vec,
    leq,
    rescale_assessment,
    strictly_less,
    translate_set,
)
from .feasibility import (
    LpOutcome,
    SolverError,
    g_ord,
    in_natural_extension,
    is_feasible,
    option_ord,
)
from .generators import (
    BuildTimeout,
    ConjGenerator,
    DisjGenerator,
    assessment_to_conjunctive,
    assessment_to_conjunctive_naive,
    conjunctive_to_disjunctive_simplified,
    disjunctive_size,
    disjunctive_stream,
    max_elements,
    min_cone_subset,
    simplify_disjunctive,
)
from .choice import (
    ChoiceResult,
    Method,
    check_consistency,
    is_chosen,
    is_consistent_generator,
    natural_extension,
)

__all__ = [
    "Assessment",
    "AssessmentPair",
    "BuildTimeout",
    "ChoiceResult",
    "ConjGenerator",
    "DisjGenerator",
    "InputError",
    "LpOutcome",
    "Method",
    "Options",
    "SolverError",
    "ToleranceConfig",
    "Vec",
    "assessment_to_conjunctive",
    "assessment_to_conjunctive_naive",
    "check_consistency",
    "conjunctive_to_disjunctive_simplified",
    "disjunctive_size",
    "disjunctive_stream",
    "g_ord",
    "in_natural_extension",
    "is_chosen",
    "is_consistent_generator",
    "is_feasible",
    "leq",
    "max_elements",
    "min_cone_subset",
    "natural_extension",
    "option_ord",
    "rescale_assessment",
    "simplify_disjunctive",
    "strictly_less",
    "translate_set",
]

__version__ = "0.1.0"
