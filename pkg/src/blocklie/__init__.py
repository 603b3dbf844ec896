"""Exact symbolic computation in a family of Block-type Lie algebras.

The package works with finitely supported linear combinations of basis
vectors L[alpha, i] (alpha any integer, i a nonnegative integer) over
exact rationals, plus an optional central term in the extended variant.
It provides the brackets of four algebra variants, their gradings and
2-cocycles, derivation and first-cohomology computations at finite
window scale, the automorphism group in parametric form, and text/JSON/
CSV input-output.
"""

from .automorphisms import (
    AutParams,
    MinimalTerm,
    NilpotencyReport,
    ProbeReport,
    WittReflect,
    WittScale,
    apply_automorphism,
    compose,
    hom_residual,
    invert,
    minimal_term,
    nilpotency_check,
    probe_local_finiteness,
    step_coefficient,
    witt_apply,
)
from .brackets import (
    CocycleKind,
    bracket,
    bracket_for,
    cocycle_residual,
    cocycle_value,
    eigen_degree,
    extended_bracket,
    extension_cocycle_value,
    family_bracket,
    first_grade,
    jacobi_residual,
    shift_iso_residual,
)
from .derivations import (
    ConstraintSystem,
    Derivation,
    WindowedMap,
    build_constraints,
    d0_apply,
    d0_matchable_by_inner,
    h1_dimension,
    leibniz_residual,
    matchable_by_inner,
    recurrence_check,
    solved_constraints,
    windowed_d0,
    windowed_inner,
)
from .elements import Algebra, Element, Window
from .errors import (
    CentralNotAllowedError,
    NegativeSecondIndexError,
    NotInWittError,
    ParseError,
    WindowTooSmallError,
    ZeroDenominatorError,
    ZeroElementError,
)
from .textio import (
    export_structure,
    parse_element,
    parse_window,
    render_element,
    write_structure_csv,
    write_structure_json,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AutParams",
    "CentralNotAllowedError",
    "CocycleKind",
    "ConstraintSystem",
    "Derivation",
    "Element",
    "MinimalTerm",
    "NegativeSecondIndexError",
    "NilpotencyReport",
    "NotInWittError",
    "ParseError",
    "ProbeReport",
    "Window",
    "WindowTooSmallError",
    "WindowedMap",
    "WittReflect",
    "WittScale",
    "ZeroDenominatorError",
    "ZeroElementError",
    "apply_automorphism",
    "bracket",
    "bracket_for",
    "build_constraints",
    "cocycle_residual",
    "cocycle_value",
    "compose",
    "d0_apply",
    "d0_matchable_by_inner",
    "eigen_degree",
    "export_structure",
    "extended_bracket",
    "extension_cocycle_value",
    "family_bracket",
    "first_grade",
    "h1_dimension",
    "hom_residual",
    "invert",
    "jacobi_residual",
    "leibniz_residual",
    "matchable_by_inner",
    "minimal_term",
    "nilpotency_check",
    "parse_element",
    "parse_window",
    "probe_local_finiteness",
    "recurrence_check",
    "render_element",
    "shift_iso_residual",
    "solved_constraints",
    "step_coefficient",
    "windowed_d0",
    "windowed_inner",
    "witt_apply",
    "write_structure_csv",
    "write_structure_json",
]
