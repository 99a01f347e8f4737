"""Exact Alexander/Murasugi polynomial computation and the norm obstruction
for equivariant sliceness, over Z[x^+-1, y^+-1] and Z[Z/p x Z]."""

from .laurent import (
    LaurentPoly1,
    LaurentPoly2,
    NotDivisibleError,
    PolyParseError,
    UnitMonomial2,
    equal_up_to_unit1,
    equal_up_to_unit2,
    exact_div2,
    format_poly1,
    format_poly2,
    gcd2,
    matrix_det,
    parse_poly1,
    parse_poly2,
)
from .groupring import (
    GroupRingElem,
    UnitGR,
    equal_up_to_unit,
    format_group_elem,
    parse_group_elem,
    project,
)
from .intpoly import (
    IntPoly,
    cyclotomic,
    factor_univariate,
    is_perfect_square,
    resultant,
)
from .links import (
    BraidWord,
    ComponentCountError,
    GroupPresentation,
    LinkInfo,
    alexander_matrix,
    alexander_polynomial,
    analyze_closure,
    braid_to_presentation,
    fox_derivative,
    parse_braid,
    parse_presentation,
    torres_residual,
)
from .normdecide import (
    BatteryCheck,
    BatteryReport,
    Inconclusive,
    Norm,
    NotNorm,
    SearchBounds,
    battery,
    decide,
    realize,
    univ_norm_test,
    verify_witness,
    witness_search,
)
from .report import ObstructionReport, build_check_report, emit_report, parse_report

__version__ = "0.1.0"
