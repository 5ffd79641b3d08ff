"""Seifert surfaces for null-homologous links in surgered 3-manifolds.

The manifold is presented by integral surgery on a framed link in S^3.
Tracked knots are slid over the surgery curves until they are unlinked
from them homologically, after which linking numbers, Seifert matrices
and their invariants are computed from S^3 data plus integer linear
algebra on the linking matrix.
"""

from .diagram import (
    BandSpec,
    Component,
    Crossing,
    Diagram,
    band_slide,
    linking_number_s3,
    linking_table,
    load_diagram,
    parse_diagram,
    push_off,
    serialize_diagram,
    writhe,
)
from .errors import (
    DiagramError,
    DimensionError,
    InvariantViolation,
    NotNullHomologousError,
    SeifertDataError,
    SurgerySeifertError,
)
from .homlin import (
    H1,
    FramedLinkData,
    LinkingVector,
    SnfResult,
    SolutionVector,
    h1_invariant_factors,
    linking_matrix,
    linking_vector,
    smith_normal_form,
    solve_integer_system,
)
from .invariants import (
    BasisCurve,
    SeifertMatrix,
    alexander_polynomial,
    genus_bound,
    seifert_circles,
    seifert_matrix_in_Y,
    signature,
    tube_bookkeeping,
)
from .polynomial import IntPolynomial
from .slides import (
    Ledger,
    SlidePlan,
    apply_plan_diagram,
    apply_plan_ledger,
    ledger_from_diagram,
    slide_plan,
    verify_ledger,
)
from .surgery import YLinkResult, extended_diagram_h1, framing_convert, lk_y

__version__ = "0.1.0"
