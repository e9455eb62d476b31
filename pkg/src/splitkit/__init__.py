"""Crossing changes, tangle replacement and splitting at desk scale."""

__version__ = "0.1.0"

from .circles import (
    CircleClass,
    CrossingCircleSpec,
    circle_linking_profile,
    circles_for_replacement,
    dedupe_by_invariants,
    surgery_slope,
    whitehead_census,
)
from .diagram import (
    CrossingRef,
    DiagramError,
    PDCode,
    bound_report,
    change_crossing,
    components,
    emit_pd,
    linking_matrix,
    parse_pd,
    triangulation_bound,
)
from .fixtures import load_fixture
from .homology import (
    AbelianGroup,
    IntegerMatrix,
    branched_cover_h1,
    determinant,
    goeritz_matrix,
    h2_nonzero_rule,
    smith_normal_form,
)
from .moves import Budget, Move, reidemeister_neighborhood, simplify
from .search import SearchReport, enumerate_crossing_changes, lk_feasibility, question_is_one
from .slopes import ProjectiveRational, TwistVector, cf_eval, cf_expand, distance
from .split import SplitVerdict, certify_split, is_unlink, obstruct_split
from .tangles import (
    ReplacementSolution,
    TrivialTangle,
    enumerate_twisted_solutions,
    insert_central_twists,
    replacement,
    symmetric_expansion,
)
