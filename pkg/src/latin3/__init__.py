"""Exact counting of 3 x n Latin rectangles on lambda symbols.

Four independent routes compute the same numbers:

1. riordan_l3 -- the classical first-row-normalized closed form
2. aps_g -- the triple-sum closed form over lambda symbols
3. thm3_g -- assembly from surgered-graph counts (term_A/term_B/g_npq_closed)
4. chromatic_poly on build_gn(n) -- deletion-contraction from first principles

plus brute-force enumeration oracles (count_latin, count_injections_forbidden)
that ground all of them.  Everything is exact big-integer arithmetic.
"""

from .combinatorics import binom, factorial, falling, gen_binom, gen_derangement
from .errors import BudgetExceededError, GraphParseError, VertexLimitError
from .graphs import (
    Graph,
    build_gn,
    build_gnpq,
    cartesian_product,
    complete,
    complete_bipartite,
    delete_edge,
    format_graph,
    gn_labeling,
    gnpq_labeling,
    identify,
    identify_with_map,
    line_graph,
    parse_graph,
)
from .chromatic import Poly, chromatic_poly, count_colorings_bruteforce, eval_poly
from .formulas import (
    aps_g,
    g_npq_closed,
    riordan_l3,
    term_A,
    term_B,
    theorem2_sum,
    thm3_g,
)
from .oracle import (
    Rectangle,
    count_injections_forbidden,
    count_latin,
    enumerate_latin,
    is_latin_rectangle,
)
from .verify import CheckResult, VerifyConfig, render_report, run_verify

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CheckResult",
    "Graph",
    "GraphParseError",
    "Poly",
    "Rectangle",
    "VerifyConfig",
    "VertexLimitError",
    "aps_g",
    "binom",
    "build_gn",
    "build_gnpq",
    "cartesian_product",
    "chromatic_poly",
    "complete",
    "complete_bipartite",
    "count_colorings_bruteforce",
    "count_injections_forbidden",
    "count_latin",
    "delete_edge",
    "enumerate_latin",
    "eval_poly",
    "factorial",
    "falling",
    "format_graph",
    "g_npq_closed",
    "gen_binom",
    "gen_derangement",
    "gn_labeling",
    "gnpq_labeling",
    "identify",
    "identify_with_map",
    "is_latin_rectangle",
    "line_graph",
    "parse_graph",
    "render_report",
    "riordan_l3",
    "run_verify",
    "term_A",
    "term_B",
    "theorem2_sum",
    "thm3_g",
    "__version__",
]
