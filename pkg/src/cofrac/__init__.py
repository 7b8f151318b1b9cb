"""Exact fractional chromatic and cochromatic numbers of small graphs.

The main entry points are :func:`chi_f` and :func:`z_f`, which return a
rational optimum bundled with a primal cover and a dual labeling of equal
weight. :mod:`cofrac.harness` runs the closed forms, equalities and
rounding procedures against the solver.
"""

from .errors import CapabilityError, CertificateError, CrossCheckError, ParseError
from .graph import (
    Graph,
    GraphStats,
    complement,
    disjoint_union,
    gen_complete,
    gen_cycle,
    gen_kneser,
    gen_mycielski,
    gen_path,
    gen_random,
    gen_star,
    graph_from_spec,
    parse_graph,
    stats,
)
from .harness import ramsey_convert
from .lp import CoveringLP, LPSolution, check_duality, solve_covering
from .solver import (
    CertifiedValue,
    FractionalCover,
    Labeling,
    chi_f,
    cross_check,
    verify_cover,
    verify_labeling,
    z_f,
)
from .subsets import (
    VertexSet,
    enumerate_maximal_cliques,
    enumerate_maximal_independent_sets,
    max_weight_clique,
    max_weight_independent_set,
)

__version__ = "0.1.0"
