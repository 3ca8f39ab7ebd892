# SPDX-License-Identifier: Apache-2.0
"""Asymptotic expansion analysis of finite graph families.

Structured results come back as plain dicts in the same layout as the CLI
JSON reports. Exact ratios appear as {"value": float, "exact": "p/q"}; use
`fraction` to turn one into a Fraction.
"""

import json
from fractions import Fraction

from ._asymex import (
    CapExceeded,
    CertificationError,
    ConvergenceError,
    Graph,
    ParseError,
    PreconditionError,
    complete_graph,
    cycle_graph,
    diameter,
    dumbbell,
    format_graph,
    generate,
    girth,
    hypercube_graph,
    laplacian_eigenvalues,
    main,
    parse_graph,
    path_graph,
    poincare_constant,
    random_connected_graph,
    random_regular_expander,
    read_graph,
    run_suite,
    set_threads,
    spectral_gap,
    suite_names,
    write_graph,
)
from . import _asymex

__all__ = [
    "CapExceeded",
    "CertificationError",
    "ConvergenceError",
    "Graph",
    "ParseError",
    "PreconditionError",
    "cheeger",
    "cheeger_dichotomy",
    "complete_graph",
    "cycle_graph",
    "diameter",
    "dumbbell",
    "expansion_profile",
    "family_certificate",
    "format_graph",
    "fraction",
    "generate",
    "girth",
    "graph_exhaustion",
    "hypercube_graph",
    "laplacian_eigenvalues",
    "main",
    "parse_graph",
    "path_graph",
    "poincare_constant",
    "propagation_profile",
    "random_connected_graph",
    "random_regular_expander",
    "read_graph",
    "run_suite",
    "set_threads",
    "spectral_gap",
    "suite_names",
    "verify_exhaustion",
    "write_graph",
]


def fraction(r):
    """Fraction from a {"exact": "p/q"} ratio; None for "inf"."""
    text = r["exact"]
    return None if text == "inf" else Fraction(text)


def cheeger(g, mode="auto", exact_cap=22, seed=1):
    return json.loads(_asymex._cheeger(g, mode, exact_cap, seed))


def expansion_profile(g, alphas, R=1.0, mode="auto", exact_cap=22, seed=1):
    return json.loads(_asymex._expansion_profile(g, list(alphas), R, mode, exact_cap, seed))


def family_certificate(graphs, alphas, radii=(), mode="auto", exact_cap=22, seed=1):
    return json.loads(_asymex._family_certificate(list(graphs), list(alphas), list(radii), mode, exact_cap, seed))


def graph_exhaustion(graphs, alphas, mode="auto", exact_cap=22, seed=1):
    return json.loads(_asymex._graph_exhaustion(list(graphs), list(alphas), mode, exact_cap, seed))


def verify_exhaustion(graphs, exhaustion, exact_cap=22, seed=1):
    return json.loads(_asymex._verify_exhaustion(list(graphs), json.dumps(exhaustion), exact_cap, seed))


def propagation_profile(graphs, epsilons, r_max, mode="auto", exact_cap=22, seed=1):
    return json.loads(_asymex._propagation_profile(list(graphs), list(epsilons), r_max, mode, exact_cap, seed))


def cheeger_dichotomy(g, exact_cap=22):
    return json.loads(_asymex._cheeger_dichotomy(g, exact_cap))
