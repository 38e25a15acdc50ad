"""Cop throttling solvers, cover planners and bound certificates."""

import json

from . import _core
from ._core import (
    BudgetExceeded,
    Graph,
    ParseError,
    PreconditionError,
    capture_time,
    gambler_bound,
    k_radius,
    lower_bound,
    lower_family_a,
    path_throttle_formula,
    psd_prop_time,
    sweep,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "ParseError",
    "PreconditionError",
    "capture_time",
    "certify",
    "flatten",
    "gambler_bound",
    "k_radius",
    "lower_bound",
    "lower_family_a",
    "path_throttle_formula",
    "plan",
    "psd_prop_time",
    "simulate_camping",
    "solve",
    "sweep",
    "upper_bound",
]


def solve(g, objective="robber", state_budget=50_000_000, k_max=None):
    return json.loads(_core.solve(g, objective, state_budget, k_max))


def plan(g, planner="cover", c=0.5):
    return json.loads(_core.plan(g, planner, c))


def certify(g, planner="cover", c=0.5):
    return json.loads(_core.certify(g, planner, c))


def flatten(g):
    return json.loads(_core.flatten(g))


def upper_bound(n, family, k_cycles=None, c=None):
    return json.loads(_core.upper_bound(n, family, k_cycles, c))


def simulate_camping(g, p, cops, trials, seed, jobs=1):
    return json.loads(_core.simulate_camping(g, p, cops, trials, seed, jobs))
