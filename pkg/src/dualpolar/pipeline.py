"""One instance (family, q, d) with every derived object computed lazily."""

import os
from functools import cached_property

from .exactla import incidence_matrix, rank_exact
from .forms import DEFAULT_BUDGET, make_polar_space
from .graphs import collinearity_graph, dual_polar_graph
from .isotropic import enumerate_levels
from .resolving import (DEFAULT_SUBSET_BUDGET, conjecture_report, greedy_minimize,
                        rowbasis_resolving_set)


def budgets_from_env(enum_budget=None, subset_budget=None):
    """Resolve budgets: explicit values win, then POLAR_BUDGET, then defaults.

    POLAR_BUDGET is either ``N`` (enumeration) or ``N,M`` (enumeration,
    subset search).
    """
    env = os.environ.get("POLAR_BUDGET", "").strip()
    env_enum = env_subset = None
    if env:
        parts = [int(x) for x in env.split(",")]
        env_enum = parts[0]
        env_subset = parts[1] if len(parts) > 1 else None
    enum_budget = enum_budget or env_enum or DEFAULT_BUDGET
    subset_budget = subset_budget or env_subset or DEFAULT_SUBSET_BUDGET
    if enum_budget <= 0 or subset_budget <= 0:
        raise ValueError("budgets must be positive")
    return enum_budget, subset_budget


class Instance:
    def __init__(self, family, q, d, *, budget=None, subset_budget=None, jobs=1):
        self.budget, self.subset_budget = budgets_from_env(budget, subset_budget)
        self.jobs = jobs
        self.P = make_polar_space(family, q, d, budget=self.budget)

    @property
    def label(self):
        return f"{self.P.family}({self.P.q},{self.P.d})"

    @cached_property
    def levels(self):
        return enumerate_levels(self.P, budget=self.budget)

    @property
    def points(self):
        return self.levels[0]

    @property
    def generators(self):
        return self.levels[-1]

    @cached_property
    def dual_graph(self):
        return dual_polar_graph(self.P, self.generators)

    @cached_property
    def collinearity(self):
        return collinearity_graph(self.P, self.points)

    @cached_property
    def incidence(self):
        return incidence_matrix(self.P, self.points, self.generators)

    @cached_property
    def rank(self):
        return rank_exact(self.incidence)

    @cached_property
    def rowbasis(self):
        return rowbasis_resolving_set(self.P, self.points, self.generators, self.dual_graph,
                                      self.incidence)

    @cached_property
    def greedy(self):
        return greedy_minimize(self.dual_graph, self.rowbasis)

    def conjecture(self, exact=True):
        return conjecture_report(self.P, self.points, self.generators, self.dual_graph,
                                 exact=exact, budget=self.subset_budget, jobs=self.jobs,
                                 rowbasis=self.rowbasis, greedy=self.greedy)
