"""Brute-force ground truth for small instances.

Everything here enumerates assignments directly and never calls the
matching solver, so it can serve as an independent check on it.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .core import INF, Assignment, Edge, WeightMatrix
from .errors import BudgetExceeded, NoFeasibleAssignment


@dataclass(frozen=True)
class EnumerationBudget:
    max_rows: int = 7
    max_assignments: int = 10**6

    def check(self, n: int, m: int) -> None:
        if n > self.max_rows:
            raise BudgetExceeded(f"{n} rows exceeds budget of {self.max_rows}")
        count = math.perm(n, m)
        if count > self.max_assignments:
            raise BudgetExceeded(f"{count} candidate assignments exceeds budget")


DEFAULT_BUDGET = EnumerationBudget()


def _weights(W) -> np.ndarray:
    return W.weights if isinstance(W, WeightMatrix) else np.asarray(W, dtype=float)


def enumerate_assignments(W, budget: EnumerationBudget = DEFAULT_BUDGET) -> Iterator[Assignment]:
    """Every column-perfect matching of finite edges, exactly once."""
    w = _weights(W)
    n, m = w.shape
    budget.check(n, m)
    for rows in itertools.permutations(range(n), m):
        if all(w[r, j] != INF for j, r in enumerate(rows)):
            yield Assignment(rows)


def _sorted_desc(w: np.ndarray, A: Assignment) -> tuple[float, ...]:
    return tuple(sorted((float(w[e]) for e in A.edges), reverse=True))


def brute_bap(W, budget: EnumerationBudget = DEFAULT_BUDGET) -> tuple[float, list[Assignment]]:
    w = _weights(W)
    best = INF
    optimizers: list[Assignment] = []
    for A in enumerate_assignments(w, budget):
        value = max(float(w[e]) for e in A.edges)
        if value < best:
            best, optimizers = value, [A]
        elif value == best:
            optimizers.append(A)
    if not optimizers:
        raise NoFeasibleAssignment("no finite assignment")
    return best, optimizers


def brute_bottleneck_edges(W, budget: EnumerationBudget = DEFAULT_BUDGET) -> set[Edge]:
    """Maximum-weight edges of all bottleneck assignments."""
    w = _weights(W)
    value, optimizers = brute_bap(w, budget)
    return {e for A in optimizers for e in A.edges if w[e] == value}


def brute_lex_assignment(W, budget: EnumerationBudget = DEFAULT_BUDGET) -> Assignment:
    w = _weights(W)
    best = None
    for A in enumerate_assignments(w, budget):
        key = (_sorted_desc(w, A), A.edges)
        if best is None or key < best[0]:
            best = (key, A)
    if best is None:
        raise NoFeasibleAssignment("no finite assignment")
    return best[1]


def verify_exclusive_coverage(W, anchor: Edge, S, budget: EnumerationBudget = DEFAULT_BUDGET) -> bool:
    S = {Edge(*e) for e in S}
    anchor = Edge(*anchor)
    for A in enumerate_assignments(W, budget):
        if anchor not in A and not S.intersection(A.edges):
            return False
    return True


def brute_is_allowable(W, A: Assignment, P, budget: EnumerationBudget = DEFAULT_BUDGET) -> bool:
    """``A`` is optimal for ``W + P``, decided by enumeration."""
    w = _weights(W) + np.asarray(P, dtype=float)
    value, _ = brute_bap(w, budget)
    return max(float(w[e]) for e in A.edges) == value


def brute_is_edge_allowable(W, anchor: Edge, P, budget: EnumerationBudget = DEFAULT_BUDGET) -> bool:
    w = _weights(W) + np.asarray(P, dtype=float)
    try:
        return Edge(*anchor) in brute_bottleneck_edges(w, budget)
    except NoFeasibleAssignment:
        return False


def uniform_corner(shape, edge: Edge, sigma: float) -> np.ndarray:
    """``+sigma`` on ``edge``, ``-sigma`` everywhere else."""
    P = np.full(shape, -float(sigma))
    P[tuple(edge)] = sigma
    return P


def closed_form_uniform_radius(W, A: Assignment, budget: EnumerationBudget = DEFAULT_BUDGET) -> float:
    """Largest sigma with every ``|P| <= sigma`` perturbation allowable.

    ``A`` stays optimal iff for every competitor ``C`` and every
    ``e in A \\ C``: ``w_e + 2 sigma <= max_C w``.
    """
    w = _weights(W)
    radius = INF
    for C in enumerate_assignments(w, budget):
        rest = [float(w[e]) for e in A.edges if e not in C]
        if rest:
            radius = min(radius, (max(float(w[f]) for f in C.edges) - max(rest)) / 2)
    return radius


def brute_uniform_radius(W, A: Assignment, budget: EnumerationBudget = DEFAULT_BUDGET,
                         tol: float = 1e-9, cap: float = 1e9) -> float:
    """Bisection on sigma; each trial checks the ``+sigma``-on-one-assigned-edge
    corners, which are the worst case among uniform perturbations."""
    w = _weights(W)
    if A.m != w.shape[1]:
        raise ValueError(f"assignment covers {A.m} columns, matrix has {w.shape[1]}")

    def ok(sigma):
        return all(brute_is_allowable(w, A, uniform_corner(w.shape, e, sigma), budget)
                   for e in A.edges)

    if ok(cap):
        return INF
    lo, hi = 0.0, cap
    if not ok(lo):
        return 0.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def sign_corners_allowable(W, A: Assignment, sigma: float) -> bool:
    """Check all ``2**(n*m)`` sign patterns of magnitude ``sigma`` at once."""
    w = _weights(W)
    n, m = w.shape
    k = n * m
    if k > 20:
        raise BudgetExceeded(f"2**{k} sign corners is too many")
    signs = ((np.arange(2 ** k)[:, None] >> np.arange(k)) & 1) * 2.0 - 1.0
    perturbed = w.reshape(1, k) + sigma * signs  # (corners, n*m)
    assignments = list(enumerate_assignments(w))
    flat = np.array([[i * m + j for i, j in C.edges] for C in assignments])
    maxes = perturbed[:, flat].max(axis=2)  # (corners, assignments)
    own = perturbed[:, [i * m + j for i, j in A.edges]].max(axis=1)
    return bool((own <= maxes.min(axis=1)).all())


def validate_uniform_corner_claim(W, A: Assignment, sigma: float, tol: float = 1e-9) -> bool:
    """All sign corners pass just below ``sigma`` and some fail just above."""
    below = sign_corners_allowable(W, A, max(sigma - tol, 0.0))
    if sigma == INF:
        return below
    return below and not sign_corners_allowable(W, A, sigma + tol)
