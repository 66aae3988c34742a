"""Lexicographic assignment by iterative bottleneck fixing."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import INF, Assignment, Edge, WeightMatrix
from .errors import NoFeasibleAssignment
from .solver import _as_array, solve_bap


@dataclass(frozen=True)
class LexAssignment:
    assignment: Assignment
    sorted_weights: tuple[float, ...]  # descending
    certified: bool


def lexicographic_assignment(W, forced: Optional[Edge] = None) -> LexAssignment:
    """Assignment whose descending weight vector is lexicographically minimal.

    Each step solves the bottleneck problem on what is left, keeps its
    bottleneck edge, deletes that edge's row and column and forbids edges
    heavier than the value just fixed. The result is certified only when
    every step had a single bottleneck edge.

    With ``forced``, the minimum is taken over assignments that contain
    ``forced`` as a maximum-weight edge.
    """
    w = np.array(_as_array(W), dtype=float)
    n, m = w.shape
    rows_left = list(range(n))
    cols_left = list(range(m))
    chosen = [-1] * m
    certified = True
    cap = INF
    if forced is not None:
        fi, fj = forced
        if w[fi, fj] == INF:
            raise NoFeasibleAssignment(f"forced edge {tuple(forced)} is missing")
        chosen[fj] = fi
        cap = float(w[fi, fj])
        rows_left.remove(fi)
        cols_left.remove(fj)
    while cols_left:
        sub = w[np.ix_(rows_left, cols_left)]
        sub[sub > cap] = INF
        sol = solve_bap(sub)
        certified = certified and sol.edge_unique
        i, j = sol.bottleneck_edge
        r, c = rows_left[i], cols_left[j]
        chosen[c] = r
        cap = sol.bottleneck_value
        del rows_left[i]
        del cols_left[j]
    A = Assignment(tuple(chosen))
    weights = tuple(sorted((float(w[e]) for e in A.edges), reverse=True))
    return LexAssignment(A, weights, certified)
