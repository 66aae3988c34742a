"""Bottleneck assignment by threshold search over bipartite matchings.

Columns are matched into rows; a matching is feasible at threshold ``t``
when it covers every column using only edges of weight ``<= t``.
``+inf`` marks a missing edge. ``-inf`` is accepted here (the constructed
matrices of the assignment-sensitivity routine contain it) even though
user-facing weight matrices reject it.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import INF, Assignment, Edge, WeightMatrix
from .errors import NoFeasibleAssignment, PreconditionViolation


@dataclass(frozen=True)
class BapSolution:
    assignment: Assignment
    bottleneck_value: float
    bottleneck_edge: Edge
    edge_unique: bool
    # every bottleneck edge of the matrix, row-major
    candidates: tuple[Edge, ...] = ()


def _as_array(W) -> np.ndarray:
    if isinstance(W, WeightMatrix):
        return W.weights
    return np.asarray(W, dtype=float)


class BottleneckSolver:
    """Mutable matching state over a private copy of a weight array.

    One solve at a time per instance. ``remove`` deletes an edge and repairs
    the previous optimum with a single augmenting-path search.
    """

    def __init__(self, weights):
        a = np.array(_as_array(weights), dtype=float)
        if a.ndim != 2 or a.shape[0] < a.shape[1]:
            raise ValueError(f"solver needs an n x m array with n >= m, got {a.shape}")
        self.array = a
        self.n, self.m = a.shape
        self.w = a.tolist()
        # rows of each column ordered by (weight, row); lets scans stop early
        self.col_rows = []
        for j in range(self.m):
            col = sorted((self.w[i][j], i) for i in range(self.n) if self.w[i][j] != INF)
            self.col_rows.append([i for _, i in col])
        self.solution: Optional[BapSolution] = None

    # -- matching primitives -------------------------------------------------

    def _augment(self, j, t, row_of_col, col_of_row, seen) -> bool:
        """Iterative DFS for an augmenting path from free column ``j``."""
        w = self.w
        col_rows = self.col_rows
        cols = [j]
        rows = []
        pos = [0]
        while cols:
            c = cols[-1]
            adj = col_rows[c]
            k = pos[-1]
            nxt = None
            while k < len(adj):
                i = adj[k]
                k += 1
                if w[i][c] > t:
                    break
                if seen[i]:
                    continue
                seen[i] = True
                if col_of_row[i] == -1:
                    rows.append(i)
                    for cc, ii in zip(cols, rows):
                        row_of_col[cc] = ii
                        col_of_row[ii] = cc
                    return True
                nxt = i
                break
            pos[-1] = k
            if nxt is None:
                cols.pop()
                pos.pop()
                if rows:
                    rows.pop()
            else:
                rows.append(nxt)
                cols.append(col_of_row[nxt])
                pos.append(0)
        return False

    def match(self, t, forced: Optional[Edge] = None, seed: Optional[Sequence[int]] = None):
        """Column-perfect matching with all edges ``<= t`` (containing ``forced``).

        Returns the row of each column, or None. Edges of ``seed`` that still
        qualify are kept, so only the remaining columns are augmented.
        """
        n, m, w = self.n, self.m, self.w
        row_of_col = [-1] * m
        col_of_row = [-1] * n
        banned = -1
        if forced is not None:
            fi, fj = forced
            if w[fi][fj] > t:
                return None
            row_of_col[fj] = fi
            col_of_row[fi] = fj
            banned = fi
        if seed is not None:
            for j, i in enumerate(seed):
                if (i >= 0 and row_of_col[j] == -1 and col_of_row[i] == -1
                        and w[i][j] <= t):
                    row_of_col[j] = i
                    col_of_row[i] = j
        for j in range(m):
            if row_of_col[j] != -1:
                continue
            seen = [False] * n
            if banned >= 0:
                seen[banned] = True
            if not self._augment(j, t, row_of_col, col_of_row, seen):
                return None
        return row_of_col

    def feasible(self, t, forced: Optional[Edge] = None) -> bool:
        return self.match(t, forced) is not None

    # -- solving -------------------------------------------------------------

    def solve(self, prefer: Optional[Edge] = None) -> BapSolution:
        """Binary search over the sorted distinct present weights."""
        a = self.array
        vals = np.unique(a[a != INF])
        if vals.size == 0:
            raise NoFeasibleAssignment("matrix has no finite edges")
        vals = vals.tolist()
        best = self.match(vals[-1])
        if best is None:
            raise NoFeasibleAssignment("no column-perfect matching of finite edges")
        lo, hi = 0, len(vals) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            trial = self.match(vals[mid], seed=best)
            if trial is None:
                lo = mid + 1
            else:
                hi = mid
                best = trial
        return self._finish(vals[hi], best, prefer)

    def _finish(self, t, rows, prefer=None) -> BapSolution:
        """Collect the bottleneck edges at optimum ``t`` and pick one.

        A weight-``t`` edge is a bottleneck edge iff some matching at
        threshold ``t`` contains it. The row-major first one is chosen
        unless ``prefer`` is among them.
        """
        candidates = []
        forced_rows = {}
        for i, j in np.argwhere(self.array == t).tolist():
            e = Edge(i, j)
            if rows[j] == i:
                r = rows
            else:
                r = self.match(t, forced=e, seed=rows)
            if r is not None:
                candidates.append(e)
                forced_rows[e] = r
        if not candidates:
            raise AssertionError(f"no bottleneck edge at optimum {t}")
        chosen = prefer if prefer in forced_rows else candidates[0]
        sol = BapSolution(
            assignment=Assignment(tuple(forced_rows[chosen])),
            bottleneck_value=float(t),
            bottleneck_edge=chosen,
            edge_unique=len(candidates) == 1,
            candidates=tuple(candidates),
        )
        self.solution = sol
        return sol

    def _minimax_augment(self, j, row_of_col, col_of_row):
        """Augment free column ``j`` along the path whose largest new edge is
        smallest. Returns that edge weight, or None if no path exists."""
        w = self.w
        done = [False] * self.n
        parent = [-1] * self.n
        heap = [(w[i][j], i, j) for i in self.col_rows[j]]
        heapq.heapify(heap)
        while heap:
            label, i, c = heapq.heappop(heap)
            if done[i]:
                continue
            done[i] = True
            parent[i] = c
            c2 = col_of_row[i]
            if c2 == -1:
                while True:
                    c = parent[i]
                    prev = row_of_col[c]
                    row_of_col[c] = i
                    col_of_row[i] = c
                    if c == j:
                        return label
                    i = prev
            for i2 in self.col_rows[c2]:
                if not done[i2]:
                    heapq.heappush(heap, (max(label, w[i2][c2]), i2, c2))
        return None

    def remove(self, edge: Edge, prefer: Optional[Edge] = None) -> BapSolution:
        """Set ``edge`` to +inf and re-solve from the current solution."""
        i, j = edge
        if self.w[i][j] == INF:
            raise PreconditionViolation(f"edge {tuple(edge)} is already missing", edge)
        prev = self.solution
        self.w[i][j] = INF
        self.array[i, j] = INF
        self.col_rows[j].remove(i)
        if prev is None:
            return self.solve(prefer)
        rows = list(prev.assignment.rows)
        t = prev.bottleneck_value
        if rows[j] != i:
            # still feasible at t, and t cannot drop when a weight rises
            return self._finish(t, rows, prefer)
        col_of_row = [-1] * self.n
        for c, r in enumerate(rows):
            col_of_row[r] = c
        rows[j] = -1
        col_of_row[i] = -1
        label = self._minimax_augment(j, rows, col_of_row)
        if label is None:
            self.solution = None
            raise NoFeasibleAssignment(f"no matching remains after removing {tuple(edge)}")
        return self._finish(max(t, label), rows, prefer)


def solve_bap(W, prefer: Optional[Edge] = None) -> BapSolution:
    return BottleneckSolver(W).solve(prefer)


def bottleneck_edge(W) -> Edge:
    return solve_bap(W).bottleneck_edge


def bottleneck_edges(W) -> tuple[Edge, ...]:
    """All bottleneck edges, row-major."""
    return solve_bap(W).candidates


def feasible_under_threshold(W, t: float, forced: Optional[Edge] = None) -> bool:
    return BottleneckSolver(W).feasible(t, forced)


def resolve_after_removal(W, prev: BapSolution, removed: Edge) -> BapSolution:
    """Solve ``W`` with ``removed`` deleted, warm-started from ``prev``."""
    solver = BottleneckSolver(W)
    solver.solution = prev
    return solver.remove(Edge(*removed))


def is_bottleneck_edge(W, edge: Edge) -> bool:
    a = _as_array(W)
    solver = BottleneckSolver(a)
    t = solver.solve().bottleneck_value
    return bool(a[tuple(edge)] == t) and solver.feasible(t, Edge(*edge))
