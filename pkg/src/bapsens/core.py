"""Weight matrices, edges, assignments and perturbations.

Indices are 0-based inside the library. Reports and files produced by the
CLI shift them to 1-based.

A weight of ``+inf`` marks a missing edge. Matrices with more columns than
rows are stored transposed so that ``n >= m`` always holds internally; the
``transposed`` flag lets callers map edges and arrays back to their own
orientation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyMatrix,
    InvalidAssignment,
    NegativeInfinityWeight,
)

INF = float("inf")


class Edge(NamedTuple):
    row: int
    col: int

    def one_based(self) -> list[int]:
        return [self.row + 1, self.col + 1]

    @classmethod
    def from_one_based(cls, pair: Sequence[int]) -> "Edge":
        i, j = pair
        return cls(int(i) - 1, int(j) - 1)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class WeightMatrix:
    weights: np.ndarray
    transposed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "weights", _readonly(self.weights))

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def m(self) -> int:
        return self.weights.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.weights.shape

    def __getitem__(self, edge) -> float:
        return float(self.weights[edge[0], edge[1]])

    def __eq__(self, other):
        if not isinstance(other, WeightMatrix):
            return NotImplemented
        return (self.transposed == other.transposed
                and self.shape == other.shape
                and bool(np.array_equal(self.weights, other.weights)))

    def __hash__(self):
        return hash((self.shape, self.weights.tobytes(), self.transposed))

    def edges(self) -> list[Edge]:
        """All present (finite-weight) edges in row-major order."""
        rows, cols = np.nonzero(np.isfinite(self.weights))
        return [Edge(int(i), int(j)) for i, j in zip(rows, cols)]

    def with_weight(self, edge: Edge, value: float) -> "WeightMatrix":
        w = np.array(self.weights)
        w[edge] = value
        return WeightMatrix(w, self.transposed)

    # Mapping between the internal (n >= m) orientation and the caller's.
    def external_edge(self, edge: Edge) -> Edge:
        return Edge(edge.col, edge.row) if self.transposed else Edge(*edge)

    def internal_edge(self, edge: Edge) -> Edge:
        return Edge(edge[1], edge[0]) if self.transposed else Edge(*edge)

    def external_array(self, a: np.ndarray) -> np.ndarray:
        return np.asarray(a).T if self.transposed else np.asarray(a)

    def internal_array(self, a: np.ndarray) -> np.ndarray:
        return np.asarray(a).T if self.transposed else np.asarray(a)


def validate_matrix(raw) -> WeightMatrix:
    """Build a WeightMatrix from a rectangular array of numbers or ``inf``.

    Inputs with fewer rows than columns are transposed and flagged.
    """
    try:
        a = np.array(raw, dtype=float)
    except ValueError as exc:
        raise DimensionMismatch(f"matrix is not rectangular: {exc}") from None
    if a.size == 0:
        raise EmptyMatrix("weight matrix has no entries")
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got {a.ndim} dimensions")
    if np.isnan(a).any():
        raise ValueError("weight matrix contains NaN")
    if np.isneginf(a).any():
        i, j = np.argwhere(np.isneginf(a))[0]
        raise NegativeInfinityWeight(f"entry ({i + 1},{j + 1}) is -inf")
    transposed = a.shape[0] < a.shape[1]
    if transposed:
        a = a.T
    return WeightMatrix(a, transposed)


def validate_perturbation(raw, shape: tuple[int, int]) -> np.ndarray:
    p = np.array(raw, dtype=float)
    if p.shape != tuple(shape):
        raise DimensionMismatch(f"perturbation shape {p.shape} != {tuple(shape)}")
    if not np.isfinite(p).all():
        raise ValueError("perturbation entries must be finite")
    return p


def zero_perturbation(W: WeightMatrix) -> np.ndarray:
    return np.zeros(W.shape)


def apply_perturbation(W: WeightMatrix, P) -> WeightMatrix:
    p = validate_perturbation(P, W.shape)
    # inf + finite stays inf, so missing edges remain missing
    return WeightMatrix(W.weights + p, W.transposed)


@dataclass(frozen=True)
class Assignment:
    """A column-perfect matching, stored as the row chosen for each column."""

    rows: tuple[int, ...]
    _edges: tuple[Edge, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if len(set(rows)) != len(rows):
            raise InvalidAssignment(f"row used more than once: {rows}")
        if any(r < 0 for r in rows):
            raise InvalidAssignment(f"negative row index: {rows}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_edges",
                           tuple(sorted(Edge(r, j) for j, r in enumerate(rows))))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]]) -> "Assignment":
        edges = [Edge(int(i), int(j)) for i, j in edges]
        m = len(edges)
        cols = sorted(e.col for e in edges)
        if cols != list(range(m)):
            raise InvalidAssignment(
                f"columns must be 0..{m - 1} exactly once, got {cols}")
        rows = [0] * m
        for e in edges:
            rows[e.col] = e.row
        return cls(tuple(rows))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges in row-major order."""
        return self._edges

    def __contains__(self, edge) -> bool:
        i, j = edge
        return 0 <= j < len(self.rows) and self.rows[j] == i

    def __iter__(self):
        return iter(self._edges)

    def __len__(self):
        return len(self.rows)


def check_assignment(W: WeightMatrix, A: Assignment) -> None:
    if A.m != W.m:
        raise InvalidAssignment(f"assignment covers {A.m} columns, matrix has {W.m}")
    if max(A.rows) >= W.n:
        raise InvalidAssignment(f"row index out of range for {W.n} rows")


class MaxWeight(NamedTuple):
    value: float
    edge: Edge
    tied: bool


def assignment_max_weight(W: WeightMatrix, A: Assignment) -> MaxWeight:
    check_assignment(W, A)
    best = None
    tied = False
    for e in A.edges:
        w = W[e]
        if best is None or w > best[0]:
            best = (w, e)
            tied = False
        elif w == best[0]:
            tied = True
    return MaxWeight(best[0], best[1], tied)
