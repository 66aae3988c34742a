"""Worked examples used across the test modules (0-based library indices)."""
import numpy as np

from bapsens.core import INF, Assignment, Edge
from bapsens.intervals import IntervalArray

EX1 = np.array([[0, 10, 0], [100, 1, 5], [0, 5, 0]], dtype=float)
EX2 = np.array([[2, 91, 63], [26, 89, 93], [48, 60, 71]], dtype=float)


def e(i, j):
    """Edge from 1-based row and column."""
    return Edge(i - 1, j - 1)


def intervals(shape, bounds):
    """IntervalArray from {(i, j) 1-based: (lo, hi)} with signed endpoints."""
    lower = np.full(shape, INF)
    upper = np.full(shape, INF)
    for (i, j), (lo, hi) in bounds.items():
        lower[i - 1, j - 1] = -lo
        upper[i - 1, j - 1] = hi
    return IntervalArray(lower, upper)


LEX2 = Assignment.from_edges([e(2, 1), e(3, 2), e(1, 3)])
LEX1 = Assignment.from_edges([e(1, 1), e(2, 2), e(3, 3)])

EDGE_INTERVALS = intervals((3, 3), {
    (1, 3): (-1.5, 13), (2, 2): (-13, INF), (1, 2): (-15, INF),
    (2, 3): (-17, INF), (2, 1): (-INF, 35.5), (3, 2): (-INF, 1.5),
})
ASSIGN_INTERVALS = intervals((3, 3), {
    (1, 3): (-INF, 13), (2, 2): (-13, INF), (1, 2): (-15, INF),
    (3, 2): (-INF, 16), (2, 3): (-17, INF), (2, 1): (-INF, 50),
})
TIED_LEFT = intervals((3, 3), {
    (1, 1): (-INF, 0.5), (2, 1): (-97, INF), (2, 2): (-0.5, 2),
    (2, 3): (-2, INF), (3, 3): (-INF, 0.5),
})
TIED_RIGHT = intervals((3, 3), {
    (1, 1): (-INF, 0.5), (1, 2): (-7, INF), (2, 2): (-0.5, 2),
    (3, 2): (-2, INF), (3, 3): (-INF, 0.5),
})


def tightness_probe(report, eps=1e-6, clamp=1e6):
    """Perturbation just outside the first-determined bound.

    The first log entry is always the upper bound of the limiting assigned
    edge. Raising it by ``eps`` and pushing every other edge to its lower end
    should make a competing assignment strictly better.
    """
    from bapsens.intervals import IntervalArray, corner_perturbation

    _, edge, side, _ = report.determined_log[0]
    assert side == "upper"
    upper = report.intervals.upper.copy()
    upper[edge] += eps
    return corner_perturbation(IntervalArray(report.intervals.lower, upper), edge, clamp)
