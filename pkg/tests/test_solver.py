import numpy as np
import pytest
from hypothesis import given, strategies as st

from bapsens.core import INF, Edge
from bapsens.errors import NoFeasibleAssignment, PreconditionViolation
from bapsens.oracle import brute_bap, brute_bottleneck_edges
from bapsens.solver import (
    BottleneckSolver,
    bottleneck_edge,
    bottleneck_edges,
    feasible_under_threshold,
    is_bottleneck_edge,
    resolve_after_removal,
    solve_bap,
)
from conftest import weight_arrays
from worked import EX1, EX2, e


def test_examples():
    s = solve_bap(EX2)
    assert (s.bottleneck_value, s.bottleneck_edge, s.edge_unique) == (63, e(1, 3), True)
    s = solve_bap(EX1)
    assert (s.bottleneck_value, s.bottleneck_edge) == (1, e(2, 2))
    assert bottleneck_edge([[5]]) == e(1, 1)
    assert bottleneck_edge(EX2) == e(1, 3)


def test_assignment_attains_value():
    s = solve_bap(EX2)
    assert max(EX2[x] for x in s.assignment.edges) == 63
    assert s.bottleneck_edge in s.assignment


def test_tie_flagged():
    w = EX1.copy()
    w[1, 1] = INF
    s = solve_bap(w)
    assert s.bottleneck_value == 5 and not s.edge_unique
    assert bottleneck_edges(w) == (e(2, 3), e(3, 2))
    assert s.bottleneck_edge == e(2, 3)
    assert solve_bap(w, prefer=e(3, 2)).bottleneck_edge == e(3, 2)


def test_infeasible():
    with pytest.raises(NoFeasibleAssignment):
        solve_bap([[1, INF], [INF, INF]])
    with pytest.raises(NoFeasibleAssignment):
        solve_bap([[INF]])


def test_needs_tall_array():
    with pytest.raises(ValueError):
        BottleneckSolver(np.ones((2, 3)))


def test_threshold_examples():
    assert feasible_under_threshold(EX2, 63, forced=e(1, 3))
    assert not feasible_under_threshold(EX2, 62.9)
    assert feasible_under_threshold([[5]], 5)
    assert not feasible_under_threshold([[5]], 4.9)
    # forcing an edge heavier than the threshold fails
    assert not feasible_under_threshold(EX2, 63, forced=e(1, 2))


def test_is_bottleneck_edge():
    assert is_bottleneck_edge(EX2, e(1, 3))
    assert not is_bottleneck_edge(EX2, e(1, 1))


def test_removal_example():
    prev = solve_bap(EX1)
    s = resolve_after_removal(EX1, prev, e(2, 2))
    assert s.bottleneck_value == 5 and not s.edge_unique


def test_removal_of_unused_edge_keeps_value():
    prev = solve_bap(EX2)
    s = resolve_after_removal(EX2, prev, e(2, 2))
    assert s.bottleneck_value == prev.bottleneck_value


def test_removal_of_missing_edge():
    solver = BottleneckSolver([[1, INF], [2, 3]])
    solver.solve()
    with pytest.raises(PreconditionViolation):
        solver.remove(Edge(0, 1))


def test_removal_to_infeasible():
    solver = BottleneckSolver([[5.0]])
    solver.solve()
    with pytest.raises(NoFeasibleAssignment):
        solver.remove(Edge(0, 0))


def test_random_5x4_against_brute():
    rng = np.random.default_rng(1)
    for _ in range(50):
        w = rng.permutation(40)[:20].reshape(5, 4).astype(float)
        assert solve_bap(w).bottleneck_value == brute_bap(w)[0]


@given(weight_arrays(max_n=5, distinct=False, missing=True))
def test_matches_brute_force(w):
    s = solve_bap(w)
    value, _ = brute_bap(w)
    assert s.bottleneck_value == value
    assert set(s.candidates) == brute_bottleneck_edges(w)
    assert max(w[x] for x in s.assignment.edges) == value


@given(weight_arrays(max_n=5, distinct=False), st.data())
def test_warm_removal_matches_cold(w, data):
    solver = BottleneckSolver(w)
    cur = w.copy()
    solver.solve()
    for _ in range(data.draw(st.integers(1, 6))):
        edges = list(zip(*np.nonzero(np.isfinite(cur))))
        i, j = data.draw(st.sampled_from(edges))
        cur[i, j] = INF
        try:
            cold = solve_bap(cur)
        except NoFeasibleAssignment:
            with pytest.raises(NoFeasibleAssignment):
                solver.remove(Edge(int(i), int(j)))
            return
        warm = solver.remove(Edge(int(i), int(j)))
        assert warm.bottleneck_value == cold.bottleneck_value
        assert warm.candidates == cold.candidates
        assert warm.bottleneck_edge == cold.bottleneck_edge


def test_negative_infinity_allowed_internally():
    s = solve_bap([[-INF, 3], [2, -INF]])
    assert s.bottleneck_value == -INF
