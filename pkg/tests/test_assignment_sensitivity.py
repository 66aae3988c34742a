import numpy as np
import pytest
from hypothesis import given, strategies as st

from bapsens.assignment_sensitivity import (
    BoundState,
    assignment_sensitivity,
    bound_value,
    constructed_weights,
    is_allowable,
    sensitivity_radius,
)
from bapsens.core import INF, Assignment, Edge
from bapsens.errors import InternalInvariantViolation, NotOptimalAssignment
from bapsens.intervals import corner_perturbation, rho, sample_uniform
from bapsens.lex_assignment import lexicographic_assignment
from bapsens.oracle import (
    brute_is_allowable,
    closed_form_uniform_radius,
    verify_exclusive_coverage,
)
from bapsens.solver import solve_bap
from conftest import weight_arrays
from worked import EX2, LEX2, ASSIGN_INTERVALS, e, tightness_probe


@pytest.mark.parametrize("args, expected", [
    ((63, 89, INF, INF), 13),
    ((60, 89, INF, 13), 16),
    ((63, 89, 13, 13), INF),
    ((63, 89, 14, 13), -INF),
    ((63, 89, 13, INF), 13),
])
def test_bound_value(args, expected):
    assert bound_value(*args) == expected


@given(st.integers(0, 50), st.integers(0, 50),
       st.sampled_from([INF, 0, 3, 10]), st.sampled_from([INF, 0, 3, 10]))
def test_constructed_weights_match_scalar(a, b, up, low):
    w = np.array([[a, b], [b + 1, a + 1]], dtype=float)
    upper = np.full((2, 2), INF)
    lower = np.full((2, 2), INF)
    upper[0, 0] = up
    lower[0, 1] = low
    B = constructed_weights(w, Edge(0, 0), upper, lower)
    assert B[0, 0] == INF
    assert B[0, 1] == bound_value(a, b, up, low)


def test_constructed_weights_keep_missing():
    w = np.array([[1, INF], [2, 3]])
    B = constructed_weights(w, Edge(0, 0), np.full((2, 2), INF), np.full((2, 2), INF))
    assert B[0, 1] == INF


def test_bound_state_monotone():
    s = BoundState.undetermined((2, 2))
    assert s.determine(1, Edge(0, 0), "upper", 3)
    assert not s.determine(2, Edge(0, 0), "upper", 4)
    with pytest.raises(InternalInvariantViolation):
        s.determine(2, Edge(1, 1), "lower", 1)


def test_example_intervals():
    r = assignment_sensitivity(EX2, LEX2)
    assert r.intervals == ASSIGN_INTERVALS
    assert r.iterations == 5
    assert [v for *_, v in r.determined_log] == [13, 13, 15, 16, 17, 50]
    assert r.exclusive_sets[e(1, 3)] == (e(1, 2), e(2, 2), e(2, 3))
    assert all(verify_exclusive_coverage(EX2, x, S) for x, S in r.exclusive_sets.items())


def test_example_tie_handling():
    strict = assignment_sensitivity(EX2, LEX2)
    relaxed = assignment_sensitivity(EX2, LEX2, strict_ties=False)
    assert strict.intervals == relaxed.intervals
    assert not strict.certified and "assumption-2-violated" in strict.warnings
    assert relaxed.certified


def test_radius_example():
    assert sensitivity_radius(EX2, LEX2) == 13
    assert sensitivity_radius([[5.0]]) == INF


def test_single_cell():
    r = assignment_sensitivity([[5.0]])
    assert r.iterations == 0 and (r.intervals.lower == INF).all() and (r.intervals.upper == INF).all()


def test_not_optimal():
    with pytest.raises(NotOptimalAssignment):
        assignment_sensitivity(EX2, Assignment.from_edges([e(1, 1), e(2, 2), e(3, 3)]))


def test_allowability_examples():
    z = np.zeros((3, 3))
    assert is_allowable(EX2, LEX2, z)
    P = z.copy()
    P[e(1, 3)], P[e(2, 2)] = 13, -13
    assert is_allowable(EX2, LEX2, P)
    P[e(1, 3)] = 13.000001
    assert not is_allowable(EX2, LEX2, P)


def test_example_tightness():
    r = assignment_sensitivity(EX2, LEX2)
    assert not is_allowable(EX2, LEX2, tightness_probe(r))


def test_random_4x4_sampling():
    rng = np.random.default_rng(11)
    for _ in range(100):
        w = rng.permutation(32)[:16].reshape(4, 4).astype(float)
        r = assignment_sensitivity(w)
        for _ in range(2):
            assert is_allowable(w, r.assignment, sample_uniform(r.intervals, rng))


def test_random_4x4_radius():
    rng = np.random.default_rng(12)
    for _ in range(30):
        w = rng.permutation(32)[:16].reshape(4, 4).astype(float)
        A = lexicographic_assignment(w).assignment
        assert abs(sensitivity_radius(w, A) - closed_form_uniform_radius(w, A)) <= 1e-9


@given(weight_arrays(max_n=5, missing=True))
def test_incremental_matches_full(w):
    a = assignment_sensitivity(w)
    b = assignment_sensitivity(w, incremental=False)
    assert a.intervals == b.intervals and a.determined_log == b.determined_log
    assert a.certified == b.certified and a.exclusive_sets == b.exclusive_sets


@given(weight_arrays(max_n=5, missing=True))
def test_log_monotone_and_coverage(w):
    r = assignment_sensitivity(w)
    values = [v for *_, v in r.determined_log]
    assert values == sorted(values)
    assert r.tightest_values == tuple(sorted(r.tightest_values))
    for edge, S in r.exclusive_sets.items():
        assert verify_exclusive_coverage(w, edge, S)


@given(weight_arrays(max_n=4, missing=True), st.integers(0, 2**32 - 1))
def test_certified_reports_allowable_and_tight(w, seed):
    A = lexicographic_assignment(w).assignment
    r = assignment_sensitivity(w, A)
    if not r.certified:
        return
    rng = np.random.default_rng(seed)
    L = r.intervals
    trials = [sample_uniform(L, rng) for _ in range(10)]
    trials += [corner_perturbation(L, x, mirror=m) for x in np.ndindex(w.shape) for m in (0, 1)]
    for P in trials:
        assert brute_is_allowable(w, A, P)
    if r.determined_log:
        assert not brute_is_allowable(w, A, tightness_probe(r))
    assert rho(L, 1) == closed_form_uniform_radius(w, A)


@given(weight_arrays(max_n=5, distinct=False, missing=True))
def test_ties_never_break_invariants(w):
    r = assignment_sensitivity(w, solve_bap(w).assignment, strict_ties=False)
    values = [v for *_, v in r.determined_log]
    assert values == sorted(values)
    assert is_allowable(w, r.assignment, np.zeros(w.shape))
